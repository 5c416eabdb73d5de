#include "projzero/kernels.hpp"

#include <stdexcept>
#include <utility>

namespace projzero {

namespace {

void eliminate_row(Matrix& m, std::size_t target, std::size_t pivot_row, std::size_t col) {
  Scalar factor = m(target, col);
  if (factor.is_zero()) return;
  auto dst = m.row(target);
  auto src = std::as_const(m).row(pivot_row);
  for (std::size_t j = col; j < m.cols(); ++j)
    if (!src[j].is_zero()) dst[j] -= factor * src[j];
}

void check_product(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product dimension mismatch");
  if (!(a.field() == b.field())) throw std::invalid_argument("matrix product across fields");
}

Scalar dot_row_col(const Matrix& a, const Matrix& b, std::size_t i, std::size_t j) {
  Scalar s = a.field().zero();
  for (std::size_t k = 0; k < a.cols(); ++k) {
    const Scalar& x = a(i, k);
    if (!x.is_zero()) s += x * b(k, j);
  }
  return s;
}

}  // namespace

namespace kernels {

void eliminate_column(Matrix& m, std::size_t pivot_row, std::size_t col) {
  const auto rows = static_cast<long>(m.rows());
  const bool wide = m.rows() * (m.cols() - col) >= parallel_threshold;
#pragma omp parallel for schedule(static) if (wide)
  for (long i = 0; i < rows; ++i)
    if (static_cast<std::size_t>(i) != pivot_row) eliminate_row(m, static_cast<std::size_t>(i), pivot_row, col);
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  check_product(a, b);
  Matrix c(a.field(), a.rows(), b.cols());
  const auto rows = static_cast<long>(a.rows());
  const bool wide = a.rows() * a.cols() * b.cols() >= parallel_threshold;
#pragma omp parallel for schedule(static) if (wide)
  for (long i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) c(static_cast<std::size_t>(i), j) = dot_row_col(a, b, static_cast<std::size_t>(i), j);
  return c;
}

Matrix tabulate(const Field& field, std::size_t rows, std::size_t cols,
                const std::function<Scalar(std::size_t, std::size_t)>& entry) {
  Matrix m(field, rows, cols);
  const auto n = static_cast<long>(rows);
  const bool wide = rows * cols >= parallel_threshold / 8;
#pragma omp parallel for schedule(static) if (wide)
  for (long i = 0; i < n; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(static_cast<std::size_t>(i), j) = entry(static_cast<std::size_t>(i), j);
  return m;
}

}  // namespace kernels

namespace reference {

void eliminate_column(Matrix& m, std::size_t pivot_row, std::size_t col) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    if (i != pivot_row) eliminate_row(m, i, pivot_row, col);
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  check_product(a, b);
  Matrix c(a.field(), a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) = dot_row_col(a, b, i, j);
  return c;
}

Matrix tabulate(const Field& field, std::size_t rows, std::size_t cols,
                const std::function<Scalar(std::size_t, std::size_t)>& entry) {
  Matrix m(field, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = entry(i, j);
  return m;
}

}  // namespace reference

}  // namespace projzero
