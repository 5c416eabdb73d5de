#include "projzero/matrix.hpp"

#include <sstream>
#include <stdexcept>

#include "projzero/kernels.hpp"

namespace projzero {

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, field.zero()) {}

Matrix Matrix::from_rows(Field field, const std::vector<Vector>& rows) {
  std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Matrix m(field, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw std::invalid_argument("ragged rows");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Matrix Matrix::from_ints(Field field, const std::vector<std::vector<long long>>& rows) {
  std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Matrix m(field, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw std::invalid_argument("ragged rows");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = field.from_int(rows[i][j]);
  }
  return m;
}

Matrix Matrix::identity(Field field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
  return m;
}

Vector Matrix::column_vector(std::size_t j) const {
  Vector v;
  v.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v.push_back((*this)(i, j));
  return v;
}

void Matrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix sum dimension mismatch");
  Matrix r = *this;
  for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] += o.data_[k];
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix difference dimension mismatch");
  Matrix r = *this;
  for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] -= o.data_[k];
  return r;
}

Matrix Matrix::operator*(const Matrix& o) const { return kernels::multiply(*this, o); }

Matrix Matrix::scaled(const Scalar& c) const {
  Matrix r = *this;
  for (auto& x : r.data_) x *= c;
  return r;
}

Vector Matrix::left_multiply(const Vector& v) const {
  if (v.size() != rows_) throw std::invalid_argument("row vector length mismatch");
  Vector out = zero_vector(field_, cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    if (v[i].is_zero()) continue;
    for (std::size_t j = 0; j < cols_; ++j) out[j] += v[i] * (*this)(i, j);
  }
  return out;
}

Vector Matrix::apply(const Vector& v) const {
  if (v.size() != cols_) throw std::invalid_argument("column vector length mismatch");
  Vector out = zero_vector(field_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (!v[j].is_zero()) out[i] += (*this)(i, j) * v[j];
  return out;
}

Matrix Matrix::pow(std::uint64_t exponent) const {
  if (!square()) throw std::invalid_argument("power of a non-square matrix");
  Matrix result = identity(field_, rows_);
  Matrix base = *this;
  while (exponent != 0) {
    if (exponent & 1) result = result * base;
    exponent >>= 1;
    if (exponent != 0) base = base * base;
  }
  return result;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_; ++i) {
    os << '[';
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << (*this)(i, j).to_string();
    os << "]\n";
  }
  return os.str();
}

Vector zero_vector(const Field& field, std::size_t n) { return Vector(n, field.zero()); }

bool is_zero(std::span<const Scalar> v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

}  // namespace projzero
