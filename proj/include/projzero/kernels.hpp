#pragma once

// Data-parallel inner loops of the exact linear algebra. Every kernel has a
// serial counterpart in projzero::reference that the tests compare against and
// the benchmark measures.

#include <cstddef>
#include <functional>

#include "projzero/matrix.hpp"

namespace projzero {

namespace kernels {

/// Below this many scalar updates a kernel runs on the calling thread.
inline constexpr std::size_t parallel_threshold = 4096;

/// Clears column `col` in every row except `pivot_row` by subtracting
/// multiples of `pivot_row`. The pivot row must have a 1 at `col` and zeros
/// to its left.
void eliminate_column(Matrix& m, std::size_t pivot_row, std::size_t col);

Matrix multiply(const Matrix& a, const Matrix& b);

/// Fills an rows x cols matrix entry by entry from `entry(i, j)`.
Matrix tabulate(const Field& field, std::size_t rows, std::size_t cols,
                const std::function<Scalar(std::size_t, std::size_t)>& entry);

}  // namespace kernels

namespace reference {

void eliminate_column(Matrix& m, std::size_t pivot_row, std::size_t col);
Matrix multiply(const Matrix& a, const Matrix& b);
Matrix tabulate(const Field& field, std::size_t rows, std::size_t cols,
                const std::function<Scalar(std::size_t, std::size_t)>& entry);

}  // namespace reference

}  // namespace projzero
