#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "projzero/field.hpp"

namespace projzero {

using Vector = std::vector<Scalar>;

/// Dense row-major matrix over one field. Maps are stored with image
/// coordinates as rows: row i of the matrix of phi holds phi(e_i).
class Matrix {
 public:
  Matrix() = default;
  Matrix(Field field, std::size_t rows, std::size_t cols);
  /// Rows must be non-empty and of equal length.
  static Matrix from_rows(Field field, const std::vector<Vector>& rows);
  static Matrix from_ints(Field field, const std::vector<std::vector<long long>>& rows);
  static Matrix identity(Field field, std::size_t n);

  const Field& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<Scalar> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const Scalar> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  Vector row_vector(std::size_t i) const { return {row(i).begin(), row(i).end()}; }
  Vector column_vector(std::size_t j) const;

  void swap_rows(std::size_t a, std::size_t b);
  bool is_zero() const;

  Matrix transpose() const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator*(const Matrix& o) const;
  Matrix scaled(const Scalar& c) const;
  /// Row vector times matrix.
  Vector left_multiply(const Vector& v) const;
  /// Matrix times column vector.
  Vector apply(const Vector& v) const;
  /// Binary exponentiation; square matrices only.
  Matrix pow(std::uint64_t exponent) const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::string to_string() const;

 private:
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

Vector zero_vector(const Field& field, std::size_t n);
bool is_zero(std::span<const Scalar> v);

}  // namespace projzero
