#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "projzero/matrix.hpp"

namespace projzero {

struct Echelon {
  Matrix reduced;                   ///< reduced row echelon form, zero rows last
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;  ///< pivot column of row i, for i < rank
};

/// Gauss-Jordan elimination: leftmost pivot column, topmost candidate row.
Echelon rref(const Matrix& m);
std::size_t rank(const Matrix& m);

/// Basis of { v : m * v = 0 }, one vector per free column (free entry = 1).
std::vector<Vector> kernel(const Matrix& m);

/// Solves c * rows = v. Rows are taken greedily in order as a row basis;
/// coefficients of rows dependent on earlier ones are 0. nullopt if v is not
/// in the row space.
std::optional<Vector> solve_in_rowspace(const Vector& v, const Matrix& rows);

/// Throws std::domain_error if singular.
Matrix inverse(const Matrix& m);

// Univariate polynomials are coefficient vectors, lowest degree first.
using Polynomial1 = std::vector<Scalar>;

/// det(tI - m), monic of degree m.rows(). Hessenberg reduction, valid over
/// every field.
Polynomial1 char_poly(const Matrix& m);

Scalar evaluate(const Polynomial1& poly, const Scalar& t);
/// Returns (quotient, remainder) of poly / (t - root).
std::pair<Polynomial1, Scalar> synthetic_division(const Polynomial1& poly, const Scalar& root);
/// Number of times (t - root) divides poly.
std::size_t root_multiplicity(const Polynomial1& poly, const Scalar& root);
void trim(Polynomial1& poly);

struct RootReport {
  std::vector<std::pair<Scalar, std::size_t>> roots;  ///< sorted ascending
  std::size_t residual_degree = 0;                    ///< degree left after removing in-field roots
  bool incomplete_factorization() const noexcept { return residual_degree > 0; }
};

/// All roots lying in `field`, with multiplicities. Over Q via the rational
/// root test on the primitive integer polynomial; over GF(p) by testing
/// every element.
RootReport roots_in_field(const Polynomial1& poly, const Field& field);

/// Basis of ker(m - lambda I).
std::vector<Vector> eigenspace(const Matrix& m, const Scalar& lambda);

namespace reference {
Echelon rref(const Matrix& m);
}

}  // namespace projzero
