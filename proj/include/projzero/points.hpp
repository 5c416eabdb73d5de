#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "projzero/triplet.hpp"

namespace projzero {

/// Distinct projective points with fixed representatives: the first nonzero
/// coordinate of each is 1.
struct ProjPointSet {
  Field field;
  std::size_t nvars = 0;  ///< n + 1
  std::vector<Vector> reps;
  std::vector<std::size_t> first_one;

  std::size_t size() const noexcept { return reps.size(); }
};

/// Throws ZeroPoint or DuplicatePoint.
ProjPointSet normalize(const std::vector<Vector>& raw, const Field& field);

struct VariableProjection {
  std::vector<std::size_t> kept;
  /// (dropped variable, coefficients on `kept`) with x_i = sum alpha_k x_{kept[k]} on P.
  std::vector<std::pair<std::size_t, Vector>> substitutions;
};

/// Greedy maximal independent set of coordinate rows of the evaluation matrix.
VariableProjection project_variables(const ProjPointSet& P);

/// Linear form nonvanishing on every point, by the incremental sweep. Over a
/// finite field a failed sweep falls back to all normalized linear forms
/// before throwing FieldTooSmall.
Form nzd_sweep(const ProjPointSet& P);

struct PointTriplet {
  std::vector<std::vector<Monomial>> B;  ///< B_0 .. B_d
  std::vector<Monomial> initials;
  /// Vanishing form t - sum c_b b for each initial t.
  std::vector<Form> vanishing;
  VariableProjection projection;
  std::vector<std::size_t> hf;
  Triplet triplet;  ///< E = B_d, matrices computed by evaluation
};

/// Buchberger-Moller style construction of (R~, A, l) from the points.
/// `ring` supplies variable names and the order; `l` overrides the sweep.
PointTriplet bm_triplet(const ProjPointSet& P, const Ring& ring, const std::optional<Form>& l = std::nullopt);

/// Generators of the vanishing ideal: the vanishing form of every initial
/// up to one degree past the stopping degree.
std::vector<Form> vanishing_ideal(const ProjPointSet& P, const Ring& ring);

/// Matrix with rows f(P) for each form.
Matrix evaluations(const std::vector<Form>& forms, const ProjPointSet& P);

/// Coefficients alpha with f(p) = sum alpha_j e_j(p) on P. Throws RankDeficientBasis.
Vector eval_normal_form(const Form& f, const ProjPointSet& P, const std::vector<Form>& basis);

/// Fast normal form base coordinates for a point triplet, by evaluation.
BaseCoordinates evaluation_base(const Triplet& t, const ProjPointSet& P);

struct CMatrix {
  std::vector<std::vector<std::size_t>> c;  ///< c[i][j]: first differing coordinate
  std::size_t comparisons = 0;              ///< scalar equality tests
  /// Partition after each coordinate, groups of point indices.
  std::vector<std::vector<std::vector<std::size_t>>> partitions;
};

/// Accepts any distinct vectors, normalized or not.
CMatrix c_matrix(const std::vector<Vector>& points);
CMatrix c_matrix(const ProjPointSet& P);

/// Q_i = prod_{j != i} S_ij, degree m - 1, with Q_i(p_j) = 0 exactly when
/// i != j. `unit` divides each Q_i by Q_i(p_i).
std::vector<Form> separators(const ProjPointSet& P, bool unit = false);

}  // namespace projzero
