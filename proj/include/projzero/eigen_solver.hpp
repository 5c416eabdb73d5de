#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "projzero/triplet.hpp"

namespace projzero {

/// Scales v so its first nonzero entry is 1. Throws std::invalid_argument on
/// the zero vector.
Vector normalized(const Vector& v);

struct JointEigenvector {
  Vector v;        ///< first nonzero entry 1
  Vector lambdas;  ///< eigenvalue of each matrix on v
};

struct JointEigenspaces {
  std::vector<JointEigenvector> vectors;
  /// Joint eigenspaces of dimension > 1, as bases, with their eigenvalues.
  std::vector<std::pair<std::vector<Vector>, Vector>> blocks;
  /// Some matrix had eigenvalues outside the field.
  bool residual = false;
  /// m minus the dimensions of all joint eigenspaces found.
  std::size_t uncovered = 0;
};

/// Recursive joint eigenspace search over A_0, A_1, ... in order. Never
/// assumes the matrices commute: each level intersects the current subspace
/// with an eigenspace of the full matrix.
JointEigenspaces common_eigenvectors(const std::vector<Matrix>& A);

struct EigenPoint {
  Vector v;
  Vector lambdas;
  Vector point;  ///< (lambda_0 : ... : lambda_n), normalized
};

std::vector<EigenPoint> candidate_points(const std::vector<Matrix>& A);
std::vector<EigenPoint> candidate_points(const Triplet& t);

struct FilteredPoints {
  std::vector<EigenPoint> kept;
  std::vector<EigenPoint> rejected;
};

/// Keeps the points at which every generator vanishes.
FilteredPoints filter_points(const std::vector<EigenPoint>& candidates, const IdealPresentation& I);

struct MultiplicityResult {
  std::vector<std::size_t> multiplicities;
  std::size_t residual_degree = 0;  ///< char-poly degree not splitting over the field
  std::size_t draws = 0;
};

/// Algebraic multiplicity of sum_j c_j lambda_j(p) in char_poly(sum_j c_j A_j)
/// for random c_j (1..97 over Q, nonzero residues over GF(p)), checked on a
/// second draw and settled by a third. Throws GenericityFailure.
MultiplicityResult multiplicities(const std::vector<Vector>& points, const Triplet& t, std::uint64_t seed);
std::size_t multiplicity(const Vector& point, const Triplet& t, std::uint64_t seed);

struct SolveOptions {
  std::uint64_t seed = 1;
  std::optional<unsigned> max_degree;
  std::size_t max_trials = 64;
  SurjectionStrategy::Kind search = SurjectionStrategy::Kind::random;
  std::optional<Form> linear;
};

struct SolvedPoint {
  Vector point;
  std::size_t multiplicity = 0;
};

struct TripletSummary {
  unsigned degree = 0;
  std::size_t m = 0;
  Form l;
  bool surjective_certified = false;
};

struct SolutionReport {
  HilbertScan scan;
  bool artinian = false;
  std::vector<SolvedPoint> points;
  std::vector<Vector> rejected;
  std::optional<TripletSummary> triplet;    ///< first surjective degree
  std::optional<TripletSummary> certified;  ///< at or above the Gotzmann degree
  std::size_t residual_degree = 0;
  std::size_t blocks = 0;  ///< joint eigenspaces of dimension > 1
};

SolutionReport solve(const IdealPresentation& I, const SolveOptions& options = {});

}  // namespace projzero
