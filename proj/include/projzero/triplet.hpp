#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "projzero/graded_quotient.hpp"

namespace projzero {

/// The triplet (R~, A, l): bases E of R_d and F = l E of R_{d+1}, and the
/// matrices A_j of multiplication by x_j from E to F.
struct Triplet {
  Ring ring;
  unsigned degree = 0;
  /// Degree at which fast normal forms start: d when E spans R_d, else d + 1.
  unsigned base_degree = 0;
  std::vector<Monomial> E;
  Form l;
  std::vector<Form> F;  ///< normal forms of l * e_i
  std::vector<Matrix> A;
  std::vector<std::size_t> hf_prefix;
  /// hf(d) = hf(d + 1) and the l-map has full rank.
  bool surjective_certified = false;
  /// Gotzmann degree when the triplet was built above it.
  std::optional<unsigned> stabilization_degree;
  /// Monomial basis used for F coordinates (standard monomials of R_{d+1}).
  std::vector<Monomial> image_basis;
  /// Inverse of the matrix whose rows are the coordinates of F on image_basis.
  Matrix image_inverse;

  std::size_t size() const noexcept { return E.size(); }
};

/// Rank of e -> nf(l e) from the standard monomials of `lower` into `upper`.
Matrix l_map(const Form& l, const DegreePiece& lower, const DegreePiece& upper);
bool is_surjective(const Form& l, const DegreePiece& lower, const DegreePiece& upper);

struct SurjectionStrategy {
  enum class Kind { random, exhaustive } kind = Kind::random;
  std::uint64_t seed = 1;
  std::size_t max_trials = 64;
};

/// Linear form l with [l] R_d = R_{d+1}. Random draws use coefficients in
/// -3..3 over Q and all residues over GF(p); the exhaustive strategy walks the
/// normalized linear forms of a prime field. Throws NoSurjectionFound.
Form find_surjective_linear(const Ring& ring, const DegreePiece& lower, const DegreePiece& upper,
                            const SurjectionStrategy& strategy);

/// Every normalized (first nonzero coefficient 1) linear form over GF(p), in
/// a fixed order.
std::vector<Vector> normalized_linear_forms(const Field& field, std::size_t nvars);

enum class DegreePolicy { first_surjective, certified_stable };

struct TripletOptions {
  DegreePolicy policy = DegreePolicy::first_surjective;
  SurjectionStrategy strategy;
  std::optional<unsigned> max_degree;
  /// Use this linear form instead of searching.
  std::optional<Form> linear;
  /// Start the degree scan here (certified policy still waits for d*).
  unsigned min_degree = 0;
};

/// Builds the triplet together with the degree pieces d and d + 1 used.
struct BuiltTriplet {
  Triplet triplet;
  DegreePiece lower;
  DegreePiece upper;
  std::optional<HilbertScan> scan;
};

BuiltTriplet build_triplet(const IdealPresentation& I, const TripletOptions& options = {});

/// Matrices of multiplication by each x_j from the forms `E` (degree d), in
/// the basis nf(l e_k) of the piece `upper` (degree d + 1). Throws
/// RankDeficientBasis if those normal forms are dependent.
std::vector<Matrix> multiplication_matrices(const std::vector<Form>& E, const Form& l, const DegreePiece& upper);

/// Splits m = a * b with deg b = base_degree, taking b's exponents greedily
/// from the least significant variable of the order.
std::pair<Monomial, Monomial> split_monomial(const Monomial& m, unsigned base_degree, const MonomialOrder& order);

enum class PowerSchedule { binary, linear };

/// Coordinates of a monomial b of degree base_degree: in E when base_degree
/// = d, in F when base_degree = d + 1.
using BaseCoordinates = std::function<Vector(const Monomial&)>;

/// Base coordinates from Macaulay normal forms in degree pieces `lower`
/// and `upper` of the triplet.
BaseCoordinates macaulay_base(const Triplet& t, const DegreePiece& lower, const DegreePiece& upper);

struct FastNormalForm {
  unsigned degree = 0;
  unsigned power = 0;  ///< k with result in the basis l^k e_i
  Vector coordinates;
};

/// nf(f) as coordinates in {l^{deg f - d} e_i}. Throws DegreeTooLow.
FastNormalForm fast_normal_form(const Form& f, const Triplet& t, const BaseCoordinates& base,
                                PowerSchedule schedule = PowerSchedule::binary);

/// Expands sum_i c_i l^k e_i as a form.
Form expand(const FastNormalForm& nf, const Triplet& t);

}  // namespace projzero
