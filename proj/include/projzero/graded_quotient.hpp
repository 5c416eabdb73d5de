#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "projzero/linalg.hpp"
#include "projzero/polynomial.hpp"

namespace projzero {

/// Homogeneous ideal given by generators over a ring.
struct IdealPresentation {
  Ring ring;
  std::vector<Form> generators;

  IdealPresentation() = default;
  /// Throws projzero::Error (input) on an empty generator list or a
  /// generator over another field or variable count.
  IdealPresentation(Ring ring, std::vector<Form> generators);

  /// Largest generator degree t.
  unsigned max_degree() const;
  unsigned total_degree() const;
};

/// I_d as an echelonized Macaulay matrix together with the standard monomials.
struct DegreePiece {
  unsigned d = 0;
  std::vector<Monomial> monomials;           ///< all of S_d, descending
  Matrix echelon;                            ///< nonzero rref rows only
  std::vector<std::size_t> pivots;           ///< pivot column per echelon row
  std::vector<Monomial> lead_monomials;      ///< descending
  std::vector<Monomial> standard_monomials;  ///< descending; basis of R_d
  std::size_t hf = 0;
  std::map<Monomial, std::size_t> index;     ///< monomial -> column

  std::size_t column_of(const Monomial& m) const;
  /// Coefficients of nf(f) on standard_monomials.
  Vector standard_coordinates(const Form& f) const;
  Form from_standard(const Vector& coords, const Field& field) const;
};

/// Rows are (monomial of degree d - deg g) * g over all generators with
/// deg g <= d, columns the degree-d monomials in descending order.
Matrix macaulay_matrix(const IdealPresentation& I, unsigned d, const std::vector<Monomial>& monomials);

DegreePiece ideal_piece(const IdealPresentation& I, unsigned d);

/// The representative of [f] supported on the standard monomials.
Form normal_form_by_degree(const Form& f, const DegreePiece& piece);

struct HilbertScan {
  std::vector<std::size_t> hf;  ///< hf(0), hf(1), ... as far as computed
  unsigned t = 0;
  std::optional<unsigned> stabilization_degree;
  std::optional<std::size_t> m;
  bool gotzmann_certified = false;
  bool artinian = false;
  /// Least i with hf constant from i through the certified horizon.
  std::optional<unsigned> postulation;
};

/// max(t, 4 * (number of variables + sum of generator degrees)).
unsigned default_max_degree(const IdealPresentation& I);

/// Scans hf(0), hf(1), ... until the least d >= t with
/// hf(d + 1) = hf(d) = macaulay_growth(hf(d), d), or until hf reaches 0.
/// Throws CapExceeded when no such d <= max_degree exists. When `pieces` is
/// given it receives every computed degree piece.
HilbertScan hilbert_scan(const IdealPresentation& I, unsigned max_degree, std::vector<DegreePiece>* pieces = nullptr);

/// Greedy expansion h = C(n_i, i) + C(n_{i-1}, i-1) + ... ; pairs are (n_k, k).
std::vector<std::pair<std::uint64_t, std::uint64_t>> binomial_expansion(std::uint64_t h, std::uint64_t i);
/// h^{<i>}; 0^{<i>} = 0.
std::uint64_t macaulay_growth(std::uint64_t h, std::uint64_t i);

/// max(operational_nz, m). Requires a certified scan.
unsigned gb_degree_bound(const HilbertScan& scan, unsigned operational_nz);

/// Minimal generators of the initial ideal in degrees 1..up_to.
std::vector<Monomial> initial_ideal_min_generators(const IdealPresentation& I, unsigned up_to);

struct DegreeBoundReport {
  HilbertScan scan;
  unsigned bound = 0;     ///< max(d*, m)
  unsigned measured = 0;  ///< largest degree among the initial generators found
  unsigned horizon = 0;   ///< generators searched through this degree
  std::vector<Monomial> generators;
};

/// Bound on the degrees of a Groebner basis against the generators of the
/// initial ideal through degree 2 * max(bound, t) + 1. Throws projzero::Error
/// (input) for artinian quotients and CapExceeded past max_degree.
DegreeBoundReport degree_bound_report(const IdealPresentation& I, unsigned max_degree);

}  // namespace projzero
