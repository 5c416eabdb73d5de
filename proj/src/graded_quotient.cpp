#include "projzero/graded_quotient.hpp"

#include <algorithm>
#include <stdexcept>

#include "projzero/errors.hpp"

namespace projzero {

IdealPresentation::IdealPresentation(Ring r, std::vector<Form> gens) : ring(std::move(r)), generators(std::move(gens)) {
  if (generators.empty()) throw Error(ExitCode::input_error, "ideal has no generators");
  for (const auto& g : generators) {
    if (!(g.field() == ring.field) || g.nvars() != ring.nvars())
      throw Error(ExitCode::input_error, "generator does not belong to the declared ring");
  }
}

unsigned IdealPresentation::max_degree() const {
  unsigned t = 0;
  for (const auto& g : generators) t = std::max(t, g.degree());
  return t;
}

unsigned IdealPresentation::total_degree() const {
  unsigned s = 0;
  for (const auto& g : generators) s += g.degree();
  return s;
}

std::size_t DegreePiece::column_of(const Monomial& m) const {
  auto it = index.find(m);
  if (it == index.end()) throw std::invalid_argument("monomial of the wrong degree");
  return it->second;
}

Vector DegreePiece::standard_coordinates(const Form& f) const {
  if (f.degree() != d && !f.is_zero()) throw std::invalid_argument("form degree does not match the piece");
  Vector v = zero_vector(f.field(), monomials.size());
  for (const auto& [m, c] : f.terms()) v[column_of(m)] = c;
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    Scalar c = v[pivots[r]];
    if (c.is_zero()) continue;
    auto row = echelon.row(r);
    for (std::size_t j = pivots[r]; j < v.size(); ++j)
      if (!row[j].is_zero()) v[j] -= c * row[j];
  }
  Vector out;
  out.reserve(standard_monomials.size());
  for (const auto& s : standard_monomials) out.push_back(v[column_of(s)]);
  return out;
}

Form DegreePiece::from_standard(const Vector& coords, const Field& field) const {
  Form f(field, monomials.empty() ? 0 : monomials.front().nvars(), d);
  for (std::size_t i = 0; i < standard_monomials.size(); ++i) f.add_term(standard_monomials[i], coords.at(i));
  return f;
}

Matrix macaulay_matrix(const IdealPresentation& I, unsigned d, const std::vector<Monomial>& monomials) {
  const std::size_t n = I.ring.nvars();
  std::map<Monomial, std::size_t> col;
  for (std::size_t j = 0; j < monomials.size(); ++j) col.emplace(monomials[j], j);
  std::vector<Vector> rows;
  for (const auto& g : I.generators) {
    if (g.degree() > d || g.is_zero()) continue;
    for (const auto& u : monomials_of_degree(n, d - g.degree(), I.ring.order)) {
      Vector row = zero_vector(I.ring.field, monomials.size());
      for (const auto& [m, c] : g.terms()) row[col.at(u * m)] = c;
      rows.push_back(std::move(row));
    }
  }
  Matrix M(I.ring.field, rows.size(), monomials.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < monomials.size(); ++j) M(i, j) = std::move(rows[i][j]);
  return M;
}

DegreePiece ideal_piece(const IdealPresentation& I, unsigned d) {
  DegreePiece p;
  p.d = d;
  p.monomials = monomials_of_degree(I.ring.nvars(), d, I.ring.order);
  for (std::size_t j = 0; j < p.monomials.size(); ++j) p.index.emplace(p.monomials[j], j);
  Echelon e = rref(macaulay_matrix(I, d, p.monomials));
  p.pivots = e.pivots;
  p.echelon = Matrix(I.ring.field, e.rank, p.monomials.size());
  for (std::size_t i = 0; i < e.rank; ++i)
    for (std::size_t j = 0; j < p.monomials.size(); ++j) p.echelon(i, j) = e.reduced(i, j);
  std::vector<bool> lead(p.monomials.size(), false);
  for (std::size_t c : p.pivots) lead[c] = true;
  for (std::size_t j = 0; j < p.monomials.size(); ++j)
    (lead[j] ? p.lead_monomials : p.standard_monomials).push_back(p.monomials[j]);
  p.hf = p.standard_monomials.size();
  return p;
}

Form normal_form_by_degree(const Form& f, const DegreePiece& piece) {
  if (f.is_zero()) return Form(f.field(), f.nvars(), piece.d);
  return piece.from_standard(piece.standard_coordinates(f), f.field());
}

unsigned default_max_degree(const IdealPresentation& I) {
  return std::max<unsigned>(I.max_degree(), 4 * (static_cast<unsigned>(I.ring.nvars()) + I.total_degree()));
}

HilbertScan hilbert_scan(const IdealPresentation& I, unsigned max_degree, std::vector<DegreePiece>* pieces) {
  HilbertScan scan;
  scan.t = I.max_degree();
  if (max_degree < scan.t)
    throw Error(ExitCode::input_error, "degree cap " + std::to_string(max_degree) + " is below the generator degree " +
                                           std::to_string(scan.t));
  for (unsigned d = 0; d <= max_degree + 1; ++d) {
    DegreePiece piece = ideal_piece(I, d);
    scan.hf.push_back(piece.hf);
    if (pieces) pieces->push_back(std::move(piece));
    if (scan.hf.back() == 0) {
      scan.artinian = true;
      scan.stabilization_degree = d;
      scan.m = 0;
      scan.gotzmann_certified = true;
      scan.postulation = d;
      return scan;
    }
    if (d == 0) continue;
    unsigned prev = d - 1;
    std::size_t h = scan.hf[prev], next = scan.hf[d];
    if (prev >= std::max(scan.t, 1u) && next == h && macaulay_growth(h, prev) == next) {
      scan.stabilization_degree = prev;
      scan.m = h;
      scan.gotzmann_certified = true;
      unsigned post = d;
      while (post > 0 && scan.hf[post - 1] == h) --post;
      scan.postulation = post;
      return scan;
    }
  }
  throw CapExceeded(static_cast<int>(max_degree), scan.hf);
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> binomial_expansion(std::uint64_t h, std::uint64_t i) {
  if (i == 0) throw std::invalid_argument("binomial expansion base must be positive");
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  for (std::uint64_t k = i; h > 0 && k >= 1; --k) {
    std::uint64_t n = k;
    while (binomial(n + 1, k) <= h) ++n;
    out.emplace_back(n, k);
    h -= binomial(n, k);
  }
  return out;
}

std::uint64_t macaulay_growth(std::uint64_t h, std::uint64_t i) {
  if (h == 0) return 0;
  std::uint64_t s = 0;
  for (auto [n, k] : binomial_expansion(h, i)) s += binomial(n + 1, k + 1);
  return s;
}

unsigned gb_degree_bound(const HilbertScan& scan, unsigned operational_nz) {
  if (!scan.gotzmann_certified || !scan.m) throw std::invalid_argument("gb_degree_bound needs a certified scan");
  return std::max<unsigned>(operational_nz, static_cast<unsigned>(*scan.m));
}

std::vector<Monomial> initial_ideal_min_generators(const IdealPresentation& I, unsigned up_to) {
  std::vector<Monomial> gens;
  for (unsigned d = 1; d <= up_to; ++d) {
    DegreePiece p = ideal_piece(I, d);
    std::vector<Monomial> fresh;
    for (const auto& lm : p.lead_monomials) {
      bool covered = std::any_of(gens.begin(), gens.end(), [&](const Monomial& g) { return g.divides(lm); });
      if (!covered) fresh.push_back(lm);
    }
    gens.insert(gens.end(), fresh.begin(), fresh.end());
  }
  return gens;
}

DegreeBoundReport degree_bound_report(const IdealPresentation& I, unsigned max_degree) {
  DegreeBoundReport r;
  r.scan = hilbert_scan(I, max_degree);
  if (r.scan.artinian) throw Error(ExitCode::input_error, "artinian quotient: the bound needs projective dimension zero");
  r.bound = gb_degree_bound(r.scan, *r.scan.stabilization_degree);
  r.horizon = 2 * std::max(r.bound, r.scan.t) + 1;
  r.generators = initial_ideal_min_generators(I, r.horizon);
  for (const auto& g : r.generators) r.measured = std::max(r.measured, g.degree());
  return r;
}

}  // namespace projzero
