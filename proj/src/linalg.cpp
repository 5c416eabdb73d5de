#include "projzero/linalg.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "projzero/kernels.hpp"

namespace projzero {

namespace {

template <typename Eliminate>
Echelon gauss_jordan(const Matrix& m, Eliminate eliminate) {
  Echelon e{m, 0, {}};
  Matrix& r = e.reduced;
  for (std::size_t col = 0; col < r.cols() && e.rank < r.rows(); ++col) {
    std::size_t pivot = e.rank;
    while (pivot < r.rows() && r(pivot, col).is_zero()) ++pivot;
    if (pivot == r.rows()) continue;
    r.swap_rows(pivot, e.rank);
    Scalar inv = r(e.rank, col).inverse();
    auto prow = r.row(e.rank);
    for (std::size_t j = col; j < r.cols(); ++j) prow[j] *= inv;
    eliminate(r, e.rank, col);
    e.pivots.push_back(col);
    ++e.rank;
  }
  return e;
}

// ---------- univariate helpers over GF(p) for large p ----------

Polynomial1 poly_mod(Polynomial1 a, const Polynomial1& b) {
  trim(a);
  const Scalar lead_inv = b.back().inverse();
  while (a.size() >= b.size() && !a.empty()) {
    Scalar factor = a.back() * lead_inv;
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= factor * b[i];
    trim(a);
  }
  return a;
}

Polynomial1 poly_mul_mod(const Polynomial1& a, const Polynomial1& b, const Polynomial1& mod, const Field& f) {
  if (a.empty() || b.empty()) return {};
  Polynomial1 c(a.size() + b.size() - 1, f.zero());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return poly_mod(std::move(c), mod);
}

Polynomial1 poly_gcd(Polynomial1 a, Polynomial1 b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Polynomial1 r = poly_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    Scalar inv = a.back().inverse();
    for (auto& c : a) c *= inv;
  }
  return a;
}

Polynomial1 poly_powmod(Polynomial1 base, std::uint64_t e, const Polynomial1& mod, const Field& f) {
  Polynomial1 result{f.one()};
  base = poly_mod(std::move(base), mod);
  while (e != 0) {
    if (e & 1) result = poly_mul_mod(result, base, mod, f);
    e >>= 1;
    if (e != 0) base = poly_mul_mod(base, base, mod, f);
  }
  return result;
}

// Distinct roots of a squarefree product of linear factors `g` (monic).
void split_linear(const Polynomial1& g, const Field& f, std::mt19937_64& rng, std::vector<Scalar>& out) {
  if (g.size() <= 1) return;
  if (g.size() == 2) {
    out.push_back(-g[0] / g[1]);
    return;
  }
  const std::uint64_t p = f.characteristic();
  while (true) {
    Polynomial1 shifted{f.from_int(static_cast<long long>(rng() % p)), f.one()};
    Polynomial1 h = poly_powmod(shifted, (p - 1) / 2, g, f);
    if (h.empty()) h = {f.zero()};
    h[0] -= f.one();
    Polynomial1 d = poly_gcd(g, h);
    if (d.size() > 1 && d.size() < g.size()) {
      split_linear(d, f, rng, out);
      // q = g / d by long division; d is monic.
      Polynomial1 q(g.size() - d.size() + 1, f.zero());
      Polynomial1 rem = g;
      for (std::size_t k = q.size(); k-- > 0;) {
        q[k] = rem[k + d.size() - 1];
        for (std::size_t i = 0; i < d.size(); ++i) rem[k + i] -= q[k] * d[i];
      }
      split_linear(q, f, rng, out);
      return;
    }
  }
}

std::vector<Scalar> distinct_roots_large_prime(const Polynomial1& poly, const Field& f) {
  Polynomial1 monic = poly;
  Scalar inv = monic.back().inverse();
  for (auto& c : monic) c *= inv;
  // gcd(poly, t^p - t) collects every in-field root exactly once.
  Polynomial1 t{f.zero(), f.one()};
  Polynomial1 tp = poly_powmod(t, f.characteristic(), monic, f);
  tp.resize(std::max<std::size_t>(tp.size(), 2), f.zero());
  tp[1] -= f.one();
  trim(tp);
  Polynomial1 g = poly_gcd(monic, tp);
  std::vector<Scalar> roots;
  std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
  split_linear(g, f, rng, roots);
  return roots;
}

// ---------- integer factorization for the rational root test ----------

void factor_small(std::uint64_t n, std::vector<std::pair<mpz_class, unsigned>>& out) {
  for (std::uint64_t d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e) out.emplace_back(mpz_class(static_cast<unsigned long>(d)), e);
  }
  if (n > 1) out.emplace_back(mpz_class(static_cast<unsigned long>(n)), 1);
}

std::vector<std::pair<mpz_class, unsigned>> factor(mpz_class n) {
  std::vector<std::pair<mpz_class, unsigned>> out;
  n = abs(n);
  static const mpz_class small_limit = mpz_class(1) << 63;
  if (n < small_limit) {
    factor_small(n.get_ui(), out);
    return out;
  }
  for (mpz_class d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
    if (mpz_probab_prime_p(n.get_mpz_t(), 30) > 0) break;
    if (n < small_limit) {
      factor_small(n.get_ui(), out);
      return out;
    }
    unsigned e = 0;
    while (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) {
      mpz_divexact(n.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
      ++e;
    }
    if (e) out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::vector<mpz_class> divisors(const mpz_class& n) {
  std::vector<mpz_class> divs{1};
  for (const auto& [prime, exp] : factor(n)) {
    std::size_t count = divs.size();
    mpz_class power = 1;
    for (unsigned e = 1; e <= exp; ++e) {
      power *= prime;
      for (std::size_t i = 0; i < count; ++i) divs.push_back(divs[i] * power);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

void strip_root(Polynomial1& poly, const Scalar& root, std::vector<std::pair<Scalar, std::size_t>>& out) {
  std::size_t mult = 0;
  while (poly.size() > 1) {
    auto [q, r] = synthetic_division(poly, root);
    if (!r.is_zero()) break;
    poly = std::move(q);
    ++mult;
  }
  if (mult) out.emplace_back(root, mult);
}

RootReport rational_roots(Polynomial1 poly) {
  const Field q = Field::rationals();
  RootReport report;
  std::size_t zeros = 0;
  while (zeros < poly.size() && poly[zeros].is_zero()) ++zeros;
  if (zeros) {
    report.roots.emplace_back(q.zero(), zeros);
    poly.erase(poly.begin(), poly.begin() + static_cast<long>(zeros));
  }

  auto integer_coeffs = [](const Polynomial1& p) {
    mpz_class lcm = 1;
    for (const auto& c : p) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.rational().get_den_mpz_t());
    std::vector<mpz_class> ints;
    mpz_class content = 0;
    for (const auto& c : p) {
      mpq_class scaled = c.rational() * lcm;
      ints.push_back(scaled.get_num());
      mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), ints.back().get_mpz_t());
    }
    for (auto& v : ints) v /= content;
    return ints;
  };

  if (poly.size() > 1) {
    std::vector<mpz_class> ints = integer_coeffs(poly);
    // Cauchy bound on root magnitude prunes the candidate list.
    mpq_class bound = 0;
    for (std::size_t i = 0; i + 1 < ints.size(); ++i) {
      mpq_class ratio(abs(ints[i]), abs(ints.back()));
      ratio.canonicalize();
      if (ratio > bound) bound = ratio;
    }
    bound += 1;
    const auto numerators = divisors(ints.front());
    const auto denominators = divisors(ints.back());
    std::vector<mpq_class> candidates;
    for (const auto& den : denominators) {
      for (const auto& num : numerators) {
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        if (g != 1) continue;
        mpq_class r(num, den);
        if (r > bound) continue;
        candidates.push_back(r);
        candidates.push_back(-r);
      }
    }
    std::sort(candidates.begin(), candidates.end());
    for (const auto& c : candidates) {
      if (poly.size() <= 1) break;
      Scalar root = q.from_rational(c);
      if (evaluate(poly, root).is_zero()) strip_root(poly, root, report.roots);
    }
  }
  report.residual_degree = poly.size() - 1;
  std::sort(report.roots.begin(), report.roots.end());
  return report;
}

}  // namespace

Echelon rref(const Matrix& m) { return gauss_jordan(m, kernels::eliminate_column); }

namespace reference {
Echelon rref(const Matrix& m) { return gauss_jordan(m, reference::eliminate_column); }
}  // namespace reference

std::size_t rank(const Matrix& m) { return rref(m).rank; }

std::vector<Vector> kernel(const Matrix& m) {
  Echelon e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v = zero_vector(m.field(), m.cols());
    v[free] = m.field().one();
    for (std::size_t i = 0; i < e.rank; ++i) v[e.pivots[i]] = -e.reduced(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vector> solve_in_rowspace(const Vector& v, const Matrix& rows) {
  if (v.size() != rows.cols()) throw std::invalid_argument("solve_in_rowspace: length mismatch");
  // Columns of the system are the given rows, then v; leftmost pivots pick
  // the greedy row basis.
  const std::size_t k = rows.rows();
  Matrix system(rows.field(), rows.cols(), k + 1);
  for (std::size_t j = 0; j < rows.cols(); ++j) {
    for (std::size_t i = 0; i < k; ++i) system(j, i) = rows(i, j);
    system(j, k) = v[j];
  }
  Echelon e = rref(system);
  Vector coeffs = zero_vector(rows.field(), k);
  for (std::size_t i = 0; i < e.rank; ++i) {
    if (e.pivots[i] == k) return std::nullopt;
    coeffs[e.pivots[i]] = e.reduced(i, k);
  }
  return coeffs;
}

Matrix inverse(const Matrix& m) {
  if (!m.square()) throw std::domain_error("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return m;
  Matrix aug(m.field(), n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = m.field().one();
  }
  Echelon e = rref(aug);
  if (e.rank < n || e.pivots[n - 1] != n - 1) throw std::domain_error("singular matrix");
  Matrix inv(m.field(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  return inv;
}

void trim(Polynomial1& poly) {
  while (!poly.empty() && poly.back().is_zero()) poly.pop_back();
}

Polynomial1 char_poly(const Matrix& m) {
  if (!m.square()) throw std::invalid_argument("char_poly of a non-square matrix");
  const std::size_t n = m.rows();
  const Field& f = m.field();
  Matrix h = m;
  // Similarity reduction to upper Hessenberg form.
  for (std::size_t c = 1; c + 1 < n; ++c) {
    std::size_t i = c;
    while (i < n && h(i, c - 1).is_zero()) ++i;
    if (i == n) continue;
    if (i != c) {
      h.swap_rows(i, c);
      for (std::size_t r = 0; r < n; ++r) std::swap(h(r, i), h(r, c));
    }
    Scalar pivot_inv = h(c, c - 1).inverse();
    for (std::size_t r = c + 1; r < n; ++r) {
      Scalar u = h(r, c - 1) * pivot_inv;
      if (u.is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) h(r, j) -= u * h(c, j);
      for (std::size_t j = 0; j < n; ++j) h(j, c) += u * h(j, r);
    }
  }
  // p_k = char poly of the leading k x k block.
  std::vector<Polynomial1> p(n + 1);
  p[0] = {f.one()};
  for (std::size_t k = 1; k <= n; ++k) {
    Polynomial1 next(k + 1, f.zero());
    for (std::size_t i = 0; i < p[k - 1].size(); ++i) {
      next[i + 1] += p[k - 1][i];
      next[i] -= h(k - 1, k - 1) * p[k - 1][i];
    }
    Scalar t = f.one();
    for (std::size_t i = 1; i < k; ++i) {
      t *= h(k - i, k - i - 1);
      if (t.is_zero()) break;
      Scalar coeff = t * h(k - i - 1, k - 1);
      for (std::size_t j = 0; j < p[k - i - 1].size(); ++j) next[j] -= coeff * p[k - i - 1][j];
    }
    p[k] = std::move(next);
  }
  return p[n];
}

Scalar evaluate(const Polynomial1& poly, const Scalar& t) {
  if (poly.empty()) return t.field().zero();
  Scalar acc = poly.back();
  for (std::size_t i = poly.size() - 1; i-- > 0;) acc = acc * t + poly[i];
  return acc;
}

std::pair<Polynomial1, Scalar> synthetic_division(const Polynomial1& poly, const Scalar& root) {
  if (poly.empty()) return {{}, root.field().zero()};
  Polynomial1 q(poly.size() - 1, root.field().zero());
  Scalar carry = poly.back();
  for (std::size_t i = poly.size() - 1; i-- > 0;) {
    q[i] = carry;
    carry = poly[i] + carry * root;
  }
  return {q, carry};
}

std::size_t root_multiplicity(const Polynomial1& poly, const Scalar& root) {
  Polynomial1 p = poly;
  trim(p);
  std::size_t mult = 0;
  while (p.size() > 1) {
    auto [q, r] = synthetic_division(p, root);
    if (!r.is_zero()) break;
    p = std::move(q);
    ++mult;
  }
  return mult;
}

RootReport roots_in_field(const Polynomial1& input, const Field& field) {
  Polynomial1 poly = input;
  trim(poly);
  if (poly.empty()) throw std::invalid_argument("roots of the zero polynomial");
  if (!field.is_finite()) return rational_roots(std::move(poly));

  RootReport report;
  const std::uint64_t p = field.characteristic();
  std::vector<Scalar> distinct;
  if (p <= (1u << 16)) {
    for (std::uint64_t a = 0; a < p && distinct.size() + 1 < poly.size(); ++a) {
      Scalar x = field.from_int(static_cast<long long>(a));
      if (evaluate(poly, x).is_zero()) distinct.push_back(x);
    }
  } else if (poly.size() > 1) {
    distinct = distinct_roots_large_prime(poly, field);
  }
  for (const auto& r : distinct) strip_root(poly, r, report.roots);
  report.residual_degree = poly.size() - 1;
  std::sort(report.roots.begin(), report.roots.end());
  return report;
}

std::vector<Vector> eigenspace(const Matrix& m, const Scalar& lambda) {
  if (!m.square()) throw std::invalid_argument("eigenspace of a non-square matrix");
  Matrix shifted = m;
  for (std::size_t i = 0; i < m.rows(); ++i) shifted(i, i) -= lambda;
  return kernel(shifted);
}

}  // namespace projzero
