#pragma once
// Independent reference computations. None of these call the library's
// elimination, ordering or normal form code.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <ostream>
#include <random>
#include <vector>

#include "projzero/graded_quotient.hpp"
#include "projzero/matrix.hpp"
#include "projzero/polynomial.hpp"

namespace projzero {

inline void PrintTo(const Scalar& s, std::ostream* os) { *os << s.to_string(); }

}  // namespace projzero

namespace oracle {

using projzero::Field;
using projzero::Form;
using projzero::Matrix;
using projzero::Monomial;
using projzero::Scalar;
using projzero::Vector;

inline Scalar determinant(const Matrix& a) {
  const std::size_t n = a.rows();
  const Field f = a.field();
  if (n == 0) return f.one();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Scalar total = f.zero();
  do {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    Scalar term = f.one();
    for (std::size_t i = 0; i < n; ++i) term *= a(i, perm[i]);
    total += inversions % 2 ? -term : term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

// Row reduction by column sweep with the last nonzero row as pivot.
inline std::size_t rank(std::vector<Vector> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows[0].size();
  std::size_t r = 0;
  for (std::size_t c = cols; c-- > 0 && r < rows.size();) {
    std::size_t pick = rows.size();
    for (std::size_t i = rows.size(); i-- > r;)
      if (!rows[i][c].is_zero()) {
        pick = i;
        break;
      }
    if (pick == rows.size()) continue;
    std::swap(rows[r], rows[pick]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][c].is_zero()) continue;
      Scalar q = rows[i][c] / rows[r][c];
      for (std::size_t k = 0; k < cols; ++k) rows[i][k] -= q * rows[r][k];
    }
    ++r;
  }
  return r;
}

inline std::size_t rank(const Matrix& m) {
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row_vector(i));
  return rank(rows);
}

// Exponent vectors of degree d, any order.
inline std::vector<std::vector<unsigned>> exponents(std::size_t n, unsigned d) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> e(n, 0);
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned left) {
    if (i + 1 == n) {
      e[i] = left;
      out.push_back(e);
      return;
    }
    for (unsigned k = 0; k <= left; ++k) {
      e[i] = k;
      rec(i + 1, left - k);
    }
  };
  if (n > 0) rec(0, d);
  return out;
}

// Coefficient rows of every monomial multiple of every generator in degree d.
inline std::vector<Vector> ideal_rows(const projzero::IdealPresentation& I, unsigned d,
                                      const std::vector<std::vector<unsigned>>& cols) {
  std::vector<Vector> rows;
  const std::size_t n = I.ring.nvars();
  for (const auto& g : I.generators) {
    if (g.degree() > d) continue;
    for (const auto& shift : exponents(n, d - g.degree())) {
      Vector row = projzero::zero_vector(I.ring.field, cols.size());
      for (const auto& [mono, c] : g.terms()) {
        std::vector<unsigned> e = mono.exponents();
        for (std::size_t k = 0; k < n; ++k) e[k] += shift[k];
        auto it = std::find(cols.begin(), cols.end(), e);
        row[static_cast<std::size_t>(it - cols.begin())] += c;
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

inline std::size_t hilbert(const projzero::IdealPresentation& I, unsigned d) {
  auto cols = exponents(I.ring.nvars(), d);
  return cols.size() - rank(ideal_rows(I, d, cols));
}

// f in I_d, decided by comparing ranks.
inline bool in_ideal(const Form& f, const projzero::IdealPresentation& I) {
  if (f.is_zero()) return true;
  auto cols = exponents(I.ring.nvars(), f.degree());
  auto rows = ideal_rows(I, f.degree(), cols);
  std::size_t before = rank(rows);
  Vector v = projzero::zero_vector(I.ring.field, cols.size());
  for (const auto& [mono, c] : f.terms()) {
    auto it = std::find(cols.begin(), cols.end(), mono.exponents());
    v[static_cast<std::size_t>(it - cols.begin())] = c;
  }
  rows.push_back(v);
  return rank(rows) == before;
}

// Degree reverse lexicographic comparison straight from the definition:
// higher degree wins; otherwise the last ranked variable where the exponents
// differ decides, the smaller exponent winning.
inline bool degrevlex_greater(const Monomial& a, const Monomial& b, const std::vector<std::size_t>& ranking) {
  if (a.degree() != b.degree()) return a.degree() > b.degree();
  for (std::size_t k = ranking.size(); k-- > 0;) {
    std::size_t v = ranking[k];
    if (a[v] != b[v]) return a[v] < b[v];
  }
  return false;
}

inline bool lex_greater(const Monomial& a, const Monomial& b, const std::vector<std::size_t>& ranking) {
  for (std::size_t v : ranking)
    if (a[v] != b[v]) return a[v] > b[v];
  return false;
}

inline Scalar evaluate(const Form& f, const Vector& p) {
  Scalar s = f.field().zero();
  for (const auto& [mono, c] : f.terms()) {
    Scalar t = c;
    for (std::size_t k = 0; k < p.size(); ++k)
      for (unsigned e = 0; e < mono[k]; ++e) t *= p[k];
    s += t;
  }
  return s;
}

inline Matrix random_matrix(const Field& f, std::size_t rows, std::size_t cols, std::mt19937_64& rng, int span = 5) {
  Matrix m(f, rows, cols);
  std::uniform_int_distribution<int> dist(-span, span);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = f.from_int(dist(rng));
  return m;
}

// Distinct projective points with small coordinates, no zero vector.
inline std::vector<Vector> random_points(const Field& f, std::size_t nvars, std::size_t count, std::mt19937_64& rng,
                                         int span = 3) {
  std::vector<Vector> out;
  std::uniform_int_distribution<int> dist(-span, span);
  auto proportional = [](const Vector& a, const Vector& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = i + 1; j < a.size(); ++j)
        if (!(a[i] * b[j] == a[j] * b[i])) return false;
    return true;
  };
  while (out.size() < count) {
    Vector p;
    bool zero = true;
    for (std::size_t k = 0; k < nvars; ++k) {
      p.push_back(f.from_int(dist(rng)));
      zero = zero && p.back().is_zero();
    }
    if (zero) continue;
    bool dup = false;
    for (const auto& q : out) dup = dup || proportional(p, q);
    if (!dup) out.push_back(std::move(p));
  }
  return out;
}

}  // namespace oracle
