#include "projzero/points.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "projzero/errors.hpp"

namespace projzero {

namespace {

Scalar dot(const Vector& a, const Vector& b) {
  Scalar s = a.front().field().zero();
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool nonvanishing(const Vector& l, const std::vector<Vector>& reps, std::size_t upto) {
  for (std::size_t j = 0; j < upto; ++j)
    if (dot(l, reps[j]).is_zero()) return false;
  return true;
}

Matrix monomial_evaluations(const std::vector<Monomial>& monos, const ProjPointSet& P) {
  return evaluation_matrix(monos, P.field, P.reps);
}

}  // namespace

ProjPointSet normalize(const std::vector<Vector>& raw, const Field& field) {
  ProjPointSet P;
  P.field = field;
  P.nvars = raw.empty() ? 0 : raw.front().size();
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (raw[i].size() != P.nvars) throw Error(ExitCode::input_error, "point " + std::to_string(i + 1) + " has the wrong length");
    auto it = std::find_if(raw[i].begin(), raw[i].end(), [](const Scalar& x) { return !x.is_zero(); });
    if (it == raw[i].end()) throw ZeroPoint(i);
    Scalar inv = it->inverse();
    Vector rep;
    for (const auto& x : raw[i]) rep.push_back(x * inv);
    for (std::size_t j = 0; j < P.reps.size(); ++j)
      if (P.reps[j] == rep) throw DuplicatePoint(j, i);
    P.first_one.push_back(static_cast<std::size_t>(it - raw[i].begin()));
    P.reps.push_back(std::move(rep));
  }
  return P;
}

VariableProjection project_variables(const ProjPointSet& P) {
  VariableProjection out;
  if (P.size() == 0) {
    for (std::size_t i = 0; i < P.nvars; ++i) out.kept.push_back(i);
    return out;
  }
  Matrix X(P.field, P.nvars, P.size());
  for (std::size_t i = 0; i < P.nvars; ++i)
    for (std::size_t j = 0; j < P.size(); ++j) X(i, j) = P.reps[j][i];
  out.kept = rref(X.transpose()).pivots;
  Matrix K(P.field, out.kept.size(), P.size());
  for (std::size_t r = 0; r < out.kept.size(); ++r)
    for (std::size_t j = 0; j < P.size(); ++j) K(r, j) = X(out.kept[r], j);
  for (std::size_t i = 0; i < P.nvars; ++i) {
    if (std::find(out.kept.begin(), out.kept.end(), i) != out.kept.end()) continue;
    auto alpha = solve_in_rowspace(X.row_vector(i), K);
    if (!alpha) throw std::logic_error("dropped coordinate outside the kept span");
    out.substitutions.emplace_back(i, std::move(*alpha));
  }
  return out;
}

Form nzd_sweep(const ProjPointSet& P) {
  const Field& field = P.field;
  if (P.size() == 0) return Form::linear(field, [&] {
      Vector c = zero_vector(field, P.nvars);
      c.front() = field.one();
      return c;
    }());
  Vector v = zero_vector(field, P.nvars);
  v[P.first_one.front()] = field.one();
  const std::uint64_t limit = field.is_finite() ? field.characteristic() : std::numeric_limits<std::uint64_t>::max();
  bool failed = false;
  for (std::size_t i = 0; i + 1 < P.size() && !failed; ++i) {
    if (!dot(v, P.reps[i + 1]).is_zero()) continue;
    Matrix at(field, 1, P.nvars);
    for (std::size_t k = 0; k < P.nvars; ++k) at(0, k) = P.reps[i][k];
    Vector w;
    for (auto& cand : kernel(at)) {
      if (!dot(cand, P.reps[i + 1]).is_zero()) {
        w = std::move(cand);
        break;
      }
    }
    if (w.empty()) throw std::logic_error("points are not distinct");
    bool found = false;
    for (std::uint64_t k = 0; k < limit; ++k) {
      Scalar alpha = field.element(k);
      Vector cand = v;
      for (std::size_t t = 0; t < cand.size(); ++t) cand[t] += alpha * w[t];
      if (nonvanishing(cand, P.reps, i + 2)) {
        v = std::move(cand);
        found = true;
        break;
      }
    }
    failed = !found;
  }
  if (!failed) return Form::linear(field, v);
  for (const auto& c : normalized_linear_forms(field, P.nvars))
    if (nonvanishing(c, P.reps, P.size())) return Form::linear(field, c);
  throw FieldTooSmall("no linear form over " + field.to_string() + " avoids all " + std::to_string(P.size()) + " points");
}

Matrix evaluations(const std::vector<Form>& forms, const ProjPointSet& P) { return evaluation_matrix(forms, P.reps); }

PointTriplet bm_triplet(const ProjPointSet& P, const Ring& ring, const std::optional<Form>& given) {
  if (!(ring.field == P.field) || ring.nvars() != P.nvars)
    throw Error(ExitCode::input_error, "point set does not match the ring");
  if (P.size() == 0) throw Error(ExitCode::input_error, "empty point set");
  const Field& field = P.field;
  const std::size_t m = P.size();
  Form l = given ? *given : nzd_sweep(P);
  if (l.degree() != 1 || l.nvars() != P.nvars) throw Error(ExitCode::input_error, "l is not a linear form of the ring");
  for (std::size_t i = 0; i < m; ++i)
    if (l.evaluate(P.reps[i]).is_zero())
      throw Error(ExitCode::input_error, "l vanishes at point " + std::to_string(i + 1));

  PointTriplet out;
  std::vector<bool> allowed(P.nvars, true);
  if (P.nvars > m) {
    out.projection = project_variables(P);
    for (const auto& [i, alpha] : out.projection.substitutions) allowed[i] = false;
  } else {
    for (std::size_t i = 0; i < P.nvars; ++i) out.projection.kept.push_back(i);
  }

  out.B.push_back({Monomial(P.nvars)});
  out.hf.push_back(1);
  unsigned d = 0;
  while (out.B.back().size() < m) {
    ++d;
    std::vector<Monomial> Bd;
    std::vector<Vector> rows;
    for (const auto& t : monomials_of_degree(P.nvars, d, ring.order)) {
      bool uses_dropped = false;
      for (std::size_t i = 0; i < P.nvars; ++i)
        if (t[i] != 0 && !allowed[i]) uses_dropped = true;
      if (uses_dropped) continue;
      if (std::any_of(out.initials.begin(), out.initials.end(), [&](const Monomial& s) { return s.divides(t); })) continue;
      Vector tp;
      for (const auto& p : P.reps) tp.push_back(evaluate(t, p));
      auto coeffs = solve_in_rowspace(tp, rows.empty() ? Matrix(field, 0, m) : Matrix::from_rows(field, rows));
      if (coeffs) {
        out.initials.push_back(t);
        Form g = Form::monomial(field, t, field.one());
        for (std::size_t k = 0; k < Bd.size(); ++k) g.add_term(Bd[k], -(*coeffs)[k]);
        out.vanishing.push_back(std::move(g));
      } else {
        Bd.push_back(t);
        rows.push_back(std::move(tp));
      }
    }
    out.B.push_back(std::move(Bd));
    out.hf.push_back(out.B.back().size());
  }

  Triplet& tr = out.triplet;
  tr.ring = ring;
  tr.degree = d;
  tr.base_degree = d;
  tr.E = out.B.back();
  tr.l = l;
  tr.hf_prefix = out.hf;
  tr.surjective_certified = true;
  tr.stabilization_degree = d;
  Matrix EP = monomial_evaluations(tr.E, P);
  Matrix LP = EP;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t k = 0; k < m; ++k) LP(i, k) *= l.evaluate(P.reps[k]);
    tr.F.push_back(Form::monomial(field, tr.E[i], field.one()) * l);
  }
  Matrix Linv = inverse(LP);
  for (std::size_t j = 0; j < P.nvars; ++j) {
    Matrix X = EP;
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t k = 0; k < m; ++k) X(i, k) *= P.reps[k][j];
    tr.A.push_back(X * Linv);
  }
  return out;
}

std::vector<Form> vanishing_ideal(const ProjPointSet& P, const Ring& ring) {
  if (P.size() == 0) throw Error(ExitCode::input_error, "empty point set");
  const Field& field = P.field;
  const std::size_t n = P.nvars;
  std::vector<Form> gens, previous;
  bool full = P.size() == 1;
  for (unsigned k = 1;; ++k) {
    std::vector<Monomial> monos = monomials_of_degree(n, k, ring.order);
    Matrix M = monomial_evaluations(monos, P);
    std::vector<Form> piece;
    for (const auto& v : kernel(M.transpose())) piece.push_back(Form::from_coefficients(field, monos, v));
    std::vector<Vector> rows;
    for (const auto& g : previous)
      for (std::size_t j = 0; j < n; ++j)
        rows.push_back((g * Form::monomial(field, Monomial::variable(n, j), field.one())).coefficients(monos));
    std::size_t r = rows.empty() ? 0 : rank(Matrix::from_rows(field, rows));
    for (const auto& f : piece) {
      rows.push_back(f.coefficients(monos));
      std::size_t r2 = rank(Matrix::from_rows(field, rows));
      if (r2 > r) {
        gens.push_back(f);
        r = r2;
      } else {
        rows.pop_back();
      }
    }
    previous = std::move(piece);
    if (full) break;
    full = rank(M) == P.size();
  }
  return gens;
}

Vector eval_normal_form(const Form& f, const ProjPointSet& P, const std::vector<Form>& basis) {
  if (basis.empty()) throw RankDeficientBasis("empty basis");
  Matrix BP = evaluations(basis, P);
  if (rank(BP) != P.size()) throw RankDeficientBasis("basis evaluates to rank below the number of points");
  Vector fp;
  for (const auto& p : P.reps) fp.push_back(f.evaluate(p));
  auto alpha = solve_in_rowspace(fp, BP);
  if (!alpha) throw std::logic_error("full-rank evaluation system without a solution");
  return *alpha;
}

BaseCoordinates evaluation_base(const Triplet& t, const ProjPointSet& P) {
  Matrix Einv = inverse(monomial_evaluations(t.E, P));
  return [Einv, &P](const Monomial& b) {
    Vector bp;
    for (const auto& p : P.reps) bp.push_back(evaluate(b, p));
    return Einv.left_multiply(bp);
  };
}

CMatrix c_matrix(const std::vector<Vector>& points) {
  CMatrix out;
  const std::size_t m = points.size();
  const std::size_t none = std::numeric_limits<std::size_t>::max();
  out.c.assign(m, std::vector<std::size_t>(m, none));
  if (m == 0) return out;
  const std::size_t len = points.front().size();
  std::vector<std::vector<std::size_t>> groups(1);
  for (std::size_t i = 0; i < m; ++i) groups[0].push_back(i);
  for (std::size_t h = 0; h < len; ++h) {
    if (std::all_of(groups.begin(), groups.end(), [](const auto& g) { return g.size() == 1; })) break;
    std::vector<std::vector<std::size_t>> next;
    for (const auto& g : groups) {
      if (g.size() == 1) {
        next.push_back(g);
        continue;
      }
      std::vector<std::vector<std::size_t>> subs;
      for (std::size_t idx : g) {
        bool placed = false;
        for (auto& s : subs) {
          ++out.comparisons;
          if (points[idx][h] == points[s.front()][h]) {
            s.push_back(idx);
            placed = true;
            break;
          }
        }
        if (!placed) subs.push_back({idx});
      }
      for (std::size_t a = 0; a < subs.size(); ++a)
        for (std::size_t b = a + 1; b < subs.size(); ++b)
          for (std::size_t i : subs[a])
            for (std::size_t j : subs[b]) out.c[i][j] = out.c[j][i] = h;
      next.insert(next.end(), subs.begin(), subs.end());
    }
    groups = std::move(next);
    out.partitions.push_back(groups);
  }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (i != j && out.c[i][j] == none) throw DuplicatePoint(std::min(i, j), std::max(i, j));
  return out;
}

CMatrix c_matrix(const ProjPointSet& P) { return c_matrix(P.reps); }

std::vector<Form> separators(const ProjPointSet& P, bool unit) {
  const Field& field = P.field;
  const std::size_t m = P.size();
  CMatrix cm = c_matrix(P);
  auto linear = [&](std::initializer_list<std::pair<std::size_t, Scalar>> terms) {
    Vector c = zero_vector(field, P.nvars);
    for (const auto& [k, v] : terms) c[k] += v;
    return Form::linear(field, c);
  };
  std::vector<Form> out;
  for (std::size_t i = 0; i < m; ++i) {
    const Vector& pi = P.reps[i];
    Form Q = Form::monomial(field, Monomial(P.nvars), field.one());
    for (std::size_t j = 0; j < m; ++j) {
      if (j == i) continue;
      const Vector& pj = P.reps[j];
      const std::size_t h = cm.c[i][j];
      const std::size_t hp = P.first_one[i];
      Form S;
      if (pi[h].is_zero())
        S = linear({{hp, pj[h]}, {h, -pj[hp]}});
      else if (pj[h].is_zero())
        S = linear({{h, field.one()}});
      else
        S = linear({{hp, pj[h]}, {h, -field.one()}});
      Q = Q * S;
    }
    if (unit) Q = Q.scaled(Q.evaluate(pi).inverse());
    out.push_back(std::move(Q));
  }
  return out;
}

}  // namespace projzero
