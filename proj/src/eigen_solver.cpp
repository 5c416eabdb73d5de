#include "projzero/eigen_solver.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

#include "projzero/errors.hpp"

namespace projzero {

Vector normalized(const Vector& v) {
  auto it = std::find_if(v.begin(), v.end(), [](const Scalar& x) { return !x.is_zero(); });
  if (it == v.end()) throw std::invalid_argument("cannot normalize the zero vector");
  Scalar inv = it->inverse();
  Vector out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(x * inv);
  return out;
}

namespace {

Matrix columns(const Field& field, std::size_t rows, const std::vector<Vector>& cols) {
  Matrix M(field, rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < rows; ++i) M(i, j) = cols[j][i];
  return M;
}

struct Search {
  const std::vector<Matrix>& A;
  std::vector<RootReport> roots;
  JointEigenspaces out;
  std::size_t covered = 0;

  void run(const Matrix& V, std::size_t level, Vector lambdas) {
    const Field field = A.front().field();
    const std::size_t m = A.front().rows();
    if (level == A.size()) {
      covered += V.cols();
      if (V.cols() == 1) {
        out.vectors.push_back({normalized(V.column_vector(0)), std::move(lambdas)});
      } else {
        std::vector<Vector> basis;
        for (std::size_t j = 0; j < V.cols(); ++j) basis.push_back(V.column_vector(j));
        out.blocks.emplace_back(std::move(basis), std::move(lambdas));
      }
      return;
    }
    const Matrix& M = A[level];
    for (const auto& [lambda, mult] : roots[level].roots) {
      Matrix shifted = M - Matrix::identity(field, m).scaled(lambda);
      std::vector<Vector> K = kernel(shifted * V);
      if (K.empty()) continue;
      Matrix W = V * columns(field, V.cols(), K);
      Vector next = lambdas;
      next.push_back(lambda);
      run(W, level + 1, std::move(next));
    }
  }
};

}  // namespace

JointEigenspaces common_eigenvectors(const std::vector<Matrix>& A) {
  if (A.empty()) return {};
  const Field field = A.front().field();
  const std::size_t m = A.front().rows();
  for (const auto& M : A)
    if (M.rows() != m || M.cols() != m || !(M.field() == field))
      throw std::invalid_argument("common_eigenvectors needs square matrices of one size and field");
  Search s{A, {}, {}, 0};
  for (const auto& M : A) {
    s.roots.push_back(roots_in_field(char_poly(M), field));
    if (s.roots.back().incomplete_factorization()) s.out.residual = true;
  }
  if (m > 0) s.run(Matrix::identity(field, m), 0, {});
  s.out.uncovered = m - s.covered;
  return std::move(s.out);
}

std::vector<EigenPoint> candidate_points(const std::vector<Matrix>& A) {
  std::vector<EigenPoint> out;
  for (auto& jv : common_eigenvectors(A).vectors) {
    if (is_zero(jv.lambdas)) continue;
    Vector p = normalized(jv.lambdas);
    out.push_back({std::move(jv.v), std::move(jv.lambdas), std::move(p)});
  }
  return out;
}

std::vector<EigenPoint> candidate_points(const Triplet& t) { return candidate_points(t.A); }

FilteredPoints filter_points(const std::vector<EigenPoint>& candidates, const IdealPresentation& I) {
  FilteredPoints out;
  for (const auto& c : candidates) {
    bool vanishes = std::all_of(I.generators.begin(), I.generators.end(),
                                [&](const Form& g) { return g.evaluate(c.point).is_zero(); });
    (vanishes ? out.kept : out.rejected).push_back(c);
  }
  return out;
}

namespace {

struct Draw {
  std::vector<std::size_t> mults;
  std::size_t residual = 0;
};

// Coefficient vectors whose values collide on two points are redrawn from
// the same generator.
std::optional<Draw> draw_multiplicities(const std::vector<Vector>& points, const Triplet& t, std::uint64_t seed) {
  const Field field = t.ring.field;
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 64; ++attempt) {
    Vector c;
    for (std::size_t j = 0; j < t.A.size(); ++j) {
      std::uint64_t r = field.is_finite() ? 1 + rng() % (field.characteristic() - 1) : 1 + rng() % 97;
      c.push_back(field.from_int(static_cast<long long>(r)));
    }
    std::vector<Scalar> values;
    for (const auto& p : points) {
      Scalar lp = t.l.evaluate(p);
      if (lp.is_zero()) throw std::logic_error("l vanishes at a point of the variety");
      Scalar mu = field.zero();
      for (std::size_t j = 0; j < p.size(); ++j) mu += c[j] * p[j];
      values.push_back(mu / lp);
    }
    bool distinct = true;
    for (std::size_t i = 0; i < values.size() && distinct; ++i)
      for (std::size_t k = i + 1; k < values.size(); ++k)
        if (values[i] == values[k]) distinct = false;
    if (!distinct) continue;
    Matrix combo(field, t.size(), t.size());
    for (std::size_t j = 0; j < t.A.size(); ++j) combo = combo + t.A[j].scaled(c[j]);
    Polynomial1 cp = char_poly(combo);
    Draw d;
    for (const auto& v : values) d.mults.push_back(root_multiplicity(cp, v));
    d.residual = roots_in_field(cp, field).residual_degree;
    return d;
  }
  return std::nullopt;
}

}  // namespace

MultiplicityResult multiplicities(const std::vector<Vector>& points, const Triplet& t, std::uint64_t seed) {
  MultiplicityResult out;
  std::vector<Draw> draws;
  for (std::uint64_t k = 0; k < 3; ++k) {
    ++out.draws;
    auto d = draw_multiplicities(points, t, seed + 7919 * k);
    if (!d) continue;
    for (const auto& prev : draws) {
      if (prev.mults == d->mults) {
        out.multiplicities = d->mults;
        out.residual_degree = std::min(prev.residual, d->residual);
        return out;
      }
    }
    draws.push_back(std::move(*d));
  }
  throw GenericityFailure("multiplicity draws disagree after 3 attempts");
}

std::size_t multiplicity(const Vector& point, const Triplet& t, std::uint64_t seed) {
  return multiplicities({normalized(point)}, t, seed).multiplicities.front();
}

namespace {

TripletSummary summarize(const Triplet& t) { return {t.degree, t.size(), t.l, t.surjective_certified}; }

}  // namespace

SolutionReport solve(const IdealPresentation& I, const SolveOptions& options) {
  SolutionReport report;
  const unsigned cap = options.max_degree.value_or(default_max_degree(I));
  report.scan = hilbert_scan(I, cap);
  if (report.scan.artinian) {
    report.artinian = true;
    return report;
  }

  TripletOptions topt;
  topt.max_degree = cap;
  topt.strategy = {options.search, options.seed, options.max_trials};
  topt.linear = options.linear;
  BuiltTriplet first = build_triplet(I, topt);
  report.triplet = summarize(first.triplet);

  topt.policy = DegreePolicy::certified_stable;
  BuiltTriplet stable = build_triplet(I, topt);
  report.certified = summarize(stable.triplet);

  JointEigenspaces joint = common_eigenvectors(first.triplet.A);
  std::vector<EigenPoint> candidates = candidate_points(first.triplet.A);
  report.blocks = joint.blocks.size();
  if (!joint.blocks.empty() || joint.uncovered > 0) {
    for (auto& c : candidate_points(stable.triplet.A)) {
      bool seen = std::any_of(candidates.begin(), candidates.end(), [&](const EigenPoint& e) { return e.point == c.point; });
      if (!seen) candidates.push_back(std::move(c));
    }
  }

  FilteredPoints filtered = filter_points(candidates, I);
  for (const auto& r : filtered.rejected) report.rejected.push_back(r.point);
  std::vector<Vector> kept;
  for (const auto& k : filtered.kept) kept.push_back(k.point);
  MultiplicityResult mult = multiplicities(kept, stable.triplet, options.seed);
  report.residual_degree = mult.residual_degree;
  for (std::size_t i = 0; i < kept.size(); ++i) report.points.push_back({kept[i], mult.multiplicities[i]});
  return report;
}

}  // namespace projzero
