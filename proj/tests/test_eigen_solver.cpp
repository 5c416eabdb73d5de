#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "oracles.hpp"
#include "projzero/eigen_solver.hpp"
#include "projzero/errors.hpp"
#include "test_helpers.hpp"

using namespace projzero;
using namespace testing_helpers;

namespace {

Field Q = Field::rationals();

Vector ints(std::vector<long long> v, Field f = Field::rationals()) {
  Vector out;
  for (long long x : v) out.push_back(f.from_int(x));
  return out;
}

std::vector<Matrix> main_matrices() {
  return {quarter(Q, {{2, 0, 0}, {1, 1, -1}, {1, -1, 1}}, 2), quarter(Q, {{2, 2, -2}, {1, 3, -1}, {-1, 1, 1}}, 4),
          quarter(Q, {{2, -2, 2}, {-1, 1, 1}, {1, -1, 3}}, 4)};
}

std::set<std::string> point_strings(const std::vector<EigenPoint>& ps) {
  std::set<std::string> out;
  for (const auto& p : ps) {
    std::string s;
    for (const auto& x : p.point) s += x.to_string() + ":";
    out.insert(s);
  }
  return out;
}

std::set<std::string> solved_strings(const SolutionReport& r) {
  std::set<std::string> out;
  for (const auto& p : r.points) {
    std::string s;
    for (const auto& x : p.point) s += x.to_string() + ":";
    out.insert(s + std::to_string(p.multiplicity));
  }
  return out;
}

}  // namespace

TEST(CommonEigenvectors, MainExample) {
  JointEigenspaces j = common_eigenvectors(main_matrices());
  ASSERT_EQ(j.vectors.size(), 3u);
  EXPECT_TRUE(j.blocks.empty());
  EXPECT_FALSE(j.residual);
  EXPECT_EQ(j.uncovered, 0u);
  std::set<Vector> got;
  for (const auto& v : j.vectors) {
    got.insert(v.v);
    // Eigenvalues are p / l(p) with l = y + z, so the triple is v scaled.
    Scalar lp = v.v[1] + v.v[2];
    for (std::size_t k = 0; k < 3; ++k) EXPECT_EQ(v.lambdas[k] * lp, v.v[k]);
    auto A = main_matrices();
    for (std::size_t k = 0; k < 3; ++k) {
      Vector av = A[k].apply(v.v);
      for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(av[i], v.lambdas[k] * v.v[i]);
    }
  }
  EXPECT_EQ(got, (std::set<Vector>{ints({1, 1, 0}), ints({1, 0, 1}), ints({0, 1, 1})}));
}

TEST(CommonEigenvectors, FalsePointMatrices) {
  std::vector<Matrix> A{Matrix::from_ints(Q, {{1, 0}, {0, 0}}), Matrix(Q, 2, 2), Matrix::from_ints(Q, {{0, 0}, {0, 1}})};
  auto c = candidate_points(A);
  EXPECT_EQ(point_strings(c), (std::set<std::string>{"1:0:0:", "0:0:1:"}));
}

TEST(CommonEigenvectors, IdentityIsOneBlock) {
  std::vector<Matrix> A(3, Matrix::identity(Q, 3));
  JointEigenspaces j = common_eigenvectors(A);
  EXPECT_TRUE(j.vectors.empty());
  ASSERT_EQ(j.blocks.size(), 1u);
  EXPECT_EQ(j.blocks[0].first.size(), 3u);
}

TEST(CommonEigenvectors, ResidualWhenNoRationalEigenvalues) {
  std::vector<Matrix> A{Matrix::from_ints(Q, {{0, -1}, {1, 0}}), Matrix::identity(Q, 2)};
  JointEigenspaces j = common_eigenvectors(A);
  EXPECT_TRUE(j.residual);
  EXPECT_EQ(j.uncovered, 2u);
  EXPECT_TRUE(j.vectors.empty());
}

TEST(FilterPoints, FalsePoint) {
  IdealPresentation I = false_point();
  std::vector<Matrix> A{Matrix::from_ints(Q, {{1, 0}, {0, 0}}), Matrix(Q, 2, 2), Matrix::from_ints(Q, {{0, 0}, {0, 1}})};
  FilteredPoints f = filter_points(candidate_points(A), I);
  EXPECT_EQ(point_strings(f.kept), (std::set<std::string>{"1:0:0:"}));
  EXPECT_EQ(point_strings(f.rejected), (std::set<std::string>{"0:0:1:"}));
  EXPECT_TRUE(filter_points({}, I).kept.empty());
  FilteredPoints all = filter_points(candidate_points(main_matrices()), main_example());
  EXPECT_EQ(all.kept.size(), 3u);
}

TEST(CandidatePoints, LocalNonzerodivisorAtDegreeOne) {
  IdealPresentation I = local_nzd();
  TripletOptions o;
  o.linear = parse_form("z", I.ring);
  BuiltTriplet b = build_triplet(I, o);
  EXPECT_EQ(b.triplet.degree, 1u);
  auto c = candidate_points(b.triplet);
  EXPECT_TRUE(point_strings(c).count("1:1:1:"));
}

TEST(Solve, MainExample) {
  SolutionReport r = solve(main_example());
  EXPECT_EQ(solved_strings(r), (std::set<std::string>{"1:1:0:1", "1:0:1:1", "0:1:1:1"}));
  EXPECT_TRUE(r.rejected.empty());
  EXPECT_EQ(r.residual_degree, 0u);
}

TEST(Solve, FalsePoint) {
  SolutionReport r = solve(false_point());
  EXPECT_EQ(solved_strings(r), (std::set<std::string>{"1:0:0:1"}));
  ASSERT_EQ(r.rejected.size(), 1u);
  EXPECT_EQ(r.rejected[0], ints({0, 0, 1}));
}

TEST(Solve, LocalNonzerodivisor) {
  SolutionReport r = solve(local_nzd());
  EXPECT_EQ(solved_strings(r), (std::set<std::string>{"1:1:1:1"}));
  EXPECT_EQ(std::vector<std::size_t>(r.scan.hf.begin(), r.scan.hf.begin() + 5),
            (std::vector<std::size_t>{1, 3, 3, 1, 1}));
}

TEST(Solve, ExNotMultiplicities) {
  for (std::uint64_t seed : {1u, 2u, 99u}) {
    SolveOptions o;
    o.seed = seed;
    SolutionReport r = solve(ex_not(), o);
    EXPECT_EQ(solved_strings(r), (std::set<std::string>{"1:1:1", "1:0:2"})) << seed;
  }
}

TEST(Solve, Artinian) {
  SolutionReport r = solve(ideal({"x", "y"}, {"x^2", "y^2"}));
  EXPECT_TRUE(r.artinian);
  EXPECT_TRUE(r.points.empty());
}

TEST(Solve, PointsOutsideTheField) {
  // x^2 + y^2 vanishes at (1 : i) and (1 : -i) only.
  SolutionReport r = solve(ideal({"x", "y"}, {"x^2 + y^2"}));
  EXPECT_TRUE(r.points.empty());
  EXPECT_EQ(r.residual_degree, 2u);
}

TEST(Solve, PositiveDimensionalIdealHitsCap) {
  SolveOptions o;
  o.max_degree = 5;
  EXPECT_THROW(solve(ideal({"x", "y", "z"}, {"x^2", "x*y", "x*z"}), o), CapExceeded);
}

TEST(Solve, DeterministicUnderSeed) {
  SolveOptions o;
  o.seed = 17;
  SolutionReport a = solve(ex_not(), o), b = solve(ex_not(), o);
  EXPECT_EQ(solved_strings(a), solved_strings(b));
  EXPECT_EQ(a.triplet->l, b.triplet->l);
}

TEST(Solve, PrimeField) {
  IdealPresentation I = ideal({"x", "y", "z"}, {"x*z + y*z - z^2", "x^2 - y^2 + 2*y*z - z^2", "x*y - y^2 + y*z"},
                              Field::prime(7));
  SolutionReport r = solve(I);
  EXPECT_EQ(solved_strings(r), (std::set<std::string>{"1:1:0:1", "1:0:1:1", "0:1:1:1"}));
}

TEST(Multiplicity, SinglePoint) {
  IdealPresentation I = ideal({"x", "y", "z"}, {"y", "z"});
  TripletOptions o;
  o.policy = DegreePolicy::certified_stable;
  BuiltTriplet b = build_triplet(I, o);
  EXPECT_EQ(multiplicity(ints({1, 0, 0}), b.triplet, 3), 1u);
}

TEST(Normalized, FirstNonzeroIsOne) {
  EXPECT_EQ(normalized(ints({0, 2, 4})), (Vector{Q.zero(), Q.one(), Q.from_int(2)}));
  EXPECT_THROW(normalized(ints({0, 0})), std::invalid_argument);
}
