#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "projzero/errors.hpp"
#include "projzero/triplet.hpp"
#include "test_helpers.hpp"

using namespace projzero;
using namespace testing_helpers;

namespace {

BuiltTriplet main_triplet() {
  IdealPresentation I = main_example();
  TripletOptions o;
  o.linear = parse_form("y + z", I.ring);
  return build_triplet(I, o);
}

}  // namespace

TEST(Triplet, MainExampleMatrices) {
  BuiltTriplet b = main_triplet();
  const Triplet& t = b.triplet;
  const Field q = t.ring.field;
  EXPECT_EQ(t.degree, 1u);
  EXPECT_EQ(t.base_degree, 1u);
  ASSERT_EQ(t.E.size(), 3u);
  EXPECT_EQ(to_string(t.E[0], t.ring), "x");
  EXPECT_EQ(to_string(t.E[1], t.ring), "y");
  EXPECT_EQ(to_string(t.E[2], t.ring), "z");
  EXPECT_EQ(t.A[0], quarter(q, {{2, 0, 0}, {1, 1, -1}, {1, -1, 1}}, 2));
  EXPECT_EQ(t.A[1], quarter(q, {{2, 2, -2}, {1, 3, -1}, {-1, 1, 1}}, 4));
  EXPECT_EQ(t.A[2], quarter(q, {{2, -2, 2}, {-1, 1, 1}, {1, -1, 3}}, 4));
  EXPECT_TRUE(t.surjective_certified);
}

TEST(Triplet, MatricesSendEToLTimesE) {
  BuiltTriplet b = main_triplet();
  const Triplet& t = b.triplet;
  for (std::size_t j = 0; j < t.A.size(); ++j)
    for (std::size_t i = 0; i < t.size(); ++i) {
      Form lhs = Form::monomial(t.ring.field, Monomial::variable(3, j) * t.E[i], t.ring.field.one());
      Form rhs(t.ring.field, 3, 2);
      for (std::size_t k = 0; k < t.size(); ++k)
        rhs += (Form::monomial(t.ring.field, t.E[k], t.A[j](i, k)) * t.l);
      EXPECT_TRUE(oracle::in_ideal(lhs - rhs, main_example()));
    }
}

TEST(Triplet, FalsePointExample) {
  IdealPresentation I = false_point();
  TripletOptions o;
  o.linear = parse_form("x + z", I.ring);
  BuiltTriplet b = build_triplet(I, o);
  const Triplet& t = b.triplet;
  const Field q = t.ring.field;
  ASSERT_EQ(t.size(), 2u);
  EXPECT_EQ(to_string(t.E[0], t.ring), "x");
  EXPECT_EQ(to_string(t.E[1], t.ring), "y");
  EXPECT_EQ(t.A[0], Matrix::from_ints(q, {{1, 0}, {0, 0}}));
  EXPECT_EQ(t.A[1], Matrix::from_ints(q, {{0, 0}, {0, 0}}));
  EXPECT_EQ(t.A[2], Matrix::from_ints(q, {{0, 0}, {0, 1}}));
  EXPECT_EQ(t.base_degree, 2u);
  EXPECT_FALSE(t.surjective_certified);
}

TEST(Triplet, CertifiedPolicyStartsAtStabilization) {
  IdealPresentation I = ex_not();
  TripletOptions o;
  o.policy = DegreePolicy::certified_stable;
  BuiltTriplet b = build_triplet(I, o);
  EXPECT_GE(b.triplet.degree, 5u);
  EXPECT_EQ(b.triplet.size(), 3u);
  EXPECT_EQ(*b.triplet.stabilization_degree, 5u);
}

TEST(Triplet, FirstSurjectiveDegreeOfExNot) {
  BuiltTriplet b = build_triplet(ex_not());
  EXPECT_EQ(b.triplet.degree, 3u);
  EXPECT_EQ(b.triplet.size(), 4u);
}

TEST(Triplet, ArtinianHasNoCertifiedTriplet) {
  TripletOptions o;
  o.policy = DegreePolicy::certified_stable;
  EXPECT_THROW(build_triplet(ideal({"x", "y"}, {"x^2", "y^2"}), o), Error);
}

TEST(Triplet, PositiveDimension) {
  TripletOptions o;
  o.max_degree = 5;
  IdealPresentation I = ideal({"x", "y", "z"}, {"x^2", "x*y", "x*z"});
  // hf(1) = hf(2) = 3 but x kills R_1, so no l is onto R_2.
  EXPECT_THROW(build_triplet(I, o), NoSurjectionFound);
  o.policy = DegreePolicy::certified_stable;
  EXPECT_THROW(build_triplet(I, o), CapExceeded);
}

TEST(Triplet, IncreasingHilbertFunctionHitsCap) {
  TripletOptions o;
  o.max_degree = 4;
  EXPECT_THROW(build_triplet(ideal({"x", "y", "z"}, {"x^2"}), o), CapExceeded);
}

TEST(Triplet, PaperSurjectionChecksOnMainExample) {
  IdealPresentation I = main_example();
  DegreePiece p1 = ideal_piece(I, 1), p2 = ideal_piece(I, 2);
  EXPECT_TRUE(is_surjective(parse_form("y + z", I.ring), p1, p2));
  for (const char* v : {"x", "y", "z"}) EXPECT_FALSE(is_surjective(parse_form(v, I.ring), p1, p2)) << v;
  IdealPresentation J = local_nzd();
  EXPECT_TRUE(is_surjective(parse_form("z", J.ring), ideal_piece(J, 1), ideal_piece(J, 2)));
}

TEST(Triplet, DegreeIndependenceWhenCertified) {
  IdealPresentation I = main_example();
  TripletOptions o;
  o.policy = DegreePolicy::certified_stable;
  o.linear = parse_form("y + z", I.ring);
  BuiltTriplet a = build_triplet(I, o);
  o.min_degree = a.triplet.degree + 1;
  BuiltTriplet b = build_triplet(I, o);
  // Bases l^k e_i in both degrees: express the higher matrices in the lifted basis.
  std::vector<Form> lifted;
  for (const auto& e : a.triplet.E) lifted.push_back(Form::monomial(I.ring.field, e, I.ring.field.one()) * a.triplet.l);
  auto A = multiplication_matrices(lifted, a.triplet.l, b.upper);
  for (std::size_t j = 0; j < A.size(); ++j) EXPECT_EQ(A[j], a.triplet.A[j]);
}

TEST(FastNormalForm, BasisElementIsUnitVector) {
  BuiltTriplet b = main_triplet();
  const Triplet& t = b.triplet;
  auto base = macaulay_base(t, b.lower, b.upper);
  for (std::size_t i = 0; i < t.size(); ++i) {
    Form f = Form::monomial(t.ring.field, t.E[i], t.ring.field.one()) * t.l.pow(4);
    Vector want = zero_vector(t.ring.field, t.size());
    want[i] = t.ring.field.one();
    EXPECT_EQ(fast_normal_form(f, t, base).coordinates, want);
  }
}

TEST(FastNormalForm, ExNotRandomDegreeEightMonomials) {
  IdealPresentation I = ex_not();
  TripletOptions o;
  o.policy = DegreePolicy::certified_stable;
  BuiltTriplet b = build_triplet(I, o);
  const Triplet& t = b.triplet;
  auto base = macaulay_base(t, b.lower, b.upper);
  DegreePiece p8 = ideal_piece(I, 8);
  for (unsigned a = 0; a <= 8; ++a) {
    Form f = Form::monomial(I.ring.field, Monomial({a, 8 - a}), I.ring.field.one());
    Form got = expand(fast_normal_form(f, t, base), t);
    EXPECT_EQ(normal_form_by_degree(got, p8), normal_form_by_degree(f, p8));
  }
}

TEST(Triplet, GivenLinearFormThatFailsEverywhere) {
  IdealPresentation I = main_example();
  TripletOptions o;
  o.linear = parse_form("x - y", I.ring);  // vanishes at (1:1:0)
  o.max_degree = 6;
  EXPECT_THROW(build_triplet(I, o), NoSurjectionFound);
}

TEST(Surjection, SmallFieldExhaustiveSearchFails) {
  // Three points of P^1 over F_2: every linear form vanishes on one of them.
  IdealPresentation I = ideal({"x", "y"}, {"x^2*y + x*y^2"}, Field::prime(2));
  TripletOptions o;
  o.strategy.kind = SurjectionStrategy::Kind::exhaustive;
  o.max_degree = 6;
  EXPECT_THROW(build_triplet(I, o), NoSurjectionFound);
}

TEST(Surjection, NormalizedForms) {
  auto forms = normalized_linear_forms(Field::prime(3), 3);
  EXPECT_EQ(forms.size(), 13u);
  for (const auto& c : forms) {
    std::size_t k = 0;
    while (c[k].is_zero()) ++k;
    EXPECT_TRUE(c[k].is_one());
  }
  EXPECT_THROW(normalized_linear_forms(Field::rationals(), 2), Error);
}

TEST(Split, LeastSignificantVariableFirst) {
  MonomialOrder o = MonomialOrder::degrevlex(3);
  auto [a, b] = split_monomial(Monomial({3, 1, 2}), 3, o);
  EXPECT_EQ(b, Monomial({0, 1, 2}));
  EXPECT_EQ(a, Monomial({3, 0, 0}));
  EXPECT_THROW(split_monomial(Monomial({1, 0, 0}), 2, o), DegreeTooLow);
}

TEST(FastNormalForm, XToTheSeventeenth) {
  BuiltTriplet b = main_triplet();
  const Triplet& t = b.triplet;
  Form f = parse_form("x^17", t.ring);
  FastNormalForm nf = fast_normal_form(f, t, macaulay_base(t, b.lower, b.upper));
  EXPECT_EQ(nf.power, 16u);
  // A_x is idempotent, so x^17 reduces to x (y+z)^16.
  EXPECT_EQ(nf.coordinates, (Vector{t.ring.field.one(), t.ring.field.zero(), t.ring.field.zero()}));
  EXPECT_TRUE(oracle::in_ideal(f - expand(nf, t), main_example()));
  EXPECT_EQ(t.A[0] * t.A[0], t.A[0]);
}

TEST(FastNormalForm, SchedulesAgree) {
  BuiltTriplet b = main_triplet();
  const Triplet& t = b.triplet;
  auto base = macaulay_base(t, b.lower, b.upper);
  Form f = parse_form("x^3*y^4*z^2 - 7*x^9 + z^9", t.ring);
  EXPECT_EQ(fast_normal_form(f, t, base, PowerSchedule::binary).coordinates,
            fast_normal_form(f, t, base, PowerSchedule::linear).coordinates);
}

TEST(FastNormalForm, BaseDegreeD1) {
  IdealPresentation I = false_point();
  TripletOptions o;
  o.linear = parse_form("x + z", I.ring);
  BuiltTriplet b = build_triplet(I, o);
  const Triplet& t = b.triplet;
  auto base = macaulay_base(t, b.lower, b.upper);
  for (const char* s : {"x^5", "x^3*y*z", "z^4", "x^2*z^2 + x^4"}) {
    Form f = parse_form(s, t.ring);
    EXPECT_TRUE(oracle::in_ideal(f - expand(fast_normal_form(f, t, base), t), I)) << s;
  }
  EXPECT_THROW(fast_normal_form(parse_form("x", t.ring), t, base), DegreeTooLow);
}

TEST(FastNormalForm, GeneratorIsZero) {
  BuiltTriplet b = main_triplet();
  const Triplet& t = b.triplet;
  auto base = macaulay_base(t, b.lower, b.upper);
  for (const auto& g : main_example().generators) EXPECT_TRUE(is_zero(fast_normal_form(g, t, base).coordinates));
}

TEST(MultiplicationMatrices, DependentBasisThrows) {
  BuiltTriplet b = main_triplet();
  const Triplet& t = b.triplet;
  Form x = parse_form("x", t.ring);
  EXPECT_THROW(multiplication_matrices({x, x, parse_form("y", t.ring)}, t.l, b.upper), RankDeficientBasis);
}
