#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "projzero/linalg.hpp"

using namespace projzero;

namespace {

Field Q = Field::rationals();

Matrix random_rank(const Field& f, std::size_t n, std::size_t r, std::mt19937_64& rng) {
  Matrix a = oracle::random_matrix(f, n, r, rng, 3);
  Matrix b = oracle::random_matrix(f, r, n, rng, 3);
  return a * b;
}

}  // namespace

TEST(Rref, SmallExample) {
  Matrix m = Matrix::from_ints(Q, {{0, 2, 4}, {1, 1, 1}, {2, 4, 6}});
  Echelon e = rref(m);
  EXPECT_EQ(e.rank, 2u);
  EXPECT_EQ(e.pivots, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(e.reduced, Matrix::from_ints(Q, {{1, 0, -1}, {0, 1, 2}, {0, 0, 0}}));
}

TEST(Rref, RankMatchesOracle) {
  std::mt19937_64 rng(11);
  for (Field f : {Q, Field::prime(7), Field::prime(32003)}) {
    for (int trial = 0; trial < 40; ++trial) {
      std::size_t n = 2 + rng() % 6, r = rng() % (n + 1);
      Matrix m = r ? random_rank(f, n, r, rng) : Matrix(f, n, n);
      EXPECT_EQ(rank(m), oracle::rank(m));
    }
  }
}

TEST(Rref, ReferenceAgrees) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 30; ++trial) {
    Matrix m = oracle::random_matrix(Q, 3 + rng() % 5, 3 + rng() % 5, rng, 4);
    Echelon a = rref(m), b = reference::rref(m);
    EXPECT_EQ(a.reduced, b.reduced);
    EXPECT_EQ(a.pivots, b.pivots);
  }
}

TEST(Kernel, VectorsAreAnnihilatedAndIndependent) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t n = 3 + rng() % 4, r = 1 + rng() % n;
    Matrix m = random_rank(Q, n, r, rng);
    auto ker = kernel(m);
    EXPECT_EQ(ker.size(), n - oracle::rank(m));
    for (const auto& v : ker) EXPECT_TRUE(is_zero(m.apply(v)));
    if (!ker.empty()) EXPECT_EQ(oracle::rank(ker), ker.size());
  }
}

TEST(Inverse, ProductIsIdentity) {
  std::mt19937_64 rng(14);
  for (Field f : {Q, Field::prime(7)}) {
    int done = 0;
    while (done < 20) {
      Matrix m = oracle::random_matrix(f, 4, 4, rng, 4);
      if (oracle::determinant(m).is_zero()) {
        EXPECT_THROW(inverse(m), std::domain_error);
        continue;
      }
      EXPECT_EQ(m * inverse(m), Matrix::identity(f, 4));
      ++done;
    }
  }
}

TEST(SolveInRowspace, GreedyCoefficients) {
  Matrix rows = Matrix::from_ints(Q, {{1, 0, 1}, {2, 0, 2}, {0, 1, 0}});
  auto c = solve_in_rowspace(Vector{Q.from_int(3), Q.from_int(5), Q.from_int(3)}, rows);
  ASSERT_TRUE(c);
  EXPECT_EQ(*c, (Vector{Q.from_int(3), Q.zero(), Q.from_int(5)}));
  EXPECT_FALSE(solve_in_rowspace(Vector{Q.one(), Q.zero(), Q.zero()}, rows));
}

TEST(CharPoly, MatchesDeterminantOracle) {
  std::mt19937_64 rng(15);
  for (Field f : {Q, Field::prime(7)}) {
    for (int trial = 0; trial < 20; ++trial) {
      std::size_t n = 1 + rng() % 5;
      Matrix m = oracle::random_matrix(f, n, n, rng, 4);
      Polynomial1 p = char_poly(m);
      ASSERT_EQ(p.size(), n + 1);
      EXPECT_TRUE(p.back().is_one());
      for (int t = -3; t <= 3; ++t) {
        Scalar x = f.from_int(t);
        Matrix shifted = Matrix::identity(f, n).scaled(x) - m;
        EXPECT_EQ(evaluate(p, x), oracle::determinant(shifted));
      }
    }
  }
}

TEST(Roots, RationalRootTest) {
  // (t - 1/2)^2 (t + 3) (t^2 + 1) times 4
  Polynomial1 p{Q.from_int(3), Q.from_int(-11), Q.from_int(11), Q.from_int(-7), Q.from_int(8), Q.from_int(4)};
  RootReport r = roots_in_field(p, Q);
  ASSERT_EQ(r.roots.size(), 2u);
  EXPECT_EQ(r.roots[0].first, Q.from_int(-3));
  EXPECT_EQ(r.roots[0].second, 1u);
  EXPECT_EQ(r.roots[1].first, Q.from_rational(1, 2));
  EXPECT_EQ(r.roots[1].second, 2u);
  EXPECT_EQ(r.residual_degree, 2u);
  EXPECT_TRUE(r.incomplete_factorization());
}

TEST(Roots, ZeroRootAndConstant) {
  Polynomial1 p{Q.zero(), Q.zero(), Q.one()};
  RootReport r = roots_in_field(p, Q);
  ASSERT_EQ(r.roots.size(), 1u);
  EXPECT_EQ(r.roots[0].second, 2u);
  EXPECT_EQ(roots_in_field(Polynomial1{Q.one()}, Q).roots.size(), 0u);
}

TEST(Roots, PrimeFieldsSmallAndLarge) {
  for (std::uint64_t p : {7ULL, 65537ULL, 2147483647ULL}) {
    Field f = Field::prime(p);
    std::vector<Scalar> rs{f.from_int(2), f.from_int(5), f.from_int(5), f.from_int(-1)};
    Polynomial1 poly{f.one()};
    for (const auto& r : rs) {
      Polynomial1 next(poly.size() + 1, f.zero());
      for (std::size_t i = 0; i < poly.size(); ++i) {
        next[i + 1] += poly[i];
        next[i] -= r * poly[i];
      }
      poly = next;
    }
    // times t^2 + t + 3, irreducible over GF(7)
    Polynomial1 q{f.from_int(3), f.one(), f.one()};
    Polynomial1 full(poly.size() + 2, f.zero());
    for (std::size_t i = 0; i < poly.size(); ++i)
      for (std::size_t j = 0; j < q.size(); ++j) full[i + j] += poly[i] * q[j];
    RootReport r = roots_in_field(full, f);
    std::size_t total = 0;
    for (const auto& [root, mult] : r.roots) {
      EXPECT_TRUE(evaluate(full, root).is_zero());
      EXPECT_EQ(mult, root_multiplicity(full, root));
      total += mult;
    }
    EXPECT_EQ(total + r.residual_degree, 6u);
    EXPECT_EQ(root_multiplicity(full, f.from_int(5)), 2u);
    if (p == 7) {
      EXPECT_EQ(r.residual_degree, 2u);
    }
  }
}

TEST(Eigenspace, DimensionMatchesOracle) {
  Matrix m = Matrix::from_ints(Q, {{2, 0, 0}, {0, 2, 0}, {0, 0, 3}});
  EXPECT_EQ(eigenspace(m, Q.from_int(2)).size(), 2u);
  EXPECT_EQ(eigenspace(m, Q.from_int(3)).size(), 1u);
  EXPECT_TRUE(eigenspace(m, Q.from_int(5)).empty());
}

TEST(SyntheticDivision, RemainderIsValue) {
  Polynomial1 p{Q.from_int(-6), Q.from_int(11), Q.from_int(-6), Q.one()};
  auto [quot, rem] = synthetic_division(p, Q.from_int(4));
  EXPECT_EQ(rem, evaluate(p, Q.from_int(4)));
  EXPECT_EQ(quot.size(), 3u);
}

TEST(PaperMatrices, RanksAndKernels) {
  Matrix Mx = Matrix::from_ints(Q, {{1, -2, 1}, {1, -1, 0}, {0, -1, 1}});
  Matrix My = Matrix::from_ints(Q, {{1, -1, 0}, {1, 0, 0}, {0, 1, 0}});
  Matrix Mz = Matrix::from_ints(Q, {{0, -1, 1}, {0, 1, 0}, {0, 0, 1}});
  EXPECT_EQ(rank(Mx), 2u);
  EXPECT_EQ(kernel(Mx).size(), 1u);
  EXPECT_EQ(rank(My + Mz), 3u);
  EXPECT_TRUE(kernel(Matrix::identity(Q, 3)).empty());
  EXPECT_EQ(kernel(Matrix(Q, 2, 2)).size(), 2u);
  Echelon id = rref(Matrix::identity(Q, 3));
  EXPECT_EQ(id.pivots, (std::vector<std::size_t>{0, 1, 2}));
}

TEST(PaperMatrices, EigenstructureOfAx) {
  Matrix Ax = Matrix::from_ints(Q, {{2, 0, 0}, {1, 1, -1}, {1, -1, 1}}).scaled(Q.from_rational(mpq_class(1, 2)));
  RootReport r = roots_in_field(char_poly(Ax), Q);
  ASSERT_EQ(r.roots.size(), 2u);
  EXPECT_EQ(r.roots[0], std::make_pair(Q.zero(), std::size_t{1}));
  EXPECT_EQ(r.roots[1], std::make_pair(Q.one(), std::size_t{2}));
  auto zero = eigenspace(Ax, Q.zero());
  ASSERT_EQ(zero.size(), 1u);
  EXPECT_TRUE(zero[0][0].is_zero());
  EXPECT_EQ(zero[0][1], zero[0][2]);
}

TEST(CharPoly, Identity) {
  EXPECT_EQ(char_poly(Matrix::identity(Q, 2)), (Polynomial1{Q.one(), Q.from_int(-2), Q.one()}));
  EXPECT_EQ(roots_in_field(char_poly(Matrix::identity(Q, 2)), Q).roots[0].second, 2u);
  EXPECT_TRUE(roots_in_field(Polynomial1{Q.one(), Q.zero(), Q.one()}, Q).incomplete_factorization());
}

TEST(CharPoly, LargeMatrixOverSmallPrime) {
  // n >= p, where trace recurrences would divide by p.
  std::mt19937_64 rng(16);
  Field f = Field::prime(3);
  Matrix m = oracle::random_matrix(f, 6, 6, rng);
  Polynomial1 p = char_poly(m);
  Matrix acc(f, 6, 6);
  Matrix power = Matrix::identity(f, 6);
  for (const auto& c : p) {
    acc = acc + power.scaled(c);
    power = power * m;
  }
  EXPECT_TRUE(acc.is_zero());
}

TEST(Rref, IdempotentAndTransposeRank) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    Matrix m = random_rank(Q, 5, 1 + rng() % 4, rng);
    Echelon e = rref(m);
    EXPECT_EQ(rref(e.reduced).reduced, e.reduced);
    EXPECT_EQ(rank(m), rank(m.transpose()));
  }
}

TEST(Eigenspace, DiagonalizableDimensionsSum) {
  std::mt19937_64 rng(18);
  for (int trial = 0; trial < 20; ++trial) {
    Matrix T = oracle::random_matrix(Q, 4, 4, rng, 3);
    if (oracle::determinant(T).is_zero()) continue;
    Matrix D(Q, 4, 4);
    for (std::size_t i = 0; i < 4; ++i) D(i, i) = Q.from_int(static_cast<long long>(rng() % 3));
    Matrix M = T * D * inverse(T);
    RootReport r = roots_in_field(char_poly(M), Q);
    std::size_t total = 0;
    for (const auto& [lambda, mult] : r.roots) {
      auto space = eigenspace(M, lambda);
      EXPECT_EQ(space.size(), mult);
      for (const auto& v : space) {
        Vector mv = M.apply(v);
        for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(mv[i], lambda * v[i]);
      }
      total += space.size();
    }
    EXPECT_EQ(total, 4u);
  }
}

TEST(SolveInRowspace, RandomRoundTrip) {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 20; ++trial) {
    Matrix rows = oracle::random_matrix(Q, 3, 6, rng, 4);
    if (rank(rows) < 3) continue;
    Vector v(6, Q.zero());
    for (std::size_t k = 0; k < 6; ++k) v[k] = Q.from_int(2) * rows(0, k) - rows(1, k);
    auto c = solve_in_rowspace(v, rows);
    ASSERT_TRUE(c);
    EXPECT_EQ(*c, (Vector{Q.from_int(2), Q.from_int(-1), Q.zero()}));
    auto unit = solve_in_rowspace(rows.row_vector(0), rows);
    EXPECT_EQ(*unit, (Vector{Q.one(), Q.zero(), Q.zero()}));
  }
}
