#include <gtest/gtest.h>

#include "liedeform/exact/branch.hpp"
#include "liedeform/exact/linalg.hpp"
#include "liedeform/exact/poly.hpp"
#include "oracles.hpp"

using namespace liedeform;

TEST(Rational, ParsesAndCanonicalizes) {
  EXPECT_EQ(parse_rational("6/-4"), make_rational(-3, 2));
  EXPECT_EQ(parse_rational("+7"), Rational(7));
  EXPECT_EQ(to_string(parse_rational("10/4")), "5/2");
  EXPECT_THROW(parse_rational("1/0"), ParseError);
  EXPECT_THROW(parse_rational("abc"), ParseError);
  EXPECT_THROW(parse_rational(""), ParseError);
}

TEST(Rational, SquareRootOnlyWhenExact) {
  EXPECT_EQ(rational_sqrt(make_rational(9, 4)), make_rational(3, 2));
  EXPECT_FALSE(rational_sqrt(Rational(2)).has_value());
  EXPECT_FALSE(rational_sqrt(Rational(-1)).has_value());
}

TEST(Poly, ArithmeticCancelsExactly) {
  Poly x = pvar("x"), y = pvar("y");
  Poly p = (x + y) * (x - y);
  EXPECT_EQ(p, x * x - y * y);
  EXPECT_TRUE((p - x * x + y * y).is_zero());
  EXPECT_EQ(p.degree(), 2u);
  EXPECT_EQ(poly_eval(p, {{"x", Rational(3)}, {"y", make_rational(1, 2)}}), make_rational(35, 4));
  EXPECT_THROW(poly_eval(p, {{"x", Rational(1)}}), MissingVariable);
}

TEST(Poly, SubstitutionAndPartialEvaluation) {
  Poly x = pvar("x"), y = pvar("y"), z = pvar("z");
  Poly p = x * y + z;
  EXPECT_EQ(substitute(p, std::map<std::string, Poly>{{"x", y + Poly(1)}}), y * y + y + z);
  EXPECT_EQ(partial_eval(p, {{"y", Rational(2)}}), Poly(2) * x + z);
}

TEST(Poly, PrintsDegreeFirst) {
  Poly x = pvar("x");
  EXPECT_EQ((Poly(2) - x * x + make_rational(1, 2) * x).to_string(), "-x^2 + 1/2*x + 2");
  EXPECT_EQ(Poly().to_string(), "0");
}

TEST(Poly, FactorsProductsOfLinearForms) {
  Poly a = pvar("a"), b = pvar("b");
  auto f = factor_as_linear_product((a + b) * (a - Poly(2) * b));
  ASSERT_TRUE(f.has_value());
  EXPECT_EQ(f->unit * f->first * f->second, (a + b) * (a - Poly(2) * b));
  EXPECT_FALSE(factor_as_linear_product(a * a + b * b).has_value());
  EXPECT_THROW(factor_as_linear_product(a * a * a), DegreeTooHigh);
}

TEST(Linalg, InverseAndSingularity) {
  QMat m(3, 3);
  m(0, 0) = 2;
  m(0, 1) = 1;
  m(1, 1) = make_rational(1, 3);
  m(2, 0) = -1;
  m(2, 2) = 5;
  EXPECT_EQ(m * inverse(m), QMat::identity(3));
  QMat s(2, 2);
  s(0, 0) = 1;
  s(0, 1) = 2;
  s(1, 0) = 2;
  s(1, 1) = 4;
  EXPECT_THROW(inverse(s), SingularMatrix);
}

TEST(Linalg, RankAgreesWithBareissOracle) {
  std::mt19937 rng(1);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t rows = 3 + trial % 5, cols = 4 + trial % 3;
    oracle::Dense dense(rows, std::vector<oracle::Q>(cols));
    std::vector<SparseRow> sparse;
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c < cols; ++c) dense[r][c] = (rng() % 3 == 0) ? oracle::random_rational(rng) : 0;
      if (r % 4 == 3) dense[r] = dense[r - 1];  // force dependencies
      sparse.push_back(to_sparse(dense[r]));
    }
    EXPECT_EQ(rank(sparse, cols), oracle::rank(dense)) << "trial " << trial;
  }
}

TEST(Linalg, NullspaceIsAnnihilated) {
  std::vector<SparseRow> rows{to_sparse({1, 2, 0, -1}), to_sparse({0, 1, 1, 1}), to_sparse({1, 3, 1, 0})};
  Echelon e = rref(rows, 4);
  EXPECT_EQ(e.rank(), 2u);
  auto ns = e.nullspace();
  ASSERT_EQ(ns.size(), 2u);
  for (auto& v : ns)
    for (auto& r : rows) {
      Rational dot = 0;
      for (auto& [c, x] : r) dot += x * sparse_at(v, c);
      EXPECT_EQ(dot, 0);
    }
}

TEST(BranchSolver, SplitsProductsIntoComponents) {
  Poly a = pvar("ba"), b = pvar("bb"), c = pvar("bc");
  BranchSolver s;
  auto branches = s.solve({a * b, a * c});
  // a = 0, or b = c = 0
  ASSERT_EQ(branches.size(), 2u);
  for (auto& br : branches) {
    EXPECT_TRUE(br.resolved());
    EXPECT_TRUE(br.apply(a * b).is_zero());
    EXPECT_TRUE(br.apply(a * c).is_zero());
  }
}

TEST(BranchSolver, RejectsCubics) {
  Poly a = pvar("ba");
  BranchSolver s;
  EXPECT_THROW(s.solve({a * a * a}), DegreeTooHigh);
}
