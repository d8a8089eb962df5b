#include <gtest/gtest.h>

#include "liedeform/catalog.hpp"
#include "oracles.hpp"

using namespace liedeform;

namespace {

LieAlgebra so3() {
  LieAlgebra a("so3", {"l_1", "l_2", "l_3"});
  a.add_bracket("l_1", "l_2", "l_3", Poly(1));
  a.add_bracket("l_2", "l_3", "l_1", Poly(1));
  a.add_bracket("l_3", "l_1", "l_2", Poly(1));
  return a;
}

}  // namespace

TEST(LieAlgebra, BracketsAreAntisymmetric) {
  auto a = so3();
  EXPECT_TRUE(is_antisymmetric(a));
  EXPECT_EQ(bracket(a, 1, 0)[2], Poly(-1));
  EXPECT_EQ(bracket_string(a, 0, 1), "l_3");
  EXPECT_THROW(a.index("l_9"), IndexOutOfRange);
}

TEST(LieAlgebra, JacobiDetectsBrokenStructure) {
  EXPECT_TRUE(check_jacobi(so3()).empty());
  LieAlgebra bad("bad", {"a", "b", "c"});
  bad.add_bracket("a", "b", "a", Poly(1));
  bad.add_bracket("b", "c", "b", Poly(1));
  bad.add_bracket("a", "c", "b", Poly(1));
  EXPECT_FALSE(check_jacobi(bad).empty());
}

TEST(LieAlgebra, ChangeOfGeneratorsPreservesJacobi) {
  QMat m = QMat::identity(3);
  m(0, 1) = 2;
  m(2, 0) = make_rational(-1, 3);
  auto b = change_of_generators(so3(), m);
  EXPECT_TRUE(check_jacobi(b).empty());
  EXPECT_FALSE(b.structure() == so3().structure());
  // back again
  auto c = change_of_generators(b, inverse(m));
  EXPECT_EQ(c.structure(), so3().structure());
}

TEST(LieAlgebra, PoincareStructureMatchesMatrixOracle) {
  auto& e = get_algebra("poincare");
  std::vector<oracle::Mat> mats;
  for (auto& g : e.generator_order) mats.push_back(oracle::generator(g));
  auto ref = oracle::structure_of(mats);
  for (std::size_t k = 0; k < ref.n; ++k)
    for (std::size_t i = 0; i < ref.n; ++i)
      for (std::size_t j = 0; j < ref.n; ++j)
        EXPECT_EQ(e.algebra.structure()(k, i, j), Poly(ref.at(k, i, j)))
            << e.generator_order[i] << "," << e.generator_order[j] << " -> " << e.generator_order[k];
}

TEST(LieAlgebra, AffineMatricesMatchOracleGenerators) {
  for (const char* g : {"r_x", "r_y", "r_z", "b_x", "b_y", "b_z", "t_1", "t_2", "p_t", "p_x", "p_y", "p_z"}) {
    QMat m = poincare_matrix(g);
    auto o = oracle::generator(g);
    for (std::size_t r = 0; r < 5; ++r)
      for (std::size_t c = 0; c < 5; ++c) EXPECT_EQ(m(r, c), o[r][c]) << g;
  }
  EXPECT_THROW(poincare_matrix("q_t"), UnknownAlgebra);
}
