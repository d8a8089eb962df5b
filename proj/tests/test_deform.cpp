#include <gtest/gtest.h>

#include "liedeform/catalog.hpp"
#include "oracles.hpp"

using namespace liedeform;

TEST(Cohomology, LorentzSubalgebrasMatchBruteForce) {
  for (auto& a : lorentz_subalgebras()) {
    std::vector<oracle::Mat> mats;
    for (auto& l : a.labels()) mats.push_back(oracle::generator(l));
    auto [z, b] = oracle::cohomology(oracle::structure_of(mats));
    EXPECT_EQ(solve_linearized_jacobi(a).dimension, z) << a.name();
    EXPECT_EQ(coboundary_space(a).dimension, b) << a.name();
  }
}

TEST(Cohomology, SemisimpleAlgebraIsRigid) {
  auto q = nontrivial_directions(matrix_subalgebra("so3", {"r_x", "r_y", "r_z"}));
  EXPECT_EQ(q.dimension, 0u);
  EXPECT_EQ(q.cocycle_dimension, q.coboundary_dimension);
}

TEST(Cohomology, CoboundariesAreCocycles) {
  auto alg = matrix_subalgebra("e2", {"t_1", "t_2", "r_z"});
  auto cob = coboundary_space(alg);
  QMat phi(3, 3);
  phi(0, 2) = 1;
  phi(1, 1) = make_rational(2, 3);
  QTensor d = coboundary_of(alg.numeric(), phi);
  EXPECT_TRUE(in_coboundary_span(cob, d));
  Cocycle z{alg, PTensor(3), {}};
  for (std::size_t k = 0; k < 3; ++k)
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) z.a(k, i, j) = Poly(d(k, i, j));
  EXPECT_TRUE(linearized_residuals(z).empty());
}

TEST(Cohomology, PoincareHasOneNontrivialDirection) {
  EXPECT_EQ(nontrivial_directions(get_algebra("poincare").algebra).dimension, 1u);
}

TEST(Cohomology, IsimCocycleCount) {
  auto q = nontrivial_directions(get_algebra("isim").algebra);
  EXPECT_EQ(q.cocycle_dimension, 57u);
  EXPECT_EQ(q.coboundary_dimension, 55u);
}

TEST(Obstruction, CatalogCocyclesSatisfyLinearizedJacobi) {
  for (auto& name : catalog_names()) EXPECT_TRUE(linearized_residuals(get_algebra(name).cocycle).empty()) << name;
}

TEST(Obstruction, DisimSpanMatchesDisplayedConditions) {
  auto& e = get_algebra("isim");
  auto ours = polynomial_span(quadratic_obstruction(e.cocycle).polynomials());
  EXPECT_EQ(ours, polynomial_span(e.printed_constraints));
  EXPECT_EQ(ours.size(), 3u);
}

TEST(Obstruction, PoincareObstructionVanishes) {
  EXPECT_TRUE(quadratic_obstruction(get_algebra("poincare").cocycle).polynomials().empty());
}

TEST(Families, CatalogFamiliesAreClosedExactly) {
  std::mt19937 rng(17);
  for (auto& name : catalog_names()) {
    auto& e = get_algebra(name);
    for (auto& f : e.families) {
      auto d = e.deformation(f.label);
      std::map<std::string, Rational> at;
      for (auto& p : d.free_parameters) at[p] = oracle::random_rational(rng);
      EXPECT_NO_THROW(deform_algebra(e.algebra, d, at)) << f.label;
    }
  }
}

TEST(Families, ViolatingAssignmentThrows) {
  auto& e = get_algebra("isim");
  // A_1x^z free and unrelated to A_1x^t breaks the quadratic condition
  DeformationFamily d = e.deformation("xdisim2");
  d.substitutions.erase("A_1x^z");
  d.free_parameters.push_back("A_1x^z");
  std::map<std::string, Rational> at{{"A_1b^1", Rational(1)}, {"A_rt^t", Rational(0)}, {"A_bt^t", Rational(0)},
                                     {"A_1x^z", Rational(1)}};
  EXPECT_THROW(deform_algebra(e.algebra, d, at), JacobiFailure);
  at.erase("A_1b^1");
  EXPECT_THROW(deform_algebra(e.algebra, d, at), MissingVariable);
}

TEST(Families, SameFamilyIsReflexiveAndDisimSitsInXdisim1) {
  auto& e = get_algebra("isim");
  auto& disim = e.family("disim").substitutions;
  auto& x1 = e.family("xdisim1").substitutions;
  EXPECT_TRUE(same_family(e.cocycle, x1, x1));
  EXPECT_TRUE(family_inside(e.cocycle, disim, x1));
  EXPECT_FALSE(same_family(e.cocycle, disim, x1));
}

TEST(Families, EnumerationCoversEveryCatalogFamily) {
  for (auto& name : catalog_names()) {
    auto& e = get_algebra(name);
    EnumerationOptions opt;
    opt.nontriviality = e.nontriviality;
    auto found = enumerate_families(e.cocycle, quadratic_obstruction(e.cocycle), opt);
    for (auto& top : e.top_level) {
      bool inside = false;
      for (auto& f : found) inside = inside || family_inside(e.cocycle, e.family(top).substitutions, f.substitutions);
      EXPECT_TRUE(inside) << name << "/" << top;
    }
  }
}
