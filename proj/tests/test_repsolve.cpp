#include <gtest/gtest.h>

#include "liedeform/repsolve.hpp"
#include "oracles.hpp"

using namespace liedeform;

namespace {

std::vector<QMat> evaluate(const Representation& rep, const std::map<std::string, Rational>& at) {
  std::vector<QMat> out;
  for (auto& m : rep.matrices) {
    QMat q(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c) q(r, c) = poly_eval(m(r, c), at);
    out.push_back(q);
  }
  return out;
}

}  // namespace

TEST(Representation, UndeformedPoincareIsARepresentation) {
  auto& e = get_algebra("poincare");
  Representation rep;
  rep.generators = e.generator_order;
  for (auto& m : base_representation(e)) rep.matrices.push_back(to_poly(m));
  EXPECT_TRUE(verify_representation(rep, e.algebra).empty());
  EXPECT_TRUE(rep.affine());
}

TEST(Representation, DeSitterRecoveredAtSeveralRadii) {
  auto& e = get_algebra("poincare");
  auto& fx = e.family("de-sitter").representations.front();
  for (Rational t : {Rational(1), Rational(-2), make_rational(5, 3)}) {
    auto c = classify_family(e, "de-sitter", std::map<std::string, Rational>{{"t", t}});
    ASSERT_TRUE(c.failure.empty());
    EXPECT_EQ(c.classes.size(), 1u);
    auto want = evaluate(fixture_representation(e, fx), {{"t", t}});
    bool found = false;
    for (auto& s : c.search.samples) found = found || s == want;
    EXPECT_TRUE(found) << "t = " << t.get_str();
  }
}

TEST(Representation, AffineOnlyPoincareHasNoDeformedSolution) {
  auto c = classify_family(get_algebra("poincare"), "de-sitter", std::nullopt, true);
  EXPECT_TRUE(c.classes.empty());
}

TEST(Representation, SamplesAreFaithfulAndSatisfyTheAlgebra) {
  auto& e = get_algebra("isim");
  for (const char* fam : {"disim", "xdisim2"}) {
    auto c = classify_family(e, fam);
    ASSERT_FALSE(c.search.samples.empty()) << fam;
    LieAlgebra alg = deform_algebra(e.algebra, e.deformation(fam), c.assignment);
    for (auto& s : c.search.samples) {
      EXPECT_TRUE(is_faithful(s));
      Representation rep;
      rep.generators = e.generator_order;
      for (auto& m : s) rep.matrices.push_back(to_poly(m));
      EXPECT_TRUE(verify_representation(rep, alg).empty()) << fam;
    }
  }
}

TEST(GaugeMap, ConjugateRepresentationsAreFound) {
  auto& e = get_algebra("iso3");
  auto base = base_representation(e);
  QMat t = QMat::identity(5);
  t(0, 3) = make_rational(1, 2);
  t(4, 1) = 3;
  QMat ti = inverse(t);
  std::vector<QMat> moved;
  for (auto& m : base) moved.push_back(t * m * ti);
  auto g = find_gauge_map(base, moved);
  ASSERT_TRUE(g.has_value());
  for (std::size_t k = 0; k < base.size(); ++k) EXPECT_EQ(g->t * base[k] * inverse(g->t), moved[k]);
}

TEST(GaugeMap, InequivalentRepresentationsAreSeparated) {
  auto& e = get_algebra("iso3");
  auto a = base_representation(e), b = a;
  for (auto& m : b)  // doubled spectrum for every rotation
    for (std::size_t r = 0; r < 5; ++r)
      for (std::size_t c = 0; c < 5; ++c) m(r, c) *= 2;
  EXPECT_FALSE(find_gauge_map(a, b).has_value());
  auto classes = count_inequivalent({a, b, a});
  EXPECT_EQ(classes.size(), 2u);
}

TEST(Sampling, FindsRationalPointsOnConics) {
  Poly x = pvar("sx"), y = pvar("sy");
  std::vector<Poly> cons{x * x + y * y - Poly(25)};
  std::optional<std::map<std::string, Rational>> p;
  for (std::size_t a = 0; a < 10 && !p; ++a) p = sample_point(cons, {"sx", "sy"}, a);
  ASSERT_TRUE(p.has_value());
  EXPECT_EQ(poly_eval(cons[0], *p), 0);
}

TEST(Classification, TableCountsThatTheSolverReproduces) {
  const std::vector<std::pair<std::string, std::string>> rows{
      {"isim", "disim"}, {"isim", "xdisim1"}, {"isim", "xdisim2"}, {"ihom", "dihom1"}, {"ihom", "dihom2"},
      {"te2", "dte1"},   {"iso3", "diso31"},  {"iso3", "diso32"},  {"iso21", "diso211"}};
  for (auto& [alg, fam] : rows) {
    auto& e = get_algebra(alg);
    auto c = classify_family(e, fam);
    EXPECT_EQ(c.classes.size(), e.family(fam).table_rep_count) << fam;
    EXPECT_EQ(c.search.unsampled, 0u) << fam;
  }
}

TEST(Classification, Diso212HasAThirdClassBeyondTheTable) {
  auto& e = get_algebra("iso21");
  auto c = classify_family(e, "diso212");
  EXPECT_EQ(c.classes.size(), 3u);
  EXPECT_EQ(e.family("diso212").table_rep_count, 2u);
}

TEST(Classification, Dte2aRootsArePointwiseInequivalent) {
  auto& e = get_algebra("te2");
  auto c = classify_family(e, "dte2a");
  ASSERT_GE(c.classes.size(), 2u);
  // the trace of rho(p_t) is a conjugation invariant and separates the classes
  std::set<std::string> traces;
  std::size_t pt = e.algebra.index("p_t");
  for (auto& cls : c.classes) {
    auto& m = c.search.samples[cls.front()][pt];
    Rational tr = 0;
    for (std::size_t i = 0; i < 5; ++i) tr += m(i, i);
    traces.insert(tr.get_str());
  }
  EXPECT_GE(traces.size(), 2u);
}
