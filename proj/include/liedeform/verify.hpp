#pragma once

#include <array>
#include <chrono>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "liedeform/report.hpp"

namespace liedeform {

struct CheckResult {
  std::string id;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

namespace verify_detail {

inline Rational random_rational(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-6, 6), den(1, 5);
  return make_rational(num(rng), den(rng));
}

inline QMat evaluate(const PMat& m, const std::map<std::string, Rational>& at) {
  QMat q(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) q(r, c) = poly_eval(m(r, c), at);
  return q;
}

inline std::vector<QMat> evaluate(const RepresentationFixture& r, const CatalogEntry& e,
                                  const std::map<std::string, Rational>& at) {
  std::vector<QMat> out;
  for (auto& m : fixture_representation(e, r).matrices) out.push_back(evaluate(m, at));
  return out;
}

// Plain dense Gaussian elimination; intentionally shares nothing with the
// sparse echelon code it cross-checks.
inline std::size_t dense_rank(std::vector<std::vector<Rational>> m) {
  std::size_t rank = 0, rows = m.size(), cols = rows ? m[0].size() : 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (m[r][c] == 0) continue;
      Rational f = m[r][c] / m[rank][c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

/// (cocycle dimension, coboundary dimension) by building the two linear maps
/// column by column on elementary cochains.
inline std::pair<std::size_t, std::size_t> dense_cohomology(const LieAlgebra& alg) {
  QTensor c = alg.numeric();
  std::size_t n = alg.dim();
  std::vector<std::array<std::size_t, 3>> cochains;  // (k, i, j), i < j
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) cochains.push_back({k, i, j});
  auto jacobi_image = [&](const QTensor& a) {
    std::vector<Rational> out;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        for (std::size_t k = j + 1; k < n; ++k)
          for (std::size_t m = 0; m < n; ++m) {
            Rational s(0);
            std::size_t cyc[3][3] = {{i, j, k}, {j, k, i}, {k, i, j}};
            for (auto& t : cyc)
              for (std::size_t l = 0; l < n; ++l)
                s += a(l, t[0], t[1]) * c(m, l, t[2]) + c(l, t[0], t[1]) * a(m, l, t[2]);
            out.push_back(s);
          }
    return out;
  };
  // columns of the linearized Jacobi map, stored as rows of its transpose
  std::vector<std::vector<Rational>> jac;
  for (auto& [k, i, j] : cochains) {
    QTensor a(n);
    a(k, i, j) = 1;
    a(k, j, i) = -1;
    jac.push_back(jacobi_image(a));
  }
  std::size_t cocycles = cochains.size() - (jac.empty() || jac[0].empty() ? 0 : dense_rank(jac));
  std::vector<std::vector<Rational>> cob;
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) {
      std::vector<Rational> col;
      for (auto& [k, i, j] : cochains) {
        // phi = E_pq: phi(e_q) = e_p
        Rational v(0);
        if (k == p) v += c(q, i, j);
        if (i == q) v -= c(k, p, j);
        if (j == q) v -= c(k, i, p);
        col.push_back(v);
      }
      cob.push_back(std::move(col));
    }
  return {cocycles, cob.empty() || cob[0].empty() ? 0 : dense_rank(cob)};
}

inline LieAlgebra synthetic_so3() {
  LieAlgebra a("so3_structure", {"l_1", "l_2", "l_3"});
  a.add_bracket("l_1", "l_2", "l_3", Poly(1));
  a.add_bracket("l_2", "l_3", "l_1", Poly(1));
  a.add_bracket("l_3", "l_1", "l_2", Poly(1));
  return a;
}

inline double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

inline std::map<std::string, Rational> fixture_point(const FamilyFixture& f, const RepresentationFixture& r) {
  std::map<std::string, Rational> at = f.rep_sample;
  for (auto& [k, v] : r.specialization) at[k] = poly_eval(v, at);
  return at;
}

}  // namespace verify_detail

inline CheckResult check_poincare_uniqueness() {
  using namespace verify_detail;
  auto t0 = std::chrono::steady_clock::now();
  CheckResult res{"1", "Poincare uniqueness", true, "", 0};
  auto& e = get_algebra("poincare");
  auto q = nontrivial_directions(e.algebra);
  std::ostringstream os;
  os << "quotient " << q.dimension;
  if (q.dimension != 1) res.passed = false;
  auto& f = e.family("de-sitter");
  for (Rational t : {Rational(1), Rational(-2), make_rational(5, 3)}) {
    auto c = classify_family(e, "de-sitter", std::map<std::string, Rational>{{"t", t}});
    auto expect = evaluate(f.representations.front(), e, {{"t", t}});
    bool found = false;
    for (auto& s : c.search.samples) found = found || s == expect;
    os << "; t=" << t.get_str() << ": " << c.classes.size() << " class" << (found ? ", matrices match" : ", no match");
    if (c.classes.size() != 1 || !found) res.passed = false;
  }
  res.seconds = seconds_since(t0);
  if (res.seconds >= 5) res.passed = false;
  res.detail = os.str();
  return res;
}

inline CheckResult check_isim_dimension() {
  auto t0 = std::chrono::steady_clock::now();
  auto q = nontrivial_directions(get_algebra("isim").algebra);
  CheckResult res{"2", "ISIM cocycle dimension 57", false, "", 0};
  res.seconds = verify_detail::seconds_since(t0);
  res.passed = (q.cocycle_dimension == 57 || q.dimension == 57) && res.seconds < 30;
  res.detail = "cocycles " + std::to_string(q.cocycle_dimension) + ", coboundaries " +
               std::to_string(q.coboundary_dimension) + ", quotient " + std::to_string(q.dimension);
  return res;
}

inline CheckResult check_disim_ideal() {
  auto t0 = std::chrono::steady_clock::now();
  auto& e = get_algebra("isim");
  auto ours = polynomial_span(quadratic_obstruction(e.cocycle).polynomials());
  auto printed = polynomial_span(e.printed_constraints);
  CheckResult res{"3", "DISIM constraint ideal", ours == printed, "", 0};
  res.detail = std::to_string(ours.size()) + " independent conditions, displayed " + std::to_string(printed.size());
  res.seconds = verify_detail::seconds_since(t0);
  return res;
}

inline CheckResult check_family_enumeration() {
  auto t0 = std::chrono::steady_clock::now();
  CheckResult res{"4", "Family enumeration and representation counts", true, "", 0};
  const std::map<std::string, std::size_t> rows{{"poincare", 1}, {"isim", 3}, {"ihom", 2},
                                                {"te2", 5},      {"iso3", 2}, {"iso21", 2}};
  std::ostringstream os;
  for (auto& name : catalog_names()) {
    auto& e = get_algebra(name);
    auto table = e.table_rows();
    if (table.size() != rows.at(name)) {
      res.passed = false;
      os << name << ": " << table.size() << " rows; ";
    }
    EnumerationOptions opt;
    opt.nontriviality = e.nontriviality;
    auto found = enumerate_families(e.cocycle, quadratic_obstruction(e.cocycle), opt);
    for (auto& f : found) {
      bool match = false;
      for (auto& top : e.top_level) match = match || same_family(e.cocycle, f.substitutions, e.family(top).substitutions);
      if (!match) {
        res.passed = false;
        os << name << ": enumerated family without catalog match; ";
      }
    }
    for (auto& top : e.top_level) {
      bool inside = false;
      for (auto& f : found) inside = inside || family_inside(e.cocycle, e.family(top).substitutions, f.substitutions);
      if (!inside) {
        res.passed = false;
        os << name << "/" << top << " outside every enumerated family; ";
      }
    }
    for (auto& label : table) {
      auto c = classify_family(e, label);
      std::size_t want = e.family(label).table_rep_count;
      if (c.classes.size() != want || c.search.unsampled) {
        res.passed = false;
        os << label << ": " << c.classes.size();
        if (c.search.unsampled) os << " (+" << c.search.unsampled << " unresolved)";
        os << " vs " << want << "; ";
      }
    }
  }
  res.detail = res.passed ? "all counts match" : os.str();
  res.seconds = verify_detail::seconds_since(t0);
  return res;
}

inline CheckResult check_exact_closure(std::size_t samples = 100) {
  auto t0 = std::chrono::steady_clock::now();
  std::mt19937 rng(2024);
  std::size_t violations = 0, checks = 0;
  for (auto& name : catalog_names()) {
    auto& e = get_algebra(name);
    for (auto& f : e.families) {
      auto d = e.deformation(f.label);
      for (std::size_t s = 0; s < samples; ++s) {
        std::map<std::string, Rational> at;
        for (auto& p : d.free_parameters) at[p] = verify_detail::random_rational(rng);
        ++checks;
        try {
          (void)deform_algebra(e.algebra, d, at);
        } catch (const JacobiFailure&) {
          ++violations;
        }
      }
    }
  }
  CheckResult res{"5", "Exact closure", violations == 0, "", 0};
  res.detail = std::to_string(violations) + " violations in " + std::to_string(checks) + " assignments";
  res.seconds = verify_detail::seconds_since(t0);
  return res;
}

inline CheckResult check_gauge_maps() {
  using namespace verify_detail;
  auto t0 = std::chrono::steady_clock::now();
  CheckResult res{"6", "Gauge equivalences", true, "", 0};
  std::ostringstream os;
  std::size_t count = 0;
  const std::vector<Rational> values{make_rational(1, 3), make_rational(-2, 5), Rational(2)};
  for (auto& name : catalog_names()) {
    auto& e = get_algebra(name);
    for (auto& f : e.families)
      for (auto& g : f.gauges) {
        ++count;
        auto& r = find_fixture(f, g.representation);
        auto base = fixture_point(f, r);
        auto rho = [&](const Rational& v) {
          auto at = base;
          at[g.symbol] = v;
          return evaluate(r, e, at);
        };
        auto tmat = [&](const Rational& a, const Rational& b) { return evaluate(g.matrix(Poly(a), Poly(b)), base); };
        bool ok = true;
        for (std::size_t i = 0; i < values.size(); ++i)
          for (std::size_t j = 0; j < values.size(); ++j) {
            if (i == j) continue;
            auto a = rho(values[i]), b = rho(values[j]);
            QMat t = tmat(values[i], values[j]), ti;
            try {
              ti = inverse(t);
            } catch (const SingularMatrix&) {
              ok = false;
              continue;
            }
            for (std::size_t k = 0; k < a.size(); ++k) ok = ok && t * a[k] * ti == b[k];
            auto found = find_gauge_map(a, b);
            if (!found) {
              ok = false;
              continue;
            }
            // the displayed T must lie in the solved space of intertwiners
            std::vector<SparseRow> span;
            for (auto& s : found->solution_space) {
              std::vector<Rational> flat;
              for (std::size_t x = 0; x < s.rows(); ++x)
                for (std::size_t y = 0; y < s.cols(); ++y) flat.push_back(s(x, y));
              span.push_back(to_sparse(flat));
            }
            std::size_t before = rank(span, 25);
            std::vector<Rational> flat;
            for (std::size_t x = 0; x < 5; ++x)
              for (std::size_t y = 0; y < 5; ++y) flat.push_back(t(x, y));
            span.push_back(to_sparse(flat));
            ok = ok && rank(span, 25) == before;
          }
        // composition v0 -> v1 -> v2
        auto a = rho(values[0]), c = rho(values[2]);
        QMat comp = tmat(values[1], values[2]) * tmat(values[0], values[1]);
        QMat ci = inverse(comp);
        for (std::size_t k = 0; k < a.size(); ++k) ok = ok && comp * a[k] * ci == c[k];
        os << f.label << "/" << g.symbol << (ok ? " ok" : " FAILED") << (g.corrected ? " (corrected entry)" : "") << "; ";
        res.passed = res.passed && ok;
      }
  }
  if (count < 2) res.passed = false;
  res.detail = os.str();
  res.seconds = seconds_since(t0);
  return res;
}

inline CheckResult check_closed_forms() {
  auto t0 = std::chrono::steady_clock::now();
  CheckResult res{"7", "Closed-form group elements", true, "", 0};
  std::ostringstream os;
  double worst = 0, worst_law = 0;
  for (auto& name : catalog_names()) {
    auto& e = get_algebra(name);
    for (auto& f : e.families)
      for (auto& d : f.closed_forms) {
        auto g = check_closed_form(e, f, d);
        worst = std::max(worst, g.max_deviation);
        if (!g.verified) {
          res.passed = false;
          os << d.family << "/" << d.generator << " deviates " << g.max_deviation << "; ";
        }
        auto& r = find_fixture(f, d.representation);
        auto rep = fixture_representation(e, r);
        auto at = closed_form_assignment(e, f, r);
        std::size_t gi = e.algebra.index(d.generator);
        for (auto [a, b] : {std::pair{0.5, -0.2}, {1.0, 2.0}, {-0.3, 1.0}})
          worst_law = std::max(worst_law, subgroup_law_check(rep, gi, a, b, at));
      }
  }
  if (worst_law >= 1e-11) res.passed = false;
  // R_z(2 pi) in the DISIM dilatation representation is a pure dilatation
  auto& e = get_algebra("isim");
  auto& f = e.family("disim");
  auto& r = find_fixture(f, "dilatation");
  auto at = closed_form_assignment(e, f, r, {{"A_rt^t", 0.2}});
  auto g = exponentiate(fixture_representation(e, r), e.algebra.index("r_z"), 2 * std::numbers::pi, at);
  double expect = std::exp(2 * std::numbers::pi * 0.2), off = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) off = std::max(off, std::abs(g.matrix(i, j) - (i == j ? expect : 0.0)));
  if (off >= 1e-12 * expect) res.passed = false;
  os << "max closed-form deviation " << worst << ", subgroup law " << worst_law << ", R_z(2pi) off by " << off;
  res.detail = os.str();
  res.seconds = verify_detail::seconds_since(t0);
  return res;
}

inline CheckResult check_dilatations() {
  auto t0 = std::chrono::steady_clock::now();
  CheckResult res{"8", "Dilatation exponents", true, "", 0};
  std::ostringstream os;
  double worst = 0;
  auto run = [&](const CatalogEntry& e, const FamilyFixture& f, const std::string& rep_label,
                 const std::string& gen, const Poly& exponent, NumericAssignment overrides) {
    auto& r = find_fixture(f, rep_label);
    auto at = closed_form_assignment(e, f, r, overrides);
    auto rep = fixture_representation(e, r);
    double a = poly_eval_double(exponent, at);
    for (double th : closed_form_theta_grid()) {
      double got = dilatation_factor(exponentiate(rep, e.algebra.index(gen), th, at));
      worst = std::max(worst, std::abs(got - std::exp(th * a)));
    }
    return a;
  };
  auto& isim = get_algebra("isim");
  Poly a1 = pvar("A_1b^1"), a3 = pvar("A_bt^t");
  run(isim, isim.family("disim"), "dilatation", "b_z", a3, {{"A_bt^t", 0.3}});
  run(isim, isim.family("xdisim1"), "alpha", "b_z", a3 - a1, {{"A_1b^1", 0.3}, {"A_bt^t", 0.7}, {"alpha", -0.4}});
  run(isim, isim.family("xdisim2"), "simple", "b_z", a1 + a3, {{"A_1b^1", 0.3}, {"A_bt^t", 0.5}});
  double zero = run(isim, isim.family("xdisim2"), "simple", "b_z", a1 + a3, {{"A_1b^1", 0.3}, {"A_bt^t", -0.3}});
  res.passed = worst < 1e-11 && zero == 0;
  os << "max deviation " << worst;
  res.detail = os.str();
  res.seconds = verify_detail::seconds_since(t0);
  return res;
}

inline CheckResult check_finsler() {
  auto t0 = std::chrono::steady_clock::now();
  CheckResult res{"9", "Finsler invariance", true, "", 0};
  auto& e = get_algebra("isim");
  auto& f = e.family("disim");
  auto& r = find_fixture(f, "dilatation");
  auto rep = fixture_representation(e, r);
  std::mt19937 rng(99);
  std::uniform_real_distribution<double> u(-0.5, 0.5), w(0.05, 1.0);
  double worst = 0;
  for (double b : {0.0, 0.1, 0.25})
    for (double th : {-1.0, -0.3, 0.3, 1.0}) {
      auto at = closed_form_assignment(e, f, r, {{"A_bt^t", b}});
      auto g = exponentiate(rep, e.algebra.index("b_z"), th, at);
      for (int k = 0; k < 20; ++k) {
        Vec4 dx(0, u(rng), u(rng), u(rng));
        dx(0) = dx.tail<3>().norm() + w(rng);
        worst = std::max(worst, check_finsler_invariance(LineElementSpec{b}, g, dx));
      }
    }
  GroupElement dil;
  dil.matrix = Mat5::Identity();
  dil.matrix.topLeftCorner<4, 4>() *= std::exp(0.3);
  double control = check_finsler_invariance(LineElementSpec{0.1}, dil, Vec4(2, 0.1, -0.2, 0.5));
  res.passed = worst < 1e-10 && control > 0.01;
  res.detail = "max deviation " + std::to_string(worst) + ", dilatation control " + std::to_string(control);
  res.seconds = verify_detail::seconds_since(t0);
  return res;
}

inline CheckResult check_small_algebras() {
  auto t0 = std::chrono::steady_clock::now();
  CheckResult res{"10", "Small-instance cohomology cross-check", true, "", 0};
  auto algs = lorentz_subalgebras();
  algs.push_back(abelian_algebra(3));
  algs.push_back(verify_detail::synthetic_so3());
  std::ostringstream os;
  for (auto& a : algs) {
    if (a.dim() > 4) continue;
    auto [z, b] = verify_detail::dense_cohomology(a);
    std::size_t zs = solve_linearized_jacobi(a).dimension, bs = coboundary_space(a).dimension;
    os << a.name() << " " << zs << "/" << bs << (z == zs && b == bs ? "" : " MISMATCH") << "; ";
    if (z != zs || b != bs) res.passed = false;
  }
  res.detail = os.str();
  res.seconds = verify_detail::seconds_since(t0);
  return res;
}

inline CheckResult check_fixtures() {
  auto t0 = std::chrono::steady_clock::now();
  CheckResult res{"F", "Representation fixtures", true, "", 0};
  std::ostringstream os;
  std::size_t n = 0;
  for (auto& name : catalog_names()) {
    auto& e = get_algebra(name);
    for (auto& f : e.families)
      for (auto& r : f.representations) {
        ++n;
        auto c = check_fixture(e, f, r);
        bool affine_ok = !r.affine || fixture_representation(e, r).affine();
        if (!c.ok() || !affine_ok) {
          res.passed = false;
          os << f.label << "/" << r.label << " fails; ";
        }
      }
  }
  res.detail = std::to_string(n) + " fixtures checked. " + os.str();
  res.seconds = verify_detail::seconds_since(t0);
  return res;
}

inline std::vector<CheckResult> verify_all() {
  return {check_poincare_uniqueness(), check_isim_dimension(), check_disim_ideal(),
          check_family_enumeration(),  check_exact_closure(),  check_gauge_maps(),
          check_closed_forms(),        check_dilatations(),    check_finsler(),
          check_small_algebras(),      check_fixtures()};
}

}  // namespace liedeform
