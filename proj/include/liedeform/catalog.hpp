#pragma once

#include <algorithm>
#include <functional>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "liedeform/deform.hpp"
#include "liedeform/exact/linalg.hpp"
#include "liedeform/liealg.hpp"

namespace liedeform {

inline constexpr const char* kCatalogVersion = "1.0.0";

// Coordinates of the affine representation: (t, x, y, z, 1).
enum Coord : std::size_t { kT = 0, kX = 1, kY = 2, kZ = 3, kAff = 4 };

/// 5x5 matrix of a Poincare generator in the affine representation.
inline QMat poincare_matrix(const std::string& label) {
  QMat m(5, 5);
  auto rot = [&](std::size_t a, std::size_t b) {  // rotation taking a -> b
    m(b, a) = 1;
    m(a, b) = -1;
  };
  auto boost = [&](std::size_t i) {
    m(kT, i) = 1;
    m(i, kT) = 1;
  };
  if (label == "r_x") rot(kY, kZ);
  else if (label == "r_y") rot(kZ, kX);
  else if (label == "r_z") rot(kX, kY);
  else if (label == "b_x") boost(kX);
  else if (label == "b_y") boost(kY);
  else if (label == "b_z") boost(kZ);
  else if (label == "p_t") m(kT, kAff) = 1;
  else if (label == "p_x") m(kX, kAff) = 1;
  else if (label == "p_y") m(kY, kAff) = 1;
  else if (label == "p_z") m(kZ, kAff) = 1;
  else if (label == "t_1") return poincare_matrix("b_x") + poincare_matrix("r_y");
  else if (label == "t_2") return poincare_matrix("b_y") - poincare_matrix("r_x");
  else throw UnknownAlgebra("no Poincare generator '" + label + "'");
  return m;
}

/// Coefficients of `target` in the span of `mats`; throws if outside.
inline std::vector<Rational> decompose(const std::vector<QMat>& mats, const QMat& target) {
  std::size_t n = mats.size(), len = target.rows() * target.cols();
  // columns 0..n-1: unknown coefficients, column n: right-hand side
  std::vector<SparseRow> rows;
  for (std::size_t e = 0; e < len; ++e) {
    std::size_t r = e / target.cols(), c = e % target.cols();
    SparseRow row;
    for (std::size_t k = 0; k < n; ++k)
      if (!is_zero(mats[k](r, c))) row.emplace_back(k, mats[k](r, c));
    if (!is_zero(target(r, c))) row.emplace_back(n, target(r, c));
    if (!row.empty()) rows.push_back(std::move(row));
  }
  Echelon e = rref(rows, n + 1);
  std::vector<Rational> coef(n, Rational(0));
  for (std::size_t r = 0; r < e.rows.size(); ++r) {
    if (e.pivots[r] == n) throw DimensionMismatch("commutator leaves the span");
    coef[e.pivots[r]] = sparse_at(e.rows[r], n);
  }
  return coef;
}

/// Structure constants of the span of Poincare generators, computed from
/// their affine matrices.
inline LieAlgebra matrix_subalgebra(const std::string& name, const std::vector<std::string>& labels) {
  std::vector<QMat> mats;
  for (auto& l : labels) mats.push_back(poincare_matrix(l));
  LieAlgebra alg(name, labels);
  for (std::size_t i = 0; i < labels.size(); ++i)
    for (std::size_t j = i + 1; j < labels.size(); ++j) {
      auto c = decompose(mats, mats[i] * mats[j] - mats[j] * mats[i]);
      std::vector<Poly> pc;
      for (auto& x : c) pc.emplace_back(x);
      alg.set_bracket(i, j, pc);
    }
  return alg;
}

struct BracketTerm {
  std::string a, b, target;
  Poly coeff;
};

inline Cocycle make_cocycle(const LieAlgebra& base, std::vector<std::string> params,
                            const std::vector<BracketTerm>& terms) {
  LieAlgebra scratch(base.name(), base.labels());
  for (auto& t : terms) scratch.add_bracket(t.a, t.b, t.target, t.coeff);
  return Cocycle{base, scratch.structure(), std::move(params)};
}

/// A closed form of exp(theta * rho) for one generator:
///   exp(theta * scale) * (block in plane (a,b)) on the 4x4 Lorentz part,
/// other spatial/temporal diagonal entries exp(theta * scale), affine corner 1.
/// Each block is written as s*I + N with N traceless; kind follows N^2.
struct ClosedFormBlock {
  enum class Kind { Trig, Hyperbolic, Nilpotent };
  std::size_t a, b;
  Kind kind;
  Poly n00, n01, n10, n11;  // the traceless part N
  Poly omega;               // N^2 = +omega^2 I (hyperbolic) or -omega^2 I (trig)
};

struct ClosedFormDescriptor {
  std::string family;
  std::string representation;
  std::string generator;
  Poly scale;  // exponent a in exp(theta * a)
  std::vector<ClosedFormBlock> blocks;
  std::string description;
};

struct RepresentationFixture {
  std::string label;
  std::map<std::string, Poly> specialization;  // extra parameter conditions
  std::map<std::string, std::string> aliases;  // display name -> parameter
  std::vector<std::string> free_symbols;       // gauge / residual freedom
  std::optional<Poly> auxiliary;               // extra relation among free symbols, = 0
  std::map<std::string, PMat> matrices;        // deformed generators; others = base
  bool affine = true;
  bool corrected = false;
  std::string note;
};

struct GaugeFixture {
  std::string representation;
  std::string symbol;  // the family symbol moved by the map
  // T with T rho(from) T^-1 = rho(to)
  std::function<PMat(const Poly& from, const Poly& to)> matrix;
  bool corrected = false;
  std::string note;
};

struct FamilyFixture {
  std::string label;
  std::string parent;  // top-level family label (equal to label when top-level)
  std::map<std::string, Poly> substitutions;
  std::optional<Poly> nontriviality;
  std::size_t table_rep_count = 0;
  std::vector<RepresentationFixture> representations;
  std::vector<GaugeFixture> gauges;
  std::vector<ClosedFormDescriptor> closed_forms;
  bool representation_affine = true;  // false when the table's count refers to non-affine reps
  bool second_order = false;          // representation needs the full (non-split) system
  std::map<std::string, Rational> rep_sample;  // assignment used for representation counting
  std::string note;
};

struct CatalogEntry {
  std::string name;
  std::string display_name;
  LieAlgebra algebra;
  std::vector<std::string> generator_order;
  Cocycle cocycle;  // the reduced parametrization the families refer to
  std::optional<Poly> nontriviality;
  std::vector<FamilyFixture> families;  // top-level families and subfamilies
  std::vector<std::string> top_level;   // labels of the top-level families
  std::vector<Poly> printed_constraints;  // A.A = 0 conditions as displayed, when given

  const FamilyFixture& family(const std::string& label) const {
    for (auto& f : families)
      if (f.label == label) return f;
    throw UnknownFamily(label + " in " + name);
  }
  DeformationFamily deformation(const std::string& label) const {
    auto& fx = family(label);
    DeformationFamily f;
    f.label = fx.label;
    f.parent = cocycle;
    f.substitutions = fx.substitutions;
    for (auto& p : cocycle.parameters)
      if (!fx.substitutions.count(p)) f.free_parameters.push_back(p);
    f.nontriviality = fx.nontriviality ? fx.nontriviality : nontriviality;
    return f;
  }
  /// Families without children: the rows of the classification table.
  std::vector<std::string> table_rows() const {
    std::vector<std::string> out;
    for (auto& f : families) {
      bool has_child = false;
      for (auto& g : families)
        if (g.parent == f.label && g.label != f.label) has_child = true;
      if (!has_child) out.push_back(f.label);
    }
    return out;
  }
};

namespace catalog_detail {

inline Poly v(const char* name) { return pvar(name); }
inline Poly q(long a, long b = 1) { return pconst(a, b); }

inline PMat base_poly(const std::string& label) { return to_poly(poincare_matrix(label)); }

struct Cell {
  std::size_t r, c;
  Poly value;
};

// Base matrix of `label` with the listed entries overwritten.
inline PMat with_entries(const std::string& label, std::initializer_list<Cell> cells) {
  PMat m = base_poly(label);
  for (auto& x : cells) m(x.r, x.c) = x.value;
  return m;
}

// Base matrix plus s on the four spacetime diagonal entries.
inline PMat plus_scale(const std::string& label, const Poly& s) {
  PMat m = base_poly(label);
  for (std::size_t i = 0; i < 4; ++i) m(i, i) += s;
  return m;
}

inline RepresentationFixture rep(std::string label, std::map<std::string, Poly> spec,
                                 std::map<std::string, PMat> mats, std::vector<std::string> free = {}) {
  RepresentationFixture r;
  r.label = std::move(label);
  r.specialization = std::move(spec);
  r.matrices = std::move(mats);
  r.free_symbols = std::move(free);
  return r;
}

inline ClosedFormBlock block(std::size_t a, std::size_t b, ClosedFormBlock::Kind k, Poly n00, Poly n01, Poly n10,
                             Poly n11, Poly omega) {
  return {a, b, k, std::move(n00), std::move(n01), std::move(n10), std::move(n11), std::move(omega)};
}

inline ClosedFormBlock xy_rotation() {
  return block(kX, kY, ClosedFormBlock::Kind::Trig, q(0), q(-1), q(1), q(0), q(1));
}

inline ClosedFormBlock tz_boost(const Poly& w) {
  return block(kT, kZ, ClosedFormBlock::Kind::Hyperbolic, q(0), w, w, q(0), w);
}

inline PMat substituted(PMat m, const std::map<std::string, Poly>& subs) {
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = substitute(m(r, c), subs);
  return m;
}

// Same representation with some free symbols fixed.
inline RepresentationFixture specialize(RepresentationFixture r, std::string label,
                                        const std::map<std::string, Poly>& subs) {
  r.label = std::move(label);
  for (auto& [g, m] : r.matrices) m = substituted(m, subs);
  std::vector<std::string> keep;
  for (auto& s : r.free_symbols)
    if (!subs.count(s)) keep.push_back(s);
  r.free_symbols = keep;
  if (r.auxiliary) r.auxiliary = substitute(*r.auxiliary, subs);
  return r;
}

inline Poly sum_of_squares(const std::vector<Poly>& ps) {
  Poly s;
  for (auto& p : ps) s += p * p;
  return s;
}

inline FamilyFixture family(std::string label, std::string parent, std::map<std::string, Poly> subs,
                            std::size_t count) {
  FamilyFixture f;
  f.label = std::move(label);
  f.parent = parent.empty() ? f.label : std::move(parent);
  f.substitutions = std::move(subs);
  f.table_rep_count = count;
  return f;
}

inline CatalogEntry poincare_entry() {
  std::vector<std::string> g{"r_x", "r_y", "r_z", "b_x", "b_y", "b_z", "p_t", "p_x", "p_y", "p_z"};
  LieAlgebra alg = matrix_subalgebra("poincare", g);
  Poly t = v("t");
  Cocycle z = make_cocycle(alg, {"t"},
                           {{"p_t", "p_x", "b_x", t},
                            {"p_t", "p_y", "b_y", t},
                            {"p_t", "p_z", "b_z", t},
                            {"p_x", "p_y", "r_z", -t},
                            {"p_y", "p_z", "r_x", -t},
                            {"p_z", "p_x", "r_y", -t}});
  CatalogEntry e{"poincare", "Poincare", alg, g, z, t * t, {}, {"de-sitter"}, {}};
  auto f = family("de-sitter", "", {}, 1);
  f.representation_affine = false;
  f.rep_sample = {{"t", Rational(1)}};
  auto ds = rep("de-sitter", {},
                {{"p_t", with_entries("p_t", {{kAff, kT, -t}})},
                 {"p_x", with_entries("p_x", {{kAff, kX, t}})},
                 {"p_y", with_entries("p_y", {{kAff, kY, t}})},
                 {"p_z", with_entries("p_z", {{kAff, kZ, t}})}});
  ds.affine = false;
  f.representations.push_back(ds);
  e.families.push_back(f);
  return e;
}

inline CatalogEntry isim_entry() {
  std::vector<std::string> g{"t_1", "t_2", "r_z", "b_z", "p_t", "p_x", "p_y", "p_z"};
  LieAlgebra alg = matrix_subalgebra("isim", g);
  Poly a1b = v("A_1b^1"), atx = v("A_1x^t"), azx = v("A_1x^z"), art = v("A_rt^t"), abt = v("A_bt^t"),
       abz = v("A_bt^z");
  Poly l = atx + azx + abt + abz - a1b;
  std::vector<BracketTerm> terms{
      {"t_1", "b_z", "t_1", a1b},
      {"t_2", "b_z", "t_2", a1b},
      {"t_1", "p_x", "p_t", atx},
      {"t_1", "p_x", "p_z", azx},
      {"t_1", "p_z", "p_x", atx + azx},
      {"t_2", "p_y", "p_t", atx},
      {"t_2", "p_y", "p_z", azx},
      {"t_2", "p_z", "p_y", atx + azx},
      {"b_z", "p_x", "p_x", l},
      {"b_z", "p_y", "p_y", l},
      {"b_z", "p_t", "p_t", abt},
      {"b_z", "p_t", "p_z", abz},
      {"b_z", "p_z", "p_t", q(2) * a1b - abz},
      {"b_z", "p_z", "p_z", q(2) * atx + q(2) * azx + abt + q(2) * abz - q(2) * a1b},
  };
  for (const char* p : {"p_t", "p_x", "p_y", "p_z"}) terms.push_back({"r_z", p, p, art});
  Cocycle z = make_cocycle(alg, {"A_1b^1", "A_1x^t", "A_1x^z", "A_rt^t", "A_bt^t", "A_bt^z"}, terms);
  CatalogEntry e{"isim", "ISIM", alg, g, z, art * art + l * l, {}, {"disim", "xdisim1", "xdisim2"}, {}};

  e.printed_constraints = {azx * (atx + azx), abz * (atx + azx), (atx - q(2) * a1b) * (atx + azx)};

  auto disim = family("disim", "", {{"A_1b^1", q(0)}, {"A_1x^z", -atx}}, 1);
  disim.nontriviality = art * art + (atx + azx + abt + abz) * (atx + azx + abt + abz);
  disim.note = "the sim subalgebra stays undeformed; contained in xdisim1";
  disim.rep_sample = {{"A_1x^t", Rational(0)}, {"A_rt^t", make_rational(1, 3)}, {"A_bt^t", make_rational(2, 5)},
                      {"A_bt^z", make_rational(-1, 2)}};
  {
    auto dil = rep("dilatation", {{"A_1x^t", q(0)}, {"A_bt^z", q(0)}},
                   {{"r_z", plus_scale("r_z", art)}, {"b_z", plus_scale("b_z", abt)}});
    dil.aliases = {{"A_1", "A_rt^t"}, {"A_2", "A_bt^t"}};
    dil.note = "case A_bt^z = 0 (the surrounding text calls it A_bt^t = 0; the matrices decide)";
    Poly lam = v("lambda");
    auto lr = rep("lambda", {{"A_1x^t", q(0)}, {"A_bt^t", q(0)}},
                  {{"r_z", plus_scale("r_z", art)},
                   {"b_z", with_entries("b_z", {{kT, kT, q(2) * lam},
                                                {kT, kZ, q(1) - abz + q(2) * lam},
                                                {kX, kX, abz},
                                                {kY, kY, abz},
                                                {kZ, kT, q(1) + abz - q(2) * lam},
                                                {kZ, kZ, q(2) * (abz - lam)}})},
                   {"p_t", with_entries("p_t", {{kT, kAff, q(1) + lam}, {kZ, kAff, -lam}})},
                   {"p_z", with_entries("p_z", {{kT, kAff, lam}, {kZ, kAff, q(1) - lam}})}},
                  {"lambda"});
    lr.aliases = {{"A_1", "A_rt^t"}, {"A_2", "A_bt^z"}};
    lr.note = "case A_bt^t = 0; lambda is a coordinate choice";
    auto simple = specialize(lr, "lambda-half", {{"lambda", abz * q(1, 2)}});
    simple.corrected = true;
    simple.note = "lambda = A_2/2; the second translation printed as p_t is p_z";
    disim.representations = {dil, lr, simple};
    GaugeFixture g;
    g.representation = "lambda";
    g.symbol = "lambda";
    g.matrix = [](const Poly& l1, const Poly& l2) {
      PMat t = to_poly(QMat::identity(5));
      Poly d = l1 - l2;
      t(kT, kT) = q(1) - d;
      t(kT, kZ) = -d;
      t(kZ, kT) = d;
      t(kZ, kZ) = q(1) + d;
      return t;
    };
    g.corrected = true;
    g.note = "printed (t,z) entry 'lambda_2 - lambda_2' replaced by lambda_2 - lambda_1";
    disim.gauges = {g};
    disim.closed_forms = {
        {"disim", "dilatation", "b_z", abt, {tz_boost(q(1))}, "ordinary boost followed by a dilatation"},
        {"disim", "dilatation", "r_z", art, {xy_rotation()}, "rotation followed by a dilatation"},
        {"disim", "lambda-half", "b_z", abz, {tz_boost(q(1))}, "ordinary boost followed by a dilatation"}};
  }
  auto x1 = family("xdisim1", "", {{"A_1x^z", -atx}}, 1);
  {
    Poly al = v("alpha"), h = q(1, 2);
    auto ar = rep("alpha", {{"A_1x^t", q(0)}, {"A_bt^z", q(0)}},
                  {{"b_z", with_entries("b_z", {{kT, kT, al - q(2) * a1b + abt},
                                                {kT, kZ, q(1) + al},
                                                {kX, kX, abt - a1b},
                                                {kY, kY, abt - a1b},
                                                {kZ, kT, q(1) - al + q(2) * a1b},
                                                {kZ, kZ, abt - al}})},
                   {"r_z", plus_scale("r_z", art)},
                   {"p_t", with_entries("p_t", {{kT, kAff, q(1) + h * al}, {kZ, kAff, a1b - h * al}})},
                   {"p_x", with_entries("p_x", {{kX, kAff, q(1) + a1b}})},
                   {"p_y", with_entries("p_y", {{kY, kAff, q(1) + a1b}})},
                   {"p_z", with_entries("p_z", {{kT, kAff, h * al - a1b}, {kZ, kAff, q(1) + q(2) * a1b - h * al}})}},
                  {"alpha"});
    ar.aliases = {{"A_1", "A_1b^1"}, {"A_2", "A_rt^t"}, {"A_3", "A_bt^t"}};
    auto as = specialize(ar, "alpha-a1", {{"alpha", a1b}});
    auto c2 = rep("case-2", {{"A_1x^t", q(0)}, {"A_bt^t", q(0)}},
                  {{"r_z", plus_scale("r_z", art)},
                   {"b_z", with_entries("b_z", {{kT, kT, q(0)},
                                                {kT, kZ, q(1) - abz + q(2) * a1b},
                                                {kX, kX, abz - a1b},
                                                {kY, kY, abz - a1b},
                                                {kZ, kT, q(1) + abz},
                                                {kZ, kZ, q(2) * (abz - a1b)}})}});
    c2.aliases = {{"A_1", "A_1b^1"}, {"A_2", "A_rt^t"}, {"A_3", "A_bt^z"}};
    c2.note = "only r_z and b_z are displayed";
    x1.representations = {ar, as, c2};
    GaugeFixture g;
    g.representation = "alpha";
    g.symbol = "alpha";
    g.matrix = [a1b](const Poly& f, const Poly& t) {
      // scaled by 2 + 2 A_1 so the entries stay polynomial
      Poly n = q(2) + q(2) * a1b, d = t - f;
      PMat m = scaled(to_poly(QMat::identity(5)), n);
      m(kT, kT) = n + d;
      m(kT, kZ) = d;
      m(kZ, kT) = -d;
      m(kZ, kZ) = n - d;
      return m;
    };
    x1.gauges = {g};
    Poly w = q(1) + a1b;
    x1.closed_forms = {
        {"xdisim1", "alpha-a1", "b_z", abt - a1b, {tz_boost(w)}, "boost with rapidity scaled by 1 + A_1 and a dilatation"},
        {"xdisim1", "case-2", "b_z", abz - a1b,
         {block(kT, kZ, ClosedFormBlock::Kind::Hyperbolic, a1b - abz, q(1) + q(2) * a1b - abz, q(1) + abz,
                abz - a1b, w)},
         "skewed boost and a dilatation"}};
  }
  x1.rep_sample = {{"A_1b^1", make_rational(1, 2)}, {"A_1x^t", Rational(0)}, {"A_rt^t", make_rational(1, 3)},
                   {"A_bt^t", make_rational(2, 5)}, {"A_bt^z", make_rational(-1, 2)}};
  auto x2 = family("xdisim2", "", {{"A_1x^z", q(0)}, {"A_bt^z", q(0)}, {"A_1x^t", q(2) * a1b}}, 1);
  x2.rep_sample = {{"A_1b^1", make_rational(1, 2)}, {"A_rt^t", make_rational(1, 3)}, {"A_bt^t", make_rational(2, 5)}};
  {
    auto r = rep("simple", {},
                 {{"r_z", plus_scale("r_z", art)},
                  {"b_z", with_entries("b_z", {{kT, kT, q(2) * a1b + abt},
                                               {kT, kZ, q(1) + q(2) * a1b},
                                               {kX, kX, a1b + abt},
                                               {kY, kY, a1b + abt},
                                               {kZ, kT, q(1)},
                                               {kZ, kZ, abt}})},
                  {"p_z", with_entries("p_z", {{kT, kAff, q(2) * a1b}, {kZ, kAff, q(1)}})}});
    r.aliases = {{"A_1", "A_1b^1"}, {"A_2", "A_rt^t"}, {"A_3", "A_bt^t"}};
    x2.representations = {r};
    x2.closed_forms = {{"xdisim2", "simple", "b_z", a1b + abt,
                        {block(kT, kZ, ClosedFormBlock::Kind::Hyperbolic, a1b, q(1) + q(2) * a1b, q(1), -a1b,
                               q(1) + a1b)},
                        "skewed boost and a dilatation"}};
  }
  e.families = {disim, x1, x2};
  return e;
}

inline CatalogEntry ihom_entry() {
  std::vector<std::string> g{"t_1", "t_2", "b_z", "p_t", "p_x", "p_y", "p_z"};
  LieAlgebra alg = matrix_subalgebra("ihom", g);
  Poly a1y = v("A_1y^1"), a2t = v("A_2t^b"), at = v("A_bt^t"), az = v("A_bt^z");
  Cocycle z = make_cocycle(alg, {"A_1y^1", "A_2t^b", "A_bt^t", "A_bt^z"},
                           {{"b_z", "p_t", "p_t", at},
                            {"b_z", "p_t", "p_z", az},
                            {"b_z", "p_z", "p_t", -az},
                            {"b_z", "p_z", "p_z", at + q(2) * az},
                            {"b_z", "p_x", "p_x", at + az},
                            {"b_z", "p_y", "p_y", at + az},
                            {"t_2", "p_x", "t_1", a1y + a2t},
                            {"t_2", "p_t", "b_z", a2t},
                            {"t_2", "p_z", "b_z", a2t},
                            {"t_2", "p_y", "t_2", q(2) * a1y + a2t},
                            {"t_1", "p_y", "t_1", a1y},
                            {"p_y", "p_t", "p_t", a1y + a2t},
                            {"p_y", "p_t", "p_z", a1y},
                            {"p_y", "p_x", "p_x", a1y + a2t},
                            {"p_y", "p_z", "p_z", a1y + a2t},
                            {"p_y", "p_z", "p_t", a1y}});
  CatalogEntry e{"ihom", "IHOM", alg, g, z,
                 (a1y + a2t) * (a1y + a2t) + (at + az) * (at + az), {}, {"dihom1", "dihom2"}, {}};
  auto d1 = family("dihom1", "", {{"A_1y^1", q(0)}, {"A_2t^b", q(0)}}, 1);
  d1.rep_sample = {{"A_bt^t", make_rational(1, 3)}, {"A_bt^z", make_rational(-2, 5)}};
  d1.representations = {
      rep("dilatation", {{"A_bt^z", q(0)}}, {{"b_z", plus_scale("b_z", at)}}),
      rep("shifted", {{"A_bt^t", q(0)}},
          {{"b_z", with_entries("b_z", {{kT, kT, q(0)},
                                        {kT, kZ, q(1) - az},
                                        {kX, kX, az},
                                        {kY, kY, az},
                                        {kZ, kT, q(1) + az},
                                        {kZ, kZ, q(2) * az}})}})};
  d1.closed_forms = {{"dihom1", "dilatation", "b_z", at, {tz_boost(q(1))}, "ordinary boost followed by a dilatation"}};
  auto d2 = family("dihom2", "", {{"A_bt^t", q(0)}, {"A_bt^z", q(0)}}, 1);
  {
    Poly g = v("gamma"), d = a1y + a2t;
    auto r = rep("gamma", {},
                 {{"t_2", with_entries("t_2", {{kAff, kT, -d}, {kAff, kZ, -d}})},
                  {"b_z", with_entries("b_z", {{kT, kT, g}, {kX, kX, g}, {kY, kY, g}, {kZ, kZ, g}, {kAff, kAff, g}})},
                  {"p_t", with_entries("p_t", {{kY, kT, -d}})},
                  {"p_x", with_entries("p_x", {{kY, kX, d}})},
                  {"p_y", with_entries("p_y", {{kT, kT, -g * a2t},
                                               {kT, kZ, a1y},
                                               {kX, kX, -g * a2t},
                                               {kY, kY, d - g * a2t},
                                               {kZ, kT, a1y},
                                               {kZ, kZ, -g * a2t},
                                               {kAff, kAff, -d - g * a2t}})},
                  {"p_z", with_entries("p_z", {{kY, kZ, d}})}},
                 {"gamma"});
    r.affine = false;
    r.aliases = {{"A_1", "A_1y^1"}, {"A_2", "A_2t^b"}};
    d2.representations = {r, specialize(r, "gamma-0", {{"gamma", q(0)}})};
  }
  d2.representation_affine = false;
  d2.rep_sample = {{"A_1y^1", make_rational(1, 3)}, {"A_2t^b", make_rational(1, 2)}};
  d2.note = "representative with A_bt^t = A_bt^z = 0 of the A_bt^z = -A_bt^t branch";
  e.families = {d1, d2};
  return e;
}

inline CatalogEntry te2_entry() {
  std::vector<std::string> g{"t_1", "t_2", "r_z", "p_t", "p_x", "p_y", "p_z"};
  LieAlgebra alg = matrix_subalgebra("te2", g);
  Poly a1t = v("A_1t^1"), at = v("A_rt^t"), az = v("A_rt^z"), a1 = v("A_tx^1"), ax = v("A_tx^x");
  std::vector<BracketTerm> terms{
      {"r_z", "p_t", "p_t", at},
      {"r_z", "p_t", "p_z", az},
      {"r_z", "p_z", "p_t", -az},
      {"r_z", "p_z", "p_z", at + q(2) * az},
      {"r_z", "p_x", "p_x", at + az},
      {"r_z", "p_x", "t_2", -a1t},
      {"r_z", "p_y", "p_y", at + az},
      {"r_z", "p_y", "t_1", -a1t},
      {"t_1", "p_t", "t_1", a1t},
      {"t_1", "p_z", "t_1", a1t},
      {"p_t", "p_z", "p_t", a1t - ax},
      {"p_t", "p_z", "p_z", ax - a1t},
  };
  for (const char* p : {"p_t", "p_z"}) {
    terms.push_back({p, "p_x", "t_1", a1});
    terms.push_back({p, "p_x", "p_x", ax});
    terms.push_back({p, "p_y", "t_2", a1});
    terms.push_back({p, "p_y", "p_y", ax - a1t});
  }
  Cocycle z = make_cocycle(alg, {"A_1t^1", "A_rt^t", "A_rt^z", "A_tx^1", "A_tx^x"}, terms);
  Poly s = at + az;
  Poly nt = s * s + (at + q(2) * az) * (at + q(2) * az) + a1 * a1 + (a1t - ax) * (a1t - ax);
  CatalogEntry e{"te2", "TE(2)", alg, g, z, nt, {}, {"dte1", "dte2", "dte3"}, {}};

  auto d1 = family("dte1", "", {{"A_1t^1", q(0)}, {"A_tx^1", q(0)}, {"A_tx^x", q(0)}}, 1);
  d1.nontriviality = sum_of_squares({s, at + q(2) * az, at, az});
  d1.rep_sample = {{"A_rt^t", make_rational(1, 3)}, {"A_rt^z", make_rational(-1, 2)}};
  d1.representations = {rep("rotated", {},
                            {{"r_z", with_entries("r_z", {{kT, kT, at},
                                                          {kT, kZ, -az},
                                                          {kX, kX, at + az},
                                                          {kY, kY, at + az},
                                                          {kZ, kT, az},
                                                          {kZ, kZ, at + q(2) * az}})}})};
  d1.representations[0].aliases = {{"A_1", "A_rt^t"}, {"A_2", "A_rt^z"}};
  d1.closed_forms = {{"dte1", "rotated", "r_z", at + az,
                      {xy_rotation(), block(kT, kZ, ClosedFormBlock::Kind::Nilpotent, -az, -az, az, az, q(0))},
                      "rotation in the xy plane and in the rotated tz plane, with a dilatation"}};
  auto d2 = family("dte2", "", {{"A_rt^z", -at}, {"A_1t^1", q(0)}}, 0);
  auto d3 = family("dte3", "", {{"A_rt^z", -at}, {"A_tx^x", q(0)}}, 0);
  auto d2a = family("dte2a", "dte2", {{"A_rt^z", q(0)}, {"A_rt^t", q(0)}, {"A_1t^1", q(0)}}, 2);
  d2a.second_order = true;
  d2a.rep_sample = {{"A_tx^1", Rational(2)}, {"A_tx^x", Rational(3)}};
  {
    Poly al = v("alpha"), be = v("beta"), ga = v("gamma"), la = v("lambda");
    auto k1 = rep("kind-1", {},
                  {{"p_t", with_entries("p_t", {{kT, kT, al + q(2) * be},
                                                {kT, kZ, al},
                                                {kX, kX, be},
                                                {kY, kY, be},
                                                {kZ, kT, -al - ax},
                                                {kZ, kZ, q(2) * be - al - ax}})},
                   {"p_x", with_entries("p_x", {{kT, kX, -be}, {kX, kT, be - ax}, {kX, kZ, be - ax}, {kZ, kX, be}})},
                   {"p_y", with_entries("p_y", {{kT, kY, -be}, {kY, kT, be - ax}, {kY, kZ, be - ax}, {kZ, kY, be}})},
                   {"p_z", with_entries("p_z", {{kT, kT, al + ax},
                                                {kT, kZ, al - q(2) * be + ax},
                                                {kX, kX, be},
                                                {kY, kY, be},
                                                {kZ, kT, q(2) * be - al - q(2) * ax},
                                                {kZ, kZ, q(4) * be - al - q(2) * ax}})}},
                  {"alpha", "beta"});
    k1.auxiliary = be * be - ax * be + a1;
    auto k2 = rep("kind-2", {},
                  {{"p_t", with_entries("p_t", {{kT, kT, ga},
                                                {kT, kZ, ga - ax},
                                                {kX, kX, la},
                                                {kY, kY, la},
                                                {kZ, kT, q(2) * la - ga - ax},
                                                {kZ, kZ, q(2) * la - ga}})},
                   {"p_x", with_entries("p_x", {{kT, kX, la - ax}, {kX, kT, la - ax}, {kX, kZ, la - ax}, {kZ, kX, ax - la}})},
                   {"p_y", with_entries("p_y", {{kT, kY, la - ax}, {kY, kT, la - ax}, {kY, kZ, la - ax}, {kZ, kY, ax - la}})},
                   {"p_z", with_entries("p_z", {{kT, kT, ga},
                                                {kT, kZ, ga - ax},
                                                {kX, kX, la},
                                                {kY, kY, la},
                                                {kZ, kT, q(2) * la - ga - ax},
                                                {kZ, kZ, q(2) * la - ga}})}},
                  {"gamma", "lambda"});
    k2.auxiliary = la * la - ax * la + a1;
    for (auto* r : {&k1, &k2}) r->aliases = {{"A_1", "A_tx^1"}, {"A_2", "A_tx^x"}};
    d2a.representations = {k1, k2};
  }
  auto d2b = family("dte2b", "dte2", {{"A_rt^z", -at}, {"A_1t^1", q(0)}, {"A_tx^x", q(0)}}, 0);
  d2b.rep_sample = {{"A_rt^t", make_rational(1, 3)}, {"A_tx^1", make_rational(1, 2)}};
  auto d3a = family("dte3a", "dte3", {{"A_rt^z", q(0)}, {"A_rt^t", q(0)}, {"A_tx^x", q(0)}}, 2);
  d3a.second_order = true;
  d3a.rep_sample = {{"A_1t^1", Rational(3)}, {"A_tx^1", Rational(2)}};
  {
    Poly al = v("alpha"), be = v("beta"), ga = v("gamma"), la = v("lambda");
    auto k1 = rep("kind-1", {},
                  {{"p_t", with_entries("p_t", {{kT, kT, q(2) * al + be},
                                                {kT, kZ, be},
                                                {kX, kX, al},
                                                {kY, kY, al},
                                                {kZ, kT, a1t - be},
                                                {kZ, kZ, a1t + q(2) * al - be}})},
                   {"p_x", with_entries("p_x", {{kT, kX, -a1t - al}, {kX, kT, al}, {kX, kZ, al}, {kZ, kX, a1t + al}})},
                   {"p_y", with_entries("p_y", {{kT, kY, -al}, {kY, kT, a1t + al}, {kY, kZ, a1t + al}, {kZ, kY, al}})},
                   {"p_z", with_entries("p_z", {{kT, kT, be - a1t},
                                                {kT, kZ, be - a1t - q(2) * al},
                                                {kX, kX, al},
                                                {kY, kY, al},
                                                {kZ, kT, q(2) * a1t - be + q(2) * al},
                                                {kZ, kZ, q(2) * a1t - be + q(4) * al}})}},
                  {"beta", "alpha"});
    k1.auxiliary = a1 + al * (a1t + al);
    auto k2 = rep("kind-2", {},
                  {{"p_t", with_entries("p_t", {{kT, kT, la},
                                                {kT, kZ, a1t + la},
                                                {kX, kX, ga},
                                                {kY, kY, ga},
                                                {kZ, kT, a1t + q(2) * ga - la},
                                                {kZ, kZ, q(2) * ga - la}})},
                   {"p_x", with_entries("p_x", {{kT, kX, ga}, {kX, kT, ga}, {kX, kZ, ga}, {kZ, kX, -ga}})},
                   {"p_y", with_entries("p_y", {{kT, kY, a1t + ga},
                                                {kY, kT, a1t + ga},
                                                {kY, kZ, a1t + ga},
                                                {kZ, kY, -a1t - ga}})},
                   {"p_z", with_entries("p_z", {{kT, kT, la},
                                                {kT, kZ, a1t + la},
                                                {kX, kX, ga},
                                                {kY, kY, ga},
                                                {kZ, kT, a1t + q(2) * ga - la},
                                                {kZ, kZ, q(2) * ga - la}})}},
                  {"lambda", "gamma"});
    k2.auxiliary = a1 + ga * (a1t + ga);
    for (auto* r : {&k1, &k2}) r->aliases = {{"A_1", "A_1t^1"}, {"A_2", "A_tx^1"}};
    d3a.representations = {k1, k2};
  }
  auto d3b = family("dte3b", "dte3", {{"A_rt^z", -at}, {"A_tx^x", q(0)}, {"A_1t^1", q(0)}}, 1);
  d3b.rep_sample = d2b.rep_sample;
  d3b.note = "same algebra as dte2b";
  {
    Poly b = v("a");
    auto r = rep("displayed", {},
                 {{"p_t", with_entries("p_t", {{kT, kZ, b}, {kX, kX, -b}, {kY, kY, -b}, {kZ, kT, -b}, {kZ, kZ, q(-2) * b}})},
                  {"r_z", with_entries("r_z", {{kT, kT, at}, {kT, kZ, at}, {kZ, kT, -at}, {kZ, kZ, -at}})},
                  {"p_x", with_entries("p_x", {{kT, kX, -b}, {kX, kT, -b}, {kX, kZ, -b}, {kZ, kX, b}})},
                  {"p_y", with_entries("p_y", {{kT, kY, -b}, {kY, kT, -b}, {kY, kZ, -b}, {kZ, kY, b}})},
                  {"p_z", with_entries("p_z", {{kT, kZ, b}, {kX, kX, -b}, {kY, kY, -b}, {kZ, kT, -b}, {kZ, kZ, q(-2) * b}})}},
                 {"a"});
    r.corrected = true;
    r.aliases = {{"A_1", "a"}, {"A_2", "A_rt^t"}};
    r.note = "p_y is not displayed and is filled in by the x <-> y pattern of p_x";
    d3b.representations = {r};
    d3b.closed_forms = {{"dte3b", "displayed", "r_z", q(0),
                         {xy_rotation(), block(kT, kZ, ClosedFormBlock::Kind::Nilpotent, at, at, -at, -at, q(0))},
                         "rotation in the xy plane and in the rotated tz plane, no dilatation"}};
  }
  e.families = {d1, d2, d2a, d2b, d3, d3a, d3b};
  return e;
}

inline CatalogEntry iso3_entry() {
  std::vector<std::string> g{"r_x", "r_y", "r_z", "p_t", "p_x", "p_y", "p_z"};
  LieAlgebra alg = matrix_subalgebra("iso3", g);
  Poly ax = v("A_tx^x"), a3 = v("A_xy^3");
  std::vector<BracketTerm> terms{{"p_x", "p_y", "r_z", a3}, {"p_z", "p_x", "r_y", a3}, {"p_y", "p_z", "r_x", a3}};
  for (const char* p : {"p_x", "p_y", "p_z"}) terms.push_back({"p_t", p, p, ax});
  Cocycle z = make_cocycle(alg, {"A_tx^x", "A_xy^3"}, terms);
  CatalogEntry e{"iso3", "ISO(3)", alg, g, z, ax * ax + a3 * a3, {}, {"diso31", "diso32"}, {}};
  auto d1 = family("diso31", "", {{"A_tx^x", q(0)}}, 1);
  d1.rep_sample = {{"A_xy^3", make_rational(2, 3)}};
  {
    Poly al = v("alpha"), be = v("beta");
    auto r = rep("alpha-beta", {},
                 {{"p_t", plus_scale("p_t", al)},
                  {"p_x", with_entries("p_x", {{kT, kX, be}, {kX, kT, al}})},
                  {"p_y", with_entries("p_y", {{kT, kY, be}, {kY, kT, al}})},
                  {"p_z", with_entries("p_z", {{kT, kZ, be}, {kZ, kT, al}})}},
                 {"alpha", "beta"});
    r.auxiliary = al * be + a3;
    d1.representations = {r};
  }
  auto d2 = family("diso32", "", {{"A_xy^3", q(0)}}, 3);
  d2.rep_sample = {{"A_tx^x", make_rational(2, 3)}};
  {
    Poly al = v("alpha");
    d2.representations = {
        rep("kind-1", {}, {{"p_t", with_entries("p_t", {{kT, kT, al}, {kX, kX, ax}, {kY, kY, ax}, {kZ, kZ, ax}})}},
            {"alpha"}),
        rep("kind-2", {},
            {{"p_t", with_entries("p_t", {{kT, kT, -ax}})},
             {"p_x", with_entries("p_x", {{kX, kT, -ax}})},
             {"p_y", with_entries("p_y", {{kY, kT, -ax}})},
             {"p_z", with_entries("p_z", {{kZ, kT, -ax}})}}),
        rep("kind-3", {},
            {{"p_t", with_entries("p_t", {{kT, kT, q(2) * ax}, {kX, kX, ax}, {kY, kY, ax}, {kZ, kZ, ax}})},
             {"p_x", with_entries("p_x", {{kT, kX, al}})},
             {"p_y", with_entries("p_y", {{kT, kY, al}})},
             {"p_z", with_entries("p_z", {{kT, kZ, al}})}},
            {"alpha"})};
  }
  e.families = {d1, d2};
  return e;
}

inline CatalogEntry iso21_entry() {
  std::vector<std::string> g{"r_x", "b_y", "b_z", "p_t", "p_x", "p_y", "p_z"};
  LieAlgebra alg = matrix_subalgebra("iso21", g);
  Poly at = v("A_tx^t"), a2 = v("A_ty^2");
  std::vector<BracketTerm> terms{{"p_t", "p_y", "b_y", a2}, {"p_t", "p_z", "b_z", a2}, {"p_y", "p_z", "r_x", -a2}};
  for (const char* p : {"p_t", "p_y", "p_z"}) terms.push_back({"p_x", p, p, -at});
  Cocycle z = make_cocycle(alg, {"A_tx^t", "A_ty^2"}, terms);
  CatalogEntry e{"iso21", "ISO(2,1)", alg, g, z, at * at + a2 * a2, {}, {"diso211", "diso212"}, {}};
  auto d1 = family("diso211", "", {{"A_tx^t", q(0)}}, 1);
  d1.rep_sample = {{"A_ty^2", make_rational(2, 3)}};
  {
    Poly al = v("alpha"), be = v("beta");
    auto r = rep("alpha-beta", {},
                 {{"p_x", plus_scale("p_x", al)},
                  {"p_t", with_entries("p_t", {{kT, kX, al}, {kX, kT, be}})},
                  {"p_y", with_entries("p_y", {{kX, kY, -be}, {kY, kX, al}})},
                  {"p_z", with_entries("p_z", {{kX, kZ, -be}, {kZ, kX, al}})}},
                 {"alpha", "beta"});
    r.auxiliary = al * be + a2;
    d1.representations = {r};
  }
  auto d2 = family("diso212", "", {{"A_ty^2", q(0)}}, 2);
  d2.rep_sample = {{"A_tx^t", make_rational(2, 3)}};
  {
    Poly al = v("alpha"), be = v("beta");
    auto r = rep("alpha-beta", {},
                 {{"p_x", with_entries("p_x", {{kT, kT, al - at}, {kX, kX, be}, {kY, kY, al - at}, {kZ, kZ, al - at}})},
                  {"p_t", with_entries("p_t", {{kT, kX, al}})},
                  {"p_y", with_entries("p_y", {{kY, kX, al}})},
                  {"p_z", with_entries("p_z", {{kZ, kX, al}})}},
                 {"alpha", "beta"});
    r.auxiliary = al * (al - be);
    d2.representations = {r, specialize(r, "alpha-zero", {{"alpha", q(0)}, {"beta", -at}}),
                          specialize(r, "alpha-beta-a1", {{"alpha", at}, {"beta", at}})};
    d2.representations[0].note = "general solution; the two named specializations are the displayed kinds";
  }
  e.families = {d1, d2};
  return e;
}

}  // namespace catalog_detail

/// Names accepted by get_algebra for the deformed semi-products.
inline std::vector<std::string> catalog_names() { return {"poincare", "isim", "ihom", "te2", "iso3", "iso21"}; }

inline const CatalogEntry& get_algebra(const std::string& name) {
  static const std::map<std::string, CatalogEntry> entries = [] {
    std::map<std::string, CatalogEntry> m;
    for (auto&& e : {catalog_detail::poincare_entry(), catalog_detail::isim_entry(), catalog_detail::ihom_entry(),
                     catalog_detail::te2_entry(), catalog_detail::iso3_entry(), catalog_detail::iso21_entry()})
      m.emplace(e.name, e);
    return m;
  }();
  auto it = entries.find(name);
  if (it == entries.end()) throw UnknownAlgebra(name);
  return it->second;
}

/// Lorentz subalgebras up to isomorphism, by generator span. None of these
/// carries deformation fixtures.
inline std::vector<LieAlgebra> lorentz_subalgebras() {
  return {matrix_subalgebra("so2", {"r_z"}),
          matrix_subalgebra("t2", {"t_1", "t_2"}),
          matrix_subalgebra("rx_bx", {"r_x", "b_x"}),
          matrix_subalgebra("t1_bz", {"t_1", "b_z"}),
          matrix_subalgebra("so3", {"r_x", "r_y", "r_z"}),
          matrix_subalgebra("so21", {"b_x", "b_y", "r_z"}),
          matrix_subalgebra("e2", {"t_1", "t_2", "r_z"}),
          matrix_subalgebra("hom2", {"t_1", "t_2", "b_z"}),
          matrix_subalgebra("sim2", {"t_1", "t_2", "r_z", "b_z"})};
}

inline LieAlgebra abelian_algebra(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("e_" + std::to_string(i + 1));
  return LieAlgebra("abelian" + std::to_string(n), labels);
}

/// The affine 5x5 matrices of a catalog algebra's generators.
inline std::vector<QMat> base_representation(const CatalogEntry& e) {
  std::vector<QMat> out;
  for (auto& g : e.generator_order) out.push_back(poincare_matrix(g));
  return out;
}

}  // namespace liedeform
