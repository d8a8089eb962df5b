#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "liedeform/catalog.hpp"
#include "liedeform/deform.hpp"
#include "liedeform/exact/branch.hpp"
#include "liedeform/exact/linalg.hpp"
#include "liedeform/liealg.hpp"

namespace liedeform {

inline constexpr std::size_t kRepDim = 5;

struct Representation {
  std::vector<std::string> generators;
  std::vector<PMat> matrices;
  std::vector<std::string> free_symbols;  // residual freedom after gauge fixing
  std::vector<Poly> constraints;          // relations among free symbols that did not factor

  bool affine() const {
    for (auto& m : matrices)
      for (std::size_t c = 0; c < m.cols(); ++c)
        if (!m(m.rows() - 1, c).is_zero()) return false;
    return true;
  }
  Representation evaluated(const std::map<std::string, Rational>& at) const {
    Representation out = *this;
    std::map<std::string, Poly> subs;
    for (auto& [k, v] : at) subs.emplace(k, Poly(v));
    for (auto& m : out.matrices)
      for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = substitute(m(r, c), subs);
    out.free_symbols.clear();
    for (auto& s : free_symbols)
      if (!at.count(s)) out.free_symbols.push_back(s);
    for (auto& q : out.constraints) q = substitute(q, subs);
    return out;
  }
  std::vector<QMat> numeric() const {
    std::vector<QMat> out;
    for (auto& m : matrices) {
      QMat q(m.rows(), m.cols());
      for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) {
          if (!m(r, c).is_constant()) throw MissingVariable("symbolic entry " + m(r, c).to_string());
          q(r, c) = m(r, c).constant_term();
        }
      out.push_back(std::move(q));
    }
    return out;
  }
};

struct RepresentationResidual {
  std::size_t i, j, row, col;
  Poly value;
};

/// Entrywise residuals of [rho_i, rho_j] - C^k_ij rho_k.
inline std::vector<RepresentationResidual> verify_representation(const Representation& rep, const LieAlgebra& alg) {
  if (rep.matrices.size() != alg.dim()) throw DimensionMismatch("representation vs algebra");
  std::vector<RepresentationResidual> out;
  const auto& c = alg.structure();
  for (std::size_t i = 0; i < alg.dim(); ++i)
    for (std::size_t j = i + 1; j < alg.dim(); ++j) {
      PMat r = commutator(rep.matrices[i], rep.matrices[j]);
      for (std::size_t k = 0; k < alg.dim(); ++k) {
        if (c(k, i, j).is_zero()) continue;
        for (std::size_t a = 0; a < r.rows(); ++a)
          for (std::size_t b = 0; b < r.cols(); ++b)
            if (!rep.matrices[k](a, b).is_zero()) r(a, b) -= c(k, i, j) * rep.matrices[k](a, b);
      }
      for (std::size_t a = 0; a < r.rows(); ++a)
        for (std::size_t b = 0; b < r.cols(); ++b)
          if (!r(a, b).is_zero()) out.push_back({i, j, a, b, r(a, b)});
    }
  return out;
}

enum class RepMode {
  Split,  // [G,T] + [T,G] - C G = A T and [G,G] = A G separately
  Full,   // the exact system in one piece
};

struct RepOptions {
  bool affine_only = true;
  RepMode mode = RepMode::Split;
  bool gauge_fix = true;
  // generators allowed to move; empty means those entering a bracket that
  // the deformation changes
  std::vector<std::string> deformable;
  bool all_deformable = false;
  std::string symbol_prefix = "s";
};

namespace rep_detail {

// Unknown layout: generator-major, then row, then column; bottom rows are
// skipped when only affine deformations are allowed.
class Layout {
 public:
  Layout(std::size_t n, const std::vector<bool>& movable, bool affine) : n_(n) {
    std::size_t rows = affine ? kRepDim - 1 : kRepDim;
    for (std::size_t g = 0; g < n; ++g) {
      if (!movable[g]) continue;
      for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < kRepDim; ++c) {
          index_[{g, r * kRepDim + c}] = cells_.size();
          cells_.push_back({g, r * kRepDim + c});
        }
    }
  }
  std::size_t size() const { return cells_.size(); }
  std::optional<std::size_t> find(std::size_t g, std::size_t r, std::size_t c) const {
    auto it = index_.find({g, r * kRepDim + c});
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  std::pair<std::size_t, std::size_t> cell(std::size_t u) const { return cells_[u]; }
  std::size_t generators() const { return n_; }

 private:
  std::size_t n_;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> index_;
  std::vector<std::pair<std::size_t, std::size_t>> cells_;
};

// Linear form per entry: coefficients over unknowns plus a constant.
struct LinearEntry {
  std::map<std::size_t, Rational> coef;
  Rational constant;
  void add(std::size_t u, const Rational& v) {
    if (is_zero(v)) return;
    auto& x = coef[u];
    x += v;
    if (is_zero(x)) coef.erase(u);
  }
};

// L(G)_ij = [G_i, T_j] + [T_i, G_j] - sum_k C^k_ij G_k as linear forms.
inline std::vector<LinearEntry> linear_part(const Layout& lay, const std::vector<QMat>& t, const QTensor& c,
                                            std::size_t i, std::size_t j) {
  std::vector<LinearEntry> e(kRepDim * kRepDim);
  auto g_coeff = [&](std::size_t gen, std::size_t r, std::size_t col, std::size_t out, const Rational& v) {
    if (auto u = lay.find(gen, r, col)) e[out].add(*u, v);
  };
  for (std::size_t r = 0; r < kRepDim; ++r)
    for (std::size_t col = 0; col < kRepDim; ++col) {
      std::size_t out = r * kRepDim + col;
      for (std::size_t m = 0; m < kRepDim; ++m) {
        // [G_i, T_j](r,col) = G_i(r,m) T_j(m,col) - T_j(r,m) G_i(m,col)
        if (!is_zero(t[j](m, col))) g_coeff(i, r, m, out, t[j](m, col));
        if (!is_zero(t[j](r, m))) g_coeff(i, m, col, out, -t[j](r, m));
        // [T_i, G_j](r,col) = T_i(r,m) G_j(m,col) - G_j(r,m) T_i(m,col)
        if (!is_zero(t[i](r, m))) g_coeff(j, m, col, out, t[i](r, m));
        if (!is_zero(t[i](m, col))) g_coeff(j, r, m, out, -t[i](m, col));
      }
      for (std::size_t k = 0; k < c.dim(); ++k)
        if (!is_zero(c(k, i, j))) g_coeff(k, r, col, out, -c(k, i, j));
    }
  return e;
}

inline PMat symbolic_matrix(const Layout& lay, const std::vector<Poly>& g, std::size_t gen) {
  PMat m(kRepDim, kRepDim);
  for (std::size_t r = 0; r < kRepDim; ++r)
    for (std::size_t c = 0; c < kRepDim; ++c)
      if (auto u = lay.find(gen, r, c)) m(r, c) = g[*u];
  return m;
}

// Directions [X, T_i] of infinitesimal conjugations that keep the fixed
// generators fixed.
inline std::vector<SparseRow> gauge_directions(const Layout& lay, const std::vector<QMat>& t,
                                               const std::vector<bool>& movable, bool affine) {
  // X ranges over gl(5) (affine: rows 0..3 plus the (4,4) corner); first
  // restrict to the centralizer of the fixed generators.
  std::vector<std::pair<std::size_t, std::size_t>> xs;
  for (std::size_t r = 0; r < kRepDim; ++r)
    for (std::size_t c = 0; c < kRepDim; ++c)
      if (!affine || r + 1 < kRepDim || c + 1 == kRepDim) xs.emplace_back(r, c);
  auto bracket_with = [&](std::size_t r, std::size_t c, const QMat& ti) {
    QMat x(kRepDim, kRepDim);
    x(r, c) = 1;
    return x * ti - ti * x;
  };
  std::vector<SparseRow> rows;  // constraints on X coefficients
  for (std::size_t g = 0; g < t.size(); ++g) {
    if (movable[g]) continue;
    for (std::size_t e = 0; e < kRepDim * kRepDim; ++e) {
      SparseRow row;
      for (std::size_t k = 0; k < xs.size(); ++k) {
        Rational v = bracket_with(xs[k].first, xs[k].second, t[g])(e / kRepDim, e % kRepDim);
        if (!is_zero(v)) row.emplace_back(k, v);
      }
      if (!row.empty()) rows.push_back(std::move(row));
    }
  }
  Echelon cons = rref(rows, xs.size());
  std::vector<SparseRow> out;
  for (auto& xv : cons.nullspace()) {
    QMat x(kRepDim, kRepDim);
    for (auto& [k, v] : xv) x(xs[k].first, xs[k].second) = v;
    SparseRow d;
    for (std::size_t u = 0; u < lay.size(); ++u) {
      auto [g, rc] = lay.cell(u);
      QMat b = x * t[g] - t[g] * x;
      Rational v = b(rc / kRepDim, rc % kRepDim);
      if (!is_zero(v)) d.emplace_back(u, v);
    }
    if (!d.empty()) out.push_back(std::move(d));
  }
  return out;
}

inline std::vector<bool> movable_mask(const LieAlgebra& alg, const QTensor& a, const RepOptions& opt) {
  std::size_t n = alg.dim();
  std::vector<bool> m(n, opt.all_deformable);
  for (auto& d : opt.deformable) m[alg.index(d)] = true;
  if (opt.all_deformable || !opt.deformable.empty()) return m;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (!is_zero(a(k, i, j))) m[i] = m[j] = true;
  return m;
}

}  // namespace rep_detail

/// Deformed 5x5 matrices rho_i = T_i + G_i for the numeric deformed algebra
/// `deformed`, whose undeformed counterpart `base` is represented by `t`.
/// Residual freedom transverse to conjugations is exposed as symbols
/// prefix1, prefix2, ...; one Representation per solution branch.
inline std::vector<Representation> solve_representation(const LieAlgebra& base, const LieAlgebra& deformed,
                                                        const std::vector<QMat>& t, const RepOptions& opt = {}) {
  using namespace rep_detail;
  std::size_t n = base.dim();
  QTensor c = base.numeric();
  QTensor cd = deformed.numeric();
  QTensor a(n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) a(k, i, j) = cd(k, i, j) - c(k, i, j);

  auto movable = movable_mask(base, a, opt);
  Layout lay(n, movable, opt.affine_only);
  std::size_t m = lay.size();

  // Linear system. Split mode: L(G) = A T. Full mode: L(G) - A G = A T is
  // the linear part, the rest is quadratic and handled by the branch solver.
  std::vector<SparseRow> rows;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      auto lin = linear_part(lay, t, opt.mode == RepMode::Split ? c : cd, i, j);
      for (std::size_t e = 0; e < lin.size(); ++e) {
        Rational rhs;
        for (std::size_t k = 0; k < n; ++k)
          if (!is_zero(a(k, i, j))) rhs += a(k, i, j) * t[k](e / kRepDim, e % kRepDim);
        SparseRow row(lin[e].coef.begin(), lin[e].coef.end());
        if (!is_zero(rhs)) row.emplace_back(m, rhs);
        if (opt.mode == RepMode::Full && !row.empty() && row.front().first == m) {
          // constant-only row: quadratic terms may still balance it
          continue;
        }
        if (!row.empty()) rows.push_back(std::move(row));
      }
    }

  std::vector<Poly> g(m);
  std::vector<std::string> symbols;
  auto fresh = [&](std::size_t idx) {
    std::string s = opt.symbol_prefix + std::to_string(idx);
    symbols.push_back(s);
    return pvar(s);
  };

  Echelon gauge;
  gauge.cols = m;
  if (opt.gauge_fix)
    for (auto& d : gauge_directions(lay, t, movable, opt.affine_only)) gauge.insert(d);

  std::vector<Poly> quadratic;
  if (opt.mode == RepMode::Split) {
    Echelon e = rref(rows, m + 1);
    for (std::size_t r = 0; r < e.rows.size(); ++r)
      if (e.pivots[r] == m) throw NoSolution("linear system is inconsistent");
    SparseRow particular;
    for (std::size_t r = 0; r < e.rows.size(); ++r) {
      Rational v = sparse_at(e.rows[r], m);
      if (!is_zero(v)) particular.emplace_back(e.pivots[r], v);
    }
    std::sort(particular.begin(), particular.end(), [](auto& x, auto& y) { return x.first < y.first; });
    Echelon hom;
    hom.cols = m + 1;
    hom.rows = e.rows;
    hom.pivots = e.pivots;
    std::vector<SparseRow> null;
    for (auto& v : hom.nullspace())
      if (v.back().first != m) null.push_back(v);
    particular = gauge.reduce(particular);
    std::vector<SparseRow> comp;
    for (auto& v : null) {
      auto r = gauge.reduce(v);
      if (!r.empty()) comp.push_back(std::move(r));
    }
    Echelon ce = rref(comp, m);
    for (auto& [u, v] : particular) g[u] += Poly(v);
    for (std::size_t k = 0; k < ce.rows.size(); ++k) {
      Poly s = fresh(k + 1);
      for (auto& [u, v] : ce.rows[k]) g[u] += s * v;
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        PMat gi = symbolic_matrix(lay, g, i), gj = symbolic_matrix(lay, g, j);
        PMat q = commutator(gi, gj);
        for (std::size_t k = 0; k < n; ++k)
          if (!is_zero(a(k, i, j))) q = q - scaled(symbolic_matrix(lay, g, k), a(k, i, j));
        for (std::size_t r = 0; r < kRepDim; ++r)
          for (std::size_t col = 0; col < kRepDim; ++col)
            if (!q(r, col).is_zero()) quadratic.push_back(q(r, col));
      }
  } else {
    // every non-pivot coordinate of the gauge echelon is a symbol
    std::vector<bool> pivot(m, false);
    for (auto p : gauge.pivots) pivot[p] = true;
    std::size_t k = 0;
    for (std::size_t u = 0; u < m; ++u)
      if (!pivot[u]) g[u] = fresh(++k);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        PMat gi = symbolic_matrix(lay, g, i), gj = symbolic_matrix(lay, g, j);
        PMat q = commutator(gi, gj) + commutator(gi, to_poly(t[j])) + commutator(to_poly(t[i]), gj);
        for (std::size_t kk = 0; kk < n; ++kk) {
          if (!is_zero(cd(kk, i, j))) q = q - scaled(symbolic_matrix(lay, g, kk), cd(kk, i, j));
          if (!is_zero(a(kk, i, j))) q = q - scaled(to_poly(t[kk]), a(kk, i, j));
        }
        for (std::size_t r = 0; r < kRepDim; ++r)
          for (std::size_t col = 0; col < kRepDim; ++col)
            if (!q(r, col).is_zero()) quadratic.push_back(q(r, col));
      }
  }

  std::vector<Var> order;
  for (auto& s : symbols) order.emplace_back(s);
  BranchSolver solver(order);
  auto branches = solver.solve(quadratic);
  if (branches.empty()) throw NoSolution("quadratic conditions are inconsistent");

  std::vector<Representation> out;
  for (auto& b : branches) {
    Representation rep;
    rep.generators = base.labels();
    std::set<std::string> used;
    for (std::size_t i = 0; i < n; ++i) {
      PMat mat = to_poly(t[i]);
      PMat gi = symbolic_matrix(lay, g, i);
      for (std::size_t r = 0; r < kRepDim; ++r)
        for (std::size_t col = 0; col < kRepDim; ++col) {
          mat(r, col) += b.apply(gi(r, col));
          for (auto& v : mat(r, col).variables()) used.insert(v);
        }
      rep.matrices.push_back(std::move(mat));
    }
    rep.constraints = b.residual;
    for (auto& q : b.residual)
      for (auto& v : q.variables()) used.insert(v);
    for (auto& s : symbols)
      if (used.count(s)) rep.free_symbols.push_back(s);
    out.push_back(std::move(rep));
  }
  return out;
}

namespace rep_detail {

// Deterministic nonzero trial values 1, -1, 2, -2, 1/2, 3, ...
inline Rational trial_value(std::size_t k) {
  static const long nums[] = {1, -1, 2, -2, 3, -3, 1, -1, 5, 4};
  static const long dens[] = {1, 1, 1, 1, 1, 1, 2, 2, 1, 3};
  return make_rational(nums[k % 10], dens[k % 10]);
}

}  // namespace rep_detail

/// A rational point of the constraint set with every free symbol assigned.
/// Each constraint in turn is solved for one symbol (linear, or quadratic
/// with a rational root) after fixing the others to trial values; `attempt`
/// shifts the trial sequence. Nullopt when this attempt found no point.
inline std::optional<std::map<std::string, Rational>> sample_point(const std::vector<Poly>& constraints,
                                                                 const std::vector<std::string>& symbols,
                                                                 std::size_t attempt = 0) {
  std::map<std::string, Rational> at;
  std::size_t counter = attempt * 3;
  auto next = [&] { return rep_detail::trial_value(counter++); };
  for (auto& q0 : constraints) {
    Poly q = partial_eval(q0, at);
    if (q.is_constant()) {
      if (!q.is_zero()) return std::nullopt;
      continue;
    }
    auto vars = q.variables();
    // prefer a symbol that enters linearly
    std::string pick = vars.front();
    for (auto& v : vars) {
      Rational a;
      Poly b, c;
      detail::split_in(q, Var(v).id, a, b, c);
      if (is_zero(a)) {
        pick = v;
        break;
      }
    }
    for (auto& v : vars)
      if (v != pick) at[v] = next();
    q = partial_eval(q, at);
    Rational a;
    Poly b, c;
    detail::split_in(q, Var(pick).id, a, b, c);
    Rational bb = b.constant_term(), cc = c.constant_term();
    if (is_zero(a)) {
      if (is_zero(bb)) {
        if (!is_zero(cc)) return std::nullopt;
        at[pick] = next();
      } else {
        at[pick] = -cc / bb;
      }
    } else {
      auto r = rational_sqrt(bb * bb - 4 * a * cc);
      if (!r) return std::nullopt;
      at[pick] = (-bb + *r) / (2 * a);
    }
  }
  for (auto& s : symbols)
    if (!at.count(s)) at[s] = next();
  for (auto& q : constraints)
    if (!is_zero(poly_eval(q, at))) return std::nullopt;
  return at;
}

/// Numeric matrices of one rational point of the representation.
inline std::vector<QMat> sample_representation(const Representation& rep, std::size_t attempts = 24) {
  for (std::size_t k = 0; k < attempts; ++k)
    if (auto at = sample_point(rep.constraints, rep.free_symbols, k)) return rep.evaluated(*at).numeric();
  throw NonlinearResidual("no rational point found on " + std::to_string(rep.constraints.size()) +
                          " residual relation(s)");
}

/// Linear independence of the generator matrices.
inline bool is_faithful(const std::vector<QMat>& mats) {
  std::vector<SparseRow> rows;
  for (auto& m : mats) {
    SparseRow r;
    for (std::size_t a = 0; a < m.rows(); ++a)
      for (std::size_t b = 0; b < m.cols(); ++b)
        if (!is_zero(m(a, b))) r.emplace_back(a * m.cols() + b, m(a, b));
    rows.push_back(std::move(r));
  }
  std::size_t cols = mats.empty() ? 0 : mats.front().rows() * mats.front().cols();
  return rref(rows, cols).rows.size() == mats.size();
}

struct SupportSearch {
  std::vector<std::string> deformable;        // generators allowed to move
  std::vector<Representation> branches;        // faithful branches over all minimal supports
  std::vector<std::vector<QMat>> samples;      // one rational point per branch
  std::size_t unsampled = 0;                   // branches without a rational point
};

/// Translations (generators with vanishing linear block) always move; among
/// the remaining generators the smallest subsets whose deformation admits a
/// faithful solution are used, and every subset of that size contributes.
inline SupportSearch solve_minimal_support(const LieAlgebra& base, const LieAlgebra& deformed,
                                           const std::vector<QMat>& t, RepOptions opt = {}) {
  std::size_t n = base.dim();
  std::vector<std::size_t> linear, translations;
  for (std::size_t i = 0; i < n; ++i) {
    bool lin = false;
    for (std::size_t a = 0; a + 1 < kRepDim; ++a)
      for (std::size_t b = 0; b + 1 < kRepDim; ++b)
        if (!is_zero(t[i](a, b))) lin = true;
    (lin ? linear : translations).push_back(i);
  }
  opt.mode = RepMode::Full;
  opt.all_deformable = false;
  SupportSearch out;
  std::size_t l = linear.size();
  for (std::size_t size = 0; size <= l; ++size) {
    for (std::uint32_t mask = 0; mask < (1u << l); ++mask) {
      if (static_cast<std::size_t>(std::popcount(mask)) != size) continue;
      opt.deformable.clear();
      for (auto i : translations) opt.deformable.push_back(base.labels()[i]);
      for (std::size_t b = 0; b < l; ++b)
        if (mask & (1u << b)) opt.deformable.push_back(base.labels()[linear[b]]);
      std::vector<Representation> reps;
      try {
        reps = solve_representation(base, deformed, t, opt);
      } catch (const NoSolution&) {
        continue;
      }
      for (auto& r : reps) {
        std::vector<QMat> sample;
        try {
          sample = sample_representation(r);
        } catch (const NonlinearResidual&) {
          out.branches.push_back(std::move(r));
          ++out.unsampled;
          continue;
        }
        if (!is_faithful(sample)) continue;
        if (out.deformable.empty()) out.deformable = opt.deformable;
        out.branches.push_back(std::move(r));
        out.samples.push_back(std::move(sample));
      }
    }
    if (!out.samples.empty() || out.unsampled) return out;
  }
  throw NoSolution("no faithful deformation of the representation");
}

struct GaugeMap {
  QMat t;
  std::vector<QMat> solution_space;  // basis of {T : T A_i = B_i T}
};

/// Invertible T with T a_i = b_i T for all i, if one exists over the rationals.
inline std::optional<GaugeMap> find_gauge_map(const std::vector<QMat>& a, const std::vector<QMat>& b) {
  if (a.size() != b.size()) throw DimensionMismatch("gauge map between representations of different size");
  std::size_t d = a.empty() ? kRepDim : a.front().rows();
  std::size_t m = d * d;
  std::vector<SparseRow> rows;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c) {
        // (T a)(r,c) - (b T)(r,c)
        std::map<std::size_t, Rational> coef;
        for (std::size_t k = 0; k < d; ++k) {
          if (!is_zero(a[i](k, c))) coef[r * d + k] += a[i](k, c);
          if (!is_zero(b[i](r, k))) coef[k * d + c] -= b[i](r, k);
        }
        SparseRow row;
        for (auto& [u, v] : coef)
          if (!is_zero(v)) row.emplace_back(u, v);
        if (!row.empty()) rows.push_back(std::move(row));
      }
  Echelon e = rref(rows, m);
  GaugeMap g;
  for (auto& v : e.nullspace()) {
    QMat t(d, d);
    for (auto& [u, x] : v) t(u / d, u % d) = x;
    g.solution_space.push_back(std::move(t));
  }
  if (g.solution_space.empty()) return std::nullopt;
  // det is a polynomial on the solution space; if it is not identically zero
  // it is nonzero at one of a few spread-out integer points
  auto combo = [&](long trial) {
    QMat t(d, d);
    for (std::size_t k = 0; k < g.solution_space.size(); ++k) {
      long w = trial == 0 ? (k == 0 ? 1 : 0) : 1 + (static_cast<long>(k) * 7 + trial * 13) % 23;
      if (w == 0) continue;
      for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c) t(r, c) += Rational(w) * g.solution_space[k](r, c);
    }
    return t;
  };
  for (long trial = 0; trial < 12; ++trial) {
    QMat t = combo(trial);
    try {
      (void)inverse(t);
      g.t = t;
      return g;
    } catch (const SingularMatrix&) {
    }
  }
  return std::nullopt;
}

/// Union-find partition by pairwise gauge reachability.
inline std::vector<std::vector<std::size_t>> count_inequivalent(const std::vector<std::vector<QMat>>& reps) {
  std::vector<std::size_t> parent(reps.size());
  for (std::size_t i = 0; i < reps.size(); ++i) parent[i] = i;
  std::function<std::size_t(std::size_t)> root = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = root(parent[x]);
  };
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (std::size_t j = i + 1; j < reps.size(); ++j) {
      if (root(i) == root(j)) continue;
      if (find_gauge_map(reps[i], reps[j])) parent[root(j)] = root(i);
    }
  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < reps.size(); ++i) groups[root(i)].push_back(i);
  std::vector<std::vector<std::size_t>> out;
  for (auto& [r, v] : groups) out.push_back(v);
  return out;
}


struct FamilyClassification {
  std::string family;
  std::map<std::string, Rational> assignment;
  bool affine_only = true;
  SupportSearch search;
  std::vector<std::vector<std::size_t>> classes;  // indices into search.samples
  std::string failure;                            // set when no faithful representation exists
};

/// Natural-representation classes of a catalog family at its sample point
/// (or at `at`), with unspecified parameters set to zero.
inline FamilyClassification classify_family(const CatalogEntry& e, const std::string& label,
                                            const std::optional<std::map<std::string, Rational>>& at = std::nullopt,
                                            std::optional<bool> affine_only = std::nullopt) {
  auto& fx = e.family(label);
  DeformationFamily fam = e.deformation(label);
  FamilyClassification out;
  out.family = label;
  const auto& src = at ? *at : fx.rep_sample;
  for (auto& p : fam.free_parameters) out.assignment[p] = src.count(p) ? src.at(p) : Rational(0);
  out.affine_only = affine_only.value_or(fx.representation_affine);
  LieAlgebra alg = deform_algebra(e.algebra, fam, out.assignment);
  RepOptions opt;
  opt.affine_only = out.affine_only;
  try {
    out.search = solve_minimal_support(e.algebra, alg, base_representation(e), opt);
  } catch (const NoSolution& ex) {
    out.failure = ex.what();
    return out;
  }
  out.classes = count_inequivalent(out.search.samples);
  return out;
}

/// Deformed algebra a fixture lives on: the family's substitutions followed
/// by the fixture's own parameter conditions.
inline LieAlgebra fixture_algebra(const CatalogEntry& e, const FamilyFixture& f, const RepresentationFixture& r) {
  DeformationFamily d = e.deformation(f.label);
  for (auto& [k, v] : d.substitutions) v = substitute(v, r.specialization);
  for (auto& [k, v] : r.specialization) d.substitutions.emplace(k, v);
  return deformed_symbolic(d);
}

inline Representation fixture_representation(const CatalogEntry& e, const RepresentationFixture& r) {
  Representation out;
  out.generators = e.generator_order;
  for (auto& g : e.generator_order) {
    auto it = r.matrices.find(g);
    out.matrices.push_back(it != r.matrices.end() ? it->second : to_poly(poincare_matrix(g)));
  }
  out.free_symbols = r.free_symbols;
  if (r.auxiliary) out.constraints.push_back(*r.auxiliary);
  return out;
}

struct FixtureCheck {
  std::vector<RepresentationResidual> residuals;  // symbolic, before using the auxiliary relation
  std::size_t samples = 0;
  std::size_t failures = 0;  // sample points on the auxiliary variety with a nonzero residual
  bool ok() const { return failures == 0 && (samples > 0 || residuals.empty()); }
};

/// Checks the fixture's matrices against the algebra.  Without an auxiliary
/// relation the check is exact; with one, residuals are evaluated at random
/// rational points of the relation (solved for a variable it is linear in).
inline FixtureCheck check_fixture(const CatalogEntry& e, const FamilyFixture& f, const RepresentationFixture& r,
                                  std::size_t samples = 20, std::uint32_t seed = 7) {
  LieAlgebra alg = fixture_algebra(e, f, r);
  Representation rep = fixture_representation(e, r);
  FixtureCheck out;
  out.residuals = verify_representation(rep, alg);
  if (out.residuals.empty() || !r.auxiliary) return out;
  std::set<std::string> names;
  for (auto& x : out.residuals)
    for (auto& n : x.value.variables()) names.insert(n);
  for (auto& n : r.auxiliary->variables()) names.insert(n);
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 4);
  for (std::size_t s = 0; s < samples; ++s) {
    std::optional<std::map<std::string, Rational>> at;
    for (int tries = 0; tries < 50 && !at; ++tries) {
      std::map<std::string, Rational> pt;
      for (auto& n : names) pt[n] = make_rational(num(rng), den(rng));
      for (auto& n : r.auxiliary->variables()) {
        Var v(n);
        Poly rest = *r.auxiliary;
        Rational a;
        Poly b, c;
        if (rest.degree() == 0) break;
        // aux = b*v + c with b, c free of v
        detail::split_in(rest, v.id, a, b, c);
        if (!is_zero(a)) continue;
        auto others = pt;
        others.erase(n);
        Rational bv = poly_eval(b, others);
        if (is_zero(bv)) continue;
        pt[n] = -poly_eval(c, others) / bv;
        at = pt;
        break;
      }
    }
    if (!at) break;
    ++out.samples;
    for (auto& x : out.residuals)
      if (!is_zero(poly_eval(x.value, *at))) {
        ++out.failures;
        break;
      }
  }
  if (out.samples == 0) out.failures = 1;
  return out;
}

}  // namespace liedeform
