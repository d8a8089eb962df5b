#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "liedeform/exact/branch.hpp"
#include "liedeform/exact/linalg.hpp"
#include "liedeform/liealg.hpp"

namespace liedeform {

/// Antisymmetric A^k_ij, linear in `parameters`, over a numeric base algebra.
struct Cocycle {
  LieAlgebra base;
  PTensor a;
  std::vector<std::string> parameters;

  /// Coefficient tensor of one parameter (A is linear in its parameters).
  QTensor direction(const std::string& param) const {
    std::size_t n = base.dim();
    QTensor t(n);
    Var v(param);
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) t(k, i, j) = a(k, i, j).linear_coeff(v);
    return t;
  }
};

// Unknowns A^k_ij with i<j, ordered lexicographically in (k, i, j).
class CochainIndex {
 public:
  explicit CochainIndex(std::size_t n) : n_(n), pairs_(n * (n - 1) / 2) {}
  std::size_t size() const { return n_ * pairs_; }
  std::size_t pair(std::size_t i, std::size_t j) const {
    // i < j; row-major over the strict upper triangle
    return i * n_ - i * (i + 1) / 2 + (j - i - 1);
  }
  std::size_t at(std::size_t k, std::size_t i, std::size_t j) const { return k * pairs_ + pair(i, j); }

  SparseRow flatten(const QTensor& t) const {
    SparseRow r;
    for (std::size_t k = 0; k < n_; ++k)
      for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = i + 1; j < n_; ++j)
          if (!is_zero(t(k, i, j))) r.emplace_back(at(k, i, j), t(k, i, j));
    return r;
  }
  QTensor unflatten(const SparseRow& v) const {
    QTensor t(n_);
    for (std::size_t k = 0; k < n_; ++k)
      for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = i + 1; j < n_; ++j) {
          Rational x = sparse_at(v, at(k, i, j));
          t(k, i, j) = x;
          t(k, j, i) = -x;
        }
    return t;
  }

 private:
  std::size_t n_, pairs_;
};

/// Rows of the linearized Jacobi system for the numeric structure tensor c.
inline std::vector<SparseRow> linearized_jacobi_rows(const QTensor& c) {
  std::size_t n = c.dim();
  CochainIndex idx(n);
  std::vector<SparseRow> rows;
  auto add = [&](std::map<std::size_t, Rational>& row, std::size_t k, std::size_t i, std::size_t j,
                 const Rational& coef) {
    if (i == j || is_zero(coef)) return;
    if (i < j)
      row[idx.at(k, i, j)] += coef;
    else
      row[idx.at(k, j, i)] -= coef;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        for (std::size_t m = 0; m < n; ++m) {
          std::map<std::size_t, Rational> row;
          for (std::size_t l = 0; l < n; ++l) {
            // A^m_lk C^l_ij + A^m_li C^l_jk + A^m_lj C^l_ki
            add(row, m, l, k, c(l, i, j));
            add(row, m, l, i, c(l, j, k));
            add(row, m, l, j, c(l, k, i));
            // C^m_lk A^l_ij + C^m_li A^l_jk + C^m_lj A^l_ki
            add(row, l, i, j, c(m, l, k));
            add(row, l, j, k, c(m, l, i));
            add(row, l, k, i, c(m, l, j));
          }
          SparseRow r;
          for (auto& [col, v] : row)
            if (!is_zero(v)) r.emplace_back(col, v);
          if (!r.empty()) rows.push_back(std::move(r));
        }
  return rows;
}

inline Cocycle cocycle_from_basis(const LieAlgebra& alg, const std::vector<QTensor>& basis,
                                  const std::string& prefix) {
  Cocycle z{alg, PTensor(alg.dim()), {}};
  std::size_t n = alg.dim();
  for (std::size_t b = 0; b < basis.size(); ++b) {
    std::string name = prefix + std::to_string(b + 1);
    z.parameters.push_back(name);
    Poly p = pvar(name);
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (!is_zero(basis[b](k, i, j))) z.a(k, i, j).add_scaled(p, basis[b](k, i, j));
  }
  return z;
}

struct CocycleSpace {
  Cocycle general;  // one parameter c1..cd per nullspace vector
  std::vector<QTensor> basis;
  std::size_t dimension = 0;
};

inline CocycleSpace solve_linearized_jacobi(const LieAlgebra& alg) {
  QTensor c = alg.numeric();
  CochainIndex idx(alg.dim());
  Echelon e = rref(linearized_jacobi_rows(c), idx.size());
  CocycleSpace out;
  for (auto& v : e.nullspace()) out.basis.push_back(idx.unflatten(v));
  out.dimension = out.basis.size();
  out.general = cocycle_from_basis(alg, out.basis, "c");
  return out;
}

/// d(phi)^k_ij = phi^k_l C^l_ij - C^k_lj phi^l_i - C^k_il phi^l_j
inline QTensor coboundary_of(const QTensor& c, const QMat& phi) {
  std::size_t n = c.dim();
  QTensor t(n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Rational s(0);
        for (std::size_t l = 0; l < n; ++l)
          s += phi(k, l) * c(l, i, j) - c(k, l, j) * phi(l, i) - c(k, i, l) * phi(l, j);
        t(k, i, j) = s;
      }
  return t;
}

struct CoboundaryBasis {
  LieAlgebra base;
  std::vector<QTensor> generators;  // one per elementary phi = E_pq, row-major
  std::size_t dimension = 0;
  Echelon span;
};

inline CoboundaryBasis coboundary_space(const LieAlgebra& alg) {
  QTensor c = alg.numeric();
  std::size_t n = alg.dim();
  CochainIndex idx(n);
  CoboundaryBasis out{alg, {}, 0, {}};
  std::vector<SparseRow> rows;
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) {
      QMat phi(n, n);
      phi(p, q) = 1;
      out.generators.push_back(coboundary_of(c, phi));
      rows.push_back(idx.flatten(out.generators.back()));
    }
  out.span = rref(rows, idx.size());
  out.dimension = out.span.rank();
  return out;
}

inline bool in_coboundary_span(const CoboundaryBasis& b, const QTensor& t) {
  CochainIndex idx(b.base.dim());
  return b.span.reduce(idx.flatten(t)).empty();
}

struct QuotientSpace {
  Cocycle representatives;  // parameters h1..hq
  std::vector<QTensor> basis;
  std::size_t cocycle_dimension = 0;
  std::size_t coboundary_dimension = 0;
  std::size_t dimension = 0;
};

inline QuotientSpace nontrivial_directions(const LieAlgebra& alg) {
  auto z = solve_linearized_jacobi(alg);
  auto b = coboundary_space(alg);
  CochainIndex idx(alg.dim());
  Echelon ext = b.span;
  QuotientSpace out;
  out.cocycle_dimension = z.dimension;
  out.coboundary_dimension = b.dimension;
  for (auto& v : z.basis)
    if (ext.insert(idx.flatten(v))) out.basis.push_back(v);
  out.dimension = out.basis.size();
  out.representatives = cocycle_from_basis(alg, out.basis, "h");
  return out;
}

/// Linearized Jacobi residuals of a parametrized cocycle (empty iff it is a
/// cocycle identically in its parameters).
inline std::vector<JacobiViolation> linearized_residuals(const Cocycle& z) {
  PTensor c = z.base.structure();
  std::vector<JacobiViolation> out;
  std::size_t n = z.base.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        for (std::size_t m = 0; m < n; ++m) {
          Poly r = cyclic_contraction(z.a, c, i, j, k, m) + cyclic_contraction(c, z.a, i, j, k, m);
          if (!r.is_zero()) out.push_back({i, j, k, m, std::move(r)});
        }
  return out;
}

struct ObstructionEntry {
  std::size_t a, c, d, e;  // (A.A)^a_cde with c<d<e
  Poly value;
};

struct Obstruction {
  std::size_t dim = 0;
  std::vector<ObstructionEntry> entries;  // nonzero entries only
  bool is_zero() const { return entries.empty(); }
  std::vector<Poly> polynomials() const {
    std::vector<Poly> out;
    for (auto& e : entries) out.push_back(e.value);
    return out;
  }
};

inline Obstruction quadratic_obstruction(const Cocycle& z) {
  std::size_t n = z.base.dim();
  Obstruction out{n, {}};
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t d = c + 1; d < n; ++d)
      for (std::size_t e = d + 1; e < n; ++e)
        for (std::size_t a = 0; a < n; ++a) {
          Poly v = cyclic_contraction(z.a, z.a, c, d, e, a);
          if (!v.is_zero()) out.entries.push_back({a, c, d, e, std::move(v)});
        }
  return out;
}

/// Canonical basis (RREF rows over the monomial basis) of the linear span of
/// a set of polynomials; two sets generate the same vector space iff their
/// spans compare equal.
inline std::vector<Poly> polynomial_span(const std::vector<Poly>& polys) {
  std::map<std::string, Monomial> mono_by_name;
  for (auto& p : polys)
    for (auto& [m, c] : p.terms()) {
      Poly single;
      single.add_term(m, Rational(1));
      mono_by_name.emplace(single.to_string(), m);
    }
  std::vector<Monomial> cols;
  std::map<Monomial, std::size_t> col_of;
  for (auto& [name, m] : mono_by_name) {
    col_of.emplace(m, cols.size());
    cols.push_back(m);
  }
  std::vector<SparseRow> rows;
  for (auto& p : polys) {
    SparseRow r;
    for (auto& [m, c] : p.terms()) r.emplace_back(col_of.at(m), c);
    std::sort(r.begin(), r.end(), [](auto& x, auto& y) { return x.first < y.first; });
    rows.push_back(std::move(r));
  }
  Echelon e = rref(rows, cols.size());
  std::vector<Poly> out;
  for (auto& r : e.rows) {
    Poly p;
    for (auto& [col, v] : r) p.add_term(cols[col], v);
    out.push_back(std::move(p));
  }
  return out;
}

struct DeformationFamily {
  std::string label;
  Cocycle parent;
  std::map<std::string, Poly> substitutions;
  std::vector<std::string> free_parameters;
  std::optional<Poly> nontriviality;

  PTensor tensor() const {
    std::size_t n = parent.base.dim();
    PTensor t(n);
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) t(k, i, j) = substitute(parent.a(k, i, j), substitutions);
    return t;
  }
  Cocycle restricted() const { return Cocycle{parent.base, tensor(), free_parameters}; }
};

/// Parameter-space directions d with sum_i d_i * (dA/dparam_i) a coboundary.
/// Returned as a basis of vectors indexed like z.parameters.
inline std::vector<std::vector<Rational>> trivial_parameter_directions(const Cocycle& z) {
  auto b = coboundary_space(z.base);
  CochainIndex idx(z.base.dim());
  std::size_t p = z.parameters.size();
  // columns: cochain coordinates after reduction, then one tag column per
  // parameter so the RREF records the combination
  std::vector<SparseRow> rows;
  for (std::size_t i = 0; i < p; ++i) {
    SparseRow r = b.span.reduce(idx.flatten(z.direction(z.parameters[i])));
    r.emplace_back(idx.size() + i, Rational(1));
    rows.push_back(std::move(r));
  }
  Echelon e = rref(rows, idx.size() + p);
  std::vector<std::vector<Rational>> out;
  for (auto& r : e.rows) {
    if (r.front().first < idx.size()) continue;
    std::vector<Rational> d(p, Rational(0));
    for (auto& [c, v] : r) d[c - idx.size()] = v;
    out.push_back(std::move(d));
  }
  return out;
}

namespace detail {

// Spanning vectors (in parameter coordinates) of the subspace cut out by
// homogeneous linear substitutions; nullopt if any substitution is not.
inline std::optional<std::vector<std::vector<Rational>>> substitution_span(const std::map<std::string, Poly>& subs,
                                                                           const std::vector<std::string>& params) {
  for (auto& [k, v] : subs)
    if (v.degree() > 1 || !is_zero(v.constant_term())) return std::nullopt;
  std::vector<std::vector<Rational>> out;
  for (auto& fp : params) {
    if (subs.count(fp)) continue;
    Var fv(fp);
    std::vector<Rational> v(params.size(), Rational(0));
    for (std::size_t i = 0; i < params.size(); ++i) {
      auto it = subs.find(params[i]);
      if (it == subs.end())
        v[i] = params[i] == fp ? Rational(1) : Rational(0);
      else
        v[i] = it->second.linear_coeff(fv);
    }
    out.push_back(std::move(v));
  }
  return out;
}

inline std::optional<std::vector<std::vector<Rational>>> branch_span(const Branch& b,
                                                                     const std::vector<std::string>& params) {
  if (!b.resolved()) return std::nullopt;
  return substitution_span(b.named_subs(), params);
}

inline std::size_t span_rank(const std::vector<std::vector<Rational>>& vs, std::size_t dim) {
  std::vector<SparseRow> rows;
  for (auto& v : vs) rows.push_back(to_sparse(v));
  return rank(rows, dim);
}


// Basis of span(xs) ∩ span(ts) in R^dim.
inline std::vector<std::vector<Rational>> intersect(const std::vector<std::vector<Rational>>& xs,
                                                    const std::vector<std::vector<Rational>>& ts, std::size_t dim) {
  // solve sum a_k t_k - sum b_j x_j = 0; columns a then b
  std::size_t nt = ts.size(), nx = xs.size();
  std::vector<SparseRow> rows;
  for (std::size_t c = 0; c < dim; ++c) {
    SparseRow r;
    for (std::size_t k = 0; k < nt; ++k)
      if (!is_zero(ts[k][c])) r.emplace_back(k, ts[k][c]);
    for (std::size_t j = 0; j < nx; ++j)
      if (!is_zero(xs[j][c])) r.emplace_back(nt + j, -xs[j][c]);
    if (!r.empty()) rows.push_back(std::move(r));
  }
  Echelon e = rref(rows, nt + nx);
  std::vector<SparseRow> vecs;
  for (auto& n : e.nullspace()) {
    std::vector<Rational> v(dim, Rational(0));
    for (auto& [k, a] : n)
      if (k < nt)
        for (std::size_t c = 0; c < dim; ++c) v[c] += a * ts[k][c];
    vecs.push_back(to_sparse(v));
  }
  std::vector<std::vector<Rational>> out;
  for (auto& r : rref(vecs, dim).rows) out.push_back(to_dense(r, dim));
  return out;
}

}  // namespace detail

struct EnumerationOptions {
  std::optional<Poly> nontriviality;
  bool merge_trivial_directions = true;
  std::string label_prefix = "family";
};

/// Branches of A.A = 0, with branches that violate non-triviality identically
/// dropped. With merge_trivial_directions, two branches of equal dimension
/// that each lie inside the other up to trivial directions they contain are
/// reported once (the earlier one is kept).
inline std::vector<DeformationFamily> enumerate_families(const Cocycle& z, const Obstruction& obs,
                                                         const EnumerationOptions& opt = {}) {
  std::vector<Var> order;
  for (auto& p : z.parameters) order.emplace_back(p);
  BranchSolver solver(order);
  auto branches = solver.solve(obs.polynomials());
  for (auto& b : branches)
    if (!b.resolved()) throw UnresolvedBranch(b.residual.front().to_string());

  std::vector<Branch> kept;
  for (auto& b : branches) {
    if (opt.nontriviality && b.apply(*opt.nontriviality).is_zero()) continue;
    kept.push_back(b);
  }

  if (opt.merge_trivial_directions) {
    auto dirs = trivial_parameter_directions(z);
    std::size_t p = z.parameters.size();
    std::vector<std::optional<std::vector<std::vector<Rational>>>> spans, trivial;
    for (auto& b : kept) {
      spans.push_back(detail::branch_span(b, z.parameters));
      trivial.push_back(spans.back() ? std::optional(detail::intersect(*spans.back(), dirs, p)) : std::nullopt);
    }
    // x lies in y up to trivial directions that x itself contains
    auto inside = [&](std::size_t x, std::size_t y) {
      auto base = *spans[y];
      base.insert(base.end(), trivial[x]->begin(), trivial[x]->end());
      auto with_x = base;
      with_x.insert(with_x.end(), spans[x]->begin(), spans[x]->end());
      return detail::span_rank(base, p) == detail::span_rank(with_x, p);
    };
    std::vector<bool> drop(kept.size(), false);
    for (std::size_t y = 0; y < kept.size(); ++y) {
      if (drop[y] || !spans[y]) continue;
      for (std::size_t x = y + 1; x < kept.size(); ++x) {
        if (drop[x] || !spans[x] || spans[x]->size() != spans[y]->size()) continue;
        if (inside(x, y) && inside(y, x)) drop[x] = true;
      }
    }
    std::vector<Branch> merged;
    for (std::size_t i = 0; i < kept.size(); ++i)
      if (!drop[i]) merged.push_back(kept[i]);
    kept = std::move(merged);
  }

  std::vector<DeformationFamily> out;
  for (std::size_t i = 0; i < kept.size(); ++i) {
    DeformationFamily f;
    f.label = opt.label_prefix + std::to_string(i + 1);
    f.parent = z;
    f.substitutions = kept[i].named_subs();
    for (auto& p : z.parameters)
      if (!f.substitutions.count(p)) f.free_parameters.push_back(p);
    f.nontriviality = opt.nontriviality;
    out.push_back(std::move(f));
  }
  return out;
}

/// Whether family x lies inside family y up to the trivial directions x
/// contains (both given as substitutions on z's parameters).
inline bool family_inside(const Cocycle& z, const std::map<std::string, Poly>& x,
                          const std::map<std::string, Poly>& y) {
  std::size_t p = z.parameters.size();
  auto sx = detail::substitution_span(x, z.parameters), sy = detail::substitution_span(y, z.parameters);
  if (!sx || !sy) return false;
  auto base = *sy;
  auto tx = detail::intersect(*sx, trivial_parameter_directions(z), p);
  base.insert(base.end(), tx.begin(), tx.end());
  auto with_x = base;
  with_x.insert(with_x.end(), sx->begin(), sx->end());
  return detail::span_rank(base, p) == detail::span_rank(with_x, p);
}

/// Same family under the merge rule: equal dimension and mutual containment.
inline bool same_family(const Cocycle& z, const std::map<std::string, Poly>& x, const std::map<std::string, Poly>& y) {
  auto sx = detail::substitution_span(x, z.parameters), sy = detail::substitution_span(y, z.parameters);
  return sx && sy && sx->size() == sy->size() && family_inside(z, x, y) && family_inside(z, y, x);
}

/// C + A with A evaluated at the assignment; no Jacobi check.
inline LieAlgebra deform_unchecked(const LieAlgebra& alg, const PTensor& a,
                                   const std::map<std::string, Rational>& assignment) {
  std::size_t n = alg.dim();
  PTensor c = alg.structure();
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (!a(k, i, j).is_zero()) c(k, i, j) += Poly(poly_eval(a(k, i, j), assignment));
  return LieAlgebra(alg.name(), alg.labels(), std::move(c));
}

/// Symbolic deformed algebra C + A|family in the free parameters.
inline LieAlgebra deformed_symbolic(const DeformationFamily& f) {
  std::size_t n = f.parent.base.dim();
  PTensor c = f.parent.base.structure();
  PTensor a = f.tensor();
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) c(k, i, j) += a(k, i, j);
  return LieAlgebra(f.parent.base.name(), f.parent.base.labels(), std::move(c));
}

inline LieAlgebra deform_algebra(const LieAlgebra& alg, const DeformationFamily& f,
                                 const std::map<std::string, Rational>& assignment) {
  for (auto& p : f.free_parameters)
    if (!assignment.count(p)) throw MissingVariable(p);
  LieAlgebra out = deform_unchecked(alg, f.tensor(), assignment);
  auto v = check_jacobi(out);
  if (!v.empty())
    throw JacobiFailure(f.label + ": residual " + v.front().residual.to_string() + " at (" +
                        std::to_string(v.front().i) + "," + std::to_string(v.front().j) + "," +
                        std::to_string(v.front().k) + "," + std::to_string(v.front().m) + ")");
  return out;
}

}  // namespace liedeform
