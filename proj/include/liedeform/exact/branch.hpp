#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "liedeform/exact/linalg.hpp"
#include "liedeform/exact/poly.hpp"

namespace liedeform {

/// One component of the zero set of a system of polynomials of degree <= 2.
/// `subs` expresses solved variables as affine forms in the remaining ones;
/// `residual` holds equations that neither are linear nor factor over the
/// rationals after substitution. A branch with empty residual is resolved.
struct Branch {
  std::map<std::uint32_t, Poly> subs;
  std::vector<Poly> residual;

  bool resolved() const { return residual.empty(); }

  std::map<std::string, Poly> named_subs() const {
    std::map<std::string, Poly> out;
    for (auto& [v, p] : subs) out.emplace(VarTable::instance().name(v), p);
    return out;
  }
  Poly apply(const Poly& p) const { return substitute(p, subs); }

  std::string key() const {
    std::string k;
    for (auto& [n, p] : named_subs()) k += n + "=" + p.to_string() + ";";
    k += "|";
    for (auto& r : residual) k += r.to_string() + ";";
    return k;
  }
};

class BranchSolver {
 public:
  /// `order` fixes pivot preference: when a linear equation is solved, the
  /// variable latest in `order` becomes the dependent one. Variables missing
  /// from `order` rank after every listed one, alphabetically.
  explicit BranchSolver(std::vector<Var> order = {}) : order_(std::move(order)) {}

  std::vector<Branch> solve(const std::vector<Poly>& equations) {
    seen_.clear();
    leaves_.clear();
    rank_.clear();
    for (std::size_t i = 0; i < order_.size(); ++i) rank_[order_[i].id] = i;
    std::vector<Poly> eqs;
    for (auto& e : equations) {
      if (e.degree() > 2) throw DegreeTooHigh(e.to_string());
      if (!e.is_zero()) eqs.push_back(e);
    }
    explore({}, eqs);
    return finalize();
  }

 private:
  std::vector<Var> order_;
  std::unordered_map<std::uint32_t, std::size_t> rank_;
  std::set<std::string> seen_;
  std::vector<Branch> leaves_;

  std::pair<std::size_t, std::string> var_rank(std::uint32_t id) const {
    auto it = rank_.find(id);
    if (it != rank_.end()) return {it->second, ""};
    return {order_.size(), VarTable::instance().name(id)};
  }

  // Columns of the linear system ordered so that preferred pivots come first.
  std::vector<std::uint32_t> column_order(const std::set<std::uint32_t>& ids) const {
    std::vector<std::uint32_t> cols(ids.begin(), ids.end());
    std::sort(cols.begin(), cols.end(), [&](auto a, auto b) { return var_rank(a) > var_rank(b); });
    return cols;
  }

  // Solves a set of linear forms jointly. Returns false if inconsistent.
  bool solve_linear(const std::vector<Poly>& lin, std::map<std::uint32_t, Poly>& solved) const {
    std::set<std::uint32_t> ids;
    for (auto& l : lin)
      for (auto v : l.var_ids()) ids.insert(v);
    auto cols = column_order(ids);
    std::unordered_map<std::uint32_t, std::size_t> col_of;
    for (std::size_t i = 0; i < cols.size(); ++i) col_of[cols[i]] = i;
    std::size_t kconst = cols.size();
    std::vector<SparseRow> rows;
    for (auto& l : lin) {
      SparseRow r;
      for (auto& [m, c] : l.terms()) r.emplace_back(m.empty() ? kconst : col_of.at(m.front().first), c);
      std::sort(r.begin(), r.end(), [](auto& a, auto& b) { return a.first < b.first; });
      rows.push_back(std::move(r));
    }
    Echelon e = rref(rows, kconst + 1);
    for (std::size_t r = 0; r < e.rows.size(); ++r) {
      if (e.pivots[r] == kconst) return false;
      Poly rhs;
      for (auto& [c, v] : e.rows[r]) {
        if (c == e.pivots[r]) continue;
        if (c == kconst)
          rhs -= Poly(v);
        else {
          Var x;
          x.id = cols[c];
          rhs -= Poly(x) * v;
        }
      }
      solved[cols[e.pivots[r]]] = rhs;
    }
    return true;
  }

  static std::map<std::uint32_t, Poly> compose(const std::map<std::uint32_t, Poly>& subs,
                                               const std::map<std::uint32_t, Poly>& fresh) {
    std::map<std::uint32_t, Poly> out;
    for (auto& [v, p] : subs) out[v] = substitute(p, fresh);
    for (auto& [v, p] : fresh) out[v] = p;
    return out;
  }

  static std::string state_key(const std::map<std::uint32_t, Poly>& subs) {
    std::string k;
    for (auto& [v, p] : subs) k += std::to_string(v) + "=" + p.to_string() + ";";
    return k;
  }

  void explore(const std::map<std::uint32_t, Poly>& subs, const std::vector<Poly>& eqs) {
    if (!seen_.insert(state_key(subs)).second) return;
    std::vector<Poly> live;
    std::set<std::string> dedupe;
    for (auto& e : eqs) {
      Poly r = substitute(e, subs);
      if (r.is_zero()) continue;
      if (r.is_constant()) return;  // inconsistent
      make_monic(r);
      if (dedupe.insert(r.to_string()).second) live.push_back(std::move(r));
    }
    if (live.empty()) {
      leaves_.push_back(Branch{subs, {}});
      return;
    }
    std::vector<Poly> lin;
    for (auto& e : live)
      if (e.degree() == 1) lin.push_back(e);
    if (!lin.empty()) {
      std::map<std::uint32_t, Poly> fresh;
      if (!solve_linear(lin, fresh)) return;
      explore(compose(subs, fresh), live);
      return;
    }
    // branch on the first rationally factorable equation (canonical order)
    std::sort(live.begin(), live.end(), [](const Poly& a, const Poly& b) {
      if (a.terms().size() != b.terms().size()) return a.terms().size() < b.terms().size();
      return a.to_string() < b.to_string();
    });
    for (auto& e : live) {
      auto f = factor_as_linear_product(e);
      if (!f) continue;
      for (const Poly* l : {&f->first, &f->second}) {
        std::map<std::uint32_t, Poly> fresh;
        if (!solve_linear({*l}, fresh)) continue;
        explore(compose(subs, fresh), live);
      }
      return;
    }
    leaves_.push_back(Branch{subs, live});
  }

  // Canonical form: the linear part is re-derived by RREF over the defining
  // forms so equal varieties reached along different paths compare equal.
  Branch canonical(const Branch& b) const {
    std::vector<Poly> lin;
    for (auto& [v, p] : b.subs) {
      Var x;
      x.id = v;
      lin.push_back(Poly(x) - p);
    }
    Branch out;
    solve_linear(lin, out.subs);
    std::set<std::string> seen;
    for (auto& r : b.residual) {
      Poly q = substitute(r, out.subs);
      if (q.is_zero()) continue;
      make_monic(q);
      if (seen.insert(q.to_string()).second) out.residual.push_back(q);
    }
    std::sort(out.residual.begin(), out.residual.end(),
              [](const Poly& a, const Poly& c) { return a.to_string() < c.to_string(); });
    return out;
  }

  // X is inside Y when every defining equation of Y vanishes on X.
  static bool contained(const Branch& x, const Branch& y) {
    auto vanishes = [&](const Poly& eq) {
      Poly r = substitute(eq, x.subs);
      if (r.is_zero()) return true;
      make_monic(r);
      for (auto& q : x.residual)
        if (q == r) return true;
      return false;
    };
    for (auto& [v, p] : y.subs) {
      Var xv;
      xv.id = v;
      if (!vanishes(Poly(xv) - p)) return false;
    }
    for (auto& q : y.residual)
      if (!vanishes(q)) return false;
    return true;
  }

  std::vector<Branch> finalize() const {
    std::map<std::string, Branch> uniq;
    for (auto& l : leaves_) {
      Branch c = canonical(l);
      uniq.emplace(c.key(), c);
    }
    std::vector<Branch> all;
    for (auto& [k, b] : uniq) all.push_back(b);
    std::vector<Branch> out;
    for (std::size_t i = 0; i < all.size(); ++i) {
      bool redundant = false;
      for (std::size_t j = 0; j < all.size() && !redundant; ++j)
        if (i != j && contained(all[i], all[j])) redundant = true;
      if (!redundant) out.push_back(all[i]);
    }
    // fewer constraints first, then lexicographic
    std::sort(out.begin(), out.end(), [](const Branch& a, const Branch& b) {
      if (a.subs.size() != b.subs.size()) return a.subs.size() < b.subs.size();
      return a.key() < b.key();
    });
    return out;
  }
};

}  // namespace liedeform
