#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "liedeform/exact/rational.hpp"

namespace liedeform {

// Parameter names are interned once per process; polynomials carry small ids.
class VarTable {
 public:
  static VarTable& instance() {
    static VarTable t;
    return t;
  }
  std::uint32_t intern(const std::string& name) {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = ids_.find(name);
    if (it != ids_.end()) return it->second;
    auto id = static_cast<std::uint32_t>(names_.size());
    names_.push_back(name);
    ids_.emplace(name, id);
    return id;
  }
  std::string name(std::uint32_t id) const {
    std::lock_guard<std::mutex> lock(mu_);
    return names_.at(id);
  }

 private:
  mutable std::mutex mu_;
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::uint32_t> ids_;
};

struct Var {
  std::uint32_t id = 0;
  Var() = default;
  explicit Var(const std::string& name) : id(VarTable::instance().intern(name)) {}
  std::string name() const { return VarTable::instance().name(id); }
  friend bool operator==(Var a, Var b) { return a.id == b.id; }
  friend bool operator<(Var a, Var b) { return a.id < b.id; }
};

/// Sparse monomial: (variable id, exponent) pairs sorted by id, exponents > 0.
using Monomial = std::vector<std::pair<std::uint32_t, std::uint32_t>>;

inline unsigned monomial_degree(const Monomial& m) {
  unsigned d = 0;
  for (auto& [v, e] : m) d += e;
  return d;
}

inline Monomial monomial_mul(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.push_back(b[j++]);
    } else {
      out.emplace_back(a[i].first, a[i].second + b[j].second);
      ++i;
      ++j;
    }
  }
  return out;
}

// Internal storage order: degree, then id sequence. Presentation order is by
// name and computed on demand (see Poly::terms_by_name).
struct MonomialLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    auto da = monomial_degree(a), db = monomial_degree(b);
    if (da != db) return da < db;
    return a < b;
  }
};

class Poly {
 public:
  using TermMap = std::map<Monomial, Rational, MonomialLess>;

  Poly() = default;
  Poly(const Rational& c) {  // NOLINT(google-explicit-constructor)
    if (!liedeform::is_zero(c)) terms_.emplace(Monomial{}, c);
  }
  Poly(long c) : Poly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  Poly(int c) : Poly(Rational(c)) {}   // NOLINT(google-explicit-constructor)
  Poly(Var v) { terms_.emplace(Monomial{{v.id, 1}}, Rational(1)); }  // NOLINT

  static Poly var(const std::string& name) { return Poly(Var(name)); }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty()); }
  Rational constant_term() const {
    auto it = terms_.find(Monomial{});
    return it == terms_.end() ? Rational(0) : it->second;
  }
  unsigned degree() const { return terms_.empty() ? 0 : monomial_degree(terms_.rbegin()->first); }

  std::set<std::uint32_t> var_ids() const {
    std::set<std::uint32_t> s;
    for (auto& [m, c] : terms_)
      for (auto& [v, e] : m) s.insert(v);
    return s;
  }
  bool contains(Var v) const {
    for (auto& [m, c] : terms_)
      for (auto& [id, e] : m)
        if (id == v.id) return true;
    return false;
  }
  /// Variable names, sorted alphabetically.
  std::vector<std::string> variables() const {
    std::vector<std::string> out;
    for (auto id : var_ids()) out.push_back(VarTable::instance().name(id));
    std::sort(out.begin(), out.end());
    return out;
  }

  /// Coefficient of the degree-1 monomial v.
  Rational linear_coeff(Var v) const {
    auto it = terms_.find(Monomial{{v.id, 1}});
    return it == terms_.end() ? Rational(0) : it->second;
  }

  Poly& operator+=(const Poly& o) {
    for (auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    for (auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  Poly& operator*=(const Rational& s) {
    if (liedeform::is_zero(s)) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(Poly a) { return a *= Rational(-1); }
  friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
  friend Poly operator*(const Rational& s, Poly a) { return a *= s; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    Poly out;
    if (a.is_zero() || b.is_zero()) return out;
    for (auto& [ma, ca] : a.terms_)
      for (auto& [mb, cb] : b.terms_) out.add_term(monomial_mul(ma, mb), ca * cb);
    return out;
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  /// a += s * b without temporaries; the hot path of every tensor contraction.
  void add_scaled(const Poly& b, const Rational& s) {
    if (liedeform::is_zero(s)) return;
    for (auto& [m, c] : b.terms_) add_term(m, c * s);
  }
  void add_product(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return;
    if (a.is_constant()) return add_scaled(b, a.constant_term());
    if (b.is_constant()) return add_scaled(a, b.constant_term());
    for (auto& [ma, ca] : a.terms_)
      for (auto& [mb, cb] : b.terms_) add_term(monomial_mul(ma, mb), ca * cb);
  }

  void add_term(const Monomial& m, const Rational& c) {
    if (liedeform::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (liedeform::is_zero(it->second)) terms_.erase(it);
    }
  }

  /// Terms in presentation order: higher degree first, then lexicographic on
  /// the sorted variable names of each monomial.
  std::vector<std::pair<std::vector<std::pair<std::string, unsigned>>, Rational>> terms_by_name() const {
    using NamedMono = std::vector<std::pair<std::string, unsigned>>;
    std::vector<std::pair<NamedMono, Rational>> out;
    for (auto& [m, c] : terms_) {
      NamedMono nm;
      for (auto& [v, e] : m) nm.emplace_back(VarTable::instance().name(v), e);
      std::sort(nm.begin(), nm.end());
      out.emplace_back(std::move(nm), c);
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
      unsigned da = 0, db = 0;
      for (auto& p : a.first) da += p.second;
      for (auto& p : b.first) db += p.second;
      if (da != db) return da > db;
      return a.first < b.first;
    });
    return out;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [nm, c] : terms_by_name()) {
      Rational a = abs(c);
      bool neg = sgn(c) < 0;
      if (first) {
        if (neg) os << "-";
      } else {
        os << (neg ? " - " : " + ");
      }
      first = false;
      bool unit = (a == 1) && !nm.empty();
      if (!unit) os << liedeform::to_string(a);
      bool firstf = true;
      for (auto& [n, e] : nm) {
        if (!unit || !firstf) os << "*";
        os << n;
        if (e > 1) os << "^" << e;
        firstf = false;
      }
    }
    return os.str();
  }

 private:
  TermMap terms_;
};

inline Poly pvar(const std::string& name) { return Poly::var(name); }
inline Poly pconst(long num, long den = 1) { return Poly(make_rational(num, den)); }

/// Full evaluation. Throws MissingVariable naming the first unassigned variable.
inline Rational poly_eval(const Poly& p, const std::map<std::string, Rational>& assignment) {
  std::unordered_map<std::uint32_t, const Rational*> by_id;
  for (auto& [n, v] : assignment) by_id.emplace(Var(n).id, &v);
  Rational sum(0);
  for (auto& [m, c] : p.terms()) {
    Rational t = c;
    for (auto& [v, e] : m) {
      auto it = by_id.find(v);
      if (it == by_id.end()) throw MissingVariable(VarTable::instance().name(v));
      for (unsigned k = 0; k < e; ++k) t *= *it->second;
    }
    sum += t;
  }
  return sum;
}

/// Substitute polynomials for variables; unmapped variables stay symbolic.
inline Poly substitute(const Poly& p, const std::map<std::uint32_t, Poly>& subs) {
  if (subs.empty()) return p;
  Poly out;
  for (auto& [m, c] : p.terms()) {
    bool touched = false;
    for (auto& [v, e] : m)
      if (subs.count(v)) touched = true;
    if (!touched) {
      out.add_term(m, c);
      continue;
    }
    Poly t(c);
    Monomial rest;
    for (auto& [v, e] : m) {
      auto it = subs.find(v);
      if (it == subs.end()) {
        rest.emplace_back(v, e);
        continue;
      }
      for (unsigned k = 0; k < e; ++k) t = t * it->second;
    }
    if (!rest.empty()) {
      Poly r;
      r.add_term(rest, Rational(1));
      t = t * r;
    }
    out += t;
  }
  return out;
}

inline Poly substitute(const Poly& p, const std::map<std::string, Poly>& subs) {
  std::map<std::uint32_t, Poly> by_id;
  for (auto& [n, q] : subs) by_id.emplace(Var(n).id, q);
  return substitute(p, by_id);
}

/// Substitute rationals for a subset of variables.
inline Poly partial_eval(const Poly& p, const std::map<std::string, Rational>& assignment) {
  std::map<std::uint32_t, Poly> by_id;
  for (auto& [n, v] : assignment) by_id.emplace(Var(n).id, Poly(v));
  return substitute(p, by_id);
}

/// Scales a nonzero polynomial so its leading term (presentation order) has
/// coefficient 1. Returns the factor that was divided out.
inline Rational make_monic(Poly& p) {
  if (p.is_zero()) return Rational(1);
  Rational lead = p.terms_by_name().front().second;
  p *= Rational(1) / lead;
  return lead;
}

struct LinearFactorization {
  Rational unit;
  Poly first;
  Poly second;
};

namespace detail {

// Square root of a degree-2 polynomial in t with polynomial coefficients,
// restricted to what the factorization needs: the discriminant must be
// c*L^2 for a rational square c and linear L over the remaining variables.
inline std::optional<Poly> sqrt_of_quadratic_form(const Poly& disc) {
  if (disc.is_zero()) return Poly();
  if (disc.degree() % 2 != 0) return std::nullopt;
  if (disc.degree() == 0) {
    auto r = rational_sqrt(disc.constant_term());
    if (!r) return std::nullopt;
    return Poly(*r);
  }
  // disc = sum over monomials of degree 2 plus lower; for a perfect square
  // (aff)^2 with aff = sum l_v v + l_0. Pick the alphabetically-first variable
  // u with a nonzero square coefficient; l_u = sqrt(coeff(u^2)).
  auto ids = disc.var_ids();
  std::optional<std::uint32_t> pivot;
  Rational pivot_sq;
  std::string pivot_name;
  for (auto id : ids) {
    auto it = disc.terms().find(Monomial{{id, 2}});
    if (it == disc.terms().end()) continue;
    std::string n = VarTable::instance().name(id);
    if (!pivot || n < pivot_name) {
      pivot = id;
      pivot_sq = it->second;
      pivot_name = n;
    }
  }
  if (!pivot) return std::nullopt;
  auto lu = rational_sqrt(pivot_sq);
  if (!lu) return std::nullopt;
  Poly root;
  root.add_term(Monomial{{*pivot, 1}}, *lu);
  Rational two_lu = 2 * *lu;
  for (auto id : ids) {
    if (id == *pivot) continue;
    Monomial m = id < *pivot ? Monomial{{id, 1}, {*pivot, 1}} : Monomial{{*pivot, 1}, {id, 1}};
    auto it = disc.terms().find(m);
    if (it != disc.terms().end()) root.add_term(Monomial{{id, 1}}, it->second / two_lu);
  }
  auto it = disc.terms().find(Monomial{{*pivot, 1}});
  if (it != disc.terms().end()) root.add_term(Monomial{}, it->second / two_lu);
  if (root * root != disc) return std::nullopt;
  return root;
}

}  // namespace detail

namespace detail {

// Splits p as a*t^2 + b*t + c with b, c free of t.
inline void split_in(const Poly& p, std::uint32_t t, Rational& a, Poly& b, Poly& c) {
  a = 0;
  b = Poly();
  c = Poly();
  for (auto& [m, coef] : p.terms()) {
    unsigned et = 0;
    Monomial rest;
    for (auto& [v, e] : m) {
      if (v == t)
        et = e;
      else
        rest.emplace_back(v, e);
    }
    if (et == 2)
      a += coef;
    else if (et == 1)
      b.add_term(rest, coef);
    else
      c.add_term(rest, coef);
  }
}

}  // namespace detail

/// Factors a degree-2 polynomial as unit * l1 * l2 with l1, l2 monic linear
/// forms (affine allowed), over the rationals only. Returns nullopt when p is
/// irreducible or has degree below 2.
inline std::optional<LinearFactorization> factor_as_linear_product(const Poly& p) {
  unsigned d = p.degree();
  if (d > 2) throw DegreeTooHigh("degree " + std::to_string(d) + " in " + p.to_string());
  if (d < 2) return std::nullopt;

  // t: first variable (by id) of some degree-2 monomial
  std::uint32_t t = 0;
  for (auto& [m, c] : p.terms())
    if (monomial_degree(m) == 2) {
      t = m.front().first;
      break;
    }
  Rational a;
  Poly b, c;
  detail::split_in(p, t, a, b, c);

  // No t^2 term: shear u -> u + s*t along a partner u of a t*u term so the
  // t^2 coefficient becomes nonzero, factor, then shear back.
  std::map<std::uint32_t, Poly> back;
  Poly q = p;
  if (is_zero(a)) {
    std::uint32_t u = 0;
    for (auto& [m, coef] : b.terms())
      if (!m.empty()) {
        u = m.front().first;
        break;
      }
    Var tv, uv;
    tv.id = t;
    uv.id = u;
    for (long s = 1;; ++s) {
      q = substitute(p, std::map<std::uint32_t, Poly>{{u, Poly(uv) + Poly(tv) * Rational(s)}});
      detail::split_in(q, t, a, b, c);
      if (!is_zero(a)) {
        back = {{u, Poly(uv) - Poly(tv) * Rational(s)}};
        break;
      }
    }
  }

  // roots t = (-b +- sqrt(b^2 - 4ac)) / 2a
  Poly disc = b * b - Rational(4) * a * c;
  auto root = detail::sqrt_of_quadratic_form(disc);
  if (!root) return std::nullopt;
  Rational inv2a = Rational(1) / (2 * a);
  Var tv;
  tv.id = t;
  Poly l1 = Poly(tv) - (-b + *root) * inv2a;
  Poly l2 = Poly(tv) - (-b - *root) * inv2a;
  l1 = substitute(l1, back);
  l2 = substitute(l2, back);
  Rational unit = a;
  unit *= make_monic(l1);
  unit *= make_monic(l2);
  if (l2.to_string() < l1.to_string()) std::swap(l1, l2);
  return LinearFactorization{unit, l1, l2};
}

}  // namespace liedeform
