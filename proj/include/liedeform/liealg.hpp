#pragma once

#include <cstddef>
#include <string>
#include <type_traits>
#include <vector>

#include "liedeform/exact/linalg.hpp"
#include "liedeform/exact/poly.hpp"

namespace liedeform {

/// Dense n x n x n tensor indexed (k, i, j) for C^k_ij.
template <class S>
class Tensor3 {
 public:
  Tensor3() = default;
  explicit Tensor3(std::size_t n) : n_(n), data_(n * n * n, S(0)) {}
  std::size_t dim() const { return n_; }
  S& operator()(std::size_t k, std::size_t i, std::size_t j) { return data_[(k * n_ + i) * n_ + j]; }
  const S& operator()(std::size_t k, std::size_t i, std::size_t j) const { return data_[(k * n_ + i) * n_ + j]; }
  friend bool operator==(const Tensor3& a, const Tensor3& b) { return a.n_ == b.n_ && a.data_ == b.data_; }
  bool is_zero() const {
    for (auto& x : data_)
      if (!(x == S(0))) return false;
    return true;
  }

 private:
  std::size_t n_ = 0;
  std::vector<S> data_;
};

using QTensor = Tensor3<Rational>;
using PTensor = Tensor3<Poly>;

class LieAlgebra {
 public:
  LieAlgebra() = default;
  LieAlgebra(std::string name, std::vector<std::string> labels)
      : name_(std::move(name)), labels_(std::move(labels)), c_(labels_.size()) {}
  LieAlgebra(std::string name, std::vector<std::string> labels, PTensor c)
      : name_(std::move(name)), labels_(std::move(labels)), c_(std::move(c)) {
    if (c_.dim() != labels_.size()) throw DimensionMismatch("structure tensor vs labels");
  }

  const std::string& name() const { return name_; }
  std::size_t dim() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const PTensor& structure() const { return c_; }

  std::size_t index(const std::string& label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
      if (labels_[i] == label) return i;
    throw IndexOutOfRange("no generator '" + label + "' in " + name_);
  }

  /// Sets [T_i, T_j] = sum_k coeffs[k] T_k and the antisymmetric partner.
  void set_bracket(std::size_t i, std::size_t j, const std::vector<Poly>& coeffs) {
    check(i);
    check(j);
    for (std::size_t k = 0; k < dim(); ++k) {
      c_(k, i, j) = coeffs[k];
      c_(k, j, i) = -coeffs[k];
    }
  }
  /// Adds p * T_k to [T_i, T_j] (and -p * T_k to [T_j, T_i]).
  void add_bracket(const std::string& a, const std::string& b, const std::string& k, const Poly& p) {
    std::size_t i = index(a), j = index(b), kk = index(k);
    c_(kk, i, j) += p;
    c_(kk, j, i) -= p;
  }

  bool is_numeric() const {
    for (std::size_t k = 0; k < dim(); ++k)
      for (std::size_t i = 0; i < dim(); ++i)
        for (std::size_t j = 0; j < dim(); ++j)
          if (!c_(k, i, j).is_constant()) return false;
    return true;
  }
  QTensor numeric() const {
    QTensor out(dim());
    for (std::size_t k = 0; k < dim(); ++k)
      for (std::size_t i = 0; i < dim(); ++i)
        for (std::size_t j = 0; j < dim(); ++j) {
          if (!c_(k, i, j).is_constant())
            throw MissingVariable("symbolic structure constant " + c_(k, i, j).to_string());
          out(k, i, j) = c_(k, i, j).constant_term();
        }
    return out;
  }

  void check(std::size_t i) const {
    if (i >= dim()) throw IndexOutOfRange(std::to_string(i) + " >= " + std::to_string(dim()));
  }

 private:
  std::string name_;
  std::vector<std::string> labels_;
  PTensor c_;
};

inline std::vector<Poly> bracket(const LieAlgebra& alg, std::size_t i, std::size_t j) {
  alg.check(i);
  alg.check(j);
  std::vector<Poly> out(alg.dim());
  for (std::size_t k = 0; k < alg.dim(); ++k) out[k] = alg.structure()(k, i, j);
  return out;
}

struct JacobiViolation {
  std::size_t i, j, k, m;
  Poly residual;
};

/// Cyclic sum X^m_lk Y^l_ij + X^m_li Y^l_jk + X^m_lj Y^l_ki for one (i,j,k,m).
template <class S>
S cyclic_contraction(const Tensor3<S>& x, const Tensor3<S>& y, std::size_t i, std::size_t j, std::size_t k,
                     std::size_t m) {
  S sum(0);
  std::size_t n = x.dim();
  for (std::size_t l = 0; l < n; ++l) {
    if constexpr (std::is_same_v<S, Poly>) {
      sum.add_product(x(m, l, k), y(l, i, j));
      sum.add_product(x(m, l, i), y(l, j, k));
      sum.add_product(x(m, l, j), y(l, k, i));
    } else {
      sum += x(m, l, k) * y(l, i, j) + x(m, l, i) * y(l, j, k) + x(m, l, j) * y(l, k, i);
    }
  }
  return sum;
}

/// Jacobi residuals over i<j<k (the cyclic sum is totally antisymmetric, so
/// the other orderings carry no extra information).
inline std::vector<JacobiViolation> check_jacobi(const LieAlgebra& alg) {
  std::vector<JacobiViolation> out;
  const auto& c = alg.structure();
  std::size_t n = alg.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        for (std::size_t m = 0; m < n; ++m) {
          Poly r = cyclic_contraction(c, c, i, j, k, m);
          if (!r.is_zero()) out.push_back({i, j, k, m, std::move(r)});
        }
  return out;
}

inline bool is_antisymmetric(const LieAlgebra& alg) {
  const auto& c = alg.structure();
  for (std::size_t k = 0; k < alg.dim(); ++k)
    for (std::size_t i = 0; i < alg.dim(); ++i)
      for (std::size_t j = 0; j < alg.dim(); ++j)
        if (c(k, i, j) != -c(k, j, i)) return false;
  return true;
}

/// C'^k_ij = S^k_c C^c_ab (S^-1)^a_i (S^-1)^b_j. The new generators are
/// T'_i = sum_a (S^-1)^a_i T_a.
inline LieAlgebra change_of_basis(const LieAlgebra& alg, const QMat& s) {
  std::size_t n = alg.dim();
  if (s.rows() != n || s.cols() != n) throw DimensionMismatch("basis change size");
  QMat si = inverse(s);
  const auto& c = alg.structure();
  // two-step contraction keeps this O(n^4)
  PTensor tmp(n);  // tmp^c_ij = C^c_ab Si^a_i Si^b_j
  PTensor half(n);
  for (std::size_t cc = 0; cc < n; ++cc)
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t b = 0; b < n; ++b)
          if (!is_zero(si(b, j))) half(cc, a, j).add_scaled(c(cc, a, b), si(b, j));
  for (std::size_t cc = 0; cc < n; ++cc)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t a = 0; a < n; ++a)
          if (!is_zero(si(a, i))) tmp(cc, i, j).add_scaled(half(cc, a, j), si(a, i));
  PTensor out(n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t cc = 0; cc < n; ++cc) {
      if (is_zero(s(k, cc))) continue;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out(k, i, j).add_scaled(tmp(cc, i, j), s(k, cc));
    }
  return LieAlgebra(alg.name(), alg.labels(), std::move(out));
}

/// Basis change given as new generators in terms of old ones:
/// T'_i = sum_j m(i, j) T_j.
inline LieAlgebra change_of_generators(const LieAlgebra& alg, const QMat& m) {
  return change_of_basis(alg, inverse(m.transpose()));
}

inline std::string bracket_string(const LieAlgebra& alg, std::size_t i, std::size_t j) {
  std::string s;
  auto v = bracket(alg, i, j);
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k].is_zero()) continue;
    std::string coef = v[k].to_string();
    std::string term;
    if (coef == "1")
      term = alg.labels()[k];
    else if (coef == "-1")
      term = "-" + alg.labels()[k];
    else if (v[k].terms().size() == 1)
      term = coef + "*" + alg.labels()[k];
    else
      term = "(" + coef + ")*" + alg.labels()[k];
    if (!s.empty()) s += term.front() == '-' ? " - " + term.substr(1) : " + " + term;
    else s = term;
  }
  return s.empty() ? "0" : s;
}

}  // namespace liedeform
