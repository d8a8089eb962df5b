#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "liedeform/exact/poly.hpp"
#include "liedeform/exact/rational.hpp"

namespace liedeform {

/// Dense row-major matrix over any ring-like scalar (Rational or Poly).
template <class S>
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, S(0)) {}

  static Mat identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = S(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  S& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const S& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  friend Mat operator*(const Mat& a, const Mat& b) {
    if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product");
    Mat out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const S& aik = a(i, k);
        if (aik == S(0)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
      }
    return out;
  }
  friend Mat operator+(Mat a, const Mat& b) {
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
    return a;
  }
  friend Mat operator-(Mat a, const Mat& b) {
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
    return a;
  }
  friend bool operator==(const Mat& a, const Mat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  Mat transpose() const {
    Mat t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }
  bool is_zero() const {
    for (auto& x : data_)
      if (!(x == S(0))) return false;
    return true;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<S> data_;
};

using QMat = Mat<Rational>;
using PMat = Mat<Poly>;

inline PMat to_poly(const QMat& m) {
  PMat out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = Poly(m(i, j));
  return out;
}

template <class S, class F>
Mat<S> scaled(Mat<S> m, const F& f) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) *= f;
  return m;
}

inline PMat commutator(const PMat& a, const PMat& b) { return a * b - b * a; }

/// Gauss-Jordan inverse over the rationals.
inline QMat inverse(const QMat& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("inverse of non-square matrix");
  std::size_t n = m.rows();
  QMat a = m, inv = QMat::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && is_zero(a(p, c))) ++p;
    if (p == n) throw SingularMatrix("no pivot in column " + std::to_string(c));
    if (p != c)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(p, j), a(c, j));
        std::swap(inv(p, j), inv(c, j));
      }
    Rational s = Rational(1) / a(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      a(c, j) *= s;
      inv(c, j) *= s;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || is_zero(a(r, c))) continue;
      Rational f = a(r, c);
      for (std::size_t j = 0; j < n; ++j) {
        a(r, j) -= f * a(c, j);
        inv(r, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

/// Sparse row: (column, value) sorted by column, no zeros.
using SparseRow = std::vector<std::pair<std::size_t, Rational>>;

inline SparseRow axpy(const SparseRow& x, const Rational& f, const SparseRow& y) {
  // x - f*y
  SparseRow out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
      out.push_back(x[i++]);
    } else if (i == x.size() || y[j].first < x[i].first) {
      out.emplace_back(y[j].first, -f * y[j].second);
      ++j;
    } else {
      Rational v = x[i].second - f * y[j].second;
      if (!is_zero(v)) out.emplace_back(x[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

inline Rational sparse_at(const SparseRow& r, std::size_t col) {
  auto it = std::lower_bound(r.begin(), r.end(), col, [](const auto& e, std::size_t c) { return e.first < c; });
  return (it != r.end() && it->first == col) ? it->second : Rational(0);
}

/// Reduced row echelon form; rows are sorted by pivot column and each pivot
/// is 1 with zeros above and below.
struct Echelon {
  std::size_t cols = 0;
  std::vector<SparseRow> rows;
  std::vector<std::size_t> pivots;

  std::size_t rank() const { return rows.size(); }

  /// Reduces v against the basis; zero result iff v is in the row span.
  SparseRow reduce(SparseRow v) const {
    for (std::size_t r = 0; r < rows.size(); ++r) {
      Rational c = sparse_at(v, pivots[r]);
      if (!is_zero(c)) v = axpy(v, c, rows[r]);
    }
    return v;
  }

  /// Inserts v (if independent) and keeps the form fully reduced.
  bool insert(SparseRow v) {
    v = reduce(std::move(v));
    if (v.empty()) return false;
    std::size_t pc = v.front().first;
    Rational s = Rational(1) / v.front().second;
    for (auto& e : v) e.second *= s;
    for (auto& row : rows) {
      Rational c = sparse_at(row, pc);
      if (!is_zero(c)) row = axpy(row, c, v);
    }
    auto pos = std::lower_bound(pivots.begin(), pivots.end(), pc) - pivots.begin();
    pivots.insert(pivots.begin() + pos, pc);
    rows.insert(rows.begin() + pos, std::move(v));
    return true;
  }

  /// Basis of {x : rows * x = 0}, one vector per free column, ordered by
  /// free column.
  std::vector<SparseRow> nullspace() const {
    std::vector<bool> is_pivot(cols, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<std::vector<std::pair<std::size_t, Rational>>> col_entries(cols);
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (auto& [c, v] : rows[r])
        if (c != pivots[r]) col_entries[c].emplace_back(pivots[r], v);
    std::vector<SparseRow> basis;
    for (std::size_t f = 0; f < cols; ++f) {
      if (is_pivot[f]) continue;
      SparseRow v;
      for (auto& [pc, val] : col_entries[f]) v.emplace_back(pc, -val);
      v.emplace_back(f, Rational(1));
      std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      basis.push_back(std::move(v));
    }
    return basis;
  }
};

inline Echelon rref(const std::vector<SparseRow>& rows, std::size_t cols) {
  Echelon e;
  e.cols = cols;
  // shorter rows first keeps fill-in low on the sparse Jacobi systems
  std::vector<const SparseRow*> order;
  for (auto& r : rows) order.push_back(&r);
  std::stable_sort(order.begin(), order.end(), [](auto* a, auto* b) { return a->size() < b->size(); });
  for (auto* r : order) e.insert(*r);
  return e;
}

inline std::size_t rank(const std::vector<SparseRow>& rows, std::size_t cols) { return rref(rows, cols).rank(); }

inline SparseRow to_sparse(const std::vector<Rational>& dense) {
  SparseRow s;
  for (std::size_t i = 0; i < dense.size(); ++i)
    if (!is_zero(dense[i])) s.emplace_back(i, dense[i]);
  return s;
}

inline std::vector<Rational> to_dense(const SparseRow& s, std::size_t n) {
  std::vector<Rational> d(n, Rational(0));
  for (auto& [c, v] : s) d[c] = v;
  return d;
}

}  // namespace liedeform
