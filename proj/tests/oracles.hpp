#pragma once
// Reference computations for the tests. Nothing here calls the library's
// linear algebra, cohomology or exponential code.

#include <gmpxx.h>

#include <array>
#include <cmath>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

using Q = mpq_class;
using Dense = std::vector<std::vector<Q>>;

// Fraction-free Bareiss elimination after clearing denominators row by row.
inline std::size_t rank(const Dense& in) {
  if (in.empty()) return 0;
  std::size_t rows = in.size(), cols = in[0].size();
  std::vector<std::vector<mpz_class>> m(rows, std::vector<mpz_class>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    mpz_class l = 1;
    for (auto& x : in[r]) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    for (std::size_t c = 0; c < cols; ++c) m[r][c] = mpz_class(in[r][c] * l);
  }
  mpz_class prev = 1;
  std::size_t rk = 0;
  for (std::size_t c = 0; c < cols && rk < rows; ++c) {
    std::size_t p = rk;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[rk]);
    for (std::size_t r = rk + 1; r < rows; ++r) {
      for (std::size_t k = c + 1; k < cols; ++k) m[r][k] = (m[rk][c] * m[r][k] - m[r][c] * m[rk][k]) / prev;
      m[r][c] = 0;
    }
    prev = m[rk][c];
    ++rk;
  }
  return rk;
}

using Mat = std::vector<std::vector<Q>>;

inline Mat zeros(std::size_t n) { return Mat(n, std::vector<Q>(n, Q(0))); }

inline Mat mul(const Mat& a, const Mat& b) {
  std::size_t n = a.size();
  Mat c = zeros(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      if (a[i][k] != 0)
        for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

inline Mat sub(Mat a, const Mat& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) a[i][j] -= b[i][j];
  return a;
}

inline Mat commutator(const Mat& a, const Mat& b) { return sub(mul(a, b), mul(b, a)); }

// Gauss-Jordan on [A | I]; returns false when singular.
inline bool invert(const Mat& a, Mat& out) {
  std::size_t n = a.size();
  Mat w = a;
  out = zeros(n);
  for (std::size_t i = 0; i < n; ++i) out[i][i] = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && w[p][c] == 0) ++p;
    if (p == n) return false;
    std::swap(w[p], w[c]);
    std::swap(out[p], out[c]);
    Q inv = 1 / w[c][c];
    for (std::size_t k = 0; k < n; ++k) {
      w[c][k] *= inv;
      out[c][k] *= inv;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || w[r][c] == 0) continue;
      Q f = w[r][c];
      for (std::size_t k = 0; k < n; ++k) {
        w[r][k] -= f * w[c][k];
        out[r][k] -= f * out[c][k];
      }
    }
  }
  return true;
}

// Generators of the affine Poincare representation on (t, x, y, z, 1),
// written from the Minkowski metric diag(1, -1, -1, -1): M_ab = e_a eta_b - e_b eta_a.
inline Mat generator(const std::string& name) {
  static const int eta[4] = {1, -1, -1, -1};
  auto lorentz = [](int a, int b) {
    Mat m = zeros(5);
    m[a][b] += eta[b];
    m[b][a] -= eta[a];
    return m;
  };
  auto add = [](Mat a, const Mat& b, int s) {
    for (std::size_t i = 0; i < 5; ++i)
      for (std::size_t j = 0; j < 5; ++j) a[i][j] += s * b[i][j];
    return a;
  };
  // rotation in the (j,k) plane taking j towards k
  if (name == "r_x") return lorentz(2, 3);
  if (name == "r_y") return lorentz(3, 1);
  if (name == "r_z") return lorentz(1, 2);
  if (name == "b_x") return lorentz(1, 0);
  if (name == "b_y") return lorentz(2, 0);
  if (name == "b_z") return lorentz(3, 0);
  if (name == "t_1") return add(generator("b_x"), generator("r_y"), 1);
  if (name == "t_2") return add(generator("b_y"), generator("r_x"), -1);
  static const std::map<std::string, int> p{{"p_t", 0}, {"p_x", 1}, {"p_y", 2}, {"p_z", 3}};
  Mat m = zeros(5);
  m[p.at(name)][4] = 1;
  return m;
}

// Structure constants c[k][i][j] of a matrix Lie algebra, solved exactly.
struct Structure {
  std::size_t n = 0;
  std::vector<Q> c;
  Q& at(std::size_t k, std::size_t i, std::size_t j) { return c[(k * n + i) * n + j]; }
  const Q& at(std::size_t k, std::size_t i, std::size_t j) const { return c[(k * n + i) * n + j]; }
};

inline Structure structure_of(const std::vector<Mat>& g) {
  Structure s;
  s.n = g.size();
  s.c.assign(s.n * s.n * s.n, Q(0));
  std::size_t d = g[0].size();
  for (std::size_t i = 0; i < s.n; ++i)
    for (std::size_t j = 0; j < s.n; ++j) {
      Mat t = commutator(g[i], g[j]);
      // least squares by normal equations: G^T G x = G^T t
      Mat gram = zeros(s.n);
      std::vector<Q> rhs(s.n, Q(0));
      for (std::size_t a = 0; a < s.n; ++a) {
        for (std::size_t b = 0; b < s.n; ++b)
          for (std::size_t r = 0; r < d; ++r)
            for (std::size_t q = 0; q < d; ++q) gram[a][b] += g[a][r][q] * g[b][r][q];
        for (std::size_t r = 0; r < d; ++r)
          for (std::size_t q = 0; q < d; ++q) rhs[a] += g[a][r][q] * t[r][q];
      }
      Mat inv;
      if (!invert(gram, inv)) throw std::runtime_error("generators are linearly dependent");
      for (std::size_t k = 0; k < s.n; ++k)
        for (std::size_t a = 0; a < s.n; ++a) s.at(k, i, j) += inv[k][a] * rhs[a];
      for (std::size_t k = 0; k < s.n; ++k)
        for (std::size_t r = 0; r < d; ++r)
          for (std::size_t q = 0; q < d; ++q) t[r][q] -= s.at(k, i, j) * g[k][r][q];
      for (auto& row : t)
        for (auto& x : row)
          if (x != 0) throw std::runtime_error("commutator leaves the span");
    }
  return s;
}

inline Structure abelian(std::size_t n) {
  Structure s;
  s.n = n;
  s.c.assign(n * n * n, Q(0));
  return s;
}

// [l_i, l_j] = eps_ijk l_k
inline Structure so3_levi_civita() {
  Structure s = abelian(3);
  for (std::size_t i = 0; i < 3; ++i) {
    std::size_t j = (i + 1) % 3, k = (i + 2) % 3;
    s.at(k, i, j) = 1;
    s.at(k, j, i) = -1;
  }
  return s;
}

inline bool jacobi(const Structure& s) {
  std::size_t n = s.n;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t m = 0; m < n; ++m) {
          Q sum = 0;
          for (std::size_t l = 0; l < n; ++l)
            sum += s.at(l, i, j) * s.at(m, l, k) + s.at(l, j, k) * s.at(m, l, i) + s.at(l, k, i) * s.at(m, l, j);
          if (sum != 0) return false;
        }
  return true;
}

// Dimensions of 2-cocycles with values in the adjoint (first-order
// deformations) and of the coboundaries d(phi) for phi in gl(g).
// Cochains are full antisymmetric arrays; the differential is evaluated on
// increasing triples, which determine it.
inline std::pair<std::size_t, std::size_t> cohomology(const Structure& s) {
  std::size_t n = s.n;
  std::vector<std::array<std::size_t, 3>> basis;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) basis.push_back({k, i, j});
  if (basis.empty()) return {0, 0};
  auto cochain = [&](const std::array<std::size_t, 3>& b) {
    Structure a = abelian(n);
    a.at(b[0], b[1], b[2]) = 1;
    a.at(b[0], b[2], b[1]) = -1;
    return a;
  };
  Dense d2;  // one row per basis cochain
  for (auto& b : basis) {
    Structure a = cochain(b);
    std::vector<Q> row;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        for (std::size_t k = j + 1; k < n; ++k)
          for (std::size_t m = 0; m < n; ++m) {
            Q sum = 0;
            for (std::size_t l = 0; l < n; ++l) {
              sum += a.at(l, i, j) * s.at(m, l, k) + s.at(l, i, j) * a.at(m, l, k);
              sum += a.at(l, j, k) * s.at(m, l, i) + s.at(l, j, k) * a.at(m, l, i);
              sum += a.at(l, k, i) * s.at(m, l, j) + s.at(l, k, i) * a.at(m, l, j);
            }
            row.push_back(sum);
          }
    d2.push_back(std::move(row));
  }
  std::size_t cocycles = basis.size() - rank(d2);
  // (d phi)(x, y) = phi([x,y]) - [phi x, y] - [x, phi y]
  Dense d1;
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) {
      std::vector<Q> row;
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = i + 1; j < n; ++j) {
            Q v = 0;
            if (k == p) v += s.at(q, i, j);
            if (i == q) v -= s.at(k, p, j);
            if (j == q) v -= s.at(k, i, p);
            row.push_back(v);
          }
      d1.push_back(std::move(row));
    }
  return {cocycles, rank(d1)};
}

using LMat = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;

// Taylor series with scaling and squaring in extended precision.
inline LMat expm(const LMat& a) {
  long double norm = a.cwiseAbs().rowwise().sum().maxCoeff();
  int squarings = 0;
  while (norm > 0.125L) {
    norm /= 2;
    ++squarings;
  }
  LMat x = a / std::ldexp(1.0L, squarings);
  LMat term = LMat::Identity(a.rows(), a.cols()), sum = term;
  for (int k = 1; k < 40; ++k) {
    term = term * x / static_cast<long double>(k);
    sum += term;
  }
  for (int i = 0; i < squarings; ++i) sum = sum * sum;
  return sum;
}

inline Q random_rational(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 7);
  Q q(mpz_class(num(rng)), mpz_class(den(rng)));
  q.canonicalize();
  return q;
}

}  // namespace oracle
