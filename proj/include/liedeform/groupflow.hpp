#pragma once

#include <cmath>
#include <map>
#include <string>

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

#include "liedeform/catalog.hpp"
#include "liedeform/errors.hpp"
#include "liedeform/repsolve.hpp"

// Everything upstream is exact; this is the only floating-point module.
namespace liedeform {

using Mat5 = Eigen::Matrix<double, 5, 5>;
using Vec4 = Eigen::Vector4d;
using NumericAssignment = std::map<std::string, double>;

inline double poly_eval_double(const Poly& p, const NumericAssignment& at) {
  double sum = 0;
  for (auto& [m, c] : p.terms()) {
    double t = c.get_d();
    for (auto& [v, e] : m) {
      auto it = at.find(VarTable::instance().name(v));
      if (it == at.end()) throw MissingVariable(VarTable::instance().name(v));
      t *= std::pow(it->second, static_cast<double>(e));
    }
    sum += t;
  }
  return sum;
}

inline Mat5 to_double(const PMat& m, const NumericAssignment& at) {
  if (m.rows() != 5 || m.cols() != 5) throw DimensionMismatch("group elements are 5x5");
  Mat5 out;
  for (std::size_t r = 0; r < 5; ++r)
    for (std::size_t c = 0; c < 5; ++c) out(r, c) = poly_eval_double(m(r, c), at);
  return out;
}

inline NumericAssignment to_double(const std::map<std::string, Rational>& at) {
  NumericAssignment out;
  for (auto& [k, v] : at) out[k] = v.get_d();
  return out;
}

struct GroupElement {
  Mat5 matrix;
  std::size_t generator = 0;
  std::string label;
  double theta = 0;
};

/// exp(theta * rho(generator)); Eigen's Pade approximant with scaling and squaring.
inline GroupElement exponentiate(const Representation& rep, std::size_t generator, double theta,
                                 const NumericAssignment& at) {
  if (generator >= rep.matrices.size()) throw IndexOutOfRange("generator " + std::to_string(generator));
  Mat5 a = theta * to_double(rep.matrices[generator], at);
  GroupElement g;
  g.matrix = a.exp();
  g.generator = generator;
  g.label = generator < rep.generators.size() ? rep.generators[generator] : std::string();
  g.theta = theta;
  return g;
}

inline Mat5 closed_form(const ClosedFormDescriptor& d, double theta, const NumericAssignment& at) {
  double s = std::exp(theta * poly_eval_double(d.scale, at));
  Mat5 m = Mat5::Identity();
  for (int i = 0; i < 4; ++i) m(i, i) = s;
  for (auto& b : d.blocks) {
    Eigen::Matrix2d n;
    n << poly_eval_double(b.n00, at), poly_eval_double(b.n01, at), poly_eval_double(b.n10, at),
        poly_eval_double(b.n11, at);
    double w = poly_eval_double(b.omega, at);
    Eigen::Matrix2d e = Eigen::Matrix2d::Identity();
    switch (b.kind) {
      case ClosedFormBlock::Kind::Trig:
        e = std::cos(w * theta) * Eigen::Matrix2d::Identity() + (std::sin(w * theta) / w) * n;
        break;
      case ClosedFormBlock::Kind::Hyperbolic:
        e = std::cosh(w * theta) * Eigen::Matrix2d::Identity() + (std::sinh(w * theta) / w) * n;
        break;
      case ClosedFormBlock::Kind::Nilpotent:
        e = Eigen::Matrix2d::Identity() + theta * n;
        break;
    }
    std::size_t idx[2] = {b.a, b.b};
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c) m(idx[r], idx[c]) = s * e(r, c);
  }
  return m;
}

/// Common scale of the spacetime block, det^(1/4).
inline double dilatation_factor(const GroupElement& g) {
  double det = g.matrix.topLeftCorner<4, 4>().determinant();
  if (det <= 0) throw NegativeDeterminant("spacetime block determinant " + std::to_string(det));
  return std::pow(det, 0.25);
}

/// ds^2 = (eta dx dx)^(1-b) (n.dx)^(2b) with n = (1,0,0,1) contracted through eta.
struct LineElementSpec {
  double b = 0;
  Vec4 eta = Vec4(1, -1, -1, -1);
  Vec4 n = Vec4(1, 0, 0, 1);

  double interval(const Vec4& dx) const {
    double q = (eta.array() * dx.array() * dx.array()).sum();
    double nd = (eta.array() * n.array() * dx.array()).sum();
    if (q <= 0 || nd <= 0) throw BranchViolation("need eta(dx,dx) > 0 and n.dx > 0");
    return std::pow(q, 1 - b) * std::pow(nd, 2 * b);
  }
};

inline double check_finsler_invariance(const LineElementSpec& spec, const GroupElement& g, const Vec4& dx) {
  Vec4 moved = g.matrix.topLeftCorner<4, 4>() * dx;
  double before = spec.interval(dx);
  return std::abs(spec.interval(moved) - before) / std::abs(before);
}

inline double subgroup_law_check(const Representation& rep, std::size_t generator, double t1, double t2,
                                 const NumericAssignment& at) {
  Mat5 lhs = exponentiate(rep, generator, t1, at).matrix * exponentiate(rep, generator, t2, at).matrix;
  return (lhs - exponentiate(rep, generator, t1 + t2, at).matrix).cwiseAbs().maxCoeff();
}

/// DISIM_b boost: e^(b theta) times the ordinary tz boost.
inline GroupElement disim_boost(double b, double theta) {
  GroupElement g;
  g.matrix = Mat5::Identity();
  double s = std::exp(b * theta);
  for (int i = 0; i < 4; ++i) g.matrix(i, i) = s;
  g.matrix(kT, kT) = g.matrix(kZ, kZ) = s * std::cosh(theta);
  g.matrix(kT, kZ) = g.matrix(kZ, kT) = s * std::sinh(theta);
  g.label = "b_z";
  g.theta = theta;
  return g;
}

}  // namespace liedeform
