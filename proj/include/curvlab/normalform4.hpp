#pragma once

// Dimension-4 normal form: a chart on the Grassmannian of 2-planes around
// P = f_2 ^ f_3, closed-form gradient and Hessian of the sectional quadratic
// form Q(x) = <C phi(x), phi(x)> at P, and recovery of the whole tensor from
// Q(P), Q(*P) and that Hessian when P and *P are both critical.
//
// The frame is a 4x4 matrix whose columns f_0..f_3 are an oriented
// orthonormal basis; P = f_2 ^ f_3 and *P = f_0 ^ f_1. F_abcd denotes
// Rm(f_a, f_b, f_c, f_d).
//
//   index dictionary (one-based classical labels -> here)
//     e_1 e_2 e_3 e_4     ->  f_0 f_1 f_2 f_3
//     P = e_3 ^ e_4       ->  f_2 ^ f_3
//     x_1 x_2 x_3 x_4     ->  x[0] x[1] x[2] x[3]
//
// Chart: phi(x) = (f_2 + x[2] f_0 + x[3] f_1) ^ (f_3 + x[0] f_0 + x[1] f_1) / N,
// N^2 = 1 + |x|^2 + (x[0] x[3] - x[1] x[2])^2.

#include "curvlab/curvature.hpp"
#include "curvlab/error.hpp"
#include "curvlab/exterior.hpp"
#include "curvlab/linalg.hpp"
#include "curvlab/scalar.hpp"

#include <array>
#include <cmath>
#include <string>
#include <vector>

namespace curvlab {

namespace detail {

template <class S>
void require_frame4(const Matrix<S>& frame, double tol = 1e-12) {
  if (frame.rows() != 4 || !frame.square()) throw DimensionError("normal form frame must be 4x4");
  Matrix<S> gram = frame.transpose() * frame;
  if (!nearly_equal(gram, Matrix<S>::identity(4), tol)) throw InconsistentError("normal form frame is not orthonormal");
  if (!(determinant(frame) > 0)) throw InconsistentError("normal form frame is not positively oriented");
}

template <class S>
CurvatureTensor<S> frame_components(const CurvatureTensor<S>& rm, const Matrix<S>& frame) {
  if (rm.dim() != 4) throw DimensionError("normal form requires d = 4");
  rm.frame().require_oriented_euclidean("normal form");
  require_frame4(frame);
  return change_frame(rm, frame);
}

}  // namespace detail

/// Unit 2-vector phi(x) in standard coordinates.
inline PVector<double> chart_phi(const std::array<double, 4>& x, const Matrix<double>& frame) {
  detail::require_frame4(frame);
  std::vector<double> u(4), v(4);
  for (unsigned i = 0; i < 4; ++i) {
    u[i] = frame(i, 2) + x[2] * frame(i, 0) + x[3] * frame(i, 1);
    v[i] = frame(i, 3) + x[0] * frame(i, 0) + x[1] * frame(i, 1);
  }
  double det = x[0] * x[3] - x[1] * x[2];
  double norm = std::sqrt(1 + x[0] * x[0] + x[1] * x[1] + x[2] * x[2] + x[3] * x[3] + det * det);
  return (1 / norm) * wedge(PVector<double>::vector(u), PVector<double>::vector(v));
}

/// Q(phi(x)) = Rm(u, v, u, v) / |u ^ v|^2.
inline double sec_on_chart(const CurvatureTensor<double>& rm, const Matrix<double>& frame, const std::array<double, 4>& x) {
  auto phi = chart_phi(x, frame);
  return gram_inner(raise_to_lambda2(rm).apply(phi), phi, rm.frame());
}

/// True when R_ijkj = R_ijik = 0 for every k outside {i, j}, i.e. f_i ^ f_j is
/// a critical point of the sectional quadratic form.
template <class S>
bool critical_check(const CurvatureTensor<S>& rm, const Matrix<S>& frame, unsigned i, unsigned j, double tol = kDefaultTol) {
  if (i == j || i >= 4 || j >= 4) throw DimensionError("critical_check needs two distinct indices below 4");
  auto f = detail::frame_components(rm, frame);
  const double scale = std::max(1.0, f.max_abs());
  for (unsigned k = 0; k < 4; ++k) {
    if (k == i || k == j) continue;
    if (!is_zero(f(i, j, k, j), tol, scale) || !is_zero(f(i, j, i, k), tol, scale)) return false;
  }
  return true;
}

/// dQ/dx at 0: 2 (F_2320, F_2321, F_2303, F_2313).
template <class S>
std::array<S, 4> sec_gradient_closed(const CurvatureTensor<S>& rm, const Matrix<S>& frame) {
  auto f = detail::frame_components(rm, frame);
  return {S(2) * f(2, 3, 2, 0), S(2) * f(2, 3, 2, 1), S(2) * f(2, 3, 0, 3), S(2) * f(2, 3, 1, 3)};
}

/// Hessian of Q at 0, valid whether or not P is critical.
template <class S>
Matrix<S> sec_hessian_closed(const CurvatureTensor<S>& rm, const Matrix<S>& frame) {
  auto f = detail::frame_components(rm, frame);
  const S q = f(2, 3, 2, 3);
  Matrix<S> h(4, 4);
  h(0, 0) = f(0, 2, 0, 2) - q;
  h(0, 1) = f(0, 2, 1, 2);
  h(0, 2) = f(2, 0, 0, 3);
  h(0, 3) = f(2, 0, 1, 3) - f(2, 3, 0, 1);
  h(1, 1) = f(1, 2, 1, 2) - q;
  h(1, 2) = f(2, 1, 0, 3) + f(2, 3, 0, 1);
  h(1, 3) = f(2, 1, 1, 3);
  h(2, 2) = f(0, 3, 0, 3) - q;
  h(2, 3) = f(0, 3, 1, 3);
  h(3, 3) = f(3, 1, 3, 1) - q;
  for (unsigned a = 0; a < 4; ++a)
    for (unsigned b = a; b < 4; ++b) h(b, a) = h(a, b) = S(2) * h(a, b);
  return h;
}

/// Central differences of Q at 0 with step h in [1e-6, 1e-3].
inline std::array<double, 4> finite_diff_gradient(const CurvatureTensor<double>& rm, const Matrix<double>& frame, double h) {
  if (!(h >= 1e-6 && h <= 1e-3)) throw DimensionError("finite difference step must lie in [1e-6, 1e-3]");
  std::array<double, 4> g{};
  for (unsigned i = 0; i < 4; ++i) {
    std::array<double, 4> xp{}, xm{};
    xp[i] = h, xm[i] = -h;
    g[i] = (sec_on_chart(rm, frame, xp) - sec_on_chart(rm, frame, xm)) / (2 * h);
  }
  return g;
}

inline Matrix<double> finite_diff_hessian(const CurvatureTensor<double>& rm, const Matrix<double>& frame, double h) {
  if (!(h >= 1e-6 && h <= 1e-3)) throw DimensionError("finite difference step must lie in [1e-6, 1e-3]");
  Matrix<double> out(4, 4);
  const double q0 = sec_on_chart(rm, frame, {});
  for (unsigned i = 0; i < 4; ++i) {
    std::array<double, 4> xp{}, xm{};
    xp[i] = h, xm[i] = -h;
    out(i, i) = (sec_on_chart(rm, frame, xp) - 2 * q0 + sec_on_chart(rm, frame, xm)) / (h * h);
    for (unsigned j = i + 1; j < 4; ++j) {
      std::array<double, 4> pp{}, pm{}, mp{}, mm{};
      pp[i] = h, pp[j] = h;
      pm[i] = h, pm[j] = -h;
      mp[i] = -h, mp[j] = h;
      mm[i] = -h, mm[j] = -h;
      double v = (sec_on_chart(rm, frame, pp) - sec_on_chart(rm, frame, pm) - sec_on_chart(rm, frame, mp) +
                  sec_on_chart(rm, frame, mm)) /
                 (4 * h * h);
      out(i, j) = out(j, i) = v;
    }
  }
  return out;
}

/// order 1: 4x1 gradient; order 2: 4x4 Hessian.
inline Matrix<double> finite_diff(const CurvatureTensor<double>& rm, const Matrix<double>& frame, unsigned order, double h) {
  if (order == 2) return finite_diff_hessian(rm, frame, h);
  if (order != 1) throw DimensionError("finite_diff order must be 1 or 2");
  auto g = finite_diff_gradient(rm, frame, h);
  Matrix<double> out(4, 1);
  for (unsigned i = 0; i < 4; ++i) out(i, 0) = g[i];
  return out;
}

template <class S>
struct CriticalData {
  Matrix<S> frame = Matrix<S>::identity(4);
  S sec_p{};
  S sec_star_p{};
  Matrix<S> hessian = Matrix<S>(4, 4);
};

/// The three mixed components fixed by a = F_2013 - F_2301, b = F_2103 + F_2301
/// and the Bianchi identity F_2013 - F_2103 + F_2301 = 0.
template <class S>
struct BianchiSplit {
  S f2013, f2103, f2301;
};

template <class S>
BianchiSplit<S> bianchi_split(const S& a, const S& b) {
  return {S((S(2) * a + b) / S(3)), S((a + S(2) * b) / S(3)), S((b - a) / S(3))};
}

/// Reads CriticalData off a tensor; throws unless P and *P are both critical.
template <class S>
CriticalData<S> extract(const CurvatureTensor<S>& rm, const Matrix<S>& frame, double tol = kDefaultTol) {
  if (!critical_check(rm, frame, 2, 3, tol)) throw InconsistentError("P = f_2 ^ f_3 is not critical");
  if (!critical_check(rm, frame, 0, 1, tol)) throw InconsistentError("*P = f_0 ^ f_1 is not critical");
  auto f = detail::frame_components(rm, frame);
  return {frame, f(2, 3, 2, 3), f(0, 1, 0, 1), sec_hessian_closed(rm, frame)};
}

/// Rebuilds Rm in standard coordinates from CriticalData.
template <class S>
CurvatureTensor<S> reconstruct(const CriticalData<S>& data, double tol = kDefaultTol) {
  detail::require_frame4(data.frame);
  const auto& h = data.hessian;
  if (h.rows() != 4 || !h.square()) throw DimensionError("hessian must be 4x4");
  const double scale = std::max(1.0, h.max_abs());
  for (unsigned a = 0; a < 4; ++a)
    for (unsigned b = a + 1; b < 4; ++b)
      if (!is_zero(S(h(a, b) - h(b, a)), tol, scale))
        throw InconsistentError("hessian is not symmetric: entry (" + std::to_string(a) + "," + std::to_string(b) +
                                ") differs from (" + std::to_string(b) + "," + std::to_string(a) + ")");
  if constexpr (!ScalarTraits<S>::exact) {
    for (unsigned a = 0; a < 4; ++a)
      for (unsigned b = 0; b < 4; ++b)
        if (!std::isfinite(h(a, b))) throw InconsistentError("hessian has a non-finite entry");
  }
  auto half = [&](unsigned a, unsigned b) { return S((h(a, b) + h(b, a)) / S(4)); };
  const S& q = data.sec_p;
  CurvatureTensor<S> f(MetricFrame<S>::euclidean(4));
  f.set(2, 3, 2, 3, q);
  f.set(0, 1, 0, 1, data.sec_star_p);
  f.set(0, 2, 0, 2, S(half(0, 0) + q));
  f.set(1, 2, 1, 2, S(half(1, 1) + q));
  f.set(0, 3, 0, 3, S(half(2, 2) + q));
  f.set(3, 1, 3, 1, S(half(3, 3) + q));
  f.set(0, 2, 1, 2, half(0, 1));
  f.set(2, 0, 0, 3, half(0, 2));
  f.set(2, 1, 1, 3, half(1, 3));
  f.set(0, 3, 1, 3, half(2, 3));
  auto split = bianchi_split(half(0, 3), half(1, 2));
  f.set(2, 0, 1, 3, split.f2013);
  f.set(2, 1, 0, 3, split.f2103);
  f.set(2, 3, 0, 1, split.f2301);
  return change_frame(f, data.frame.transpose());
}

}  // namespace curvlab
