#pragma once

// Floating-point check, for SU(2) loops, that the loop cocycle and the
// transgressed 3-form differ by the exterior derivative of
//   xi_h(X) = (1/8 pi^2) int tr(h^-1 h' X) dt.
// Nothing else in the library depends on this header.

#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "errors.hpp"
#include "looptrans.hpp"

namespace magtrans::su2 {

using cd = std::complex<double>;
using Mat2 = std::array<cd, 4>;  // row major

inline Mat2 identity() { return {1, 0, 0, 1}; }
inline Mat2 mul(const Mat2& a, const Mat2& b) {
  return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
          a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}
inline Mat2 add(const Mat2& a, const Mat2& b) {
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]};
}
inline Mat2 sub(const Mat2& a, const Mat2& b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]};
}
inline Mat2 scale(cd s, const Mat2& a) { return {s * a[0], s * a[1], s * a[2], s * a[3]}; }
inline Mat2 adjoint(const Mat2& a) {
  return {std::conj(a[0]), std::conj(a[2]), std::conj(a[1]), std::conj(a[3])};
}
inline cd trace(const Mat2& a) { return a[0] + a[3]; }
inline Mat2 commutator(const Mat2& a, const Mat2& b) {
  return sub(mul(a, b), mul(b, a));
}
inline double norm(const Mat2& a) {
  double s = 0;
  for (const auto& x : a) s += std::norm(x);
  return std::sqrt(s);
}

/// Unit quaternion (a, b, c, d) as [[a+bi, c+di], [-c+di, a-bi]].
inline Mat2 from_quaternion(double a, double b, double c, double d) {
  const double r = std::sqrt(a * a + b * b + c * c + d * d);
  a /= r, b /= r, c /= r, d /= r;
  return {cd(a, b), cd(c, d), cd(-c, d), cd(a, -b)};
}

/// exp of a traceless anti-Hermitian 2x2 matrix.
inline Mat2 exp_su2(const Mat2& x) {
  // x^2 = -theta^2 I
  const double theta = std::sqrt(std::max(0.0, -trace(mul(x, x)).real() / 2));
  if (theta < 1e-300) return add(identity(), x);
  return add(scale(std::cos(theta), identity()), scale(std::sin(theta) / theta, x));
}

/// h(t) = prod_k U_k diag(e^{2 pi i m_k t}, e^{-2 pi i m_k t}) U_k^dagger.
class SU2Loop {
 public:
  struct Factor {
    Mat2 u;
    int winding;
  };

  SU2Loop() = default;
  explicit SU2Loop(std::vector<Factor> factors) : f_(std::move(factors)) {}

  const std::vector<Factor>& factors() const noexcept { return f_; }

  Mat2 operator()(double t) const {
    Mat2 h = identity();
    for (const auto& f : f_) h = mul(h, piece(f, t));
    return h;
  }

  /// dh/dt by the product rule.
  Mat2 derivative(double t) const {
    Mat2 total{};
    for (std::size_t j = 0; j < f_.size(); ++j) {
      Mat2 term = identity();
      for (std::size_t k = 0; k < f_.size(); ++k)
        term = mul(term, k == j ? piece_dot(f_[k], t) : piece(f_[k], t));
      total = add(total, term);
    }
    return total;
  }

 private:
  static Mat2 diag(const Factor& f, double t, bool dot) {
    const double w = 2 * std::numbers::pi * f.winding;
    const cd e = std::exp(cd(0, w * t));
    if (!dot) return {e, 0, 0, std::conj(e)};
    return {cd(0, w) * e, 0, 0, cd(0, -w) * std::conj(e)};
  }
  static Mat2 piece(const Factor& f, double t) {
    return mul(mul(f.u, diag(f, t, false)), adjoint(f.u));
  }
  static Mat2 piece_dot(const Factor& f, double t) {
    return mul(mul(f.u, diag(f, t, true)), adjoint(f.u));
  }

  std::vector<Factor> f_;
};

/// su(2)-valued loop X(t) = sum_a x_a(t) i sigma_a with x a real trig loop in
/// R^3.
struct AlgebraLoop {
  TrigLoop components;

  static Mat2 basis(int a) {
    switch (a) {
      case 0: return {0, cd(0, 1), cd(0, 1), 0};
      case 1: return {0, 1, -1, 0};
      default: return {cd(0, 1), 0, 0, cd(0, -1)};
    }
  }
  static Mat2 combine(const std::vector<double>& x) {
    Mat2 m{};
    for (int a = 0; a < 3; ++a) m = add(m, scale(x[a], basis(a)));
    return m;
  }
  Mat2 operator()(double t) const { return combine(components(t)); }
  Mat2 derivative(double t) const { return combine(components.derivative(t)); }
};

struct Theorem1Result {
  double lhs = 0;             // (1/4 pi^2) int tr X Y'
  double theta = 0;           // (k/8 pi^2) int tr A [X, Y]
  double dxi_formula = 0;     // (1/8 pi^2)[int tr A[X,Y] - 2 int tr X Y']
  double dxi_numeric = 0;     // from finite differences of xi
  double residual_minus = 0;  // lhs - theta + dxi_numeric
  double residual_plus = 0;   // lhs - theta - dxi_numeric
  double unitarity_defect = 0;
  double fd_discrepancy = 0;  // |dxi_numeric - dxi_formula|
};

/// Evaluates both sides of the cohomologous-forms statement at h for level k.
/// Integrals use the trapezoid rule on `samples` points, which is spectrally
/// accurate for these smooth periodic integrands. The directional derivatives
/// of xi along the left-invariant fields are central finite differences of
/// xi at h exp(+-eps X), independent of the closed-form dxi.
inline Theorem1Result theorem1_check(const SU2Loop& h, const AlgebraLoop& x,
                                     const AlgebraLoop& y, int k = 1,
                                     int samples = 512, double eps = 1e-5,
                                     double unitarity_tol = 1e-9) {
  if (x.components.dimension() != 3 || y.components.dimension() != 3)
    throw DimensionMismatch(3, x.components.dimension(), "theorem1_check");
  const double c = 1 / (8 * std::numbers::pi * std::numbers::pi);
  Theorem1Result r;
  double tr_xdy = 0, tr_axy = 0;
  // xi_{h exp(+-eps Z)}(W) for the two finite differences
  double xi_xy_p = 0, xi_xy_m = 0, xi_yx_p = 0, xi_yx_m = 0;
  for (int i = 0; i < samples; ++i) {
    const double t = static_cast<double>(i) / samples;
    const Mat2 hv = h(t), hd = h.derivative(t);
    r.unitarity_defect =
        std::max(r.unitarity_defect, norm(sub(mul(adjoint(hv), hv), identity())));
    const Mat2 a = mul(adjoint(hv), hd);
    const Mat2 xv = x(t), yv = y(t), yd = y.derivative(t);
    tr_xdy += trace(mul(xv, yd)).real();
    const Mat2 xy = commutator(xv, yv);
    tr_axy += trace(mul(a, xy)).real();
    // (h e^{sZ})^-1 (h e^{sZ})' = e^{-sZ} A e^{sZ} + e^{-sZ} (e^{sZ})', the
    // second term by the dexp series, truncated past O(s^3).
    auto shifted_a = [&](const AlgebraLoop& z, double s) {
      const Mat2 zs = scale(s, z(t)), zd = scale(s, z.derivative(t));
      const Mat2 e = exp_su2(zs), einv = adjoint(e);
      const Mat2 c1 = commutator(zs, zd);
      Mat2 dexp = sub(zd, scale(0.5, c1));
      dexp = add(dexp, scale(1.0 / 6, commutator(zs, c1)));
      return add(mul(mul(einv, a), e), dexp);
    };
    xi_xy_p += trace(mul(shifted_a(x, eps), yv)).real();
    xi_xy_m += trace(mul(shifted_a(x, -eps), yv)).real();
    xi_yx_p += trace(mul(shifted_a(y, eps), xv)).real();
    xi_yx_m += trace(mul(shifted_a(y, -eps), xv)).real();
  }
  const double w = 1.0 / samples;
  tr_xdy *= w, tr_axy *= w;
  xi_xy_p *= w, xi_xy_m *= w, xi_yx_p *= w, xi_yx_m *= w;

  r.lhs = 2 * c * tr_xdy;
  r.theta = k * c * tr_axy;
  r.dxi_formula = c * (tr_axy - 2 * tr_xdy);
  // d xi(X, Y) = X xi(Y) - Y xi(X) - xi([X, Y])
  const double x_xi_y = c * (xi_xy_p - xi_xy_m) / (2 * eps);
  const double y_xi_x = c * (xi_yx_p - xi_yx_m) / (2 * eps);
  r.dxi_numeric = x_xi_y - y_xi_x - c * tr_axy;  // xi([X,Y]) at h
  r.residual_minus = r.lhs - r.theta + r.dxi_numeric;
  r.residual_plus = r.lhs - r.theta - r.dxi_numeric;
  r.fd_discrepancy = std::abs(r.dxi_numeric - r.dxi_formula);
  if (r.unitarity_defect > unitarity_tol)
    throw PreconditionError("theorem1_check: h is not unitary to tolerance");
  return r;
}

}  // namespace magtrans::su2
