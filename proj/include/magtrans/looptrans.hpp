#pragma once

// Loop-space layer: trigonometric loops with rational Fourier data, the
// abelian loop cocycle c2 and its trivializer b1, transgression of 2- and
// 3-forms, and holonomy of piecewise-affine loop families.
//
// Everything is in turn units. Loop derivatives dX are taken with respect to
// the angle 2 pi t, which keeps c2 and b1 rational.

#include <cmath>
#include <numbers>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"
#include "simplicial.hpp"

namespace magtrans {

struct ComplexQ {
  Rational re = 0;
  Rational im = 0;

  ComplexQ conj() const { return {re, -im}; }
  friend ComplexQ operator+(const ComplexQ& a, const ComplexQ& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend ComplexQ operator-(const ComplexQ& a, const ComplexQ& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend ComplexQ operator*(const ComplexQ& a, const ComplexQ& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend bool operator==(const ComplexQ&, const ComplexQ&) = default;
};

/// f(t) = sum_{|m| <= M} c_m e^{2 pi i m t}, c_{-m} = conj(c_m), values in R^n.
/// Only c_0..c_M are stored; c_0 must be real.
class TrigLoop {
 public:
  TrigLoop() = default;
  TrigLoop(int n, int max_freq)
      : n_(n), c_(max_freq + 1, std::vector<ComplexQ>(n)) {
    if (n <= 0 || max_freq < 0)
      throw PreconditionError("TrigLoop: need n > 0 and M >= 0");
  }

  static TrigLoop constant(const RationalVector& v) {
    TrigLoop f(static_cast<int>(v.size()), 0);
    for (std::size_t i = 0; i < v.size(); ++i) f.c_[0][i].re = v[i];
    return f;
  }

  int dimension() const noexcept { return n_; }
  int max_frequency() const noexcept { return static_cast<int>(c_.size()) - 1; }

  /// Coefficient c_m of component i, any sign of m. Zero beyond M.
  ComplexQ coeff(int m, int i) const {
    check_component(i);
    const int a = m < 0 ? -m : m;
    if (a > max_frequency()) return {};
    return m < 0 ? c_[a][i].conj() : c_[a][i];
  }

  void set(int m, int i, const ComplexQ& value) {
    check_component(i);
    if (m < 0) {
      set(-m, i, value.conj());
      return;
    }
    if (m > max_frequency())
      throw PreconditionError("TrigLoop::set: frequency beyond M");
    if (m == 0 && value.im != 0)
      throw PreconditionError("TrigLoop: zero mode must be real");
    c_[m][i] = value;
  }

  /// Angle derivative: coefficients i m c_m.
  TrigLoop d() const {
    TrigLoop out(n_, max_frequency());
    for (int m = 1; m <= max_frequency(); ++m)
      for (int i = 0; i < n_; ++i)
        out.c_[m][i] = ComplexQ{0, Rational(m)} * c_[m][i];
    return out;
  }

  friend TrigLoop operator+(const TrigLoop& a, const TrigLoop& b) {
    a.require_same_dim(b, "TrigLoop::+");
    TrigLoop out(a.n_, std::max(a.max_frequency(), b.max_frequency()));
    for (int m = 0; m <= out.max_frequency(); ++m)
      for (int i = 0; i < a.n_; ++i) out.c_[m][i] = a.coeff(m, i) + b.coeff(m, i);
    return out;
  }
  friend TrigLoop operator-(const TrigLoop& a, const TrigLoop& b) {
    return a + (-1) * b;
  }
  friend TrigLoop operator*(const Rational& s, TrigLoop f) {
    for (auto& row : f.c_)
      for (auto& c : row) c = {s * c.re, s * c.im};
    return f;
  }

  /// Value at t, in floating point.
  std::vector<double> operator()(double t) const {
    std::vector<double> v(n_);
    for (int i = 0; i < n_; ++i) {
      double s = c_[0][i].re.get_d();
      for (int m = 1; m <= max_frequency(); ++m) {
        const double w = 2 * std::numbers::pi * m * t;
        s += 2 * (c_[m][i].re.get_d() * std::cos(w) -
                  c_[m][i].im.get_d() * std::sin(w));
      }
      v[i] = s;
    }
    return v;
  }

  /// Derivative with respect to t at t, in floating point.
  std::vector<double> derivative(double t) const {
    std::vector<double> v(n_);
    for (int i = 0; i < n_; ++i) {
      double s = 0;
      for (int m = 1; m <= max_frequency(); ++m) {
        const double w = 2 * std::numbers::pi * m, a = w * t;
        s += 2 * w * (-c_[m][i].re.get_d() * std::sin(a) -
                      c_[m][i].im.get_d() * std::cos(a));
      }
      v[i] = s;
    }
    return v;
  }

  friend bool operator==(const TrigLoop& a, const TrigLoop& b) {
    if (a.n_ != b.n_) return false;
    const int mm = std::max(a.max_frequency(), b.max_frequency());
    for (int m = 0; m <= mm; ++m)
      for (int i = 0; i < a.n_; ++i)
        if (!(a.coeff(m, i) == b.coeff(m, i))) return false;
    return true;
  }

  void require_same_dim(const TrigLoop& o, const char* where) const {
    if (o.n_ != n_) throw DimensionMismatch(n_, o.n_, where);
  }

 private:
  void check_component(int i) const {
    if (i < 0 || i >= n_) throw PreconditionError("TrigLoop: bad component");
  }

  int n_ = 0;
  std::vector<std::vector<ComplexQ>> c_;
};

/// R^n-valued vector potential on [0, 1]; the Dirac operator is not modeled.
struct GaugePotential {
  TrigLoop a;
};

/// int_0^1 X . Y dt = sum_m X_{-m} . Y_m.
inline Rational loop_pairing(const TrigLoop& x, const TrigLoop& y) {
  x.require_same_dim(y, "loop_pairing");
  const int mm = std::max(x.max_frequency(), y.max_frequency());
  Rational s = 0;
  for (int i = 0; i < x.dimension(); ++i) {
    s += x.coeff(0, i).re * y.coeff(0, i).re;
    for (int m = 1; m <= mm; ++m) {
      const ComplexQ p = x.coeff(m, i).conj() * y.coeff(m, i);
      s += 2 * p.re;
    }
  }
  return s;
}

/// c2(X, Y) = 2 sum_{m>0} m Im(conj(X_m) . Y_m), i.e. -(1/2 pi) int X . Y' dt.
inline Rational c2_loop(const TrigLoop& x, const TrigLoop& y) {
  x.require_same_dim(y, "c2_loop");
  const int mm = std::max(x.max_frequency(), y.max_frequency());
  Rational s = 0;
  for (int m = 1; m <= mm; ++m)
    for (int i = 0; i < x.dimension(); ++i)
      s += 2 * m * (x.coeff(m, i).conj() * y.coeff(m, i)).im;
  return s;
}

/// b1(A; X) = (1/2) int A . X dt.
inline Rational b1(const GaugePotential& a, const TrigLoop& x) {
  return loop_pairing(a.a, x) / 2;
}

/// Gauge action A -> A + dX.
inline GaugePotential gauge_transform(const GaugePotential& a, const TrigLoop& x) {
  return {a.a + x.d()};
}

/// (db1)(A; X, Y) = [b1(A + dX; Y) - b1(A; Y)] - [b1(A + dY; X) - b1(A; X)].
inline Rational delta_b1(const GaugePotential& a, const TrigLoop& x,
                         const TrigLoop& y) {
  return (b1(gauge_transform(a, x), y) - b1(a, y)) -
         (b1(gauge_transform(a, y), x) - b1(a, x));
}

// ---------------------------------------------------------------------------
// Transgression.

/// Piecewise-affine path through the given vertices, uniform in t. Closed
/// when the last vertex equals the first.
class AffinePath {
 public:
  AffinePath() = default;
  explicit AffinePath(std::vector<RationalVector> vertices)
      : v_(std::move(vertices)) {
    if (v_.size() < 2) throw PreconditionError("AffinePath: need two vertices");
    for (const auto& x : v_)
      if (x.size() != v_.front().size())
        throw DimensionMismatch(v_.front().size(), x.size(), "AffinePath");
  }

  /// Boundary loop of a triangle: a -> b -> c -> a.
  static AffinePath triangle_loop(const RationalVector& a, const RationalVector& b,
                                  const RationalVector& c) {
    return AffinePath({a, b, c, a});
  }

  std::size_t dimension() const { return v_.front().size(); }
  const std::vector<RationalVector>& vertices() const noexcept { return v_; }
  bool is_closed() const { return v_.front() == v_.back(); }
  RationalVector displacement() const { return v_.back() - v_.front(); }

  AffinePath translated(const RationalVector& by) const {
    auto w = v_;
    for (auto& x : w) x += by;
    return AffinePath(std::move(w));
  }

  /// Float position at t in [0, 1].
  std::vector<double> operator()(double t) const {
    const std::size_t segs = v_.size() - 1;
    double u = t * static_cast<double>(segs);
    std::size_t k = std::min(segs - 1, static_cast<std::size_t>(u));
    u -= static_cast<double>(k);
    std::vector<double> out(dimension());
    for (std::size_t i = 0; i < out.size(); ++i)
      out[i] = (1 - u) * v_[k][i].get_d() + u * v_[k + 1][i].get_d();
    return out;
  }

 private:
  std::vector<RationalVector> v_;
};

/// int_0^1 B_{f(t)}(f'(t), X) dt. Per segment P -> Q the integrand is affine
/// along the segment, so the segment contributes B_{(P+Q)/2}(Q - P, X).
inline Rational transgress2(const AffineForm2& b, const AffinePath& f,
                            const RationalVector& x) {
  if (static_cast<int>(f.dimension()) != b.dimension())
    throw DimensionMismatch(b.dimension(), f.dimension(), "transgress2");
  if (static_cast<int>(x.size()) != b.dimension())
    throw DimensionMismatch(b.dimension(), x.size(), "transgress2");
  const auto& v = f.vertices();
  Rational s = 0;
  for (std::size_t k = 0; k + 1 < v.size(); ++k) {
    RationalVector mid = v[k] + v[k + 1];
    mid *= Rational(1, 2);
    s += b(mid, v[k + 1] - v[k], x);
  }
  return s;
}

/// A value of the form 2 pi * r with r rational.
struct TwoPiMultiple {
  Rational r = 0;
  double value() const { return 2 * std::numbers::pi * r.get_d(); }
  friend bool operator==(const TwoPiMultiple&, const TwoPiMultiple&) = default;
};

/// int_0^1 B_{f(t)}(f'(t), X) dt for a trig loop f. The constant part of each
/// coefficient pairs with f' to zero; the linear part g = L.f contributes
/// int g f'_j dt = -4 pi sum_{m>0} m Im(conj(g_m) f_{j,m}).
inline TwoPiMultiple transgress2(const AffineForm2& b, const TrigLoop& f,
                                 const RationalVector& x) {
  if (f.dimension() != b.dimension())
    throw DimensionMismatch(b.dimension(), f.dimension(), "transgress2");
  if (static_cast<int>(x.size()) != b.dimension())
    throw DimensionMismatch(b.dimension(), x.size(), "transgress2");
  const int n = b.dimension();
  // int (L.f) f'_j dt in units of 2 pi
  auto pair = [&](const RationalVector& lin, int j) {
    Rational s = 0;
    for (int m = 1; m <= f.max_frequency(); ++m) {
      ComplexQ g;
      for (int i = 0; i < n; ++i)
        g = g + ComplexQ{lin[i], 0} * f.coeff(m, i);
      s += -2 * m * (g.conj() * f.coeff(m, j)).im;
    }
    return s;
  };
  TwoPiMultiple out;
  for (const auto& [p, coeff] : b.coefficients()) {
    const auto [j, k] = p;
    // f'_j X_k - f'_k X_j
    out.r += pair(coeff.linear, j) * x[k] - pair(coeff.linear, k) * x[j];
  }
  return out;
}

/// int_0^1 omega(f'(t), X, Y) dt = omega(f(1) - f(0), X, Y).
inline Rational transgress3(const AntisymTensor3& omega, const AffinePath& f,
                            const RationalVector& x, const RationalVector& y) {
  const auto& v = f.vertices();
  Rational s = 0;
  for (std::size_t k = 0; k + 1 < v.size(); ++k)
    s += omega(v[k + 1] - v[k], x, y);
  return s;
}

/// Trig loops are closed: f' has no zero mode, so int f' dt = 0 and the
/// 3-form transgression vanishes.
inline Rational transgress3(const AntisymTensor3& omega, const TrigLoop& f,
                            const RationalVector& x, const RationalVector& y) {
  if (f.dimension() != omega.dimension())
    throw DimensionMismatch(omega.dimension(), f.dimension(), "transgress3");
  return omega(RationalVector(f.dimension()), x, y);
}

// ---------------------------------------------------------------------------
// Loop families and holonomy.

using ParamPoint = std::array<Rational, 2>;  // (s, t)

/// An affine piece of a family l_s(t): a parameter triangle in (s, t) with the
/// images of its corners.
struct FamilyPatch {
  std::array<ParamPoint, 3> param;
  std::array<RationalVector, 3> image;
};

/// Piecewise-affine map [0,1]^2 -> R^n, (s, t) -> l_s(t), with l_0 constant.
class LoopFamily {
 public:
  explicit LoopFamily(int n) : n_(n) {}

  int dimension() const noexcept { return n_; }
  const std::vector<FamilyPatch>& patches() const noexcept { return patches_; }

  void add_triangle(const std::array<ParamPoint, 3>& param,
                    const std::array<RationalVector, 3>& image) {
    for (const auto& v : image)
      if (static_cast<int>(v.size()) != n_)
        throw DimensionMismatch(n_, v.size(), "LoopFamily patch");
    const Rational det = (param[1][0] - param[0][0]) * (param[2][1] - param[0][1]) -
                         (param[1][1] - param[0][1]) * (param[2][0] - param[0][0]);
    if (det == 0) throw PreconditionError("LoopFamily: degenerate parameter triangle");
    patches_.push_back({param, image});
  }

  /// Rectangle [s0,s1] x [t0,t1] with corner images v(s,t). The map must be
  /// affine: v00 + v11 = v10 + v01.
  void add_quad(const Rational& s0, const Rational& s1, const Rational& t0,
                const Rational& t1, const RationalVector& v00,
                const RationalVector& v10, const RationalVector& v01,
                const RationalVector& v11) {
    if (!(v00 + v11 == v10 + v01))
      throw NonAffinePatch("LoopFamily: quad patch corners are not affine");
    add_triangle({ParamPoint{s0, t0}, ParamPoint{s1, t0}, ParamPoint{s1, t1}},
                 {v00, v10, v11});
    add_triangle({ParamPoint{s0, t0}, ParamPoint{s1, t1}, ParamPoint{s0, t1}},
                 {v00, v11, v01});
  }

  /// The same family with t reversed on every loop.
  LoopFamily reversed() const {
    LoopFamily out(n_);
    for (const auto& p : patches_) {
      auto q = p.param;
      for (auto& x : q) x[1] = 1 - x[1];
      out.patches_.push_back({q, p.image});
    }
    return out;
  }

 private:
  int n_;
  std::vector<FamilyPatch> patches_;
};

/// Cone family ending at the closed affine loop through `loop` (first vertex
/// repeated at the end): l_s(t) interpolates from the constant loop at
/// `apex` to the loop. Edge k of the loop occupies t in [k/K, (k+1)/K].
inline LoopFamily cone_family(const RationalVector& apex, const AffinePath& loop) {
  if (!loop.is_closed()) throw PreconditionError("cone_family: loop not closed");
  const auto& v = loop.vertices();
  const int n = static_cast<int>(apex.size());
  const std::size_t segs = v.size() - 1;
  LoopFamily fam(n);
  for (std::size_t k = 0; k < segs; ++k) {
    const Rational t0(static_cast<long>(k), static_cast<long>(segs));
    const Rational t1(static_cast<long>(k + 1), static_cast<long>(segs));
    Rational a = t0, b = t1;
    a.canonicalize();
    b.canonicalize();
    fam.add_triangle({ParamPoint{0, a}, ParamPoint{1, a}, ParamPoint{1, b}},
                     {apex, v[k], v[k + 1]});
    fam.add_triangle({ParamPoint{0, a}, ParamPoint{1, b}, ParamPoint{0, b}},
                     {apex, v[k + 1], apex});
  }
  return fam;
}

/// Family sweeping the triangle s(g1, g2) = (0, g1, g1+g2): the cone from the
/// constant loop at 0 to the loop 0 -> g1+g2 -> g1 -> 0. With
/// A(f; X) = int B(f', X) this orientation gives holonomy = int_s B.
inline LoopFamily standard_triangle_family(const RationalVector& g1,
                                           const RationalVector& g2) {
  const RationalVector zero(g1.size());
  return cone_family(zero, AffinePath::triangle_loop(zero, g1 + g2, g1));
}

/// int_0^1 A(l_s; d l_s / ds) ds with A(f; X) = int_0^1 B_{f(t)}(f'(t), X) dt,
/// i.e. the double integral of B(d_t l, d_s l) over the parameter square. On
/// an affine patch both partials are constant and the coefficients affine,
/// so the patch contributes area * B_{l(centroid)}(d_t l, d_s l).
inline Rational holonomy(const AffineForm2& b, const LoopFamily& fam) {
  if (fam.dimension() != b.dimension())
    throw DimensionMismatch(b.dimension(), fam.dimension(), "holonomy");
  Rational total = 0;
  for (const auto& p : fam.patches()) {
    // Solve for d_s l, d_t l from the two parameter edge vectors.
    const Rational ds1 = p.param[1][0] - p.param[0][0];
    const Rational dt1 = p.param[1][1] - p.param[0][1];
    const Rational ds2 = p.param[2][0] - p.param[0][0];
    const Rational dt2 = p.param[2][1] - p.param[0][1];
    const Rational det = ds1 * dt2 - dt1 * ds2;
    const RationalVector e1 = p.image[1] - p.image[0];
    const RationalVector e2 = p.image[2] - p.image[0];
    // [e1 e2] = [l_s l_t] [[ds1 ds2],[dt1 dt2]]
    const RationalVector ls = (dt2 / det) * e1 - (dt1 / det) * e2;
    const RationalVector lt = (ds1 / det) * e2 - (ds2 / det) * e1;
    RationalVector centroid = p.image[0] + p.image[1] + p.image[2];
    centroid *= Rational(1, 3);
    Rational area = det / 2;
    if (area < 0) area = -area;
    total += area * b(centroid, lt, ls);
  }
  return total;
}

// ---------------------------------------------------------------------------
// Loops with winding: f(t) = t p + X(t), a T^n loop of winding p.

/// A value r + s / (2 pi) with rational r, s.
struct LoopValue {
  Rational rational = 0;
  Rational per_two_pi = 0;
  double value() const {
    return rational.get_d() + per_two_pi.get_d() / (2 * std::numbers::pi);
  }
  friend bool operator==(const LoopValue&, const LoopValue&) = default;
};

struct WindingLoop {
  RationalVector winding;
  TrigLoop periodic;

  std::vector<double> operator()(double t) const {
    auto v = periodic(t);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += t * winding[i].get_d();
    return v;
  }
};

/// c2 extended to winding loops: -(1/2 pi) int f . g' dt with f = tp + X,
/// g = tq + Y. Expanding,
///   int f.g' = p.q/2 + p.(Y(1) - Y_0) + q.X_0 + int X.Y'
/// where Y(1) - Y_0 = 2 sum_{m>0} Re Y_m.
inline LoopValue c2_loop(const WindingLoop& f, const WindingLoop& g) {
  const auto& p = f.winding;
  const auto& q = g.winding;
  if (p.size() != q.size() ||
      static_cast<int>(p.size()) != f.periodic.dimension() ||
      f.periodic.dimension() != g.periodic.dimension())
    throw DimensionMismatch(p.size(), q.size(), "c2_loop (winding)");
  Rational extra = dot(p, q) / 2;
  for (std::size_t i = 0; i < p.size(); ++i) {
    Rational tail = 0;
    for (int m = 1; m <= g.periodic.max_frequency(); ++m)
      tail += 2 * g.periodic.coeff(m, static_cast<int>(i)).re;
    extra += p[i] * tail + q[i] * f.periodic.coeff(0, static_cast<int>(i)).re;
  }
  return {c2_loop(f.periodic, g.periodic), -extra};
}

}  // namespace magtrans
