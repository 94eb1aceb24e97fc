#include <gtest/gtest.h>

#include <numbers>

#include "magtrans/looptrans.hpp"
#include "magtrans/magnetic.hpp"
#include "magtrans/random.hpp"
#include "oracles.hpp"

using namespace magtrans;

namespace {

constexpr double kPi = std::numbers::pi;

RationalVector e(int n, int i) { return RationalVector::unit(n, i); }

double dotd(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Oracle: -(1/2 pi) int X . Y' dt by Simpson quadrature on point values.
double c2_quadrature(const TrigLoop& x, const TrigLoop& y) {
  return -oracle::simpson([&](double t) { return dotd(x(t), y.derivative(t)); },
                          4000) /
         (2 * kPi);
}

double b1_quadrature(const TrigLoop& a, const TrigLoop& x) {
  return oracle::simpson([&](double t) { return dotd(a(t), x(t)); }, 4000) / 2;
}

double form_at(const AffineForm2& b, const std::vector<double>& x,
               const std::vector<double>& u, const std::vector<double>& v) {
  double s = 0;
  for (const auto& [p, f] : b.coefficients()) {
    double c = f.constant.get_d();
    for (std::size_t i = 0; i < x.size(); ++i) c += f.linear[i].get_d() * x[i];
    s += c * (u[p[0]] * v[p[1]] - u[p[1]] * v[p[0]]);
  }
  return s;
}

// int B_f(f', X) dt for a piecewise-affine path by Simpson on each segment.
double t2_quadrature(const AffineForm2& b, const AffinePath& f,
                     const RationalVector& x) {
  const auto& v = f.vertices();
  const auto xd = oracle::to_point(x);
  double total = 0;
  for (std::size_t k = 0; k + 1 < v.size(); ++k) {
    const auto p = oracle::to_point(v[k]), q = oracle::to_point(v[k + 1]);
    std::vector<double> d(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) d[i] = q[i] - p[i];
    total += oracle::simpson(
        [&](double s) {
          std::vector<double> pt(p.size());
          for (std::size_t i = 0; i < p.size(); ++i) pt[i] = p[i] + s * d[i];
          return form_at(b, pt, d, xd);
        },
        200);
  }
  return total;
}

}  // namespace

TEST(TrigLoop, RealityAndEvaluation) {
  TrigLoop f(2, 2);
  f.set(1, 0, {1, 2});
  EXPECT_EQ(f.coeff(-1, 0), (ComplexQ{1, -2}));
  EXPECT_THROW(f.set(0, 0, {1, 1}), PreconditionError);
  EXPECT_THROW(f.set(3, 0, {1, 0}), PreconditionError);
  // f_0(t) = 2 cos(2 pi t) - 4 sin(2 pi t)
  EXPECT_NEAR(f(0.125)[0], 2 * std::cos(kPi / 4) - 4 * std::sin(kPi / 4), 1e-12);
  // derivative vs finite difference
  const double h = 1e-6;
  EXPECT_NEAR(f.derivative(0.3)[0], (f(0.3 + h)[0] - f(0.3 - h)[0]) / (2 * h), 1e-5);
}

TEST(C2Loop, Examples) {
  // X = e^{2 pi i t} e1 + c.c., Y = e^{-2 pi i t} e1 + c.c. (the same real loop
  // as written, so also take a phase-shifted Y to get a nonzero value).
  TrigLoop x(1, 1), y(1, 1), z(1, 1);
  x.set(1, 0, {1, 0});
  y.set(-1, 0, {1, 0});
  z.set(1, 0, {0, 1});  // i e^{2 pi i t} + c.c. = -2 sin(2 pi t)
  EXPECT_EQ(c2_loop(x, y), 0);
  const Rational v = c2_loop(x, z);
  EXPECT_NE(v, 0);
  EXPECT_EQ(c2_loop(z, x), -v);
  EXPECT_NEAR(v.get_d(), c2_quadrature(x, z), 1e-9);
  EXPECT_EQ(c2_loop(x, x), 0);
  EXPECT_EQ(c2_loop(TrigLoop::constant({3}), z), 0);
}

TEST(C2Loop, QuadratureOracleAndBilinearity) {
  RandomSource rng(71);
  for (int i = 0; i < 20; ++i) {
    const int m = static_cast<int>(rng.integer(1, 4));
    auto x = rng.trig_loop(3, m), y = rng.trig_loop(3, m), z = rng.trig_loop(3, m);
    EXPECT_NEAR(c2_loop(x, y).get_d(), c2_quadrature(x, y),
                1e-9 * (1 + std::abs(c2_loop(x, y).get_d())));
    EXPECT_EQ(c2_loop(x, y), -c2_loop(y, x));
    const Rational s = rng.rational();
    EXPECT_EQ(c2_loop(x + s * z, y), c2_loop(x, y) + s * c2_loop(z, y));
  }
}

TEST(B1, Examples) {
  RandomSource rng(73);
  auto x = rng.trig_loop(2, 3);
  EXPECT_EQ(b1({TrigLoop(2, 3)}, x), 0);
  EXPECT_EQ(b1({x.d()}, x), 0);
  auto a = rng.trig_loop(2, 2);
  EXPECT_NEAR(b1({a}, x).get_d(), b1_quadrature(a, x), 1e-9);
}

TEST(B1, CoboundaryIsC2) {
  RandomSource rng(79);
  for (int i = 0; i < 100; ++i) {
    const int m = static_cast<int>(rng.integer(0, 4));
    auto a = rng.trig_loop(3, m), x = rng.trig_loop(3, m), y = rng.trig_loop(3, m);
    EXPECT_EQ(delta_b1({a}, x, y), c2_loop(x, y));
  }
}

TEST(Transgress2, AffineExamples) {
  const int n = 3;
  const RationalVector zero(n);
  auto loop = AffinePath::triangle_loop(zero, e(n, 0), e(n, 0) + e(n, 1));
  AffineForm2 flat(n);
  flat.add(0, 1, AffineFunction{1, RationalVector(n)});
  EXPECT_EQ(transgress2(flat, loop, e(n, 2)), 0);
  EXPECT_EQ(transgress2(flat, AffinePath({e(n, 0), e(n, 0)}), e(n, 0)), 0);

  auto b = potential(AntisymTensor3::epsilon(3));
  const Rational v = transgress2(b, loop, e(n, 0));
  EXPECT_NEAR(v.get_d(), t2_quadrature(b, loop, e(n, 0)), 1e-9);

  RandomSource rng(83);
  for (int i = 0; i < 20; ++i) {
    auto bb = rng.affine_form(3, 5);
    AffinePath path({rng.vector(3, 5), rng.vector(3, 5), rng.vector(3, 5),
                     rng.vector(3, 5)});
    auto x = rng.vector(3, 5);
    const double exact = transgress2(bb, path, x).get_d();
    EXPECT_NEAR(exact, t2_quadrature(bb, path, x), 1e-9 * (1 + std::abs(exact)));
  }
}

TEST(Transgress2, TrigLoopQuadrature) {
  RandomSource rng(89);
  for (int i = 0; i < 20; ++i) {
    auto b = rng.affine_form(3, 5);
    auto f = rng.trig_loop(3, static_cast<int>(rng.integer(0, 3)), 5);
    auto x = rng.vector(3, 5);
    const double exact = transgress2(b, f, x).value();
    const double q = oracle::simpson(
        [&](double t) {
          return form_at(b, f(t), f.derivative(t), oracle::to_point(x));
        },
        4000);
    EXPECT_NEAR(exact, q, 1e-8 * (1 + std::abs(exact)));
  }
  EXPECT_EQ(transgress2(rng.affine_form(3), TrigLoop::constant({1, 2, 3}), e(3, 0)).r,
            0);
}

TEST(Transgress3, Examples) {
  auto eps = AntisymTensor3::epsilon(3);
  const RationalVector zero(3);
  EXPECT_EQ(transgress3(eps, AffinePath({zero, e(3, 2), zero}), e(3, 0), e(3, 1)), 0);
  auto tri = AffinePath::triangle_loop(zero, e(3, 2), e(3, 2) + e(3, 0));
  // every segment pairs its e3-displacement with e1 ^ e2; they cancel on a
  // closed loop
  Rational by_segments = 0;
  for (std::size_t k = 0; k + 1 < tri.vertices().size(); ++k)
    by_segments += (tri.vertices()[k + 1] - tri.vertices()[k])[2];
  EXPECT_EQ(transgress3(eps, tri, e(3, 0), e(3, 1)), by_segments);
  EXPECT_EQ(transgress3(eps, tri, e(3, 0), e(3, 1)), 0);
  EXPECT_EQ(transgress3(eps, AffinePath({zero, e(3, 2)}), e(3, 0), e(3, 1)), 1);
  EXPECT_EQ(transgress3(eps, AffinePath({zero, e(3, 1)}), e(3, 0), e(3, 0)), 0);
  RandomSource rng(97);
  EXPECT_EQ(transgress3(eps, rng.trig_loop(3, 2), e(3, 0), e(3, 1)), 0);
}

TEST(Transgress, StokesAgainstTransgress2) {
  // T2(B, f+Y, X) - T2(B, f, X)
  //   = T3(dB, f, X, Y) + B_{f(1)}(Y, X) - B_{f(0)}(Y, X) - (d_X B)(Y, p)
  RandomSource rng(101);
  for (int i = 0; i < 50; ++i) {
    auto b = rng.affine_form(4, 5);
    const bool closed = i % 2 == 0;
    std::vector<RationalVector> v = {rng.vector(4), rng.vector(4), rng.vector(4)};
    if (closed) {
      v.push_back(v.front());
    }
    AffinePath f(v);
    auto x = rng.vector(4), y = rng.vector(4);
    const RationalVector p = f.displacement();
    const Rational lhs = transgress2(b, f.translated(y), x) - transgress2(b, f, x);
    const Rational rhs = transgress3(exterior_d(b), f, x, y) + b(v.back(), y, x) -
                         b(v.front(), y, x) -
                         b.derivative(x)(RationalVector(4), y, p);
    EXPECT_EQ(lhs, rhs);
    if (closed) {
      EXPECT_EQ(lhs, 0);
    }
  }
}

TEST(Holonomy, StandardFamilyEqualsSurfaceIntegral) {
  auto b = potential(AntisymTensor3::epsilon(3));
  MagneticSystem sys(AntisymTensor3::epsilon(3));
  auto fam = standard_triangle_family(e(3, 0), e(3, 1));
  const Rational h = holonomy(b, fam);
  EXPECT_EQ(h, integrate2(b, s_chain(e(3, 0), e(3, 1))));
  EXPECT_EQ(TurnExponent(h), face_phase(sys, e(3, 0), e(3, 1)));
  EXPECT_EQ(holonomy(b, fam.reversed()), -h);

  RandomSource rng(103);
  for (int i = 0; i < 100; ++i) {
    auto bb = rng.affine_form(3, 10);
    auto g1 = rng.vector(3), g2 = rng.vector(3);
    auto f = standard_triangle_family(g1, g2);
    EXPECT_EQ(holonomy(bb, f), integrate2(bb, s_chain(g1, g2)));
    EXPECT_EQ(holonomy(bb, f.reversed()), -integrate2(bb, s_chain(g1, g2)));
  }
}

TEST(Holonomy, FamilyEndsOnLoopAndMatchesTransgression) {
  // Holonomy as int ds A(l_s; d_s l_s): integrate the transgression of the
  // loop l_s over s by Simpson. For the cone family, l_s is the loop scaled
  // toward the apex, and d_s l_s = l_1(t) - apex along each patch edge.
  RandomSource rng(107);
  auto b = rng.affine_form(3, 5);
  auto g1 = rng.vector(3, 5), g2 = rng.vector(3, 5);
  const RationalVector zero(3);
  const auto loop = AffinePath::triangle_loop(zero, g1 + g2, g1);
  const auto pts = loop.vertices();
  auto lp = [&](double s, double t) {
    // the cone family's value: interpolate inside the patch containing (s, t)
    const double segs = 3;
    int k = std::min(2, static_cast<int>(t * segs));
    const double a = k / segs, bnd = (k + 1) / segs;
    const auto p = oracle::to_point(pts[k]), q = oracle::to_point(pts[k + 1]);
    std::vector<double> out(3);
    const double u = (t - a) / (bnd - a);
    if (u <= s) {  // first triangle: (0,a)->0, (1,a)->p, (1,b)->q
      for (int i = 0; i < 3; ++i) out[i] = (s - u) * p[i] + u * q[i];
    } else {  // second: (0,a)->0, (1,b)->q, (0,b)->0
      for (int i = 0; i < 3; ++i) out[i] = s * q[i];
    }
    return out;
  };
  const double hs = 1e-6;
  const double q = oracle::simpson(
      [&](double s) {
        return oracle::simpson(
            [&](double t) {
              const auto x = lp(s, t);
              std::vector<double> dt(3), ds(3);
              const auto tp = lp(s, std::min(1.0, t + hs)), tm = lp(s, std::max(0.0, t - hs));
              const auto sp = lp(std::min(1.0, s + hs), t), sm = lp(std::max(0.0, s - hs), t);
              const double wt = std::min(1.0, t + hs) - std::max(0.0, t - hs);
              const double ws = std::min(1.0, s + hs) - std::max(0.0, s - hs);
              for (int i = 0; i < 3; ++i) {
                dt[i] = (tp[i] - tm[i]) / wt;
                ds[i] = (sp[i] - sm[i]) / ws;
              }
              return form_at(b, x, dt, ds);
            },
            600);
      },
      600);
  const double exact = holonomy(b, standard_triangle_family(g1, g2)).get_d();
  EXPECT_NEAR(q, exact, 2e-2 * (1 + std::abs(exact)));
}

TEST(Holonomy, ConstantAndNonAffine) {
  auto b = potential(AntisymTensor3::epsilon(3));
  LoopFamily c(3);
  const RationalVector p{1, 2, 3};
  c.add_quad(0, 1, 0, 1, p, p, p, p);
  EXPECT_EQ(holonomy(b, c), 0);
  LoopFamily bad(3);
  EXPECT_THROW(bad.add_quad(0, 1, 0, 1, {0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}),
               NonAffinePatch);
}

TEST(WindingLoop, C2ExtensionMatchesQuadrature) {
  RandomSource rng(109);
  for (int i = 0; i < 10; ++i) {
    WindingLoop f{rng.integer_vector(2, -2, 2), rng.trig_loop(2, 2, 5)};
    WindingLoop g{rng.integer_vector(2, -2, 2), rng.trig_loop(2, 2, 5)};
    const double q =
        -oracle::simpson(
            [&](double t) {
              auto gd = g.periodic.derivative(t);
              for (int k = 0; k < 2; ++k) gd[k] += g.winding[k].get_d();
              return dotd(f(t), gd);
            },
            4000) /
        (2 * kPi);
    EXPECT_NEAR(c2_loop(f, g).value(), q, 1e-8);
    // zero winding reduces to the periodic cocycle
    WindingLoop f0{RationalVector(2), f.periodic}, g0{RationalVector(2), g.periodic};
    EXPECT_EQ(c2_loop(f0, g0).rational, c2_loop(f.periodic, g.periodic));
    EXPECT_EQ(c2_loop(f0, g0).per_two_pi, 0);
    // shifting f by an integer vector k (same T^n loop) moves c2 by
    // -(k . q) / 2 pi with k . q an integer
    const RationalVector k = rng.integer_vector(2, -3, 3);
    WindingLoop fk{f.winding, f.periodic + TrigLoop::constant(k)};
    const Rational diff = c2_loop(fk, g).per_two_pi - c2_loop(f, g).per_two_pi;
    EXPECT_EQ(diff, -dot(k, g.winding));
    EXPECT_TRUE(is_integer(diff));
  }
}
