#include <gtest/gtest.h>

#include "magtrans/random.hpp"
#include "magtrans/simplicial.hpp"
#include "oracles.hpp"

using namespace magtrans;

namespace {

RationalVector e(int n, int i) { return RationalVector::unit(n, i); }

AffineForm2 single(int n, int coord, int j, int k) {
  AffineForm2 b(n);
  AffineFunction f{0, RationalVector(n)};
  f.linear[coord] = 1;
  b.add(j, k, f);
  return b;
}

std::vector<oracle::Point> points(const AffineSimplex& s) {
  std::vector<oracle::Point> out;
  for (const auto& v : s.vertices()) out.push_back(oracle::to_point(v));
  return out;
}

}  // namespace

TEST(AntisymTensor3, StoresSortedWithSign) {
  AntisymTensor3 a(4);
  a.set(2, 0, 1, 3);  // odd-looking order: (2,0,1) is an even permutation
  EXPECT_EQ(a.coefficient(0, 1, 2), 3);
  EXPECT_EQ(a.coefficient(1, 0, 2), -3);
  EXPECT_EQ(a.coefficient(0, 0, 2), 0);
  EXPECT_THROW(a.set(0, 1, 4, 1), PreconditionError);
}

TEST(AntisymTensor3, EvaluationMatchesPermutationExpansion) {
  RandomSource rng(5);
  for (int n = 3; n <= 5; ++n)
    for (int trial = 0; trial < 30; ++trial) {
      auto a = rng.rational_tensor(n);
      auto u = rng.vector(n), v = rng.vector(n), w = rng.vector(n);
      double expect = 0;
      for (const auto& [t, c] : a.coefficients())
        expect += c.get_d() * oracle::det3_brute(oracle::to_point(u),
                                                 oracle::to_point(v),
                                                 oracle::to_point(w), t[0],
                                                 t[1], t[2]);
      EXPECT_NEAR(a(u, v, w).get_d(), expect, 1e-9 * (1 + std::abs(expect)));
      EXPECT_EQ(a(u, v, w), -a(v, u, w));
      EXPECT_EQ(a(u, v, w), a(v, w, u));
    }
}

TEST(AntisymTensor3, IntegerBasis) {
  EXPECT_EQ(AntisymTensor3::integer_basis(3).size(), 1u);
  EXPECT_EQ(AntisymTensor3::integer_basis(4).size(), 4u);
  EXPECT_EQ(AntisymTensor3::integer_basis(5).size(), 10u);
  for (const auto& b : AntisymTensor3::integer_basis(4)) EXPECT_TRUE(b.is_integral());
}

TEST(Boundary, TriangleFaces) {
  RationalVector v0{0, 0}, v1{1, 0}, v2{0, 1};
  Chain expect(1);
  expect.add(1, AffineSimplex({v1, v2}));
  expect.add(-1, AffineSimplex({v0, v2}));
  expect.add(1, AffineSimplex({v0, v1}));
  EXPECT_EQ(boundary(AffineSimplex({v0, v1, v2})), expect);
}

TEST(Boundary, SquaresToZero) {
  RandomSource rng(9);
  for (int i = 0; i < 20; ++i) {
    AffineSimplex t({rng.vector(3), rng.vector(3), rng.vector(3), rng.vector(3)});
    EXPECT_TRUE(boundary(boundary(t)).is_zero());
  }
}

TEST(Chain, CanonicalFormHandlesOrientation) {
  RationalVector a{0, 0}, b{1, 0}, c{0, 1};
  Chain x(1, AffineSimplex({a, b, c}));
  Chain y(-1, AffineSimplex({b, a, c}));
  EXPECT_EQ(x, y);
  EXPECT_TRUE((x - y).is_zero());
  Chain degenerate(1, AffineSimplex({a, a, c}));
  EXPECT_TRUE(degenerate.is_zero());
}

TEST(Integrate3, StandardSimplex) {
  auto eps = AntisymTensor3::epsilon(3);
  AffineSimplex s({RationalVector(3), e(3, 0), e(3, 0) + e(3, 1),
                   e(3, 0) + e(3, 1) + e(3, 2)});
  EXPECT_EQ(integrate3(eps, s), Rational(1, 6));
  EXPECT_EQ(integrate3(eps, s.translated({7, -2, Rational(1, 3)})), Rational(1, 6));
}

TEST(Integrate3, QuadratureOracle) {
  auto eps = AntisymTensor3::epsilon(3);
  auto s = delta3_simplex({1, 0, 0}, {0, 2, 0}, {0, 0, 3});
  EXPECT_EQ(integrate3(eps, s), 1);
  // Midpoint subdivision converges to the exact value.
  EXPECT_NEAR(oracle::quad_integrate3(eps, points(s), 120), 1.0, 2e-2);

  RandomSource rng(13);
  for (int i = 0; i < 10; ++i) {
    auto a = rng.rational_tensor(4);
    AffineSimplex t({rng.vector(4, 5), rng.vector(4, 5), rng.vector(4, 5),
                     rng.vector(4, 5)});
    const double exact = integrate3(a, t).get_d();
    EXPECT_NEAR(oracle::quad_integrate3(a, points(t), 120), exact,
                2e-2 * (1 + std::abs(exact)));
  }
}

TEST(Integrate2, Examples) {
  const int n = 3;
  auto b = single(n, 0, 1, 2);  // x1 dx2^dx3
  EXPECT_EQ(integrate2(b, AffineSimplex({RationalVector(n), e(n, 1), e(n, 2)})), 0);
  AffineSimplex t({{1, 0, 0}, {1, 1, 0}, {1, 0, 1}});
  EXPECT_EQ(integrate2(b, t), Rational(1, 2));
  EXPECT_NEAR(oracle::quad_integrate2(b, points(t), 400), 0.5, 1e-9);

  AffineForm2 c(n);
  c.add(0, 1, AffineFunction{1, RationalVector(n)});
  EXPECT_EQ(integrate2(c, s_chain(e(n, 0), e(n, 1))), Rational(1, 2));
}

TEST(Integrate2, QuadratureOracleOnRandomForms) {
  RandomSource rng(17);
  for (int i = 0; i < 20; ++i) {
    auto b = rng.affine_form(3, 5);
    AffineSimplex t({rng.vector(3, 5), rng.vector(3, 5), rng.vector(3, 5)});
    const double exact = integrate2(b, t).get_d();
    EXPECT_NEAR(oracle::quad_integrate2(b, points(t), 600), exact,
                2e-3 * (1 + std::abs(exact)));
  }
}

TEST(ExteriorD, Signs) {
  auto d1 = exterior_d(single(3, 0, 1, 2));
  EXPECT_EQ(d1.coefficient(0, 1, 2), 1);
  auto d2 = exterior_d(single(3, 2, 0, 1));  // x3 dx1^dx2
  EXPECT_EQ(d2.coefficient(0, 1, 2), 1);
  auto d3 = exterior_d(single(3, 1, 0, 2));  // x2 dx1^dx3 -> -dx1dx2dx3
  EXPECT_EQ(d3.coefficient(0, 1, 2), -1);
  AffineForm2 c(3);
  c.add(0, 1, AffineFunction{5, RationalVector(3)});
  EXPECT_TRUE(exterior_d(c).is_zero());
}

TEST(Potential, RoundTrip) {
  auto eps = AntisymTensor3::epsilon(3);
  EXPECT_EQ(exterior_d(potential(eps)), eps);
  EXPECT_TRUE(potential(AntisymTensor3(3)).coefficients().empty());
  AntisymTensor3 a(4);
  a.set(0, 1, 3, 2);
  EXPECT_EQ(exterior_d(potential(a)), a);
  RandomSource rng(19);
  for (int n = 3; n <= 5; ++n) {
    auto r = rng.rational_tensor(n);
    EXPECT_EQ(exterior_d(potential(r)), r);
  }
}

TEST(Stokes, RandomTetrahedra) {
  // integral of dB over T equals integral of B over the boundary of T.
  RandomSource rng(23);
  for (int i = 0; i < 50; ++i) {
    auto b = rng.affine_form(4, 5);
    AffineSimplex t({rng.vector(4), rng.vector(4), rng.vector(4), rng.vector(4)});
    EXPECT_EQ(integrate3(exterior_d(b), t), integrate2(b, boundary(t)));
  }
}

TEST(Chains, PaperIdentities) {
  RandomSource rng(29);
  for (int i = 0; i < 20; ++i) {
    auto x = rng.vector(3), y = rng.vector(3), z = rng.vector(3), w = rng.vector(3);
    EXPECT_EQ(boundary(s_chain(x, y)), ell_chain(x, y));
    Chain c = ell_chain(y, z).translated(x) - ell_chain(x + y, z) +
              ell_chain(x, y + z) - ell_chain(x, y);
    EXPECT_TRUE(c.is_zero());
    EXPECT_TRUE(boundary(v_chain(x, y, z, w)).is_zero());
  }
}

TEST(Chains, DimensionMismatch) {
  EXPECT_THROW(s_chain({1, 2}, {1, 2, 3}), DimensionMismatch);
  EXPECT_THROW(AffineSimplex({{1, 2}, {1, 2, 3}}), DimensionMismatch);
}
