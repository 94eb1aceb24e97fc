#pragma once

// Magnetic-translation phases assembled from a tensor a_ijk: the 3-cocycle C3
// by formula and by simplex integration, the face-product trivialization over
// R^n, face-choice mismatch, and torus integrality.

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

#include "cohomology.hpp"
#include "phase.hpp"
#include "simplicial.hpp"

namespace magtrans {

enum class GroupKind { real_space, torus };

class MagneticSystem {
 public:
  MagneticSystem(AntisymTensor3 a, GroupKind group = GroupKind::real_space)
      : a_(std::move(a)), group_(group) {
    if (group_ == GroupKind::torus && !a_.is_integral())
      throw PreconditionError(
          "MagneticSystem: torus systems need an integral tensor");
  }

  int dimension() const noexcept { return a_.dimension(); }
  const AntisymTensor3& tensor() const noexcept { return a_; }
  GroupKind group() const noexcept { return group_; }

  /// The 3-form whose simplex integrals give the phases. Over R^n this is
  /// sum_{i<j<k} a_ijk dx_i^dx_j^dx_k. On the torus the form is the sum over
  /// all index orderings, 6x the sorted one, so that integer tensors have
  /// trivial C3 on Z^n.
  const AntisymTensor3& form() const noexcept { return form_; }

 private:
  static AntisymTensor3 scaled(const AntisymTensor3& a, const Rational& s) {
    AntisymTensor3 out(a.dimension());
    for (const auto& [t, c] : a.coefficients()) out.set(t[0], t[1], t[2], s * c);
    return out;
  }

  AntisymTensor3 a_;
  GroupKind group_;
  AntisymTensor3 form_ = group_ == GroupKind::torus ? scaled(a_, 6) : a_;
};

namespace detail {
inline void require_args(const MagneticSystem& sys,
                         std::initializer_list<const RationalVector*> vs,
                         const char* where) {
  for (const auto* v : vs)
    if (static_cast<int>(v->size()) != sys.dimension())
      throw DimensionMismatch(sys.dimension(), v->size(), where);
}
}  // namespace detail

/// (1/6) omega(X, Y, Z) mod 1, omega = sys.form().
inline TurnExponent c3(const MagneticSystem& sys, const RationalVector& x,
                       const RationalVector& y, const RationalVector& z) {
  detail::require_args(sys, {&x, &y, &z}, "c3");
  return TurnExponent(sys.form()(x, y, z) / 6);
}

/// Integral of omega over the tetrahedron (0, X, X+Y, X+Y+Z).
inline TurnExponent c3_by_integration(const MagneticSystem& sys,
                                      const RationalVector& x,
                                      const RationalVector& y,
                                      const RationalVector& z) {
  detail::require_args(sys, {&x, &y, &z}, "c3_by_integration");
  return TurnExponent(integrate3(sys.form(), delta3_simplex(x, y, z)));
}

/// d(g1, g2): the potential B integrated over the triangle (0, g1, g1+g2).
inline TurnExponent face_phase(const MagneticSystem& sys,
                               const RationalVector& g1,
                               const RationalVector& g2) {
  if (sys.group() == GroupKind::torus)
    throw PreconditionError("face_phase: no global potential on the torus");
  detail::require_args(sys, {&g1, &g2}, "face_phase");
  return TurnExponent(integrate2(potential(sys.tensor()), s_chain(g1, g2)));
}

/// g1.d(g2, g3) - d(g1g2, g3) + d(g1, g2g3) - d(g1, g2): the potential
/// integrated over the oriented boundary of Delta3(g1, g2, g3), which equals
/// C3 by Stokes. The left translate g1.d integrates over (g1, g1+g2, g1+g2+g3).
inline TurnExponent face_product(const MagneticSystem& sys,
                                 const RationalVector& g1,
                                 const RationalVector& g2,
                                 const RationalVector& g3) {
  if (sys.group() == GroupKind::torus)
    throw PreconditionError("face_product: no global potential on the torus");
  detail::require_args(sys, {&g1, &g2, &g3}, "face_product");
  const AffineForm2 b = potential(sys.tensor());
  const Rational translated = integrate2(b, s_chain(g2, g3).translated(g1));
  return TurnExponent(translated) - face_phase(sys, g1 + g2, g3) +
         face_phase(sys, g1, g2 + g3) - face_phase(sys, g1, g2);
}

/// Phase mismatch between two face choices delta, delta' with common
/// boundary, given a 3-chain V with boundary delta - delta'.
inline TurnExponent lift_mismatch(const Chain& delta, const Chain& delta_prime,
                                  const Chain& filling,
                                  const MagneticSystem& sys) {
  if (!(boundary(delta) == boundary(delta_prime))) {
    std::ostringstream os;
    os << "lift_mismatch: faces have different boundaries; difference has "
       << (boundary(delta) - boundary(delta_prime)).canonical().terms().size()
       << " surviving edge terms";
    throw PreconditionError(os.str());
  }
  if (!filling.empty_as_written() || !(delta == delta_prime)) {
    if (filling.empty_as_written() || !(boundary(filling) == delta - delta_prime)) {
      std::ostringstream os;
      os << "lift_mismatch: boundary(filling) - (delta - delta') has "
         << (filling.empty_as_written()
                 ? (delta - delta_prime).canonical().terms().size()
                 : (boundary(filling) - (delta - delta_prime))
                       .canonical()
                       .terms()
                       .size())
         << " surviving face terms";
      throw PreconditionError(os.str());
    }
  }
  if (filling.empty_as_written()) return TurnExponent();
  return TurnExponent(integrate3(sys.form(), filling));
}

inline bool torus_admissible(const AntisymTensor3& a) { return a.is_integral(); }

/// All integer vectors in [-r, r]^n, lexicographic.
inline std::vector<RationalVector> integer_box(int n, long r) {
  std::vector<RationalVector> out;
  RationalVector v(n);
  for (int i = 0; i < n; ++i) v[i] = -r;
  while (true) {
    out.push_back(v);
    int i = n - 1;
    while (i >= 0 && v[i] == r) v[i--] = -r;
    if (i < 0) break;
    v[i] += 1;
  }
  return out;
}

struct TorusSweep {
  bool trivial = true;
  std::size_t triples = 0;    // argument triples covered
  std::size_t evaluations = 0;
  std::vector<RationalVector> witness;  // X, Y, Z of the first failure
  TurnExponent value;
};

/// Checks c3(X, Y, Z) = 0 for all X, Y, Z in [-r, r]^n. Small boxes are swept
/// literally. Larger ones fix (X, Y) and use linearity in Z: the exponent
/// vanishes mod 1 on the whole box iff it does at each unit vector, since
/// the box contains them and exponents at integer Z are Z-combinations of
/// those values.
inline TorusSweep torus_sweep(const MagneticSystem& sys, long r,
                              std::size_t literal_limit = 3000000) {
  const int n = sys.dimension();
  const auto box = integer_box(n, r);
  TorusSweep out;
  const double total = std::pow(static_cast<double>(box.size()), 3);
  out.triples = static_cast<std::size_t>(total);
  const bool literal = total <= static_cast<double>(literal_limit);
  std::vector<RationalVector> zs;
  if (literal)
    zs = box;
  else
    for (int i = 0; i < n; ++i) zs.push_back(RationalVector::unit(n, i));
  // Integral form on integer arguments: omega(X, Y, .) is an integer
  // covector, and the exponent vanishes iff its pairing with Z is 0 mod 6.
  const bool integral = sys.form().is_integral();
  struct Term {
    int i, j, k;
    long c;
  };
  std::vector<Term> terms;
  if (integral)
    for (const auto& [t, c] : sys.form().coefficients())
      terms.push_back({t[0], t[1], t[2], c.get_num().get_si()});
  auto longs = [n](const RationalVector& v) {
    std::vector<long> o(n);
    for (int k = 0; k < n; ++k) o[k] = v[k].get_num().get_si();
    return o;
  };
  std::vector<std::vector<long>> zi;
  for (const auto& z : zs) zi.push_back(longs(z));
  std::vector<long> cov(n);
  for (const auto& x : box)
    for (const auto& y : box) {
      if (integral) {
        // cofactor expansion of each minor along the Z row
        const auto xl = longs(x), yl = longs(y);
        std::fill(cov.begin(), cov.end(), 0);
        for (const auto& [i, j, k, c] : terms) {
          cov[k] += c * (xl[i] * yl[j] - xl[j] * yl[i]);
          cov[i] += c * (xl[j] * yl[k] - xl[k] * yl[j]);
          cov[j] += c * (xl[k] * yl[i] - xl[i] * yl[k]);
        }
      }
      for (std::size_t iz = 0; iz < zs.size(); ++iz) {
        ++out.evaluations;
        bool ok;
        if (integral) {
          long s = 0;
          for (int k = 0; k < n; ++k) s += cov[k] * zi[iz][k];
          ok = s % 6 == 0;
        } else {
          ok = c3(sys, x, y, zs[iz]).is_identity();
        }
        if (!ok) {
          out.trivial = false;
          out.witness = {x, y, zs[iz]};
          out.value = c3(sys, x, y, zs[iz]);
          return out;
        }
      }
    }
  return out;
}

}  // namespace magtrans
