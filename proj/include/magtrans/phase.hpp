#pragma once

// Phases e^{2 pi i q} stored exactly as their exponent q in full turns.

#include <ostream>
#include <utility>

#include "rational.hpp"

namespace magtrans {

/// A U(1) phase represented by its exponent in turns, normalized to [0, 1).
class TurnExponent {
 public:
  TurnExponent() = default;
  explicit TurnExponent(const Rational& turns) : value_(frac(turns)) {}

  const Rational& value() const noexcept { return value_; }
  bool is_identity() const { return value_ == 0; }

  TurnExponent operator-() const { return TurnExponent(-value_); }
  friend TurnExponent operator+(const TurnExponent& a, const TurnExponent& b) {
    return TurnExponent(a.value_ + b.value_);
  }
  friend TurnExponent operator-(const TurnExponent& a, const TurnExponent& b) {
    return TurnExponent(a.value_ - b.value_);
  }
  TurnExponent& operator+=(const TurnExponent& o) { return *this = *this + o; }
  TurnExponent& operator-=(const TurnExponent& o) { return *this = *this - o; }

  friend bool operator==(const TurnExponent& a, const TurnExponent& b) {
    return a.value_ == b.value_;
  }
  friend std::ostream& operator<<(std::ostream& os, const TurnExponent& t) {
    return os << to_string(t.value_);
  }

 private:
  Rational value_ = 0;
};

inline TurnExponent turn_add(const TurnExponent& a, const TurnExponent& b) {
  return a + b;
}

/// x -> constant + <linear, x> in turns. Two values compare equal (==) iff
/// they agree as functions on R^n; see equal_on_torus for the T^n quotient.
class AffineTurnExponent {
 public:
  AffineTurnExponent() = default;
  explicit AffineTurnExponent(std::size_t n) : linear_(n) {}
  AffineTurnExponent(const Rational& constant, RationalVector linear)
      : constant_(constant), linear_(std::move(linear)) {}

  static AffineTurnExponent constant(std::size_t n, const Rational& c) {
    return AffineTurnExponent(c, RationalVector(n));
  }

  std::size_t dimension() const noexcept { return linear_.size(); }
  const TurnExponent& constant_part() const noexcept { return constant_; }
  const RationalVector& linear() const noexcept { return linear_; }

  bool is_zero() const { return constant_.is_identity() && linear_.is_zero(); }

  TurnExponent operator()(const RationalVector& x) const {
    if (x.size() != dimension())
      throw DimensionMismatch(dimension(), x.size(), "affine_eval");
    return TurnExponent(constant_.value() + dot(linear_, x));
  }

  /// The function x -> f(x + shift).
  AffineTurnExponent shifted(const RationalVector& shift) const {
    if (shift.size() != dimension())
      throw DimensionMismatch(dimension(), shift.size(), "shifted");
    return {constant_.value() + dot(linear_, shift), linear_};
  }

  AffineTurnExponent& operator+=(const AffineTurnExponent& o) {
    require_same(o, "AffineTurnExponent::+=");
    constant_ += o.constant_;
    linear_ += o.linear_;
    return *this;
  }
  AffineTurnExponent& operator-=(const AffineTurnExponent& o) {
    require_same(o, "AffineTurnExponent::-=");
    constant_ -= o.constant_;
    linear_ -= o.linear_;
    return *this;
  }
  friend AffineTurnExponent operator+(AffineTurnExponent a,
                                      const AffineTurnExponent& b) {
    return a += b;
  }
  friend AffineTurnExponent operator-(AffineTurnExponent a,
                                      const AffineTurnExponent& b) {
    return a -= b;
  }
  friend AffineTurnExponent operator-(const AffineTurnExponent& a) {
    return {-a.constant_.value(), -a.linear_};
  }
  /// Integer multiple (net particle number times a single-operator phase).
  friend AffineTurnExponent operator*(long k, const AffineTurnExponent& a) {
    Rational s(k);
    return {s * a.constant_.value(), s * a.linear_};
  }

  friend bool operator==(const AffineTurnExponent& a,
                         const AffineTurnExponent& b) {
    return a.constant_ == b.constant_ && a.linear_ == b.linear_;
  }

  friend std::ostream& operator<<(std::ostream& os,
                                  const AffineTurnExponent& f) {
    return os << "{const=" << f.constant_ << ", linear=" << f.linear_ << '}';
  }

 private:
  void require_same(const AffineTurnExponent& o, const char* where) const {
    if (o.dimension() != dimension())
      throw DimensionMismatch(dimension(), o.dimension(), where);
  }

  TurnExponent constant_;
  RationalVector linear_;
};

inline TurnExponent affine_eval(const AffineTurnExponent& f,
                                const RationalVector& x) {
  return f(x);
}

/// Equality after quotienting integer linear parts (phases on T^n).
inline bool affine_equal_on_torus(const AffineTurnExponent& f,
                                  const AffineTurnExponent& g) {
  if (f.dimension() != g.dimension())
    throw DimensionMismatch(f.dimension(), g.dimension(),
                            "affine_equal_on_torus");
  return f.constant_part() == g.constant_part() &&
         (f.linear() - g.linear()).is_integral();
}

}  // namespace magtrans
