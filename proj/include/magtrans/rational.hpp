#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"

namespace magtrans {

using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p" or "p/q" (optional leading '-', q > 0). The result is reduced.
inline Rational parse_rational(std::string_view text) {
  auto bad = [&] {
    return ParseError("malformed rational \"" + std::string(text) + "\"");
  };
  if (text.empty()) throw bad();
  auto is_digits = [](std::string_view s, bool allow_sign) {
    if (allow_sign && !s.empty() && (s.front() == '-' || s.front() == '+'))
      s.remove_prefix(1);
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
      return c >= '0' && c <= '9';
    });
  };
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den =
      slash == std::string_view::npos ? std::string_view("1")
                                      : text.substr(slash + 1);
  if (!is_digits(num, true) || !is_digits(den, false)) throw bad();
  std::string num_s(num);
  if (num_s.front() == '+') num_s.erase(0, 1);
  Integer n(num_s, 10);
  Integer d(std::string(den), 10);
  if (d == 0) throw bad();
  Rational r(n, d);
  r.canonicalize();
  return r;
}

/// Canonical "p/q" in lowest terms, or "p" when q = 1.
inline std::string to_string(const Rational& r) { return r.get_str(10); }

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

inline Integer floor_of(const Rational& r) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

/// r mod 1, in [0, 1).
inline Rational frac(const Rational& r) {
  Rational out = r - Rational(floor_of(r));
  return out;
}

/// Element of Q^n. Used for group elements of R^n / Z^n and base points.
class RationalVector {
 public:
  RationalVector() = default;
  explicit RationalVector(std::size_t n) : c_(n) {}
  RationalVector(std::initializer_list<Rational> values) : c_(values) {}
  explicit RationalVector(std::vector<Rational> values)
      : c_(std::move(values)) {}

  static RationalVector unit(std::size_t n, std::size_t i) {
    RationalVector v(n);
    v[i] = 1;
    return v;
  }

  std::size_t size() const noexcept { return c_.size(); }
  Rational& operator[](std::size_t i) { return c_[i]; }
  const Rational& operator[](std::size_t i) const { return c_[i]; }
  auto begin() const { return c_.begin(); }
  auto end() const { return c_.end(); }
  const std::vector<Rational>& components() const noexcept { return c_; }

  bool is_zero() const {
    return std::all_of(c_.begin(), c_.end(),
                       [](const Rational& x) { return x == 0; });
  }
  bool is_integral() const {
    return std::all_of(c_.begin(), c_.end(),
                       [](const Rational& x) { return is_integer(x); });
  }

  RationalVector& operator+=(const RationalVector& o) {
    require_same(o, "RationalVector::+=");
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  RationalVector& operator-=(const RationalVector& o) {
    require_same(o, "RationalVector::-=");
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  RationalVector& operator*=(const Rational& s) {
    for (auto& x : c_) x *= s;
    return *this;
  }
  friend RationalVector operator+(RationalVector a, const RationalVector& b) {
    return a += b;
  }
  friend RationalVector operator-(RationalVector a, const RationalVector& b) {
    return a -= b;
  }
  friend RationalVector operator-(RationalVector a) {
    for (auto& x : a.c_) x = -x;
    return a;
  }
  friend RationalVector operator*(const Rational& s, RationalVector a) {
    return a *= s;
  }

  friend bool operator==(const RationalVector& a, const RationalVector& b) {
    return a.c_ == b.c_;
  }
  friend bool operator<(const RationalVector& a, const RationalVector& b) {
    return std::lexicographical_compare(a.c_.begin(), a.c_.end(),
                                        b.c_.begin(), b.c_.end());
  }

  friend std::ostream& operator<<(std::ostream& os, const RationalVector& v) {
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) os << ", ";
      os << to_string(v[i]);
    }
    return os << ')';
  }

 private:
  void require_same(const RationalVector& o, const char* where) const {
    if (o.size() != size()) throw DimensionMismatch(size(), o.size(), where);
  }

  std::vector<Rational> c_;
};

inline Rational dot(const RationalVector& a, const RationalVector& b) {
  if (a.size() != b.size()) throw DimensionMismatch(a.size(), b.size(), "dot");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace magtrans
