#pragma once

#include <cstdint>
#include <map>
#include <numeric>
#include <ostream>
#include <span>
#include <vector>

#include "rational.hpp"

namespace magtrans {

using Monomial = std::vector<std::uint8_t>;  // exponent per variable

/// Sparse multivariate polynomial with rational coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}

  static Polynomial constant(std::size_t nvars, const Rational& c) {
    Polynomial p(nvars);
    if (c != 0) p.terms_[Monomial(nvars, 0)] = c;
    return p;
  }
  static Polynomial variable(std::size_t nvars, std::size_t i) {
    Polynomial p(nvars);
    Monomial m(nvars, 0);
    m.at(i) = 1;
    p.terms_[m] = 1;
    return p;
  }
  /// sum_i coeffs[i] * x_{first + i}
  static Polynomial linear(std::size_t nvars, std::size_t first,
                           std::span<const Rational> coeffs) {
    Polynomial p(nvars);
    for (std::size_t i = 0; i < coeffs.size(); ++i)
      if (coeffs[i] != 0) {
        Monomial m(nvars, 0);
        m.at(first + i) = 1;
        p.terms_[m] = coeffs[i];
      }
    return p;
  }

  std::size_t num_vars() const noexcept { return nvars_; }
  const std::map<Monomial, Rational>& terms() const noexcept { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Monomial& m, const Rational& c) {
    if (m.size() != nvars_)
      throw DimensionMismatch(nvars_, m.size(), "Polynomial::add_term");
    if (c == 0) return;
    auto [it, fresh] = terms_.try_emplace(m, 0);
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }

  Rational coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  int total_degree() const {
    int d = 0;
    for (const auto& [m, c] : terms_)
      d = std::max(d, std::accumulate(m.begin(), m.end(), 0));
    return d;
  }

  /// Largest total degree in the variables [first, first + count).
  int degree_in(std::size_t first, std::size_t count) const {
    int d = 0;
    for (const auto& [m, c] : terms_) {
      int s = 0;
      for (std::size_t i = first; i < first + count; ++i) s += m[i];
      d = std::max(d, s);
    }
    return d;
  }

  Polynomial& operator+=(const Polynomial& o) {
    require_same(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    require_same(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) {
    return a += b;
  }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) {
    return a -= b;
  }
  friend Polynomial operator-(const Polynomial& a) {
    Polynomial out(a.nvars_);
    for (const auto& [m, c] : a.terms_) out.terms_[m] = -c;
    return out;
  }
  friend Polynomial operator*(const Rational& s, const Polynomial& a) {
    Polynomial out(a.nvars_);
    if (s == 0) return out;
    for (const auto& [m, c] : a.terms_) out.terms_[m] = s * c;
    return out;
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.require_same(b);
    Polynomial out(a.nvars_);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) {
        Monomial m(a.nvars_);
        for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
        out.add_term(m, ca * cb);
      }
    return out;
  }

  Rational operator()(std::span<const Rational> x) const {
    if (x.size() != nvars_)
      throw DimensionMismatch(nvars_, x.size(), "Polynomial::evaluate");
    Rational s = 0;
    for (const auto& [m, c] : terms_) {
      Rational t = c;
      for (std::size_t i = 0; i < nvars_; ++i)
        for (int e = 0; e < m[i]; ++e) t *= x[i];
      s += t;
    }
    return s;
  }

  /// Composition: variable i is replaced by images[i] (all images share one
  /// variable set).
  Polynomial substitute(std::span<const Polynomial> images) const {
    if (images.size() != nvars_)
      throw DimensionMismatch(nvars_, images.size(), "Polynomial::substitute");
    const std::size_t target = images.empty() ? 0 : images[0].num_vars();
    Polynomial out(target);
    for (const auto& [m, c] : terms_) {
      Polynomial t = constant(target, c);
      for (std::size_t i = 0; i < nvars_; ++i)
        for (int e = 0; e < m[i]; ++e) t = t * images[i];
      out += t;
    }
    return out;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
    if (p.terms_.empty()) return os << "0";
    bool first = true;
    for (const auto& [m, c] : p.terms_) {
      if (!first) os << " + ";
      first = false;
      os << to_string(c);
      for (std::size_t i = 0; i < m.size(); ++i)
        if (m[i]) {
          os << "*v" << i;
          if (m[i] > 1) os << '^' << int(m[i]);
        }
    }
    return os;
  }

 private:
  void require_same(const Polynomial& o) const {
    if (o.nvars_ != nvars_)
      throw DimensionMismatch(nvars_, o.nvars_, "Polynomial");
  }

  std::size_t nvars_ = 0;
  std::map<Monomial, Rational> terms_;
};

}  // namespace magtrans
