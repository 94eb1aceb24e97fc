#pragma once

// Affine simplices and integer chains in Q^n, the boundary operator, and
// closed-form integrals of constant 3-forms and affine-coefficient 2-forms.

#include <algorithm>
#include <array>
#include <map>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace magtrans {

using Triple = std::array<int, 3>;  // 0-based, strictly increasing
using Pair = std::array<int, 2>;    // 0-based, strictly increasing

/// Sorts indices in place and returns the permutation sign, or 0 when an
/// index repeats.
template <std::size_t N>
int sort_with_sign(std::array<int, N>& idx) {
  int sign = 1;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j + 1 < N - i; ++j)
      if (idx[j] > idx[j + 1]) {
        std::swap(idx[j], idx[j + 1]);
        sign = -sign;
      }
  for (std::size_t i = 0; i + 1 < N; ++i)
    if (idx[i] == idx[i + 1]) return 0;
  return sign;
}

inline Rational det3(const RationalVector& u, const RationalVector& v,
                     const RationalVector& w, int i, int j, int k) {
  return u[i] * (v[j] * w[k] - v[k] * w[j]) -
         u[j] * (v[i] * w[k] - v[k] * w[i]) +
         u[k] * (v[i] * w[j] - v[j] * w[i]);
}

/// Constant 3-form sum_{i<j<k} a_ijk dx_i ^ dx_j ^ dx_k on R^n.
class AntisymTensor3 {
 public:
  AntisymTensor3() = default;
  explicit AntisymTensor3(int n) : n_(n) {}

  /// Levi-Civita tensor: coefficient 1 on (1,2,3).
  static AntisymTensor3 epsilon(int n = 3) {
    AntisymTensor3 t(n);
    t.set(0, 1, 2, 1);
    return t;
  }

  int dimension() const noexcept { return n_; }

  /// Sets a_{ijk} (0-based, any order; the antisymmetric partner entries
  /// follow).
  void set(int i, int j, int k, const Rational& value) {
    Triple t{i, j, k};
    check(t);
    const int s = sort_with_sign(t);
    if (s == 0) throw PreconditionError("AntisymTensor3: repeated index");
    if (value == 0)
      coeffs_.erase(t);
    else
      coeffs_[t] = s > 0 ? value : Rational(-value);
  }

  Rational coefficient(int i, int j, int k) const {
    Triple t{i, j, k};
    check(t);
    const int s = sort_with_sign(t);
    if (s == 0) return 0;
    auto it = coeffs_.find(t);
    if (it == coeffs_.end()) return 0;
    return s > 0 ? it->second : Rational(-it->second);
  }

  const std::map<Triple, Rational>& coefficients() const { return coeffs_; }

  bool is_integral() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const auto& kv) { return is_integer(kv.second); });
  }
  bool is_zero() const { return coeffs_.empty(); }

  /// omega(u, v, w) = sum_{i<j<k} a_ijk det(u, v, w; i, j, k).
  Rational operator()(const RationalVector& u, const RationalVector& v,
                      const RationalVector& w) const {
    require_dim(u);
    require_dim(v);
    require_dim(w);
    Rational s = 0;
    for (const auto& [t, a] : coeffs_) s += a * det3(u, v, w, t[0], t[1], t[2]);
    return s;
  }

  /// Unit tensors e_{ijk}, i<j<k, spanning Lambda^3 Z^n.
  static std::vector<AntisymTensor3> integer_basis(int n) {
    std::vector<AntisymTensor3> out;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        for (int k = j + 1; k < n; ++k) {
          AntisymTensor3 t(n);
          t.set(i, j, k, 1);
          out.push_back(std::move(t));
        }
    return out;
  }

  friend bool operator==(const AntisymTensor3& a, const AntisymTensor3& b) {
    return a.n_ == b.n_ && a.coeffs_ == b.coeffs_;
  }

 private:
  void check(const Triple& t) const {
    for (int x : t)
      if (x < 0 || x >= n_)
        throw PreconditionError("AntisymTensor3: index out of range");
  }
  void require_dim(const RationalVector& v) const {
    if (static_cast<int>(v.size()) != n_)
      throw DimensionMismatch(n_, v.size(), "AntisymTensor3");
  }

  int n_ = 0;
  std::map<Triple, Rational> coeffs_;
};

/// x -> constant + <linear, x>, a plain rational-valued affine function.
struct AffineFunction {
  Rational constant = 0;
  RationalVector linear;

  Rational operator()(const RationalVector& x) const {
    return constant + dot(linear, x);
  }
  bool is_zero() const { return constant == 0 && linear.is_zero(); }
  friend bool operator==(const AffineFunction&, const AffineFunction&) =
      default;
};

/// 2-form sum_{j<k} f_jk(x) dx_j ^ dx_k with affine coefficients f_jk.
class AffineForm2 {
 public:
  AffineForm2() = default;
  explicit AffineForm2(int n) : n_(n) {}

  int dimension() const noexcept { return n_; }

  /// Adds `f` to the coefficient of dx_j ^ dx_k (0-based, any order).
  void add(int j, int k, const AffineFunction& f) {
    if (j < 0 || k < 0 || j >= n_ || k >= n_)
      throw PreconditionError("AffineForm2: index out of range");
    if (static_cast<int>(f.linear.size()) != n_)
      throw DimensionMismatch(n_, f.linear.size(), "AffineForm2::add");
    if (j == k) return;
    Pair p{j, k};
    Rational sign = 1;
    if (j > k) {
      std::swap(p[0], p[1]);
      sign = -1;
    }
    auto [it, fresh] =
        coeffs_.try_emplace(p, AffineFunction{0, RationalVector(n_)});
    it->second.constant += sign * f.constant;
    it->second.linear += sign * f.linear;
    if (it->second.is_zero()) coeffs_.erase(it);
  }

  const std::map<Pair, AffineFunction>& coefficients() const {
    return coeffs_;
  }

  /// B_x(u, v).
  Rational operator()(const RationalVector& x, const RationalVector& u,
                      const RationalVector& v) const {
    Rational s = 0;
    for (const auto& [p, f] : coeffs_)
      s += f(x) * (u[p[0]] * v[p[1]] - u[p[1]] * v[p[0]]);
    return s;
  }

  /// Directional derivative of B along `d`: a constant-coefficient 2-form.
  AffineForm2 derivative(const RationalVector& d) const {
    AffineForm2 out(n_);
    for (const auto& [p, f] : coeffs_)
      out.add(p[0], p[1], AffineFunction{dot(f.linear, d), RationalVector(n_)});
    return out;
  }

  friend bool operator==(const AffineForm2&, const AffineForm2&) = default;

 private:
  int n_ = 0;
  std::map<Pair, AffineFunction> coeffs_;
};

/// Affine k-simplex; orientation is the vertex order.
class AffineSimplex {
 public:
  AffineSimplex() = default;
  explicit AffineSimplex(std::vector<RationalVector> vertices)
      : v_(std::move(vertices)) {
    if (v_.empty()) throw PreconditionError("AffineSimplex: no vertices");
    for (const auto& x : v_)
      if (x.size() != v_.front().size())
        throw DimensionMismatch(v_.front().size(), x.size(), "AffineSimplex");
  }

  int degree() const noexcept { return static_cast<int>(v_.size()) - 1; }
  std::size_t dimension() const { return v_.front().size(); }
  const std::vector<RationalVector>& vertices() const noexcept { return v_; }
  const RationalVector& operator[](std::size_t i) const { return v_[i]; }

  AffineSimplex translated(const RationalVector& by) const {
    std::vector<RationalVector> w = v_;
    for (auto& x : w) x += by;
    return AffineSimplex(std::move(w));
  }

  bool is_degenerate() const {
    for (std::size_t i = 0; i < v_.size(); ++i)
      for (std::size_t j = i + 1; j < v_.size(); ++j)
        if (v_[i] == v_[j]) return true;
    return false;
  }

  friend bool operator==(const AffineSimplex&, const AffineSimplex&) = default;
  friend bool operator<(const AffineSimplex& a, const AffineSimplex& b) {
    return a.v_ < b.v_;
  }

 private:
  std::vector<RationalVector> v_;
};

/// Formal integer combination of simplices of a common degree.
class Chain {
 public:
  struct Term {
    long weight;
    AffineSimplex simplex;
  };

  Chain() = default;
  explicit Chain(int degree) : degree_(degree) {}
  Chain(long weight, AffineSimplex s) : degree_(s.degree()) {
    add(weight, std::move(s));
  }

  int degree() const noexcept { return degree_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool empty_as_written() const { return terms_.empty(); }

  void add(long weight, AffineSimplex s) {
    if (degree_ < 0) degree_ = s.degree();
    if (s.degree() != degree_)
      throw PreconditionError("Chain: mixed simplex degrees");
    if (weight != 0) terms_.push_back({weight, std::move(s)});
  }
  Chain& operator+=(const Chain& o) {
    for (const auto& t : o.terms_) add(t.weight, t.simplex);
    if (degree_ < 0) degree_ = o.degree_;
    return *this;
  }
  Chain& operator-=(const Chain& o) {
    for (const auto& t : o.terms_) add(-t.weight, t.simplex);
    if (degree_ < 0) degree_ = o.degree_;
    return *this;
  }
  friend Chain operator+(Chain a, const Chain& b) { return a += b; }
  friend Chain operator-(Chain a, const Chain& b) { return a -= b; }
  friend Chain operator*(long k, const Chain& c) {
    Chain out(c.degree_);
    for (const auto& t : c.terms_) out.add(k * t.weight, t.simplex);
    return out;
  }

  Chain translated(const RationalVector& by) const {
    Chain out(degree_);
    for (const auto& t : terms_) out.add(t.weight, t.simplex.translated(by));
    return out;
  }

  /// Vertices sorted (orientation carried into the weight), degenerate
  /// simplices dropped, identical simplices merged, zero weights removed.
  Chain canonical() const {
    std::map<AffineSimplex, long> merged;
    for (const auto& t : terms_) {
      std::vector<std::size_t> order(t.simplex.vertices().size());
      for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
      const auto& vs = t.simplex.vertices();
      long sign = 1;
      bool degenerate = false;
      for (std::size_t i = 0; i < order.size(); ++i)
        for (std::size_t j = 0; j + 1 < order.size() - i; ++j) {
          const auto& a = vs[order[j]];
          const auto& b = vs[order[j + 1]];
          if (b < a) {
            std::swap(order[j], order[j + 1]);
            sign = -sign;
          }
        }
      std::vector<RationalVector> sorted;
      for (std::size_t i : order) {
        if (!sorted.empty() && sorted.back() == vs[i]) degenerate = true;
        sorted.push_back(vs[i]);
      }
      if (degenerate) continue;
      merged[AffineSimplex(std::move(sorted))] += sign * t.weight;
    }
    Chain out(degree_);
    for (auto& [s, w] : merged)
      if (w != 0) out.add(w, s);
    return out;
  }

  bool is_zero() const { return canonical().terms_.empty(); }

  friend bool operator==(const Chain& a, const Chain& b) {
    return (a - b).is_zero();
  }

 private:
  int degree_ = -1;
  std::vector<Term> terms_;
};

/// Alternating vertex-deletion boundary, +1 on deleting vertex 0.
inline Chain boundary(const Chain& c) {
  if (c.degree() < 1) throw UnsupportedDegree("boundary: degree must be >= 1");
  Chain out(c.degree() - 1);
  for (const auto& t : c.terms()) {
    const auto& vs = t.simplex.vertices();
    for (std::size_t i = 0; i < vs.size(); ++i) {
      std::vector<RationalVector> face;
      for (std::size_t j = 0; j < vs.size(); ++j)
        if (j != i) face.push_back(vs[j]);
      out.add(i % 2 == 0 ? t.weight : -t.weight, AffineSimplex(std::move(face)));
    }
  }
  return out;
}

inline Chain boundary(const AffineSimplex& s) { return boundary(Chain(1, s)); }

/// (1/6) omega(v1 - v0, v2 - v0, v3 - v0).
inline Rational integrate3(const AntisymTensor3& omega, const AffineSimplex& s) {
  if (s.degree() != 3) throw UnsupportedDegree("integrate3: needs a 3-simplex");
  const auto& v = s.vertices();
  return omega(v[1] - v[0], v[2] - v[0], v[3] - v[0]) / 6;
}

inline Rational integrate3(const AntisymTensor3& omega, const Chain& c) {
  Rational s = 0;
  for (const auto& t : c.terms()) s += t.weight * integrate3(omega, t.simplex);
  return s;
}

/// Affine coefficients evaluated at the barycenter against the oriented area
/// bivector (e1 ^ e2) / 2; exact for affine coefficients.
inline Rational integrate2(const AffineForm2& b, const AffineSimplex& s) {
  if (s.degree() != 2) throw UnsupportedDegree("integrate2: needs a 2-simplex");
  const auto& v = s.vertices();
  RationalVector bary = v[0] + v[1] + v[2];
  bary *= Rational(1, 3);
  return b(bary, v[1] - v[0], v[2] - v[0]) / 2;
}

inline Rational integrate2(const AffineForm2& b, const Chain& c) {
  Rational s = 0;
  for (const auto& t : c.terms()) s += t.weight * integrate2(b, t.simplex);
  return s;
}

/// dB = sum_{i, j<k} (d f_jk / d x_i) dx_i ^ dx_j ^ dx_k.
inline AntisymTensor3 exterior_d(const AffineForm2& b) {
  AntisymTensor3 out(b.dimension());
  std::map<Triple, Rational> acc;
  for (const auto& [p, f] : b.coefficients())
    for (int i = 0; i < b.dimension(); ++i) {
      if (f.linear[i] == 0) continue;
      Triple t{i, p[0], p[1]};
      const int s = sort_with_sign(t);
      if (s == 0) continue;
      acc[t] += s * f.linear[i];
    }
  for (const auto& [t, a] : acc) out.set(t[0], t[1], t[2], a);
  return out;
}

/// B = sum_{i<j<k} a_ijk x_i dx_j ^ dx_k, so that dB = omega.
inline AffineForm2 potential(const AntisymTensor3& omega) {
  const int n = omega.dimension();
  AffineForm2 b(n);
  for (const auto& [t, a] : omega.coefficients()) {
    AffineFunction f{0, RationalVector(n)};
    f.linear[t[0]] = a;
    b.add(t[1], t[2], f);
  }
  return b;
}

namespace detail {
inline void require_dims(std::initializer_list<const RationalVector*> vs,
                         const char* where) {
  const std::size_t n = (*vs.begin())->size();
  for (const auto* v : vs)
    if (v->size() != n) throw DimensionMismatch(n, v->size(), where);
}
inline AffineSimplex edge(const RationalVector& a, const RationalVector& b) {
  return AffineSimplex({a, b});
}
}  // namespace detail

/// (0 -> g1) + (g1 -> g1+g2) - (0 -> g1+g2), straight edges.
inline Chain ell_chain(const RationalVector& g1, const RationalVector& g2) {
  detail::require_dims({&g1, &g2}, "ell_chain");
  const RationalVector zero(g1.size());
  Chain c(1);
  c.add(1, detail::edge(zero, g1));
  c.add(1, detail::edge(g1, g1 + g2));
  c.add(-1, detail::edge(zero, g1 + g2));
  return c;
}

/// Triangle (0, g1, g1+g2).
inline AffineSimplex s_chain(const RationalVector& g1, const RationalVector& g2) {
  detail::require_dims({&g1, &g2}, "s_chain");
  return AffineSimplex({RationalVector(g1.size()), g1, g1 + g2});
}

/// Tetrahedron (0, g1, g1+g2, g1+g2+g3).
inline AffineSimplex delta3_simplex(const RationalVector& g1,
                                    const RationalVector& g2,
                                    const RationalVector& g3) {
  detail::require_dims({&g1, &g2, &g3}, "delta3_simplex");
  return AffineSimplex(
      {RationalVector(g1.size()), g1, g1 + g2, g1 + g2 + g3});
}

/// Delta(g1,g2,g3) - Delta(g1g2,g3,g4) + Delta(g1,g2g3,g4)
///   - Delta(g1,g2,g3g4) + g1.Delta(g2,g3,g4):
/// the boundary of the 4-simplex (0, g1, g12, g123, g1234).
inline Chain v_chain(const RationalVector& g1, const RationalVector& g2,
                     const RationalVector& g3, const RationalVector& g4) {
  detail::require_dims({&g1, &g2, &g3, &g4}, "v_chain");
  Chain c(3);
  c.add(1, delta3_simplex(g1, g2, g3));
  c.add(-1, delta3_simplex(g1 + g2, g3, g4));
  c.add(1, delta3_simplex(g1, g2 + g3, g4));
  c.add(-1, delta3_simplex(g1, g2, g3 + g4));
  c.add(1, delta3_simplex(g2, g3, g4).translated(g1));
  return c;
}

}  // namespace magtrans
