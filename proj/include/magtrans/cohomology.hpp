#pragma once

// Group cochains on R^n / Z^n with polynomial phase exponents, their
// coboundaries, and a cobounding solver over the exponent coefficients.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "linalg.hpp"
#include "phase.hpp"
#include "polynomial.hpp"
#include "simplicial.hpp"

namespace magtrans {

enum class Coefficients { constant, base_point };
enum class GroupModuleAction { trivial, translation };

/// Degree-k cochain whose value is e^{2 pi i P}, P a polynomial of total
/// degree <= 3 in the group arguments (and in the base point u when the
/// coefficients are base-point dependent).
///
/// Variable layout: [u_1..u_n]? [g1_1..g1_n] ... [gk_1..gk_n].
class PolyExponentCochain {
 public:
  static constexpr int kMaxDegree = 3;

  PolyExponentCochain() = default;
  PolyExponentCochain(int n, int degree, Coefficients kind, Polynomial exponent)
      : n_(n), degree_(degree), kind_(kind), exponent_(std::move(exponent)) {
    if (exponent_.num_vars() != num_vars(n, degree, kind))
      throw DimensionMismatch(num_vars(n, degree, kind), exponent_.num_vars(),
                              "PolyExponentCochain");
    if (exponent_.total_degree() > kMaxDegree)
      throw PreconditionError("PolyExponentCochain: exponent degree > 3");
  }

  static std::size_t num_vars(int n, int degree, Coefficients kind) {
    return static_cast<std::size_t>(n) *
           (degree + (kind == Coefficients::base_point ? 1 : 0));
  }

  static PolyExponentCochain zero(int n, int degree, Coefficients kind) {
    return {n, degree, kind, Polynomial(num_vars(n, degree, kind))};
  }

  int dimension() const noexcept { return n_; }
  int degree() const noexcept { return degree_; }
  Coefficients kind() const noexcept { return kind_; }
  bool base_point_dependent() const {
    return kind_ == Coefficients::base_point;
  }
  const Polynomial& exponent() const noexcept { return exponent_; }
  std::size_t var_count() const { return exponent_.num_vars(); }

  /// Index of component i of the base point.
  std::size_t base_var(int i) const { return static_cast<std::size_t>(i); }
  /// Index of component i of argument a (0-based argument number).
  std::size_t arg_var(int a, int i) const {
    return static_cast<std::size_t>(n_) *
               (a + (base_point_dependent() ? 1 : 0)) +
           i;
  }

  /// Value at rational arguments for constant coefficients.
  TurnExponent value(std::span<const RationalVector> args) const {
    if (base_point_dependent())
      throw PreconditionError("value(): base-point cochain needs a base point");
    return TurnExponent(exponent_(flatten(nullptr, args)));
  }

  /// Value at fixed base point and arguments.
  TurnExponent value_at(const RationalVector& u,
                        std::span<const RationalVector> args) const {
    if (!base_point_dependent()) return value(args);
    return TurnExponent(exponent_(flatten(&u, args)));
  }

  /// The phase as an affine function of the base point (exponent degree in u
  /// must be <= 1).
  AffineTurnExponent evaluate(std::span<const RationalVector> args) const {
    if (!base_point_dependent())
      return AffineTurnExponent::constant(n_, value(args).value());
    if (exponent_.degree_in(0, n_) > 1)
      throw PreconditionError(
          "evaluate(): exponent is not affine in the base point");
    RationalVector zero(n_);
    const Rational c = exponent_(flatten(&zero, args));
    RationalVector lin(n_);
    for (int i = 0; i < n_; ++i) {
      RationalVector e = RationalVector::unit(n_, i);
      lin[i] = exponent_(flatten(&e, args)) - c;
    }
    return {c, lin};
  }

  friend bool operator==(const PolyExponentCochain& a,
                         const PolyExponentCochain& b) {
    return a.n_ == b.n_ && a.degree_ == b.degree_ && a.kind_ == b.kind_ &&
           a.exponent_ == b.exponent_;
  }

 private:
  std::vector<Rational> flatten(const RationalVector* u,
                                std::span<const RationalVector> args) const {
    if (static_cast<int>(args.size()) != degree_)
      throw DimensionMismatch(degree_, args.size(), "cochain arguments");
    std::vector<Rational> x;
    x.reserve(var_count());
    if (u) {
      if (static_cast<int>(u->size()) != n_)
        throw DimensionMismatch(n_, u->size(), "cochain base point");
      x.insert(x.end(), u->begin(), u->end());
    }
    for (const auto& g : args) {
      if (static_cast<int>(g.size()) != n_)
        throw DimensionMismatch(n_, g.size(), "cochain argument");
      x.insert(x.end(), g.begin(), g.end());
    }
    return x;
  }

  int n_ = 0;
  int degree_ = 0;
  Coefficients kind_ = Coefficients::constant;
  Polynomial exponent_;
};

/// Degree-k -> k+1 coboundary:
///   (dc)(u; g1..g_{k+1}) = c(g1.u; g2..g_{k+1})
///       + sum_{i=1..k} (-1)^i c(u; .., g_i + g_{i+1}, ..)
///       + (-1)^{k+1} c(u; g1..g_k)
/// where g1.u = u + g1 for the translation action and u otherwise. For k = 2
/// with translation this is b(u+X;Y,Z) - b(u;X+Y,Z) + b(u;X,Y+Z) - b(u;X,Y).
inline PolyExponentCochain coboundary(const PolyExponentCochain& c,
                                      GroupModuleAction act) {
  const int k = c.degree();
  if (k < 1 || k > 3)
    throw UnsupportedDegree("coboundary: degree must be 1, 2 or 3");
  if (act == GroupModuleAction::translation && !c.base_point_dependent())
    throw IncompatibleAction(
        "coboundary: translation action needs base-point coefficients");
  const int n = c.dimension();
  const bool bp = c.base_point_dependent();
  const std::size_t nv = PolyExponentCochain::num_vars(n, k + 1, c.kind());
  auto var = [&](std::size_t i) { return Polynomial::variable(nv, i); };
  const std::size_t off = bp ? n : 0;
  auto arg = [&](int a, int i) { return var(off + n * a + i); };

  // images[v] for the source variables of c, one face at a time.
  auto face = [&](int which) {
    std::vector<Polynomial> img;
    img.reserve(c.var_count());
    if (bp)
      for (int i = 0; i < n; ++i) {
        Polynomial u = var(i);
        if (which == 0 && act == GroupModuleAction::translation)
          u += arg(0, i);
        img.push_back(std::move(u));
      }
    for (int a = 0; a < k; ++a)
      for (int i = 0; i < n; ++i) {
        if (which == 0) {
          img.push_back(arg(a + 1, i));
        } else if (which == k + 1) {
          img.push_back(arg(a, i));
        } else if (a < which - 1) {
          img.push_back(arg(a, i));
        } else if (a == which - 1) {
          img.push_back(arg(a, i) + arg(a + 1, i));  // g_a g_{a+1}
        } else {
          img.push_back(arg(a + 1, i));
        }
      }
    return img;
  };

  Polynomial out(nv);
  for (int which = 0; which <= k + 1; ++which) {
    Polynomial term = c.exponent().substitute(face(which));
    if (which % 2 == 0)
      out += term;
    else
      out -= term;
  }
  return {n, k + 1, c.kind(), std::move(out)};
}

/// Left-hand side of the pentagon identity for a constant-coefficient
/// 3-cochain: (dC)(g1, g2, g3, g4) evaluated pointwise.
inline TurnExponent pentagon_check(const PolyExponentCochain& c3,
                                   const RationalVector& g1,
                                   const RationalVector& g2,
                                   const RationalVector& g3,
                                   const RationalVector& g4) {
  if (c3.degree() != 3 || c3.base_point_dependent())
    throw PreconditionError("pentagon_check: needs a constant 3-cochain");
  auto v = [&](const RationalVector& a, const RationalVector& b,
               const RationalVector& d) {
    const RationalVector args[3] = {a, b, d};
    return c3.value(args);
  };
  return v(g2, g3, g4) - v(g1 + g2, g3, g4) + v(g1, g2 + g3, g4) -
         v(g1, g2, g3 + g4) + v(g1, g2, g3);
}

/// scale * omega_a(X, Y, Z) as a polynomial, where X, Y, Z occupy the variable
/// blocks starting at `first`, `second`, `third`.
inline Polynomial trilinear_exponent(const AntisymTensor3& a, std::size_t nvars,
                                     std::size_t first, std::size_t second,
                                     std::size_t third, const Rational& scale) {
  Polynomial p(nvars);
  for (const auto& [t, coeff] : a.coefficients()) {
    std::array<int, 3> perm{0, 1, 2};
    do {
      Triple idx{t[perm[0]], t[perm[1]], t[perm[2]]};
      Triple sorted = idx;
      const int s = sort_with_sign(sorted);
      Monomial m(nvars, 0);
      m[first + idx[0]] += 1;
      m[second + idx[1]] += 1;
      m[third + idx[2]] += 1;
      p.add_term(m, Rational(s) * coeff * scale);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return p;
}

/// A cochain family linear in `params` unknown coefficients. The polynomial
/// lives on [params][cochain variables].
struct CochainAnsatz {
  int n = 0;
  int degree = 0;
  Coefficients kind = Coefficients::constant;
  std::size_t params = 0;
  Polynomial family;
  std::vector<std::string> labels;  // one per parameter, for reports
};

enum class SolveMode {
  exact,          // polynomial identity over Q
  lattice_strict, // Z^n arguments: base-point dependence exact, rest mod 1
  lattice_torus,  // Z^n arguments: additionally integer linear parts in u free
};

struct CoboundSolution {
  std::vector<Rational> coefficients;
  PolyExponentCochain cochain;
};

namespace detail {

// Parameter-free cochain obtained by setting parameter `which` to 1 and the
// others to 0 (which == -1: all zero, the fixed part).
inline PolyExponentCochain ansatz_member(const CochainAnsatz& a, int which) {
  const std::size_t nv = PolyExponentCochain::num_vars(a.n, a.degree, a.kind);
  std::vector<Polynomial> img;
  for (std::size_t i = 0; i < a.params; ++i)
    img.push_back(Polynomial::constant(
        nv, static_cast<int>(i) == which ? Rational(1) : Rational(0)));
  for (std::size_t i = 0; i < nv; ++i) img.push_back(Polynomial::variable(nv, i));
  Polynomial p = a.family.substitute(img);
  if (which >= 0) p -= ansatz_member(a, -1).exponent();
  return {a.n, a.degree, a.kind, std::move(p)};
}

// x^e = sum_j S(e, j) j! C(x, j) for e <= 3.
inline const std::vector<std::vector<Rational>>& falling_basis() {
  static const std::vector<std::vector<Rational>> t = {
      {1}, {0, 1}, {0, 1, 2}, {0, 1, 6, 6}};
  return t;
}

// Coordinates of a polynomial in the binomial basis prod_v C(x_v, e_v).
// Integer coordinates <=> integer-valued on Z^vars.
inline std::map<Monomial, Rational> binomial_coordinates(const Polynomial& p) {
  std::map<Monomial, Rational> out;
  for (const auto& [m, c] : p.terms()) {
    std::vector<std::pair<Monomial, Rational>> acc = {
        {Monomial(m.size(), 0), c}};
    for (std::size_t v = 0; v < m.size(); ++v) {
      if (m[v] == 0) continue;
      if (m[v] > 3) throw PreconditionError("binomial basis: degree > 3");
      const auto& row = falling_basis()[m[v]];
      std::vector<std::pair<Monomial, Rational>> next;
      for (const auto& [mm, cc] : acc)
        for (std::size_t j = 0; j < row.size(); ++j) {
          if (row[j] == 0) continue;
          Monomial x = mm;
          x[v] = static_cast<std::uint8_t>(j);
          next.emplace_back(std::move(x), cc * row[j]);
        }
      acc = std::move(next);
    }
    for (auto& [mm, cc] : acc) out[mm] += cc;
  }
  return out;
}

// Splits p into groups keyed by the base-point part of each monomial.
inline std::map<Monomial, Polynomial> split_by_base_point(const Polynomial& p,
                                                          int n) {
  std::map<Monomial, Polynomial> out;
  for (const auto& [m, c] : p.terms()) {
    Monomial key(m.begin(), m.begin() + n);
    Monomial rest(m.size(), 0);
    std::copy(m.begin() + n, m.end(), rest.begin() + n);
    auto [it, fresh] = out.try_emplace(key, Polynomial(m.size()));
    it->second.add_term(rest, c);
  }
  return out;
}

}  // namespace detail

/// Finds coefficients y with d(ansatz(y)) = target, or nullopt when none
/// exists within the family. In the lattice modes the unknowns are integral
/// and equality is as phases on integer group arguments.
inline std::optional<CoboundSolution> cobound_solve(
    const PolyExponentCochain& target, const CochainAnsatz& ansatz,
    GroupModuleAction act, SolveMode mode = SolveMode::exact) {
  if (ansatz.degree + 1 != target.degree() || ansatz.n != target.dimension() ||
      ansatz.kind != target.kind())
    throw PreconditionError("cobound_solve: ansatz does not match target");
  if (ansatz.family.num_vars() !=
      ansatz.params +
          PolyExponentCochain::num_vars(ansatz.n, ansatz.degree, ansatz.kind))
    throw DimensionMismatch(ansatz.params, ansatz.family.num_vars(),
                            "cobound_solve ansatz");
  if (ansatz.family.degree_in(0, ansatz.params) > 1)
    throw AnsatzNotLinear("cobound_solve: ansatz is not linear in unknowns");

  const int n = target.dimension();
  const std::size_t m = ansatz.params;
  const auto fixed = coboundary(detail::ansatz_member(ansatz, -1), act);
  std::vector<Polynomial> columns;
  for (std::size_t i = 0; i < m; ++i)
    columns.push_back(
        coboundary(detail::ansatz_member(ansatz, static_cast<int>(i)), act)
            .exponent());
  const Polynomial rhs = target.exponent() - fixed.exponent();

  // Row keys: (is_slack, monomial). Exact rows are coefficients of monomials;
  // slack rows are binomial coordinates required to be integers.
  std::map<Monomial, std::vector<Rational>> exact_rows, slack_rows;
  std::map<Monomial, Rational> exact_rhs, slack_rhs;
  const bool bp = target.base_point_dependent();

  auto classify = [&](const Polynomial& p, std::size_t col) {
    auto put = [&](std::map<Monomial, std::vector<Rational>>& rows,
                   std::map<Monomial, Rational>& rv, const Monomial& key,
                   const Rational& c) {
      if (col == m) {
        rv[key] += c;
        rows.try_emplace(key, std::vector<Rational>(m, Rational(0)));
      } else {
        auto [it, fresh] =
            rows.try_emplace(key, std::vector<Rational>(m, Rational(0)));
        it->second[col] += c;
      }
    };
    if (mode == SolveMode::exact) {
      for (const auto& [mono, c] : p.terms()) put(exact_rows, exact_rhs, mono, c);
      return;
    }
    const int nb = bp ? n : 0;
    for (const auto& [key, part] : detail::split_by_base_point(p, nb)) {
      int udeg = 0;
      for (auto e : key) udeg += e;
      const bool relaxed =
          udeg == 0 || (udeg == 1 && mode == SolveMode::lattice_torus);
      if (!relaxed) {
        for (const auto& [mono, c] : part.terms()) {
          Monomial full = mono;
          std::copy(key.begin(), key.end(), full.begin());
          put(exact_rows, exact_rhs, full, c);
        }
      } else {
        for (const auto& [bm, c] : detail::binomial_coordinates(part)) {
          Monomial full = bm;
          std::copy(key.begin(), key.end(), full.begin());
          put(slack_rows, slack_rhs, full, c);
        }
      }
    }
  };
  for (std::size_t i = 0; i < m; ++i) classify(columns[i], i);
  classify(rhs, m);

  std::optional<std::vector<Rational>> y;
  if (mode == SolveMode::exact) {
    linalg::Matrix a;
    std::vector<Rational> b;
    for (const auto& [key, row] : exact_rows) {
      a.push_back(row);
      b.push_back(exact_rhs[key]);
    }
    y = linalg::solve_rational(std::move(a), std::move(b), m);
  } else {
    const std::size_t slack = slack_rows.size();
    linalg::Matrix a;
    std::vector<Rational> b;
    for (const auto& [key, row] : exact_rows) {
      auto r = row;
      r.resize(m + slack, Rational(0));
      a.push_back(std::move(r));
      b.push_back(exact_rhs[key]);
    }
    std::size_t s = 0;
    for (const auto& [key, row] : slack_rows) {
      auto r = row;
      r.resize(m + slack, Rational(0));
      r[m + s] = -1;
      a.push_back(std::move(r));
      b.push_back(slack_rhs[key]);
      ++s;
    }
    auto z = linalg::solve_integer(a, b, m + slack);
    if (z) {
      y.emplace();
      for (std::size_t i = 0; i < m; ++i) y->push_back(Rational((*z)[i]));
    }
  }
  if (!y) return std::nullopt;

  Polynomial sol = detail::ansatz_member(ansatz, -1).exponent();
  for (std::size_t i = 0; i < m; ++i)
    if ((*y)[i] != 0)
      sol += (*y)[i] *
             detail::ansatz_member(ansatz, static_cast<int>(i)).exponent();
  return CoboundSolution{
      std::move(*y),
      PolyExponentCochain(ansatz.n, ansatz.degree, ansatz.kind, std::move(sol))};
}

// ---------------------------------------------------------------------------
// Cochains and families used across the artifact.

/// C3(X, Y, Z) = (1/6) omega_a(X, Y, Z), constant coefficients.
inline PolyExponentCochain c3_cochain(const AntisymTensor3& a) {
  const int n = a.dimension();
  const std::size_t nv = PolyExponentCochain::num_vars(n, 3, Coefficients::constant);
  return {n, 3, Coefficients::constant,
          trilinear_exponent(a, nv, 0, n, 2 * n, Rational(1, 6))};
}

/// b(u; X, Y) = C3-exponent(u, X, Y), translation-action groupoid 2-cochain.
inline PolyExponentCochain groupoid_b(const AntisymTensor3& a) {
  const int n = a.dimension();
  const std::size_t nv =
      PolyExponentCochain::num_vars(n, 2, Coefficients::base_point);
  return {n, 2, Coefficients::base_point,
          trilinear_exponent(a, nv, 0, n, 2 * n, Rational(1, 6))};
}

/// C3 viewed as a base-point cochain that ignores the base point.
inline PolyExponentCochain c3_on_groupoid(const AntisymTensor3& a) {
  const int n = a.dimension();
  const std::size_t nv =
      PolyExponentCochain::num_vars(n, 3, Coefficients::base_point);
  return {n, 3, Coefficients::base_point,
          trilinear_exponent(a, nv, n, 2 * n, 3 * n, Rational(1, 6))};
}

/// b(u; X, Y) = sum_{ijk} beta_ijk u_i X_j Y_k with n^3 unknowns.
inline CochainAnsatz trilinear_ansatz(int n) {
  CochainAnsatz a;
  a.n = n;
  a.degree = 2;
  a.kind = Coefficients::base_point;
  a.params = static_cast<std::size_t>(n) * n * n;
  const std::size_t nv = a.params + 3 * static_cast<std::size_t>(n);
  a.family = Polynomial(nv);
  std::size_t idx = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k, ++idx) {
        Monomial mo(nv, 0);
        mo[idx] = 1;
        mo[a.params + i] += 1;
        mo[a.params + n + j] += 1;
        mo[a.params + 2 * n + k] += 1;
        a.family.add_term(mo, 1);
        a.labels.push_back("beta_" + std::to_string(i + 1) +
                           std::to_string(j + 1) + std::to_string(k + 1));
      }
  return a;
}

/// R_z^beta(X, Y) = beta * det(z, X, Y) on R^3, one unknown.
inline CochainAnsatz r_family() {
  CochainAnsatz a;
  a.n = 3;
  a.degree = 2;
  a.kind = Coefficients::base_point;
  a.params = 1;
  const std::size_t nv = 1 + 9;
  Polynomial det = trilinear_exponent(AntisymTensor3::epsilon(3), nv, 1, 4, 7,
                                      Rational(1));
  Polynomial beta = Polynomial::variable(nv, 0);
  a.family = beta * det;
  a.labels = {"beta"};
  return a;
}

/// Every monomial of total degree in [1, max_degree] in the variables of a
/// degree-`degree` cochain that involves at least one group argument.
inline CochainAnsatz polynomial_ansatz(int n, int degree, Coefficients kind,
                                       int max_degree = 3) {
  CochainAnsatz a;
  a.n = n;
  a.degree = degree;
  a.kind = kind;
  const std::size_t cv = PolyExponentCochain::num_vars(n, degree, kind);
  const std::size_t first_arg = kind == Coefficients::base_point ? n : 0;
  std::vector<Monomial> monos;
  Monomial cur(cv, 0);
  // enumerate exponent vectors with total degree <= max_degree
  auto rec = [&](auto&& self, std::size_t v, int left) -> void {
    if (v == cv) {
      int tot = 0, args = 0;
      for (std::size_t i = 0; i < cv; ++i) {
        tot += cur[i];
        if (i >= first_arg) args += cur[i];
      }
      if (tot >= 1 && args >= 1) monos.push_back(cur);
      return;
    }
    for (int e = 0; e <= left; ++e) {
      cur[v] = static_cast<std::uint8_t>(e);
      self(self, v + 1, left - e);
    }
    cur[v] = 0;
  };
  rec(rec, 0, max_degree);
  a.params = monos.size();
  const std::size_t nv = a.params + cv;
  a.family = Polynomial(nv);
  for (std::size_t i = 0; i < monos.size(); ++i) {
    Monomial mo(nv, 0);
    mo[i] = 1;
    std::copy(monos[i].begin(), monos[i].end(), mo.begin() + a.params);
    a.family.add_term(mo, 1);
    std::string label = "m";
    for (auto e : monos[i]) label += std::to_string(int(e));
    a.labels.push_back(std::move(label));
  }
  return a;
}

}  // namespace magtrans
