#pragma once

// Truncated n-color Dirac sea with twisted CAR generators and the translation
// operators g(p). Phases are symbolic affine functions of the base point x.

#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "cohomology.hpp"
#include "errors.hpp"
#include "magnetic.hpp"
#include "phase.hpp"
#include "rational.hpp"
#include "simplicial.hpp"

namespace magtrans {

/// Modes k in [-M, M] per color; the outer `guard` modes on each side must
/// keep the sea pattern.
class ModeWindow {
 public:
  static constexpr int kMaxCutoff = 31;  // 2M+1 bits per color

  ModeWindow(int colors, int cutoff, int guard)
      : n_(colors), m_(cutoff), g_(guard) {
    if (n_ < 1) throw PreconditionError("ModeWindow: need at least one color");
    if (m_ < 1 || m_ > kMaxCutoff)
      throw PreconditionError("ModeWindow: cutoff must be in [1, 31]");
    if (g_ <= 0 || g_ >= m_)
      throw PreconditionError("ModeWindow: need 0 < guard < cutoff");
  }

  int colors() const noexcept { return n_; }
  int cutoff() const noexcept { return m_; }
  int guard() const noexcept { return g_; }
  /// Largest |k| outside the guard band.
  int interior() const noexcept { return m_ - g_; }
  bool contains(int k) const noexcept { return k >= -m_ && k <= m_; }
  bool in_guard(int k) const noexcept { return k < -interior() || k > interior(); }

  friend bool operator==(const ModeWindow&, const ModeWindow&) = default;

 private:
  int n_, m_, g_;
};

/// Occupation numbers in the window. Modes below -M are filled and modes
/// above M empty, implicitly.
class FockBasisState {
 public:
  static FockBasisState vacuum(const ModeWindow& w) {
    FockBasisState s(w);
    for (int j = 0; j < w.colors(); ++j)
      for (int k = -w.cutoff(); k <= 0; ++k) s.set(j, k, true);
    return s;
  }

  /// Sea filled up to k <= shift_j in each color.
  static FockBasisState shifted_sea(const ModeWindow& w,
                                    const std::vector<int>& shift) {
    if (static_cast<int>(shift.size()) != w.colors())
      throw DimensionMismatch(w.colors(), shift.size(), "shifted_sea");
    FockBasisState s(w);
    for (int j = 0; j < w.colors(); ++j) {
      if (shift[j] > w.interior() || shift[j] < -w.interior())
        throw GuardBandOverflow(j, shift[j]);
      for (int k = -w.cutoff(); k <= shift[j]; ++k) s.set(j, k, true);
    }
    return s;
  }

  const ModeWindow& window() const noexcept { return w_; }

  bool occupied(int j, int k) const {
    check(j, k);
    return (occ_[j] >> bit(k)) & 1u;
  }
  void set(int j, int k, bool on) {
    check(j, k);
    const std::uint64_t b = std::uint64_t{1} << bit(k);
    occ_[j] = on ? (occ_[j] | b) : (occ_[j] & ~b);
  }

  /// Occupied modes of color j strictly above k.
  int occupied_above(int j, int k) const {
    check(j, k);
    return std::popcount(occ_[j] >> (bit(k) + 1));
  }

  /// #{occupied k > 0} - #{empty k <= 0}.
  long charge(int j) const {
    long c = 0;
    for (int k = -w_.cutoff(); k <= w_.cutoff(); ++k) {
      const bool o = occupied(j, k);
      if (k > 0 && o) ++c;
      if (k <= 0 && !o) --c;
    }
    return c;
  }
  long charge() const {
    long c = 0;
    for (int j = 0; j < w_.colors(); ++j) c += charge(j);
    return c;
  }

  /// First guard-band mode that breaks the sea pattern, if any.
  std::optional<std::pair<int, int>> guard_violation() const {
    for (int j = 0; j < w_.colors(); ++j)
      for (int k = -w_.cutoff(); k <= w_.cutoff(); ++k)
        if (w_.in_guard(k) && occupied(j, k) != (k <= 0)) return {{j, k}};
    return std::nullopt;
  }
  bool admissible() const { return !guard_violation(); }

  std::string to_string() const {
    std::ostringstream os;
    for (int j = 0; j < w_.colors(); ++j) {
      if (j) os << " | ";
      for (int k = w_.cutoff(); k >= -w_.cutoff(); --k) os << (occupied(j, k) ? '1' : '0');
    }
    return os.str();
  }

  friend bool operator==(const FockBasisState& a, const FockBasisState& b) {
    return a.w_ == b.w_ && a.occ_ == b.occ_;
  }
  friend bool operator<(const FockBasisState& a, const FockBasisState& b) {
    return a.occ_ < b.occ_;
  }

 private:
  explicit FockBasisState(const ModeWindow& w) : w_(w), occ_(w.colors(), 0) {}
  int bit(int k) const { return k + w_.cutoff(); }
  void check(int j, int k) const {
    if (j < 0 || j >= w_.colors()) throw DimensionMismatch(w_.colors(), j, "color");
    if (!w_.contains(k)) throw ModeOutOfWindow(j, k);
  }

  ModeWindow w_;
  std::vector<std::uint64_t> occ_;
};

/// sign * e^{2 pi i phase(x)} |state>.
struct TwistedTerm {
  AffineTurnExponent phase;
  int sign = 1;
  FockBasisState state;

  static TwistedTerm of(const FockBasisState& s) {
    return {AffineTurnExponent(s.window().colors()), 1, s};
  }

  /// Equal as vectors: same state, same phase factor including the sign.
  bool same_vector(const TwistedTerm& o) const {
    return state == o.state &&
           phase.constant_part() +
                   TurnExponent(sign == o.sign ? Rational(0) : Rational(1, 2)) ==
               o.phase.constant_part() &&
           phase.linear() == o.phase.linear();
  }
};

// Colors commute with each other; within a color the sign counts occupied
// modes above k (canonical order: color, then descending mode).

inline std::optional<TwistedTerm> create(int j, int k, TwistedTerm t) {
  if (t.state.occupied(j, k)) return std::nullopt;
  if (t.state.occupied_above(j, k) % 2) t.sign = -t.sign;
  t.state.set(j, k, true);
  return t;
}

inline std::optional<TwistedTerm> annihilate(int j, int k, TwistedTerm t) {
  if (!t.state.occupied(j, k)) return std::nullopt;
  if (t.state.occupied_above(j, k) % 2) t.sign = -t.sign;
  t.state.set(j, k, false);
  return t;
}

/// Antisymmetric bilinear form omega(x, z) = sum_ij w_ij x_i z_j.
class AntisymForm2 {
 public:
  AntisymForm2() = default;
  explicit AntisymForm2(int n) : n_(n), m_(static_cast<std::size_t>(n) * n) {}

  int dimension() const noexcept { return n_; }
  const Rational& operator()(int i, int j) const { return m_[idx(i, j)]; }
  void set(int i, int j, const Rational& v) {
    if (i == j) {
      if (v != 0) throw PreconditionError("AntisymForm2: diagonal must vanish");
      return;
    }
    m_[idx(i, j)] = v;
    m_[idx(j, i)] = -v;
  }

  Rational pairing(const RationalVector& x, const RationalVector& z) const {
    require(x), require(z);
    Rational s = 0;
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j)
        if (m_[idx(i, j)] != 0) s += m_[idx(i, j)] * x[i] * z[j];
    return s;
  }

  /// x -> omega(x, p) as an affine exponent.
  AffineTurnExponent against(const RationalVector& p) const {
    require(p);
    RationalVector lin(n_);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) lin[i] += m_[idx(i, j)] * p[j];
    return {0, lin};
  }

  /// omega(Z^n, Z^n) in Z.
  bool is_integral() const {
    for (const auto& v : m_)
      if (!is_integer(v)) return false;
    return true;
  }
  bool is_zero() const {
    for (const auto& v : m_)
      if (v != 0) return false;
    return true;
  }

  friend bool operator==(const AntisymForm2&, const AntisymForm2&) = default;

 private:
  std::size_t idx(int i, int j) const {
    if (i < 0 || j < 0 || i >= n_ || j >= n_)
      throw DimensionMismatch(n_, std::max(i, j), "AntisymForm2 index");
    return static_cast<std::size_t>(i) * n_ + j;
  }
  void require(const RationalVector& v) const {
    if (static_cast<int>(v.size()) != n_)
      throw DimensionMismatch(n_, v.size(), "AntisymForm2");
  }

  int n_ = 0;
  std::vector<Rational> m_;
};

/// g(p): shift of mode k of color j to k + p_j, twisted by omega.
class TranslationOp {
 public:
  TranslationOp(RationalVector p, AntisymForm2 omega)
      : p_(std::move(p)), omega_(std::move(omega)) {
    if (static_cast<int>(p_.size()) != omega_.dimension())
      throw DimensionMismatch(omega_.dimension(), p_.size(), "TranslationOp");
    if (!p_.is_integral()) throw PreconditionError("TranslationOp: p must be integral");
    for (const auto& c : p_) shift_.push_back(static_cast<int>(c.get_num().get_si()));
  }

  const RationalVector& p() const noexcept { return p_; }
  const std::vector<int>& shift() const noexcept { return shift_; }
  const AntisymForm2& omega() const noexcept { return omega_; }
  /// Sum of the p_j: the charge of g(p) vacuum.
  long total() const {
    long s = 0;
    for (int v : shift_) s += v;
    return s;
  }

  friend TranslationOp operator+(const TranslationOp& a, const TranslationOp& b) {
    if (!(a.omega_ == b.omega_))
      throw PreconditionError("TranslationOp: different twisting forms");
    return {a.p_ + b.p_, a.omega_};
  }

 private:
  RationalVector p_;
  AntisymForm2 omega_;
  std::vector<int> shift_;
};

struct CarOp {
  bool creation;
  int color;
  int mode;
};

/// Normal-ordered operator string O_1..O_r with |s> = sign * O_1..O_r vacuum.
/// Creators (particles above the sea) come first in canonical order, then
/// annihilators for the holes.
struct OperatorString {
  std::vector<CarOp> ops;  // leftmost first
  int sign = 1;
};

inline OperatorString decompose(const FockBasisState& s) {
  const auto& w = s.window();
  OperatorString out;
  for (int j = 0; j < w.colors(); ++j)
    for (int k = w.cutoff(); k >= 1; --k)
      if (s.occupied(j, k)) out.ops.push_back({true, j, k});
  for (int j = 0; j < w.colors(); ++j)
    for (int k = -w.cutoff(); k <= 0; ++k)
      if (!s.occupied(j, k)) out.ops.push_back({false, j, k});
  // fix the sign by replaying on the vacuum
  TwistedTerm t = TwistedTerm::of(FockBasisState::vacuum(w));
  for (auto it = out.ops.rbegin(); it != out.ops.rend(); ++it) {
    auto r = it->creation ? create(it->color, it->mode, t)
                          : annihilate(it->color, it->mode, t);
    t = std::move(*r);  // cannot be blocked: each mode is touched once
  }
  out.sign = t.sign;
  return out;
}

/// g(p) t: conjugate each operator of the normal-ordered string (mode shift,
/// phase +omega(x,p) per creator and -omega(x,p) per annihilator) and apply it
/// to the shifted sea, which carries phase 0.
inline TwistedTerm translate(const TranslationOp& g, const TwistedTerm& t) {
  const auto& w = t.state.window();
  if (g.omega().dimension() != w.colors())
    throw DimensionMismatch(w.colors(), g.omega().dimension(), "translate");
  if (auto v = t.state.guard_violation()) throw GuardBandOverflow(v->first, v->second);
  const OperatorString str = decompose(t.state);
  TwistedTerm cur{t.phase, t.sign * str.sign,
                  FockBasisState::shifted_sea(w, g.shift())};
  long net = 0;
  for (auto it = str.ops.rbegin(); it != str.ops.rend(); ++it) {
    const int k = it->mode + g.shift()[it->color];
    if (!w.contains(k)) throw GuardBandOverflow(it->color, k);
    auto r = it->creation ? create(it->color, k, cur) : annihilate(it->color, k, cur);
    if (!r) throw PreconditionError("translate: shifted string blocked");
    cur = std::move(*r);
    net += it->creation ? 1 : -1;
  }
  if (auto v = cur.state.guard_violation()) throw GuardBandOverflow(v->first, v->second);
  if (net) cur.phase += net * g.omega().against(g.p());
  return cur;
}

/// Vacuum, every single particle or hole, and every particle-hole pair, with
/// all modes outside the guard band.
inline std::vector<FockBasisState> spanning_set(const ModeWindow& w) {
  const auto vac = FockBasisState::vacuum(w);
  std::vector<FockBasisState> out = {vac};
  std::vector<std::pair<int, int>> holes, particles;
  for (int j = 0; j < w.colors(); ++j)
    for (int k = -w.interior(); k <= w.interior(); ++k)
      (k <= 0 ? holes : particles).push_back({j, k});
  for (const auto& [j, k] : particles) {
    auto s = vac;
    s.set(j, k, true);
    out.push_back(s);
  }
  for (const auto& [j, k] : holes) {
    auto s = vac;
    s.set(j, k, false);
    out.push_back(s);
  }
  for (const auto& [jh, kh] : holes)
    for (const auto& [jp, kp] : particles) {
      auto s = vac;
      s.set(jh, kh, false);
      s.set(jp, kp, true);
      out.push_back(s);
    }
  return out;
}

struct ProductCocycleResult {
  AffineTurnExponent exponent;
  std::size_t states_checked = 0;
  std::size_t states_skipped = 0;  // shifts would reach the guard band
};

/// Common ratio of g(p)g(q) and g(p+q) on `states`. States whose shifts hit
/// the guard band are skipped; the vacuum must not be.
inline ProductCocycleResult product_cocycle_detail(
    const TranslationOp& gp, const TranslationOp& gq, const ModeWindow& w,
    const std::vector<FockBasisState>& states) {
  const TranslationOp gpq = gp + gq;
  ProductCocycleResult res;
  std::optional<AffineTurnExponent> ratio;
  const auto vac = FockBasisState::vacuum(w);
  for (const auto& s : states) {
    if (!(s.window() == w)) throw PreconditionError("product_cocycle: window mismatch");
    const auto t = TwistedTerm::of(s);
    std::optional<TwistedTerm> l, rr;
    try {
      l = translate(gp, translate(gq, t));
      rr = translate(gpq, t);
    } catch (const GuardBandOverflow&) {
      if (s == vac) throw;
      ++res.states_skipped;
      continue;
    }
    const TwistedTerm& lhs = *l;
    const TwistedTerm& rhs = *rr;
    if (!(lhs.state == rhs.state))
      throw NonScalarRatio("product_cocycle: g(p)g(q) and g(p+q) reach different states");
    AffineTurnExponent r = lhs.phase - rhs.phase;
    if (lhs.sign != rhs.sign) r += AffineTurnExponent::constant(r.dimension(), Rational(1, 2));
    if (!ratio) {
      ratio = r;
    } else if (!(*ratio == r)) {
      throw NonScalarRatio("product_cocycle: ratio differs on state " + s.to_string());
    }
    ++res.states_checked;
  }
  if (!ratio) throw PreconditionError("product_cocycle: no admissible states");
  res.exponent = *ratio;
  return res;
}

inline AffineTurnExponent product_cocycle(const TranslationOp& gp,
                                          const TranslationOp& gq,
                                          const ModeWindow& w) {
  return product_cocycle_detail(gp, gq, w, spanning_set(w)).exponent;
}

/// N omega(x, p) with N = sum_j q_j.
inline AffineTurnExponent expected_product_cocycle(const TranslationOp& gp,
                                                   const TranslationOp& gq) {
  return gq.total() * gp.omega().against(gp.p());
}

/// Groupoid coboundary of the product cocycle, x acted on by translation:
/// C(x+p; q, r) - C(x; p+q, r) + C(x; p, q+r) - C(x; p, q).
inline AffineTurnExponent associator(const TranslationOp& gp, const TranslationOp& gq,
                                     const TranslationOp& gr, const ModeWindow& w) {
  return product_cocycle(gq, gr, w).shifted(gp.p()) - product_cocycle(gp + gq, gr, w) +
         product_cocycle(gp, gq + gr, w) - product_cocycle(gp, gq, w);
}

/// The operators act fiberwise at fixed x, so the two groupings of
/// g(p)g(q)g(r) give C(p,q) + C(p+q,r) and C(q,r) + C(p,q+r); this is their
/// difference (the constant-coefficient coboundary).
inline AffineTurnExponent grouping_defect(const TranslationOp& gp,
                                          const TranslationOp& gq,
                                          const TranslationOp& gr,
                                          const ModeWindow& w) {
  return product_cocycle(gp, gq, w) + product_cocycle(gp + gq, gr, w) -
         product_cocycle(gq, gr, w) - product_cocycle(gp, gq + gr, w);
}

/// Applies g(p)g(q)g(r) directly to every admissible state of the spanning
/// set and compares to the phase predicted by either grouping times
/// g(p+q+r). Returns the number of states compared, or throws
/// NonScalarRatio on a mismatch.
inline std::size_t check_triple_composition(const TranslationOp& gp,
                                            const TranslationOp& gq,
                                            const TranslationOp& gr,
                                            const ModeWindow& w) {
  const auto left = product_cocycle(gp, gq, w) + product_cocycle(gp + gq, gr, w);
  const auto right = product_cocycle(gq, gr, w) + product_cocycle(gp, gq + gr, w);
  const TranslationOp all = gp + gq + gr;
  std::size_t compared = 0;
  for (const auto& s : spanning_set(w)) {
    const auto t = TwistedTerm::of(s);
    std::optional<TwistedTerm> direct, target;
    try {
      direct = translate(gp, translate(gq, translate(gr, t)));
      target = translate(all, t);
    } catch (const GuardBandOverflow&) {
      continue;
    }
    for (const auto* c : {&left, &right}) {
      TwistedTerm predicted = *target;
      predicted.phase += *c;
      if (!direct->same_vector(predicted))
        throw NonScalarRatio("triple composition differs on state " + s.to_string());
    }
    ++compared;
  }
  return compared;
}

/// Memoized product cocycles for one form and window, for sweeps over many
/// triples (each associator needs four cocycles, mostly shared).
class CocycleTable {
 public:
  CocycleTable(AntisymForm2 omega, ModeWindow w)
      : omega_(std::move(omega)), w_(w), states_(spanning_set(w_)) {}

  const ProductCocycleResult& get(const RationalVector& p, const RationalVector& q) {
    std::vector<long> key;
    for (const auto* v : {&p, &q})
      for (const auto& c : *v) {
        if (!is_integer(c)) throw PreconditionError("CocycleTable: p, q must be integral");
        key.push_back(c.get_num().get_si());
      }
    auto it = cache_.find(key);
    if (it == cache_.end())
      it = cache_.emplace(key, product_cocycle_detail({p, omega_}, {q, omega_}, w_, states_))
               .first;
    return it->second;
  }

  AffineTurnExponent associator(const RationalVector& p, const RationalVector& q,
                                const RationalVector& r) {
    return get(q, r).exponent.shifted(p) - get(p + q, r).exponent +
           get(p, q + r).exponent - get(p, q).exponent;
  }
  AffineTurnExponent grouping_defect(const RationalVector& p, const RationalVector& q,
                                     const RationalVector& r) {
    return get(p, q).exponent + get(p + q, r).exponent - get(q, r).exponent -
           get(p, q + r).exponent;
  }

  std::size_t size() const noexcept { return cache_.size(); }

 private:
  AntisymForm2 omega_;
  ModeWindow w_;
  std::vector<FockBasisState> states_;
  std::map<std::vector<long>, ProductCocycleResult> cache_;
};

/// C(u; X, Y) = (sum_k Y_k) omega(u, X) as a base-point 2-cochain.
inline PolyExponentCochain fock_cochain(const AntisymForm2& omega) {
  const int n = omega.dimension();
  const std::size_t nv = PolyExponentCochain::num_vars(n, 2, Coefficients::base_point);
  Polynomial p(nv);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (omega(i, j) == 0) continue;
      for (int k = 0; k < n; ++k) {
        Monomial m(nv, 0);
        m[i] += 1;
        m[n + j] += 1;
        m[2 * n + k] += 1;
        p.add_term(m, omega(i, j));
      }
    }
  return {n, 2, Coefficients::base_point, std::move(p)};
}

/// C'(u; X, Y) = sum_{i<j<k} a_ijk u_i X_j Y_k.
inline PolyExponentCochain lattice_cochain(const AntisymTensor3& a) {
  const int n = a.dimension();
  const std::size_t nv = PolyExponentCochain::num_vars(n, 2, Coefficients::base_point);
  Polynomial p(nv);
  for (const auto& [t, c] : a.coefficients()) {
    Monomial m(nv, 0);
    m[t[0]] += 1;
    m[n + t[1]] += 1;
    m[2 * n + t[2]] += 1;
    p.add_term(m, c);
  }
  return {n, 2, Coefficients::base_point, std::move(p)};
}

struct EquivalenceReport {
  AntisymForm2 omega;
  Rational alpha;              // 2(w12 + w23 + w31)
  bool solved = false;         // trivializing 1-cochain found
  std::optional<CoboundSolution> trivializer;
  std::size_t substitutions = 0;
  bool verified = false;       // C - C' - db vanishes at every substitution
  bool neighbours_rejected = false;  // alpha +- 1 admit no trivializer
  bool ok() const { return solved && verified && neighbours_rejected; }
};

namespace detail {

inline std::optional<CoboundSolution> solve_equivalence(const AntisymForm2& omega,
                                                        const Rational& alpha) {
  AntisymTensor3 a(3);
  a.set(0, 1, 2, alpha);
  const auto target = PolyExponentCochain(
      3, 2, Coefficients::base_point,
      fock_cochain(omega).exponent() - lattice_cochain(a).exponent());
  return cobound_solve(target, polynomial_ansatz(3, 1, Coefficients::base_point, 3),
                       GroupModuleAction::translation, SolveMode::lattice_strict);
}

}  // namespace detail

/// Looks for a 1-cochain b on Z^3 with C - C' = db as phases, where C is the
/// Fock product cocycle and C' the lattice cocycle of alpha * eps.
inline EquivalenceReport equivalence_report(const AntisymForm2& omega) {
  if (omega.dimension() != 3)
    throw PreconditionError("equivalence_report: needs n = 3");
  EquivalenceReport r;
  r.omega = omega;
  r.alpha = 2 * (omega(0, 1) + omega(1, 2) + omega(2, 0));
  r.trivializer = detail::solve_equivalence(omega, r.alpha);
  r.solved = r.trivializer.has_value();
  if (r.solved) {
    AntisymTensor3 a(3);
    a.set(0, 1, 2, r.alpha);
    const auto diff = PolyExponentCochain(
        3, 2, Coefficients::base_point,
        fock_cochain(omega).exponent() - lattice_cochain(a).exponent() -
            coboundary(r.trivializer->cochain, GroupModuleAction::translation)
                .exponent());
    r.verified = true;
    for (const auto& p : integer_box(3, 1))
      for (const auto& q : integer_box(3, 1)) {
        const RationalVector args[] = {p, q};
        if (!diff.evaluate(args).is_zero()) r.verified = false;
        ++r.substitutions;
      }
  }
  r.neighbours_rejected = !detail::solve_equivalence(omega, r.alpha + 1) &&
                          !detail::solve_equivalence(omega, r.alpha - 1);
  return r;
}

}  // namespace magtrans
