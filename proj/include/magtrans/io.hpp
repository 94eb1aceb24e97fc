#pragma once

// JSON encodings. Rationals are strings ("3/4"); tensor and form indices in
// files are 1-based. Decoding errors raise ParseError naming the location.

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "cohomology.hpp"
#include "errors.hpp"
#include "fock.hpp"
#include "looptrans.hpp"
#include "phase.hpp"
#include "rational.hpp"
#include "simplicial.hpp"

namespace magtrans::io {

using json = nlohmann::ordered_json;

/// JSON-pointer-like location for error messages.
class Path {
 public:
  Path() = default;
  Path operator/(const std::string& key) const { return Path(s_ + "/" + key); }
  Path operator/(std::size_t i) const { return Path(s_ + "/" + std::to_string(i)); }
  std::string str() const { return s_.empty() ? "/" : s_; }

 private:
  explicit Path(std::string s) : s_(std::move(s)) {}
  std::string s_;
};

[[noreturn]] inline void fail(const Path& at, const std::string& what) {
  throw ParseError("at " + at.str() + ": " + what);
}

inline const json& member(const json& j, const char* key, const Path& at) {
  if (!j.is_object()) fail(at, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(at, std::string("missing key '") + key + "'");
  return *it;
}

inline long get_int(const json& j, const Path& at) {
  if (!j.is_number_integer()) fail(at, "expected an integer");
  return j.get<long>();
}

// ---- scalars and vectors

inline json to_json(const Rational& r) { return r.get_str(); }

inline Rational rational_from(const json& j, const Path& at) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) fail(at, "expected a rational string");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const ParseError& e) {
    fail(at, e.what());
  }
}

inline json to_json(const RationalVector& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

inline RationalVector vector_from(const json& j, const Path& at) {
  if (!j.is_array()) fail(at, "expected an array");
  RationalVector v(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) v[i] = rational_from(j[i], at / i);
  return v;
}

inline json to_json(const TurnExponent& t) { return to_json(t.value()); }

inline json to_json(const AffineTurnExponent& f) {
  return {{"const", to_json(f.constant_part())}, {"linear", to_json(f.linear())}};
}

// ---- tensors and forms

inline json to_json(const AntisymTensor3& a) {
  json e = json::array();
  for (const auto& [t, c] : a.coefficients())
    e.push_back({{"index", {t[0] + 1, t[1] + 1, t[2] + 1}}, {"value", to_json(c)}});
  return {{"n", a.dimension()}, {"entries", e}};
}

/// {"n": 3, "entries": [{"index": [1,2,3], "value": "1"}]}; unsorted index
/// triples store the permutation sign.
inline AntisymTensor3 tensor_from(const json& j, const Path& at) {
  const long n = get_int(member(j, "n", at), at / "n");
  if (n < 3) fail(at / "n", "dimension must be at least 3");
  AntisymTensor3 a(static_cast<int>(n));
  const auto& e = member(j, "entries", at);
  if (!e.is_array()) fail(at / "entries", "expected an array");
  for (std::size_t i = 0; i < e.size(); ++i) {
    const Path p = at / "entries" / i;
    const auto& idx = member(e[i], "index", p);
    if (!idx.is_array() || idx.size() != 3) fail(p / "index", "expected three indices");
    int t[3];
    for (int k = 0; k < 3; ++k) {
      const long v = get_int(idx[k], p / "index" / static_cast<std::size_t>(k));
      if (v < 1 || v > n) fail(p / "index", "index out of range 1..n");
      t[k] = static_cast<int>(v - 1);
    }
    if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2]) fail(p / "index", "repeated index");
    a.set(t[0], t[1], t[2], rational_from(member(e[i], "value", p), p / "value"));
  }
  return a;
}

inline json to_json(const AntisymForm2& w) {
  json e = json::array();
  for (int i = 0; i < w.dimension(); ++i)
    for (int j = i + 1; j < w.dimension(); ++j)
      if (w(i, j) != 0) e.push_back({{"index", {i + 1, j + 1}}, {"value", to_json(w(i, j))}});
  return {{"n", w.dimension()}, {"entries", e}};
}

inline AntisymForm2 form_from(const json& j, const Path& at) {
  const long n = get_int(member(j, "n", at), at / "n");
  if (n < 1) fail(at / "n", "dimension must be positive");
  AntisymForm2 w(static_cast<int>(n));
  const auto& e = member(j, "entries", at);
  if (!e.is_array()) fail(at / "entries", "expected an array");
  for (std::size_t i = 0; i < e.size(); ++i) {
    const Path p = at / "entries" / i;
    const auto& idx = member(e[i], "index", p);
    if (!idx.is_array() || idx.size() != 2) fail(p / "index", "expected two indices");
    const long a = get_int(idx[0], p / "index" / std::size_t{0});
    const long b = get_int(idx[1], p / "index" / std::size_t{1});
    if (a < 1 || b < 1 || a > n || b > n) fail(p / "index", "index out of range 1..n");
    if (a == b) fail(p / "index", "diagonal entries must vanish");
    w.set(static_cast<int>(a - 1), static_cast<int>(b - 1),
          rational_from(member(e[i], "value", p), p / "value"));
  }
  return w;
}

// ---- cochains

inline json to_json(const PolyExponentCochain& c) {
  json monos = json::array();
  for (const auto& [m, coeff] : c.exponent().terms()) {
    json e = json::array();
    for (auto x : m) e.push_back(static_cast<int>(x));
    monos.push_back({{"exponents", e}, {"coeff", to_json(coeff)}});
  }
  return {{"n", c.dimension()},
          {"degree", c.degree()},
          {"base_point", c.base_point_dependent()},
          {"monomials", monos}};
}

inline PolyExponentCochain cochain_from(const json& j, const Path& at) {
  const long n = get_int(member(j, "n", at), at / "n");
  const long deg = get_int(member(j, "degree", at), at / "degree");
  const auto& bp = member(j, "base_point", at);
  if (!bp.is_boolean()) fail(at / "base_point", "expected a boolean");
  const auto kind = bp.get<bool>() ? Coefficients::base_point : Coefficients::constant;
  if (n < 1 || deg < 0 || deg > 4) fail(at, "bad dimension or degree");
  const std::size_t nv =
      PolyExponentCochain::num_vars(static_cast<int>(n), static_cast<int>(deg), kind);
  Polynomial p(nv);
  const auto& ms = member(j, "monomials", at);
  if (!ms.is_array()) fail(at / "monomials", "expected an array");
  for (std::size_t i = 0; i < ms.size(); ++i) {
    const Path q = at / "monomials" / i;
    const auto& e = member(ms[i], "exponents", q);
    if (!e.is_array() || e.size() != nv)
      fail(q / "exponents", "expected " + std::to_string(nv) + " exponents");
    Monomial m(nv, 0);
    for (std::size_t k = 0; k < nv; ++k) {
      const long x = get_int(e[k], q / "exponents" / k);
      if (x < 0 || x > 3) fail(q / "exponents" / k, "exponent out of range 0..3");
      m[k] = static_cast<std::uint8_t>(x);
    }
    p.add_term(m, rational_from(member(ms[i], "coeff", q), q / "coeff"));
  }
  try {
    return {static_cast<int>(n), static_cast<int>(deg), kind, std::move(p)};
  } catch (const Error& err) {
    fail(at, err.what());
  }
}

// ---- loops

/// {"n", "max_frequency", "coefficients": [{"m": 1, "re": [...], "im": [...]}]}
inline json to_json(const TrigLoop& f) {
  json rows = json::array();
  for (int m = 0; m <= f.max_frequency(); ++m) {
    json re = json::array(), im = json::array();
    for (int i = 0; i < f.dimension(); ++i) {
      re.push_back(to_json(f.coeff(m, i).re));
      im.push_back(to_json(f.coeff(m, i).im));
    }
    rows.push_back({{"m", m}, {"re", re}, {"im", im}});
  }
  return {{"n", f.dimension()}, {"max_frequency", f.max_frequency()}, {"coefficients", rows}};
}

inline TrigLoop loop_from(const json& j, const Path& at) {
  const long n = get_int(member(j, "n", at), at / "n");
  const long mf = get_int(member(j, "max_frequency", at), at / "max_frequency");
  if (n < 1 || mf < 0) fail(at, "bad dimension or frequency");
  TrigLoop f(static_cast<int>(n), static_cast<int>(mf));
  const auto& rows = member(j, "coefficients", at);
  if (!rows.is_array()) fail(at / "coefficients", "expected an array");
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const Path p = at / "coefficients" / r;
    const long m = get_int(member(rows[r], "m", p), p / "m");
    if (m < 0 || m > mf) fail(p / "m", "frequency out of range");
    const auto re = vector_from(member(rows[r], "re", p), p / "re");
    const auto im = vector_from(member(rows[r], "im", p), p / "im");
    if (re.size() != static_cast<std::size_t>(n) || im.size() != re.size())
      fail(p, "coefficient vectors must have n entries");
    for (int i = 0; i < n; ++i) {
      if (m == 0 && im[i] != 0) fail(p / "im", "frequency 0 must be real");
      f.set(static_cast<int>(m), i, {re[i], im[i]});
    }
  }
  return f;
}

// ---- solver output

inline json to_json(const CoboundSolution& s, const CochainAnsatz& a) {
  json m = json::object();
  for (std::size_t i = 0; i < s.coefficients.size(); ++i)
    if (s.coefficients[i] != 0)
      m[i < a.labels.size() ? a.labels[i] : std::to_string(i)] = to_json(s.coefficients[i]);
  return m;
}

// ---- documents

/// Parses JSON text; syntax errors report line and column.
inline json parse_document(const std::string& text, const std::string& source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1, col = 1;
    const std::size_t end = std::min<std::size_t>(e.byte ? e.byte - 1 : 0, text.size());
    for (std::size_t i = 0; i < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(source + ":" + std::to_string(line) + ":" + std::to_string(col) +
                     ": malformed JSON");
  }
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline json load_file(const std::string& path) {
  return parse_document(read_file(path), path);
}

}  // namespace magtrans::io
