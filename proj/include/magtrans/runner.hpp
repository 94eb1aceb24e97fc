#pragma once

// Subcommand runner behind the command-line tool: configuration, checks and
// deterministic reports.

#include <cstdint>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cohomology.hpp"
#include "fock.hpp"
#include "io.hpp"
#include "looptrans.hpp"
#include "magnetic.hpp"
#include "random.hpp"
#include "theorem1.hpp"

namespace magtrans {

namespace anchor {
inline constexpr const char* pentagon = "is a 3-cocycle in the sense that";
inline constexpr const char* simplex = "the 3-simplex with vertices at the points";
inline constexpr const char* faces = "In this case the 3-cocycle C₃ is trivial";
inline constexpr const char* groupoid = "trivial as a transformation groupoid cocycle";
inline constexpr const char* rcochain = "This cocycle is a coboundary of the 2-cochain";
inline constexpr const char* torus = "identically =1 when the arguments are in";
inline constexpr const char* b1 = "we have c₂ = δb₁ where";
inline constexpr const char* holonomy = "the connection in the loop space is the transgression";
inline constexpr const char* theorem1 = "is equal to the transgression of the Dixmier-Douady class";
inline constexpr const char* product = "they differ by an x dependent phase";
inline constexpr const char* shift = "acts as automorphisms of the twisted CAR algebra";
inline constexpr const char* obstruction = "obstruction to an extension of the ℤⁿ action";
inline constexpr const char* equivalence = "is equivalent to C′ for the choice";

inline const std::vector<std::string>& all() {
  static const std::vector<std::string> v = {pentagon, simplex, faces,   groupoid, rcochain,
                                             torus,    b1,      holonomy, theorem1, product,
                                             shift,    obstruction, equivalence};
  return v;
}
}  // namespace anchor

struct FockConfig {
  int cutoff = 6;
  int guard = 2;
  std::optional<RationalVector> p, q;  // single pair for fock-cocycle
};

struct RunConfig {
  AntisymTensor3 tensor = AntisymTensor3::epsilon(3);
  GroupKind group = GroupKind::real_space;
  AntisymForm2 omega = default_omega();
  std::uint64_t seed = 42;
  int samples = 200;
  double tolerance = 1e-6;
  FockConfig fock;

  int dimension() const { return tensor.dimension(); }

  static AntisymForm2 default_omega() {
    AntisymForm2 w(3);
    w.set(0, 1, 1);
    return w;
  }
};

/// Reads a configuration document. `base_dir` resolves *_file references.
inline RunConfig config_from(const io::json& j, const std::string& base_dir = ".") {
  using io::Path;
  if (!j.is_object()) io::fail(Path(), "configuration must be an object");
  RunConfig c;
  const Path root;
  auto load_ref = [&](const char* key) -> io::json {
    const auto& v = io::member(j, key, root);
    if (!v.is_string()) io::fail(root / key, "expected a file path");
    std::string path = v.get<std::string>();
    if (!path.empty() && path[0] != '/') path = base_dir + "/" + path;
    return io::load_file(path);
  };
  if (j.contains("tensor") && j.contains("tensor_file"))
    io::fail(root, "give either 'tensor' or 'tensor_file'");
  if (j.contains("tensor")) c.tensor = io::tensor_from(j["tensor"], root / "tensor");
  if (j.contains("tensor_file")) c.tensor = io::tensor_from(load_ref("tensor_file"), Path());
  if (j.contains("n")) {
    const long n = io::get_int(j["n"], root / "n");
    if (!j.contains("tensor") && !j.contains("tensor_file")) {
      if (n < 3) io::fail(root / "n", "dimension must be at least 3");
      if (n != 3) {
        // default tensor: e_123 in dimension n
        AntisymTensor3 a(static_cast<int>(n));
        a.set(0, 1, 2, 1);
        c.tensor = a;
      }
    } else if (n != c.tensor.dimension()) {
      io::fail(root / "n", "does not match the tensor dimension");
    }
  }
  if (j.contains("group")) {
    const auto& g = j["group"];
    if (!g.is_string()) io::fail(root / "group", "expected \"real\" or \"torus\"");
    if (g == "real") c.group = GroupKind::real_space;
    else if (g == "torus") c.group = GroupKind::torus;
    else io::fail(root / "group", "expected \"real\" or \"torus\"");
  }
  if (j.contains("omega") && j.contains("omega_file"))
    io::fail(root, "give either 'omega' or 'omega_file'");
  if (j.contains("omega")) c.omega = io::form_from(j["omega"], root / "omega");
  if (j.contains("omega_file")) c.omega = io::form_from(load_ref("omega_file"), Path());
  if (j.contains("seed")) {
    if (!j["seed"].is_number_unsigned()) io::fail(root / "seed", "expected a non-negative integer");
    c.seed = j["seed"].get<std::uint64_t>();
  }
  if (j.contains("samples")) {
    c.samples = static_cast<int>(io::get_int(j["samples"], root / "samples"));
    if (c.samples < 1) io::fail(root / "samples", "must be positive");
  }
  if (j.contains("tolerance")) {
    if (!j["tolerance"].is_number()) io::fail(root / "tolerance", "expected a number");
    c.tolerance = j["tolerance"].get<double>();
  }
  // Fock parameters live under "fock" or at top level (fock-cocycle files).
  const io::json* f = j.contains("fock") ? &j["fock"] : &j;
  const Path fp = j.contains("fock") ? root / "fock" : root;
  if (f->contains("M")) c.fock.cutoff = static_cast<int>(io::get_int((*f)["M"], fp / "M"));
  if (f->contains("guard")) c.fock.guard = static_cast<int>(io::get_int((*f)["guard"], fp / "guard"));
  if (f->contains("p")) c.fock.p = io::vector_from((*f)["p"], fp / "p");
  if (f->contains("q")) c.fock.q = io::vector_from((*f)["q"], fp / "q");
  if (f->contains("omega") && f != &j) c.omega = io::form_from((*f)["omega"], fp / "omega");
  for (const auto* v : {&c.fock.p, &c.fock.q})
    if (*v && ((*v)->size() != static_cast<std::size_t>(c.omega.dimension()) ||
               !(*v)->is_integral()))
      io::fail(fp, "p and q must be integer vectors of the form's dimension");
  try {
    ModeWindow(c.omega.dimension(), c.fock.cutoff, c.fock.guard);
  } catch (const PreconditionError& e) {
    io::fail(fp, e.what());
  }
  return c;
}

struct Record {
  std::string identity;
  std::string anchor;
  io::json inputs;
  io::json values;
  bool pass = false;
};

struct Report {
  std::string subcommand;
  std::uint64_t seed = 0;
  std::vector<Record> records;
  std::vector<std::string> csv;  // loops table, header first

  bool pass() const {
    for (const auto& r : records)
      if (!r.pass) return false;
    return !records.empty();
  }

  io::json to_json() const {
    io::json recs = io::json::array();
    for (const auto& r : records)
      recs.push_back({{"identity", r.identity},
                      {"anchor", r.anchor},
                      {"inputs", r.inputs},
                      {"values", r.values},
                      {"verdict", r.pass ? "pass" : "fail"}});
    io::json j = {{"subcommand", subcommand},
                  {"seed", seed},
                  {"verdict", pass() ? "pass" : "fail"},
                  {"records", recs}};
    if (!csv.empty()) j["table"] = csv;
    return j;
  }

  std::string table() const {
    std::ostringstream os;
    std::size_t w = 8;
    for (const auto& r : records) w = std::max(w, r.identity.size());
    for (const auto& r : records) {
      os << (r.pass ? "PASS  " : "FAIL  ") << r.identity
         << std::string(w - r.identity.size() + 2, ' ') << r.values.dump() << '\n';
    }
    os << (pass() ? "PASS" : "FAIL") << "  " << subcommand << " (" << records.size()
       << " checks, seed " << seed << ")\n";
    return os.str();
  }
};

namespace detail {

inline io::json vec(const RationalVector& v) { return io::to_json(v); }

inline io::json tensor_inputs(const RunConfig& c, int samples) {
  return {{"tensor", io::to_json(c.tensor)},
          {"group", c.group == GroupKind::torus ? "torus" : "real"},
          {"samples", samples},
          {"seed", c.seed}};
}

/// Sweep summary: distinct exponents and the first few samples.
struct Sweep {
  std::set<Rational> distinct;
  io::json examples = io::json::array();
  io::json witness;
  std::size_t failures = 0;
  std::size_t count = 0;

  void add(bool ok, io::json sample, const Rational& exponent) {
    ++count;
    distinct.insert(exponent);
    if (examples.size() < 3) examples.push_back(sample);
    if (!ok && failures++ == 0) witness = std::move(sample);
  }
  io::json summary() const {
    io::json d = io::json::array();
    for (const auto& r : distinct) {
      if (d.size() == 8) {
        d.push_back("...");
        break;
      }
      d.push_back(io::to_json(r));
    }
    io::json j = {{"checked", count}, {"failures", failures}, {"exponents", d},
                  {"examples", examples}};
    if (failures) j["witness"] = witness;
    return j;
  }
};

inline MagneticSystem system_of(const RunConfig& c) { return {c.tensor, c.group}; }

}  // namespace detail

// ---- subcommands

inline void run_c3(const RunConfig& c, Report& rep) {
  RandomSource rng(c.seed);
  const int n = c.dimension();
  const auto sys = detail::system_of(c);
  detail::Sweep s;
  for (int i = 0; i < c.samples; ++i) {
    auto x = rng.vector(n), y = rng.vector(n), z = rng.vector(n);
    const auto a = c3(sys, x, y, z), b = c3_by_integration(sys, x, y, z);
    s.add(a == b,
          {{"X", detail::vec(x)}, {"Y", detail::vec(y)}, {"Z", detail::vec(z)},
           {"c3", io::to_json(a)}, {"integral", io::to_json(b)}},
          a.value());
  }
  rep.records.push_back({"c3 equals the simplex integral", anchor::simplex,
                         detail::tensor_inputs(c, c.samples), s.summary(), s.failures == 0});
}

inline void run_pentagon(const RunConfig& c, Report& rep) {
  RandomSource rng(c.seed);
  const int n = c.dimension();
  const auto cochain = c3_cochain(detail::system_of(c).form());
  detail::Sweep s;
  for (int i = 0; i < c.samples; ++i) {
    auto g1 = rng.vector(n), g2 = rng.vector(n), g3 = rng.vector(n), g4 = rng.vector(n);
    const auto e = pentagon_check(cochain, g1, g2, g3, g4);
    s.add(e.is_identity(),
          {{"g1", detail::vec(g1)}, {"g2", detail::vec(g2)}, {"g3", detail::vec(g3)},
           {"g4", detail::vec(g4)}, {"exponent", io::to_json(e)}},
          e.value());
  }
  rep.records.push_back({"pentagon identity", anchor::pentagon,
                         detail::tensor_inputs(c, c.samples), s.summary(), s.failures == 0});
}

inline void run_faces(const RunConfig& c, Report& rep) {
  RandomSource rng(c.seed);
  const int n = c.dimension();
  // face products need the potential, which exists on R^n
  const MagneticSystem sys(c.tensor);
  detail::Sweep s;
  for (int i = 0; i < c.samples; ++i) {
    auto x = rng.vector(n), y = rng.vector(n), z = rng.vector(n);
    const auto f = face_product(sys, x, y, z), e = c3(sys, x, y, z);
    s.add(f == e,
          {{"X", detail::vec(x)}, {"Y", detail::vec(y)}, {"Z", detail::vec(z)},
           {"face_product", io::to_json(f)}, {"c3", io::to_json(e)}},
          f.value());
  }
  rep.records.push_back({"face product equals c3", anchor::faces,
                         detail::tensor_inputs(c, c.samples), s.summary(), s.failures == 0});
}

inline void run_groupoid(const RunConfig& c, Report& rep) {
  RandomSource rng(c.seed);
  const int n = c.dimension();
  const auto a = detail::system_of(c).form();
  const auto b = groupoid_b(a);
  const auto db = coboundary(b, GroupModuleAction::translation);
  const auto target = c3_on_groupoid(a);
  rep.records.push_back({"groupoid coboundary (symbolic)", anchor::groupoid,
                         {{"tensor", io::to_json(c.tensor)}, {"b", io::to_json(b)}},
                         {{"db", io::to_json(db)}, {"c3", io::to_json(target)}},
                         db == target});
  detail::Sweep s;
  for (int i = 0; i < c.samples; ++i) {
    auto u = rng.vector(n), x = rng.vector(n), y = rng.vector(n), z = rng.vector(n);
    const RationalVector bx[2] = {y, z}, bxy[2] = {x + y, z}, byz[2] = {x, y + z},
                         bxy2[2] = {x, y};
    const TurnExponent lhs = b.value_at(u + x, bx) - b.value_at(u, bxy) +
                             b.value_at(u, byz) - b.value_at(u, bxy2);
    const TurnExponent rhs = c3(MagneticSystem(a), x, y, z);
    s.add(lhs == rhs,
          {{"u", detail::vec(u)}, {"X", detail::vec(x)}, {"Y", detail::vec(y)},
           {"Z", detail::vec(z)}, {"db", io::to_json(lhs)}, {"c3", io::to_json(rhs)}},
          lhs.value());
  }
  rep.records.push_back({"groupoid coboundary (sampled)", anchor::groupoid,
                         detail::tensor_inputs(c, c.samples), s.summary(), s.failures == 0});
}

inline void run_rsolve(const RunConfig& c, Report& rep) {
  if (c.dimension() != 3) throw PreconditionError("rsolve: needs a tensor with n = 3");
  const auto a = MagneticSystem(c.tensor).form();  // R^3 normalization
  const auto target = c3_on_groupoid(a);
  const auto fam = r_family();
  const auto sol = cobound_solve(target, fam, GroupModuleAction::translation);
  io::json values;
  bool ok = false;
  if (sol) {
    const Rational beta = sol->coefficients[0];
    // substitution on a fixed grid, and the same check for beta = 1/2
    auto check = [&](const Rational& bt) {
      Polynomial p = detail::ansatz_member(fam, 0).exponent();
      PolyExponentCochain r(3, 2, Coefficients::base_point, bt * p);
      return coboundary(r, GroupModuleAction::translation) == target;
    };
    RandomSource rng(c.seed);
    bool sampled = true;
    const PolyExponentCochain r(3, 2, Coefficients::base_point, sol->cochain.exponent());
    for (int i = 0; i < 50; ++i) {
      auto u = rng.vector(3), x = rng.vector(3), y = rng.vector(3), z = rng.vector(3);
      const RationalVector s1[2] = {y, z}, s2[2] = {x + y, z}, s3[2] = {x, y + z}, s4[2] = {x, y};
      const RationalVector t[3] = {x, y, z};
      const TurnExponent d = r.value_at(u + x, s1) - r.value_at(u, s2) + r.value_at(u, s3) -
                             r.value_at(u, s4);
      if (!(d == target.value_at(u, t))) sampled = false;
    }
    const bool paper_ok = check(Rational(1, 2));
    ok = sampled && check(beta);
    values = {{"beta", io::to_json(beta)},
              {"coefficient", "exp(2 pi i beta det(z,X,Y))"},
              {"substitution_verified", sampled},
              {"pi_i_normalization_beta", "1/2"},
              {"pi_i_normalization_cobounds", paper_ok}};
  } else {
    values = {{"beta", nullptr}};
  }
  rep.records.push_back({"R-cochain coefficient", anchor::rcochain,
                         {{"tensor", io::to_json(c.tensor)}, {"family", "beta det(z,X,Y)"}},
                         values, ok});
}

inline void run_torus(const RunConfig& c, Report& rep) {
  const int n = c.dimension();
  const bool integral = torus_admissible(c.tensor);
  io::json vals = {{"integral", integral}};
  if (!integral)
    for (const auto& [t, v] : c.tensor.coefficients())
      if (!is_integer(v)) {
        vals["witness"] = {{"index", {t[0] + 1, t[1] + 1, t[2] + 1}},
                           {"value", io::to_json(v)}};
        break;
      }
  rep.records.push_back({"torus integrality", anchor::torus,
                         {{"tensor", io::to_json(c.tensor)}}, vals, integral});
  if (!integral) return;
  auto sweep = [&](const AntisymTensor3& a, const std::string& name) {
    const auto r = torus_sweep(MagneticSystem(a, GroupKind::torus), 2);
    io::json v = {{"triples", r.triples}, {"evaluations", r.evaluations}};
    if (!r.trivial)
      v["witness"] = {{"X", detail::vec(r.witness[0])}, {"Y", detail::vec(r.witness[1])},
                      {"Z", detail::vec(r.witness[2])}, {"exponent", io::to_json(r.value)}};
    rep.records.push_back({name, anchor::torus,
                           {{"tensor", io::to_json(a)}, {"box", "{-2..2}^" + std::to_string(n)}},
                           v, r.trivial});
  };
  sweep(c.tensor, "integer triviality (configured tensor)");
  const auto basis = AntisymTensor3::integer_basis(n);
  for (std::size_t i = 0; i < basis.size(); ++i)
    sweep(basis[i], "integer triviality (basis " + std::to_string(i + 1) + ")");
}

inline void run_loops(const RunConfig& c, Report& rep) {
  RandomSource rng(c.seed);
  const int n = c.dimension();
  rep.csv.push_back("sample,max_frequency,c2,delta_b1,b1_AX,b1_AY");
  detail::Sweep s;
  for (int i = 0; i < c.samples; ++i) {
    const int m = static_cast<int>(rng.integer(0, 4));
    auto a = rng.trig_loop(n, m), x = rng.trig_loop(n, m), y = rng.trig_loop(n, m);
    const Rational c2 = c2_loop(x, y), db = delta_b1({a}, x, y);
    const Rational bx = b1({a}, x), by = b1({a}, y);
    rep.csv.push_back(std::to_string(i) + "," + std::to_string(m) + "," + c2.get_str() + "," +
                      db.get_str() + "," + bx.get_str() + "," + by.get_str());
    s.add(c2 == db, {{"A", io::to_json(a)}, {"X", io::to_json(x)}, {"Y", io::to_json(y)},
                     {"c2", io::to_json(c2)}, {"delta_b1", io::to_json(db)}},
          c2 - db);
  }
  rep.records.push_back({"c2 equals delta b1", anchor::b1,
                         {{"n", n}, {"max_frequency", 4}, {"samples", c.samples}, {"seed", c.seed}},
                         s.summary(), s.failures == 0});

  const auto b = potential(MagneticSystem(c.tensor).tensor());
  rep.csv.push_back("triangle,holonomy,surface_integral");
  detail::Sweep h;
  for (int i = 0; i < c.samples; ++i) {
    auto g1 = rng.vector(n), g2 = rng.vector(n);
    const Rational hol = holonomy(b, standard_triangle_family(g1, g2));
    const Rational surf = integrate2(b, s_chain(g1, g2));
    rep.csv.push_back(std::to_string(i) + "," + hol.get_str() + "," + surf.get_str());
    h.add(hol == surf, {{"g1", detail::vec(g1)}, {"g2", detail::vec(g2)},
                        {"holonomy", io::to_json(hol)}, {"integral", io::to_json(surf)}},
          hol - surf);
  }
  rep.records.push_back({"holonomy equals surface integral", anchor::holonomy,
                         detail::tensor_inputs(c, c.samples), h.summary(), h.failures == 0});

  // floating-point SU(2) check; the only consumer of the tolerance
  double worst = 0;
  const int loops = std::max(10, c.samples / 20);
  for (int i = 0; i < loops; ++i) {
    std::vector<su2::SU2Loop::Factor> f;
    for (int k = 0; k < 2; ++k)
      f.push_back({su2::from_quaternion(rng.uniform() - 0.5, rng.uniform() - 0.5,
                                        rng.uniform() - 0.5, rng.uniform() - 0.5),
                   static_cast<int>(rng.integer(-2, 2))});
    const auto r = su2::theorem1_check(su2::SU2Loop(f), {rng.trig_loop(3, 2, 3)},
                                       {rng.trig_loop(3, 2, 3)});
    worst = std::max(worst, std::abs(r.residual_minus) / (1 + std::abs(r.lhs)));
  }
  rep.records.push_back({"SU(2) cocycle cohomologous to transgression", anchor::theorem1,
                         {{"loops", loops}, {"level", 1}, {"tolerance", c.tolerance}},
                         {{"max_relative_residual", worst}, {"convention", "lhs - theta + dxi"}},
                         worst < c.tolerance});
}

inline void run_fock_cocycle(const RunConfig& c, Report& rep) {
  if (!c.fock.p || !c.fock.q) throw PreconditionError("fock-cocycle: p and q are required");
  const ModeWindow w(c.omega.dimension(), c.fock.cutoff, c.fock.guard);
  const TranslationOp gp(*c.fock.p, c.omega), gq(*c.fock.q, c.omega);
  const auto r = product_cocycle_detail(gp, gq, w, spanning_set(w));
  const auto expect = expected_product_cocycle(gp, gq);
  rep.records.push_back({"product cocycle", anchor::product,
                         {{"n", c.omega.dimension()}, {"M", c.fock.cutoff},
                          {"guard", c.fock.guard}, {"omega", io::to_json(c.omega)},
                          {"p", detail::vec(*c.fock.p)}, {"q", detail::vec(*c.fock.q)}},
                         {{"exponent", io::to_json(r.exponent)},
                          {"expected", io::to_json(expect)},
                          {"N", gq.total()},
                          {"states_checked", r.states_checked},
                          {"states_skipped", r.states_skipped}},
                         r.exponent == expect});
}

inline void run_fock(const RunConfig& c, Report& rep) {
  const int n = c.omega.dimension();
  const ModeWindow w(n, c.fock.cutoff, c.fock.guard);
  const io::json win = {{"n", n}, {"M", c.fock.cutoff}, {"guard", c.fock.guard},
                        {"omega", io::to_json(c.omega)}};
  // shift of the vacuum
  {
    bool ok = true;
    io::json ex = io::json::array();
    for (const auto& p : integer_box(n, 1)) {
      const auto t = translate({p, c.omega}, TwistedTerm::of(FockBasisState::vacuum(w)));
      ok = ok && t.phase.is_zero() && t.sign == 1 &&
           t.state == FockBasisState::shifted_sea(w, TranslationOp(p, c.omega).shift());
      if (ex.size() < 2) ex.push_back({{"p", detail::vec(p)}, {"charge", t.state.charge()}});
    }
    rep.records.push_back({"translation shifts the vacuum", anchor::shift, win,
                           {{"examples", ex}}, ok});
  }
  CocycleTable table(c.omega, w);
  const auto box = integer_box(n, 1);
  {
    detail::Sweep s;
    std::size_t states = 0;
    for (const auto& p : box)
      for (const auto& q : box) {
        const TranslationOp gp(p, c.omega), gq(q, c.omega);
        const auto& r = table.get(p, q);
        const auto e = expected_product_cocycle(gp, gq);
        states += r.states_checked;
        s.add(r.exponent == e, {{"p", detail::vec(p)}, {"q", detail::vec(q)},
                                {"exponent", io::to_json(r.exponent)}},
              r.exponent.constant_part().value());
      }
    auto v = s.summary();
    v.erase("exponents");
    v["state_checks"] = states;
    rep.records.push_back({"product cocycle is N omega(x,p)", anchor::product, win, v,
                           s.failures == 0});
  }
  {
    detail::Sweep s;
    bool grouping = true;
    const auto sym = coboundary(fock_cochain(c.omega), GroupModuleAction::translation);
    bool symbolic = true;
    for (const auto& p : box)
      for (const auto& q : box)
        for (const auto& r : box) {
          const auto a = table.associator(p, q, r);
          if (!table.grouping_defect(p, q, r).is_zero()) grouping = false;
          const RationalVector args[] = {p, q, r};
          if (!(a == sym.evaluate(args))) symbolic = false;
          s.add(affine_equal_on_torus(a, AffineTurnExponent(n)),
                {{"p", detail::vec(p)}, {"q", detail::vec(q)}, {"r", detail::vec(r)},
                 {"associator", io::to_json(a)}},
                a.constant_part().value());
        }
    auto v = s.summary();
    v["grouping_defect_zero"] = grouping;
    v["matches_symbolic_coboundary"] = symbolic;
    v["symbolic_coboundary"] = io::to_json(sym);
    rep.records.push_back({"associator trivial on Z^n", anchor::obstruction, win, v,
                           s.failures == 0 && grouping && symbolic});
  }
  if (n == 3) {
    const auto r = equivalence_report(c.omega);
    io::json v = {{"alpha", io::to_json(r.alpha)},
                  {"solved", r.solved},
                  {"substitutions", r.substitutions},
                  {"verified", r.verified},
                  {"alpha_pm_1_rejected", r.neighbours_rejected}};
    if (r.trivializer)
      v["trivializer"] = io::to_json(*r.trivializer,
                                     polynomial_ansatz(3, 1, Coefficients::base_point, 3));
    rep.records.push_back({"equivalence with the lattice cocycle", anchor::equivalence,
                           {{"omega", io::to_json(c.omega)}}, v, r.ok()});
  }
}

inline const std::vector<std::string>& subcommands() {
  static const std::vector<std::string> v = {"c3",    "pentagon", "faces", "groupoid",
                                             "rsolve", "torus",   "loops", "fock",
                                             "fock-cocycle", "all"};
  return v;
}

/// Runs one subcommand. Module errors propagate unchanged.
inline Report run(const std::string& sub, const RunConfig& c) {
  Report rep;
  rep.subcommand = sub;
  rep.seed = c.seed;
  const std::vector<std::pair<std::string, std::function<void(const RunConfig&, Report&)>>> table = {
      {"c3", run_c3},       {"pentagon", run_pentagon}, {"faces", run_faces},
      {"groupoid", run_groupoid}, {"rsolve", run_rsolve}, {"torus", run_torus},
      {"loops", run_loops}, {"fock", run_fock},          {"fock-cocycle", run_fock_cocycle}};
  if (sub == "all") {
    for (const auto& [name, f] : table) {
      if (name == "fock-cocycle" && (!c.fock.p || !c.fock.q)) continue;
      if (name == "rsolve" && c.dimension() != 3) continue;
      f(c, rep);
    }
    return rep;
  }
  for (const auto& [name, f] : table)
    if (name == sub) {
      f(c, rep);
      return rep;
    }
  throw PreconditionError("unknown subcommand '" + sub + "'");
}

}  // namespace magtrans
