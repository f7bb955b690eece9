#pragma once

#include "hecke/config.hpp"
#include "hecke/congruence.hpp"
#include "hecke/hecke_engine.hpp"
#include "hecke/isocrystal.hpp"
#include "hecke/mv_engine.hpp"
#include "hecke/presets.hpp"
#include "hecke/root_datum.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace hecke {

enum ExitCode : int { kExitOk = 0, kExitCheckFailed = 1, kExitInputError = 2 };

struct RunConfig {
  std::string command;  // hecke | bgu | adlv | hn | congruence | validate
  std::optional<std::string> preset;
  std::optional<std::string> config_path;
  std::optional<std::string> mu;
  bool machine = false;
  std::optional<std::int64_t> specialize_p;
  UpsilonConvention convention = UpsilonConvention::SigmaMuInverse;
  unsigned threads = 1;
  // hecke
  bool factors = false;
  // bgu
  bool list = false;
  // adlv
  std::optional<std::string> class_selector;
  bool mv = false;
  // hn
  bool check_condition2 = false;
  bool inclusive = false;
  // congruence
  bool ledger = false;
  bool check_ordinary = false;
};

inline bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t k = 2; k * k <= n; ++k)
    if (n % k == 0) return false;
  return true;
}

namespace json_io {

using nlohmann::json;

inline json vec(const Cocharacter& x) { return x.coords(); }
inline json vec(const Character& x) { return x.coords(); }
inline json vec(const RationalCocharacter& x) {
  json a = json::array();
  for (const auto& v : x) a.push_back(to_string(v));
  return a;
}
inline json levi(const LeviDatum& m) {
  json a = json::array();
  for (int i : m.subset) a.push_back(i + 1);
  return a;
}
inline json checks(const std::vector<CheckItem>& v) {
  json a = json::array();
  for (const auto& c : v) a.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return a;
}
inline json orbit_factor(const OrbitFactor& f) {
  json members = json::array();
  for (const auto& m : f.members) members.push_back(vec(m));
  return {{"rep", vec(f.rep)},           {"size", f.size},       {"exponent", f.exponent},
          {"norm", vec(f.norm)},         {"members", members},   {"factor", f.factor.to_json()},
          {"text", f.factor.to_string()}};
}
inline json sigma_class(const RootDatum& d, const Cocharacter& mu, const SigmaClass& c) {
  return {{"tau", vec(c.tau)},
          {"tau_sigma", c.tau_sigma},
          {"tau_sigma_lift", vec(c.tau_sigma_lift)},
          {"newton", vec(c.newton)},
          {"kottwitz", c.kottwitz},
          {"levi", levi(c.levi)},
          {"ordinary", c.is_ordinary},
          {"basic", c.is_basic},
          {"adlv_dimension", adlv_dimension(d, mu, c)},
          {"stratum_dimension", newton_stratum_dimension(d, mu, c)}};
}
inline json label(const MVLabel& l) {
  return {{"lambda", vec(l.lambda)}, {"epsilon", l.epsilon},           {"nu_b", vec(l.nu_b)},
          {"tau_b", vec(l.tau_b)},   {"orbit_period", l.orbit_period}, {"certificate", l.certificate}};
}
inline json congruence_factor(const CongruenceFactor& cf) {
  json conj = json::array();
  for (const auto& f : cf.conjugate_factors) conj.push_back(orbit_factor(f));
  return {{"m", cf.m},
          {"n", cf.n},
          {"lambda", vec(cf.lambda)},
          {"beta", vec(cf.beta)},
          {"beta_adjusted", cf.beta_adjusted},
          {"beta_norm", vec(cf.beta_norm)},
          {"exponent", cf.exponent},
          {"h_prime", cf.h_prime.to_json()},
          {"h_prime_text", cf.h_prime.to_string()},
          {"h_full", cf.h_full.to_json()},
          {"h_full_text", cf.h_full.to_string()},
          {"conjugate_factors", conj},
          {"levi", levi(cf.levi)}};
}

}  // namespace json_io

/// Replaces p by a number, keeping the polynomial shape.
inline HeckePolynomial specialize_polynomial(const HeckePolynomial& h, const Integer& p) {
  std::vector<TorusAlgebraElement> v;
  for (const auto& c : h.coefficients()) {
    TorusAlgebraElement e(c.rank());
    const auto sc = c.specialize(p);
    for (const auto& [nu, q] : sc.terms())
      e += TorusAlgebraElement::basis(nu, LaurentP::monomial(q, 0));
    v.push_back(e);
  }
  return v.empty() ? HeckePolynomial(h.rank()) : HeckePolynomial(std::move(v));
}

namespace detail {

struct Loaded {
  BasedRootDatum raw;
  Cocharacter mu;
  std::optional<int> declared_n;
};

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline Loaded load_input(const RunConfig& cfg) {
  if (cfg.preset.has_value() == cfg.config_path.has_value())
    throw InputError("exactly one of --preset and --config is required");
  Loaded l;
  if (cfg.preset) {
    try {
      auto p = presets::by_name(*cfg.preset);
      l.raw = p.datum;
      l.mu = p.mu;
    } catch (const std::invalid_argument& e) {
      std::string names;
      for (const auto& [k, v] : presets::catalog()) names += (names.empty() ? "" : ", ") + k;
      throw InputError(std::string(e.what()) + " (known: " + names + ")");
    }
  } else {
    try {
      auto c = load_config(*cfg.config_path);
      l.raw = c.datum;
      l.declared_n = c.reflex_degree;
      if (c.mu) l.mu = *c.mu;
    } catch (const ConfigError& e) {
      throw InputError(*cfg.config_path + ": " + e.what());
    }
  }
  if (cfg.mu) {
    try {
      l.mu = parse_cocharacter(*cfg.mu);
    } catch (const std::invalid_argument& e) {
      throw InputError(std::string("--mu: ") + e.what());
    }
  }
  if (cfg.specialize_p && !is_prime(*cfg.specialize_p))
    throw InputError("--specialize-p " + std::to_string(*cfg.specialize_p) + " is not a prime");
  return l;
}

inline nlohmann::json datum_echo(const RootDatum& d, const Cocharacter& mu, int n) {
  using nlohmann::json;
  json roots = json::array(), coroots = json::array();
  for (const auto& a : d.simple_roots()) roots.push_back(a.coords());
  for (const auto& c : d.simple_coroots()) coroots.push_back(c.coords());
  return {{"name", d.name()},
          {"rank", d.rank()},
          {"simple_roots", roots},
          {"simple_coroots", coroots},
          {"sigma", d.sigma().to_rows()},
          {"mu", mu.coords()},
          {"reflex_degree", n},
          {"weyl_order", d.weyl_group().size()},
          {"sigma_fixed_weyl_order", d.sigma_fixed_weyl_group().size()},
          {"sigma_order", d.sigma_order()},
          {"two_rho", d.two_rho().coords()}};
}

inline std::string mark(bool ok) { return ok ? "ok  " : "FAIL"; }

inline void print_checks(std::ostream& out, const std::vector<CheckItem>& checks) {
  if (checks.empty()) return;
  out << "checks:\n";
  for (const auto& c : checks)
    out << "  [" << mark(c.passed) << "] " << c.name << (c.detail.empty() ? "" : ": " + c.detail)
        << "\n";
}

inline std::string qclass(const QuotientClass& q) {
  std::string s = "[";
  for (std::size_t i = 0; i < q.size(); ++i) s += (i ? "," : "") + std::to_string(q[i]);
  return s + "]";
}

inline std::vector<CheckItem> class_checks(const RootDatum& d, const Cocharacter& mu,
                                           const std::vector<SigmaClass>& classes,
                                           const RunConfig& cfg) {
  std::vector<CheckItem> checks;
  const auto ctx = make_class_context(d, mu, cfg.convention);
  bool membership = true;
  for (const auto& c : classes)
    if (!in_b_g_upsilon(ctx, c.tau_sigma_lift) || !in_b_g_upsilon(ctx, c.tau)) membership = false;
  checks.push_back({"every class has kappa = upsilon and newton <= upsilon-bar", membership, ""});
  const auto ords = std::count_if(classes.begin(), classes.end(), [](auto& c) { return c.is_ordinary; });
  bool maximal = ords == 1;
  for (const auto& c : classes)
    if (!newton_leq(d, c.newton, ctx.newton_ups)) maximal = false;
  checks.push_back({"unique ordinary class, maximal in the order", maximal,
                    std::to_string(ords) + " ordinary"});
  auto via_orbit = unramified_classes_from_orbit(d, mu, cfg.convention);
  bool same = via_orbit.size() == classes.size();
  for (std::size_t i = 0; same && i < classes.size(); ++i)
    same = via_orbit[i].tau_sigma == classes[i].tau_sigma;
  checks.push_back({"box enumeration agrees with the classes of W.upsilon", same,
                    std::to_string(via_orbit.size()) + " via orbit"});
  EnumerationOptions dbl;
  dbl.convention = cfg.convention;
  dbl.box_scale = 2;
  dbl.threads = cfg.threads;
  auto doubled = enumerate_unramified(d, mu, dbl);
  same = doubled.size() == classes.size();
  for (std::size_t i = 0; same && i < classes.size(); ++i)
    same = doubled[i].tau_sigma == classes[i].tau_sigma;
  checks.push_back({"doubling the box bound changes nothing", same, ""});
  bool dims = true;
  const auto two_rho_mu = to_int64(2 * d.pair_rho(mu));
  for (const auto& c : classes) {
    auto a = adlv_dimension(d, mu, c), s = newton_stratum_dimension(d, mu, c);
    if (a < 0 || s < 0 || a + s != two_rho_mu || (c.is_ordinary && a != 0)) dims = false;
  }
  checks.push_back({"dimensions are nonnegative, sum to 2<rho,mu>, ordinary ADLV is 0", dims,
                    "2<rho,mu> = " + std::to_string(two_rho_mu)});
  return checks;
}

}  // namespace detail

/// Executes one subcommand; returns the process exit status.
inline int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  using nlohmann::json;
  using namespace detail;
  static const std::set<std::string> commands = {"hecke", "bgu", "adlv", "hn", "congruence",
                                                 "validate"};
  if (!commands.count(cfg.command)) {
    err << "error: unknown command '" << cfg.command << "'\n";
    return kExitInputError;
  }
  Loaded in;
  try {
    in = load_input(cfg);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }

  json doc;
  doc["command"] = cfg.command;
  doc["convention"] = to_string(cfg.convention);
  std::vector<CheckItem> checks;

  if (cfg.command == "validate") {
    auto rep = validate(in.raw);
    json v = {{"valid", rep.valid}, {"diagnostic", rep.diagnostic}};
    if (rep.valid) {
      v["weyl_order"] = rep.weyl_order;
      v["sigma_order"] = rep.sigma_order;
    }
    checks.push_back({"datum is a valid based root datum with finite sigma", rep.valid,
                      rep.valid ? "" : rep.diagnostic});
    if (rep.valid && in.mu.size() != 0) {
      RootDatum d(in.raw);
      if (in.mu.size() == d.rank()) {
        const int n = reflex_degree(d, in.mu);
        v["reflex_degree"] = n;
        v["mu_minuscule"] = d.is_minuscule(in.mu);
        if (in.declared_n)
          checks.push_back({"declared n matches the computed reflex degree", *in.declared_n == n,
                            "declared " + std::to_string(*in.declared_n) + ", computed " +
                                std::to_string(n)});
      } else {
        checks.push_back({"mu has length rank", false, "length " + std::to_string(in.mu.size())});
      }
    }
    doc["objects"] = {{"validation", v}};
    doc["checks"] = json_io::checks(checks);
    doc["status"] = all_passed(checks) ? "ok" : "failed";
    if (cfg.machine) {
      out << doc.dump(2) << "\n";
    } else if (rep.valid) {
      out << "valid: |W| = " << rep.weyl_order << ", |sigma| = " << rep.sigma_order << "\n";
      if (v.contains("reflex_degree"))
        out << "reflex degree n = " << v["reflex_degree"].get<int>()
            << (v["mu_minuscule"].get<bool>() ? ", mu minuscule" : ", mu not minuscule") << "\n";
      print_checks(out, checks);
    } else {
      err << "invalid datum: " << rep.diagnostic << "\n";
    }
    return all_passed(checks) ? kExitOk : kExitCheckFailed;
  }

  std::optional<RootDatum> dd;
  try {
    dd.emplace(in.raw);
  } catch (const DatumError& e) {
    err << "error: invalid datum: " << e.what() << "\n";
    return kExitInputError;
  }
  const RootDatum& d = *dd;
  const Cocharacter mu = in.mu;
  if (mu.size() != d.rank()) {
    err << "error: mu " << mu.to_string() << " has length " << mu.size() << ", expected rank "
        << d.rank() << "\n";
    return kExitInputError;
  }
  if (!d.is_minuscule(mu)) {
    err << "error: mu " << mu.to_string() << " is not minuscule\n";
    return kExitInputError;
  }
  const int n = reflex_degree(d, mu);
  if (in.declared_n && *in.declared_n != n) {
    err << "error: declared n = " << *in.declared_n << " is inconsistent with the reflex degree "
        << n << "\n";
    return kExitInputError;
  }
  doc["datum"] = datum_echo(d, mu, n);
  json objects = json::object();
  std::ostringstream text;
  text << "datum " << (d.name().empty() ? "(custom)" : d.name()) << ", rank " << d.rank()
       << ", mu = " << mu << ", n = " << n << ", |W| = " << d.weyl_group().size()
       << ", |W^sigma| = " << d.sigma_fixed_weyl_group().size() << "\n";

  try {
    const auto classes_for = [&]() {
      EnumerationOptions opt;
      opt.convention = cfg.convention;
      opt.threads = cfg.threads;
      return enumerate_unramified(d, mu, opt);
    };

    if (cfg.command == "hecke") {
      const auto factors = orbit_factors(d, mu);
      const auto h = product(factors, d.rank());
      objects["hecke_polynomial"] = h.to_json();
      objects["hecke_polynomial_text"] = h.to_string();
      json fs = json::array();
      for (const auto& f : factors) fs.push_back(json_io::orbit_factor(f));
      objects["orbit_factors"] = fs;
      text << "H(x) = " << h.to_string() << "\n";
      if (cfg.factors) {
        text << "orbit factors:\n";
        for (const auto& f : factors)
          text << "  " << f.factor.to_string() << "    rep " << f.rep << ", orbit size " << f.size
               << ", exponent " << f.exponent << ", norm " << f.norm << "\n";
      }
      if (cfg.specialize_p) {
        auto hs = specialize_polynomial(h, *cfg.specialize_p);
        objects["specialized_p"] = *cfg.specialize_p;
        objects["specialized"] = hs.to_json();
        objects["specialized_text"] = hs.to_string();
        text << "at p = " << *cfg.specialize_p << ": " << hs.to_string() << "\n";
      }
      const std::size_t orbit = weyl_orbit(d, Cocharacter(-mu)).size();
      checks.push_back({"monic", h.is_monic(), ""});
      checks.push_back({"degree equals |W mu^{-1}|", h.degree() == static_cast<long>(orbit),
                        "degree " + std::to_string(h.degree()) + ", orbit " + std::to_string(orbit)});
      auto inv = is_dot_invariant(d, h);
      checks.push_back({"coefficients are W^sigma dot-invariant", inv.invariant,
                        invariance_detail(inv)});
      auto b = dominant_factor_check(d, mu);
      checks.push_back({"dominant-weight factor " + b.factor.to_string() + " divides H", b.ok(),
                        "Levi " + levi_to_string(b.levi)});
    } else if (cfg.command == "bgu") {
      const auto classes = classes_for();
      json cs = json::array();
      for (const auto& c : classes) cs.push_back(json_io::sigma_class(d, mu, c));
      objects["upsilon"] = json_io::vec(upsilon(d, mu, cfg.convention));
      objects["classes"] = cs;
      objects["count"] = classes.size();
      text << "upsilon = " << upsilon(d, mu, cfg.convention) << "\n";
      text << classes.size() << " unramified class" << (classes.size() == 1 ? "" : "es")
           << " in B(G, upsilon)\n";
      if (cfg.list) {
        for (std::size_t i = 0; i < classes.size(); ++i) {
          const auto& c = classes[i];
          text << "class " << i + 1 << (c.is_ordinary ? " (ordinary)" : "")
               << (c.is_basic ? " (basic)" : "") << ":\n"
               << "  tau        " << c.tau << "\n"
               << "  tau_sigma  " << qclass(c.tau_sigma) << "  (lift " << c.tau_sigma_lift << ")\n"
               << "  newton     " << c.newton << "\n"
               << "  kottwitz   " << qclass(c.kottwitz) << "\n"
               << "  levi       " << levi_to_string(c.levi) << "\n"
               << "  dims       adlv " << adlv_dimension(d, mu, c) << ", stratum "
               << newton_stratum_dimension(d, mu, c) << "\n";
        }
      }
      checks = class_checks(d, mu, classes, cfg);
    } else if (cfg.command == "adlv") {
      const auto classes = classes_for();
      std::vector<std::size_t> chosen;
      if (!cfg.class_selector) {
        for (std::size_t i = 0; i < classes.size(); ++i) chosen.push_back(i);
      } else if (*cfg.class_selector == "ordinary" || *cfg.class_selector == "basic") {
        const bool want_ord = *cfg.class_selector == "ordinary";
        for (std::size_t i = 0; i < classes.size(); ++i)
          if (want_ord ? classes[i].is_ordinary : classes[i].is_basic) chosen.push_back(i);
        if (chosen.empty()) {
          err << "error: no " << *cfg.class_selector << " unramified class for this datum\n";
          return kExitInputError;
        }
      } else {
        std::size_t idx = 0;
        try {
          idx = std::stoul(*cfg.class_selector);
        } catch (const std::exception&) {
          idx = 0;
        }
        if (idx == 0 || idx > classes.size()) {
          err << "error: --class must be basic, ordinary or an index in 1.." << classes.size()
              << "\n";
          return kExitInputError;
        }
        chosen.push_back(idx - 1);
      }
      json cs = json::array();
      bool labels_ok = true, dims_ok = true;
      for (auto i : chosen) {
        const auto& c = classes[i];
        json cj = json_io::sigma_class(d, mu, c);
        cj["index"] = i + 1;
        const auto a = adlv_dimension(d, mu, c), s = newton_stratum_dimension(d, mu, c);
        if (a < 0 || s < 0) dims_ok = false;
        text << "class " << i + 1 << (c.is_ordinary ? " (ordinary)" : "")
             << (c.is_basic ? " (basic)" : "") << ": tau " << c.tau << ", newton " << c.newton
             << "\n  dim X_mu(b) = " << a << ", dim Newton stratum = " << s << "\n";
        if (cfg.mv) {
          const auto labels = mv_set(d, mu, c, cfg.convention);
          const auto cc = component_count(labels);
          json ls = json::array();
          for (const auto& l : labels) {
            ls.push_back(json_io::label(l));
            if (!check_label(d, l, n).ok()) labels_ok = false;
          }
          cj["mv_labels"] = ls;
          cj["mv_count"] = cc.mv_count;
          cj["m"] = cc.m;
          cj["hyperspecial_factor"] = cc.hyperspecial_factor;
          text << "  " << cc.mv_count << " MV label" << (cc.mv_count == 1 ? "" : "s") << ", m = "
               << cc.m << " (times " << cc.hyperspecial_factor << ")\n";
          for (const auto& l : labels) {
            text << "    lambda " << l.lambda << "  eps (";
            for (std::size_t k = 0; k < l.epsilon.size(); ++k)
              text << (k ? "," : "") << l.epsilon[k];
            text << ")  nu_b " << l.nu_b << "  tau_b " << l.tau_b << "  period "
                 << l.orbit_period << "\n";
          }
        }
        cs.push_back(cj);
      }
      objects["classes"] = cs;
      checks.push_back({"dimensions are nonnegative integers", dims_ok, ""});
      if (cfg.mv)
        checks.push_back({"every MV label satisfies the epsilon, dominance, orbit-equality and "
                          "central-shift properties",
                          labels_ok, ""});
    } else if (cfg.command == "hn") {
      const bool proper_only = !cfg.inclusive;
      const auto classes = classes_for();
      json rows = json::array();
      for (std::size_t i = 0; i < classes.size(); ++i) {
        const auto& c = classes[i];
        auto r = hn_decomposable(d, mu, c, c.levi, proper_only, cfg.convention);
        rows.push_back({{"index", i + 1},
                        {"levi", json_io::levi(c.levi)},
                        {"verdict", to_string(r.verdict)},
                        {"class_tau", r.class_tau},
                        {"class_upsilon", r.class_upsilon},
                        {"ordinary", c.is_ordinary}});
        text << "class " << i + 1 << (c.is_ordinary ? " (ordinary)" : "") << ": M_[b] = "
             << levi_to_string(c.levi) << ", kappa_M(tau) = " << qclass(r.class_tau)
             << ", upsilon class " << qclass(r.class_upsilon) << " -> " << to_string(r.verdict)
             << "\n";
      }
      objects["hn"] = rows;
      if (cfg.check_condition2) {
        auto rep = check_condition2(d, mu, cfg.convention);
        objects["condition2"] = {{"holds_inclusive", rep.holds_inclusive},
                                 {"holds_proper", rep.holds_proper},
                                 {"split", rep.split}};
        text << "Hodge-Newton decomposability for M_[b] over all unramified classes:\n"
             << "  counting M = G as decomposable: " << (rep.holds_inclusive ? "holds" : "fails")
             << "\n  requiring proper M:            " << (rep.holds_proper ? "holds" : "fails")
             << "\n";
        if (rep.split) text << "  (split datum: only the ordinary class is unramified)\n";
      }
      checks = class_checks(d, mu, classes, cfg);
    } else if (cfg.command == "congruence") {
      const auto h = hecke_polynomial(d, mu);
      const auto classes = classes_for();
      objects["hecke_polynomial_text"] = h.to_string();
      text << "H(x) = " << h.to_string() << "\n";
      json cfs = json::array();
      for (std::size_t i = 0; i < classes.size(); ++i) {
        auto cf = build_congruence_factor(d, mu, classes[i], cfg.convention);
        auto rep = verify_divisibility(d, h, cf);
        json j = json_io::congruence_factor(cf);
        j["index"] = i + 1;
        j["checks"] = json_io::checks(rep.checks);
        cfs.push_back(j);
        text << "class " << i + 1 << (classes[i].is_ordinary ? " (ordinary)" : "") << ": m = "
             << cf.m << ", beta = " << cf.beta << "\n  H'_[b] = " << cf.h_prime.to_string()
             << "\n  H_[b]  = " << cf.h_full.to_string() << "\n";
        for (auto c : rep.checks) {
          c.name = "class " + std::to_string(i + 1) + ": " + c.name;
          checks.push_back(c);
        }
      }
      objects["congruence_factors"] = cfs;
      if (cfg.ledger) {
        auto led = induction_ledger(d, mu, cfg.convention);
        json rows = json::array();
        text << "induction ledger (" << led.rows.size() << " row"
             << (led.rows.size() == 1 ? "" : "s") << ", newton-descending):\n";
        for (std::size_t i = 0; i < led.rows.size(); ++i) {
          const auto& r = led.rows[i];
          rows.push_back({{"index", i + 1},
                          {"newton", json_io::vec(r.cls.newton)},
                          {"h_full", r.factor.h_full.to_string()},
                          {"cofactor", r.cofactor.to_string()},
                          {"divides", r.divides},
                          {"cofactor_invariant", r.cofactor_invariant},
                          {"shared_factors", r.shared_with}});
          text << "  " << i + 1 << ". newton " << r.cls.newton << "\n     H = ("
               << r.factor.h_full.to_string() << ") * (" << r.cofactor.to_string() << ")"
               << "\n     cofactor invariant: " << (r.cofactor_invariant ? "yes" : "no") << "\n";
          for (const auto& s : r.shared_with) text << "     shares orbit factor " << s << "\n";
        }
        objects["ledger"] = {{"rows", rows},
                             {"shared_factors", led.shared_factors},
                             {"note", led.scope_note}};
        text << "  note: " << led.scope_note << "\n";
        checks.push_back({"ledger: every H_[b] divides H with invariant cofactor", led.ok(), ""});
      }
      if (cfg.check_ordinary) {
        auto oc = ordinary_congruence_check(d, mu);
        objects["ordinary"] = {{"frobenius", oc.frobenius.to_string()},
                               {"value", oc.value.to_string()}};
        text << "H(" << oc.frobenius.to_string() << ") = " << oc.value.to_string() << "\n";
        for (const auto& c : oc.checks) checks.push_back(c);
      }
    }
  } catch (const PeriodGapError& e) {
    checks.push_back({"period gap", false, e.what()});
  } catch (const std::logic_error& e) {
    checks.push_back({"internal consistency", false, e.what()});
  }

  doc["objects"] = objects;
  doc["checks"] = json_io::checks(checks);
  doc["status"] = all_passed(checks) ? "ok" : "failed";
  if (cfg.machine) {
    out << doc.dump(2) << "\n";
  } else {
    out << text.str();
    print_checks(out, checks);
  }
  return all_passed(checks) ? kExitOk : kExitCheckFailed;
}

}  // namespace hecke
