// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include "oracles.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

using namespace hecke;

namespace {
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string note;
  void fail(const std::string& why) {
    if (pass) note = why;
    pass = false;
  }
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Loaded {
  std::string name;
  Preset p;
  RootDatum d;
  std::vector<SigmaClass> cls;
};

std::vector<Loaded> load_all() {
  std::vector<Loaded> v;
  for (const auto& name : presets::canonical_names()) {
    auto p = presets::by_name(name);
    RootDatum d(p.datum);
    auto cls = enumerate_unramified(d, p.mu);
    v.push_back({name, p, d, cls});
  }
  return v;
}

const Loaded& find(const std::vector<Loaded>& all, const std::string& name) {
  for (const auto& l : all)
    if (l.name == name) return l;
  throw std::runtime_error("no preset " + name);
}

TorusAlgebraElement h(std::vector<std::int64_t> nu, std::int64_t pexp = 0) {
  return TorusAlgebraElement::basis(Cocharacter(std::move(nu)), LaurentP::p_power(pexp));
}

Outcome gl2_anchor() {
  Outcome o;
  const auto t0 = Clock::now();
  RunConfig cfg;
  cfg.command = "hecke";
  cfg.preset = "gl2";
  cfg.machine = true;
  std::ostringstream out, err;
  const int code = run(cfg, out, err);
  if (code != 0) o.fail("exit status " + std::to_string(code));
  auto doc = nlohmann::json::parse(out.str());
  auto H = HeckePolynomial::from_json(doc["objects"]["hecke_polynomial"]);
  const auto expected = HeckePolynomial::binomial(1, h({0, -1})) *
                        HeckePolynomial::binomial(1, h({-1, 0}, 1));
  if (H != expected) o.fail("H = " + H.to_string());
  if (!H.is_monic() || H.degree() != 2) o.fail("not monic of degree 2");
  const auto T = h({0, -1}) + h({-1, 0}, 1);
  const auto pp = h({-1, -1}, 1);
  if (H.coefficient(1) != -T || H.coefficient(0) != pp) o.fail("coefficients differ from x^2 - T x + p<p>");
  const double s = seconds_since(t0);
  if (s >= 1.0) o.fail("took " + std::to_string(s) + " s");
  o.note += (o.note.empty() ? "" : "; ") + std::string("H = ") + H.to_string();
  return o;
}

Outcome dot_invariance(const std::vector<Loaded>& all) {
  Outcome o;
  const auto t0 = Clock::now();
  for (const auto& l : all) {
    const auto H = hecke_polynomial(l.d, l.p.mu);
    // full group, every coefficient
    for (const auto& w : l.d.sigma_fixed_weyl_group())
      for (std::size_t k = 0; k < H.coefficients().size(); ++k)
        if (dot_act(l.d.two_rho(), w.matrix, H.coefficients()[k]) != H.coefficients()[k])
          o.fail(l.name + ": x^" + std::to_string(k) + " moved by " + word_to_string(w.word));
  }
  const double s = seconds_since(t0);
  if (s >= 10.0) o.fail("took " + std::to_string(s) + " s");
  if (o.pass) o.note = std::to_string(all.size()) + " presets";
  return o;
}

Outcome degree_law(const std::vector<Loaded>& all) {
  Outcome o;
  for (const auto& l : all) {
    const auto H = hecke_polynomial(l.d, l.p.mu);
    const auto orbit = weyl_orbit(l.d, Cocharacter(-l.p.mu));
    auto od = oracle::from_raw(l.p.datum);
    const auto ref = oracle::orbit(od, (-l.p.mu).coords());
    if (H.degree() != static_cast<long>(orbit.size()) || orbit.size() != ref.size() ||
        orbit.size() != l.p.expected_orbit_size)
      o.fail(l.name + ": degree " + std::to_string(H.degree()) + ", orbit " +
             std::to_string(ref.size()));
  }
  return o;
}

Outcome census(const std::vector<Loaded>& all) {
  Outcome o;
  const std::map<std::string, std::size_t> expected = {
      {"gl2", 1}, {"gl3", 1}, {"gl4", 1}, {"gsp4", 1}, {"gsp6", 1},
      {"res_gl2_inert_g2", 2}, {"res_gl2_inert_g3", 2}};
  for (const auto& [name, count] : expected) {
    const auto& l = find(all, name);
    if (l.cls.size() != count)
      o.fail(name + ": " + std::to_string(l.cls.size()) + " classes, expected " +
             std::to_string(count));
  }
  for (const auto& l : all)
    if (l.p.split && l.cls.size() != 1) o.fail(l.name + " is split but has several classes");
  return o;
}

Outcome mv_counts(const std::vector<Loaded>& all) {
  Outcome o;
  for (const auto& [name, g] : std::vector<std::pair<std::string, int>>{
           {"res_gl2_inert_g2", 2}, {"res_gl2_inert_g3", 3}}) {
    const auto& l = find(all, name);
    for (const auto& c : l.cls) {
      if (c.is_ordinary) continue;
      const auto labels = mv_set(l.d, l.p.mu, c);
      if (static_cast<std::int64_t>(labels.size()) != oracle::binom(g, 1) ||
          component_count(labels).m != static_cast<std::size_t>(g))
        o.fail(name + ": " + std::to_string(labels.size()) + " labels");
    }
  }
  return o;
}

Outcome dimensions(const std::vector<Loaded>& all) {
  Outcome o;
  for (const auto& l : all) {
    const Rational total = 2 * l.d.pair_rho(l.p.mu);
    for (const auto& c : l.cls) {
      const auto a = adlv_dimension(l.d, l.p.mu, c);
      const auto b = newton_stratum_dimension(l.d, l.p.mu, c);
      if (a < 0 || b < 0) o.fail(l.name + ": negative dimension");
      if (Rational(a + b) != total) o.fail(l.name + ": sum " + std::to_string(a + b));
      if (c.is_ordinary && a != 0) o.fail(l.name + ": ordinary adlv dimension " + std::to_string(a));
    }
  }
  return o;
}

Outcome lemma_suite(const std::vector<Loaded>& all) {
  Outcome o;
  std::size_t labels = 0, searched = 0;
  for (const auto& l : all) {
    const int n = reflex_degree(l.d, l.p.mu);
    for (const auto& c : l.cls)
      for (const auto& lab : mv_set(l.d, l.p.mu, c)) {
        ++labels;
        auto chk = check_label(l.d, lab, n);
        if (!chk.ok() || !lab.certificate) o.fail(l.name + ": label " + lab.lambda.to_string());
      }
    auto od = oracle::from_raw(l.p.datum);
    const std::int64_t box = l.d.rank() >= 6 ? 2 : 3;
    for (const auto& lam : weyl_orbit(l.d, upsilon(l.d, l.p.mu))) {
      const auto eps = epsilon_values(l.d, lam);
      auto ref = oracle::minimal_nu(od, lam.coords(), eps, box);
      ++searched;
      if (!ref.found) {
        bool threw = false;
        try {
          minimal_nu(l.d, lam, eps);
        } catch (const std::logic_error&) {
          threw = true;
        }
        if (!threw) o.fail(l.name + ": box search empty but minimal_nu returned at " + lam.to_string());
        continue;
      }
      auto mn = minimal_nu(l.d, lam, eps);
      if (mn.pairings != ref.pairings) o.fail(l.name + ": minimal_nu at " + lam.to_string());
    }
  }
  if (o.pass) o.note = std::to_string(labels) + " labels, " + std::to_string(searched) + " box searches";
  return o;
}

Outcome congruence(const std::vector<Loaded>& all) {
  Outcome o;
  const auto t0 = Clock::now();
  std::size_t rows = 0;
  for (const auto& l : all) {
    const auto H = hecke_polynomial(l.d, l.p.mu);
    for (const auto& c : l.cls) {
      ++rows;
      try {
        auto cf = build_congruence_factor(l.d, l.p.mu, c);
        auto rep = verify_divisibility(l.d, H, cf);
        for (const auto& chk : rep.checks)
          if (!chk.passed) o.fail(l.name + ": " + chk.name + ": " + chk.detail);
      } catch (const std::exception& e) {
        o.fail(l.name + ": " + e.what());
      }
    }
    auto oc = ordinary_congruence_check(l.d, l.p.mu);
    for (const auto& chk : oc.checks)
      if (!chk.passed) o.fail(l.name + ": " + chk.name + ": " + chk.detail);
  }
  const double s = seconds_since(t0);
  if (s >= 30.0) o.fail("took " + std::to_string(s) + " s");
  if (o.pass) o.note = std::to_string(rows) + " classes";
  return o;
}

Outcome properties(const std::vector<Loaded>& all) {
  Outcome o;
  constexpr int kCases = 1000;
  oracle::Gen g(2024);
  auto pick = [&]() -> const Loaded& { return all[static_cast<std::size_t>(g.uniform(0, static_cast<std::int64_t>(all.size()) - 1))]; };
  int bad[5] = {0, 0, 0, 0, 0};
  for (int k = 0; k < kCases; ++k) {
    const auto& l = pick();
    const auto& w1 = g.pick(l.d.weyl_group());
    const auto& w2 = g.pick(l.d.weyl_group());
    const auto e = g.element(l.d.rank());
    if (dot_act(l.d.two_rho(), w1.matrix, dot_act(l.d.two_rho(), w2.matrix, e)) !=
        dot_act(l.d.two_rho(), w1.matrix * w2.matrix, e))
      ++bad[0];
  }
  for (int k = 0; k < kCases; ++k) {
    const auto r = static_cast<std::size_t>(g.uniform(1, 4));
    const auto a = g.element(r), b = g.element(r), c = g.element(r);
    if ((a * b) * c != a * (b * c) || a * (b + c) != a * b + a * c || a * b != b * a) ++bad[1];
    const Integer p = g.pick(std::vector<int>{2, 3, 5, 7});
    if (!((a + b).specialize(p) == a.specialize(p) + b.specialize(p)) ||
        !((a * b).specialize(p) == a.specialize(p) * b.specialize(p)))
      ++bad[2];
  }
  EnumerationOptions twice;
  twice.box_scale = 2;
  for (int k = 0; k < kCases; ++k) {
    const auto& l = pick();
    Cocharacter mu = g.cochar(l.d.rank(), 1);
    if (!l.d.is_minuscule(mu)) mu = l.p.mu;
    auto a = enumerate_unramified(l.d, mu);
    auto b = enumerate_unramified(l.d, mu, twice);
    bool same = a.size() == b.size();
    for (std::size_t i = 0; same && i < a.size(); ++i) same = a[i].tau_sigma == b[i].tau_sigma;
    if (!same) ++bad[3];
  }
  for (int k = 0; k < kCases; ++k) {
    const auto f = g.polynomial(static_cast<std::size_t>(g.uniform(1, 5)));
    const std::string s = f.to_json().dump();
    if (HeckePolynomial::from_json(f.to_json()) != f ||
        HeckePolynomial::from_json(nlohmann::json::parse(s)).to_json().dump() != s)
      ++bad[4];
  }
  const char* names[5] = {"group law", "ring laws", "specialization", "box saturation",
                          "round-trip"};
  for (int i = 0; i < 5; ++i)
    if (bad[i]) o.fail(std::string(names[i]) + ": " + std::to_string(bad[i]) + " failures");
  if (o.pass) o.note = "5 properties x 1000 cases";
  return o;
}
}  // namespace

int main() {
  const auto all = load_all();
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"GL2 polynomial matches (x - h(0,-1))(x - p h(-1,0))", [] { return gl2_anchor(); }},
      {"coefficients of H are W^sigma dot-invariant on all presets", [&] { return dot_invariance(all); }},
      {"deg H = |W mu^{-1}| on all presets", [&] { return degree_law(all); }},
      {"unramified class census", [&] { return census(all); }},
      {"MV label counts for Hilbert g = 2, 3", [&] { return mv_counts(all); }},
      {"dimension formulas", [&] { return dimensions(all); }},
      {"MV label lemma suite and minimal_nu box search", [&] { return lemma_suite(all); }},
      {"congruence factors divide H with invariant quotients", [&] { return congruence(all); }},
      {"randomized property tests", [&] { return properties(all); }},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    const auto t0 = Clock::now();
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double s = seconds_since(t0);
    std::ostringstream line;
    line << (o.pass ? "PASS" : "FAIL") << " criterion " << (i + 1) << ": " << criteria[i].first;
    if (!o.note.empty()) line << " (" << o.note << ")";
    line.precision(3);
    line << std::fixed << " [" << s << " s]";
    std::cout << line.str() << std::endl;
    failures += !o.pass;
  }
  return failures ? 1 : 0;
}
