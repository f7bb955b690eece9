#pragma once

#include "hecke/root_datum.hpp"

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace hecke {

/// A datum together with its default cocharacter.
struct Preset {
  BasedRootDatum datum;
  Cocharacter mu;
  // |W mu^{-1}|, recorded independently of the orbit code
  std::size_t expected_orbit_size = 0;
  bool split = false;
};

namespace presets {

inline Preset gl(std::size_t n) {
  Preset p;
  p.datum.rank = n;
  p.datum.name = "gl" + std::to_string(n);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    Character a(n);
    a[i] = 1;
    a[i + 1] = -1;
    p.datum.simple_roots.push_back(a);
    p.datum.simple_coroots.push_back(Cocharacter(a.coords()));
  }
  p.datum.sigma = IntMatrix::identity(n);
  p.mu = Cocharacter(n);
  p.mu[0] = 1;
  p.expected_orbit_size = n;
  p.split = true;
  return p;
}

/// GSp_{2g}: coordinates (a_1..a_g, c) for t -> diag(t^{a_i}, t^{c - a_i}).
inline Preset gsp(std::size_t g) {
  const std::size_t n = g + 1;
  Preset p;
  p.datum.rank = n;
  p.datum.name = "gsp" + std::to_string(2 * g);
  for (std::size_t i = 0; i + 1 < g; ++i) {
    Character a(n);
    a[i] = 1;
    a[i + 1] = -1;
    p.datum.simple_roots.push_back(a);
    p.datum.simple_coroots.push_back(Cocharacter(a.coords()));
  }
  Character longroot(n);
  longroot[g - 1] = 2;
  longroot[g] = -1;
  p.datum.simple_roots.push_back(longroot);
  Cocharacter shortcoroot(n);
  shortcoroot[g - 1] = 1;
  p.datum.simple_coroots.push_back(shortcoroot);
  p.datum.sigma = IntMatrix::identity(n);
  p.mu = Cocharacter(std::vector<std::int64_t>(n, 1));
  p.expected_orbit_size = std::size_t{1} << g;
  p.split = true;
  return p;
}

/// Res_{F/Q} GL_2 for F unramified of degree g at p: g blocks of GL_2, sigma
/// moves block k to block k+1 cyclically.
inline Preset res_gl2_inert(std::size_t g) {
  const std::size_t n = 2 * g;
  Preset p;
  p.datum.rank = n;
  p.datum.name = "res_gl2_inert_g" + std::to_string(g);
  for (std::size_t k = 0; k < g; ++k) {
    Character a(n);
    a[2 * k] = 1;
    a[2 * k + 1] = -1;
    p.datum.simple_roots.push_back(a);
    p.datum.simple_coroots.push_back(Cocharacter(a.coords()));
  }
  IntMatrix s(n, n);
  for (std::size_t k = 0; k < g; ++k) {
    const std::size_t to = (k + 1) % g;
    s(2 * to, 2 * k) = 1;
    s(2 * to + 1, 2 * k + 1) = 1;
  }
  p.datum.sigma = s;
  p.mu = Cocharacter(n);
  for (std::size_t k = 0; k < g; ++k) p.mu[2 * k] = 1;
  p.expected_orbit_size = std::size_t{1} << g;
  p.split = g == 1;
  return p;
}

/// Quasi-split unitary group in three variables, split over the unramified
/// quadratic extension: sigma(a1,a2,a3) = (-a3,-a2,-a1).
inline Preset u3_quasisplit() {
  Preset p = gl(3);
  p.datum.name = "u3_quasisplit";
  p.datum.sigma = IntMatrix{{0, 0, -1}, {0, -1, 0}, {-1, 0, 0}};
  p.split = false;
  return p;
}

inline const std::map<std::string, std::function<Preset()>>& catalog() {
  static const std::map<std::string, std::function<Preset()>> c = {
      {"gl2", [] { return gl(2); }},
      {"gl3", [] { return gl(3); }},
      {"gl4", [] { return gl(4); }},
      {"gsp4", [] { return gsp(2); }},
      {"gsp6", [] { return gsp(3); }},
      {"res_gl2_inert_g2", [] { return res_gl2_inert(2); }},
      {"res_gl2_inert_g3", [] { return res_gl2_inert(3); }},
      {"u3_quasisplit", [] { return u3_quasisplit(); }},
      {"hilbert_g2", [] { return res_gl2_inert(2); }},
      {"hilbert_g3", [] { return res_gl2_inert(3); }},
  };
  return c;
}

/// The eight canonical names (aliases excluded).
inline std::vector<std::string> canonical_names() {
  return {"gl2",  "gl3",  "gl4", "gsp4", "gsp6", "res_gl2_inert_g2", "res_gl2_inert_g3",
          "u3_quasisplit"};
}

inline Preset by_name(const std::string& name) {
  auto it = catalog().find(name);
  if (it == catalog().end()) throw std::invalid_argument("unknown preset '" + name + "'");
  return it->second();
}

}  // namespace presets
}  // namespace hecke
