#pragma once

#include "hecke/isocrystal.hpp"
#include "hecke/lattice.hpp"
#include "hecke/root_datum.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hecke {

/// eps_i = max(0, -<alpha_i, lambda>)
inline std::vector<std::int64_t> epsilon_values(const RootDatum& d, const Cocharacter& lambda) {
  std::vector<std::int64_t> e;
  for (std::size_t i = 0; i < d.semisimple_rank(); ++i)
    e.push_back(std::max<std::int64_t>(0, -d.pair_simple(static_cast<int>(i), lambda)));
  return e;
}

/// sigma-orbits of simple-root indices.
inline std::vector<std::vector<int>> simple_root_orbits(const RootDatum& d) {
  const auto& perm = d.sigma_permutation();
  std::vector<bool> seen(perm.size(), false);
  std::vector<std::vector<int>> out;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    std::vector<int> orbit;
    for (int j = static_cast<int>(i); !seen[j]; j = perm[j]) {
      seen[j] = true;
      orbit.push_back(j);
    }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(orbit);
  }
  return out;
}

struct MinimalNu {
  Cocharacter nu;                      // unique up to X_*(Z_G)
  std::vector<std::int64_t> pairings;  // <alpha_i, nu>
  bool certificate = false;            // each sigma-orbit has an equality c_i = eps_i
  std::int64_t box = 0;                // search bound that succeeded
  bool widened = false;
};

namespace detail {

/// Solves <alpha_i, nu> = c_i for nu.
class PairingLifter {
 public:
  explicit PairingLifter(const RootDatum& d) : solver_(d.semisimple_rank(), columns(d)) {}
  std::optional<Cocharacter> lift(const std::vector<std::int64_t>& c) const {
    auto r = solver_.solve(Cocharacter(c));
    if (!r.member) return std::nullopt;
    return Cocharacter(r.coefficients);
  }

 private:
  static std::vector<Cocharacter> columns(const RootDatum& d) {
    std::vector<Cocharacter> cols;
    for (std::size_t k = 0; k < d.rank(); ++k) {
      Cocharacter col(d.semisimple_rank());
      for (std::size_t i = 0; i < d.semisimple_rank(); ++i) col[i] = d.simple_roots()[i][k];
      cols.push_back(col);
    }
    return cols;
  }
  SublatticeSolver solver_;
};

inline bool nu_feasible(const RootDatum& d, const Cocharacter& lambda,
                        const std::vector<std::int64_t>& eps, const Cocharacter& nu) {
  for (std::size_t i = 0; i < eps.size(); ++i)
    if (d.pair_simple(static_cast<int>(i), nu) < eps[i]) return false;
  return d.is_dominant(Cocharacter(lambda + nu - d.apply_sigma(nu)));
}

}  // namespace detail

/// Minimal dominant nu with lambda + nu - sigma(nu) dominant and <alpha, nu> >= eps_alpha.
inline MinimalNu minimal_nu(const RootDatum& d, const Cocharacter& lambda,
                            const std::vector<std::int64_t>& eps) {
  const std::size_t l = d.semisimple_rank();
  if (eps.size() != l) throw std::invalid_argument("minimal_nu: epsilon has wrong length");
  MinimalNu out;
  if (l == 0) {
    out.nu = Cocharacter(d.rank());
    out.certificate = true;
    return out;
  }
  const detail::PairingLifter lifter(d);
  const std::int64_t max_eps = *std::max_element(eps.begin(), eps.end());
  std::int64_t k = std::max<std::int64_t>(2, max_eps + 1);

  for (int attempt = 0; attempt < 2; ++attempt, k *= 2) {
    std::optional<std::vector<std::int64_t>> cmin;
    std::vector<std::int64_t> c(eps);
    bool done = std::any_of(eps.begin(), eps.end(), [&](auto e) { return e > k; });
    while (!done) {
      if (auto nu = lifter.lift(c); nu && detail::nu_feasible(d, lambda, eps, *nu)) {
        if (!cmin) cmin = c;
        else
          for (std::size_t i = 0; i < l; ++i) (*cmin)[i] = std::min((*cmin)[i], c[i]);
      }
      std::size_t i = 0;
      for (; i < l; ++i) {
        if (++c[i] <= k) break;
        c[i] = eps[i];
      }
      done = i == l;
    }
    if (!cmin) continue;
    auto nu = lifter.lift(*cmin);
    if (!nu || !detail::nu_feasible(d, lambda, eps, *nu))
      throw std::logic_error("componentwise minimum of feasible nu is not feasible for lambda = " +
                             lambda.to_string());
    out.nu = *nu;
    out.pairings = *cmin;
    out.box = k;
    out.widened = attempt > 0;
    out.certificate = true;
    for (const auto& orbit : simple_root_orbits(d))
      if (std::none_of(orbit.begin(), orbit.end(), [&](int i) { return (*cmin)[i] == eps[i]; }))
        out.certificate = false;
    return out;
  }
  throw std::logic_error("no feasible nu within the widened box for lambda = " +
                         lambda.to_string());
}

struct MVLabel {
  Cocharacter lambda;
  std::vector<std::int64_t> epsilon;
  Cocharacter nu_b;
  Cocharacter tau_b;  // lambda + nu_b - sigma(nu_b)
  std::size_t orbit_period = 1;  // smallest k with sigma^{nk} lambda = lambda
  bool certificate = false;
};

inline std::size_t sigma_period(const RootDatum& d, const Cocharacter& x, int step) {
  std::size_t k = 1;
  for (Cocharacter y = d.apply_sigma(x, step); y != x; y = d.apply_sigma(y, step)) ++k;
  return k;
}

inline MVLabel make_label(const RootDatum& d, const Cocharacter& lambda, int n) {
  MVLabel lab;
  lab.lambda = lambda;
  lab.epsilon = epsilon_values(d, lambda);
  auto mn = minimal_nu(d, lambda, lab.epsilon);
  lab.nu_b = mn.nu;
  lab.certificate = mn.certificate;
  lab.tau_b = lambda + mn.nu - d.apply_sigma(mn.nu);
  lab.orbit_period = sigma_period(d, lambda, n);
  return lab;
}

/// {lambda in W.upsilon : lambda - tau in (sigma - 1)X_*(T)}, each with its data.
inline std::vector<MVLabel> mv_set(const RootDatum& d, const Cocharacter& mu,
                                   const SigmaClass& cls,
                                   UpsilonConvention conv = UpsilonConvention::SigmaMuInverse) {
  require_minuscule(d, mu);
  const int n = reflex_degree(d, mu);
  const SublatticeSolver sm1(d.rank(), d.sigma_minus_one());
  std::vector<MVLabel> out;
  auto orbit = weyl_orbit(d, upsilon(d, mu, conv));
  for (auto it = orbit.rbegin(); it != orbit.rend(); ++it)
    if (sm1.solve(Cocharacter(*it - cls.tau)).member) out.push_back(make_label(d, *it, n));
  if (out.empty())
    throw std::logic_error("empty MV set for class with tau = " + cls.tau.to_string());
  return out;
}

struct ComponentCount {
  std::size_t mv_count = 0;
  std::size_t m = 1;  // lcm of label periods
  std::vector<std::size_t> periods;
  std::string hyperspecial_factor = "one hyperspecial class per component family";
};

inline ComponentCount component_count(const std::vector<MVLabel>& labels) {
  ComponentCount c;
  c.mv_count = labels.size();
  for (const auto& l : labels) {
    c.periods.push_back(l.orbit_period);
    c.m = std::lcm(c.m, l.orbit_period);
  }
  return c;
}

inline ComponentCount component_count(const RootDatum& d, const Cocharacter& mu,
                                      const SigmaClass& cls,
                                      UpsilonConvention conv = UpsilonConvention::SigmaMuInverse) {
  return component_count(mv_set(d, mu, cls, conv));
}

/// The per-label properties the minimal-nu construction guarantees.
struct LabelCheck {
  bool epsilon_closed_form = false;
  bool nu_dominant = false;
  bool tau_dominant = false;
  bool nu_bounds = false;  // <alpha, nu_b> >= eps_alpha
  bool orbit_equality = false;
  bool period_shift_central = false;  // sigma^{n k}(nu_b) - nu_b central, k the period
  bool tau_congruent = false;  // tau_b = lambda mod (sigma - 1)X_*(T)
  bool ok() const {
    return epsilon_closed_form && nu_dominant && tau_dominant && nu_bounds && orbit_equality &&
           period_shift_central && tau_congruent;
  }
};

inline LabelCheck check_label(const RootDatum& d, const MVLabel& lab, int n) {
  LabelCheck c;
  c.epsilon_closed_form = lab.epsilon == epsilon_values(d, lab.lambda);
  c.nu_dominant = d.is_dominant(lab.nu_b);
  c.tau_dominant = d.is_dominant(lab.tau_b) &&
                   lab.tau_b == lab.lambda + lab.nu_b - d.apply_sigma(lab.nu_b);
  c.nu_bounds = true;
  for (std::size_t i = 0; i < lab.epsilon.size(); ++i)
    if (d.pair_simple(static_cast<int>(i), lab.nu_b) < lab.epsilon[i]) c.nu_bounds = false;
  c.orbit_equality = true;
  for (const auto& orbit : simple_root_orbits(d)) {
    bool eq = false;
    for (int i : orbit)
      if (d.pair_simple(i, lab.nu_b) == lab.epsilon[i]) eq = true;
    if (!eq) c.orbit_equality = false;
  }
  const long shift = static_cast<long>(n) * static_cast<long>(lab.orbit_period);
  c.period_shift_central = d.is_central(Cocharacter(d.apply_sigma(lab.nu_b, shift) - lab.nu_b));
  c.tau_congruent = in_sublattice(d.sigma_minus_one(), Cocharacter(lab.tau_b - lab.lambda)).member;
  return c;
}

}  // namespace hecke
