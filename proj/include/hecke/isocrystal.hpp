#pragma once

#include "hecke/hecke_engine.hpp"
#include "hecke/lattice.hpp"
#include "hecke/root_datum.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace hecke {

/// Which cocharacter B(G, .) is taken for: sigma(mu^{-1}) or plain mu^{-1}.
enum class UpsilonConvention { SigmaMuInverse, MuInverse };

inline std::string to_string(UpsilonConvention c) {
  return c == UpsilonConvention::SigmaMuInverse ? "sigma-mu-inverse" : "mu-inverse";
}

inline Cocharacter upsilon(const RootDatum& d, const Cocharacter& mu,
                           UpsilonConvention c = UpsilonConvention::SigmaMuInverse) {
  Cocharacter inv = -mu;
  return c == UpsilonConvention::SigmaMuInverse ? d.apply_sigma(inv) : inv;
}

/// (1/N) sum_{i<N} sigma^i(x), N the order of sigma.
inline RationalCocharacter sigma_average(const RootDatum& d, const Cocharacter& x) {
  const auto n = static_cast<long>(d.sigma_order());
  Cocharacter s = sigma_sum(d, x, 0, n - 1);
  RationalCocharacter r = to_rational(s);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] /= n;
  return r;
}

inline RationalCocharacter newton_point(const RootDatum& d, const Cocharacter& tau) {
  return dominant_rep(d, sigma_average(d, tau));
}

/// Coefficients c with x = sum c_j alpha_j^vee, if x lies in the rational span.
inline std::optional<std::vector<Rational>> coroot_coordinates(const RootDatum& d,
                                                               const RationalCocharacter& x) {
  const std::size_t r = d.rank(), l = d.semisimple_rank();
  std::vector<std::vector<Rational>> a(r, std::vector<Rational>(l + 1));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < l; ++j) a[i][j] = d.simple_coroots()[j][i];
    a[i][l] = x[i];
  }
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < l && row < r; ++col) {
    std::size_t p = row;
    while (p < r && a[p][col] == 0) ++p;
    if (p == r) continue;
    std::swap(a[p], a[row]);
    const Rational inv = 1 / a[row][col];
    for (auto& v : a[row]) v *= inv;
    for (std::size_t i = 0; i < r; ++i)
      if (i != row && a[i][col] != 0) {
        const Rational f = a[i][col];
        for (std::size_t k = col; k <= l; ++k) a[i][k] -= f * a[row][k];
      }
    pivot_col.push_back(col);
    ++row;
  }
  for (std::size_t i = row; i < r; ++i)
    if (a[i][l] != 0) return std::nullopt;
  std::vector<Rational> c(l, 0);
  for (std::size_t k = 0; k < pivot_col.size(); ++k) c[pivot_col[k]] = a[k][l];
  return c;
}

/// nu1 <= nu2: the difference is a nonnegative rational combination of simple coroots.
inline bool newton_leq(const RootDatum& d, const RationalCocharacter& nu1,
                       const RationalCocharacter& nu2) {
  auto c = coroot_coordinates(d, nu2 - nu1);
  if (!c) return false;
  return std::all_of(c->begin(), c->end(), [](const Rational& v) { return v >= 0; });
}

/// An unramified sigma-conjugacy class [p^tau].
struct SigmaClass {
  Cocharacter tau;                  // representative; lies in W.upsilon when possible
  QuotientClass tau_sigma;          // canonical coordinates in X_*(T)_sigma
  Cocharacter tau_sigma_lift;       // representative with dominant sigma-average
  RationalCocharacter newton;       // dominant
  QuotientClass kottwitz;           // in pi_1(G)_Gamma
  LeviDatum levi;                   // centralizer of newton
  bool is_ordinary = false;
  bool is_basic = false;            // newton central
};

struct EnumerationOptions {
  UpsilonConvention convention = UpsilonConvention::SigmaMuInverse;
  std::int64_t box_scale = 1;
  unsigned threads = 1;
};

/// Quotient presentations shared by the class computations.
struct ClassContext {
  const RootDatum* datum = nullptr;
  Cocharacter mu, ups;
  FiniteAbelianPresentation coinvariants;  // X_*(T)_sigma
  FiniteAbelianPresentation pi1_gamma;     // pi_1(G)_Gamma
  QuotientClass kottwitz_ups;
  RationalCocharacter newton_ups;
  std::int64_t rho_height_ups = 0;  // <2rho, dominant sigma-sum of upsilon>, integer prefilter
};

inline FiniteAbelianPresentation pi1_coinvariants(const RootDatum& d, const LeviDatum& m) {
  auto gens = d.levi_coroots(m);
  for (auto& g : d.sigma_minus_one()) gens.push_back(g);
  return quotient(d.rank(), gens);
}

inline ClassContext make_class_context(const RootDatum& d, const Cocharacter& mu,
                                       UpsilonConvention conv) {
  require_minuscule(d, mu);
  ClassContext c;
  c.datum = &d;
  c.mu = mu;
  c.ups = upsilon(d, mu, conv);
  c.coinvariants = quotient(d.rank(), d.sigma_minus_one());
  c.pi1_gamma = pi1_coinvariants(d, d.full_levi());
  c.kottwitz_ups = c.pi1_gamma.class_of(c.ups);
  c.newton_ups = newton_point(d, c.ups);
  c.rho_height_ups = pair(
      d.two_rho(), dominant_rep(d, sigma_sum(d, c.ups, 0, static_cast<long>(d.sigma_order()) - 1)));
  return c;
}

/// Canonical coordinates of the W^sigma-orbit of tau's class in X_*(T)_sigma:
/// lexicographically least among translates with dominant sigma-average.
inline std::pair<QuotientClass, Cocharacter> canonical_class(const ClassContext& c,
                                                             const Cocharacter& tau) {
  const RootDatum& d = *c.datum;
  std::optional<std::pair<QuotientClass, Cocharacter>> best;
  for (const auto& w : d.sigma_fixed_weyl_group()) {
    Cocharacter y = w.matrix.apply(tau);
    if (!d.is_dominant(sigma_average(d, y))) continue;
    auto q = c.coinvariants.class_of(y);
    if (!best || q < best->first) best = std::make_pair(q, y);
  }
  if (!best) throw std::logic_error("no W^sigma-translate with dominant sigma-average");
  return *best;
}

inline bool in_b_g_upsilon(const ClassContext& c, const Cocharacter& tau) {
  if (c.pi1_gamma.class_of(tau) != c.kottwitz_ups) return false;
  const RootDatum& d = *c.datum;
  const Cocharacter s = sigma_sum(d, tau, 0, static_cast<long>(d.sigma_order()) - 1);
  if (pair(d.two_rho(), dominant_rep(d, s)) > c.rho_height_ups) return false;
  return newton_leq(*c.datum, newton_point(*c.datum, tau), c.newton_ups);
}

inline SigmaClass build_sigma_class(const ClassContext& c, const QuotientClass& q,
                                    const Cocharacter& lift) {
  const RootDatum& d = *c.datum;
  SigmaClass s;
  s.tau_sigma = q;
  s.tau_sigma_lift = lift;
  s.newton = newton_point(d, lift);
  s.kottwitz = c.pi1_gamma.class_of(lift);
  s.levi = levi_centralizer(d, s.newton);
  s.is_ordinary = s.newton == c.newton_ups;
  s.is_basic = d.is_central(s.newton);
  std::optional<Cocharacter> best;
  for (const auto& lam : weyl_orbit(d, c.ups))
    if (c.coinvariants.class_of(lam) == q && (!best || lam > *best)) best = lam;
  s.tau = best.value_or(lift);
  return s;
}

inline void sort_classes(const RootDatum& d, std::vector<SigmaClass>& v) {
  std::sort(v.begin(), v.end(), [&](const SigmaClass& a, const SigmaClass& b) {
    if (a.is_ordinary != b.is_ordinary) return a.is_ordinary;
    const Rational ra = pair(d.two_rho(), a.newton), rb = pair(d.two_rho(), b.newton);
    if (ra != rb) return ra > rb;
    return a.tau_sigma < b.tau_sigma;
  });
}

/// Bound on each quotient coordinate used by the enumeration box.
inline std::vector<std::pair<std::int64_t, std::int64_t>> enumeration_box(
    const ClassContext& c, std::int64_t scale) {
  // centred on upsilon; the radius only sees W.upsilon - upsilon, so central shifts cost nothing
  std::int64_t spread = 1;
  for (const auto& lam : weyl_orbit(*c.datum, c.ups))
    for (std::size_t i = 0; i < lam.size(); ++i)
      spread = std::max<std::int64_t>(spread, std::abs(lam[i] - c.ups[i]));
  const std::int64_t b = static_cast<std::int64_t>(c.datum->rank()) * spread *
                         static_cast<std::int64_t>(c.datum->sigma_order()) * scale;
  const auto& x = c.coinvariants;
  const QuotientClass centre = x.class_of(c.ups);
  std::vector<std::pair<std::int64_t, std::int64_t>> box;
  for (std::size_t j = 0; j < x.free_rank; ++j) {
    const std::int64_t r = b * std::max<std::int64_t>(1, x.row_abs_sum(j));
    box.emplace_back(centre[j] - r, centre[j] + r);
  }
  for (auto t : x.torsion) box.emplace_back(0, t - 1);
  return box;
}

/// All unramified classes in B(G, upsilon), ordinary first, then by <2rho, nu>
/// descending. Found by scanning a box of X_*(T)_sigma coordinates.
inline std::vector<SigmaClass> enumerate_unramified(const RootDatum& d, const Cocharacter& mu,
                                                    const EnumerationOptions& opt = {}) {
  const ClassContext c = make_class_context(d, mu, opt.convention);
  const auto box = enumeration_box(c, opt.box_scale);
  std::uint64_t total = 1;
  for (const auto& [lo, hi] : box) total *= static_cast<std::uint64_t>(hi - lo + 1);

  auto scan = [&](std::uint64_t from, std::uint64_t to,
                  std::map<QuotientClass, Cocharacter>& found) {
    for (std::uint64_t idx = from; idx < to; ++idx) {
      QuotientClass q(box.size());
      std::uint64_t rest = idx;
      for (std::size_t j = 0; j < box.size(); ++j) {
        const auto width = static_cast<std::uint64_t>(box[j].second - box[j].first + 1);
        q[j] = box[j].first + static_cast<std::int64_t>(rest % width);
        rest /= width;
      }
      const Cocharacter tau = c.coinvariants.lift(q);
      if (!in_b_g_upsilon(c, tau)) continue;
      auto canon = canonical_class(c, tau);
      found.emplace(canon.first, canon.second);
    }
  };

  const unsigned threads = std::max(1u, opt.threads);
  std::vector<std::map<QuotientClass, Cocharacter>> parts(threads);
  if (threads == 1) {
    scan(0, total, parts[0]);
  } else {
    std::vector<std::thread> pool;
    const std::uint64_t chunk = (total + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t)
      pool.emplace_back([&, t] {
        const std::uint64_t from = std::min<std::uint64_t>(total, t * chunk);
        scan(from, std::min<std::uint64_t>(total, from + chunk), parts[t]);
      });
    for (auto& th : pool) th.join();
  }
  std::map<QuotientClass, Cocharacter> merged;
  for (auto& p : parts) merged.insert(p.begin(), p.end());

  std::vector<SigmaClass> out;
  for (const auto& [q, lift] : merged) out.push_back(build_sigma_class(c, q, lift));
  sort_classes(d, out);
  return out;
}

/// Independent route: the classes of the elements of W.upsilon.
inline std::vector<SigmaClass> unramified_classes_from_orbit(
    const RootDatum& d, const Cocharacter& mu,
    UpsilonConvention conv = UpsilonConvention::SigmaMuInverse) {
  const ClassContext c = make_class_context(d, mu, conv);
  std::map<QuotientClass, Cocharacter> found;
  for (const auto& lam : weyl_orbit(d, c.ups)) {
    if (!in_b_g_upsilon(c, lam)) continue;
    auto canon = canonical_class(c, lam);
    found.emplace(canon.first, canon.second);
  }
  std::vector<SigmaClass> out;
  for (const auto& [q, lift] : found) out.push_back(build_sigma_class(c, q, lift));
  sort_classes(d, out);
  return out;
}

/// <rho, mu - nu>; throws std::domain_error if not an integer.
inline std::int64_t adlv_dimension(const RootDatum& d, const Cocharacter& mu,
                                   const SigmaClass& cls) {
  return to_int64(d.pair_rho(to_rational(mu) - cls.newton));
}

/// <rho, mu + nu>; throws std::domain_error if not an integer.
inline std::int64_t newton_stratum_dimension(const RootDatum& d, const Cocharacter& mu,
                                             const SigmaClass& cls) {
  return to_int64(d.pair_rho(to_rational(mu) + cls.newton));
}

enum class HNVerdict { Holds, Fails, Trivial };

inline std::string to_string(HNVerdict v) {
  switch (v) {
    case HNVerdict::Holds: return "holds";
    case HNVerdict::Fails: return "fails";
    case HNVerdict::Trivial: return "trivial (M = G)";
  }
  return "?";
}

struct HNResult {
  HNVerdict verdict = HNVerdict::Fails;
  LeviDatum levi;
  QuotientClass class_tau;
  QuotientClass class_upsilon;
  bool decomposable() const { return verdict == HNVerdict::Holds; }
};

/// kappa_M(tau) == upsilon^sharp in pi_1(M)_Gamma, with tau the representative
/// of cls whose sigma-average is dominant and upsilon taken dominant.
inline HNResult hn_decomposable(const RootDatum& d, const Cocharacter& mu, const SigmaClass& cls,
                                const LeviDatum& m, bool proper_only = true,
                                UpsilonConvention conv = UpsilonConvention::SigmaMuInverse) {
  if (!m.contains(cls.levi))
    throw std::invalid_argument("Levi " + levi_to_string(m) + " does not contain M_[b] = " +
                                levi_to_string(cls.levi));
  if (!d.is_sigma_stable(m))
    throw std::invalid_argument("Levi " + levi_to_string(m) + " is not sigma-stable");
  HNResult r;
  r.levi = m;
  const auto pres = pi1_coinvariants(d, m);
  r.class_tau = pres.class_of(cls.tau_sigma_lift);
  r.class_upsilon = pres.class_of(dominant_rep(d, upsilon(d, mu, conv)));
  if (proper_only && m == d.full_levi()) {
    r.verdict = HNVerdict::Trivial;
    return r;
  }
  r.verdict = r.class_tau == r.class_upsilon ? HNVerdict::Holds : HNVerdict::Fails;
  return r;
}

struct Condition2Report {
  std::vector<SigmaClass> classes;
  std::vector<HNResult> results;  // one per class, M = M_[b]
  bool holds_inclusive = true;    // M = G counted as decomposable
  bool holds_proper = true;       // every class needs a proper M_[b] that works
  bool split = false;
};

/// Hodge-Newton decomposability for M_[b] across all unramified classes.
inline Condition2Report check_condition2(const RootDatum& d, const Cocharacter& mu,
                                         UpsilonConvention conv = UpsilonConvention::SigmaMuInverse) {
  Condition2Report rep;
  rep.split = d.sigma().is_identity();
  EnumerationOptions opt;
  opt.convention = conv;
  rep.classes = enumerate_unramified(d, mu, opt);
  for (const auto& cls : rep.classes) {
    auto res = hn_decomposable(d, mu, cls, cls.levi, true, conv);
    if (res.verdict == HNVerdict::Fails) rep.holds_inclusive = false;
    if (res.verdict != HNVerdict::Holds) rep.holds_proper = false;
    rep.results.push_back(std::move(res));
  }
  return rep;
}

}  // namespace hecke
