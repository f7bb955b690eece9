#pragma once

#include "hecke/hecke_engine.hpp"
#include "hecke/isocrystal.hpp"
#include "hecke/mv_engine.hpp"
#include "hecke/torus_algebra.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace hecke {

class PeriodGapError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct CheckItem {
  std::string name;
  bool passed = false;
  std::string detail;
};

inline bool all_passed(const std::vector<CheckItem>& v) {
  return std::all_of(v.begin(), v.end(), [](const CheckItem& c) { return c.passed; });
}

struct CongruenceFactor {
  SigmaClass cls;
  int n = 1;
  std::size_t m = 1;
  Cocharacter lambda;  // label of exact period m
  Cocharacter beta;    // sigma^{-1}(lambda), moved by W^sigma if needed
  bool beta_adjusted = false;
  Cocharacter beta_norm;  // sum_{j=1}^{nm} sigma^j(beta)
  std::int64_t exponent = 0;
  HeckePolynomial h_prime;
  std::vector<OrbitFactor> conjugate_factors;  // one per distinct orbit of W^sigma beta
  HeckePolynomial h_full;
  LeviDatum levi;  // centralizer of beta_norm
};

using LabelChooser = std::function<Cocharacter(const std::vector<Cocharacter>&)>;

inline CongruenceFactor build_congruence_factor(
    const RootDatum& d, const Cocharacter& mu, const SigmaClass& cls,
    UpsilonConvention conv = UpsilonConvention::SigmaMuInverse, const LabelChooser& choose = {}) {
  CongruenceFactor cf;
  cf.cls = cls;
  cf.n = reflex_degree(d, mu);
  const auto labels = mv_set(d, mu, cls, conv);
  cf.m = component_count(labels).m;
  std::vector<Cocharacter> full;
  for (const auto& l : labels)
    if (l.orbit_period == cf.m) full.push_back(l.lambda);
  if (full.empty())
    throw PeriodGapError("period gap: no MV label has exact period " + std::to_string(cf.m) +
                         " for the class with tau = " + cls.tau.to_string());
  cf.lambda = choose ? choose(full) : lex_greatest(full);

  cf.beta = d.apply_sigma(cf.lambda, -1);
  if (!d.is_dominant(sigma_average(d, cf.beta))) {
    std::optional<Cocharacter> best;
    for (const auto& w : d.sigma_fixed_weyl_group()) {
      Cocharacter y = w.matrix.apply(cf.beta);
      if (d.is_dominant(sigma_average(d, y)) && (!best || y < *best)) best = y;
    }
    if (!best) throw std::logic_error("no W^sigma-conjugate of beta has dominant average");
    cf.beta = *best;
    cf.beta_adjusted = true;
  }
  auto own = make_orbit_factor(d, mu, cf.n, cf.beta);
  if (own.size != cf.m)
    throw std::logic_error("beta has orbit size " + std::to_string(own.size) + ", expected " +
                           std::to_string(cf.m));
  cf.beta_norm = own.norm;
  cf.exponent = own.exponent;
  cf.h_prime = own.factor;

  std::set<std::vector<Cocharacter>> orbits;
  for (const auto& w : d.sigma_fixed_weyl_group())
    orbits.insert(sigma_power_orbit(d, w.matrix.apply(cf.beta), cf.n));
  cf.h_full = HeckePolynomial::one(d.rank());
  for (const auto& orbit : orbits) {
    cf.conjugate_factors.push_back(make_orbit_factor(d, mu, cf.n, lex_greatest(orbit)));
    cf.h_full = cf.h_full * cf.conjugate_factors.back().factor;
  }
  cf.levi = levi_centralizer(d, cf.beta_norm);
  return cf;
}

struct DivisibilityReport {
  std::vector<CheckItem> checks;
  HeckePolynomial quotient_full;   // H / h_full
  HeckePolynomial quotient_prime;  // H / h_prime
  bool ok() const { return all_passed(checks); }
};

inline std::string invariance_detail(const InvarianceReport& r) {
  if (r.invariant) return "invariant";
  return "coefficient of x^" + std::to_string(r.coefficient_degree) + " moved by " +
         word_to_string(r.witness_word) + " to " + r.witness_image;
}

inline DivisibilityReport verify_divisibility(const RootDatum& d, const HeckePolynomial& h,
                                              const CongruenceFactor& cf) {
  DivisibilityReport rep;
  auto a = poly_exact_divide(h, cf.h_prime);
  rep.quotient_prime = a.quotient;
  rep.checks.push_back({"h_prime divides H", a.exact,
                        a.exact ? "quotient " + a.quotient.to_string()
                                : "remainder nonzero at x^" + std::to_string(a.obstructing_degree)});
  auto b = poly_exact_divide(h, cf.h_full);
  rep.quotient_full = b.quotient;
  rep.checks.push_back({"h_full divides H", b.exact,
                        b.exact ? "quotient " + b.quotient.to_string()
                                : "remainder nonzero at x^" + std::to_string(b.obstructing_degree)});
  auto inv_full = is_dot_invariant(d, cf.h_full);
  rep.checks.push_back({"h_full is W^sigma dot-invariant", inv_full.invariant,
                        invariance_detail(inv_full)});
  auto inv_q = is_dot_invariant(d, b.quotient);
  rep.checks.push_back({"H / h_full is W^sigma dot-invariant", b.exact && inv_q.invariant,
                        invariance_detail(inv_q)});
  auto inv_hp = is_dot_invariant(d, cf.levi, cf.h_prime);
  auto inv_r = is_dot_invariant(d, cf.levi, a.quotient);
  rep.checks.push_back({"h_prime and H / h_prime are W_M^sigma dot-invariant, M = " +
                            levi_to_string(cf.levi),
                        a.exact && inv_hp.invariant && inv_r.invariant,
                        !inv_hp.invariant ? "h_prime: " + invariance_detail(inv_hp)
                                          : "quotient: " + invariance_detail(inv_r)});
  auto view = satake_view(d, cf.h_full, cf.levi);
  auto c = poly_exact_divide(cf.h_full, cf.h_prime);
  rep.checks.push_back({"h_prime divides h_full viewed over M", view.ok && c.exact,
                        view.ok ? (c.exact ? "ok" : "not a factor")
                                : invariance_detail(view.invariance)});
  return rep;
}

inline DivisibilityReport verify_divisibility(const RootDatum& d, const Cocharacter& mu,
                                              const CongruenceFactor& cf) {
  return verify_divisibility(d, hecke_polynomial(d, mu), cf);
}

struct OrdinaryCheck {
  Cocharacter lambda;        // dominant rep of mu^{-1}
  Cocharacter lambda_tilde;  // sum_{j<n} sigma^j lambda
  std::int64_t exponent = 0;
  TorusAlgebraElement frobenius;  // p^exponent h_{lambda_tilde}
  TorusAlgebraElement value;      // H evaluated there
  std::vector<CheckItem> checks;
  bool ok() const { return all_passed(checks); }
};

/// H vanishes at the torus image of the ordinary Frobenius coset.
inline OrdinaryCheck ordinary_congruence_check(const RootDatum& d, const Cocharacter& mu) {
  require_minuscule(d, mu);
  OrdinaryCheck oc;
  const int n = reflex_degree(d, mu);
  oc.lambda = dominant_rep(d, Cocharacter(-mu));
  oc.lambda_tilde = sigma_sum(d, oc.lambda, 0, n - 1);
  oc.exponent = to_int64(Rational(n) * d.pair_rho(mu - oc.lambda));
  oc.frobenius = TorusAlgebraElement::basis(oc.lambda_tilde, LaurentP::p_power(oc.exponent));
  const auto h = hecke_polynomial(d, mu);
  oc.value = h.evaluate(oc.frobenius);
  oc.checks.push_back({"H(Frob_ord) = 0", oc.value.is_zero(),
                       oc.value.is_zero() ? "zero" : "value " + oc.value.to_string()});
  const std::size_t period = sigma_period(d, oc.lambda, n);
  oc.checks.push_back({"ordinary weight is fixed by sigma^n", period == 1,
                       "period " + std::to_string(period)});

  const auto classes = enumerate_unramified(d, mu);
  auto ord = std::find_if(classes.begin(), classes.end(), [](auto& c) { return c.is_ordinary; });
  if (ord == classes.end()) {
    oc.checks.push_back({"ordinary congruence factor equals the dominant-weight factor", false,
                         "no ordinary class"});
  } else {
    auto cf = build_congruence_factor(d, mu, *ord);
    auto b = dominant_factor_check(d, mu);
    const bool same = cf.m == 1 && cf.h_prime == b.factor;
    oc.checks.push_back({"ordinary congruence factor equals the dominant-weight factor", same,
                         cf.h_prime.to_string() + " vs " + b.factor.to_string()});
  }
  return oc;
}

struct LedgerRow {
  SigmaClass cls;
  CongruenceFactor factor;
  HeckePolynomial cofactor;  // P with H = h_full * P
  bool divides = false;
  bool cofactor_invariant = false;
  std::vector<std::string> shared_with;  // orbit factors also used by other rows
};

struct InductionLedger {
  HeckePolynomial h;
  std::vector<LedgerRow> rows;  // newton-descending
  bool shared_factors = false;
  std::string scope_note =
      "algebraic bookkeeping only; the geometric restriction maps are not modeled";
  bool ok() const {
    return std::all_of(rows.begin(), rows.end(),
                       [](const LedgerRow& r) { return r.divides && r.cofactor_invariant; });
  }
};

inline InductionLedger induction_ledger(const RootDatum& d, const Cocharacter& mu,
                                        UpsilonConvention conv = UpsilonConvention::SigmaMuInverse) {
  InductionLedger led;
  led.h = hecke_polynomial(d, mu);
  EnumerationOptions opt;
  opt.convention = conv;
  std::map<std::string, std::vector<std::size_t>> users;
  for (const auto& cls : enumerate_unramified(d, mu, opt)) {
    LedgerRow row;
    row.cls = cls;
    row.factor = build_congruence_factor(d, mu, cls, conv);
    auto div = poly_exact_divide(led.h, row.factor.h_full);
    row.divides = div.exact;
    row.cofactor = div.quotient;
    row.cofactor_invariant = div.exact && is_dot_invariant(d, div.quotient).invariant;
    for (const auto& f : row.factor.conjugate_factors)
      users[f.factor.to_string()].push_back(led.rows.size());
    led.rows.push_back(std::move(row));
  }
  for (const auto& [key, idx] : users)
    if (idx.size() > 1) {
      led.shared_factors = true;
      for (auto i : idx) led.rows[i].shared_with.push_back(key);
    }
  return led;
}

}  // namespace hecke
