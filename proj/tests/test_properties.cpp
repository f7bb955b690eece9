#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace hecke;

namespace {
constexpr int kCases = 1000;

const std::vector<std::string>& small_presets() {
  static const std::vector<std::string> v = {"gl2", "gl3", "gl4", "gsp4", "res_gl2_inert_g2",
                                             "res_gl2_inert_g3", "u3_quasisplit"};
  return v;
}

const RootDatum& datum(const std::string& name) {
  static std::map<std::string, RootDatum> cache;
  auto it = cache.find(name);
  if (it == cache.end()) it = cache.emplace(name, RootDatum(presets::by_name(name).datum)).first;
  return it->second;
}

TorusAlgebraElement push(const IntMatrix& P, const TorusAlgebraElement& e) {
  TorusAlgebraElement out(e.rank());
  for (const auto& [nu, c] : e.terms()) out += TorusAlgebraElement::basis(P.apply(nu), c);
  return out;
}

HeckePolynomial push(const IntMatrix& P, const HeckePolynomial& f) {
  std::vector<TorusAlgebraElement> v;
  for (const auto& c : f.coefficients()) v.push_back(push(P, c));
  return HeckePolynomial(std::move(v));
}

IntMatrix signed_permutation(oracle::Gen& g, std::size_t r) {
  std::vector<std::size_t> perm(r);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), g.rng);
  std::vector<std::vector<std::int64_t>> rows(r, std::vector<std::int64_t>(r, 0));
  for (std::size_t i = 0; i < r; ++i) rows[i][perm[i]] = g.uniform(0, 1) ? 1 : -1;
  return IntMatrix::from_rows(rows);
}

Cocharacter random_minuscule(oracle::Gen& g, const RootDatum& d) {
  for (;;) {
    Cocharacter mu = g.cochar(d.rank(), 1);
    if (d.is_minuscule(mu)) return mu;
  }
}
}  // namespace

TEST(Property, DotActionIsAGroupAction) {
  oracle::Gen g(1);
  for (int k = 0; k < kCases; ++k) {
    const auto& d = datum(g.pick(small_presets()));
    const auto& w1 = g.pick(d.weyl_group());
    const auto& w2 = g.pick(d.weyl_group());
    const auto e = g.element(d.rank());
    EXPECT_EQ(dot_act(d.two_rho(), w1.matrix, dot_act(d.two_rho(), w2.matrix, e)),
              dot_act(d.two_rho(), w1.matrix * w2.matrix, e));
    EXPECT_EQ(dot_act(d.two_rho(), IntMatrix::identity(d.rank()), e), e);
  }
}

TEST(Property, RingLaws) {
  oracle::Gen g(2);
  for (int k = 0; k < kCases; ++k) {
    const std::size_t r = static_cast<std::size_t>(g.uniform(1, 4));
    const auto a = g.element(r), b = g.element(r), c = g.element(r);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a + b, b + a);
    EXPECT_TRUE((a - a).is_zero());
    EXPECT_EQ(a * TorusAlgebraElement::unit(r), a);
    const auto f = g.polynomial(r), h = g.polynomial(r), q = g.polynomial(r);
    EXPECT_EQ((f * h) * q, f * (h * q));
    EXPECT_EQ(f * (h + q), f * h + f * q);
    EXPECT_EQ(f * h, h * f);
  }
}

TEST(Property, SpecializationIsARingMap) {
  oracle::Gen g(3);
  const std::vector<int> primes = {2, 3, 5, 7, 11, 13};
  for (int k = 0; k < kCases; ++k) {
    const std::size_t r = static_cast<std::size_t>(g.uniform(1, 4));
    const auto a = g.element(r), b = g.element(r);
    const Integer p = g.pick(primes);
    EXPECT_EQ((a + b).specialize(p), a.specialize(p) + b.specialize(p));
    EXPECT_EQ((a * b).specialize(p), a.specialize(p) * b.specialize(p));
  }
}

TEST(Property, EnumerationIsSaturated) {
  oracle::Gen g(4);
  EnumerationOptions twice;
  twice.box_scale = 2;
  for (int k = 0; k < kCases; ++k) {
    const auto& d = datum(g.pick(small_presets()));
    Cocharacter mu = random_minuscule(g, d);
    // central shift
    const std::int64_t s = g.uniform(-2, 2);
    Cocharacter shift(std::vector<std::int64_t>(d.rank(), s));
    if (d.is_central(shift) && d.apply_sigma(shift) == shift) mu = mu + shift;
    const auto a = enumerate_unramified(d, mu);
    const auto b = enumerate_unramified(d, mu, twice);
    ASSERT_EQ(a.size(), b.size()) << d.name() << " " << mu;
    for (std::size_t i = 0; i < a.size(); ++i) {
      EXPECT_EQ(a[i].tau_sigma, b[i].tau_sigma) << d.name() << " " << mu;
      EXPECT_EQ(a[i].newton, b[i].newton);
    }
    std::size_t ordinary = 0;
    for (const auto& c : a) ordinary += c.is_ordinary;
    EXPECT_EQ(ordinary, 1u) << d.name() << " " << mu;
  }
}

TEST(Property, SerializationRoundTrip) {
  oracle::Gen g(5);
  for (int k = 0; k < kCases; ++k) {
    const std::size_t r = static_cast<std::size_t>(g.uniform(1, 5));
    const auto e = g.element(r, 5);
    EXPECT_EQ(TorusAlgebraElement::from_json(e.to_json()), e);
    const auto f = g.polynomial(r);
    EXPECT_EQ(HeckePolynomial::from_json(f.to_json()), f);
    const std::string s = f.to_json().dump();
    EXPECT_EQ(HeckePolynomial::from_json(nlohmann::json::parse(s)).to_json().dump(), s);
    EXPECT_EQ(LaurentP::parse(e.coefficient(Cocharacter(r)).to_string()),
              e.coefficient(Cocharacter(r)));
  }
}

TEST(Property, LeviRhoAgreesOnLeviWeylGroup) {
  oracle::Gen g(6);
  for (int k = 0; k < kCases; ++k) {
    const auto& d = datum(g.pick(small_presets()));
    LeviDatum m;
    for (std::size_t i = 0; i < d.semisimple_rank(); ++i)
      if (g.uniform(0, 1)) m.subset.push_back(static_cast<int>(i));
    const auto group = d.levi_weyl_group(m);
    const auto& w = g.pick(group);
    const auto e = g.element(d.rank());
    EXPECT_EQ(dot_act(d.two_rho(), w.matrix, e), dot_act(d.two_rho_levi(m), w.matrix, e))
        << d.name() << " " << levi_to_string(m);
  }
}

TEST(Property, OrbitFactorIndependentOfRepresentative) {
  oracle::Gen g(7);
  for (int k = 0; k < kCases; ++k) {
    const auto& d = datum(g.pick(small_presets()));
    const Cocharacter mu = random_minuscule(g, d);
    const int n = reflex_degree(d, mu);
    const auto orbit = weyl_orbit(d, Cocharacter(-mu));
    const Cocharacter nu = g.pick(orbit);
    const auto a = make_orbit_factor(d, mu, n, nu);
    const auto b = make_orbit_factor(d, mu, n, d.apply_sigma(nu, n * g.uniform(1, 3)));
    EXPECT_EQ(a.factor, b.factor) << d.name() << " " << nu;
    EXPECT_EQ(a.exponent, b.exponent);
    EXPECT_EQ(a.members, b.members);
  }
}

TEST(Property, HeckePolynomialTransportsUnderBasisChange) {
  oracle::Gen g(8);
  for (int k = 0; k < kCases; ++k) {
    const auto& d = datum(g.pick(small_presets()));
    const std::size_t r = d.rank();
    const IntMatrix P = signed_permutation(g, r);
    const IntMatrix Pinv = P.transpose();
    BasedRootDatum raw = d.raw();
    for (auto& a : raw.simple_roots) a = P.apply(a);
    for (auto& c : raw.simple_coroots) c = P.apply(c);
    raw.sigma = P * raw.sigma * Pinv;
    RootDatum d2(raw);
    const Cocharacter mu = random_minuscule(g, d);
    const auto H = hecke_polynomial(d, mu);
    const auto H2 = hecke_polynomial(d2, P.apply(mu));
    EXPECT_EQ(H2, push(P, H)) << d.name();
    EXPECT_TRUE(is_dot_invariant(d2, H2).invariant) << d.name();
  }
}
