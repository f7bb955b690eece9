#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace hecke;

namespace {

struct PresetFacts {
  std::string name;
  std::size_t weyl, weyl_sigma, sigma_order;
  int n;
};

// Weyl orders by hand: S_n, W(C_g) = 2^g g!, products of S_2 for Res GL2.
const std::vector<PresetFacts> kFacts = {
    {"gl2", 2, 2, 1, 1},          {"gl3", 6, 6, 1, 1},
    {"gl4", 24, 24, 1, 1},        {"gsp4", 8, 8, 1, 1},
    {"gsp6", 48, 48, 1, 1},       {"res_gl2_inert_g2", 4, 2, 2, 1},
    {"res_gl2_inert_g3", 8, 2, 3, 1}, {"u3_quasisplit", 6, 2, 2, 2},
};

}  // namespace

TEST(RootDatum, PresetGroupOrders) {
  for (const auto& f : kFacts) {
    auto p = presets::by_name(f.name);
    RootDatum d(p.datum);
    EXPECT_EQ(d.weyl_group().size(), f.weyl) << f.name;
    EXPECT_EQ(d.sigma_fixed_weyl_group().size(), f.weyl_sigma) << f.name;
    EXPECT_EQ(d.sigma_order(), f.sigma_order) << f.name;
    EXPECT_EQ(reflex_degree(d, p.mu), f.n) << f.name;
    EXPECT_TRUE(d.is_minuscule(p.mu)) << f.name;
    // independent checks
    auto od = oracle::from_raw(p.datum);
    EXPECT_EQ(oracle::weyl_order(od), f.weyl) << f.name;
    EXPECT_EQ(d.two_rho().coords(), oracle::two_rho(od)) << f.name;
    EXPECT_EQ(oracle::reflex_degree(od, p.mu.coords()), f.n) << f.name;
    EXPECT_EQ(weyl_orbit(d, Cocharacter(-p.mu)).size(), p.expected_orbit_size) << f.name;
  }
}

TEST(RootDatum, Gl2Basics) {
  RootDatum d(presets::gl(2).datum);
  EXPECT_EQ(d.two_rho().to_string(), "(1,-1)");
  EXPECT_EQ(d.pair_rho(Cocharacter({1, 0})), Rational(1, 2));
  EXPECT_TRUE(d.is_dominant(Cocharacter({1, 0})));
  EXPECT_FALSE(d.is_dominant(Cocharacter({0, 1})));
  EXPECT_TRUE(d.is_central(Cocharacter({3, 3})));
  EXPECT_EQ(dominant_rep(d, Cocharacter({-1, 0})).to_string(), "(0,-1)");
  EXPECT_FALSE(d.is_minuscule(Cocharacter({2, 0})));
}

TEST(RootDatum, WeylElementsActCorrectly) {
  for (const auto& name : presets::canonical_names()) {
    RootDatum d(presets::by_name(name).datum);
    for (const auto& w : d.weyl_group()) {
      // the matrix equals the product of its word
      IntMatrix m = IntMatrix::identity(d.rank());
      for (int i : w.word) {
        IntMatrix r = IntMatrix::identity(d.rank());
        for (std::size_t c = 0; c < d.rank(); ++c) {
          Cocharacter e(d.rank());
          e[c] = 1;
          auto img = d.reflect(i, e);
          for (std::size_t row = 0; row < d.rank(); ++row) r(row, c) = img[row];
        }
        m = m * r;
      }
      EXPECT_EQ(m, w.matrix) << name;
    }
    for (const auto& w : d.sigma_fixed_weyl_group()) EXPECT_TRUE(d.commutes_with_sigma(w.matrix));
  }
}

TEST(RootDatum, SigmaPermutationForU3) {
  RootDatum d(presets::u3_quasisplit().datum);
  EXPECT_EQ(d.sigma_permutation(), (std::vector<int>{1, 0}));
  EXPECT_TRUE(d.is_sigma_stable(LeviDatum{{0, 1}}));
  EXPECT_FALSE(d.is_sigma_stable(LeviDatum{{0}}));
  EXPECT_EQ(d.apply_sigma(Cocharacter({1, 0, 0})).to_string(), "(0,0,-1)");
  EXPECT_EQ(d.apply_sigma(Cocharacter({1, 0, 0}), -1).to_string(), "(0,0,-1)");
}

TEST(RootDatum, LeviHelpers) {
  RootDatum d(presets::gl(3).datum);
  EXPECT_EQ(levi_to_string(levi_centralizer(d, Cocharacter({1, 1, 0}))), "{1}");
  EXPECT_EQ(levi_to_string(d.full_levi()), "{1,2}");
  EXPECT_EQ(d.levi_weyl_group(LeviDatum{{0}}).size(), 2u);
  EXPECT_EQ(d.two_rho_levi(LeviDatum{{0}}).to_string(), "(1,-1,0)");
}

TEST(Validate, NonCartanPairingNamed) {
  BasedRootDatum b;
  b.rank = 2;
  b.simple_roots = {Character({1, -1})};
  b.simple_coroots = {Cocharacter({1, 0})};
  b.sigma = IntMatrix::identity(2);
  auto r = validate(b);
  EXPECT_FALSE(r.valid);
  EXPECT_NE(r.diagnostic.find("<alpha_1, alpha_1^vee> = 1"), std::string::npos) << r.diagnostic;
}

TEST(Validate, DegenerateAndSigmaErrors) {
  BasedRootDatum b = presets::gl(3).datum;
  b.simple_roots[1] = b.simple_roots[0];
  b.simple_coroots[1] = b.simple_coroots[0];
  auto r = validate(b);
  EXPECT_FALSE(r.valid);
  EXPECT_NE(r.diagnostic.find("degenerate root system"), std::string::npos) << r.diagnostic;

  BasedRootDatum c = presets::gl(2).datum;
  c.sigma = IntMatrix{{1, 1}, {0, 1}};
  r = validate(c);
  EXPECT_FALSE(r.valid);
  EXPECT_NE(r.diagnostic.find("sigma"), std::string::npos) << r.diagnostic;

  BasedRootDatum e = presets::gl(2).datum;
  e.sigma = IntMatrix{{0, 1}, {1, 0}};  // swaps alpha^vee with -alpha^vee
  r = validate(e);
  EXPECT_FALSE(r.valid);
  EXPECT_NE(r.diagnostic.find("does not permute"), std::string::npos) << r.diagnostic;

  EXPECT_TRUE(validate(presets::gsp(2).datum).valid);
}

TEST(Validate, RankZeroSemisimplePart) {
  BasedRootDatum t;
  t.rank = 2;
  t.sigma = IntMatrix{{0, 1}, {1, 0}};
  auto r = validate(t);
  EXPECT_TRUE(r.valid) << r.diagnostic;
  EXPECT_EQ(r.weyl_order, 1u);
  EXPECT_EQ(r.sigma_order, 2u);
}

TEST(Presets, UnknownNameThrows) {
  EXPECT_THROW(presets::by_name("gl7"), std::invalid_argument);
  EXPECT_EQ(presets::by_name("hilbert_g2").datum.name, "res_gl2_inert_g2");
  EXPECT_EQ(presets::canonical_names().size(), 8u);
}

TEST(Config, ParsesMultiLineWithComments) {
  const std::string text = R"(# GL3 by hand
name = "gl3"
rank = 3
simple_roots = [[1,-1,0],
                [0,1,-1]]   # two roots
simple_coroots = [[1,-1,0],[0,1,-1]]
mu = [1,0,0]
n = 1
)";
  auto c = parse_config(text);
  EXPECT_EQ(c.datum.rank, 3u);
  EXPECT_TRUE(c.datum.sigma.is_identity());
  ASSERT_TRUE(c.mu);
  EXPECT_EQ(c.mu->to_string(), "(1,0,0)");
  EXPECT_EQ(c.reflex_degree, 1);
  EXPECT_TRUE(validate(c.datum).valid);
}

TEST(Config, DiagnosticsNameLineAndField) {
  auto msg = [](const std::string& t) {
    try {
      parse_config(t);
    } catch (const ConfigError& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  EXPECT_EQ(msg("rank = 2\nsimple_roots = [[1,-1]]\nsimple_coroots = [[1,-1,0]]\n"),
            "line 3: field 'simple_coroots': entry 1 has length 3, expected rank 2");
  EXPECT_EQ(msg("rank = 2\nbogus = 1\n"), "line 2: field 'bogus': unknown field");
  EXPECT_EQ(msg("rank = 2\nrank = 3\n"), "line 2: field 'rank': duplicate field");
  EXPECT_EQ(msg("rank = 2\nsimple_roots = [[1,-1]\n"),
            "line 2: field 'simple_roots': unbalanced brackets");
  EXPECT_EQ(msg("rank = 2\nsimple_roots = [[1,x]]\n"),
            "line 2: field 'simple_roots': malformed value '[[1,x]]'");
  EXPECT_EQ(msg("rank = 2\n"), "field 'simple_roots': missing required field");
  EXPECT_EQ(msg("just words\n"), "line 1: expected 'key = value'");
}

TEST(Config, CocharacterParsing) {
  EXPECT_EQ(parse_cocharacter("1,0,-1").to_string(), "(1,0,-1)");
  EXPECT_EQ(parse_cocharacter("(2, 3)").to_string(), "(2,3)");
  EXPECT_THROW(parse_cocharacter("1,,2"), std::invalid_argument);
  EXPECT_THROW(parse_cocharacter("1,a"), std::invalid_argument);
}
