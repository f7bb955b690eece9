#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace hecke;

TEST(Arith, RationalParsingAndPrinting) {
  EXPECT_EQ(to_string(parse_rational("-3/6")), "-1/2");
  EXPECT_EQ(to_string(parse_rational("4")), "4");
  EXPECT_TRUE(is_integral(parse_rational("8/4")));
  EXPECT_EQ(to_int64(parse_rational("8/4")), 2);
  EXPECT_THROW(to_int64(parse_rational("1/3")), std::domain_error);
  EXPECT_EQ(floor_mod(Integer(-7), Integer(3)), 2);
}

TEST(LatticeVector, ArithmeticAndPairing) {
  Cocharacter a({1, 0, -2}), b({0, 3, 1});
  EXPECT_EQ((a + b).to_string(), "(1,3,-1)");
  EXPECT_EQ((a - b).to_string(), "(1,-3,-3)");
  EXPECT_EQ(pair(Character({1, 1, 1}), a), -1);
  EXPECT_TRUE(Cocharacter(3).is_zero());
  EXPECT_TRUE(b < a);
}

TEST(IntMatrix, PowerAndIdentity) {
  IntMatrix s{{0, 0, -1}, {0, -1, 0}, {-1, 0, 0}};
  EXPECT_FALSE(s.is_identity());
  EXPECT_TRUE(s.power(2).is_identity());
  EXPECT_EQ(s.apply(Cocharacter({1, 0, 0})).to_string(), "(0,0,-1)");
}

namespace {

BigMatrix to_big(const std::vector<std::vector<std::int64_t>>& a) {
  BigMatrix b;
  for (const auto& r : a) {
    std::vector<Integer> row;
    for (auto v : r) row.push_back(v);
    b.push_back(row);
  }
  return b;
}

BigMatrix mul(const BigMatrix& a, const BigMatrix& b) {
  BigMatrix r(a.size(), std::vector<Integer>(b.empty() ? 0 : b[0].size(), 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k)
      for (std::size_t j = 0; j < b[0].size(); ++j) r[i][j] += a[i][k] * b[k][j];
  return r;
}

}  // namespace

TEST(SmithNormalForm, KnownExample) {
  auto s = smith_normal_form(to_big({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}));
  ASSERT_EQ(s.diagonal.size(), 3u);
  EXPECT_EQ(s.diagonal[0], 2);
  EXPECT_EQ(s.diagonal[1], 6);
  EXPECT_EQ(s.diagonal[2], 12);
}

TEST(SmithNormalForm, AgreesWithDeterminantalDivisors) {
  oracle::Gen g(11);
  for (int trial = 0; trial < 300; ++trial) {
    const auto m = static_cast<std::size_t>(g.uniform(1, 4));
    const auto n = static_cast<std::size_t>(g.uniform(1, 4));
    std::vector<std::vector<std::int64_t>> a(m, std::vector<std::int64_t>(n));
    for (auto& r : a)
      for (auto& v : r) v = g.uniform(-6, 6);
    const auto big = to_big(a);
    auto s = smith_normal_form(big);
    auto expect = oracle::invariant_factors(big);
    ASSERT_EQ(s.diagonal.size(), expect.size()) << "trial " << trial;
    for (std::size_t i = 0; i < expect.size(); ++i) EXPECT_EQ(s.diagonal[i], expect[i]);
    EXPECT_EQ(mul(mul(s.U, big), s.V), s.D);
    EXPECT_EQ(mul(s.U, s.Uinv), big_identity(m));
    const auto det_u = oracle::det(s.U), det_v = oracle::det(s.V);
    EXPECT_TRUE(det_u == 1 || det_u == -1);
    EXPECT_TRUE(det_v == 1 || det_v == -1);
  }
}

TEST(Quotient, ZModTwo) {
  auto q = quotient(1, {Cocharacter({2})});
  EXPECT_EQ(q.free_rank, 0u);
  ASSERT_EQ(q.torsion.size(), 1u);
  EXPECT_EQ(q.torsion[0], 2);
  EXPECT_TRUE(q.same_class(Cocharacter({3}), Cocharacter({-1})));
  EXPECT_FALSE(q.same_class(Cocharacter({3}), Cocharacter({0})));
}

TEST(Quotient, ClassOfLiftRoundTrip) {
  oracle::Gen g(5);
  for (int trial = 0; trial < 200; ++trial) {
    const auto n = static_cast<std::size_t>(g.uniform(1, 4));
    std::vector<Cocharacter> gens;
    const auto k = g.uniform(0, 3);
    for (int i = 0; i < k; ++i) gens.push_back(g.cochar(n, 3));
    auto q = quotient(n, gens);
    const Cocharacter x = g.cochar(n, 5);
    const auto c = q.class_of(x);
    EXPECT_EQ(q.class_of(q.lift(c)), c);
    // x - lift(class(x)) lies in the sublattice
    EXPECT_TRUE(in_sublattice(gens, Cocharacter(x - q.lift(c))).member);
    Cocharacter shifted = x;
    for (const auto& gv : gens) shifted += g.uniform(-2, 2) * gv;
    EXPECT_EQ(q.class_of(shifted), c);
  }
}

TEST(Sublattice, SolveGivesCombination) {
  oracle::Gen g(9);
  for (int trial = 0; trial < 200; ++trial) {
    const auto n = static_cast<std::size_t>(g.uniform(1, 4));
    std::vector<Cocharacter> gens;
    for (int i = 0; i < g.uniform(1, 3); ++i) gens.push_back(g.cochar(n, 3));
    Cocharacter x(n);
    for (const auto& gv : gens) x += g.uniform(-3, 3) * gv;
    auto r = in_sublattice(gens, x);
    ASSERT_TRUE(r.member);
    Cocharacter back(n);
    for (std::size_t j = 0; j < gens.size(); ++j) back += r.coefficients[j] * gens[j];
    EXPECT_EQ(back, x);
  }
  EXPECT_FALSE(in_sublattice({Cocharacter({2, 0})}, Cocharacter({1, 0})).member);
}

TEST(Sublattice, SigmaMinusOneForSwap) {
  IntMatrix swap{{0, 1}, {1, 0}};
  auto gens = sigma_minus_one_generators(swap);
  EXPECT_TRUE(in_sublattice(gens, Cocharacter({1, -1})).member);
  EXPECT_FALSE(in_sublattice(gens, Cocharacter({1, 0})).member);
  EXPECT_EQ(integer_rank({{1, 2}, {2, 4}}), 1u);
}
