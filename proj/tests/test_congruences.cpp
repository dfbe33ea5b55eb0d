#include <gtest/gtest.h>

#include "geuler/congruences.hpp"

using namespace geuler;

TEST(Mod2, Examples) {
  const auto a = check_mod2(3, 2);
  EXPECT_EQ(a.value, 19);
  EXPECT_TRUE(a.pass);
  const auto b = check_mod2(2, 3);
  EXPECT_EQ(b.value, -61);
  EXPECT_EQ(b.observed, 1);
  EXPECT_TRUE(b.pass);
  const auto c = check_mod2(4, 2);
  EXPECT_EQ(c.value, 69);
  EXPECT_TRUE(c.pass);
}

TEST(Mod3, Examples) {
  const auto a = check_mod3(2, 2);
  EXPECT_EQ(a.rhs, 5);
  EXPECT_EQ(a.observed, 2);
  EXPECT_EQ(a.expected, 2);
  EXPECT_TRUE(a.pass);
  const auto b = check_mod3(3, 2);
  EXPECT_EQ(b.rhs, 19);
  EXPECT_EQ(b.observed, 1);
  EXPECT_TRUE(b.pass);
  const auto c = check_mod3(2, 3);
  EXPECT_EQ(c.rhs, 29);
  EXPECT_EQ(c.observed, 2);
  EXPECT_TRUE(c.pass);
  EXPECT_EQ(check_mod3(5, 1).rhs, -1);
}

TEST(PSquared, Examples) {
  const auto a = check_p_squared(2, 2);
  EXPECT_EQ(a.value, 5);
  EXPECT_EQ(a.modulus, 4);
  EXPECT_TRUE(a.pass);
  const auto b = check_p_squared(3, 3);
  EXPECT_EQ(b.value, -1513);
  EXPECT_EQ(b.observed, 8);
  EXPECT_EQ(b.expected, 8);
  EXPECT_TRUE(b.pass);
  EXPECT_TRUE(check_p_squared(3, 2).pass);
  EXPECT_TRUE(check_p_squared(5, 0).pass);
  EXPECT_THROW(check_p_squared(4, 2), std::invalid_argument);
  EXPECT_THROW(check_p_squared(1, 2), std::invalid_argument);
}

TEST(TwoPSquared, Examples) {
  const auto a = check_2p_squared(3, 2);
  EXPECT_EQ(a.modulus, 18);
  EXPECT_TRUE(a.pass);
  const auto b = check_2p_squared(3, 3);
  EXPECT_EQ(b.observed, 17);
  EXPECT_TRUE(b.pass);
  const auto c = check_2p_squared(5, 1);
  EXPECT_EQ(c.value, -1);
  EXPECT_EQ(c.modulus, 50);
  EXPECT_TRUE(c.pass);
  EXPECT_THROW(check_2p_squared(2, 2), std::invalid_argument);
  EXPECT_THROW(check_2p_squared(9, 2), std::invalid_argument);
}

TEST(Sweep, Families) {
  EXPECT_TRUE(congruence_sweep(CongruenceId::mod2, 2, 10).pass());
  const auto p2 = congruence_sweep(CongruenceId::p_squared, 3, 6);
  EXPECT_EQ(p2.verdicts.size(), 6u);
  EXPECT_TRUE(p2.pass());
  EXPECT_THROW(congruence_sweep(CongruenceId::two_p_squared, 2, 5), std::invalid_argument);
  EXPECT_THROW(congruence_sweep(CongruenceId::mod3, 1, 5), std::invalid_argument);
}

TEST(Sweep, SweepMatchesSingleChecks) {
  const auto r = congruence_sweep(CongruenceId::mod3, 4, 6);
  for (const auto& v : r.verdicts) {
    const auto single = check_mod3(4, v.n);
    EXPECT_EQ(v.value, single.value);
    EXPECT_EQ(v.rhs, single.rhs);
  }
}

// A wrong right-hand side must be caught: E_{2n} is never 0 mod 2.
TEST(Verdict, DetectsFailure) {
  const auto v = detail::make_verdict(1, -61, 0, 2);
  EXPECT_FALSE(v.pass);
  EXPECT_EQ(v.observed, 1);
}

TEST(Names, RoundTrip) {
  for (auto id : {CongruenceId::mod2, CongruenceId::mod3, CongruenceId::p_squared, CongruenceId::two_p_squared})
    EXPECT_EQ(parse_congruence(to_string(id)), id);
  EXPECT_FALSE(parse_congruence("mod5").has_value());
}

TEST(Rotation, Examples) {
  EXPECT_EQ(rotate_blocks(parse_partition("1 2/3 4/5 6/7 8")), parse_partition("3 4/5 6/1 2/7 8"));
  EXPECT_EQ(rotate_blocks(parse_partition("1 2/3 4")), parse_partition("1 2/3 4"));
  EXPECT_EQ(rotate_blocks(parse_partition("1 2 3 4 5 6")), parse_partition("1 2 3 4 5 6"));
}

TEST(Rotation, OrbitStructureAndMod3) {
  for (std::size_t d = 2; d <= 3; ++d) {
    for (std::size_t n = d; n <= 10; n += d) {
      const auto a = audit_rotation(n, d);
      EXPECT_TRUE(a.pass()) << d << "," << n;
      EXPECT_EQ(a.long_signed_sum + a.short_signed_sum, euler_recursion(d, n)[n]);
    }
  }
}
