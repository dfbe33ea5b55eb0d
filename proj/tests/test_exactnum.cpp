#include <gtest/gtest.h>

#include <random>
#include <thread>
#include <vector>

#include "geuler/exactnum.hpp"
#include "oracle.hpp"

using namespace geuler;

TEST(Factorial, SmallValues) {
  EXPECT_EQ(factorial(0), 1);
  EXPECT_EQ(factorial(5), 120);
  EXPECT_EQ(factorial(10), 3628800);
}

TEST(Factorial, CacheGrowsAndMatchesProduct) {
  FactorialCache cache;
  EXPECT_EQ(cache.max_n(), 0u);
  EXPECT_EQ(cache.get(30), oracle::fact(30));
  EXPECT_GE(cache.max_n(), 30u);
  for (unsigned k = 1; k <= 30; ++k) EXPECT_EQ(cache.get(k), cache.get(k - 1) * k);
}

TEST(Factorial, ConcurrentReadersAgree) {
  FactorialCache cache;
  std::vector<mpz_class> results(8);
  std::vector<std::thread> threads;
  for (std::size_t t = 0; t < results.size(); ++t)
    threads.emplace_back([&, t] { results[t] = cache.get(40 + 5 * t); });
  for (auto& th : threads) th.join();
  for (std::size_t t = 0; t < results.size(); ++t) EXPECT_EQ(results[t], oracle::fact(40 + 5 * t));
}

TEST(Binomial, Examples) {
  EXPECT_EQ(binomial(4, 2), 6);
  EXPECT_EQ(binomial(8, 4), 70);
  EXPECT_EQ(binomial(3, 5), 0);
  EXPECT_EQ(binomial(0, 0), 1);
}

TEST(Binomial, SymmetryAndPascal) {
  for (std::size_t n = 0; n <= 64; ++n) {
    for (std::size_t k = 0; k <= n; ++k) {
      EXPECT_EQ(binomial(n, k), binomial(n, n - k)) << n << "," << k;
      if (k >= 1 && k + 1 <= n)
        EXPECT_EQ(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k)) << n << "," << k;
    }
  }
}

TEST(Multinomial, Examples) {
  EXPECT_EQ(multinomial(4, {2, 2}), 6);
  EXPECT_EQ(multinomial(6, {3, 3}), 20);
  EXPECT_EQ(multinomial(8, {2, 2, 2, 2}), 2520);
  EXPECT_EQ(multinomial(0, {}), 1);
}

TEST(Multinomial, RejectsWrongTotal) {
  EXPECT_THROW(multinomial(5, {2, 2}), std::invalid_argument);
  EXPECT_THROW(multinomial(3, {2, 2}), std::invalid_argument);
}

TEST(Multinomial, TelescopingBinomials) {
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t k = 1 + rng() % 6;
    std::vector<std::size_t> parts(k);
    std::size_t n = 0;
    for (auto& part : parts) n += (part = rng() % 9);
    mpz_class product = 1;
    std::size_t prefix = 0;
    for (std::size_t part : parts) {
      prefix += part;
      product *= binomial(prefix, part);
    }
    EXPECT_EQ(multinomial(n, parts), product);
  }
}

TEST(Rational, ReciprocalProductIsOne) {
  std::mt19937_64 rng(777);
  for (int trial = 0; trial < 500; ++trial) {
    const long a = static_cast<long>(rng() % 200001) - 100000;
    const long b = static_cast<long>(rng() % 200001) - 100000;
    if (a == 0 || b == 0) continue;
    const Rational x = make_rational(a, b);
    const Rational y = make_rational(b, a);
    EXPECT_EQ(x * y, 1);
    EXPECT_GT(x.get_den(), 0);
    EXPECT_EQ(gcd(x.get_num(), x.get_den()), 1);
  }
}

TEST(Rational, NormalizationIsIdempotent) {
  Rational r = make_rational(-12, -18);
  EXPECT_EQ(r.get_num(), 2);
  EXPECT_EQ(r.get_den(), 3);
  Rational again = r;
  again.canonicalize();
  EXPECT_EQ(again.get_num(), r.get_num());
  EXPECT_EQ(again.get_den(), r.get_den());
  EXPECT_EQ(make_rational(6, -4).get_den(), 2);
  EXPECT_EQ(make_rational(6, -4).get_num(), -3);
  EXPECT_THROW(make_rational(1, 0), std::domain_error);
}

TEST(Residues, NegativeValuesAndTrialDivision) {
  EXPECT_EQ(residue(-61, 2), 1);
  EXPECT_EQ(residue(-1513, 9), 8);
  EXPECT_TRUE(congruent(-1513, -1, 9));
  EXPECT_TRUE(congruent(-1513, 8, 9));
  EXPECT_FALSE(congruent(19, 0, 9));
  EXPECT_TRUE(is_prime(2));
  EXPECT_TRUE(is_prime(7));
  EXPECT_FALSE(is_prime(1));
  EXPECT_FALSE(is_prime(4));
  EXPECT_FALSE(is_prime(9));
}
