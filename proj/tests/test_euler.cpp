#include <gtest/gtest.h>

#include <vector>

#include "geuler/euler.hpp"
#include "oracle.hpp"

using namespace geuler;

namespace {

std::vector<Integer> ints(std::initializer_list<long> xs) {
  std::vector<Integer> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

}  // namespace

// Oracle: E_8^(4) from the labeling-based enumeration of Pi_8^(4)
// (70 ordered pairs of 4-blocks minus the single block).
TEST(Oracle, FrozenValues) {
  EXPECT_EQ(oracle::signed_sum(8, 4), 69);
  EXPECT_EQ(oracle::d_divisible_partitions(8, 4).size(), 71u);
  EXPECT_EQ(oracle::signed_sum(6, 3), 19);
  EXPECT_EQ(oracle::signed_sum(4, 2), 5);
}

TEST(Recursion, GoldenTables) {
  EXPECT_EQ(euler_recursion(2, 8).values, ints({1, 0, -1, 0, 5, 0, -61, 0, 1385}));
  EXPECT_EQ(euler_recursion(3, 9).values, ints({1, 0, 0, -1, 0, 0, 19, 0, 0, -1513}));
  const auto t4 = euler_recursion(4, 8);
  EXPECT_EQ(t4[0], 1);
  EXPECT_EQ(t4[4], -1);
  EXPECT_EQ(t4[8], 69);
}

TEST(Recursion, RejectsSmallD) {
  EXPECT_THROW(euler_recursion(1, 4), std::invalid_argument);
  EXPECT_THROW(euler_recursion(0, 4), std::invalid_argument);
}

TEST(Series, HandExpansion) {
  // 1/(1 + x^2/2 + x^4/24) = 1 - x^2/2 + (1/4 - 1/24) x^4 + ...
  const auto c = reciprocal_series(sectioned_exponential(2, 4));
  EXPECT_EQ(c.coeffs[2], make_rational(-1, 2));
  EXPECT_EQ(c.coeffs[4], make_rational(5, 24));
  EXPECT_EQ(euler_series(2, 4)[4], 5);
  EXPECT_EQ(euler_series(3, 3)[3], -1);
  EXPECT_EQ(euler_series(2, 7)[7], 0);
}

TEST(Series, TruncatedProductIsOne) {
  for (std::size_t d = 2; d <= 5; ++d) {
    const auto f = sectioned_exponential(d, 40);
    const auto prod = multiply_truncated(f, reciprocal_series(f));
    EXPECT_EQ(prod.coeffs[0], 1);
    for (std::size_t k = 1; k <= 40; ++k) EXPECT_EQ(prod.coeffs[k], 0) << d << "," << k;
  }
}

TEST(Series, RejectsBadConstantTerm) {
  SeriesCoefficients f{{Rational(2), Rational(1)}};
  EXPECT_THROW(reciprocal_series(f), std::invalid_argument);
}

TEST(Compositions, Examples) {
  EXPECT_EQ(euler_composition_sum(2, 4), 5);
  EXPECT_EQ(euler_composition_sum(2, 5), 0);
  EXPECT_EQ(euler_composition_sum(3, 6), 19);
  EXPECT_EQ(euler_composition_sum(3, 0), 1);
}

TEST(Compositions, LexicographicOrder) {
  std::vector<std::vector<std::size_t>> seen;
  for_each_composition(4, [&](const std::vector<std::size_t>& c) { seen.push_back(c); });
  const std::vector<std::vector<std::size_t>> expected = {
      {1, 1, 1, 1}, {1, 1, 2}, {1, 2, 1}, {1, 3}, {2, 1, 1}, {2, 2}, {3, 1}, {4}};
  EXPECT_EQ(seen, expected);
  std::size_t empty_count = 0;
  for_each_composition(0, [&](const std::vector<std::size_t>& c) { empty_count += c.empty(); });
  EXPECT_EQ(empty_count, 1u);
}

TEST(Compositions, CapIsEnforced) {
  EXPECT_THROW(euler_composition_sum(2, 60, 1000), CapExceeded);
}

TEST(Determinant, HandExpansions) {
  EXPECT_EQ(euler_determinant(2, 2), 5);   // 24 (1/4 - 1/24)
  EXPECT_EQ(euler_determinant(2, 1), -1);  // -2! (1/2!)
  EXPECT_EQ(euler_determinant(3, 2), 19);  // 720 (1/36 - 1/720)
  EXPECT_EQ(euler_determinant(3, 0), 1);
}

TEST(Determinant, MatrixShape) {
  const auto a = euler_matrix(2, 4);
  for (std::size_t i = 1; i <= 4; ++i) {
    if (i < 4) {
      EXPECT_EQ(a(i, i + 1), 1);
    }
    for (std::size_t j = i + 2; j <= 4; ++j) EXPECT_EQ(a(i, j), 0);
    EXPECT_EQ(a(i, i), make_rational(1, 2));
  }
  EXPECT_EQ(a(4, 1), make_rational(1, 40320));
}

TEST(Determinant, HessenbergRecurrenceMatchesCofactorExpansion) {
  for (std::size_t d = 2; d <= 4; ++d) {
    for (std::size_t n = 0; n <= 5; ++n) {
      const auto a = euler_matrix(d, n);
      std::vector<std::vector<mpq_class>> rows(n, std::vector<mpq_class>(n));
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) rows[i][j] = a(i + 1, j + 1);
      EXPECT_EQ(hessenberg_determinant(a), oracle::laplace_det(rows)) << d << "," << n;
    }
  }
  // general (non-unit) superdiagonal
  RationalMatrix m(3);
  const long vals[3][3] = {{2, 3, 0}, {5, 7, 11}, {13, 17, 19}};
  std::vector<std::vector<mpq_class>> rows(3, std::vector<mpq_class>(3));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) rows[i][j] = m(i + 1, j + 1) = vals[i][j];
  EXPECT_EQ(hessenberg_determinant(m), oracle::laplace_det(rows));
  m(1, 3) = 1;
  EXPECT_THROW(hessenberg_determinant(m), std::invalid_argument);
}

TEST(Classic, EntringerValues) {
  EXPECT_EQ(classic_euler(9), ints({1, 1, 1, 2, 5, 16, 61, 272, 1385, 7936}));
}

TEST(Classic, MatchesAlternatingPermutationCounts) {
  const auto e = classic_euler(8);
  for (int n = 1; n <= 8; ++n) EXPECT_EQ(e[n], oracle::count_d_alternating(n, 2)) << n;
}

TEST(Classic, SignedRelation) {
  for (std::size_t n = 0; n <= 30; ++n) EXPECT_TRUE(check_classic_relation(n)) << n;
}

TEST(Properties, ZerosOneAndSigns) {
  for (std::size_t d = 2; d <= 5; ++d) {
    const auto t = euler_recursion(d, 15 * d);
    EXPECT_EQ(t[0], 1);
    for (std::size_t n = 1; n <= 15 * d; ++n) {
      if (n % d != 0) {
        EXPECT_EQ(t[n], 0);
      } else {
        const int expected = (n / d) % 2 == 0 ? 1 : -1;
        EXPECT_EQ(sgn(t[n]), expected) << d << "," << n;
      }
    }
  }
}

TEST(Properties, AllExactMethodsAgree) {
  for (std::size_t d = 2; d <= 5; ++d) {
    const std::size_t n_max = 8 * d;
    const auto rec = euler_recursion(d, n_max);
    const auto ser = euler_series(d, n_max);
    for (std::size_t n = 0; n <= n_max; ++n) {
      EXPECT_EQ(ser[n], rec[n]);
      EXPECT_EQ(euler_composition_sum(d, n), rec[n]);
      EXPECT_EQ(euler_value(Method::determinant, d, n), rec[n]);
    }
  }
}

TEST(Crosscheck, AllMethodsAgreeAtD2) {
  const auto r = crosscheck(2, 8, {kAllMethods.begin(), kAllMethods.end()});
  EXPECT_TRUE(r.all_agree());
  EXPECT_EQ(r.skipped_count(), 0u);
  EXPECT_EQ(r.rows[8].values.size(), 6u);
  EXPECT_EQ(r.rows[8].values.at(Method::bruteforce), 1385);
}

TEST(Crosscheck, LehmerWithTwoMethods) {
  const auto r = crosscheck(3, 9, {Method::recursion, Method::series});
  EXPECT_TRUE(r.all_agree());
  EXPECT_EQ(r.rows[9].values.at(Method::series), -1513);
}

TEST(Crosscheck, SingleBlockValue) {
  const auto r = crosscheck(5, 5, {kAllMethods.begin(), kAllMethods.end()});
  EXPECT_TRUE(r.all_agree());
  for (const auto& [m, v] : r.rows[5].values) EXPECT_EQ(v, -1) << to_string(m);
}

TEST(Crosscheck, SkipsOverCapInsteadOfPassing) {
  const auto r = crosscheck(2, 12, {Method::recursion, Method::bruteforce}, 1000);
  EXPECT_TRUE(r.all_agree());
  EXPECT_GT(r.skipped_count(), 0u);
  EXPECT_EQ(r.rows[12].skipped, std::vector<Method>{Method::bruteforce});
  EXPECT_EQ(r.rows[12].values.size(), 1u);
}

TEST(Crosscheck, RejectsFewerThanTwoMethods) {
  EXPECT_THROW(crosscheck(2, 4, {}), std::invalid_argument);
  EXPECT_THROW(crosscheck(2, 4, {Method::series}), std::invalid_argument);
  EXPECT_THROW(crosscheck(2, 4, {Method::series, Method::series}), std::invalid_argument);
}

TEST(Methods, NamesRoundTrip) {
  for (Method m : kAllMethods) EXPECT_EQ(parse_method(to_string(m)), m);
  EXPECT_FALSE(parse_method("magic").has_value());
}
