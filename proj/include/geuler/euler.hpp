#pragma once

// Generalized Euler numbers E_n^(d), the n!-scaled coefficients of
// 1 / (1 + x^d/d! + x^{2d}/(2d)! + ...), by several independent routes.

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "exactnum.hpp"
#include "partitions.hpp"

namespace geuler {

enum class Method { recursion, series, compositions, determinant, bruteforce, alternating };

inline constexpr std::array<Method, 6> kAllMethods = {
    Method::recursion,   Method::series,     Method::compositions,
    Method::determinant, Method::bruteforce, Method::alternating};

inline std::string_view to_string(Method m) {
  switch (m) {
    case Method::recursion: return "recursion";
    case Method::series: return "series";
    case Method::compositions: return "compositions";
    case Method::determinant: return "determinant";
    case Method::bruteforce: return "bruteforce";
    case Method::alternating: return "alternating";
  }
  return "?";
}

inline std::optional<Method> parse_method(std::string_view name) {
  for (Method m : kAllMethods)
    if (to_string(m) == name) return m;
  return std::nullopt;
}

/// Brute-force methods enumerate partitions or permutations and carry a cap.
inline bool is_brute_force(Method m) {
  return m == Method::bruteforce || m == Method::alternating;
}

/// E_n^(d) for 0 <= n <= n_max, tagged with the method that produced it.
struct EulerTable {
  std::size_t d = 2;
  Method method = Method::recursion;
  std::vector<Integer> values;

  std::size_t n_max() const { return values.empty() ? 0 : values.size() - 1; }
  const Integer& operator[](std::size_t n) const { return values.at(n); }
};

/// Truncated power series with exact rational coefficients; coeffs[k] is
/// the coefficient of x^k.
struct SeriesCoefficients {
  std::vector<Rational> coeffs;
  std::size_t order() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
};

// ---------------------------------------------------------------------------

/// E_0 = 1, E_{dm} = -sum_{i<m} C(dm, di) E_{di}, zero off multiples of d.
inline EulerTable euler_recursion(std::size_t d, std::size_t n_max) {
  detail::require_d(d);
  EulerTable t{d, Method::recursion, std::vector<Integer>(n_max + 1, 0)};
  t.values[0] = 1;
  for (std::size_t n = d; n <= n_max; n += d) {
    Integer acc = 0;
    for (std::size_t k = 0; k < n; k += d) acc += binomial(n, k) * t.values[k];
    t.values[n] = -acc;
  }
  return t;
}

/// 1 + x^d/d! + x^{2d}/(2d)! + ... truncated at x^order.
inline SeriesCoefficients sectioned_exponential(std::size_t d, std::size_t order) {
  detail::require_d(d);
  SeriesCoefficients f{std::vector<Rational>(order + 1, Rational(0))};
  for (std::size_t k = 0; k <= order; k += d) f.coeffs[k] = make_rational(1, factorial(k));
  return f;
}

/// Reciprocal of a series with constant term 1:
/// c_0 = 1, c_k = -sum_{j=1..k} f_j c_{k-j}.
inline SeriesCoefficients reciprocal_series(const SeriesCoefficients& f) {
  if (f.coeffs.empty() || f.coeffs[0] != 1)
    throw std::invalid_argument("reciprocal_series: constant term must be 1");
  const std::size_t order = f.order();
  SeriesCoefficients c{std::vector<Rational>(order + 1, Rational(0))};
  c.coeffs[0] = 1;
  for (std::size_t k = 1; k <= order; ++k) {
    Rational acc = 0;
    for (std::size_t j = 1; j <= k; ++j)
      if (f.coeffs[j] != 0) acc += f.coeffs[j] * c.coeffs[k - j];
    c.coeffs[k] = -acc;
  }
  return c;
}

/// Truncated product of two series of the same order.
inline SeriesCoefficients multiply_truncated(const SeriesCoefficients& a,
                                             const SeriesCoefficients& b) {
  const std::size_t order = std::min(a.order(), b.order());
  SeriesCoefficients out{std::vector<Rational>(order + 1, Rational(0))};
  for (std::size_t i = 0; i <= order; ++i)
    for (std::size_t j = 0; i + j <= order; ++j) out.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
  return out;
}

/// n! * [x^n] of the reciprocal of the d-sectioned exponential. Throws
/// std::logic_error if a scaled coefficient fails to be integral.
inline EulerTable euler_series(std::size_t d, std::size_t n_max) {
  const SeriesCoefficients c = reciprocal_series(sectioned_exponential(d, n_max));
  EulerTable t{d, Method::series, std::vector<Integer>(n_max + 1, 0)};
  for (std::size_t n = 0; n <= n_max; ++n) {
    const Rational scaled = c.coeffs[n] * Rational(factorial(n));
    if (scaled.get_den() != 1)
      throw std::logic_error("euler_series: n! c_n not integral at n = " + std::to_string(n));
    t.values[n] = scaled.get_num();
  }
  return t;
}

/// Calls visit(parts) for every composition of m into positive parts, in
/// lexicographic order of the part sequences. m = 0 yields the empty
/// composition once.
template <class Visitor>
void for_each_composition(std::size_t m, Visitor&& visit) {
  std::vector<std::size_t> parts;
  auto rec = [&](auto&& self, std::size_t left) -> void {
    if (left == 0) {
      visit(static_cast<const std::vector<std::size_t>&>(parts));
      return;
    }
    for (std::size_t first = 1; first <= left; ++first) {
      parts.push_back(first);
      self(self, left - first);
      parts.pop_back();
    }
  };
  rec(rec, m);
}

/// sum over compositions (m_1..m_k) of n/d of (-1)^k multinomial(n; d m_1, ..., d m_k).
/// Enumerates 2^{n/d - 1} compositions; cap bounds that count.
inline Integer euler_composition_sum(std::size_t d, std::size_t n,
                                     std::uint64_t cap = kDefaultCap) {
  detail::require_d(d);
  if (n % d != 0) return 0;
  const std::size_t m = n / d;
  if (m > 0) {
    Integer count;
    mpz_ui_pow_ui(count.get_mpz_t(), 2, m - 1);
    detail::check_cap(count, cap, "composition enumeration");
  }
  Integer total = 0;
  std::vector<std::size_t> sizes;
  for_each_composition(m, [&](const std::vector<std::size_t>& parts) {
    sizes.resize(parts.size());
    std::transform(parts.begin(), parts.end(), sizes.begin(), [d](std::size_t p) { return p * d; });
    const Integer term = multinomial(n, sizes);
    if (parts.size() % 2 == 0)
      total += term;
    else
      total -= term;
  });
  return total;
}

/// Square matrix of exact rationals, row-major.
class RationalMatrix {
 public:
  explicit RationalMatrix(std::size_t n) : n_(n), data_(n * n, Rational(0)) {}

  std::size_t size() const { return n_; }
  /// 1-based.
  Rational& operator()(std::size_t i, std::size_t j) { return data_[(i - 1) * n_ + (j - 1)]; }
  const Rational& operator()(std::size_t i, std::size_t j) const {
    return data_[(i - 1) * n_ + (j - 1)];
  }

 private:
  std::size_t n_;
  std::vector<Rational> data_;
};

/// Entry (i, j) = 1/((i - j + 1) d)!, zero when i - j + 1 < 0. Lower
/// Hessenberg with unit superdiagonal.
inline RationalMatrix euler_matrix(std::size_t d, std::size_t n) {
  detail::require_d(d);
  RationalMatrix a(n);
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= std::min(n, i + 1); ++j)
      a(i, j) = make_rational(1, factorial((i + 1 - j) * d));
  return a;
}

/// Determinant of a lower Hessenberg matrix (zero above the superdiagonal)
/// by expansion along the last row:
///   D_0 = 1,  D_m = sum_{k=1..m} (-1)^{m-k} a(m,k) (prod_{j=k}^{m-1} a(j,j+1)) D_{k-1}.
/// The 0x0 determinant is 1.
inline Rational hessenberg_determinant(const RationalMatrix& a) {
  const std::size_t n = a.size();
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i + 2; j <= n; ++j)
      if (a(i, j) != 0) throw std::invalid_argument("hessenberg_determinant: matrix is not lower Hessenberg");
  std::vector<Rational> det(n + 1, Rational(0));
  det[0] = 1;
  for (std::size_t m = 1; m <= n; ++m) {
    Rational acc = 0;
    Rational super = 1;  // prod_{j=k}^{m-1} a(j, j+1), built as k descends
    for (std::size_t k = m; k >= 1; --k) {
      if (k < m) super *= a(k, k + 1);
      const Rational term = a(m, k) * super * det[k - 1];
      if ((m - k) % 2 == 0)
        acc += term;
      else
        acc -= term;
    }
    det[m] = acc;
  }
  return det[n];
}

/// E_{dn}^(d) = (-1)^n (dn)! det[1/((i-j+1)d)!]_{n x n}. Returns 1 for n = 0
/// (empty determinant).
inline Integer euler_determinant(std::size_t d, std::size_t n) {
  detail::require_d(d);
  if (n == 0) return 1;
  const Rational scaled = hessenberg_determinant(euler_matrix(d, n)) * Rational(factorial(d * n));
  if (scaled.get_den() != 1)
    throw std::logic_error("euler_determinant: non-integral result for n = " + std::to_string(n));
  return n % 2 == 0 ? Integer(scaled.get_num()) : Integer(-scaled.get_num());
}

// ---------------------------------------------------------------------------
// Classic Euler (zigzag) numbers

/// E_0..E_{n_max} (coefficients of tan x + sec x) from the Seidel-Entringer
/// triangle: e(0,0) = 1, e(n,0) = 0, e(n,k) = e(n,k-1) + e(n-1,n-k); E_n = e(n,n).
inline std::vector<Integer> classic_euler(std::size_t n_max) {
  std::vector<Integer> out{Integer(1)};
  std::vector<Integer> prev{Integer(1)};
  for (std::size_t n = 1; n <= n_max; ++n) {
    std::vector<Integer> row(n + 1, 0);
    for (std::size_t k = 1; k <= n; ++k) row[k] = row[k - 1] + prev[n - k];
    out.push_back(row[n]);
    prev = std::move(row);
  }
  return out;
}

/// E_n^(2) == (-1)^{n/2} E_n for even n and 0 for odd n.
inline bool check_classic_relation(std::size_t n) {
  const Integer signed_value = euler_recursion(2, n)[n];
  if (n % 2 == 1) return signed_value == 0;
  const Integer classic = classic_euler(n)[n];
  return signed_value == ((n / 2) % 2 == 0 ? classic : Integer(-classic));
}

// ---------------------------------------------------------------------------

/// Value of E_n^(d) by a single method. Brute-force and composition methods
/// throw CapExceeded when their enumeration would exceed cap.
inline Integer euler_value(Method method, std::size_t d, std::size_t n,
                           std::uint64_t cap = kDefaultCap) {
  detail::require_d(d);
  switch (method) {
    case Method::recursion: return euler_recursion(d, n)[n];
    case Method::series: return euler_series(d, n)[n];
    case Method::compositions: return euler_composition_sum(d, n, cap);
    case Method::determinant: return n % d == 0 ? euler_determinant(d, n / d) : Integer(0);
    case Method::bruteforce: return signed_sum(n, d, cap);
    case Method::alternating: {
      if (n % d != 0) return 0;
      const Integer count = count_d_alternating(n, d, cap);
      return (n / d) % 2 == 0 ? count : Integer(-count);
    }
  }
  throw std::invalid_argument("unknown method");
}

/// Full table 0..n_max by one method.
inline EulerTable euler_table(Method method, std::size_t d, std::size_t n_max,
                              std::uint64_t cap = kDefaultCap) {
  detail::require_d(d);
  switch (method) {
    case Method::recursion: return euler_recursion(d, n_max);
    case Method::series: return euler_series(d, n_max);
    default: break;
  }
  EulerTable t{d, method, {}};
  t.values.reserve(n_max + 1);
  for (std::size_t n = 0; n <= n_max; ++n) t.values.push_back(euler_value(method, d, n, cap));
  return t;
}

struct CrosscheckRow {
  std::size_t n = 0;
  std::map<Method, Integer> values;  // methods that ran
  std::vector<Method> skipped;       // cap exceeded
  bool agree = true;
};

struct CrosscheckReport {
  std::size_t d = 2;
  std::size_t n_max = 0;
  std::vector<Method> methods;
  std::vector<CrosscheckRow> rows;

  bool all_agree() const {
    return std::all_of(rows.begin(), rows.end(), [](const CrosscheckRow& r) { return r.agree; });
  }
  std::size_t skipped_count() const {
    std::size_t s = 0;
    for (const auto& r : rows) s += r.skipped.size();
    return s;
  }
};

/// Computes E_n^(d), 0 <= n <= n_max, by each selected method and compares
/// them row by row. Methods whose enumeration exceeds cap at some n are
/// recorded as skipped for that row rather than passed. A row agrees when
/// all methods that ran returned the same value.
inline CrosscheckReport crosscheck(std::size_t d, std::size_t n_max, std::vector<Method> methods,
                                   std::uint64_t cap = kDefaultCap) {
  detail::require_d(d);
  std::sort(methods.begin(), methods.end());
  methods.erase(std::unique(methods.begin(), methods.end()), methods.end());
  if (methods.size() < 2) throw std::invalid_argument("crosscheck: select at least two distinct methods");

  CrosscheckReport report{d, n_max, methods, {}};
  std::map<Method, EulerTable> tables;
  for (Method m : methods)
    if (m == Method::recursion || m == Method::series) tables.emplace(m, euler_table(m, d, n_max));

  // enumeration sizes grow with n, so a method over its cap stays over it
  std::map<Method, bool> exhausted;
  for (std::size_t n = 0; n <= n_max; ++n) {
    CrosscheckRow row;
    row.n = n;
    for (Method m : methods) {
      if (auto it = tables.find(m); it != tables.end()) {
        row.values.emplace(m, it->second[n]);
        continue;
      }
      if (exhausted[m] && n % d == 0) {
        row.skipped.push_back(m);
        continue;
      }
      try {
        row.values.emplace(m, euler_value(m, d, n, cap));
      } catch (const CapExceeded&) {
        row.skipped.push_back(m);
        exhausted[m] = true;
      }
    }
    const Integer* first = nullptr;
    for (const auto& [m, v] : row.values) {
      if (first == nullptr)
        first = &v;
      else if (v != *first)
        row.agree = false;
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace geuler
