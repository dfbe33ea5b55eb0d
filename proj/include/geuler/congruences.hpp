#pragma once

// Congruences satisfied by E_{dn}^(d), and the C_3 block rotation used in
// the mod 3 argument.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "euler.hpp"
#include "exactnum.hpp"
#include "partitions.hpp"

namespace geuler {

enum class CongruenceId { mod2, mod3, p_squared, two_p_squared };

inline std::string_view to_string(CongruenceId id) {
  switch (id) {
    case CongruenceId::mod2: return "mod2";
    case CongruenceId::mod3: return "mod3";
    case CongruenceId::p_squared: return "p2";
    case CongruenceId::two_p_squared: return "2p2";
  }
  return "?";
}

inline std::optional<CongruenceId> parse_congruence(std::string_view name) {
  for (CongruenceId id : {CongruenceId::mod2, CongruenceId::mod3, CongruenceId::p_squared,
                          CongruenceId::two_p_squared})
    if (to_string(id) == name) return id;
  return std::nullopt;
}

/// mod2 and mod3 are parameterized by d, the prime-power families by p.
inline bool takes_prime(CongruenceId id) {
  return id == CongruenceId::p_squared || id == CongruenceId::two_p_squared;
}

/// One congruence instance. `observed` and `expected` are least nonnegative
/// residues for display; `pass` is decided by modulus | (value - rhs).
struct CongruenceVerdict {
  std::size_t n = 0;
  Integer value;     // E_{dn}^(d) (or E_{pn}^(p))
  Integer rhs;       // the right-hand side before reduction
  Integer modulus;
  Integer observed;
  Integer expected;
  bool pass = false;
};

struct CongruenceReport {
  CongruenceId id = CongruenceId::mod2;
  std::size_t param = 2;  // d or p
  std::size_t n_max = 0;
  std::vector<CongruenceVerdict> verdicts;

  bool pass() const {
    return std::all_of(verdicts.begin(), verdicts.end(),
                       [](const CongruenceVerdict& v) { return v.pass; });
  }
};

namespace detail {

inline CongruenceVerdict make_verdict(std::size_t n, Integer value, Integer rhs, Integer modulus) {
  CongruenceVerdict v;
  v.n = n;
  v.observed = residue(value, modulus);
  v.expected = residue(rhs, modulus);
  v.pass = congruent(value, rhs, modulus);
  v.value = std::move(value);
  v.rhs = std::move(rhs);
  v.modulus = std::move(modulus);
  return v;
}

inline void require_prime(std::size_t p) {
  if (!is_prime(p)) throw std::invalid_argument("p = " + std::to_string(p) + " is not prime");
}

inline void require_odd_prime(std::size_t p) {
  require_prime(p);
  if (p == 2) throw std::invalid_argument("p must be an odd prime, got 2");
}

inline Integer alternating_unit(std::size_t n) { return n % 2 == 0 ? 1 : -1; }

// Right-hand sides, given the value E_{dn}^(d) supplied by the caller.
inline CongruenceVerdict mod2_verdict(std::size_t n, Integer value) {
  return make_verdict(n, std::move(value), 1, 2);
}

inline CongruenceVerdict mod3_verdict(std::size_t d, std::size_t n, Integer value) {
  Integer rhs = -1;
  for (std::size_t k = 1; k < n; ++k) rhs += binomial(d * n, d * k);
  return make_verdict(n, std::move(value), std::move(rhs), 3);
}

inline CongruenceVerdict p_squared_verdict(std::size_t p, std::size_t n, Integer value) {
  return make_verdict(n, std::move(value), alternating_unit(n),
                      Integer(static_cast<unsigned long>(p * p)));
}

inline CongruenceVerdict two_p_squared_verdict(std::size_t p, std::size_t n, Integer value) {
  return make_verdict(n, std::move(value), alternating_unit(n),
                      Integer(static_cast<unsigned long>(2 * p * p)));
}

}  // namespace detail

/// E_{dn}^(d) == 1 (mod 2).
inline CongruenceVerdict check_mod2(std::size_t d, std::size_t n) {
  detail::require_d(d);
  return detail::mod2_verdict(n, euler_recursion(d, d * n)[d * n]);
}

/// E_{dn}^(d) == -1 + sum_{k=1}^{n-1} C(dn, dk) (mod 3).
inline CongruenceVerdict check_mod3(std::size_t d, std::size_t n) {
  detail::require_d(d);
  return detail::mod3_verdict(d, n, euler_recursion(d, d * n)[d * n]);
}

/// E_{pn}^(p) == (-1)^n (mod p^2), p prime.
inline CongruenceVerdict check_p_squared(std::size_t p, std::size_t n) {
  detail::require_prime(p);
  return detail::p_squared_verdict(p, n, euler_recursion(p, p * n)[p * n]);
}

/// E_{pn}^(p) == (-1)^n (mod 2p^2), p an odd prime.
inline CongruenceVerdict check_2p_squared(std::size_t p, std::size_t n) {
  detail::require_odd_prime(p);
  return detail::two_p_squared_verdict(p, n, euler_recursion(p, p * n)[p * n]);
}

/// Runs one congruence family for 1 <= n <= n_max off a single recursion
/// table.
inline CongruenceReport congruence_sweep(CongruenceId id, std::size_t param, std::size_t n_max) {
  switch (id) {
    case CongruenceId::mod2:
    case CongruenceId::mod3: detail::require_d(param); break;
    case CongruenceId::p_squared: detail::require_prime(param); break;
    case CongruenceId::two_p_squared: detail::require_odd_prime(param); break;
  }
  const EulerTable table = euler_recursion(param, param * n_max);
  CongruenceReport report{id, param, n_max, {}};
  for (std::size_t n = 1; n <= n_max; ++n) {
    Integer value = table[param * n];
    switch (id) {
      case CongruenceId::mod2:
        report.verdicts.push_back(detail::mod2_verdict(n, std::move(value)));
        break;
      case CongruenceId::mod3:
        report.verdicts.push_back(detail::mod3_verdict(param, n, std::move(value)));
        break;
      case CongruenceId::p_squared:
        report.verdicts.push_back(detail::p_squared_verdict(param, n, std::move(value)));
        break;
      case CongruenceId::two_p_squared:
        report.verdicts.push_back(detail::two_p_squared_verdict(param, n, std::move(value)));
        break;
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// C_3 block rotation

/// (B1, B2, B3, B4, ..., Bk) -> (B2, B3, B1, B4, ..., Bk); fewer than three
/// blocks are left alone.
inline OrderedSetPartition rotate_blocks(const OrderedSetPartition& pi) {
  if (pi.length() < 3) return pi;
  std::vector<Block> blocks = pi.blocks();
  std::rotate(blocks.begin(), blocks.begin() + 1, blocks.begin() + 3);
  return detail::PartitionAccess::make(pi.ground_size(), std::move(blocks));
}

/// Summary of the rotation action on the d-divisible partitions of [n].
struct RotationAudit {
  std::size_t n = 0;
  std::size_t d = 2;
  std::size_t partitions = 0;
  bool order_three = true;        // rho^3 = id everywhere
  bool length_preserved = true;   // l(rho pi) = l(pi)
  bool orbit_sizes_ok = true;     // |orbit| = 3 iff l >= 3, else 1
  Integer long_signed_sum = 0;    // sum of signs over l >= 3
  Integer short_signed_sum = 0;   // sum of signs over l <= 2

  bool pass() const {
    return order_three && length_preserved && orbit_sizes_ok &&
           congruent(long_signed_sum, 0, 3);
  }
};

inline RotationAudit audit_rotation(std::size_t n, std::size_t d, std::uint64_t cap = kDefaultCap) {
  RotationAudit audit;
  audit.n = n;
  audit.d = d;
  std::int64_t long_sum = 0;
  std::int64_t short_sum = 0;
  for_each_d_divisible(n, d, [&](const OrderedSetPartition& pi) {
    ++audit.partitions;
    const OrderedSetPartition r1 = rotate_blocks(pi);
    const OrderedSetPartition r2 = rotate_blocks(r1);
    const OrderedSetPartition r3 = rotate_blocks(r2);
    if (r3 != pi) audit.order_three = false;
    if (r1.length() != pi.length() || r2.length() != pi.length()) audit.length_preserved = false;
    const bool distinct = r1 != pi && r2 != pi && r1 != r2;
    const bool trivial = r1 == pi;
    if (pi.length() >= 3 ? !distinct : !trivial) audit.orbit_sizes_ok = false;
    (pi.length() >= 3 ? long_sum : short_sum) += pi.sign();
  }, cap);
  audit.long_signed_sum = Integer(static_cast<long>(long_sum));
  audit.short_signed_sum = Integer(static_cast<long>(short_sum));
  return audit;
}

}  // namespace geuler
