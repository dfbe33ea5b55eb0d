#pragma once

// The C_p x C_p action on p-divisible ordered set partitions of [pn]
// generated by the cycles g = (1 2 ... p) and h = (p+1 ... 2p), the subgroup
// lattice of C_p x C_p with its Mobius function, and an exhaustive check of
// the Mobius inversion argument for E_{pn}^(p) == (-1)^n (mod p^2).

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "congruences.hpp"
#include "euler.hpp"
#include "exactnum.hpp"
#include "partitions.hpp"

namespace geuler {

/// g^a h^b.
struct GroupElement {
  std::size_t a = 0;
  std::size_t b = 0;

  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

inline GroupElement compose(GroupElement x, GroupElement y, std::size_t p) {
  return {(x.a + y.a) % p, (x.b + y.b) % p};
}

/// One of the p + 3 subgroups of C_p x C_p:
///   trivial = <e>, mixed(i) = <g h^i> (mixed(0) = <g>), pure_h = <h>, full = <g, h>.
struct SubgroupId {
  enum class Kind { trivial, mixed, pure_h, full };
  Kind kind = Kind::trivial;
  std::size_t index = 0;  // only meaningful for mixed

  static SubgroupId trivial() { return {Kind::trivial, 0}; }
  static SubgroupId mixed(std::size_t i) { return {Kind::mixed, i}; }
  static SubgroupId g() { return mixed(0); }
  static SubgroupId pure_h() { return {Kind::pure_h, 0}; }
  static SubgroupId full() { return {Kind::full, 0}; }

  bool is_middle() const { return kind == Kind::mixed || kind == Kind::pure_h; }

  friend auto operator<=>(const SubgroupId&, const SubgroupId&) = default;
};

inline std::string to_string(const SubgroupId& h) {
  switch (h.kind) {
    case SubgroupId::Kind::trivial: return "<e>";
    case SubgroupId::Kind::pure_h: return "<h>";
    case SubgroupId::Kind::full: return "<g,h>";
    case SubgroupId::Kind::mixed:
      if (h.index == 0) return "<g>";
      if (h.index == 1) return "<gh>";
      return "<gh^" + std::to_string(h.index) + ">";
  }
  return "?";
}

/// trivial, mixed(0..p-1), pure_h, full.
inline std::vector<SubgroupId> all_subgroups(std::size_t p) {
  std::vector<SubgroupId> out{SubgroupId::trivial()};
  for (std::size_t i = 0; i < p; ++i) out.push_back(SubgroupId::mixed(i));
  out.push_back(SubgroupId::pure_h());
  out.push_back(SubgroupId::full());
  return out;
}

inline std::vector<GroupElement> generators(const SubgroupId& h) {
  switch (h.kind) {
    case SubgroupId::Kind::trivial: return {};
    case SubgroupId::Kind::mixed: return {{1, h.index}};
    case SubgroupId::Kind::pure_h: return {{0, 1}};
    case SubgroupId::Kind::full: return {{1, 0}, {0, 1}};
  }
  return {};
}

/// Element set of a subgroup, sorted.
inline std::set<GroupElement> members(const SubgroupId& h, std::size_t p) {
  std::set<GroupElement> out{{0, 0}};
  // closure under the generators; the group is tiny
  bool grew = true;
  while (grew) {
    grew = false;
    for (const GroupElement& x : std::vector<GroupElement>(out.begin(), out.end()))
      for (const GroupElement& s : generators(h))
        grew |= out.insert(compose(x, s, p)).second;
  }
  return out;
}

/// Containment order on subgroups.
inline bool subgroup_leq(const SubgroupId& lo, const SubgroupId& hi, std::size_t p) {
  const auto a = members(lo, p);
  const auto b = members(hi, p);
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

/// Closed form: 1 at the bottom, -1 on the p + 1 middle subgroups, p at the top.
inline Integer closed_form_mu(const SubgroupId& h, std::size_t p) {
  switch (h.kind) {
    case SubgroupId::Kind::trivial: return 1;
    case SubgroupId::Kind::full: return static_cast<unsigned long>(p);
    default: return -1;
  }
}

struct SubgroupLattice {
  std::size_t p = 2;
  std::vector<SubgroupId> elements;
  std::map<SubgroupId, Integer> mu;

  bool leq(const SubgroupId& a, const SubgroupId& b) const { return subgroup_leq(a, b, p); }
};

/// Builds the lattice, computing mu from mu(bottom) = 1 and
/// mu(x) = -sum_{y < x} mu(y) under containment; throws std::logic_error if
/// that disagrees with closed_form_mu.
inline SubgroupLattice build_lattice(std::size_t p) {
  detail::require_prime(p);
  SubgroupLattice lattice{p, all_subgroups(p), {}};
  // elements are listed bottom-up, so every strict lower bound is already done
  for (const SubgroupId& x : lattice.elements) {
    Integer below = 0;
    bool has_lower = false;
    for (const auto& [y, mu_y] : lattice.mu) {
      if (y != x && lattice.leq(y, x)) {
        below += mu_y;
        has_lower = true;
      }
    }
    lattice.mu[x] = has_lower ? Integer(-below) : Integer(1);
  }
  for (const SubgroupId& x : lattice.elements)
    if (lattice.mu[x] != closed_form_mu(x, p))
      throw std::logic_error("build_lattice: recursive mu disagrees with closed form at " + to_string(x));
  return lattice;
}

// ---------------------------------------------------------------------------
// The action

namespace detail {

inline void require_action_domain(const OrderedSetPartition& pi, std::size_t p) {
  if (pi.ground_size() < 2 * p)
    throw std::invalid_argument("C_p x C_p action needs a ground set of at least 2p = " +
                                std::to_string(2 * p) + " points, got " +
                                std::to_string(pi.ground_size()));
}

inline Element act_point(GroupElement x, Element e, std::size_t p) {
  const auto ip = static_cast<Element>(p);
  if (e >= 1 && e <= ip) return static_cast<Element>((e - 1 + x.a) % p) + 1;
  if (e > ip && e <= 2 * ip) return ip + static_cast<Element>((e - ip - 1 + x.b) % p) + 1;
  return e;
}

}  // namespace detail

/// Applies g^a h^b to every element, keeping block order.
inline OrderedSetPartition act_element(GroupElement x, const OrderedSetPartition& pi, std::size_t p) {
  detail::require_action_domain(pi, p);
  std::vector<Block> blocks = pi.blocks();
  for (Block& b : blocks) {
    for (Element& e : b) e = detail::act_point(x, e, p);
    std::sort(b.begin(), b.end());
  }
  return detail::PartitionAccess::make(pi.ground_size(), std::move(blocks));
}

inline bool fixes(GroupElement x, const OrderedSetPartition& pi, std::size_t p) {
  return act_element(x, pi, p) == pi;
}

/// {x : x pi = pi} by trying all p^2 elements, classified as a SubgroupId.
inline SubgroupId stabilizer(const OrderedSetPartition& pi, std::size_t p) {
  detail::require_action_domain(pi, p);
  std::set<GroupElement> stab;
  for (std::size_t a = 0; a < p; ++a)
    for (std::size_t b = 0; b < p; ++b)
      if (fixes({a, b}, pi, p)) stab.insert({a, b});
  for (const SubgroupId& h : all_subgroups(p))
    if (members(h, p) == stab) return h;
  throw std::logic_error("stabilizer of " + to_string(pi) + " is not a subgroup of C_p x C_p");
}

/// pi is fixed by every element of h (checked on generators).
inline bool stabilized_by(const SubgroupId& h, const OrderedSetPartition& pi, std::size_t p) {
  for (const GroupElement& s : generators(h))
    if (!fixes(s, pi, p)) return false;
  return true;
}

namespace detail {

inline void require_mobius_params(std::size_t p, std::size_t n) {
  require_prime(p);
  if (n < 2) throw std::invalid_argument("the C_p x C_p action needs n >= 2, got " + std::to_string(n));
}

}  // namespace detail

/// Sum of signs over pi in Pi_{pn}^(p) with stabilizer containing h.
inline Integer alpha(const SubgroupId& h, std::size_t p, std::size_t n, std::uint64_t cap = kDefaultCap) {
  detail::require_mobius_params(p, n);
  std::int64_t total = 0;
  for_each_d_divisible(p * n, p, [&](const OrderedSetPartition& pi) {
    if (stabilized_by(h, pi, p)) total += pi.sign();
  }, cap);
  return Integer(static_cast<long>(total));
}

/// Sum of signs over pi in Pi_{pn}^(p) with stabilizer exactly h.
inline Integer beta(const SubgroupId& h, std::size_t p, std::size_t n, std::uint64_t cap = kDefaultCap) {
  detail::require_mobius_params(p, n);
  std::int64_t total = 0;
  for_each_d_divisible(p * n, p, [&](const OrderedSetPartition& pi) {
    if (stabilizer(pi, p) == h) total += pi.sign();
  }, cap);
  return Integer(static_cast<long>(total));
}

// ---------------------------------------------------------------------------
// Involution on {pi : [p] lies in one block}

/// Index (0-based) of the block holding 1, provided it holds all of [p].
inline std::size_t block_holding_prefix(const OrderedSetPartition& pi, std::size_t p) {
  const auto& blocks = pi.blocks();
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const Block& b = blocks[i];
    if (b.empty() || b.front() != 1) continue;
    // blocks are sorted, so [p] in b iff its first p entries are 1..p
    if (b.size() < p) break;
    for (std::size_t k = 0; k < p; ++k)
      if (b[k] != static_cast<Element>(k + 1)) throw std::invalid_argument(
          "pin_involution: [p] is split across blocks in " + to_string(pi));
    return i;
  }
  throw std::invalid_argument("pin_involution: [p] is split across blocks in " + to_string(pi));
}

/// If the block containing [p] is larger than [p], split [p] off just before
/// the rest of it; if it equals [p] and is not last, merge it with the next
/// block; if the last block is [p], pi is fixed.
inline OrderedSetPartition pin_involution(const OrderedSetPartition& pi, std::size_t p) {
  detail::require_prime(p);
  const std::size_t i = block_holding_prefix(pi, p);
  const auto& blocks = pi.blocks();
  std::vector<Block> out(blocks.begin(), blocks.begin() + i);
  if (blocks[i].size() > p) {
    out.emplace_back(blocks[i].begin(), blocks[i].begin() + p);
    out.emplace_back(blocks[i].begin() + p, blocks[i].end());
    out.insert(out.end(), blocks.begin() + i + 1, blocks.end());
  } else if (i + 1 < blocks.size()) {
    Block merged = blocks[i];
    merged.insert(merged.end(), blocks[i + 1].begin(), blocks[i + 1].end());
    std::sort(merged.begin(), merged.end());
    out.push_back(std::move(merged));
    out.insert(out.end(), blocks.begin() + i + 2, blocks.end());
  } else {
    return pi;
  }
  return detail::PartitionAccess::make(pi.ground_size(), std::move(out));
}

// ---------------------------------------------------------------------------

struct InversionCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct InversionReport {
  std::size_t p = 2;
  std::size_t n = 2;
  std::size_t partitions = 0;
  SubgroupLattice lattice;
  std::map<SubgroupId, Integer> alpha;
  std::map<SubgroupId, Integer> beta;
  Integer mobius_sum;            // sum_H mu(H) alpha(H)
  Integer euler_pn, euler_pn1, euler_pn2;  // E_{pn}, E_{p(n-1)}, E_{p(n-2)}
  std::vector<InversionCheck> checks;      // the six assertions first, then supporting ones

  bool pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const InversionCheck& c) { return c.pass; });
  }
};

/// Exhaustively verifies, over Pi_{pn}^(p):
///   (i)   beta(<e>) = sum_H mu(H) alpha(H)
///   (ii)  beta(<e>) == 0 (mod p^2)
///   (iii) alpha(<e>) = E_{pn}
///   (iv)  alpha(<g>) = alpha(<h>) = -E_{p(n-1)}
///   (v)   alpha(<gh^i>) = alpha(<g,h>) = E_{p(n-2)} for 1 <= i < p
///   (vi)  fixed points of pin_involution on {G_pi >= <g>} correspond to
///         Pi_{p(n-1)}^(p) by deleting the final block [p]
/// plus the supporting facts: alpha(H) = sum_{K >= H} beta(K), the
/// orbit-stabilizer relation on every orbit, and that pin_involution is a
/// sign-reversing involution off its fixed points.
inline InversionReport verify_inversion(std::size_t p, std::size_t n, std::uint64_t cap = kDefaultCap) {
  detail::require_mobius_params(p, n);
  InversionReport r;
  r.p = p;
  r.n = n;
  r.lattice = build_lattice(p);
  const auto subgroups = r.lattice.elements;
  const Integer p2 = static_cast<unsigned long>(p * p);

  std::map<SubgroupId, std::int64_t> alpha_acc, beta_acc;
  bool orbit_ok = true;
  std::string orbit_detail = "all orbits satisfy |orbit| * |stabilizer| = p^2 with constant length";
  bool pin_ok = true;
  std::string pin_detail = "involutive, length changes by one off fixed points";
  std::set<OrderedSetPartition> deleted_images;
  std::size_t pin_fixed = 0;
  bool same_stabilized = true;

  for_each_d_divisible(p * n, p, [&](const OrderedSetPartition& pi) {
    ++r.partitions;
    const SubgroupId stab = stabilizer(pi, p);
    beta_acc[stab] += pi.sign();
    for (const SubgroupId& h : subgroups)
      if (stabilized_by(h, pi, p)) alpha_acc[h] += pi.sign();
    const bool by_full = stabilized_by(SubgroupId::full(), pi, p);
    for (std::size_t i = 1; i < p; ++i)
      if (stabilized_by(SubgroupId::mixed(i), pi, p) != by_full) same_stabilized = false;

    std::set<OrderedSetPartition> orbit;
    for (std::size_t a = 0; a < p; ++a)
      for (std::size_t b = 0; b < p; ++b) {
        OrderedSetPartition image = act_element({a, b}, pi, p);
        if (image.length() != pi.length()) orbit_ok = false;
        orbit.insert(std::move(image));
      }
    if (orbit.size() * members(stab, p).size() != p * p && orbit_ok) {
      orbit_ok = false;
      orbit_detail = "orbit-stabilizer fails at " + to_string(pi);
    }

    if (stabilized_by(SubgroupId::g(), pi, p)) {
      const OrderedSetPartition image = pin_involution(pi, p);
      if (image == pi) {
        ++pin_fixed;
        // last block is exactly [p]; drop it and shift the rest down by p
        std::vector<Block> rest(pi.blocks().begin(), pi.blocks().end() - 1);
        for (Block& b : rest)
          for (Element& e : b) e -= static_cast<Element>(p);
        OrderedSetPartition reduced(pi.ground_size() - p, std::move(rest));
        if (!reduced.is_d_divisible(p) || reduced.length() + 1 != pi.length()) pin_ok = false;
        deleted_images.insert(std::move(reduced));
      } else {
        const bool involutive = pin_involution(image, p) == pi;
        const std::size_t lo = std::min(image.length(), pi.length());
        const std::size_t hi = std::max(image.length(), pi.length());
        if ((!involutive || hi != lo + 1) && pin_ok) {
          pin_ok = false;
          pin_detail = "pin_involution fails at " + to_string(pi);
        }
      }
    }
  }, cap);

  for (const SubgroupId& h : subgroups) {
    r.alpha[h] = Integer(static_cast<long>(alpha_acc[h]));
    r.beta[h] = Integer(static_cast<long>(beta_acc[h]));
  }
  r.mobius_sum = 0;
  for (const SubgroupId& h : subgroups) r.mobius_sum += r.lattice.mu.at(h) * r.alpha.at(h);

  const EulerTable table = euler_recursion(p, p * n);
  r.euler_pn = table[p * n];
  r.euler_pn1 = table[p * (n - 1)];
  r.euler_pn2 = table[p * (n - 2)];

  const SubgroupId e = SubgroupId::trivial();
  const Integer& beta_e = r.beta.at(e);
  r.checks.push_back({"beta_trivial_equals_mobius_sum", beta_e == r.mobius_sum,
                      "beta(<e>) = " + beta_e.get_str() + ", sum mu*alpha = " + r.mobius_sum.get_str()});
  r.checks.push_back({"beta_trivial_zero_mod_p2", congruent(beta_e, 0, p2),
                      beta_e.get_str() + " mod " + p2.get_str() + " = " + residue(beta_e, p2).get_str()});
  r.checks.push_back({"alpha_trivial_is_euler", r.alpha.at(e) == r.euler_pn,
                      "alpha(<e>) = " + r.alpha.at(e).get_str() + ", E_pn = " + r.euler_pn.get_str()});
  {
    const Integer target = -r.euler_pn1;
    const Integer& ag = r.alpha.at(SubgroupId::g());
    const Integer& ah = r.alpha.at(SubgroupId::pure_h());
    r.checks.push_back({"alpha_g_h_is_minus_euler_p(n-1)", ag == target && ah == target,
                        "alpha(<g>) = " + ag.get_str() + ", alpha(<h>) = " + ah.get_str() +
                            ", -E_p(n-1) = " + target.get_str()});
  }
  {
    bool ok = r.alpha.at(SubgroupId::full()) == r.euler_pn2;
    for (std::size_t i = 1; i < p; ++i) ok = ok && r.alpha.at(SubgroupId::mixed(i)) == r.euler_pn2;
    r.checks.push_back({"alpha_mixed_full_is_euler_p(n-2)", ok,
                        "alpha(<g,h>) = " + r.alpha.at(SubgroupId::full()).get_str() +
                            ", E_p(n-2) = " + r.euler_pn2.get_str()});
  }
  {
    const Integer expected = count_d_divisible(p * (n - 1), p);
    const bool ok = pin_ok && Integer(static_cast<unsigned long>(pin_fixed)) == expected &&
                    deleted_images.size() == pin_fixed;
    r.checks.push_back({"pin_fixed_points_biject_with_Pi_p(n-1)", ok,
                        std::to_string(pin_fixed) + " fixed points, " +
                            std::to_string(deleted_images.size()) + " distinct reductions, |Pi_p(n-1)| = " +
                            expected.get_str()});
  }

  // supporting facts
  bool hyp_ok = true;
  for (const SubgroupId& h : subgroups) {
    Integer up = 0;
    for (const SubgroupId& k : subgroups)
      if (r.lattice.leq(h, k)) up += r.beta.at(k);
    hyp_ok = hyp_ok && up == r.alpha.at(h);
  }
  r.checks.push_back({"alpha_is_upper_sum_of_beta", hyp_ok, "alpha(H) = sum_{K >= H} beta(K)"});
  r.checks.push_back({"orbit_stabilizer", orbit_ok, orbit_detail});
  r.checks.push_back({"pin_involution_sign_reversing", pin_ok, pin_detail});
  r.checks.push_back({"mixed_and_full_stabilize_same_partitions", same_stabilized,
                      "<gh^i> (i >= 1) and <g,h> fix exactly the same partitions"});
  return r;
}

}  // namespace geuler
