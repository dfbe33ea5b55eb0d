#pragma once

// d-divisible ordered set partitions of [n], the split/merge sign-reversing
// involution, and its fixed-point bijection with d-alternating permutations.
//
// Elements, block indices and descent positions are 1-based.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "exactnum.hpp"

namespace geuler {

using Element = int;
/// A block is kept as a strictly increasing list of elements.
using Block = std::vector<Element>;

namespace detail {
struct PartitionAccess;
}

class OrderedSetPartition {
 public:
  OrderedSetPartition() = default;

  /// Validates that the blocks are nonempty, strictly increasing, pairwise
  /// disjoint and cover [n].
  OrderedSetPartition(std::size_t n, std::vector<Block> blocks)
      : n_(n), blocks_(std::move(blocks)) {
    std::vector<bool> seen(n + 1, false);
    std::size_t covered = 0;
    for (const Block& b : blocks_) {
      if (b.empty()) throw std::invalid_argument("ordered set partition: empty block");
      for (std::size_t i = 0; i < b.size(); ++i) {
        if (b[i] < 1 || static_cast<std::size_t>(b[i]) > n)
          throw std::invalid_argument("ordered set partition: element " +
                                      std::to_string(b[i]) + " outside [" +
                                      std::to_string(n) + "]");
        if (i > 0 && b[i - 1] >= b[i])
          throw std::invalid_argument("ordered set partition: block not strictly increasing");
        if (seen[b[i]])
          throw std::invalid_argument("ordered set partition: element " +
                                      std::to_string(b[i]) + " repeated");
        seen[b[i]] = true;
        ++covered;
      }
    }
    if (covered != n) throw std::invalid_argument("ordered set partition: blocks do not cover [n]");
  }

  /// Sorts each block first; convenient for blocks given in any order.
  static OrderedSetPartition from_unsorted(std::size_t n, std::vector<Block> blocks) {
    for (Block& b : blocks) std::sort(b.begin(), b.end());
    return OrderedSetPartition(n, std::move(blocks));
  }

  std::size_t ground_size() const { return n_; }
  std::size_t length() const { return blocks_.size(); }
  /// (-1)^length
  int sign() const { return length() % 2 == 0 ? 1 : -1; }

  const std::vector<Block>& blocks() const { return blocks_; }
  /// 1-based block access.
  const Block& block(std::size_t i) const { return blocks_.at(i - 1); }

  bool is_d_divisible(std::size_t d) const {
    return std::all_of(blocks_.begin(), blocks_.end(),
                       [d](const Block& b) { return b.size() % d == 0; });
  }

  friend bool operator==(const OrderedSetPartition&, const OrderedSetPartition&) = default;
  friend auto operator<=>(const OrderedSetPartition&, const OrderedSetPartition&) = default;

 private:
  // Unchecked construction for hot enumeration paths.
  struct Unchecked {};
  OrderedSetPartition(Unchecked, std::size_t n, std::vector<Block> blocks)
      : n_(n), blocks_(std::move(blocks)) {}

  friend struct detail::PartitionAccess;

  std::size_t n_ = 0;
  std::vector<Block> blocks_;
};

/// "2 9/4 11/1 3 5 6/7 8/10 12"; the empty partition prints as "".
inline std::string to_string(const OrderedSetPartition& pi) {
  std::string out;
  for (std::size_t i = 0; i < pi.length(); ++i) {
    if (i > 0) out += '/';
    const Block& b = pi.blocks()[i];
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (j > 0) out += ' ';
      out += std::to_string(b[j]);
    }
  }
  return out;
}

/// Parses the "/"-separated block format. The ground set is [number of
/// elements]; elements within a block may appear in any order.
inline OrderedSetPartition parse_partition(std::string_view text) {
  std::vector<Block> blocks;
  std::size_t count = 0;
  std::size_t start = 0;
  const bool blank = text.find_first_not_of(" \t") == std::string_view::npos;
  if (blank) return OrderedSetPartition{};
  while (start <= text.size()) {
    std::size_t stop = text.find('/', start);
    if (stop == std::string_view::npos) stop = text.size();
    std::istringstream in{std::string(text.substr(start, stop - start))};
    Block b;
    std::string token;
    while (in >> token) {
      std::size_t used = 0;
      int value = 0;
      try {
        value = std::stoi(token, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != token.size())
        throw std::invalid_argument("partition text: bad element '" + token + "'");
      b.push_back(value);
    }
    count += b.size();
    blocks.push_back(std::move(b));
    start = stop + 1;
  }
  return OrderedSetPartition::from_unsorted(count, std::move(blocks));
}

/// Number of d-divisible ordered set partitions of [n]:
/// a(0) = 1, a(n) = sum_{k>=1, dk<=n} C(n, dk) a(n - dk).
inline Integer count_d_divisible(std::size_t n, std::size_t d) {
  if (d < 1) throw std::invalid_argument("count_d_divisible: d must be positive");
  std::vector<Integer> a(n + 1, 0);
  a[0] = 1;
  for (std::size_t m = 1; m <= n; ++m)
    for (std::size_t s = d; s <= m; s += d) a[m] += binomial(m, s) * a[m - s];
  return a[n];
}

namespace detail {

/// Unchecked construction and in-place block access for hot paths whose
/// output is valid by construction.
struct PartitionAccess {
  static OrderedSetPartition make(std::size_t n, std::vector<Block> blocks) {
    return OrderedSetPartition(OrderedSetPartition::Unchecked{}, n, std::move(blocks));
  }
  static std::vector<Block>& blocks(OrderedSetPartition& pi) { return pi.blocks_; }
};

inline void require_d(std::size_t d) {
  if (d < 2) throw std::invalid_argument("d must be at least 2, got " + std::to_string(d));
}

inline void check_cap(const Integer& required, std::uint64_t cap, const char* what) {
  if (required > Integer(static_cast<unsigned long>(cap)))
    throw CapExceeded(what, required, cap);
}

}  // namespace detail

/// Calls visit(const OrderedSetPartition&) for every ordered set partition
/// of [n] whose block sizes are all multiples of d, each exactly once.
///
/// Order: the first block ranges over sizes d, 2d, ... and, for each size,
/// over subsets of the remaining elements in lexicographic order; the rest
/// of the partition is enumerated recursively in the same way. For n = 0
/// the single empty partition is visited. Throws CapExceeded before visiting
/// anything if the total count exceeds cap.
template <class Visitor>
void for_each_d_divisible(std::size_t n, std::size_t d, Visitor&& visit,
                          std::uint64_t cap = kDefaultCap) {
  detail::require_d(d);
  detail::check_cap(count_d_divisible(n, d), cap, "d-divisible partition enumeration");

  OrderedSetPartition current = detail::PartitionAccess::make(n, {});
  std::vector<Block>& stack = detail::PartitionAccess::blocks(current);
  std::vector<Element> remaining(n);
  std::iota(remaining.begin(), remaining.end(), 1);

  auto recurse = [&](auto&& self, const std::vector<Element>& rest) -> void {
    if (rest.empty()) {
      visit(static_cast<const OrderedSetPartition&>(current));
      return;
    }
    const std::size_t m = rest.size();
    for (std::size_t size = d; size <= m; size += d) {
      std::vector<std::size_t> idx(size);
      std::iota(idx.begin(), idx.end(), 0);
      std::vector<Element> others;
      others.reserve(m - size);
      while (true) {
        Block block(size);
        others.clear();
        for (std::size_t i = 0, j = 0; i < m; ++i) {
          if (j < size && idx[j] == i)
            block[j++] = rest[i];
          else
            others.push_back(rest[i]);
        }
        stack.push_back(std::move(block));
        self(self, others);
        stack.pop_back();

        // next combination of `size` indices out of m, lexicographic
        std::size_t k = size;
        while (k > 0 && idx[k - 1] == m - size + (k - 1)) --k;
        if (k == 0) break;
        ++idx[k - 1];
        for (std::size_t j = k; j < size; ++j) idx[j] = idx[j - 1] + 1;
      }
    }
  };
  recurse(recurse, remaining);
}

/// Materialized enumeration, for small cases and tests.
inline std::vector<OrderedSetPartition> enumerate_d_divisible(std::size_t n, std::size_t d,
                                                              std::uint64_t cap = kDefaultCap) {
  std::vector<OrderedSetPartition> out;
  for_each_d_divisible(n, d, [&](const OrderedSetPartition& pi) { out.push_back(pi); }, cap);
  return out;
}

/// Sum of (-1)^length over the d-divisible ordered set partitions of [n].
inline Integer signed_sum(std::size_t n, std::size_t d, std::uint64_t cap = kDefaultCap) {
  std::int64_t total = 0;
  for_each_d_divisible(n, d, [&](const OrderedSetPartition& pi) { total += pi.sign(); }, cap);
  return Integer(static_cast<long>(total));
}

// ---------------------------------------------------------------------------
// Split/merge involution

inline bool is_splittable(const Block& block, std::size_t d) { return block.size() >= 2 * d; }

/// Block i (1-based) has exactly d elements, is not last, and its maximum is
/// below the minimum of block i + 1.
inline bool is_mergeable(const OrderedSetPartition& pi, std::size_t i, std::size_t d) {
  if (i < 1 || i > pi.length())
    throw std::out_of_range("is_mergeable: block index " + std::to_string(i) + " out of range");
  if (i == pi.length()) return false;
  const Block& b = pi.block(i);
  return b.size() == d && b.back() < pi.block(i + 1).front();
}

/// Splits off the d smallest elements of the earliest splittable block, or
/// merges the earliest mergeable block with its successor, whichever index
/// comes first. Partitions with neither are fixed.
inline OrderedSetPartition iota(const OrderedSetPartition& pi, std::size_t d) {
  detail::require_d(d);
  if (!pi.is_d_divisible(d)) throw std::invalid_argument("iota: partition is not d-divisible");
  const auto& blocks = pi.blocks();
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (is_splittable(blocks[i], d)) {
      std::vector<Block> out;
      out.reserve(blocks.size() + 1);
      out.insert(out.end(), blocks.begin(), blocks.begin() + i);
      out.emplace_back(blocks[i].begin(), blocks[i].begin() + d);
      out.emplace_back(blocks[i].begin() + d, blocks[i].end());
      out.insert(out.end(), blocks.begin() + i + 1, blocks.end());
      return detail::PartitionAccess::make(pi.ground_size(), std::move(out));
    }
    if (is_mergeable(pi, i + 1, d)) {
      std::vector<Block> out;
      out.reserve(blocks.size() - 1);
      out.insert(out.end(), blocks.begin(), blocks.begin() + i);
      // max B_i < min B_{i+1}, so plain concatenation stays sorted
      Block merged = blocks[i];
      merged.insert(merged.end(), blocks[i + 1].begin(), blocks[i + 1].end());
      out.push_back(std::move(merged));
      out.insert(out.end(), blocks.begin() + i + 2, blocks.end());
      return detail::PartitionAccess::make(pi.ground_size(), std::move(out));
    }
  }
  return pi;
}

inline bool is_iota_fixed(const OrderedSetPartition& pi, std::size_t d) {
  for (std::size_t i = 1; i <= pi.length(); ++i)
    if (is_splittable(pi.block(i), d) || is_mergeable(pi, i, d)) return false;
  return true;
}

inline std::vector<OrderedSetPartition> fixed_points(std::size_t n, std::size_t d,
                                                     std::uint64_t cap = kDefaultCap) {
  detail::require_d(d);
  if (n % d != 0)
    throw std::invalid_argument("fixed_points: d = " + std::to_string(d) +
                                " does not divide n = " + std::to_string(n));
  std::vector<OrderedSetPartition> out;
  for_each_d_divisible(n, d, [&](const OrderedSetPartition& pi) {
    if (is_iota_fixed(pi, d)) out.push_back(pi);
  }, cap);
  return out;
}

// ---------------------------------------------------------------------------
// Permutations

class Permutation {
 public:
  Permutation() = default;

  /// One-line notation; must be a bijection on [word.size()].
  explicit Permutation(std::vector<Element> word) : word_(std::move(word)) {
    std::vector<bool> seen(word_.size() + 1, false);
    for (Element v : word_) {
      if (v < 1 || static_cast<std::size_t>(v) > word_.size() || seen[v])
        throw std::invalid_argument("permutation: word is not a bijection on [n]");
      seen[v] = true;
    }
  }

  std::size_t size() const { return word_.size(); }
  const std::vector<Element>& word() const { return word_; }
  /// 1-based.
  Element operator[](std::size_t i) const { return word_.at(i - 1); }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Element> word_;
};

/// Concatenated digits when n < 10 ("1324"), space separated otherwise.
inline std::string to_string(const Permutation& sigma) {
  std::string out;
  const bool compact = sigma.size() < 10;
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    if (i > 0 && !compact) out += ' ';
    out += std::to_string(sigma.word()[i]);
  }
  return out;
}

/// Accepts "1324" (single digits) or whitespace-separated values.
inline Permutation parse_permutation(std::string_view text) {
  std::vector<Element> word;
  if (text.find_first_of(" \t,") == std::string_view::npos) {
    for (char c : text) {
      if (c < '0' || c > '9') throw std::invalid_argument("permutation text: bad digit");
      word.push_back(c - '0');
    }
  } else {
    std::string s(text);
    std::replace(s.begin(), s.end(), ',', ' ');
    std::istringstream in(s);
    int v = 0;
    while (in >> v) word.push_back(v);
    if (!in.eof()) throw std::invalid_argument("permutation text: bad element");
  }
  return Permutation(std::move(word));
}

/// {i : sigma_i > sigma_{i+1}}, 1-based.
inline std::set<std::size_t> descent_set(const Permutation& sigma) {
  std::set<std::size_t> des;
  for (std::size_t i = 1; i < sigma.size(); ++i)
    if (sigma[i] > sigma[i + 1]) des.insert(i);
  return des;
}

/// Descent set is exactly {d, 2d, ...} below n.
inline bool is_d_alternating(const Permutation& sigma, std::size_t d) {
  detail::require_d(d);
  for (std::size_t i = 1; i < sigma.size(); ++i)
    if ((sigma[i] > sigma[i + 1]) != (i % d == 0)) return false;
  return true;
}

/// Concatenates the (sorted) blocks of a fixed point of iota.
inline Permutation fix_to_perm(const OrderedSetPartition& pi) {
  if (pi.length() == 0) return Permutation{};
  const std::size_t d = pi.block(1).size();
  const bool uniform = std::all_of(pi.blocks().begin(), pi.blocks().end(),
                                   [d](const Block& b) { return b.size() == d; });
  if (d < 2 || !uniform || !is_iota_fixed(pi, d))
    throw std::invalid_argument("fix_to_perm: " + to_string(pi) + " is not a fixed point of iota");
  std::vector<Element> word;
  word.reserve(pi.ground_size());
  for (const Block& b : pi.blocks()) word.insert(word.end(), b.begin(), b.end());
  return Permutation(std::move(word));
}

/// Cuts a d-alternating permutation into consecutive runs of length d.
inline OrderedSetPartition perm_to_fix(const Permutation& sigma, std::size_t d) {
  detail::require_d(d);
  if (sigma.size() % d != 0)
    throw std::invalid_argument("perm_to_fix: d does not divide the permutation length");
  if (!is_d_alternating(sigma, d))
    throw std::invalid_argument("perm_to_fix: " + to_string(sigma) + " is not " +
                                std::to_string(d) + "-alternating");
  std::vector<Block> blocks;
  for (std::size_t i = 0; i < sigma.size(); i += d)
    blocks.emplace_back(sigma.word().begin() + i, sigma.word().begin() + i + d);
  return OrderedSetPartition(sigma.size(), std::move(blocks));
}

/// Counts d-alternating permutations of [n] by depth-first search over
/// one-line words, discarding a prefix as soon as its last adjacent pair has
/// the wrong relation. `cap` bounds the number of search nodes.
inline Integer count_d_alternating(std::size_t n, std::size_t d, std::uint64_t cap = kDefaultCap) {
  detail::require_d(d);
  std::vector<bool> used(n + 1, false);
  std::uint64_t nodes = 0;
  std::int64_t count = 0;
  auto dfs = [&](auto&& self, std::size_t pos, Element prev) -> void {
    if (++nodes > cap)
      throw CapExceeded("d-alternating permutation search", Integer(static_cast<unsigned long>(nodes)), cap);
    if (pos == n) {
      ++count;
      return;
    }
    // position pos (0-based) follows 1-based position pos; descent required iff pos % d == 0
    const bool need_descent = pos > 0 && pos % d == 0;
    for (Element v = 1; v <= static_cast<Element>(n); ++v) {
      if (used[v]) continue;
      if (pos > 0 && ((prev > v) != need_descent)) continue;
      // the rest of the ascending run needs that many unused values above v
      const std::size_t run_left = std::min(n, (pos / d + 1) * d) - pos - 1;
      std::size_t above = 0;
      for (Element w = v + 1; w <= static_cast<Element>(n) && above < run_left; ++w) above += !used[w];
      if (above < run_left) break;
      used[v] = true;
      self(self, pos + 1, v);
      used[v] = false;
    }
  };
  dfs(dfs, 0, 0);
  return Integer(static_cast<long>(count));
}

/// All d-alternating permutations of [n], in lexicographic order.
inline std::vector<Permutation> d_alternating_permutations(std::size_t n, std::size_t d,
                                                          std::uint64_t cap = kDefaultCap) {
  detail::require_d(d);
  detail::check_cap(factorial(n), cap, "permutation filter");
  std::vector<Element> word(n);
  std::iota(word.begin(), word.end(), 1);
  std::vector<Permutation> out;
  do {
    Permutation sigma(word);
    if (is_d_alternating(sigma, d)) out.push_back(std::move(sigma));
  } while (std::next_permutation(word.begin(), word.end()));
  return out;
}

/// Everything the involution argument claims about Pi_n^(d), checked by
/// exhaustive enumeration.
struct InvolutionAudit {
  std::size_t n = 0;
  std::size_t d = 2;
  std::size_t partitions = 0;
  std::size_t fixed = 0;
  Integer signed_total = 0;
  Integer alternating = 0;           // #A_n^(d)
  bool involutive = true;            // iota(iota(pi)) = pi
  bool sign_reversing = true;        // length changes by exactly one off Fix
  bool fixed_structure = true;       // fixed <=> all blocks of size d and none mergeable
  bool bijection = true;             // fix_to_perm lands in A_n^(d), perm_to_fix inverts it
  std::vector<std::pair<OrderedSetPartition, OrderedSetPartition>> pairs;  // if requested
  std::vector<OrderedSetPartition> fixed_points;                           // if requested

  /// signed sum = (-1)^{n/d} #Fix
  bool sign_identity() const {
    const Integer expected = (n / d) % 2 == 0 ? Integer(fixed) : Integer(-Integer(fixed));
    return signed_total == expected;
  }
  bool fixed_equals_alternating() const { return Integer(fixed) == alternating; }

  bool pass() const {
    return involutive && sign_reversing && fixed_structure && bijection && sign_identity() &&
           fixed_equals_alternating();
  }
};

inline InvolutionAudit audit_involution(std::size_t n, std::size_t d, std::uint64_t cap = kDefaultCap,
                                        bool keep_pairing = false) {
  detail::require_d(d);
  if (n % d != 0)
    throw std::invalid_argument("involution audit: d = " + std::to_string(d) +
                                " does not divide n = " + std::to_string(n));
  InvolutionAudit audit;
  audit.n = n;
  audit.d = d;
  std::int64_t total = 0;
  std::set<Permutation> images;
  for_each_d_divisible(n, d, [&](const OrderedSetPartition& pi) {
    ++audit.partitions;
    total += pi.sign();
    const OrderedSetPartition image = iota(pi, d);
    if (iota(image, d) != pi) audit.involutive = false;

    const bool uniform = std::all_of(pi.blocks().begin(), pi.blocks().end(),
                                     [d](const Block& b) { return b.size() == d; });
    bool any_mergeable = false;
    for (std::size_t i = 1; i <= pi.length(); ++i) any_mergeable |= is_mergeable(pi, i, d);
    const bool predicted_fixed = uniform && !any_mergeable;

    if (image == pi) {
      ++audit.fixed;
      if (!predicted_fixed) audit.fixed_structure = false;
      const Permutation sigma = fix_to_perm(pi);
      if (!is_d_alternating(sigma, d) || perm_to_fix(sigma, d) != pi ||
          !images.insert(sigma).second)
        audit.bijection = false;
      if (keep_pairing) audit.fixed_points.push_back(pi);
    } else {
      if (predicted_fixed) audit.fixed_structure = false;
      const std::size_t lo = std::min(pi.length(), image.length());
      const std::size_t hi = std::max(pi.length(), image.length());
      if (hi != lo + 1) audit.sign_reversing = false;
      // record each 2-cycle once, from its longer member
      if (keep_pairing && pi.length() > image.length()) audit.pairs.emplace_back(pi, image);
    }
  }, cap);
  audit.signed_total = Integer(static_cast<long>(total));
  audit.alternating = count_d_alternating(n, d, cap);
  // every d-alternating permutation must come from a fixed point
  if (Integer(static_cast<unsigned long>(images.size())) != audit.alternating) audit.bijection = false;
  return audit;
}

}  // namespace geuler
