#include "lacsu11/representations.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "lacsu11/errors.hpp"

namespace lacsu11 {

namespace {

// Per-mask data for all subsets of the window {M+1..N}: the alternating
// block value and the set of positions carrying a + sign. Signs are fixed by
// the subset alone: sorted ascending, they alternate starting from +, so
// prepending a new lowest index flips every existing sign. That gives the
// O(2^W) recurrences  value[m] = m_low - value[m \ low]  and
// plus[m] = low | minus[m \ low].
struct BlockTable {
  int W = 0;
  std::vector<std::int64_t> value;
  std::vector<std::uint32_t> plus;

  std::uint32_t minus(std::uint32_t mask) const { return mask ^ plus[mask]; }
};

BlockTable build_table(const LacunarySequence& freqs, int M, int N,
                       int window_cap, const char* who) {
  if (M < 0 || N < M || N > freqs.size()) {
    throw ValidationError(std::string(who) + ": window out of range");
  }
  const int W = N - M;
  if (W > window_cap) {
    throw BudgetError(std::string(who) + ": window size " + std::to_string(W) +
                      " exceeds the budget of " + std::to_string(window_cap));
  }
  BlockTable t;
  t.W = W;
  const std::size_t size = std::size_t{1} << W;
  t.value.assign(size, 0);
  t.plus.assign(size, 0);
  for (std::uint32_t mask = 1; mask < size; ++mask) {
    const std::uint32_t low = mask & (~mask + 1);
    const std::uint32_t rest = mask ^ low;
    const int low_idx = std::countr_zero(low);
    t.value[mask] = freqs.at(M + 1 + low_idx) - t.value[rest];
    t.plus[mask] = low | (rest ^ t.plus[rest]);
  }
  return t;
}

struct Block {
  std::int64_t value;
  std::uint32_t mask;
};

// Odd-cardinality subsets sorted by value (mask as tiebreak), the lookup
// side of the two-block match.
std::vector<Block> odd_blocks(const BlockTable& t) {
  std::vector<Block> out;
  out.reserve((std::size_t{1} << t.W) / 2);
  const std::size_t size = std::size_t{1} << t.W;
  for (std::uint32_t mask = 1; mask < size; ++mask) {
    if (std::popcount(mask) % 2 == 1) out.push_back({t.value[mask], mask});
  }
  std::sort(out.begin(), out.end(), [](const Block& x, const Block& y) {
    return x.value != y.value ? x.value < y.value : x.mask < y.mask;
  });
  return out;
}

bool shortened(std::uint32_t plus1, std::uint32_t minus1, std::uint32_t plus2,
               std::uint32_t minus2) {
  // a canceling pair is an index sitting at equal sign positions in both
  // blocks: +m from block one and -(+m) from block two, or the mirror image
  return (plus1 & plus2) == 0 && (minus1 & minus2) == 0;
}

// Canonical signed-term multiset of a shortened pair. Moving terms between
// the parentheses preserves it, so equal keys mean equal representations.
struct MultisetKey {
  std::uint32_t plus_once, plus_twice, minus_once, minus_twice;

  auto operator<=>(const MultisetKey&) const = default;
};

MultisetKey make_key(std::uint32_t plus1, std::uint32_t minus1,
                     std::uint32_t plus2, std::uint32_t minus2) {
  // overall +m contributions: plus positions of block one, minus positions
  // of block two (their written sign is -(-m))
  return MultisetKey{plus1 ^ minus2, plus1 & minus2, minus1 ^ plus2,
                     minus1 & plus2};
}

std::vector<int> mask_to_indices(std::uint32_t mask, int M) {
  std::vector<int> out;
  while (mask != 0) {
    const int i = std::countr_zero(mask);
    out.push_back(M + 1 + i);
    mask &= mask - 1;
  }
  return out;
}

struct ShortenedEntry {
  std::int64_t n;
  MultisetKey key;
};

// All maximally shortened (n, multiset) pairs over the window, deduplicated.
std::vector<ShortenedEntry> shortened_entries(const LacunarySequence& freqs,
                                              int M, int N,
                                              const Limits& limits,
                                              const char* who) {
  const BlockTable table = build_table(freqs, M, N, limits.max_pair_window, who);
  std::vector<ShortenedEntry> entries;
  const std::size_t size = std::size_t{1} << table.W;
  for (std::uint32_t m1 = 1; m1 < size; ++m1) {
    if (std::popcount(m1) % 2 == 0) continue;
    const std::uint32_t p1 = table.plus[m1];
    const std::uint32_t q1 = table.minus(m1);
    for (std::uint32_t m2 = 1; m2 < size; ++m2) {
      if (std::popcount(m2) % 2 == 0) continue;
      const std::uint32_t p2 = table.plus[m2];
      const std::uint32_t q2 = table.minus(m2);
      if (!shortened(p1, q1, p2, q2)) continue;
      entries.push_back({table.value[m1] - table.value[m2],
                         make_key(p1, q1, p2, q2)});
    }
  }
  std::sort(entries.begin(), entries.end(),
            [](const ShortenedEntry& x, const ShortenedEntry& y) {
              return x.n != y.n ? x.n < y.n : x.key < y.key;
            });
  entries.erase(std::unique(entries.begin(), entries.end(),
                            [](const ShortenedEntry& x, const ShortenedEntry& y) {
                              return x.n == y.n && x.key == y.key;
                            }),
                entries.end());
  return entries;
}

}  // namespace

std::vector<std::int64_t> block_values(const LacunarySequence& freqs, int M,
                                       int N, const Limits& limits) {
  const BlockTable table =
      build_table(freqs, M, N, limits.max_enum_window, "block_values");
  std::vector<std::int64_t> out;
  const std::size_t size = std::size_t{1} << table.W;
  out.reserve(size / 2);
  for (std::uint32_t mask = 1; mask < size; ++mask) {
    if (std::popcount(mask) % 2 == 1) out.push_back(table.value[mask]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SignedRepresentation> enumerate_representations(
    std::int64_t n, const LacunarySequence& freqs, int M, int N, int maxJ,
    int maxK, const Limits& limits) {
  if (maxJ < 1 || maxK < 1 || maxJ % 2 == 0 || maxK % 2 == 0) {
    throw ValidationError("enumerate_representations: maxJ and maxK must be odd and >= 1");
  }
  const BlockTable table = build_table(freqs, M, N, limits.max_enum_window,
                                       "enumerate_representations");
  const std::vector<Block> blocks = odd_blocks(table);
  std::vector<SignedRepresentation> out;
  const std::size_t size = std::size_t{1} << table.W;
  for (std::uint32_t m1 = 1; m1 < size; ++m1) {
    if (std::popcount(m1) % 2 == 0 || std::popcount(m1) > maxJ) continue;
    std::int64_t want;
    if (__builtin_sub_overflow(table.value[m1], n, &want)) continue;
    const auto [lo, hi] = std::equal_range(
        blocks.begin(), blocks.end(), Block{want, 0},
        [](const Block& x, const Block& y) { return x.value < y.value; });
    for (auto it = lo; it != hi; ++it) {
      if (std::popcount(it->mask) > maxK) continue;
      SignedRepresentation rep;
      rep.plus_block = mask_to_indices(m1, M);
      rep.minus_block = mask_to_indices(it->mask, M);
      rep.value = n;
      rep.maximally_shortened =
          shortened(table.plus[m1], table.minus(m1), table.plus[it->mask],
                    table.minus(it->mask));
      out.push_back(std::move(rep));
    }
  }
  return out;
}

UniquenessReport uniqueness_check(const LacunarySequence& freqs, int M, int N,
                                  const Limits& limits) {
  const auto entries = shortened_entries(freqs, M, N, limits, "uniqueness_check");
  UniquenessReport report;
  for (std::size_t i = 0; i < entries.size();) {
    std::size_t j = i;
    while (j < entries.size() && entries[j].n == entries[i].n) ++j;
    ++report.distinct_shortened_targets;
    if (j - i > 1) {
      report.violations.push_back(
          {entries[i].n, static_cast<int>(j - i)});
    }
    i = j;
  }
  return report;
}

PartitionTriple classify_partition(std::int64_t n, const LacunarySequence& freqs,
                                   int M, int N, const Limits& limits) {
  const BlockTable table =
      build_table(freqs, M, N, limits.max_enum_window, "classify_partition");
  const std::vector<Block> blocks = odd_blocks(table);
  const std::size_t size = std::size_t{1} << table.W;
  bool found = false;
  MultisetKey key{};
  for (std::uint32_t m1 = 1; m1 < size && !found; ++m1) {
    if (std::popcount(m1) % 2 == 0) continue;
    std::int64_t want;
    if (__builtin_sub_overflow(table.value[m1], n, &want)) continue;
    const auto [lo, hi] = std::equal_range(
        blocks.begin(), blocks.end(), Block{want, 0},
        [](const Block& x, const Block& y) { return x.value < y.value; });
    for (auto it = lo; it != hi; ++it) {
      const std::uint32_t p1 = table.plus[m1], q1 = table.minus(m1);
      const std::uint32_t p2 = table.plus[it->mask], q2 = table.minus(it->mask);
      if (shortened(p1, q1, p2, q2)) {
        key = make_key(p1, q1, p2, q2);
        found = true;
        break;
      }
    }
  }
  PartitionTriple part;
  if (!found) {
    for (int j = M + 1; j <= N; ++j) part.s0.push_back(j);
    return part;
  }
  const std::uint32_t s1 = key.plus_once | key.minus_once;
  const std::uint32_t s2 = key.plus_twice | key.minus_twice;
  for (int i = 0; i < N - M; ++i) {
    const std::uint32_t bit = std::uint32_t{1} << i;
    if (s1 & bit) {
      part.s1.push_back(M + 1 + i);
    } else if (s2 & bit) {
      part.s2.push_back(M + 1 + i);
    } else {
      part.s0.push_back(M + 1 + i);
    }
  }
  return part;
}

MultiplicityReport multiplicity_bound_check(const LacunarySequence& freqs,
                                            int M, int N, const Limits& limits) {
  auto entries = shortened_entries(freqs, M, N, limits, "multiplicity_bound_check");
  // one row per (n, partition); a second sort groups the partitions
  struct Row {
    std::uint32_t s1, s2;
    std::int64_t n;
  };
  std::vector<Row> rows;
  rows.reserve(entries.size());
  for (const auto& e : entries) {
    rows.push_back({e.key.plus_once | e.key.minus_once,
                    e.key.plus_twice | e.key.minus_twice, e.n});
  }
  std::sort(rows.begin(), rows.end(), [](const Row& x, const Row& y) {
    if (x.s1 != y.s1) return x.s1 < y.s1;
    if (x.s2 != y.s2) return x.s2 < y.s2;
    return x.n < y.n;
  });
  rows.erase(std::unique(rows.begin(), rows.end(),
                         [](const Row& x, const Row& y) {
                           return x.s1 == y.s1 && x.s2 == y.s2 && x.n == y.n;
                         }),
             rows.end());
  MultiplicityReport report;
  for (std::size_t i = 0; i < rows.size();) {
    std::size_t j = i;
    while (j < rows.size() && rows[j].s1 == rows[i].s1 && rows[j].s2 == rows[i].s2) {
      ++j;
    }
    MultiplicityReport::Group g;
    g.s1_mask = rows[i].s1;
    g.s2_mask = rows[i].s2;
    g.count = static_cast<std::int64_t>(j - i);
    g.bound = std::int64_t{1} << std::popcount(rows[i].s1);
    if (g.count > g.bound) report.ok = false;
    // track the group closest to (or past) its bound
    if (report.groups.empty() ||
        g.count * report.worst_bound > report.worst_count * g.bound) {
      report.worst_count = g.count;
      report.worst_bound = g.bound;
    }
    report.groups.push_back(g);
    i = j;
  }
  return report;
}

AutocorrelationBound autocorrelation_bound_check(const TrigPolyPair& pair,
                                                 const CoefficientSequence& coeffs,
                                                 const Tolerances& tol,
                                                 const Limits& limits) {
  const auto size = static_cast<long long>(pair.b.size());
  if (size * size > limits.max_autocorr_pairs) {
    throw BudgetError("autocorrelation_bound_check: " + std::to_string(size) +
                      " coefficients exceed the pair budget");
  }
  AutocorrelationBound result;
  result.lhs = l2_norm_sq(autocorrelation(pair.b));
  result.rhs = std::exp(8.0 * b_sq_sum(coeffs, pair.M, pair.N));
  result.ok = result.lhs <= result.rhs * (1.0 + tol.autocorr_slack);
  return result;
}

}  // namespace lacsu11
