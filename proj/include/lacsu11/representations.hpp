#pragma once

#include <cstdint>
#include <vector>

#include "lacsu11/config.hpp"
#include "lacsu11/lacunary.hpp"

namespace lacsu11 {

/// A two-block signed representation
///   n = (m_{j_1} - m_{j_2} + ... + m_{j_J}) - (m_{k_1} - m_{k_2} + ... + m_{k_K})
/// with J, K odd, both index lists strictly increasing, and signs alternating
/// from + inside each parenthesis. These are exactly the differences of two
/// frequencies from the expansion of b over the window.
struct SignedRepresentation {
  std::vector<int> plus_block;   // j_1 < ... < j_J (1-based sequence indices)
  std::vector<int> minus_block;  // k_1 < ... < k_K
  std::int64_t value = 0;
  /// True when no index contributes a canceling +m/-m pair across the two
  /// blocks, i.e. no further cancellation of terms is possible.
  bool maximally_shortened = false;
};

/// Disjoint index sets covering {M+1..N}: S_l holds the indices whose
/// frequency appears exactly l times in the maximally shortened
/// representation.
struct PartitionTriple {
  std::vector<int> s0, s1, s2;
};

/// All representations of n over the window (M, N] with block lengths at
/// most maxJ and maxK (both odd). Exhaustive over signed index subsets; the
/// two blocks are matched through a sorted block-value table.
std::vector<SignedRepresentation> enumerate_representations(
    std::int64_t n, const LacunarySequence& freqs, int M, int N, int maxJ,
    int maxK, const Limits& limits = default_limits());

/// Values realizable by a single block (the frequencies of b over the
/// window when all B_j differ from zero), sorted ascending.
std::vector<std::int64_t> block_values(const LacunarySequence& freqs, int M,
                                       int N,
                                       const Limits& limits = default_limits());

struct UniquenessReport {
  struct Violation {
    std::int64_t n;
    int shortened_count;  // distinct maximally shortened representations
  };
  std::vector<Violation> violations;
  std::int64_t distinct_shortened_targets = 0;
};

/// Checks that every integer admits at most one maximally shortened
/// representation over the window. Two block pairs that carry the same
/// signed terms (terms moved between the parentheses) count as the same
/// representation. Zero violations is the expected outcome for q >= 3; for
/// smaller q the result is diagnostic data.
UniquenessReport uniqueness_check(const LacunarySequence& freqs, int M, int N,
                                  const Limits& limits = default_limits());

/// Partition triple of n from its maximally shortened representation; when n
/// has none, S1 = S2 = empty and S0 is the whole window.
PartitionTriple classify_partition(std::int64_t n, const LacunarySequence& freqs,
                                   int M, int N,
                                   const Limits& limits = default_limits());

struct MultiplicityReport {
  struct Group {
    std::uint32_t s1_mask = 0;  // bit i <-> index M+1+i
    std::uint32_t s2_mask = 0;
    std::int64_t count = 0;     // distinct n sharing this partition
    std::int64_t bound = 1;     // 2^{|S1|}
  };
  std::int64_t worst_count = 0;
  std::int64_t worst_bound = 1;
  bool ok = true;
  std::vector<Group> groups;  // sorted by (s1_mask, s2_mask)
};

/// Groups the representable integers by their partition triple and verifies
/// that each group holds at most 2^{|S1|} values.
MultiplicityReport multiplicity_bound_check(const LacunarySequence& freqs,
                                            int M, int N,
                                            const Limits& limits = default_limits());

struct AutocorrelationBound {
  double lhs = 0.0;  // sum_n |sum_{n2-n1=n} D_{n1} conj(D_{n2})|^2
  double rhs = 1.0;  // e^{8 sum |B_j|^2}
  bool ok = true;
};

/// Fourth-moment bound on the Fourier coefficients of b over the window.
AutocorrelationBound autocorrelation_bound_check(
    const TrigPolyPair& pair, const CoefficientSequence& coeffs,
    const Tolerances& tol = default_tolerances(),
    const Limits& limits = default_limits());

}  // namespace lacsu11
