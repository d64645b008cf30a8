#include "lacsu11/representations.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <set>

#include "lacsu11/errors.hpp"
#include "test_util.hpp"

using namespace lacsu11;
using lacsu11::testing::random_coefficients;

namespace {

// Naive oracle for block values: walk every odd subset explicitly and apply
// the alternating signs by sorted position.
std::vector<std::int64_t> naive_block_values(const LacunarySequence& freqs,
                                             int M, int N) {
  const int W = N - M;
  std::vector<std::int64_t> out;
  for (std::uint32_t mask = 1; mask < (1u << W); ++mask) {
    std::int64_t v = 0;
    int pos = 0;
    for (int i = 0; i < W; ++i) {
      if (mask & (1u << i)) {
        v += (pos % 2 == 0 ? 1 : -1) * freqs.at(M + 1 + i);
        ++pos;
      }
    }
    if (pos % 2 == 1) out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// A second, structurally different uniqueness checker: build the signed
// multiset as an explicit multiplicity map and compare those.
int naive_shortened_count(std::int64_t n, const LacunarySequence& freqs, int M,
                          int N) {
  const int W = N - M;
  std::set<std::map<int, int>> multisets;
  for (std::uint32_t m1 = 1; m1 < (1u << W); ++m1) {
    for (std::uint32_t m2 = 1; m2 < (1u << W); ++m2) {
      std::map<int, int> contrib;  // index -> net signed multiplicity
      std::map<int, int> sign1, sign2;
      std::int64_t v1 = 0, v2 = 0;
      int pos = 0;
      for (int i = 0; i < W; ++i) {
        if (m1 & (1u << i)) {
          const int s = pos % 2 == 0 ? 1 : -1;
          sign1[i] = s;
          v1 += s * freqs.at(M + 1 + i);
          ++pos;
        }
      }
      if (pos % 2 == 0) continue;
      pos = 0;
      for (int i = 0; i < W; ++i) {
        if (m2 & (1u << i)) {
          const int s = pos % 2 == 0 ? 1 : -1;
          sign2[i] = s;
          v2 += s * freqs.at(M + 1 + i);
          ++pos;
        }
      }
      if (pos % 2 == 0) continue;
      if (v1 - v2 != n) continue;
      bool cancels = false;
      for (const auto& [i, s] : sign1) {
        if (sign2.count(i) && sign2[i] == s) cancels = true;
      }
      if (cancels) continue;
      for (const auto& [i, s] : sign1) contrib[i] += s;
      for (const auto& [i, s] : sign2) contrib[i] -= s;
      multisets.insert(contrib);
    }
  }
  return static_cast<int>(multisets.size());
}

}  // namespace

TEST_CASE("block values match the naive oracle and the product support") {
  std::mt19937_64 eng(3);
  for (double q : {2.0, 3.0, 3.5}) {
    const LacunarySequence freqs = LacunarySequence::geometric(q, 8);
    for (const auto [M, N] : {std::pair{0, 8}, {2, 7}}) {
      CHECK(block_values(freqs, M, N) == naive_block_values(freqs, M, N));
      // cross-module: support(b) of the product equals the block values for
      // q >= 2 when every B_j is nonzero
      const CoefficientSequence coeffs = random_coefficients(eng, 8, 0.2, 0.9);
      const TrigPolyPair pair = partial_product(coeffs, freqs, M, N);
      CHECK(support(pair.b).freqs == block_values(freqs, M, N));
    }
  }
}

TEST_CASE("enumerate_representations on small examples") {
  const LacunarySequence f3 = LacunarySequence::geometric(3.0, 3);  // 1, 3, 9

  // n = 2 = m_2 - m_1 is the only representation, and it is shortened
  const auto reps2 = enumerate_representations(2, f3, 0, 3, 3, 3);
  REQUIRE(reps2.size() == 1);
  CHECK(reps2[0].plus_block == std::vector<int>{2});
  CHECK(reps2[0].minus_block == std::vector<int>{1});
  CHECK(reps2[0].maximally_shortened);

  // n = 6 has two pair realizations but only one is maximally shortened
  const auto reps6 = enumerate_representations(6, f3, 0, 3, 3, 3);
  REQUIRE(reps6.size() == 2);
  int shortened = 0;
  for (const auto& r : reps6) shortened += r.maximally_shortened;
  CHECK(shortened == 1);

  // n = m_3 = 9 admits no two-block representation in this window
  CHECK(enumerate_representations(9, f3, 0, 3, 3, 3).empty());

  // maxJ filters block sizes
  const auto reps6j1 = enumerate_representations(6, f3, 0, 3, 1, 1);
  REQUIRE(reps6j1.size() == 1);
  CHECK(reps6j1[0].plus_block == std::vector<int>{3});
  CHECK(reps6j1[0].minus_block == std::vector<int>{2});

  CHECK_THROWS_AS(enumerate_representations(6, f3, 0, 3, 2, 3), ValidationError);
}

TEST_CASE("n = 0 has no shortened representation for q = 3") {
  const LacunarySequence f6 = LacunarySequence::geometric(3.0, 6);
  const auto reps = enumerate_representations(0, f6, 0, 6, 21, 21);
  for (const auto& r : reps) {
    CHECK(!r.maximally_shortened);  // every candidate cancels
  }
  CHECK(!reps.empty());  // e.g. identical blocks
}

TEST_CASE("same terms moved between parentheses count once") {
  // ({1,2,3},{4}) and ({1},{2,3,4}) carry the same signed terms
  const LacunarySequence f4 = LacunarySequence::geometric(3.0, 4);  // 1,3,9,27
  const auto reps = enumerate_representations(-20, f4, 0, 4, 3, 3);
  int shortened = 0;
  for (const auto& r : reps) shortened += r.maximally_shortened;
  CHECK(shortened == 2);  // two pair realizations...
  const UniquenessReport report = uniqueness_check(f4, 0, 4);
  CHECK(report.violations.empty());  // ...but a single representation
}

TEST_CASE("uniqueness for q >= 3 sequences, naive cross-check") {
  for (double q : {3.0, 3.5}) {
    const LacunarySequence freqs = LacunarySequence::geometric(q, 6);
    const UniquenessReport report = uniqueness_check(freqs, 0, 6);
    CHECK(report.violations.empty());
    CHECK(report.distinct_shortened_targets > 0);
  }
  // spot-check the multiset counting against the independent implementation
  const LacunarySequence f5 = LacunarySequence::geometric(3.0, 5);
  std::mt19937_64 eng(5);
  const auto values = block_values(f5, 0, 5);
  for (int i = 0; i < 25; ++i) {
    const std::int64_t n = values[eng() % values.size()] -
                           values[eng() % values.size()];
    const int naive = naive_shortened_count(n, f5, 0, 5);
    CHECK(naive <= 1);
    const auto reps = enumerate_representations(n, f5, 0, 5, 21, 21);
    bool any_shortened = false;
    for (const auto& r : reps) any_shortened |= r.maximally_shortened;
    CHECK(any_shortened == (naive == 1));
  }
}

TEST_CASE("q = 2 runs in diagnostic mode") {
  const LacunarySequence f6 = LacunarySequence::geometric(2.0, 6);
  const UniquenessReport report = uniqueness_check(f6, 0, 6);
  // violations may be nonempty; recompute a few of them naively
  for (std::size_t i = 0; i < std::min<std::size_t>(report.violations.size(), 5); ++i) {
    const auto& v = report.violations[i];
    CHECK(naive_shortened_count(v.n, f6, 0, 6) == v.shortened_count);
    CHECK(v.shortened_count >= 2);
  }
}

TEST_CASE("classify_partition") {
  const LacunarySequence f3 = LacunarySequence::geometric(3.0, 3);
  const PartitionTriple p2 = classify_partition(2, f3, 0, 3);
  CHECK(p2.s1 == std::vector<int>{1, 2});
  CHECK(p2.s2.empty());
  CHECK(p2.s0 == std::vector<int>{3});

  // no representation: everything sits in S0
  const PartitionTriple none = classify_partition(5, f3, 0, 3);
  CHECK(none.s0 == std::vector<int>{1, 2, 3});
  CHECK(none.s1.empty());

  // n = 4 = (m_1 - m_2 + m_3) - (m_2): index 2 appears twice
  const PartitionTriple twice = classify_partition(4, f3, 0, 3);
  CHECK(twice.s2 == std::vector<int>{2});
  CHECK(twice.s1 == std::vector<int>{1, 3});
  CHECK(twice.s0.empty());
}

TEST_CASE("multiplicity bound") {
  // window of size 1: at most 2 integers (+m, -m) per partition
  const LacunarySequence f1 = LacunarySequence::geometric(3.0, 1);
  const MultiplicityReport r1 = multiplicity_bound_check(f1, 0, 1);
  CHECK(r1.ok);
  CHECK(r1.worst_count <= 2);

  for (double q : {3.0, 3.5}) {
    const LacunarySequence f5 = LacunarySequence::geometric(q, 5);
    const MultiplicityReport r = multiplicity_bound_check(f5, 0, 5);
    CHECK(r.ok);
    for (const auto& g : r.groups) {
      CHECK(g.count <= g.bound);
    }
  }

  // empty window: vacuously fine
  const MultiplicityReport r0 = multiplicity_bound_check(f1, 0, 0);
  CHECK(r0.ok);
  CHECK(r0.groups.empty());
}

TEST_CASE("autocorrelation bound worked example") {
  const CoefficientSequence zero(2, make_coefficient({0.0, 0.0}));
  const LacunarySequence f2 = LacunarySequence::geometric(3.0, 2);  // 1, 3
  const TrigPolyPair pz = partial_product(zero, f2, 0, 2);
  const AutocorrelationBound abz = autocorrelation_bound_check(pz, zero);
  CHECK(abz.lhs == 0.0);
  CHECK(abz.rhs == 1.0);
  CHECK(abz.ok);

  const CoefficientSequence c2(2, make_coefficient({0.75, 0.0}));
  const TrigPolyPair pair = partial_product(c2, f2, 0, 2);
  CHECK(pair.b.coeff(1) == Complex{15.0 / 16, 0});
  CHECK(pair.b.coeff(3) == Complex{15.0 / 16, 0});
  const AutocorrelationBound ab = autocorrelation_bound_check(pair, c2);
  const double c4 = std::pow(15.0 / 16, 4);
  CHECK(ab.lhs == doctest::Approx(4.0 * c4 + 2.0 * c4).epsilon(1e-14));
  CHECK(ab.rhs == doctest::Approx(std::exp(9.0)).epsilon(1e-14));
  CHECK(ab.ok);
}

TEST_CASE("autocorrelation bound on random windows, dual routes") {
  std::mt19937_64 eng(7);
  for (int round = 0; round < 12; ++round) {
    const LacunarySequence freqs = LacunarySequence::geometric(3.0, 12);
    const CoefficientSequence coeffs = random_coefficients(eng, 12, 0.05, 0.8);
    const int M = static_cast<int>(eng() % 4);
    const TrigPolyPair pair = partial_product(coeffs, freqs, M, 12);
    const AutocorrelationBound ab = autocorrelation_bound_check(pair, coeffs);
    CHECK(ab.ok);

    // route 2: l2 of b * conj(b) through the generic convolution
    const double via_multiply = l2_norm_sq(multiply(pair.b, conj_reflect(pair.b)));
    CHECK(via_multiply == doctest::Approx(ab.lhs).epsilon(1e-10));

    // route 3 (small windows): dense trapezoid quadrature of |b|^4
    if (pair.b.max_abs_freq() <= 20000) {
      const std::int64_t grid = 4 * pair.b.max_abs_freq() + 5;
      const auto vals = evaluate_on_grid(pair.b, grid);
      KahanSum s;
      for (const auto& v : vals) {
        const double m2 = std::norm(v);
        s.add(m2 * m2);
      }
      const double quad = s.value() / static_cast<double>(grid);
      CHECK(quad == doctest::Approx(ab.lhs).epsilon(1e-10));
    }
  }
}

TEST_CASE("representation budgets") {
  const LacunarySequence f30 = LacunarySequence::geometric(3.0, 30);
  CHECK_THROWS_AS(enumerate_representations(1, f30, 0, 30, 3, 3), BudgetError);
  CHECK_THROWS_AS(uniqueness_check(f30, 0, 30), BudgetError);
  CHECK_THROWS_AS(multiplicity_bound_check(f30, 0, 14), BudgetError);
}
