#include "lacsu11/lacunary.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

#include "lacsu11/errors.hpp"
#include "test_util.hpp"

using namespace lacsu11;
using lacsu11::testing::random_coefficients;

namespace {

// Independent oracle: fold the factor matrices pointwise.
SU11Matrix matrix_product_at(const CoefficientSequence& coeffs,
                             const LacunarySequence& freqs, int M, int N,
                             double t) {
  SU11Matrix g{};
  for (int j = M + 1; j <= N; ++j) {
    g = mul(g, factor_at(coeffs[static_cast<std::size_t>(j - 1)], freqs.at(j), t));
  }
  return g;
}

}  // namespace

TEST_CASE("lacunary sequence validation is exact") {
  CHECK_NOTHROW(LacunarySequence::validated({1, 2, 4, 8}, 2.0));
  CHECK_NOTHROW(LacunarySequence::validated({1, 2}, 1.5));  // 2 >= 1.5*1 holds
  CHECK_THROWS_AS(LacunarySequence::validated({1, 2, 3}, 2.0), ValidationError);
  CHECK_THROWS_AS(LacunarySequence::validated({2, 1}, 2.0), ValidationError);
  CHECK_THROWS_AS(LacunarySequence::validated({0, 1}, 2.0), ValidationError);
  CHECK_THROWS_AS(LacunarySequence::validated({1, 2}, 1.0), ValidationError);
  // 3 = ceil(2.5 * 1) > 2: the comparison must not round through doubles
  CHECK_THROWS_AS(LacunarySequence::validated({1, 2}, 2.5), ValidationError);
  CHECK_NOTHROW(LacunarySequence::validated({1, 3}, 2.5));
}

TEST_CASE("geometric-ceil generation") {
  CHECK(LacunarySequence::geometric(2.0, 5).frequencies() ==
        std::vector<std::int64_t>{1, 2, 4, 8, 16});
  CHECK(LacunarySequence::geometric(3.0, 4).frequencies() ==
        std::vector<std::int64_t>{1, 3, 9, 27});
  CHECK(LacunarySequence::geometric(2.5, 4).frequencies() ==
        std::vector<std::int64_t>{1, 3, 8, 20});
  CHECK(LacunarySequence::geometric(3.5, 5).frequencies() ==
        std::vector<std::int64_t>{1, 4, 14, 49, 172});
}

TEST_CASE("empty and single-factor products") {
  const CoefficientSequence coeffs{make_coefficient({0.75, 0.0})};
  const LacunarySequence freqs = LacunarySequence::geometric(2.0, 1);
  const TrigPolyPair empty = partial_product(coeffs, freqs, 0, 0);
  CHECK(empty.a.size() == 1);
  CHECK(empty.a.coeff(0) == Complex{1, 0});
  CHECK(empty.b.is_zero());

  const TrigPolyPair one = partial_product(coeffs, freqs, 0, 1);
  CHECK(one.a.size() == 1);
  CHECK(one.a.coeff(0) == Complex{1.25, 0});
  CHECK(one.b.size() == 1);
  CHECK(one.b.coeff(1) == Complex{0.75, 0});
}

TEST_CASE("worked two-factor product") {
  const CoefficientSequence coeffs(2, make_coefficient({0.75, 0.0}));
  const LacunarySequence freqs = LacunarySequence::validated({1, 2}, 2.0);
  const TrigPolyPair pair = partial_product(coeffs, freqs, 0, 2);
  CHECK(pair.a.coeff(0) == Complex{25.0 / 16, 0});
  CHECK(pair.a.coeff(-1) == Complex{9.0 / 16, 0});
  CHECK(pair.b.coeff(1) == Complex{15.0 / 16, 0});
  CHECK(pair.b.coeff(2) == Complex{15.0 / 16, 0});
  CHECK(pair.a.size() == 2);
  CHECK(pair.b.size() == 2);

  // Lemma identities, exact dyadic arithmetic
  CHECK(energy_identity_residual(pair, coeffs) == 0.0);
  const double lhs = l2_norm_sq(pair.a) + l2_norm_sq(pair.b);
  CHECK(lhs == 1156.0 / 256);
  CHECK(centered_identity_residual(pair, coeffs) == 0.0);
  CHECK(mean(pair.a) == Complex{25.0 / 16, 0});
}

TEST_CASE("recursion matches the matrix-product oracle pointwise") {
  std::mt19937_64 eng(43);
  const LacunarySequence freqs = LacunarySequence::geometric(2.0, 10);
  const CoefficientSequence coeffs = random_coefficients(eng, 10, 0.1, 0.7);
  for (const auto [M, N] : {std::pair{0, 10}, {3, 9}, {5, 6}}) {
    const TrigPolyPair pair = partial_product(coeffs, freqs, M, N);
    for (int i = 0; i < 24; ++i) {
      const double t = testing::u01(eng);
      const SU11Matrix direct = matrix_product_at(coeffs, freqs, M, N, t);
      const Complex a = evaluate(pair.a, t);
      const Complex b = evaluate(pair.b, t);
      const double scale = 1.0 + std::abs(direct.a);
      CHECK(std::abs(a - direct.a) <= 1e-11 * scale);
      CHECK(std::abs(b - direct.b) <= 1e-11 * scale);
    }
  }
}

TEST_CASE("pointwise determinant identity at random t") {
  std::mt19937_64 eng(47);
  const LacunarySequence freqs = LacunarySequence::geometric(2.0, 12);
  const CoefficientSequence coeffs = random_coefficients(eng, 12, 0.1, 0.6);
  const TrigPolyPair pair = partial_product(coeffs, freqs, 0, 12);
  for (int i = 0; i < 64; ++i) {
    const double t = testing::u01(eng);
    const double a2 = std::norm(evaluate(pair.a, t));
    const double b2 = std::norm(evaluate(pair.b, t));
    CHECK(std::abs(a2 - b2 - 1.0) <= 1e-10 * (1.0 + a2 + b2));
  }
}

TEST_CASE("composition cross-check") {
  std::mt19937_64 eng(53);
  const LacunarySequence freqs = LacunarySequence::geometric(2.0, 11);
  const CoefficientSequence coeffs = random_coefficients(eng, 11, 0.1, 0.8);
  const TrigPolyPair whole = partial_product(coeffs, freqs, 0, 11);
  const TrigPolyPair left = partial_product(coeffs, freqs, 0, 5);
  const TrigPolyPair right = partial_product(coeffs, freqs, 5, 11);
  const TrigPolyPair glued = compose(left, right);
  REQUIRE(glued.a.size() == whole.a.size());
  REQUIRE(glued.b.size() == whole.b.size());
  for (std::size_t i = 0; i < whole.a.size(); ++i) {
    CHECK(glued.a.terms()[i].freq == whole.a.terms()[i].freq);
    CHECK(std::abs(glued.a.terms()[i].coeff - whole.a.terms()[i].coeff) <=
          1e-13 * (1.0 + std::abs(whole.a.terms()[i].coeff)));
  }
  for (std::size_t i = 0; i < whole.b.size(); ++i) {
    CHECK(glued.b.terms()[i].freq == whole.b.terms()[i].freq);
    CHECK(std::abs(glued.b.terms()[i].coeff - whole.b.terms()[i].coeff) <=
          1e-13 * (1.0 + std::abs(whole.b.terms()[i].coeff)));
  }
  CHECK_THROWS_AS(compose(left, left), ValidationError);
}

TEST_CASE("support counting for q >= 2") {
  std::mt19937_64 eng(59);
  for (double q : {2.0, 3.0}) {
    const LacunarySequence freqs = LacunarySequence::geometric(q, 9);
    const CoefficientSequence coeffs = random_coefficients(eng, 9, 0.05, 0.9);
    for (const auto [M, N] : {std::pair{0, 9}, {2, 8}}) {
      const TrigPolyPair pair = partial_product(coeffs, freqs, M, N);
      CHECK(pair.a.size() + pair.b.size() ==
            (std::size_t{1} << static_cast<unsigned>(N - M)));
    }
  }
}

TEST_CASE("s_mn") {
  const CoefficientSequence zero(4, make_coefficient({0.0, 0.0}));
  CHECK(s_mn(zero, 0, 4) == 0.0);
  const CoefficientSequence c2(2, make_coefficient({0.75, 0.0}));
  CHECK(s_mn(c2, 0, 2) == doctest::Approx(2.0 * std::log(17.0 / 8)).epsilon(1e-15));
  std::mt19937_64 eng(61);
  const CoefficientSequence r = random_coefficients(eng, 10, 0.0, 0.9);
  for (int N = 0; N < 10; ++N) {
    CHECK(s_mn(r, 0, N) <= s_mn(r, 0, N + 1));
  }
  CHECK_THROWS_AS(s_mn(r, 0, 11), ValidationError);
}

TEST_CASE("energy identities on random windows") {
  std::mt19937_64 eng(67);
  for (int round = 0; round < 30; ++round) {
    const double q = round % 2 == 0 ? 2.0 : 3.0;
    const LacunarySequence freqs = LacunarySequence::geometric(q, 12);
    const CoefficientSequence coeffs = random_coefficients(eng, 12, 0.05, 0.9);
    const int M = static_cast<int>(eng() % 4);
    const int N = M + 2 + static_cast<int>(eng() % static_cast<unsigned>(12 - M - 1));
    const TrigPolyPair pair = partial_product(coeffs, freqs, M, N);
    CHECK(energy_identity_residual(pair, coeffs) <= 1e-12);
    CHECK(centered_identity_residual(pair, coeffs) <= 1e-12);
    // mean(a) = prod A_j
    CHECK(std::abs(mean(pair.a) - Complex{a_product(coeffs, M, N), 0.0}) <=
          1e-12 * a_product(coeffs, M, N));
  }
}

TEST_CASE("minimum gap checks") {
  const CoefficientSequence c1{make_coefficient({0.5, 0.0})};
  const LacunarySequence f1 = LacunarySequence::geometric(2.0, 1);
  const GapCheck single = min_gap_check(partial_product(c1, f1, 0, 1), f1, 0);
  CHECK(!single.gap_a.has_value());
  CHECK(!single.gap_b.has_value());
  CHECK(single.gap_union == 1);
  CHECK(single.ok());
  CHECK(single.ok_union);

  const CoefficientSequence c2(2, make_coefficient({0.75, 0.0}));
  const LacunarySequence f2 = LacunarySequence::validated({1, 2}, 2.0);
  const GapCheck two = min_gap_check(partial_product(c2, f2, 0, 2), f2, 0);
  CHECK(two.threshold == 1);
  CHECK(two.gap_a == 1);
  CHECK(two.gap_b == 1);
  CHECK(two.gap_union == 1);
  CHECK(two.ok());

  std::mt19937_64 eng(71);
  const LacunarySequence f3 = LacunarySequence::geometric(2.0, 8);
  const CoefficientSequence c3 = random_coefficients(eng, 8, 0.2, 0.9);
  const GapCheck window = min_gap_check(partial_product(c3, f3, 2, 8), f3, 2);
  CHECK(window.threshold == 4);
  CHECK(window.ok());
  CHECK(*window.gap_a >= 4);
  CHECK(*window.gap_b >= 4);
}

TEST_CASE("nonlinear Parseval") {
  // all B = 0: the integral is exactly 0
  const CoefficientSequence zero(3, make_coefficient({0.0, 0.0}));
  const LacunarySequence f3 = LacunarySequence::geometric(2.0, 3);
  const TrigPolyPair pz = partial_product(zero, f3, 0, 3);
  CHECK(nonlinear_parseval_residual(pz, zero, 64) == 0.0);

  // single factor: a is the constant A_1
  const CoefficientSequence one{make_coefficient({0.6, 0.8})};
  const LacunarySequence f1 = LacunarySequence::geometric(2.0, 1);
  const TrigPolyPair p1 = partial_product(one, f1, 0, 1);
  CHECK(nonlinear_parseval_residual(p1, one, 16) <= 1e-15);

  // the Jensen two-factor case at high resolution: integral equals log(25/16)
  const CoefficientSequence c2(2, make_coefficient({0.75, 0.0}));
  const LacunarySequence f2 = LacunarySequence::validated({1, 2}, 2.0);
  const TrigPolyPair p2 = partial_product(c2, f2, 0, 2);
  CHECK(nonlinear_parseval_residual(p2, c2, 4096) <= 1e-10);

  CHECK_THROWS_AS(nonlinear_parseval_residual(p2, c2, 7), GridError);
}

TEST_CASE("window and budget validation") {
  const CoefficientSequence coeffs(4, make_coefficient({0.5, 0.0}));
  const LacunarySequence freqs = LacunarySequence::geometric(2.0, 4);
  CHECK_THROWS_AS(partial_product(coeffs, freqs, 0, 5), ValidationError);
  CHECK_THROWS_AS(partial_product(coeffs, freqs, -1, 2), ValidationError);
  CHECK_THROWS_AS(partial_product(coeffs, freqs, 3, 2), ValidationError);
  Limits tight;
  tight.max_window = 2;
  CHECK_THROWS_AS(partial_product(coeffs, freqs, 0, 4, tight), BudgetError);
}

TEST_CASE("pair JSON round trip") {
  std::mt19937_64 eng(73);
  const LacunarySequence freqs = LacunarySequence::geometric(2.0, 6);
  const CoefficientSequence coeffs = random_coefficients(eng, 6, 0.1, 0.8);
  const TrigPolyPair pair = partial_product(coeffs, freqs, 1, 6);
  const TrigPolyPair back = pair_from_json(pair_to_json(pair));
  CHECK(back.M == pair.M);
  CHECK(back.N == pair.N);
  CHECK(back.a == pair.a);
  CHECK(back.b == pair.b);
  CHECK_THROWS_AS(pair_from_json("{}"), ValidationError);
}
