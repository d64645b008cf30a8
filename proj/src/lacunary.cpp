#include "lacsu11/lacunary.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <json.hpp>

#include "json_io.hpp"
#include "lacsu11/errors.hpp"

namespace lacsu11 {

namespace {

// Decompose a positive double as mant * 2^(exp2 - 53) with integer mant.
struct QParts {
  std::int64_t mant;
  int exp2;
};

QParts split_ratio(double q) {
  if (!std::isfinite(q) || q <= 1.0) {
    throw ValidationError("lacunary ratio q must be a finite number > 1");
  }
  if (q > static_cast<double>(std::int64_t{1} << 31)) {
    throw ValidationError("lacunary ratio q is implausibly large");
  }
  int e = 0;
  const double f = std::frexp(q, &e);  // q = f * 2^e, f in [0.5, 1)
  const auto mant = static_cast<std::int64_t>(std::ldexp(f, 53));
  return QParts{mant, e};
}

}  // namespace

bool ratio_holds_exactly(std::int64_t m_next, double q, std::int64_t m_prev) {
  const QParts qp = split_ratio(q);
  // m_next >= mant * m_prev * 2^(e-53)
  const int shift = 53 - qp.exp2;
  const __int128 rhs = static_cast<__int128>(qp.mant) * m_prev;
  if (shift >= 0) {
    return (static_cast<__int128>(m_next) << shift) >= rhs;
  }
  return static_cast<__int128>(m_next) >= (rhs << (-shift));
}

std::int64_t ceil_mul_exact(double q, std::int64_t m) {
  const QParts qp = split_ratio(q);
  const __int128 prod = static_cast<__int128>(qp.mant) * m;
  const int shift = 53 - qp.exp2;
  __int128 result;
  if (shift >= 0) {
    const __int128 one = 1;
    result = (prod + (one << shift) - 1) >> shift;
  } else {
    result = prod << (-shift);
  }
  if (result > std::numeric_limits<std::int64_t>::max()) {
    throw std::overflow_error("ceil_mul_exact: frequency overflow");
  }
  return static_cast<std::int64_t>(result);
}

LacunarySequence LacunarySequence::validated(std::vector<std::int64_t> freqs,
                                             double q) {
  split_ratio(q);  // validates q itself
  for (std::size_t i = 0; i < freqs.size(); ++i) {
    if (freqs[i] <= 0) {
      throw ValidationError("lacunary frequencies must be positive");
    }
    if (i > 0) {
      if (freqs[i] <= freqs[i - 1]) {
        throw ValidationError("lacunary frequencies must be strictly increasing");
      }
      if (!ratio_holds_exactly(freqs[i], q, freqs[i - 1])) {
        throw ValidationError("frequency list is not q-lacunary at index " +
                              std::to_string(i + 1));
      }
    }
  }
  return LacunarySequence(std::move(freqs), q);
}

LacunarySequence LacunarySequence::geometric(double q, int count) {
  if (count < 1) throw ValidationError("geometric sequence needs count >= 1");
  std::vector<std::int64_t> m;
  m.reserve(static_cast<std::size_t>(count));
  m.push_back(1);
  for (int j = 1; j < count; ++j) {
    m.push_back(ceil_mul_exact(q, m.back()));
  }
  return LacunarySequence(std::move(m), q);
}

namespace {

void check_window(int M, int N, std::size_t coeff_count, std::size_t freq_count,
                  const Limits& limits) {
  if (M < 0 || N < M) throw ValidationError("window requires 0 <= M <= N");
  if (static_cast<std::size_t>(N) > coeff_count) {
    throw ValidationError("window end exceeds coefficient sequence length");
  }
  if (static_cast<std::size_t>(N) > freq_count) {
    throw ValidationError("window end exceeds frequency sequence length");
  }
  if (N - M > limits.max_window) {
    throw BudgetError("window size " + std::to_string(N - M) +
                      " exceeds the cap of " + std::to_string(limits.max_window));
  }
}

void check_range(int M, int N, std::size_t count) {
  if (M < 0 || N < M || static_cast<std::size_t>(N) > count) {
    throw ValidationError("index window out of range");
  }
}

}  // namespace

TrigPolyPair partial_product(const CoefficientSequence& coeffs,
                             const LacunarySequence& freqs, int M, int N,
                             const Limits& limits) {
  check_window(M, N, coeffs.size(), static_cast<std::size_t>(freqs.size()), limits);
  TrigPoly a = TrigPoly::constant({1.0, 0.0});
  TrigPoly b;
  for (int j = M + 1; j <= N; ++j) {
    const CoefficientPair& c = coeffs[static_cast<std::size_t>(j - 1)];
    const std::int64_t m = freqs.at(j);
    const Complex A{c.A, 0.0};
    TrigPoly next_a = add(scale(a, A), scale(shift(b, -m), std::conj(c.B)));
    TrigPoly next_b = add(scale(shift(a, m), c.B), scale(b, A));
    a = std::move(next_a);
    b = std::move(next_b);
  }
  return TrigPolyPair{std::move(a), std::move(b), M, N};
}

TrigPolyPair compose(const TrigPolyPair& left, const TrigPolyPair& right) {
  if (left.N != right.M) {
    throw ValidationError("compose: windows must be adjacent");
  }
  TrigPoly a = add(multiply(left.a, right.a),
                   multiply(left.b, conj_reflect(right.b)));
  TrigPoly b = add(multiply(left.a, right.b),
                   multiply(left.b, conj_reflect(right.a)));
  return TrigPolyPair{std::move(a), std::move(b), left.M, right.N};
}

double s_mn(const CoefficientSequence& coeffs, int M, int N) {
  check_range(M, N, coeffs.size());
  KahanSum s;
  for (int j = M + 1; j <= N; ++j) {
    // A^2 + |B|^2 = 1 + 2|B|^2 exactly
    s.add(std::log1p(2.0 * std::norm(coeffs[static_cast<std::size_t>(j - 1)].B)));
  }
  return s.value();
}

double energy_product(const CoefficientSequence& coeffs, int M, int N) {
  check_range(M, N, coeffs.size());
  double p = 1.0;
  for (int j = M + 1; j <= N; ++j) {
    p *= 1.0 + 2.0 * std::norm(coeffs[static_cast<std::size_t>(j - 1)].B);
  }
  return p;
}

double a_sq_product(const CoefficientSequence& coeffs, int M, int N) {
  check_range(M, N, coeffs.size());
  double p = 1.0;
  for (int j = M + 1; j <= N; ++j) {
    p *= 1.0 + std::norm(coeffs[static_cast<std::size_t>(j - 1)].B);
  }
  return p;
}

double a_product(const CoefficientSequence& coeffs, int M, int N) {
  check_range(M, N, coeffs.size());
  double p = 1.0;
  for (int j = M + 1; j <= N; ++j) p *= coeffs[static_cast<std::size_t>(j - 1)].A;
  return p;
}

double log_a_sum(const CoefficientSequence& coeffs, int M, int N) {
  check_range(M, N, coeffs.size());
  KahanSum s;
  for (int j = M + 1; j <= N; ++j) {
    s.add(0.5 * std::log1p(std::norm(coeffs[static_cast<std::size_t>(j - 1)].B)));
  }
  return s.value();
}

double b_sq_sum(const CoefficientSequence& coeffs, int M, int N) {
  check_range(M, N, coeffs.size());
  KahanSum s;
  for (int j = M + 1; j <= N; ++j) s.add(std::norm(coeffs[static_cast<std::size_t>(j - 1)].B));
  return s.value();
}

double energy_identity_residual(const TrigPolyPair& pair,
                                const CoefficientSequence& coeffs) {
  const double rhs = energy_product(coeffs, pair.M, pair.N);  // >= 1
  const double lhs = l2_norm_sq(pair.a) + l2_norm_sq(pair.b);
  return std::abs(lhs - rhs) / rhs;
}

double centered_identity_residual(const TrigPolyPair& pair,
                                  const CoefficientSequence& coeffs) {
  KahanSum centered;
  for (const auto& t : pair.a.terms()) {
    if (t.freq != 0) centered.add(std::norm(t.coeff));
  }
  const double lhs = centered.value() + l2_norm_sq(pair.b);
  const double rhs = energy_product(coeffs, pair.M, pair.N) -
                     a_sq_product(coeffs, pair.M, pair.N);
  if (rhs <= 0.0) return lhs == 0.0 ? 0.0 : lhs;
  return std::abs(lhs - rhs) / rhs;
}

GapCheck min_gap_check(const TrigPolyPair& pair, const LacunarySequence& freqs,
                       int M) {
  GapCheck gc;
  if (M < 0 || M >= freqs.size()) {
    if (pair.M != pair.N) throw ValidationError("min_gap_check: M out of range");
    return gc;  // empty window, nothing to separate
  }
  gc.threshold = freqs.at(M + 1);
  const SupportInfo sa = support(pair.a);
  const SupportInfo sb = support(pair.b);
  gc.gap_a = sa.min_gap;
  gc.gap_b = sb.min_gap;
  std::vector<std::int64_t> merged;
  merged.reserve(sa.freqs.size() + sb.freqs.size());
  std::merge(sa.freqs.begin(), sa.freqs.end(), sb.freqs.begin(), sb.freqs.end(),
             std::back_inserter(merged));
  merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
  gc.gap_union = min_gap(merged);
  gc.ok_a = !gc.gap_a || *gc.gap_a >= gc.threshold;
  gc.ok_b = !gc.gap_b || *gc.gap_b >= gc.threshold;
  gc.ok_union = !gc.gap_union || *gc.gap_union >= gc.threshold;
  return gc;
}

std::int64_t parseval_min_grid(const TrigPolyPair& pair) {
  return 4 * pair.a.max_abs_freq() + 4;
}

double nonlinear_parseval_residual(const TrigPolyPair& pair,
                                   const CoefficientSequence& coeffs,
                                   std::int64_t grid_points) {
  const std::int64_t need = parseval_min_grid(pair);
  if (grid_points < need) {
    throw GridError("nonlinear_parseval_residual: grid of " +
                    std::to_string(grid_points) + " points is below the required " +
                    std::to_string(need));
  }
  const std::vector<Complex> values = evaluate_on_grid(pair.a, grid_points);
  KahanSum s;
  for (const Complex& v : values) s.add(0.5 * std::log(std::norm(v)));
  const double quad = s.value() / static_cast<double>(grid_points);
  return std::abs(quad - log_a_sum(coeffs, pair.M, pair.N));
}

std::string pair_to_json(const TrigPolyPair& pair) {
  nlohmann::json j{{"M", pair.M},
                   {"N", pair.N},
                   {"a", detail::poly_to_json_obj(pair.a)},
                   {"b", detail::poly_to_json_obj(pair.b)}};
  return j.dump();
}

TrigPolyPair pair_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("pair_from_json: ") + e.what());
  }
  if (!j.is_object() || !j.contains("M") || !j.contains("N") ||
      !j.contains("a") || !j.contains("b")) {
    throw ValidationError("pair_from_json: expected {M, N, a, b}");
  }
  TrigPolyPair pair;
  pair.M = j["M"].get<int>();
  pair.N = j["N"].get<int>();
  if (pair.M < 0 || pair.N < pair.M) {
    throw ValidationError("pair_from_json: invalid window");
  }
  pair.a = detail::poly_from_json_obj(j["a"]);
  pair.b = detail::poly_from_json_obj(j["b"]);
  return pair;
}

}  // namespace lacsu11
