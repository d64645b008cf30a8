#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lacsu11/config.hpp"
#include "lacsu11/su11.hpp"
#include "lacsu11/trig_poly.hpp"

namespace lacsu11 {

/// Strictly increasing positive integer frequencies with a certified
/// lacunarity ratio q > 1: m_{j+1} >= q * m_j for all j, verified by exact
/// integer arithmetic (no floating-point rounding in the comparison).
class LacunarySequence {
 public:
  static LacunarySequence validated(std::vector<std::int64_t> freqs, double q);
  /// m_1 = 1, m_{j+1} = ceil(q * m_j), computed exactly.
  static LacunarySequence geometric(double q, int count);

  const std::vector<std::int64_t>& frequencies() const { return m_; }
  double ratio() const { return q_; }
  int size() const { return static_cast<int>(m_.size()); }
  std::int64_t at(int j) const { return m_.at(static_cast<std::size_t>(j) - 1); }  // 1-based

 private:
  LacunarySequence(std::vector<std::int64_t> m, double q) : m_(std::move(m)), q_(q) {}
  std::vector<std::int64_t> m_;
  double q_ = 2.0;
};

/// Exact test of  m_next >= q * m_prev  via 128-bit integer arithmetic.
bool ratio_holds_exactly(std::int64_t m_next, double q, std::int64_t m_prev);
/// ceil(q * m) computed exactly for q > 0 given as a double.
std::int64_t ceil_mul_exact(double q, std::int64_t m);

using CoefficientSequence = std::vector<CoefficientPair>;

/// The pair (a, b) of trigonometric polynomials representing the matrix
/// product over the half-open index window (M, N].
struct TrigPolyPair {
  TrigPoly a = TrigPoly::constant({1.0, 0.0});
  TrigPoly b;
  int M = 0;
  int N = 0;
};

/// Builds the window product by the left-to-right recursion
///   a_j = a_{j-1} A_j + b_{j-1} conj(B_j) e^{-2 pi i m_j t}
///   b_j = a_{j-1} B_j e^{+2 pi i m_j t} + b_{j-1} A_j
/// starting from (1, 0). The empty window M == N gives the identity pair.
TrigPolyPair partial_product(const CoefficientSequence& coeffs,
                             const LacunarySequence& freqs, int M, int N,
                             const Limits& limits = default_limits());

/// Polynomial-level 2x2 composition of two adjacent windows; used as a
/// cross-check of the recursion, not as the primary construction.
TrigPolyPair compose(const TrigPolyPair& left, const TrigPolyPair& right);

/// S_{M,N} = sum_{j=M+1}^{N} log(A_j^2 + |B_j|^2); 0 for the empty window.
double s_mn(const CoefficientSequence& coeffs, int M, int N);

/// prod_{j=M+1}^{N} (A_j^2 + |B_j|^2)  =  prod (1 + 2 |B_j|^2).
double energy_product(const CoefficientSequence& coeffs, int M, int N);
/// prod_{j=M+1}^{N} A_j^2.
double a_sq_product(const CoefficientSequence& coeffs, int M, int N);
/// prod_{j=M+1}^{N} A_j.
double a_product(const CoefficientSequence& coeffs, int M, int N);
/// sum_{j=M+1}^{N} log A_j.
double log_a_sum(const CoefficientSequence& coeffs, int M, int N);
/// sum_{j=M+1}^{N} |B_j|^2.
double b_sq_sum(const CoefficientSequence& coeffs, int M, int N);

/// | l2(a) + l2(b) - prod(A_j^2+|B_j|^2) | / prod(A_j^2+|B_j|^2).
double energy_identity_residual(const TrigPolyPair& pair,
                                const CoefficientSequence& coeffs);

/// Relative residual of  l2(a - mean(a)) + l2(b)  against
/// prod(A_j^2+|B_j|^2) - prod A_j^2.
double centered_identity_residual(const TrigPolyPair& pair,
                                  const CoefficientSequence& coeffs);

struct GapCheck {
  std::optional<std::int64_t> gap_a;      // within support(a)
  std::optional<std::int64_t> gap_b;      // within support(b)
  std::optional<std::int64_t> gap_union;  // across both supports (data only)
  std::int64_t threshold = 0;             // m_{M+1}
  bool ok_a = true;
  bool ok_b = true;
  bool ok_union = true;
  bool ok() const { return ok_a && ok_b; }
};

/// Frequency-separation check: gaps within each polynomial must be at least
/// m_{M+1}. The union gap is reported as data alongside.
GapCheck min_gap_check(const TrigPolyPair& pair, const LacunarySequence& freqs,
                       int M);

/// Required quadrature resolution for the log|a| integral.
std::int64_t parseval_min_grid(const TrigPolyPair& pair);

/// | (1/P) sum_k log|a(t_k)| - sum_j log A_j |. The integrand is smooth since
/// |a(t)| >= 1 pointwise. Throws GridError when grid_points is below
/// 4 * maxfreq(a) + 4.
double nonlinear_parseval_residual(const TrigPolyPair& pair,
                                   const CoefficientSequence& coeffs,
                                   std::int64_t grid_points);

/// Serialization: {"M":, "N":, "a": {...}, "b": {...}}.
std::string pair_to_json(const TrigPolyPair& pair);
TrigPolyPair pair_from_json(const std::string& text);

}  // namespace lacsu11
