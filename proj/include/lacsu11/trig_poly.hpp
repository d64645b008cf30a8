#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lacsu11/config.hpp"
#include "lacsu11/su11.hpp"

namespace lacsu11 {

/// Finite trigonometric polynomial sum_n c_n e^{2 pi i n t}, stored as a
/// frequency-sorted vector of nonzero terms. Frequencies are exact 64-bit
/// integers; coefficients are complex doubles. Immutable after construction.
class TrigPoly {
 public:
  struct Term {
    std::int64_t freq;
    Complex coeff;

    friend bool operator==(const Term&, const Term&) = default;
  };

  TrigPoly() = default;  // zero polynomial

  static TrigPoly constant(Complex c);
  static TrigPoly monomial(std::int64_t freq, Complex coeff);
  /// Sorts, merges duplicate frequencies, drops coefficients with
  /// |c| <= prune (default: exact zeros only).
  static TrigPoly from_terms(std::vector<Term> terms, double prune = 0.0);

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  Complex coeff(std::int64_t freq) const;

  /// Largest |frequency| in the support; 0 for the zero polynomial.
  std::int64_t max_abs_freq() const;

  friend bool operator==(const TrigPoly&, const TrigPoly&) = default;

 private:
  std::vector<Term> terms_;
};

TrigPoly add(const TrigPoly& p, const TrigPoly& q);
TrigPoly subtract(const TrigPoly& p, const TrigPoly& q);
TrigPoly scale(const TrigPoly& p, Complex alpha);
/// Coefficients of p translated: result(n + shift) = p(n). Overflow-checked.
TrigPoly shift(const TrigPoly& p, std::int64_t shift);

/// Exact convolution: result(n) = sum_{n1+n2=n} p(n1) q(n2).
TrigPoly multiply(const TrigPoly& p, const TrigPoly& q);

Complex evaluate(const TrigPoly& p, double t);

/// sum_n |c_n|^2, compensated summation over ascending frequencies.
double l2_norm_sq(const TrigPoly& p);

/// Coefficient at frequency 0 (the mean over the torus).
Complex mean(const TrigPoly& p);

struct SupportInfo {
  std::vector<std::int64_t> freqs;          // sorted
  std::optional<std::int64_t> min_gap;      // nullopt when <= 1 frequency
};
SupportInfo support(const TrigPoly& p);

/// Minimum pairwise gap of a sorted frequency list; nullopt if <= 1 entry.
std::optional<std::int64_t> min_gap(std::span<const std::int64_t> sorted_freqs);

/// result(n) = sum_{n2-n1=n} p(n1) conj(p(n2)). The coefficient at 0 equals
/// l2_norm_sq(p) and evaluate(result, -t) = |evaluate(p, t)|^2.
TrigPoly autocorrelation(const TrigPoly& p);

/// result(n) = conj(p(-n)); as a function this is conj(p(t)).
TrigPoly conj_reflect(const TrigPoly& p);

/// Values of p at the uniform grid t_k = k/size, k = 0..size-1. Uses a dense
/// FFT when the direct per-term sweep would be slower; the two paths agree to
/// rounding because e^{2 pi i n k / size} only depends on n mod size.
std::vector<Complex> evaluate_on_grid(const TrigPoly& p, std::int64_t size);

/// Forward DFT: X_d = sum_k x_k e^{-2 pi i d k / n}. Used for indicator
/// spectra in the experiment module.
std::vector<Complex> dft_forward(std::vector<Complex> data);

/// Serialization: {"terms": [[n, re, im], ...]} sorted by n.
std::string trig_poly_to_json(const TrigPoly& p);
TrigPoly trig_poly_from_json(const std::string& text);

/// Compensated (Neumaier) accumulator for long reductions.
class KahanSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

}  // namespace lacsu11
