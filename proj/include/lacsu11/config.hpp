#pragma once

namespace lacsu11 {

/// Central tolerance constants. All identity checks in the library compare
/// against these defaults unless a caller overrides them.
struct Tolerances {
  double coefficient_invariant = 1e-12;  // |A^2 - |B|^2 - 1| <= tol * A^2
  double matrix_invariant = 1e-12;       // ||a|^2 - |b|^2 - 1| <= tol * |a|^2
  double identity_residual = 1e-12;      // Parseval-type coefficient identities
  double metric_deviation = 1e-10;       // metric-form equivalence, invariance
  double parseval_quadrature = 1e-8;     // nonlinear Parseval at default grid
  double bound_slack = 1e-6;             // relative slack on inequality checks
  double autocorr_slack = 1e-9;          // relative slack on the fourth-moment bound
};

/// Hard budgets. Exceeding one raises BudgetError (CLI exit code 3).
struct Limits {
  int max_window = 24;        // partial products: at most 2^24 support terms
  int max_enum_window = 22;   // signed-subset enumeration budget
  int max_pair_window = 12;   // block-pair scans (4^{W-1} pairs)
  long long max_autocorr_pairs = 1LL << 23;  // coefficient-level autocorrelation
  double prune_threshold = 0.0;  // coefficients with |c| <= threshold are dropped
};

inline const Tolerances& default_tolerances() {
  static const Tolerances t{};
  return t;
}

inline const Limits& default_limits() {
  static const Limits l{};
  return l;
}

}  // namespace lacsu11
