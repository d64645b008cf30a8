#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lacsu11/config.hpp"
#include "lacsu11/lacunary.hpp"
#include "lacsu11/metric.hpp"

namespace lacsu11 {

enum class CoefficientKind {
  Zero,
  Constant,
  GeometricDecay,
  PowerDecay,
  RandomPhaseL2,
  RandomPhaseDivergent,
};

CoefficientKind coefficient_kind_from_string(const std::string& s);
std::string to_string(CoefficientKind kind);

/// Deterministic description of a coefficient family. Magnitudes follow the
/// kind; phases are either zero or drawn uniformly from the seeded generator
/// (random-phase kinds). The square-summability of |B_j| is known
/// analytically for every kind.
struct CoefficientSpec {
  CoefficientKind kind = CoefficientKind::Zero;
  double magnitude = 0.75;  // scale c
  double ratio = 0.5;       // geometric-decay factor, in (0, 1)
  double exponent = 1.0;    // power-decay exponent beta: |B_j| = c j^-beta
  std::uint64_t seed = 0;
};

struct GeneratedCoefficients {
  CoefficientSequence coeffs;
  bool ell2 = true;
};

GeneratedCoefficients generate_coefficients(const CoefficientSpec& spec, int count);

/// Geometric-ceil lacunary frequencies: m_1 = 1, m_{j+1} = ceil(q m_j).
LacunarySequence generate_lacunary(double q, int count);
/// Custom list, validated against q.
LacunarySequence generate_lacunary(std::vector<std::int64_t> list, double q);

/// Trend thresholds used by the verdicts. The theorems speak about
/// N -> infinity; these separate the regimes at desk scale by several orders
/// of magnitude and are never claimed to certify a limit.
struct TrendThresholds {
  double decay = 1e-3;      // tail d_p below this => "cauchy-trend: yes"
  double floor_ = 1e-2;     // all ladder d_p above this => "cauchy-trend: no"
  double pointwise = 1e-6;  // tail increment below this => point converged
};

struct ExperimentConfig {
  std::string kind;  // theorem1 | theorem2 | theorem3
  CoefficientSpec spec;
  double q = 2.0;
  std::vector<std::int64_t> freq_list;  // empty: geometric-ceil from q
  int n_max = 20;
  std::vector<double> p_list{1.0};
  int t_samples = 256;
  int stride = 2;  // ladder step for M and for pointwise checkpoints
  int span = 8;    // window length (M, M+span]
  std::int64_t grid_cap = 0;  // 0: exact 4*maxfreq+4 policy; else hard cap
  bool allow_control = false;  // theorem3: permit an ell^2 control family
};

struct WindowRow {
  int M = 0, N = 0;
  double p = 1.0;
  double d_p = 0.0;
  double s_mn = 0.0;
  double expm1_s = 0.0;
  double bound_rhs = 0.0;  // (e^S - 1) C_p, p > 2 only
  bool bound_applicable = false;
  bool ok = true;
};

struct PointRow {
  double t = 0.0;
  int N = 0;
  double abs_a = 1.0;
  double abs_b = 0.0;
  double rho_prev = 0.0;  // rho(g_{N-stride}(t), g_N(t))
};

struct InequalityRow {
  int M = 0, N = 0;
  double measure = 0.0;        // |E| as a fraction of the torus
  double integral_term = 0.0;  // int_E |b_{M,N}|^2
  double tail_term = 0.0;      // e^{4 sum |B|^2} * sqrt(tail Parseval sum)
  double lhs = 0.0;            // |E| * sum |B_j|^2
  double rhs = 0.0;
  bool ok = true;
};

struct Verdict {
  double p = 0.0;
  std::string text;
};

struct ExperimentReport {
  ExperimentConfig config;
  bool ell2 = true;
  std::vector<std::int64_t> frequencies;
  std::vector<WindowRow> window_rows;
  std::vector<PointRow> point_rows;
  std::vector<InequalityRow> inequality_rows;
  int converged_points = 0;
  int total_points = 0;
  std::vector<Verdict> verdicts;
};

ExperimentReport theorem1_experiment(const ExperimentConfig& config,
                                     const Limits& limits = default_limits());
ExperimentReport theorem2_experiment(const ExperimentConfig& config,
                                     const Limits& limits = default_limits());
ExperimentReport theorem3_experiment(const ExperimentConfig& config,
                                     const Limits& limits = default_limits());
/// Dispatch on config.kind.
ExperimentReport run_experiment(const ExperimentConfig& config,
                                const Limits& limits = default_limits());

/// Key = value sections. Unknown sections or keys are rejected.
ExperimentConfig parse_experiment_config(const std::string& text);
ExperimentConfig load_experiment_config(const std::string& path);

std::string report_to_json(const ExperimentReport& report);  // schema "v1"
/// windows.csv, pointwise.csv, summary.csv (+ inequality.csv for theorem3),
/// each headed by a config-echo comment. Fixed column order.
void write_report_csv(const ExperimentReport& report, const std::string& dir);
void write_report_json(const ExperimentReport& report, const std::string& path);

/// 17-significant-digit formatting used for all numeric file output.
std::string fmt17(double x);

}  // namespace lacsu11
