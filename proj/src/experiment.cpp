#include "lacsu11/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "lacsu11/errors.hpp"
#include "lacsu11/su11.hpp"

namespace lacsu11 {

namespace {

constexpr std::uint64_t kSampleSeedSalt = 0x9e3779b97f4a7c15ULL;

double u01(std::mt19937_64& eng) {
  return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

const TrendThresholds kThresholds{};

std::vector<std::pair<int, int>> ladder(int n_max, int stride, int span) {
  std::vector<std::pair<int, int>> windows;
  for (int M = 0; M < n_max; M += stride) {
    windows.emplace_back(M, std::min(M + span, n_max));
  }
  return windows;
}

std::vector<int> checkpoints(int n_max, int stride) {
  std::vector<int> out;
  for (int N = stride; N <= n_max; N += stride) out.push_back(N);
  if (out.empty() || out.back() != n_max) out.push_back(n_max);
  return out;
}

LacunarySequence frequencies_for(const ExperimentConfig& config) {
  if (!config.freq_list.empty()) {
    return generate_lacunary(config.freq_list, config.q);
  }
  return generate_lacunary(config.q, config.n_max);
}

void validate_common(const ExperimentConfig& config) {
  if (config.n_max < 1) throw ValidationError("experiment: n_max must be >= 1");
  if (config.stride < 1) throw ValidationError("experiment: stride must be >= 1");
  if (config.span < 1) throw ValidationError("experiment: span must be >= 1");
  if (config.t_samples < 1) throw ValidationError("experiment: t_samples must be >= 1");
  for (double p : config.p_list) {
    if (!(p > 0.0)) throw ValidationError("experiment: p values must be positive");
  }
  if (config.p_list.empty()) throw ValidationError("experiment: p_list must not be empty");
}

std::int64_t pick_grid(const TrigPolyPair& pair, std::int64_t cap) {
  const std::int64_t need = required_grid(pair);
  if (cap > 0 && need > cap) {
    throw BudgetError("experiment: window (" + std::to_string(pair.M) + ", " +
                      std::to_string(pair.N) + "] needs a grid of " +
                      std::to_string(need) + " > grid_cap");
  }
  return need;
}

std::vector<double> rho_values(const TrigPolyPair& pair, std::int64_t grid) {
  const auto a = evaluate_on_grid(pair.a, grid);
  const auto b = evaluate_on_grid(pair.b, grid);
  std::vector<double> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    out[i] = std::log1p(std::abs(a[i] - 1.0) + std::abs(b[i]));
  }
  return out;
}

/// Pointwise ladder shared by theorem2/theorem3: rows, converged count.
void pointwise_ladder(const ExperimentConfig& config,
                      const CoefficientSequence& coeffs,
                      const LacunarySequence& freqs, ExperimentReport& report) {
  std::mt19937_64 eng(config.spec.seed ^ kSampleSeedSalt);
  const std::vector<int> checks = checkpoints(config.n_max, config.stride);
  report.total_points = config.t_samples;
  for (int i = 0; i < config.t_samples; ++i) {
    const double t = u01(eng);
    SU11Matrix total{};  // identity
    int prev = 0;
    double last_inc = 0.0;
    for (int N : checks) {
      SU11Matrix quotient{};
      for (int j = prev + 1; j <= N; ++j) {
        quotient = mul(quotient, factor_at(coeffs[static_cast<std::size_t>(j - 1)],
                                           freqs.at(j), t));
      }
      total = mul(total, quotient);
      last_inc = rho_explicit(quotient);
      report.point_rows.push_back(
          {t, N, std::abs(total.a), std::abs(total.b), last_inc});
      prev = N;
    }
    if (last_inc < kThresholds.pointwise) ++report.converged_points;
  }
}

}  // namespace

CoefficientKind coefficient_kind_from_string(const std::string& s) {
  if (s == "zero") return CoefficientKind::Zero;
  if (s == "constant") return CoefficientKind::Constant;
  if (s == "geometric-decay") return CoefficientKind::GeometricDecay;
  if (s == "power-decay") return CoefficientKind::PowerDecay;
  if (s == "random-phase-l2") return CoefficientKind::RandomPhaseL2;
  if (s == "random-phase-divergent") return CoefficientKind::RandomPhaseDivergent;
  throw ValidationError("unknown coefficient kind: " + s);
}

std::string to_string(CoefficientKind kind) {
  switch (kind) {
    case CoefficientKind::Zero: return "zero";
    case CoefficientKind::Constant: return "constant";
    case CoefficientKind::GeometricDecay: return "geometric-decay";
    case CoefficientKind::PowerDecay: return "power-decay";
    case CoefficientKind::RandomPhaseL2: return "random-phase-l2";
    case CoefficientKind::RandomPhaseDivergent: return "random-phase-divergent";
  }
  throw ValidationError("unknown coefficient kind");
}

GeneratedCoefficients generate_coefficients(const CoefficientSpec& spec, int count) {
  if (count < 0) throw ValidationError("generate_coefficients: count must be >= 0");
  if (!(spec.magnitude >= 0.0) || !std::isfinite(spec.magnitude)) {
    throw ValidationError("generate_coefficients: magnitude must be finite and >= 0");
  }
  if (spec.kind == CoefficientKind::GeometricDecay &&
      !(spec.ratio > 0.0 && spec.ratio < 1.0)) {
    throw ValidationError("generate_coefficients: geometric-decay needs ratio in (0, 1)");
  }
  if (spec.kind == CoefficientKind::PowerDecay && !(spec.exponent > 0.0)) {
    throw ValidationError("generate_coefficients: power-decay needs exponent > 0");
  }
  std::mt19937_64 eng(spec.seed);
  GeneratedCoefficients out;
  out.coeffs.reserve(static_cast<std::size_t>(count));
  const double c = spec.magnitude;
  for (int j = 1; j <= count; ++j) {
    double mag = 0.0;
    Complex phase{1.0, 0.0};
    switch (spec.kind) {
      case CoefficientKind::Zero:
        break;
      case CoefficientKind::Constant:
        mag = c;
        break;
      case CoefficientKind::GeometricDecay:
        mag = c * std::pow(spec.ratio, j - 1);
        break;
      case CoefficientKind::PowerDecay:
        mag = c * std::pow(static_cast<double>(j), -spec.exponent);
        break;
      case CoefficientKind::RandomPhaseL2:
        mag = c / static_cast<double>(j);
        phase = std::polar(1.0, 2.0 * M_PI * u01(eng));
        break;
      case CoefficientKind::RandomPhaseDivergent:
        mag = c / std::sqrt(static_cast<double>(j));
        phase = std::polar(1.0, 2.0 * M_PI * u01(eng));
        break;
    }
    out.coeffs.push_back(make_coefficient(mag * phase));
  }
  switch (spec.kind) {
    case CoefficientKind::Zero:
      out.ell2 = true;
      break;
    case CoefficientKind::Constant:
      out.ell2 = (c == 0.0);
      break;
    case CoefficientKind::GeometricDecay:
      out.ell2 = true;
      break;
    case CoefficientKind::PowerDecay:
      out.ell2 = (c == 0.0) || spec.exponent > 0.5;
      break;
    case CoefficientKind::RandomPhaseL2:
      out.ell2 = true;
      break;
    case CoefficientKind::RandomPhaseDivergent:
      out.ell2 = (c == 0.0);
      break;
  }
  return out;
}

LacunarySequence generate_lacunary(double q, int count) {
  return LacunarySequence::geometric(q, count);
}

LacunarySequence generate_lacunary(std::vector<std::int64_t> list, double q) {
  return LacunarySequence::validated(std::move(list), q);
}

ExperimentReport theorem1_experiment(const ExperimentConfig& config,
                                     const Limits& limits) {
  validate_common(config);
  if (config.q < 2.0) throw ValidationError("theorem1_experiment: requires q >= 2");
  const LacunarySequence freqs = frequencies_for(config);
  const GeneratedCoefficients gen = generate_coefficients(config.spec, config.n_max);

  ExperimentReport report;
  report.config = config;
  report.ell2 = gen.ell2;
  report.frequencies = freqs.frequencies();

  const auto windows = ladder(config.n_max, config.stride, config.span);
  for (const auto& [M, N] : windows) {
    const TrigPolyPair pair = partial_product(gen.coeffs, freqs, M, N, limits);
    const std::int64_t grid = pick_grid(pair, config.grid_cap);
    const std::vector<double> rho = rho_values(pair, grid);
    const double s = s_mn(gen.coeffs, M, N);
    for (double p : config.p_list) {
      KahanSum acc;
      for (double r : rho) acc.add(std::pow(r, p));
      const double mean_pow = acc.value() / static_cast<double>(grid);
      WindowRow row;
      row.M = M;
      row.N = N;
      row.p = p;
      row.d_p = p >= 1.0 ? std::pow(mean_pow, 1.0 / p) : mean_pow;
      row.s_mn = s;
      row.expm1_s = std::expm1(s);
      if (p > 2.0) {
        row.bound_applicable = true;
        row.bound_rhs = row.expm1_s * c_p(p);
        row.ok = mean_pow <= row.bound_rhs * (1.0 + default_tolerances().bound_slack);
      }
      report.window_rows.push_back(row);
    }
  }

  for (double p : config.p_list) {
    double tail = 0.0, low = std::numeric_limits<double>::infinity();
    for (const auto& row : report.window_rows) {
      if (row.p != p) continue;
      tail = row.d_p;
      low = std::min(low, row.d_p);
    }
    Verdict v;
    v.p = p;
    if (tail < kThresholds.decay) {
      v.text = "cauchy-trend: yes";
    } else if (low > kThresholds.floor_) {
      v.text = "cauchy-trend: no";
    } else {
      v.text = "cauchy-trend: inconclusive";
    }
    report.verdicts.push_back(v);
  }
  return report;
}

ExperimentReport theorem2_experiment(const ExperimentConfig& config,
                                     const Limits& limits) {
  (void)limits;
  validate_common(config);
  if (config.q < 2.0) throw ValidationError("theorem2_experiment: requires q >= 2");
  const LacunarySequence freqs = frequencies_for(config);
  const GeneratedCoefficients gen = generate_coefficients(config.spec, config.n_max);
  if (!gen.ell2) {
    throw ValidationError("theorem2_experiment: requires an ell^2 coefficient spec");
  }
  ExperimentReport report;
  report.config = config;
  report.ell2 = gen.ell2;
  report.frequencies = freqs.frequencies();
  pointwise_ladder(config, gen.coeffs, freqs, report);
  Verdict v;
  v.text = "converged-fraction: " +
           std::to_string(report.converged_points) + "/" +
           std::to_string(report.total_points);
  report.verdicts.push_back(v);
  return report;
}

ExperimentReport theorem3_experiment(const ExperimentConfig& config,
                                     const Limits& limits) {
  validate_common(config);
  if (config.q < 3.0) throw ValidationError("theorem3_experiment: requires q >= 3");
  if (config.spec.kind == CoefficientKind::Zero) {
    throw ValidationError("theorem3_experiment: zero coefficients are degenerate here");
  }
  const LacunarySequence freqs = frequencies_for(config);
  const GeneratedCoefficients gen = generate_coefficients(config.spec, config.n_max);
  if (gen.ell2 && !config.allow_control) {
    throw ValidationError(
        "theorem3_experiment: spec has ell^2 coefficients; pass allow_control "
        "to run it as a control");
  }

  ExperimentReport report;
  report.config = config;
  report.ell2 = gen.ell2;
  report.frequencies = freqs.frequencies();
  pointwise_ladder(config, gen.coeffs, freqs, report);

  // Grid-approximated set E: points whose tail window increment is below the
  // pointwise threshold. All windows are evaluated on one shared grid.
  const auto windows = ladder(config.n_max, config.stride, config.span);
  std::vector<TrigPolyPair> pairs;
  pairs.reserve(windows.size());
  std::int64_t grid = 0;
  for (const auto& [M, N] : windows) {
    pairs.push_back(partial_product(gen.coeffs, freqs, M, N, limits));
    grid = std::max(grid, required_grid(pairs.back()));
  }
  if (config.grid_cap > 0 && grid > config.grid_cap) {
    throw BudgetError("theorem3_experiment: shared grid of " +
                      std::to_string(grid) + " points exceeds grid_cap");
  }

  const std::vector<double> tail_rho = rho_values(pairs.back(), grid);
  std::vector<char> in_e(tail_rho.size());
  std::int64_t e_count = 0;
  for (std::size_t i = 0; i < tail_rho.size(); ++i) {
    in_e[i] = tail_rho[i] < kThresholds.pointwise;
    e_count += in_e[i];
  }
  const double measure = static_cast<double>(e_count) / static_cast<double>(grid);

  // Fourier tail of the indicator, exact on the discrete grid.
  std::vector<Complex> indicator(in_e.size());
  for (std::size_t i = 0; i < in_e.size(); ++i) {
    indicator[i] = in_e[i] ? Complex{1.0, 0.0} : Complex{0.0, 0.0};
  }
  const std::vector<Complex> chi = dft_forward(indicator);
  const double scale = 1.0 / static_cast<double>(grid);

  for (const auto& pair : pairs) {
    InequalityRow row;
    row.M = pair.M;
    row.N = pair.N;
    row.measure = measure;
    const double sum_b = b_sq_sum(gen.coeffs, pair.M, pair.N);
    row.lhs = measure * sum_b;

    const auto b_vals = evaluate_on_grid(pair.b, grid);
    KahanSum integral;
    for (std::size_t i = 0; i < b_vals.size(); ++i) {
      if (in_e[i]) integral.add(std::norm(b_vals[i]));
    }
    row.integral_term = integral.value() * scale;

    // frequencies of b are separated from each other by at least m_{M+1},
    // so coefficient differences live in m_{M+1} <= |d| <= spread(b) < grid
    std::int64_t spread = 0;
    if (pair.b.size() >= 2) {
      spread = pair.b.terms().back().freq - pair.b.terms().front().freq;
    }
    const std::int64_t d_min = pair.M < freqs.size() ? freqs.at(pair.M + 1) : 1;
    KahanSum tail;
    for (std::int64_t d = d_min; d <= spread; ++d) {
      tail.add(std::norm(chi[static_cast<std::size_t>(d)] * scale));
      tail.add(std::norm(chi[static_cast<std::size_t>(grid - d)] * scale));
    }
    row.tail_term = std::exp(4.0 * sum_b) * std::sqrt(std::max(tail.value(), 0.0));
    row.rhs = row.integral_term + row.tail_term;
    row.ok = row.lhs <= row.rhs * (1.0 + default_tolerances().autocorr_slack) + 1e-300;
    report.inequality_rows.push_back(row);
  }

  Verdict v;
  v.text = "converged-fraction: " + std::to_string(report.converged_points) +
           "/" + std::to_string(report.total_points);
  report.verdicts.push_back(v);
  return report;
}

ExperimentReport run_experiment(const ExperimentConfig& config,
                                const Limits& limits) {
  if (config.kind == "theorem1") return theorem1_experiment(config, limits);
  if (config.kind == "theorem2") return theorem2_experiment(config, limits);
  if (config.kind == "theorem3") return theorem3_experiment(config, limits);
  throw ValidationError("unknown experiment kind: " + config.kind);
}

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

bool parse_bool(const std::string& v, const std::string& key) {
  if (v == "true" || v == "yes" || v == "1") return true;
  if (v == "false" || v == "no" || v == "0") return false;
  throw ValidationError("config: bad boolean for " + key + ": " + v);
}

template <typename T>
T parse_num(const std::string& v, const std::string& key) {
  std::istringstream in(v);
  T out;
  in >> out;
  if (in.fail() || !in.eof()) {
    throw ValidationError("config: bad numeric value for " + key + ": " + v);
  }
  return out;
}

template <typename T>
std::vector<T> parse_list(const std::string& v, const std::string& key) {
  std::vector<T> out;
  std::stringstream in(v);
  std::string item;
  while (std::getline(in, item, ',')) {
    out.push_back(parse_num<T>(trim(item), key));
  }
  if (out.empty()) throw ValidationError("config: empty list for " + key);
  return out;
}

}  // namespace

ExperimentConfig parse_experiment_config(const std::string& text) {
  ExperimentConfig config;
  std::string section;
  std::string freq_mode = "geometric-ceil";
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    line = trim(line);
    if (line.empty() || line[0] == '#' || line[0] == ';') continue;
    if (line.front() == '[' && line.back() == ']') {
      section = trim(line.substr(1, line.size() - 2));
      if (section != "experiment" && section != "coefficients" &&
          section != "frequencies") {
        throw ValidationError("config: unknown section [" + section + "]");
      }
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ValidationError("config: expected key = value, got: " + line);
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (section == "experiment") {
      if (key == "kind") config.kind = value;
      else if (key == "q") config.q = parse_num<double>(value, key);
      else if (key == "n_max") config.n_max = parse_num<int>(value, key);
      else if (key == "p_list") config.p_list = parse_list<double>(value, key);
      else if (key == "t_samples") config.t_samples = parse_num<int>(value, key);
      else if (key == "stride") config.stride = parse_num<int>(value, key);
      else if (key == "span") config.span = parse_num<int>(value, key);
      else if (key == "grid_cap") config.grid_cap = parse_num<std::int64_t>(value, key);
      else if (key == "allow_control") config.allow_control = parse_bool(value, key);
      else throw ValidationError("config: unknown key in [experiment]: " + key);
    } else if (section == "coefficients") {
      if (key == "kind") config.spec.kind = coefficient_kind_from_string(value);
      else if (key == "magnitude") config.spec.magnitude = parse_num<double>(value, key);
      else if (key == "ratio") config.spec.ratio = parse_num<double>(value, key);
      else if (key == "exponent") config.spec.exponent = parse_num<double>(value, key);
      else if (key == "seed") config.spec.seed = parse_num<std::uint64_t>(value, key);
      else throw ValidationError("config: unknown key in [coefficients]: " + key);
    } else if (section == "frequencies") {
      if (key == "mode") freq_mode = value;
      else if (key == "list") config.freq_list = parse_list<std::int64_t>(value, key);
      else throw ValidationError("config: unknown key in [frequencies]: " + key);
    } else {
      throw ValidationError("config: key outside of any section: " + key);
    }
  }
  if (freq_mode == "geometric-ceil") {
    if (!config.freq_list.empty()) {
      throw ValidationError("config: frequency list given but mode is geometric-ceil");
    }
  } else if (freq_mode == "custom-list") {
    if (config.freq_list.empty()) {
      throw ValidationError("config: mode custom-list requires a list");
    }
  } else {
    throw ValidationError("config: unknown frequency mode: " + freq_mode);
  }
  if (config.kind.empty()) throw ValidationError("config: missing experiment kind");
  return config;
}

ExperimentConfig load_experiment_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open config file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_experiment_config(buf.str());
}

std::string fmt17(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

namespace {

nlohmann::json config_to_json(const ExperimentConfig& config) {
  return nlohmann::json{
      {"kind", config.kind},
      {"coefficients",
       {{"kind", to_string(config.spec.kind)},
        {"magnitude", config.spec.magnitude},
        {"ratio", config.spec.ratio},
        {"exponent", config.spec.exponent},
        {"seed", config.spec.seed}}},
      {"q", config.q},
      {"freq_list", config.freq_list},
      {"n_max", config.n_max},
      {"p_list", config.p_list},
      {"t_samples", config.t_samples},
      {"stride", config.stride},
      {"span", config.span},
      {"grid_cap", config.grid_cap},
      {"allow_control", config.allow_control}};
}

const char* yn(bool b) { return b ? "yes" : "no"; }

}  // namespace

std::string report_to_json(const ExperimentReport& report) {
  nlohmann::json j;
  j["schema"] = "v1";
  j["config"] = config_to_json(report.config);
  j["ell2"] = report.ell2;
  j["frequencies"] = report.frequencies;
  j["window_rows"] = nlohmann::json::array();
  for (const auto& r : report.window_rows) {
    nlohmann::json row{{"M", r.M},     {"N", r.N},
                       {"p", r.p},     {"d_p", r.d_p},
                       {"S_MN", r.s_mn}, {"expm1_S", r.expm1_s}};
    if (r.bound_applicable) {
      row["bound_rhs"] = r.bound_rhs;
      row["ok"] = r.ok;
    } else {
      row["bound_rhs"] = nullptr;
      row["ok"] = nullptr;
    }
    j["window_rows"].push_back(std::move(row));
  }
  j["point_rows"] = nlohmann::json::array();
  for (const auto& r : report.point_rows) {
    j["point_rows"].push_back({{"t", r.t},
                               {"N", r.N},
                               {"abs_a", r.abs_a},
                               {"abs_b", r.abs_b},
                               {"rho_prev", r.rho_prev}});
  }
  j["inequality_rows"] = nlohmann::json::array();
  for (const auto& r : report.inequality_rows) {
    j["inequality_rows"].push_back({{"M", r.M},
                                    {"N", r.N},
                                    {"measure", r.measure},
                                    {"integral_term", r.integral_term},
                                    {"tail_term", r.tail_term},
                                    {"lhs", r.lhs},
                                    {"rhs", r.rhs},
                                    {"ok", r.ok}});
  }
  j["converged_points"] = report.converged_points;
  j["total_points"] = report.total_points;
  j["verdicts"] = nlohmann::json::array();
  for (const auto& v : report.verdicts) {
    j["verdicts"].push_back({{"p", v.p}, {"text", v.text}});
  }
  return j.dump(2);
}

void write_report_json(const ExperimentReport& report, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot write " + path);
  out << report_to_json(report) << "\n";
}

void write_report_csv(const ExperimentReport& report, const std::string& dir) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);
  const std::string echo = "# config: " + config_to_json(report.config).dump();

  {
    std::ofstream out(fs::path(dir) / "windows.csv");
    out << echo << "\n";
    out << "M,N,p,d_p,S_MN,expm1_S,bound_rhs,ok\n";
    for (const auto& r : report.window_rows) {
      out << r.M << ',' << r.N << ',' << fmt17(r.p) << ',' << fmt17(r.d_p) << ','
          << fmt17(r.s_mn) << ',' << fmt17(r.expm1_s) << ',';
      if (r.bound_applicable) {
        out << fmt17(r.bound_rhs) << ',' << yn(r.ok);
      } else {
        out << ',';
      }
      out << '\n';
    }
  }
  {
    std::ofstream out(fs::path(dir) / "pointwise.csv");
    out << echo << "\n";
    out << "t,N,abs_a,abs_b,rho_prev\n";
    for (const auto& r : report.point_rows) {
      out << fmt17(r.t) << ',' << r.N << ',' << fmt17(r.abs_a) << ','
          << fmt17(r.abs_b) << ',' << fmt17(r.rho_prev) << '\n';
    }
  }
  if (!report.inequality_rows.empty()) {
    std::ofstream out(fs::path(dir) / "inequality.csv");
    out << echo << "\n";
    out << "M,N,measure,integral_term,tail_term,lhs,rhs,ok\n";
    for (const auto& r : report.inequality_rows) {
      out << r.M << ',' << r.N << ',' << fmt17(r.measure) << ','
          << fmt17(r.integral_term) << ',' << fmt17(r.tail_term) << ','
          << fmt17(r.lhs) << ',' << fmt17(r.rhs) << ',' << yn(r.ok) << '\n';
    }
  }
  {
    std::ofstream out(fs::path(dir) / "summary.csv");
    out << echo << "\n";
    out << "key,value\n";
    out << "ell2," << yn(report.ell2) << '\n';
    if (report.total_points > 0) {
      out << "converged_points," << report.converged_points << '\n';
      out << "total_points," << report.total_points << '\n';
    }
    for (const auto& v : report.verdicts) {
      if (v.p > 0.0) {
        out << "verdict_p_" << fmt17(v.p) << "," << v.text << '\n';
      } else {
        out << "verdict," << v.text << '\n';
      }
    }
  }
}

}  // namespace lacsu11
