#include "lacsu11/trig_poly.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

#include <json.hpp>

#include "json_io.hpp"
#include "lacsu11/errors.hpp"

namespace lacsu11 {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw std::overflow_error("trig_poly: frequency overflow");
  }
  return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) {
    throw std::overflow_error("trig_poly: frequency overflow");
  }
  return r;
}

std::int64_t checked_neg(std::int64_t a) { return checked_sub(0, a); }

TrigPoly collect(std::unordered_map<std::int64_t, Complex>&& acc) {
  std::vector<TrigPoly::Term> terms;
  terms.reserve(acc.size());
  for (const auto& [n, c] : acc) terms.push_back({n, c});
  return TrigPoly::from_terms(std::move(terms));
}

}  // namespace

TrigPoly TrigPoly::constant(Complex c) { return monomial(0, c); }

TrigPoly TrigPoly::monomial(std::int64_t freq, Complex coeff) {
  TrigPoly p;
  if (coeff != Complex{0.0, 0.0}) p.terms_.push_back({freq, coeff});
  return p;
}

TrigPoly TrigPoly::from_terms(std::vector<Term> terms, double prune) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& x, const Term& y) { return x.freq < y.freq; });
  TrigPoly p;
  p.terms_.reserve(terms.size());
  for (const Term& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().freq == t.freq) {
      p.terms_.back().coeff += t.coeff;
    } else {
      p.terms_.push_back(t);
    }
  }
  std::erase_if(p.terms_,
                [prune](const Term& t) { return std::abs(t.coeff) <= prune; });
  return p;
}

Complex TrigPoly::coeff(std::int64_t freq) const {
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), freq,
      [](const Term& t, std::int64_t f) { return t.freq < f; });
  if (it != terms_.end() && it->freq == freq) return it->coeff;
  return {0.0, 0.0};
}

std::int64_t TrigPoly::max_abs_freq() const {
  if (terms_.empty()) return 0;
  return std::max(std::abs(terms_.front().freq), std::abs(terms_.back().freq));
}

TrigPoly add(const TrigPoly& p, const TrigPoly& q) {
  // merge of two sorted term lists
  std::vector<TrigPoly::Term> out;
  out.reserve(p.size() + q.size());
  auto pi = p.terms().begin(), pe = p.terms().end();
  auto qi = q.terms().begin(), qe = q.terms().end();
  while (pi != pe && qi != qe) {
    if (pi->freq < qi->freq) {
      out.push_back(*pi++);
    } else if (qi->freq < pi->freq) {
      out.push_back(*qi++);
    } else {
      const Complex c = pi->coeff + qi->coeff;
      if (c != Complex{0.0, 0.0}) out.push_back({pi->freq, c});
      ++pi;
      ++qi;
    }
  }
  out.insert(out.end(), pi, pe);
  out.insert(out.end(), qi, qe);
  TrigPoly r;
  r = TrigPoly::from_terms(std::move(out));
  return r;
}

TrigPoly subtract(const TrigPoly& p, const TrigPoly& q) {
  return add(p, scale(q, {-1.0, 0.0}));
}

TrigPoly scale(const TrigPoly& p, Complex alpha) {
  if (alpha == Complex{0.0, 0.0}) return {};
  std::vector<TrigPoly::Term> out = p.terms();
  for (auto& t : out) t.coeff *= alpha;
  return TrigPoly::from_terms(std::move(out));
}

TrigPoly shift(const TrigPoly& p, std::int64_t s) {
  std::vector<TrigPoly::Term> out = p.terms();
  for (auto& t : out) t.freq = checked_add(t.freq, s);
  return TrigPoly::from_terms(std::move(out));
}

TrigPoly multiply(const TrigPoly& p, const TrigPoly& q) {
  if (p.is_zero() || q.is_zero()) return {};
  std::unordered_map<std::int64_t, Complex> acc;
  acc.reserve(p.size() * q.size());
  for (const auto& tp : p.terms()) {
    for (const auto& tq : q.terms()) {
      acc[checked_add(tp.freq, tq.freq)] += tp.coeff * tq.coeff;
    }
  }
  return collect(std::move(acc));
}

Complex evaluate(const TrigPoly& p, double t) {
  KahanSum re, im;
  for (const auto& term : p.terms()) {
    const Complex v = term.coeff * unit_phase(term.freq, t);
    re.add(v.real());
    im.add(v.imag());
  }
  return {re.value(), im.value()};
}

double l2_norm_sq(const TrigPoly& p) {
  KahanSum s;
  for (const auto& term : p.terms()) s.add(std::norm(term.coeff));
  return s.value();
}

Complex mean(const TrigPoly& p) { return p.coeff(0); }

std::optional<std::int64_t> min_gap(std::span<const std::int64_t> sorted_freqs) {
  if (sorted_freqs.size() < 2) return std::nullopt;
  std::int64_t gap = std::numeric_limits<std::int64_t>::max();
  for (std::size_t i = 1; i < sorted_freqs.size(); ++i) {
    gap = std::min(gap, sorted_freqs[i] - sorted_freqs[i - 1]);
  }
  return gap;
}

SupportInfo support(const TrigPoly& p) {
  SupportInfo info;
  info.freqs.reserve(p.size());
  for (const auto& term : p.terms()) info.freqs.push_back(term.freq);
  info.min_gap = min_gap(info.freqs);
  return info;
}

TrigPoly autocorrelation(const TrigPoly& p) {
  if (p.is_zero()) return {};
  std::unordered_map<std::int64_t, Complex> acc;
  acc.reserve(p.size() * p.size());
  for (const auto& t1 : p.terms()) {
    for (const auto& t2 : p.terms()) {
      acc[checked_sub(t2.freq, t1.freq)] += t1.coeff * std::conj(t2.coeff);
    }
  }
  return collect(std::move(acc));
}

TrigPoly conj_reflect(const TrigPoly& p) {
  std::vector<TrigPoly::Term> out;
  out.reserve(p.size());
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    out.push_back({checked_neg(it->freq), std::conj(it->coeff)});
  }
  return TrigPoly::from_terms(std::move(out));
}

namespace {

std::vector<Complex> grid_direct(const TrigPoly& p, std::int64_t size) {
  std::vector<Complex> out(static_cast<std::size_t>(size), Complex{0.0, 0.0});
  const double step = 1.0 / static_cast<double>(size);
  for (const auto& term : p.terms()) {
    const Complex omega = unit_phase(term.freq, step);
    Complex v = term.coeff;
    for (std::int64_t k = 0; k < size; ++k) {
      // re-anchor the phasor periodically to stop rounding drift
      if ((k & 1023) == 0) v = term.coeff * unit_phase(term.freq, step * static_cast<double>(k));
      out[static_cast<std::size_t>(k)] += v;
      v *= omega;
    }
  }
  return out;
}

std::mutex fftw_mutex;

std::vector<Complex> grid_fft(const TrigPoly& p, std::int64_t size) {
  std::vector<Complex> buf(static_cast<std::size_t>(size), Complex{0.0, 0.0});
  for (const auto& term : p.terms()) {
    std::int64_t idx = term.freq % size;
    if (idx < 0) idx += size;
    buf[static_cast<std::size_t>(idx)] += term.coeff;
  }
  fftw_plan plan;
  {
    std::lock_guard<std::mutex> lock(fftw_mutex);
    plan = fftw_plan_dft_1d(static_cast<int>(size),
                            reinterpret_cast<fftw_complex*>(buf.data()),
                            reinterpret_cast<fftw_complex*>(buf.data()),
                            FFTW_BACKWARD, FFTW_ESTIMATE);
  }
  fftw_execute(plan);
  {
    std::lock_guard<std::mutex> lock(fftw_mutex);
    fftw_destroy_plan(plan);
  }
  return buf;
}

}  // namespace

std::vector<Complex> dft_forward(std::vector<Complex> data) {
  if (data.empty()) return data;
  if (data.size() > (std::size_t{1} << 30)) {
    throw BudgetError("dft_forward: size exceeds 2^30");
  }
  fftw_plan plan;
  {
    std::lock_guard<std::mutex> lock(fftw_mutex);
    plan = fftw_plan_dft_1d(static_cast<int>(data.size()),
                            reinterpret_cast<fftw_complex*>(data.data()),
                            reinterpret_cast<fftw_complex*>(data.data()),
                            FFTW_FORWARD, FFTW_ESTIMATE);
  }
  fftw_execute(plan);
  {
    std::lock_guard<std::mutex> lock(fftw_mutex);
    fftw_destroy_plan(plan);
  }
  return data;
}

std::vector<Complex> evaluate_on_grid(const TrigPoly& p, std::int64_t size) {
  if (size < 1) throw ValidationError("evaluate_on_grid: size must be >= 1");
  if (size > (std::int64_t{1} << 30)) {
    throw BudgetError("evaluate_on_grid: grid size exceeds 2^30");
  }
  const std::int64_t work = size * static_cast<std::int64_t>(std::max<std::size_t>(p.size(), 1));
  if (work <= (std::int64_t{1} << 22) || size < 64) {
    return grid_direct(p, size);
  }
  return grid_fft(p, size);
}

std::string trig_poly_to_json(const TrigPoly& p) {
  return detail::poly_to_json_obj(p).dump();
}

TrigPoly trig_poly_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("trig_poly_from_json: ") + e.what());
  }
  return detail::poly_from_json_obj(j);
}

}  // namespace lacsu11
