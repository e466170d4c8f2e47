#include "alphakit/boundary.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "alphakit/random.hpp"

namespace alphakit {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap_angle(double phi) {
  double r = std::fmod(phi, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r = 0.0;
  return r;
}

// Increment of an unwrapped nondecreasing phase between two values given
// modulo 2 pi; always in [0, 2 pi). Rounding-level decreases count as 0.
double forward_increment(double from, double to) {
  const double r = wrap_angle(to - from);
  return r > kTwoPi - 1e-9 ? 0.0 : r;
}

bool unit_rise_of(const std::vector<Complex>& samples) {
  if (samples.size() < 2) return false;
  double rise = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const Complex next = samples[(i + 1) % samples.size()];
    rise += forward_increment(std::arg(samples[i]), std::arg(next));
  }
  return std::abs(rise - kTwoPi) < 1e-9;
}

std::vector<Complex> sample_values(const BoundaryFunction& b, int n) {
  std::vector<Complex> out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = b.value(kTwoPi * i / n);
  return out;
}

}  // namespace

CoefficientSpectrum::CoefficientSpectrum(AlphaParameter alpha, int truncation)
    : alpha_(alpha), truncation_(truncation) {
  if (truncation < 0) throw std::invalid_argument("spectrum truncation must be >= 0");
  coeffs_.assign(static_cast<std::size_t>(2 * truncation + 1), Complex{});
}

CoefficientSpectrum::CoefficientSpectrum(
    AlphaParameter alpha, std::initializer_list<std::pair<int, std::complex<double>>> coeffs)
    : alpha_(alpha), truncation_(0) {
  for (const auto& [k, c] : coeffs) truncation_ = std::max(truncation_, std::abs(k));
  coeffs_.assign(static_cast<std::size_t>(2 * truncation_ + 1), Complex{});
  for (const auto& [k, c] : coeffs) set(k, c);
}

void CoefficientSpectrum::set(int k, std::complex<double> value) {
  if (k < -truncation_ || k > truncation_) throw std::out_of_range("coefficient index outside truncation");
  if (!std::isfinite(value.real()) || !std::isfinite(value.imag())) {
    throw std::invalid_argument("coefficients must be finite");
  }
  coeffs_[static_cast<std::size_t>(k + truncation_)] = value;
}

bool CoefficientSpectrum::all_real(double tol) const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [tol](const Complex& c) { return std::abs(c.imag()) <= tol; });
}

BoundaryFunction BoundaryFunction::step(std::vector<StepArc> arcs) {
  if (arcs.empty()) throw std::invalid_argument("step boundary needs at least one arc");
  if (arcs.front().phi_start != 0.0) throw std::invalid_argument("first arc must start at 0");
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    if (!std::isfinite(arcs[i].theta)) throw std::invalid_argument("arc theta must be finite");
    if (!(arcs[i].phi_start < kTwoPi)) throw std::invalid_argument("arc starts must be < 2 pi");
    if (i > 0 && !(arcs[i].phi_start > arcs[i - 1].phi_start)) {
      throw std::invalid_argument("arc starts must be strictly increasing");
    }
  }
  return BoundaryFunction(StepPhase{std::move(arcs)});
}

BoundaryFunction BoundaryFunction::trig_poly(std::map<int, Complex> coeffs) {
  for (const auto& [m, c] : coeffs) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
      throw std::invalid_argument("trig polynomial coefficients must be finite");
    }
  }
  return BoundaryFunction(TrigPoly{std::move(coeffs)});
}

BoundaryFunction BoundaryFunction::sampled(std::vector<Complex> values) {
  if (values.size() < 2) throw std::invalid_argument("sampled boundary needs at least 2 values");
  for (const auto& v : values) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw std::invalid_argument("sampled values must be finite");
    }
  }
  return BoundaryFunction(Sampled{std::move(values)});
}

Complex BoundaryFunction::value(double phi) const {
  const double t = wrap_angle(phi);
  if (const auto* s = as_step()) {
    auto it = std::upper_bound(s->arcs.begin(), s->arcs.end(), t,
                               [](double v, const StepArc& a) { return v < a.phi_start; });
    return std::polar(1.0, std::prev(it)->theta);
  }
  if (const auto* p = as_trig_poly()) {
    Complex sum{};
    for (const auto& [m, c] : p->coeffs) sum += c * std::polar(1.0, m * t);
    return sum;
  }
  const auto& v = as_sampled()->values;
  const double n = static_cast<double>(v.size());
  const double pos = t / kTwoPi * n;
  auto i0 = static_cast<std::size_t>(std::floor(pos));
  if (i0 >= v.size()) i0 = v.size() - 1;
  const double frac = pos - static_cast<double>(i0);
  return (1.0 - frac) * v[i0] + frac * v[(i0 + 1) % v.size()];
}

std::vector<double> BoundaryFunction::breakpoints() const {
  std::vector<double> out;
  if (const auto* s = as_step()) {
    for (const auto& a : s->arcs) out.push_back(a.phi_start);
  } else if (const auto* smp = as_sampled()) {
    const auto n = smp->values.size();
    for (std::size_t i = 0; i < n; ++i) out.push_back(kTwoPi * static_cast<double>(i) / n);
  }
  return out;
}

bool BoundaryFunction::is_admissible() const {
  if (admissible_flag_) return *admissible_flag_;
  if (const auto* s = as_step()) {
    double rise = 0.0;
    for (std::size_t i = 0; i < s->arcs.size(); ++i) {
      rise += forward_increment(s->arcs[i].theta, s->arcs[(i + 1) % s->arcs.size()].theta);
    }
    return std::abs(rise - kTwoPi) < 1e-9;
  }
  if (!is_unit_modulus()) return false;
  if (const auto* smp = as_sampled()) return unit_rise_of(smp->values);
  return unit_rise_of(sample_values(*this, 4096));
}

bool BoundaryFunction::is_unit_modulus(double tol) const {
  if (as_step()) return true;
  const std::vector<Complex> samples =
      as_sampled() ? as_sampled()->values : sample_values(*this, 4096);
  return std::all_of(samples.begin(), samples.end(),
                     [tol](const Complex& v) { return std::abs(std::abs(v) - 1.0) <= tol; });
}

Complex fourier_coefficient(const BoundaryFunction& b, int k) {
  if (const auto* s = b.as_step()) {
    Complex sum{};
    for (std::size_t j = 0; j < s->arcs.size(); ++j) {
      const double lo = s->arcs[j].phi_start;
      const double hi = j + 1 < s->arcs.size() ? s->arcs[j + 1].phi_start : kTwoPi;
      // int_lo^hi e^{-ik phi} dphi = e^{-ik mid} * 2 sin(k len / 2) / k.
      const double len = hi - lo;
      Complex arc;
      if (k == 0) {
        arc = len;
      } else {
        arc = std::polar(2.0 * std::sin(0.5 * k * len) / k, -0.5 * k * (lo + hi));
      }
      sum += std::polar(1.0, s->arcs[j].theta) * arc;
    }
    return sum / kTwoPi;
  }
  if (const auto* p = b.as_trig_poly()) {
    auto it = p->coeffs.find(k);
    return it == p->coeffs.end() ? Complex{} : it->second;
  }
  const auto& v = b.as_sampled()->values;
  const auto n = static_cast<long long>(v.size());
  Complex sum{};
  for (long long i = 0; i < n; ++i) {
    // Reduce k*i modulo n so the twiddle angle stays exact for large k.
    long long r = (static_cast<long long>(k) * i) % n;
    if (r < 0) r += n;
    sum += v[static_cast<std::size_t>(i)] * std::polar(1.0, -kTwoPi * static_cast<double>(r) / n);
  }
  return sum / static_cast<double>(n);
}

Complex fourier_coefficient_pos(const BoundaryFunction& b, int k) {
  if (k < 0) throw std::invalid_argument("fourier_coefficient_pos needs k >= 0");
  return fourier_coefficient(b, k);
}

Complex fourier_coefficient_neg(AlphaParameter alpha, const BoundaryFunction& b, int k) {
  if (k < 1) throw std::invalid_argument("fourier_coefficient_neg needs k >= 1");
  return fourier_coefficient(b, -k) / beta_fn(k, alpha + 1.0);
}

CoefficientSpectrum spectrum_from_boundary(AlphaParameter alpha, const BoundaryFunction& b,
                                           int truncation) {
  CoefficientSpectrum s(alpha, truncation);
  s.set(0, fourier_coefficient_pos(b, 0));
  for (int k = 1; k <= truncation; ++k) {
    s.set(k, fourier_coefficient_pos(b, k));
    s.set(-k, fourier_coefficient_neg(alpha, b, k));
  }
  return s;
}

BoundaryFunction extremal_triple_step() {
  constexpr double pi = std::numbers::pi;
  return BoundaryFunction::step({{0.0, 0.0},
                                 {pi / 3.0, 2.0 * pi / 3.0},
                                 {pi, 4.0 * pi / 3.0},
                                 {5.0 * pi / 3.0, 0.0}});
}

BoundaryFunction random_admissible_step(int n_arcs, std::uint64_t seed) {
  if (n_arcs < 2) throw std::invalid_argument("random_admissible_step needs n_arcs >= 2");
  SeededRandom rng(seed);
  std::vector<double> starts{0.0};
  while (static_cast<int>(starts.size()) < n_arcs) {
    const double s = rng.uniform(0.0, kTwoPi);
    const bool clash = std::any_of(starts.begin(), starts.end(),
                                   [s](double t) { return std::abs(s - t) < 1e-6; });
    if (!clash && s < kTwoPi - 1e-6) starts.push_back(s);
  }
  std::sort(starts.begin(), starts.end());

  std::vector<double> rises(static_cast<std::size_t>(n_arcs));
  double total = 0.0;
  for (auto& r : rises) {
    r = rng.uniform(0.05, 1.0);
    total += r;
  }
  double theta = rng.uniform(0.0, kTwoPi);
  std::vector<StepArc> arcs;
  arcs.reserve(starts.size());
  for (int j = 0; j < n_arcs; ++j) {
    arcs.push_back({starts[static_cast<std::size_t>(j)], theta});
    theta += kTwoPi * rises[static_cast<std::size_t>(j)] / total;
  }
  return BoundaryFunction::step(std::move(arcs));
}

BoundaryFunction to_sampled(const BoundaryFunction& b, int n) {
  if (n < 2) throw std::invalid_argument("to_sampled needs n >= 2");
  return BoundaryFunction::sampled(sample_values(b, n));
}

}  // namespace alphakit
