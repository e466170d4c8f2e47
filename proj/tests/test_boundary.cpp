#include <doctest.h>

#include <cmath>
#include <numbers>

#include "alphakit/boundary.hpp"
#include "alphakit/inequalities.hpp"
#include "alphakit/random.hpp"

using namespace alphakit;
using std::numbers::pi;

namespace {

const double kC1 = 3.0 * std::sqrt(3.0) / (2.0 * pi);

BoundaryFunction identity_boundary() { return BoundaryFunction::trig_poly({{1, Complex(1.0, 0.0)}}); }

// Samples of a step boundary whose arc starts sit on grid nodes, with the
// two one-sided values averaged at each jump. The DFT of these samples is the
// trapezoid rule applied arc by arc, accurate to O(h^2).
BoundaryFunction jump_averaged_samples(const BoundaryFunction& b, int n) {
  std::vector<Complex> v(n);
  for (int i = 0; i < n; ++i) {
    const double phi = 2 * pi * i / n;
    v[i] = 0.5 * (b.value(phi + 1e-9) + b.value(phi - 1e-9));
  }
  return BoundaryFunction::sampled(std::move(v));
}

StepPhase snapped(const StepPhase& s, int n) {
  StepPhase out = s;
  for (auto& a : out.arcs) a.phi_start = std::round(a.phi_start / (2 * pi) * n) * 2 * pi / n;
  return out;
}

double jump_total(const StepPhase& s) {
  double total = 0.0;
  for (std::size_t j = 0; j < s.arcs.size(); ++j) {
    const double prev = s.arcs[(j + s.arcs.size() - 1) % s.arcs.size()].theta;
    total += std::abs(std::polar(1.0, s.arcs[j].theta) - std::polar(1.0, prev));
  }
  return total;
}

}  // namespace

TEST_CASE("step boundaries validate their arcs") {
  CHECK_THROWS_AS(BoundaryFunction::step({}), std::invalid_argument);
  CHECK_THROWS_AS(BoundaryFunction::step({{0.1, 0.0}}), std::invalid_argument);
  CHECK_THROWS_AS(BoundaryFunction::step({{0.0, 0.0}, {1.0, 1.0}, {1.0, 2.0}}), std::invalid_argument);
  CHECK_THROWS_AS(BoundaryFunction::step({{0.0, 0.0}, {7.0, 1.0}}), std::invalid_argument);
  CHECK_THROWS_AS(BoundaryFunction::step({{0.0, std::nan("")}}), std::invalid_argument);
  CHECK_NOTHROW(BoundaryFunction::step({{0.0, 0.0}, {3.0, 1.0}}));
  CHECK_THROWS_AS(BoundaryFunction::sampled({Complex(1.0, 0.0)}), std::invalid_argument);
}

TEST_CASE("extremal triple step values and admissibility") {
  const auto b = extremal_triple_step();
  CHECK(std::abs(b.value(0.1) - 1.0) < 1e-15);
  CHECK(std::abs(b.value(2.0) - std::polar(1.0, 2 * pi / 3)) < 1e-15);
  CHECK(std::abs(b.value(4.0) - std::polar(1.0, 4 * pi / 3)) < 1e-15);
  CHECK(std::abs(b.value(6.0) - 1.0) < 1e-15);
  CHECK(std::abs(b.value(0.1 + 2 * pi) - 1.0) < 1e-15);
  CHECK(b.is_admissible());
  CHECK(b.is_unit_modulus());
  CHECK(b.breakpoints().size() == 4);
}

TEST_CASE("admissibility of step, sampled and trig data") {
  // Phase rising by 4 pi: degree two.
  CHECK_FALSE(BoundaryFunction::step({{0.0, 0.0}, {1.0, 2.0}, {2.0, 4.0}, {3.0, 0.0}, {4.0, 2.0}, {5.0, 4.0}}).is_admissible());
  // Decreasing phase.
  CHECK_FALSE(BoundaryFunction::step({{0.0, 0.0}, {2.0, 4 * pi / 3}, {4.0, 2 * pi / 3}}).is_admissible());
  CHECK(identity_boundary().is_admissible());
  CHECK_FALSE(BoundaryFunction::trig_poly({{-1, Complex(1.0, 0.0)}}).is_admissible());
  CHECK_FALSE(BoundaryFunction::trig_poly({{1, Complex(0.5, 0.0)}}).is_admissible());
  CHECK(to_sampled(identity_boundary(), 512).is_admissible());
  CHECK(to_sampled(extremal_triple_step(), 512).is_admissible());

  auto forced = BoundaryFunction::trig_poly({{2, Complex(1.0, 0.0)}});
  CHECK_FALSE(forced.is_admissible());
  forced.set_admissible_flag(true);
  CHECK(forced.is_admissible());
  forced.set_admissible_flag(std::nullopt);
  CHECK_FALSE(forced.is_admissible());
}

TEST_CASE("identity boundary coefficients") {
  const auto b = identity_boundary();
  CHECK(std::abs(fourier_coefficient_pos(b, 1) - 1.0) < 1e-15);
  for (int k : {0, 2, 5}) CHECK(std::abs(fourier_coefficient_pos(b, k)) < 1e-15);
  for (int k : {1, 2, 7}) CHECK(std::abs(fourier_coefficient_neg(AlphaParameter(0.5), b, k)) < 1e-15);
  const auto s = spectrum_from_boundary(AlphaParameter(0.5), b, 3);
  CHECK(s.truncation() == 3);
  for (int k = -3; k <= 3; ++k) CHECK(std::abs(s[k] - (k == 1 ? 1.0 : 0.0)) < 1e-15);
}

TEST_CASE("extremal boundary coefficients are alpha independent") {
  const auto b = extremal_triple_step();
  CHECK(std::abs(fourier_coefficient_pos(b, 1) - kC1) <= 1e-15);
  CHECK(std::abs(fourier_coefficient_pos(b, 0)) <= 1e-15);
  for (double a : {-0.5, 0.0, 1.0, 2.5}) {
    CHECK(std::abs(fourier_coefficient_neg(AlphaParameter(a), b, 1)) <= 1e-14);
    const auto s = spectrum_from_boundary(AlphaParameter(a), b, 1);
    CHECK(std::abs(s[1] - kC1) <= 1e-15);
    CHECK(std::abs(s[0]) <= 1e-15);
    CHECK(std::abs(s[-1]) <= 1e-14);
  }
}

TEST_CASE("extremal coefficients vanish unless k = 1 mod 3") {
  const auto b = extremal_triple_step();
  for (int k = -40; k <= 40; ++k) {
    const int r = ((k - 1) % 3 + 3) % 3;
    CAPTURE(k);
    if (r != 0) CHECK(std::abs(fourier_coefficient(b, k)) <= 1e-15);
    else CHECK(std::abs(fourier_coefficient(b, k)) > 1e-4);
  }
  const auto s = spectrum_from_boundary(AlphaParameter(1.0), b, 4);
  for (int k : {-4, -3, -1, 0, 2, 3}) CHECK(std::abs(s[k]) <= 1e-14);
  CHECK(std::abs(s[4]) > 1e-3);
  CHECK(std::abs(s[-2]) > 1e-3);
}

TEST_CASE("conjugate boundary divides by B(k, alpha+1)") {
  const auto b = BoundaryFunction::trig_poly({{-1, Complex(1.0, 0.0)}});
  for (double a : {-0.5, 0.0, 1.0, 2.5}) {
    CHECK(std::abs(fourier_coefficient_neg(AlphaParameter(a), b, 1) - (a + 1.0)) <= 1e-13);
  }
  CHECK_THROWS_AS(fourier_coefficient_neg(AlphaParameter(1.0), b, 0), std::invalid_argument);
  CHECK_THROWS_AS(fourier_coefficient_pos(b, -1), std::invalid_argument);
}

TEST_CASE("random_admissible_step is valid and deterministic") {
  const auto b = random_admissible_step(3, 7);
  CHECK(b.is_admissible());
  CHECK(b.as_step()->arcs.size() == 3);
  const auto again = random_admissible_step(3, 7);
  const auto& x = b.as_step()->arcs;
  const auto& y = again.as_step()->arcs;
  for (std::size_t i = 0; i < x.size(); ++i) {
    CHECK(x[i].phi_start == y[i].phi_start);
    CHECK(x[i].theta == y[i].theta);
  }
  CHECK_THROWS_AS(random_admissible_step(1, 7), std::invalid_argument);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto r = random_admissible_step(2 + static_cast<int>(seed % 15), seed);
    CHECK(r.is_admissible());
    CHECK(r.is_unit_modulus());
  }
}

TEST_CASE("Parseval: truncated sums stay below 1 with a controlled deficit") {
  std::vector<BoundaryFunction> cases{extremal_triple_step()};
  for (std::uint64_t seed = 1; seed <= 10; ++seed) cases.push_back(random_admissible_step(2 + static_cast<int>(seed), seed));
  for (const auto& b : cases) {
    const double jumps = jump_total(*b.as_step());
    for (int K : {64, 256, 1024}) {
      const double deficit = parseval_deficit(b, K);
      CAPTURE(K);
      CHECK(deficit >= -1e-12);
      // Tail bound from |raw c_k| <= (sum of jump moduli) / (2 pi |k|).
      CHECK(deficit <= jumps * jumps / (2 * pi * pi * K));
    }
    CHECK(parseval_deficit(b, 1024) <= 1e-3);
  }
  CHECK(std::abs(parseval_deficit(identity_boundary(), 4)) <= 1e-15);
}

TEST_CASE("analytic arc integration matches a dense sampled transform") {
  const int n = 65536;
  for (std::uint64_t seed = 100; seed < 120; ++seed) {
    const StepPhase s = snapped(*random_admissible_step(2 + static_cast<int>(seed % 8), seed).as_step(), n);
    const auto exact = BoundaryFunction::step(s.arcs);
    const auto sampled = jump_averaged_samples(exact, n);
    for (int k = -32; k <= 32; ++k) {
      CAPTURE(seed);
      CAPTURE(k);
      CHECK(std::abs(fourier_coefficient(exact, k) - fourier_coefficient(sampled, k)) <= 1e-6);
    }
  }
}

TEST_CASE("symmetric phases give real coefficients") {
  // theta(-phi) = -theta(phi) mod 2 pi.
  const std::vector<BoundaryFunction> cases{
      extremal_triple_step(),
      BoundaryFunction::step({{0.0, 0.0}, {0.4, 1.0}, {1.9, pi}, {2 * pi - 1.9, 2 * pi - 1.0}, {2 * pi - 0.4, 2 * pi}}),
  };
  for (const auto& b : cases) {
    const auto s = spectrum_from_boundary(AlphaParameter(0.7), b, 40);
    CHECK(s.all_real(1e-10));
  }
}

TEST_CASE("sampled and trig representations") {
  const auto trig = BoundaryFunction::trig_poly({{1, Complex(0.6, 0.0)}, {-2, Complex(0.0, 0.8)}});
  const auto samples = to_sampled(trig, 64);
  for (int k = -5; k <= 5; ++k) CHECK(std::abs(fourier_coefficient(samples, k) - fourier_coefficient(trig, k)) <= 1e-15);
  CHECK(std::abs(fourier_coefficient(trig, -2) - Complex(0.0, 0.8)) < 1e-16);
  CHECK(std::abs(trig.value(0.3) - (0.6 * std::polar(1.0, 0.3) + Complex(0.0, 0.8) * std::polar(1.0, -0.6))) < 1e-15);
  // Linear interpolation between nodes.
  const auto two = BoundaryFunction::sampled({Complex(1.0, 0.0), Complex(-1.0, 0.0)});
  CHECK(std::abs(two.value(pi / 2)) < 1e-15);
  CHECK(std::abs(two.value(pi) + 1.0) < 1e-15);
  CHECK_THROWS_AS(to_sampled(trig, 1), std::invalid_argument);
}

TEST_CASE("CoefficientSpectrum storage") {
  CoefficientSpectrum s(AlphaParameter(0.5), 2);
  CHECK(s[3] == Complex(0.0, 0.0));
  CHECK(s[-3] == Complex(0.0, 0.0));
  s.set(-2, Complex(0.5, 0.25));
  CHECK(s[-2] == Complex(0.5, 0.25));
  CHECK_THROWS_AS(s.set(3, 1.0), std::out_of_range);
  CHECK_THROWS_AS(s.set(1, Complex(std::nan(""), 0.0)), std::invalid_argument);
  CHECK_FALSE(s.all_real());
  const CoefficientSpectrum list(AlphaParameter(0.5), {{1, 1.0}, {-4, 0.5}});
  CHECK(list.truncation() == 4);
  CHECK(list[-4] == Complex(0.5, 0.0));
  CHECK(list.all_real());
  CHECK_THROWS_AS(CoefficientSpectrum(AlphaParameter(0.5), -1), std::invalid_argument);
}
