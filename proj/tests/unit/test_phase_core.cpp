// Copyright 2026 The phasedamp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "oracles.hpp"
#include "phasedamp/grid.hpp"
#include "phasedamp/phase_core.hpp"
#include "phasedamp/quadrature.hpp"

using namespace phasedamp;
using doctest::Approx;

TEST_CASE("scale_bath examples") {
  const auto s0 = scale_bath(BathParams(1.0, 2.0), 0.0);
  CHECK(s0.decay_factor == 1.0);
  CHECK(s0.nbar_t == 0.0);

  const auto s1 = scale_bath(BathParams(1.0, 2.0), std::log(2.0));
  CHECK(s1.decay_factor == Approx(0.5).epsilon(1e-15));
  CHECK(s1.nbar_t == Approx(1.5).epsilon(1e-15));

  const auto s2 = scale_bath(BathParams(0.3, 1.7), 100.0);
  CHECK(s2.decay_factor < 1e-12);
  CHECK(s2.nbar_t == Approx(1.7).epsilon(1e-15));

  CHECK_THROWS_AS(scale_bath(BathParams(1.0, 1.0), -0.1), DomainError);
}

TEST_CASE("bath and amplitude invariants") {
  CHECK_THROWS_AS(BathParams(0.0, 1.0), DomainError);
  CHECK_THROWS_AS(BathParams(1.0, -0.5), DomainError);
  CHECK_THROWS_AS(ComplexAmplitude(std::nan(""), 0.0), DomainError);
  CHECK_THROWS_AS(ComplexAmplitude(0.0, std::numeric_limits<double>::infinity()), DomainError);
  CHECK(ComplexAmplitude(3.0, 4.0).norm() == 25.0);
}

TEST_CASE("scaled bath identities hold for random parameters") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> g(0.05, 2.0), n(0.0, 3.0), t(0.0, 4.0);
  for (int i = 0; i < 200; ++i) {
    const BathParams bath(g(rng), n(rng));
    const double t1 = t(rng), t2 = t(rng);
    const auto a = scale_bath(bath, t1), b = scale_bath(bath, t2), ab = scale_bath(bath, t1 + t2);
    CHECK(ab.decay_factor == Approx(a.decay_factor * b.decay_factor).epsilon(1e-14));
    CHECK(ab.nbar_t == Approx(b.nbar_t + a.nbar_t * b.decay_sq()).epsilon(1e-13));
    CHECK(a.nbar_t == Approx(bath.nbar() * (1.0 - a.decay_sq())).epsilon(1e-13).scale(1e-300));
    CHECK(a.decay_factor > 0.0);
    CHECK(a.decay_factor <= 1.0);
    CHECK(a.nbar_t <= bath.nbar());
    CHECK(ab.nbar_t >= a.nbar_t);
  }
}

TEST_CASE("displace_amplitude examples") {
  ScaledBathParams unit{1.0, 0.0, 0.0}, half{0.5, 0.0, 0.0};
  CHECK(displace_amplitude(ComplexAmplitude(2.0, 1.0), unit) == ComplexAmplitude(2.0, 1.0));
  CHECK(displace_amplitude(ComplexAmplitude(2.0, 1.0), half) == ComplexAmplitude(1.0, 0.5));
  CHECK(displace_amplitude(ComplexAmplitude(), half) == ComplexAmplitude());
}

TEST_CASE("tricomi_u_half examples") {
  CHECK(tricomi_u_half(0, 17.3) == 1.0);
  CHECK(tricomi_u_half(0, -4.0) == 1.0);
  CHECK(tricomi_u_half(1, 0.7) == Approx(0.2).epsilon(1e-14));
  const double ref = oracle::tricomi_u_series(3, 0.5, 1.3);
  CHECK(std::abs(tricomi_u_half(3, 1.3) - ref) <= 1e-12 * std::abs(ref));
}

TEST_CASE("tricomi_u_half matches the series oracle on a grid") {
  for (int n = 0; n <= 20; ++n) {
    for (double x = -50.0; x <= 50.0; x += 0.73) {
      const double ref = oracle::tricomi_u_series(n, 0.5, x);
      INFO("n=" << n << " x=" << x);
      CHECK(std::abs(tricomi_u_half(n, x) - ref) <= 1e-12 * std::abs(ref));
    }
  }
}

TEST_CASE("tricomi sequence agrees with single evaluations") {
  double seq[21];
  tricomi_u_half_sequence(20, 3.7, seq);
  for (int n = 0; n <= 20; ++n) CHECK(seq[n] == Approx(tricomi_u_half(n, 3.7)).epsilon(1e-14));
}

TEST_CASE("Laguerre and Hermite polynomials") {
  CHECK(assoc_laguerre(0, 0.3, 2.0) == 1.0);
  CHECK(assoc_laguerre(1, 0.5, 2.0) == Approx(-0.5));
  CHECK(assoc_laguerre(2, 0.0, 1.0) == Approx(-0.5));  // (x^2 - 4x + 2)/2
  CHECK(hermite(0, 1.5) == 1.0);
  CHECK(hermite(3, 0.5) == Approx(8 * 0.125 - 12 * 0.5));
  double h[6];
  hermite_sequence(5, -0.3, h);
  for (int n = 0; n <= 5; ++n) CHECK(h[n] == Approx(hermite(n, -0.3)));
}

TEST_CASE("uniform axis and grid integration") {
  const UniformAxis axis(-1.0, 1.0, 21);
  CHECK(axis.spacing() == Approx(0.1));
  CHECK(axis[20] == 1.0);
  CHECK_THROWS_AS(UniformAxis(1.0, 0.0, 10), DomainError);
  CHECK_THROWS_AS(UniformAxis(0.0, 1.0, 1), DomainError);

  const UniformAxis wide(-8.0, 8.0, 161);
  const auto g = sample_grid(wide, wide, {}, [](Complex a) { return std::exp(-std::norm(a)) / kPi; });
  CHECK(g.integrate() == Approx(1.0).epsilon(1e-12));
  CHECK(g.integrate_weighted([](Complex a) { return std::norm(a); }) == Approx(1.0).epsilon(1e-12));
  CHECK(g.interpolate({0.0, 0.0}) == Approx(1.0 / kPi));
  CHECK(g.interpolate({9.0, 0.0}) == 0.0);
  CHECK(g.max_value() == Approx(1.0 / kPi));
}

TEST_CASE("adaptive quadrature") {
  const auto r = integrate_2d([](double x, double y) { return std::exp(-x * x - 2.0 * y * y); },
                              Box{-9.0, 9.0, -9.0, 9.0}, 1e-12);
  CHECK(r.converged);
  CHECK(r.value == Approx(kPi / std::sqrt(2.0)).epsilon(1e-12));
  const auto poly = integrate_2d([](double x, double y) { return x * x * y; }, Box{0.0, 1.0, 0.0, 2.0}, 1e-14);
  CHECK(poly.value == Approx(2.0 / 3.0).epsilon(1e-14));
}
