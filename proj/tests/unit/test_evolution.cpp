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

#include "oracles.hpp"
#include "phasedamp/evolution.hpp"
#include "phasedamp/lindblad.hpp"

using namespace phasedamp;
using doctest::Approx;

namespace {

const UniformAxis kAxis(-6.0, 6.0, 61);

double max_gap(const PhaseSpaceGrid& a, const PhaseSpaceGrid& b) { return a.max_abs_difference(b); }

}  // namespace

TEST_CASE("coherent state spreads into the thermal kernel") {
  const BathParams bath(0.7, 1.2);
  const Complex beta(1.0, -0.5);
  const double t = 0.8;
  const auto e = evolve_p_closed_form(StateSpec::coherent(beta), bath, t);
  const auto& g = std::get<GaussianPolynomial>(e.form);
  const auto sc = scale_bath(bath, t);
  CHECK(g.width == Approx(sc.nbar_t));
  CHECK(std::abs(g.center - beta * sc.decay_factor) < 1e-15);
  const Complex alpha(0.3, 0.2);
  CHECK(evaluate_p(e.form, alpha) ==
        Approx(std::exp(-std::norm(alpha - beta * sc.decay_factor) / sc.nbar_t) / (kPi * sc.nbar_t)));
}

TEST_CASE("photon-added thermal closed form coefficients") {
  const BathParams bath(1.0, 2.0);
  const auto e = evolve_p_closed_form(StateSpec::photon_added_thermal(1.0), bath, std::log(2.0) / 1.0);
  const auto& g = std::get<GaussianPolynomial>(e.form);
  CHECK(g.coeff(2, 0) == Approx(2.0 * 0.25 / (kPi * std::pow(0.25 + 1.5, 3))).epsilon(1e-14));
  CHECK(g.width == Approx(1.75).epsilon(1e-14));

  const auto late = std::get<GaussianPolynomial>(evolve_p_closed_form(StateSpec::photon_added_thermal(1.0), bath, 40.0).form);
  CHECK(late.width == Approx(2.0).epsilon(1e-14));
  CHECK(late.coeff(0, 0) == Approx(1.0 / (2.0 * kPi)).epsilon(1e-12));
  CHECK(std::abs(late.coeff(2, 0)) < 1e-30);
}

TEST_CASE("t = 0 reproduces the initial descriptor exactly") {
  const BathParams bath(0.5, 1.0);
  for (const auto& spec : {StateSpec::coherent({1.0, 1.0}), StateSpec::photon_added_thermal(0.5),
                           StateSpec::photon_added_coherent({0.4, 0.1}), StateSpec::squeezed_coherent({0.2, 0.0}, 1.3)}) {
    CHECK(evolve_p_closed_form(spec, bath, 0.0).form.index() == initial_p_function(spec).index());
    CHECK(std::visit([](const auto& a, const auto& b) -> bool {
            using A = std::decay_t<decltype(a)>;
            using B = std::decay_t<decltype(b)>;
            if constexpr (std::is_same_v<A, B> && !std::is_same_v<A, SampledP>) return a == b;
            return false;
          },
          evolve_p_closed_form(spec, bath, 0.0).form, initial_p_function(spec)));
  }
  CHECK_THROWS_AS(evolve_p_closed_form(StateSpec::coherent({}), bath, -1.0), DomainError);
}

TEST_CASE("evolved P is regular for t > 0 and nbar > 0") {
  const BathParams bath(0.5, 0.8);
  for (auto spec : {StateSpec::coherent({1.0, 0.0}), StateSpec::photon_added_coherent({0.5, 0.5}),
                    StateSpec::squeezed_coherent({0.0, 1.0}, 1.2), StateSpec::thermal(0.0)})
    CHECK_FALSE(is_singular(evolve_p_closed_form(spec, bath, 0.5).form));
}

TEST_CASE("numerical convolution reproduces the closed forms") {
  const BathParams bath(0.5, 2.0);
  const UniformAxis axis(-5.0, 5.0, 21);

  SUBCASE("delta input is the kernel itself") {
    const auto spec = StateSpec::coherent({1.0, -1.0});
    const auto numeric = convolve_p_numeric(initial_p_function(spec), bath, 0.4, axis, axis);
    const auto closed = sample_p(evolve_p_closed_form(spec, bath, 0.4).form, axis, axis);
    CHECK(max_gap(numeric, closed) < 1e-15);
  }
  SUBCASE("photon-added thermal") {
    const auto spec = StateSpec::photon_added_thermal(1.0);
    const auto numeric = convolve_p_numeric(initial_p_function(spec), bath, 0.7, axis, axis);
    CHECK(max_gap(numeric, sample_p(evolve_p_closed_form(spec, bath, 0.7).form, axis, axis)) < 1e-7);
  }
  SUBCASE("thermal widens by the bath") {
    const auto spec = StateSpec::thermal(0.6);
    const auto numeric = convolve_p_numeric(initial_p_function(spec), bath, 0.3, axis, axis);
    const auto sc = scale_bath(bath, 0.3);
    const auto expected = sample_p(GaussianPolynomial::normalized_gaussian({}, 0.6 * sc.decay_sq() + sc.nbar_t), axis, axis);
    CHECK(max_gap(numeric, expected) < 1e-7);
  }
  SUBCASE("photon-added coherent") {
    const auto spec = StateSpec::photon_added_coherent({1.2, -0.8});
    for (double t : {0.1, 0.5, 2.0}) {
      const auto numeric = convolve_p_numeric(initial_p_function(spec), bath, t, axis, axis);
      CHECK(max_gap(numeric, sample_p(evolve_p_closed_form(spec, bath, t).form, axis, axis)) < 1e-12);
    }
  }
  SUBCASE("squeezed coherent") {
    const auto spec = StateSpec::squeezed_coherent({0.3, 0.6}, 0.7);
    const auto numeric = convolve_p_numeric(initial_p_function(spec), bath, 0.5, axis, axis);
    CHECK(max_gap(numeric, sample_p(evolve_p_closed_form(spec, bath, 0.5).form, axis, axis)) < 1e-10);
  }
  SUBCASE("requires a positive scaled occupancy") {
    CHECK_THROWS_AS(convolve_p_numeric(initial_p_function(StateSpec::thermal(1.0)), BathParams(0.5, 0.0), 0.3,
                                       axis, axis),
                    DomainError);
  }
}

TEST_CASE("squeezed series divergence is reported") {
  // Strong squeezing and a cold, young bath push the term ratio above 1.
  CHECK_THROWS_AS(evolve_p_closed_form(StateSpec::squeezed_coherent({}, 4.0), BathParams(0.5, 0.1), 0.05),
                  ConvergenceError);
  const auto ok = evolve_p_closed_form(StateSpec::squeezed_coherent({}, 1.5), BathParams(0.5, 2.0), 1.0);
  CHECK(ok.series_remainder < 1e-20);
}

TEST_CASE("zero-temperature rescaling") {
  const double gamma = 0.4, t = 1.1;
  const double c = std::exp(-gamma * t);
  const auto delta = evolve_p_zero_temperature(DeltaP{{2.0, 1.0}}, gamma, t);
  CHECK(std::abs(std::get<DeltaP>(delta).center - Complex(2.0, 1.0) * c) < 1e-15);

  const auto th = initial_p_function(StateSpec::thermal(1.3));
  const auto same = evolve_p_zero_temperature(th, gamma, 0.0);
  CHECK(std::get<GaussianPolynomial>(same) == std::get<GaussianPolynomial>(th));

  const auto cooled = std::get<GaussianPolynomial>(evolve_p_zero_temperature(th, gamma, t));
  CHECK(cooled.width == Approx(1.3 * c * c).epsilon(1e-14));
  CHECK(cooled.coeff(0, 0) == Approx(1.0 / (kPi * 1.3 * c * c)).epsilon(1e-14));

  // n = 0 baths route through the same law.
  const auto routed = evolve_p_closed_form(StateSpec::thermal(1.3), BathParams(gamma, 0.0), t);
  CHECK(std::get<GaussianPolynomial>(routed.form).width == Approx(cooled.width).epsilon(1e-14));

  // Populations against the master equation.
  const BathParams cold(gamma, 0.0);
  const auto rho = oracle::lindblad_states(StateSpec::thermal(1.3), cold, {t}).front();
  for (int k = 0; k < 12; ++k) CHECK(oracle::population_from_p(cooled, k) == Approx(rho.population(k)).epsilon(1e-8));
}

TEST_CASE("evolved moments") {
  const BathParams bath(0.5, 2.0);
  const MomentSet m0 = initial_moments(StateSpec::photon_added_coherent({0.5, 0.5}));
  const MomentSet same = evolved_moments(m0, bath, 0.0);
  CHECK(same.mean_n == m0.mean_n);
  CHECK(same.second_factorial == m0.second_factorial);
  CHECK_THROWS_AS(evolved_moments(m0, bath, -0.1), DomainError);

  const Complex beta(1.0, 2.0);
  const auto sc = scale_bath(bath, 0.9);
  CHECK(evolved_moments(initial_moments(StateSpec::coherent(beta)), bath, 0.9).mean_n ==
        Approx(std::norm(beta) * sc.decay_sq() + sc.nbar_t));

  const MomentSet th = evolved_moments(initial_moments(StateSpec::thermal(1.0)), bath, 1.0);
  CHECK(th.mean_n == Approx(std::exp(-1.0) + 2.0 * (1.0 - std::exp(-1.0))).epsilon(1e-14));
  const auto rho = oracle::lindblad_states(StateSpec::thermal(1.0), bath, {1.0}).front();
  CHECK(std::abs(moments_from_rho(rho).mean_n - th.mean_n) < 1e-6);
}

TEST_CASE("moment semigroup, uncertainty floor and equilibrium limit") {
  const BathParams bath(0.3, 0.9);
  for (const auto& spec : {StateSpec::squeezed_coherent({1.0, 0.5}, 0.5), StateSpec::photon_added_thermal(1.5),
                           StateSpec::photon_added_coherent({-1.0, 0.3})}) {
    const MomentSet m0 = initial_moments(spec);
    const MomentSet two_step = evolved_moments(evolved_moments(m0, bath, 0.7), bath, 1.3);
    const MomentSet one_step = evolved_moments(m0, bath, 2.0);
    CHECK(two_step.mean_n == Approx(one_step.mean_n).epsilon(1e-13));
    CHECK(two_step.second_factorial == Approx(one_step.second_factorial).epsilon(1e-13));
    CHECK(two_step.var_x == Approx(one_step.var_x).epsilon(1e-13));
    CHECK(std::abs(two_step.mean_a - one_step.mean_a) < 1e-13);
    for (double t = 0.0; t < 10.0; t += 0.25) {
      const MomentSet m = evolved_moments(m0, bath, t);
      CHECK(m.var_x * m.var_y >= 1.0 / 16.0 - 1e-12);
    }
    CHECK(evolved_moments(m0, bath, 200.0).var_x == Approx((2.0 * 0.9 + 1.0) / 4.0).epsilon(1e-12));
  }
}

TEST_CASE("Mandel Q") {
  CHECK(mandel_q(initial_moments(StateSpec::coherent({1.5, 0.0})), BathParams(0.5, 0.0), 0.7) ==
        Approx(0.0).scale(1.0).epsilon(1e-14));
  CHECK(mandel_q(initial_moments(StateSpec::thermal(1.7)), BathParams(0.5, 0.3), 0.0) == Approx(1.7));
  CHECK_THROWS_AS(mandel_q(initial_moments(StateSpec::coherent({})), BathParams(0.5, 0.0), 1.0), DomainError);

  const BathParams bath(0.5, 0.5);
  const auto spec = StateSpec::photon_added_thermal(1.0);
  const std::vector<double> times = {0.0, 1.0, 2.5, 5.0};
  const auto states = oracle::lindblad_states(spec, bath, times);
  for (std::size_t i = 0; i < times.size(); ++i)
    CHECK(std::abs(mandel_q(initial_moments(spec), bath, times[i]) - mandel_q_from_rho(states[i])) < 1e-5);
}

TEST_CASE("evolved P grids: normalization and moment consistency") {
  const BathParams bath(0.5, 1.0);
  for (const auto& spec : {StateSpec::photon_added_thermal(1.0), StateSpec::photon_added_coherent({1.0, -0.5}),
                           StateSpec::squeezed_coherent({0.5, 0.5}, 1.5), StateSpec::displaced_thermal({-1.0, 0.5}, 0.3)}) {
    for (double t : {0.3, 1.0}) {
      const auto e = evolve_p_closed_form(spec, bath, t);
      const UniformAxis axis(-9.0, 9.0, 181);
      const auto grid = sample_p(e.form, axis, axis);
      const MomentSet expected = evolved_moments(initial_moments(spec), bath, t);
      INFO(family_name(spec.family) << " t=" << t);
      CHECK(grid.integrate() == Approx(1.0).epsilon(1e-7));
      CHECK(grid.integrate_weighted([](Complex a) { return a.real(); }) ==
            Approx(expected.mean_a.real()).epsilon(1e-6).scale(1.0));
      CHECK(grid.integrate_weighted([](Complex a) { return std::norm(a); }) == Approx(expected.mean_n).epsilon(1e-6));
      const MomentSet from_p = moments_from_p(e.form);
      CHECK(from_p.mean_n == Approx(expected.mean_n).epsilon(1e-9));
      CHECK(from_p.second_factorial == Approx(expected.second_factorial).epsilon(1e-9));
      CHECK(from_p.var_x == Approx(expected.var_x).epsilon(1e-9));
    }
  }
}

TEST_CASE("thermal state of the bath occupancy is stationary") {
  const BathParams bath(0.5, 1.4);
  const auto initial = std::get<GaussianPolynomial>(initial_p_function(StateSpec::thermal(1.4)));
  for (double t : {0.01, 0.5, 3.0, 30.0}) {
    const auto g = std::get<GaussianPolynomial>(evolve_p_closed_form(StateSpec::thermal(1.4), bath, t).form);
    CHECK(g.width == Approx(initial.width).epsilon(1e-15));
  }
}

TEST_CASE("sample_p rejects singular descriptors") {
  CHECK_THROWS_AS(sample_p(DeltaP{{}}, kAxis, kAxis), DomainError);
  CHECK(default_axis() == kAxis);
}
