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
#include <unsupported/Eigen/MatrixFunctions>

#include "oracles.hpp"
#include "phasedamp/lindblad.hpp"
#include "phasedamp/quadrature.hpp"
#include "phasedamp/states.hpp"

using namespace phasedamp;
using doctest::Approx;

namespace {

FockMatrix annihilation(int n) {
  FockMatrix a = FockMatrix::Zero(n, n);
  for (int k = 1; k < n; ++k) a(k - 1, k) = std::sqrt(static_cast<double>(k));
  return a;
}

// D(beta) S(r) |0> from matrix exponentials on a large basis, truncated to the cutoff.
FockDensityMatrix squeezed_coherent_by_expm(Complex beta, double s, int cutoff) {
  const int big = 220;
  const FockMatrix a = annihilation(big);
  const FockMatrix ad = a.adjoint();
  const double r = 0.5 * std::log(s);
  const FockMatrix squeeze = (0.5 * r * (a * a - ad * ad)).exp();
  const FockMatrix displace = (beta * ad - std::conj(beta) * a).exp();
  FockVector vac = FockVector::Zero(big);
  vac(0) = 1.0;
  const FockVector psi = (displace * squeeze * vac).head(cutoff);
  return {psi * psi.adjoint(), 1.0 - psi.squaredNorm()};
}

std::vector<StateSpec> sample_specs() {
  return {StateSpec::coherent({1.2, -0.4}),          StateSpec::thermal(0.8),
          StateSpec::photon_added_thermal(1.0),       StateSpec::photon_added_thermal(0.4),
          StateSpec::photon_added_coherent({0.9, 0.6}), StateSpec::squeezed_coherent({0.7, 0.3}, 0.6),
          StateSpec::squeezed_coherent({-0.5, 1.0}, 1.8), StateSpec::displaced_thermal({1.0, 1.0}, 0.5)};
}

}  // namespace

TEST_CASE("initial P-function descriptors") {
  const auto coh = initial_p_function(StateSpec::coherent({2.0, 1.0}));
  REQUIRE(kind_of(coh) == PKind::Delta);
  CHECK(std::get<DeltaP>(coh).center == Complex(2.0, 1.0));

  const auto pats = std::get<GaussianPolynomial>(initial_p_function(StateSpec::photon_added_thermal(1.0)));
  CHECK(pats.coeff(2, 0) == Approx(2.0 / kPi));
  CHECK(pats.coeff(0, 2) == Approx(2.0 / kPi));
  CHECK(pats.coeff(0, 0) == Approx(-1.0 / kPi));
  CHECK(pats.width == 1.0);

  const auto th = std::get<GaussianPolynomial>(initial_p_function(StateSpec::thermal(1.5)));
  CHECK(th.coeff(0, 0) == Approx(1.0 / (kPi * 1.5)));
  CHECK(th.width == 1.5);

  const auto vac = initial_p_function(StateSpec::thermal(0.0));
  REQUIRE(kind_of(vac) == PKind::Delta);
  CHECK(std::get<DeltaP>(vac).center == Complex{});

  const auto scs = std::get<DeltaDerivativeSeries>(initial_p_function(StateSpec::squeezed_coherent({}, 2.0), 30));
  CHECK(scs.truncation_order == 30);
  CHECK(scs.max_degree == 60);
}

TEST_CASE("invalid specs are rejected") {
  CHECK_THROWS_AS(StateSpec::photon_added_thermal(0.0), DomainError);
  CHECK_THROWS_AS(StateSpec::thermal(-1.0), DomainError);
  CHECK_THROWS_AS(StateSpec::squeezed_coherent({}, 0.0), DomainError);
  CHECK_THROWS_AS(StateSpec::coherent({std::nan(""), 0.0}), DomainError);
  CHECK_THROWS_AS(fock_density(StateSpec::coherent({}), 1), DomainError);
  CHECK_THROWS_AS(fock_density(StateSpec::coherent({4.0, 0.0}), 10), DomainError);
}

TEST_CASE("fock_density examples") {
  const auto vac = fock_density(StateSpec::coherent({}), 10);
  CHECK(vac.elements()(0, 0).real() == Approx(1.0));
  CHECK(vac.elements().cwiseAbs().sum() == Approx(1.0));

  const auto th = fock_density(StateSpec::thermal(1.0), 80);
  for (int k = 0; k < 20; ++k) CHECK(th.population(k) == Approx(0.5 * std::pow(0.5, k)).epsilon(1e-14));
  CHECK(th.trace_deficit() < 1e-20);

  // a^dag rho_th a / Tr(...) built by explicit operator products.
  const int n = 60;
  const FockMatrix a = annihilation(n);
  FockMatrix rho_th = FockMatrix::Zero(n, n);
  for (int k = 0; k < n; ++k) rho_th(k, k) = std::pow(0.5, k + 1);
  FockMatrix added = a.adjoint() * rho_th * a;
  added /= added.trace();
  const FockMatrix num = a.adjoint() * a;
  CHECK((added * num).trace().real() == Approx(3.0).epsilon(1e-10));
  const auto pats = fock_density(StateSpec::photon_added_thermal(1.0), n);
  CHECK((pats.elements() - added).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("density matrices are Hermitian, positive and normalized") {
  for (const auto& spec : sample_specs()) {
    const auto rho = fock_density(spec, 60);
    INFO(family_name(spec.family));
    CHECK((rho.elements() - rho.elements().adjoint()).cwiseAbs().maxCoeff() <= 1e-12);
    CHECK(rho.min_eigenvalue() >= -1e-10);
    CHECK(rho.trace_deficit() >= -1e-14);
    CHECK(rho.trace_deficit() < 1e-8);
  }
}

TEST_CASE("initial moments agree with Fock-basis traces") {
  for (const auto& spec : sample_specs()) {
    const auto rho = fock_density(spec, 80);
    const MomentSet exact = initial_moments(spec);
    const MomentSet traced = moments_from_rho(rho);
    const double tol = std::max(1e-8, 10.0 * rho.trace_deficit());
    INFO(family_name(spec.family));
    CHECK(std::abs(exact.mean_a - traced.mean_a) < tol);
    CHECK(std::abs(exact.mean_n - traced.mean_n) < tol);
    CHECK(std::abs(exact.second_factorial - traced.second_factorial) < tol);
    CHECK(std::abs(exact.var_x - traced.var_x) < tol);
    CHECK(std::abs(exact.var_y - traced.var_y) < tol);
  }
}

TEST_CASE("squeeze convention is fixed by an independent construction") {
  for (double s : {0.5, 1.5, 2.0}) {
    const Complex beta(0.6, -0.3);
    const auto reference = squeezed_coherent_by_expm(beta, s, 80);
    const auto built = fock_density(StateSpec::squeezed_coherent(beta, s), 80);
    CHECK((reference.elements() - built.elements()).cwiseAbs().maxCoeff() < 1e-10);
    const MomentSet m = moments_from_rho(reference);
    CHECK(m.var_x == Approx(1.0 / (4.0 * s)).epsilon(1e-9));
    CHECK(m.var_y == Approx(s / 4.0).epsilon(1e-9));
    CHECK(initial_moments(StateSpec::squeezed_coherent(beta, s)).var_x == Approx(m.var_x).epsilon(1e-9));
  }
}

TEST_CASE("Gaussian-polynomial descriptors are normalized with the right first moment") {
  for (const auto& spec : {StateSpec::thermal(0.7), StateSpec::photon_added_thermal(1.3),
                           StateSpec::displaced_thermal({0.8, -1.1}, 0.6)}) {
    const auto p = initial_p_function(spec);
    const auto c = std::get<GaussianPolynomial>(p).center;
    const Box box{c.real() - 12.0, c.real() + 12.0, c.imag() - 12.0, c.imag() + 12.0};
    const auto norm = integrate_2d([&](double x, double y) { return evaluate_p(p, {x, y}); }, box, 1e-11);
    const auto re = integrate_2d([&](double x, double y) { return x * evaluate_p(p, {x, y}); }, box, 1e-11);
    const auto im = integrate_2d([&](double x, double y) { return y * evaluate_p(p, {x, y}); }, box, 1e-11);
    const MomentSet m = initial_moments(spec);
    CHECK(norm.value == Approx(1.0).epsilon(1e-8));
    CHECK(re.value == Approx(m.mean_a.real()).epsilon(1e-8).scale(1.0));
    CHECK(im.value == Approx(m.mean_a.imag()).epsilon(1e-8).scale(1.0));
  }
}

TEST_CASE("photon-added thermal P is negative inside its sign boundary") {
  for (double m : {0.5, 1.0, 2.0}) {
    const auto p = initial_p_function(StateSpec::photon_added_thermal(m));
    const double edge = std::sqrt(m / (m + 1.0));
    CHECK(evaluate_p(p, {0.0, 0.0}) < 0.0);
    CHECK(evaluate_p(p, {0.99 * edge, 0.0}) < 0.0);
    CHECK(evaluate_p(p, {0.0, 1.01 * edge}) > 0.0);
    CHECK(std::abs(evaluate_p(p, {edge / std::sqrt(2.0), edge / std::sqrt(2.0)})) < 1e-15);
  }
}

TEST_CASE("default cutoff policy") {
  CHECK(default_cutoff(StateSpec::coherent({})) == 30);
  CHECK(default_cutoff(StateSpec::coherent({3.0, 0.0})) == 80);
}

TEST_CASE("state specs round-trip through key-value form") {
  for (const auto& spec : sample_specs()) CHECK(parse_state_spec(to_key_values(spec)) == spec);
  CHECK(parse_state_spec({{"state", "pats"}, {"mbar", "2"}}) == StateSpec::photon_added_thermal(2.0));
  CHECK_THROWS_AS(parse_state_spec({{"state", "cat"}}), DomainError);
  CHECK_THROWS_AS(parse_state_spec({{"state", "thermal"}, {"mbar", "x"}}), DomainError);
}
