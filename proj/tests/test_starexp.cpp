#include <doctest.h>

#include <cmath>
#include <random>

#include "moyaltorus/starexp.hpp"

using namespace moyaltorus;

TEST_CASE("star_exp_of_theta2_eq_is_the_u_generator") {
  const QuantizationParams params = QuantizationParams::from_theta(0.73);
  const double t2 = params.theta * params.theta;
  StarExpResult r = star_exp(GroupElement(t2, 0.0, 0.0), params);
  REQUIRE(r.symbol.terms.size() == 1);
  CHECK(r.symbol.terms[0].a_q == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(r.symbol.terms[0].a_p == 0.0);
  CHECK(std::abs(r.symbol.terms[0].amp - cplx(1.0, 0.0)) <= 1e-15);
}

TEST_CASE("star_exp_of_theta2_ep_is_the_v_generator") {
  const QuantizationParams params = QuantizationParams::from_theta(0.73);
  const double t2 = params.theta * params.theta;
  StarExpResult r = star_exp(GroupElement(0.0, t2, 0.0), params);
  REQUIRE(r.symbol.terms.size() == 1);
  CHECK(r.symbol.terms[0].a_q == 0.0);
  CHECK(r.symbol.terms[0].a_p == doctest::Approx(1.0).epsilon(1e-14));
  // e^{i Omega(e_p, v)} = e^{-iq}
  CHECK(std::abs(r.symbol.value(0.4, 0.0) - std::exp(cplx(0.0, -0.4))) <= 1e-14);
}

TEST_CASE("star_exp_of_central_element_is_a_constant_phase") {
  const QuantizationParams params = QuantizationParams::from_theta(0.5);
  StarExpResult r = star_exp(GroupElement::central(0.8), params);
  REQUIRE(r.symbol.terms.size() == 1);
  CHECK(r.symbol.terms[0].a_q == 0.0);
  CHECK(r.symbol.terms[0].a_p == 0.0);
  const double expected = 0.8 / (0.5 * 0.5);
  CHECK(std::abs(r.central_phase - std::exp(cplx(0.0, expected))) <= 1e-14);
}

TEST_CASE("star_exp_amplitude_is_unimodular") {
  const QuantizationParams params = QuantizationParams::from_theta(1.3);
  std::mt19937 rng(21);
  std::uniform_real_distribution<double> U(-2.0, 2.0);
  for (int i = 0; i < 50; ++i) {
    StarExpResult r = star_exp(GroupElement(U(rng), U(rng), U(rng)), params);
    CHECK(std::abs(std::abs(r.symbol.terms[0].amp) - 1.0) <= 1e-12);
  }
}

// Exp_theta(lambda) = sum_k (1/k!)((i/theta) lambda)^{star k}: for the linear
// moment all Moyal corrections vanish, so the truncated series applied
// pointwise must reproduce the closed form.
TEST_CASE("truncated_star_power_series_matches_closed_form") {
  const QuantizationParams params = QuantizationParams::from_theta(1.0);
  std::mt19937 rng(22);
  std::uniform_real_distribution<double> U(-1.0, 1.0);
  for (int trial = 0; trial < 4; ++trial) {
    const GroupElement g(U(rng), U(rng), U(rng));
    StarExpResult closed = star_exp(g, params);
    int checked = 0;
    for (double q = -1.5; q <= 1.5 && checked < 100; q += 0.31) {
      for (double p = -1.5; p <= 1.5 && checked < 100; p += 0.31, ++checked) {
        const double lambda = moment(g, params, q, p);
        cplx series{};
        cplx term(1.0, 0.0);
        for (int k = 0; k <= 30; ++k) {
          if (k > 0) term *= cplx(0.0, lambda / params.theta) / double(k);
          series += term;
        }
        CHECK(std::abs(series - closed.symbol.value(q, p)) <= 1e-10);
      }
    }
  }
}

TEST_CASE("defect_is_one_for_commuting_directions") {
  const QuantizationParams params = QuantizationParams::from_theta(0.6);
  GroupElement g(0.7, 0.0, 0.1), gp(-1.2, 0.0, 0.4);
  CHECK(std::abs(homomorphism_defect(g, gp, params) - cplx(1.0, 0.0)) <= 1e-14);
}

TEST_CASE("defect_is_one_for_central_factor") {
  const QuantizationParams params = QuantizationParams::from_theta(0.6);
  GroupElement g = GroupElement::central(1.3), gp(0.4, -0.8, 0.2);
  CHECK(std::abs(homomorphism_defect(g, gp, params) - cplx(1.0, 0.0)) <= 1e-14);
}

TEST_CASE("defect_is_unimodular_and_matches_scaling_mismatch") {
  // E(g) * E(g') and E(g g') carry central phases Omega(v,v')/(2 theta^3) and
  // Omega(v,v')/(2 theta^2): the defect is their ratio.
  std::mt19937 rng(23);
  std::uniform_real_distribution<double> U(-1.5, 1.5);
  for (double theta : {0.7, 1.0, 1.9}) {
    const QuantizationParams params = QuantizationParams::from_theta(theta);
    for (int i = 0; i < 10; ++i) {
      GroupElement g(U(rng), U(rng), U(rng)), gp(U(rng), U(rng), U(rng));
      const cplx r = homomorphism_defect(g, gp, params);
      CHECK(std::abs(std::abs(r) - 1.0) <= 1e-13);
      const double w = omega(g, gp);
      const double t3 = theta * theta * theta;
      const cplx expected = std::exp(cplx(0.0, 0.5 * w * (1.0 / t3 - 1.0 / (theta * theta))));
      CHECK(std::abs(r - expected) <= 1e-12);
    }
  }
}

TEST_CASE("defect_is_exactly_one_at_theta_one") {
  const QuantizationParams params = QuantizationParams::from_theta(1.0);
  std::mt19937 rng(24);
  std::uniform_real_distribution<double> U(-1.5, 1.5);
  for (int i = 0; i < 20; ++i) {
    GroupElement g(U(rng), U(rng), U(rng)), gp(U(rng), U(rng), U(rng));
    CHECK(std::abs(homomorphism_defect(g, gp, params) - cplx(1.0, 0.0)) <= 1e-13);
  }
}

TEST_CASE("generator_pair_defect_reported_against_candidate_law") {
  // g = theta^2 e_q, g' = theta^2 e_p: Omega(v, v') = theta^4, so the
  // measured defect is e^{i theta^4 (theta^{-3} - theta^{-2})/2} =
  // e^{i(theta - theta^2)/2}, not the naive e^{i theta / 2}.
  const double theta = 0.5;
  const QuantizationParams params = QuantizationParams::from_theta(theta);
  const double t2 = theta * theta;
  const cplx r =
      homomorphism_defect(GroupElement(t2, 0.0, 0.0), GroupElement(0.0, t2, 0.0), params);
  const cplx measured_law = std::exp(cplx(0.0, 0.5 * (theta - theta * theta)));
  CHECK(std::abs(r - measured_law) <= 1e-13);
  const cplx naive_law = std::exp(cplx(0.0, 0.5 * theta));
  CHECK(std::abs(r - naive_law) > 1e-3);
}
