#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "moyaltorus/fft.hpp"
#include "moyaltorus/grid.hpp"
#include "moyaltorus/linalg.hpp"
#include "moyaltorus/special.hpp"
#include "moyaltorus/summation.hpp"

using namespace moyaltorus;

namespace {

Vec sample(const Grid1D& g, double (*f)(double)) {
  Vec v(g.count);
  for (int k = 0; k < g.count; ++k) v[k] = f(g.point(k));
  return v;
}

double gaussian(double q) { return std::exp(-q * q); }

}  // namespace

TEST_CASE("grid_rejects_bad_point_counts") {
  CHECK_THROWS_AS(Grid1D(0.0, 12.0, 7), std::invalid_argument);
  CHECK_THROWS_AS(Grid1D(0.0, 12.0, 9), std::invalid_argument);     // 3^2
  CHECK_THROWS_AS(Grid1D(0.0, 12.0, 576), std::invalid_argument);   // 2^6 * 3^2
  CHECK_THROWS_AS(Grid1D(0.0, -1.0, 256), std::invalid_argument);
  CHECK_NOTHROW(Grid1D(0.0, 12.0, 256));
  CHECK_NOTHROW(Grid1D(0.0, 12.0, 768));  // 2^8 * 3
}

TEST_CASE("grid_points_cover_half_open_window") {
  Grid1D g(0.0, 12.0, 256);
  CHECK(g.spacing() == doctest::Approx(24.0 / 256).epsilon(1e-15));
  CHECK(g.point(0) == doctest::Approx(-12.0));
  CHECK(g.point(255) == doctest::Approx(12.0 - g.spacing()));
  CHECK(g.points().size() == 256);
}

TEST_CASE("fractional_shift_by_zero_is_identity") {
  Grid1D g(0.0, 12.0, 256);
  Vec f = sample(g, gaussian);
  Vec out = fractional_shift(f, g, 0.0);
  CHECK((out - f).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("fractional_shift_one_cell_equals_index_rotation") {
  Grid1D g(0.0, 12.0, 256);
  Vec f = sample(g, gaussian);
  Vec out = fractional_shift(f, g, g.spacing());
  for (int k = 0; k < g.count; ++k)
    CHECK(std::abs(out[(k + 1) % g.count] - f[k]) <= 1e-12);
}

TEST_CASE("fractional_shift_round_trip") {
  Grid1D g(0.0, 12.0, 256);
  Vec f = sample(g, gaussian);
  Vec out = fractional_shift(fractional_shift(f, g, 0.3), g, -0.3);
  CHECK((out - f).cwiseAbs().maxCoeff() <= 1e-10);
}

TEST_CASE("fractional_shift_matches_analytic_translate") {
  Grid1D g(0.0, 12.0, 256);
  Vec f = sample(g, gaussian);
  const double s = 0.7123;
  Vec out = fractional_shift(f, g, s);
  for (int k = 0; k < g.count; ++k) {
    const double q = g.point(k);
    CHECK(std::abs(out[k] - gaussian(q - s)) <= 1e-10);
  }
}

TEST_CASE("fractional_shift_rejects_shift_beyond_window") {
  Grid1D g(0.0, 12.0, 256);
  Vec f = sample(g, gaussian);
  CHECK_THROWS_AS(fractional_shift(f, g, 12.5), std::domain_error);
}

TEST_CASE("chirp_transform_matches_direct_sum") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> U(-1.0, 1.0);
  const int M = 37, K = 53;
  Vec x(M);
  for (int m = 0; m < M; ++m) x[m] = cplx(U(rng), U(rng));
  const double phi = 0.7391;
  Vec X = chirp_transform(x, phi, K);
  for (int k = 0; k < K; ++k) {
    cplx direct{};
    for (int m = 0; m < M; ++m) direct += x[m] * std::exp(cplx(0.0, phi * m * k));
    CHECK(std::abs(X[k] - direct) <= 1e-11);
  }
}

TEST_CASE("quad_2d_gaussian_integral_is_pi") {
  Grid2D w{Grid1D(0.0, 6.0, 256), Grid1D(0.0, 6.0, 256)};
  cplx v = quad_2d([](double q, double p) { return cplx(std::exp(-q * q - p * p), 0.0); }, w);
  CHECK(std::abs(v - cplx(M_PI, 0.0)) / M_PI <= 1e-8);
}

TEST_CASE("quad_2d_odd_integrand_vanishes") {
  Grid2D w{Grid1D(0.0, 6.0, 128), Grid1D(0.0, 6.0, 128)};
  cplx v = quad_2d([](double q, double p) { return cplx(q * std::exp(-q * q - p * p), 0.0); }, w);
  CHECK(std::abs(v) <= 1e-12);
}

TEST_CASE("quad_2d_weighted_gaussian_mu_2") {
  Grid2D w{Grid1D(0.0, 6.0, 256), Grid1D(0.0, 6.0, 256)};
  cplx v = quad_2d([](double q, double p) { return cplx(std::exp(-(q * q + p * p)), 0.0); }, w);
  CHECK(std::abs(v - cplx(M_PI, 0.0)) <= 1e-8 * M_PI);
}

TEST_CASE("quad_2d_conjugation_equivariance") {
  Grid2D w{Grid1D(0.0, 5.0, 64), Grid1D(0.0, 5.0, 64)};
  auto F = [](double q, double p) { return std::exp(cplx(-q * q - p * p, q - p)); };
  cplx a = quad_2d(F, w);
  cplx b = quad_2d([&F](double q, double p) { return std::conj(F(q, p)); }, w);
  CHECK(std::abs(std::conj(a) - b) == 0.0);
}

TEST_CASE("quad_2d_rejects_non_finite_samples") {
  Grid2D w{Grid1D(0.0, 5.0, 16), Grid1D(0.0, 5.0, 16)};
  CHECK_THROWS_AS(quad_2d([](double q, double) { return cplx(1.0 / (q - q), 0.0); }, w),
                  std::runtime_error);
}

TEST_CASE("hermite_fn_ground_state_is_positive_gaussian") {
  for (double q = -4.0; q <= 4.0; q += 0.5) CHECK(hermite_fn(0, q, 1.0) > 0.0);
  CHECK(hermite_fn(0, 0.0, 1.0) == doctest::Approx(std::pow(M_PI, -0.25)).epsilon(1e-14));
}

TEST_CASE("hermite_fn_first_excited_vanishes_at_origin") {
  CHECK(hermite_fn(1, 0.0, 1.0) == 0.0);
}

TEST_CASE("hermite_fn_grid_norm_is_one") {
  Grid1D g(0.0, 12.0, 512);
  double s = 0.0;
  for (int k = 0; k < g.count; ++k) {
    const double v = hermite_fn(5, g.point(k), 1.0);
    s += v * v;
  }
  s *= g.spacing();
  CHECK(std::abs(s - 1.0) <= 1e-10);
}

TEST_CASE("hermite_fn_orthogonality_on_grid") {
  Grid1D g(0.0, 12.0, 512);
  double s = 0.0;
  for (int k = 0; k < g.count; ++k)
    s += hermite_fn(2, g.point(k), 1.0) * hermite_fn(6, g.point(k), 1.0);
  CHECK(std::abs(s * g.spacing()) <= 1e-10);
}

TEST_CASE("hermite_fn_rejects_unsupported_orders") {
  CHECK_THROWS_AS(hermite_fn(65, 0.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(hermite_fn(-1, 0.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(hermite_fn(0, 0.0, 0.0), std::invalid_argument);
}

TEST_CASE("operator_norm_identity_is_one") {
  Mat I = Mat::Identity(64, 64);
  CHECK(operator_norm(I) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("operator_norm_diagonal_picks_largest_modulus") {
  Mat D = Mat::Zero(2, 2);
  D(0, 0) = cplx(3.0, 0.0);
  D(1, 1) = cplx(0.0, -4.0);
  CHECK(operator_norm(D) == doctest::Approx(4.0).epsilon(1e-10));
}

TEST_CASE("operator_norm_scales_homogeneously") {
  std::mt19937 rng(13);
  std::uniform_real_distribution<double> U(-1.0, 1.0);
  Mat A(16, 16);
  for (int i = 0; i < 16; ++i)
    for (int j = 0; j < 16; ++j) A(i, j) = cplx(U(rng), U(rng));
  const double base = operator_norm(A);
  const double scaled = operator_norm(Mat(cplx(0.0, 2.5) * A));
  CHECK(std::abs(scaled - 2.5 * base) <= 1e-10 * base);
}

TEST_CASE("pairwise_sum_is_order_deterministic") {
  std::mt19937 rng(99);
  std::uniform_real_distribution<double> U(-1.0, 1.0);
  std::vector<double> xs(10000);
  for (double& x : xs) x = U(rng);
  const double a = pairwise_sum(xs);
  const double b = pairwise_sum(xs);
  CHECK(a == b);
  double plain = 0.0;
  for (double x : xs) plain += x;
  CHECK(std::abs(a - plain) <= 1e-9);
}
