#pragma once

#include <Eigen/Dense>
#include <complex>

#include "grid.hpp"

namespace moyaltorus {

using cplx = std::complex<double>;
using Vec = Eigen::VectorXcd;
using Mat = Eigen::MatrixXcd;

// Unnormalized DFT: X_k = sum_j x_j e^{-2pi i jk/N}.
Vec fft_forward(const Vec& x);
// Inverse with 1/N normalization.
Vec fft_backward(const Vec& X);

// Angular frequency of bin k on a grid with spacing h: 2*pi*fftfreq.
double fft_omega(int k, int N, double h);

// Bandlimited periodic translate q -> f(q - s). Integer multiples of the
// grid spacing reduce to an exact index rotation.
Vec fractional_shift(const Vec& f, const Grid1D& grid, double s);

// Arbitrary-rate discrete transform X_k = sum_m x_m e^{i phi m k}, k < K,
// evaluated with Bluestein's chirp factorization in O((M+K) log(M+K)).
Vec chirp_transform(const Vec& x, double phi, int K);

}  // namespace moyaltorus
