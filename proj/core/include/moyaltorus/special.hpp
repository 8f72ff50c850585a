#pragma once

#include <complex>
#include <functional>

#include "grid.hpp"
#include "summation.hpp"

namespace moyaltorus {

// k-th L2-normalized Hermite function with width parameter `scale`:
//   psi_k(q) = (scale * 2^k k! sqrt(pi))^{-1/2} H_k(q/scale) e^{-q^2/(2 scale^2)}.
// Stable normalized three-term recurrence; k <= 64.
double hermite_fn(int k, double q, double scale);

// Tensor trapezoidal quadrature of F over the periodic window (equal-weight
// rule on the half-open grids; exact-to-tails for decaying integrands).
// Summation is deterministic pairwise.
std::complex<double> quad_2d(const std::function<std::complex<double>(double, double)>& F,
                             const Grid2D& window);

}  // namespace moyaltorus
