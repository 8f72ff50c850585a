#pragma once

#include <vector>

#include "fock.hpp"
#include "schrodinger.hpp"

namespace moyaltorus {

// Mother-state and quadrature configuration for the position -> Fock
// intertwiner built from u0(q) = e^{-alpha q^2} and the Fock vacuum.
struct BargmannConfig {
  double alpha = 1.5 * M_PI;
  double mu = 2.0 * M_PI;
  double radius = 6.0;  // v-quadrature window [-R, R]^2
  int v_count = 128;    // quadrature points per v axis

  void validate() const {
    if (!(alpha > 0.0) || !(mu > 0.0))
      throw std::invalid_argument("BargmannConfig: alpha and mu must be positive");
    if (!(radius > 0.0) || v_count < 8)
      throw std::invalid_argument("BargmannConfig: bad quadrature window");
    if (alpha * radius * radius < 18.0)
      throw std::invalid_argument("BargmannConfig: window too small for Gaussian tails");
  }
};

// Unitary representation of a finite group, given as the matrix list in a
// fixed enumeration of the elements.
struct FiniteRep {
  std::vector<Mat> matrices;
  int dimension() const {
    return matrices.empty() ? 0 : static_cast<int>(matrices.front().rows());
  }
};

// T = sum_g |rho'(g) eta'><rho(g) eta|; intertwines rho with rho' exactly
// when both lists enumerate the same group in the same order.
Mat finite_intertwiner(const FiniteRep& rho, const FiniteRep& rho_prime, const Vec& eta,
                       const Vec& eta_prime);

// T u = Int <u0_v, u> phi0_v dv with u0_v = U_KW(v) u0, phi0_v = U_BF(v) vacuum.
FockVector intertwiner_apply(const PositionWavefunction& u, const BargmannConfig& cfg);

// Collapsed Gaussian kernel of the same map:
//   f(Z1) = sqrt(4 pi / mu) sqrt(pi / (alpha + mu/2)) e^{-mu Z1^2 / 4}
//           Int e^{mu Z1 q0 - (mu/2) q0^2} u(q0) dq0.
FockVector intertwiner_kernel(const PositionWavefunction& u, const BargmannConfig& cfg);

}  // namespace moyaltorus
