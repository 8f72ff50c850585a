#pragma once

#include <stdexcept>

namespace moyaltorus {

// Orbit parameter mu and deformation parameter theta, tied by theta = 1/mu.
struct QuantizationParams {
  double mu;
  double theta;
  int n = 1;

  static QuantizationParams from_mu(double mu, int n = 1) {
    if (mu == 0.0) throw std::invalid_argument("QuantizationParams: mu must be nonzero");
    if (n < 1) throw std::invalid_argument("QuantizationParams: n must be positive");
    return QuantizationParams{mu, 1.0 / mu, n};
  }
  static QuantizationParams from_theta(double theta, int n = 1) {
    if (theta == 0.0) throw std::invalid_argument("QuantizationParams: theta must be nonzero");
    if (n < 1) throw std::invalid_argument("QuantizationParams: n must be positive");
    return QuantizationParams{1.0 / theta, theta, n};
  }

  void require_n1(const char* who) const {
    if (n != 1) throw std::invalid_argument(std::string(who) + ": requires n = 1");
  }
};

}  // namespace moyaltorus
