#pragma once

#include <Eigen/Dense>
#include <stdexcept>

#include "fft.hpp"

namespace moyaltorus {

struct ConvergenceError : std::runtime_error {
  Vec last_iterate;
  double last_estimate;
  ConvergenceError(const char* what, Vec v, double est)
      : std::runtime_error(what), last_iterate(std::move(v)), last_estimate(est) {}
};

// Largest singular value of A: power iteration on A^* A with a deterministic
// start vector; clustered band-edge spectra that stall the iteration fall
// back to a dense self-adjoint eigensolve.
double operator_norm(const Mat& A, double rel_tol = 1e-10, int max_iter = 2000);

}  // namespace moyaltorus
