#include "moyaltorus/linalg.hpp"

#include <cmath>
#include <cstdint>

namespace moyaltorus {

namespace {

// splitmix64: deterministic, seed-stable start vector filler
double unit_rand(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  z = z ^ (z >> 31);
  return static_cast<double>(z >> 11) / 9007199254740992.0 - 0.5;
}

}  // namespace

double operator_norm(const Mat& A, double rel_tol, int max_iter) {
  if (A.rows() != A.cols()) throw std::invalid_argument("operator_norm: matrix must be square");
  const int n = static_cast<int>(A.rows());
  if (n == 0) return 0.0;

  const Mat B = A.adjoint() * A;

  std::uint64_t seed = 0x6d6f79616cull;
  Vec v(n);
  for (int i = 0; i < n; ++i) v[i] = cplx(unit_rand(seed), unit_rand(seed));
  v /= v.norm();

  double est = 0.0;
  for (int it = 0; it < max_iter; ++it) {
    Vec w = B * v;
    const double lambda = w.norm();
    if (lambda == 0.0) return 0.0;
    const double sigma = std::sqrt(lambda);
    if (it > 0 && std::abs(sigma - est) <= rel_tol * sigma) return sigma;
    est = sigma;
    v = w / lambda;
  }

  // Band-edge spectra (the torus norm estimates) cluster the top singular
  // values and stall the iteration; fall back to a dense eigensolve.
  Eigen::SelfAdjointEigenSolver<Mat> es(B, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success)
    throw ConvergenceError("operator_norm: power iteration and eigensolver both failed", v, est);
  const double lambda = es.eigenvalues().maxCoeff();
  return lambda > 0.0 ? std::sqrt(lambda) : 0.0;
}

}  // namespace moyaltorus
