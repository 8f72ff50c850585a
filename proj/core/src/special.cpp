#include "moyaltorus/special.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace moyaltorus {

double hermite_fn(int k, double q, double scale) {
  if (k < 0) throw std::invalid_argument("hermite_fn: order must be nonnegative");
  if (k > 64) throw std::invalid_argument("hermite_fn: unsupported order " + std::to_string(k) +
                                          " (max 64)");
  if (!(scale > 0.0)) throw std::invalid_argument("hermite_fn: scale must be positive");
  const double x = q / scale;
  const double g = std::exp(-0.5 * x * x);
  double prev = 0.0;
  double cur = std::pow(M_PI, -0.25) / std::sqrt(scale) * g;
  for (int j = 1; j <= k; ++j) {
    const double next = std::sqrt(2.0 / j) * x * cur - std::sqrt((j - 1.0) / j) * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

std::complex<double> quad_2d(const std::function<std::complex<double>(double, double)>& F,
                             const Grid2D& window) {
  const Grid1D& gq = window.axis_q;
  const Grid1D& gp = window.axis_p;
  const double w = gq.spacing() * gp.spacing();
  std::vector<std::complex<double>> vals;
  vals.reserve(static_cast<size_t>(gq.count) * gp.count);
  for (int i = 0; i < gq.count; ++i) {
    const double q = gq.point(i);
    for (int j = 0; j < gp.count; ++j) {
      const double p = gp.point(j);
      const std::complex<double> v = F(q, p);
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
        throw std::runtime_error("quad_2d: non-finite sample at (q,p)=(" + std::to_string(q) +
                                 "," + std::to_string(p) + ")");
      vals.push_back(v);
    }
  }
  return w * pairwise_sum(vals);
}

}  // namespace moyaltorus
