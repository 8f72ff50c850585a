#include "moyaltorus/bargmann.hpp"

#include <cmath>

namespace moyaltorus {

Mat finite_intertwiner(const FiniteRep& rho, const FiniteRep& rho_prime, const Vec& eta,
                       const Vec& eta_prime) {
  if (rho.matrices.size() != rho_prime.matrices.size())
    throw std::invalid_argument("finite_intertwiner: group size mismatch");
  if (rho.dimension() != eta.size() || rho_prime.dimension() != eta_prime.size())
    throw std::invalid_argument("finite_intertwiner: dimension mismatch");
  Mat T = Mat::Zero(rho_prime.dimension(), rho.dimension());
  for (size_t g = 0; g < rho.matrices.size(); ++g)
    T += (rho_prime.matrices[g] * eta_prime) * (rho.matrices[g] * eta).adjoint();
  return T;
}

FockVector intertwiner_apply(const PositionWavefunction& u, const BargmannConfig& cfg) {
  cfg.validate();
  const QuantizationParams params = QuantizationParams::from_mu(cfg.mu);
  const PositionWavefunction mother = PositionWavefunction::from_function(
      [&cfg](double q) { return std::exp(-cfg.alpha * q * q); }, u.grid);
  const FockVector vac = FockVector::vacuum(cfg.mu);

  const int M = cfg.v_count;
  const double h = 2.0 * cfg.radius / M;
  Vec coeffs = Vec::Zero(FockVector::kMaxDegree + 1);
  for (int i = 0; i < M; ++i) {
    const double vq = -cfg.radius + (i + 0.5) * h;
    for (int j = 0; j < M; ++j) {
      const double vp = -cfg.radius + (j + 0.5) * h;
      const GroupElement v(vq, vp, 0.0);
      const cplx weight = inner(u_kw(v, mother, params), u) * (h * h);
      const FockVector phi_v = u_bf_truncated(v, vac, params, FockVector::kMaxDegree);
      coeffs.head(phi_v.coeffs.size()) += weight * phi_v.coeffs;
    }
  }
  return FockVector(cfg.mu, std::move(coeffs));
}

FockVector intertwiner_kernel(const PositionWavefunction& u, const BargmannConfig& cfg) {
  cfg.validate();
  const double mu = cfg.mu;
  const int D = FockVector::kMaxDegree + 40;
  const double h = u.grid.spacing();

  // I_m = Int q^m e^{-(mu/2) q^2} u(q) dq on the position grid. Track the
  // absolute-value sums too: near-symmetric integrands cancel down to the
  // rounding floor of that sum, and the resulting noise moments would be
  // amplified without bound by the factorially growing Fock weights.
  std::vector<cplx> I(D + 1, cplx{});
  std::vector<double> I_abs(D + 1, 0.0);
  for (int k = 0; k < u.grid.count; ++k) {
    const double q = u.grid.point(k);
    cplx base = h * std::exp(-0.5 * mu * q * q) * u.samples[k];
    for (int m = 0; m <= D; ++m) {
      I[m] += base;
      I_abs[m] += std::abs(base);
      base *= q;
    }
  }

  // series of e^{mu Z1 q0}: s_m = mu^m / m! I_m, then multiply by e^{-mu Z1^2/4}
  const double constant =
      std::sqrt(4.0 * M_PI / mu) * std::sqrt(M_PI / (cfg.alpha + 0.5 * mu));
  Vec res = Vec::Zero(D + 1);
  std::vector<double> max_term(D + 1, 0.0);
  std::vector<double> floor_term(D + 1, 0.0);
  double et = 1.0;  // (mu/4)^t / t!, with alternating sign applied below
  for (int t = 0; 2 * t <= D; ++t) {
    if (t > 0) et *= 0.25 * mu / t;
    const double sgn = (t % 2 == 0) ? 1.0 : -1.0;
    double em = 1.0;  // mu^m / m!
    for (int m = 0; 2 * t + m <= D; ++m) {
      if (m > 0) em *= mu / m;
      const cplx term = constant * sgn * et * em * I[m];
      res[2 * t + m] += term;
      max_term[2 * t + m] = std::max(max_term[2 * t + m], std::abs(term));
      floor_term[2 * t + m] += constant * et * em * 1e-15 * I_abs[m];
    }
  }
  // Coefficients below the rounding floor of either the moment sums or the
  // alternating series carry no information; zero them so the factorially
  // growing weights cannot blow their noise up.
  for (int r = 0; r <= D; ++r)
    if (std::abs(res[r]) <= 1e-13 * max_term[r] || std::abs(res[r]) <= 10.0 * floor_term[r])
      res[r] = cplx{};
  // weighted-tail guard mirroring the quadrature route's truncation
  long double total = 0.0L, tail = 0.0L;
  for (int r = 0; r <= D; ++r) {
    const long double m = fock_weight(r, mu) * std::norm(res[r]);
    total += m;
    if (r > FockVector::kMaxDegree) tail += m;
  }
  if (total > 0.0L && std::sqrt(static_cast<double>(tail / total)) > 1e-6)
    throw std::runtime_error("intertwiner_kernel: truncation overflow");
  return FockVector(mu, res.head(FockVector::kMaxDegree + 1));
}

}  // namespace moyaltorus
