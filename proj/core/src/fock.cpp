#include "moyaltorus/fock.hpp"

#include <cmath>
#include <vector>

namespace moyaltorus {

namespace {

using cplxl = std::complex<long double>;

cplx unit_phase(double arg) { return cplx(std::cos(arg), std::sin(arg)); }

// Coefficients (degree 0..D) of prefactor * e^{c Z} * f(a Z + b).
Vec gaussian_action(cplx prefactor, cplx c, cplx a, cplx b, const Vec& f, int D) {
  const int K = static_cast<int>(f.size()) - 1;
  // g = f(a Z + b) via binomial re-expansion
  std::vector<cplxl> g(K + 1, cplxl{});
  for (int t = 0; t <= K; ++t) {
    cplxl binom = 1.0L;  // C(k, t) b^{k-t}, built incrementally in k
    cplxl at = std::pow(cplxl(a), t);
    cplxl acc{};
    cplxl bpow = 1.0L;
    for (int k = t; k <= K; ++k) {
      // C(k, t) = C(k-1, t) * k / (k - t)
      if (k > t) binom *= static_cast<long double>(k) / (k - t);
      acc += cplxl(f[k]) * binom * bpow;
      bpow *= cplxl(b);
    }
    g[t] = at * acc;
  }
  // convolve with the exponential series e^{cZ}
  Vec out = Vec::Zero(D + 1);
  cplxl ej = 1.0L;  // c^j / j!
  for (int j = 0; j <= D; ++j) {
    if (j > 0) ej *= cplxl(c) / static_cast<long double>(j);
    for (int t = 0; t <= K && j + t <= D; ++t) {
      const cplxl v = cplxl(prefactor) * ej * g[t];
      out[j + t] += cplx(static_cast<double>(v.real()), static_cast<double>(v.imag()));
    }
  }
  return out;
}

// Trim to degree <= kMaxDegree; throw if the weighted mass beyond the cut
// exceeds tol (relative, in norm).
Vec enforce_truncation(const Vec& coeffs, double mu, double tol, const char* who) {
  const int D = static_cast<int>(coeffs.size()) - 1;
  long double total = 0.0L, tail = 0.0L;
  for (int k = 0; k <= D; ++k) {
    const long double m = fock_weight(k, mu) * std::norm(coeffs[k]);
    total += m;
    if (k > FockVector::kMaxDegree) tail += m;
  }
  if (total > 0.0L && std::sqrt(static_cast<double>(tail / total)) > tol)
    throw std::runtime_error(std::string(who) + ": truncation overflow (tail beyond max degree)");
  const int K = std::min(D, FockVector::kMaxDegree);
  return coeffs.head(K + 1);
}

void require_same_mu(double a, double b, const char* who) {
  if (std::abs(a - b) > 1e-14) throw std::invalid_argument(std::string(who) + ": mu mismatch");
}

// Largest degree worth keeping: coefficients whose cumulative weighted mass is
// below 1e-12 (relative, in norm) cannot change any result at working
// precision, but the factorially growing re-expansion terms they multiply
// would amplify their rounding noise.
Vec prune_tail(const Vec& coeffs, double mu) {
  int K = static_cast<int>(coeffs.size()) - 1;
  long double total = 0.0L;
  for (int k = 0; k <= K; ++k) total += fock_weight(k, mu) * std::norm(coeffs[k]);
  const long double budget = 1e-24L * total;
  long double tail = 0.0L;
  while (K > 0 && tail + fock_weight(K, mu) * std::norm(coeffs[K]) <= budget) {
    tail += fock_weight(K, mu) * std::norm(coeffs[K]);
    --K;
  }
  return coeffs.head(K + 1);
}

}  // namespace

cplx FockVector::entire_at(cplx z) const {
  cplx s{};
  for (int k = degree(); k >= 0; --k) s = s * z + coeffs[k];
  return s;
}

cplx FockVector::value_at(cplx z) const {
  return std::exp(-0.25 * mu * std::norm(z)) * entire_at(z);
}

long double fock_weight(int k, double mu) {
  long double w = 2.0L * static_cast<long double>(M_PI) / mu;
  for (int j = 1; j <= k; ++j) w *= 2.0L * j / mu;
  return w;
}

cplx inner(const FockVector& phi, const FockVector& psi) {
  require_same_mu(phi.mu, psi.mu, "inner");
  const int K = std::min(phi.degree(), psi.degree());
  cplxl s{};
  for (int k = 0; k <= K; ++k)
    s += fock_weight(k, phi.mu) * cplxl(std::conj(phi.coeffs[k]) * psi.coeffs[k]);
  return cplx(static_cast<double>(s.real()), static_cast<double>(s.imag()));
}

double norm(const FockVector& phi) {
  long double s = 0.0L;
  for (int k = 0; k <= phi.degree(); ++k)
    s += fock_weight(k, phi.mu) * std::norm(phi.coeffs[k]);
  return std::sqrt(static_cast<double>(s));
}

FockVector operator+(const FockVector& phi, const FockVector& psi) {
  require_same_mu(phi.mu, psi.mu, "operator+");
  Vec c = Vec::Zero(std::max(phi.coeffs.size(), psi.coeffs.size()));
  c.head(phi.coeffs.size()) += phi.coeffs;
  c.head(psi.coeffs.size()) += psi.coeffs;
  return FockVector(phi.mu, std::move(c));
}

FockVector operator*(cplx c, const FockVector& phi) { return FockVector(phi.mu, c * phi.coeffs); }

FockVector u_bf_truncated(const GroupElement& g, const FockVector& phi,
                          const QuantizationParams& params, int max_degree) {
  params.require_n1("u_bf");
  if (g.n() != 1) throw std::invalid_argument("u_bf: requires n = 1");
  require_same_mu(phi.mu, params.mu, "u_bf");
  const double mu = params.mu;
  const cplx Z(g.q[0], g.p[0]);
  const cplx pre = std::exp(cplx(-0.25 * mu * std::norm(Z), mu * g.z));
  Vec c = gaussian_action(pre, 0.5 * mu * std::conj(Z), 1.0, -Z, prune_tail(phi.coeffs, mu),
                          max_degree);
  return FockVector(phi.mu, c.head(std::min<int>(max_degree, FockVector::kMaxDegree) + 1));
}

FockVector u_bf(const GroupElement& g, const FockVector& phi, const QuantizationParams& params) {
  params.require_n1("u_bf");
  if (g.n() != 1) throw std::invalid_argument("u_bf: requires n = 1");
  require_same_mu(phi.mu, params.mu, "u_bf");
  const double mu = params.mu;
  const cplx Z(g.q[0], g.p[0]);
  const cplx pre = std::exp(cplx(-0.25 * mu * std::norm(Z), mu * g.z));
  Vec c = gaussian_action(pre, 0.5 * mu * std::conj(Z), 1.0, -Z, prune_tail(phi.coeffs, mu),
                          FockVector::kMaxDegree + 40);
  return FockVector(phi.mu, enforce_truncation(c, phi.mu, 1e-8, "u_bf"));
}

FockVector bf_point(cplx Z, const FockVector& phi, const QuantizationParams& params) {
  params.require_n1("bf_point");
  require_same_mu(phi.mu, params.mu, "bf_point");
  const double mu = params.mu;
  const cplx pre = std::exp(cplx(-mu * std::norm(Z), 0.0));
  Vec c = gaussian_action(pre, mu * std::conj(Z), -1.0, 2.0 * Z, prune_tail(phi.coeffs, mu),
                          FockVector::kMaxDegree + 40);
  return FockVector(phi.mu, enforce_truncation(c, phi.mu, 1e-8, "bf_point"));
}

FockVector bf_symbol(const std::function<cplx(cplx)>& F, const FockVector& phi,
                     const QuantizationParams& params, const FockWindow& window) {
  params.require_n1("bf_symbol");
  require_same_mu(phi.mu, params.mu, "bf_symbol");
  const double mu = params.mu;
  const double R = window.radius;
  if (mu * R * R < 20.0)
    throw std::invalid_argument("bf_symbol: window too small for the Gaussian weight");
  const int G = window.count;
  // High-degree coefficients whose weighted mass is negligible cannot change
  // the result, but the moment integrals they multiply grow factorially and
  // would amplify their rounding noise; drop them up front.
  const Vec c_in = prune_tail(phi.coeffs, mu);
  const int K = static_cast<int>(c_in.size()) - 1;
  const int D = FockVector::kMaxDegree;
  const double h = 2.0 * R / G;

  // Moments M_{j,m} = Int F(W) e^{-mu |W|^2} conj(W)^j W^m dA(W), j <= D, m <= K.
  // M_abs tracks the absolute-value sums: oscillatory integrands cancel down
  // to the rounding floor of that sum, so |M| alone cannot reveal when a
  // moment is pure quadrature noise.
  Mat M = Mat::Zero(D + 1, K + 1);
  Eigen::MatrixXd M_abs = Eigen::MatrixXd::Zero(D + 1, K + 1);
  std::vector<cplx> base(static_cast<size_t>(G) * G);
  std::vector<cplx> w(static_cast<size_t>(G) * G);
  for (int i = 0; i < G; ++i) {
    const double x = -R + (i + 0.5) * h;
    for (int j = 0; j < G; ++j) {
      const double y = -R + (j + 0.5) * h;
      const cplx W(x, y);
      base[static_cast<size_t>(i) * G + j] =
          F(W) * std::exp(-mu * std::norm(W)) * (h * h);
      w[static_cast<size_t>(i) * G + j] = W;
    }
  }
  std::vector<cplx> rowv = base;  // base * conj(W)^j, updated per j
  for (int j = 0; j <= D; ++j) {
    if (j > 0)
      for (size_t t = 0; t < rowv.size(); ++t) rowv[t] *= std::conj(w[t]);
    std::vector<cplx> cell = rowv;  // * W^m, updated per m
    for (int m = 0; m <= K; ++m) {
      if (m > 0)
        for (size_t t = 0; t < cell.size(); ++t) cell[t] *= w[t];
      cplx s{};
      double sa = 0.0;
      for (const cplx& v : cell) {
        s += v;
        sa += std::abs(v);
      }
      M(j, m) = s;
      M_abs(j, m) = sa;
    }
  }

  // res_r = (mu/pi) sum_{j+t=r} (mu^j / j!) (-1)^t sum_k c_k C(k,t) 2^{k-t} M_{j,k-t}
  // The series is alternating and the moments grow fast: high-degree
  // coefficients cancel down to the rounding floor of the partial sums, and
  // the factorially growing weights would amplify that noise without bound.
  // Track the cancellation floor and zero coefficients below it.
  Vec res = Vec::Zero(D + 1);
  std::vector<double> max_term(D + 1, 0.0);
  std::vector<double> floor_term(D + 1, 0.0);
  const Vec& c = c_in;
  double ej = 1.0;  // mu^j / j!
  for (int j = 0; j <= D; ++j) {
    if (j > 0) ej *= mu / j;
    for (int t = 0; j + t <= D && t <= K; ++t) {
      cplx s{};
      double s_abs = 0.0;
      double binom = 1.0;  // C(k, t) 2^{k-t}
      for (int k = t; k <= K; ++k) {
        if (k > t) binom *= 2.0 * k / (k - t);
        s += c[k] * binom * M(j, k - t);
        s_abs += std::abs(c[k]) * binom * M_abs(j, k - t);
      }
      const double sgn = (t % 2 == 0) ? 1.0 : -1.0;
      const cplx term = (mu / M_PI) * ej * sgn * s;
      res[j + t] += term;
      max_term[j + t] = std::max(max_term[j + t], std::abs(term));
      floor_term[j + t] += (mu / M_PI) * ej * 1e-15 * s_abs;
    }
  }
  for (int r = 0; r <= D; ++r)
    if (std::abs(res[r]) <= 1e-13 * max_term[r] || std::abs(res[r]) <= 10.0 * floor_term[r])
      res[r] = cplx{};
  return FockVector(phi.mu, enforce_truncation(res, phi.mu, 1e-6, "bf_symbol"));
}

FockVector bf_symbol(const SymbolSum& F, const FockVector& phi, const QuantizationParams& params,
                     const FockWindow& window) {
  return bf_symbol([&F](cplx W) { return F.value(W.real(), W.imag()); }, phi, params, window);
}

FockVector bf_plane_wave_closed_form(cplx X, double alpha, const FockVector& phi,
                                     const QuantizationParams& params) {
  params.require_n1("bf_plane_wave_closed_form");
  require_same_mu(phi.mu, params.mu, "bf_plane_wave_closed_form");
  const cplx pre = std::exp(cplx(-0.25 * alpha * alpha * std::norm(X), 0.0));
  Vec c = gaussian_action(pre, -0.5 * alpha * std::conj(X), 1.0, alpha * X,
                          prune_tail(phi.coeffs, params.mu), FockVector::kMaxDegree + 40);
  return FockVector(phi.mu, enforce_truncation(c, phi.mu, 1e-8, "bf_plane_wave_closed_form"));
}

FockVector fourier_C(const FockVector& phi, const QuantizationParams& params,
                     const FockWindow& window) {
  params.require_n1("fourier_C");
  require_same_mu(phi.mu, params.mu, "fourier_C");
  const double mu = params.mu;
  const double R = window.radius;
  if (mu * R * R < 20.0)
    throw std::invalid_argument("fourier_C: window too small for the Gaussian weight");
  const int G = window.count;
  const double h = 2.0 * R / G;
  std::vector<double> axis(G);
  for (int i = 0; i < G; ++i) axis[i] = -R + (i + 0.5) * h;

  Mat samples(G, G);  // (x index, y index)
  for (int i = 0; i < G; ++i)
    for (int j = 0; j < G; ++j) samples(i, j) = phi.value_at(cplx(axis[i], axis[j]));

  // out(u, v) = C Int phi(x, y) e^{(i/2)(x v - y u)} dx dy, separably
  Mat Ev(G, G);  // (v, x)
  Mat Eu(G, G);  // (y, u)
  for (int a = 0; a < G; ++a)
    for (int b = 0; b < G; ++b) {
      Ev(a, b) = unit_phase(0.5 * axis[b] * axis[a]);
      Eu(a, b) = unit_phase(-0.5 * axis[a] * axis[b]);
    }
  const double C = 1.0 / (4.0 * M_PI);
  Mat out = (C * h * h) * (Ev * samples * Eu);  // (v, u)

  // project onto the monomial basis
  const int K = phi.degree();
  Vec coeffs = Vec::Zero(K + 1);
  for (int m = 0; m <= K; ++m) {
    cplxl s{};
    for (int u = 0; u < G; ++u)
      for (int v = 0; v < G; ++v) {
        const cplx W(axis[u], axis[v]);
        s += cplxl(std::pow(std::conj(W), m) * std::exp(-0.25 * mu * std::norm(W)) *
                   out(v, u) * (h * h));
      }
    s /= fock_weight(m, mu);
    coeffs[m] = cplx(static_cast<double>(s.real()), static_cast<double>(s.imag()));
  }
  return FockVector(phi.mu, std::move(coeffs));
}

FockVector torus_action(const TorusElement& A, const FockVector& phi,
                        const QuantizationParams& params, const FockWindow& window) {
  return bf_symbol(to_symbol(A, params), phi, params, window);
}

}  // namespace moyaltorus
