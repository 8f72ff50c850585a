#pragma once

#include <functional>

#include "fft.hpp"
#include "heisenberg.hpp"
#include "moyal.hpp"
#include "nctorus.hpp"
#include "params.hpp"

namespace moyaltorus {

// Polarized section phi_f(z) = e^{-mu |z|^2 / 4} f(z) with f entire,
// represented by the monomial coefficients of f up to degree <= 128.
struct FockVector {
  double mu = 1.0;
  Vec coeffs;  // c_0 .. c_K

  static constexpr int kMaxDegree = 128;

  FockVector() : coeffs(Vec::Zero(1)) {}
  FockVector(double mu_, Vec c) : mu(mu_), coeffs(std::move(c)) {
    if (!(mu > 0.0)) throw std::invalid_argument("FockVector: mu must be positive");
    if (coeffs.size() < 1 || coeffs.size() > kMaxDegree + 1)
      throw std::invalid_argument("FockVector: degree out of range");
  }
  static FockVector vacuum(double mu) { return FockVector(mu, Vec::Ones(1)); }
  static FockVector basis(double mu, int k) {
    Vec c = Vec::Zero(k + 1);
    c[k] = 1.0;
    return FockVector(mu, std::move(c));
  }

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  cplx entire_at(cplx z) const;  // f(z)
  cplx value_at(cplx z) const;   // e^{-mu|z|^2/4} f(z)
};

// Monomial weight w_k = <z^k, z^k> = 2 pi k! 2^k / mu^{k+1}.
long double fock_weight(int k, double mu);

cplx inner(const FockVector& phi, const FockVector& psi);
double norm(const FockVector& phi);
FockVector operator+(const FockVector& phi, const FockVector& psi);
FockVector operator*(cplx c, const FockVector& phi);

// U_BF(g) phi~(Z0) = e^{i mu (z + Im(conj(Z) Z0)/2)} phi~(Z0 - Z), Z = q + ip.
// Throws on truncation overflow (weighted tail beyond degree 128 above 1e-8).
FockVector u_bf(const GroupElement& g, const FockVector& phi, const QuantizationParams& params);

// Same action truncated at max_degree without the tail guard; callers that
// integrate against decaying weights handle the tail themselves.
FockVector u_bf_truncated(const GroupElement& g, const FockVector& phi,
                          const QuantizationParams& params, int max_degree);

// BF_mu(Z) phi~(Z0) = e^{i mu Im(conj(Z) Z0)} phi~(2Z - Z0).
FockVector bf_point(cplx Z, const FockVector& phi, const QuantizationParams& params);

// Square quadrature window [-radius, radius]^2 with count points per axis.
struct FockWindow {
  double radius = 10.0;
  int count = 128;
};

// BF_mu(F) phi: entire part g(Z0) = (mu/pi) Int F(W) e^{-mu|W|^2}
// e^{mu conj(W) Z0} f(2W - Z0) dW; F == 1 is the identity at mu = 1.
FockVector bf_symbol(const std::function<cplx(cplx)>& F, const FockVector& phi,
                     const QuantizationParams& params, const FockWindow& window = {});
FockVector bf_symbol(const SymbolSum& F, const FockVector& phi,
                     const QuantizationParams& params, const FockWindow& window = {});

// Closed form of BF_1(F_X) with F_X(Z) = e^{i alpha Im(conj(Z) X)}:
// e^{(i alpha / 2) Im(conj(Z0) X)} phi~(Z0 + alpha X), valid at mu = 1.
FockVector bf_plane_wave_closed_form(cplx X, double alpha, const FockVector& phi,
                                     const QuantizationParams& params);

// F_C(phi~)(Z0) = C Int e^{(i/2) Im(conj(Z) Z0)} phi~(Z) dZ with C = 1/(4 pi);
// identity on polarized sections at mu = 1.
FockVector fourier_C(const FockVector& phi, const QuantizationParams& params,
                     const FockWindow& window = {});

// bf_symbol(to_symbol(A), phi): the torus acting on Fock space.
FockVector torus_action(const TorusElement& A, const FockVector& phi,
                        const QuantizationParams& params, const FockWindow& window = {});

}  // namespace moyaltorus
