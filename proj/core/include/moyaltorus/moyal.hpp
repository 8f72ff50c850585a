#pragma once

#include <complex>
#include <map>
#include <utility>
#include <vector>

#include "params.hpp"

namespace moyaltorus {

// Phase-space plane wave amp * e^{i Omega(a, v)}, v = (q, p).
struct PlaneWave {
  std::complex<double> amp{1.0, 0.0};
  double a_q = 0.0;
  double a_p = 0.0;

  std::complex<double> value(double q, double p) const {
    const double phase = a_q * p - a_p * q;  // Omega(a, v)
    return amp * std::complex<double>(std::cos(phase), std::sin(phase));
  }
};

// Finite complex span of plane waves, canonicalized: frequencies within
// 1e-12 are merged, zero-amplitude terms dropped.
struct SymbolSum {
  std::vector<PlaneWave> terms;

  SymbolSum() = default;
  explicit SymbolSum(std::vector<PlaneWave> t) : terms(std::move(t)) { canonicalize(); }
  static SymbolSum constant(std::complex<double> c) { return SymbolSum({PlaneWave{c, 0.0, 0.0}}); }
  static SymbolSum plane_wave(std::complex<double> amp, double a_q, double a_p) {
    return SymbolSum({PlaneWave{amp, a_q, a_p}});
  }

  void canonicalize();
  std::complex<double> value(double q, double p) const;
  bool empty() const { return terms.empty(); }
};

static constexpr double kFrequencyMergeTol = 1e-12;

// Global orientation sign of the Moyal phase, pinned by U star V = e^{i theta} V star U.
static constexpr double kStarSign = 1.0;

// Bilinear extension of
//   e^{iOmega(a,.)} star e^{iOmega(b,.)} = e^{(i theta/2) s Omega(a,b)} e^{iOmega(a+b,.)}.
SymbolSum star_planewave(const SymbolSum& F, const SymbolSum& G, const QuantizationParams& params);

SymbolSum operator+(const SymbolSum& F, const SymbolSum& G);
SymbolSum operator*(std::complex<double> c, const SymbolSum& F);
SymbolSum conj(const SymbolSum& F);

// Distance in the canonical coefficient representation (matched by frequency).
double symbol_distance(const SymbolSum& F, const SymbolSum& G);

// Polynomial symbol sum c_{ij} q^i p^j with finite support.
struct PolynomialSymbol {
  std::map<std::pair<int, int>, std::complex<double>> coeffs;

  PolynomialSymbol() = default;
  static PolynomialSymbol monomial(int i, int j, std::complex<double> c = 1.0) {
    PolynomialSymbol P;
    if (i < 0 || j < 0) throw std::invalid_argument("PolynomialSymbol: negative exponent");
    P.coeffs[{i, j}] = c;
    return P;
  }
  static PolynomialSymbol coordinate_q() { return monomial(1, 0); }
  static PolynomialSymbol coordinate_p() { return monomial(0, 1); }

  void prune(double tol = 0.0);
  int total_degree() const;
  std::complex<double> value(double q, double p) const;
  PolynomialSymbol derivative_q() const;
  PolynomialSymbol derivative_p() const;
};

PolynomialSymbol operator+(const PolynomialSymbol& P, const PolynomialSymbol& Q);
PolynomialSymbol operator-(const PolynomialSymbol& P, const PolynomialSymbol& Q);
PolynomialSymbol operator*(std::complex<double> c, const PolynomialSymbol& P);
PolynomialSymbol operator*(const PolynomialSymbol& P, const PolynomialSymbol& Q);

// Terminating Moyal series sum_k (1/k!)(theta/2i)^k P_k(P, Q) with
// P_k the k-th power of the Poisson bidifferential d_q (x) d_p - d_p (x) d_q.
PolynomialSymbol star_poly(const PolynomialSymbol& P, const PolynomialSymbol& Q,
                           const QuantizationParams& params);

}  // namespace moyaltorus
