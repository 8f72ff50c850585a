#pragma once

#include <map>
#include <utility>

#include "fft.hpp"
#include "grid.hpp"
#include "moyal.hpp"
#include "params.hpp"

namespace moyaltorus {

// Finitely supported sum c_{mn} U^m V^n (normal order U before V) with
// UV = e^{i theta} VU.
struct TorusElement {
  double theta = 1.0;
  std::map<std::pair<int, int>, cplx> coeffs;

  TorusElement() = default;
  explicit TorusElement(double th) : theta(th) {}
  static TorusElement identity(double theta) {
    TorusElement e(theta);
    e.coeffs[{0, 0}] = 1.0;
    return e;
  }
  void prune(double tol = 0.0);
};

static constexpr double kThetaMatchTol = 1e-14;

enum class TorusGenerator { U, V };

TorusElement generator(TorusGenerator which, double theta);

// (U^m V^n)(U^{m'} V^{n'}) = e^{-i theta n m'} U^{m+m'} V^{n+n'}, bilinearly.
TorusElement multiply(const TorusElement& A, const TorusElement& B);
TorusElement operator+(const TorusElement& A, const TorusElement& B);
TorusElement operator*(cplx c, const TorusElement& A);

// (sum c U^m V^n)^* = sum conj(c) e^{-i theta m n} U^{-m} V^{-n}.
TorusElement adjoint(const TorusElement& A);

// Canonical trace: the (0,0) coefficient.
cplx trace(const TorusElement& A);

// U^m V^n -> e^{i theta m n / 2} e^{i Omega(m e_q + n e_p, .)}.
SymbolSum to_symbol(const TorusElement& A, const QuantizationParams& params);

struct NormEstimate {
  double value = 0.0;
  double refinement_delta = 0.0;  // |value - estimate on the N-doubled grid|
};

// Operator norm of the Weyl quantization of to_symbol(A) on the grid,
// re-measured once on the refined grid.
NormEstimate norm_estimate(const TorusElement& A, const QuantizationParams& params,
                           const Grid1D& grid);

}  // namespace moyaltorus
