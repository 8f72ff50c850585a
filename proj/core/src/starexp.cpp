#include "moyaltorus/starexp.hpp"

#include <cmath>

namespace moyaltorus {

StarExpResult star_exp(const GroupElement& g, const QuantizationParams& params) {
  params.require_n1("star_exp");
  if (g.n() != 1) throw std::invalid_argument("star_exp: requires n = 1");
  const double t2 = params.theta * params.theta;
  const double arg = g.z / t2;
  const cplx phase(std::cos(arg), std::sin(arg));
  StarExpResult r;
  r.central_phase = phase;
  r.symbol = SymbolSum::plane_wave(phase, g.q[0] / t2, g.p[0] / t2);
  return r;
}

cplx homomorphism_defect(const GroupElement& g, const GroupElement& gp,
                         const QuantizationParams& params) {
  const StarExpResult a = star_exp(g, params);
  const StarExpResult b = star_exp(gp, params);
  const SymbolSum lhs = star_planewave(a.symbol, b.symbol, params);
  const SymbolSum rhs = star_exp(multiply(g, gp), params).symbol;
  if (lhs.terms.size() != 1 || rhs.terms.size() != 1)
    throw std::logic_error("homomorphism_defect: expected single plane waves");
  const PlaneWave& l = lhs.terms[0];
  const PlaneWave& r = rhs.terms[0];
  if (std::abs(l.a_q - r.a_q) > 1e-10 || std::abs(l.a_p - r.a_p) > 1e-10)
    throw std::logic_error("homomorphism_defect: frequency mismatch");
  return l.amp / r.amp;
}

}  // namespace moyaltorus
