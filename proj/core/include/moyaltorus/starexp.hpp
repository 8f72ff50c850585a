#pragma once

#include "fft.hpp"
#include "heisenberg.hpp"
#include "moyal.hpp"
#include "params.hpp"

namespace moyaltorus {

// E_theta(v + zE) = e^{iz/theta^2} e^{i Omega(v/theta^2, .)}; the symbol's
// single term carries the central phase as its amplitude.
struct StarExpResult {
  SymbolSum symbol;
  cplx central_phase{1.0, 0.0};
};

StarExpResult star_exp(const GroupElement& g, const QuantizationParams& params);

// The unique scalar r with E(g) * E(g') = r * E(g g'). |r| = 1; r != 1 in
// general (the central phases of the two sides scale as theta^{-3} vs
// theta^{-2}); r = 1 whenever Omega(v, v') = 0 and at theta = 1.
cplx homomorphism_defect(const GroupElement& g, const GroupElement& gp,
                         const QuantizationParams& params);

}  // namespace moyaltorus
