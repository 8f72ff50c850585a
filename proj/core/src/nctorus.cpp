#include "moyaltorus/nctorus.hpp"

#include <cmath>

#include "moyaltorus/linalg.hpp"
#include "moyaltorus/schrodinger.hpp"

namespace moyaltorus {

namespace {

cplx unit_phase(double arg) { return cplx(std::cos(arg), std::sin(arg)); }

void require_same_theta(const TorusElement& A, const TorusElement& B, const char* who) {
  if (std::abs(A.theta - B.theta) > kThetaMatchTol)
    throw std::invalid_argument(std::string(who) + ": theta mismatch");
}

}  // namespace

void TorusElement::prune(double tol) {
  for (auto it = coeffs.begin(); it != coeffs.end();)
    it = (std::abs(it->second) <= tol) ? coeffs.erase(it) : std::next(it);
}

TorusElement generator(TorusGenerator which, double theta) {
  TorusElement g(theta);
  if (which == TorusGenerator::U)
    g.coeffs[{1, 0}] = 1.0;
  else
    g.coeffs[{0, 1}] = 1.0;
  return g;
}

TorusElement multiply(const TorusElement& A, const TorusElement& B) {
  require_same_theta(A, B, "multiply");
  TorusElement out(A.theta);
  for (const auto& [ka, ca] : A.coeffs) {
    for (const auto& [kb, cb] : B.coeffs) {
      const cplx phase = unit_phase(-A.theta * ka.second * kb.first);
      out.coeffs[{ka.first + kb.first, ka.second + kb.second}] += ca * cb * phase;
    }
  }
  out.prune();
  return out;
}

TorusElement operator+(const TorusElement& A, const TorusElement& B) {
  require_same_theta(A, B, "operator+");
  TorusElement out = A;
  for (const auto& [k, c] : B.coeffs) out.coeffs[k] += c;
  out.prune();
  return out;
}

TorusElement operator*(cplx c, const TorusElement& A) {
  TorusElement out(A.theta);
  for (const auto& [k, v] : A.coeffs) out.coeffs[k] = c * v;
  out.prune();
  return out;
}

TorusElement adjoint(const TorusElement& A) {
  TorusElement out(A.theta);
  for (const auto& [k, c] : A.coeffs)
    out.coeffs[{-k.first, -k.second}] = std::conj(c) * unit_phase(-A.theta * k.first * k.second);
  out.prune();
  return out;
}

cplx trace(const TorusElement& A) {
  auto it = A.coeffs.find({0, 0});
  return it == A.coeffs.end() ? cplx{} : it->second;
}

SymbolSum to_symbol(const TorusElement& A, const QuantizationParams& params) {
  if (std::abs(A.theta - params.theta) > kThetaMatchTol)
    throw std::invalid_argument("to_symbol: theta mismatch");
  std::vector<PlaneWave> terms;
  terms.reserve(A.coeffs.size());
  for (const auto& [k, c] : A.coeffs) {
    const cplx amp = c * unit_phase(0.5 * A.theta * kStarSign * k.first * k.second);
    terms.push_back(PlaneWave{amp, double(k.first), double(k.second)});
  }
  return SymbolSum(std::move(terms));
}

NormEstimate norm_estimate(const TorusElement& A, const QuantizationParams& params,
                           const Grid1D& grid) {
  const SymbolSum F = to_symbol(A, params);
  const double coarse = operator_norm(quantize_symbol(F, grid, params).entries);
  const Grid1D fine(grid.center, grid.half_width, 2 * grid.count);
  const double refined = operator_norm(quantize_symbol(F, fine, params).entries);
  return NormEstimate{coarse, std::abs(refined - coarse)};
}

}  // namespace moyaltorus
