#pragma once

#include <functional>

#include "fft.hpp"
#include "grid.hpp"
#include "heisenberg.hpp"
#include "moyal.hpp"
#include "params.hpp"

namespace moyaltorus {

// Discretized state on L^2(Q): samples of u~ on a periodic position grid.
struct PositionWavefunction {
  Vec samples;
  Grid1D grid;

  PositionWavefunction() : samples(Vec::Zero(256)) {}
  PositionWavefunction(Vec s, Grid1D g) : samples(std::move(s)), grid(g) {
    if (samples.size() != grid.count)
      throw std::invalid_argument("PositionWavefunction: sample/grid size mismatch");
  }
  static PositionWavefunction from_function(const std::function<cplx(double)>& f,
                                            const Grid1D& g);
  double norm() const { return std::sqrt(grid.spacing()) * samples.norm(); }
};

// Grid inner product h * <psi, phi> (conjugate-linear in the first slot).
cplx inner(const PositionWavefunction& psi, const PositionWavefunction& phi);

// Dense operator on PositionWavefunction samples of a fixed grid.
struct GridOperator {
  Mat entries;
  Grid1D grid;

  GridOperator() : entries(Mat::Zero(256, 256)) {}
  GridOperator(Mat e, Grid1D g) : entries(std::move(e)), grid(g) {
    if (entries.rows() != grid.count || entries.cols() != grid.count)
      throw std::invalid_argument("GridOperator: matrix/grid size mismatch");
  }
  PositionWavefunction apply(const PositionWavefunction& psi) const {
    if (psi.grid != grid) throw std::invalid_argument("GridOperator: grid mismatch");
    return PositionWavefunction(entries * psi.samples, grid);
  }
};

// Symbol samples F(a_s, b_m): the a-axis is the midpoint (half-spacing) grid
// of the operator grid, the b-axis an independent frequency window.
struct GridSymbol {
  Mat values;  // rows: a index, cols: b index
  Grid1D axis_a;
  Grid1D axis_b;

  GridSymbol(Mat v, Grid1D a, Grid1D b) : values(std::move(v)), axis_a(a), axis_b(b) {
    if (values.rows() != axis_a.count || values.cols() != axis_b.count)
      throw std::invalid_argument("GridSymbol: value/axis size mismatch");
  }
};

// Midpoint grid: same window, twice the point count (spacing h/2).
Grid1D half_grid(const Grid1D& grid);

// b-axis for which the quantize/symbol quadratures telescope exactly for the
// constant symbol: half-width pi/(mu h), i.e. spacing matched to the position
// lattice. M_b is free.
Grid1D canonical_b_axis(const Grid1D& grid, const QuantizationParams& params, int count);

GridSymbol sample_symbol(const std::function<cplx(double, double)>& F, const Grid1D& axis_a,
                         const Grid1D& axis_b);

// U_KW(g)u~(q0) = e^{i mu (z - qp/2 + (q - q0)p)} u~(q0 - q).
PositionWavefunction u_kw(const GroupElement& g, const PositionWavefunction& psi,
                          const QuantizationParams& params);
GridOperator u_kw_matrix(const GroupElement& g, const Grid1D& grid,
                         const QuantizationParams& params);

// Sigma: u~(q0) -> u~(-q0); grid must be centered at 0.
PositionWavefunction parity(const PositionWavefunction& psi);
GridOperator parity_matrix(const Grid1D& grid);

// Grossmann-Royer point operator U_KW(v) Sigma U_KW(v)^{-1}, v = (vq, vp).
GridOperator quantize_point(double vq, double vp, const Grid1D& grid,
                            const QuantizationParams& params);

enum class WrapMode {
  periodic,  // circulant translations (unitary on the periodic grid)
  truncated  // Toeplitz translations, no wrap-around; shift must be a cell multiple
};

// Weyl quantizer on plane-wave sums: e^{i Omega(a, .)} maps to
// e^{i theta a_q a_p / 2} diag(e^{-i a_p q}) Shift(theta a_q).
GridOperator quantize_symbol(const SymbolSum& F, const Grid1D& grid,
                             const QuantizationParams& params,
                             WrapMode wrap = WrapMode::periodic);

// Kernel-quadrature quantizer: A_{jk} = h (mu/2pi) sum_m F(a_{j+k}, b_m)
// e^{i mu b_m (q_k - q_j)} db, with F sampled on the midpoint grid.
GridOperator quantize_symbol(const GridSymbol& F, const Grid1D& grid,
                             const QuantizationParams& params);

// Inverse symbol F(a_s, b_m) = 2 tr(A Xi(a_s, b_m)), via the anti-diagonal sums
// F(a_s, b) = 2 sum_j A_{j, s-j} e^{-i mu b (q_{s-j} - q_j)}.
GridSymbol symbol_of(const GridOperator& A, const Grid1D& axis_b,
                     const QuantizationParams& params);

// Same symbol evaluated at one phase-space point; a must sit on the midpoint grid.
cplx symbol_at(const GridOperator& A, double a, double b, const QuantizationParams& params);

// F1 *_mu F2 through the operator route on the given grids.
GridSymbol star_numeric(const GridSymbol& F, const GridSymbol& G, const Grid1D& grid,
                        const QuantizationParams& params);

}  // namespace moyaltorus
