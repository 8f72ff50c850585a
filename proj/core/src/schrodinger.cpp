#include "moyaltorus/schrodinger.hpp"

#include <cmath>

namespace moyaltorus {

namespace {

cplx unit_phase(double arg) { return cplx(std::cos(arg), std::sin(arg)); }

// Phase whose argument is a product of up to three factors that can reach
// ~1e7; reduce in extended precision before rounding to double.
cplx unit_phase_prod(long double a, long double b, long double c = 1.0L) {
  const long double two_pi = 6.283185307179586476925286766559L;
  const long double arg = std::fmod(a * b * c, two_pi);
  return cplx(static_cast<double>(std::cos(arg)), static_cast<double>(std::sin(arg)));
}

// Circulant matrix of the periodic translate u~(q0) -> u~(q0 - s).
Mat shift_matrix_periodic(const Grid1D& grid, double s) {
  const int N = grid.count;
  Vec e0 = Vec::Zero(N);
  e0[0] = 1.0;
  // The grid is periodic, so the shift is well defined for any s; go through
  // the phase route directly to avoid fractional_shift's window guard.
  const double h = grid.spacing();
  const double cells = s / h;
  const double rounded = std::round(cells);
  Mat S = Mat::Zero(N, N);
  if (std::abs(cells - rounded) < 1e-9) {
    const int d = ((static_cast<int>(rounded) % N) + N) % N;
    for (int k = 0; k < N; ++k) S((k + d) % N, k) = 1.0;
    return S;
  }
  Vec F = fft_forward(e0);
  for (int k = 0; k < N; ++k) F[k] *= unit_phase(-fft_omega(k, N, h) * s);
  Vec col = fft_backward(F);
  for (int j = 0; j < N; ++j)
    for (int k = 0; k < N; ++k) S(j, k) = col[((j - k) % N + N) % N];
  return S;
}

Mat shift_matrix_truncated(const Grid1D& grid, double s) {
  const int N = grid.count;
  const double cells = s / grid.spacing();
  const double rounded = std::round(cells);
  if (std::abs(cells - rounded) > 1e-9)
    throw std::invalid_argument(
        "quantize_symbol: truncated wrap requires a cell-multiple translation");
  const int d = static_cast<int>(rounded);
  Mat S = Mat::Zero(N, N);
  for (int j = 0; j < N; ++j) {
    const int k = j - d;
    if (k >= 0 && k < N) S(j, k) = 1.0;
  }
  return S;
}

}  // namespace

PositionWavefunction PositionWavefunction::from_function(const std::function<cplx(double)>& f,
                                                         const Grid1D& g) {
  Vec s(g.count);
  for (int k = 0; k < g.count; ++k) s[k] = f(g.point(k));
  return PositionWavefunction(std::move(s), g);
}

cplx inner(const PositionWavefunction& psi, const PositionWavefunction& phi) {
  if (psi.grid != phi.grid) throw std::invalid_argument("inner: grid mismatch");
  return psi.grid.spacing() * psi.samples.dot(phi.samples);
}

Grid1D half_grid(const Grid1D& grid) {
  return Grid1D(grid.center, grid.half_width, 2 * grid.count);
}

Grid1D canonical_b_axis(const Grid1D& grid, const QuantizationParams& params, int count) {
  return Grid1D(0.0, M_PI / (std::abs(params.mu) * grid.spacing()), count);
}

GridSymbol sample_symbol(const std::function<cplx(double, double)>& F, const Grid1D& axis_a,
                         const Grid1D& axis_b) {
  Mat v(axis_a.count, axis_b.count);
  for (int s = 0; s < axis_a.count; ++s)
    for (int m = 0; m < axis_b.count; ++m) v(s, m) = F(axis_a.point(s), axis_b.point(m));
  return GridSymbol(std::move(v), axis_a, axis_b);
}

PositionWavefunction u_kw(const GroupElement& g, const PositionWavefunction& psi,
                          const QuantizationParams& params) {
  params.require_n1("u_kw");
  if (g.n() != 1) throw std::invalid_argument("u_kw: requires n = 1");
  const double q = g.q[0], p = g.p[0], z = g.z;
  Vec out = fractional_shift(psi.samples, psi.grid, q);
  const double mu = params.mu;
  for (int j = 0; j < psi.grid.count; ++j) {
    const double q0 = psi.grid.point(j);
    out[j] *= unit_phase(mu * (z - 0.5 * q * p + (q - q0) * p));
  }
  return PositionWavefunction(std::move(out), psi.grid);
}

GridOperator u_kw_matrix(const GroupElement& g, const Grid1D& grid,
                         const QuantizationParams& params) {
  params.require_n1("u_kw_matrix");
  if (g.n() != 1) throw std::invalid_argument("u_kw_matrix: requires n = 1");
  const double q = g.q[0], p = g.p[0], z = g.z;
  if (std::abs(q) >= grid.half_width)
    throw std::domain_error("u_kw_matrix: translation out of window");
  Mat M = shift_matrix_periodic(grid, q);
  const double mu = params.mu;
  for (int j = 0; j < grid.count; ++j)
    M.row(j) *= unit_phase(mu * (z - 0.5 * q * p + (q - grid.point(j)) * p));
  return GridOperator(std::move(M), grid);
}

PositionWavefunction parity(const PositionWavefunction& psi) {
  if (psi.grid.center != 0.0)
    throw std::invalid_argument("parity: grid must be symmetric about 0");
  const int N = psi.grid.count;
  Vec out(N);
  for (int k = 0; k < N; ++k) out[k] = psi.samples[(N - k) % N];
  return PositionWavefunction(std::move(out), psi.grid);
}

GridOperator parity_matrix(const Grid1D& grid) {
  if (grid.center != 0.0)
    throw std::invalid_argument("parity_matrix: grid must be symmetric about 0");
  const int N = grid.count;
  Mat P = Mat::Zero(N, N);
  for (int k = 0; k < N; ++k) P(k, (N - k) % N) = 1.0;
  return GridOperator(std::move(P), grid);
}

GridOperator quantize_point(double vq, double vp, const Grid1D& grid,
                            const QuantizationParams& params) {
  if (std::abs(vq) >= 0.5 * grid.half_width)
    throw std::domain_error("quantize_point: |q| must be < L/2");
  const GroupElement v(vq, vp, 0.0);
  const Mat U = u_kw_matrix(v, grid, params).entries;
  const Mat Ui = u_kw_matrix(inverse(v), grid, params).entries;
  const Mat P = parity_matrix(grid).entries;
  return GridOperator(U * P * Ui, grid);
}

GridOperator quantize_symbol(const SymbolSum& F, const Grid1D& grid,
                             const QuantizationParams& params, WrapMode wrap) {
  const int N = grid.count;
  Mat A = Mat::Zero(N, N);
  for (const PlaneWave& t : F.terms) {
    const double s = params.theta * t.a_q;
    Mat W = (wrap == WrapMode::periodic) ? shift_matrix_periodic(grid, s)
                                         : shift_matrix_truncated(grid, s);
    for (int j = 0; j < N; ++j) W.row(j) *= unit_phase(-t.a_p * grid.point(j));
    A += (t.amp * unit_phase(0.5 * params.theta * t.a_q * t.a_p)) * W;
  }
  return GridOperator(std::move(A), grid);
}

GridOperator quantize_symbol(const GridSymbol& F, const Grid1D& grid,
                             const QuantizationParams& params) {
  const int N = grid.count;
  if (F.axis_a != half_grid(grid))
    throw std::invalid_argument("quantize_symbol: symbol a-axis must be the midpoint grid");
  const double h = grid.spacing();
  const double db = F.axis_b.spacing();
  const double b0 = F.axis_b.point(0);
  const int Mb = F.axis_b.count;
  const double phi = params.mu * db * h;
  const double scale = h * params.mu / (2.0 * M_PI) * db;

  Mat A = Mat::Zero(N, N);
  Vec x(Mb);
  for (int s = 0; s <= 2 * N - 2; ++s) {
    // Y(d) = sum_m F(a_s, b_m) e^{i mu b_m d h}, d = k - j in (-N, N)
    for (int m = 0; m < Mb; ++m)
      x[m] = F.values(s, m) * unit_phase_prod(-phi, m, N - 1.0L);
    Vec Y = chirp_transform(x, phi, 2 * N - 1);
    const int jmin = std::max(0, s - N + 1);
    const int jmax = std::min(N - 1, s);
    for (int j = jmin; j <= jmax; ++j) {
      const int k = s - j;
      const int d = k - j;
      A(j, k) = scale * unit_phase(params.mu * b0 * d * h) * Y[d + N - 1];
    }
  }
  return GridOperator(std::move(A), grid);
}

GridSymbol symbol_of(const GridOperator& A, const Grid1D& axis_b,
                     const QuantizationParams& params) {
  const int N = A.grid.count;
  const Grid1D axis_a = half_grid(A.grid);
  const double h = A.grid.spacing();
  const double db = axis_b.spacing();
  const double b0 = axis_b.point(0);
  const int Mb = axis_b.count;
  const double phi = 2.0 * params.mu * db * h;

  Mat out = Mat::Zero(axis_a.count, Mb);
  for (int s = 0; s <= 2 * N - 2; ++s) {
    const int jmin = std::max(0, s - N + 1);
    const int jmax = std::min(N - 1, s);
    Vec y(jmax - jmin + 1);
    for (int j = jmin; j <= jmax; ++j)
      y[j - jmin] = A.entries(j, s - j) * unit_phase(2.0 * params.mu * b0 * j * h);
    Vec Y = chirp_transform(y, phi, Mb);
    for (int m = 0; m < Mb; ++m) {
      const double bm = axis_b.point(m);
      out(s, m) = 2.0 * unit_phase_prod(-params.mu * bm, s, h) *
                  unit_phase_prod(phi, jmin, m) * Y[m];
    }
  }
  // The N anti-diagonal sums determine the symbol on the 2N-point midpoint
  // lattice only up to a staggered (-1)^s alias (even and odd anti-diagonals
  // are independent, as the identity operator shows). A grid operator can
  // carry position frequencies up to the coarse Nyquist pi/h only, so the
  // upper half of the fine-lattice spectrum is pure alias: remove it.
  const int S = axis_a.count;
  for (int m = 0; m < Mb; ++m) {
    Vec col = out.col(m);
    Vec spec = fft_forward(col);
    for (int k = 0; k < S; ++k) {
      const int kappa = (k <= S / 2) ? k : k - S;
      if (std::abs(kappa) > N / 2) spec[k] = 0.0;
    }
    out.col(m) = fft_backward(spec);
  }
  return GridSymbol(std::move(out), axis_a, axis_b);
}

cplx symbol_at(const GridOperator& A, double a, double b, const QuantizationParams& params) {
  const int N = A.grid.count;
  const double h2 = 0.5 * A.grid.spacing();
  const double pos = (a - (A.grid.center - A.grid.half_width)) / h2;
  const int s = static_cast<int>(std::round(pos));
  if (std::abs(pos - s) > 1e-9 || s < 0 || s > 2 * N - 2)
    throw std::invalid_argument("symbol_at: a must lie on the midpoint grid");
  const double h = A.grid.spacing();
  cplx sum{};
  const int jmin = std::max(0, s - N + 1);
  const int jmax = std::min(N - 1, s);
  for (int j = jmin; j <= jmax; ++j) {
    const int k = s - j;
    sum += A.entries(j, k) * unit_phase(-params.mu * b * (k - j) * h);
  }
  return 2.0 * sum;
}

GridSymbol star_numeric(const GridSymbol& F, const GridSymbol& G, const Grid1D& grid,
                        const QuantizationParams& params) {
  const GridOperator A = quantize_symbol(F, grid, params);
  const GridOperator B = quantize_symbol(G, grid, params);
  return symbol_of(GridOperator(A.entries * B.entries, grid), F.axis_b, params);
}

}  // namespace moyaltorus
