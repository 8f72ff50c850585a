#include "moyaltorus/fft.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace moyaltorus {

namespace {

// Plans are cached per (N, sign) and executed on scratch buffers owned by the
// cache, under a lock. FFTW_ESTIMATE keeps planning deterministic.
struct PlanCache {
  std::mutex mu;
  struct Entry {
    fftw_plan plan;
    fftw_complex* buf;
    int n;
  };
  std::map<std::pair<int, int>, Entry> entries;

  Entry& get(int n, int sign) {
    auto key = std::make_pair(n, sign);
    auto it = entries.find(key);
    if (it != entries.end()) return it->second;
    Entry e;
    e.n = n;
    e.buf = fftw_alloc_complex(static_cast<size_t>(n));
    e.plan = fftw_plan_dft_1d(n, e.buf, e.buf, sign, FFTW_ESTIMATE);
    if (!e.plan) throw std::runtime_error("fftw plan creation failed");
    return entries.emplace(key, e).first->second;
  }
};

PlanCache& cache() {
  static PlanCache c;
  return c;
}

Vec run(const Vec& x, int sign) {
  const int n = static_cast<int>(x.size());
  if (n == 0) return x;
  auto& c = cache();
  std::lock_guard<std::mutex> lock(c.mu);
  auto& e = c.get(n, sign);
  for (int i = 0; i < n; ++i) {
    e.buf[i][0] = x[i].real();
    e.buf[i][1] = x[i].imag();
  }
  fftw_execute(e.plan);
  Vec out(n);
  for (int i = 0; i < n; ++i) out[i] = cplx(e.buf[i][0], e.buf[i][1]);
  return out;
}

}  // namespace

Vec fft_forward(const Vec& x) { return run(x, FFTW_FORWARD); }

Vec fft_backward(const Vec& X) {
  Vec out = run(X, FFTW_BACKWARD);
  out /= static_cast<double>(X.size());
  return out;
}

double fft_omega(int k, int N, double h) {
  const int kk = (k <= N / 2) ? k : k - N;
  return 2.0 * M_PI * kk / (N * h);
}

Vec fractional_shift(const Vec& f, const Grid1D& grid, double s) {
  const int N = grid.count;
  if (f.size() != N) throw std::invalid_argument("fractional_shift: sample/grid size mismatch");
  if (std::abs(s) >= grid.half_width)
    throw std::domain_error("fractional_shift: |s| >= L, window too small");
  const double h = grid.spacing();
  const double cells = s / h;
  const double rounded = std::round(cells);
  if (std::abs(cells - rounded) < 1e-12) {
    // exact cell shift: pure index rotation
    const int d = ((static_cast<int>(rounded) % N) + N) % N;
    Vec out(N);
    for (int k = 0; k < N; ++k) out[(k + d) % N] = f[k];
    return out;
  }
  Vec F = fft_forward(f);
  for (int k = 0; k < N; ++k) {
    const double w = fft_omega(k, N, h);
    F[k] *= std::exp(cplx(0.0, -w * s));
  }
  return fft_backward(F);
}

namespace {

// e^{i phi r^2 / 2} with the angle reduced in extended precision; the raw
// argument can reach ~1e5 and would otherwise cost ~5 digits.
cplx chirp_phase(double phi, long long r) {
  const long double two_pi = 6.283185307179586476925286766559L;
  long double arg = 0.5L * static_cast<long double>(phi) * r * r;
  arg = std::fmod(arg, two_pi);
  return cplx(static_cast<double>(std::cos(arg)), static_cast<double>(std::sin(arg)));
}

int pad_size(int n) {
  int p = 8;
  while (p < n) p *= 2;
  return p;
}

}  // namespace

Vec chirp_transform(const Vec& x, double phi, int K) {
  const int M = static_cast<int>(x.size());
  if (K <= 0) throw std::invalid_argument("chirp_transform: K must be positive");
  if (M == 0) return Vec::Zero(K);
  const int P = pad_size(M + K - 1);

  Vec a = Vec::Zero(P);
  for (int m = 0; m < M; ++m) a[m] = x[m] * chirp_phase(phi, m);
  Vec b = Vec::Zero(P);
  for (int r = -(M - 1); r < K; ++r) b[((r % P) + P) % P] = chirp_phase(-phi, r);

  Vec c = fft_backward(fft_forward(a).cwiseProduct(fft_forward(b)));
  Vec out(K);
  for (int k = 0; k < K; ++k) out[k] = chirp_phase(phi, k) * c[k];
  return out;
}

}  // namespace moyaltorus
