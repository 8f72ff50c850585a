#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace moyaltorus {

// Deterministic pairwise summation with compensated leaves. The recursion
// tree depends only on the length, so any evaluation order of the inputs
// produces the same rounding, which is what makes exact-tolerance tests
// reproducible.
namespace detail {

template <typename T>
T kahan_block(const T* x, std::size_t n) {
  T s{}, c{};
  for (std::size_t i = 0; i < n; ++i) {
    T y = x[i] - c;
    T t = s + y;
    c = (t - s) - y;
    s = t;
  }
  return s;
}

template <typename T>
T pairwise(const T* x, std::size_t n) {
  if (n <= 32) return kahan_block(x, n);
  std::size_t half = n / 2;
  return pairwise(x, half) + pairwise(x + half, n - half);
}

}  // namespace detail

inline std::complex<double> pairwise_sum(const std::vector<std::complex<double>>& x) {
  return x.empty() ? std::complex<double>{} : detail::pairwise(x.data(), x.size());
}

inline double pairwise_sum(const std::vector<double>& x) {
  return x.empty() ? 0.0 : detail::pairwise(x.data(), x.size());
}

}  // namespace moyaltorus
