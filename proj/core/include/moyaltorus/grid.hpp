#pragma once

#include <stdexcept>
#include <vector>

namespace moyaltorus {

// Uniform periodic grid of N points covering [center-L, center+L).
// N must factor as 2^a * 3^b with b <= 1; powers of two are the default
// everywhere, the single factor of 3 exists for rational-flux torus grids
// where exact Harper closure needs 3 | N/2.
struct Grid1D {
  double center = 0.0;
  double half_width = 12.0;  // L
  int count = 256;           // N

  Grid1D() = default;
  Grid1D(double center_, double half_width_, int count_)
      : center(center_), half_width(half_width_), count(count_) {
    validate();
  }

  void validate() const {
    if (!(half_width > 0.0)) throw std::invalid_argument("Grid1D: half_width must be > 0");
    if (count < 8) throw std::invalid_argument("Grid1D: N must be >= 8");
    int m = count, threes = 0;
    while (m % 3 == 0) { m /= 3; ++threes; }
    while (m % 2 == 0) m /= 2;
    if (m != 1 || threes > 1)
      throw std::invalid_argument("Grid1D: N must be 2^a or 3*2^a");
  }

  double spacing() const { return 2.0 * half_width / count; }
  double point(int k) const { return center - half_width + k * spacing(); }
  std::vector<double> points() const {
    std::vector<double> qs(count);
    for (int k = 0; k < count; ++k) qs[k] = point(k);
    return qs;
  }
  bool operator==(const Grid1D& o) const {
    return center == o.center && half_width == o.half_width && count == o.count;
  }
  bool operator!=(const Grid1D& o) const { return !(*this == o); }
};

struct Grid2D {
  Grid1D axis_q;
  Grid1D axis_p;
};

}  // namespace moyaltorus
