#pragma once

#include <stdexcept>
#include <vector>

namespace radsol {

// Uniformly sampled scalar record.
struct TimeSeries {
  double t0 = 0.0;
  double dt = 1.0;
  std::vector<double> values;

  int size() const { return static_cast<int>(values.size()); }
  double t(int i) const { return t0 + i * dt; }
  double t_final() const { return values.empty() ? t0 : t(size() - 1); }
  double operator[](int i) const { return values[static_cast<std::size_t>(i)]; }

  // Index range [lo, hi] covered by the time window (clamped, inclusive).
  std::pair<int, int> index_window(double t_lo, double t_hi) const {
    if (values.empty() || !(dt > 0)) throw std::invalid_argument("TimeSeries: empty or non-positive dt");
    int lo = static_cast<int>(std::ceil((t_lo - t0) / dt - 1e-9));
    int hi = static_cast<int>(std::floor((t_hi - t0) / dt + 1e-9));
    lo = std::max(lo, 0);
    hi = std::min(hi, size() - 1);
    return {lo, hi};
  }
};

}  // namespace radsol
