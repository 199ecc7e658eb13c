#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace latd {

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

// Wilson score interval for a binomial proportion at 95% coverage.
inline Interval wilson_interval(long long successes, long long trials,
                                double z = 1.959963984540054) {
  if (trials <= 0) throw std::invalid_argument("trials must be positive");
  const double n = static_cast<double>(trials);
  const double ph = static_cast<double>(successes) / n;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / n;
  const double center = (ph + z2 / (2.0 * n)) / denom;
  const double half = z / denom * std::sqrt(ph * (1.0 - ph) / n + z2 / (4.0 * n * n));
  return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

// Ordinary least-squares slope of y against x.
inline double ls_slope(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2)
    throw std::invalid_argument("need at least two points");
  const double n = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  const double denom = n * sxx - sx * sx;
  if (denom == 0.0) throw std::invalid_argument("degenerate abscissae");
  return (n * sxy - sx * sy) / denom;
}

// Abscissa where a decreasing curve (x ascending, y positive) crosses
// `target`, interpolating linearly in log10(y). `name` labels error text.
inline double log_crossing(const std::vector<double>& x, const std::vector<double>& y,
                           double target, const std::string& name) {
  if (x.size() != y.size() || x.size() < 2)
    throw std::invalid_argument(name + ": need at least two points");
  for (size_t i = 0; i + 1 < x.size(); ++i) {
    if (y[i] <= 0 || y[i + 1] <= 0) continue;
    const bool brackets = (y[i] >= target && y[i + 1] <= target);
    if (!brackets) continue;
    const double ly0 = std::log10(y[i]), ly1 = std::log10(y[i + 1]);
    const double lt = std::log10(target);
    if (ly0 == ly1) return x[i];
    return x[i] + (x[i + 1] - x[i]) * (lt - ly0) / (ly1 - ly0);
  }
  throw std::runtime_error(name + ": target not bracketed by the curve");
}

}  // namespace latd
