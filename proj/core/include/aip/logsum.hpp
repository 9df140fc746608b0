#pragma once

#include <cmath>
#include <limits>
#include <span>

namespace aip {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// log(sum exp(x_i)) with max subtraction; serial left fold so results do
// not depend on thread count.
inline double logsumexp(std::span<const double> xs) {
  double m = kNegInf;
  for (double x : xs) m = std::max(m, x);
  if (!std::isfinite(m)) return m;  // all -inf (or a +inf/nan propagates)
  double acc = 0.0;
  for (double x : xs) acc += std::exp(x - m);
  return m + std::log(acc);
}

}  // namespace aip
