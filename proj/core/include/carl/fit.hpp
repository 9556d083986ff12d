#pragma once

#include <cmath>
#include <span>

#include "carl/errors.hpp"

namespace carl {

// Least-squares slope of y against x.
inline double least_squares_slope(std::span<const double> x,
                                  std::span<const double> y) {
  const std::size_t n = x.size();
  if (n != y.size() || n < 2)
    throw ValidationError("least_squares_slope: need >= 2 paired points");
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
  }
  if (sxx == 0.0) throw ValidationError("least_squares_slope: degenerate x");
  return sxy / sxx;
}

// Slope of log(y) against log(x); all inputs must be positive.
inline double log_log_slope(std::span<const double> x,
                            std::span<const double> y) {
  const std::size_t n = x.size();
  if (n != y.size() || n < 2)
    throw ValidationError("log_log_slope: need >= 2 paired points");
  std::vector<double> lx(n), ly(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!(x[i] > 0.0) || !(y[i] > 0.0))
      throw ValidationError("log_log_slope: inputs must be positive");
    lx[i] = std::log(x[i]);
    ly[i] = std::log(y[i]);
  }
  return least_squares_slope(lx, ly);
}

}  // namespace carl
