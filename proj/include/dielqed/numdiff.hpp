#pragma once

#include <algorithm>
#include <cmath>
#include <type_traits>

namespace dielqed::numdiff {

/// Step for derivative sampling: 1e-3 relative to |x|, 1e-3 absolute near
/// zero. The extrapolated stencil below is fourth order, so its roundoff
/// floor eps/step balances the step^4 truncation near this size.
inline double default_step(double x) {
  return 1e-3 * std::max(std::abs(x), 1.0);
}

/// Central difference with one Richardson extrapolation step. Works for any
/// value type with vector-space arithmetic (double, Eigen vectors).
template <typename F>
auto derivative(F&& f, double x, double step) {
  using Value = std::decay_t<decltype(f(x))>;
  const Value coarse = (f(x + step) - f(x - step)) / (2.0 * step);
  const Value fine = (f(x + 0.5 * step) - f(x - 0.5 * step)) / step;
  return Value((4.0 * fine - coarse) / 3.0);
}

template <typename F>
auto derivative(F&& f, double x) {
  return derivative(static_cast<F&&>(f), x, default_step(x));
}

}  // namespace dielqed::numdiff
