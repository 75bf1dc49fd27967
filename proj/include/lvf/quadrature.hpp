#pragma once

#include <functional>

namespace lvf {

inline constexpr int kDefaultQuadratureNodes = 4096;

/// Composite Simpson rule on [a, b] with `intervals` subintervals (odd counts round up).
double simpson(const std::function<double(double)>& f, double a, double b, int intervals);

/// (f, g)_H = (1/pi) int_0^{2pi} f(x) g(x) dx by composite Simpson.
double quadrature_oracle(const std::function<double(double)>& f,
                         const std::function<double(double)>& g,
                         int nodes = kDefaultQuadratureNodes);

} // namespace lvf
