#include "lvf/quadrature.hpp"

#include <numbers>

#include "lvf/errors.hpp"

namespace lvf {

double simpson(const std::function<double(double)>& f, double a, double b, int intervals) {
  if (intervals < 2) throw InvalidArgument("Simpson rule needs at least 2 nodes");
  if (intervals % 2 != 0) ++intervals;
  const double h = (b - a) / intervals;
  double odd = 0.0;
  double even = 0.0;
  for (int j = 1; j < intervals; ++j) {
    const double v = f(a + j * h);
    (j % 2 ? odd : even) += v;
  }
  return h / 3.0 * (f(a) + f(b) + 4.0 * odd + 2.0 * even);
}

double quadrature_oracle(const std::function<double(double)>& f,
                         const std::function<double(double)>& g, int nodes) {
  const double two_pi = 2.0 * std::numbers::pi;
  return simpson([&](double x) { return f(x) * g(x); }, 0.0, two_pi, nodes) / std::numbers::pi;
}

} // namespace lvf
