#include "lvf/expm.hpp"

#include <cmath>
#include <numbers>

#include "lvf/errors.hpp"

namespace lvf {

Eigen::MatrixXd expm(const Eigen::MatrixXd& a) {
  constexpr int kTaylorDegree = 12;
  const double norm = a.cwiseAbs().rowwise().sum().maxCoeff();
  int squarings = 0;
  if (norm > 0.5) squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
  const Eigen::MatrixXd scaled = a / std::ldexp(1.0, squarings);

  Eigen::MatrixXd result = Eigen::MatrixXd::Identity(a.rows(), a.cols());
  Eigen::MatrixXd term = result;
  for (int k = 1; k <= kTaylorDegree; ++k) {
    term = term * scaled / static_cast<double>(k);
    result += term;
  }
  for (int s = 0; s < squarings; ++s) result = result * result;
  return result;
}

Eigen::MatrixXd to_double_matrix(const PairingMatrix& m) {
  const auto n = m.window().size();
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(n, n);
  const double scale = m.pi_power() ? std::numbers::pi : 1.0;
  for (const auto& [key, v] : m.entries()) {
    if (!v.is_real()) throw InvalidArgument("complex entry in a real float matrix");
    out(index_distance(key.first, m.window().lo()), index_distance(key.second, m.window().lo())) =
        v.re().to_double() * scale;
  }
  return out;
}

Eigen::VectorXd to_double_vector(const VectorCoeffs& v) {
  Eigen::VectorXd out = Eigen::VectorXd::Zero(v.window().size());
  for (const auto& [i, c] : v.entries()) {
    if (!c.is_real()) throw InvalidArgument("complex entry in a real float vector");
    out(index_distance(i, v.window().lo())) = c.re().to_double();
  }
  return out;
}

} // namespace lvf
