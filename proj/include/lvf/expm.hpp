#pragma once

#include <Eigen/Dense>

#include "lvf/pairing.hpp"

namespace lvf {

/// Matrix exponential by scaling and squaring with a degree-12 Taylor polynomial.
Eigen::MatrixXd expm(const Eigen::MatrixXd& a);

/// Float copy of a pairing matrix (the pi grade is multiplied out).
Eigen::MatrixXd to_double_matrix(const PairingMatrix& m);
Eigen::VectorXd to_double_vector(const VectorCoeffs& v);

} // namespace lvf
