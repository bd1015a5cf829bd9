#pragma once

#include <complex>

#include <Eigen/Dense>

namespace jsmap {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

}  // namespace jsmap
