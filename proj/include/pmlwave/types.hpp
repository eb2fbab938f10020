#pragma once

#include <Eigen/Dense>

namespace pmlwave {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;
using Vec6 = Eigen::Matrix<double, 6, 1>;
using Mat6 = Eigen::Matrix<double, 6, 6>;
using ArrayXd = Eigen::ArrayXd;

}  // namespace pmlwave
