#pragma once

#include <Eigen/Dense>

namespace radialdec {

using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;
using Mat2 = Eigen::Matrix2d;
using Mat3 = Eigen::Matrix3d;
using Mat3x2 = Eigen::Matrix<double, 3, 2>;

}  // namespace radialdec
