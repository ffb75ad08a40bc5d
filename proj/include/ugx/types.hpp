#pragma once

#include <Eigen/Core>

#include <cstdint>

namespace ugx {

using Index = Eigen::Index;

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using RowMatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

// Vector-per-(vertex,label) data is stored row-major so each vector is
// contiguous (row index = vertex*k + label).
using RowMatrixXd = RowMatrixX<double>;

}  // namespace ugx
