#pragma once
#include <Eigen/Core>

namespace greyrank {

template <class Scalar_, int Rows_ = Eigen::Dynamic, int Cols_ = Eigen::Dynamic>
using array_type = Eigen::Array<Scalar_, Rows_, Cols_, Eigen::ColMajor>;

template <class Scalar_, int Rows_ = Eigen::Dynamic, int Cols_ = Eigen::Dynamic>
using matrix_type = Eigen::Matrix<Scalar_, Rows_, Cols_, Eigen::ColMajor>;

template <class Scalar_, int Rows_ = Eigen::Dynamic>
using vec_type = array_type<Scalar_, Rows_, 1>;

using index_t = Eigen::Index;

} // namespace greyrank
