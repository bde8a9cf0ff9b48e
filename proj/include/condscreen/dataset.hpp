#pragma once

#include <Eigen/Dense>

#include "condscreen/errors.hpp"

namespace condscreen {

/// One observed sample {(x_i, Y_i, u_i)}: row i of `x`, `y[i]` and `u[i]`
/// belong to the same observation.
struct DataSet {
    Eigen::MatrixXd x; // n rows, p predictor columns
    Eigen::VectorXd y; // response, length n
    Eigen::VectorXd u; // exposure, length n

    Eigen::Index n() const { return x.rows(); }
    Eigen::Index p() const { return x.cols(); }
};

/// Throws InvalidDataSet unless dimensions are consistent, n >= min_n,
/// p >= 1 and every entry is finite.
void validate_dataset(const DataSet& data, Eigen::Index min_n = 2);

} // namespace condscreen
