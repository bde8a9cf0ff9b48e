#pragma once

#include <vector>

#include <Eigen/Dense>

#include "condscreen/dataset.hpp"
#include "condscreen/kernel.hpp"

namespace condscreen {

/// Precomputed Nadaraya-Watson machinery shared by every predictor:
///
///   w(i,j)    = K_h(u_i - u_j)
///   fhat(j)   = n^-1 sum_i w(i,j)                    (kernel density at u_j)
///   gind(l,j) = n^-1 sum_i w(i,j) 1[y_i <= y_l]
///   cdf(l,j)  = gind(l,j) / fhat(j)                  (estimated F(y_l | u_j))
///
/// fhat(j) > 0 always holds because the diagonal weight K(0)/h is positive.
/// The row of cdf belonging to l* = argmax y is exactly 1: fhat is
/// accumulated in the same (sorted-y) order as gind, so the ratio cancels
/// bitwise.
struct ConditionalMomentTable {
    Eigen::MatrixXd w;
    Eigen::VectorXd fhat;
    Eigen::MatrixXd gind;
    Eigen::MatrixXd cdf;

    // Sorted-y scaffolding reused by the per-predictor screening pass.
    std::vector<Eigen::Index> sorted_by_y; // stable ascending-y order
    std::vector<Eigen::Index> count_le;    // count_le[l] = #{i : y_i <= y_l}, in [1, n]

    Eigen::Index n() const { return w.rows(); }
};

/// Builds the table in O(n^2) using prefix sums over the sorted response.
/// Requires spec.bandwidth > 0. Accepts n = 1 (degenerate tables are useful
/// in tests); the screening entry points enforce n >= 2 themselves.
ConditionalMomentTable build_moment_table(const DataSet& data, const KernelSpec& spec);

} // namespace condscreen
