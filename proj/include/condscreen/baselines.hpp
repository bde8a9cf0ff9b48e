#pragma once

#include "condscreen/dataset.hpp"
#include "condscreen/kernel.hpp"
#include "condscreen/screening.hpp"

namespace condscreen {

/// SIRS utility: omega_k = n^-1 sum_l [ n^-1 sum_i xt_ik 1[y_i <= y_l] ]^2
/// with each column standardized to mean 0, variance 1 (divisor n).
/// A constant column cannot be standardized and scores 0. Ignores u.
UtilityVector sirs_utility_all(const DataSet& data);

/// DC-SIS utility: squared sample distance correlation between X_k and Y,
/// biased V-statistic with the usual pairwise-distance double-centering.
/// 0 when either distance variance is at or below eps. Ignores u.
UtilityVector dcsis_utility_all(const DataSet& data, double eps = kDefaultEps);

/// CC-SIS utility: omega_k = n^-1 sum_j corr^2(X_k, Y | u_j) with the same
/// Nadaraya-Watson conditional moments as C-SIRS but the raw response in
/// place of the indicator process. Same eps rule as csirs_utility.
UtilityVector ccsis_utility_all(const DataSet& data, const KernelSpec& spec,
                                double eps = kDefaultEps);

} // namespace condscreen
