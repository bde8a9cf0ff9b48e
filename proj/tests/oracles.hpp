#pragma once

#include <Eigen/Dense>

#include "condscreen/dataset.hpp"
#include "condscreen/rng.hpp"

// Independent brute-force transcriptions of the estimators, written as
// direct nested-loop sums with no shared code, sorting, or prefix tricks.
// Deliberately O(n^3 p) and unoptimized: reference values only.
namespace oracle {

Eigen::VectorXd csirs(const condscreen::DataSet& d, double h, double eps);
Eigen::VectorXd sirs(const condscreen::DataSet& d);
Eigen::VectorXd dcsis(const condscreen::DataSet& d, double eps);
Eigen::VectorXd ccsis(const condscreen::DataSet& d, double h, double eps);

/// Phi(z) by Simpson quadrature of the normal density, |error| < 1e-12.
double normal_cdf_quadrature(double z);

/// Simpson quadrature of f over [a, b] with `intervals` panels (even).
double simpson(double (*f)(double), double a, double b, int intervals);

condscreen::DataSet random_dataset(condscreen::Rng& rng, Eigen::Index n, Eigen::Index p);

/// variant cycles through degeneracies: 0 plain, 1 one constant predictor,
/// 2 heavy ties in y (3 distinct values), 3 constant y, 4 near-constant
/// exposure, 5 duplicated rows.
condscreen::DataSet degenerate_dataset(condscreen::Rng& rng, Eigen::Index n, Eigen::Index p,
                                       int variant);

} // namespace oracle
