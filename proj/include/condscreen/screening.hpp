#pragma once

#include <map>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "condscreen/dataset.hpp"
#include "condscreen/kernel.hpp"
#include "condscreen/moment_table.hpp"

namespace condscreen {

enum class Method { CSIRS, SIRS, DCSIS, CCSIS };

std::string method_name(Method m);
Method method_from_string(const std::string& s); // throws Error on unknown name

/// Per-predictor screening utilities omega[k] (0-based storage, predictor
/// k+1). For CSIRS every entry lies in [0, 1].
struct UtilityVector {
    Eigen::VectorXd omega;
    Method method = Method::CSIRS;
};

/// Descending-utility ranking with deterministic tie-break (smaller
/// predictor index first). `selected[d]` is the top-d prefix of `ranking`.
/// Predictor indices are 1-based throughout.
struct ScreeningResult {
    UtilityVector utilities;
    std::vector<int> ranking;  // ranking[r] = predictor at rank r+1
    std::vector<int> position; // position[k-1] = 1-based rank of predictor k
    std::map<int, std::vector<int>> selected;
};

inline constexpr double kDefaultEps = 1e-12;

/// C-SIRS utility of predictor k (1-based):
///
///   omega_k = n^-2 sum_l sum_j  cov^2{X_k, 1[Y<=Y_l] | u_j}
///                              -------------------------------------
///                              var(X_k | u_j) * var(1[Y<=Y_l] | u_j)
///
/// with every conditional moment the Nadaraya-Watson estimate from `table`.
/// A term whose variance factor falls at or below eps (after clamping
/// negative variances to zero) contributes exactly 0.
///
/// Throws IndexOutOfRange for bad k, TableMismatch when the table was built
/// from a different sample size.
double csirs_utility(const DataSet& data, Eigen::Index k,
                     const ConditionalMomentTable& table,
                     double eps = kDefaultEps);

/// All p utilities against one shared table. Deterministic: each predictor
/// is an independent fixed-order reduction, so the result is bitwise
/// identical for any `threads` value (0 = hardware concurrency).
UtilityVector csirs_all(const DataSet& data, const KernelSpec& spec,
                        double eps = kDefaultEps, int threads = 1);

/// Sorts predictors by descending utility (ties: ascending index) and takes
/// the top-d set for every cutoff. Throws InvalidCutoff unless 1 <= d <= p.
ScreeningResult rank_and_select(const UtilityVector& utilities,
                                const std::vector<int>& cutoffs);

/// Submodel size d = nu * floor(n^(4/5) / log(n^(4/5))), natural log.
int submodel_size(Eigen::Index n, int nu);

namespace detail {

/// Reciprocal lookups shared across predictors; zero entries encode the
/// eps rule so the inner loop stays branch-free.
struct CsirsWorkspace {
    Eigen::VectorXd inv_colsum;  // 1 / (n * fhat(j))
    Eigen::MatrixXd inv_var_ind; // (l,j): 1/var{1[Y<=Y_l]|u_j}, or 0 at/below eps
};

CsirsWorkspace make_csirs_workspace(const ConditionalMomentTable& table, double eps);

/// Single-predictor kernel used by both csirs_utility and csirs_all; the
/// shared arithmetic keeps the two entry points bitwise consistent.
double csirs_one(const Eigen::MatrixXd& x, Eigen::Index col,
                 const ConditionalMomentTable& table,
                 const CsirsWorkspace& ws, double eps);

} // namespace detail

} // namespace condscreen
