#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "condscreen/dataset.hpp"
#include "condscreen/rng.hpp"

namespace condscreen {

enum class Scenario { Ex1Case1, Ex1Case2, Ex2Case1, Ex2Case2, Ex2Case3, Ex2Case4 };

std::string scenario_name(Scenario s);
Scenario scenario_from_string(const std::string& s); // throws UnsupportedScenario

/// Active indices {2, 100, 400, 600, 1000}, rescaled proportionally when
/// p != 1000 (rounded, clamped to [1, p], strictly increasing).
std::vector<int> default_active_set(Eigen::Index p);

/// One Monte Carlo setting: predictors and the latent exposure are jointly
/// N(0, Sigma) with Sigma_ab = rho^|a-b| over p+1 coordinates, the exposure
/// occupying the last one.
struct ScenarioSpec {
    Scenario name = Scenario::Ex1Case1;
    Eigen::Index n = 200;
    Eigen::Index p = 1000;
    double rho = 0.5;
    std::vector<int> active_set; // empty = default_active_set(p)
    std::uint64_t seed = 0;

    std::vector<int> resolved_active() const;
};

/// Coefficient functions beta_k(u) attached to the active indices in order;
/// zero for every other predictor.
struct CoefficientProfile {
    std::vector<int> active;                         // 1-based, increasing
    std::vector<std::function<double(double)>> beta; // one per active index

    double operator()(int k, double u) const;
};

/// The profile used throughout the simulation studies:
///   2 I(u > 0.4),  1 + u,  (2 - 3u)^2,  2 sin(2 pi u),  exp{u / (u + 1)}
/// mapped positionally onto the five active indices.
CoefficientProfile default_coefficients(const std::vector<int>& active);

/// All-zero coefficients (test hook for null models).
CoefficientProfile zero_coefficients(const std::vector<int>& active);

struct Replication {
    DataSet data;
    ScenarioSpec scenario;
    int eta_clamp_count = 0; // times the Poisson log-mean hit the +30 guard
};

/// Rows i.i.d. N(0, Sigma), Sigma_ab = rho^|a-b|, via the stationary AR(1)
/// recursion z_a = rho z_{a-1} + sqrt(1-rho^2) eps_a. O(dim) per row.
Eigen::MatrixXd sample_ar_gaussian(Eigen::Index n, Eigen::Index dim, double rho, Rng& rng);

double normal_cdf(double z);

/// u_i = Phi(z_i); outputs lie strictly inside (0, 1).
Eigen::VectorXd make_exposure(const Eigen::VectorXd& z);

Replication generate(const ScenarioSpec& spec);
Replication generate(const ScenarioSpec& spec, const CoefficientProfile& profile);

} // namespace condscreen
