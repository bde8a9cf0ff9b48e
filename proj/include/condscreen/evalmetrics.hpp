#pragma once

#include <map>
#include <vector>

#include "condscreen/screening.hpp"

namespace condscreen {

/// Aggregated study criteria: mean rank per active predictor, quantiles of
/// the minimum model size, and selection proportions P_a / P_k per cutoff.
struct EvaluationMetrics {
    std::map<int, double> rank_by_active;           // k -> mean R_k
    std::map<double, double> min_model_size_quantiles; // level in (0,1) -> S quantile
    std::map<int, double> p_all;                    // d -> P_a(d)
    std::map<int, std::map<int, double>> p_each;    // d -> (k -> P_k(d))
};

inline const std::vector<double> kDefaultQuantileLevels = {0.05, 0.25, 0.50, 0.75, 0.95};

/// 1-based position of predictor k in the descending ranking.
int rank_of(const ScreeningResult& result, int k);

/// Largest rank among the active predictors: the smallest d whose top-d
/// submodel contains all of them.
int min_model_size(const ScreeningResult& result, const std::vector<int>& active);

/// Type-7 linear interpolation quantile of a sample (the sample is copied
/// and sorted internally).
double quantile_type7(std::vector<double> sample, double level);

EvaluationMetrics aggregate(const std::vector<ScreeningResult>& per_rep,
                            const std::vector<int>& active,
                            const std::vector<int>& cutoffs,
                            const std::vector<double>& quantile_levels = kDefaultQuantileLevels);

} // namespace condscreen
