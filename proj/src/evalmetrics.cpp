#include "condscreen/evalmetrics.hpp"

#include <algorithm>
#include <cmath>

#include "condscreen/errors.hpp"

namespace condscreen {

int rank_of(const ScreeningResult& result, int k) {
    const auto p = static_cast<int>(result.position.size());
    if (k < 1 || k > p) {
        throw IndexOutOfRange("rank_of: predictor index " + std::to_string(k) +
                              " outside [1, " + std::to_string(p) + "]");
    }
    return result.position[static_cast<std::size_t>(k) - 1];
}

int min_model_size(const ScreeningResult& result, const std::vector<int>& active) {
    if (active.empty()) throw EmptyActiveSet("min_model_size: empty active set");
    int worst = 0;
    for (int k : active) worst = std::max(worst, rank_of(result, k));
    return worst;
}

double quantile_type7(std::vector<double> sample, double level) {
    if (sample.empty()) throw Error("quantile of an empty sample");
    if (!(level >= 0.0 && level <= 1.0)) throw Error("quantile level outside [0, 1]");
    std::sort(sample.begin(), sample.end());
    const auto n = sample.size();
    const double pos = level * static_cast<double>(n - 1);
    const auto lo = static_cast<std::size_t>(std::floor(pos));
    if (lo + 1 >= n) return sample[n - 1];
    const double frac = pos - static_cast<double>(lo);
    return sample[lo] + frac * (sample[lo + 1] - sample[lo]);
}

EvaluationMetrics aggregate(const std::vector<ScreeningResult>& per_rep,
                            const std::vector<int>& active,
                            const std::vector<int>& cutoffs,
                            const std::vector<double>& quantile_levels) {
    if (per_rep.empty()) throw Error("aggregate: no replications");
    if (active.empty()) throw EmptyActiveSet("aggregate: empty active set");
    const auto p = per_rep.front().position.size();
    for (const auto& r : per_rep) {
        if (r.position.size() != p) {
            throw InconsistentDimensions("aggregate: replications disagree on p");
        }
    }

    const double reps = static_cast<double>(per_rep.size());
    EvaluationMetrics m;

    std::vector<double> sizes;
    sizes.reserve(per_rep.size());
    for (int k : active) m.rank_by_active[k] = 0.0;
    for (const auto& r : per_rep) {
        for (int k : active) m.rank_by_active[k] += rank_of(r, k);
        sizes.push_back(static_cast<double>(min_model_size(r, active)));
    }
    for (auto& [k, sum] : m.rank_by_active) sum /= reps;

    for (double level : quantile_levels) {
        m.min_model_size_quantiles[level] = quantile_type7(sizes, level);
    }

    for (int d : cutoffs) {
        int all_in = 0;
        std::map<int, int> each_in;
        for (int k : active) each_in[k] = 0;
        for (std::size_t r = 0; r < per_rep.size(); ++r) {
            bool all = true;
            for (int k : active) {
                const bool in = rank_of(per_rep[r], k) <= d;
                all = all && in;
                each_in[k] += in ? 1 : 0;
            }
            // cross-check against the S-based path
            const bool via_s = sizes[r] <= static_cast<double>(d);
            if (all != via_s) throw Error("aggregate: P_a paths disagree");
            all_in += all ? 1 : 0;
        }
        m.p_all[d] = all_in / reps;
        for (int k : active) m.p_each[d][k] = each_in[k] / reps;
    }
    return m;
}

} // namespace condscreen
