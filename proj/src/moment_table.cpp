#include "condscreen/moment_table.hpp"

#include <algorithm>
#include <numeric>

namespace condscreen {

ConditionalMomentTable build_moment_table(const DataSet& data, const KernelSpec& spec) {
    validate_dataset(data, /*min_n=*/1);
    if (!(spec.bandwidth > 0.0)) {
        throw Error("build_moment_table: bandwidth not resolved");
    }
    const Eigen::Index n = data.n();

    ConditionalMomentTable t;
    t.w = kernel_weight_matrix(data.u, spec);

    t.sorted_by_y.resize(n);
    std::iota(t.sorted_by_y.begin(), t.sorted_by_y.end(), Eigen::Index{0});
    std::stable_sort(t.sorted_by_y.begin(), t.sorted_by_y.end(),
                     [&](Eigen::Index a, Eigen::Index b) { return data.y[a] < data.y[b]; });

    // count_le[l] = #{i : y_i <= y_l}; with ties this is the position just
    // past the last equal element in sorted order.
    Eigen::VectorXd ys(n);
    for (Eigen::Index s = 0; s < n; ++s) ys[s] = data.y[t.sorted_by_y[s]];
    t.count_le.resize(n);
    for (Eigen::Index l = 0; l < n; ++l) {
        t.count_le[l] = std::upper_bound(ys.data(), ys.data() + n, data.y[l]) - ys.data();
    }

    // Prefix sums of kernel weights in sorted-y order. fhat(j) is taken from
    // the full prefix so that cdf at the maximal response is exactly 1.
    t.gind.resize(n, n);
    t.fhat.resize(n);
    t.cdf.resize(n, n);
    Eigen::VectorXd prefix(n);
    const double inv_n = 1.0 / static_cast<double>(n);
    for (Eigen::Index j = 0; j < n; ++j) {
        const double* wj = t.w.col(j).data();
        double run = 0.0;
        for (Eigen::Index s = 0; s < n; ++s) {
            run += wj[t.sorted_by_y[s]];
            prefix[s] = run;
        }
        t.fhat[j] = prefix[n - 1] * inv_n;
        for (Eigen::Index l = 0; l < n; ++l) {
            const double g = prefix[t.count_le[l] - 1] * inv_n;
            t.gind(l, j) = g;
            // direct division: g == fhat bitwise on the max-response row,
            // so cdf is exactly 1 there
            t.cdf(l, j) = g / t.fhat[j];
        }
    }
    return t;
}

} // namespace condscreen
