#include "condscreen/screening.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cmath>
#include <numeric>
#include <thread>

namespace condscreen {

std::string method_name(Method m) {
    switch (m) {
        case Method::CSIRS: return "CSIRS";
        case Method::SIRS: return "SIRS";
        case Method::DCSIS: return "DCSIS";
        case Method::CCSIS: return "CCSIS";
    }
    return "?";
}

Method method_from_string(const std::string& s) {
    std::string t;
    t.reserve(s.size());
    for (char c : s) t.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    if (t == "csirs" || t == "c-sirs") return Method::CSIRS;
    if (t == "sirs") return Method::SIRS;
    if (t == "dcsis" || t == "dc-sis") return Method::DCSIS;
    if (t == "ccsis" || t == "cc-sis") return Method::CCSIS;
    throw Error("unknown method '" + s + "' (expected csirs, sirs, dcsis or ccsis)");
}

namespace detail {

CsirsWorkspace make_csirs_workspace(const ConditionalMomentTable& table, double eps) {
    const Eigen::Index n = table.n();
    CsirsWorkspace ws;
    ws.inv_colsum.resize(n);
    for (Eigen::Index j = 0; j < n; ++j) {
        ws.inv_colsum[j] = 1.0 / (static_cast<double>(n) * table.fhat[j]);
    }
    ws.inv_var_ind.resize(n, n);
    for (Eigen::Index j = 0; j < n; ++j) {
        for (Eigen::Index l = 0; l < n; ++l) {
            const double f = table.cdf(l, j);
            const double v = f * (1.0 - f); // var of an indicator given u_j
            ws.inv_var_ind(l, j) = v > eps ? 1.0 / v : 0.0;
        }
    }
    return ws;
}

double csirs_one(const Eigen::MatrixXd& x, Eigen::Index col,
                 const ConditionalMomentTable& table,
                 const CsirsWorkspace& ws, double eps) {
    const Eigen::Index n = table.n();
    const double* xk = x.col(col).data();
    Eigen::VectorXd prefix(n);
    double total = 0.0;

    for (Eigen::Index j = 0; j < n; ++j) {
        const double* wj = table.w.col(j).data();
        const double inv_s = ws.inv_colsum[j];

        double sx = 0.0, sxx = 0.0;
        for (Eigen::Index i = 0; i < n; ++i) {
            const double wx = wj[i] * xk[i];
            sx += wx;
            sxx += wx * xk[i];
        }
        const double m1 = sx * inv_s;
        double var_x = sxx * inv_s - m1 * m1;
        if (var_x < 0.0) var_x = 0.0; // cancellation guard
        if (!(var_x > eps)) continue; // every term at this u_j is zero

        double run = 0.0;
        for (Eigen::Index s = 0; s < n; ++s) {
            const Eigen::Index i = table.sorted_by_y[s];
            run += wj[i] * xk[i];
            prefix[s] = run;
        }

        double acc = 0.0;
        for (Eigen::Index l = 0; l < n; ++l) {
            const double cross = prefix[table.count_le[l] - 1] * inv_s;
            const double cov = cross - m1 * table.cdf(l, j);
            acc += cov * cov * ws.inv_var_ind(l, j);
        }
        total += acc / var_x;
    }
    return total / (static_cast<double>(n) * static_cast<double>(n));
}

} // namespace detail

double csirs_utility(const DataSet& data, Eigen::Index k,
                     const ConditionalMomentTable& table, double eps) {
    if (k < 1 || k > data.p()) {
        throw IndexOutOfRange("csirs_utility: predictor index " + std::to_string(k) +
                              " outside [1, " + std::to_string(data.p()) + "]");
    }
    if (table.n() != data.n()) {
        throw TableMismatch("csirs_utility: table built for n = " + std::to_string(table.n()) +
                            ", dataset has n = " + std::to_string(data.n()));
    }
    const detail::CsirsWorkspace ws = detail::make_csirs_workspace(table, eps);
    return detail::csirs_one(data.x, k - 1, table, ws, eps);
}

UtilityVector csirs_all(const DataSet& data, const KernelSpec& spec, double eps, int threads) {
    validate_dataset(data);
    const ConditionalMomentTable table = build_moment_table(data, spec);
    const detail::CsirsWorkspace ws = detail::make_csirs_workspace(table, eps);

    const Eigen::Index p = data.p();
    UtilityVector result;
    result.method = Method::CSIRS;
    result.omega.resize(p);

    int nthreads = threads;
    if (nthreads <= 0) nthreads = static_cast<int>(std::thread::hardware_concurrency());
    if (nthreads < 1) nthreads = 1;
    nthreads = static_cast<int>(std::min<Eigen::Index>(nthreads, p));

    if (nthreads == 1) {
        for (Eigen::Index k = 0; k < p; ++k) {
            result.omega[k] = detail::csirs_one(data.x, k, table, ws, eps);
        }
    } else {
        std::atomic<Eigen::Index> next{0};
        auto work = [&]() {
            for (;;) {
                const Eigen::Index k = next.fetch_add(1);
                if (k >= p) return;
                result.omega[k] = detail::csirs_one(data.x, k, table, ws, eps);
            }
        };
        std::vector<std::thread> pool;
        pool.reserve(nthreads);
        for (int t = 0; t < nthreads; ++t) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }
    return result;
}

ScreeningResult rank_and_select(const UtilityVector& utilities,
                                const std::vector<int>& cutoffs) {
    const Eigen::Index p = utilities.omega.size();
    for (int d : cutoffs) {
        if (d < 1 || d > p) {
            throw InvalidCutoff("cutoff d = " + std::to_string(d) +
                                " outside [1, " + std::to_string(p) + "]");
        }
    }
    ScreeningResult res;
    res.utilities = utilities;
    res.ranking.resize(p);
    std::iota(res.ranking.begin(), res.ranking.end(), 1);
    std::stable_sort(res.ranking.begin(), res.ranking.end(), [&](int a, int b) {
        return utilities.omega[a - 1] > utilities.omega[b - 1];
    });
    res.position.resize(p);
    for (Eigen::Index r = 0; r < p; ++r) {
        res.position[res.ranking[r] - 1] = static_cast<int>(r) + 1;
    }
    for (int d : cutoffs) {
        res.selected[d] = std::vector<int>(res.ranking.begin(), res.ranking.begin() + d);
    }
    return res;
}

int submodel_size(Eigen::Index n, int nu) {
    if (n < 2) throw Error("submodel_size: n must be >= 2");
    if (nu < 1) throw Error("submodel_size: nu must be >= 1");
    const double m = std::pow(static_cast<double>(n), 0.8);
    return nu * static_cast<int>(std::floor(m / std::log(m)));
}

} // namespace condscreen
