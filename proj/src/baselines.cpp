#include "condscreen/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace condscreen {

UtilityVector sirs_utility_all(const DataSet& data) {
    validate_dataset(data);
    const Eigen::Index n = data.n();
    const Eigen::Index p = data.p();
    const double inv_n = 1.0 / static_cast<double>(n);

    std::vector<Eigen::Index> sorted(n);
    std::iota(sorted.begin(), sorted.end(), Eigen::Index{0});
    std::stable_sort(sorted.begin(), sorted.end(),
                     [&](Eigen::Index a, Eigen::Index b) { return data.y[a] < data.y[b]; });
    Eigen::VectorXd ys(n);
    for (Eigen::Index s = 0; s < n; ++s) ys[s] = data.y[sorted[s]];
    std::vector<Eigen::Index> count_le(n);
    for (Eigen::Index l = 0; l < n; ++l) {
        count_le[l] = std::upper_bound(ys.data(), ys.data() + n, data.y[l]) - ys.data();
    }

    UtilityVector result;
    result.method = Method::SIRS;
    result.omega = Eigen::VectorXd::Zero(p);
    Eigen::VectorXd prefix(n);

    for (Eigen::Index k = 0; k < p; ++k) {
        const auto xk = data.x.col(k);
        const double mean = xk.mean();
        const double var = (xk.array() - mean).square().sum() * inv_n;
        if (!(var > 0.0)) continue; // constant predictor scores 0
        const double inv_sd = 1.0 / std::sqrt(var);

        double run = 0.0;
        for (Eigen::Index s = 0; s < n; ++s) {
            run += (xk[sorted[s]] - mean) * inv_sd;
            prefix[s] = run;
        }
        double sum_sq = 0.0;
        for (Eigen::Index l = 0; l < n; ++l) {
            const double rho = prefix[count_le[l] - 1] * inv_n;
            sum_sq += rho * rho;
        }
        result.omega[k] = sum_sq * inv_n;
    }
    return result;
}

UtilityVector dcsis_utility_all(const DataSet& data, double eps) {
    validate_dataset(data);
    const Eigen::Index n = data.n();
    const Eigen::Index p = data.p();
    const double inv_n2 = 1.0 / (static_cast<double>(n) * static_cast<double>(n));

    // Double-centered |y_i - y_j| distances, built once.
    Eigen::MatrixXd b(n, n);
    for (Eigen::Index j = 0; j < n; ++j) {
        for (Eigen::Index i = 0; i < n; ++i) {
            b(i, j) = std::abs(data.y[i] - data.y[j]);
        }
    }
    const Eigen::VectorXd b_col = b.colwise().mean();
    const Eigen::VectorXd b_row = b.rowwise().mean();
    const double b_grand = b.mean();
    Eigen::MatrixXd bc(n, n);
    for (Eigen::Index j = 0; j < n; ++j) {
        for (Eigen::Index i = 0; i < n; ++i) {
            bc(i, j) = b(i, j) - b_row[i] - b_col[j] + b_grand;
        }
    }
    const double dvar_y = bc.array().square().sum() * inv_n2;

    UtilityVector result;
    result.method = Method::DCSIS;
    result.omega = Eigen::VectorXd::Zero(p);
    if (!(dvar_y > eps)) return result;

    Eigen::MatrixXd a(n, n);
    for (Eigen::Index k = 0; k < p; ++k) {
        const auto xk = data.x.col(k);
        for (Eigen::Index j = 0; j < n; ++j) {
            for (Eigen::Index i = 0; i < n; ++i) {
                a(i, j) = std::abs(xk[i] - xk[j]);
            }
        }
        const Eigen::VectorXd a_col = a.colwise().mean();
        const Eigen::VectorXd a_row = a.rowwise().mean();
        const double a_grand = a.mean();

        double dcov = 0.0, dvar_x = 0.0;
        for (Eigen::Index j = 0; j < n; ++j) {
            for (Eigen::Index i = 0; i < n; ++i) {
                const double ac = a(i, j) - a_row[i] - a_col[j] + a_grand;
                dcov += ac * bc(i, j);
                dvar_x += ac * ac;
            }
        }
        dcov *= inv_n2;
        dvar_x *= inv_n2;
        if (dcov < 0.0) dcov = 0.0;
        if (dvar_x > eps) {
            result.omega[k] = dcov / (std::sqrt(dvar_x) * std::sqrt(dvar_y));
        }
    }
    return result;
}

UtilityVector ccsis_utility_all(const DataSet& data, const KernelSpec& spec, double eps) {
    validate_dataset(data);
    const Eigen::Index n = data.n();
    const Eigen::Index p = data.p();

    const Eigen::MatrixXd w = kernel_weight_matrix(data.u, spec);

    Eigen::VectorXd inv_colsum(n), mean_y(n), inv_var_y(n);
    for (Eigen::Index j = 0; j < n; ++j) {
        const double* wj = w.col(j).data();
        double s = 0.0, sy = 0.0, syy = 0.0;
        for (Eigen::Index i = 0; i < n; ++i) {
            s += wj[i];
            const double wy = wj[i] * data.y[i];
            sy += wy;
            syy += wy * data.y[i];
        }
        inv_colsum[j] = 1.0 / s;
        const double my = sy * inv_colsum[j];
        double var_y = syy * inv_colsum[j] - my * my;
        if (var_y < 0.0) var_y = 0.0;
        mean_y[j] = my;
        inv_var_y[j] = var_y > eps ? 1.0 / var_y : 0.0;
    }

    UtilityVector result;
    result.method = Method::CCSIS;
    result.omega = Eigen::VectorXd::Zero(p);

    for (Eigen::Index k = 0; k < p; ++k) {
        const double* xk = data.x.col(k).data();
        double total = 0.0;
        for (Eigen::Index j = 0; j < n; ++j) {
            if (inv_var_y[j] == 0.0) continue;
            const double* wj = w.col(j).data();
            double sx = 0.0, sxx = 0.0, sxy = 0.0;
            for (Eigen::Index i = 0; i < n; ++i) {
                const double wx = wj[i] * xk[i];
                sx += wx;
                sxx += wx * xk[i];
                sxy += wx * data.y[i];
            }
            const double m1 = sx * inv_colsum[j];
            double var_x = sxx * inv_colsum[j] - m1 * m1;
            if (var_x < 0.0) var_x = 0.0;
            if (!(var_x > eps)) continue;
            const double cov = sxy * inv_colsum[j] - m1 * mean_y[j];
            total += cov * cov * inv_var_y[j] / var_x;
        }
        result.omega[k] = total / static_cast<double>(n);
    }
    return result;
}

} // namespace condscreen
