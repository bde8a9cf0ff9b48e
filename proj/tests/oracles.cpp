#include "oracles.hpp"

#include <cmath>
#include <numbers>

namespace oracle {

namespace {

double epan(double t, double h) {
    const double v = t / h;
    if (std::abs(v) >= 1.0) return 0.0;
    return 0.75 * (1.0 - v * v) / h;
}

} // namespace

Eigen::VectorXd csirs(const condscreen::DataSet& d, double h, double eps) {
    const Eigen::Index n = d.n();
    const Eigen::Index p = d.p();
    Eigen::VectorXd omega = Eigen::VectorXd::Zero(p);
    for (Eigen::Index k = 0; k < p; ++k) {
        double total = 0.0;
        for (Eigen::Index j = 0; j < n; ++j) {
            double sw = 0.0, swx = 0.0, swxx = 0.0;
            for (Eigen::Index i = 0; i < n; ++i) {
                const double w = epan(d.u[i] - d.u[j], h);
                sw += w;
                swx += w * d.x(i, k);
                swxx += w * d.x(i, k) * d.x(i, k);
            }
            const double m1 = swx / sw;
            double var_x = swxx / sw - m1 * m1;
            if (var_x < 0.0) var_x = 0.0;
            if (!(var_x > eps)) continue;
            for (Eigen::Index l = 0; l < n; ++l) {
                double swi = 0.0, swxi = 0.0;
                for (Eigen::Index i = 0; i < n; ++i) {
                    if (d.y[i] <= d.y[l]) {
                        const double w = epan(d.u[i] - d.u[j], h);
                        swi += w;
                        swxi += w * d.x(i, k);
                    }
                }
                const double f = swi / sw;
                double var_i = f * (1.0 - f);
                if (var_i < 0.0) var_i = 0.0;
                if (!(var_i > eps)) continue;
                const double cov = swxi / sw - m1 * f;
                total += cov * cov / (var_x * var_i);
            }
        }
        omega[k] = total / (static_cast<double>(n) * static_cast<double>(n));
    }
    return omega;
}

Eigen::VectorXd sirs(const condscreen::DataSet& d) {
    const Eigen::Index n = d.n();
    const Eigen::Index p = d.p();
    Eigen::VectorXd omega = Eigen::VectorXd::Zero(p);
    for (Eigen::Index k = 0; k < p; ++k) {
        double mean = 0.0;
        for (Eigen::Index i = 0; i < n; ++i) mean += d.x(i, k);
        mean /= static_cast<double>(n);
        double var = 0.0;
        for (Eigen::Index i = 0; i < n; ++i) {
            var += (d.x(i, k) - mean) * (d.x(i, k) - mean);
        }
        var /= static_cast<double>(n);
        if (var <= 0.0) continue;
        const double sd = std::sqrt(var);
        double total = 0.0;
        for (Eigen::Index l = 0; l < n; ++l) {
            double rho = 0.0;
            for (Eigen::Index i = 0; i < n; ++i) {
                if (d.y[i] <= d.y[l]) rho += (d.x(i, k) - mean) / sd;
            }
            rho /= static_cast<double>(n);
            total += rho * rho;
        }
        omega[k] = total / static_cast<double>(n);
    }
    return omega;
}

Eigen::VectorXd dcsis(const condscreen::DataSet& d, double eps) {
    const Eigen::Index n = d.n();
    const Eigen::Index p = d.p();
    Eigen::MatrixXd b(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) b(i, j) = std::abs(d.y[i] - d.y[j]);
    }
    const Eigen::VectorXd brow = b.rowwise().mean();
    const double bbar = b.mean();
    Eigen::MatrixXd bc(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            bc(i, j) = b(i, j) - brow[i] - brow[j] + bbar;
        }
    }
    const double dvar_y = bc.cwiseProduct(bc).mean();

    Eigen::VectorXd omega = Eigen::VectorXd::Zero(p);
    for (Eigen::Index k = 0; k < p; ++k) {
        Eigen::MatrixXd a(n, n);
        for (Eigen::Index i = 0; i < n; ++i) {
            for (Eigen::Index j = 0; j < n; ++j) a(i, j) = std::abs(d.x(i, k) - d.x(j, k));
        }
        const Eigen::VectorXd arow = a.rowwise().mean();
        const double abar = a.mean();
        Eigen::MatrixXd ac(n, n);
        for (Eigen::Index i = 0; i < n; ++i) {
            for (Eigen::Index j = 0; j < n; ++j) {
                ac(i, j) = a(i, j) - arow[i] - arow[j] + abar;
            }
        }
        const double dvar_x = ac.cwiseProduct(ac).mean();
        double dcov = ac.cwiseProduct(bc).mean();
        if (dcov < 0.0) dcov = 0.0;
        if (dvar_x > eps && dvar_y > eps) {
            omega[k] = dcov / std::sqrt(dvar_x * dvar_y);
        }
    }
    return omega;
}

Eigen::VectorXd ccsis(const condscreen::DataSet& d, double h, double eps) {
    const Eigen::Index n = d.n();
    const Eigen::Index p = d.p();
    Eigen::VectorXd omega = Eigen::VectorXd::Zero(p);
    for (Eigen::Index k = 0; k < p; ++k) {
        double total = 0.0;
        for (Eigen::Index j = 0; j < n; ++j) {
            double sw = 0.0, swx = 0.0, swxx = 0.0, swy = 0.0, swyy = 0.0, swxy = 0.0;
            for (Eigen::Index i = 0; i < n; ++i) {
                const double w = epan(d.u[i] - d.u[j], h);
                sw += w;
                swx += w * d.x(i, k);
                swxx += w * d.x(i, k) * d.x(i, k);
                swy += w * d.y[i];
                swyy += w * d.y[i] * d.y[i];
                swxy += w * d.x(i, k) * d.y[i];
            }
            const double mx = swx / sw;
            const double my = swy / sw;
            double var_x = swxx / sw - mx * mx;
            double var_y = swyy / sw - my * my;
            if (var_x < 0.0) var_x = 0.0;
            if (var_y < 0.0) var_y = 0.0;
            if (!(var_x > eps) || !(var_y > eps)) continue;
            const double cov = swxy / sw - mx * my;
            total += cov * cov / (var_x * var_y);
        }
        omega[k] = total / static_cast<double>(n);
    }
    return omega;
}

namespace {

double normal_pdf(double t) {
    return std::exp(-0.5 * t * t) / std::sqrt(2.0 * std::numbers::pi);
}

} // namespace

double simpson(double (*f)(double), double a, double b, int intervals) {
    const double step = (b - a) / intervals;
    double acc = f(a) + f(b);
    for (int i = 1; i < intervals; ++i) {
        acc += f(a + i * step) * (i % 2 == 1 ? 4.0 : 2.0);
    }
    return acc * step / 3.0;
}

double normal_cdf_quadrature(double z) {
    if (z < -12.0) return 0.0;
    if (z > 12.0) return 1.0;
    return 0.5 + simpson(&normal_pdf, 0.0, z, 4000);
}

condscreen::DataSet random_dataset(condscreen::Rng& rng, Eigen::Index n, Eigen::Index p) {
    condscreen::DataSet d;
    d.x.resize(n, p);
    d.y.resize(n);
    d.u.resize(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index k = 0; k < p; ++k) d.x(i, k) = rng.normal();
        d.y[i] = rng.normal() + 0.5 * d.x(i, 0);
        d.u[i] = rng.uniform01();
    }
    return d;
}

condscreen::DataSet degenerate_dataset(condscreen::Rng& rng, Eigen::Index n, Eigen::Index p,
                                       int variant) {
    condscreen::DataSet d = random_dataset(rng, n, p);
    switch (variant % 6) {
        case 1:
            d.x.col(0).setConstant(2.5);
            break;
        case 2:
            for (Eigen::Index i = 0; i < n; ++i) {
                d.y[i] = static_cast<double>(static_cast<int>(rng.uniform01() * 3.0));
            }
            break;
        case 3:
            d.y.setConstant(-1.0);
            break;
        case 4:
            d.u.setConstant(0.5);
            d.u[0] = 0.5 + 1e-9;
            break;
        case 5:
            if (n >= 2) {
                d.x.row(n - 1) = d.x.row(0);
                d.y[n - 1] = d.y[0];
                d.u[n - 1] = d.u[0];
            }
            break;
        default:
            break;
    }
    return d;
}

} // namespace oracle
