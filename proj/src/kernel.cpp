#include "condscreen/kernel.hpp"

#include <cmath>
#include <string>

namespace condscreen {

KernelSpec fixed_bandwidth(double h) {
    if (!(h > 0.0) || !std::isfinite(h)) {
        throw Error("bandwidth must be a positive finite number, got " + std::to_string(h));
    }
    KernelSpec spec;
    spec.bandwidth = h;
    spec.rule = {BandwidthRule::Kind::Fixed, h, 0.0};
    return spec;
}

KernelSpec rate_bandwidth(double c, Eigen::Index n, double theta) {
    if (!(c > 0.0)) {
        throw Error("rate bandwidth scale c must be positive");
    }
    if (!(theta > 0.125 && theta < 0.25)) {
        throw Error("rate bandwidth exponent theta must lie in (1/8, 1/4)");
    }
    if (n < 1) {
        throw Error("rate bandwidth needs n >= 1");
    }
    KernelSpec spec;
    spec.bandwidth = c * std::pow(static_cast<double>(n), -theta);
    spec.rule = {BandwidthRule::Kind::Rate, c, theta};
    return spec;
}

double kernel_weight(double t, const KernelSpec& spec) {
    const double h = spec.bandwidth;
    const double v = t / h;
    if (v <= -1.0 || v >= 1.0) return 0.0;
    return 0.75 * (1.0 - v * v) / h;
}

double default_bandwidth(const Eigen::VectorXd& u) {
    const Eigen::Index n = u.size();
    if (n < 2) {
        throw Error("default_bandwidth needs at least two observations");
    }
    const double mean = u.mean();
    const double ss = (u.array() - mean).square().sum();
    const double sd = std::sqrt(ss / static_cast<double>(n - 1));
    if (!(sd > 0.0)) {
        throw ConstantExposure("exposure is constant; bandwidth rule undefined");
    }
    return 1.06 * sd * std::pow(static_cast<double>(n), -0.2);
}

Eigen::MatrixXd kernel_weight_matrix(const Eigen::VectorXd& u, const KernelSpec& spec) {
    const Eigen::Index n = u.size();
    Eigen::MatrixXd w(n, n);
    for (Eigen::Index j = 0; j < n; ++j) {
        for (Eigen::Index i = 0; i < n; ++i) {
            w(i, j) = kernel_weight(u[i] - u[j], spec);
        }
    }
    return w;
}

} // namespace condscreen
