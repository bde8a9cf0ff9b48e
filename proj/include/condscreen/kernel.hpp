#pragma once

#include <Eigen/Dense>

#include "condscreen/errors.hpp"

namespace condscreen {

enum class KernelFamily { Epanechnikov };

/// How the bandwidth was obtained. Kept alongside the resolved value so a
/// run manifest can echo the rule, not just the number.
struct BandwidthRule {
    enum class Kind { Fixed, Rate };
    Kind kind = Kind::Fixed;
    double c = 0.0;     // Fixed: h itself; Rate: scale in h = c * n^(-theta)
    double theta = 0.0; // Rate only
};

struct KernelSpec {
    KernelFamily family = KernelFamily::Epanechnikov;
    double bandwidth = 0.0; // resolved h, must be > 0
    BandwidthRule rule;
};

KernelSpec fixed_bandwidth(double h);

/// h = c * n^(-theta). theta must lie in (1/8, 1/4), the admissible range
/// for a second-order kernel; defaults to 0.2.
KernelSpec rate_bandwidth(double c, Eigen::Index n, double theta = 0.2);

/// Scaled kernel weight K_h(t) = K(t/h)/h with the Epanechnikov kernel
/// K(v) = 0.75 (1 - v^2) on |v| <= 1, zero outside.
double kernel_weight(double t, const KernelSpec& spec);

/// Rule-of-thumb default h = 1.06 * sd(u) * n^(-1/5), sd with divisor n-1.
/// Throws ConstantExposure when sd(u) = 0.
double default_bandwidth(const Eigen::VectorXd& u);

/// Dense weight matrix w(i,j) = K_h(u_i - u_j).
Eigen::MatrixXd kernel_weight_matrix(const Eigen::VectorXd& u, const KernelSpec& spec);

} // namespace condscreen
