#include "condscreen/simgen.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>

#include "condscreen/errors.hpp"

namespace condscreen {

std::string scenario_name(Scenario s) {
    switch (s) {
        case Scenario::Ex1Case1: return "Ex1Case1";
        case Scenario::Ex1Case2: return "Ex1Case2";
        case Scenario::Ex2Case1: return "Ex2Case1";
        case Scenario::Ex2Case2: return "Ex2Case2";
        case Scenario::Ex2Case3: return "Ex2Case3";
        case Scenario::Ex2Case4: return "Ex2Case4";
    }
    return "?";
}

Scenario scenario_from_string(const std::string& s) {
    std::string t;
    t.reserve(s.size());
    for (char c : s) t.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    if (t == "ex1case1") return Scenario::Ex1Case1;
    if (t == "ex1case2") return Scenario::Ex1Case2;
    if (t == "ex2case1") return Scenario::Ex2Case1;
    if (t == "ex2case2") return Scenario::Ex2Case2;
    if (t == "ex2case3") return Scenario::Ex2Case3;
    if (t == "ex2case4") return Scenario::Ex2Case4;
    throw UnsupportedScenario("unknown scenario '" + s + "'");
}

std::vector<int> default_active_set(Eigen::Index p) {
    if (p < 5) throw Error("default active set needs p >= 5");
    const int base[] = {2, 100, 400, 600, 1000};
    if (p == 1000) return {base, base + 5};
    std::vector<int> active;
    active.reserve(5);
    for (int k : base) {
        int scaled = static_cast<int>(std::lround(static_cast<double>(k) * static_cast<double>(p) / 1000.0));
        scaled = std::clamp<int>(scaled, 1, static_cast<int>(p));
        if (!active.empty() && scaled <= active.back()) scaled = active.back() + 1; // keep a gap
        if (scaled > p) throw Error("cannot place 5 distinct active indices in p = " + std::to_string(p));
        active.push_back(scaled);
    }
    return active;
}

std::vector<int> ScenarioSpec::resolved_active() const {
    return active_set.empty() ? default_active_set(p) : active_set;
}

double CoefficientProfile::operator()(int k, double u) const {
    for (std::size_t i = 0; i < active.size(); ++i) {
        if (active[i] == k) return beta[i](u);
    }
    return 0.0;
}

CoefficientProfile default_coefficients(const std::vector<int>& active) {
    if (active.size() != 5) throw Error("coefficient profile expects 5 active indices");
    CoefficientProfile prof;
    prof.active = active;
    prof.beta = {
        [](double u) { return u > 0.4 ? 2.0 : 0.0; },
        [](double u) { return 1.0 + u; },
        [](double u) { const double t = 2.0 - 3.0 * u; return t * t; },
        [](double u) { return 2.0 * std::sin(2.0 * std::numbers::pi * u); },
        [](double u) { return std::exp(u / (u + 1.0)); },
    };
    return prof;
}

CoefficientProfile zero_coefficients(const std::vector<int>& active) {
    CoefficientProfile prof;
    prof.active = active;
    prof.beta.assign(active.size(), [](double) { return 0.0; });
    return prof;
}

Eigen::MatrixXd sample_ar_gaussian(Eigen::Index n, Eigen::Index dim, double rho, Rng& rng) {
    if (!(rho >= 0.0 && rho < 1.0)) throw Error("AR parameter rho must lie in [0, 1)");
    Eigen::MatrixXd z(n, dim);
    const double scale = std::sqrt(1.0 - rho * rho);
    for (Eigen::Index i = 0; i < n; ++i) {
        double prev = rng.normal();
        z(i, 0) = prev;
        for (Eigen::Index a = 1; a < dim; ++a) {
            prev = rho * prev + scale * rng.normal();
            z(i, a) = prev;
        }
    }
    return z;
}

double normal_cdf(double z) {
    return 0.5 * std::erfc(-z / std::numbers::sqrt2);
}

Eigen::VectorXd make_exposure(const Eigen::VectorXd& z) {
    Eigen::VectorXd u(z.size());
    for (Eigen::Index i = 0; i < z.size(); ++i) u[i] = normal_cdf(z[i]);
    return u;
}

Replication generate(const ScenarioSpec& spec) {
    return generate(spec, default_coefficients(spec.resolved_active()));
}

Replication generate(const ScenarioSpec& spec, const CoefficientProfile& profile) {
    const Eigen::Index n = spec.n;
    const Eigen::Index p = spec.p;
    if (n < 2) throw Error("scenario: n must be >= 2");
    const std::vector<int> active = spec.resolved_active();
    if (active.size() != 5) throw Error("scenario: expected 5 active indices");
    for (int k : active) {
        if (k < 1 || k > p) throw Error("scenario: active index outside [1, p]");
    }

    Rng rng(spec.seed);

    Replication rep;
    rep.scenario = spec;
    Eigen::MatrixXd z = sample_ar_gaussian(n, p + 1, spec.rho, rng);
    rep.data.u = make_exposure(z.col(p));
    rep.data.x = z.leftCols(p);
    z.resize(0, 0);

    const Eigen::VectorXd& u = rep.data.u;
    const Eigen::MatrixXd& x = rep.data.x;

    Eigen::VectorXd eta = Eigen::VectorXd::Zero(n);
    for (std::size_t a = 0; a < profile.active.size(); ++a) {
        const int k = profile.active[a];
        for (Eigen::Index i = 0; i < n; ++i) {
            eta[i] += profile.beta[a](u[i]) * x(i, k - 1);
        }
    }

    // positional roles for the structural cases
    auto xa = [&](std::size_t a) { return x.col(profile.active[a] - 1); };
    auto ba = [&](std::size_t a, double uu) { return profile.beta[a](uu); };

    Eigen::VectorXd y(n);
    switch (spec.name) {
        case Scenario::Ex1Case1:
            for (Eigen::Index i = 0; i < n; ++i) {
                y[i] = rng.bernoulli(1.0 / (1.0 + std::exp(-eta[i]))) ? 1.0 : 0.0;
            }
            break;
        case Scenario::Ex1Case2:
            for (Eigen::Index i = 0; i < n; ++i) {
                double e = eta[i];
                if (e > 30.0) {
                    e = 30.0;
                    ++rep.eta_clamp_count;
                }
                y[i] = static_cast<double>(rng.poisson(std::exp(e)));
            }
            break;
        case Scenario::Ex2Case1:
            for (Eigen::Index i = 0; i < n; ++i) {
                y[i] = std::exp(eta[i]) + rng.cauchy();
            }
            break;
        case Scenario::Ex2Case2:
            for (Eigen::Index i = 0; i < n; ++i) {
                y[i] = std::exp(eta[i] + rng.cauchy());
            }
            break;
        case Scenario::Ex2Case3:
            for (Eigen::Index i = 0; i < n; ++i) {
                const double uu = u[i];
                const double x100 = xa(1)[i];
                y[i] = ba(0, uu) * std::exp(xa(0)[i]) +
                       ba(1, uu) * x100 * x100 * x100 +
                       2.0 * ba(2, uu) * xa(2)[i] * (xa(2)[i] < 2.0 ? 1.0 : 0.0) +
                       ba(3, uu) * xa(3)[i] +
                       1.5 * ba(4, uu) * xa(4)[i] + rng.cauchy();
            }
            break;
        case Scenario::Ex2Case4:
            for (Eigen::Index i = 0; i < n; ++i) {
                const double uu = u[i];
                y[i] = ba(0, uu) * xa(0)[i] +
                       ba(1, uu) * xa(1)[i] +
                       ba(2, uu) * xa(2)[i] +
                       ba(4, uu) * xa(4)[i] +
                       2.0 * std::exp(ba(3, uu) * xa(3)[i]) * rng.normal();
            }
            break;
        default:
            throw UnsupportedScenario("generate: unhandled scenario");
    }
    rep.data.y = y;
    return rep;
}

} // namespace condscreen
