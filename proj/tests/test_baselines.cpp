#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "condscreen/baselines.hpp"
#include "oracles.hpp"

using namespace condscreen;

namespace {

DataSet with_permuted_u(const DataSet& d, Rng& rng) {
    DataSet out = d;
    std::vector<Eigen::Index> perm(d.n());
    std::iota(perm.begin(), perm.end(), Eigen::Index{0});
    for (Eigen::Index i = d.n() - 1; i > 0; --i) {
        std::swap(perm[i], perm[rng.next_u64() % (i + 1)]);
    }
    for (Eigen::Index i = 0; i < d.n(); ++i) out.u[i] = d.u[perm[i]];
    return out;
}

} // namespace

TEST_CASE("SIRS: degenerate column, oracle match, monotone and exposure invariance") {
    Rng rng(5);
    auto d = oracle::random_dataset(rng, 5, 3);
    d.x.col(1).setConstant(-4.0);

    const auto got = sirs_utility_all(d);
    CHECK(got.omega[1] == 0.0);

    const Eigen::VectorXd ref = oracle::sirs(d);
    for (Eigen::Index k = 0; k < 3; ++k) {
        CHECK(got.omega[k] == doctest::Approx(ref[k]).epsilon(1e-12));
    }

    auto expy = d;
    for (Eigen::Index i = 0; i < d.n(); ++i) expy.y[i] = std::exp(d.y[i]);
    const auto gexp = sirs_utility_all(expy);
    for (Eigen::Index k = 0; k < 3; ++k) CHECK(gexp.omega[k] == got.omega[k]);

    const auto gperm = sirs_utility_all(with_permuted_u(d, rng));
    for (Eigen::Index k = 0; k < 3; ++k) CHECK(gperm.omega[k] == got.omega[k]);
}

TEST_CASE("DC-SIS: perfect dependence, degenerate column, oracle match") {
    DataSet ident;
    ident.x.resize(6, 1);
    ident.x << -1.0, 0.5, 2.0, 0.1, -0.8, 1.3;
    ident.y = ident.x.col(0);
    ident.u.resize(6);
    ident.u << 0.1, 0.2, 0.3, 0.4, 0.5, 0.6;
    CHECK(dcsis_utility_all(ident).omega[0] == doctest::Approx(1.0).epsilon(1e-12));

    Rng rng(9);
    auto d = oracle::random_dataset(rng, 8, 4);
    d.x.col(3).setConstant(0.25);
    const auto got = dcsis_utility_all(d);
    CHECK(got.omega[3] == 0.0);
    const Eigen::VectorXd ref = oracle::dcsis(d, kDefaultEps);
    for (Eigen::Index k = 0; k < 4; ++k) {
        CHECK(std::abs(got.omega[k] - ref[k]) <= 1e-10);
    }

    const auto gperm = dcsis_utility_all(with_permuted_u(d, rng));
    for (Eigen::Index k = 0; k < 4; ++k) CHECK(gperm.omega[k] == got.omega[k]);
}

TEST_CASE("CC-SIS: constant response, oracle match, response scale invariance") {
    Rng rng(13);
    auto d = oracle::random_dataset(rng, 6, 3);
    const KernelSpec spec = fixed_bandwidth(0.5);

    auto flat = d;
    flat.y.setConstant(-1.0);
    const auto gflat = ccsis_utility_all(flat, spec);
    for (Eigen::Index k = 0; k < 3; ++k) CHECK(gflat.omega[k] == 0.0);

    const auto got = ccsis_utility_all(d, spec);
    const Eigen::VectorXd ref = oracle::ccsis(d, 0.5, kDefaultEps);
    for (Eigen::Index k = 0; k < 3; ++k) {
        CHECK(got.omega[k] == doctest::Approx(ref[k]).epsilon(1e-12));
        CHECK(got.omega[k] >= 0.0);
        CHECK(got.omega[k] <= 1.0);
    }

    auto scaled = d;
    scaled.y *= -7.5;
    const auto gscaled = ccsis_utility_all(scaled, spec);
    for (Eigen::Index k = 0; k < 3; ++k) {
        CHECK(gscaled.omega[k] == doctest::Approx(got.omega[k]).epsilon(1e-12));
    }
}

TEST_CASE("all baseline utilities stay inside [0, 1] on random data") {
    Rng rng(21);
    for (int trial = 0; trial < 20; ++trial) {
        const Eigen::Index n = 5 + static_cast<Eigen::Index>(rng.next_u64() % 12);
        const auto d = (trial % 4 == 0)
                           ? oracle::degenerate_dataset(rng, n, 3, trial % 6)
                           : oracle::random_dataset(rng, n, 3);
        const auto s = sirs_utility_all(d).omega;
        const auto c = dcsis_utility_all(d).omega;
        const auto cc = ccsis_utility_all(d, fixed_bandwidth(0.4)).omega;
        for (Eigen::Index k = 0; k < 3; ++k) {
            CHECK(s[k] >= 0.0);
            CHECK(s[k] <= 1.0);
            CHECK(c[k] >= 0.0);
            CHECK(c[k] <= 1.0);
            CHECK(cc[k] >= 0.0);
            CHECK(cc[k] <= 1.0);
        }
    }
}
