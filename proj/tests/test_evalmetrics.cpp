#include <doctest.h>

#include <vector>

#include "condscreen/evalmetrics.hpp"
#include "oracles.hpp"

using namespace condscreen;

namespace {

ScreeningResult result_from(std::initializer_list<double> omega, const std::vector<int>& cutoffs) {
    UtilityVector u;
    u.omega.resize(static_cast<Eigen::Index>(omega.size()));
    Eigen::Index i = 0;
    for (double v : omega) u.omega[i++] = v;
    return rank_and_select(u, cutoffs);
}

} // namespace

TEST_CASE("rank_of reads the descending ranking") {
    const auto r = result_from({0.1, 0.9, 0.5}, {1});
    CHECK(rank_of(r, 2) == 1);
    CHECK(rank_of(r, 3) == 2);
    CHECK(rank_of(r, 1) == 3);
    CHECK_THROWS_AS(rank_of(r, 0), IndexOutOfRange);
    CHECK_THROWS_AS(rank_of(r, 4), IndexOutOfRange);

    const auto tie = result_from({0.5, 0.5}, {1});
    CHECK(rank_of(tie, 1) == 1);
    CHECK(rank_of(tie, 2) == 2);
}

TEST_CASE("min_model_size is the worst active rank") {
    // utilities decreasing in index: predictor k has rank k
    const auto r = result_from({0.9, 0.8, 0.7, 0.6, 0.5}, {1});
    CHECK(min_model_size(r, {1, 3, 5}) == 5);
    CHECK(min_model_size(r, {1, 2, 3}) == 3); // active = top-|A| exactly
    CHECK(min_model_size(r, {5}) == 5);       // single active ranked last -> p
    CHECK_THROWS_AS(min_model_size(r, {}), EmptyActiveSet);
}

TEST_CASE("quantile_type7 interpolates linearly") {
    CHECK(quantile_type7({1.0, 2.0, 3.0, 4.0}, 0.25) == doctest::Approx(1.75).epsilon(1e-15));
    CHECK(quantile_type7({10.0, 20.0}, 0.5) == doctest::Approx(15.0).epsilon(1e-15));
    CHECK(quantile_type7({10.0, 20.0}, 0.0) == 10.0);
    CHECK(quantile_type7({10.0, 20.0}, 1.0) == 20.0);
    CHECK(quantile_type7({7.0}, 0.31) == 7.0);
    CHECK(quantile_type7({3.0, 1.0, 2.0}, 0.5) == 2.0); // sorts internally
}

TEST_CASE("aggregate on a single replication") {
    const std::vector<int> active = {2, 4};
    const std::vector<int> cutoffs = {1, 2, 4};
    const auto r = result_from({0.4, 0.9, 0.1, 0.6}, cutoffs); // ranking 2,4,1,3
    const auto m = aggregate({r}, active, cutoffs);

    CHECK(m.rank_by_active.at(2) == 1.0);
    CHECK(m.rank_by_active.at(4) == 2.0);
    for (double level : kDefaultQuantileLevels) {
        CHECK(m.min_model_size_quantiles.at(level) == 2.0);
    }
    CHECK(m.p_all.at(1) == 0.0);
    CHECK(m.p_all.at(2) == 1.0);
    CHECK(m.p_all.at(4) == 1.0); // d = p always captures everything
    CHECK(m.p_each.at(1).at(2) == 1.0);
    CHECK(m.p_each.at(1).at(4) == 0.0);
    CHECK(m.p_each.at(2).at(4) == 1.0);
}

TEST_CASE("aggregate medians interpolate across replications") {
    const std::vector<int> active = {1};
    const std::vector<int> cutoffs = {10, 20};
    std::vector<ScreeningResult> reps;
    // predictor 1 ranked 10th, then 20th, in a p = 25 problem
    for (int target : {10, 20}) {
        UtilityVector u;
        u.omega = Eigen::VectorXd::Zero(25);
        u.omega[0] = 0.5;
        for (int k = 2; k <= 25; ++k) u.omega[k - 1] = (k <= target) ? 0.9 : 0.01;
        // exactly target - 1 predictors score above predictor 1
        reps.push_back(rank_and_select(u, cutoffs));
        CHECK(rank_of(reps.back(), 1) == target);
    }
    const auto m = aggregate(reps, active, cutoffs);
    CHECK(m.min_model_size_quantiles.at(0.50) == doctest::Approx(15.0).epsilon(1e-15));
    CHECK(m.rank_by_active.at(1) == doctest::Approx(15.0).epsilon(1e-15));
    CHECK(m.p_all.at(10) == 0.5);
    CHECK(m.p_all.at(20) == 1.0);
}

TEST_CASE("aggregate invariants on randomized batches") {
    Rng rng(303);
    const Eigen::Index p = 12;
    const std::vector<int> active = {2, 5, 9};
    const std::vector<int> cutoffs = {3, 6, 9, 12};
    std::vector<ScreeningResult> reps;
    for (int r = 0; r < 40; ++r) {
        UtilityVector u;
        u.omega.resize(p);
        for (Eigen::Index k = 0; k < p; ++k) u.omega[k] = rng.uniform01();
        reps.push_back(rank_and_select(u, cutoffs));
    }
    const auto m = aggregate(reps, active, cutoffs);

    for (int k : active) {
        CHECK(m.rank_by_active.at(k) >= 1.0);
        CHECK(m.rank_by_active.at(k) <= static_cast<double>(p));
    }
    double prev_q = 0.0;
    for (double level : kDefaultQuantileLevels) {
        const double q = m.min_model_size_quantiles.at(level);
        CHECK(q >= static_cast<double>(active.size()));
        CHECK(q >= prev_q);
        prev_q = q;
    }
    double prev_pa = 0.0;
    for (int d : cutoffs) {
        const double pa = m.p_all.at(d);
        CHECK(pa >= prev_pa);
        prev_pa = pa;
        for (int k : active) {
            CHECK(pa <= m.p_each.at(d).at(k));
            CHECK(m.p_each.at(d).at(k) <= 1.0);
        }
    }
    CHECK(m.p_all.at(12) == 1.0);
}

TEST_CASE("aggregate rejects empty or mixed-dimension input") {
    const std::vector<int> cutoffs = {1};
    CHECK_THROWS_AS(aggregate({}, {1}, cutoffs), Error);
    const auto a = result_from({0.3, 0.7}, cutoffs);
    const auto b = result_from({0.3, 0.7, 0.9}, cutoffs);
    CHECK_THROWS_AS(aggregate({a, b}, {1}, cutoffs), InconsistentDimensions);
}
