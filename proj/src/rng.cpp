#include "condscreen/rng.hpp"

#include <cmath>
#include <numbers>

namespace condscreen {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
}

} // namespace

Rng::Rng(std::uint64_t seed) {
    std::uint64_t sm = seed;
    for (auto& word : s_) word = splitmix64(sm);
}

std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t sm = stream;
    return seed ^ splitmix64(sm);
}

Rng Rng::for_stream(std::uint64_t seed, std::uint64_t stream) {
    return Rng(stream_seed(seed, stream));
}

std::uint64_t Rng::next_u64() {
    const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
}

double Rng::uniform01() {
    // 53-bit mantissa shifted to the open interval
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

double Rng::normal() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    const double r = std::sqrt(-2.0 * std::log(uniform01()));
    const double theta = 2.0 * std::numbers::pi * uniform01();
    spare_ = r * std::sin(theta);
    has_spare_ = true;
    return r * std::cos(theta);
}

double Rng::cauchy() {
    return std::tan(std::numbers::pi * (uniform01() - 0.5));
}

bool Rng::bernoulli(double prob) {
    return uniform01() < prob;
}

std::int64_t Rng::poisson(double lambda) {
    if (lambda <= 0.0) return 0;
    if (lambda < 30.0) {
        // inversion by sequential search
        const double target = uniform01();
        double prob = std::exp(-lambda);
        double cdf = prob;
        std::int64_t k = 0;
        while (target > cdf) {
            ++k;
            prob *= lambda / static_cast<double>(k);
            cdf += prob;
            if (k > 2000) break; // cdf has numerically saturated
        }
        return k;
    }
    // PTRS transformed rejection (Hormann 1993), exact for lambda >= 10
    const double b = 0.931 + 2.53 * std::sqrt(lambda);
    const double a = -0.059 + 0.02483 * b;
    const double inv_alpha = 1.1239 + 1.1328 / (b - 3.4);
    const double v_r = 0.9277 - 3.6224 / (b - 2.0);
    const double log_lambda = std::log(lambda);
    for (;;) {
        const double u = uniform01() - 0.5;
        const double v = uniform01();
        const double us = 0.5 - std::abs(u);
        const double kf = std::floor((2.0 * a / us + b) * u + lambda + 0.43);
        if (us >= 0.07 && v <= v_r) return static_cast<std::int64_t>(kf);
        if (kf < 0.0 || (us < 0.013 && v > us)) continue;
        if (std::log(v) + std::log(inv_alpha) - std::log(a / (us * us) + b) <=
            kf * log_lambda - lambda - std::lgamma(kf + 1.0)) {
            return static_cast<std::int64_t>(kf);
        }
    }
}

} // namespace condscreen
