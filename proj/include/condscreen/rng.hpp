#pragma once

#include <cstdint>

namespace condscreen {

/// xoshiro256++ with SplitMix64 seeding. Distribution algorithms are pinned
/// here (Box-Muller, inverted-tangent Cauchy, inversion/PTRS Poisson) so
/// generated datasets are reproducible across platforms and standard-library
/// versions; std::<distribution> implementations are not portable.
/// Seed for stream `stream` of a master seed: mixed through SplitMix64 so
/// streams are decorrelated regardless of execution order or thread count.
std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t stream);

class Rng {
public:
    explicit Rng(std::uint64_t seed);

    static Rng for_stream(std::uint64_t seed, std::uint64_t stream);

    std::uint64_t next_u64();

    double uniform01();              // strictly inside (0, 1)
    double normal();                 // standard normal, Box-Muller pair cache
    double cauchy();                 // t(1) via tan(pi (U - 1/2))
    bool bernoulli(double prob);
    std::int64_t poisson(double lambda); // inversion below 30, PTRS above

private:
    std::uint64_t s_[4];
    double spare_ = 0.0;
    bool has_spare_ = false;
};

} // namespace condscreen
