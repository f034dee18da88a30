#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace rdom {

/// All randomness flows through mt19937_64 with these helpers, so results are
/// identical across standard libraries.
using Rng = std::mt19937_64;

/// Uniform integer in [0, bound); bound must be positive.
inline std::uint64_t below(Rng & rng, std::uint64_t bound)
{
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t x;
    do
        x = rng();
    while (x >= limit);
    return x % bound;
}

inline int uniform_int(Rng & rng, int lo, int hi) { return lo + static_cast<int>(below(rng, static_cast<std::uint64_t>(hi - lo + 1))); }

inline double unit_real(Rng & rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

inline bool chance(Rng & rng, double p) { return unit_real(rng) < p; }

template <class T>
void shuffle(Rng & rng, std::vector<T> & v)
{
    for (std::size_t i = v.size(); i > 1; --i)
        std::swap(v[i - 1], v[below(rng, i)]);
}

} // namespace rdom
