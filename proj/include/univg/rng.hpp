#pragma once

#include <cstdint>
#include <vector>

namespace univg {

// splitmix64.  Every seeded shuffle and coin flip in the project goes
// through this generator (not std::mt19937 / std::shuffle), so identical
// seeds give identical behaviour on any platform or standard library.
struct SplitMix64 {
    std::uint64_t state = 0;

    explicit SplitMix64(std::uint64_t seed = 0) : state(seed) {}

    std::uint64_t next()
    {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // uniform draw from 0..n-1, unbiased via multiply-and-reject
    std::uint64_t below(std::uint64_t n)
    {
        unsigned __int128 m = static_cast<unsigned __int128>(next()) * n;
        auto lo = static_cast<std::uint64_t>(m);
        if (lo < n) {
            std::uint64_t t = (0 - n) % n;
            while (lo < t) {
                m = static_cast<unsigned __int128>(next()) * n;
                lo = static_cast<std::uint64_t>(m);
            }
        }
        return static_cast<std::uint64_t>(m >> 64);
    }

    // uniform in [0,1)
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

// Derives the seed of a sub-stream (a trial, a restart, a worker) from a
// base seed.  Distinct streams get decorrelated generators.
inline std::uint64_t mix_seed(std::uint64_t base, std::uint64_t stream)
{
    SplitMix64 g(base + 0x632be59bd9b4e019ull * (stream + 1));
    return g.next();
}

// Fisher-Yates driven by SplitMix64
template <class T>
void seeded_shuffle(std::vector<T>& v, SplitMix64& rng)
{
    for (std::size_t i = v.size(); i > 1; --i)
        std::swap(v[i - 1], v[rng.below(i)]);
}

}  // namespace univg
