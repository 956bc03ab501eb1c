// rng.hpp - counter-based deterministic random generator
#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

namespace hggan {

// The n-th output is a fixed hash of (key, n), so draws are reproducible and
// independent streams can be derived for sharded sampling.
class CounterRng {
public:
    explicit CounterRng(std::uint64_t seed) : key_(mix(seed ^ 0x6a09e667f3bcc909ULL)) {}

    // Independent stream `stream` of the same seed.
    static CounterRng derive(std::uint64_t seed, std::uint64_t stream) {
        CounterRng r(seed);
        r.key_ = mix(r.key_ + 0x9e3779b97f4a7c15ULL * (stream + 1));
        return r;
    }

    std::uint64_t next_u64() { return mix(key_ + 0x9e3779b97f4a7c15ULL * ++counter_); }

    // Uniform on [0, 1).
    double next_double() { return double(next_u64() >> 11) * 0x1.0p-53; }

    // Uniform on {0, ..., n-1}.
    int next_below(int n) {
        return int((static_cast<unsigned __int128>(next_u64()) * std::uint64_t(n)) >> 64);
    }

    // Standard normal via Box-Muller.
    double next_normal() {
        double u1 = next_double();
        double u2 = next_double();
        return std::sqrt(-2.0 * std::log1p(-u1)) * std::cos(6.283185307179586476925287 * u2);
    }

    template <class T>
    void shuffle(std::vector<T>& items) {
        for (int i = int(items.size()) - 1; i > 0; --i) {
            std::swap(items[std::size_t(i)], items[std::size_t(next_below(i + 1))]);
        }
    }

private:
    // splitmix64 finalizer
    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t key_ = 0;
    std::uint64_t counter_ = 0;
};

} // namespace hggan
