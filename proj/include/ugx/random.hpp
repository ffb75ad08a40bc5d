#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace ugx {

// std::mt19937_64 output is pinned by the standard, but the standard
// distributions are not. All draws go through the helpers below so that a
// seed reproduces the same stream on every platform.

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

// Independent per-trial / per-purpose seed derivation.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    return splitmix64(splitmix64(seed ^ 0x8AB13A11D6E2B747ull) + index);
}

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    // Uniform on {0, ..., n-1}, unbiased via rejection.
    std::uint64_t bounded(std::uint64_t n) {
        const std::uint64_t limit = n * (UINT64_MAX / n);
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return x % n;
    }

    // Uniform on [0, 1) with 53 random bits.
    double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::swap(v[i - 1], v[bounded(i)]);
        }
    }

    // Uniform random permutation of {0, ..., n-1}.
    std::vector<int> permutation(std::size_t n) {
        std::vector<int> p(n);
        for (std::size_t i = 0; i < n; ++i) p[i] = static_cast<int>(i);
        shuffle(p);
        return p;
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace ugx
