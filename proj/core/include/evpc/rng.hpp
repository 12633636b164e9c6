#pragma once

#include <cstdint>

namespace evpc {

// xoshiro256** seeded through splitmix64. Chosen over std::mt19937 because
// the whole generation path (engine + bounded draw below) is specified here
// and produces the same stream on every platform, which the reproducibility
// contracts rely on.
class Rng {
public:
    explicit Rng(std::uint64_t seed) {
        std::uint64_t x = seed;
        for (auto& word : state_) {
            word = splitmix64(x);
        }
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    // Unbiased uniform draw in [0, n) by rejection.
    std::uint64_t bounded(std::uint64_t n) {
        const std::uint64_t threshold = (0 - n) % n;  // 2^64 mod n
        std::uint64_t r = next_u64();
        while (r < threshold) {
            r = next_u64();
        }
        return r % n;
    }

    // Uniform double in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Documented master-seed split: stream i of seed s is seeded with
    // splitmix64(s + i + 1), so parallel consumers never share a stream.
    static std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
        std::uint64_t x = master + index + 1;
        return splitmix64(x);
    }

    static std::uint64_t splitmix64(std::uint64_t& x) {
        x += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = x;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

private:
    static std::uint64_t rotl(std::uint64_t v, int k) { return (v << k) | (v >> (64 - k)); }

    std::uint64_t state_[4];
};

}  // namespace evpc
