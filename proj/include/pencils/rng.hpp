#pragma once

#include <cstdint>

namespace pencils {

/*
 * splitmix64, hand-rolled so randomized harness runs reproduce exactly on
 * any platform for a given seed (std::uniform_int_distribution is not
 * bit-portable across standard libraries).
 */
class SplitRng {
public:
    explicit SplitRng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, bound) by rejection; bound must be positive.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = bound * (UINT64_MAX / bound);
        std::uint64_t x = next();
        while (x >= limit) x = next();
        return x % bound;
    }

    /// Uniform integer in [lo, hi], inclusive.
    long long between(long long lo, long long hi) {
        return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo) + 1));
    }

    /// Stable per-trial seed derived from a master seed and a trial index.
    static std::uint64_t derive(std::uint64_t master, std::uint64_t index) {
        SplitRng r(master ^ (0x632be59bd9b4e019ULL + index * 0x100000001b3ULL));
        return r.next();
    }

private:
    std::uint64_t state_;
};

}  // namespace pencils
