#pragma once

#include <cstdint>

namespace q3fold {

namespace detail {
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}
}  // namespace detail

/// Counter-based deterministic generator: the value at (seed, index) does not
/// depend on evaluation order, so trial streams can be partitioned freely.
class CounterRng {
public:
    explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

    std::uint64_t at(std::uint64_t index) const {
        return detail::splitmix64(detail::splitmix64(seed_ ^ 0x5b21c95d383aa7e1ULL) + index);
    }

    /// Uniform value in [0, bound). Modulo bias is < 2^-57 for desk-scale
    /// bounds and the mapping is frozen for reproducibility.
    std::uint64_t below(std::uint64_t index, std::uint64_t bound) const {
        return at(index) % bound;
    }

    std::uint64_t seed() const { return seed_; }

private:
    std::uint64_t seed_;
};

/// Stateful convenience wrapper over CounterRng for sequential draws.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed, std::uint64_t start = 0) : rng_(seed), next_(start) {}
    std::uint64_t next() { return rng_.at(next_++); }
    std::uint64_t below(std::uint64_t bound) { return rng_.below(next_++, bound); }

private:
    CounterRng rng_;
    std::uint64_t next_;
};

}  // namespace q3fold
