#pragma once

#include <cstdint>

namespace gca {

/// Deterministic 64-bit generator (splitmix64). Implemented here rather
/// than on top of <random> distributions so that a seed produces the same
/// stream on every platform and standard library; byte-identical output
/// is part of the CLI contract.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [lo, hi], both inclusive. Rejection sampling keeps the
    /// draw exactly uniform and stream-stable.
    std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        if (span == 0) return static_cast<std::int64_t>(next_u64()); // full 64-bit range
        const std::uint64_t limit = (~std::uint64_t{0} / span) * span;
        std::uint64_t v;
        do {
            v = next_u64();
        } while (v >= limit);
        return lo + static_cast<std::int64_t>(v % span);
    }

    bool coin() { return (next_u64() & 1) != 0; }

    /// Child stream for an independent trial; trials can run in any order
    /// (or concurrently) without perturbing each other's draws.
    Rng split(std::uint64_t stream_index) const {
        Rng child(state_ ^ (0xa0761d6478bd642fULL + stream_index * 0xe7037ed1a0b428dbULL));
        child.next_u64();
        return child;
    }

private:
    std::uint64_t state_;
};

} // namespace gca
