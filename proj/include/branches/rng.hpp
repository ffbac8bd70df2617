#pragma once

#include <cassert>
#include <cstdint>
#include <random>

namespace branches {

// Deterministic random stream.  mt19937_64 output is pinned by the standard,
// but uniform_int_distribution is not, so bounded draws are done by rejection
// here to keep byte-identical behaviour across platforms and library versions.
class seed_stream {
public:
    explicit seed_stream(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next_u64() { return eng_(); }

    // uniform in [lo, hi], inclusive
    std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
        assert(lo <= hi);
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        if (span == 0) return static_cast<std::int64_t>(next_u64()); // full range
        const std::uint64_t limit = std::uint64_t(-1) - (std::uint64_t(-1) % span);
        std::uint64_t r;
        do {
            r = next_u64();
        } while (r >= limit);
        return lo + static_cast<std::int64_t>(r % span);
    }

    bool coin(double p_true = 0.5) {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53 < p_true;
    }

private:
    std::mt19937_64 eng_;
};

} // namespace branches
