#pragma once

#include <cstddef>
#include <cstdint>

namespace jaya {

/// Deterministic uniform random stream backed by SplitMix64.
///
/// The generator is fixed so that golden-value tests and cross-platform
/// reproducibility hold: the same seed yields the same draw sequence on every
/// platform, independent of how many worker threads evaluate objectives
/// (solvers consume the stream strictly serially). `uniform()` maps the top
/// 53 bits of each output word onto [0, 1).
class RngStream {
  public:
    explicit RngStream(std::uint64_t seed) : seed_(seed), state_(seed) {}

    std::uint64_t seed() const { return seed_; }

    std::uint64_t next_u64() {
        state_ += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1), 53-bit resolution.
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform index in [0, n). n must be positive.
    std::size_t uniform_index(std::size_t n) {
        const auto i = static_cast<std::size_t>(uniform() * static_cast<double>(n));
        return i < n ? i : n - 1;
    }

  private:
    std::uint64_t seed_;
    std::uint64_t state_;
};

/// Derives an independent child seed from (base, salt). Used to give each
/// (problem, repetition) pair of a suite run its own reproducible stream.
inline std::uint64_t mix_seed(std::uint64_t base, std::uint64_t salt) {
    RngStream r(base ^ (0x9E3779B97F4A7C15ULL * (salt + 1)));
    return r.next_u64();
}

} // namespace jaya
