#ifndef CAUSALCOH_RNG_HPP
#define CAUSALCOH_RNG_HPP

#include <cstdint>
#include <random>

namespace causalcoh {

/// Seeded generator whose draws are identical on every platform: the
/// mt19937_64 engine is fully specified, and we map its output ourselves
/// instead of going through the implementation-defined distributions.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform integer in [lo, hi].
    long uniform(long lo, long hi) {
        const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<long>(engine_() % span);
    }

    bool coin() { return (engine_() >> 63) != 0; }

    std::uint64_t raw() { return engine_(); }

private:
    std::mt19937_64 engine_;
};

}  // namespace causalcoh

#endif  // CAUSALCOH_RNG_HPP
