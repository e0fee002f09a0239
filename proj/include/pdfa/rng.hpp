#pragma once

#include <cstdint>
#include <random>

namespace pdfa {

std::uint64_t splitmix64(std::uint64_t x) noexcept;

/// Seedable 64-bit generator with portable derived draws.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the
/// standard. The standard distributions are not, so draws are built here:
/// bounded integers by rejection, doubles from the top 53 bits.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

    std::uint64_t seed() const noexcept { return seed_; }

    std::uint64_t next() { return engine_(); }
    /// Uniform in [0, n). n must be positive.
    std::uint64_t uniform_below(std::uint64_t n);
    /// Uniform in [0, 1).
    double uniform01();
    /// Unit-rate exponential.
    double exponential();

    /// Independent stream number `index` under this seed:
    /// seed' = splitmix64(splitmix64(seed) + index). Does not advance *this.
    Rng child(std::uint64_t index) const { return Rng(child_seed(seed_, index)); }
    static std::uint64_t child_seed(std::uint64_t seed, std::uint64_t index) noexcept {
        return splitmix64(splitmix64(seed) + index);
    }

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

}  // namespace pdfa
