#include "pdfa/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace pdfa {

std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t Rng::uniform_below(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("uniform_below(0)");
    // Reject the top partial block so every residue is equally likely.
    const std::uint64_t limit = -n % n;
    for (;;) {
        const std::uint64_t x = engine_();
        if (x >= limit) return x % n;
    }
}

double Rng::uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

double Rng::exponential() { return -std::log1p(-uniform01()); }

}  // namespace pdfa
