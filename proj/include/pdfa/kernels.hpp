#pragma once

// Data-parallel inner loops shared by the learners: distance between
// probability vectors and interval quantization.
//
// Every kernel has a scalar reference and vectorized variants. Variants must
// agree with the reference bit for bit: the reduction order of squared_l2 is
// fixed to four interleaved accumulators, combined as (a0 + a1) + (a2 + a3),
// followed by a sequential tail. Sources are built with -ffp-contract=off.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace pdfa::kernels {

enum class SimdLevel { scalar, avx2, neon };

struct KernelTable {
    SimdLevel level;
    /// max_i |a[i] - b[i]|; 0 for n == 0.
    double (*linf)(const double* a, const double* b, std::size_t n);
    /// linf(a, b, n) <= t, with early exit. A NaN difference counts as far.
    bool (*within_linf)(const double* a, const double* b, std::size_t n, double t);
    double (*squared_l2)(const double* a, const double* b, std::size_t n);
    /// out[i] = min(floor(x[i] * kappa), kappa - 1); x[i] must lie in [0, 1].
    void (*quantize)(const double* x, std::size_t n, std::uint32_t kappa, std::int32_t* out);
};

namespace scalar {
double linf(const double* a, const double* b, std::size_t n);
bool within_linf(const double* a, const double* b, std::size_t n, double t);
double squared_l2(const double* a, const double* b, std::size_t n);
void quantize(const double* x, std::size_t n, std::uint32_t kappa, std::int32_t* out);
}  // namespace scalar

bool supported(SimdLevel level) noexcept;

/// Table for a specific level; throws std::invalid_argument if the level is
/// not compiled in or not supported by this CPU.
const KernelTable& table(SimdLevel level);

/// The table in use. Chosen on first call: the best supported level, unless
/// the environment variable PDFA_SIMD names one ("scalar", "avx2", "neon").
const KernelTable& active();

/// Overrides the active level (tests and benchmarks).
void set_active(SimdLevel level);

std::string_view name(SimdLevel level) noexcept;

inline double linf(std::span<const double> a, std::span<const double> b) {
    return active().linf(a.data(), b.data(), a.size());
}

inline bool within_linf(std::span<const double> a, std::span<const double> b, double t) {
    return active().within_linf(a.data(), b.data(), a.size(), t);
}

inline double squared_l2(std::span<const double> a, std::span<const double> b) {
    return active().squared_l2(a.data(), b.data(), a.size());
}

}  // namespace pdfa::kernels
