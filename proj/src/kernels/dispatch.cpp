#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "kernels_internal.hpp"

namespace pdfa::kernels {

namespace {

constexpr KernelTable kScalar{SimdLevel::scalar, scalar::linf, scalar::within_linf,
                              scalar::squared_l2, scalar::quantize};

#if PDFA_HAVE_AVX2_KERNELS
constexpr KernelTable kAvx2{SimdLevel::avx2, avx2::linf, avx2::within_linf, avx2::squared_l2,
                            avx2::quantize};
#endif

#if PDFA_HAVE_NEON_KERNELS
constexpr KernelTable kNeon{SimdLevel::neon, neon::linf, neon::within_linf, neon::squared_l2,
                            neon::quantize};
#endif

SimdLevel best_level() noexcept {
    if (supported(SimdLevel::avx2)) return SimdLevel::avx2;
    if (supported(SimdLevel::neon)) return SimdLevel::neon;
    return SimdLevel::scalar;
}

const KernelTable* initial_table() {
    if (const char* env = std::getenv("PDFA_SIMD")) {
        const std::string want(env);
        for (SimdLevel l : {SimdLevel::scalar, SimdLevel::avx2, SimdLevel::neon}) {
            if (want == name(l) && supported(l)) return &table(l);
        }
    }
    return &table(best_level());
}

std::atomic<const KernelTable*> g_active{nullptr};

}  // namespace

bool supported(SimdLevel level) noexcept {
    switch (level) {
        case SimdLevel::scalar:
            return true;
        case SimdLevel::avx2:
#if PDFA_HAVE_AVX2_KERNELS
            return __builtin_cpu_supports("avx2");
#else
            return false;
#endif
        case SimdLevel::neon:
            return PDFA_HAVE_NEON_KERNELS != 0;
    }
    return false;
}

const KernelTable& table(SimdLevel level) {
    if (!supported(level))
        throw std::invalid_argument("SIMD level '" + std::string(name(level)) + "' unavailable");
    switch (level) {
#if PDFA_HAVE_AVX2_KERNELS
        case SimdLevel::avx2:
            return kAvx2;
#endif
#if PDFA_HAVE_NEON_KERNELS
        case SimdLevel::neon:
            return kNeon;
#endif
        default:
            return kScalar;
    }
}

const KernelTable& active() {
    const KernelTable* t = g_active.load(std::memory_order_acquire);
    if (t == nullptr) {
        const KernelTable* init = initial_table();
        g_active.compare_exchange_strong(t, init, std::memory_order_acq_rel);
        return *g_active.load(std::memory_order_acquire);
    }
    return *t;
}

void set_active(SimdLevel level) { g_active.store(&table(level), std::memory_order_release); }

std::string_view name(SimdLevel level) noexcept {
    switch (level) {
        case SimdLevel::scalar:
            return "scalar";
        case SimdLevel::avx2:
            return "avx2";
        case SimdLevel::neon:
            return "neon";
    }
    return "unknown";
}

}  // namespace pdfa::kernels
