#include "kernels_internal.hpp"

#if PDFA_HAVE_NEON_KERNELS

#include <arm_neon.h>

#include <cmath>

namespace pdfa::kernels::neon {

// Two float64 lanes per register; two registers per step so the squared_l2
// accumulator layout matches the four-lane reference.

double linf(const double* a, const double* b, std::size_t n) {
    float64x2_t m0 = vdupq_n_f64(0.0);
    float64x2_t m1 = vdupq_n_f64(0.0);
    const std::size_t body = n - n % 4;
    for (std::size_t i = 0; i < body; i += 4) {
        m0 = vmaxq_f64(m0, vabdq_f64(vld1q_f64(a + i), vld1q_f64(b + i)));
        m1 = vmaxq_f64(m1, vabdq_f64(vld1q_f64(a + i + 2), vld1q_f64(b + i + 2)));
    }
    double m = vmaxvq_f64(vmaxq_f64(m0, m1));
    for (std::size_t i = body; i < n; ++i) {
        const double d = std::fabs(a[i] - b[i]);
        if (d > m) m = d;
    }
    return m;
}

bool within_linf(const double* a, const double* b, std::size_t n, double t) {
    const float64x2_t vt = vdupq_n_f64(t);
    const std::size_t body = n - n % 2;
    for (std::size_t i = 0; i < body; i += 2) {
        // NaN fails the <= test and so counts as far.
        const uint64x2_t le = vcleq_f64(vabdq_f64(vld1q_f64(a + i), vld1q_f64(b + i)), vt);
        if ((vgetq_lane_u64(le, 0) & vgetq_lane_u64(le, 1)) != ~0ULL) return false;
    }
    for (std::size_t i = body; i < n; ++i) {
        if (!(std::fabs(a[i] - b[i]) <= t)) return false;
    }
    return true;
}

double squared_l2(const double* a, const double* b, std::size_t n) {
    float64x2_t acc01 = vdupq_n_f64(0.0);
    float64x2_t acc23 = vdupq_n_f64(0.0);
    const std::size_t body = n - n % 4;
    for (std::size_t i = 0; i < body; i += 4) {
        const float64x2_t d01 = vsubq_f64(vld1q_f64(a + i), vld1q_f64(b + i));
        const float64x2_t d23 = vsubq_f64(vld1q_f64(a + i + 2), vld1q_f64(b + i + 2));
        acc01 = vaddq_f64(acc01, vmulq_f64(d01, d01));
        acc23 = vaddq_f64(acc23, vmulq_f64(d23, d23));
    }
    double sum = (vgetq_lane_f64(acc01, 0) + vgetq_lane_f64(acc01, 1)) +
                 (vgetq_lane_f64(acc23, 0) + vgetq_lane_f64(acc23, 1));
    for (std::size_t i = body; i < n; ++i) {
        const double d = a[i] - b[i];
        sum += d * d;
    }
    return sum;
}

void quantize(const double* x, std::size_t n, std::uint32_t kappa, std::int32_t* out) {
    const double k = static_cast<double>(kappa);
    const float64x2_t vk = vdupq_n_f64(k);
    const float64x2_t vtop = vdupq_n_f64(k - 1.0);
    const std::size_t body = n - n % 2;
    for (std::size_t i = 0; i < body; i += 2) {
        const float64x2_t cell = vminq_f64(vrndmq_f64(vmulq_f64(vld1q_f64(x + i), vk)), vtop);
        const int64x2_t idx = vcvtq_s64_f64(cell);
        out[i] = static_cast<std::int32_t>(vgetq_lane_s64(idx, 0));
        out[i + 1] = static_cast<std::int32_t>(vgetq_lane_s64(idx, 1));
    }
    const double top = k - 1.0;
    for (std::size_t i = body; i < n; ++i) {
        const double cell = std::floor(x[i] * k);
        out[i] = static_cast<std::int32_t>(cell < top ? cell : top);
    }
}

}  // namespace pdfa::kernels::neon

#endif
