#include "kernels_internal.hpp"

#if PDFA_HAVE_AVX2_KERNELS

#include <immintrin.h>

#include <cmath>

#define PDFA_AVX2 __attribute__((target("avx2")))

namespace pdfa::kernels::avx2 {

namespace {

PDFA_AVX2 inline __m256d abs_diff(__m256d a, __m256d b) {
    const __m256d sign = _mm256_set1_pd(-0.0);
    return _mm256_andnot_pd(sign, _mm256_sub_pd(a, b));
}

}  // namespace

PDFA_AVX2 double linf(const double* a, const double* b, std::size_t n) {
    __m256d vmax = _mm256_setzero_pd();
    const std::size_t body = n - n % 4;
    for (std::size_t i = 0; i < body; i += 4) {
        vmax = _mm256_max_pd(vmax, abs_diff(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i)));
    }
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, vmax);
    double m = lanes[0];
    for (int k = 1; k < 4; ++k) {
        if (lanes[k] > m) m = lanes[k];
    }
    for (std::size_t i = body; i < n; ++i) {
        const double d = std::fabs(a[i] - b[i]);
        if (d > m) m = d;
    }
    return m;
}

PDFA_AVX2 bool within_linf(const double* a, const double* b, std::size_t n, double t) {
    const __m256d vt = _mm256_set1_pd(t);
    const std::size_t body = n - n % 4;
    for (std::size_t i = 0; i < body; i += 4) {
        const __m256d d = abs_diff(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i));
        if (_mm256_movemask_pd(_mm256_cmp_pd(d, vt, _CMP_NLE_UQ)) != 0) return false;
    }
    for (std::size_t i = body; i < n; ++i) {
        if (!(std::fabs(a[i] - b[i]) <= t)) return false;
    }
    return true;
}

PDFA_AVX2 double squared_l2(const double* a, const double* b, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    const std::size_t body = n - n % 4;
    for (std::size_t i = 0; i < body; i += 4) {
        const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i));
        acc = _mm256_add_pd(acc, _mm256_mul_pd(d, d));
    }
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, acc);
    double sum = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
    for (std::size_t i = body; i < n; ++i) {
        const double d = a[i] - b[i];
        sum += d * d;
    }
    return sum;
}

PDFA_AVX2 void quantize(const double* x, std::size_t n, std::uint32_t kappa, std::int32_t* out) {
    const double k = static_cast<double>(kappa);
    const __m256d vk = _mm256_set1_pd(k);
    const __m256d vtop = _mm256_set1_pd(k - 1.0);
    const std::size_t body = n - n % 4;
    for (std::size_t i = 0; i < body; i += 4) {
        const __m256d cell = _mm256_floor_pd(_mm256_mul_pd(_mm256_loadu_pd(x + i), vk));
        const __m128i idx = _mm256_cvttpd_epi32(_mm256_min_pd(cell, vtop));
        _mm_storeu_si128(reinterpret_cast<__m128i*>(out + i), idx);
    }
    const double top = k - 1.0;
    for (std::size_t i = body; i < n; ++i) {
        const double cell = std::floor(x[i] * k);
        out[i] = static_cast<std::int32_t>(cell < top ? cell : top);
    }
}

}  // namespace pdfa::kernels::avx2

#endif
