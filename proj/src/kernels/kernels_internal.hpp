#pragma once

#include "pdfa/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#define PDFA_HAVE_AVX2_KERNELS 1
#else
#define PDFA_HAVE_AVX2_KERNELS 0
#endif

#if defined(__aarch64__) && defined(__ARM_NEON)
#define PDFA_HAVE_NEON_KERNELS 1
#else
#define PDFA_HAVE_NEON_KERNELS 0
#endif

namespace pdfa::kernels {

#if PDFA_HAVE_AVX2_KERNELS
namespace avx2 {
double linf(const double* a, const double* b, std::size_t n);
bool within_linf(const double* a, const double* b, std::size_t n, double t);
double squared_l2(const double* a, const double* b, std::size_t n);
void quantize(const double* x, std::size_t n, std::uint32_t kappa, std::int32_t* out);
}  // namespace avx2
#endif

#if PDFA_HAVE_NEON_KERNELS
namespace neon {
double linf(const double* a, const double* b, std::size_t n);
bool within_linf(const double* a, const double* b, std::size_t n, double t);
double squared_l2(const double* a, const double* b, std::size_t n);
void quantize(const double* x, std::size_t n, std::uint32_t kappa, std::int32_t* out);
}  // namespace neon
#endif

}  // namespace pdfa::kernels
