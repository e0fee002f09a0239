#include <cmath>

#include "kernels_internal.hpp"

namespace pdfa::kernels::scalar {

double linf(const double* a, const double* b, std::size_t n) {
    double m = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double d = std::fabs(a[i] - b[i]);
        if (d > m) m = d;
    }
    return m;
}

bool within_linf(const double* a, const double* b, std::size_t n, double t) {
    for (std::size_t i = 0; i < n; ++i) {
        if (!(std::fabs(a[i] - b[i]) <= t)) return false;
    }
    return true;
}

double squared_l2(const double* a, const double* b, std::size_t n) {
    double acc[4] = {0.0, 0.0, 0.0, 0.0};
    const std::size_t body = n - n % 4;
    for (std::size_t i = 0; i < body; i += 4) {
        for (std::size_t k = 0; k < 4; ++k) {
            const double d = a[i + k] - b[i + k];
            acc[k] += d * d;
        }
    }
    double sum = (acc[0] + acc[1]) + (acc[2] + acc[3]);
    for (std::size_t i = body; i < n; ++i) {
        const double d = a[i] - b[i];
        sum += d * d;
    }
    return sum;
}

void quantize(const double* x, std::size_t n, std::uint32_t kappa, std::int32_t* out) {
    const double k = static_cast<double>(kappa);
    const double top = k - 1.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double cell = std::floor(x[i] * k);
        out[i] = static_cast<std::int32_t>(cell < top ? cell : top);
    }
}

}  // namespace pdfa::kernels::scalar
