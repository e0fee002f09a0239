#include "pdfa/quantize.hpp"

#include <cmath>

#include "pdfa/kernels.hpp"

namespace pdfa {

QuantVector::QuantVector(std::vector<std::int32_t> indices, std::uint32_t kappa)
    : indices_(std::move(indices)), kappa_(kappa) {
    if (kappa_ < 1) throw InputError("quantization parameter must be at least 1");
    for (std::int32_t n : indices_) {
        if (n < 0 || static_cast<std::uint32_t>(n) >= kappa_)
            throw InputError("interval index " + std::to_string(n) + " outside [0, kappa-1]");
    }
}

std::size_t QuantVectorHash::operator()(const QuantVector& v) const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ v.kappa();
    for (std::int32_t n : v.indices()) {
        h ^= static_cast<std::uint32_t>(n) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
}

namespace {

void check_kappa(std::uint32_t kappa) {
    if (kappa < 1) throw InputError("quantization parameter must be at least 1");
}

}  // namespace

std::uint32_t interval_index(double x, std::uint32_t kappa) {
    check_kappa(kappa);
    if (!(x >= 0.0 && x <= 1.0))
        throw InputError("value " + std::to_string(x) + " outside [0, 1]");
    std::int32_t out = 0;
    kernels::scalar::quantize(&x, 1, kappa, &out);
    return static_cast<std::uint32_t>(out);
}

QuantVector quantize(const Distribution& d, std::uint32_t kappa) {
    check_kappa(kappa);
    for (double x : d.values()) {
        if (!(x >= 0.0 && x <= 1.0))
            throw InputError("value " + std::to_string(x) + " outside [0, 1]");
    }
    std::vector<std::int32_t> idx(d.size());
    kernels::active().quantize(d.values().data(), d.size(), kappa, idx.data());
    return QuantVector(std::move(idx), kappa);
}

bool quant_equal(const Distribution& d1, const Distribution& d2, std::uint32_t kappa) {
    if (d1.size() != d2.size()) throw InputError("distribution layouts differ");
    return quantize(d1, kappa) == quantize(d2, kappa);
}

std::string to_string(const QuantVector& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i > 0) out += ", ";
        out += std::to_string(v.indices()[i]);
    }
    out += ')';
    return out;
}

}  // namespace pdfa
