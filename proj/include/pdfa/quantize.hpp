#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pdfa/distribution.hpp"

namespace pdfa {

/// Per-coordinate interval indices of a distribution under the uniform grid
/// I_κ^n = [n/κ, (n+1)/κ), with the last cell closed at 1.
class QuantVector {
public:
    QuantVector() = default;
    QuantVector(std::vector<std::int32_t> indices, std::uint32_t kappa);

    std::uint32_t kappa() const noexcept { return kappa_; }
    const std::vector<std::int32_t>& indices() const noexcept { return indices_; }
    std::size_t size() const noexcept { return indices_.size(); }

    bool operator==(const QuantVector&) const = default;

private:
    std::vector<std::int32_t> indices_;
    std::uint32_t kappa_ = 1;
};

struct QuantVectorHash {
    std::size_t operator()(const QuantVector& v) const noexcept;
};

/// min(floor(x * κ), κ - 1). Throws InputError for x outside [0, 1] or κ < 1.
///
/// The product is evaluated in double precision; an x one ulp below a cell
/// boundary lands in the lower cell. All comparisons downstream are on the
/// indices, so the grid stays a partition of [0, 1].
std::uint32_t interval_index(double x, std::uint32_t kappa);

QuantVector quantize(const Distribution& d, std::uint32_t kappa);

/// ⌊d1⌋_κ == ⌊d2⌋_κ.
bool quant_equal(const Distribution& d1, const Distribution& d2, std::uint32_t kappa);

/// "(n0, n1, ..., nk)".
std::string to_string(const QuantVector& v);

}  // namespace pdfa
