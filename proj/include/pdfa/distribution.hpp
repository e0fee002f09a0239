#pragma once

#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pdfa/types.hpp"

namespace pdfa {

inline constexpr double kSimplexSumTolerance = 1e-9;
inline constexpr double kProbabilitySlack = 1e-12;

/// Next-symbol law over Σ ∪ {$}, indexed by Letter (terminal first).
///
/// The type does not enforce the simplex; use simplex_violation() or
/// Distribution::checked(). Entries inside the rounding slack around [0, 1]
/// are clamped on construction so quantization sees values in [0, 1].
class Distribution {
public:
    Distribution() = default;
    explicit Distribution(std::vector<double> probs);
    Distribution(std::initializer_list<double> probs) : Distribution(std::vector<double>(probs)) {}

    /// Throws InputError unless the vector is a probability simplex.
    static Distribution checked(std::vector<double> probs);

    /// Scales a non-negative vector to sum 1. Throws InputError on a zero sum.
    static Distribution normalized(std::vector<double> weights);

    std::size_t size() const noexcept { return probs_.size(); }
    double operator[](Letter l) const { return probs_[l]; }
    double at(Letter l) const { return probs_.at(l); }
    std::span<const double> values() const noexcept { return probs_; }

    /// Letter with the largest probability; ties go to the smaller index.
    Letter argmax() const noexcept;

    bool operator==(const Distribution&) const = default;

private:
    std::vector<double> probs_;
};

/// Describes why `d` is not a simplex of length `expected_size`, if it is not.
std::optional<std::string> simplex_violation(const Distribution& d, std::size_t expected_size);

/// max_l |a[l] - b[l]|. Throws InputError on a layout mismatch.
double linf_distance(const Distribution& a, const Distribution& b);

std::string to_string(const Distribution& d);

}  // namespace pdfa
