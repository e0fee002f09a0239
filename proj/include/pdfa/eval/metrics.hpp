#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "pdfa/automaton.hpp"
#include "pdfa/rng.hpp"

namespace pdfa::eval {

struct TestSet {
    std::vector<Word> strings;
    /// truncated[i]: the walk hit max_len before drawing "$".
    std::vector<bool> truncated;
    std::size_t max_len = 0;
    std::uint64_t seed = 0;
};

/// Walks `target` from its initial state drawing one letter per step from
/// π; stops on "$" or after max_len symbols.
TestSet sample_strings(const Pdfa& target, std::size_t count, std::size_t max_len, Rng& rng);

/// Share of prefixes γ[i], 0 <= i <= |γ|, over all strings where the argmax
/// letters of the two next-symbol distributions differ.
double wer(const Pdfa& target, const Pdfa& hyp, const TestSet& ts);

/// NDCG of one position: letters ranked by `hyp` (descending, ties by
/// layout order), gains taken from `target`, discount log2(rank + 1).
/// 1 when the ideal DCG is 0.
double ndcg_at(std::span<const double> target, std::span<const double> hyp);

/// Mean of ndcg_at over the same positions as wer().
double ndcg(const Pdfa& target, const Pdfa& hyp, const TestSet& ts);

inline constexpr double kLogFloor = 1e-300;

/// Mean over strings of |ln max(f_target, ε) - ln max(f_hyp, ε)|.
double logprob_err(const Pdfa& target, const Pdfa& hyp, const TestSet& ts);

}  // namespace pdfa::eval
