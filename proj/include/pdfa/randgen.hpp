#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pdfa/automaton.hpp"
#include "pdfa/rng.hpp"

namespace pdfa {

/// Principal branch of the Lambert W function. Throws std::domain_error for
/// x < -1/e or NaN.
double lambert_w0(double x);

/// Asymptotic fraction of accessible states times m in a uniform random
/// DFA: ρ_m = m + W0(-m e^{-m}). Needs m >= 2.
double rho(std::uint32_t m);

/// Total states N = round(n·m/ρ_m) to draw so that about n are accessible;
/// N = n when m = 1.
std::size_t sample_size(std::size_t n, std::uint32_t m);

/// Complete DFA without outputs; state 0 is initial.
struct Dfa {
    std::size_t num_states = 0;
    std::uint32_t num_symbols = 0;
    /// Row-major: trans[q * num_symbols + s].
    std::vector<StateId> trans;
    StateId next(StateId q, Symbol s) const { return trans[static_cast<std::size_t>(q) * num_symbols + s]; }
};

/// Every transition target drawn uniformly from [0, N).
Dfa random_dfa(std::size_t num_states, std::uint32_t num_symbols, Rng& rng);

/// States reachable from 0, renumbered in depth-first preorder with
/// children taken in symbol order.
Dfa accessible_part(const Dfa& dfa);

/// Uniform point of the simplex over Σ ∪ {$}: m + 1 unit exponentials
/// divided by their sum.
Distribution random_distribution(std::uint32_t m, Rng& rng);

struct GenConfig {
    std::size_t nominal_n = 1;
    std::uint32_t m = 2;
    /// Draw this many distributions up front and give each state one of them.
    std::optional<std::uint32_t> d;
    std::uint64_t seed = 0;
};

/// Random DFA of sample_size() states, trimmed to its accessible part,
/// with distributions attached. Alphabet "0" .. "m-1". The accessible size
/// varies around the nominal one.
Pdfa random_pdfa(const GenConfig& cfg);

}  // namespace pdfa
