#pragma once

#include <span>
#include <string>
#include <vector>

#include "pdfa/alphabet.hpp"
#include "pdfa/distribution.hpp"
#include "pdfa/types.hpp"

namespace pdfa {

/// Probabilistic deterministic finite automaton (Q, q_in, π, τ).
///
/// States are dense indices. The value does not enforce its invariants
/// (generators and readers build it incrementally); validate() reports
/// problems and the probability operations throw InputError when they meet a
/// missing transition or an out-of-range symbol.
class Pdfa {
public:
    Pdfa() = default;
    /// `num_states` states with empty distributions and missing transitions.
    Pdfa(Alphabet alphabet, std::size_t num_states, StateId initial = 0);
    /// `transitions` is row-major: transitions[q * |Σ| + s].
    Pdfa(Alphabet alphabet, std::vector<Distribution> dists, std::vector<StateId> transitions,
         StateId initial);

    const Alphabet& alphabet() const noexcept { return alphabet_; }
    std::size_t num_states() const noexcept { return dists_.size(); }
    std::size_t num_symbols() const noexcept { return alphabet_.size(); }

    StateId initial() const noexcept { return initial_; }
    void set_initial(StateId q) { initial_ = q; }

    const Distribution& dist(StateId q) const { return dists_.at(q); }
    void set_dist(StateId q, Distribution d) { dists_.at(q) = std::move(d); }

    /// τ(q, s), or kNoState when the entry is missing.
    StateId next(StateId q, Symbol s) const { return trans_.at(index(q, s)); }
    void set_next(StateId q, Symbol s, StateId target) { trans_.at(index(q, s)) = target; }

    StateId add_state(Distribution d);

    std::span<const StateId> transitions() const noexcept { return trans_; }
    const std::vector<Distribution>& dists() const noexcept { return dists_; }

    bool operator==(const Pdfa&) const = default;

private:
    std::size_t index(StateId q, Symbol s) const {
        return static_cast<std::size_t>(q) * alphabet_.size() + s;
    }

    Alphabet alphabet_;
    std::vector<Distribution> dists_;
    std::vector<StateId> trans_;
    StateId initial_ = 0;
};

/// τ*(q, s). tau_star(q, λ) = q.
StateId tau_star(const Pdfa& a, StateId q, std::span<const Symbol> s);
inline StateId tau_star(const Pdfa& a, std::span<const Symbol> s) {
    return tau_star(a, a.initial(), s);
}

/// π*(s | q) = π(τ*(q, s)).
const Distribution& pi_star(const Pdfa& a, StateId q, std::span<const Symbol> s);
inline const Distribution& pi_star(const Pdfa& a, std::span<const Symbol> s) {
    return pi_star(a, a.initial(), s);
}

/// P(s | q_in): the product of next-symbol probabilities along s, times the
/// terminal probability of the state reached.
double string_prob(const Pdfa& a, std::span<const Symbol> s);

/// πℓ_q(s'σ) = π*(s' | q)(σ), for σ ∈ Σ ∪ {$}.
double last_symbol_prob(const Pdfa& a, StateId q, std::span<const Symbol> prefix, Letter last);
/// Same, with the whole string given as layout letters; only the last letter
/// may be the terminal. Empty input is an InputError.
double last_symbol_prob(const Pdfa& a, StateId q, std::span<const Letter> letters);

/// Reachable states in breadth-first discovery order from the initial state,
/// children visited in symbol order. Missing transitions are skipped.
std::vector<StateId> bfs_order(const Pdfa& a);

struct Violation {
    enum class Kind { simplex, totality, dangling, initial, unreachable };
    Kind kind;
    /// Warnings (unreachable states) do not make a Pdfa invalid.
    bool warning = false;
    std::string message;
};

std::vector<Violation> validate(const Pdfa& a);
/// True when validate() reports no errors (warnings allowed).
bool is_valid(const Pdfa& a);
/// Throws InputError listing every error reported by validate().
void require_valid(const Pdfa& a);

/// Pdfa with a single state: π = d and a self-loop on every symbol.
Pdfa single_state(const Alphabet& alphabet, Distribution d);

}  // namespace pdfa
