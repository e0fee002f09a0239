#pragma once

#include <cstdint>
#include <optional>

#include "pdfa/automaton.hpp"

namespace pdfa {

/// A string after which target and hypothesis disagree.
struct Counterexample {
    Word gamma;
    bool operator==(const Counterexample&) const = default;
};

/// Hopcroft-Karp over the product of `target` and `hyp`: initial states are
/// paired, pairs are explored breadth-first in symbol order, and classes of
/// paired states are merged in a union-find. A pair is compared when it first
/// joins two classes; the first failing pair yields its access string, so the
/// counterexample is the BFS-shortest one. Absent iff target ≡_κ hyp.
///
/// Throws InputError when the alphabets differ or a transition is missing.
std::optional<Counterexample> eq_quantized(const Pdfa& target, const Pdfa& hyp, std::uint32_t kappa);

/// Same traversal with the pair test L∞(π(q), π(q̂)) <= t. Since t-closeness
/// is not transitive, merged classes can hide pairs that were never compared:
/// absent only means every compared pair passed.
std::optional<Counterexample> eq_tolerance(const Pdfa& target, const Pdfa& hyp, double t);

/// Independent check by partition refinement: do the two initial states share
/// a class of the joint ≡_κ partition over the disjoint union?
bool oracle_bisim(const Pdfa& target, const Pdfa& hyp, std::uint32_t kappa);

}  // namespace pdfa
