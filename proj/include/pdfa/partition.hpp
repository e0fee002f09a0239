#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pdfa/automaton.hpp"

namespace pdfa {

struct Partition {
    std::vector<std::uint32_t> class_of;
    std::vector<std::vector<StateId>> classes;

    std::size_t size() const noexcept { return classes.size(); }
    bool same_class(StateId a, StateId b) const { return class_of.at(a) == class_of.at(b); }
};

/// Which state observation the congruence must preserve: the exact
/// distribution (≡) or its quantization vector under κ (≡_κ).
struct PartitionKey {
    std::optional<std::uint32_t> kappa;

    static PartitionKey exact() { return {}; }
    static PartitionKey quantized(std::uint32_t k) { return {k}; }
};

/// Coarsest partition whose classes agree on the key and are closed under τ
/// (Moore refinement to a fixpoint). Class ids follow the first member's
/// state index. Throws InputError if τ is not total.
Partition compute_partition(const Pdfa& a, PartitionKey key);

/// Refinement from an explicit initial block assignment.
Partition refine_partition(const Pdfa& a, const std::vector<std::uint32_t>& initial_blocks);

/// Quotient automaton. Classes unreachable from the initial class are dropped;
/// the rest are numbered in breadth-first order and each takes the
/// distribution of its first-discovered member. Throws ContractViolation if
/// `p` does not cover the states or is not closed under τ.
Pdfa quotient(const Pdfa& a, const Partition& p);

/// True iff compute_partition(a, key) has only singleton classes.
bool is_weakly_minimal(const Pdfa& a, PartitionKey key);

/// States of `a` followed by states of `b` (offset by a.num_states()); the
/// initial state is a's. Alphabets must match.
Pdfa disjoint_union(const Pdfa& a, const Pdfa& b);

}  // namespace pdfa
