#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "pdfa/lpstar/observation_table.hpp"

namespace pdfa::lpstar {

/// Clusters over the RED rows, indexed like ObservationTable::red().
struct RowPartition {
    std::vector<std::uint32_t> cluster_of;
    std::vector<std::vector<std::size_t>> members;
    std::vector<std::vector<double>> centroids;
    std::size_t size() const noexcept { return members.size(); }
};

/// R ⊆ clusters × Σ × clusters, kept per RED row: row_target[r][σ] is the
/// cluster chosen for the continuation of row r by σ.
struct TransitionRelation {
    std::vector<std::vector<std::uint32_t>> row_target;
    /// targets[c][σ]: distinct clusters reached from cluster c, ascending.
    std::vector<std::vector<std::vector<std::uint32_t>>> targets;
    bool deterministic() const;
};

/// Rows are taken in RED order; each joins the cluster whose members are all
/// t-equal to it, the nearest centroid (Euclidean, over all columns) when
/// several qualify and the lowest id on ties, or opens a new cluster.
RowPartition greedy_cluster(const ObservationTable& table);

/// Cluster of pσ when pσ is RED, else the cluster with the nearest centroid
/// among those holding a row t-equal to pσ (lowest id on ties). Throws
/// ContractViolation if no cluster qualifies, which a closed table rules out.
TransitionRelation add_transitions(const ObservationTable& table, const RowPartition& g);

/// Splits clusters by the per-row target signature and recomputes R until
/// every (cluster, σ) has a single target.
void refine_to_deterministic(const ObservationTable& table, RowPartition& g, TransitionRelation& r);

/// States are clusters of a deterministic partition; π is the centroid on
/// the columns $ and σ ∈ Σ, rescaled to sum 1. Throws InputError if the
/// table lacks one of those columns.
Pdfa build_hypothesis_lp(const ObservationTable& table, const RowPartition& g, const TransitionRelation& r);
/// Clusters, determinizes and builds in one go.
Pdfa build_hypothesis_lp(const ObservationTable& table);

/// Adds every prefix of γ to RED (and their continuations to BLUE). False
/// when nothing changed.
bool handle_counterexample_lp(ObservationTable& table, const Word& gamma);
/// Adds u·x for every suffix u of γ and x ∈ Σ ∪ {$}. False when nothing
/// changed.
bool add_counterexample_suffixes(ObservationTable& table, const Word& gamma);

/// Promotes unclosed BLUE rows and, with `consistency`, adds witnessing
/// suffixes until the table passes both checks. Throws ContractViolation
/// after `max_steps` changes.
void expand(ObservationTable& table, bool consistency, std::size_t max_steps = 1'000'000);

enum class Variant {
    /// Counterexample prefixes go to RED; consistency is enforced.
    prefixes,
    /// Counterexample suffixes become columns; no consistency check.
    columns,
};

struct LpOptions {
    double tolerance = 1e-3;
    Variant variant = Variant::prefixes;
    /// Equivalence queries before giving up with ContractViolation.
    std::size_t max_rounds = 10'000;
};

class LpStarLearner {
public:
    LpStarLearner(Teacher& teacher, LpOptions options);

    Pdfa learn();

    const ObservationTable& table() const noexcept { return table_; }
    /// Partition behind the last hypothesis.
    const RowPartition& partition() const noexcept { return partition_; }
    std::size_t rounds() const noexcept { return rounds_; }
    /// Counterexamples that added nothing in the variant's own way and were
    /// handled the other way instead.
    std::size_t fallbacks() const noexcept { return fallbacks_; }

    std::function<void(const Pdfa&, const ObservationTable&)> on_hypothesis;

private:
    Teacher& teacher_;
    LpOptions options_;
    ObservationTable table_;
    RowPartition partition_;
    std::size_t rounds_ = 0;
    std::size_t fallbacks_ = 0;
};

Pdfa learn_lpstar(Teacher& teacher, double tolerance);
Pdfa learn_lpstar_col(Teacher& teacher, double tolerance);

}  // namespace pdfa::lpstar
