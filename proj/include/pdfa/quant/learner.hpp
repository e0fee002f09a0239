#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <unordered_map>
#include <vector>

#include "pdfa/quant/classification_tree.hpp"
#include "pdfa/teacher.hpp"

namespace pdfa::quant {

struct SiftResult {
    NodeId leaf;
    /// True when the sift hit a missing arc and added `s` as a new leaf.
    bool updated;
};

/// QuaNT: learns a PDFA up to ≡_κ with a classification tree.
///
/// Membership answers and their quantizations are cached per query string,
/// so the teacher sees each distinct query once.
class QuantLearner {
public:
    QuantLearner(Teacher& teacher, std::uint32_t kappa);

    std::uint32_t kappa() const noexcept { return kappa_; }

    /// Root with leaves λ and γ. Throws ContractViolation if the two
    /// quantized answers coincide.
    void initialize_tree(const Word& gamma);

    /// Replaces the tree (and forgets cached sifts), e.g. to resume from a
    /// saved tree. Its κ must match.
    void adopt_tree(ClassificationTree tree);

    SiftResult sift(const Word& s);

    /// One state per leaf, in leaf creation order; state 0 is λ. Leaves
    /// found while sifting the transitions become states too.
    Pdfa build_hypothesis();

    /// Splits the leaf s_{j-1} at the first prefix length j where sifting γ[j]
    /// disagrees with running `hyp` on it. `hyp` must come from
    /// build_hypothesis() on this tree. Throws ContractViolation if no such j
    /// exists.
    ///
    /// A sift that adds a leaf during the scan counts as a disagreement at
    /// that j. Restarting the scan instead would replay the same cached sifts
    /// and stop at the same j, so the split is the same either way.
    void process_counterexample(const Word& gamma, const Pdfa& hyp);

    /// The main loop. Returns a hypothesis the teacher accepts.
    Pdfa learn();

    bool has_tree() const noexcept { return tree_.has_value(); }
    const ClassificationTree& tree() const;
    /// Counterexamples processed by learn().
    std::size_t rounds() const noexcept { return rounds_; }

    /// Called with every hypothesis learn() submits.
    std::function<void(const Pdfa&)> on_hypothesis;

private:
    struct Answer {
        Distribution dist;
        QuantVector qv;
    };
    const Answer& ask(const Word& s);

    Teacher& teacher_;
    std::uint32_t kappa_;
    std::optional<ClassificationTree> tree_;
    std::unordered_map<Word, Answer, WordHash> answers_;
    /// Finished sifts. Arcs are only ever added, so a result stays valid
    /// until its leaf is split.
    std::unordered_map<Word, NodeId, WordHash> sifted_;
    std::size_t rounds_ = 0;
};

Pdfa learn_quant(Teacher& teacher, std::uint32_t kappa);

}  // namespace pdfa::quant
