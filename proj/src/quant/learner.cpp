#include "pdfa/quant/learner.hpp"

namespace pdfa::quant {

QuantLearner::QuantLearner(Teacher& teacher, std::uint32_t kappa) : teacher_(teacher), kappa_(kappa) {
    if (kappa < 1) throw InputError("kappa must be at least 1");
}

const QuantLearner::Answer& QuantLearner::ask(const Word& s) {
    auto it = answers_.find(s);
    if (it == answers_.end()) {
        Distribution d = teacher_.next_symbol(s);
        QuantVector qv = quantize(d, kappa_);
        it = answers_.emplace(s, Answer{std::move(d), std::move(qv)}).first;
    }
    return it->second;
}

const ClassificationTree& QuantLearner::tree() const {
    if (!tree_) throw ContractViolation("the classification tree is not initialized");
    return *tree_;
}

void QuantLearner::initialize_tree(const Word& gamma) {
    const Answer root = ask({});
    const Answer& cex = ask(gamma);
    if (root.qv == cex.qv)
        throw ContractViolation("not a counterexample to the single-state hypothesis: both sides quantize to " +
                                to_string(root.qv));
    tree_.emplace(kappa_);
    tree_->add_leaf(tree_->root(), root.qv, {}, root.dist);
    tree_->add_leaf(tree_->root(), cex.qv, gamma, cex.dist);
}

void QuantLearner::adopt_tree(ClassificationTree tree) {
    if (tree.kappa() != kappa_) throw InputError("tree was built for a different kappa");
    tree_.emplace(std::move(tree));
    sifted_.clear();
}

SiftResult QuantLearner::sift(const Word& s) {
    if (!tree_) throw ContractViolation("sift before the tree is initialized");
    if (auto it = sifted_.find(s); it != sifted_.end()) return {it->second, false};
    NodeId n = tree_->root();
    while (!tree_->node(n).leaf) {
        const QuantVector& qv = ask(concat(s, tree_->node(n).label)).qv;
        if (auto c = tree_->child(n, qv)) {
            n = *c;
            continue;
        }
        // A new class: s becomes its representative.
        const NodeId leaf = tree_->add_leaf(n, qv, s, ask(s).dist);
        sifted_.emplace(s, leaf);
        return {leaf, true};
    }
    sifted_.emplace(s, n);
    return {n, false};
}

Pdfa QuantLearner::build_hypothesis() {
    if (!tree_) throw ContractViolation("build_hypothesis before the tree is initialized");
    const Alphabet& alphabet = teacher_.alphabet();
    // A sift that adds a leaf would restart the construction, but every
    // finished sift is cached and stays valid, so a restart would only replay
    // the same answers. Walking the growing leaf list once gives the same
    // automaton.
    std::vector<NodeId> targets;
    for (std::size_t i = 0; i < tree_->leaves().size(); ++i) {
        const Word access = tree_->node(tree_->leaves()[i]).label;
        for (Symbol s = 0; s < alphabet.size(); ++s) targets.push_back(sift(append(access, s)).leaf);
    }

    const auto& leaves = tree_->leaves();
    std::unordered_map<NodeId, StateId> state_of;
    for (std::size_t i = 0; i < leaves.size(); ++i) state_of.emplace(leaves[i], static_cast<StateId>(i));
    std::vector<Distribution> dists;
    dists.reserve(leaves.size());
    for (NodeId l : leaves) dists.push_back(tree_->node(l).dist);
    std::vector<StateId> trans;
    trans.reserve(targets.size());
    for (NodeId t : targets) trans.push_back(state_of.at(t));
    return Pdfa(alphabet, std::move(dists), std::move(trans), 0);
}

void QuantLearner::process_counterexample(const Word& gamma, const Pdfa& hyp) {
    if (!tree_) throw ContractViolation("process_counterexample before the tree is initialized");
    const auto& leaves = tree_->leaves();
    if (hyp.num_states() > leaves.size()) throw ContractViolation("hypothesis does not belong to this tree");

    // s_0 = ŝ_0 = λ.
    NodeId prev = leaves[0];
    StateId q = hyp.initial();
    for (std::size_t j = 1; j <= gamma.size(); ++j) {
        q = hyp.next(q, gamma[j - 1]);
        const NodeId expected = leaves[q];
        const Word prefix = prefix_of(gamma, j);
        // A sift that adds a leaf lands on a fresh leaf, which differs from
        // `expected`; the split below still applies because arcs are never
        // removed, so earlier sift paths are unchanged.
        const NodeId actual = sift(prefix).leaf;
        if (actual == expected) {
            prev = actual;
            continue;
        }
        Word dstring{gamma[j - 1]};
        const Word& d = tree_->node(tree_->lca(expected, actual)).label;
        dstring.insert(dstring.end(), d.begin(), d.end());

        const Word longer = prefix_of(gamma, j - 1);
        const Word old_access = tree_->node(prev).label;
        const QuantVector old_arc = ask(concat(old_access, dstring)).qv;
        const QuantVector new_arc = ask(concat(longer, dstring)).qv;
        if (old_arc == new_arc)
            throw ContractViolation("counterexample split produced equal arcs " + to_string(old_arc));
        tree_->split_leaf(prev, std::move(dstring), old_arc, new_arc, longer, ask(longer).dist);
        std::erase_if(sifted_, [prev](const auto& entry) { return entry.second == prev; });
        return;
    }
    throw ContractViolation("sifting the prefixes of the counterexample agrees with the hypothesis");
}

Pdfa QuantLearner::learn() {
    Pdfa hyp = single_state(teacher_.alphabet(), ask({}).dist);
    if (on_hypothesis) on_hypothesis(hyp);
    auto cex = teacher_.equivalence_quantized(hyp, kappa_);
    if (!cex) return hyp;
    initialize_tree(cex->gamma);
    for (;;) {
        hyp = build_hypothesis();
        if (on_hypothesis) on_hypothesis(hyp);
        cex = teacher_.equivalence_quantized(hyp, kappa_);
        if (!cex) return hyp;
        process_counterexample(cex->gamma, hyp);
        ++rounds_;
    }
}

Pdfa learn_quant(Teacher& teacher, std::uint32_t kappa) {
    QuantLearner learner(teacher, kappa);
    return learner.learn();
}

}  // namespace pdfa::quant
