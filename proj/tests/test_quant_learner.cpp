#include <gtest/gtest.h>

#include <array>
#include <set>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "pdfa/partition.hpp"
#include "pdfa/quant/learner.hpp"
#include "pdfa/randgen.hpp"
#include "pdfa/teacher.hpp"

using namespace pdfa;
using namespace pdfa::quant;
using fixtures::qv;

namespace {

/// Forwards to a PdfaTeacher and remembers every membership query string.
class RecordingTeacher final : public Teacher {
public:
    explicit RecordingTeacher(Pdfa target) : inner_(std::move(target)) {}
    const Alphabet& alphabet() const override { return inner_.alphabet(); }
    Distribution next_symbol(const Word& s) override {
        if (!seen.insert(s).second) ++repeats;
        return inner_.next_symbol(s);
    }
    double last_symbol(const Word& p, Letter l) override { return inner_.last_symbol(p, l); }
    std::optional<Counterexample> equivalence_quantized(const Pdfa& h, std::uint32_t k) override {
        return inner_.equivalence_quantized(h, k);
    }
    std::optional<Counterexample> equivalence_tolerance(const Pdfa& h, double t) override {
        return inner_.equivalence_tolerance(h, t);
    }
    QueryStats stats() const override { return inner_.stats(); }

    std::set<Word> seen;
    std::size_t repeats = 0;

private:
    PdfaTeacher inner_;
};

QuantLearner with_binary4_tree(PdfaTeacher& teacher) {
    QuantLearner l(teacher, 10);
    l.adopt_tree(fixtures::binary4_tree());
    return l;
}

}  // namespace

TEST(ClassificationTree, Structure) {
    const ClassificationTree t = fixtures::binary4_tree();
    EXPECT_EQ(t.leaf_count(), 4u);
    EXPECT_EQ(t.node_count(), 6u);
    EXPECT_EQ(t.access_strings(), (std::vector<Word>{{}, {1}, {0}, {1, 0}}));
    EXPECT_EQ(t.distinguishing_strings(), (std::vector<Word>{{}, {1}}));
    EXPECT_EQ(t.lca(Word{0}, Word{1, 0}), (Word{1}));
    EXPECT_EQ(t.lca(Word{}, Word{1, 0}), Word{});
    EXPECT_EQ(t.lca(Word{1}, Word{0}), Word{});
    EXPECT_THROW(t.lca(Word{1}, Word{1}), InputError);
    EXPECT_THROW(t.lca(Word{0, 0}, Word{1}), InputError);
    ASSERT_TRUE(t.find_leaf({1, 0}));
    EXPECT_FALSE(t.find_leaf({0, 0}));
    EXPECT_EQ(t.node(*t.find_leaf({0})).depth, 2u);
}

TEST(ClassificationTree, RejectsBadEdits) {
    ClassificationTree t(10);
    const NodeId a = t.add_leaf(t.root(), qv({0, 5, 5}, 10), {}, Distribution{0.0, 0.5, 0.5});
    EXPECT_THROW(t.add_leaf(t.root(), qv({0, 5, 5}, 10), {1}, Distribution{0.0, 0.5, 0.5}), ContractViolation);
    EXPECT_THROW(t.add_leaf(a, qv({1, 5, 4}, 10), {1}, Distribution{0.1, 0.5, 0.4}), ContractViolation);
    EXPECT_THROW(t.add_leaf(t.root(), qv({1, 5, 4}, 10), {}, Distribution{0.1, 0.5, 0.4}), ContractViolation);
    EXPECT_THROW(t.split_leaf(a, {0}, qv({1, 1, 8}, 10), qv({1, 1, 8}, 10), {0}, Distribution{0.1, 0.1, 0.8}),
                 ContractViolation);
}

TEST(ClassificationTree, Dump) {
    const std::string expected =
        "D λ\n"
        "  [(0, 5, 5)]\n"
        "    A λ (0, 0.5, 0.5)\n"
        "  [(1, 6, 3)]\n"
        "    A 1 (0.1, 0.6, 0.3)\n"
        "  [(1, 3, 6)]\n"
        "    D 1\n"
        "      [(1, 3, 6)]\n"
        "        A 0 (0.1, 0.3, 0.6)\n"
        "      [(1, 6, 3)]\n"
        "        A 10 (0.1, 0.3, 0.6)\n";
    EXPECT_EQ(fixtures::binary4_tree().dump(Alphabet({"0", "1"})), expected);
}

TEST(QuantLearner, SiftOnKnownTree) {
    PdfaTeacher teacher(fixtures::binary4());
    QuantLearner l = with_binary4_tree(teacher);
    const auto& t = l.tree();
    const auto leaf = [&](Word w) { return *t.find_leaf(w); };
    EXPECT_EQ(l.sift({}).leaf, leaf({}));
    EXPECT_EQ(l.sift({1}).leaf, leaf({1}));
    EXPECT_EQ(l.sift({0}).leaf, leaf({0}));
    EXPECT_EQ(l.sift({1, 0}).leaf, leaf({1, 0}));
    EXPECT_EQ(l.sift({0, 0}).leaf, leaf({0}));
    EXPECT_EQ(l.sift({0, 1}).leaf, leaf({1, 0}));
    EXPECT_EQ(l.sift({1, 1}).leaf, leaf({1}));
    EXPECT_EQ(l.sift({1, 0, 1}).leaf, leaf({1}));
    EXPECT_FALSE(l.sift({0, 1, 0, 0}).updated);
    EXPECT_EQ(t.leaf_count(), 4u);
}

TEST(QuantLearner, SiftAddsLeafOnMissingArc) {
    PdfaTeacher teacher(fixtures::pair_a());
    QuantLearner l(teacher, 10);
    l.initialize_tree({0});
    EXPECT_EQ(l.tree().leaf_count(), 2u);
    const SiftResult r = l.sift({0, 1});
    EXPECT_TRUE(r.updated);
    EXPECT_EQ(l.tree().node(r.leaf).label, (Word{0, 1}));
    EXPECT_EQ(l.tree().leaf_count(), 3u);
    const SiftResult again = l.sift({0, 1});
    EXPECT_FALSE(again.updated);
    EXPECT_EQ(again.leaf, r.leaf);
}

TEST(QuantLearner, HypothesisFromKnownTree) {
    PdfaTeacher teacher(fixtures::binary4());
    QuantLearner l = with_binary4_tree(teacher);
    EXPECT_EQ(l.build_hypothesis(), fixtures::binary4());
}

TEST(QuantLearner, Preconditions) {
    PdfaTeacher teacher(fixtures::binary4());
    QuantLearner l(teacher, 10);
    EXPECT_FALSE(l.has_tree());
    EXPECT_THROW(l.sift({}), ContractViolation);
    EXPECT_THROW(l.build_hypothesis(), ContractViolation);
    EXPECT_THROW(l.tree(), ContractViolation);
}

TEST(QuantLearner, InitializeNeedsADisagreement) {
    PdfaTeacher teacher(fixtures::loop_pdfa());
    QuantLearner l(teacher, 1);
    EXPECT_THROW(l.initialize_tree({0}), ContractViolation);
    QuantLearner wrong(teacher, 5);
    EXPECT_THROW(wrong.adopt_tree(fixtures::binary4_tree()), InputError);
    EXPECT_THROW(QuantLearner(teacher, 0), InputError);
}

TEST(QuantLearner, CounterexampleThatAgreesIsRejected) {
    PdfaTeacher teacher(fixtures::binary4());
    QuantLearner l = with_binary4_tree(teacher);
    const Pdfa hyp = l.build_hypothesis();
    EXPECT_THROW(l.process_counterexample({0, 1, 1, 0}, hyp), ContractViolation);
}

TEST(QuantLearner, LearnsBinary4) {
    PdfaTeacher teacher(fixtures::binary4());
    QuantLearner l(teacher, 10);
    const Pdfa h = l.learn();
    EXPECT_EQ(h.num_states(), 4u);
    EXPECT_FALSE(eq_quantized(fixtures::binary4(), h, 10));
    EXPECT_TRUE(oracle::kappa_equivalent(fixtures::binary4(), 0, h, 0, 10));
    EXPECT_EQ(l.tree().leaf_count(), 4u);
    EXPECT_EQ(l.tree().node_count(), 6u);
}

TEST(QuantLearner, LearnsPerturbedLoopAtCoarseKappa) {
    PdfaTeacher teacher(fixtures::loop_pdfa(0.05));
    const Pdfa h = learn_quant(teacher, 5);
    EXPECT_EQ(h.num_states(), 2u);
    EXPECT_FALSE(eq_quantized(fixtures::loop_pdfa(), h, 5));
}

TEST(QuantLearner, SingleStateTargetNeedsNoTree) {
    PdfaTeacher teacher(single_state(Alphabet({"a", "b"}), Distribution{0.2, 0.3, 0.5}));
    QuantLearner l(teacher, 10);
    const Pdfa h = l.learn();
    EXPECT_EQ(h.num_states(), 1u);
    EXPECT_FALSE(l.has_tree());
    EXPECT_EQ(l.rounds(), 0u);
    EXPECT_EQ(teacher.stats().eq_calls, 1u);
}

TEST(QuantLearner, EachQueryStringIsAskedOnce) {
    RecordingTeacher teacher(random_pdfa({40, 3, std::nullopt, 5}));
    const Pdfa h = learn_quant(teacher, 100);
    EXPECT_GT(h.num_states(), 1u);
    EXPECT_EQ(teacher.repeats, 0u);
}

// Properties on random targets, against independent oracles.
TEST(QuantLearner, RandomTargetsInvariants) {
    Rng rng(2024);
    for (int i = 0; i < 60; ++i) {
        const std::uint32_t kappa = std::array<std::uint32_t, 4>{2, 5, 10, 100}[i % 4];
        const std::optional<std::uint32_t> d = i % 3 == 0 ? std::optional<std::uint32_t>{3} : std::nullopt;
        const Pdfa target = random_pdfa({15, 1 + static_cast<std::uint32_t>(i % 3), d, rng.next()});
        PdfaTeacher teacher(target);
        QuantLearner l(teacher, kappa);
        std::size_t prev_states = 0;
        l.on_hypothesis = [&](const Pdfa& h) {
            // Every round grows the hypothesis.
            EXPECT_GT(h.num_states(), prev_states);
            prev_states = h.num_states();
        };
        const Pdfa h = l.learn();
        SCOPED_TRACE("trial " + std::to_string(i));

        EXPECT_TRUE(oracle::kappa_equivalent(target, target.initial(), h, h.initial(), kappa));
        EXPECT_TRUE(is_weakly_minimal(h, PartitionKey::quantized(kappa)));
        const std::size_t classes = quotient(target, compute_partition(target, PartitionKey::quantized(kappa))).num_states();
        EXPECT_EQ(h.num_states(), classes);
        if (!l.has_tree()) continue;
        const auto& tree = l.tree();
        EXPECT_LE(tree.leaf_count(), classes);

        // Each access string sifts to its own leaf, and leaves name distinct
        // target classes.
        std::vector<StateId> reached;
        for (NodeId leaf : tree.leaves()) {
            const Word a = tree.node(leaf).label;
            EXPECT_EQ(l.sift(a).leaf, leaf);
            reached.push_back(oracle::walk(target, a));
        }
        for (std::size_t x = 0; x < reached.size(); ++x) {
            for (std::size_t y = x + 1; y < reached.size(); ++y) {
                EXPECT_FALSE(oracle::kappa_equivalent(target, reached[x], target, reached[y], kappa));
            }
        }
        // Arcs under an inner node are distinct.
        for (NodeId n = 0; n < tree.node_count(); ++n) {
            const auto& ch = tree.node(n).children;
            for (std::size_t x = 0; x < ch.size(); ++x) {
                for (std::size_t y = x + 1; y < ch.size(); ++y) EXPECT_NE(ch[x].first, ch[y].first);
            }
        }
    }
}
