#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <sstream>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "pdfa/eval/experiment.hpp"
#include "pdfa/eval/metrics.hpp"
#include "pdfa/randgen.hpp"

using namespace pdfa;
using namespace pdfa::eval;

namespace {

TestSet manual(std::vector<Word> strings) {
    TestSet ts;
    ts.truncated.assign(strings.size(), false);
    ts.strings = std::move(strings);
    ts.max_len = 50;
    return ts;
}

Pdfa constant(const Alphabet& a, Distribution d) { return single_state(a, std::move(d)); }

/// WER by definition: walk both automata side by side and count argmax
/// disagreements at every prefix, the full string included.
double wer_oracle(const Pdfa& t, const Pdfa& h, const TestSet& ts) {
    double wrong = 0.0, total = 0.0;
    for (const Word& w : ts.strings) {
        for (std::size_t i = 0; i <= w.size(); ++i) {
            const Word p = prefix_of(w, i);
            const auto a = t.dist(oracle::walk(t, p)).values();
            const auto b = h.dist(oracle::walk(h, p)).values();
            const auto am = std::max_element(a.begin(), a.end()) - a.begin();
            const auto bm = std::max_element(b.begin(), b.end()) - b.begin();
            wrong += am != bm;
            total += 1.0;
        }
    }
    return wrong / total;
}

}  // namespace

TEST(Sampler, LoopAutomaton) {
    Rng rng(3);
    const TestSet ts = sample_strings(fixtures::loop_pdfa(), 20000, 50, rng);
    ASSERT_EQ(ts.strings.size(), 20000u);
    EXPECT_EQ(ts.seed, 3u);
    double len = 0.0;
    for (std::size_t i = 0; i < ts.strings.size(); ++i) {
        const Word& w = ts.strings[i];
        EXPECT_GE(w.size(), 1u);
        for (Symbol s : w) EXPECT_EQ(s, 0u);
        EXPECT_EQ(ts.truncated[i], w.size() == 50);
        len += static_cast<double>(w.size());
    }
    // One forced "a", then a geometric number with mean 1.
    EXPECT_NEAR(len / 20000.0, 2.0, 0.05);
}

TEST(Sampler, TruncatesAtMaxLength) {
    const Pdfa never_stops = constant(Alphabet({"a"}), Distribution{0.0, 1.0});
    Rng rng(1);
    const TestSet ts = sample_strings(never_stops, 5, 7, rng);
    for (std::size_t i = 0; i < 5; ++i) {
        EXPECT_EQ(ts.strings[i].size(), 7u);
        EXPECT_TRUE(ts.truncated[i]);
    }
    Rng again(1);
    EXPECT_THROW(sample_strings(never_stops, 0, 7, again), InputError);
}

TEST(Sampler, Reproducible) {
    const Pdfa a = random_pdfa({30, 3, std::nullopt, 9});
    Rng r1(77), r2(77);
    EXPECT_EQ(sample_strings(a, 100, 50, r1).strings, sample_strings(a, 100, 50, r2).strings);
}

TEST(Metrics, IdentityOnSameAutomaton) {
    const Pdfa a = random_pdfa({50, 2, std::nullopt, 4});
    Rng rng(2);
    const TestSet ts = sample_strings(a, 300, 50, rng);
    EXPECT_EQ(wer(a, a, ts), 0.0);
    EXPECT_EQ(ndcg(a, a, ts), 1.0);
    EXPECT_EQ(logprob_err(a, a, ts), 0.0);
}

TEST(Metrics, WerAgainstOracle) {
    Rng rng(6);
    for (int i = 0; i < 20; ++i) {
        const Pdfa t = random_pdfa({20, 2, std::nullopt, rng.next()});
        const Pdfa h = random_pdfa({20, 2, std::nullopt, rng.next()});
        Rng srng(i);
        const TestSet ts = sample_strings(t, 200, 30, srng);
        EXPECT_DOUBLE_EQ(wer(t, h, ts), wer_oracle(t, h, ts));
    }
}

TEST(Metrics, WerExample) {
    const Pdfa t = fixtures::binary4();
    const Pdfa h = constant(t.alphabet(), Distribution{0.1, 0.6, 0.3});
    const TestSet ts = manual({{1}, {0, 0}});
    // Positions λ, 1 and λ, 0, 00. Target argmaxes are 1, 1 and 1, 2, 2 (the
    // tie at λ goes to the lower letter); the hypothesis always says 1.
    EXPECT_DOUBLE_EQ(wer(t, h, ts), 2.0 / 5.0);
}

TEST(Metrics, NdcgAtExample) {
    const std::vector<double> target{0.1, 0.6, 0.3};
    const std::vector<double> hyp{0.1, 0.3, 0.6};
    const double dcg = 0.3 + 0.6 / std::log2(3.0) + 0.1 / 2.0;
    const double idcg = 0.6 + 0.3 / std::log2(3.0) + 0.1 / 2.0;
    EXPECT_NEAR(ndcg_at(target, hyp), dcg / idcg, 1e-15);
    EXPECT_EQ(ndcg_at(target, target), 1.0);
    const std::vector<double> zeros{0.0, 0.0};
    EXPECT_EQ(ndcg_at(zeros, std::vector<double>{0.5, 0.5}), 1.0);
}

TEST(Metrics, NdcgAtAgainstOracle) {
    Rng rng(10);
    for (int i = 0; i < 5000; ++i) {
        const std::size_t k = 2 + rng.uniform_below(6);
        std::vector<double> t(k), h(k);
        for (auto& x : t) x = rng.uniform01();
        // Coarse values so ties show up.
        for (auto& x : h) x = static_cast<double>(rng.uniform_below(4)) / 4.0;
        EXPECT_NEAR(ndcg_at(t, h), oracle::ndcg_at(t, h), 1e-12);
    }
}

TEST(Metrics, NdcgMatchesPerPositionMean) {
    const Pdfa t = fixtures::binary4();
    const Pdfa h = constant(t.alphabet(), Distribution{0.1, 0.6, 0.3});
    const TestSet ts = manual({{1}});
    const double want =
        (oracle::ndcg_at(t.dist(0).values(), h.dist(0).values()) + oracle::ndcg_at(t.dist(1).values(), h.dist(0).values())) / 2.0;
    EXPECT_NEAR(ndcg(t, h, ts), want, 1e-15);
}

TEST(Metrics, LogProbability) {
    const TestSet ts = manual({{0}});
    // f(a) is 1 · 0.5 against 1 · 0.55.
    EXPECT_NEAR(logprob_err(fixtures::loop_pdfa(), fixtures::loop_pdfa(0.05), ts), std::log(1.1), 1e-15);
    // A zero probability hits the floor instead of producing infinity.
    const Pdfa dead = constant(Alphabet({"a"}), Distribution{0.0, 1.0});
    EXPECT_NEAR(logprob_err(fixtures::loop_pdfa(), dead, ts), std::log(0.5) - std::log(kLogFloor), 1e-9);
    EXPECT_TRUE(std::isfinite(logprob_err(dead, dead, ts)));
}

TEST(Experiment, Grids) {
    const std::vector<std::pair<std::size_t, std::size_t>> sizes{{3, 3}, {3, 5}, {4, 6}, {3, 3}, {4, 8}};
    for (int e = 1; e <= 5; ++e) {
        EXPECT_EQ(grid(e, false).size(), sizes[e - 1].first) << e;
        EXPECT_EQ(grid(e, true).size(), sizes[e - 1].second) << e;
        for (bool full : {false, true}) {
            for (const GridPoint& p : grid(e, full)) EXPECT_DOUBLE_EQ(p.tolerance, 1.0 / p.kappa);
        }
    }
    EXPECT_THROW(grid(0, false), InputError);
    EXPECT_THROW(grid(6, true), InputError);
    EXPECT_EQ(grid(3, true).back().kappa, 3000u);
    EXPECT_EQ(grid(2, true).back().m, 32u);
    EXPECT_EQ(*grid(5, true).back().d, 16u);
    EXPECT_EQ(grid(4, false).front().n, 200u);
    EXPECT_EQ(default_algos(4), (std::vector<Algo>{Algo::quant}));
    EXPECT_EQ(default_algos(1), (std::vector<Algo>{Algo::quant, Algo::lpstar}));
}

TEST(Experiment, AlgoNames) {
    for (Algo a : {Algo::quant, Algo::lpstar, Algo::lpstar_col}) EXPECT_EQ(parse_algo(algo_name(a)), a);
    EXPECT_EQ(algo_name(Algo::lpstar_col), "lpstar-col");
    EXPECT_THROW(parse_algo("lstar"), InputError);
}

TEST(Experiment, TargetSeeds) {
    EXPECT_EQ(target_seed(5, 2, 3), Rng::child_seed(Rng::child_seed(5, 2), 3));
    EXPECT_NE(target_seed(5, 0, 1), target_seed(5, 1, 0));
}

TEST(Experiment, RunLearnerReportsStructure) {
    const Pdfa t = fixtures::binary4();
    const LearnOutcome q = run_learner(Algo::quant, t, 10, 0.1);
    EXPECT_EQ(q.hypothesis.num_states(), 4u);
    EXPECT_EQ(q.structure_size, 6u);
    EXPECT_EQ(q.leaves, 4u);
    EXPECT_GT(q.mq_count, 0u);
    EXPECT_GE(q.eq_count, 2u);
    const LearnOutcome l = run_learner(Algo::lpstar, t, 100, 0.01);
    EXPECT_EQ(l.hypothesis.num_states(), 4u);
    EXPECT_GT(l.structure_size, 0u);
    const LearnOutcome one = run_learner(Algo::quant, single_state(t.alphabet(), Distribution{0.2, 0.4, 0.4}), 10, 0.1);
    EXPECT_EQ(one.leaves, 1u);
    EXPECT_EQ(one.structure_size, 0u);
}

TEST(Experiment, RowsAndThreadIndependence) {
    ExperimentSpec spec;
    spec.experiment = 1;
    spec.seed = 17;
    spec.targets = 2;
    spec.runs = 2;
    spec.test_strings = 50;
    std::size_t seen = 0;
    const auto serial = run_experiment(spec, [&](const TrialRecord&) { ++seen; });
    // 3 sizes x 2 targets x 2 algorithms x 2 runs.
    ASSERT_EQ(serial.size(), 24u);
    EXPECT_EQ(seen, 24u);
    for (const TrialRecord& r : serial) {
        EXPECT_EQ(r.kappa, 1000u);
        EXPECT_FALSE(r.d);
        EXPECT_GE(r.wer, 0.0);
        EXPECT_LE(r.wer, 1.0);
        EXPECT_GE(r.ndcg, 0.0);
        EXPECT_LE(r.ndcg, 1.0);
        EXPECT_EQ(r.algo == "quant" || r.algo == "lpstar", true);
    }
    EXPECT_EQ(serial[0].seed, target_seed(17, 0, 0));
    EXPECT_EQ(serial[0].trial, 0u);
    EXPECT_EQ(serial[1].trial, 1u);

    spec.jobs = 3;
    auto parallel = run_experiment(spec);
    ASSERT_EQ(parallel.size(), serial.size());
    for (std::size_t i = 0; i < serial.size(); ++i) {
        TrialRecord a = serial[i];
        a.time_ms = parallel[i].time_ms;
        EXPECT_EQ(a, parallel[i]) << i;
    }
}

TEST(Csv, RoundTrip) {
    TrialRecord a;
    a.algo = "lpstar-col";
    a.nominal_n = 100;
    a.actual_n = 97;
    a.m = 2;
    a.kappa = 1000;
    a.tolerance = 0.001;
    a.trial = 4;
    a.time_ms = 1.0 / 3.0;
    a.structure_size = 1234;
    a.mq_count = 99999;
    a.eq_count = 12;
    a.wer = 0.1 + 0.2;
    a.ndcg = 0.999999999999;
    a.logprob_err = 5e-324;
    a.seed = std::numeric_limits<std::uint64_t>::max();
    TrialRecord b = a;
    b.algo = "quant";
    b.d = 6;
    std::stringstream ss;
    write_csv(ss, {a, b});
    const std::string text = ss.str();
    EXPECT_EQ(text.substr(0, text.find('\n')), kCsvHeader);
    EXPECT_EQ(read_csv(ss), (std::vector<TrialRecord>{a, b}));
}

TEST(Csv, RejectsMalformedInput) {
    std::stringstream bad_header("algo,n\nquant,1\n");
    EXPECT_THROW(read_csv(bad_header), InputError);
    std::stringstream short_row(std::string(kCsvHeader) + "\nquant,1,2\n");
    EXPECT_THROW(read_csv(short_row), InputError);
    std::stringstream empty;
    EXPECT_THROW(read_csv(empty), InputError);
}
