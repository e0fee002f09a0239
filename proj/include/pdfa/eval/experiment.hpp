#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "pdfa/automaton.hpp"
#include "pdfa/eval/metrics.hpp"

namespace pdfa::eval {

enum class Algo { quant, lpstar, lpstar_col };

std::string_view algo_name(Algo a) noexcept;
/// "quant", "lpstar" or "lpstar-col"; InputError otherwise.
Algo parse_algo(std::string_view name);

struct TrialRecord {
    std::string algo;
    std::size_t nominal_n = 0;
    std::size_t actual_n = 0;
    std::uint32_t m = 0;
    std::uint32_t kappa = 0;
    double tolerance = 0.0;
    std::optional<std::uint32_t> d;
    std::size_t trial = 0;
    double time_ms = 0.0;
    /// Tree nodes for QuaNT, |Pre| x |Suf| for the table learners.
    std::size_t structure_size = 0;
    std::uint64_t mq_count = 0;
    std::uint64_t eq_count = 0;
    double wer = 0.0;
    double ndcg = 0.0;
    double logprob_err = 0.0;
    /// Seed the target was generated from.
    std::uint64_t seed = 0;

    bool operator==(const TrialRecord&) const = default;
};

struct GridPoint {
    std::size_t n = 0;
    std::uint32_t m = 2;
    std::uint32_t kappa = 1000;
    /// Paired with κ as t = 1/κ.
    double tolerance = 1e-3;
    std::optional<std::uint32_t> d;
};

struct ExperimentSpec {
    int experiment = 1;
    bool full = false;
    std::uint64_t seed = 0;
    /// Zero picks the default for the scale (5 and 3 at desk scale, 10 and 10
    /// with `full`).
    std::size_t targets = 0;
    std::size_t runs = 0;
    /// Empty picks the experiment's default set.
    std::vector<Algo> algos;
    std::size_t test_strings = 1000;
    std::size_t max_len = 50;
    /// Trials run on this many threads; 1 keeps timings undisturbed.
    std::size_t jobs = 1;
};

/// Parameter grid of experiment 1..5. InputError for other numbers.
std::vector<GridPoint> grid(int experiment, bool full);
std::vector<Algo> default_algos(int experiment);

/// Seed of target `target_idx` at grid point `point_idx`.
std::uint64_t target_seed(std::uint64_t base, std::size_t point_idx, std::size_t target_idx);

struct LearnOutcome {
    Pdfa hypothesis;
    double time_ms = 0.0;
    std::size_t structure_size = 0;
    /// QuaNT only: leaves of the final tree (1 when no tree was needed).
    std::size_t leaves = 0;
    std::uint64_t mq_count = 0;
    std::uint64_t eq_count = 0;
};

/// Runs one learner against `target` with a fresh caching-free teacher and
/// times the learner call.
LearnOutcome run_learner(Algo algo, const Pdfa& target, std::uint32_t kappa, double tolerance);

/// Rows come out in (point, target, algorithm, run) order whatever `jobs` is.
/// `progress` is called once per finished trial, from the calling thread
/// when jobs == 1.
std::vector<TrialRecord> run_experiment(const ExperimentSpec& spec,
                                        const std::function<void(const TrialRecord&)>& progress = {});

extern const char* const kCsvHeader;
void write_csv(std::ostream& os, const std::vector<TrialRecord>& rows);
/// Inverse of write_csv. InputError on a malformed file.
std::vector<TrialRecord> read_csv(std::istream& is);

}  // namespace pdfa::eval
