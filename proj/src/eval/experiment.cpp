#include "pdfa/eval/experiment.hpp"

#include <atomic>
#include <charconv>
#include <chrono>
#include <istream>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include "pdfa/lpstar/learner.hpp"
#include "pdfa/quant/learner.hpp"
#include "pdfa/randgen.hpp"

namespace pdfa::eval {

std::string_view algo_name(Algo a) noexcept {
    switch (a) {
        case Algo::quant: return "quant";
        case Algo::lpstar: return "lpstar";
        case Algo::lpstar_col: return "lpstar-col";
    }
    return "?";
}

Algo parse_algo(std::string_view name) {
    for (Algo a : {Algo::quant, Algo::lpstar, Algo::lpstar_col}) {
        if (algo_name(a) == name) return a;
    }
    throw InputError("unknown algorithm \"" + std::string(name) + "\" (quant, lpstar, lpstar-col)");
}

std::vector<GridPoint> grid(int experiment, bool full) {
    std::vector<GridPoint> g;
    auto point = [](std::size_t n, std::uint32_t m, std::uint32_t kappa) {
        return GridPoint{n, m, kappa, 1.0 / kappa, std::nullopt};
    };
    switch (experiment) {
        case 1:
            for (std::size_t n : full ? std::vector<std::size_t>{100, 200, 300} : std::vector<std::size_t>{25, 50, 100})
                g.push_back(point(n, 2, 1000));
            break;
        case 2:
            for (std::uint32_t m : full ? std::vector<std::uint32_t>{2, 4, 8, 16, 32} : std::vector<std::uint32_t>{2, 4, 8})
                g.push_back(point(full ? 100 : 50, m, 1000));
            break;
        case 3:
            for (std::uint32_t k : full ? std::vector<std::uint32_t>{10, 100, 500, 1000, 2000, 3000}
                                        : std::vector<std::uint32_t>{10, 100, 500, 1000})
                g.push_back(point(full ? 300 : 50, 2, k));
            break;
        case 4:
            for (std::size_t n : full ? std::vector<std::size_t>{1000, 2000, 5000} : std::vector<std::size_t>{200, 500, 1000})
                g.push_back(point(n, 2, 1000));
            break;
        case 5: {
            const std::vector<std::uint32_t> ds =
                full ? std::vector<std::uint32_t>{2, 4, 6, 8, 10, 12, 14, 16} : std::vector<std::uint32_t>{2, 4, 8, 16};
            for (std::uint32_t d : ds) {
                g.push_back(point(full ? 300 : 50, 2, 1000));
                g.back().d = d;
            }
            break;
        }
        default: throw InputError("experiment must be 1 to 5");
    }
    return g;
}

std::vector<Algo> default_algos(int experiment) {
    if (experiment == 4) return {Algo::quant};
    return {Algo::quant, Algo::lpstar};
}

std::uint64_t target_seed(std::uint64_t base, std::size_t point_idx, std::size_t target_idx) {
    return Rng::child_seed(Rng::child_seed(base, point_idx), target_idx);
}

LearnOutcome run_learner(Algo algo, const Pdfa& target, std::uint32_t kappa, double tolerance) {
    PdfaTeacher teacher(target);
    LearnOutcome out;
    const auto start = std::chrono::steady_clock::now();
    if (algo == Algo::quant) {
        quant::QuantLearner learner(teacher, kappa);
        out.hypothesis = learner.learn();
        out.time_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        out.structure_size = learner.has_tree() ? learner.tree().node_count() : 0;
        out.leaves = learner.has_tree() ? learner.tree().leaf_count() : 1;
    } else {
        lpstar::LpStarLearner learner(
            teacher, {tolerance, algo == Algo::lpstar ? lpstar::Variant::prefixes : lpstar::Variant::columns});
        out.hypothesis = learner.learn();
        out.time_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        out.structure_size = learner.table().num_prefixes() * learner.table().suffixes().size();
    }
    const QueryStats stats = teacher.stats();
    out.mq_count = stats.mq_calls;
    out.eq_count = stats.eq_calls;
    return out;
}

std::vector<TrialRecord> run_experiment(const ExperimentSpec& spec,
                                        const std::function<void(const TrialRecord&)>& progress) {
    const std::vector<GridPoint> points = grid(spec.experiment, spec.full);
    const std::vector<Algo> algos = spec.algos.empty() ? default_algos(spec.experiment) : spec.algos;
    const std::size_t targets = spec.targets ? spec.targets : (spec.full ? 10 : 5);
    const std::size_t runs = spec.runs ? spec.runs : (spec.full ? 10 : 3);
    if (spec.test_strings < 1) throw InputError("test set needs at least one string");
    if (spec.jobs < 1) throw InputError("jobs must be at least 1");

    struct Target {
        std::size_t point;
        std::uint64_t seed;
        Pdfa pdfa;
        TestSet tests;
    };
    std::vector<Target> instances;
    for (std::size_t p = 0; p < points.size(); ++p) {
        for (std::size_t t = 0; t < targets; ++t) {
            const std::uint64_t seed = target_seed(spec.seed, p, t);
            Pdfa pdfa = random_pdfa({points[p].n, points[p].m, points[p].d, seed});
            Rng test_rng(Rng::child_seed(seed, 1));
            TestSet tests = sample_strings(pdfa, spec.test_strings, spec.max_len, test_rng);
            instances.push_back({p, seed, std::move(pdfa), std::move(tests)});
        }
    }

    struct Task {
        std::size_t instance;
        std::size_t target_idx;
        Algo algo;
        std::size_t run;
    };
    std::vector<Task> tasks;
    for (std::size_t i = 0; i < instances.size(); ++i) {
        for (Algo a : algos) {
            for (std::size_t r = 0; r < runs; ++r) tasks.push_back({i, i % targets, a, r});
        }
    }

    std::vector<TrialRecord> rows(tasks.size());
    std::mutex progress_mutex;
    auto run_task = [&](std::size_t k) {
        const Task& task = tasks[k];
        const Target& inst = instances[task.instance];
        const GridPoint& gp = points[inst.point];
        const LearnOutcome o = run_learner(task.algo, inst.pdfa, gp.kappa, gp.tolerance);
        TrialRecord rec;
        rec.algo = std::string(algo_name(task.algo));
        rec.nominal_n = gp.n;
        rec.actual_n = inst.pdfa.num_states();
        rec.m = gp.m;
        rec.kappa = gp.kappa;
        rec.tolerance = gp.tolerance;
        rec.d = gp.d;
        rec.trial = task.target_idx * runs + task.run;
        rec.time_ms = o.time_ms;
        rec.structure_size = o.structure_size;
        rec.mq_count = o.mq_count;
        rec.eq_count = o.eq_count;
        rec.wer = wer(inst.pdfa, o.hypothesis, inst.tests);
        rec.ndcg = ndcg(inst.pdfa, o.hypothesis, inst.tests);
        rec.logprob_err = logprob_err(inst.pdfa, o.hypothesis, inst.tests);
        rec.seed = inst.seed;
        rows[k] = rec;
        if (progress) {
            std::lock_guard lock(progress_mutex);
            progress(rec);
        }
    };

    if (spec.jobs == 1) {
        for (std::size_t k = 0; k < tasks.size(); ++k) run_task(k);
        return rows;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    {
        std::vector<std::jthread> workers;
        for (std::size_t w = 0; w < spec.jobs; ++w) {
            workers.emplace_back([&] {
                for (std::size_t k; (k = next.fetch_add(1)) < tasks.size();) {
                    try {
                        run_task(k);
                    } catch (...) {
                        std::lock_guard lock(failure_mutex);
                        if (!failure) failure = std::current_exception();
                        next = tasks.size();
                    }
                }
            });
        }
    }
    if (failure) std::rethrow_exception(failure);
    return rows;
}

const char* const kCsvHeader =
    "algo,nominal_n,actual_n,m,kappa,tolerance,d,trial,time_ms,structure_size,mq_count,eq_count,wer,ndcg,"
    "logprob_err,seed";

namespace {

std::string format_double(double v) {
    char buf[32];
    const auto r = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, r.ptr);
}

template <typename T>
T parse_number(const std::string& field, const char* column) {
    T v{};
    const auto r = std::from_chars(field.data(), field.data() + field.size(), v);
    if (r.ec != std::errc{} || r.ptr != field.data() + field.size())
        throw InputError(std::string("bad value \"") + field + "\" in column " + column);
    return v;
}

}  // namespace

void write_csv(std::ostream& os, const std::vector<TrialRecord>& rows) {
    os << kCsvHeader << '\n';
    for (const auto& r : rows) {
        os << r.algo << ',' << r.nominal_n << ',' << r.actual_n << ',' << r.m << ',' << r.kappa << ','
           << format_double(r.tolerance) << ',' << (r.d ? std::to_string(*r.d) : "") << ',' << r.trial << ','
           << format_double(r.time_ms) << ',' << r.structure_size << ',' << r.mq_count << ',' << r.eq_count << ','
           << format_double(r.wer) << ',' << format_double(r.ndcg) << ',' << format_double(r.logprob_err) << ','
           << r.seed << '\n';
    }
}

std::vector<TrialRecord> read_csv(std::istream& is) {
    std::string line;
    if (!std::getline(is, line) || line != kCsvHeader) throw InputError("CSV header does not match");
    std::vector<TrialRecord> rows;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::vector<std::string> f;
        std::stringstream ss(line);
        for (std::string cell; std::getline(ss, cell, ',');) f.push_back(cell);
        if (!line.empty() && line.back() == ',') f.emplace_back();
        if (f.size() != 16) throw InputError("CSV row has " + std::to_string(f.size()) + " fields, expected 16");
        TrialRecord r;
        r.algo = f[0];
        r.nominal_n = parse_number<std::size_t>(f[1], "nominal_n");
        r.actual_n = parse_number<std::size_t>(f[2], "actual_n");
        r.m = parse_number<std::uint32_t>(f[3], "m");
        r.kappa = parse_number<std::uint32_t>(f[4], "kappa");
        r.tolerance = parse_number<double>(f[5], "tolerance");
        if (!f[6].empty()) r.d = parse_number<std::uint32_t>(f[6], "d");
        r.trial = parse_number<std::size_t>(f[7], "trial");
        r.time_ms = parse_number<double>(f[8], "time_ms");
        r.structure_size = parse_number<std::size_t>(f[9], "structure_size");
        r.mq_count = parse_number<std::uint64_t>(f[10], "mq_count");
        r.eq_count = parse_number<std::uint64_t>(f[11], "eq_count");
        r.wer = parse_number<double>(f[12], "wer");
        r.ndcg = parse_number<double>(f[13], "ndcg");
        r.logprob_err = parse_number<double>(f[14], "logprob_err");
        r.seed = parse_number<std::uint64_t>(f[15], "seed");
        rows.push_back(std::move(r));
    }
    return rows;
}

}  // namespace pdfa::eval
