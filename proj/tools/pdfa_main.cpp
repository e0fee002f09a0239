#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "pdfa/equivalence.hpp"
#include "pdfa/eval/experiment.hpp"
#include "pdfa/io.hpp"
#include "pdfa/randgen.hpp"

namespace {

constexpr int kInputError = 1;
constexpr int kContractViolation = 2;

struct GenArgs {
    std::size_t states = 0;
    std::uint32_t alphabet_size = 2;
    std::optional<std::uint32_t> dists;
    std::uint64_t seed = 0;
    std::string out;
};

struct LearnArgs {
    std::string algo = "quant";
    std::optional<std::uint32_t> kappa;
    std::optional<double> tolerance;
    std::string target;
    std::string out;
    std::string dot;
};

struct CompareArgs {
    std::string a, b;
    std::optional<std::uint32_t> kappa;
    std::optional<double> tolerance;
};

struct BenchArgs {
    int experiment = 1;
    bool full = false;
    std::uint64_t seed = 0;
    std::string out;
    std::size_t targets = 0;
    std::size_t runs = 0;
    std::size_t jobs = 1;
    std::vector<std::string> algos;
    bool quiet = false;
};

void write_output(const std::string& path, const std::string& text) {
    if (path == "-") {
        std::cout << text;
        return;
    }
    pdfa::io::write_text_file(path, text);
}

int run_gen(const GenArgs& g) {
    const pdfa::Pdfa a = pdfa::random_pdfa({g.states, g.alphabet_size, g.dists, g.seed});
    write_output(g.out, pdfa::io::to_json(a));
    if (g.out != "-") std::cerr << "wrote " << a.num_states() << " states to " << g.out << '\n';
    return 0;
}

int run_learn(const LearnArgs& l) {
    const auto algo = pdfa::eval::parse_algo(l.algo);
    if (algo == pdfa::eval::Algo::quant && !l.kappa) throw pdfa::InputError("--kappa is required for quant");
    if (algo != pdfa::eval::Algo::quant && !l.tolerance && !l.kappa)
        throw pdfa::InputError("--tolerance (or --kappa, giving t = 1/kappa) is required for " + l.algo);
    const std::uint32_t kappa = l.kappa.value_or(1000);
    const double t = l.tolerance.value_or(1.0 / kappa);

    const pdfa::Pdfa target = pdfa::io::read_json_file(l.target);
    const auto outcome = pdfa::eval::run_learner(algo, target, kappa, t);
    write_output(l.out, pdfa::io::to_json(outcome.hypothesis));
    if (!l.dot.empty()) pdfa::io::write_text_file(l.dot, pdfa::io::to_dot(outcome.hypothesis));
    std::cerr << l.algo << ": " << outcome.hypothesis.num_states() << " states, " << outcome.mq_count << " MQ, "
              << outcome.eq_count << " EQ, structure " << outcome.structure_size << ", " << outcome.time_ms
              << " ms\n";
    return 0;
}

int run_compare(const CompareArgs& c) {
    if (!c.kappa && !c.tolerance) throw pdfa::InputError("compare needs --kappa or --tolerance");
    const pdfa::Pdfa a = pdfa::io::read_json_file(c.a);
    const pdfa::Pdfa b = pdfa::io::read_json_file(c.b);
    const auto cex = c.kappa ? pdfa::eq_quantized(a, b, *c.kappa) : pdfa::eq_tolerance(a, b, *c.tolerance);
    if (!cex) {
        std::cout << "equivalent\n";
        return 0;
    }
    std::cout << "counterexample " << a.alphabet().format(cex->gamma) << '\n';
    std::cout << "  a: " << pdfa::to_string(pdfa::pi_star(a, cex->gamma)) << '\n';
    std::cout << "  b: " << pdfa::to_string(pdfa::pi_star(b, cex->gamma)) << '\n';
    return 0;
}

int run_bench(const BenchArgs& b) {
    pdfa::eval::ExperimentSpec spec;
    spec.experiment = b.experiment;
    spec.full = b.full;
    spec.seed = b.seed;
    spec.targets = b.targets;
    spec.runs = b.runs;
    spec.jobs = b.jobs;
    for (const auto& name : b.algos) spec.algos.push_back(pdfa::eval::parse_algo(name));
    pdfa::eval::grid(spec.experiment, spec.full);  // reject bad experiment numbers before any work

    std::ofstream out(b.out, std::ios::binary);
    if (!out) throw pdfa::InputError("cannot write " + b.out);
    const auto rows = pdfa::eval::run_experiment(spec, [&](const pdfa::eval::TrialRecord& r) {
        if (b.quiet) return;
        std::cerr << r.algo << " n=" << r.nominal_n << " (" << r.actual_n << ") m=" << r.m << " kappa=" << r.kappa
                  << (r.d ? " d=" + std::to_string(*r.d) : std::string()) << " trial " << r.trial << ": "
                  << r.time_ms << " ms, wer " << r.wer << ", ndcg " << r.ndcg << '\n';
    });
    pdfa::eval::write_csv(out, rows);
    if (!out) throw pdfa::InputError("failed writing " + b.out);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Learn probabilistic deterministic finite automata"};
    app.require_subcommand(1);

    GenArgs gen;
    auto* gen_cmd = app.add_subcommand("gen", "Generate a random PDFA as JSON");
    gen_cmd->add_option("--states", gen.states, "Nominal number of reachable states")->required()->check(CLI::PositiveNumber);
    gen_cmd->add_option("--alphabet-size", gen.alphabet_size, "Number of symbols")->check(CLI::PositiveNumber);
    gen_cmd->add_option("--dists", gen.dists, "Share this many distributions among the states")
        ->check(CLI::PositiveNumber);
    gen_cmd->add_option("--seed", gen.seed, "RNG seed");
    gen_cmd->add_option("--out", gen.out, "Output path, - for stdout")->required();

    LearnArgs learn;
    auto* learn_cmd = app.add_subcommand("learn", "Learn a hypothesis from a target PDFA");
    learn_cmd->add_option("--algo", learn.algo, "quant, lpstar or lpstar-col");
    learn_cmd->add_option("--kappa", learn.kappa, "Quantization parameter")->check(CLI::PositiveNumber);
    learn_cmd->add_option("--tolerance", learn.tolerance, "Tolerance for the table learners")
        ->check(CLI::Range(0.0, 1.0));
    learn_cmd->add_option("--target", learn.target, "Target PDFA JSON")->required();
    learn_cmd->add_option("--out", learn.out, "Hypothesis JSON, - for stdout")->required();
    learn_cmd->add_option("--dot", learn.dot, "Also write the hypothesis as Graphviz");

    CompareArgs cmp;
    auto* cmp_cmd = app.add_subcommand("compare", "Check two PDFA for quantized or tolerance equivalence");
    cmp_cmd->add_option("--a", cmp.a, "First PDFA JSON")->required();
    cmp_cmd->add_option("--b", cmp.b, "Second PDFA JSON")->required();
    auto* kappa_opt = cmp_cmd->add_option("--kappa", cmp.kappa, "Quantization parameter")->check(CLI::PositiveNumber);
    auto* tol_opt = cmp_cmd->add_option("--tolerance", cmp.tolerance, "Tolerance")->check(CLI::Range(0.0, 1.0));
    kappa_opt->excludes(tol_opt);

    BenchArgs bench;
    auto* bench_cmd = app.add_subcommand("bench", "Run one of the experiments and write a CSV");
    bench_cmd->add_option("--experiment", bench.experiment, "Experiment number")->required()->check(CLI::Range(1, 5));
    bench_cmd->add_flag("--full", bench.full, "Use the full-size grid");
    bench_cmd->add_option("--seed", bench.seed, "Base RNG seed");
    bench_cmd->add_option("--out", bench.out, "CSV path")->required();
    bench_cmd->add_option("--targets", bench.targets, "Targets per grid point");
    bench_cmd->add_option("--runs", bench.runs, "Runs per target and algorithm");
    bench_cmd->add_option("--jobs", bench.jobs, "Worker threads (1 runs serially)")->check(CLI::PositiveNumber);
    bench_cmd->add_option("--algos", bench.algos, "Algorithms to run");
    bench_cmd->add_flag("--quiet", bench.quiet, "No per-trial progress");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInputError;
    }

    try {
        if (*gen_cmd) return run_gen(gen);
        if (*learn_cmd) return run_learn(learn);
        if (*cmp_cmd) return run_compare(cmp);
        if (*bench_cmd) return run_bench(bench);
    } catch (const pdfa::InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const pdfa::ContractViolation& e) {
        std::cerr << "contract violation: " << e.what() << '\n';
        return kContractViolation;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kContractViolation;
    }
    return kInputError;
}
