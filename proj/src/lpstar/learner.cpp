#include "pdfa/lpstar/learner.hpp"

#include <algorithm>
#include <map>

#include "pdfa/kernels.hpp"

namespace pdfa::lpstar {

namespace {

std::vector<double> mean(const ObservationTable& table, const std::vector<std::size_t>& rows) {
    std::vector<double> c(table.suffixes().size(), 0.0);
    for (std::size_t r : rows) {
        const auto cells = table.row(table.red()[r]);
        for (std::size_t k = 0; k < c.size(); ++k) c[k] += cells[k];
    }
    for (double& v : c) v /= static_cast<double>(rows.size());
    return c;
}

void collect_targets(const ObservationTable& table, const RowPartition& g, TransitionRelation& r) {
    const std::size_t m = table.alphabet().size();
    r.targets.assign(g.size(), std::vector<std::vector<std::uint32_t>>(m));
    for (std::size_t i = 0; i < r.row_target.size(); ++i) {
        for (std::size_t s = 0; s < m; ++s) r.targets[g.cluster_of[i]][s].push_back(r.row_target[i][s]);
    }
    for (auto& per_symbol : r.targets) {
        for (auto& t : per_symbol) {
            std::sort(t.begin(), t.end());
            t.erase(std::unique(t.begin(), t.end()), t.end());
        }
    }
}

}  // namespace

bool TransitionRelation::deterministic() const {
    for (const auto& per_symbol : targets) {
        for (const auto& t : per_symbol) {
            if (t.size() != 1) return false;
        }
    }
    return true;
}

RowPartition greedy_cluster(const ObservationTable& table) {
    RowPartition g;
    const auto& red = table.red();
    for (std::size_t i = 0; i < red.size(); ++i) {
        const auto row = table.row(red[i]);
        std::optional<std::uint32_t> best;
        double best_dist = 0.0;
        for (std::uint32_t c = 0; c < g.size(); ++c) {
            const bool fits = std::all_of(g.members[c].begin(), g.members[c].end(),
                                          [&](std::size_t j) { return table.t_equal(row, table.row(red[j])); });
            if (!fits) continue;
            const double dist = kernels::squared_l2(row, g.centroids[c]);
            if (!best || dist < best_dist) {
                best = c;
                best_dist = dist;
            }
        }
        if (!best) {
            g.members.push_back({i});
            g.centroids.emplace_back(row.begin(), row.end());
            g.cluster_of.push_back(static_cast<std::uint32_t>(g.size() - 1));
            continue;
        }
        auto& members = g.members[*best];
        auto& centroid = g.centroids[*best];
        members.push_back(i);
        const double n = static_cast<double>(members.size());
        for (std::size_t k = 0; k < centroid.size(); ++k) centroid[k] += (row[k] - centroid[k]) / n;
        g.cluster_of.push_back(*best);
    }
    return g;
}

TransitionRelation add_transitions(const ObservationTable& table, const RowPartition& g) {
    const auto& red = table.red();
    const std::size_t m = table.alphabet().size();
    std::unordered_map<Word, std::size_t, WordHash> red_index;
    for (std::size_t i = 0; i < red.size(); ++i) red_index.emplace(red[i], i);

    TransitionRelation r;
    r.row_target.assign(red.size(), std::vector<std::uint32_t>(m));
    for (std::size_t i = 0; i < red.size(); ++i) {
        for (Symbol s = 0; s < m; ++s) {
            const Word next = append(red[i], s);
            if (auto it = red_index.find(next); it != red_index.end()) {
                r.row_target[i][s] = g.cluster_of[it->second];
                continue;
            }
            const auto row = table.row(next);
            std::optional<std::uint32_t> best;
            double best_dist = 0.0;
            for (std::uint32_t c = 0; c < g.size(); ++c) {
                const bool holds = std::any_of(g.members[c].begin(), g.members[c].end(),
                                               [&](std::size_t j) { return table.t_equal(row, table.row(red[j])); });
                if (!holds) continue;
                const double dist = kernels::squared_l2(row, g.centroids[c]);
                if (!best || dist < best_dist) {
                    best = c;
                    best_dist = dist;
                }
            }
            if (!best) throw ContractViolation("BLUE row is t-far from every cluster; the table is not closed");
            r.row_target[i][s] = *best;
        }
    }
    collect_targets(table, g, r);
    return r;
}

void refine_to_deterministic(const ObservationTable& table, RowPartition& g, TransitionRelation& r) {
    while (!r.deterministic()) {
        RowPartition split;
        split.cluster_of.assign(g.cluster_of.size(), 0);
        for (std::uint32_t c = 0; c < g.size(); ++c) {
            std::map<std::vector<std::uint32_t>, std::uint32_t> by_signature;
            for (std::size_t i : g.members[c]) {
                const auto [it, fresh] =
                    by_signature.emplace(r.row_target[i], static_cast<std::uint32_t>(split.members.size()));
                if (fresh) split.members.emplace_back();
                split.members[it->second].push_back(i);
                split.cluster_of[i] = it->second;
            }
        }
        for (const auto& rows : split.members) split.centroids.push_back(mean(table, rows));
        g = std::move(split);
        r = add_transitions(table, g);
    }
}

Pdfa build_hypothesis_lp(const ObservationTable& table, const RowPartition& g, const TransitionRelation& r) {
    if (!r.deterministic()) throw ContractViolation("transition relation is not deterministic");
    const Alphabet& alphabet = table.alphabet();
    const auto& suf = table.suffixes();
    std::vector<std::size_t> column(alphabet.layout_size());
    for (Letter l = 0; l < alphabet.layout_size(); ++l) {
        auto it = std::find(suf.begin(), suf.end(), Suffix{{}, l});
        if (it == suf.end())
            throw InputError("the table needs a column for " + alphabet.letter_name(l) + " to build a hypothesis");
        column[l] = static_cast<std::size_t>(it - suf.begin());
    }

    Pdfa hyp(alphabet, g.size(), g.cluster_of.at(0));
    for (std::uint32_t c = 0; c < g.size(); ++c) {
        std::vector<double> w(alphabet.layout_size());
        for (Letter l = 0; l < w.size(); ++l) w[l] = g.centroids[c][column[l]];
        hyp.set_dist(c, Distribution::normalized(std::move(w)));
        for (Symbol s = 0; s < alphabet.size(); ++s) hyp.set_next(c, s, r.targets[c][s].front());
    }
    return hyp;
}

Pdfa build_hypothesis_lp(const ObservationTable& table) {
    RowPartition g = greedy_cluster(table);
    TransitionRelation r = add_transitions(table, g);
    refine_to_deterministic(table, g, r);
    return build_hypothesis_lp(table, g, r);
}

bool handle_counterexample_lp(ObservationTable& table, const Word& gamma) {
    bool changed = false;
    for (std::size_t len = 0; len <= gamma.size(); ++len) changed |= table.add_red(prefix_of(gamma, len));
    return changed;
}

bool add_counterexample_suffixes(ObservationTable& table, const Word& gamma) {
    bool changed = false;
    const Letter letters = static_cast<Letter>(table.alphabet().layout_size());
    for (std::size_t start = 0; start <= gamma.size(); ++start) {
        const Word u(gamma.begin() + static_cast<std::ptrdiff_t>(start), gamma.end());
        for (Letter x = 0; x < letters; ++x) changed |= table.add_suffix({u, x});
    }
    return changed;
}

void expand(ObservationTable& table, bool consistency, std::size_t max_steps) {
    for (std::size_t step = 0;; ++step) {
        if (step == max_steps) throw ContractViolation("observation table did not stabilize");
        if (auto b = table.check_closed()) {
            table.add_red(*b);
            continue;
        }
        if (!consistency) return;
        auto w = table.check_consistent();
        if (!w) return;
        Word body{w->sigma};
        body.insert(body.end(), w->suffix.body.begin(), w->suffix.body.end());
        table.add_suffix({std::move(body), w->suffix.last});
    }
}

LpStarLearner::LpStarLearner(Teacher& teacher, LpOptions options)
    : teacher_(teacher), options_(options), table_(teacher, options.tolerance) {}

Pdfa LpStarLearner::learn() {
    const bool by_prefix = options_.variant == Variant::prefixes;
    for (;;) {
        if (rounds_ == options_.max_rounds) throw ContractViolation("L_p* exceeded its round limit");
        expand(table_, by_prefix);
        partition_ = greedy_cluster(table_);
        TransitionRelation r = add_transitions(table_, partition_);
        refine_to_deterministic(table_, partition_, r);
        Pdfa hyp = build_hypothesis_lp(table_, partition_, r);
        if (on_hypothesis) on_hypothesis(hyp, table_);
        auto cex = teacher_.equivalence_tolerance(hyp, options_.tolerance);
        ++rounds_;
        if (!cex) return hyp;
        const bool changed = by_prefix ? handle_counterexample_lp(table_, cex->gamma)
                                       : add_counterexample_suffixes(table_, cex->gamma);
        if (changed) continue;
        // Tolerance drift: the table already holds γ the variant's way, so the
        // other kind of evidence is the only thing left to add.
        ++fallbacks_;
        const bool other = by_prefix ? add_counterexample_suffixes(table_, cex->gamma)
                                     : handle_counterexample_lp(table_, cex->gamma);
        if (!other) throw ContractViolation("counterexample adds nothing to the observation table");
    }
}

Pdfa learn_lpstar(Teacher& teacher, double tolerance) {
    return LpStarLearner(teacher, {tolerance, Variant::prefixes}).learn();
}

Pdfa learn_lpstar_col(Teacher& teacher, double tolerance) {
    return LpStarLearner(teacher, {tolerance, Variant::columns}).learn();
}

}  // namespace pdfa::lpstar
