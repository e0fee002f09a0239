#include "pdfa/eval/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace pdfa::eval {

namespace {

void require_same_alphabet(const Pdfa& a, const Pdfa& b) {
    if (!(a.alphabet() == b.alphabet())) throw InputError("target and hypothesis alphabets differ");
}

/// Calls f(target_state, hyp_state) on every prefix of every string.
template <typename F>
std::size_t for_each_position(const Pdfa& target, const Pdfa& hyp, const TestSet& ts, F f) {
    std::size_t positions = 0;
    for (const Word& s : ts.strings) {
        StateId qt = target.initial();
        StateId qh = hyp.initial();
        f(qt, qh);
        for (Symbol x : s) {
            qt = target.next(qt, x);
            qh = hyp.next(qh, x);
            if (qt == kNoState || qh == kNoState) throw InputError("missing transition while scoring");
            f(qt, qh);
        }
        positions += s.size() + 1;
    }
    return positions;
}

}  // namespace

TestSet sample_strings(const Pdfa& target, std::size_t count, std::size_t max_len, Rng& rng) {
    if (count < 1) throw InputError("test set needs at least one string");
    require_valid(target);
    TestSet ts;
    ts.max_len = max_len;
    ts.seed = rng.seed();
    ts.strings.reserve(count);
    ts.truncated.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        Word w;
        StateId q = target.initial();
        bool stopped = false;
        while (w.size() < max_len) {
            const auto p = target.dist(q).values();
            const double u = rng.uniform01();
            double acc = 0.0;
            Letter pick = 0;
            // Rounding can leave the running sum just below u; fall back to
            // the last letter with positive mass.
            for (Letter l = 0; l < p.size(); ++l) {
                if (p[l] <= 0.0) continue;
                pick = l;
                acc += p[l];
                if (u < acc) break;
            }
            if (pick == kTerminal) {
                stopped = true;
                break;
            }
            w.push_back(pick - 1);
            q = target.next(q, pick - 1);
        }
        ts.truncated.push_back(!stopped);
        ts.strings.push_back(std::move(w));
    }
    return ts;
}

double wer(const Pdfa& target, const Pdfa& hyp, const TestSet& ts) {
    require_same_alphabet(target, hyp);
    std::size_t errors = 0;
    const std::size_t positions = for_each_position(target, hyp, ts, [&](StateId qt, StateId qh) {
        if (target.dist(qt).argmax() != hyp.dist(qh).argmax()) ++errors;
    });
    return positions == 0 ? 0.0 : static_cast<double>(errors) / static_cast<double>(positions);
}

double ndcg_at(std::span<const double> target, std::span<const double> hyp) {
    if (target.size() != hyp.size()) throw InputError("ndcg: layouts differ");
    std::vector<std::size_t> by_hyp(hyp.size());
    std::iota(by_hyp.begin(), by_hyp.end(), 0);
    std::stable_sort(by_hyp.begin(), by_hyp.end(), [&](std::size_t a, std::size_t b) { return hyp[a] > hyp[b]; });
    std::vector<double> ideal(target.begin(), target.end());
    std::sort(ideal.begin(), ideal.end(), std::greater<>());

    double dcg = 0.0;
    double idcg = 0.0;
    for (std::size_t r = 0; r < by_hyp.size(); ++r) {
        const double discount = std::log2(static_cast<double>(r) + 2.0);
        dcg += target[by_hyp[r]] / discount;
        idcg += ideal[r] / discount;
    }
    return idcg == 0.0 ? 1.0 : dcg / idcg;
}

double ndcg(const Pdfa& target, const Pdfa& hyp, const TestSet& ts) {
    require_same_alphabet(target, hyp);
    double total = 0.0;
    const std::size_t positions = for_each_position(target, hyp, ts, [&](StateId qt, StateId qh) {
        total += ndcg_at(target.dist(qt).values(), hyp.dist(qh).values());
    });
    return positions == 0 ? 1.0 : total / static_cast<double>(positions);
}

double logprob_err(const Pdfa& target, const Pdfa& hyp, const TestSet& ts) {
    require_same_alphabet(target, hyp);
    if (ts.strings.empty()) return 0.0;
    double total = 0.0;
    for (const Word& s : ts.strings) {
        const double ft = std::max(string_prob(target, s), kLogFloor);
        const double fh = std::max(string_prob(hyp, s), kLogFloor);
        total += std::fabs(std::log(ft) - std::log(fh));
    }
    return total / static_cast<double>(ts.strings.size());
}

}  // namespace pdfa::eval
