#include "pdfa/randgen.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace pdfa {

double lambert_w0(double x) {
    constexpr double branch = -1.0 / std::numbers::e;
    if (std::isnan(x)) throw std::domain_error("lambert_w0 of NaN");
    if (x < branch) {
        // -1/e itself is not representable; accept the rounding neighbourhood.
        if (branch - x > 4 * std::numeric_limits<double>::epsilon()) throw std::domain_error("lambert_w0 below -1/e");
        return -1.0;
    }
    if (x == 0.0) return 0.0;
    if (std::isinf(x)) return x;

    double w;
    if (x < -0.25) {
        const double p = std::sqrt(std::max(0.0, 2.0 * (std::numbers::e * x + 1.0)));
        w = -1.0 + p - p * p / 3.0 + 11.0 / 72.0 * p * p * p;
    } else if (x < 3.0) {
        w = std::log1p(x);
    } else {
        const double l1 = std::log(x);
        const double l2 = std::log(l1);
        w = l1 - l2 + l2 / l1;
    }
    if (w <= -1.0) return -1.0;

    for (int iter = 0; iter < 64; ++iter) {
        const double ew = std::exp(w);
        const double f = w * ew - x;
        const double wp1 = w + 1.0;
        double step = f / (ew * wp1 - (w + 2.0) * f / (2.0 * wp1));
        // Halley can jump past the branch point; stay on the principal branch.
        while (w - step <= -1.0) step *= 0.5;
        w -= step;
        if (std::fabs(step) <= 4 * std::numeric_limits<double>::epsilon() * (1.0 + std::fabs(w))) break;
    }
    return w;
}

double rho(std::uint32_t m) {
    if (m < 2) throw InputError("rho needs an alphabet of at least two symbols");
    const double md = m;
    return md + lambert_w0(-md * std::exp(-md));
}

std::size_t sample_size(std::size_t n, std::uint32_t m) {
    if (n < 1) throw InputError("nominal size must be at least 1");
    if (m < 1) throw InputError("alphabet size must be at least 1");
    if (m == 1) return n;
    return static_cast<std::size_t>(std::llround(static_cast<double>(n) * m / rho(m)));
}

Dfa random_dfa(std::size_t num_states, std::uint32_t num_symbols, Rng& rng) {
    if (num_states < 1) throw InputError("a DFA needs at least one state");
    Dfa dfa{num_states, num_symbols, {}};
    dfa.trans.resize(num_states * num_symbols);
    for (auto& t : dfa.trans) t = static_cast<StateId>(rng.uniform_below(num_states));
    return dfa;
}

Dfa accessible_part(const Dfa& dfa) {
    std::vector<StateId> renumber(dfa.num_states, kNoState);
    std::vector<StateId> order;
    // Explicit stack of (state, next symbol to try) mirrors the recursive DFS.
    std::vector<std::pair<StateId, Symbol>> stack;
    renumber[0] = 0;
    order.push_back(0);
    stack.emplace_back(0, 0);
    while (!stack.empty()) {
        auto& [q, s] = stack.back();
        if (s == dfa.num_symbols) {
            stack.pop_back();
            continue;
        }
        const StateId t = dfa.next(q, s++);
        if (renumber[t] != kNoState) continue;
        renumber[t] = static_cast<StateId>(order.size());
        order.push_back(t);
        stack.emplace_back(t, 0);
    }

    Dfa out{order.size(), dfa.num_symbols, {}};
    out.trans.reserve(order.size() * dfa.num_symbols);
    for (StateId q : order) {
        for (Symbol s = 0; s < dfa.num_symbols; ++s) out.trans.push_back(renumber[dfa.next(q, s)]);
    }
    return out;
}

Distribution random_distribution(std::uint32_t m, Rng& rng) {
    std::vector<double> w(m + 1);
    for (double& x : w) x = rng.exponential();
    return Distribution::normalized(std::move(w));
}

Pdfa random_pdfa(const GenConfig& cfg) {
    if (cfg.m < 1) throw InputError("alphabet size must be at least 1");
    if (cfg.d && *cfg.d < 1) throw InputError("number of distributions must be at least 1");
    Rng rng(cfg.seed);
    const Dfa dfa = accessible_part(random_dfa(sample_size(cfg.nominal_n, cfg.m), cfg.m, rng));

    std::vector<Distribution> pool;
    if (cfg.d) {
        for (std::uint32_t i = 0; i < *cfg.d; ++i) pool.push_back(random_distribution(cfg.m, rng));
    }
    std::vector<Distribution> dists;
    dists.reserve(dfa.num_states);
    for (std::size_t q = 0; q < dfa.num_states; ++q) {
        dists.push_back(pool.empty() ? random_distribution(cfg.m, rng) : pool[rng.uniform_below(pool.size())]);
    }
    return Pdfa(Alphabet::numeric(cfg.m), std::move(dists), dfa.trans, 0);
}

}  // namespace pdfa
