#include "pdfa/automaton.hpp"

#include <deque>

namespace pdfa {

Pdfa::Pdfa(Alphabet alphabet, std::size_t num_states, StateId initial)
    : alphabet_(std::move(alphabet)),
      dists_(num_states),
      trans_(num_states * alphabet_.size(), kNoState),
      initial_(initial) {}

Pdfa::Pdfa(Alphabet alphabet, std::vector<Distribution> dists, std::vector<StateId> transitions,
           StateId initial)
    : alphabet_(std::move(alphabet)),
      dists_(std::move(dists)),
      trans_(std::move(transitions)),
      initial_(initial) {
    if (trans_.size() != dists_.size() * alphabet_.size())
        throw InputError("transition table size does not match states x symbols");
}

StateId Pdfa::add_state(Distribution d) {
    dists_.push_back(std::move(d));
    trans_.resize(trans_.size() + alphabet_.size(), kNoState);
    return static_cast<StateId>(dists_.size() - 1);
}

namespace {

StateId step(const Pdfa& a, StateId q, Symbol s) {
    if (s >= a.num_symbols()) throw InputError("symbol index " + std::to_string(s) + " out of range");
    const StateId r = a.next(q, s);
    if (r == kNoState || r >= a.num_states())
        throw InputError("missing transition from state " + std::to_string(q) + " on '" +
                         a.alphabet().name(s) + "'");
    return r;
}

void check_state(const Pdfa& a, StateId q) {
    if (q >= a.num_states()) throw InputError("state " + std::to_string(q) + " out of range");
}

}  // namespace

StateId tau_star(const Pdfa& a, StateId q, std::span<const Symbol> s) {
    check_state(a, q);
    for (Symbol sym : s) q = step(a, q, sym);
    return q;
}

const Distribution& pi_star(const Pdfa& a, StateId q, std::span<const Symbol> s) {
    return a.dist(tau_star(a, q, s));
}

double string_prob(const Pdfa& a, std::span<const Symbol> s) {
    StateId q = a.initial();
    check_state(a, q);
    double p = 1.0;
    for (Symbol sym : s) {
        const StateId r = step(a, q, sym);
        p *= a.dist(q).at(letter_of(sym));
        q = r;
    }
    return p * a.dist(q).at(kTerminal);
}

double last_symbol_prob(const Pdfa& a, StateId q, std::span<const Symbol> prefix, Letter last) {
    if (last > a.num_symbols()) throw InputError("letter out of range");
    return pi_star(a, q, prefix).at(last);
}

double last_symbol_prob(const Pdfa& a, StateId q, std::span<const Letter> letters) {
    if (letters.empty()) throw InputError("last-symbol probability of the empty string");
    Word prefix;
    prefix.reserve(letters.size() - 1);
    for (std::size_t i = 0; i + 1 < letters.size(); ++i) {
        if (letters[i] == kTerminal) throw InputError("\"$\" may only end a string");
        prefix.push_back(letters[i] - 1);
    }
    return last_symbol_prob(a, q, prefix, letters.back());
}

std::vector<StateId> bfs_order(const Pdfa& a) {
    std::vector<StateId> order;
    if (a.initial() >= a.num_states()) return order;
    std::vector<char> seen(a.num_states(), 0);
    std::deque<StateId> queue{a.initial()};
    seen[a.initial()] = 1;
    while (!queue.empty()) {
        const StateId q = queue.front();
        queue.pop_front();
        order.push_back(q);
        for (Symbol s = 0; s < a.num_symbols(); ++s) {
            const StateId r = a.next(q, s);
            if (r == kNoState || r >= a.num_states() || seen[r]) continue;
            seen[r] = 1;
            queue.push_back(r);
        }
    }
    return order;
}

std::vector<Violation> validate(const Pdfa& a) {
    std::vector<Violation> out;
    using K = Violation::Kind;
    if (a.num_states() == 0) {
        out.push_back({K::initial, false, "automaton has no states"});
        return out;
    }
    if (a.initial() >= a.num_states())
        out.push_back({K::initial, false, "initial state " + std::to_string(a.initial()) + " out of range"});
    const std::size_t layout = a.alphabet().layout_size();
    for (StateId q = 0; q < a.num_states(); ++q) {
        if (auto why = simplex_violation(a.dist(q), layout))
            out.push_back({K::simplex, false, "state " + std::to_string(q) + ": " + *why});
        for (Symbol s = 0; s < a.num_symbols(); ++s) {
            const StateId r = a.next(q, s);
            if (r == kNoState) {
                out.push_back({K::totality, false,
                               "state " + std::to_string(q) + " has no transition on '" +
                                   a.alphabet().name(s) + "'"});
            } else if (r >= a.num_states()) {
                out.push_back({K::dangling, false,
                               "state " + std::to_string(q) + " on '" + a.alphabet().name(s) +
                                   "' targets missing state " + std::to_string(r)});
            }
        }
    }
    if (a.initial() < a.num_states()) {
        const auto reach = bfs_order(a);
        if (reach.size() < a.num_states()) {
            out.push_back({K::unreachable, true,
                           std::to_string(a.num_states() - reach.size()) + " unreachable state(s)"});
        }
    }
    return out;
}

bool is_valid(const Pdfa& a) {
    for (const auto& v : validate(a)) {
        if (!v.warning) return false;
    }
    return true;
}

void require_valid(const Pdfa& a) {
    std::string msg;
    for (const auto& v : validate(a)) {
        if (v.warning) continue;
        if (!msg.empty()) msg += "; ";
        msg += v.message;
    }
    if (!msg.empty()) throw InputError("invalid PDFA: " + msg);
}

Pdfa single_state(const Alphabet& alphabet, Distribution d) {
    Pdfa a(alphabet, 1, 0);
    a.set_dist(0, std::move(d));
    for (Symbol s = 0; s < alphabet.size(); ++s) a.set_next(0, s, 0);
    return a;
}

}  // namespace pdfa
