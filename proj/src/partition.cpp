#include "pdfa/partition.hpp"

#include <map>

#include "pdfa/quantize.hpp"

namespace pdfa {

namespace {

void require_total(const Pdfa& a) {
    for (StateId t : a.transitions()) {
        if (t == kNoState || t >= a.num_states())
            throw InputError("partition refinement needs a total transition function");
    }
}

Partition from_class_ids(std::vector<std::uint32_t> class_of, std::size_t count) {
    Partition p;
    p.classes.resize(count);
    for (StateId q = 0; q < class_of.size(); ++q) p.classes[class_of[q]].push_back(q);
    p.class_of = std::move(class_of);
    return p;
}

}  // namespace

Partition refine_partition(const Pdfa& a, const std::vector<std::uint32_t>& initial_blocks) {
    require_total(a);
    const std::size_t n = a.num_states();
    const std::size_t m = a.num_symbols();
    if (initial_blocks.size() != n) throw ContractViolation("initial blocks do not cover the states");

    // Renumber so ids follow first appearance.
    std::vector<std::uint32_t> cls(n);
    std::size_t count = 0;
    {
        std::map<std::uint32_t, std::uint32_t> ids;
        for (StateId q = 0; q < n; ++q) {
            auto [it, fresh] = ids.try_emplace(initial_blocks[q], static_cast<std::uint32_t>(ids.size()));
            cls[q] = it->second;
        }
        count = ids.size();
    }

    std::vector<std::uint32_t> sig(m + 1);
    for (;;) {
        std::map<std::vector<std::uint32_t>, std::uint32_t> ids;
        std::vector<std::uint32_t> next(n);
        for (StateId q = 0; q < n; ++q) {
            sig[0] = cls[q];
            for (Symbol s = 0; s < m; ++s) sig[s + 1] = cls[a.next(q, s)];
            auto [it, fresh] = ids.try_emplace(sig, static_cast<std::uint32_t>(ids.size()));
            next[q] = it->second;
        }
        const bool stable = ids.size() == count;
        cls = std::move(next);
        count = ids.size();
        if (stable) break;
    }
    return from_class_ids(std::move(cls), count);
}

Partition compute_partition(const Pdfa& a, PartitionKey key) {
    std::vector<std::uint32_t> blocks(a.num_states());
    if (key.kappa) {
        std::map<std::vector<std::int32_t>, std::uint32_t> ids;
        for (StateId q = 0; q < a.num_states(); ++q) {
            auto qv = quantize(a.dist(q), *key.kappa);
            blocks[q] = ids.try_emplace(qv.indices(), static_cast<std::uint32_t>(ids.size())).first->second;
        }
    } else {
        std::map<std::vector<double>, std::uint32_t> ids;
        for (StateId q = 0; q < a.num_states(); ++q) {
            const auto v = a.dist(q).values();
            blocks[q] = ids.try_emplace(std::vector<double>(v.begin(), v.end()),
                                        static_cast<std::uint32_t>(ids.size()))
                            .first->second;
        }
    }
    return refine_partition(a, blocks);
}

Pdfa quotient(const Pdfa& a, const Partition& p) {
    require_total(a);
    if (p.class_of.size() != a.num_states()) throw ContractViolation("partition does not cover the states");
    for (std::uint32_t c = 0; c < p.classes.size(); ++c) {
        for (StateId q : p.classes[c]) {
            if (q >= a.num_states() || p.class_of[q] != c)
                throw ContractViolation("partition classes and class map disagree");
        }
    }
    for (std::uint32_t c = 0; c < p.classes.size(); ++c) {
        const auto& members = p.classes[c];
        for (std::size_t i = 1; i < members.size(); ++i) {
            for (Symbol s = 0; s < a.num_symbols(); ++s) {
                if (p.class_of[a.next(members[0], s)] != p.class_of[a.next(members[i], s)])
                    throw ContractViolation("partition is not closed under the transition function");
            }
        }
    }

    // Representative: first member met by a BFS over the original automaton.
    const auto order = bfs_order(a);
    std::vector<StateId> new_id(p.classes.size(), kNoState);
    std::vector<StateId> rep;
    for (StateId q : order) {
        const auto c = p.class_of[q];
        if (new_id[c] != kNoState) continue;
        new_id[c] = static_cast<StateId>(rep.size());
        rep.push_back(q);
    }

    Pdfa out(a.alphabet(), rep.size(), 0);
    for (StateId i = 0; i < rep.size(); ++i) {
        out.set_dist(i, a.dist(rep[i]));
        for (Symbol s = 0; s < a.num_symbols(); ++s)
            out.set_next(i, s, new_id[p.class_of[a.next(rep[i], s)]]);
    }
    return out;
}

bool is_weakly_minimal(const Pdfa& a, PartitionKey key) {
    return compute_partition(a, key).size() == a.num_states();
}

Pdfa disjoint_union(const Pdfa& a, const Pdfa& b) {
    if (!(a.alphabet() == b.alphabet())) throw InputError("alphabets differ");
    Pdfa u(a.alphabet(), a.num_states() + b.num_states(), a.initial());
    const auto off = static_cast<StateId>(a.num_states());
    for (StateId q = 0; q < a.num_states(); ++q) {
        u.set_dist(q, a.dist(q));
        for (Symbol s = 0; s < a.num_symbols(); ++s) u.set_next(q, s, a.next(q, s));
    }
    for (StateId q = 0; q < b.num_states(); ++q) {
        u.set_dist(q + off, b.dist(q));
        for (Symbol s = 0; s < b.num_symbols(); ++s) {
            const StateId t = b.next(q, s);
            u.set_next(q + off, s, t == kNoState ? kNoState : t + off);
        }
    }
    return u;
}

}  // namespace pdfa
