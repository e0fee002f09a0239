#include "pdfa/equivalence.hpp"

#include <numeric>
#include <vector>

#include "pdfa/kernels.hpp"
#include "pdfa/partition.hpp"
#include "pdfa/quantize.hpp"

namespace pdfa {

namespace {

class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n), size_(n, 1) {
        std::iota(parent_.begin(), parent_.end(), 0u);
    }

    std::uint32_t find(std::uint32_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    /// False if already joined.
    bool unite(std::uint32_t a, std::uint32_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (size_[a] < size_[b]) std::swap(a, b);
        parent_[b] = a;
        size_[a] += size_[b];
        return true;
    }

private:
    std::vector<std::uint32_t> parent_;
    std::vector<std::uint32_t> size_;
};

void check_pair(const Pdfa& a, const Pdfa& b) {
    if (!(a.alphabet() == b.alphabet())) throw InputError("target and hypothesis alphabets differ");
    for (const Pdfa* p : {&a, &b}) {
        if (p->initial() >= p->num_states()) throw InputError("initial state out of range");
        for (StateId t : p->transitions()) {
            if (t == kNoState || t >= p->num_states())
                throw InputError("equivalence check needs total transition functions");
        }
    }
}

template <typename SameOutput>
std::optional<Counterexample> hopcroft_karp(const Pdfa& a, const Pdfa& b, SameOutput same) {
    check_pair(a, b);
    struct Visit {
        StateId qa, qb;
        std::uint32_t parent;
        Symbol via;
    };
    constexpr auto kRoot = static_cast<std::uint32_t>(-1);
    const auto off = static_cast<std::uint32_t>(a.num_states());

    auto path_to = [](const std::vector<Visit>& visits, std::uint32_t i) {
        Word w;
        for (; visits[i].parent != kRoot; i = visits[i].parent) w.push_back(visits[i].via);
        return Counterexample{Word(w.rbegin(), w.rend())};
    };

    UnionFind uf(a.num_states() + b.num_states());
    std::vector<Visit> visits;
    visits.push_back({a.initial(), b.initial(), kRoot, 0});
    uf.unite(a.initial(), b.initial() + off);
    if (!same(a.initial(), b.initial())) return Counterexample{};

    for (std::uint32_t head = 0; head < visits.size(); ++head) {
        const Visit cur = visits[head];
        for (Symbol s = 0; s < a.num_symbols(); ++s) {
            const StateId na = a.next(cur.qa, s);
            const StateId nb = b.next(cur.qb, s);
            if (!uf.unite(na, nb + off)) continue;
            visits.push_back({na, nb, head, s});
            if (!same(na, nb)) return path_to(visits, static_cast<std::uint32_t>(visits.size() - 1));
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<Counterexample> eq_quantized(const Pdfa& target, const Pdfa& hyp, std::uint32_t kappa) {
    check_pair(target, hyp);
    std::vector<QuantVector> qa, qb;
    qa.reserve(target.num_states());
    qb.reserve(hyp.num_states());
    for (const auto& d : target.dists()) qa.push_back(quantize(d, kappa));
    for (const auto& d : hyp.dists()) qb.push_back(quantize(d, kappa));
    return hopcroft_karp(target, hyp, [&](StateId p, StateId q) { return qa[p] == qb[q]; });
}

std::optional<Counterexample> eq_tolerance(const Pdfa& target, const Pdfa& hyp, double t) {
    if (!(t >= 0.0 && t <= 1.0)) throw InputError("tolerance must lie in [0, 1]");
    const auto& k = kernels::active();
    return hopcroft_karp(target, hyp, [&](StateId p, StateId q) {
        const auto& dp = target.dist(p);
        const auto& dq = hyp.dist(q);
        if (dp.size() != dq.size()) throw InputError("distribution layouts differ");
        return k.within_linf(dp.values().data(), dq.values().data(), dp.size(), t);
    });
}

bool oracle_bisim(const Pdfa& target, const Pdfa& hyp, std::uint32_t kappa) {
    const Pdfa joint = disjoint_union(target, hyp);
    const Partition p = compute_partition(joint, PartitionKey::quantized(kappa));
    return p.same_class(target.initial(), static_cast<StateId>(target.num_states() + hyp.initial()));
}

}  // namespace pdfa
