#pragma once

#include "pdfa/automaton.hpp"
#include "pdfa/quant/classification_tree.hpp"
#include "pdfa/quantize.hpp"

namespace fixtures {

using pdfa::Alphabet;
using pdfa::Distribution;
using pdfa::Pdfa;

/// Over {a}: q0 = (0, 1) goes to q1 = (0.5, 0.5), which loops.
inline Pdfa loop_pdfa(double eps = 0.0) {
    return Pdfa(Alphabet({"a"}), {Distribution{0.0, 1.0}, Distribution{0.5 + eps, 0.5 - eps}}, {1, 1}, 0);
}

/// Over {a, b}. Together with pair_b(): both compute the same string
/// function, yet their states differ in distribution.
inline Pdfa pair_a() {
    return Pdfa(Alphabet({"a", "b"}),
                {Distribution{0.0, 0.1, 0.9}, Distribution{0.0, 0.8, 0.2}, Distribution{0.3, 0.1, 0.6},
                 Distribution{0.0, 0.5, 0.5}},
                {1, 3,  //
                 3, 2,  //
                 1, 3,  //
                 3, 3},
                0);
}

inline Pdfa pair_b() {
    return Pdfa(Alphabet({"a", "b"}),
                {Distribution{0.0, 0.1, 0.9}, Distribution{0.0, 0.8, 0.2}, Distribution{0.3, 0.2, 0.5},
                 Distribution{0.0, 0.5, 0.5}, Distribution{0.0, 0.9, 0.1}},
                {1, 3,  //
                 3, 2,  //
                 4, 3,  //
                 3, 3,  //
                 3, 2},
                0);
}

/// Over {0, 1}; states qλ, q1, q0, q10 in that order.
inline Pdfa binary4() {
    return Pdfa(Alphabet({"0", "1"}),
                {Distribution{0.0, 0.5, 0.5}, Distribution{0.1, 0.6, 0.3}, Distribution{0.1, 0.3, 0.6},
                 Distribution{0.1, 0.3, 0.6}},
                {2, 1,  //
                 3, 1,  //
                 2, 3,  //
                 2, 1},
                0);
}

inline pdfa::QuantVector qv(std::vector<std::int32_t> idx, std::uint32_t kappa) {
    return pdfa::QuantVector(std::move(idx), kappa);
}

/// κ = 10 classification tree of binary4(): the root separates λ, 1 and
/// {0, 10}; an inner node "1" separates 0 from 10.
inline pdfa::quant::ClassificationTree binary4_tree() {
    pdfa::quant::ClassificationTree t(10);
    t.add_leaf(t.root(), qv({0, 5, 5}, 10), {}, Distribution{0.0, 0.5, 0.5});
    t.add_leaf(t.root(), qv({1, 6, 3}, 10), {1}, Distribution{0.1, 0.6, 0.3});
    const auto zero = t.add_leaf(t.root(), qv({1, 3, 6}, 10), {0}, Distribution{0.1, 0.3, 0.6});
    t.split_leaf(zero, {1}, qv({1, 3, 6}, 10), qv({1, 6, 3}, 10), {1, 0}, Distribution{0.1, 0.3, 0.6});
    return t;
}

}  // namespace fixtures
