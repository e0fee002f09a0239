#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace pdfa {

/// Index of a non-terminal symbol in an Alphabet (0 .. m-1).
using Symbol = std::uint32_t;

/// Coordinate in a next-symbol distribution: 0 is the terminal "$",
/// symbol s lives at s + 1.
using Letter = std::uint32_t;

using StateId = std::uint32_t;

inline constexpr Letter kTerminal = 0;
inline constexpr StateId kNoState = static_cast<StateId>(-1);

constexpr Letter letter_of(Symbol s) noexcept { return s + 1; }

using Word = std::vector<Symbol>;

struct WordHash {
    std::size_t operator()(const Word& w) const noexcept {
        // FNV-1a over the symbol indices
        std::uint64_t h = 0xcbf29ce484222325ULL;
        for (Symbol s : w) {
            h ^= s;
            h *= 0x100000001b3ULL;
        }
        h ^= w.size();
        return static_cast<std::size_t>(h);
    }
};

inline Word concat(const Word& a, const Word& b) {
    Word out;
    out.reserve(a.size() + b.size());
    out.insert(out.end(), a.begin(), a.end());
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

inline Word append(Word w, Symbol s) {
    w.push_back(s);
    return w;
}

inline Word prefix_of(const Word& w, std::size_t len) {
    return Word(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(len));
}

/// Bad user input: unknown symbols, malformed files, out-of-range parameters.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A documented precondition between library components was broken.
class ContractViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace pdfa
