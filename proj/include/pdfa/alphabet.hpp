#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "pdfa/types.hpp"

namespace pdfa {

/// Ordered set of textual symbols. The terminal "$" is implicit and never a
/// member; vector layouts put it at index 0, followed by the symbols in order.
class Alphabet {
public:
    Alphabet() = default;
    explicit Alphabet(std::vector<std::string> symbols);

    /// Symbols "0", "1", ..., "m-1".
    static Alphabet numeric(std::size_t m);

    std::size_t size() const noexcept { return symbols_.size(); }
    /// |Σ| + 1, the length of every Distribution over this alphabet.
    std::size_t layout_size() const noexcept { return symbols_.size() + 1; }

    const std::vector<std::string>& symbols() const noexcept { return symbols_; }
    const std::string& name(Symbol s) const { return symbols_.at(s); }
    /// "$" for kTerminal, otherwise the symbol name.
    std::string letter_name(Letter l) const;

    /// Throws InputError for unknown tokens and for "$".
    Symbol index_of(std::string_view token) const;

    /// Parses a word. Single-character alphabets read one symbol per
    /// character; otherwise tokens are whitespace separated. "" and "λ" give
    /// the empty word.
    Word parse(std::string_view text) const;
    std::string format(const Word& w) const;

    /// Parses a string over Σ optionally ending in "$", as layout letters.
    /// "$" anywhere but the last position is an InputError.
    std::vector<Letter> parse_letters(std::string_view text) const;

    bool operator==(const Alphabet&) const = default;

private:
    bool single_char() const noexcept;
    std::vector<std::string> symbols_;
};

inline constexpr std::string_view kEmptyWordText = "\xCE\xBB";  // λ

}  // namespace pdfa
