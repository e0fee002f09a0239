#include "pdfa/alphabet.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_set>

namespace pdfa {

Alphabet::Alphabet(std::vector<std::string> symbols) : symbols_(std::move(symbols)) {
    std::unordered_set<std::string> seen;
    for (const auto& s : symbols_) {
        if (s.empty()) throw InputError("alphabet symbol must be non-empty");
        if (s == "$") throw InputError("\"$\" is reserved for the terminal symbol");
        if (std::any_of(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }))
            throw InputError("alphabet symbol '" + s + "' contains whitespace");
        if (!seen.insert(s).second) throw InputError("duplicate alphabet symbol '" + s + "'");
    }
}

Alphabet Alphabet::numeric(std::size_t m) {
    std::vector<std::string> names;
    names.reserve(m);
    for (std::size_t i = 0; i < m; ++i) names.push_back(std::to_string(i));
    return Alphabet(std::move(names));
}

std::string Alphabet::letter_name(Letter l) const {
    if (l == kTerminal) return "$";
    return name(l - 1);
}

Symbol Alphabet::index_of(std::string_view token) const {
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
        if (symbols_[i] == token) return static_cast<Symbol>(i);
    }
    throw InputError("unknown symbol '" + std::string(token) + "'");
}

bool Alphabet::single_char() const noexcept {
    return std::all_of(symbols_.begin(), symbols_.end(),
                       [](const std::string& s) { return s.size() == 1; });
}

Word Alphabet::parse(std::string_view text) const {
    Word w;
    if (text.empty() || text == kEmptyWordText) return w;
    if (single_char()) {
        for (char c : text) {
            if (std::isspace(static_cast<unsigned char>(c))) continue;
            w.push_back(index_of(std::string_view(&c, 1)));
        }
        return w;
    }
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        std::size_t j = i;
        while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
        if (j > i) w.push_back(index_of(text.substr(i, j - i)));
        i = j;
    }
    return w;
}

std::vector<Letter> Alphabet::parse_letters(std::string_view text) const {
    bool terminal = false;
    std::size_t end = text.find_last_not_of(" \t\n\r");
    if (end != std::string_view::npos && text[end] == '$') {
        terminal = true;
        text = text.substr(0, end);
    }
    if (text.find('$') != std::string_view::npos)
        throw InputError("\"$\" may only appear as the last symbol");
    std::vector<Letter> out;
    for (Symbol s : parse(text)) out.push_back(letter_of(s));
    if (terminal) out.push_back(kTerminal);
    return out;
}

std::string Alphabet::format(const Word& w) const {
    if (w.empty()) return std::string(kEmptyWordText);
    std::string out;
    const bool compact = single_char();
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (!compact && i > 0) out += ' ';
        out += name(w[i]);
    }
    return out;
}

}  // namespace pdfa
