#pragma once

#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "pdfa/teacher.hpp"

namespace pdfa::lpstar {

/// Column of the table: the string body·last with last ∈ Σ ∪ {$}.
struct Suffix {
    Word body;
    Letter last = kTerminal;
    bool operator==(const Suffix&) const = default;
};

/// {$} followed by each symbol of Σ, the columns a hypothesis reads its
/// next-symbol distributions from.
std::vector<Suffix> base_suffixes(const Alphabet& alphabet);

/// RED/BLUE observation table with cells O[p, u·x] = πℓ(p·u·x). Cells are
/// filled as soon as a row or column is added.
class ObservationTable {
public:
    /// RED = {λ}, BLUE = Σ, columns `suffixes` (base_suffixes() by default).
    ObservationTable(Teacher& teacher, double tolerance);
    ObservationTable(Teacher& teacher, double tolerance, std::vector<Suffix> suffixes);

    const Alphabet& alphabet() const { return teacher_.alphabet(); }
    double tolerance() const noexcept { return t_; }
    const std::vector<Word>& red() const noexcept { return red_; }
    const std::vector<Word>& blue() const noexcept { return blue_; }
    const std::vector<Suffix>& suffixes() const noexcept { return suf_; }
    std::size_t num_prefixes() const noexcept { return red_.size() + blue_.size(); }

    bool contains(const Word& p) const { return rows_.count(p) != 0; }
    bool is_red(const Word& p) const;
    /// Cells of p in column order. Throws InputError for unknown prefixes.
    std::span<const double> row(const Word& p) const;

    /// Moves p to RED (from BLUE or from nowhere) and puts each pσ not yet
    /// in the table into BLUE. False if p was already red.
    bool add_red(const Word& p);
    /// False if the column exists.
    bool add_suffix(Suffix s);

    /// L∞ between the rows is at most t.
    bool t_equal(const Word& a, const Word& b) const;
    bool t_equal(std::span<const double> a, std::span<const double> b) const;

    /// First BLUE row that is t-far from every RED row.
    std::optional<Word> check_closed() const;

    struct Inconsistency {
        Word p1, p2;
        Symbol sigma;
        Suffix suffix;
    };
    /// First pair p1 < p2 of t-equal RED rows (table order) and σ, suffix
    /// with |O[p1σ, s] - O[p2σ, s]| > t.
    std::optional<Inconsistency> check_consistent() const;

    /// One line per prefix: label, RED or BLUE, then the cells.
    std::string dump_tsv() const;

private:
    std::vector<double> fill(const Word& p) const;
    double cell(const Word& p, const Suffix& s) const;

    Teacher& teacher_;
    double t_;
    std::vector<Word> red_;
    std::vector<Word> blue_;
    std::vector<Suffix> suf_;
    std::unordered_map<Word, std::vector<double>, WordHash> rows_;
};

}  // namespace pdfa::lpstar
