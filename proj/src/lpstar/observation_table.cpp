#include "pdfa/lpstar/observation_table.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "pdfa/kernels.hpp"

namespace pdfa::lpstar {

std::vector<Suffix> base_suffixes(const Alphabet& alphabet) {
    std::vector<Suffix> out;
    out.push_back({{}, kTerminal});
    for (Symbol s = 0; s < alphabet.size(); ++s) out.push_back({{}, letter_of(s)});
    return out;
}

ObservationTable::ObservationTable(Teacher& teacher, double tolerance)
    : ObservationTable(teacher, tolerance, base_suffixes(teacher.alphabet())) {}

ObservationTable::ObservationTable(Teacher& teacher, double tolerance, std::vector<Suffix> suffixes)
    : teacher_(teacher), t_(tolerance) {
    if (!(tolerance >= 0.0 && tolerance <= 1.0)) throw InputError("tolerance must lie in [0, 1]");
    for (auto& s : suffixes) {
        if (s.last > alphabet().size()) throw InputError("suffix letter out of range");
        if (std::find(suf_.begin(), suf_.end(), s) == suf_.end()) suf_.push_back(std::move(s));
    }
    add_red({});
}

double ObservationTable::cell(const Word& p, const Suffix& s) const {
    return teacher_.last_symbol(concat(p, s.body), s.last);
}

std::vector<double> ObservationTable::fill(const Word& p) const {
    std::vector<double> cells;
    cells.reserve(suf_.size());
    for (const auto& s : suf_) cells.push_back(cell(p, s));
    return cells;
}

bool ObservationTable::is_red(const Word& p) const {
    return std::find(red_.begin(), red_.end(), p) != red_.end();
}

std::span<const double> ObservationTable::row(const Word& p) const {
    auto it = rows_.find(p);
    if (it == rows_.end()) throw InputError("prefix is not in the table");
    return it->second;
}

bool ObservationTable::add_red(const Word& p) {
    if (is_red(p)) return false;
    if (auto it = std::find(blue_.begin(), blue_.end(), p); it != blue_.end()) {
        blue_.erase(it);
    } else {
        rows_.emplace(p, fill(p));
    }
    red_.push_back(p);
    for (Symbol s = 0; s < alphabet().size(); ++s) {
        Word next = append(p, s);
        if (contains(next)) continue;
        rows_.emplace(next, fill(next));
        blue_.push_back(std::move(next));
    }
    return true;
}

bool ObservationTable::add_suffix(Suffix s) {
    if (s.last > alphabet().size()) throw InputError("suffix letter out of range");
    if (std::find(suf_.begin(), suf_.end(), s) != suf_.end()) return false;
    for (auto& [p, cells] : rows_) cells.push_back(cell(p, s));
    suf_.push_back(std::move(s));
    return true;
}

bool ObservationTable::t_equal(std::span<const double> a, std::span<const double> b) const {
    return kernels::within_linf(a, b, t_);
}

bool ObservationTable::t_equal(const Word& a, const Word& b) const { return t_equal(row(a), row(b)); }

std::optional<Word> ObservationTable::check_closed() const {
    for (const auto& b : blue_) {
        const auto rb = row(b);
        const bool covered =
            std::any_of(red_.begin(), red_.end(), [&](const Word& r) { return t_equal(rb, row(r)); });
        if (!covered) return b;
    }
    return std::nullopt;
}

std::optional<ObservationTable::Inconsistency> ObservationTable::check_consistent() const {
    for (std::size_t i = 0; i < red_.size(); ++i) {
        for (std::size_t j = i + 1; j < red_.size(); ++j) {
            if (!t_equal(red_[i], red_[j])) continue;
            for (Symbol s = 0; s < alphabet().size(); ++s) {
                const auto a = row(append(red_[i], s));
                const auto b = row(append(red_[j], s));
                for (std::size_t k = 0; k < suf_.size(); ++k) {
                    if (std::fabs(a[k] - b[k]) > t_) return Inconsistency{red_[i], red_[j], s, suf_[k]};
                }
            }
        }
    }
    return std::nullopt;
}

std::string ObservationTable::dump_tsv() const {
    std::ostringstream os;
    os << "prefix\tkind";
    for (const auto& s : suf_) {
        os << '\t';
        if (!s.body.empty()) os << alphabet().format(s.body);
        os << alphabet().letter_name(s.last);
    }
    os << '\n';
    auto line = [&](const Word& p, const char* kind) {
        os << alphabet().format(p) << '\t' << kind;
        for (double v : row(p)) os << '\t' << v;
        os << '\n';
    };
    for (const auto& p : red_) line(p, "RED");
    for (const auto& p : blue_) line(p, "BLUE");
    return os.str();
}

}  // namespace pdfa::lpstar
