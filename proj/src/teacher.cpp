#include "pdfa/teacher.hpp"

namespace pdfa {

PdfaTeacher::PdfaTeacher(Pdfa target, bool cache) : target_(std::move(target)), cache_(cache) {
    require_valid(target_);
}

StateId PdfaTeacher::reach(const Word& s) {
    ++stats_.mq_calls;
    if (cache_) {
        if (auto it = reached_.find(s); it != reached_.end()) return it->second;
    }
    ++stats_.mq_misses;
    const StateId q = tau_star(target_, s);
    if (cache_) reached_.emplace(s, q);
    return q;
}

Distribution PdfaTeacher::next_symbol(const Word& s) { return target_.dist(reach(s)); }

double PdfaTeacher::last_symbol(const Word& prefix, Letter last) {
    if (last > target_.num_symbols()) throw InputError("letter out of range");
    return target_.dist(reach(prefix)).at(last);
}

std::optional<Counterexample> PdfaTeacher::equivalence_quantized(const Pdfa& hyp, std::uint32_t kappa) {
    ++stats_.eq_calls;
    return eq_quantized(target_, hyp, kappa);
}

std::optional<Counterexample> PdfaTeacher::equivalence_tolerance(const Pdfa& hyp, double t) {
    ++stats_.eq_calls;
    return eq_tolerance(target_, hyp, t);
}

Distribution mq_next_symbol(const Pdfa& target, std::span<const Symbol> s) {
    return pi_star(target, s);
}

double mq_last_symbol(const Pdfa& target, std::span<const Letter> letters) {
    return last_symbol_prob(target, target.initial(), letters);
}

}  // namespace pdfa
