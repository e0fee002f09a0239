#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>

#include "pdfa/automaton.hpp"
#include "pdfa/equivalence.hpp"

namespace pdfa {

struct QueryStats {
    /// Membership queries received, before any cache lookup.
    std::uint64_t mq_calls = 0;
    /// Membership queries that had to consult the target.
    std::uint64_t mq_misses = 0;
    std::uint64_t eq_calls = 0;
};

/// Minimally adequate teacher. One learner uses an instance at a time; it may
/// be handed between threads between calls.
class Teacher {
public:
    virtual ~Teacher() = default;

    virtual const Alphabet& alphabet() const = 0;

    /// π*(s): next-symbol distribution after s.
    virtual Distribution next_symbol(const Word& s) = 0;
    /// πℓ_{q_in}(s·last).
    virtual double last_symbol(const Word& prefix, Letter last) = 0;

    virtual std::optional<Counterexample> equivalence_quantized(const Pdfa& hyp, std::uint32_t kappa) = 0;
    virtual std::optional<Counterexample> equivalence_tolerance(const Pdfa& hyp, double t) = 0;

    virtual QueryStats stats() const = 0;
};

/// Teacher backed by a known target automaton.
class PdfaTeacher final : public Teacher {
public:
    /// `cache` memoizes the state reached by each queried prefix.
    explicit PdfaTeacher(Pdfa target, bool cache = false);

    const Alphabet& alphabet() const override { return target_.alphabet(); }
    Distribution next_symbol(const Word& s) override;
    double last_symbol(const Word& prefix, Letter last) override;
    std::optional<Counterexample> equivalence_quantized(const Pdfa& hyp, std::uint32_t kappa) override;
    std::optional<Counterexample> equivalence_tolerance(const Pdfa& hyp, double t) override;
    QueryStats stats() const override { return stats_; }

    const Pdfa& target() const noexcept { return target_; }

private:
    StateId reach(const Word& s);

    Pdfa target_;
    bool cache_;
    std::unordered_map<Word, StateId, WordHash> reached_;
    QueryStats stats_;
};

/// MQ_QuaNT(s) = π*(s) on a target automaton.
Distribution mq_next_symbol(const Pdfa& target, std::span<const Symbol> s);
/// MQ_Lp*(s'σ) = πℓ_{q_in}(s'σ). The letters must be non-empty.
double mq_last_symbol(const Pdfa& target, std::span<const Letter> letters);

}  // namespace pdfa
