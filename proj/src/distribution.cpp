#include "pdfa/distribution.hpp"

#include <cmath>
#include <sstream>

#include "pdfa/kernels.hpp"

namespace pdfa {

Distribution::Distribution(std::vector<double> probs) : probs_(std::move(probs)) {
    for (double& p : probs_) {
        if (p < 0.0 && p >= -kProbabilitySlack) p = 0.0;
        if (p > 1.0 && p <= 1.0 + kProbabilitySlack) p = 1.0;
    }
}

Distribution Distribution::checked(std::vector<double> probs) {
    Distribution d(std::move(probs));
    if (auto why = simplex_violation(d, d.size())) throw InputError(*why);
    return d;
}

Distribution Distribution::normalized(std::vector<double> weights) {
    double sum = 0.0;
    for (double w : weights) {
        if (!(w >= 0.0)) throw InputError("cannot normalize a negative or NaN weight");
        sum += w;
    }
    if (!(sum > 0.0)) throw InputError("cannot normalize a vector with zero mass");
    for (double& w : weights) w /= sum;
    return Distribution(std::move(weights));
}

Letter Distribution::argmax() const noexcept {
    Letter best = 0;
    for (Letter l = 1; l < probs_.size(); ++l) {
        if (probs_[l] > probs_[best]) best = l;
    }
    return best;
}

std::optional<std::string> simplex_violation(const Distribution& d, std::size_t expected_size) {
    if (d.size() != expected_size) {
        return "distribution has " + std::to_string(d.size()) + " entries, expected " +
               std::to_string(expected_size);
    }
    if (d.size() == 0) return "distribution is empty";
    double sum = 0.0;
    for (double p : d.values()) {
        if (!std::isfinite(p) || p < 0.0 || p > 1.0) {
            std::ostringstream os;
            os << "probability " << p << " outside [0, 1]";
            return os.str();
        }
        sum += p;
    }
    if (std::fabs(sum - 1.0) > kSimplexSumTolerance) {
        std::ostringstream os;
        os.precision(17);
        os << "probabilities sum to " << sum << ", not 1";
        return os.str();
    }
    return std::nullopt;
}

double linf_distance(const Distribution& a, const Distribution& b) {
    if (a.size() != b.size()) throw InputError("distribution layouts differ");
    return kernels::linf(a.values(), b.values());
}

std::string to_string(const Distribution& d) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (i > 0) os << ", ";
        os << d[static_cast<Letter>(i)];
    }
    os << ')';
    return os.str();
}

}  // namespace pdfa
