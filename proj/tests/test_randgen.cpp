#include <gtest/gtest.h>

#include <boost/math/special_functions/lambert_w.hpp>
#include <cmath>
#include <limits>
#include <numbers>
#include <set>

#include "pdfa/randgen.hpp"

using namespace pdfa;

TEST(LambertW, KnownValues) {
    EXPECT_EQ(lambert_w0(0.0), 0.0);
    EXPECT_NEAR(lambert_w0(std::numbers::e), 1.0, 1e-15);
    EXPECT_NEAR(lambert_w0(1.0), 0.5671432904097838, 1e-15);
    EXPECT_NEAR(lambert_w0(-1.0 / std::numbers::e), -1.0, 1e-7);
    EXPECT_NEAR(lambert_w0(2.0 * std::exp(2.0)), 2.0, 1e-14);
    EXPECT_THROW(lambert_w0(-0.5), std::domain_error);
    EXPECT_THROW(lambert_w0(std::nan("")), std::domain_error);
}

TEST(LambertW, MatchesBoost) {
    Rng rng(1);
    const double lo = -1.0 / std::numbers::e;
    for (int i = 0; i < 20000; ++i) {
        double x;
        switch (i % 4) {
            case 0: x = lo + 1e-6 * rng.uniform01(); break;  // near the branch point
            case 1: x = lo + (0.0 - lo) * rng.uniform01(); break;
            case 2: x = 10.0 * rng.uniform01(); break;
            default: x = std::exp(700.0 * rng.uniform01()); break;
        }
        const double want = boost::math::lambert_w0(x);
        // W is ill-conditioned towards the branch point: a relative input
        // error e moves W by about e·|W|/(1 + W).
        const double eps = std::numeric_limits<double>::epsilon();
        const double tol = i % 4 == 0 ? 1e-9 : 8 * eps * std::max(1.0, std::fabs(want)) * (1.0 + 1.0 / (1.0 + want));
        EXPECT_NEAR(lambert_w0(x), want, tol) << "x = " << x;
    }
}

TEST(LambertW, SatisfiesDefiningEquation) {
    for (double w = -0.99; w < 50.0; w += 0.37) {
        const double x = w * std::exp(w);
        EXPECT_NEAR(lambert_w0(x), w, 1e-12 * std::max(1.0, w)) << w;
    }
}

// ρ is the nonzero root of ρ = m(1 - e^{-ρ}), the expected accessible share
// times m.
TEST(SampleSize, RhoIsTheFixedPoint) {
    for (std::uint32_t m : {2u, 3u, 4u, 8u, 16u, 32u}) {
        const double r = rho(m);
        EXPECT_GT(r, 0.0);
        EXPECT_NEAR(r, m * (1.0 - std::exp(-r)), 1e-12) << m;
    }
    EXPECT_NEAR(rho(2), 1.5936242600400399, 1e-14);
    EXPECT_THROW(rho(1), InputError);
}

TEST(SampleSize, Values) {
    EXPECT_EQ(sample_size(100, 1), 100u);
    EXPECT_EQ(sample_size(25, 2), 31u);
    EXPECT_EQ(sample_size(100, 2), 126u);
    EXPECT_EQ(sample_size(50, 3), 53u);
    EXPECT_EQ(sample_size(300, 8), 300u);
    EXPECT_EQ(sample_size(300, 32), 300u);
}

TEST(Rng, Reproducible) {
    Rng a(42), b(42);
    for (int i = 0; i < 100; ++i) EXPECT_EQ(a.next(), b.next());
    EXPECT_NE(Rng::child_seed(42, 0), Rng::child_seed(42, 1));
    EXPECT_EQ(a.child(3).seed(), Rng::child_seed(42, 3));
    // std::mt19937_64's 10000th output is fixed by the standard.
    Rng d(std::mt19937_64::default_seed);
    for (int i = 0; i < 9999; ++i) d.next();
    EXPECT_EQ(d.next(), 9981545732273789042ULL);
}

TEST(Rng, DrawsStayInRange) {
    Rng r(5);
    double sum = 0.0;
    const int n = 200000;
    for (int i = 0; i < n; ++i) {
        EXPECT_LT(r.uniform_below(7), 7u);
        const double u = r.uniform01();
        EXPECT_GE(u, 0.0);
        EXPECT_LT(u, 1.0);
        sum += r.exponential();
    }
    EXPECT_NEAR(sum / n, 1.0, 0.01);
    EXPECT_EQ(r.uniform_below(1), 0u);
}

TEST(RandomDfa, TargetsAreUniform) {
    Rng rng(9);
    const Dfa d = random_dfa(10, 2000, rng);
    ASSERT_EQ(d.trans.size(), 20000u);
    std::vector<double> count(10, 0.0);
    for (StateId t : d.trans) {
        ASSERT_LT(t, 10u);
        count[t] += 1.0;
    }
    double chi2 = 0.0;
    for (double c : count) chi2 += (c - 2000.0) * (c - 2000.0) / 2000.0;
    EXPECT_LT(chi2, 27.88);  // χ²(9) at p = 0.001
}

TEST(AccessiblePart, DepthFirstPreorder) {
    Dfa d{4, 2, {2, 0,  //
                 1, 1,  //
                 0, 3,  //
                 3, 3}};
    const Dfa a = accessible_part(d);
    EXPECT_EQ(a.num_states, 3u);
    EXPECT_EQ(a.trans, (std::vector<StateId>{1, 0, 0, 2, 2, 2}));
}

TEST(AccessiblePart, DeepChainDoesNotRecurse) {
    const std::size_t n = 200000;
    Dfa d{n, 1, {}};
    for (std::size_t q = 0; q < n; ++q) d.trans.push_back(static_cast<StateId>((q + 1) % n));
    EXPECT_EQ(accessible_part(d).num_states, n);
}

TEST(RandomDistribution, UniformOnTheSimplex) {
    Rng rng(11);
    const std::uint32_t m = 3;
    const int n = 100000;
    std::vector<double> mean(m + 1, 0.0), sq(m + 1, 0.0);
    for (int i = 0; i < n; ++i) {
        const Distribution d = random_distribution(m, rng);
        ASSERT_EQ(d.size(), m + 1);
        EXPECT_FALSE(simplex_violation(d, m + 1));
        for (Letter l = 0; l <= m; ++l) {
            mean[l] += d[l] / n;
            sq[l] += d[l] * d[l] / n;
        }
    }
    // Flat Dirichlet marginals are Beta(1, m).
    const double want_var = m / ((m + 1.0) * (m + 1.0) * (m + 2.0));
    for (Letter l = 0; l <= m; ++l) {
        EXPECT_NEAR(mean[l], 0.25, 0.003);
        EXPECT_NEAR(sq[l] - mean[l] * mean[l], want_var, 0.002);
    }
}

TEST(RandomPdfa, ShapeAndDeterminism) {
    const Pdfa a = random_pdfa({60, 3, std::nullopt, 123});
    EXPECT_EQ(a, random_pdfa({60, 3, std::nullopt, 123}));
    EXPECT_NE(a, random_pdfa({60, 3, std::nullopt, 124}));
    EXPECT_TRUE(is_valid(a));
    EXPECT_EQ(a.alphabet(), Alphabet::numeric(3));
    EXPECT_EQ(a.initial(), 0u);
    // Every state is reachable.
    EXPECT_EQ(bfs_order(a).size(), a.num_states());
}

TEST(RandomPdfa, SharedDistributions) {
    for (std::uint32_t d : {1u, 2u, 5u}) {
        const Pdfa a = random_pdfa({80, 2, d, 7 + d});
        std::set<std::vector<double>> distinct;
        for (const auto& dist : a.dists()) distinct.emplace(dist.values().begin(), dist.values().end());
        EXPECT_LE(distinct.size(), d);
        if (d > 1) {
            EXPECT_GT(distinct.size(), 1u);
        }
    }
}

TEST(RandomPdfa, AccessibleSizeTracksNominal) {
    for (std::uint32_t m : {2u, 4u}) {
        double total = 0.0;
        const int reps = 30;
        for (int i = 0; i < reps; ++i) total += static_cast<double>(random_pdfa({500, m, std::nullopt, 1000u + i}).num_states());
        EXPECT_NEAR(total / reps, 500.0, 500.0 * 0.03) << "m = " << m;
    }
    EXPECT_EQ(random_pdfa({40, 1, std::nullopt, 3}).num_states() <= 40, true);
}
