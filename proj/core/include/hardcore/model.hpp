#pragma once

#include <utility>
#include <vector>

#include "hardcore/graph.hpp"
#include "hardcore/profile.hpp"
#include "hardcore/rational.hpp"

namespace hardcore {

// Distribution of |I| for I drawn from the hard-core measure:
// Pr[|I| = k] = i_k lambda^k / P(lambda). Entries sum to exactly 1.
struct SizeDistribution {
    std::vector<Rational> probs;

    Rational mean() const;
    Rational second_moment() const;
    Rational variance() const;
};

// Exact decomposition of the size distribution as a mixture of truncated
// binomials: Pr[X = k] = sum_t omega_t Pr[Y = k | Y <= t] with
// Y ~ Bin(n, lambda/(1+lambda)).
struct MixtureDecomposition {
    int n = 0;
    Rational p;                // lambda / (1 + lambda)
    std::vector<Rational> q;   // q_k = i_k / C(n,k), k = 0..n
    std::vector<Rational> c;   // c_t = q_t - q_{t+1}, t = 1..n (c[0] unused)
    std::vector<Rational> w;   // mixture weights omega_t, t = 1..n (w[0] unused)
};

// Enumeration statistics of the extension sets Phi(I) = {v : I + v stays
// independent}, plus the profile-derived extension ratios
// r_k = (k+1) i_{k+1} / i_k.
struct PhiStatistics {
    Rational mean_phi;             // E phi(I)
    Rational mean_x_phi;           // E(|I| phi(I))
    std::vector<Rational> extension_ratio;  // r_0..r_alpha (r_alpha = 0)
};

// (1/n) * lambda P'/P.
Rational occupancy_fraction(const Graph& g, const Rational& lambda);
// (1/n) * Var|I|, from exact moments of the size distribution.
Rational variance_fraction(const Graph& g, const Rational& lambda);
// (1/n) * ln P(lambda); the only float-valued quantity in the library.
double free_energy(const Graph& g, const Rational& lambda);

SizeDistribution size_distribution(const Graph& g, const Rational& lambda);
SizeDistribution size_distribution(const IndependenceProfile& p, const Rational& lambda);

MixtureDecomposition mixture_decomposition(const Graph& g, const Rational& lambda);
MixtureDecomposition mixture_decomposition(const IndependenceProfile& p, const Rational& lambda);
// Evaluates sum_t omega_t Pr[Y = k | Y <= t] for k = 0..n.
SizeDistribution reconstruct(const MixtureDecomposition& mix);

// Direct enumeration of all independent sets; requires n <= 20.
PhiStatistics phi_statistics(const Graph& g, const Rational& lambda);

// (Pr[v in I | v uncovered], Pr[v in I]); v is uncovered when no neighbor
// lies in I. Enumerates independent sets; requires n <= 20.
std::pair<Rational, Rational> uncovered_probability_check(const Graph& g, int v, const Rational& lambda);

// Occupancy fraction of an abstract coefficient vector, graph-realizable
// or not; requires i_0 = 1.
Rational profile_occupancy(const IndependenceProfile& p, const Rational& lambda);

}  // namespace hardcore
