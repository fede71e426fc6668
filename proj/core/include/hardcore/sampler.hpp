#pragma once

#include <cstdint>
#include <vector>

#include "hardcore/graph.hpp"
#include "hardcore/rational.hpp"

namespace hardcore {

struct ChainConfig {
    Rational lambda = Rational(1);
    std::int64_t burn_in = 10000;   // steps discarded before sampling
    std::int64_t samples = 100000;  // recorded observations
    std::int64_t thinning = 1;      // steps between observations
    std::uint64_t seed = 1;
    int chains = 1;  // independent chains averaged in seed order
};

struct GlauberEstimate {
    double est_mean = 0;  // estimate of E|I|
    double est_var = 0;   // estimate of Var|I|
    double se_mean = 0;   // batch-means standard error of est_mean
    double se_var = 0;    // batch-means standard error of est_var
    std::int64_t n_samples = 0;

    bool operator==(const GlauberEstimate&) const = default;
};

// Single-site heat-bath dynamics targeting the hard-core measure: pick a
// uniform vertex; an occupied vertex stays with probability
// lambda/(1+lambda), an unoccupied unblocked vertex occupies with the same
// probability. The trajectory is a deterministic function of the seed.
GlauberEstimate glauber_run(const Graph& g, const ChainConfig& cfg);

// Runs the chain asserting that every visited state is an independent set.
bool chain_invariant_check(const Graph& g, const ChainConfig& cfg);

// Visit frequencies of every state over the sampling phase, indexed by the
// state bitmask; for small-graph total-variation tests.
std::vector<double> glauber_state_frequencies(const Graph& g, const ChainConfig& cfg);

}  // namespace hardcore
