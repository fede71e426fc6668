#pragma once

#include <vector>

#include "hardcore/rational.hpp"
#include "hardcore/report.hpp"

namespace hardcore {

// Exact law of Y | Y <= t for Y ~ Bin(n, p).
struct TruncatedBinomial {
    int n = 0;
    Rational p;
    int t = 0;
    std::vector<Rational> probs;  // index k = 0..t, sums to exactly 1
};

// gamma_j = h_t / h_j with h_r = Pr[Y=r] / Pr[Y<=r]; the Bernoulli lift of
// the truncation coupling. gamma is non-decreasing with gamma_t = 1, and
// W_{t-1} + B reproduces the law of W_t exactly.
struct CouplingWitness {
    std::vector<Rational> gamma;   // j = 0..t
    std::vector<Rational> lifted;  // law of W_{t-1} + B, k = 0..t
};

// Requires 0 < p < 1 and 0 <= t <= n.
TruncatedBinomial truncated_binomial(int n, const Rational& p, int t);

Rational truncated_mean(const TruncatedBinomial& d);
Rational truncated_variance(const TruncatedBinomial& d);

// Builds the witness and asserts (exactly) that the lifted law equals the
// law of W_t and that gamma is monotone; throws std::logic_error on any
// violation. Requires 1 <= t <= n.
CouplingWitness coupling_check(int n, const Rational& p, int t);

// Var(Y|Y<=t) >= Var(Y|Y<=t-1) and h_{r+1} <= h_r over every n <= n_max,
// p in the grid, and admissible t; violations carry full witnesses.
VerificationReport variance_monotonicity_sweep(int n_max, const std::vector<Rational>& p_grid);

}  // namespace hardcore
