#pragma once

#include <vector>

#include "hardcore/rational.hpp"

namespace hardcore {

// Exact moments of finite distributions given as parallel value/probability
// vectors. No normalization is implied; callers pass proper distributions.
Rational expectation(const std::vector<Rational>& values, const std::vector<Rational>& probs);
Rational variance(const std::vector<Rational>& values, const std::vector<Rational>& probs);

// Cov(X, g(X)) from the definition E(Xg) - E(X)E(g).
Rational covariance(const std::vector<Rational>& values, const std::vector<Rational>& g_values,
                    const std::vector<Rational>& probs);

// The pairwise form: 2 Cov(X, g(X)) = sum_{i,j} (x_i-x_j)(g_i-g_j) p_i p_j.
Rational covariance_double_sum(const std::vector<Rational>& values,
                               const std::vector<Rational>& g_values,
                               const std::vector<Rational>& probs);

}  // namespace hardcore
