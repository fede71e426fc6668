#pragma once

#include <shared_mutex>
#include <unordered_map>
#include <vector>

#include "hardcore/canonical.hpp"
#include "hardcore/graph.hpp"
#include "hardcore/rational.hpp"

namespace hardcore {

// Coefficient vector (i_0, ..., i_alpha) of the independence polynomial:
// i_k counts the independent k-sets. i_0 = 1, i_1 = n, the top index is
// alpha(G), and k*i_k <= (n-k+1)*i_{k-1} throughout.
struct IndependenceProfile {
    int n = 0;
    std::vector<BigInt> coeffs;

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }

    // Abstract profile, not necessarily graph-realizable; requires i_0 = 1
    // and derives n from i_1.
    static IndependenceProfile from_coeffs(std::vector<BigInt> coeffs);

    bool operator==(const IndependenceProfile&) const = default;
};

// Grow-only concurrent map from canonical label to profile. Entries are
// never replaced, so concurrent insert-if-absent is race-free by value.
class ProfileCache {
public:
    const IndependenceProfile* find(const CanonicalLabel& key) const;
    const IndependenceProfile& insert(const CanonicalLabel& key, IndependenceProfile value);
    std::size_t size() const;

private:
    mutable std::shared_mutex mutex_;
    std::unordered_map<CanonicalLabel, IndependenceProfile, CanonicalLabelHash> map_;
};

// Process-wide cache shared by default across all profile computations.
ProfileCache& shared_profile_cache();

// Deletion/contraction recursion on a maximum-degree vertex, components
// handled by convolution, memoized on canonical labels of subgraphs.
IndependenceProfile independence_profile(const Graph& g, ProfileCache& cache);
IndependenceProfile independence_profile(const Graph& g);

// Plain deletion/contraction with no memo and no component splitting;
// exists so the optimized path can be checked against it.
IndependenceProfile independence_profile_unmemoized(const Graph& g);

// Clique polynomial coefficients = independence profile of the complement.
IndependenceProfile clique_profile(const Graph& g, ProfileCache& cache);
IndependenceProfile clique_profile(const Graph& g);

// Exact Horner evaluation of sum_k i_k lambda^k.
Rational evaluate(const IndependenceProfile& p, const Rational& lambda);
// Exact evaluation of the derivative sum_k k i_k lambda^(k-1).
Rational evaluate_derivative(const IndependenceProfile& p, const Rational& lambda);

}  // namespace hardcore
