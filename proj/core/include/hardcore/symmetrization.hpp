#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hardcore/families.hpp"
#include "hardcore/graph.hpp"
#include "hardcore/rational.hpp"

namespace hardcore {

// Which neighborhood copy was kept: in H1 vertex u adopts N(v), in H2
// vertex v adopts N(u).
enum class SymmetrizationVariant { H1, H2 };

struct SymmetrizationStep {
    Graph before;
    std::pair<int, int> pair;
    SymmetrizationVariant chosen;
    Rational beta_before;
    Rational beta_after;
    // (Q_J + 2 X_u, Q_J + 2 X_v): the convex weights attached to
    // beta(H2) and beta(H1) respectively.
    std::pair<Rational, Rational> weights;
};

struct SymmetrizationTrace {
    std::vector<SymmetrizationStep> steps;
    Graph final;
    PartSizes final_parts;
};

class SymmetrizationError : public std::runtime_error {
public:
    SymmetrizationError(const std::string& what, SymmetrizationTrace trace)
        : std::runtime_error(what), trace(std::move(trace)) {}
    SymmetrizationTrace trace;
};

// beta_bar(H) = lambda Q'_H / Q_H over the clique polynomial; equals
// n * occupancy_fraction(complement(H)).
Rational clique_occupancy(const Graph& h, const Rational& lambda);

// The two symmetrization graphs for a non-adjacent pair: H1 rewires u to
// v's neighborhood, H2 rewires v to u's. Neither increases the clique
// number. Throws when u, v are adjacent or out of range.
std::pair<Graph, Graph> symmetrize_pair(const Graph& h, int u, int v);

// Verifies exactly, at the given fugacity, the clique-polynomial
// decomposition Q_H = Q_J + X_u + X_v (J = H - {u,v}, X_w = lambda *
// Q_{H[N(w)]}) and the convex combination
//   beta(H) = [(Q_J+2X_u) beta(H2) + (Q_J+2X_v) beta(H1)] / (2Q_J+2X_u+2X_v).
// Returns the step taken by the greedy policy (the better variant).
// Throws std::logic_error if either identity fails.
SymmetrizationStep convex_identity_check(const Graph& h, int u, int v, const Rational& lambda);

// Greedy symmetrization: repeatedly applies the best available
// neighborhood copy (max resulting beta over all non-adjacent pairs with
// distinct neighborhoods and both variants; ties broken by fewer edges,
// then smaller canonical label) until the graph is complete multipartite.
// beta is non-decreasing along the trace. Throws SymmetrizationError with
// the partial trace if the 4 n^2 iteration cap is exceeded.
SymmetrizationTrace symmetrize_to_multipartite(const Graph& h, const Rational& lambda);

// Part sizes when non-adjacency classes are independent with identical
// neighborhoods and fully joined to each other; nullopt otherwise.
std::optional<PartSizes> is_complete_multipartite(const Graph& g);

// Prefix-sum dominance of equal-sum sequences (shorter side zero-padded).
// Throws when the sums differ.
bool majorizes(const PartSizes& a, const PartSizes& b);

// sum_i f(b_i) - sum_i f(a_i) for f(x) = x lambda / (1 + x lambda), given
// a majorizes b; non-negative, and zero only when a = b.
Rational karamata_gap(const Rational& lambda, const PartSizes& a, const PartSizes& b);

// Closed form of f(a) + f(b) - f(a+b):
// lambda^2 a b (2 + lambda(a+b)) / ((1+lambda a)(1+lambda b)(1+lambda(a+b))).
Rational subadditivity_gap(const Rational& lambda, int a, int b);

}  // namespace hardcore
