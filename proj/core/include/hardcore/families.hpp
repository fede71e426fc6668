#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hardcore/graph.hpp"
#include "hardcore/rational.hpp"

namespace hardcore {

// Multiset of part/clique sizes, kept sorted non-increasing.
struct PartSizes {
    std::vector<int> parts;

    static PartSizes of(std::vector<int> parts);
    int total() const;
    bool operator==(const PartSizes&) const = default;
};

enum class FamilyKind {
    CliqueUnion,          // Z(n,alpha): alpha near-equal disjoint cliques
    Turan,                // T_omega(n): balanced complete multipartite
    CompleteMultipartite, // explicit part sizes
    CliqueJoinEmpty,      // K_{n-alpha} joined to alpha isolated vertices
    CompleteBipartiteDD,  // K_{d,d}
    Complete,             // K_n
    Empty,                // n K_1
};

struct FamilySpec {
    FamilyKind kind;
    int n = 0;        // order (or d for K_{d,d})
    int alpha = 0;    // second parameter where applicable
    PartSizes parts;  // CompleteMultipartite only

    // Colon syntax: "Z:7,3", "turan:7,3", "G1:7,3", "kdd:4", "kn:5",
    // "empty:5", "multi:3,2,2".
    static FamilySpec parse(const std::string& text);
};

// Constructs the family member with a fixed vertex numbering: parts/cliques
// in non-increasing size order, labels consecutive.
Graph build(const FamilySpec& spec);

// Convenience constructors.
Graph clique_union(int n, int alpha);  // Z(n, alpha)
Graph turan(int n, int omega);         // T_omega(n)
Graph complete_multipartite(const PartSizes& parts);
Graph clique_join_empty(int n, int alpha);  // K_{n-alpha} v alpha K_1
Graph complete_graph(int n);
Graph empty_graph(int n);

// Part sizes of Z(n, alpha) in non-increasing order.
PartSizes clique_union_parts(int n, int alpha);

// Occupancy fraction of Z(n, alpha):
//   (1/n) (k m lambda / (1 + m lambda) + (alpha-k)(m+1) lambda / (1 + (m+1) lambda)),
// m = floor(n/alpha), k = number of parts of size m (k = alpha when alpha | n).
Rational closed_form_E_Z(int n, int alpha, const Rational& lambda);

// Occupancy fraction of K_{n-alpha} v alpha K_1:
//   (1/n) (alpha lambda (1+lambda)^{alpha-1} + (n-alpha) lambda)
//         / ((1+lambda)^alpha + (n-alpha) lambda).
Rational closed_form_E_G1(int n, int alpha, const Rational& lambda);

// (upper, lower) bounds on P_G over the class with given order and
// independence number: P_{Z(n,alpha)} and P_{K_{n-alpha} v alpha K_1}.
std::pair<Rational, Rational> closed_form_P_bounds(int n, int alpha, const Rational& lambda);

// Variance fraction of the complete graph on `size` vertices:
// lambda / (1 + size*lambda)^2. Covers both K_n and K_{Delta+1} bounds.
Rational closed_form_V_complete(int size, const Rational& lambda);

}  // namespace hardcore
