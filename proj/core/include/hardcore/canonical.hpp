#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "hardcore/graph.hpp"

namespace hardcore {

// Isomorphism certificate: order byte followed by the packed upper-triangle
// bits of the canonically relabeled adjacency matrix. Two graphs are
// isomorphic exactly when their labels compare equal.
struct CanonicalLabel {
    std::vector<std::uint8_t> bytes;

    auto operator<=>(const CanonicalLabel&) const = default;
};

struct CanonicalLabelHash {
    std::size_t operator()(const CanonicalLabel& label) const;
};

// Exact canonical form via equitable partition refinement and backtracking
// over individualizations, pruned by automorphisms discovered en route.
CanonicalLabel canonical_label(const Graph& g);

// The relabeling realizing the canonical form: vertex v receives label
// perm[v]. relabel(g, canonical_permutation(g)) has the canonical adjacency.
std::vector<int> canonical_permutation(const Graph& g);

// The canonically relabeled graph itself.
Graph canonical_form(const Graph& g);

bool isomorphic(const Graph& a, const Graph& b);

}  // namespace hardcore
