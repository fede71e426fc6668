#pragma once

#include <cstdint>
#include <initializer_list>
#include <utility>
#include <vector>

namespace hardcore {

// Vertex subsets of a graph are single machine words.
using Mask = std::uint64_t;

constexpr int kMaxVertices = 64;

inline Mask bit(int v) { return Mask{1} << v; }
inline Mask low_bits(int n) { return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1; }
int popcount(Mask m);
// Index of the lowest set bit; m must be nonzero.
int lowest_bit(Mask m);

// Undirected simple graph on up to 64 vertices, stored as per-vertex
// neighbor bitsets. Symmetric, irreflexive, bits >= n always zero.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    Graph(int n, std::initializer_list<std::pair<int, int>> edges);

    int order() const { return n_; }
    Mask vertices() const { return low_bits(n_); }

    bool has_edge(int u, int v) const { return (adj_[u] >> v) & 1; }
    void add_edge(int u, int v);
    void remove_edge(int u, int v);

    Mask neighbors(int v) const { return adj_[v]; }
    Mask closed_neighborhood(int v) const { return adj_[v] | bit(v); }
    // Replaces v's neighborhood wholesale; nbrs must not contain v.
    void set_neighbors(int v, Mask nbrs);

    int degree(int v) const { return popcount(adj_[v]); }
    int max_degree() const;
    int edge_count() const;

    bool operator==(const Graph&) const = default;

private:
    int n_ = 0;
    std::vector<Mask> adj_;
};

Graph complement(const Graph& g);
// Disjoint union; vertices of g keep their labels, h's are shifted by g.order().
Graph disjoint_union(const Graph& g, const Graph& h);
// Disjoint union plus all cross edges.
Graph join(const Graph& g, const Graph& h);

// Subgraph induced by the vertex set `keep`; vertices are relabeled to
// 0..popcount(keep)-1 preserving order.
Graph induced_subgraph(const Graph& g, Mask keep);

// Applies the relabeling perm (new label of vertex v is perm[v]).
Graph relabel(const Graph& g, const std::vector<int>& perm);

// Independence number by branch and bound with isolated/pendant reductions.
int independence_number(const Graph& g);
// Same, restricted to the induced subgraph on `sub`.
int independence_number(const Graph& g, Mask sub);

// Clique number, via the complement's independence number.
int clique_number(const Graph& g);

// True if `s` induces no edge.
bool is_independent_set(const Graph& g, Mask s);

// Calls fn(mask) for every independent set of g, the empty set included.
// Intended for n small enough that the set count is manageable.
template <typename Fn>
void for_each_independent_set(const Graph& g, Fn&& fn) {
    // Pair (current set, candidates still allowed to join it); recursion
    // visits each independent set exactly once.
    struct Rec {
        const Graph& g;
        Fn& fn;
        void walk(Mask current, Mask allowed) {
            fn(current);
            while (allowed) {
                const int v = lowest_bit(allowed);
                allowed &= allowed - 1;
                walk(current | bit(v), allowed & ~g.neighbors(v));
            }
        }
    };
    Rec rec{g, fn};
    rec.walk(0, g.vertices());
}

}  // namespace hardcore
