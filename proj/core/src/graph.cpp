#include "hardcore/graph.hpp"

#include <bit>
#include <stdexcept>

namespace hardcore {

int popcount(Mask m) { return std::popcount(m); }
int lowest_bit(Mask m) { return std::countr_zero(m); }

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n), 0) {
    if (n < 0 || n > kMaxVertices) throw std::invalid_argument("graph order out of range");
}

Graph::Graph(int n, std::initializer_list<std::pair<int, int>> edges) : Graph(n) {
    for (auto [u, v] : edges) add_edge(u, v);
}

void Graph::add_edge(int u, int v) {
    if (u == v) throw std::invalid_argument("self-loop");
    if (u < 0 || v < 0 || u >= n_ || v >= n_) throw std::out_of_range("vertex out of range");
    adj_[u] |= bit(v);
    adj_[v] |= bit(u);
}

void Graph::remove_edge(int u, int v) {
    adj_[u] &= ~bit(v);
    adj_[v] &= ~bit(u);
}

void Graph::set_neighbors(int v, Mask nbrs) {
    for (int u = 0; u < n_; ++u) {
        adj_[u] &= ~bit(v);
        if ((nbrs >> u) & 1) adj_[u] |= bit(v);
    }
    adj_[v] = nbrs & ~bit(v) & vertices();
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
}

int Graph::edge_count() const {
    int total = 0;
    for (int v = 0; v < n_; ++v) total += degree(v);
    return total / 2;
}

Graph complement(const Graph& g) {
    const int n = g.order();
    Graph c(n);
    for (int v = 0; v < n; ++v) c.set_neighbors(v, g.vertices() & ~g.neighbors(v) & ~bit(v));
    return c;
}

Graph disjoint_union(const Graph& g, const Graph& h) {
    const int n = g.order() + h.order();
    if (n > kMaxVertices) throw std::invalid_argument("combined order exceeds 64");
    Graph out(n);
    for (int v = 0; v < g.order(); ++v) out.set_neighbors(v, g.neighbors(v));
    for (int v = 0; v < h.order(); ++v) out.set_neighbors(g.order() + v, h.neighbors(v) << g.order());
    return out;
}

Graph join(const Graph& g, const Graph& h) {
    Graph out = disjoint_union(g, h);
    for (int u = 0; u < g.order(); ++u)
        for (int v = g.order(); v < out.order(); ++v) out.add_edge(u, v);
    return out;
}

Graph induced_subgraph(const Graph& g, Mask keep) {
    std::vector<int> vertices;
    for (Mask m = keep & g.vertices(); m; m &= m - 1) vertices.push_back(lowest_bit(m));
    Graph out(static_cast<int>(vertices.size()));
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (g.has_edge(vertices[i], vertices[j])) out.add_edge(static_cast<int>(i), static_cast<int>(j));
    return out;
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
    Graph out(g.order());
    for (int u = 0; u < g.order(); ++u)
        for (Mask m = g.neighbors(u); m; m &= m - 1) {
            const int v = lowest_bit(m);
            if (u < v) out.add_edge(perm[u], perm[v]);
        }
    return out;
}

namespace {

int alpha_rec(const Graph& g, Mask sub) {
    int gained = 0;
    for (;;) {
        if (sub == 0) return gained;
        // Isolated vertices always join a maximum independent set; a pendant
        // vertex may be chosen over its sole neighbor.
        Mask isolated = 0;
        int pendant = -1;
        int best_v = -1, best_deg = -1;
        for (Mask m = sub; m; m &= m - 1) {
            const int v = lowest_bit(m);
            const int d = popcount(g.neighbors(v) & sub);
            if (d == 0) {
                isolated |= bit(v);
            } else if (d == 1 && pendant < 0) {
                pendant = v;
            }
            if (d > best_deg) {
                best_deg = d;
                best_v = v;
            }
        }
        if (isolated) {
            gained += popcount(isolated);
            sub &= ~isolated;
            continue;
        }
        if (pendant >= 0) {
            gained += 1;
            sub &= ~(g.neighbors(pendant) & sub) & ~bit(pendant);
            continue;
        }
        // Branch on a maximum-degree vertex: either exclude it or take it.
        const Mask without = sub & ~bit(best_v);
        const Mask take = sub & ~g.closed_neighborhood(best_v);
        return gained + std::max(alpha_rec(g, without), 1 + alpha_rec(g, take));
    }
}

}  // namespace

int independence_number(const Graph& g, Mask sub) {
    return alpha_rec(g, sub & g.vertices());
}

int independence_number(const Graph& g) {
    return independence_number(g, g.vertices());
}

int clique_number(const Graph& g) {
    return independence_number(complement(g));
}

bool is_independent_set(const Graph& g, Mask s) {
    for (Mask m = s; m; m &= m - 1)
        if (g.neighbors(lowest_bit(m)) & s) return false;
    return true;
}

}  // namespace hardcore
