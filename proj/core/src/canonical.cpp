#include "hardcore/canonical.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace hardcore {

std::size_t CanonicalLabelHash::operator()(const CanonicalLabel& label) const {
    // FNV-1a
    std::size_t h = 14695981039346656037ull;
    for (std::uint8_t b : label.bytes) {
        h ^= b;
        h *= 1099511628211ull;
    }
    return h;
}

namespace {

using Partition = std::vector<std::vector<int>>;

// Splits cells by neighbor counts against every cell until stable. The
// procedure depends only on the partition structure and adjacency, so it
// commutes with relabeling.
void refine(const Graph& g, Partition& p) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t si = 0; si < p.size() && !changed; ++si) {
            Mask splitter = 0;
            for (int v : p[si]) splitter |= bit(v);
            for (std::size_t ci = 0; ci < p.size() && !changed; ++ci) {
                if (p[ci].size() <= 1) continue;
                std::map<int, std::vector<int>> groups;
                for (int v : p[ci]) groups[popcount(g.neighbors(v) & splitter)].push_back(v);
                if (groups.size() <= 1) continue;
                Partition next;
                next.reserve(p.size() + groups.size() - 1);
                for (std::size_t i = 0; i < p.size(); ++i) {
                    if (i == ci) {
                        for (auto& [key, cell] : groups) next.push_back(std::move(cell));
                    } else {
                        next.push_back(std::move(p[i]));
                    }
                }
                p = std::move(next);
                changed = true;
            }
        }
    }
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void merge(int a, int b) { parent[find(a)] = find(b); }
};

class Canonicalizer {
public:
    explicit Canonicalizer(const Graph& g) : g_(g), n_(g.order()) {}

    void run() {
        Partition root{{}};
        root[0].resize(n_);
        std::iota(root[0].begin(), root[0].end(), 0);
        if (n_ == 0) root.clear();
        std::vector<int> prefix;
        search(std::move(root), prefix);
    }

    std::vector<std::uint8_t> best_bits() const { return best_; }
    // position -> vertex ordering of the best leaf
    const std::vector<int>& best_order() const { return best_order_; }

private:
    void search(Partition p, std::vector<int>& prefix) {
        refine(g_, p);
        std::size_t target = p.size();
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (p[i].size() <= 1) continue;
            if (target == p.size() || p[i].size() < p[target].size()) target = i;
        }
        if (target == p.size()) {
            leaf(p);
            return;
        }
        const std::vector<int> cell = p[target];
        UnionFind uf(n_);
        std::size_t gens_seen = 0;
        std::vector<int> tried;
        for (int v : cell) {
            for (; gens_seen < generators_.size(); ++gens_seen) {
                const auto& gamma = generators_[gens_seen];
                bool fixes = true;
                for (int u : prefix)
                    if (gamma[u] != u) {
                        fixes = false;
                        break;
                    }
                if (fixes)
                    for (int u = 0; u < n_; ++u) uf.merge(u, gamma[u]);
            }
            bool redundant = false;
            for (int w : tried)
                if (uf.find(w) == uf.find(v)) {
                    redundant = true;
                    break;
                }
            if (redundant) continue;
            tried.push_back(v);

            Partition child;
            child.reserve(p.size() + 1);
            for (std::size_t i = 0; i < p.size(); ++i) {
                if (i == target) {
                    child.push_back({v});
                    std::vector<int> rest;
                    for (int w : p[i])
                        if (w != v) rest.push_back(w);
                    child.push_back(std::move(rest));
                } else {
                    child.push_back(p[i]);
                }
            }
            prefix.push_back(v);
            search(std::move(child), prefix);
            prefix.pop_back();
        }
    }

    void leaf(const Partition& p) {
        std::vector<int> order(p.size());
        for (std::size_t i = 0; i < p.size(); ++i) order[i] = p[i][0];
        std::vector<std::uint8_t> bits((static_cast<std::size_t>(n_) * (n_ - 1) / 2 + 7) / 8, 0);
        std::size_t idx = 0;
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j, ++idx)
                if (g_.has_edge(order[i], order[j])) bits[idx / 8] |= std::uint8_t(0x80u >> (idx % 8));
        if (best_order_.empty() && n_ > 0) {
            best_ = std::move(bits);
            best_order_ = std::move(order);
            return;
        }
        if (bits == best_) {
            // Same certificate from two orderings: their composition is an
            // automorphism, usable for pruning higher in the tree.
            std::vector<int> gamma(n_);
            for (int i = 0; i < n_; ++i) gamma[order[i]] = best_order_[i];
            generators_.push_back(std::move(gamma));
        } else if (bits < best_) {
            best_ = std::move(bits);
            best_order_ = std::move(order);
        }
    }

    const Graph& g_;
    int n_;
    std::vector<std::uint8_t> best_;
    std::vector<int> best_order_;
    std::vector<std::vector<int>> generators_;
};

}  // namespace

CanonicalLabel canonical_label(const Graph& g) {
    Canonicalizer c(g);
    c.run();
    CanonicalLabel label;
    label.bytes.push_back(static_cast<std::uint8_t>(g.order()));
    auto bits = c.best_bits();
    label.bytes.insert(label.bytes.end(), bits.begin(), bits.end());
    return label;
}

std::vector<int> canonical_permutation(const Graph& g) {
    Canonicalizer c(g);
    c.run();
    std::vector<int> perm(g.order());
    const auto& order = c.best_order();
    for (int pos = 0; pos < g.order(); ++pos) perm[order[pos]] = pos;
    return perm;
}

Graph canonical_form(const Graph& g) {
    return relabel(g, canonical_permutation(g));
}

bool isomorphic(const Graph& a, const Graph& b) {
    return a.order() == b.order() && canonical_label(a) == canonical_label(b);
}

}  // namespace hardcore
