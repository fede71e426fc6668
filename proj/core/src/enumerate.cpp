#include "hardcore/enumerate.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <mutex>
#include <stdexcept>
#include <unordered_set>

#include "hardcore/canonical.hpp"
#include "hardcore/graph6.hpp"

namespace hardcore {

namespace {

constexpr int kInternalCap = 7;

std::vector<Graph> sorted_by_label(std::vector<Graph> graphs) {
    std::vector<std::pair<CanonicalLabel, Graph>> keyed;
    keyed.reserve(graphs.size());
    for (auto& g : graphs) keyed.emplace_back(canonical_label(g), std::move(g));
    std::sort(keyed.begin(), keyed.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<Graph> out;
    out.reserve(keyed.size());
    for (auto& [label, g] : keyed) out.push_back(std::move(g));
    return out;
}

// Grows order-(k-1) representatives by one vertex with every possible
// neighborhood, then dedups canonically. Every isomorphism class on k
// vertices contains a graph of this shape, so the sweep is exhaustive.
std::vector<Graph> extend_by_one(const std::vector<Graph>& smaller, int k) {
    std::unordered_set<CanonicalLabel, CanonicalLabelHash> seen;
    std::vector<Graph> reps;
    for (const Graph& base : smaller) {
        for (Mask nbrs = 0; nbrs < (Mask{1} << (k - 1)); ++nbrs) {
            Graph g(k);
            for (int u = 0; u < k - 1; ++u) g.set_neighbors(u, base.neighbors(u));
            g.set_neighbors(k - 1, nbrs);
            if (seen.insert(canonical_label(g)).second) reps.push_back(std::move(g));
        }
    }
    return reps;
}

}  // namespace

const std::vector<Graph>& enumerate_graphs(int n) {
    if (n < 1 || n > kInternalCap)
        throw std::invalid_argument(
            "internal enumeration handles 1 <= n <= 7; ingest a graph6 file for larger orders");
    static std::mutex mutex;
    static std::map<int, std::vector<Graph>> cache;
    std::lock_guard lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
    for (int k = 1; k <= n; ++k) {
        if (cache.contains(k)) continue;
        if (k == 1) {
            cache[1] = {Graph(1)};
        } else {
            cache[k] = sorted_by_label(extend_by_one(cache[k - 1], k));
        }
    }
    return cache[n];
}

std::vector<Graph> enumerate_graphs(int n, const std::function<bool(const Graph&)>& filter) {
    std::vector<Graph> out;
    for (const Graph& g : enumerate_graphs(n))
        if (!filter || filter(g)) out.push_back(g);
    return out;
}

namespace {

void regular_rec(Graph& g, std::vector<int>& deg, int d,
                 std::unordered_set<CanonicalLabel, CanonicalLabelHash>& seen,
                 std::vector<Graph>& out) {
    const int n = g.order();
    int u = -1;
    for (int v = 0; v < n; ++v)
        if (deg[v] < d) {
            u = v;
            break;
        }
    if (u < 0) {
        if (seen.insert(canonical_label(g)).second) out.push_back(g);
        return;
    }
    std::vector<int> candidates;
    for (int w = u + 1; w < n; ++w)
        if (deg[w] < d && !g.has_edge(u, w)) candidates.push_back(w);
    const int need = d - deg[u];
    if (static_cast<int>(candidates.size()) < need) return;

    // Choose the remaining neighbors of u among higher deficient vertices;
    // completing the lowest deficient vertex first visits each labeled
    // graph exactly once.
    std::vector<int> pick;
    auto choose = [&](auto&& self, std::size_t start) -> void {
        if (static_cast<int>(pick.size()) == need) {
            for (int w : pick) {
                g.add_edge(u, w);
                ++deg[u], ++deg[w];
            }
            regular_rec(g, deg, d, seen, out);
            for (int w : pick) {
                g.remove_edge(u, w);
                --deg[u], --deg[w];
            }
            return;
        }
        for (std::size_t i = start; i < candidates.size(); ++i) {
            if (candidates.size() - i < static_cast<std::size_t>(need) - pick.size()) break;
            pick.push_back(candidates[i]);
            self(self, i + 1);
            pick.pop_back();
        }
    };
    choose(choose, 0);
}

}  // namespace

std::vector<Graph> enumerate_regular_graphs(int n, int d) {
    if (n < 1 || n > 10) throw std::invalid_argument("regular enumeration supports 1 <= n <= 10");
    if (d < 0 || d >= n || (n * d) % 2 != 0) return {};
    Graph g(n);
    std::vector<int> deg(n, 0);
    std::unordered_set<CanonicalLabel, CanonicalLabelHash> seen;
    std::vector<Graph> out;
    regular_rec(g, deg, d, seen, out);
    return sorted_by_label(std::move(out));
}

std::vector<Graph> read_graph6_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open graph6 file: " + path);
    std::vector<Graph> out;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        out.push_back(parse_graph6(line));
    }
    return out;
}

}  // namespace hardcore
