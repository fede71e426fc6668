#include "hardcore/symmetrization.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "hardcore/canonical.hpp"
#include "hardcore/profile.hpp"

namespace hardcore {

Rational clique_occupancy(const Graph& h, const Rational& lambda) {
    if (lambda <= 0) throw std::invalid_argument("fugacity must be positive");
    const IndependenceProfile q = clique_profile(h);
    return lambda * evaluate_derivative(q, lambda) / evaluate(q, lambda);
}

std::pair<Graph, Graph> symmetrize_pair(const Graph& h, int u, int v) {
    if (u < 0 || v < 0 || u >= h.order() || v >= h.order() || u == v)
        throw std::invalid_argument("invalid vertex pair");
    if (h.has_edge(u, v)) throw std::invalid_argument("symmetrization needs a non-adjacent pair");
    Graph h1 = h;
    h1.set_neighbors(u, h.neighbors(v));
    Graph h2 = h;
    h2.set_neighbors(v, h.neighbors(u));
    return {h1, h2};
}

namespace {

Rational clique_poly_at(const Graph& g, const Rational& lambda) {
    return evaluate(clique_profile(g), lambda);
}

}  // namespace

SymmetrizationStep convex_identity_check(const Graph& h, int u, int v, const Rational& lambda) {
    const auto [h1, h2] = symmetrize_pair(h, u, v);

    const Mask uv = bit(u) | bit(v);
    const Rational q_j = clique_poly_at(induced_subgraph(h, h.vertices() & ~uv), lambda);
    const Rational x_u = lambda * clique_poly_at(induced_subgraph(h, h.neighbors(u)), lambda);
    const Rational x_v = lambda * clique_poly_at(induced_subgraph(h, h.neighbors(v)), lambda);

    const Rational q_h = clique_poly_at(h, lambda);
    if (q_h != q_j + x_u + x_v)
        throw std::logic_error("clique polynomial decomposition Q_H = Q_J + X_u + X_v failed");

    const Rational beta_h = clique_occupancy(h, lambda);
    const Rational beta_h1 = clique_occupancy(h1, lambda);
    const Rational beta_h2 = clique_occupancy(h2, lambda);
    const Rational w_u = q_j + Rational(2) * x_u;  // weight of beta(H2)
    const Rational w_v = q_j + Rational(2) * x_v;  // weight of beta(H1)
    if (beta_h * (w_u + w_v) != w_u * beta_h2 + w_v * beta_h1)
        throw std::logic_error("convex combination identity failed");

    SymmetrizationStep step;
    step.before = h;
    step.pair = {u, v};
    step.chosen = beta_h1 >= beta_h2 ? SymmetrizationVariant::H1 : SymmetrizationVariant::H2;
    step.beta_before = beta_h;
    step.beta_after = std::max(beta_h1, beta_h2);
    step.weights = {w_u, w_v};
    return step;
}

std::optional<PartSizes> is_complete_multipartite(const Graph& g) {
    const int n = g.order();
    std::map<Mask, int> class_sizes;  // keyed by closed neighborhood-complement signature
    for (int v = 0; v < n; ++v) ++class_sizes[g.neighbors(v)];
    // Classes must be independent (no member adjacent to another) and
    // distinct classes fully joined; both hold iff every vertex's
    // non-neighborhood is exactly its own class.
    for (int v = 0; v < n; ++v) {
        const Mask non_neighbors = g.vertices() & ~g.neighbors(v);
        for (Mask m = non_neighbors; m; m &= m - 1) {
            const int u = lowest_bit(m);
            if (g.neighbors(u) != g.neighbors(v)) return std::nullopt;
        }
    }
    std::vector<int> parts;
    parts.reserve(class_sizes.size());
    for (const auto& [nbrs, size] : class_sizes) parts.push_back(size);
    return PartSizes::of(std::move(parts));
}

SymmetrizationTrace symmetrize_to_multipartite(const Graph& h, const Rational& lambda) {
    SymmetrizationTrace trace;
    Graph current = h;
    std::set<CanonicalLabel> visited{canonical_label(current)};
    const int cap = 4 * h.order() * h.order() + 4;

    for (int iter = 0; iter <= cap; ++iter) {
        if (auto parts = is_complete_multipartite(current)) {
            trace.final = current;
            trace.final_parts = *parts;
            return trace;
        }
        if (iter == cap) break;

        struct Candidate {
            Graph graph;
            Rational beta;
            int u, v;
            SymmetrizationVariant variant;
            int edges;
            CanonicalLabel label;
        };
        const Rational beta_now = clique_occupancy(current, lambda);
        std::vector<Candidate> best;  // all candidates tied at the max beta
        for (int u = 0; u < current.order(); ++u) {
            for (int v = u + 1; v < current.order(); ++v) {
                if (current.has_edge(u, v) || current.neighbors(u) == current.neighbors(v)) continue;
                auto [h1, h2] = symmetrize_pair(current, u, v);
                for (auto [graph, variant] :
                     {std::pair{std::move(h1), SymmetrizationVariant::H1},
                      std::pair{std::move(h2), SymmetrizationVariant::H2}}) {
                    Rational beta = clique_occupancy(graph, lambda);
                    if (!best.empty() && beta < best.front().beta) continue;
                    Candidate cand{std::move(graph), std::move(beta), u, v, variant, 0, {}};
                    cand.edges = cand.graph.edge_count();
                    cand.label = canonical_label(cand.graph);
                    if (!best.empty() && cand.beta > best.front().beta) best.clear();
                    best.push_back(std::move(cand));
                }
            }
        }
        auto tie_break = [](const Candidate& a, const Candidate& b) {
            return std::tie(a.edges, a.label) < std::tie(b.edges, b.label);
        };
        std::sort(best.begin(), best.end(), tie_break);
        // The paper guarantees max beta >= beta(current); prefer an
        // unvisited graph on beta-plateaus so the walk cannot cycle.
        std::size_t pick = 0;
        if (best.front().beta <= beta_now) {
            while (pick < best.size() && visited.contains(best[pick].label)) ++pick;
            if (pick == best.size()) pick = 0;
        }
        Candidate& chosen = best[pick];
        SymmetrizationStep step;
        step.before = current;
        step.pair = {chosen.u, chosen.v};
        step.chosen = chosen.variant;
        step.beta_before = beta_now;
        step.beta_after = chosen.beta;
        const Mask uv = bit(chosen.u) | bit(chosen.v);
        const Rational q_j =
            clique_poly_at(induced_subgraph(current, current.vertices() & ~uv), lambda);
        const Rational x_u =
            lambda * clique_poly_at(induced_subgraph(current, current.neighbors(chosen.u)), lambda);
        const Rational x_v =
            lambda * clique_poly_at(induced_subgraph(current, current.neighbors(chosen.v)), lambda);
        step.weights = {q_j + Rational(2) * x_u, q_j + Rational(2) * x_v};
        trace.steps.push_back(std::move(step));

        if (chosen.beta < beta_now)
            throw SymmetrizationError("beta decreased; no admissible symmetrization found", trace);
        visited.insert(chosen.label);
        current = std::move(chosen.graph);
    }
    trace.final = current;
    throw SymmetrizationError("iteration cap exceeded before reaching a complete multipartite graph",
                              trace);
}

bool majorizes(const PartSizes& a, const PartSizes& b) {
    std::vector<int> xs = a.parts, ys = b.parts;
    const std::size_t len = std::max(xs.size(), ys.size());
    xs.resize(len, 0);
    ys.resize(len, 0);
    if (a.total() != b.total()) throw std::invalid_argument("majorization needs equal sums");
    long prefix_a = 0, prefix_b = 0;
    for (std::size_t i = 0; i < len; ++i) {
        prefix_a += xs[i];
        prefix_b += ys[i];
        if (prefix_a < prefix_b) return false;
    }
    return true;
}

namespace {

Rational occupancy_term(const Rational& lambda, int x) {
    return Rational(x) * lambda / (Rational(1) + Rational(x) * lambda);
}

}  // namespace

Rational karamata_gap(const Rational& lambda, const PartSizes& a, const PartSizes& b) {
    if (!majorizes(a, b)) throw std::invalid_argument("karamata_gap requires a to majorize b");
    Rational sum_a(0), sum_b(0);
    for (int x : a.parts) sum_a += occupancy_term(lambda, x);
    for (int x : b.parts) sum_b += occupancy_term(lambda, x);
    return sum_b - sum_a;
}

Rational subadditivity_gap(const Rational& lambda, int a, int b) {
    const int c = a + b;
    const Rational num = lambda * lambda * Rational(a) * Rational(b) * (Rational(2) + lambda * Rational(c));
    const Rational den = (Rational(1) + lambda * Rational(a)) * (Rational(1) + lambda * Rational(b)) *
                         (Rational(1) + lambda * Rational(c));
    return num / den;
}

}  // namespace hardcore
