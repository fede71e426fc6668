#include "hardcore/profile.hpp"

#include <mutex>
#include <stdexcept>

namespace hardcore {

IndependenceProfile IndependenceProfile::from_coeffs(std::vector<BigInt> coeffs) {
    if (coeffs.empty() || coeffs[0] != 1)
        throw std::invalid_argument("profile must start with i_0 = 1");
    IndependenceProfile p;
    p.n = coeffs.size() > 1 ? static_cast<int>(coeffs[1].get_si()) : 0;
    p.coeffs = std::move(coeffs);
    while (p.coeffs.size() > 1 && p.coeffs.back() == 0) p.coeffs.pop_back();
    return p;
}

const IndependenceProfile* ProfileCache::find(const CanonicalLabel& key) const {
    std::shared_lock lock(mutex_);
    auto it = map_.find(key);
    return it == map_.end() ? nullptr : &it->second;
}

const IndependenceProfile& ProfileCache::insert(const CanonicalLabel& key, IndependenceProfile value) {
    std::unique_lock lock(mutex_);
    return map_.try_emplace(key, std::move(value)).first->second;
}

std::size_t ProfileCache::size() const {
    std::shared_lock lock(mutex_);
    return map_.size();
}

ProfileCache& shared_profile_cache() {
    static ProfileCache cache;
    return cache;
}

namespace {

// i_k(G) = i_k(G - v) + i_{k-1}(G - N[v])
std::vector<BigInt> add_shifted(std::vector<BigInt> without, const std::vector<BigInt>& contracted) {
    if (without.size() < contracted.size() + 1) without.resize(contracted.size() + 1, 0);
    for (std::size_t k = 0; k < contracted.size(); ++k) without[k + 1] += contracted[k];
    return without;
}

std::vector<BigInt> convolve(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
    std::vector<BigInt> out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

int max_degree_vertex(const Graph& g, Mask sub) {
    int best = -1, best_deg = -1;
    for (Mask m = sub; m; m &= m - 1) {
        const int v = lowest_bit(m);
        const int d = popcount(g.neighbors(v) & sub);
        if (d > best_deg) {
            best_deg = d;
            best = v;
        }
    }
    return best;
}

Mask component_of(const Graph& g, Mask sub, int start) {
    Mask comp = bit(start);
    Mask frontier = comp;
    while (frontier) {
        Mask next = 0;
        for (Mask m = frontier; m; m &= m - 1) next |= g.neighbors(lowest_bit(m)) & sub;
        frontier = next & ~comp;
        comp |= frontier;
    }
    return comp;
}

std::vector<BigInt> coeffs_of_mask(const Graph& g, Mask sub, ProfileCache& cache);

std::vector<BigInt> coeffs_connected(const Graph& g, Mask sub, ProfileCache& cache) {
    const int size = popcount(sub);
    if (size == 1) return {BigInt(1), BigInt(1)};
    const Graph h = induced_subgraph(g, sub);
    const CanonicalLabel key = canonical_label(h);
    if (const IndependenceProfile* hit = cache.find(key)) return hit->coeffs;
    const int v = max_degree_vertex(g, sub);
    auto coeffs = add_shifted(coeffs_of_mask(g, sub & ~bit(v), cache),
                              coeffs_of_mask(g, sub & ~g.closed_neighborhood(v), cache));
    IndependenceProfile p;
    p.n = size;
    p.coeffs = coeffs;
    cache.insert(key, std::move(p));
    return coeffs;
}

std::vector<BigInt> coeffs_of_mask(const Graph& g, Mask sub, ProfileCache& cache) {
    if (sub == 0) return {BigInt(1)};
    std::vector<BigInt> result{BigInt(1)};
    Mask rest = sub;
    while (rest) {
        const Mask comp = component_of(g, rest, lowest_bit(rest));
        rest &= ~comp;
        result = convolve(result, coeffs_connected(g, comp, cache));
    }
    return result;
}

}  // namespace

IndependenceProfile independence_profile(const Graph& g, ProfileCache& cache) {
    IndependenceProfile p;
    p.n = g.order();
    p.coeffs = coeffs_of_mask(g, g.vertices(), cache);
    return p;
}

IndependenceProfile independence_profile(const Graph& g) {
    return independence_profile(g, shared_profile_cache());
}

namespace {

std::vector<BigInt> plain_rec(const Graph& g, Mask sub) {
    if (sub == 0) return {BigInt(1)};
    const int v = max_degree_vertex(g, sub);
    return add_shifted(plain_rec(g, sub & ~bit(v)), plain_rec(g, sub & ~g.closed_neighborhood(v)));
}

}  // namespace

IndependenceProfile independence_profile_unmemoized(const Graph& g) {
    IndependenceProfile p;
    p.n = g.order();
    p.coeffs = plain_rec(g, g.vertices());
    return p;
}

IndependenceProfile clique_profile(const Graph& g, ProfileCache& cache) {
    return independence_profile(complement(g), cache);
}

IndependenceProfile clique_profile(const Graph& g) {
    return clique_profile(g, shared_profile_cache());
}

Rational evaluate(const IndependenceProfile& p, const Rational& lambda) {
    Rational acc(0);
    for (auto it = p.coeffs.rbegin(); it != p.coeffs.rend(); ++it) acc = acc * lambda + Rational(*it);
    return acc;
}

Rational evaluate_derivative(const IndependenceProfile& p, const Rational& lambda) {
    Rational acc(0);
    for (int k = p.degree(); k >= 1; --k) acc = acc * lambda + Rational(p.coeffs[k] * k);
    return acc;
}

}  // namespace hardcore
