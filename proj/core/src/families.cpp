#include "hardcore/families.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace hardcore {

PartSizes PartSizes::of(std::vector<int> parts) {
    for (int p : parts)
        if (p <= 0) throw std::invalid_argument("part sizes must be positive");
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    return PartSizes{std::move(parts)};
}

int PartSizes::total() const {
    return std::accumulate(parts.begin(), parts.end(), 0);
}

namespace {

void check_n_alpha(int n, int alpha) {
    if (n < 1 || n > kMaxVertices) throw std::invalid_argument("order out of range");
    if (alpha < 1 || alpha > n) throw std::invalid_argument("alpha must satisfy 1 <= alpha <= n");
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t next = text.find(',', pos);
        if (next == std::string::npos) next = text.size();
        out.push_back(std::stoi(text.substr(pos, next - pos)));
        pos = next + 1;
    }
    return out;
}

}  // namespace

FamilySpec FamilySpec::parse(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("family spec needs 'kind:params'");
    const std::string kind = text.substr(0, colon);
    std::vector<int> args;
    try {
        args = parse_int_list(text.substr(colon + 1));
    } catch (const std::exception&) {
        throw std::invalid_argument("malformed family parameters: '" + text + "'");
    }
    auto two = [&](FamilyKind k) {
        if (args.size() != 2) throw std::invalid_argument("family '" + kind + "' takes two parameters");
        return FamilySpec{k, args[0], args[1], {}};
    };
    auto one = [&](FamilyKind k) {
        if (args.size() != 1) throw std::invalid_argument("family '" + kind + "' takes one parameter");
        return FamilySpec{k, args[0], 0, {}};
    };
    if (kind == "Z") return two(FamilyKind::CliqueUnion);
    if (kind == "turan") return two(FamilyKind::Turan);
    if (kind == "G1") return two(FamilyKind::CliqueJoinEmpty);
    if (kind == "kdd") return one(FamilyKind::CompleteBipartiteDD);
    if (kind == "kn") return one(FamilyKind::Complete);
    if (kind == "empty") return one(FamilyKind::Empty);
    if (kind == "multi") {
        if (args.empty()) throw std::invalid_argument("family 'multi' needs part sizes");
        FamilySpec spec{FamilyKind::CompleteMultipartite, 0, 0, PartSizes::of(args)};
        spec.n = spec.parts.total();
        return spec;
    }
    throw std::invalid_argument("unknown family kind: '" + kind + "'");
}

PartSizes clique_union_parts(int n, int alpha) {
    check_n_alpha(n, alpha);
    const int m = n / alpha;
    const int s = n % alpha;
    std::vector<int> parts;
    parts.insert(parts.end(), s, m + 1);
    parts.insert(parts.end(), alpha - s, m);
    return PartSizes{std::move(parts)};
}

Graph clique_union(int n, int alpha) {
    const PartSizes parts = clique_union_parts(n, alpha);
    Graph g(n);
    int base = 0;
    for (int size : parts.parts) {
        for (int i = 0; i < size; ++i)
            for (int j = i + 1; j < size; ++j) g.add_edge(base + i, base + j);
        base += size;
    }
    return g;
}

Graph complete_multipartite(const PartSizes& parts) {
    const int n = parts.total();
    if (n > kMaxVertices) throw std::invalid_argument("order out of range");
    Graph g(n);
    int base_u = 0;
    for (std::size_t a = 0; a < parts.parts.size(); ++a) {
        int base_v = base_u + parts.parts[a];
        for (std::size_t b = a + 1; b < parts.parts.size(); ++b) {
            for (int i = 0; i < parts.parts[a]; ++i)
                for (int j = 0; j < parts.parts[b]; ++j) g.add_edge(base_u + i, base_v + j);
            base_v += parts.parts[b];
        }
        base_u += parts.parts[a];
    }
    return g;
}

Graph turan(int n, int omega) {
    return complete_multipartite(clique_union_parts(n, omega));
}

Graph clique_join_empty(int n, int alpha) {
    check_n_alpha(n, alpha);
    if (n == alpha) return empty_graph(n);
    return join(complete_graph(n - alpha), empty_graph(alpha));
}

Graph complete_graph(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

Graph empty_graph(int n) {
    return Graph(n);
}

Graph build(const FamilySpec& spec) {
    switch (spec.kind) {
        case FamilyKind::CliqueUnion: return clique_union(spec.n, spec.alpha);
        case FamilyKind::Turan: return turan(spec.n, spec.alpha);
        case FamilyKind::CompleteMultipartite: return complete_multipartite(spec.parts);
        case FamilyKind::CliqueJoinEmpty: return clique_join_empty(spec.n, spec.alpha);
        case FamilyKind::CompleteBipartiteDD:
            return complete_multipartite(PartSizes::of({spec.n, spec.n}));
        case FamilyKind::Complete: return complete_graph(spec.n);
        case FamilyKind::Empty: return empty_graph(spec.n);
    }
    throw std::logic_error("unreachable family kind");
}

Rational closed_form_E_Z(int n, int alpha, const Rational& lambda) {
    check_n_alpha(n, alpha);
    const int m = n / alpha;
    const int s = n % alpha;
    const int k = s == 0 ? alpha : alpha - s;
    const Rational small = Rational(m) * lambda / (Rational(1) + Rational(m) * lambda);
    const Rational large = Rational(m + 1) * lambda / (Rational(1) + Rational(m + 1) * lambda);
    return (Rational(k) * small + Rational(alpha - k) * large) / Rational(n);
}

Rational closed_form_E_G1(int n, int alpha, const Rational& lambda) {
    check_n_alpha(n, alpha);
    const Rational one_plus = Rational(1) + lambda;
    const Rational numerator =
        Rational(alpha) * lambda * pow_rational(one_plus, alpha - 1) + Rational(n - alpha) * lambda;
    const Rational denominator = pow_rational(one_plus, alpha) + Rational(n - alpha) * lambda;
    return numerator / (Rational(n) * denominator);
}

std::pair<Rational, Rational> closed_form_P_bounds(int n, int alpha, const Rational& lambda) {
    check_n_alpha(n, alpha);
    const int m = n / alpha;
    const int s = n % alpha;
    const int k = s == 0 ? alpha : alpha - s;
    const Rational upper = pow_rational(Rational(1) + Rational(m) * lambda, k) *
                           pow_rational(Rational(1) + Rational(m + 1) * lambda, alpha - k);
    const Rational lower =
        pow_rational(Rational(1) + lambda, alpha) + Rational(n - alpha) * lambda;
    return {upper, lower};
}

Rational closed_form_V_complete(int size, const Rational& lambda) {
    if (size < 1) throw std::invalid_argument("size must be positive");
    const Rational denom = Rational(1) + Rational(size) * lambda;
    return lambda / (denom * denom);
}

}  // namespace hardcore
