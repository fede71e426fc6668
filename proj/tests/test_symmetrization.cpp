#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hardcore/canonical.hpp"
#include "hardcore/enumerate.hpp"
#include "hardcore/families.hpp"
#include "hardcore/model.hpp"
#include "hardcore/symmetrization.hpp"
#include "oracles.hpp"

using namespace hardcore;

namespace {

Graph path(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph cycle(int n) {
    Graph g = path(n);
    g.add_edge(n - 1, 0);
    return g;
}

const std::vector<Rational> kLambdas = parse_rational_list({"1/2", "1", "2"});

}  // namespace

TEST_CASE("clique occupancy values") {
    CHECK(clique_occupancy(path(4), Rational(1)) == make_rational(5, 4));
    for (const Rational& lambda : kLambdas) {
        // Complete multipartite: beta = sum n_i lambda / (1 + n_i lambda).
        const PartSizes parts = PartSizes::of({3, 2, 1});
        Rational expected(0);
        for (int size : parts.parts)
            expected += Rational(size) * lambda / (Rational(1) + Rational(size) * lambda);
        CHECK(clique_occupancy(complete_multipartite(parts), lambda) == expected);
        // One part of size n: Q = 1 + n lambda. All parts singletons: Q = (1+lambda)^n.
        CHECK(clique_occupancy(empty_graph(5), lambda) ==
              Rational(5) * lambda / (Rational(1) + Rational(5) * lambda));
        CHECK(clique_occupancy(complete_graph(5), lambda) ==
              Rational(5) * lambda / (Rational(1) + lambda));
    }
}

TEST_CASE("clique occupancy equals the complement's scaled occupancy fraction") {
    for (int n = 1; n <= 6; ++n)
        for (const Graph& h : enumerate_graphs(n))
            for (const Rational& lambda : kLambdas)
                CHECK(clique_occupancy(h, lambda) ==
                      Rational(n) * occupancy_fraction(complement(h), lambda));
}

TEST_CASE("symmetrize_pair on the 4-path") {
    const auto [h1, h2] = symmetrize_pair(path(4), 0, 2);
    CHECK(isomorphic(h1, cycle(4)));
    CHECK(isomorphic(h2, disjoint_union(path(3), Graph(1))));
    CHECK_THROWS(symmetrize_pair(path(4), 0, 1));  // adjacent
    CHECK_THROWS(symmetrize_pair(path(4), 2, 2));
    CHECK_THROWS(symmetrize_pair(path(4), 0, 4));
}

TEST_CASE("symmetrize_pair with identical neighborhoods is the identity") {
    const Graph c4 = cycle(4);  // vertices 0,2 and 1,3 are twins
    const auto [h1, h2] = symmetrize_pair(c4, 0, 2);
    CHECK(h1 == c4);
    CHECK(h2 == c4);
    // Re-applying a copy is idempotent.
    const auto [p1, p2] = symmetrize_pair(path(4), 0, 2);
    const auto [q1, q2] = symmetrize_pair(p1, 0, 2);
    CHECK(q1 == p1);
}

TEST_CASE("symmetrization never increases the clique number") {
    for (int n = 2; n <= 6; ++n)
        for (const Graph& h : enumerate_graphs(n))
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v) {
                    if (h.has_edge(u, v)) continue;
                    const auto [h1, h2] = symmetrize_pair(h, u, v);
                    CHECK(clique_number(h1) <= clique_number(h));
                    CHECK(clique_number(h2) <= clique_number(h));
                }
}

TEST_CASE("convex identity on the worked 4-path example") {
    const auto step = convex_identity_check(path(4), 0, 2, Rational(1));
    CHECK(step.beta_before == make_rational(5, 4));
    CHECK(step.beta_after == make_rational(4, 3));
    CHECK(step.chosen == SymmetrizationVariant::H1);
    CHECK(step.weights.first == 7);   // Q_J + 2 X_u = 3 + 4
    CHECK(step.weights.second == 9);  // Q_J + 2 X_v = 3 + 6
    const auto [h1, h2] = symmetrize_pair(path(4), 0, 2);
    CHECK(clique_occupancy(h2, Rational(1)) == make_rational(8, 7));
    CHECK(clique_occupancy(h1, Rational(1)) == make_rational(4, 3));
}

TEST_CASE("convex identity degenerates gracefully for twin vertices") {
    const auto step = convex_identity_check(cycle(4), 0, 2, Rational(1));
    CHECK(step.beta_before == step.beta_after);
}

TEST_CASE("convex identity and the sandwich hold for all pairs with n <= 6") {
    for (int n = 2; n <= 6; ++n)
        for (const Graph& h : enumerate_graphs(n))
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v) {
                    if (h.has_edge(u, v)) continue;
                    for (const Rational& lambda : kLambdas) {
                        const auto step = convex_identity_check(h, u, v, lambda);  // throws on violation
                        const auto [h1, h2] = symmetrize_pair(h, u, v);
                        const Rational beta_1 = clique_occupancy(h1, lambda);
                        const Rational beta_2 = clique_occupancy(h2, lambda);
                        CHECK(step.beta_before >= std::min(beta_1, beta_2));
                        CHECK(step.beta_before <= std::max(beta_1, beta_2));
                        CHECK(step.beta_after == std::max(beta_1, beta_2));
                    }
                }
}

TEST_CASE("greedy symmetrization of the 4-path") {
    const auto trace = symmetrize_to_multipartite(path(4), Rational(1));
    REQUIRE(trace.steps.size() == 1);
    CHECK(trace.steps[0].beta_before == make_rational(5, 4));
    CHECK(trace.steps[0].beta_after == make_rational(4, 3));
    CHECK(isomorphic(trace.final, cycle(4)));
    CHECK(trace.final_parts.parts == std::vector<int>{2, 2});
}

TEST_CASE("complete multipartite inputs need no steps") {
    for (const auto& parts : {std::vector<int>{3, 2}, std::vector<int>{1, 1, 1}, std::vector<int>{4}}) {
        const auto trace = symmetrize_to_multipartite(complete_multipartite(PartSizes::of(parts)), Rational(1));
        CHECK(trace.steps.empty());
        CHECK(trace.final_parts.parts == PartSizes::of(parts).parts);
    }
}

TEST_CASE("greedy symmetrization terminates monotonically for every graph with n <= 6") {
    for (int n = 1; n <= 6; ++n)
        for (const Graph& h : enumerate_graphs(n)) {
            const auto trace = symmetrize_to_multipartite(h, Rational(1));
            CHECK(is_complete_multipartite(trace.final).has_value());
            const int omega = clique_number(h);
            CHECK(clique_number(trace.final) <= omega);
            Rational prev = clique_occupancy(h, Rational(1));
            for (const auto& step : trace.steps) {
                CHECK(step.beta_before == prev);
                CHECK(step.beta_after >= step.beta_before);
                prev = step.beta_after;
            }
            CHECK(clique_occupancy(trace.final, Rational(1)) >= clique_occupancy(h, Rational(1)));
        }
}

TEST_CASE("complete multipartite detection") {
    CHECK(is_complete_multipartite(cycle(4)).value().parts == std::vector<int>{2, 2});
    CHECK(!is_complete_multipartite(path(4)).has_value());
    CHECK(is_complete_multipartite(complete_graph(5)).value().parts ==
          std::vector<int>{1, 1, 1, 1, 1});
    CHECK(is_complete_multipartite(empty_graph(4)).value().parts == std::vector<int>{4});
    Graph paw(4, {{0, 1}, {1, 2}, {2, 0}, {0, 3}});
    CHECK(!is_complete_multipartite(paw).has_value());
}

TEST_CASE("majorization") {
    CHECK(majorizes(PartSizes::of({3, 1}), PartSizes::of({2, 2})));
    CHECK(!majorizes(PartSizes::of({2, 2}), PartSizes::of({3, 1})));
    CHECK(majorizes(PartSizes::of({2, 2}), PartSizes::of({2, 2})));
    CHECK(majorizes(PartSizes::of({3, 1}), PartSizes::of({2, 1, 1})));  // zero padding
    CHECK_THROWS(majorizes(PartSizes::of({3}), PartSizes::of({2, 2})));
}

TEST_CASE("karamata gap") {
    CHECK(karamata_gap(Rational(1), PartSizes::of({3, 1}), PartSizes::of({2, 2})) ==
          make_rational(1, 12));
    CHECK(karamata_gap(Rational(2), PartSizes::of({4, 2}), PartSizes::of({4, 2})) == 0);
    CHECK_THROWS(karamata_gap(Rational(1), PartSizes::of({2, 2}), PartSizes::of({3, 1})));

    // Merging two parts always majorizes the split pair; the gap is strictly
    // positive and matches the closed-form subadditivity defect.
    oracle::Rng rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        const int a = 1 + rng.below(6), b = 1 + rng.below(6);
        const Rational lambda = rng.rational(8);
        const Rational gap =
            karamata_gap(lambda, PartSizes::of({a + b}), PartSizes::of({a, b}));
        CHECK(gap > 0);
        CHECK(gap == subadditivity_gap(lambda, a, b));
    }
}

TEST_CASE("subadditivity gap closed form") {
    // f(1) + f(1) - f(2) at lambda = 1 is 1/2 + 1/2 - 2/3.
    CHECK(subadditivity_gap(Rational(1), 1, 1) == make_rational(1, 3));
    const auto f = [](const Rational& lambda, int x) -> Rational {
        return Rational(x) * lambda / (Rational(1) + Rational(x) * lambda);
    };
    for (int a = 1; a <= 5; ++a)
        for (int b = 1; b <= 5; ++b)
            for (const Rational& lambda : kLambdas) {
                CHECK(subadditivity_gap(lambda, a, b) ==
                      f(lambda, a) + f(lambda, b) - f(lambda, a + b));
                CHECK(subadditivity_gap(lambda, a, b) > 0);
            }
}

TEST_CASE("splitting a part never decreases the multipartite clique occupancy") {
    for (const Rational& lambda : kLambdas)
        for (int n1 : {1, 2, 3})
            for (int c = 2; c <= 5; ++c)
                for (int a = 1; a < c; ++a) {
                    const Rational merged =
                        clique_occupancy(complete_multipartite(PartSizes::of({n1, c})), lambda);
                    const Rational split = clique_occupancy(
                        complete_multipartite(PartSizes::of({n1, a, c - a})), lambda);
                    CHECK(split >= merged);
                }
}

TEST_CASE("the Turan graph maximizes clique occupancy over its clique-number class") {
    for (int n = 1; n <= 6; ++n)
        for (const Graph& h : enumerate_graphs(n)) {
            const int omega = clique_number(h);
            for (const Rational& lambda : kLambdas)
                CHECK(clique_occupancy(h, lambda) <= clique_occupancy(turan(n, omega), lambda));
        }
}

TEST_CASE("the Turan endpoint bound also holds at n = 7") {
    for (const Graph& h : enumerate_graphs(7)) {
        const int omega = clique_number(h);
        for (const Rational& lambda : kLambdas)
            CHECK(clique_occupancy(h, lambda) <= clique_occupancy(turan(7, omega), lambda));
    }
}
