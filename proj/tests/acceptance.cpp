// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Each criterion pins its scope, tolerance and runtime budget.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "hardcore/binomial.hpp"
#include "hardcore/canonical.hpp"
#include "hardcore/enumerate.hpp"
#include "hardcore/families.hpp"
#include "hardcore/graph6.hpp"
#include "hardcore/model.hpp"
#include "hardcore/profile.hpp"
#include "hardcore/sampler.hpp"
#include "hardcore/symmetrization.hpp"
#include "hardcore/verifier.hpp"
#include "oracles.hpp"

using namespace hardcore;

namespace {

struct Criterion {
    std::string name;
    double budget_seconds;
    std::function<bool(std::string&)> run;
};

const std::vector<Rational> kGrid = parse_rational_list({"1/3", "1/2", "1", "2", "5"});
const std::vector<Rational> kSymmetrizationGrid = parse_rational_list({"1/2", "1", "2"});

LambdaGrid default_grid() {
    LambdaGrid grid;
    grid.values = kGrid;
    return grid;
}

bool note_present(const VerificationReport& report, const std::string& note) {
    for (const auto& s : report.notes)
        if (s == note) return true;
    return false;
}

Graph path_graph(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

bool criterion1_profile_oracle(std::string& detail) {
    const std::size_t expected[] = {0, 1, 2, 4, 11, 34, 156};
    std::size_t classes = 0;
    for (int n = 1; n <= 6; ++n) {
        const auto& graphs = enumerate_graphs(n);
        if (graphs.size() != expected[n]) {
            detail = "class count mismatch at n=" + std::to_string(n);
            return false;
        }
        for (const Graph& g : graphs) {
            ++classes;
            if (independence_profile(g).coeffs != oracle::brute_profile(g)) {
                detail = "profile mismatch at " + emit_graph6(g);
                return false;
            }
        }
    }
    detail = std::to_string(classes) + " isomorphism classes against subset counting";
    return true;
}

bool criterion2_theorem1(std::string& detail) {
    const auto report = check_theorem1(6, default_grid());
    detail = std::to_string(report.extremal_witnesses.size()) + " equality witnesses";
    if (!report.pass()) {
        detail = std::to_string(report.counterexamples.size()) + " counterexamples";
        return false;
    }
    if (!note_present(report, "equality_exactly_at_Z=true")) {
        detail = "equality holders differ from Z(n,alpha)";
        return false;
    }
    return true;
}

bool criterion3_theorem2(std::string& detail) {
    const auto report = check_theorem2(6, default_grid());
    detail = "constrained grid, all alpha";
    if (!report.pass()) {
        detail = std::to_string(report.counterexamples.size()) + " counterexamples";
        return false;
    }
    return true;
}

bool criterion4_corollary3(std::string& detail) {
    const auto report = check_corollary3(6, default_grid());
    if (!report.pass()) {
        detail = std::to_string(report.counterexamples.size()) + " counterexamples";
        return false;
    }
    // The lambda = 1 specialization is the classical set-count bound.
    if (closed_form_P_bounds(5, 2, Rational(1)).first != 12) {
        detail = "lambda=1 specialization failed for n=5, alpha=2";
        return false;
    }
    detail = "bounds plus the lambda=1 counting specialization";
    return true;
}

bool criterion5_variance_bounds(std::string& detail) {
    const auto t4 = check_theorem4(6, default_grid());
    const auto t5 = check_theorem5(6, default_grid());
    if (!t4.pass() || !t5.pass()) {
        detail = std::to_string(t4.counterexamples.size() + t5.counterexamples.size()) +
                 " counterexamples";
        return false;
    }
    if (!note_present(t4, "equality_exactly_at_Kn=true")) {
        detail = "variance equality holders differ from K_n";
        return false;
    }
    detail = "both variance bounds, equality exactly at K_n";
    return true;
}

bool criterion6_truncated_binomial(std::string& detail) {
    const auto p_grid = parse_rational_list({"1/4", "1/3", "1/2", "2/3", "3/4"});
    const auto sweep = variance_monotonicity_sweep(12, p_grid);
    if (!sweep.pass()) {
        detail = std::to_string(sweep.counterexamples.size()) + " monotonicity violations";
        return false;
    }
    for (int n = 1; n <= 12; ++n)
        for (const Rational& p : p_grid)
            for (int t = 1; t <= n; ++t) {
                try {
                    coupling_check(n, p, t);
                } catch (const std::exception& e) {
                    detail = "coupling failed at n=" + std::to_string(n) + ", p=" + to_string(p) +
                             ", t=" + std::to_string(t);
                    return false;
                }
            }
    detail = "variance ladder and coupling equality, n<=12, 5 p values";
    return true;
}

bool criterion7_section3_identities(std::string& detail) {
    const auto s31 = check_section31_identities(5, default_grid());
    const auto s32 = check_section32_identities(5, default_grid());
    if (!s31.pass() || !s32.pass()) {
        detail = std::to_string(s31.counterexamples.size() + s32.counterexamples.size()) +
                 " violations";
        return false;
    }
    detail = "mixture, phi and covariance identities, n<=5";
    return true;
}

bool criterion8_symmetrization(std::string& detail) {
    // Convex identity for every non-adjacent pair.
    for (int n = 2; n <= 6; ++n)
        for (const Graph& h : enumerate_graphs(n))
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v) {
                    if (h.has_edge(u, v)) continue;
                    for (const Rational& lambda : kSymmetrizationGrid) {
                        try {
                            convex_identity_check(h, u, v, lambda);
                        } catch (const std::exception&) {
                            detail = "convex identity failed on " + emit_graph6(h);
                            return false;
                        }
                    }
                }
    // Greedy symmetrization terminates at a complete multipartite graph
    // with monotone beta, for every graph and lambda.
    for (int n = 1; n <= 6; ++n)
        for (const Graph& h : enumerate_graphs(n))
            for (const Rational& lambda : kSymmetrizationGrid) {
                SymmetrizationTrace trace;
                try {
                    trace = symmetrize_to_multipartite(h, lambda);
                } catch (const SymmetrizationError&) {
                    detail = "symmetrization did not terminate on " + emit_graph6(h);
                    return false;
                }
                if (!is_complete_multipartite(trace.final)) {
                    detail = "endpoint not complete multipartite for " + emit_graph6(h);
                    return false;
                }
                Rational beta = clique_occupancy(h, lambda);
                for (const auto& step : trace.steps) {
                    if (step.beta_after < step.beta_before) {
                        detail = "beta decreased on " + emit_graph6(h);
                        return false;
                    }
                    beta = step.beta_after;
                }
                const int omega = clique_number(h);
                if (clique_occupancy(h, lambda) > clique_occupancy(turan(n, omega), lambda)) {
                    detail = "Turan endpoint bound failed on " + emit_graph6(h);
                    return false;
                }
            }
    // The worked 4-path example.
    const auto trace = symmetrize_to_multipartite(path_graph(4), Rational(1));
    if (trace.steps.size() != 1 || trace.steps[0].beta_before != make_rational(5, 4) ||
        trace.steps[0].beta_after != make_rational(4, 3)) {
        detail = "4-path trace does not reproduce 5/4 -> 4/3";
        return false;
    }
    detail = "identity, termination, Turan endpoint, worked example";
    return true;
}

bool criterion9_sampler(std::string& detail) {
    struct Case {
        Graph graph;
        const char* name;
    };
    const std::vector<Case> cases = {
        {complete_multipartite(PartSizes::of({3, 3})), "K_{3,3}"},
        {clique_union(6, 2), "Z(6,2)"},
        {path_graph(5), "P_5"},
    };
    for (const auto& c : cases) {
        for (const Rational& lambda : {make_rational(1, 2), Rational(1)}) {
            const auto started = std::chrono::steady_clock::now();
            ChainConfig cfg;
            cfg.lambda = lambda;
            cfg.samples = 1000000;
            cfg.burn_in = 20000;
            cfg.thinning = c.graph.order();
            cfg.seed = 0xC0FFEE;
            const auto est = glauber_run(c.graph, cfg);
            const auto rerun = glauber_run(c.graph, cfg);
            if (!(est == rerun)) {
                detail = std::string("seeded rerun differs for ") + c.name;
                return false;
            }
            const double exact_mean =
                to_double(Rational(c.graph.order()) * occupancy_fraction(c.graph, lambda));
            const double exact_var =
                to_double(Rational(c.graph.order()) * variance_fraction(c.graph, lambda));
            if (std::abs(est.est_mean - exact_mean) > 4 * est.se_mean) {
                detail = std::string("mean outside 4 SE for ") + c.name + " at lambda=" +
                         to_string(lambda);
                return false;
            }
            if (std::abs(est.est_var - exact_var) > 4 * est.se_var) {
                detail = std::string("variance outside 4 SE for ") + c.name + " at lambda=" +
                         to_string(lambda);
                return false;
            }
            const double seconds =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
            if (seconds > 60) {
                detail = std::string("case ") + c.name + " exceeded 60 s";
                return false;
            }
        }
    }
    detail = "6 cases within 4 SE at 1e6 samples, reruns bit-identical";
    return true;
}

bool criterion10_free_energy(std::string& detail) {
    const auto a = check_free_energy_bounds(2, 6, default_grid());
    const auto b = check_free_energy_bounds(3, 8, default_grid());
    if (!a.pass() || !b.pass()) {
        detail = std::to_string(a.counterexamples.size() + b.counterexamples.size()) +
                 " violations";
        return false;
    }
    detail = "d=2 n=6 and d=3 n=8 within 1e-9 slack (and exactly)";
    return true;
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"1. exact profile oracle, n<=6", 30, criterion1_profile_oracle},
        {"2. theorem 1 upper bound with unique extremal", 120, criterion2_theorem1},
        {"3. theorem 2 lower bound on constrained grid", 120, criterion3_theorem2},
        {"4. corollary 3 partition-function bounds", 120, criterion4_corollary3},
        {"5. theorems 4 and 5 variance bounds", 120, criterion5_variance_bounds},
        {"6. truncated binomial ladder and coupling, n<=12", 120, criterion6_truncated_binomial},
        {"7. section 3 identities, n<=5", 120, criterion7_section3_identities},
        {"8. symmetrization machinery, n<=6", 300, criterion8_symmetrization},
        {"9. Glauber sampler within 4 SE", 360, criterion9_sampler},
        {"10. free-energy bounds for regular graphs", 120, criterion10_free_energy},
    };

    int failures = 0;
    for (const auto& criterion : criteria) {
        const auto started = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = false;
        try {
            ok = criterion.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
        if (seconds > criterion.budget_seconds) {
            ok = false;
            detail += " [budget " + std::to_string(criterion.budget_seconds) + "s exceeded]";
        }
        std::printf("[%s] %s (%.1fs) %s\n", ok ? "PASS" : "FAIL", criterion.name.c_str(), seconds,
                    detail.c_str());
        std::fflush(stdout);
        if (!ok) ++failures;
    }
    if (failures > 0) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all %zu criteria passed\n", criteria.size());
    return 0;
}
