#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <fstream>

#include "hardcore/canonical.hpp"
#include "hardcore/enumerate.hpp"
#include "hardcore/families.hpp"
#include "hardcore/graph6.hpp"
#include "hardcore/model.hpp"
#include "hardcore/verifier.hpp"

using namespace hardcore;

namespace {

LambdaGrid grid_of(std::initializer_list<const char*> values) {
    LambdaGrid grid;
    for (const char* v : values) grid.values.push_back(parse_rational(v));
    return grid;
}

}  // namespace

TEST_CASE("lambda grids validate and constrain") {
    LambdaGrid grid = grid_of({"1/3", "1/2", "1", "2", "5"});
    grid.validate();
    grid.constrained = true;
    CHECK(grid.at_order(2) == grid.values);
    CHECK(grid.at_order(3) == parse_rational_list({"1/3", "1/2", "1"}));
    CHECK(grid.at_order(4) == parse_rational_list({"1/3", "1/2"}));
    CHECK(grid.at_order(6) == parse_rational_list({"1/3"}));  // 1/2 is not < 1/2
    LambdaGrid bad = grid_of({"0"});
    CHECK_THROWS(bad.validate());
}

TEST_CASE("theorem 1 check finds the clique union extremal") {
    const auto report = check_theorem1(5, grid_of({"1/2", "1", "2"}));
    CHECK(report.pass());
    bool includes_note = false;
    for (const auto& note : report.notes) includes_note |= note == "equality_exactly_at_Z=true";
    CHECK(includes_note);
    // n=5, alpha=2, lambda=1: the maximum 17/60 is attained by K_2 + K_3.
    const CanonicalLabel z52 = canonical_label(clique_union(5, 2));
    bool found = false;
    for (const auto& w : report.extremal_witnesses)
        if (w.value == "17/60" && w.note.find("n=5 alpha=2 lambda=1 ") != std::string::npos &&
            canonical_label(parse_graph6(w.graph6)) == z52)
            found = true;
    CHECK(found);
}

TEST_CASE("theorem 2 check holds on the constrained grid") {
    const auto report = check_theorem2(5, grid_of({"1/10", "1/2"}));
    CHECK(report.pass());
    // The expected minimizer appears among the witnesses for each class.
    const std::string g1 = emit_graph6(clique_join_empty(5, 3));
    bool found = false;
    for (const auto& w : report.extremal_witnesses)
        if (w.graph6 == g1 && w.note.find("extremal=yes") != std::string::npos) found = true;
    CHECK(found);
}

TEST_CASE("theorem 2 minimum over the class matches the closed form directly") {
    const Rational lambda = make_rational(1, 4);
    Rational minimum;
    bool first = true;
    for (const Graph& g : enumerate_graphs(6, [](const Graph& g) {
             return independence_number(g) == 3;
         })) {
        const Rational e = occupancy_fraction(g, lambda);
        if (first || e < minimum) minimum = e;
        first = false;
    }
    CHECK(minimum == closed_form_E_G1(6, 3, lambda));
}

TEST_CASE("corollary 3 check") {
    const auto report = check_corollary3(5, grid_of({"1/3", "1", "2"}));
    CHECK(report.pass());
}

TEST_CASE("variance checks") {
    const auto t4 = check_theorem4(5, grid_of({"1/2", "1", "2"}));
    CHECK(t4.pass());
    bool note = false;
    for (const auto& s : t4.notes) note |= s == "equality_exactly_at_Kn=true";
    CHECK(note);
    const auto t5 = check_theorem5(5, grid_of({"1/2", "1", "2"}));
    CHECK(t5.pass());
    // K_{Delta+1} itself achieves equality in theorem 5, so witnesses exist.
    CHECK(!t5.extremal_witnesses.empty());
}

TEST_CASE("free energy bounds") {
    const auto ok = check_free_energy_bounds(2, 6, grid_of({"1/2", "1"}));
    CHECK(ok.pass());
    bool scope_note = false;
    for (const auto& s : ok.notes) scope_note |= s.find("2 regular graphs") != std::string::npos;
    CHECK(scope_note);  // C_6 and 2 C_3
    // Odd n with odd d: no regular graphs, empty-scope pass with a note.
    const auto empty = check_free_energy_bounds(3, 5, grid_of({"1"}));
    CHECK(empty.pass());
    bool empty_note = false;
    for (const auto& s : empty.notes) empty_note |= s.find("empty-scope") != std::string::npos;
    CHECK(empty_note);
}

TEST_CASE("section 3.1 and 3.2 checks") {
    CHECK(check_section31_identities(5, grid_of({"1/2", "1", "2"})).pass());
    CHECK(check_section32_identities(5, grid_of({"1/2", "1", "2"})).pass());
}

TEST_CASE("default config runs everything and passes") {
    VerifierConfig config = default_verifier_config();
    // Shrink to keep the unit suite quick; acceptance runs the full scale.
    config.theorem1_n_max = config.theorem2_n_max = config.corollary3_n_max = 4;
    config.theorem4_n_max = config.theorem5_n_max = 4;
    config.section31_n_max = config.section32_n_max = 4;
    config.var_de_n_max = 8;
    config.free_energy_cases = {{2, 4}, {3, 4}};
    const auto reports = run_all(config);
    CHECK(reports.size() == 11);
    for (const auto& r : reports) CHECK(r.pass());
}

TEST_CASE("reports are deterministic across runs and thread counts") {
    VerifierConfig config = default_verifier_config();
    config.theorem1_n_max = config.theorem2_n_max = config.corollary3_n_max = 4;
    config.theorem4_n_max = config.theorem5_n_max = 4;
    config.section31_n_max = config.section32_n_max = 4;
    config.var_de_n_max = 6;
    config.free_energy_cases = {{2, 4}};
    VerifyOptions serial;
    serial.threads = 1;
    VerifyOptions parallel;
    parallel.threads = 4;
    const std::string a = to_json(run_all(config, serial), /*with_runtime=*/false);
    const std::string b = to_json(run_all(config, serial), /*with_runtime=*/false);
    const std::string c = to_json(run_all(config, parallel), /*with_runtime=*/false);
    CHECK(a == b);
    CHECK(a == c);
}

TEST_CASE("an injected corrupted profile fails with a witness") {
    VerifyOptions opts;
    opts.profile_fn = [](const Graph& g) {
        IndependenceProfile p = independence_profile(g);
        if (g.order() == 4 && p.degree() >= 2) p.coeffs.back() *= 3;  // inflate the top count
        return p;
    };
    const auto report = check_theorem1(4, grid_of({"1"}), opts);
    CHECK(!report.pass());
    CHECK(!report.counterexamples.empty());
    CHECK(report.counterexamples.front().graph6 != "");
}

TEST_CASE("config parsing") {
    const auto config = parse_verifier_config(R"({
        "lambda_grid": ["1/4", "3"],
        "theorem1": {"n_max": 5},
        "var_de": {"n_max": 9, "p_grid": ["1/5"]},
        "free_energy": [{"d": 2, "n": 5}]
    })");
    CHECK(config.lambda_grid.values == parse_rational_list({"1/4", "3"}));
    CHECK(config.theorem1_n_max == 5);
    CHECK(config.theorem2_n_max == 6);  // untouched default
    CHECK(config.var_de_n_max == 9);
    CHECK(config.var_de_p_grid == parse_rational_list({"1/5"}));
    REQUIRE(config.free_energy_cases.size() == 1);
    CHECK(config.free_energy_cases[0].d == 2);

    CHECK_THROWS(parse_verifier_config(R"({"unknown_key": 1})"));
    CHECK_THROWS(parse_verifier_config(R"({"lambda_grid": ["0"]})"));
    CHECK_THROWS(parse_verifier_config(R"({"lambda_grid": ["x"]})"));
    CHECK_THROWS(parse_verifier_config(R"({"var_de": {"p_grid": ["3/2"]}})"));
    CHECK_THROWS(parse_verifier_config("not json"));
}

TEST_CASE("graph6 files feed the checks") {
    const std::string path = "verifier_in.g6";
    {
        std::ofstream out(path);
        for (const Graph& g : enumerate_graphs(4)) out << emit_graph6(g) << "\n";
    }
    VerifierConfig config = default_verifier_config();
    config.theorem1_n_max = 4;
    config.theorem2_n_max = config.corollary3_n_max = 1;
    config.theorem4_n_max = config.theorem5_n_max = 1;
    config.section31_n_max = config.section32_n_max = 1;
    config.var_de_n_max = 1;
    config.free_energy_cases = {};
    config.graph6_files[4] = path;
    const auto reports = run_all(config);
    CHECK(reports.front().check_id == "theorem1_upper_bound");
    CHECK(reports.front().pass());
    std::remove(path.c_str());

    // A file whose contents disagree with the declared order is a
    // configuration error.
    const std::string bad = "verifier_bad.g6";
    {
        std::ofstream out(bad);
        out << emit_graph6(complete_graph(3)) << "\n";
    }
    config.graph6_files.clear();
    config.graph6_files[4] = bad;
    CHECK_THROWS(run_all(config));
    std::remove(bad.c_str());
}
