// Command-line front end: exact hard-core quantities on small graphs,
// extremal-family constructors, the verification suite, and the Glauber
// sampler. Rationals are always "p/q" strings; the only floating-point
// outputs are free energies and sampler estimates (12 significant digits).

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hardcore/binomial.hpp"
#include "hardcore/canonical.hpp"
#include "hardcore/enumerate.hpp"
#include "hardcore/families.hpp"
#include "hardcore/graph6.hpp"
#include "hardcore/model.hpp"
#include "hardcore/profile.hpp"
#include "hardcore/rational.hpp"
#include "hardcore/report.hpp"
#include "hardcore/sampler.hpp"
#include "hardcore/symmetrization.hpp"
#include "hardcore/verifier.hpp"

namespace {

using hardcore::Graph;
using hardcore::Rational;
using ordered_json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;

std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

struct InputOptions {
    std::string graph6;
    std::string file;
    std::string family;

    // Graphs from the single configured source; `single` marks inline input
    // so commands can print the undecorated payload.
    std::pair<std::vector<Graph>, bool> load() const {
        const int sources = !graph6.empty() + !file.empty() + !family.empty();
        if (sources != 1)
            throw CLI::ValidationError("input", "exactly one of --graph6/--file/--family is required");
        if (!graph6.empty()) return {{hardcore::parse_graph6(graph6)}, true};
        if (!family.empty()) return {{hardcore::build(hardcore::FamilySpec::parse(family))}, true};
        return {hardcore::read_graph6_file(file), false};
    }
};

void add_input_options(CLI::App* cmd, InputOptions& in) {
    cmd->add_option("--graph6", in.graph6, "inline graph6 line");
    cmd->add_option("--file", in.file, "newline-delimited graph6 file");
    cmd->add_option("--family", in.family, "family spec, e.g. Z:5,2 / G1:7,3 / turan:7,3 / kdd:4");
}

struct FormatOptions {
    bool json = false;
    bool csv = false;
};

void add_format_options(CLI::App* cmd, FormatOptions& fmt) {
    auto* j = cmd->add_flag("--json", fmt.json, "structured JSON output");
    cmd->add_flag("--csv", fmt.csv, "CSV output")->excludes(j);
}

Rational parse_lambda(const std::string& text) {
    const Rational lambda = hardcore::parse_rational(text);
    if (lambda <= 0) throw CLI::ValidationError("--lambda", "fugacity must be positive");
    return lambda;
}

// Emits one row per graph: plain payload for single inline input, JSON
// array / CSV rows for file input.
void emit_rows(const std::vector<std::pair<std::string, ordered_json>>& rows, bool single,
               const FormatOptions& fmt, const std::string& value_key) {
    if (fmt.csv) {
        std::cout << "graph6," << value_key << "\n";
        for (const auto& [g6, payload] : rows) {
            std::string cell;
            if (payload.is_array()) {
                for (const auto& item : payload) {
                    if (!cell.empty()) cell += ";";
                    cell += item.is_string() ? item.get<std::string>() : item.dump();
                }
            } else {
                cell = payload.is_string() ? payload.get<std::string>() : payload.dump();
            }
            std::cout << g6 << "," << cell << "\n";
        }
        return;
    }
    if (single && !fmt.json) {
        const auto& payload = rows.front().second;
        if (payload.is_string())
            std::cout << payload.get<std::string>() << "\n";
        else
            std::cout << ordered_json{{value_key, payload}}.dump() << "\n";
        return;
    }
    if (single) {
        std::cout << ordered_json{{value_key, rows.front().second}}.dump() << "\n";
        return;
    }
    auto arr = ordered_json::array();
    for (const auto& [g6, payload] : rows) arr.push_back({{"graph6", g6}, {value_key, payload}});
    std::cout << arr.dump() << "\n";
}

ordered_json rationals_to_json(const std::vector<Rational>& values) {
    auto arr = ordered_json::array();
    for (const Rational& v : values) arr.push_back(hardcore::to_string(v));
    return arr;
}

int cmd_poly(const InputOptions& in, const FormatOptions& fmt) {
    const auto [graphs, single] = in.load();
    std::vector<std::pair<std::string, ordered_json>> rows;
    for (const Graph& g : graphs) {
        auto coeffs = ordered_json::array();
        for (const auto& c : hardcore::independence_profile(g).coeffs)
            coeffs.push_back(hardcore::to_string(c));
        rows.emplace_back(hardcore::emit_graph6(g), std::move(coeffs));
    }
    if (single && !fmt.csv) {
        std::cout << ordered_json{{"profile", rows.front().second}}.dump() << "\n";
        return kExitOk;
    }
    emit_rows(rows, single, fmt, "profile");
    return kExitOk;
}

int cmd_scalar(const InputOptions& in, const FormatOptions& fmt, const std::string& lambda_text,
               const std::string& key, Rational (*compute)(const Graph&, const Rational&)) {
    const Rational lambda = parse_lambda(lambda_text);
    const auto [graphs, single] = in.load();
    std::vector<std::pair<std::string, ordered_json>> rows;
    for (const Graph& g : graphs)
        rows.emplace_back(hardcore::emit_graph6(g), hardcore::to_string(compute(g, lambda)));
    emit_rows(rows, single, fmt, key);
    return kExitOk;
}

int cmd_free_energy(const InputOptions& in, const FormatOptions& fmt, const std::string& lambda_text) {
    const Rational lambda = parse_lambda(lambda_text);
    const auto [graphs, single] = in.load();
    std::vector<std::pair<std::string, ordered_json>> rows;
    for (const Graph& g : graphs)
        rows.emplace_back(hardcore::emit_graph6(g), format_double(hardcore::free_energy(g, lambda)));
    emit_rows(rows, single, fmt, "free_energy");
    return kExitOk;
}

int cmd_family(const std::string& spec_text, const FormatOptions& fmt) {
    const Graph g = hardcore::build(hardcore::FamilySpec::parse(spec_text));
    const std::string g6 = hardcore::emit_graph6(g);
    if (fmt.json) {
        ordered_json j;
        j["graph6"] = g6;
        j["n"] = g.order();
        j["alpha"] = hardcore::independence_number(g);
        std::cout << j.dump() << "\n";
    } else if (fmt.csv) {
        std::cout << "graph6,n,alpha\n"
                  << g6 << "," << g.order() << "," << hardcore::independence_number(g) << "\n";
    } else {
        std::cout << g6 << "\n";
    }
    return kExitOk;
}

int cmd_mixture(const InputOptions& in, const std::string& lambda_text) {
    const Rational lambda = parse_lambda(lambda_text);
    const auto [graphs, single] = in.load();
    auto arr = ordered_json::array();
    for (const Graph& g : graphs) {
        const auto mix = hardcore::mixture_decomposition(g, lambda);
        const auto rebuilt = hardcore::reconstruct(mix);
        const auto exact = hardcore::size_distribution(g, lambda);
        bool match = rebuilt.probs.size() <= exact.probs.size();
        for (std::size_t k = 0; match && k < rebuilt.probs.size(); ++k)
            match = rebuilt.probs[k] == (k < exact.probs.size() ? exact.probs[k] : Rational(0));
        ordered_json j;
        j["graph6"] = hardcore::emit_graph6(g);
        j["p"] = hardcore::to_string(mix.p);
        j["q"] = rationals_to_json(mix.q);
        j["c"] = rationals_to_json(std::vector<Rational>(mix.c.begin() + 1, mix.c.end()));
        j["omega"] = rationals_to_json(std::vector<Rational>(mix.w.begin() + 1, mix.w.end()));
        j["reconstruction_exact"] = match;
        arr.push_back(std::move(j));
    }
    std::cout << (single ? arr.front().dump() : arr.dump()) << "\n";
    return kExitOk;
}

int cmd_phi(const InputOptions& in, const std::string& lambda_text) {
    const Rational lambda = parse_lambda(lambda_text);
    const auto [graphs, single] = in.load();
    auto arr = ordered_json::array();
    for (const Graph& g : graphs) {
        const auto stats = hardcore::phi_statistics(g, lambda);
        ordered_json j;
        j["graph6"] = hardcore::emit_graph6(g);
        j["mean_phi"] = hardcore::to_string(stats.mean_phi);
        j["mean_x_phi"] = hardcore::to_string(stats.mean_x_phi);
        j["extension_ratio"] = rationals_to_json(stats.extension_ratio);
        arr.push_back(std::move(j));
    }
    std::cout << (single ? arr.front().dump() : arr.dump()) << "\n";
    return kExitOk;
}

int cmd_symmetrize(const InputOptions& in, const std::string& lambda_text) {
    const Rational lambda = parse_lambda(lambda_text);
    const auto [graphs, single] = in.load();
    auto arr = ordered_json::array();
    for (const Graph& g : graphs) {
        const auto trace = hardcore::symmetrize_to_multipartite(g, lambda);
        ordered_json j;
        j["graph6"] = hardcore::emit_graph6(g);
        auto steps = ordered_json::array();
        for (const auto& step : trace.steps) {
            ordered_json s;
            s["graph6"] = hardcore::emit_graph6(step.before);
            s["pair"] = {step.pair.first, step.pair.second};
            s["chosen"] = step.chosen == hardcore::SymmetrizationVariant::H1 ? "H1" : "H2";
            s["beta_before"] = hardcore::to_string(step.beta_before);
            s["beta_after"] = hardcore::to_string(step.beta_after);
            s["weights"] = {hardcore::to_string(step.weights.first),
                            hardcore::to_string(step.weights.second)};
            steps.push_back(std::move(s));
        }
        j["steps"] = std::move(steps);
        j["final"] = hardcore::emit_graph6(trace.final);
        j["final_parts"] = trace.final_parts.parts;
        arr.push_back(std::move(j));
    }
    std::cout << (single ? arr.front().dump() : arr.dump()) << "\n";
    return kExitOk;
}

int cmd_verify(const std::string& config_path, int threads, const FormatOptions& fmt) {
    hardcore::VerifierConfig config;
    if (config_path.empty()) {
        config = hardcore::default_verifier_config();
    } else {
        std::ifstream file(config_path);
        if (!file) throw std::runtime_error("cannot open config file: " + config_path);
        std::stringstream buffer;
        buffer << file.rdbuf();
        config = hardcore::parse_verifier_config(buffer.str());
    }
    hardcore::VerifyOptions opts;
    opts.threads = threads;
    const auto reports = hardcore::run_all(config, opts);
    if (fmt.csv)
        std::cout << hardcore::to_csv(reports);
    else
        std::cout << hardcore::to_json(reports) << "\n";
    for (const auto& r : reports)
        if (!r.pass()) return kExitVerifyFail;
    return kExitOk;
}

int cmd_sample(const InputOptions& in, const std::string& lambda_text, std::int64_t samples,
               std::int64_t burn_in, std::int64_t thinning, std::uint64_t seed, int chains) {
    hardcore::ChainConfig cfg;
    cfg.lambda = parse_lambda(lambda_text);
    cfg.samples = samples;
    cfg.burn_in = burn_in;
    cfg.thinning = thinning;
    cfg.seed = seed;
    cfg.chains = chains;
    const auto [graphs, single] = in.load();
    auto arr = ordered_json::array();
    for (const Graph& g : graphs) {
        const auto est = hardcore::glauber_run(g, cfg);
        ordered_json j;
        j["graph6"] = hardcore::emit_graph6(g);
        j["est_mean"] = format_double(est.est_mean);
        j["est_var"] = format_double(est.est_var);
        j["se_mean"] = format_double(est.se_mean);
        j["se_var"] = format_double(est.se_var);
        j["n_samples"] = est.n_samples;
        arr.push_back(std::move(j));
    }
    std::cout << (single ? arr.front().dump() : arr.dump()) << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact hard-core model computations on small graphs"};
    app.require_subcommand(1);

    InputOptions in;
    FormatOptions fmt;
    std::string lambda_text = "1";

    auto* poly = app.add_subcommand("poly", "independence polynomial coefficients");
    add_input_options(poly, in);
    add_format_options(poly, fmt);

    auto* occupancy = app.add_subcommand("occupancy", "occupancy fraction (1/n) lambda P'/P");
    add_input_options(occupancy, in);
    add_format_options(occupancy, fmt);
    occupancy->add_option("--lambda", lambda_text, "fugacity p/q")->required();

    auto* variance = app.add_subcommand("variance", "variance fraction (1/n) Var|I|");
    add_input_options(variance, in);
    add_format_options(variance, fmt);
    variance->add_option("--lambda", lambda_text, "fugacity p/q")->required();

    auto* free_energy = app.add_subcommand("free-energy", "free energy density (1/n) ln P");
    add_input_options(free_energy, in);
    add_format_options(free_energy, fmt);
    free_energy->add_option("--lambda", lambda_text, "fugacity p/q")->required();

    std::string family_spec;
    auto* family = app.add_subcommand("family", "construct an extremal family member");
    family->add_option("spec", family_spec, "family spec, e.g. Z:5,2")->required();
    add_format_options(family, fmt);

    auto* mixture = app.add_subcommand("mixture", "truncated-binomial mixture decomposition");
    add_input_options(mixture, in);
    mixture->add_option("--lambda", lambda_text, "fugacity p/q")->required();

    auto* phi = app.add_subcommand("phi", "extension-set statistics");
    add_input_options(phi, in);
    phi->add_option("--lambda", lambda_text, "fugacity p/q")->required();

    auto* symmetrize = app.add_subcommand("symmetrize", "greedy clique-side symmetrization trace");
    add_input_options(symmetrize, in);
    symmetrize->add_option("--lambda", lambda_text, "fugacity p/q")->required();

    std::string config_path;
    int threads = 1;
    auto* verify = app.add_subcommand("verify", "run the verification suite");
    verify->add_option("--config", config_path, "JSON config (defaults apply when omitted)");
    verify->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);
    add_format_options(verify, fmt);

    std::int64_t samples = 1000000, burn_in = 10000, thinning = 1;
    std::uint64_t seed = 1;
    int chains = 1;
    auto* sample = app.add_subcommand("sample", "Glauber-dynamics estimates of E|I| and Var|I|");
    add_input_options(sample, in);
    sample->add_option("--lambda", lambda_text, "fugacity p/q")->required();
    sample->add_option("--samples", samples, "recorded observations")->check(CLI::PositiveNumber);
    sample->add_option("--burn-in", burn_in, "discarded steps");
    sample->add_option("--thinning", thinning, "steps between observations");
    sample->add_option("--seed", seed, "PRNG seed");
    sample->add_option("--chains", chains, "independent chains")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (poly->parsed()) return cmd_poly(in, fmt);
        if (occupancy->parsed())
            return cmd_scalar(in, fmt, lambda_text, "occupancy", hardcore::occupancy_fraction);
        if (variance->parsed())
            return cmd_scalar(in, fmt, lambda_text, "variance", hardcore::variance_fraction);
        if (free_energy->parsed()) return cmd_free_energy(in, fmt, lambda_text);
        if (family->parsed()) return cmd_family(family_spec, fmt);
        if (mixture->parsed()) return cmd_mixture(in, lambda_text);
        if (phi->parsed()) return cmd_phi(in, lambda_text);
        if (symmetrize->parsed()) return cmd_symmetrize(in, lambda_text);
        if (verify->parsed()) return cmd_verify(config_path, threads, fmt);
        if (sample->parsed())
            return cmd_sample(in, lambda_text, samples, burn_in, thinning, seed, chains);
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const hardcore::Graph6ParseError& e) {
        std::cerr << "graph6 parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
