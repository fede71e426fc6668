#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hardcore {

// Structured outcome of one verification check. A report passes exactly
// when it has no counterexamples.
struct Counterexample {
    std::string graph6;  // offending graph, or a textual locus for non-graph checks
    std::string lambda;  // parameter value as "p/q" (or "n=..,p=..,t=..")
    std::string lhs;
    std::string rhs;
    std::string note;

    auto operator<=>(const Counterexample&) const = default;
};

struct ExtremalWitness {
    std::string graph6;
    std::string value;
    std::string note;

    auto operator<=>(const ExtremalWitness&) const = default;
};

struct VerificationReport {
    std::string check_id;
    std::string scope;
    std::vector<Counterexample> counterexamples;
    std::vector<ExtremalWitness> extremal_witnesses;
    std::vector<std::string> notes;
    std::int64_t runtime_ms = 0;

    bool pass() const { return counterexamples.empty(); }
    // Sorts counterexamples/witnesses/notes so output is scheduler-independent.
    void normalize();
};

// Deterministic JSON; runtime_ms is the only run-dependent field and can be
// suppressed for byte-identical comparisons.
std::string to_json(const VerificationReport& report, bool with_runtime = true);
std::string to_json(const std::vector<VerificationReport>& reports, bool with_runtime = true);

// One row per report: check_id, scope, verdict, counterexample count.
std::string to_csv(const std::vector<VerificationReport>& reports);

}  // namespace hardcore
