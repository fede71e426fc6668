#include "hardcore/report.hpp"

#include <algorithm>

#include "json.hpp"

namespace hardcore {

using ordered_json = nlohmann::ordered_json;

void VerificationReport::normalize() {
    std::sort(counterexamples.begin(), counterexamples.end());
    std::sort(extremal_witnesses.begin(), extremal_witnesses.end());
    std::sort(notes.begin(), notes.end());
}

namespace {

ordered_json report_json(const VerificationReport& r, bool with_runtime) {
    ordered_json j;
    j["check_id"] = r.check_id;
    j["scope"] = r.scope;
    j["verdict"] = r.pass() ? "pass" : "fail";
    auto ces = ordered_json::array();
    for (const auto& ce : r.counterexamples) {
        ordered_json e;
        e["graph6"] = ce.graph6;
        e["lambda"] = ce.lambda;
        e["lhs"] = ce.lhs;
        e["rhs"] = ce.rhs;
        if (!ce.note.empty()) e["note"] = ce.note;
        ces.push_back(std::move(e));
    }
    j["counterexamples"] = std::move(ces);
    auto ws = ordered_json::array();
    for (const auto& w : r.extremal_witnesses) {
        ordered_json e;
        e["graph6"] = w.graph6;
        e["value"] = w.value;
        if (!w.note.empty()) e["note"] = w.note;
        ws.push_back(std::move(e));
    }
    j["extremal_witnesses"] = std::move(ws);
    j["notes"] = r.notes;
    if (with_runtime) j["runtime_ms"] = r.runtime_ms;
    return j;
}

}  // namespace

std::string to_json(const VerificationReport& report, bool with_runtime) {
    return report_json(report, with_runtime).dump(2);
}

std::string to_json(const std::vector<VerificationReport>& reports, bool with_runtime) {
    auto arr = ordered_json::array();
    for (const auto& r : reports) arr.push_back(report_json(r, with_runtime));
    return arr.dump(2);
}

std::string to_csv(const std::vector<VerificationReport>& reports) {
    std::string out = "check_id,scope,verdict,counterexamples\n";
    for (const auto& r : reports) {
        out += r.check_id;
        out += ",\"" + r.scope + "\",";
        out += r.pass() ? "pass" : "fail";
        out += "," + std::to_string(r.counterexamples.size()) + "\n";
    }
    return out;
}

}  // namespace hardcore
