#include "mdl/report.hpp"

#include <sstream>

#include <json.hpp>

#include "mdl/spectrum.hpp"

namespace mdl {

using Json = nlohmann::ordered_json;

void VerificationReport::add_param(std::string key, std::string value) {
    params.emplace_back(std::move(key), std::move(value));
}

void VerificationReport::add_count(std::string key, std::int64_t value) {
    counts.emplace_back(std::move(key), value);
}

void VerificationReport::fail(std::string graph6) {
    pass = false;
    counterexamples.push_back(std::move(graph6));
}

std::int64_t VerificationReport::count(const std::string& key) const {
    for (const auto& [k, v] : counts)
        if (k == key) return v;
    return 0;
}

std::string report_to_json(const VerificationReport& report, bool timing, int indent) {
    Json params = Json::object();
    for (const auto& [k, v] : report.params) params[k] = v;
    Json counts = Json::object();
    for (const auto& [k, v] : report.counts) counts[k] = v;
    Json witnesses = Json::array();
    for (const auto& [g, m] : report.witnesses) witnesses.push_back({{"graph", g}, {"minor", m}});
    Json out;
    out["check"] = report.check;
    out["params"] = params;
    out["pass"] = report.pass;
    out["counterexamples"] = report.counterexamples;
    out["counts"] = counts;
    out["witnesses"] = witnesses;
    out["notes"] = report.notes;
    out["wall_time_ms"] = timing ? report.wall_time_ms : 0;
    return out.dump(indent) + "\n";
}

std::string report_to_text(const VerificationReport& report, bool timing) {
    std::ostringstream os;
    os << report.check << ": " << (report.pass ? "PASS" : "FAIL") << "\n";
    for (const auto& [k, v] : report.params) os << "  " << k << " = " << v << "\n";
    for (const auto& [k, v] : report.counts) os << "  " << k << ": " << v << "\n";
    for (const std::string& g : report.counterexamples) os << "  counterexample " << g << "\n";
    for (const std::string& n : report.notes) os << "  note: " << n << "\n";
    if (timing) os << "  wall_time_ms: " << report.wall_time_ms << "\n";
    return os.str();
}

std::string spectrum_to_csv(const SpectrumReport& report) {
    std::ostringstream os;
    os << "density_num,density_den,witness_graph6,n,m\n";
    for (const SpectrumEntry& e : report.entries)
        os << e.density.num() << "," << e.density.den() << "," << e.graph6 << "," << e.order() << ","
           << e.witness.size() << "\n";
    return os.str();
}

std::string spectrum_to_json(const SpectrumReport& report, int indent) {
    Json entries = Json::array();
    for (const SpectrumEntry& e : report.entries)
        entries.push_back({{"density", e.density.str()}, {"graph6", e.graph6}, {"n", e.order()}, {"m", e.witness.size()}});
    Json out;
    out["max_n"] = report.max_n;
    out["cap"] = report.cap ? Json(report.cap->str()) : Json(nullptr);
    out["count"] = report.entries.size();
    out["densities"] = Json::array();
    for (const Rational& r : report.densities()) out["densities"].push_back(r.str());
    out["entries"] = entries;
    return out.dump(indent) + "\n";
}

}  // namespace mdl
