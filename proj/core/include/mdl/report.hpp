#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace mdl {

/// Outcome of one exhaustive check. `pass` holds exactly when
/// `counterexamples` (graph6 strings) is empty.
struct VerificationReport {
    std::string check;
    std::vector<std::pair<std::string, std::string>> params;
    bool pass = true;
    std::vector<std::string> counterexamples;
    std::vector<std::pair<std::string, std::int64_t>> counts;
    /// Optional (graph, minor) graph6 pairs backing a positive answer.
    std::vector<std::pair<std::string, std::string>> witnesses;
    std::vector<std::string> notes;
    std::int64_t wall_time_ms = 0;

    void add_param(std::string key, std::string value);
    void add_count(std::string key, std::int64_t value);
    void fail(std::string graph6);
    [[nodiscard]] std::int64_t count(const std::string& key) const;
};

/// {check, params, pass, counterexamples, counts, witnesses, notes, wall_time_ms}
/// with keys in that order. wall_time_ms is written as 0 when `timing` is false.
std::string report_to_json(const VerificationReport& report, bool timing = true, int indent = 2);

/// Human-readable summary, one item per line.
std::string report_to_text(const VerificationReport& report, bool timing = true);

}  // namespace mdl
