#pragma once

#include "helpenum/primegraph.hpp"

#include <string>
#include <vector>

namespace helpenum {

/// Complete result of a run: per-order verdicts and solution sets with branch
/// provenance, both prime graphs and the Kimmerle verdict, plus the engine
/// configuration.  The machine-readable serialization is deterministic for
/// identical inputs and configuration; wall-clock timing appears only in the
/// text rendering.
struct RunReport {
    static constexpr int schema_version = 1;

    std::string group;
    std::vector<std::string> tables_used;
    long long max_coeff = 128;
    int jobs = 1;

    const CharacterTable* base = nullptr;
    std::map<long long, OrderResult> orders;
    std::vector<long long> pruned;

    PrimeGraph graph_group, graph_units;
    bool kimmerle = false;
    GraphDiff kimmerle_diff;

    double elapsed_seconds = 0.0;
    bool any_capped = false;
};

/// Deterministic machine-readable rendering (stable key order, no timing).
std::string report_to_json(const RunReport& r);

/// Human-readable rendering.
std::string report_to_text(const RunReport& r);

/// Compare a produced report against a golden JSON document.  Returns the
/// list of differing JSON paths (empty when equal); `limit` caps the list.
std::vector<std::string> diff_against_golden(const std::string& produced_json,
                                             const std::string& golden_json,
                                             std::size_t limit = 16);

/// Fragment renderings used by the solve subcommand.
std::string order_to_json(const RunReport& r, long long k);
std::string order_to_text(const RunReport& r, long long k);

}  // namespace helpenum
