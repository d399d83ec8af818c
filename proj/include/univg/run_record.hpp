#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "univg/search.hpp"

namespace univg {

inline constexpr std::string_view project_version = "univg 0.1.0";

// Everything needed to replay and audit a CLI run: the exact invocation,
// the knobs that change results (seed, jobs), and what came out.  Written
// as JSON next to each run's output.
struct RunRecord {
    std::string version{project_version};
    std::string command;
    std::vector<std::string> argv;
    std::string family;
    std::uint64_t seed = 0;
    int order = 0;
    int k = 0;
    int jobs = 1;
    SearchStats stats;
    std::map<std::string, std::uint64_t> counters;
    std::vector<std::string> results_graph6;
    double wall_seconds = 0.0;

    bool operator==(const RunRecord&) const = default;
};

// The JSON round trip is lossless: from(to(rec)) == rec.
std::string run_record_to_json(const RunRecord& rec);
RunRecord run_record_from_json(const std::string& json_text);

}  // namespace univg
