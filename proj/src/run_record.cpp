#include "univg/run_record.hpp"

#include <json.hpp>

namespace univg {

using nlohmann::json;

std::string run_record_to_json(const RunRecord& rec)
{
    json j{
        {"version", rec.version},
        {"command", rec.command},
        {"argv", rec.argv},
        {"family", rec.family},
        {"seed", rec.seed},
        {"order", rec.order},
        {"k", rec.k},
        {"jobs", rec.jobs},
        {"stats",
         {{"subiso_calls", rec.stats.subiso_calls},
          {"candidates_tested", rec.stats.candidates_tested},
          {"universal_found", rec.stats.universal_found}}},
        {"counters", rec.counters},
        {"results_graph6", rec.results_graph6},
        {"wall_seconds", rec.wall_seconds},
    };
    return j.dump(2) + "\n";
}

RunRecord run_record_from_json(const std::string& json_text)
{
    json j = json::parse(json_text);
    RunRecord rec;
    rec.version = j.at("version").get<std::string>();
    rec.command = j.at("command").get<std::string>();
    rec.argv = j.at("argv").get<std::vector<std::string>>();
    rec.family = j.at("family").get<std::string>();
    rec.seed = j.at("seed").get<std::uint64_t>();
    rec.order = j.at("order").get<int>();
    rec.k = j.at("k").get<int>();
    rec.jobs = j.at("jobs").get<int>();
    const json& s = j.at("stats");
    rec.stats.subiso_calls = s.at("subiso_calls").get<std::uint64_t>();
    rec.stats.candidates_tested = s.at("candidates_tested").get<std::uint64_t>();
    rec.stats.universal_found = s.at("universal_found").get<std::uint64_t>();
    rec.counters = j.at("counters").get<std::map<std::string, std::uint64_t>>();
    rec.results_graph6 = j.at("results_graph6").get<std::vector<std::string>>();
    rec.wall_seconds = j.at("wall_seconds").get<double>();
    return rec;
}

}  // namespace univg
