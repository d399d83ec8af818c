#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "univg/iso.hpp"
#include "univg/search.hpp"

namespace univg {

// Outcome for one family member: whether it embeds, and if so a witness
// map that has been replayed against the adjacency of both graphs.
struct MemberCheck {
    std::string member_graph6;
    bool contained = false;
    std::vector<int> witness;  // empty unless contained

    bool operator==(const MemberCheck&) const = default;
};

struct Certificate {
    std::string graph6;
    std::string family;
    std::vector<MemberCheck> members;
    bool valid = false;

    bool operator==(const Certificate&) const = default;
};

// Checks every member with the naive backtracker (never the branch-and-
// bound solver) and replays each witness edge by edge.  This is the
// independent gate: search and heuristic results only count once they
// pass here.
Certificate verify_universal(const Graph& g, const GraphFamily& family,
                             const std::string& family_desc = "");

// Replays an embedding: injective, in range, and edges/non-edges agree.
bool embedding_valid(const Graph& pattern, const Graph& target, const std::vector<int>& map);

struct Disagreement {
    std::size_t member_index = 0;
    std::size_t candidate_index = 0;
    bool solver_says = false;
};

struct CrossCheckResult {
    std::uint64_t pairs = 0;
    std::vector<Disagreement> disagreements;
};

// Runs both solvers on every (member, candidate) pair and records any
// disagreement.  Expected: none, ever.
CrossCheckResult cross_check(const GraphFamily& family, const std::vector<Graph>& candidates);

std::string certificate_to_json(const Certificate& c);
Certificate certificate_from_json(const std::string& text);
std::string certificate_to_text(const Certificate& c);

}  // namespace univg
