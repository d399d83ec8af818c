#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "univg/enumeration.hpp"
#include "univg/graph.hpp"

namespace univg {

using GraphFamily = std::vector<Graph>;

enum class Strategy { Automorphisms, Edges, AlmostRandom, Random };

std::string strategy_name(Strategy s);
std::optional<Strategy> strategy_from_name(std::string_view name);

struct OrderingStrategy {
    Strategy kind = Strategy::Automorphisms;
    std::uint64_t rng_seed = 0;
    // Sorted strategies break ties by canonical graph6 string; with this
    // flag they shuffle first and sort stably, so ties land in seeded
    // random order.  The ordering experiment runs in this mode.
    bool randomize_ties = false;
};

struct SearchStats {
    std::uint64_t subiso_calls = 0;
    std::uint64_t candidates_tested = 0;
    std::uint64_t universal_found = 0;

    void merge(const SearchStats& o)
    {
        subiso_calls += o.subiso_calls;
        candidates_tested += o.candidates_tested;
        universal_found += o.universal_found;
    }

    bool operator==(const SearchStats&) const = default;
};

enum class FamilyKind { AllGraphs, Trees };

GraphFamily order_family(const GraphFamily& family, const OrderingStrategy& strategy);

// Walks the ordered family, one solver call per member, stopping at the
// first non-contained member.  Only subiso_calls is touched here.
bool is_induced_universal(const GraphFamily& ordered_family, const Graph& g, SearchStats& stats);

// Scans the whole candidate stream and returns the universal candidates
// sorted by canonical graph6 string.  jobs > 1 splits the scan across
// threads; the result list and the subiso_calls total are the same either
// way.  Throws if the stream mixes graph orders.
std::vector<Graph> all_induced_universal_graphs(const GraphFamily& ordered_family,
                                                GraphStream& candidates, SearchStats& stats,
                                                int jobs = 1);

int known_lower_bound(int k, FamilyKind kind);

// Candidate source per order; returns nullopt if the caller has nothing
// for that order (minimal_universal_search treats that as an error).
using CandidateProvider = std::function<std::optional<GraphStream>(int order)>;

struct MinimalSearchResult {
    int order = -1;
    std::vector<Graph> graphs;
    SearchStats stats;
};

// Tries orders upward from known_lower_bound(k, kind) until some candidate
// is universal.
MinimalSearchResult minimal_universal_search(const GraphFamily& family, int k, FamilyKind kind,
                                             const CandidateProvider& provider, int jobs = 1);

struct ExperimentRow {
    Strategy strategy = Strategy::Automorphisms;
    int trial = 0;
    std::uint64_t seed = 0;
    std::uint64_t subiso_calls = 0;
    std::uint64_t universal_found = 0;
};

struct ExperimentTable {
    std::vector<ExperimentRow> rows;
    double mean_calls(Strategy s) const;
};

// One full scan per (strategy, trial).  A trial's shuffle seed is shared
// by every strategy, so strategies that differ only in their sort key
// coincide row for row whenever the keys tie.
ExperimentTable ordering_experiment(const GraphFamily& family, const std::vector<Graph>& candidates,
                                    const std::vector<Strategy>& strategies, int trials,
                                    std::uint64_t base_seed, int jobs = 1);

// Columns strategy,trial,seed,calls plus one mean row per strategy.
std::string experiment_csv(const ExperimentTable& table);

}  // namespace univg
