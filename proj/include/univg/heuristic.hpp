#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "univg/graph.hpp"
#include "univg/search.hpp"

namespace univg {

enum class SeedKind { CliqueIndependent, Star };

// Frozen regions plus the free pairs the climber may flip.  The three pair
// lists partition all C(n,2) vertex pairs.
struct SeedTemplate {
    SeedKind kind = SeedKind::CliqueIndependent;
    int order = 0;
    int k = 0;
    double init_probability = 0.5;
    Graph frozen_base;  // frozen ones set, all free pairs absent
    std::vector<std::pair<int, int>> frozen_ones;
    std::vector<std::pair<int, int>> frozen_zeros;
    std::vector<std::pair<int, int>> free_pairs;
};

// CliqueIndependent: K_k on {0..k-1} and I_k on {k-1..2k-2} sharing vertex
// k-1, free pairs start at density 1/2; needs n >= 2k-1.  Star: vertex 0
// joined to 1..k-1 with the leaves pairwise frozen apart, density 0.1;
// needs n >= k.
SeedTemplate make_seed_template(SeedKind kind, int k, int n);

// Containment count with early exit: counts down from |family| on each
// miss and returns -1 as soon as the count cannot reach floor any more.
int score(const Graph& g, const GraphFamily& ordered_family, int floor,
          SearchStats* stats = nullptr);

struct ClimbConfig {
    std::uint64_t seed = 0;
    int max_iterations = 1000;  // flips per restart
    double time_limit_seconds = 60.0;
    int jobs = 1;
    std::function<void(int)> on_accept;  // observer for accepted scores
};

struct ClimbResult {
    bool success = false;
    Graph graph;  // meaningful only on success; has passed verify_universal
    std::uint64_t restarts = 0;
    std::uint64_t flips = 0;
    std::uint64_t solver_calls = 0;
    std::uint64_t cache_hits = 0;
    std::uint64_t winning_restart = 0;
    bool timed_out = false;
    double seconds = 0.0;
};

// Restarted stochastic hill climbing over the free region.  The family is
// ordered by the Automorphisms strategy internally.  Restart r derives its
// generator from (seed, r), so a given seed fixes every flip sequence and,
// when the time limit does not cut a restart short, the outcome; with
// jobs > 1 the lowest-numbered successful restart wins regardless of
// scheduling.  Requires order <= 18 so the winner can be verified.
ClimbResult hill_climb(const GraphFamily& family, const SeedTemplate& tmpl,
                       const ClimbConfig& cfg);

}  // namespace univg
