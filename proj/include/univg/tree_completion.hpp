#pragma once

#include <cstdint>
#include <vector>

#include "univg/graph.hpp"

namespace univg {

struct CompletionResult {
    // Canonical forms of the universal completions, sorted.
    std::vector<Graph> graphs;
    std::uint64_t sequences_enumerated = 0;
    std::uint64_t matrices_tested = 0;
    std::uint64_t subiso_calls = 0;
};

// Assembles an order-n candidate from completion coordinates: the star
// K_{1,k-1} frozen on vertices 0..k-1 (hub 0), the tail block copied onto
// vertices k..n-1, and rows[i] giving star vertex i's tail adjacencies
// (bit b set means an edge to vertex k+b).
Graph make_graph(int n, int k, const std::vector<std::uint32_t>& rows, const Graph& tail);

// Universal graphs of order n for the trees on k vertices, up to
// isomorphism.  The star is itself a tree in the family, so a universal
// graph contains an induced copy and can be relabelled to start with the
// frozen block; fixing it loses no solutions.  Candidates then range over
// canonical tails, every hub row, and non-increasing leaf rows (the star's
// leaves are interchangeable, so sorted rows cover every completion up to
// isomorphism).  jobs > 1 splits the hub rows across threads; the result
// is the same either way.
CompletionResult complete_search(int n, int k, int jobs = 1);

// Same answer by brute force: every subset of the non-star pairs becomes a
// candidate, with no symmetry reduction at all.  Only feasible while
// k*(n-k) + C(n-k,2) stays small; the cross-check for complete_search.
CompletionResult naive_complete_search(int n, int k);

}  // namespace univg
