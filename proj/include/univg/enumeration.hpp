#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <vector>

#include "univg/graph.hpp"

namespace univg {

// Pull-based candidate source.  File-backed streams decode one line at a
// time, so a scan over millions of candidates holds one graph in memory.
class GraphStream {
public:
    explicit GraphStream(std::function<std::optional<Graph>()> pull) : pull_(std::move(pull)) {}

    std::optional<Graph> next() { return pull_(); }

private:
    std::function<std::optional<Graph>()> pull_;
};

// All canonical representatives of order n, n <= 8, isomorph-free by
// construction (a child is kept iff it equals its canonical_form).  The
// underlying lists are cached process-wide.
GraphStream all_graphs(int n);
const std::vector<Graph>& all_graphs_list(int n);

// Streams a graph6 file, one graph per line; blank lines are skipped.
// Decode failures and order mismatches are reported with the line number.
GraphStream graphs_from_file(const std::filesystem::path& path, int expected_order);

// Extends order-(n-1) representatives one vertex at a time, emitting each
// canonical child.  This is how candidate files for orders 9 and 10 get
// produced; parents arriving in a non-canonical labelling are relabelled
// first.  Returns the number of graphs emitted.
std::uint64_t extend_representatives(GraphStream& parents,
                                     const std::function<void(const Graph&)>& sink);

// Free trees on k vertices, 1 <= k <= 10, as canonical forms in a
// deterministic order.  Generated by leaf attachment: every tree of order
// j extends a tree of order j-1, so extending every representative at
// every vertex and deduplicating covers the class.
std::vector<Graph> all_trees(int k);

// Canonical adjacency matrices of order m <= 5; the tail blocks of the
// completion search.
std::vector<Graph> small_canonical_matrices(int m);

}  // namespace univg
