#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "univg/graph.hpp"

namespace univg {

// Injective map from pattern vertices to target vertices: map[v] is the
// target vertex that pattern vertex v lands on.
struct Embedding {
    std::vector<int> map;

    bool operator==(const Embedding&) const = default;
};

// One McSplit label class: pattern vertices and target vertices that share
// the same adjacency signature towards the matched vertices.
struct LabelClass {
    VertexSet pattern, target;
};
using LabelClassPartition = std::vector<LabelClass>;

// Induced subgraph isomorphism decision: does pattern embed into target so
// that both edges and non-edges are preserved?  Branch-and-bound over label
// classes; deterministic branching, no randomness.
bool induced_subgraph_iso(const Graph& pattern, const Graph& target);

// Same search, but returns the first embedding found (deterministic).
std::optional<Embedding> find_embedding(const Graph& pattern, const Graph& target);

bool is_isomorphic(const Graph& a, const Graph& b);

// Number of automorphisms, order <= 10.
std::uint64_t automorphism_count(const Graph& g);

// Canonical representative of the isomorphism class, order <= 12: the
// relabelling whose upper-triangle adjacency bit string (graph6 column
// order) is lexicographically smallest.  Two graphs are isomorphic iff
// their canonical forms compare equal.
Graph canonical_form(const Graph& g);

// g == canonical_form(g), but bails out as soon as a smaller relabelling
// turns up.  This is the acceptance rule of the isomorph-free generator.
bool is_canonical(const Graph& g);

// encode_graph6(canonical_form(g)); the sort key used for result lists.
std::string canonical_graph6(const Graph& g);

// Independent checker: plain backtracking over injective maps with
// per-vertex candidate masks.  No label classes, no bound.  Kept separate
// from the solver above on purpose; verification leans on it.
// pattern order <= 8, target order <= 18.
bool naive_induced_iso(const Graph& pattern, const Graph& target);
std::optional<Embedding> naive_find_embedding(const Graph& pattern, const Graph& target);

}  // namespace univg
