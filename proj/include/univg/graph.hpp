#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <utility>
#include <vector>

namespace univg {

// Set of vertex indices in 0..63, stored as a bitmask.
struct VertexSet {
    std::uint64_t bits = 0;

    static VertexSet range(int n) { return {n >= 64 ? ~0ull : (1ull << n) - 1}; }
    static VertexSet of(std::initializer_list<int> vs)
    {
        VertexSet s;
        for (int v : vs) s.add(v);
        return s;
    }

    bool contains(int v) const { return bits >> v & 1; }
    void add(int v) { bits |= 1ull << v; }
    void remove(int v) { bits &= ~(1ull << v); }
    int count() const { return std::popcount(bits); }
    bool empty() const { return bits == 0; }

    bool operator==(const VertexSet&) const = default;
};

// Undirected loop-free graph on at most 64 vertices, one adjacency bitmask
// per vertex.  Rows stay symmetric and bits at or above order() stay clear;
// everything downstream (the solvers in particular) relies on that.
class Graph {
public:
    static constexpr int max_order = 64;

    Graph() = default;
    explicit Graph(int order);

    int order() const { return order_; }
    std::uint64_t row(int v) const { return rows_[v]; }

    bool has_edge(int v, int w) const;
    void set_edge(int v, int w, bool present);
    void add_edge(int v, int w) { set_edge(v, w, true); }
    void remove_edge(int v, int w) { set_edge(v, w, false); }

    int degree(int v) const { return std::popcount(rows_[v]); }
    int edge_count() const;

    bool operator==(const Graph&) const = default;
    bool operator<(const Graph& o) const;  // order, then rows; an arbitrary total order

private:
    int order_ = 0;
    std::vector<std::uint64_t> rows_;

    void check_pair(int v, int w) const;
};

Graph complement(const Graph& g);
// Keeps the vertices in `keep`, relabelled by ascending original index.
Graph induced_subgraph(const Graph& g, VertexSet keep);
Graph flip_edge(const Graph& g, int v, int w);
// |2|E| - C(n,2)|: how far the edge count sits from the middle of its range.
int edge_extremeness(const Graph& g);

Graph empty_graph(int n);
Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph star_graph(int n);  // hub at vertex 0
Graph from_edges(int n, std::initializer_list<std::pair<int, int>> edges);
Graph add_isolated_vertex(const Graph& g);

}  // namespace univg
