#include "univg/graph.hpp"

#include <stdexcept>
#include <string>

namespace univg {

Graph::Graph(int order)
{
    if (order < 0 || order > max_order)
        throw std::invalid_argument("graph order must be in 0..64, got " + std::to_string(order));
    order_ = order;
    rows_.assign(static_cast<std::size_t>(order), 0);
}

void Graph::check_pair(int v, int w) const
{
    if (v < 0 || v >= order_ || w < 0 || w >= order_)
        throw std::out_of_range("vertex index out of range");
    if (v == w)
        throw std::invalid_argument("self-loops are not representable");
}

bool Graph::has_edge(int v, int w) const
{
    check_pair(v, w);
    return rows_[v] >> w & 1;
}

void Graph::set_edge(int v, int w, bool present)
{
    check_pair(v, w);
    if (present) {
        rows_[v] |= 1ull << w;
        rows_[w] |= 1ull << v;
    } else {
        rows_[v] &= ~(1ull << w);
        rows_[w] &= ~(1ull << v);
    }
}

int Graph::edge_count() const
{
    int twice = 0;
    for (auto r : rows_) twice += std::popcount(r);
    return twice / 2;
}

bool Graph::operator<(const Graph& o) const
{
    if (order_ != o.order_) return order_ < o.order_;
    return rows_ < o.rows_;
}

Graph complement(const Graph& g)
{
    int n = g.order();
    Graph c(n);
    std::uint64_t all = VertexSet::range(n).bits;
    for (int v = 0; v < n; ++v) {
        std::uint64_t r = ~g.row(v) & all & ~(1ull << v);
        for (int w = v + 1; w < n; ++w)
            if (r >> w & 1) c.add_edge(v, w);
    }
    return c;
}

Graph induced_subgraph(const Graph& g, VertexSet keep)
{
    keep.bits &= VertexSet::range(g.order()).bits;
    int m = keep.count();
    std::vector<int> verts;
    verts.reserve(static_cast<std::size_t>(m));
    for (int v = 0; v < g.order(); ++v)
        if (keep.contains(v)) verts.push_back(v);

    Graph h(m);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (g.row(verts[i]) >> verts[j] & 1) h.add_edge(i, j);
    return h;
}

Graph flip_edge(const Graph& g, int v, int w)
{
    Graph h = g;
    h.set_edge(v, w, !g.has_edge(v, w));  // has_edge validates v != w and range
    return h;
}

int edge_extremeness(const Graph& g)
{
    int n = g.order();
    int twice_e = 2 * g.edge_count();
    int pairs = n * (n - 1) / 2;
    return twice_e >= pairs ? twice_e - pairs : pairs - twice_e;
}

Graph empty_graph(int n) { return Graph(n); }

Graph complete_graph(int n)
{
    Graph g(n);
    for (int v = 0; v < n; ++v)
        for (int w = v + 1; w < n; ++w) g.add_edge(v, w);
    return g;
}

Graph path_graph(int n)
{
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph cycle_graph(int n)
{
    Graph g = path_graph(n);
    if (n >= 3) g.add_edge(n - 1, 0);
    return g;
}

Graph star_graph(int n)
{
    Graph g(n);
    for (int v = 1; v < n; ++v) g.add_edge(0, v);
    return g;
}

Graph from_edges(int n, std::initializer_list<std::pair<int, int>> edges)
{
    Graph g(n);
    for (auto [v, w] : edges) g.add_edge(v, w);
    return g;
}

Graph add_isolated_vertex(const Graph& g)
{
    Graph h(g.order() + 1);
    for (int v = 0; v < g.order(); ++v)
        for (int w = v + 1; w < g.order(); ++w)
            if (g.row(v) >> w & 1) h.add_edge(v, w);
    return h;
}

}  // namespace univg
