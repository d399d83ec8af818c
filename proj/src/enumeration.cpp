#include "univg/enumeration.hpp"

#include <deque>
#include <fstream>
#include <memory>
#include <mutex>
#include <set>
#include <stdexcept>
#include <string>

#include "univg/graph6.hpp"
#include "univg/iso.hpp"

namespace univg {

namespace {

Graph extend(const Graph& parent, std::uint32_t mask)
{
    int n = parent.order() + 1;
    Graph child(n);
    for (int v = 0; v < parent.order(); ++v)
        for (int w = v + 1; w < parent.order(); ++w)
            if (parent.row(v) >> w & 1) child.add_edge(v, w);
    for (int v = 0; v < n - 1; ++v)
        if (mask >> v & 1) child.add_edge(v, n - 1);
    return child;
}

std::vector<Graph> children_of(const Graph& parent)
{
    std::vector<Graph> out;
    int nbhds = 1 << parent.order();
    for (std::uint32_t mask = 0; mask < static_cast<std::uint32_t>(nbhds); ++mask) {
        Graph child = extend(parent, mask);
        if (is_canonical(child)) out.push_back(child);
    }
    return out;
}

}  // namespace

const std::vector<Graph>& all_graphs_list(int n)
{
    if (n < 0 || n > 8)
        throw std::invalid_argument(
            "all_graphs handles n <= 8; supply a pre-generated graph6 file for larger orders");

    // deque: growing the cache must not move earlier entries, references to
    // them are handed out below
    static std::mutex mu;
    static std::deque<std::vector<Graph>> cache{{Graph(0)}};

    std::lock_guard lock(mu);
    while (static_cast<int>(cache.size()) <= n) {
        std::vector<Graph> next;
        for (const Graph& parent : cache.back())
            for (Graph& child : children_of(parent)) next.push_back(std::move(child));
        cache.push_back(std::move(next));
    }
    return cache[static_cast<std::size_t>(n)];
}

GraphStream all_graphs(int n)
{
    const std::vector<Graph>& list = all_graphs_list(n);
    auto idx = std::make_shared<std::size_t>(0);
    return GraphStream([&list, idx]() -> std::optional<Graph> {
        if (*idx >= list.size()) return std::nullopt;
        return list[(*idx)++];
    });
}

GraphStream graphs_from_file(const std::filesystem::path& path, int expected_order)
{
    auto in = std::make_shared<std::ifstream>(path);
    if (!*in)
        throw std::runtime_error("cannot open graph6 file: " + path.string());
    auto lineno = std::make_shared<std::uint64_t>(0);
    std::string fname = path.string();

    return GraphStream([in, lineno, fname, expected_order]() -> std::optional<Graph> {
        std::string line;
        while (std::getline(*in, line)) {
            ++*lineno;
            if (line.empty() || line == "\r") continue;
            Graph g;
            try {
                g = decode_graph6(line);
            } catch (const Graph6Error& e) {
                throw std::runtime_error(fname + ":" + std::to_string(*lineno) + ": " + e.what());
            }
            if (g.order() != expected_order)
                throw std::runtime_error(fname + ":" + std::to_string(*lineno) + ": graph of order " +
                                         std::to_string(g.order()) + ", expected " +
                                         std::to_string(expected_order));
            return g;
        }
        return std::nullopt;
    });
}

std::uint64_t extend_representatives(GraphStream& parents,
                                     const std::function<void(const Graph&)>& sink)
{
    std::uint64_t emitted = 0;
    while (auto p = parents.next()) {
        Graph parent = is_canonical(*p) ? *p : canonical_form(*p);
        for (const Graph& child : children_of(parent)) {
            sink(child);
            ++emitted;
        }
    }
    return emitted;
}

std::vector<Graph> all_trees(int k)
{
    if (k < 1 || k > 10)
        throw std::invalid_argument("all_trees handles 1 <= k <= 10");

    std::vector<Graph> cur{Graph(1)};
    for (int j = 2; j <= k; ++j) {
        std::set<Graph> next;
        for (const Graph& t : cur) {
            for (int v = 0; v < j - 1; ++v) {
                Graph x = add_isolated_vertex(t);
                x.add_edge(v, j - 1);
                next.insert(canonical_form(x));
            }
        }
        cur.assign(next.begin(), next.end());
    }
    return cur;
}

std::vector<Graph> small_canonical_matrices(int m)
{
    if (m < 0 || m > 5)
        throw std::invalid_argument("small_canonical_matrices handles m <= 5");
    return all_graphs_list(m);
}

}  // namespace univg
