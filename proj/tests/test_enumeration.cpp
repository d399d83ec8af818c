#include <doctest.h>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "univg/enumeration.hpp"
#include "univg/graph.hpp"
#include "univg/graph6.hpp"
#include "univg/iso.hpp"

using namespace univg;

namespace {

bool is_connected(const Graph& g)
{
    if (g.order() == 0) return true;
    std::uint64_t seen = 1, frontier = 1;
    while (frontier) {
        std::uint64_t next = 0;
        for (int v = 0; v < g.order(); ++v)
            if (frontier >> v & 1) next |= g.row(v);
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == VertexSet::range(g.order()).bits;
}

// Inverse Prüfer map, smallest-leaf rule: every labelled tree on k >= 3
// vertices is hit by exactly one sequence.
Graph prufer_tree(const std::vector<int>& seq, int k)
{
    std::vector<int> deg(static_cast<std::size_t>(k), 1);
    for (int s : seq) ++deg[static_cast<std::size_t>(s)];
    Graph g(k);
    for (int s : seq) {
        for (int v = 0; v < k; ++v) {
            if (deg[static_cast<std::size_t>(v)] == 1) {
                g.add_edge(v, s);
                deg[static_cast<std::size_t>(v)] = 0;
                --deg[static_cast<std::size_t>(s)];
                break;
            }
        }
    }
    int first = -1;
    for (int v = 0; v < k; ++v) {
        if (deg[static_cast<std::size_t>(v)] == 1) {
            if (first < 0)
                first = v;
            else
                g.add_edge(first, v);
        }
    }
    return g;
}

std::set<Graph> trees_by_prufer(int k)
{
    std::set<Graph> classes;
    if (k == 1) {
        classes.insert(Graph(1));
        return classes;
    }
    if (k == 2) {
        classes.insert(complete_graph(2));
        return classes;
    }
    std::vector<int> seq(static_cast<std::size_t>(k) - 2, 0);
    for (;;) {
        classes.insert(canonical_form(prufer_tree(seq, k)));
        int i = static_cast<int>(seq.size()) - 1;
        while (i >= 0 && seq[static_cast<std::size_t>(i)] == k - 1)
            seq[static_cast<std::size_t>(i--)] = 0;
        if (i < 0) break;
        ++seq[static_cast<std::size_t>(i)];
    }
    return classes;
}

std::filesystem::path temp_file(const std::string& name)
{
    return std::filesystem::temp_directory_path() / name;
}

}  // namespace

TEST_SUITE("enumeration")
{
    TEST_CASE("class counts through order 8")
    {
        const std::size_t expected[] = {1, 1, 2, 4, 11, 34, 156, 1044, 12346};
        for (int n = 0; n <= 8; ++n) CHECK(all_graphs_list(n).size() == expected[n]);
    }

    TEST_CASE("representatives are canonical and pairwise distinct")
    {
        for (int n = 0; n <= 6; ++n) {
            const auto& reps = all_graphs_list(n);
            std::set<Graph> distinct(reps.begin(), reps.end());
            CHECK(distinct.size() == reps.size());
            for (const Graph& g : reps) CHECK(is_canonical(g));
        }
    }

    TEST_CASE("independent reconstruction of order 7")
    {
        // different dedup route: extend every order-6 representative by
        // every neighbourhood and collapse through canonical_form
        std::set<Graph> rebuilt;
        for (const Graph& parent : all_graphs_list(6)) {
            for (std::uint64_t mask = 0; mask < 64; ++mask) {
                Graph child = add_isolated_vertex(parent);
                for (int v = 0; v < 6; ++v)
                    if (mask >> v & 1) child.add_edge(v, 6);
                rebuilt.insert(canonical_form(child));
            }
        }
        const auto& reps = all_graphs_list(7);
        CHECK(rebuilt.size() == reps.size());
        CHECK(rebuilt == std::set<Graph>(reps.begin(), reps.end()));
    }

    TEST_CASE("stream and list agree")
    {
        GraphStream s = all_graphs(6);
        std::size_t i = 0;
        while (auto g = s.next()) {
            CHECK(*g == all_graphs_list(6)[i]);
            ++i;
        }
        CHECK(i == 156);
    }

    TEST_CASE("internal generation stops at order 8")
    {
        CHECK_THROWS_AS(all_graphs_list(9), std::invalid_argument);
        CHECK_THROWS_AS(all_graphs(9), std::invalid_argument);
    }

    TEST_CASE("extension emits exactly the next order's classes")
    {
        GraphStream parents = all_graphs(4);
        std::vector<Graph> children;
        std::uint64_t emitted =
            extend_representatives(parents, [&](const Graph& g) { children.push_back(g); });
        CHECK(emitted == 34);
        CHECK(children == all_graphs_list(5));
    }

    TEST_CASE("extension relabels non-canonical parents first")
    {
        // reversed labelling is rarely canonical; the child classes must
        // come out identical anyway
        std::size_t idx = 0;
        const auto& parents = all_graphs_list(4);
        GraphStream reversed([&]() -> std::optional<Graph> {
            if (idx == parents.size()) return std::nullopt;
            const Graph& g = parents[idx++];
            Graph h(4);
            for (int v = 0; v < 4; ++v)
                for (int w = v + 1; w < 4; ++w)
                    if (g.has_edge(v, w)) h.add_edge(3 - v, 3 - w);
            return h;
        });
        std::vector<Graph> children;
        extend_representatives(reversed, [&](const Graph& g) { children.push_back(g); });
        std::set<Graph> got(children.begin(), children.end());
        CHECK(got == std::set<Graph>(all_graphs_list(5).begin(), all_graphs_list(5).end()));
    }
}

TEST_SUITE("graph_files")
{
    TEST_CASE("file round trip with blank lines")
    {
        auto path = temp_file("univg_roundtrip.g6");
        {
            std::ofstream out(path);
            out << "\n";
            for (const Graph& g : all_graphs_list(5)) out << encode_graph6(g) << "\n";
            out << "\n";
        }
        GraphStream s = graphs_from_file(path, 5);
        std::vector<Graph> got;
        while (auto g = s.next()) got.push_back(*g);
        CHECK(got == all_graphs_list(5));
        std::filesystem::remove(path);
    }

    TEST_CASE("decode failures carry the file name and line number")
    {
        auto path = temp_file("univg_bad.g6");
        {
            std::ofstream out(path);
            out << "DCs\nDC\n";
        }
        GraphStream s = graphs_from_file(path, 5);
        CHECK(s.next().has_value());
        try {
            s.next();
            FAIL("expected a decode error");
        } catch (const std::runtime_error& e) {
            std::string msg = e.what();
            CHECK(msg.find("univg_bad.g6:2") != std::string::npos);
        }
        std::filesystem::remove(path);
    }

    TEST_CASE("order mismatches are rejected with the line number")
    {
        auto path = temp_file("univg_mixed.g6");
        {
            std::ofstream out(path);
            out << "DCs\nA_\n";
        }
        GraphStream s = graphs_from_file(path, 5);
        CHECK(s.next().has_value());
        try {
            s.next();
            FAIL("expected an order mismatch");
        } catch (const std::runtime_error& e) {
            std::string msg = e.what();
            CHECK(msg.find(":2") != std::string::npos);
            CHECK(msg.find("expected 5") != std::string::npos);
        }
        std::filesystem::remove(path);
    }

    TEST_CASE("missing files fail at stream creation")
    {
        CHECK_THROWS_AS(graphs_from_file("/nonexistent/univg.g6", 5), std::runtime_error);
    }
}

TEST_SUITE("trees")
{
    TEST_CASE("class counts through order 10")
    {
        const std::size_t expected[] = {0, 1, 1, 1, 2, 3, 6, 11, 23, 47, 106};
        for (int k = 1; k <= 10; ++k) CHECK(all_trees(k).size() == expected[k]);
        CHECK_THROWS_AS(all_trees(0), std::invalid_argument);
        CHECK_THROWS_AS(all_trees(11), std::invalid_argument);
    }

    TEST_CASE("members are canonical trees")
    {
        for (int k = 1; k <= 8; ++k) {
            for (const Graph& t : all_trees(k)) {
                CHECK(t.order() == k);
                CHECK(t.edge_count() == k - 1);
                CHECK(is_connected(t));
                CHECK(is_canonical(t));
            }
        }
    }

    TEST_CASE("leaf attachment matches the Prufer oracle")
    {
        for (int k = 1; k <= 8; ++k) {
            const auto& production = all_trees(k);
            std::set<Graph> got(production.begin(), production.end());
            CHECK(got.size() == production.size());
            CHECK(got == trees_by_prufer(k));
        }
    }

    TEST_CASE("path and star are always present")
    {
        for (int k = 2; k <= 9; ++k) {
            const auto& trees = all_trees(k);
            auto has = [&](const Graph& g) {
                Graph c = canonical_form(g);
                for (const Graph& t : trees)
                    if (t == c) return true;
                return false;
            };
            CHECK(has(path_graph(k)));
            CHECK(has(star_graph(k)));
        }
    }
}

TEST_SUITE("small_matrices")
{
    TEST_CASE("tail tables are the canonical lists")
    {
        CHECK(small_canonical_matrices(0).size() == 1);
        CHECK(small_canonical_matrices(1).size() == 1);
        CHECK(small_canonical_matrices(2).size() == 2);
        CHECK(small_canonical_matrices(4).size() == 11);
        CHECK(small_canonical_matrices(5).size() == 34);
        CHECK(small_canonical_matrices(3) == all_graphs_list(3));
        CHECK_THROWS_AS(small_canonical_matrices(6), std::invalid_argument);
    }
}
