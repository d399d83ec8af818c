#include <doctest.h>

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "univg/enumeration.hpp"
#include "univg/graph.hpp"
#include "univg/graph6.hpp"
#include "univg/iso.hpp"
#include "univg/search.hpp"

using namespace univg;

namespace {

GraphStream stream_of(std::vector<Graph> graphs)
{
    auto idx = std::make_shared<std::size_t>(0);
    auto data = std::make_shared<std::vector<Graph>>(std::move(graphs));
    return GraphStream([idx, data]() -> std::optional<Graph> {
        if (*idx == data->size()) return std::nullopt;
        return (*data)[(*idx)++];
    });
}

std::set<std::string> graph6_set(const std::vector<Graph>& gs)
{
    std::set<std::string> out;
    for (const Graph& g : gs) out.insert(encode_graph6(g));
    return out;
}

// The five order-5 graphs that contain every order-3 graph, labelled as
// printed in their original presentation.
const std::vector<std::string> order5_universal_labelled{"DCs", "DC{", "DEk", "DEs", "DE{"};

}  // namespace

TEST_SUITE("ordering")
{
    TEST_CASE("strategy names round trip")
    {
        for (Strategy s : {Strategy::Automorphisms, Strategy::Edges, Strategy::AlmostRandom,
                           Strategy::Random})
            CHECK(strategy_from_name(strategy_name(s)) == s);
        CHECK_FALSE(strategy_from_name("alphabetical").has_value());
        CHECK(strategy_name(Strategy::AlmostRandom) == "almost-random");
    }

    TEST_CASE("automorphisms orders by descending group size")
    {
        GraphFamily fam = all_graphs_list(5);
        GraphFamily ordered = order_family(fam, {Strategy::Automorphisms, 0});
        REQUIRE(ordered.size() == 34);
        for (std::size_t i = 1; i < ordered.size(); ++i)
            CHECK(automorphism_count(ordered[i - 1]) >= automorphism_count(ordered[i]));
        // K5 and its complement tie at 120; the canonical-string tie-break
        // puts the empty graph first
        CHECK(ordered[0] == empty_graph(5));
        CHECK(ordered[1] == complete_graph(5));
    }

    TEST_CASE("edges orders by descending extremeness")
    {
        GraphFamily ordered = order_family(all_graphs_list(5), {Strategy::Edges, 0});
        for (std::size_t i = 1; i < ordered.size(); ++i)
            CHECK(edge_extremeness(ordered[i - 1]) >= edge_extremeness(ordered[i]));
        CHECK(ordered[0].edge_count() == 0);
        CHECK(ordered[1].edge_count() == 10);
    }

    TEST_CASE("almost-random fronts the complete then the empty member")
    {
        GraphFamily ordered = order_family(all_graphs_list(4), {Strategy::AlmostRandom, 123});
        REQUIRE(ordered.size() == 11);
        CHECK(ordered[0] == complete_graph(4));
        CHECK(ordered[1] == empty_graph(4));
    }

    TEST_CASE("random is a seeded permutation")
    {
        GraphFamily fam = all_graphs_list(5);
        GraphFamily a = order_family(fam, {Strategy::Random, 7});
        GraphFamily b = order_family(fam, {Strategy::Random, 7});
        GraphFamily c = order_family(fam, {Strategy::Random, 8});
        CHECK(a == b);
        CHECK(a != c);
        CHECK(std::is_permutation(a.begin(), a.end(), fam.begin()));
    }

    TEST_CASE("without complete or empty members almost-random equals random")
    {
        GraphFamily trees = all_trees(4);  // the path and the star, neither extreme
        for (std::uint64_t seed : {1ull, 2ull, 99ull})
            CHECK(order_family(trees, {Strategy::AlmostRandom, seed}) ==
                  order_family(trees, {Strategy::Random, seed}));
    }

    TEST_CASE("randomized ties keep the key order")
    {
        GraphFamily ordered =
            order_family(all_graphs_list(5), {Strategy::Automorphisms, 5, true});
        for (std::size_t i = 1; i < ordered.size(); ++i)
            CHECK(automorphism_count(ordered[i - 1]) >= automorphism_count(ordered[i]));
    }
}

TEST_SUITE("universal_search")
{
    TEST_CASE("universality walks the family with one call per member")
    {
        GraphFamily fam = order_family(all_graphs_list(3), {Strategy::Automorphisms, 0});
        SearchStats stats;
        CHECK(is_induced_universal(fam, decode_graph6("DCs"), stats));
        CHECK(stats.subiso_calls == 4);
        CHECK_FALSE(is_induced_universal(fam, complete_graph(5), stats));
        CHECK(stats.subiso_calls < 8);  // early exit spends fewer than 4 more
    }

    TEST_CASE("the empty family is universal by vacuity")
    {
        SearchStats stats;
        CHECK(is_induced_universal({}, Graph(0), stats));
        CHECK(stats.subiso_calls == 0);
    }

    TEST_CASE("order-5 scan for the order-3 family finds the known five")
    {
        GraphFamily fam = all_graphs_list(3);
        SearchStats stats;
        GraphStream cands = all_graphs(5);
        std::vector<Graph> hits = all_induced_universal_graphs(fam, cands, stats, 1);
        REQUIRE(hits.size() == 5);
        CHECK(stats.candidates_tested == 34);
        CHECK(stats.universal_found == 5);

        // the same five isomorphism classes as the published drawings
        std::set<std::string> expected;
        for (const std::string& s : order5_universal_labelled)
            expected.insert(canonical_graph6(decode_graph6(s)));
        std::set<std::string> got;
        for (const Graph& g : hits) got.insert(canonical_graph6(g));
        CHECK(got == expected);
        CHECK(got == std::set<std::string>{"D@[", "D@{", "DB[", "DBk", "DB{"});
    }

    TEST_CASE("no order-7 graph contains every order-4 graph")
    {
        GraphFamily fam = all_graphs_list(4);
        SearchStats stats;
        GraphStream cands = all_graphs(7);
        CHECK(all_induced_universal_graphs(fam, cands, stats, 1).empty());
        CHECK(stats.candidates_tested == 1044);
        CHECK(stats.universal_found == 0);
    }

    TEST_CASE("results are independent of the ordering strategy")
    {
        GraphFamily fam = all_graphs_list(3);
        std::optional<std::set<std::string>> reference;
        for (Strategy s : {Strategy::Automorphisms, Strategy::Edges, Strategy::AlmostRandom,
                           Strategy::Random}) {
            GraphFamily ordered = order_family(fam, {s, 31});
            SearchStats stats;
            GraphStream cands = all_graphs(5);
            auto hits = all_induced_universal_graphs(ordered, cands, stats, 1);
            auto key = graph6_set(hits);
            if (!reference)
                reference = key;
            else
                CHECK(*reference == key);
        }
    }

    TEST_CASE("parallel scan reproduces the sequential scan")
    {
        GraphFamily fam = order_family(all_graphs_list(3), {Strategy::Automorphisms, 0});
        SearchStats seq_stats, par_stats;
        GraphStream seq = all_graphs(5);
        GraphStream par = all_graphs(5);
        auto seq_hits = all_induced_universal_graphs(fam, seq, seq_stats, 1);
        auto par_hits = all_induced_universal_graphs(fam, par, par_stats, 3);
        CHECK(seq_hits == par_hits);
        CHECK(seq_stats.subiso_calls == par_stats.subiso_calls);
        CHECK(seq_stats.candidates_tested == par_stats.candidates_tested);
        CHECK(seq_stats.universal_found == par_stats.universal_found);
    }

    TEST_CASE("mixed-order candidate streams are rejected")
    {
        SearchStats stats;
        GraphStream mixed = stream_of({empty_graph(5), empty_graph(4)});
        CHECK_THROWS_AS(all_induced_universal_graphs(all_graphs_list(3), mixed, stats, 1),
                        std::invalid_argument);
    }

    TEST_CASE("an isolated vertex never breaks universality")
    {
        GraphFamily fam = order_family(all_graphs_list(3), {Strategy::Automorphisms, 0});
        for (const std::string& s : order5_universal_labelled) {
            Graph g = add_isolated_vertex(decode_graph6(s));
            SearchStats stats;
            CHECK(is_induced_universal(fam, g, stats));
        }
    }
}

TEST_SUITE("lower_bounds")
{
    TEST_CASE("all-graphs bounds match the published table")
    {
        CHECK(known_lower_bound(3, FamilyKind::AllGraphs) == 5);
        CHECK(known_lower_bound(4, FamilyKind::AllGraphs) == 8);
        CHECK(known_lower_bound(5, FamilyKind::AllGraphs) == 10);
        CHECK(known_lower_bound(6, FamilyKind::AllGraphs) == 14);
        CHECK(known_lower_bound(7, FamilyKind::AllGraphs) == 16);
    }

    TEST_CASE("small cases and trees")
    {
        CHECK(known_lower_bound(0, FamilyKind::AllGraphs) == 0);
        CHECK(known_lower_bound(1, FamilyKind::AllGraphs) == 1);
        CHECK(known_lower_bound(2, FamilyKind::AllGraphs) == 3);
        for (int k = 1; k <= 10; ++k) CHECK(known_lower_bound(k, FamilyKind::Trees) == k);
        CHECK_THROWS_AS(known_lower_bound(-1, FamilyKind::AllGraphs), std::invalid_argument);
    }
}

TEST_SUITE("minimal_search")
{
    TEST_CASE("ladder reproduces the first table rows")
    {
        auto provider = [](int order) -> std::optional<GraphStream> {
            if (order > 8) return std::nullopt;
            return all_graphs(order);
        };

        auto r1 = minimal_universal_search(all_graphs_list(1), 1, FamilyKind::AllGraphs,
                                           provider, 1);
        CHECK(r1.order == 1);
        CHECK(r1.graphs == std::vector<Graph>{Graph(1)});

        auto r2 = minimal_universal_search(all_graphs_list(2), 2, FamilyKind::AllGraphs,
                                           provider, 1);
        CHECK(r2.order == 3);
        CHECK(r2.graphs.size() == 2);

        auto r3 = minimal_universal_search(all_graphs_list(3), 3, FamilyKind::AllGraphs,
                                           provider, 1);
        CHECK(r3.order == 5);
        CHECK(r3.graphs.size() == 5);
        // the bound is tight here, so only order 5 was scanned
        CHECK(r3.stats.candidates_tested == 34);
    }

    TEST_CASE("trees on five vertices need order 7, with 18 solutions")
    {
        auto provider = [](int order) -> std::optional<GraphStream> {
            if (order > 8) return std::nullopt;
            return all_graphs(order);
        };
        auto res = minimal_universal_search(all_trees(5), 5, FamilyKind::Trees, provider, 1);
        CHECK(res.order == 7);
        CHECK(res.graphs.size() == 18);
        // orders 5 and 6 were exhausted on the way up
        CHECK(res.stats.candidates_tested == 34 + 156 + 1044);
    }

    TEST_CASE("a dry provider is an error")
    {
        auto provider = [](int) -> std::optional<GraphStream> { return std::nullopt; };
        CHECK_THROWS_AS(
            minimal_universal_search(all_graphs_list(4), 4, FamilyKind::AllGraphs, provider, 1),
            std::runtime_error);
    }
}

TEST_SUITE("experiment")
{
    TEST_CASE("per-trial seeds are shared across strategies")
    {
        GraphFamily fam = all_trees(4);
        std::vector<Graph> cands = all_graphs_list(6);
        const std::vector<Strategy> strategies{Strategy::Automorphisms, Strategy::Edges,
                                               Strategy::AlmostRandom, Strategy::Random};
        ExperimentTable table = ordering_experiment(fam, cands, strategies, 3, 99, 1);
        REQUIRE(table.rows.size() == 12);
        for (int t = 0; t < 3; ++t) {
            std::set<std::uint64_t> seeds;
            for (const ExperimentRow& r : table.rows)
                if (r.trial == t) seeds.insert(r.seed);
            CHECK(seeds.size() == 1);
        }
    }

    TEST_CASE("strategies that only tie coincide with random trial by trial")
    {
        // trees on 4 vertices: both members have extremeness 0 and the
        // family has no complete or empty member, so edges and
        // almost-random degenerate to the same shuffled scan
        GraphFamily fam = all_trees(4);
        std::vector<Graph> cands = all_graphs_list(6);
        const std::vector<Strategy> strategies{Strategy::Edges, Strategy::AlmostRandom,
                                               Strategy::Random};
        ExperimentTable table = ordering_experiment(fam, cands, strategies, 4, 2024, 1);
        for (int t = 0; t < 4; ++t) {
            std::set<std::uint64_t> calls;
            for (const ExperimentRow& r : table.rows)
                if (r.trial == t) calls.insert(r.subiso_calls);
            CHECK(calls.size() == 1);
        }
    }

    TEST_CASE("experiment tables are reproducible and csv is stable")
    {
        GraphFamily fam = all_graphs_list(3);
        std::vector<Graph> cands = all_graphs_list(5);
        const std::vector<Strategy> strategies{Strategy::Automorphisms, Strategy::Random};
        ExperimentTable a = ordering_experiment(fam, cands, strategies, 2, 5, 1);
        ExperimentTable b = ordering_experiment(fam, cands, strategies, 2, 5, 2);
        std::string csv_a = experiment_csv(a);
        CHECK(csv_a == experiment_csv(b));
        CHECK(csv_a.rfind("strategy,trial,seed,calls\n", 0) == 0);
        // 1 header + 4 data rows + 2 mean rows
        CHECK(std::count(csv_a.begin(), csv_a.end(), '\n') == 7);
        CHECK(csv_a.find("random,mean,,") != std::string::npos);
        CHECK(a.mean_calls(Strategy::Random) > 0.0);
    }

    TEST_CASE("every universal candidate is found in every trial")
    {
        GraphFamily fam = all_graphs_list(3);
        std::vector<Graph> cands = all_graphs_list(5);
        ExperimentTable table =
            ordering_experiment(fam, cands, {Strategy::Random}, 5, 17, 1);
        for (const ExperimentRow& r : table.rows) CHECK(r.universal_found == 5);
    }
}

TEST_SUITE("stats")
{
    TEST_CASE("merge is plain addition")
    {
        SearchStats a{10, 3, 1};
        SearchStats b{5, 2, 0};
        a.merge(b);
        CHECK(a == SearchStats{15, 5, 1});
    }
}
