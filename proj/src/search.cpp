#include "univg/search.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "univg/graph6.hpp"
#include "univg/iso.hpp"
#include "univg/rng.hpp"

namespace univg {

namespace {

bool is_complete_member(const Graph& g)
{
    return g.edge_count() == g.order() * (g.order() - 1) / 2;
}

bool is_empty_member(const Graph& g) { return g.edge_count() == 0; }

std::string sort_key(const Graph& g)
{
    // order <= 12 everywhere this project scans; beyond that fall back to
    // the raw encoding rather than refuse to sort
    return g.order() <= 12 ? canonical_graph6(g) : encode_graph6(g);
}

std::vector<Graph> sorted_by_key(std::vector<Graph> graphs)
{
    std::vector<std::pair<std::string, Graph>> keyed;
    keyed.reserve(graphs.size());
    for (Graph& g : graphs) keyed.emplace_back(sort_key(g), std::move(g));
    std::sort(keyed.begin(), keyed.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<Graph> out;
    out.reserve(keyed.size());
    for (auto& [k, g] : keyed) out.push_back(std::move(g));
    return out;
}

}  // namespace

std::string strategy_name(Strategy s)
{
    switch (s) {
        case Strategy::Automorphisms: return "automorphisms";
        case Strategy::Edges: return "edges";
        case Strategy::AlmostRandom: return "almost-random";
        case Strategy::Random: return "random";
    }
    return "?";
}

std::optional<Strategy> strategy_from_name(std::string_view name)
{
    if (name == "automorphisms") return Strategy::Automorphisms;
    if (name == "edges") return Strategy::Edges;
    if (name == "almost-random") return Strategy::AlmostRandom;
    if (name == "random") return Strategy::Random;
    return std::nullopt;
}

GraphFamily order_family(const GraphFamily& family, const OrderingStrategy& strategy)
{
    GraphFamily out = family;
    SplitMix64 rng(strategy.rng_seed);

    switch (strategy.kind) {
        case Strategy::Random: {
            seeded_shuffle(out, rng);
            return out;
        }
        case Strategy::AlmostRandom: {
            seeded_shuffle(out, rng);
            // complete and edgeless members jump the queue, complete first
            std::stable_partition(out.begin(), out.end(), is_empty_member);
            std::stable_partition(out.begin(), out.end(), is_complete_member);
            return out;
        }
        case Strategy::Automorphisms:
        case Strategy::Edges: {
            std::vector<std::uint64_t> key(out.size());
            for (std::size_t i = 0; i < out.size(); ++i)
                key[i] = strategy.kind == Strategy::Automorphisms
                             ? automorphism_count(out[i])
                             : static_cast<std::uint64_t>(edge_extremeness(out[i]));

            std::vector<std::size_t> idx(out.size());
            for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;

            if (strategy.randomize_ties) {
                seeded_shuffle(idx, rng);
                std::stable_sort(idx.begin(), idx.end(),
                                 [&](std::size_t a, std::size_t b) { return key[a] > key[b]; });
            } else {
                std::vector<std::string> canon(out.size());
                for (std::size_t i = 0; i < out.size(); ++i) canon[i] = sort_key(out[i]);
                std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
                    if (key[a] != key[b]) return key[a] > key[b];
                    return canon[a] < canon[b];
                });
            }
            GraphFamily ordered;
            ordered.reserve(out.size());
            for (std::size_t i : idx) ordered.push_back(family[i]);
            return ordered;
        }
    }
    return out;
}

bool is_induced_universal(const GraphFamily& ordered_family, const Graph& g, SearchStats& stats)
{
    for (const Graph& member : ordered_family) {
        ++stats.subiso_calls;
        if (!induced_subgraph_iso(member, g)) return false;
    }
    return true;
}

std::vector<Graph> all_induced_universal_graphs(const GraphFamily& ordered_family,
                                                GraphStream& candidates, SearchStats& stats,
                                                int jobs)
{
    std::mutex pull_mu;
    int expected_order = -1;

    auto pull = [&]() -> std::optional<Graph> {
        std::lock_guard lock(pull_mu);
        auto g = candidates.next();
        if (g) {
            if (expected_order < 0)
                expected_order = g->order();
            else if (g->order() != expected_order)
                throw std::invalid_argument("candidate stream mixes orders " +
                                            std::to_string(expected_order) + " and " +
                                            std::to_string(g->order()));
        }
        return g;
    };

    std::vector<Graph> found;
    if (jobs <= 1) {
        while (auto g = pull()) {
            ++stats.candidates_tested;
            if (is_induced_universal(ordered_family, *g, stats)) {
                ++stats.universal_found;
                found.push_back(std::move(*g));
            }
        }
        return sorted_by_key(std::move(found));
    }

    std::mutex merge_mu;
    std::exception_ptr error;
    auto worker = [&] {
        SearchStats local;
        std::vector<Graph> hits;
        try {
            for (;;) {
                std::optional<Graph> g;
                {
                    // stop promptly if another worker already failed
                    std::lock_guard lock(merge_mu);
                    if (error) break;
                }
                g = pull();
                if (!g) break;
                ++local.candidates_tested;
                if (is_induced_universal(ordered_family, *g, local)) {
                    ++local.universal_found;
                    hits.push_back(std::move(*g));
                }
            }
        } catch (...) {
            std::lock_guard lock(merge_mu);
            if (!error) error = std::current_exception();
        }
        std::lock_guard lock(merge_mu);
        stats.merge(local);
        for (Graph& g : hits) found.push_back(std::move(g));
    };

    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);

    return sorted_by_key(std::move(found));
}

int known_lower_bound(int k, FamilyKind kind)
{
    if (k < 0) throw std::invalid_argument("k must be nonnegative");
    if (kind == FamilyKind::Trees) return k;
    int b = std::max(k, 2 * k - 1);
    if (k >= 4) b = std::max(b, 2 * k);
    if (k >= 6) b = std::max(b, 2 * k + 2);
    return b;
}

MinimalSearchResult minimal_universal_search(const GraphFamily& family, int k, FamilyKind kind,
                                             const CandidateProvider& provider, int jobs)
{
    MinimalSearchResult res;
    for (int n = known_lower_bound(k, kind); n <= Graph::max_order; ++n) {
        auto stream = provider(n);
        if (!stream)
            throw std::runtime_error("no candidate source for order " + std::to_string(n));
        auto hits = all_induced_universal_graphs(family, *stream, res.stats, jobs);
        if (!hits.empty()) {
            res.order = n;
            res.graphs = std::move(hits);
            return res;
        }
    }
    throw std::runtime_error("no universal graph up to order 64; family unsatisfiable?");
}

double ExperimentTable::mean_calls(Strategy s) const
{
    double sum = 0;
    int n = 0;
    for (const ExperimentRow& r : rows)
        if (r.strategy == s) {
            sum += static_cast<double>(r.subiso_calls);
            ++n;
        }
    return n ? sum / n : 0.0;
}

ExperimentTable ordering_experiment(const GraphFamily& family, const std::vector<Graph>& candidates,
                                    const std::vector<Strategy>& strategies, int trials,
                                    std::uint64_t base_seed, int jobs)
{
    ExperimentTable table;
    table.rows.resize(strategies.size() * static_cast<std::size_t>(trials));

    auto run_row = [&](std::size_t row) {
        Strategy strat = strategies[row / trials];
        int trial = static_cast<int>(row % trials);
        std::uint64_t seed = mix_seed(base_seed, static_cast<std::uint64_t>(trial));

        GraphFamily ordered = order_family(family, {strat, seed, true});
        SearchStats stats;
        for (const Graph& g : candidates) {
            ++stats.candidates_tested;
            if (is_induced_universal(ordered, g, stats)) ++stats.universal_found;
        }
        table.rows[row] = {strat, trial, seed, stats.subiso_calls, stats.universal_found};
    };

    if (jobs <= 1) {
        for (std::size_t r = 0; r < table.rows.size(); ++r) run_row(r);
    } else {
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (;;) {
                std::size_t r = next.fetch_add(1);
                if (r >= table.rows.size()) break;
                run_row(r);
            }
        };
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    return table;
}

std::string experiment_csv(const ExperimentTable& table)
{
    std::string out = "strategy,trial,seed,calls\n";
    std::vector<Strategy> seen;
    for (const ExperimentRow& r : table.rows) {
        out += strategy_name(r.strategy);
        out += ',' + std::to_string(r.trial);
        out += ',' + std::to_string(r.seed);
        out += ',' + std::to_string(r.subiso_calls);
        out += '\n';
        if (std::find(seen.begin(), seen.end(), r.strategy) == seen.end())
            seen.push_back(r.strategy);
    }
    for (Strategy s : seen) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.1f", table.mean_calls(s));
        out += strategy_name(s);
        out += ",mean,,";
        out += buf;
        out += '\n';
    }
    return out;
}

}  // namespace univg
