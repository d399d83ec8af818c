#include "univg/tree_completion.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>

#include "univg/enumeration.hpp"
#include "univg/iso.hpp"
#include "univg/search.hpp"

namespace univg {

namespace {

void check_shape(int n, int k)
{
    if (k < 1) throw std::invalid_argument("completion: k must be at least 1");
    if (n < k)
        throw std::invalid_argument("completion: order " + std::to_string(n) +
                                    " is below the star order " + std::to_string(k));
}

Graph star_block(int n, int k)
{
    Graph g(n);
    for (int j = 1; j < k; ++j) g.add_edge(0, j);
    return g;
}

// Advances leaf (rows for star vertices 1..k-1) to the next non-increasing
// sequence below `top`; returns false once the last one has been visited.
bool next_leaf_rows(std::vector<std::uint32_t>& leaf, std::uint32_t top)
{
    for (int i = static_cast<int>(leaf.size()) - 1; i >= 0; --i) {
        std::uint32_t bound = i == 0 ? top - 1 : leaf[static_cast<std::size_t>(i) - 1];
        if (leaf[static_cast<std::size_t>(i)] < bound) {
            ++leaf[static_cast<std::size_t>(i)];
            std::fill(leaf.begin() + i + 1, leaf.end(), 0u);
            return true;
        }
    }
    return false;
}

}  // namespace

Graph make_graph(int n, int k, const std::vector<std::uint32_t>& rows, const Graph& tail)
{
    check_shape(n, k);
    int m = n - k;
    if (tail.order() != m)
        throw std::invalid_argument("completion: tail has order " + std::to_string(tail.order()) +
                                    ", expected " + std::to_string(m));
    if (static_cast<int>(rows.size()) != k)
        throw std::invalid_argument("completion: got " + std::to_string(rows.size()) +
                                    " rows, expected one per star vertex");
    for (std::uint32_t r : rows)
        if (m < 32 && (r >> m) != 0)
            throw std::invalid_argument("completion: row has bits beyond the tail");

    Graph g = star_block(n, k);
    for (int i = 0; i < k; ++i)
        for (int b = 0; b < m; ++b)
            if (rows[static_cast<std::size_t>(i)] >> b & 1u) g.add_edge(i, k + b);
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b)
            if (tail.has_edge(a, b)) g.add_edge(k + a, k + b);
    return g;
}

CompletionResult complete_search(int n, int k, int jobs)
{
    check_shape(n, k);
    if (n > 12) throw std::invalid_argument("completion: canonical dedup needs order <= 12");
    int m = n - k;
    if (m > 5)
        throw std::invalid_argument("completion: tail order " + std::to_string(m) +
                                    " exceeds the canonical matrix table");

    const GraphFamily family =
        order_family(all_trees(k), OrderingStrategy{Strategy::Automorphisms});
    const std::vector<Graph> tails = small_canonical_matrices(m);
    const std::uint32_t top = std::uint32_t{1} << m;

    CompletionResult res;
    std::set<Graph> seen;
    std::mutex merge_mu;
    std::exception_ptr error;
    std::atomic<std::uint32_t> next_hub{0};

    auto worker = [&] {
        CompletionResult local;
        std::set<Graph> hits;
        std::vector<std::uint32_t> rows(static_cast<std::size_t>(k), 0u);
        SearchStats stats;
        try {
            for (;;) {
                std::uint32_t hub = next_hub.fetch_add(1);
                if (hub >= top) break;
                {
                    std::lock_guard lock(merge_mu);
                    if (error) break;
                }
                rows[0] = hub;
                std::vector<std::uint32_t> leaf(static_cast<std::size_t>(k) - 1, 0u);
                do {
                    std::copy(leaf.begin(), leaf.end(), rows.begin() + 1);
                    ++local.sequences_enumerated;
                    for (const Graph& tail : tails) {
                        Graph g = make_graph(n, k, rows, tail);
                        ++local.matrices_tested;
                        if (is_induced_universal(family, g, stats))
                            hits.insert(canonical_form(g));
                    }
                } while (next_leaf_rows(leaf, top));
            }
        } catch (...) {
            std::lock_guard lock(merge_mu);
            if (!error) error = std::current_exception();
        }
        std::lock_guard lock(merge_mu);
        res.sequences_enumerated += local.sequences_enumerated;
        res.matrices_tested += local.matrices_tested;
        res.subiso_calls += stats.subiso_calls;
        seen.merge(hits);
    };

    int pool_size = std::max(1, std::min(jobs, static_cast<int>(top)));
    if (pool_size == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < pool_size; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    if (error) std::rethrow_exception(error);

    res.graphs.assign(seen.begin(), seen.end());
    return res;
}

CompletionResult naive_complete_search(int n, int k)
{
    check_shape(n, k);
    if (n > 12) throw std::invalid_argument("completion: canonical dedup needs order <= 12");
    int m = n - k;
    int free_bits = k * m + m * (m - 1) / 2;
    if (free_bits > 30)
        throw std::invalid_argument("naive completion: 2^" + std::to_string(free_bits) +
                                    " candidates is out of reach");

    const GraphFamily family =
        order_family(all_trees(k), OrderingStrategy{Strategy::Automorphisms});

    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < k; ++i)
        for (int b = 0; b < m; ++b) pairs.emplace_back(i, k + b);
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b) pairs.emplace_back(k + a, k + b);

    const Graph base = star_block(n, k);
    CompletionResult res;
    std::set<Graph> seen;
    SearchStats stats;
    const std::uint64_t total = std::uint64_t{1} << free_bits;
    for (std::uint64_t bits = 0; bits < total; ++bits) {
        Graph g = base;
        for (std::size_t p = 0; p < pairs.size(); ++p)
            if (bits >> p & 1u) g.add_edge(pairs[p].first, pairs[p].second);
        ++res.sequences_enumerated;
        ++res.matrices_tested;
        if (is_induced_universal(family, g, stats)) seen.insert(canonical_form(g));
    }
    res.subiso_calls = stats.subiso_calls;
    res.graphs.assign(seen.begin(), seen.end());
    return res;
}

}  // namespace univg
