#include "univg/heuristic.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <unordered_map>

#include "univg/iso.hpp"
#include "univg/rng.hpp"
#include "univg/verify.hpp"

namespace univg {

namespace {

using Clock = std::chrono::steady_clock;

bool pair_less(const std::pair<int, int>& a, const std::pair<int, int>& b) { return a < b; }

// free-pair assignment packed into words; the score cache key
struct FreeBits {
    std::vector<std::uint64_t> w;

    bool operator==(const FreeBits&) const = default;

    void flip(std::size_t i) { w[i >> 6] ^= 1ull << (i & 63); }
    bool get(std::size_t i) const { return w[i >> 6] >> (i & 63) & 1; }
};

struct FreeBitsHash {
    std::size_t operator()(const FreeBits& b) const
    {
        std::uint64_t h = 0xcbf29ce484222325ull;
        for (std::uint64_t x : b.w) {
            h ^= x;
            h *= 0x100000001b3ull;
        }
        return static_cast<std::size_t>(h);
    }
};

struct RestartOutcome {
    bool success = false;
    Graph graph;
    std::uint64_t flips = 0;
    std::uint64_t solver_calls = 0;
    std::uint64_t cache_hits = 0;
    bool hit_deadline = false;
};

RestartOutcome run_restart(const GraphFamily& ordered, const SeedTemplate& tmpl,
                           std::uint64_t seed, const ClimbConfig& cfg, Clock::time_point deadline)
{
    RestartOutcome out;
    SplitMix64 rng(seed);
    SearchStats stats;
    int fam = static_cast<int>(ordered.size());
    std::size_t nfree = tmpl.free_pairs.size();

    Graph g = tmpl.frozen_base;
    FreeBits bits{std::vector<std::uint64_t>((nfree + 63) / 64, 0)};
    for (std::size_t i = 0; i < nfree; ++i) {
        if (rng.unit() < tmpl.init_probability) {
            bits.flip(i);
            g.add_edge(tmpl.free_pairs[i].first, tmpl.free_pairs[i].second);
        }
    }

    // cached scores stay valid for the whole restart: the current score
    // never decreases, so a cached early-exit -1 still means "below any
    // future floor".  Cleared between restarts, where that stops holding.
    std::unordered_map<FreeBits, int, FreeBitsHash> cache;

    int cur = score(g, ordered, 0, &stats);
    cache.emplace(bits, cur);
    if (cfg.on_accept) cfg.on_accept(cur);

    if (cur != fam && nfree > 0) {
        for (int iter = 0; iter < cfg.max_iterations; ++iter) {
            if (Clock::now() >= deadline) {
                out.hit_deadline = true;
                break;
            }
            std::size_t pick = static_cast<std::size_t>(rng.below(nfree));
            auto [v, w] = tmpl.free_pairs[pick];
            bits.flip(pick);
            g.set_edge(v, w, bits.get(pick));
            ++out.flips;

            int s;
            if (auto it = cache.find(bits); it != cache.end()) {
                s = it->second;
                ++out.cache_hits;
            } else {
                s = score(g, ordered, cur, &stats);
                cache.emplace(bits, s);
            }

            if (s >= cur) {
                cur = s;
                if (cfg.on_accept) cfg.on_accept(cur);
                if (cur == fam) break;
            } else {
                bits.flip(pick);
                g.set_edge(v, w, bits.get(pick));
            }
        }
    }

    out.solver_calls = stats.subiso_calls;
    if (cur == fam) {
        out.success = true;
        out.graph = std::move(g);
    }
    return out;
}

}  // namespace

SeedTemplate make_seed_template(SeedKind kind, int k, int n)
{
    if (k < 1) throw std::invalid_argument("seed template needs k >= 1");
    if (n > Graph::max_order) throw std::invalid_argument("seed template needs n <= 64");

    SeedTemplate t;
    t.kind = kind;
    t.order = n;
    t.k = k;

    if (kind == SeedKind::CliqueIndependent) {
        if (n < 2 * k - 1)
            throw std::invalid_argument("clique-independent template needs n >= 2k-1");
        t.init_probability = 0.5;
        for (int v = 0; v < k; ++v)
            for (int w = v + 1; w < k; ++w) t.frozen_ones.emplace_back(v, w);
        for (int v = k - 1; v < 2 * k - 1; ++v)
            for (int w = v + 1; w < 2 * k - 1; ++w) t.frozen_zeros.emplace_back(v, w);
    } else {
        if (n < k) throw std::invalid_argument("star template needs n >= k");
        t.init_probability = 0.1;
        for (int v = 1; v < k; ++v) t.frozen_ones.emplace_back(0, v);
        for (int v = 1; v < k; ++v)
            for (int w = v + 1; w < k; ++w) t.frozen_zeros.emplace_back(v, w);
    }
    std::sort(t.frozen_ones.begin(), t.frozen_ones.end(), pair_less);
    std::sort(t.frozen_zeros.begin(), t.frozen_zeros.end(), pair_less);

    t.frozen_base = Graph(n);
    for (auto [v, w] : t.frozen_ones) t.frozen_base.add_edge(v, w);

    for (int v = 0; v < n; ++v) {
        for (int w = v + 1; w < n; ++w) {
            std::pair<int, int> p{v, w};
            if (!std::binary_search(t.frozen_ones.begin(), t.frozen_ones.end(), p) &&
                !std::binary_search(t.frozen_zeros.begin(), t.frozen_zeros.end(), p))
                t.free_pairs.push_back(p);
        }
    }
    return t;
}

int score(const Graph& g, const GraphFamily& ordered_family, int floor, SearchStats* stats)
{
    int count = static_cast<int>(ordered_family.size());
    if (floor > count)
        throw std::invalid_argument("score floor exceeds family size");
    for (const Graph& member : ordered_family) {
        if (stats) ++stats->subiso_calls;
        if (!induced_subgraph_iso(member, g)) {
            if (--count < floor) return -1;
        }
    }
    return count;
}

ClimbResult hill_climb(const GraphFamily& family, const SeedTemplate& tmpl,
                       const ClimbConfig& cfg)
{
    if (tmpl.order > 18)
        throw std::invalid_argument("hill_climb verifies winners; that needs order <= 18");
    auto start = Clock::now();
    auto deadline = start + std::chrono::duration_cast<Clock::duration>(
                                std::chrono::duration<double>(cfg.time_limit_seconds));

    GraphFamily ordered = order_family(family, {Strategy::Automorphisms, cfg.seed, false});

    ClimbResult res;
    std::mutex mu;
    std::uint64_t next_restart = 0;
    std::uint64_t best_success = ~0ull;
    std::map<std::uint64_t, Graph> winners;
    bool any_deadline = false;

    auto worker = [&] {
        for (;;) {
            std::uint64_t r;
            {
                std::lock_guard lock(mu);
                if (best_success <= next_restart) break;
                if (Clock::now() >= deadline) {
                    any_deadline = true;
                    break;
                }
                r = next_restart++;
            }
            RestartOutcome o =
                run_restart(ordered, tmpl, mix_seed(cfg.seed, r), cfg, deadline);
            std::lock_guard lock(mu);
            ++res.restarts;
            res.flips += o.flips;
            res.solver_calls += o.solver_calls;
            res.cache_hits += o.cache_hits;
            any_deadline |= o.hit_deadline;
            if (o.success && r < best_success) {
                best_success = r;
                winners.emplace(r, std::move(o.graph));
            }
        }
    };

    int jobs = std::max(1, cfg.jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    res.timed_out = any_deadline && best_success == ~0ull;
    res.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    if (best_success == ~0ull) return res;

    Graph& g = winners.at(best_success);
    if (!verify_universal(g, ordered).valid)
        throw std::logic_error("hill climb winner failed independent verification");
    res.success = true;
    res.winning_restart = best_success;
    res.graph = std::move(g);
    return res;
}

}  // namespace univg
