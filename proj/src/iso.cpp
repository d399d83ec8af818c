#include "univg/iso.hpp"

#include <algorithm>
#include <bit>
#include <cstring>
#include <stdexcept>

#include "univg/graph6.hpp"

namespace univg {

namespace {

// ---------------------------------------------------------------------
// McSplit-style branch and bound, specialised to the induced subgraph
// isomorphism decision: every pattern vertex must be matched, so we can
// prune as soon as the bound (matched + sum over classes of the smaller
// side) drops below the pattern order.  That same argument removes the
// usual "leave v unmatched" branch entirely.
// ---------------------------------------------------------------------
struct McSolver {
    int np = 0, nt = 0;
    std::uint64_t prow[64], trow[64];
    int pdeg[64];
    int assign[64];
    LabelClass cls[65][64];
    int ncls[65];

    bool search(int depth)
    {
        if (depth == np) return true;

        int m = ncls[depth];
        int bound = depth;
        for (int i = 0; i < m; ++i)
            bound += std::min(cls[depth][i].pattern.count(), cls[depth][i].target.count());
        if (bound < np) return false;

        // branch on the class with the fewest target vertices, and inside
        // it on the pattern vertex of largest degree; ties by index
        int pick = 0, pick_size = 65;
        for (int i = 0; i < m; ++i) {
            int tc = cls[depth][i].target.count();
            if (tc < pick_size) {
                pick_size = tc;
                pick = i;
            }
        }
        int v = -1, vdeg = -1;
        for (std::uint64_t pm = cls[depth][pick].pattern.bits; pm;) {
            int u = std::countr_zero(pm);
            pm &= pm - 1;
            if (pdeg[u] > vdeg) {
                vdeg = pdeg[u];
                v = u;
            }
        }

        for (std::uint64_t tm = cls[depth][pick].target.bits; tm;) {
            int w = std::countr_zero(tm);
            tm &= tm - 1;

            int nc = 0;
            bool dead = false;
            for (int i = 0; i < m && !dead; ++i) {
                std::uint64_t p0 = cls[depth][i].pattern.bits & ~(1ull << v);
                std::uint64_t t0 = cls[depth][i].target.bits & ~(1ull << w);
                std::uint64_t pa = p0 & prow[v], pb = p0 & ~prow[v];
                if (pa) {
                    std::uint64_t ta = t0 & trow[w];
                    if (!ta)
                        dead = true;
                    else
                        cls[depth + 1][nc++] = {{pa}, {ta}};
                }
                if (pb) {
                    std::uint64_t tb = t0 & ~trow[w];
                    if (!tb)
                        dead = true;
                    else
                        cls[depth + 1][nc++] = {{pb}, {tb}};
                }
            }
            if (dead) continue;

            ncls[depth + 1] = nc;
            assign[v] = w;
            if (search(depth + 1)) return true;
        }
        return false;
    }

    bool run(const Graph& pattern, const Graph& target, Embedding* out)
    {
        np = pattern.order();
        nt = target.order();
        if (np == 0) {
            if (out) out->map.clear();
            return true;
        }
        if (np > nt) return false;

        for (int v = 0; v < np; ++v) {
            prow[v] = pattern.row(v);
            pdeg[v] = std::popcount(prow[v]);
        }
        for (int w = 0; w < nt; ++w) trow[w] = target.row(w);

        cls[0][0] = {VertexSet::range(np), VertexSet::range(nt)};
        ncls[0] = 1;
        if (!search(0)) return false;
        if (out) out->map.assign(assign, assign + np);
        return true;
    }
};

// ---------------------------------------------------------------------
// Canonical form search.  Positions are filled left to right; placing a
// vertex at position j appends its adjacency towards positions 0..j-1
// (position 0 as the most significant bit) to the candidate string, which
// is exactly the graph6 column order, so prefix pruning is exact.
// ---------------------------------------------------------------------
constexpr std::uint32_t seg_inf = 0xffffffffu;

struct CanonSearch {
    int n = 0;
    std::uint64_t rows[12];
    std::uint32_t best[12];
    int placed[12];
    std::uint64_t used = 0;
    bool test_only = false;
    bool smaller_found = false;

    bool twins(int a, int b) const
    {
        std::uint64_t x = rows[a] ^ rows[b];
        return x == 0 || x == ((1ull << a) | (1ull << b));
    }

    void rec(int j)
    {
        if (j == n) return;

        struct Cand {
            std::uint32_t seg;
            int u;
        };
        Cand cands[12];
        int nc = 0;
        for (int u = 0; u < n; ++u) {
            if (used >> u & 1) continue;
            std::uint32_t s = 0;
            for (int i = 0; i < j; ++i) s = s << 1 | (rows[u] >> placed[i] & 1);
            cands[nc++] = {s, u};
        }
        std::sort(cands, cands + nc,
                  [](const Cand& a, const Cand& b) { return a.seg != b.seg ? a.seg < b.seg : a.u < b.u; });

        int tried[12];
        int ntried = 0;
        for (int c = 0; c < nc; ++c) {
            if (cands[c].seg > best[j]) break;

            // interchangeable twins explore identical subtrees; keep one
            bool dup = false;
            for (int t = 0; t < ntried && !dup; ++t)
                dup = twins(tried[t], cands[c].u);
            if (dup) continue;

            if (cands[c].seg < best[j]) {
                if (test_only) {
                    smaller_found = true;
                    return;
                }
                best[j] = cands[c].seg;
                for (int jj = j + 1; jj < n; ++jj) best[jj] = seg_inf;
            }

            placed[j] = cands[c].u;
            used |= 1ull << cands[c].u;
            rec(j + 1);
            used &= ~(1ull << cands[c].u);
            if (smaller_found) return;
            tried[ntried++] = cands[c].u;
        }
    }

    void init(const Graph& g)
    {
        n = g.order();
        for (int v = 0; v < n; ++v) rows[v] = g.row(v);
        // seed the incumbent with the identity labelling
        for (int j = 0; j < n; ++j) {
            std::uint32_t s = 0;
            for (int i = 0; i < j; ++i) s = s << 1 | (rows[j] >> i & 1);
            best[j] = s;
        }
    }
};

void check_canon_order(const Graph& g, const char* what)
{
    if (g.order() > 12)
        throw std::invalid_argument(std::string(what) + " supports order <= 12 only");
}

}  // namespace

bool induced_subgraph_iso(const Graph& pattern, const Graph& target)
{
    McSolver s;
    return s.run(pattern, target, nullptr);
}

std::optional<Embedding> find_embedding(const Graph& pattern, const Graph& target)
{
    McSolver s;
    Embedding e;
    if (!s.run(pattern, target, &e)) return std::nullopt;
    return e;
}

bool is_isomorphic(const Graph& a, const Graph& b)
{
    // an induced embedding between equal orders is a bijection
    return a.order() == b.order() && induced_subgraph_iso(a, b);
}

std::uint64_t automorphism_count(const Graph& g)
{
    int n = g.order();
    if (n > 10)
        throw std::invalid_argument("automorphism_count supports order <= 10 only");
    if (n == 0) return 1;

    std::uint64_t rows[10], samedeg[10];
    for (int v = 0; v < n; ++v) rows[v] = g.row(v);
    for (int v = 0; v < n; ++v) {
        samedeg[v] = 0;
        for (int w = 0; w < n; ++w)
            if (std::popcount(rows[w]) == std::popcount(rows[v])) samedeg[v] |= 1ull << w;
    }

    std::uint64_t count = 0;
    int img[10];
    std::uint64_t full = (1ull << n) - 1;

    auto rec = [&](auto&& self, int d, std::uint64_t used) -> void {
        if (d == n) {
            ++count;
            return;
        }
        std::uint64_t cand = samedeg[d] & ~used & full;
        for (int u = 0; u < d && cand; ++u)
            cand &= (rows[d] >> u & 1) ? rows[img[u]] : ~rows[img[u]];
        while (cand) {
            int w = std::countr_zero(cand);
            cand &= cand - 1;
            img[d] = w;
            self(self, d + 1, used | 1ull << w);
        }
    };
    rec(rec, 0, 0);
    return count;
}

Graph canonical_form(const Graph& g)
{
    check_canon_order(g, "canonical_form");
    int n = g.order();
    if (n <= 1) return g;

    CanonSearch cs;
    cs.init(g);
    cs.rec(0);

    Graph out(n);
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if (cs.best[j] >> (j - 1 - i) & 1) out.add_edge(i, j);
    return out;
}

bool is_canonical(const Graph& g)
{
    check_canon_order(g, "is_canonical");
    if (g.order() <= 1) return true;

    CanonSearch cs;
    cs.init(g);
    cs.test_only = true;
    cs.rec(0);
    return !cs.smaller_found;
}

std::string canonical_graph6(const Graph& g)
{
    return encode_graph6(canonical_form(g));
}

namespace {

struct NaiveSolver {
    int np = 0, nt = 0;
    std::uint64_t prow[8], trow[18], allowed[8];
    int map[8];

    bool rec(int v, std::uint64_t used)
    {
        if (v == np) return true;
        std::uint64_t cand = allowed[v] & ~used;
        for (int u = 0; u < v && cand; ++u)
            cand &= (prow[v] >> u & 1) ? trow[map[u]] : ~trow[map[u]];
        while (cand) {
            int w = std::countr_zero(cand);
            cand &= cand - 1;
            map[v] = w;
            if (rec(v + 1, used | 1ull << w)) return true;
        }
        return false;
    }

    bool run(const Graph& pattern, const Graph& target, Embedding* out)
    {
        np = pattern.order();
        nt = target.order();
        if (np > 8 || nt > 18)
            throw std::invalid_argument("naive checker supports pattern <= 8, target <= 18");
        if (np == 0) {
            if (out) out->map.clear();
            return true;
        }
        if (np > nt) return false;

        for (int v = 0; v < np; ++v) prow[v] = pattern.row(v);
        for (int w = 0; w < nt; ++w) trow[w] = target.row(w);
        for (int v = 0; v < np; ++v) {
            int d = std::popcount(prow[v]);
            std::uint64_t m = 0;
            for (int w = 0; w < nt; ++w) {
                int dw = std::popcount(trow[w]);
                if (dw >= d && (nt - 1 - dw) >= (np - 1 - d)) m |= 1ull << w;
            }
            allowed[v] = m;
        }
        if (!rec(0, 0)) return false;
        if (out) out->map.assign(map, map + np);
        return true;
    }
};

}  // namespace

bool naive_induced_iso(const Graph& pattern, const Graph& target)
{
    NaiveSolver s;
    return s.run(pattern, target, nullptr);
}

std::optional<Embedding> naive_find_embedding(const Graph& pattern, const Graph& target)
{
    NaiveSolver s;
    Embedding e;
    if (!s.run(pattern, target, &e)) return std::nullopt;
    return e;
}

}  // namespace univg
