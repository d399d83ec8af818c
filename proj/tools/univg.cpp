#include <CLI11.hpp>

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "univg/enumeration.hpp"
#include "univg/graph.hpp"
#include "univg/graph6.hpp"
#include "univg/heuristic.hpp"
#include "univg/matrix_text.hpp"
#include "univg/run_record.hpp"
#include "univg/search.hpp"
#include "univg/tree_completion.hpp"
#include "univg/verify.hpp"

namespace fs = std::filesystem;

namespace {

using namespace univg;

int default_jobs()
{
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

// Relative output paths land in $UNIVG_OUT_DIR when it is set.
fs::path resolve_out(const std::string& path)
{
    fs::path p(path);
    if (!p.is_absolute())
        if (const char* dir = std::getenv("UNIVG_OUT_DIR")) return fs::path(dir) / p;
    return p;
}

// Primary output goes to --out when given, stdout otherwise.
struct OutTarget {
    fs::path path;  // empty means stdout
    std::ofstream file;

    std::ostream& stream() { return path.empty() ? std::cout : file; }
    bool to_file() const { return !path.empty(); }
};

OutTarget open_out(const std::string& out)
{
    OutTarget t;
    if (out.empty()) return t;
    t.path = resolve_out(out);
    t.file.open(t.path);
    if (!t.file) throw std::runtime_error("cannot open " + t.path.string() + " for writing");
    return t;
}

// The RunRecord lands next to the primary output as a .json sibling; runs
// that print to stdout have no sibling and keep no record.
void persist_record(const OutTarget& out, RunRecord rec, double wall_seconds)
{
    if (!out.to_file()) return;
    rec.wall_seconds = wall_seconds;
    fs::path p = out.path;
    p.replace_extension(".json");
    std::ofstream f(p);
    if (!f) throw std::runtime_error("cannot open " + p.string() + " for writing");
    f << run_record_to_json(rec);
}

double seconds_since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct FamilySpec {
    std::string descriptor;
    GraphFamily members;
    int k = 0;  // member order (first member's order for file families)
};

GraphFamily read_family_file(const fs::path& path)
{
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    GraphFamily fam;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        try {
            fam.push_back(decode_graph6(line));
        } catch (const Graph6Error& e) {
            throw std::runtime_error(path.string() + ":" + std::to_string(lineno) + ": " +
                                     e.what());
        }
    }
    return fam;
}

// Descriptors: all:K (every graph of order K), trees:K, file:PATH.
FamilySpec load_family(const std::string& descriptor)
{
    FamilySpec spec;
    spec.descriptor = descriptor;
    auto colon = descriptor.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("--family expects all:K, trees:K, or file:PATH, got '" +
                                    descriptor + "'");
    std::string kind = descriptor.substr(0, colon);
    std::string rest = descriptor.substr(colon + 1);
    if (kind == "all" || kind == "trees") {
        int k = 0;
        std::size_t used = 0;
        try {
            k = std::stoi(rest, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != rest.size() || rest.empty())
            throw std::invalid_argument("--family: '" + rest + "' is not an order");
        spec.k = k;
        spec.members = kind == "all" ? all_graphs_list(k) : all_trees(k);
    } else if (kind == "file") {
        spec.members = read_family_file(rest);
        spec.k = spec.members.empty() ? 0 : spec.members.front().order();
    } else {
        throw std::invalid_argument("--family: unknown kind '" + kind + "'");
    }
    return spec;
}

RunRecord base_record(const char* command, const std::vector<std::string>& argv)
{
    RunRecord rec;
    rec.command = command;
    rec.argv = argv;
    return rec;
}

int run_enumerate(const std::vector<std::string>& argv, int order, const std::string& from,
                  const std::string& out)
{
    auto t0 = std::chrono::steady_clock::now();
    OutTarget target = open_out(out);

    std::uint64_t count = 0;
    if (!from.empty()) {
        GraphStream parents = graphs_from_file(from, order - 1);
        count = extend_representatives(
            parents, [&](const Graph& g) { target.stream() << encode_graph6(g) << '\n'; });
    } else {
        GraphStream s = all_graphs(order);
        while (auto g = s.next()) {
            target.stream() << encode_graph6(*g) << '\n';
            ++count;
        }
    }

    RunRecord rec = base_record("enumerate", argv);
    rec.order = order;
    rec.counters["graphs"] = count;
    persist_record(target, std::move(rec), seconds_since(t0));
    return 0;
}

int run_search_exact(const std::vector<std::string>& argv, const std::string& family, int order,
                     const std::string& candidates, const std::string& strategy,
                     std::uint64_t seed, int jobs, const std::string& out)
{
    auto t0 = std::chrono::steady_clock::now();
    FamilySpec fam = load_family(family);
    auto strat = strategy_from_name(strategy);
    if (!strat) throw std::invalid_argument("unknown strategy '" + strategy + "'");
    GraphFamily ordered = order_family(fam.members, OrderingStrategy{*strat, seed});

    GraphStream stream =
        candidates.empty() ? all_graphs(order) : graphs_from_file(candidates, order);

    SearchStats stats;
    std::vector<Graph> hits = all_induced_universal_graphs(ordered, stream, stats, jobs);

    OutTarget target = open_out(out);
    RunRecord rec = base_record("search-exact", argv);
    rec.family = fam.descriptor;
    rec.seed = seed;
    rec.order = order;
    rec.k = fam.k;
    rec.jobs = jobs;
    rec.stats = stats;
    for (const Graph& g : hits) {
        std::string line = encode_graph6(g);
        target.stream() << line << '\n';
        rec.results_graph6.push_back(std::move(line));
    }
    persist_record(target, std::move(rec), seconds_since(t0));
    return 0;
}

int run_search_heuristic(const std::vector<std::string>& argv, const std::string& family,
                         int order, const std::string& template_name, int max_iter,
                         double time_limit, std::uint64_t seed, int jobs, const std::string& out)
{
    auto t0 = std::chrono::steady_clock::now();
    FamilySpec fam = load_family(family);
    SeedKind kind =
        template_name == "star" ? SeedKind::Star : SeedKind::CliqueIndependent;
    SeedTemplate tmpl = make_seed_template(kind, fam.k, order);

    ClimbConfig cfg;
    cfg.seed = seed;
    cfg.max_iterations = max_iter > 0 ? max_iter : (fam.k <= 6 ? 1000 : 10000);
    cfg.time_limit_seconds = time_limit;
    cfg.jobs = jobs;
    ClimbResult res = hill_climb(fam.members, tmpl, cfg);

    OutTarget target = open_out(out);
    RunRecord rec = base_record("search-heuristic", argv);
    rec.family = fam.descriptor;
    rec.seed = seed;
    rec.order = order;
    rec.k = fam.k;
    rec.jobs = jobs;
    rec.stats.subiso_calls = res.solver_calls;
    rec.counters["restarts"] = res.restarts;
    rec.counters["flips"] = res.flips;
    rec.counters["cache_hits"] = res.cache_hits;
    rec.counters["winning_restart"] = res.winning_restart;
    rec.counters["timed_out"] = res.timed_out ? 1 : 0;

    if (!res.success) {
        persist_record(target, std::move(rec), seconds_since(t0));
        std::cerr << "univg: no universal graph found within budget (" << res.restarts
                  << " restarts, " << res.flips << " flips"
                  << (res.timed_out ? ", time limit hit" : "") << ")\n";
        return 1;
    }

    std::string line = encode_graph6(res.graph);
    rec.results_graph6.push_back(line);
    target.stream() << line << '\n';
    if (target.to_file()) {
        fs::path mpath = target.path;
        mpath.replace_extension(".txt");
        if (mpath == target.path) mpath += ".txt";
        std::ofstream mf(mpath);
        if (!mf) throw std::runtime_error("cannot open " + mpath.string() + " for writing");
        mf << format_matrix_text(res.graph);
    } else {
        target.stream() << format_matrix_text(res.graph);
    }
    persist_record(target, std::move(rec), seconds_since(t0));
    return 0;
}

int run_trees_complete(const std::vector<std::string>& argv, int order, int k, bool naive,
                       int jobs, const std::string& out)
{
    auto t0 = std::chrono::steady_clock::now();
    CompletionResult res = naive ? naive_complete_search(order, k) : complete_search(order, k, jobs);

    OutTarget target = open_out(out);
    RunRecord rec = base_record("trees-complete", argv);
    rec.family = "trees:" + std::to_string(k);
    rec.order = order;
    rec.k = k;
    rec.jobs = naive ? 1 : jobs;
    rec.stats.subiso_calls = res.subiso_calls;
    rec.counters["sequences_enumerated"] = res.sequences_enumerated;
    rec.counters["matrices_tested"] = res.matrices_tested;
    for (const Graph& g : res.graphs) {
        std::string line = encode_graph6(g);
        target.stream() << line << '\n';
        rec.results_graph6.push_back(std::move(line));
    }
    persist_record(target, std::move(rec), seconds_since(t0));
    return 0;
}

int run_experiment(const std::vector<std::string>& argv, const std::string& family, int order,
                   const std::string& candidates, int trials, std::uint64_t seed, int jobs,
                   const std::string& out)
{
    auto t0 = std::chrono::steady_clock::now();
    FamilySpec fam = load_family(family);

    std::vector<Graph> pool;
    if (candidates.empty()) {
        pool = all_graphs_list(order);
    } else {
        GraphStream s = graphs_from_file(candidates, order);
        while (auto g = s.next()) pool.push_back(std::move(*g));
    }

    const std::vector<Strategy> strategies{Strategy::Automorphisms, Strategy::Edges,
                                           Strategy::AlmostRandom, Strategy::Random};
    ExperimentTable table = ordering_experiment(fam.members, pool, strategies, trials, seed, jobs);

    OutTarget target = open_out(out);
    target.stream() << experiment_csv(table);

    RunRecord rec = base_record("experiment-ordering", argv);
    rec.family = fam.descriptor;
    rec.seed = seed;
    rec.order = order;
    rec.k = fam.k;
    rec.jobs = jobs;
    rec.counters["trials"] = static_cast<std::uint64_t>(trials);
    rec.counters["rows"] = table.rows.size();
    persist_record(target, std::move(rec), seconds_since(t0));
    return 0;
}

int run_verify(const std::string& graph6_text, const std::string& matrix_file,
               const std::string& family, const std::string& report)
{
    if (graph6_text.empty() == matrix_file.empty())
        throw std::invalid_argument("verify needs exactly one of --graph or --matrix");

    Graph g(0);
    if (!graph6_text.empty()) {
        g = decode_graph6(graph6_text);
    } else {
        std::ifstream in(matrix_file);
        if (!in) throw std::runtime_error("cannot open " + matrix_file);
        std::stringstream buf;
        buf << in.rdbuf();
        g = parse_matrix_text(buf.str());
    }

    FamilySpec fam = load_family(family);
    Certificate cert = verify_universal(g, fam.members, fam.descriptor);

    if (!report.empty()) {
        fs::path rpath = resolve_out(report);
        std::ofstream f(rpath);
        if (!f) throw std::runtime_error("cannot open " + rpath.string() + " for writing");
        f << certificate_to_json(cert);
    }
    std::cout << certificate_to_text(cert);
    return cert.valid ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv)
{
    const std::vector<std::string> argv_vec(argv, argv + argc);

    CLI::App app{"minimal induced universal graphs for families of small graphs"};
    app.set_version_flag("--version", std::string(project_version));
    app.require_subcommand(1);

    std::string family, candidates, strategy = "automorphisms", template_name, out, from;
    std::string graph6_text, matrix_file, report;
    int order = 0, k = 0, trials = 50, max_iter = 0;
    int jobs = default_jobs();
    std::uint64_t seed = 0;
    double time_limit = 60.0;
    bool naive = false;

    auto* enumerate = app.add_subcommand("enumerate", "write one order's canonical graphs, one graph6 line each");
    enumerate->add_option("--order", order, "graph order")->required();
    enumerate->add_option("--from", from, "extend the order-1 representatives in this graph6 file instead of generating internally (orders beyond 8)");
    enumerate->add_option("--out", out, "output file (default stdout)");

    auto* sx = app.add_subcommand("search-exact", "scan candidates of one order for graphs containing every family member");
    sx->add_option("--family", family, "all:K, trees:K, or file:PATH")->required();
    sx->add_option("--order", order, "candidate order")->required();
    sx->add_option("--candidates", candidates, "graph6 candidate file (default: internal enumeration, order <= 8)");
    sx->add_option("--strategy", strategy, "family ordering: automorphisms, edges, almost-random, random")
        ->check(CLI::IsMember({"automorphisms", "edges", "almost-random", "random"}));
    sx->add_option("--seed", seed, "rng seed for ordering");
    sx->add_option("--jobs", jobs, "worker threads");
    sx->add_option("--out", out, "output file (default stdout)");

    auto* sh = app.add_subcommand("search-heuristic", "hill-climb toward a universal graph from a frozen seed region");
    sh->add_option("--family", family, "all:K, trees:K, or file:PATH")->required();
    sh->add_option("--order", order, "graph order to climb at")->required();
    sh->add_option("--template", template_name, "seed region: clique-indep or star")
        ->required()
        ->check(CLI::IsMember({"clique-indep", "star"}));
    sh->add_option("--max-iter", max_iter, "flips per restart (default 1000, or 10000 for k >= 7)");
    sh->add_option("--time-limit", time_limit, "wall-clock budget in seconds");
    sh->add_option("--seed", seed, "rng seed");
    sh->add_option("--jobs", jobs, "parallel restarts");
    sh->add_option("--out", out, "output file (default stdout)");

    auto* tc = app.add_subcommand("trees-complete", "complete the frozen star block to universal graphs for trees");
    tc->add_option("--order", order, "graph order")->required();
    tc->add_option("--k", k, "tree order")->required();
    tc->add_flag("--naive", naive, "brute-force every completion instead of the symmetry-reduced search");
    tc->add_option("--jobs", jobs, "worker threads");
    tc->add_option("--out", out, "output file (default stdout)");

    auto* ex = app.add_subcommand("experiment-ordering", "per-trial solver-call counts for each ordering strategy, as CSV");
    ex->add_option("--family", family, "all:K, trees:K, or file:PATH")->required();
    ex->add_option("--order", order, "candidate order")->required();
    ex->add_option("--candidates", candidates, "graph6 candidate file (default: internal enumeration, order <= 8)");
    ex->add_option("--trials", trials, "trials per strategy");
    ex->add_option("--seed", seed, "base rng seed");
    ex->add_option("--jobs", jobs, "worker threads");
    ex->add_option("--out", out, "output CSV file (default stdout)");

    auto* vf = app.add_subcommand("verify", "independently certify that a graph contains every family member");
    auto* vg = vf->add_option("--graph", graph6_text, "candidate as a graph6 string");
    auto* vm = vf->add_option("--matrix", matrix_file, "candidate as an adjacency-matrix text file");
    vg->excludes(vm);
    vf->add_option("--family", family, "all:K, trees:K, or file:PATH")->required();
    vf->add_option("--report", report, "write the JSON certificate here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (enumerate->parsed()) return run_enumerate(argv_vec, order, from, out);
        if (sx->parsed())
            return run_search_exact(argv_vec, family, order, candidates, strategy, seed, jobs, out);
        if (sh->parsed())
            return run_search_heuristic(argv_vec, family, order, template_name, max_iter,
                                        time_limit, seed, jobs, out);
        if (tc->parsed()) return run_trees_complete(argv_vec, order, k, naive, jobs, out);
        if (ex->parsed())
            return run_experiment(argv_vec, family, order, candidates, trials, seed, jobs, out);
        if (vf->parsed()) return run_verify(graph6_text, matrix_file, family, report);
    } catch (const std::exception& e) {
        std::cerr << "univg: error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
