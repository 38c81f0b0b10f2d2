// Command-line driver: enumeration runs with persisted manifests, one-off
// graph checks, corpus-based colorability certification, the structural
// coloring pipeline, and the aggregated verification table.

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "critgraph/canonical.hpp"
#include "critgraph/coloring.hpp"
#include "critgraph/critgen.hpp"
#include "critgraph/families.hpp"
#include "critgraph/graph.hpp"
#include "critgraph/graph6.hpp"
#include "critgraph/patterns.hpp"
#include "critgraph/structural.hpp"

namespace {

using namespace critgraph;

std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string hex16(std::uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

std::string now_iso() {
    std::time_t t = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::vector<std::string> file_lines(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
        if (!line.empty()) lines.push_back(line);
    }
    return lines;
}

// NAME | gk:K | graph6 | @file-with-graph6
Graph resolve_graph(const std::string& spec) {
    if (spec.empty()) throw std::invalid_argument("graph reference is empty");
    if (spec[0] == '@') {
        auto lines = file_lines(spec.substr(1));
        if (lines.empty()) throw std::invalid_argument("graph file is empty: " + spec.substr(1));
        return from_graph6(lines[0]);
    }
    if (spec.rfind("gk:", 0) == 0) {
        int k = 0;
        try {
            std::size_t used = 0;
            k = std::stoi(spec.substr(3), &used);
            if (used != spec.size() - 3) throw std::invalid_argument("");
        } catch (...) {
            throw std::invalid_argument("bad gk:K reference: " + spec);
        }
        return g_k(k);
    }
    try {
        return named(spec).graph;
    } catch (const std::invalid_argument&) {
    }
    try {
        return from_graph6(spec);
    } catch (const std::exception& e) {
        throw std::invalid_argument("unknown graph name or malformed graph6 '" + spec +
                                    "': " + e.what());
    }
}

std::vector<PatternExpr> parse_forbid(const std::string& csv) {
    std::vector<PatternExpr> out;
    std::string cur;
    std::stringstream ss(csv);
    while (std::getline(ss, cur, ',')) {
        if (cur.empty()) continue;
        out.push_back(parse_pattern(cur));
    }
    return out;
}

std::string forbid_text(const std::vector<PatternExpr>& fam) {
    std::vector<std::string> texts;
    for (const auto& e : fam) texts.push_back(e.text());
    std::sort(texts.begin(), texts.end());
    std::string out;
    for (std::size_t i = 0; i < texts.size(); ++i) {
        if (i) out += ',';
        out += texts[i];
    }
    return out;
}

// accepts plain integers and scientific shorthand like 1e9
std::uint64_t parse_budget(const std::string& s) {
    if (s.find_first_of("eE.") != std::string::npos) {
        double d = std::stod(s);
        if (d < 0 || d > 1.8e19) throw std::invalid_argument("budget out of range: " + s);
        return static_cast<std::uint64_t>(d);
    }
    return std::stoull(s);
}

std::optional<std::uint64_t> env_budget() {
    const char* v = std::getenv("CRITGEN_BUDGET_NODES");
    if (!v || !*v) return std::nullopt;
    return parse_budget(v);
}

struct GenerateArgs {
    int k = 4;
    std::string max_n = "unbounded";
    std::string forbid;
    std::string seed;
    std::string budget;
    int jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    std::string out = "run";
    bool no_comparable = false;
    bool no_deficiency = false;
    std::uint64_t progress_every = 0;
};

int run_generate(const GenerateArgs& a, const std::string& echo) {
    SearchConfig cfg;
    cfg.k = a.k;
    if (a.max_n != "unbounded") {
        std::size_t used = 0;
        cfg.n_max = std::stoi(a.max_n, &used);
        if (used != a.max_n.size())
            throw std::invalid_argument("--max-n must be an integer or 'unbounded'");
    }
    cfg.family = parse_forbid(a.forbid);
    cfg.seed = resolve_graph(a.seed);
    cfg.rules.comparable_vertex = !a.no_comparable;
    cfg.rules.deficiency = !a.no_deficiency;
    if (!a.budget.empty())
        cfg.budget_nodes = parse_budget(a.budget);
    else if (auto env = env_budget())
        cfg.budget_nodes = *env;
    cfg.jobs = a.jobs;
    cfg.progress_every = a.progress_every;

    std::string started = now_iso();
    SearchOutcome res = generate(cfg);
    std::string finished = now_iso();

    std::string norm = "k=" + std::to_string(cfg.k) +
                       ";max_n=" + (cfg.n_max ? std::to_string(*cfg.n_max) : "unbounded") +
                       ";forbid=" + forbid_text(cfg.family) + ";seed=" + to_graph6(cfg.seed) +
                       ";comparable=" + (cfg.rules.comparable_vertex ? "1" : "0") +
                       ";deficiency=" + (cfg.rules.deficiency ? "1" : "0") +
                       ";budget=" + std::to_string(cfg.budget_nodes);

    std::ofstream g6f(a.out + ".g6", std::ios::binary);
    if (!g6f) throw std::invalid_argument("cannot write " + a.out + ".g6");
    for (const auto& g : res.criticals) g6f << to_graph6(g) << '\n';
    g6f.close();

    std::ofstream mf(a.out + ".manifest", std::ios::binary);
    if (!mf) throw std::invalid_argument("cannot write " + a.out + ".manifest");
    mf << "command: " << echo << '\n';
    mf << "config_hash: " << hex16(fnv1a64(norm)) << '\n';
    mf << "started_at: " << started << '\n';
    mf << "finished_at: " << finished << '\n';
    mf << "k: " << cfg.k << '\n';
    mf << "max_n: " << (cfg.n_max ? std::to_string(*cfg.n_max) : "unbounded") << '\n';
    mf << "forbid: " << forbid_text(cfg.family) << '\n';
    mf << "seed_graph6: " << to_graph6(cfg.seed) << '\n';
    mf << "budget_nodes: " << cfg.budget_nodes << '\n';
    mf << "jobs: " << cfg.jobs << '\n';
    mf << "rule_comparable_vertex: " << (cfg.rules.comparable_vertex ? "on" : "off") << '\n';
    mf << "rule_deficiency: " << (cfg.rules.deficiency ? "on" : "off") << '\n';
    mf << "nodes_visited: " << res.stats.nodes << '\n';
    mf << "dedup_hits: " << res.stats.dedup_hits << '\n';
    mf << "children_family_rejected: " << res.stats.children_family_rejected << '\n';
    mf << "pruned_comparable: " << res.stats.pruned_comparable << '\n';
    mf << "pruned_deficiency: " << res.stats.pruned_deficiency << '\n';
    mf << "wall_seconds: " << res.stats.wall_seconds << '\n';
    mf << "graphs_found: " << res.criticals.size() << '\n';
    mf << "largest_unpruned_order: " << res.largest_unpruned_order << '\n';
    mf << "inconclusive: " << (res.inconclusive ? "true" : "false") << '\n';
    for (const auto& g : res.criticals)
        mf << "result: " << to_graph6(g) << " order=" << g.order()
           << " cert=" << hex16(fnv1a64(canonical_form(g).certificate)) << '\n';
    mf.close();

    std::cout << "graphs_found: " << res.criticals.size() << '\n';
    std::cout << "largest_unpruned_order: " << res.largest_unpruned_order << '\n';
    std::cout << "inconclusive: " << (res.inconclusive ? "true" : "false") << '\n';
    return res.inconclusive ? 3 : 0;
}

struct CheckArgs {
    std::string graph;
    int k = 4;
    std::string forbid;
};

int run_check(const CheckArgs& a) {
    Graph g = resolve_graph(a.graph);
    auto fam = parse_forbid(a.forbid);
    CriticalityReport rep = is_k_vertex_critical(g, a.k);
    std::cout << "graph: " << to_graph6(g) << '\n';
    std::cout << "order: " << g.order() << '\n';
    std::cout << "chi: " << rep.chromatic << '\n';
    std::cout << "critical(k=" << a.k << "): " << (rep.is_critical ? "yes" : "no") << '\n';
    if (!rep.is_critical) {
        if (rep.chromatic != a.k)
            std::cout << "reason: chi != k\n";
        else if (rep.culprit >= 0)
            std::cout << "reason: deletion of vertex " << rep.culprit << " keeps chi=" << a.k
                      << '\n';
    }
    for (const auto& e : fam) {
        bool free = is_family_free(g, {e});
        std::cout << "free(" << e.text() << "): " << (free ? "yes" : "no") << '\n';
    }
    return 0;
}

struct CertifyArgs {
    std::string graph;
    std::string criticals;
    int k = 4;
};

int run_certify(const CertifyArgs& a) {
    Graph host = resolve_graph(a.graph);
    std::string path = a.criticals;
    if (!path.empty() && path[0] == '@') path = path.substr(1);
    auto lines = file_lines(path);
    if (lines.empty()) throw std::invalid_argument("empty corpus file: " + path);
    std::vector<Graph> corpus;
    for (const auto& l : lines) corpus.push_back(from_graph6(l));
    std::cout << "host: " << to_graph6(host) << '\n';
    std::cout << "corpus: " << path << " (" << corpus.size() << " graphs)\n";
    std::cout << "assumption: corpus is complete for the host's graph class\n";
    for (const auto& c : corpus) {
        if (auto emb = contains_induced(host, c)) {
            std::cout << "verdict: not-" << (a.k - 1) << "-colorable\n";
            std::cout << "certificate: " << to_graph6(c) << " ->";
            for (int v : emb->map) std::cout << ' ' << v;
            std::cout << '\n';
            return 0;
        }
    }
    std::cout << "verdict: " << (a.k - 1) << "-colorable\n";
    return 0;
}

struct StructuralArgs {
    std::string graph;
    int base = 1;
};

int run_structural_color(const StructuralArgs& a) {
    Graph g = resolve_graph(a.graph);
    auto c7 = pattern_base_graph('C', 7);
    auto emb = contains_induced(g, c7);
    if (!emb) throw std::invalid_argument("input graph has no induced C7");
    HeptagramDecomposition d = grow_heptagram(g, emb->map);
    Coloring col = three_coloring_from_decomposition(d, a.base);
    std::cout << "graph: " << to_graph6(g) << '\n';
    std::cout << "cycle:";
    for (int v : emb->map) std::cout << ' ' << v;
    std::cout << '\n';
    std::cout << "base: " << a.base << '\n';
    for (int v = 0; v < g.order(); ++v) std::cout << v << ':' << col.colors[v] << '\n';
    return 0;
}

struct VerifyArgs {
    std::string level = "quick";
    std::string budget;
};

int run_verify(const VerifyArgs& a) {
    if (a.level != "quick" && a.level != "full")
        throw std::invalid_argument("--level must be quick or full");
    std::uint64_t budget = 100000000ull;
    if (!a.budget.empty())
        budget = parse_budget(a.budget);
    else if (auto env = env_budget())
        budget = *env;

    int pass = 0, fail = 0, inconclusive = 0;
    auto report = [&](const std::string& name, int verdict, const std::string& detail) {
        const char* word = verdict == 0 ? "PASS" : verdict == 1 ? "FAIL" : "INCONCLUSIVE";
        (verdict == 0 ? pass : verdict == 1 ? fail : inconclusive) += 1;
        std::cout << "CHECK " << name << ": " << word;
        if (!detail.empty()) std::cout << " (" << detail << ")";
        std::cout << '\n';
        std::cout.flush();
    };

    {
        std::string bad;
        for (const auto& ng : all_named()) {
            std::string why;
            if (!named_tags_hold(ng, &why)) {
                if (!bad.empty()) bad += "; ";
                bad += ng.name + ": " + why;
            }
        }
        report("named-corpus-tags", bad.empty() ? 0 : 1, bad);
    }

    for (int k = 3; k <= 8; ++k) {
        GkReport rep = verify_g_k(k);
        std::string detail;
        for (const auto& c : rep.clauses)
            if (c.claimed && !c.holds) {
                if (!detail.empty()) detail += "; ";
                detail += c.name;
            }
        report("circulant-family-k" + std::to_string(k), rep.pass ? 0 : 1, detail);
    }

    {
        auto p10 = pattern_base_graph('P', 10);
        bool ok = true;
        std::string detail;
        for (int k = 4; k <= 8; ++k) {
            Graph g = g_k(k);
            Embedding w{p10_witness(k)};
            if (!embedding_valid(g, p10, w)) {
                ok = false;
                detail = "witness rejected at k=" + std::to_string(k);
                break;
            }
            if (!contains_induced(g, p10)) {
                ok = false;
                detail = "search found no embedding at k=" + std::to_string(k);
                break;
            }
        }
        report("p10-witness-k4..k8", ok ? 0 : 1, detail);
    }

    auto family_run = [&](const std::string& name, const std::string& forbid,
                          const std::string& seed, std::optional<int> n_max,
                          const std::vector<std::string>& expect_named) {
        SearchConfig cfg;
        cfg.k = 4;
        cfg.n_max = n_max;
        cfg.family = parse_forbid(forbid);
        cfg.seed = resolve_graph(seed);
        cfg.budget_nodes = budget;
        cfg.jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
        SearchOutcome res = generate(cfg);
        if (res.inconclusive) {
            report(name, 2, "budget exhausted at " + std::to_string(res.stats.nodes) + " nodes");
            return;
        }
        std::vector<std::string> want, got;
        for (const auto& nm : expect_named)
            want.push_back(canonical_form(named(nm).graph).certificate);
        for (const auto& g : res.criticals) got.push_back(canonical_form(g).certificate);
        std::sort(want.begin(), want.end());
        std::sort(got.begin(), got.end());
        std::string detail = std::to_string(res.criticals.size()) + " graphs, largest_unpruned=" +
                             std::to_string(res.largest_unpruned_order);
        report(name, want == got ? 0 : 1, detail);
    };

    family_run("c7-family-search-L1", "P7,C3", "L1", 16, {"fig1-d", "fig1-e", "fig1-f"});
    family_run("c7-family-search-L2", "P7,C3", "L2", 16, {"fig1-e"});
    family_run("p5p1-c3-c7-bounded", "P5+P1,C3,C7", "C5", 16, {});

    if (a.level == "full") {
        family_run("c7-family-search-L1-unbounded", "P7,C3", "L1", std::nullopt,
                   {"fig1-d", "fig1-e", "fig1-f"});
        family_run("p5p1-c3-c7-unbounded", "P5+P1,C3,C7", "C5", std::nullopt, {});
    }

    std::cout << "SUMMARY: " << pass << " pass, " << fail << " fail, " << inconclusive
              << " inconclusive\n";
    return fail == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    std::string echo;
    for (int i = 0; i < argc; ++i) {
        if (i) echo += ' ';
        echo += argv[i];
    }

    CLI::App app{"critical-graph enumeration and verification toolkit"};
    app.require_subcommand(1);

    GenerateArgs ga;
    auto* gen = app.add_subcommand("generate", "exhaustive seeded enumeration run");
    gen->add_option("--k", ga.k, "target criticality")->required();
    gen->add_option("--max-n", ga.max_n, "order bound or 'unbounded'");
    gen->add_option("--forbid", ga.forbid, "comma-separated forbidden patterns");
    gen->add_option("--seed", ga.seed, "seed graph: name, graph6, or @file")->required();
    gen->add_option("--budget-nodes", ga.budget, "node budget (integer or 1e9 form)");
    gen->add_option("--jobs", ga.jobs, "worker threads");
    gen->add_option("--out", ga.out, "output prefix for .g6/.manifest");
    gen->add_flag("--no-comparable-rule", ga.no_comparable, "disable the comparable-vertex rule");
    gen->add_flag("--no-deficiency-rule", ga.no_deficiency, "disable the deficiency rule");
    gen->add_option("--progress-every", ga.progress_every, "stderr progress cadence in nodes");

    CheckArgs ca;
    auto* chk = app.add_subcommand("check", "chromatic / criticality / freeness report");
    chk->add_option("--graph", ca.graph, "graph: name, graph6, gk:K, or @file")->required();
    chk->add_option("--k", ca.k, "criticality level")->required();
    chk->add_option("--forbid", ca.forbid, "comma-separated patterns to test freeness");

    CertifyArgs ce;
    auto* cert = app.add_subcommand("certify", "corpus-based colorability certificate");
    cert->add_option("--graph", ce.graph, "host graph")->required();
    cert->add_option("--criticals", ce.criticals, "graph6 corpus file (@file or path)")->required();
    cert->add_option("--k", ce.k, "criticality level of the corpus")->required();

    StructuralArgs sa;
    auto* sc = app.add_subcommand("structural-color", "heptagram-based 3-coloring");
    sc->add_option("--graph", sa.graph, "host graph")->required();
    sc->add_option("--base", sa.base, "base slot 1..7");

    VerifyArgs va;
    auto* ver = app.add_subcommand("verify", "aggregated verification table");
    ver->add_option("--level", va.level, "quick or full");
    ver->add_option("--budget-nodes", va.budget, "node budget for search checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (gen->parsed()) return run_generate(ga, echo);
        if (chk->parsed()) return run_check(ca);
        if (cert->parsed()) return run_certify(ce);
        if (sc->parsed()) return run_structural_color(sa);
        if (ver->parsed()) return run_verify(va);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
