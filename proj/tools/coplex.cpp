// coplex: maximum-weight co-3-plex solver for chordal graphs, plus the
// companion-graph toolbox (chordality check, clique listing, A(G) export,
// structural verification battery, instance generator, bench).

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "coplex/auxgraph.hpp"
#include "coplex/colgen.hpp"
#include "coplex/pricing.hpp"
#include "coplex/verify.hpp"

using namespace coplex;

namespace {

struct RunConfig {
    std::string input_path;
    std::string gen_spec;  // "n,density,seed"
    std::string pricing = "dual";
    std::string format = "text";
    long cap = kDefaultEnumerationCap;
    std::uint64_t seed = 1;
    int trials = 100;
    std::string dump_lp_path;

    bool kv() const { return format == "kv"; }
    PricingConvention convention() const {
        return pricing == "paper" ? PricingConvention::paper : PricingConvention::dual;
    }
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Graph generated_graph(const std::string& spec) {
    long n = 0, seed = 0;
    double density = 0;
    char c1 = 0, c2 = 0;
    std::istringstream in(spec);
    if (!(in >> n >> c1 >> density >> c2 >> seed) || c1 != ',' || c2 != ',' || n < 1 ||
        !(in >> std::ws).eof())
        throw UsageError("bad --gen spec '" + spec + "' (want n,density,seed)");
    return generate_random_chordal(static_cast<int>(n), density,
                                   static_cast<std::uint64_t>(seed));
}

Graph load_graph(const RunConfig& cfg) {
    if (cfg.input_path.empty() == cfg.gen_spec.empty())
        throw UsageError("need exactly one of --input and --gen");
    if (!cfg.gen_spec.empty()) return generated_graph(cfg.gen_spec);
    std::ifstream in(cfg.input_path);
    if (!in) throw UsageError("cannot read '" + cfg.input_path + "'");
    return parse_graph(in);
}

std::string set_text(const VertexSet& s, bool kv) {
    std::string out = kv ? "" : "{";
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
    return kv ? out : out + "}";
}

void emit_solution(const RunConfig& cfg, const Graph& g, const ColgenReport& r) {
    if (cfg.kv()) {
        std::cout << "command=solve\n"
                  << "n=" << g.vertex_count() << "\nm=" << g.edge_count() << "\n"
                  << "objective=" << rat_str(r.objective) << "\n"
                  << "solution=" << set_text(r.solution.members, true) << "\n"
                  << "component_count=" << r.solution.components.size() << "\n";
        for (std::size_t i = 0; i < r.solution.components.size(); ++i)
            std::cout << "component_" << i + 1 << "="
                      << set_text(r.solution.components[i], true) << "\n";
        std::cout << "iterations=" << r.iterations << "\ncolumns_added=" << r.columns_added
                  << "\ncertificate="
                  << (r.certificate == CertificateKind::duality ? "duality" : "enumeration")
                  << "\n";
        for (std::size_t i = 0; i < r.log.size(); ++i)
            std::cout << "iter_" << i + 1 << "_objective=" << rat_str(r.log[i].objective)
                      << "\niter_" << i + 1
                      << "_best_rc=" << rat_str(r.log[i].best_reduced_cost) << "\niter_"
                      << i + 1 << "_columns=" << r.log[i].columns << "\n";
        return;
    }
    std::cout << "optimum " << rat_str(r.objective) << "; S = "
              << set_text(r.solution.members, false) << "\n";
    std::cout << "components:";
    for (const auto& c : r.solution.components) std::cout << " " << set_text(c, false);
    std::cout << "\niterations " << r.iterations << ", columns added " << r.columns_added
              << "\n";
    for (std::size_t i = 0; i < r.log.size(); ++i)
        std::cout << "  iter " << i + 1 << ": objective " << rat_str(r.log[i].objective)
                  << ", best reduced cost " << rat_str(r.log[i].best_reduced_cost)
                  << ", columns " << r.log[i].columns << "\n";
}

int cmd_solve(const RunConfig& cfg) {
    const Graph g = load_graph(cfg);
    if (!is_chordal(g)) {
        std::cerr << "error: input graph is not chordal\n";
        return 1;
    }
    ColgenConfig conf;
    conf.convention = cfg.convention();
    conf.enumeration_cap = cfg.cap;
    if (!cfg.dump_lp_path.empty()) {
        if (connected_components(g).size() > 1)
            throw UsageError("--dump-lp needs a connected graph (one master per component)");
        const ConnectedSolve s = solve_connected(g, conf);
        std::ofstream out(cfg.dump_lp_path);
        if (!out) throw UsageError("cannot write '" + cfg.dump_lp_path + "'");
        write_lp(s.model, out);
        emit_solution(cfg, g, s.report);
        return 0;
    }
    emit_solution(cfg, g, solve_co3plex(g, conf));
    return 0;
}

int cmd_check(const RunConfig& cfg) {
    const Graph g = load_graph(cfg);
    const auto order = peo(g);
    if (cfg.kv()) {
        std::cout << "command=check\nn=" << g.vertex_count() << "\nm=" << g.edge_count()
                  << "\nchordal=" << (order ? 1 : 0) << "\n";
        if (order) {
            std::cout << "peo=";
            for (std::size_t i = 0; i < order->size(); ++i)
                std::cout << (i ? "," : "") << (*order)[i];
            std::cout << "\n";
        }
        return 0;
    }
    if (!order) {
        std::cout << "not chordal\n";
        return 0;
    }
    std::cout << "chordal\nperfect elimination ordering:";
    for (int v : *order) std::cout << " " << v;
    std::cout << "\n";
    return 0;
}

int cmd_cliques(const RunConfig& cfg) {
    const Graph g = load_graph(cfg);
    const auto order = peo(g);
    const CliqueSet ks =
        order ? maximal_cliques_chordal(g, *order) : maximal_cliques_general(g);
    if (cfg.kv()) {
        std::cout << "command=cliques\nmethod=" << (order ? "peo" : "general")
                  << "\nclique_count=" << ks.size() << "\n";
        for (int i = 0; i < ks.size(); ++i)
            std::cout << "clique_" << i + 1 << "=" << set_text(ks.cliques[i], true) << "\n";
        return 0;
    }
    std::cout << (order ? "chordal" : "not chordal") << ", " << ks.size()
              << " maximal cliques\n";
    for (const auto& k : ks.cliques) std::cout << set_text(k, false) << "\n";
    return 0;
}

int cmd_aux(const RunConfig& cfg) {
    const Graph g = load_graph(cfg);
    const AuxGraph a = build_aux_direct(g, enumerate_catalog(g, cfg.cap));
    std::cout << "c companion graph of a host with " << g.vertex_count()
              << " vertices and " << g.edge_count() << " edges\n";
    for (int i = 1; i <= a.node_count(); ++i) {
        const char* kind = a.kind[i] == AuxNodeKind::vertex     ? "vertex"
                           : a.kind[i] == AuxNodeKind::triangle ? "triangle"
                                                                : "path";
        std::cout << "c node " << i << " = " << set_text(a.node_set(i), false) << " " << kind
                  << "\n";
    }
    std::cout << write_graph(a.aux);
    return 0;
}

int cmd_gen(const RunConfig& cfg) {
    if (cfg.gen_spec.empty()) throw UsageError("gen requires --gen n,density,seed");
    std::cout << write_graph(generated_graph(cfg.gen_spec));
    return 0;
}

int cmd_verify(const RunConfig& cfg) {
    struct Line {
        std::string name;
        bool pass;
    };
    std::vector<Line> table;

    const FractionalPointReport c4 = check_c4_fractional_point();
    table.push_back({"c4-fractional-extreme-point", c4.passed()});

    bool preserve = true;
    {
        std::vector<Graph> corpus;
        for (int n = 1; n <= 6; ++n) {
            Graph path(n);
            for (int v = 1; v < n; ++v) path.add_edge(v, v + 1);
            corpus.push_back(path);
        }
        for (int n = 3; n <= 5; ++n) {
            Graph k(n);
            for (int u = 1; u <= n; ++u)
                for (int v = u + 1; v <= n; ++v) k.add_edge(u, v);
            corpus.push_back(k);
        }
        for (int n = 4; n <= 6; ++n) {
            Graph c(n);
            for (int v = 1; v < n; ++v) c.add_edge(v, v + 1);
            c.add_edge(n, 1);
            corpus.push_back(c);
        }
        for (const Graph& g : corpus)
            if (is_chordal(build_aux_direct(g, enumerate_catalog(g, cfg.cap)).aux) !=
                is_chordal(g))
                preserve = false;
    }
    table.push_back({"chordality-preservation", preserve});

    bool bijection = true, cliques_match = true, constructions_match = true;
    for (int i = 0; i < 20; ++i) {
        std::mt19937_64 pick(cfg.seed + i);
        const Graph g = generate_random_chordal(2 + static_cast<int>(pick() % 6), 0.5,
                                                cfg.seed + 100 + i);
        const ComponentCatalog cat = enumerate_catalog(g, cfg.cap);
        const AuxGraph a = build_aux_direct(g, cat);
        const AuxGraph b = build_aux_by_twins(g, cat);
        for (int v = 1; v <= a.node_count() && constructions_match; ++v)
            if (a.node_set(v) != b.node_set(v)) constructions_match = false;
        if (write_graph(a.aux) != write_graph(b.aux)) constructions_match = false;

        const auto stables = enumerate_stable_sets(a.aux, cfg.cap);
        long plexes = 0;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.vertex_count());
             ++mask) {
            VertexSet s;
            for (int v = 1; v <= g.vertex_count(); ++v)
                if (mask & (std::uint64_t{1} << (v - 1))) s.push_back(v);
            if (!is_co3plex(g, s)) continue;
            ++plexes;
            if (stable_to_co3plex(a, co3plex_to_stable(a, make_co3plex(g, s))).members != s)
                bijection = false;
        }
        if (static_cast<long>(stables.size()) != plexes) bijection = false;

        if (aux_cliques_by_formula(g, maximal_cliques_general(g), a) !=
            maximal_cliques_general(a.aux).cliques)
            cliques_match = false;
    }
    table.push_back({"bijection-20-graphs", bijection});
    table.push_back({"clique-correspondence-20-graphs", cliques_match});
    table.push_back({"construction-equivalence-20-graphs", constructions_match});

    bool integral = true;
    for (int i = 0; i < 5; ++i) {
        std::mt19937_64 pick(cfg.seed + 40 + i);
        const Graph g = generate_random_chordal(3 + static_cast<int>(pick() % 5), 0.5,
                                                cfg.seed + 200 + i);
        if (!integrality_stress(g, cfg.trials, cfg.seed + 300 + i).all_integral())
            integral = false;
    }
    table.push_back({"integrality-stress", integral});

    bool all = true;
    for (const auto& [name, pass] : table) {
        all = all && pass;
        if (cfg.kv())
            std::cout << name << "=" << (pass ? "pass" : "fail") << "\n";
        else
            std::cout << name << std::string(name.size() < 36 ? 36 - name.size() : 1, ' ')
                      << (pass ? "PASS" : "FAIL") << "\n";
    }
    return all ? 0 : 1;
}

int cmd_bench(const RunConfig& cfg) {
    const Graph g = load_graph(cfg);
    ColgenConfig conf;
    conf.convention = cfg.convention();
    conf.enumeration_cap = cfg.cap;
    const auto t0 = std::chrono::steady_clock::now();
    const ColgenReport r = solve_co3plex(g, conf);
    const std::chrono::duration<double, std::milli> dt =
        std::chrono::steady_clock::now() - t0;
    int final_columns = 0;
    for (const auto& entry : r.log) final_columns = std::max(final_columns, entry.columns);
    if (cfg.kv()) {
        // timings stay out of the machine-readable record
        std::cout << "command=bench\nn=" << g.vertex_count() << "\nm=" << g.edge_count()
                  << "\nobjective=" << rat_str(r.objective)
                  << "\niterations=" << r.iterations
                  << "\ncolumns_added=" << r.columns_added
                  << "\nfinal_columns=" << final_columns << "\n";
        return 0;
    }
    std::cout << "n       m       objective  iters  added  columns  ms\n";
    std::printf("%-7d %-7d %-10s %-6ld %-6ld %-8d %.1f\n", g.vertex_count(),
                g.edge_count(), rat_str(r.objective).c_str(), r.iterations,
                r.columns_added, final_columns, dt.count());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"maximum-weight co-3-plex solver for chordal graphs"};
    app.require_subcommand(1);

    RunConfig cfg;
    if (const char* env = std::getenv("COPLEX_CAP")) {
        try {
            cfg.cap = std::stol(env);
        } catch (...) {
            std::cerr << "error: bad COPLEX_CAP '" << env << "'\n";
            return 2;
        }
        if (cfg.cap <= 0) {
            std::cerr << "error: COPLEX_CAP must be positive\n";
            return 2;
        }
    }

    auto add_common = [&](CLI::App* sub, bool input) {
        if (input) {
            sub->add_option("--input", cfg.input_path, "graph file in the DIMACS dialect");
            sub->add_option("--gen", cfg.gen_spec, "generated instance n,density,seed");
        }
        sub->add_option("--cap", cfg.cap, "enumeration cap")->check(CLI::PositiveNumber);
        sub->add_option("--format", cfg.format, "text | kv")
            ->check(CLI::IsMember({"text", "kv"}));
    };

    CLI::App* solve = app.add_subcommand("solve", "maximum-weight co-3-plex");
    add_common(solve, true);
    solve->add_option("--pricing", cfg.pricing, "dual | paper")
        ->check(CLI::IsMember({"dual", "paper"}));
    solve->add_option("--dump-lp", cfg.dump_lp_path, "write the final master in LP format");

    CLI::App* check = app.add_subcommand("check", "chordality check with certificate");
    add_common(check, true);
    CLI::App* cliques = app.add_subcommand("cliques", "maximal cliques");
    add_common(cliques, true);
    CLI::App* aux = app.add_subcommand("aux", "emit the companion graph");
    add_common(aux, true);
    CLI::App* gen = app.add_subcommand("gen", "emit a random connected chordal graph");
    add_common(gen, true);
    CLI::App* verify = app.add_subcommand("verify", "structural verification battery");
    add_common(verify, false);
    verify->add_option("--seed", cfg.seed, "base seed");
    verify->add_option("--trials", cfg.trials, "stress trials")->check(CLI::PositiveNumber);
    CLI::App* bench = app.add_subcommand("bench", "timing table for one instance");
    add_common(bench, true);
    bench->add_option("--pricing", cfg.pricing, "dual | paper")
        ->check(CLI::IsMember({"dual", "paper"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (solve->parsed()) return cmd_solve(cfg);
        if (check->parsed()) return cmd_check(cfg);
        if (cliques->parsed()) return cmd_cliques(cfg);
        if (aux->parsed()) return cmd_aux(cfg);
        if (gen->parsed()) return cmd_gen(cfg);
        if (verify->parsed()) return cmd_verify(cfg);
        if (bench->parsed()) return cmd_bench(cfg);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
