// ksg: build, verify and transform Kochen-Specker gadget structures.
// Exit codes: 0 = property holds / success, 1 = property refuted, 2 = error.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "ksg/colorer.hpp"
#include "ksg/constructions.hpp"
#include "ksg/jsonio.hpp"
#include "ksg/lp.hpp"
#include "ksg/randomness.hpp"
#include "ksg/reduction.hpp"
#include "ksg/sha256.hpp"

using namespace ksg;

namespace {

struct Input {
    json raw;
    std::string sha;
};

Input load(const std::string& path) {
    std::string bytes = read_input(path);
    return {json::parse(bytes), sha256_hex(bytes)};
}

Graph graph_of(const Input& in) {
    if (in.raw.contains("graph")) return graph_from_json(in.raw.at("graph"));
    return graph_from_json(in.raw);
}

Construction construction_of(const Input& in) {
    if (in.raw.contains("graph")) return construction_from_json(in.raw);
    // bare vector file: wrap it
    if (in.raw.contains("vectors") && in.raw.contains("d")) {
        Construction c;
        c.vectors = vectors_from_json(in.raw);
        c.graph = orthogonality_graph(*c.vectors);
        return c;
    }
    Construction c;
    c.graph = graph_from_json(in.raw);
    return c;
}

int resolve_vertex(const Graph& g, const std::string& arg) {
    if (!g.labels().empty())
        for (int v = 0; v < g.n(); ++v)
            if (g.labels()[v] == arg) return v;
    try {
        size_t pos = 0;
        int v = std::stoi(arg, &pos);
        if (pos == arg.size() && v >= 0 && v < g.n()) return v;
    } catch (...) {
    }
    throw std::invalid_argument("vertex '" + arg + "' matches no label or 0-based index");
}

void emit(const json& j) { std::cout << canonical_dump(j) << "\n"; }

json stats_json(const SearchStats& s) { return json{{"nodes", s.nodes}, {"max_depth", s.max_depth}}; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Kochen-Specker gadget toolkit"};
    app.require_subcommand(1);

    std::string file, file2, out, mapfile, mode = "virtual", name;
    std::string va, vb;
    long long budget = 100000000;
    if (const char* env = std::getenv("KSG_BUDGET")) budget = std::atoll(env);
    double tol = 1e-9, overlap = 1.0 / 3, x = 0.5;
    int k = 1, t = 1, d = 3, p = 3, q = 1;
    bool edgecrit = false;
    std::vector<std::string> pairargs;

    auto* build = app.add_subcommand("build", "build a named construction");
    build->add_option("name", name)->required();
    build->add_option("--overlap", overlap);
    build->add_option("--x", x);
    build->add_option("--k", k);
    build->add_option("--t", t);
    build->add_option("--d", d);
    build->add_option("--p", p);
    build->add_option("--q", q);
    build->add_option("--mode", mode)->check(CLI::IsMember({"virtual", "expanded"}));
    bool mode_set = false;
    build->callback([&] { mode_set = build->count("--mode") > 0; });
    build->add_option("--out", out);

    auto* graphcmd = app.add_subcommand("graph", "coloring operations on a graph file");
    graphcmd->require_subcommand(1);
    auto* gcheck = graphcmd->add_subcommand("check", "decide {0,1}-colorability");
    auto* ggadgets = graphcmd->add_subcommand("gadgets", "list all excluded non-adjacent pairs");
    auto* gcrit = graphcmd->add_subcommand("critical", "shrink to a critical core");
    gcrit->add_flag("--edge", edgecrit);
    auto* gextract = graphcmd->add_subcommand("extract", "extract a 01-gadget from a KS graph");
    for (auto* c : {gcheck, ggadgets, gcrit, gextract}) {
        c->add_option("file", file)->required();
        c->add_option("--budget", budget);
    }
    long long cap = 0;
    gcheck->add_option("--cap", cap, "also enumerate up to this many colorings");

    auto* vectors = app.add_subcommand("vectors", "vector-set operations");
    vectors->require_subcommand(1);
    auto* vgraph = vectors->add_subcommand("graph", "orthogonality graph of a vector file");
    vgraph->add_option("file", file)->required();
    vgraph->add_option("--tol", tol);
    vgraph->add_option("--out", out);
    auto* vverify = vectors->add_subcommand("verify", "check a vector set against a graph");
    vverify->add_option("vectors", file)->required();
    vverify->add_option("graph", file2)->required();
    vverify->add_option("--tol", tol);

    auto* lpcmd = app.add_subcommand("lp", "exact LP over the assignment polytope");
    lpcmd->require_subcommand(1);
    auto* lpmax = lpcmd->add_subcommand("max-pair", "maximize p_a + p_b");
    auto* lptable = lpcmd->add_subcommand("table", "logical-indeterminacy table of a pair");
    for (auto* c : {lpmax, lptable}) {
        c->add_option("file", file)->required();
        c->add_option("a", va)->required();
        c->add_option("b", vb)->required();
    }

    auto* reducecmd = app.add_subcommand("reduce", "omega-colorability reduction compiler");
    reducecmd->add_option("file", file)->required();
    reducecmd->add_option("--mode", mode)->check(CLI::IsMember({"virtual", "expanded"}));
    reducecmd->add_option("--out", out);
    reducecmd->add_option("--map", mapfile);

    auto* bounds = app.add_subcommand("bounds", "randomness bounds for a pair");
    bounds->add_option("file", file)->required();
    bounds->add_option("--pair", pairargs)->expected(2);

    auto* forbidden = app.add_subcommand("forbidden", "forbidden-subgraph detection");
    forbidden->add_option("file", file)->required();
    forbidden->add_option("-d,--dim", d);

    CLI11_PARSE(app, argc, argv);

    try {
        if (build->parsed()) {
            json params = json::object();  // forward only what the user actually set
            if (build->count("--overlap")) params["overlap"] = overlap;
            if (build->count("--x")) params["x"] = x;
            if (build->count("--k")) params["k"] = k;
            if (build->count("--t")) params["t"] = t;
            if (build->count("--d")) params["d"] = d;
            if (build->count("--p")) params["p"] = p;
            if (build->count("--q")) params["q"] = q;
            if (mode_set) params["mode"] = mode;
            Construction c = build_by_name(name, params);
            std::string bytes = canonical_dump(construction_to_json(c)) + "\n";
            if (out.empty())
                std::cout << bytes;
            else
                write_output(out, bytes);
            return 0;
        }

        if (gcheck->parsed()) {
            Input in = load(file);
            Graph g = graph_of(in);
            SolveOptions opt;
            opt.node_budget = budget;
            SolveResult r = solve(g, opt);
            if (r.status == SolveStatus::BudgetExceeded) {
                emit(json{{"verdict", "budget_exceeded"}, {"stats", stats_json(r.stats)}, {"input_sha256", in.sha}});
                return 2;
            }
            if (r.status == SolveStatus::Colorable) {
                json verdict{{"verdict", "colorable"},
                             {"coloring", r.coloring.bits()},
                             {"stats", stats_json(r.stats)},
                             {"graph_sha256", graph_sha(g)},
                             {"input_sha256", in.sha}};
                if (cap > 0) {
                    EnumerateResult en = enumerate_colorings(g, cap, opt);
                    if (en.budget_exceeded) {
                        emit(json{{"verdict", "budget_exceeded"}, {"input_sha256", in.sha}});
                        return 2;
                    }
                    json all = json::array();
                    for (const auto& c : en.colorings) all.push_back(c.bits());
                    verdict["colorings"] = all;
                    verdict["truncated"] = en.truncated;
                }
                emit(verdict);
                return 0;
            }
            CliqueReport rep = maximal_cliques(g);
            emit(json{{"verdict", "uncolorable"},
                      {"certificate",
                       {{"graph_sha256", graph_sha(g)},
                        {"search_stats", stats_json(r.stats)},
                        {"omega", rep.omega},
                        {"maximum_cliques", rep.maximum_cliques().size()}}},
                      {"input_sha256", in.sha}});
            return 1;
        }

        if (ggadgets->parsed()) {
            Input in = load(file);
            Graph g = graph_of(in);
            SolveOptions opt;
            opt.node_budget = budget;
            auto pairs = find_gadget_pairs(g, opt);
            json arr = json::array();
            for (auto [a, b] : pairs) arr.push_back(json::array({a, b}));
            emit(json{{"pairs", arr}, {"graph_sha256", graph_sha(g)}, {"input_sha256", in.sha}});
            return pairs.empty() ? 1 : 0;
        }

        if (gcrit->parsed()) {
            Input in = load(file);
            Graph g = graph_of(in);
            SolveOptions opt;
            opt.node_budget = budget;
            Graph core = edgecrit ? make_edge_critical(g, opt) : make_vertex_critical(g, opt);
            emit(json{{"graph", graph_to_json(core)}, {"input_sha256", in.sha}});
            return 0;
        }

        if (gextract->parsed()) {
            Input in = load(file);
            Graph g = graph_of(in);
            SolveOptions opt;
            opt.node_budget = budget;
            GadgetExtraction ex = extract_gadget(g, opt);
            emit(json{{"graph", graph_to_json(ex.graph)},
                      {"pair", json::array({ex.pair.first, ex.pair.second})},
                      {"case", ex.case_tag},
                      {"input_sha256", in.sha}});
            return 0;
        }

        if (vgraph->parsed()) {
            Input in = load(file);
            VectorSet V = in.raw.contains("vectors") && in.raw.contains("d")
                              ? vectors_from_json(in.raw)
                              : vectors_from_json(in.raw.at("vectors"));
            Graph g = orthogonality_graph(V, tol);
            std::string bytes = canonical_dump(json{{"graph", graph_to_json(g)}, {"input_sha256", in.sha}}) + "\n";
            if (out.empty())
                std::cout << bytes;
            else
                write_output(out, bytes);
            return 0;
        }

        if (vverify->parsed()) {
            Input vin = load(file), gin = load(file2);
            VectorSet V = vin.raw.contains("d") ? vectors_from_json(vin.raw) : vectors_from_json(vin.raw.at("vectors"));
            Graph g = graph_of(gin);
            FaithfulReport rep = check_faithful(V, g, tol);
            json viol = json::array();
            for (const auto& v : rep.violations) {
                const char* kind = v.kind == FaithfulViolation::Kind::EdgeNotOrthogonal ? "edge_not_orthogonal"
                                   : v.kind == FaithfulViolation::Kind::OrthogonalNonEdge ? "orthogonal_non_edge"
                                                                                          : "duplicate_ray";
                viol.push_back(json{{"kind", kind}, {"i", v.i}, {"j", v.j}});
            }
            emit(json{{"faithful", rep.ok},
                      {"violations", viol},
                      {"vectors_sha256", vin.sha},
                      {"graph_sha256", gin.sha}});
            return rep.ok ? 0 : 1;
        }

        if (lpmax->parsed() || lptable->parsed()) {
            Input in = load(file);
            Graph g = graph_of(in);
            int a = resolve_vertex(g, va), b = resolve_vertex(g, vb);
            if (lpmax->parsed()) {
                std::vector<Rational> obj(g.n(), Rational(0));
                obj[a] = Rational(1);
                obj[b] = Rational(1);
                LPResult r = lp_maximize(g, obj);
                if (r.status == LPStatus::Infeasible) {
                    json farkas = json::array();
                    for (const auto& f : r.farkas) farkas.push_back(f.to_string());
                    emit(json{{"status", "infeasible"}, {"farkas", farkas}, {"input_sha256", in.sha}});
                    return 1;
                }
                json primal = json::array();
                for (const auto& v : r.primal.values) primal.push_back(v.to_string());
                emit(json{{"status", "optimal"},
                          {"optimum", r.optimum.to_string()},
                          {"primal", primal},
                          {"input_sha256", in.sha}});
                return 0;
            }
            auto tab = indeterminacy_table(g, a, b);
            emit(json{{"table",
                       {{"00", tab[0][0]}, {"01", tab[0][1]}, {"10", tab[1][0]}, {"11", tab[1][1]}}},
                      {"input_sha256", in.sha}});
            return 0;
        }

        if (reducecmd->parsed()) {
            Input in = load(file);
            Graph g = graph_of(in);
            Reduction r = reduce(g, mode == "expanded" ? BuildMode::Expanded : BuildMode::Virtual);
            json h = json{{"graph", graph_to_json(r.target)}, {"input_sha256", in.sha}};
            json m;
            json vm = json::array();
            for (const auto& c : r.vertex_map) vm.push_back(c);
            m["vertex_map"] = vm;
            json pl = json::array();
            for (const auto& pla : r.placements)
                pl.push_back(json{{"edge", json::array({pla.source_edge.first, pla.source_edge.second})},
                                  {"index", pla.index},
                                  {"pair", json::array({pla.distinguished.first, pla.distinguished.second})},
                                  {"gadget", pla.gadget_id}});
            m["placements"] = pl;
            if (out.empty())
                std::cout << canonical_dump(h) << "\n";
            else
                write_output(out, canonical_dump(h) + "\n");
            if (!mapfile.empty()) write_output(mapfile, canonical_dump(m) + "\n");
            return 0;
        }

        if (bounds->parsed()) {
            Input in = load(file);
            Construction c = construction_of(in);
            int a = resolve_vertex(c.graph, pairargs.at(0)), b = resolve_vertex(c.graph, pairargs.at(1));
            PairBounds pb = pair_bounds(c, a, b);
            json jq;
            if (pb.quantum_prob.exact())
                jq = pb.quantum_prob.rat().to_string();
            else
                jq = pb.quantum_prob.to_long_double();
            emit(json{{"pair", json::array({a, b})},
                      {"quantum_prob", jq},
                      {"lp_value", pb.lp_value.to_string()},
                      {"ns_upper", pb.ns_upper.to_string()},
                      {"adjacent_warning", pb.adjacent_warning},
                      {"input_sha256", in.sha}});
            return 0;
        }

        if (forbidden->parsed()) {
            Input in = load(file);
            Graph g = graph_of(in);
            auto em = find_forbidden(g, d);
            json arr = json::array();
            for (const auto& e : em) arr.push_back(json{{"cycle", e.cycle}, {"apex", e.apex}});
            emit(json{{"dimension", d},
                      {"embeddings", arr},
                      {"free", em.empty()},
                      {"input_sha256", in.sha}});
            return em.empty() ? 0 : 1;
        }
    } catch (const json::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
