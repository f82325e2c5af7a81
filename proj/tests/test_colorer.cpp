#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "ksg/colorer.hpp"
#include "ksg/constructions.hpp"

using namespace ksg;

namespace {

Graph cycle(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

Graph complete(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

// independent oracle: direct sweep over all bit vectors with the rule check
std::vector<Coloring> brute_force_colorings(const Graph& g) {
    std::vector<Coloring> out;
    auto maxcl = maximal_cliques(g).maximum_cliques();
    for (long long m = 0; m < (1LL << g.n()); ++m) {
        Coloring c;
        for (int v = 0; v < g.n(); ++v) c.values.push_back((m >> v) & 1);
        bool ok = true;
        for (auto [a, b] : g.edges())
            if (c.values[a] && c.values[b]) ok = false;
        for (auto [a, b] : g.exclusive_pairs())
            if (c.values[a] && c.values[b]) ok = false;
        for (const auto& q : maxcl) {
            int s = 0;
            for (int v : q) s += c.values[v];
            if (s != 1) ok = false;
        }
        if (ok) out.push_back(c);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("tiny instances") {
    Graph k2 = complete(2);
    auto en = enumerate_colorings(k2, 10);
    REQUIRE(en.colorings.size() == 2);
    CHECK(en.colorings[0].bits() == "01");
    CHECK(en.colorings[1].bits() == "10");

    Graph one(1);  // a single vertex is its own maximum clique
    auto e1 = enumerate_colorings(one, 10);
    REQUIRE(e1.colorings.size() == 1);
    CHECK(e1.colorings[0].bits() == "1");

    // edgeless graph: all-ones is the unique coloring
    Graph three(3);
    auto e3 = enumerate_colorings(three, 10);
    REQUIRE(e3.colorings.size() == 1);
    CHECK(e3.colorings[0].bits() == "111");

    CHECK(solve(Graph(0)).status == SolveStatus::Colorable);
    CHECK_THROWS(enumerate_colorings(k2, 0));
}

TEST_CASE("triangle: one vertex per maximum clique") {
    auto en = enumerate_colorings(complete(3), 10);
    REQUIRE(en.colorings.size() == 3);
    for (const auto& c : en.colorings) CHECK(validate_coloring(complete(3), c));
}

TEST_CASE("C4 colorings: the two alternating patterns") {
    auto en = enumerate_colorings(cycle(4), 10);
    REQUIRE(en.colorings.size() == 2);
    CHECK(en.colorings[0].bits() == "0101");
    CHECK(en.colorings[1].bits() == "1010");
}

TEST_CASE("randomized sweep against the brute-force oracle") {
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 2 + rng() % 8;
        Graph g(n);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                int roll = rng() % 5;
                if (roll == 0 || roll == 1) g.add_edge(i, j);
                else if (roll == 2 && !g.adjacent(i, j)) g.add_exclusive(i, j);
            }
        auto truth = brute_force_colorings(g);
        auto ours = enumerate_colorings(g, 1 << 20).colorings;
        REQUIRE(ours == truth);
        CHECK((solve(g).status == SolveStatus::Colorable) == !truth.empty());
    }
}

TEST_CASE("enumerate agrees with the brute-force oracle") {
    for (const Graph& g : {build_clifton().graph, cycle(5), cycle(6), complete(4)}) {
        auto ours = enumerate_colorings(g, 1000000).colorings;
        auto truth = brute_force_colorings(g);
        CHECK(ours == truth);
        for (const auto& c : ours) CHECK(validate_coloring(g, c));
    }
    // with exclusivity pairs
    Graph g0 = build_g0(3, BuildMode::Virtual).graph;
    CHECK(enumerate_colorings(g0, 100).colorings == brute_force_colorings(g0));
}

TEST_CASE("solve and enumerate agree on colorability") {
    for (const Graph& g : {build_clifton().graph, build_ks1(BuildMode::Virtual).graph, cycle(5)}) {
        bool s = solve(g).status == SolveStatus::Colorable;
        bool e = !enumerate_colorings(g, 1).colorings.empty();
        CHECK(s == e);
    }
}

TEST_CASE("odd cycles admit no coloring, even cycles do") {
    CHECK(solve(cycle(7)).status == SolveStatus::Uncolorable);
    CHECK(solve(cycle(6)).status == SolveStatus::Colorable);
}

TEST_CASE("solver witnesses always validate") {
    for (const Graph& g : {build_clifton().graph, build_gadget_pair(0.3L).graph, cycle(6)}) {
        SolveResult r = solve(g);
        REQUIRE(r.status == SolveStatus::Colorable);
        CHECK(validate_coloring(g, r.coloring));
    }
}

TEST_CASE("pins narrow the solution set") {
    Graph k2 = complete(2);
    SolveOptions opt;
    opt.pins = {{0, 1}};
    SolveResult r = solve(k2, opt);
    REQUIRE(r.status == SolveStatus::Colorable);
    CHECK(r.coloring.bits() == "10");
    opt.pins = {{0, 1}, {1, 1}};
    CHECK(solve(k2, opt).status == SolveStatus::Uncolorable);
    opt.pins = {{0, 2}};
    CHECK_THROWS(solve(k2, opt));
}

TEST_CASE("node budget reports exhaustion") {
    SolveOptions opt;
    opt.node_budget = 1;
    CHECK(solve(build_state_dependent_40().graph, opt).status == SolveStatus::BudgetExceeded);
    auto en = enumerate_colorings(build_clifton().graph, 100, opt);
    CHECK(en.budget_exceeded);
}

TEST_CASE("is_gadget on clifton: certificate and refusals") {
    Graph g = build_clifton().graph;
    GadgetCheck ok = is_gadget(g, 0, 7);
    CHECK(ok.is_gadget());
    REQUIRE(ok.witness.has_value());
    CHECK(validate_coloring(g, *ok.witness));
    CHECK(ok.digest.size() == 64);
    // clifton's exclusion closes under pin propagation alone: zero branch nodes
    CHECK(ok.exclusion_stats.nodes >= 0);

    GadgetCheck adj = is_gadget(g, 0, 1);  // u1 ~ u2
    CHECK(adj.verdict == GadgetCheck::Verdict::AdjacentPair);

    GadgetCheck cex = is_gadget(g, 0, 3);  // u1, u4 admit a joint 1
    CHECK(cex.verdict == GadgetCheck::Verdict::Counterexample);
    REQUIRE(cex.counterexample.has_value());
    CHECK(cex.counterexample->values[0] == 1);
    CHECK(cex.counterexample->values[3] == 1);
    CHECK(validate_coloring(g, *cex.counterexample));

    GadgetCheck unc = is_gadget(build_ks1(BuildMode::Virtual).graph, 0, 4);
    CHECK(unc.verdict == GadgetCheck::Verdict::Uncolorable);
    CHECK_THROWS(is_gadget(g, 2, 2));
}

TEST_CASE("is_gadget exclusion cross-checked by exhaustive enumeration") {
    Graph g = build_clifton().graph;
    for (int a = 0; a < g.n(); ++a)
        for (int b = a + 1; b < g.n(); ++b) {
            if (g.adjacent(a, b)) continue;
            bool never_both = true;
            for (const auto& c : enumerate_colorings(g, 100000).colorings)
                if (c.values[a] && c.values[b]) never_both = false;
            CHECK(is_gadget(g, a, b).is_gadget() == never_both);
        }
}

TEST_CASE("find_gadget_pairs") {
    Graph g = build_clifton().graph;
    auto pairs = find_gadget_pairs(g);
    REQUIRE(pairs.size() == 1);
    CHECK(pairs[0] == std::pair<int, int>{0, 7});  // exactly the distinguished pair

    CHECK(find_gadget_pairs(cycle(4)).empty());
    CHECK_THROWS(find_gadget_pairs(build_ks1(BuildMode::Virtual).graph));

    // the 40-vector set: every non-adjacent pair through the forced-zero vertex
    Construction c40 = build_state_dependent_40();
    FaithfulVersion fv = faithful_version(*c40.vectors);
    auto p40 = find_gadget_pairs(fv.graph);
    int u1 = fv.merge_map[0];
    for (int w = 0; w < fv.graph.n(); ++w) {
        if (w == u1 || fv.graph.adjacent(u1, w)) continue;
        auto want = std::pair<int, int>{std::min(u1, w), std::max(u1, w)};
        CHECK(std::find(p40.begin(), p40.end(), want) != p40.end());
    }
}

TEST_CASE("forced values") {
    Construction g0 = build_g0(3, BuildMode::Virtual);
    CHECK(forced_value(g0.graph, g0.distinguished[0]) == ForcedValue::Zero);
    Construction g1 = build_g1(BuildMode::Virtual);
    CHECK(forced_value(g1.graph, g1.distinguished[0]) == ForcedValue::One);
    CHECK(forced_value(complete(2), 0) == ForcedValue::Unforced);
    CHECK_THROWS(forced_value(build_ks1(BuildMode::Virtual).graph, 0));
}

TEST_CASE("criticality: fixed point and disjoint-union core") {
    Graph ks1 = build_ks1(BuildMode::Virtual).graph;
    Graph core = make_vertex_critical(ks1);
    CHECK(core == ks1);  // already vertex-critical
    // union of two disjoint copies shrinks back to one component's core
    Graph uni(2 * ks1.n());
    for (auto [a, b] : ks1.edges()) {
        uni.add_edge(a, b);
        uni.add_edge(a + ks1.n(), b + ks1.n());
    }
    for (auto [a, b] : ks1.exclusive_pairs()) {
        uni.add_exclusive(a, b);
        uni.add_exclusive(a + ks1.n(), b + ks1.n());
    }
    Graph ucore = make_vertex_critical(uni);
    CHECK(ucore.n() == ks1.n());
    CHECK(solve(ucore).status == SolveStatus::Uncolorable);
    CHECK(maximal_cliques(ucore).omega == maximal_cliques(uni).omega);
    CHECK_THROWS(make_vertex_critical(complete(3)));
}

TEST_CASE("edge-critical cores: minimal under edge deletion, omega preserved") {
    Graph ks1 = build_ks1(BuildMode::Virtual).graph;
    int w0 = maximal_cliques(ks1).omega;
    Graph core = make_edge_critical(ks1);
    CHECK(solve(core).status == SolveStatus::Uncolorable);
    CHECK(maximal_cliques(core).omega == w0);
    for (const auto& e : core.edges()) {
        Graph h = delete_edges(core, {e});
        if (maximal_cliques(h).omega != w0) continue;  // omega-dropping deletions excluded
        CHECK(solve(h).status == SolveStatus::Colorable);
    }
    CHECK_THROWS(make_edge_critical(complete(3)));
}

TEST_CASE("gadget extraction from the virtual KS graphs") {
    GadgetExtraction ex = extract_gadget(build_ks1(BuildMode::Virtual).graph);
    CHECK(ex.case_tag == "i");
    CHECK(is_gadget(ex.graph, ex.pair.first, ex.pair.second).is_gadget());
    CHECK_THROWS(extract_gadget(complete(3)));  // colorable input
}

TEST_CASE("parallel enumeration matches the serial reference") {
    for (const Graph& g : {build_clifton().graph, build_gadget_pair(0.3L).graph}) {
        SolveOptions par;
        par.parallel = true;
        auto a = enumerate_colorings(g, 1000000).colorings;
        auto b = enumerate_colorings(g, 1000000, par).colorings;
        CHECK(a == b);
    }
    Construction c40 = build_state_dependent_40();
    FaithfulVersion fv = faithful_version(*c40.vectors);
    SolveOptions par;
    par.parallel = true;
    CHECK(enumerate_colorings(fv.graph, 1000).colorings == enumerate_colorings(fv.graph, 1000, par).colorings);
}

TEST_CASE("enumeration cap truncates after the lexicographic sort") {
    Graph k3 = complete(3);
    auto en = enumerate_colorings(k3, 2);
    CHECK(en.truncated);
    REQUIRE(en.colorings.size() == 2);
    CHECK(en.colorings[0].bits() == "001");
}
