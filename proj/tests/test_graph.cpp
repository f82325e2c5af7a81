#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ksg/constructions.hpp"
#include "ksg/graph.hpp"
#include "ksg/jsonio.hpp"

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

// independent four-cycle counter: pairs with two or more common neighbours
bool has_c4_subgraph(const Graph& g) {
    for (int a = 0; a < g.n(); ++a)
        for (int c = a + 1; c < g.n(); ++c) {
            int common = 0;
            for (int u = 0; u < g.n(); ++u)
                if (u != a && u != c && g.adjacent(a, u) && g.adjacent(c, u)) ++common;
            if (common >= 2) return true;
        }
    return false;
}

Graph fig8_pattern(int d) {
    Graph g(4 + (d - 3));
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(2, 3);
    g.add_edge(0, 3);
    for (int a = 0; a < d - 3; ++a) {
        for (int v = 0; v < 4; ++v) g.add_edge(4 + a, v);
        for (int b = 0; b < a; ++b) g.add_edge(4 + a, 4 + b);
    }
    return g;
}

}  // namespace

TEST_CASE("graph invariants") {
    Graph g(4);
    g.add_edge(0, 1);
    CHECK_THROWS(g.add_edge(0, 0));
    CHECK_THROWS(g.add_edge(0, 4));
    g.add_exclusive(2, 3);
    CHECK_THROWS(g.add_edge(2, 3));      // conflicts with exclusive pair
    CHECK_THROWS(g.add_exclusive(0, 1)); // conflicts with edge
    CHECK(g.adjacent(1, 0));
    CHECK(g.exclusive_with(3, 2));
}

TEST_CASE("maximal cliques of C4 are its four edges") {
    CliqueReport rep = maximal_cliques(cycle(4));
    CHECK(rep.omega == 2);
    REQUIRE(rep.maximal_cliques.size() == 4);
    CHECK(rep.maximal_cliques[0] == std::vector<int>{0, 1});
}

TEST_CASE("K4 is a single maximal clique") {
    CliqueReport rep = maximal_cliques(complete(4));
    CHECK(rep.omega == 4);
    REQUIRE(rep.maximal_cliques.size() == 1);
    CHECK(rep.maximal_cliques[0] == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("clifton graph: omega 3 with the two expected maximum cliques") {
    Construction c = build_clifton();
    CliqueReport rep = maximal_cliques(c.graph);
    CHECK(rep.omega == 3);
    auto maxcl = rep.maximum_cliques();
    REQUIRE(maxcl.size() == 2);
    CHECK(maxcl[0] == std::vector<int>{1, 3, 5});  // u2, u4, u6
    CHECK(maxcl[1] == std::vector<int>{2, 4, 6});  // u3, u5, u7
}

TEST_CASE("maximal cliques are maximal: no outside vertex extends one") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 4 + rng() % 6;
        Graph g(n);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (rng() % 3) g.add_edge(i, j);
        for (const auto& q : maximal_cliques(g).maximal_cliques) {
            for (size_t a = 0; a < q.size(); ++a)
                for (size_t b = a + 1; b < q.size(); ++b) CHECK(g.adjacent(q[a], q[b]));
            for (int v = 0; v < n; ++v) {
                bool inq = std::find(q.begin(), q.end(), v) != q.end();
                if (inq) continue;
                bool extends = true;
                for (int u : q) extends &= g.adjacent(u, v);
                CHECK_FALSE(extends);
            }
        }
    }
}

TEST_CASE("subgraph operations") {
    Graph k3 = complete(3);
    std::vector<int> map;
    Graph h = induced_subgraph(complete(4), {0, 1, 2}, &map);
    CHECK(h.edges().size() == 3);
    CHECK(map == std::vector<int>{0, 1, 2});
    Graph p3 = delete_vertex(cycle(4), 0);
    CHECK(p3.n() == 3);
    CHECK(p3.edges().size() == 2);
    Graph path = delete_edges(k3, {{0, 1}});
    CHECK(path.edges().size() == 2);
    CHECK_THROWS(delete_edges(k3, {{0, 0}}));
    CHECK_THROWS(delete_vertex(k3, 5));
    // induced subgraph restricted to the same set reconstructs g
    Graph g = cycle(5);
    CHECK(induced_subgraph(g, {0, 1, 2, 3, 4}) == g);
}

TEST_CASE("forbidden patterns: square family") {
    auto sq = find_forbidden(cycle(4), 3);
    REQUIRE(sq.size() == 1);
    CHECK(sq[0].cycle == std::vector<int>{0, 1, 2, 3});
    CHECK(sq[0].apex.empty());

    CHECK(find_forbidden(build_clifton().graph, 3).empty());  // clifton is square-free

    CHECK(find_forbidden(fig8_pattern(4), 4).size() == 1);
    CHECK(find_forbidden(fig8_pattern(5), 5).size() == 1);
    CHECK(find_forbidden(fig8_pattern(6), 6).size() == 1);
    // the d=4 pattern contains several plain squares but only one has an apex
    CHECK(find_forbidden(fig8_pattern(4), 3).size() == 5);
    CHECK_THROWS(find_forbidden(cycle(4), 2));
}

TEST_CASE("square detector agrees with an independent four-cycle counter") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 4 + rng() % 7;
        Graph g(n);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (rng() % 4 == 0) g.add_edge(i, j);
        CHECK(find_forbidden(g, 3).empty() == !has_c4_subgraph(g));
    }
}

TEST_CASE("graph json round trip, symmetrization and hashing") {
    Graph g(4);
    g.add_edge(0, 1);
    g.add_edge(2, 3);
    g.add_exclusive(0, 3);
    g.set_labels({"a", "b", "c", "d"});
    json j = graph_to_json(g);
    Graph back = graph_from_json(j);
    CHECK(back == g);
    CHECK(back.labels() == g.labels());
    CHECK(canonical_dump(graph_to_json(back)) == canonical_dump(j));
    CHECK(graph_sha(g) == graph_sha(back));
    // loader accepts reversed pairs
    json rev = j;
    rev["edges"] = json::array({json::array({1, 0}), json::array({3, 2})});
    CHECK(graph_from_json(rev) == g);
    CHECK(graph_sha(g).size() == 64);
}
