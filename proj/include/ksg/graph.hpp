#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace ksg {

using Edge = std::pair<int, int>;

// Finite simple graph with an optional set of "exclusive pairs": non-adjacent
// vertex pairs carrying only the pairwise not-both-1 coloring constraint
// (the virtual-edge abstraction of a gadget). Exclusive pairs never take part
// in cliques. Instances are treated as immutable once built.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    int n() const { return n_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<Edge>& exclusive_pairs() const { return exclusive_; }
    const std::vector<std::string>& labels() const { return labels_; }

    void add_edge(int a, int b);
    void add_exclusive(int a, int b);
    void set_labels(std::vector<std::string> labels);

    bool adjacent(int a, int b) const;
    bool exclusive_with(int a, int b) const;
    std::vector<int> neighbors(int v) const;
    int degree(int v) const;

    bool operator==(const Graph& o) const {
        return n_ == o.n_ && edges_ == o.edges_ && exclusive_ == o.exclusive_;
    }

private:
    int n_ = 0;
    std::vector<Edge> edges_;      // kept sorted, i<j
    std::vector<Edge> exclusive_;  // kept sorted, i<j
    std::vector<std::string> labels_;
    std::vector<std::vector<uint64_t>> adj_;  // bitset rows

    void check_vertex(int v) const;
};

struct CliqueReport {
    std::vector<std::vector<int>> maximal_cliques;  // canonical: each sorted, list lex-sorted
    int omega = 0;

    // maximum cliques = maximal cliques of size omega
    std::vector<std::vector<int>> maximum_cliques() const;
};

// All maximal cliques over real edges (exclusive pairs excluded), pivoted
// Bron-Kerbosch, canonical output order. Isolated vertices count as cliques
// of size 1; the empty graph yields an empty list.
CliqueReport maximal_cliques(const Graph& g);

// standard subgraph operations; the returned map sends new indices to old
Graph induced_subgraph(const Graph& g, const std::vector<int>& vs, std::vector<int>* old_of_new = nullptr);
Graph delete_vertex(const Graph& g, int v, std::vector<int>* old_of_new = nullptr);
Graph delete_edges(const Graph& g, const std::vector<Edge>& es);

// One occurrence of the dimension-d forbidden pattern: a four-cycle
// cycle[0]-cycle[1]-cycle[2]-cycle[3] plus d-3 extra vertices adjacent to the
// cycle and to each other.
struct ForbiddenEmbedding {
    std::vector<int> cycle;
    std::vector<int> apex;
};

// Subgraph occurrences of the dimension-d forbidden pattern (square plus
// (d-3)-clique joined to it). d >= 3; the pattern family extends to any
// dimension by the same rule. Throws on d < 3.
std::vector<ForbiddenEmbedding> find_forbidden(const Graph& g, int d);

}  // namespace ksg
