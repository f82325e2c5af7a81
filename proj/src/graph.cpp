#include "ksg/graph.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <tuple>

namespace ksg {

Graph::Graph(int n) : n_(n) {
    if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
    adj_.assign(n, std::vector<uint64_t>((n + 63) / 64, 0));
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("Graph: vertex " + std::to_string(v) + " out of range");
}

void Graph::add_edge(int a, int b) {
    check_vertex(a);
    check_vertex(b);
    if (a == b) throw std::invalid_argument("Graph: self-loop");
    if (a > b) std::swap(a, b);
    if (adjacent(a, b)) return;
    if (exclusive_with(a, b)) throw std::invalid_argument("Graph: edge conflicts with exclusive pair");
    edges_.insert(std::lower_bound(edges_.begin(), edges_.end(), Edge{a, b}), {a, b});
    adj_[a][b / 64] |= 1ull << (b % 64);
    adj_[b][a / 64] |= 1ull << (a % 64);
}

void Graph::add_exclusive(int a, int b) {
    check_vertex(a);
    check_vertex(b);
    if (a == b) throw std::invalid_argument("Graph: exclusive self-pair");
    if (a > b) std::swap(a, b);
    if (adjacent(a, b)) throw std::invalid_argument("Graph: exclusive pair conflicts with edge");
    if (exclusive_with(a, b)) return;
    exclusive_.insert(std::lower_bound(exclusive_.begin(), exclusive_.end(), Edge{a, b}), {a, b});
}

void Graph::set_labels(std::vector<std::string> labels) {
    if (!labels.empty() && static_cast<int>(labels.size()) != n_)
        throw std::invalid_argument("Graph: label count mismatch");
    labels_ = std::move(labels);
}

bool Graph::adjacent(int a, int b) const {
    check_vertex(a);
    check_vertex(b);
    if (a == b) return false;
    return (adj_[a][b / 64] >> (b % 64)) & 1ull;
}

bool Graph::exclusive_with(int a, int b) const {
    if (a > b) std::swap(a, b);
    return std::binary_search(exclusive_.begin(), exclusive_.end(), Edge{a, b});
}

std::vector<int> Graph::neighbors(int v) const {
    check_vertex(v);
    std::vector<int> out;
    for (int u = 0; u < n_; ++u)
        if (u != v && adjacent(v, u)) out.push_back(u);
    return out;
}

int Graph::degree(int v) const { return static_cast<int>(neighbors(v).size()); }

std::vector<std::vector<int>> CliqueReport::maximum_cliques() const {
    std::vector<std::vector<int>> out;
    for (const auto& c : maximal_cliques)
        if (static_cast<int>(c.size()) == omega) out.push_back(c);
    return out;
}

namespace {

using Bits = std::vector<uint64_t>;

int popcount(const Bits& b) {
    int c = 0;
    for (uint64_t w : b) c += __builtin_popcountll(w);
    return c;
}

bool empty_bits(const Bits& b) {
    for (uint64_t w : b)
        if (w) return false;
    return true;
}

void bk_pivot(const std::vector<Bits>& adj, Bits R, Bits P, Bits X, std::vector<int>& stack,
              std::vector<std::vector<int>>& out) {
    if (empty_bits(P) && empty_bits(X)) {
        out.push_back(stack);
        return;
    }
    // pivot: vertex of P|X with most neighbours in P
    int pivot = -1, best = -1;
    const int words = static_cast<int>(P.size());
    for (int w = 0; w < words; ++w) {
        uint64_t m = P[w] | X[w];
        while (m) {
            int v = w * 64 + __builtin_ctzll(m);
            m &= m - 1;
            Bits t(words);
            for (int k = 0; k < words; ++k) t[k] = P[k] & adj[v][k];
            int c = popcount(t);
            if (c > best) {
                best = c;
                pivot = v;
            }
        }
    }
    Bits cand(words);
    for (int k = 0; k < words; ++k) cand[k] = P[k] & ~adj[pivot][k];
    for (int w = 0; w < words; ++w) {
        uint64_t m = cand[w];
        while (m) {
            int v = w * 64 + __builtin_ctzll(m);
            m &= m - 1;
            Bits P2(words), X2(words);
            for (int k = 0; k < words; ++k) {
                P2[k] = P[k] & adj[v][k];
                X2[k] = X[k] & adj[v][k];
            }
            stack.push_back(v);
            Bits R2 = R;
            R2[v / 64] |= 1ull << (v % 64);
            bk_pivot(adj, R2, P2, X2, stack, out);
            stack.pop_back();
            P[v / 64] &= ~(1ull << (v % 64));
            X[v / 64] |= 1ull << (v % 64);
        }
    }
}

}  // namespace

CliqueReport maximal_cliques(const Graph& g) {
    CliqueReport rep;
    int n = g.n();
    if (n == 0) return rep;
    int words = (n + 63) / 64;
    std::vector<Bits> adj(n, Bits(words, 0));
    for (auto [a, b] : g.edges()) {
        adj[a][b / 64] |= 1ull << (b % 64);
        adj[b][a / 64] |= 1ull << (a % 64);
    }
    Bits P(words, 0);
    for (int v = 0; v < n; ++v) P[v / 64] |= 1ull << (v % 64);
    std::vector<int> stack;
    bk_pivot(adj, Bits(words, 0), P, Bits(words, 0), stack, rep.maximal_cliques);
    for (auto& c : rep.maximal_cliques) std::sort(c.begin(), c.end());
    std::sort(rep.maximal_cliques.begin(), rep.maximal_cliques.end());
    for (const auto& c : rep.maximal_cliques) rep.omega = std::max(rep.omega, static_cast<int>(c.size()));
    return rep;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& vs, std::vector<int>* old_of_new) {
    std::vector<int> keep = vs;
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
    std::vector<int> new_of_old(g.n(), -1);
    for (size_t i = 0; i < keep.size(); ++i) {
        if (keep[i] < 0 || keep[i] >= g.n()) throw std::out_of_range("induced_subgraph: vertex out of range");
        new_of_old[keep[i]] = static_cast<int>(i);
    }
    Graph h(static_cast<int>(keep.size()));
    for (auto [a, b] : g.edges())
        if (new_of_old[a] >= 0 && new_of_old[b] >= 0) h.add_edge(new_of_old[a], new_of_old[b]);
    for (auto [a, b] : g.exclusive_pairs())
        if (new_of_old[a] >= 0 && new_of_old[b] >= 0) h.add_exclusive(new_of_old[a], new_of_old[b]);
    if (!g.labels().empty()) {
        std::vector<std::string> lab;
        for (int v : keep) lab.push_back(g.labels()[v]);
        h.set_labels(lab);
    }
    if (old_of_new) *old_of_new = keep;
    return h;
}

Graph delete_vertex(const Graph& g, int v, std::vector<int>* old_of_new) {
    if (v < 0 || v >= g.n()) throw std::out_of_range("delete_vertex: vertex out of range");
    std::vector<int> keep;
    for (int u = 0; u < g.n(); ++u)
        if (u != v) keep.push_back(u);
    return induced_subgraph(g, keep, old_of_new);
}

Graph delete_edges(const Graph& g, const std::vector<Edge>& es) {
    std::vector<Edge> drop;
    for (auto [a, b] : es) {
        if (a > b) std::swap(a, b);
        if (!g.adjacent(a, b)) throw std::out_of_range("delete_edges: no such edge");
        drop.push_back({a, b});
    }
    std::sort(drop.begin(), drop.end());
    Graph h(g.n());
    for (auto e : g.edges())
        if (!std::binary_search(drop.begin(), drop.end(), e)) h.add_edge(e.first, e.second);
    for (auto e : g.exclusive_pairs()) h.add_exclusive(e.first, e.second);
    h.set_labels(g.labels());
    return h;
}

std::vector<ForbiddenEmbedding> find_forbidden(const Graph& g, int d) {
    if (d < 3) throw std::invalid_argument("find_forbidden: unsupported dimension " + std::to_string(d));
    std::vector<ForbiddenEmbedding> out;
    int n = g.n();
    int apexes = d - 3;
    // squares first: opposite pairs {a,c}, {b,d} with b,d common neighbours of a,c
    for (int a = 0; a < n; ++a) {
        for (int c = a + 1; c < n; ++c) {
            std::vector<int> common;
            for (int u = 0; u < n; ++u)
                if (u != a && u != c && g.adjacent(a, u) && g.adjacent(c, u)) common.push_back(u);
            for (size_t i = 0; i < common.size(); ++i) {
                for (size_t j = i + 1; j < common.size(); ++j) {
                    int b = common[i], dd = common[j];
                    if (a > b) continue;  // count each pairing once: min corner in the (a,c) pair
                    // candidate apexes: adjacent to all four square vertices
                    std::vector<int> cand;
                    for (int u = 0; u < n; ++u) {
                        if (u == a || u == b || u == c || u == dd) continue;
                        if (g.adjacent(u, a) && g.adjacent(u, b) && g.adjacent(u, c) && g.adjacent(u, dd))
                            cand.push_back(u);
                    }
                    // enumerate (d-3)-cliques among candidates
                    std::vector<int> pick;
                    auto emit = [&]() {
                        ForbiddenEmbedding e;
                        e.cycle = {a, b, c, dd};
                        e.apex = pick;
                        out.push_back(e);
                    };
                    std::function<void(size_t)> rec = [&](size_t from) {
                        if (static_cast<int>(pick.size()) == apexes) {
                            emit();
                            return;
                        }
                        for (size_t k = from; k < cand.size(); ++k) {
                            bool ok = true;
                            for (int p : pick)
                                if (!g.adjacent(p, cand[k])) {
                                    ok = false;
                                    break;
                                }
                            if (!ok) continue;
                            pick.push_back(cand[k]);
                            rec(k + 1);
                            pick.pop_back();
                        }
                    };
                    rec(0);
                }
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const ForbiddenEmbedding& x, const ForbiddenEmbedding& y) {
        return std::tie(x.cycle, x.apex) < std::tie(y.cycle, y.apex);
    });
    return out;
}

}  // namespace ksg
