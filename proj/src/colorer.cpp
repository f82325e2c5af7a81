#include "ksg/colorer.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>

#include "ksg/jsonio.hpp"
#include "ksg/sha256.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ksg {

std::string Coloring::bits() const {
    std::string s;
    s.reserve(values.size());
    for (uint8_t v : values) s.push_back(v ? '1' : '0');
    return s;
}

namespace {

// Propagating backtracker over the coloring rules. One instance per thread;
// all orders fixed so identical inputs explore identical trees.
class Searcher {
public:
    Searcher(const Graph& g, const std::vector<std::vector<int>>& max_cliques, long long budget)
        : n_(g.n()), budget_(budget), cliques_(max_cliques) {
        zero_on_one_.assign(n_, {});
        for (auto [a, b] : g.edges()) {
            zero_on_one_[a].push_back(b);
            zero_on_one_[b].push_back(a);
        }
        for (auto [a, b] : g.exclusive_pairs()) {
            zero_on_one_[a].push_back(b);
            zero_on_one_[b].push_back(a);
        }
        cliques_of_.assign(n_, {});
        for (size_t q = 0; q < cliques_.size(); ++q)
            for (int v : cliques_[q]) cliques_of_[v].push_back(static_cast<int>(q));
        reset();
    }

    void reset() {
        val_.assign(n_, -1);
        trail_.clear();
        cnt1_.assign(cliques_.size(), 0);
        free_.clear();
        for (const auto& q : cliques_) free_.push_back(static_cast<int>(q.size()));
        nodes_ = 0;
        depth_ = 0;
        max_depth_ = 0;
        budget_hit_ = false;
        stopped_ = false;
    }

    bool apply_pins(const std::vector<std::pair<int, int>>& pins) {
        for (auto [v, x] : pins) {
            if (v < 0 || v >= n_ || (x != 0 && x != 1)) throw std::invalid_argument("solve: bad pin");
            if (!set(v, x)) return false;
        }
        return true;
    }

    // exhaustive DFS; visit returns false to stop the whole search
    void run(const std::function<bool(const std::vector<int8_t>&)>& visit) {
        dfs(visit);
    }

    bool budget_hit() const { return budget_hit_; }
    long long nodes() const { return nodes_; }
    int max_depth() const { return max_depth_; }
    size_t mark() const { return trail_.size(); }

    bool set(int v, int x) {
        if (val_[v] != -1) return val_[v] == x;
        val_[v] = static_cast<int8_t>(x);
        trail_.push_back(v);
        // counters first, checks second: undo_to reverses whole vertices, so a
        // failing set must never leave a partial counter update behind
        for (int q : cliques_of_[v]) {
            --free_[q];
            if (x == 1) ++cnt1_[q];
        }
        for (int q : cliques_of_[v]) {
            if (cnt1_[q] > 1) return false;
            if (cnt1_[q] == 0 && free_[q] == 0) return false;
        }
        if (x == 1)
            for (int u : zero_on_one_[v])
                if (!set(u, 0)) return false;
        for (int q : cliques_of_[v]) {
            if (cnt1_[q] == 0 && free_[q] == 1) {
                for (int w : cliques_[q])
                    if (val_[w] == -1) {
                        if (!set(w, 1)) return false;
                        break;
                    }
            }
        }
        return true;
    }

    void undo_to(size_t mark) {
        while (trail_.size() > mark) {
            int v = trail_.back();
            trail_.pop_back();
            for (int q : cliques_of_[v]) {
                ++free_[q];
                if (val_[v] == 1) --cnt1_[q];
            }
            val_[v] = -1;
        }
    }

    // most-constrained open maximum clique first, lowest vertex inside it;
    // falls back to the lowest unassigned vertex
    int pick_branch() const {
        int best_q = -1;
        for (size_t q = 0; q < cliques_.size(); ++q) {
            if (cnt1_[q] > 0 || free_[q] == 0) continue;
            if (best_q < 0 || free_[q] < free_[best_q]) best_q = static_cast<int>(q);
        }
        if (best_q >= 0) {
            for (int v : cliques_[best_q])
                if (val_[v] == -1) return v;
        }
        for (int v = 0; v < n_; ++v)
            if (val_[v] == -1) return v;
        return -1;
    }

    const std::vector<int8_t>& values() const { return val_; }

private:
    int n_;
    long long budget_;
    std::vector<std::vector<int>> cliques_;
    std::vector<std::vector<int>> zero_on_one_;
    std::vector<std::vector<int>> cliques_of_;
    std::vector<int8_t> val_;
    std::vector<int> trail_;
    std::vector<int> cnt1_, free_;
    long long nodes_ = 0;
    int depth_ = 0, max_depth_ = 0;
    bool budget_hit_ = false, stopped_ = false;

    void dfs(const std::function<bool(const std::vector<int8_t>&)>& visit) {
        if (stopped_ || budget_hit_) return;
        if (++nodes_ > budget_) {
            budget_hit_ = true;
            return;
        }
        max_depth_ = std::max(max_depth_, depth_);
        int v = pick_branch();
        if (v < 0) {
            if (!visit(val_)) stopped_ = true;
            return;
        }
        for (int x : {1, 0}) {
            size_t m = mark();
            if (set(v, x)) {
                ++depth_;
                dfs(visit);
                --depth_;
            }
            undo_to(m);
            if (stopped_ || budget_hit_) return;
        }
    }
};

std::vector<std::vector<int>> maximum_cliques_of(const Graph& g) {
    return maximal_cliques(g).maximum_cliques();
}

Coloring to_coloring(const std::vector<int8_t>& val) {
    Coloring c;
    c.values.assign(val.begin(), val.end());
    return c;
}

// deterministic frontier of decision prefixes for parallel search
struct Frontier {
    std::vector<std::vector<std::pair<int, int>>> prefixes;
    long long nodes = 0;
};

Frontier build_frontier(Searcher& s, int target) {
    Frontier f;
    struct Item {
        std::vector<std::pair<int, int>> decisions;
    };
    std::vector<Item> open{{}};
    while (!open.empty() && static_cast<int>(open.size()) + static_cast<int>(f.prefixes.size()) < target) {
        Item it = open.front();
        open.erase(open.begin());
        // replay
        s.undo_to(0);
        bool ok = true;
        for (auto [v, x] : it.decisions)
            if (!s.set(v, x)) {
                ok = false;
                break;
            }
        ++f.nodes;
        if (!ok) {
            s.undo_to(0);
            continue;
        }
        int v = s.pick_branch();
        if (v < 0) {
            f.prefixes.push_back(it.decisions);  // complete assignment reached early
            s.undo_to(0);
            continue;
        }
        for (int x : {1, 0}) {
            Item child = it;
            child.decisions.push_back({v, x});
            open.push_back(child);
        }
        s.undo_to(0);
    }
    for (auto& it : open) f.prefixes.push_back(it.decisions);
    return f;
}

}  // namespace

bool for_each_coloring(const Graph& g, const std::function<bool(const Coloring&)>& visit,
                       const SolveOptions& opt, SearchStats* stats) {
    auto cliques = maximum_cliques_of(g);
    if (!opt.parallel) {
        Searcher s(g, cliques, opt.node_budget);
        bool pins_ok = s.apply_pins(opt.pins);
        bool keep = true;
        if (pins_ok)
            s.run([&](const std::vector<int8_t>& val) { return keep = visit(to_coloring(val)); });
        if (stats) {
            stats->nodes = s.nodes();
            stats->max_depth = s.max_depth();
        }
        return !s.budget_hit();
    }

    int threads = 1;
#ifdef _OPENMP
    threads = omp_get_max_threads();
#endif
    Searcher root(g, cliques, opt.node_budget);
    if (!root.apply_pins(opt.pins)) {
        if (stats) stats->nodes = 0;
        return true;
    }
    Frontier f = build_frontier(root, std::max(2, 4 * threads));

    std::vector<std::vector<Coloring>> buckets(f.prefixes.size());
    std::atomic<long long> total_nodes{f.nodes};
    std::atomic<bool> over{false};
    int md = 0;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1) reduction(max : md)
#endif
    for (long long i = 0; i < static_cast<long long>(f.prefixes.size()); ++i) {
        if (over.load()) continue;
        Searcher s(g, cliques, opt.node_budget);
        if (!s.apply_pins(opt.pins)) continue;
        bool ok = true;
        for (auto [v, x] : f.prefixes[i])
            if (!s.set(v, x)) {
                ok = false;
                break;
            }
        if (ok)
            s.run([&](const std::vector<int8_t>& val) {
                buckets[i].push_back(to_coloring(val));
                return true;
            });
        total_nodes += s.nodes();
        md = std::max(md, s.max_depth());
        if (s.budget_hit() || total_nodes.load() > opt.node_budget) over.store(true);
    }
    if (stats) {
        stats->nodes = total_nodes.load();
        stats->max_depth = md;
    }
    if (over.load()) return false;
    for (const auto& b : buckets)
        for (const auto& c : b)
            if (!visit(c)) return true;
    return true;
}

SolveResult solve(const Graph& g, const SolveOptions& opt) {
    SolveResult res;
    // value order 1-then-0 finds a witness early; stop at the first one
    bool found = false;
    SolveOptions o = opt;
    if (opt.parallel) {
        // parallel path enumerates bucket-complete; cheaper to run serial for
        // a single witness, parallel only pays off for exhaustive sweeps
        o.parallel = false;
    }
    bool within = for_each_coloring(
        g,
        [&](const Coloring& c) {
            res.coloring = c;
            found = true;
            return false;
        },
        o, &res.stats);
    if (!within) {
        res.status = SolveStatus::BudgetExceeded;
        return res;
    }
    res.status = found ? SolveStatus::Colorable : SolveStatus::Uncolorable;
    return res;
}

EnumerateResult enumerate_colorings(const Graph& g, long long cap, const SolveOptions& opt) {
    if (cap < 1) throw std::invalid_argument("enumerate: cap >= 1 required");
    EnumerateResult out;
    bool within = for_each_coloring(
        g,
        [&](const Coloring& c) {
            out.colorings.push_back(c);
            return true;  // keep going; truncation applied after the lex sort
        },
        opt, &out.stats);
    out.budget_exceeded = !within;
    std::sort(out.colorings.begin(), out.colorings.end());
    if (static_cast<long long>(out.colorings.size()) > cap) {
        out.colorings.resize(cap);
        out.truncated = true;
    }
    return out;
}

bool validate_coloring(const Graph& g, const Coloring& c) {
    if (static_cast<int>(c.values.size()) != g.n()) return false;
    for (uint8_t v : c.values)
        if (v > 1) return false;
    for (auto [a, b] : g.edges())
        if (c.values[a] + c.values[b] > 1) return false;
    for (auto [a, b] : g.exclusive_pairs())
        if (c.values[a] + c.values[b] > 1) return false;
    for (const auto& q : maximum_cliques_of(g)) {
        int s = 0;
        for (int v : q) s += c.values[v];
        if (s != 1) return false;
    }
    return true;
}

GadgetCheck is_gadget(const Graph& g, int v1, int v2, const SolveOptions& opt) {
    if (v1 == v2 || v1 < 0 || v2 < 0 || v1 >= g.n() || v2 >= g.n())
        throw std::invalid_argument("is_gadget: bad vertex pair");
    GadgetCheck out;
    out.pair = {v1, v2};
    if (g.adjacent(v1, v2)) {
        out.verdict = GadgetCheck::Verdict::AdjacentPair;
        return out;
    }
    SolveResult base = solve(g, opt);
    if (base.status == SolveStatus::BudgetExceeded) {
        out.verdict = GadgetCheck::Verdict::BudgetExceeded;
        return out;
    }
    if (base.status == SolveStatus::Uncolorable) {
        out.verdict = GadgetCheck::Verdict::Uncolorable;
        return out;
    }
    out.witness = base.coloring;
    SolveOptions pinned = opt;
    pinned.pins.push_back({v1, 1});
    pinned.pins.push_back({v2, 1});
    SolveResult excl = solve(g, pinned);
    out.exclusion_stats = excl.stats;
    if (excl.status == SolveStatus::BudgetExceeded) {
        out.verdict = GadgetCheck::Verdict::BudgetExceeded;
        return out;
    }
    if (excl.status == SolveStatus::Colorable) {
        out.verdict = GadgetCheck::Verdict::Counterexample;
        out.counterexample = excl.coloring;
        return out;
    }
    out.verdict = GadgetCheck::Verdict::Gadget;
    out.digest = sha256_hex(graph_sha(g) + ":" + std::to_string(v1) + "," + std::to_string(v2) +
                            ":nodes=" + std::to_string(excl.stats.nodes) + ":unsat");
    return out;
}

std::vector<std::pair<int, int>> find_gadget_pairs(const Graph& g, const SolveOptions& opt) {
    SolveResult base = solve(g, opt);
    if (base.status != SolveStatus::Colorable)
        throw std::invalid_argument("find_gadget_pairs: input graph not colorable; run solve first");
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < g.n(); ++i) {
        for (int j = i + 1; j < g.n(); ++j) {
            if (g.adjacent(i, j)) continue;
            SolveOptions pinned = opt;
            pinned.pins.push_back({i, 1});
            pinned.pins.push_back({j, 1});
            if (solve(g, pinned).status == SolveStatus::Uncolorable) out.push_back({i, j});
        }
    }
    return out;
}

ForcedValue forced_value(const Graph& g, int v, const SolveOptions& opt) {
    if (v < 0 || v >= g.n()) throw std::out_of_range("forced_value: vertex out of range");
    SolveResult base = solve(g, opt);
    if (base.status != SolveStatus::Colorable)
        throw std::invalid_argument("forced_value: input graph not colorable");
    SolveOptions p1 = opt;
    p1.pins.push_back({v, 1});
    if (solve(g, p1).status == SolveStatus::Uncolorable) return ForcedValue::Zero;
    SolveOptions p0 = opt;
    p0.pins.push_back({v, 0});
    if (solve(g, p0).status == SolveStatus::Uncolorable) return ForcedValue::One;
    return ForcedValue::Unforced;
}

namespace {

int omega_of(const Graph& g) { return maximal_cliques(g).omega; }

bool uncolorable(const Graph& g, const SolveOptions& opt) {
    SolveResult r = solve(g, opt);
    if (r.status == SolveStatus::BudgetExceeded)
        throw std::runtime_error("criticality: node budget exceeded");
    return r.status == SolveStatus::Uncolorable;
}

}  // namespace

Graph make_vertex_critical(const Graph& g, const SolveOptions& opt) {
    if (!uncolorable(g, opt)) throw std::invalid_argument("make_vertex_critical: input is colorable");
    int w0 = omega_of(g);
    std::vector<int> kept;
    for (int v = 0; v < g.n(); ++v) kept.push_back(v);
    Graph cur = g;
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < kept.size(); ++i) {
            std::vector<int> trial = kept;
            trial.erase(trial.begin() + i);
            Graph h = induced_subgraph(g, trial);
            if (omega_of(h) == w0 && uncolorable(h, opt)) {
                kept = trial;
                cur = h;
                changed = true;
                --i;
            }
        }
    }
    return cur;
}

Graph make_edge_critical(const Graph& g, const SolveOptions& opt) {
    if (!uncolorable(g, opt)) throw std::invalid_argument("make_edge_critical: input is colorable");
    int w0 = omega_of(g);
    Graph cur = make_vertex_critical(g, opt);
    bool changed = true;
    while (changed) {
        changed = false;
        auto edges = cur.edges();
        for (const auto& e : edges) {
            Graph h = delete_edges(cur, {e});
            if (omega_of(h) == w0 && uncolorable(h, opt)) {
                cur = h;
                changed = true;
            }
        }
    }
    return cur;
}

GadgetExtraction extract_gadget(const Graph& g_ks, const SolveOptions& opt) {
    if (omega_of(g_ks) < 3) throw std::invalid_argument("extract_gadget: omega >= 3 required");
    if (!uncolorable(g_ks, opt)) throw std::invalid_argument("extract_gadget: input is colorable");
    Graph crit = make_vertex_critical(g_ks, opt);

    auto try_cases = [&](const Graph& base) -> std::optional<GadgetExtraction> {
        auto maxcl = maximal_cliques(base).maximum_cliques();
        std::vector<std::vector<int>> cliques_of(base.n());
        for (size_t q = 0; q < maxcl.size(); ++q)
            for (int v : maxcl[q]) cliques_of[v].push_back(static_cast<int>(q));
        for (int want = 1; want <= 2; ++want) {
            for (int v = 0; v < base.n(); ++v) {
                if (static_cast<int>(cliques_of[v].size()) != want) continue;
                std::vector<int> old_of_new;
                Graph h = delete_vertex(base, v, &old_of_new);
                std::vector<int> new_of_old(base.n(), -1);
                for (size_t i = 0; i < old_of_new.size(); ++i) new_of_old[old_of_new[i]] = static_cast<int>(i);
                const auto& q1 = maxcl[cliques_of[v][0]];
                std::vector<int> v1s;
                for (int u : q1)
                    if (u != v) v1s.push_back(new_of_old[u]);
                std::vector<int> v2s;
                if (want == 1) {
                    for (int u = 0; u < h.n(); ++u) v2s.push_back(u);
                } else {
                    for (int u : maxcl[cliques_of[v][1]])
                        if (u != v) v2s.push_back(new_of_old[u]);
                }
                for (int a : v1s)
                    for (int b : v2s) {
                        if (a == b || h.adjacent(a, b)) continue;
                        GadgetCheck chk = is_gadget(h, std::min(a, b), std::max(a, b), opt);
                        if (chk.is_gadget())
                            return GadgetExtraction{h, {std::min(a, b), std::max(a, b)}, want == 1 ? "i" : "ii"};
                    }
            }
        }
        return std::nullopt;
    };

    if (auto r = try_cases(crit)) return *r;
    Graph ecrit = make_edge_critical(crit, opt);
    if (auto r = try_cases(ecrit)) return *r;

    // every vertex sits in three or more maximum cliques: open one clique at a
    // fixed vertex and use the two-clique exclusion at the graph level
    auto maxcl = maximal_cliques(ecrit).maximum_cliques();
    std::vector<std::vector<int>> cliques_of(ecrit.n());
    for (size_t q = 0; q < maxcl.size(); ++q)
        for (int v : maxcl[q]) cliques_of[v].push_back(static_cast<int>(q));
    for (int v = 0; v < ecrit.n(); ++v) {
        if (cliques_of[v].size() < 2) continue;
        const auto& q1 = maxcl[cliques_of[v][0]];
        const auto& q2 = maxcl[cliques_of[v][1]];
        std::vector<Edge> drop;
        for (int u : q1)
            if (u != v) drop.push_back({std::min(u, v), std::max(u, v)});
        Graph h = delete_edges(ecrit, drop);
        for (int a : q1) {
            if (a == v) continue;
            for (int b : q2) {
                if (b == v || b == a || ecrit.adjacent(a, b)) continue;
                GadgetCheck chk = is_gadget(h, std::min(a, b), std::max(a, b), opt);
                if (chk.is_gadget()) return GadgetExtraction{h, {std::min(a, b), std::max(a, b)}, "iii"};
            }
        }
    }
    throw std::runtime_error("extract_gadget: no verified gadget found");
}

}  // namespace ksg
