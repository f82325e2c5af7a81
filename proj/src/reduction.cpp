#include "ksg/reduction.hpp"

#include <cmath>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace ksg {

namespace {

long double ldot3(const std::vector<long double>& a, const std::vector<long double>& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

long double lcos3(const std::vector<long double>& a, const std::vector<long double>& b) {
    return fabsl(ldot3(a, b)) / sqrtl(ldot3(a, a) * ldot3(b, b));
}

// base ray for a source vertex: (1, s, -s/(1+s)) has vanishing cyclic
// autocorrelation, so its three cyclic shifts form an orthogonal basis
std::vector<long double> base_ray(long double s) { return {1.0L, s, -s / (1.0L + s)}; }

std::vector<long double> shift(const std::vector<long double>& v, int i) {
    std::vector<long double> out(3);
    for (int j = 0; j < 3; ++j) out[(j + i) % 3] = v[j];
    return out;
}

long double vertex_param(int v, int attempt) {
    static const long double base[10] = {0.2L, 5.0L, -2.0L, 0.45L, 2.6L, -1.6L, 0.7L, 3.4L, -1.3L, 1.15L};
    return base[v % 10] + 0.003L * (v / 10) + 0.0017L * attempt;
}

}  // namespace

Reduction reduce(const Graph& g, BuildMode mode) {
    int w = maximal_cliques(g).omega;
    if (w < 3) throw std::invalid_argument("reduce: omega(G) >= 3 required");
    int n = g.n();
    Reduction r;
    r.source = g;
    r.mode = mode;

    if (mode == BuildMode::Virtual) {
        Graph h(n * w);
        r.vertex_map.assign(n, {});
        for (int v = 0; v < n; ++v) {
            for (int i = 0; i < w; ++i) r.vertex_map[v].push_back(v * w + i);
            for (int i = 0; i < w; ++i)
                for (int j = i + 1; j < w; ++j) h.add_edge(v * w + i, v * w + j);
        }
        for (auto [u, v] : g.edges())
            for (int i = 0; i < w; ++i) {
                h.add_exclusive(u * w + i, v * w + i);
                r.placements.push_back({{u, v}, i, {u * w + i, v * w + i}, -1});
            }
        r.target = h;
        return r;
    }

    if (w != 3)
        throw std::invalid_argument("reduce: expanded mode uses the 3-dimensional gadget family (omega 3)");
    for (int attempt = 0; attempt < 50; ++attempt) {
        std::vector<std::vector<long double>> base(n);
        for (int v = 0; v < n; ++v) base[v] = base_ray(vertex_param(v, attempt));
        // faithfulness of the clique representation: distinct rays, and no
        // accidental orthogonality between any two shifted base vectors
        bool ok = true;
        for (int u = 0; u < n && ok; ++u)
            for (int v = u + 1; v < n && ok; ++v)
                for (int i = 0; i < 3 && ok; ++i)
                    for (int j = 0; j < 3 && ok; ++j) {
                        long double c = lcos3(shift(base[u], i), shift(base[v], j));
                        if (c < 1e-6L || c > 1.0L - 1e-6L) ok = false;
                    }
        if (!ok) continue;

        std::vector<std::vector<long double>> rays;
        std::vector<Edge> structural;
        auto add_ray = [&](std::vector<long double> v) -> int {
            long double nn = sqrtl(ldot3(v, v));
            for (auto& x : v) x /= nn;
            int lead = -1;
            for (int i = 0; i < 3; ++i)
                if (fabsl(v[i]) > 1e-12L) {
                    lead = i;
                    break;
                }
            if (lead >= 0 && v[lead] < 0)
                for (auto& x : v) x = -x;
            for (size_t i = 0; i < rays.size(); ++i)
                if (fabsl(fabsl(ldot3(rays[i], v)) - 1.0L) < 1e-9L) return static_cast<int>(i);
            rays.push_back(v);
            return static_cast<int>(rays.size()) - 1;
        };
        auto add_edge = [&](int a, int b) { structural.push_back({std::min(a, b), std::max(a, b)}); };

        r.vertex_map.assign(n, {});
        r.placements.clear();
        r.gadgets.clear();
        for (int v = 0; v < n; ++v) {
            for (int i = 0; i < 3; ++i) r.vertex_map[v].push_back(add_ray(shift(base[v], i)));
            for (int i = 0; i < 3; ++i)
                for (int j = i + 1; j < 3; ++j) add_edge(r.vertex_map[v][i], r.vertex_map[v][j]);
        }
        std::map<long long, int> gadget_memo;  // overlap (quantized) -> gadget id
        bool placed_ok = true;
        for (auto [u, v] : g.edges()) {
            long double ov = lcos3(base[u], base[v]);
            long long key = llroundl(ov * 1e12L);
            if (!gadget_memo.count(key)) {
                r.gadgets.push_back(build_gadget_pair(ov));
                gadget_memo[key] = static_cast<int>(r.gadgets.size()) - 1;
            }
            int gid = gadget_memo[key];
            const Construction& gad = r.gadgets[gid];
            for (int i = 0; i < 3; ++i) {
                int A = r.vertex_map[u][i], B = r.vertex_map[v][i];
                // rotate the instance so its distinguished pair lands on (A, B)
                const auto& gv = gad.vectors->vectors;
                int a = gad.distinguished[0], b = gad.distinguished[1];
                std::vector<std::vector<long double>> src;
                for (const auto& x : gv) {
                    auto l = to_ld(x);
                    long double nn = sqrtl(ldot3(l, l));
                    for (auto& y : l) y /= nn;
                    src.push_back({l[0], l[1], l[2]});
                }
                auto A_ray = rays[A], B_ray = rays[B];
                if (ldot3(src[a], src[b]) < 0)
                    for (auto& y : src[b]) y = -y;
                if (ldot3(A_ray, B_ray) < 0)
                    for (auto& y : B_ray) y = -y;
                // frames
                auto sub = [&](std::vector<long double> x, const std::vector<long double>& y, long double t) {
                    for (int k = 0; k < 3; ++k) x[k] -= t * y[k];
                    return x;
                };
                auto unit = [&](std::vector<long double> x) {
                    long double nn = sqrtl(ldot3(x, x));
                    for (auto& y : x) y /= nn;
                    return x;
                };
                auto cross = [&](const std::vector<long double>& x, const std::vector<long double>& y) {
                    return std::vector<long double>{x[1] * y[2] - x[2] * y[1], x[2] * y[0] - x[0] * y[2],
                                                    x[0] * y[1] - x[1] * y[0]};
                };
                std::vector<std::vector<long double>> F = {src[a], unit(sub(src[b], src[a], ldot3(src[a], src[b])))};
                F.push_back(cross(F[0], F[1]));
                std::vector<std::vector<long double>> G = {A_ray, unit(sub(B_ray, A_ray, ldot3(A_ray, B_ray)))};
                G.push_back(cross(G[0], G[1]));
                auto apply = [&](const std::vector<long double>& x) {
                    std::vector<long double> out(3, 0.0L);
                    for (int k = 0; k < 3; ++k) {
                        long double c = ldot3(x, F[k]);
                        for (int m = 0; m < 3; ++m) out[m] += c * G[k][m];
                    }
                    return out;
                };
                std::vector<int> idx(gv.size(), -1);
                idx[a] = A;
                idx[b] = B;
                for (size_t t = 0; t < gv.size(); ++t)
                    if (idx[t] < 0) idx[t] = add_ray(apply(src[t]));
                for (auto [x, y] : gad.graph.edges()) add_edge(idx[x], idx[y]);
                r.placements.push_back({{u, v}, i, {A, B}, gid});
            }
        }
        // realized orthogonality graph must contain every structural edge
        VectorSet V;
        V.d = 3;
        for (const auto& ray : rays) V.vectors.push_back(from_ld({ray[0], ray[1], ray[2]}));
        Graph h = orthogonality_graph(V, kDefaultOrthTol);
        for (auto [a, b] : structural)
            if (!h.adjacent(a, b)) {
                placed_ok = false;
                break;
            }
        if (!placed_ok) continue;
        // outlaw accidental extra orthogonality: it would change the instance
        std::set<Edge> st(structural.begin(), structural.end());
        bool extra = false;
        for (auto e : h.edges())
            if (!st.count(e)) {
                extra = true;
                break;
            }
        if (extra) continue;
        r.target = h;
        return r;
    }
    throw std::runtime_error("reduce: no faithful parameter assignment found");
}

KColoringResult k_colorable(const Graph& g, int k) {
    if (k < 1) throw std::invalid_argument("k_colorable: k >= 1 required");
    KColoringResult res;
    std::vector<int> col(g.n(), -1);
    std::function<bool(int)> rec = [&](int v) -> bool {
        if (v == g.n()) return true;
        for (int c = 0; c < k; ++c) {
            bool ok = true;
            for (int u = 0; u < v; ++u)
                if (col[u] == c && g.adjacent(u, v)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            col[v] = c;
            if (rec(v + 1)) return true;
            col[v] = -1;
        }
        return false;
    };
    res.colorable = rec(0);
    if (res.colorable) res.coloring = col;
    return res;
}

EquivalenceVerdict verify_equivalence(const Graph& g, const Reduction& r, const SolveOptions& opt) {
    EquivalenceVerdict v;
    int w = maximal_cliques(g).omega;
    KColoringResult src = k_colorable(g, w);
    v.source_colorable = src.colorable;
    SolveResult tgt = solve(r.target, opt);
    if (tgt.status == SolveStatus::BudgetExceeded) throw std::runtime_error("verify_equivalence: budget exceeded");
    v.target_colorable = tgt.status == SolveStatus::Colorable;
    v.equivalent = v.source_colorable == v.target_colorable;
    if (v.source_colorable && v.target_colorable) {
        v.lift_checked = true;
        if (r.mode == BuildMode::Virtual) {
            Coloring lift;
            lift.values.assign(r.target.n(), 0);
            for (int s = 0; s < g.n(); ++s)
                for (int i = 0; i < w; ++i) lift.values[r.vertex_map[s][i]] = src.coloring[s] == i ? 1 : 0;
            v.lift_valid = validate_coloring(r.target, lift);
        } else {
            SolveOptions pinned = opt;
            for (int s = 0; s < g.n(); ++s)
                for (int i = 0; i < w; ++i)
                    pinned.pins.push_back({r.vertex_map[s][i], src.coloring[s] == i ? 1 : 0});
            v.lift_valid = solve(r.target, pinned).status == SolveStatus::Colorable;
        }
    }
    return v;
}

}  // namespace ksg
