#include "ksg/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>

#include "ksg/colorer.hpp"

namespace ksg {

namespace {

constexpr long double kPi = 3.14159265358979323846264338327950288L;

// ---- small long-double vector helpers -------------------------------------

long double ldot(const LVec& a, const LVec& b) {
    long double s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

long double lnorm(const LVec& a) { return sqrtl(ldot(a, a)); }

LVec lunit(LVec a) {
    long double n = lnorm(a);
    for (auto& x : a) x /= n;
    return a;
}

LVec lscale(LVec a, long double t) {
    for (auto& x : a) x *= t;
    return a;
}

LVec ladd(LVec a, const LVec& b) {
    for (size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}

LVec lsub(LVec a, const LVec& b) {
    for (size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
    return a;
}

LVec lcross(const LVec& a, const LVec& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

long double lcos(const LVec& a, const LVec& b) { return fabsl(ldot(a, b)) / (lnorm(a) * lnorm(b)); }

// orthonormal completion of a partial frame, deterministic
std::vector<LVec> complete_frame(std::vector<LVec> frame, int d) {
    for (int e = 0; e < d && static_cast<int>(frame.size()) < d; ++e) {
        LVec cand(d, 0.0L);
        cand[e] = 1.0L;
        for (const auto& f : frame) cand = lsub(cand, lscale(f, ldot(cand, f)));
        if (lnorm(cand) > 1e-6L) frame.push_back(lunit(cand));
    }
    if (static_cast<int>(frame.size()) != d) throw std::runtime_error("complete_frame: degenerate frame");
    return frame;
}

// rotation sending ray a0->a1, b0->b1 (overlaps must agree); applies to x
struct PairRotation {
    std::vector<LVec> from, to;  // orthonormal frames

    LVec apply(const LVec& x) const {
        LVec out(to[0].size(), 0.0L);
        for (size_t k = 0; k < from.size(); ++k) out = ladd(out, lscale(to[k], ldot(x, from[k])));
        return out;
    }
};

// rotation taking one ray onto another, remaining directions deterministic
PairRotation ray_rotation(LVec from, LVec to) {
    int d = static_cast<int>(from.size());
    std::vector<LVec> F = complete_frame({lunit(from)}, d);
    std::vector<LVec> G = complete_frame({lunit(to)}, d);
    return PairRotation{F, G};
}

PairRotation pair_rotation(LVec a0, LVec b0, LVec a1, LVec b1) {
    a0 = lunit(a0);
    b0 = lunit(b0);
    a1 = lunit(a1);
    b1 = lunit(b1);
    if (ldot(a0, b0) < 0) b0 = lscale(b0, -1);
    if (ldot(a1, b1) < 0) b1 = lscale(b1, -1);
    if (fabsl(ldot(a0, b0) - ldot(a1, b1)) > 1e-7L)
        throw std::runtime_error("pair_rotation: overlap mismatch");
    int d = static_cast<int>(a0.size());
    std::vector<LVec> F = {a0, lunit(lsub(b0, lscale(a0, ldot(a0, b0))))};
    std::vector<LVec> G = {a1, lunit(lsub(b1, lscale(a1, ldot(a1, b1))))};
    F = complete_frame(F, d);
    G = complete_frame(G, d);
    return PairRotation{F, G};
}

// ---- scene: ray-deduplicating union of placed vector realizations ---------

struct Scene {
    int d;
    std::vector<LVec> rays;            // unit, sign-canonical
    std::set<Edge> structural;         // edges the assembly promises
    std::vector<std::string> labels;

    explicit Scene(int dim) : d(dim) {}

    int add_ray(LVec v, const std::string& label = "") {
        v = lunit(v);
        int lead = -1;
        for (int i = 0; i < d; ++i)
            if (fabsl(v[i]) > 1e-12L) {
                lead = i;
                break;
            }
        if (lead >= 0 && v[lead] < 0) v = lscale(v, -1);
        for (size_t i = 0; i < rays.size(); ++i)
            if (fabsl(fabsl(ldot(rays[i], v)) - 1.0L) < 1e-9L) return static_cast<int>(i);
        rays.push_back(v);
        labels.push_back(label);
        return static_cast<int>(rays.size()) - 1;
    }

    void add_edge(int a, int b) {
        if (a == b) throw std::runtime_error("scene: self edge (unexpected ray merge)");
        structural.insert({std::min(a, b), std::max(a, b)});
    }

    VectorSet vector_set() const {
        VectorSet V;
        V.d = d;
        for (const auto& r : rays) V.vectors.push_back(from_ld(r));
        return V;
    }

    // realized orthogonality graph; every structural edge must be realized
    Graph realized_graph(long double tol = kDefaultOrthTol) const {
        Graph g = orthogonality_graph(vector_set(), tol);
        for (auto [a, b] : structural)
            if (!g.adjacent(a, b)) throw std::runtime_error("scene: structural edge not orthogonal in realization");
        bool any_label = false;
        for (const auto& l : labels) any_label |= !l.empty();
        if (any_label) {
            std::vector<std::string> out;
            for (size_t i = 0; i < labels.size(); ++i)
                out.push_back(labels[i].empty() ? "w" + std::to_string(i) : labels[i]);
            g.set_labels(out);
        }
        return g;
    }
};

// place a gadget realization so its distinguished pair lands on scene rays
// (A, B); returns scene indices of every gadget vertex
std::vector<int> place_gadget(Scene& sc, const Construction& gadget, int A, int B) {
    const VectorSet& V = *gadget.vectors;
    int a = gadget.distinguished.at(0), b = gadget.distinguished.at(1);
    std::vector<LVec> src;
    for (const auto& v : V.vectors) src.push_back(lunit(to_ld(v)));
    PairRotation R = pair_rotation(src[a], src[b], sc.rays[A], sc.rays[B]);
    std::vector<int> idx(V.size(), -1);
    idx[a] = A;
    idx[b] = B;
    for (int i = 0; i < V.size(); ++i)
        if (idx[i] < 0) idx[i] = sc.add_ray(R.apply(src[i]));
    for (auto [x, y] : gadget.graph.edges()) sc.add_edge(idx[x], idx[y]);
    return idx;
}

Scalar ld_scalar(long double x) { return Scalar::approx(x); }

SVec rvec(std::initializer_list<long long> xs) {
    SVec v;
    for (long long x : xs) v.push_back(Scalar(x));
    return v;
}

// ---- parametric 22-vertex gadget block --------------------------------------

Scalar spow(const Scalar& x, int k) {
    Scalar r(1);
    for (int i = 0; i < k; ++i) r = r * x;
    return r;
}

}  // namespace

VectorSet gadget_block_vectors(const Scalar& x) {
    Scalar one(1), two(2);
    Scalar x2 = x * x;
    Scalar q = one + x2;  // 1 + x^2
    Scalar disc = spow(q, 6) - Scalar(16) * spow(x, 14) * q;
    if (disc.sign() < 0) throw std::invalid_argument("gadget_block_vectors: negative y discriminant");
    Scalar y = (spow(q, 3) + Scalar::sqrt(disc)) / (Scalar(4) * spow(x, 8));
    VectorSet V;
    V.d = 3;
    auto add = [&](const Scalar& a, const Scalar& b, const Scalar& c) { V.vectors.push_back({a, b, c}); };
    Scalar z(0);
    add(one, z, z);                                        // u1
    add(z, one, -one);                                     // u2
    add(z, one, z);                                        // u3
    add(z, y, one);                                        // u4
    add(two * x, one, one);                                // u5
    add(-one, z, two * x);                                 // u6
    add(-two * x, z, -one);                                // u7
    add(x, one, -two * x2);                                // u8
    add(two * spow(x, 3), two * x2, q);                    // u9
    add(-q, z, two * spow(x, 3));                          // u10
    add(two * spow(x, 3), z, q);                           // u11
    add(x * q, q, -two * spow(x, 4));                      // u12
    add(two * spow(x, 5), two * spow(x, 4), q * q);        // u13
    add(-(q * q), z, two * spow(x, 5));                    // u14
    add(two * spow(x, 5), z, q * q);                       // u15
    add(x * q * q, q * q, -two * spow(x, 6));              // u16
    add(two * spow(x, 7), two * spow(x, 6), spow(q, 3));   // u17
    add(-x * (one + y * y), -one, y);                      // u18
    add(one, -x, -x);                                      // u19
    add(one, -x, z);                                       // u20
    add(one, -x, x * y);                                   // u21
    add(x, one, z);                                        // u22
    return V;
}

namespace {

std::vector<Edge> exact_block_edges(const Scalar& x) {
    Graph g = orthogonality_graph(gadget_block_vectors(x), 0.0L, false);
    return g.edges();
}

}  // namespace

const std::vector<Edge>& gadget_block_edges() {
    static const std::vector<Edge> edges = [] {
        auto a = exact_block_edges(Scalar(Rational(1, 2)));
        auto b = exact_block_edges(Scalar(Rational(1, 3)));
        std::vector<Edge> inter;
        for (const auto& e : a)
            if (std::binary_search(b.begin(), b.end(), e)) inter.push_back(e);
        return inter;
    }();
    return edges;
}

const std::vector<Edge>& gadget_block_edges_x1_extra() {
    static const std::vector<Edge> extra = [] {
        auto at1 = exact_block_edges(Scalar(1));
        const auto& generic = gadget_block_edges();
        std::vector<Edge> out;
        for (const auto& e : at1)
            if (!std::binary_search(generic.begin(), generic.end(), e)) out.push_back(e);
        return out;
    }();
    return extra;
}

int gadget_assembly43_vertex(int block, int local) {
    if (local < 1 || local > 22) throw std::out_of_range("gadget_assembly43_vertex: local index");
    if (block == 0) return local - 1;
    // second block shares u20 (its u'_1) and u22 (its u'_3)
    if (local == 1) return 19;
    if (local == 2) return 22;
    if (local == 3) return 21;
    return 19 + local;  // local 4..22 -> 23..41 (0-based), u43 is 42
}

const std::vector<Edge>& gadget_assembly43_edges() {
    static const std::vector<Edge> edges = [] {
        std::set<Edge> out;
        auto put = [&](int a, int b) { out.insert({std::min(a, b), std::max(a, b)}); };
        const auto& generic = gadget_block_edges();
        for (const auto& e : generic) put(e.first, e.second);  // block 0 (x = 1) ...
        for (const auto& e : gadget_block_edges_x1_extra()) put(e.first, e.second);  // ... incl. its extras
        for (const auto& e : generic)
            put(gadget_assembly43_vertex(1, e.first + 1), gadget_assembly43_vertex(1, e.second + 1));
        // u43 = e3 is orthogonal to the four z = 0 rays of each block
        for (int v : {1, 3, 20, 22}) {
            put(42, gadget_assembly43_vertex(0, v));
            put(42, gadget_assembly43_vertex(1, v));
        }
        return std::vector<Edge>(out.begin(), out.end());
    }();
    return edges;
}

// ---- clifton ----------------------------------------------------------------

Construction build_clifton() {
    Construction c;
    c.name = "clifton";
    c.mode = BuildMode::Expanded;
    VectorSet V;
    V.d = 3;
    V.vectors = {rvec({-1, 1, 1}), rvec({1, 1, 0}), rvec({0, 1, -1}), rvec({0, 0, 1}),
                 rvec({1, 0, 0}), rvec({1, -1, 0}), rvec({0, 1, 1}), rvec({1, 1, -1})};
    c.vectors = V;
    c.graph = orthogonality_graph(V, 0.0L, false);
    c.graph.set_labels({"u1", "u2", "u3", "u4", "u5", "u6", "u7", "u8"});
    c.distinguished = {0, 7};
    c.params["overlap"] = "1/3";
    return c;
}

Construction build_clifton_lift(int d) {
    if (d < 3) throw std::invalid_argument("build_clifton_lift: d >= 3 required");
    Construction base = build_clifton();
    VectorSet V = embed_dim(*base.vectors, d);
    for (int e = 3; e < d; ++e) {
        SVec w(d, Scalar(0));
        w[e] = Scalar(1);
        V.vectors.push_back(std::move(w));
    }
    Construction c;
    c.name = "clifton_lift";
    c.mode = BuildMode::Expanded;
    c.vectors = V;
    c.graph = orthogonality_graph(V, 0.0L, false);
    c.distinguished = {0, 7};
    c.params["d"] = d;
    return c;
}

// ---- parametric gadget for a requested overlap ------------------------------

Construction build_gadget_pair(long double overlap) {
    if (!(overlap > 0.0L && overlap < 1.0L))
        throw std::invalid_argument("build_gadget_pair: overlap must lie in (0,1)");
    const long double inv_sqrt2 = 0.70710678118654752440L;
    Construction c;
    c.name = "gadget_pair";
    c.mode = BuildMode::Expanded;
    if (overlap <= inv_sqrt2 + 1e-15L) {
        // 22-vertex block, overlap = x / sqrt(1+x^2)
        long double x = overlap / sqrtl(1.0L - overlap * overlap);
        VectorSet V = gadget_block_vectors(ld_scalar(x));
        Graph g(22);
        for (auto [a, b] : gadget_block_edges()) g.add_edge(a, b);
        if (fabsl(x - 1.0L) < 1e-12L)
            for (auto [a, b] : gadget_block_edges_x1_extra()) g.add_edge(a, b);
        c.vectors = V;
        c.graph = g;
        c.distinguished = {0, 21};
        c.params["case"] = "i";
        c.params["x"] = static_cast<double>(x);
    } else {
        // 43-vertex assembly; outer parameter from overlap = (1+x)/sqrt(2+2x^2)
        long double t = 2.0L * overlap * overlap - 1.0L;
        long double x = (1.0L - sqrtl(1.0L - t * t)) / t;
        VectorSet b1 = gadget_block_vectors(Scalar(1));
        VectorSet b2 = gadget_block_vectors(ld_scalar(x));
        const long double s2 = sqrtl(2.0L);
        auto U = [&](const LVec& v) -> LVec { return {(v[0] + v[1]) / s2, (v[1] - v[0]) / s2, v[2]}; };
        VectorSet V;
        V.d = 3;
        V.vectors.resize(43);
        for (int i = 1; i <= 22; ++i) V.vectors[gadget_assembly43_vertex(0, i)] = b1.vectors[i - 1];
        for (int i = 1; i <= 22; ++i) {
            if (i == 1 || i == 3) continue;  // u20 and u22 are shared with block 0
            V.vectors[gadget_assembly43_vertex(1, i)] = from_ld(U(lunit(to_ld(b2.vectors[i - 1]))));
        }
        V.vectors[42] = rvec({0, 0, 1});
        Graph g(43);
        for (auto [a, b] : gadget_assembly43_edges()) g.add_edge(a, b);
        c.vectors = V;
        c.graph = g;
        c.distinguished = {0, 41};
        c.params["case"] = "ii";
        c.params["x"] = static_cast<double>(x);
    }
    // construction integrity: every promised orthogonality within 1e-9, and
    // the distinguished overlap on target
    for (auto [a, b] : c.graph.edges())
        if (lcos(to_ld(c.vectors->vectors[a]), to_ld(c.vectors->vectors[b])) > 1e-9L)
            throw std::runtime_error("build_gadget_pair: structural edge not orthogonal");
    long double got = overlap;
    {
        const auto& vv = c.vectors->vectors;
        got = lcos(to_ld(vv[c.distinguished[0]]), to_ld(vv[c.distinguished[1]]));
    }
    if (fabsl(got - overlap) > 1e-9L) throw std::runtime_error("build_gadget_pair: overlap off target");
    c.params["overlap"] = static_cast<double>(overlap);
    return c;
}

// ---- the 40-vector state-dependent set --------------------------------------

Construction build_state_dependent_40() {
    Rational third(1, 3);
    Scalar s7 = Scalar::quad(Rational(0), Rational(1), 7);
    Scalar s2 = Scalar::quad(Rational(0), Rational(1), 2);
    Scalar b = (Scalar(-4) + s7) / Scalar(3);
    VectorSet V;
    V.d = 3;
    auto add = [&](const Scalar& x, const Scalar& y, const Scalar& z) { V.vectors.push_back({x, y, z}); };
    Scalar z(0), one(1);
    add(one, -one, z);                                   // u1
    add(one, one, one);                                  // u2
    add(one, one, z);                                    // u3
    add(one, one, b);                                    // u4
    add(Scalar(-2), one, one);                           // u5
    add(one, -one, Scalar(3));                           // u6
    add(Scalar(3), Scalar(-3), Scalar(-2));              // u7
    add(Scalar(2), z, Scalar(3));                        // u8
    add(Scalar(-3), z, Scalar(2));                       // u9
    add(Scalar(-2), Scalar(2), Scalar(-3));              // u10
    add(Scalar(3), Scalar(-3), Scalar(-4));              // u11
    add(Scalar(4), z, Scalar(3));                        // u12
    add(Scalar(-3), z, Scalar(4));                       // u13
    add(Scalar(-4), Scalar(4), Scalar(-3));              // u14
    add(Scalar(3), Scalar(-3), Scalar(-8));              // u15
    add(Scalar(8), z, Scalar(3));                        // u16
    add(Scalar(-3), z, Scalar(8));                       // u17
    add(Scalar(-8), Scalar(4) + s7, Scalar(-3));         // u18
    add(z, one, -one);                                   // u19
    add(z, one, z);                                      // u20
    add(z, Scalar(-3) + Scalar(8) * b, Scalar(-16) - Scalar(3) * b);  // u21
    add(one, z, z);                                      // u22
    add(one, z, -one);                                   // u23
    add(Scalar(2) - s2, z, one);                         // u24
    add(one, Scalar(-2), one);                           // u25
    add(z, one, Scalar(2));                              // u26
    add(z, Scalar(2), -one);                             // u27
    add(one, -one, Scalar(-2));                          // u28
    add(one, -one, one);                                 // u29
    add(z, one, one);                                    // u30
    add(z, one, -one);                                   // u31
    add(-one, one, one);                                 // u32
    add(-one, one, Scalar(-2));                          // u33
    add(z, Scalar(2), one);                              // u34
    add(z, one, Scalar(-2));                             // u35
    add(Scalar(2), Scalar(-2), -one);                    // u36
    add(one, -one, Scalar(4));                           // u37
    add(Scalar(-2) - s2, Scalar(6) - s2, Scalar(2));     // u38
    V.vectors.push_back(V.vectors[1]);                   // u39 = u2
    V.vectors.push_back(V.vectors[2]);                   // u40 = u3
    add(one, one, Scalar(-2) + s2);                      // u41
    V.vectors.push_back(V.vectors[0]);                   // u42 = u1
    add(z, z, one);                                      // u43
    Construction c;
    c.name = "state_dependent_40";
    c.mode = BuildMode::Expanded;
    c.vectors = V;
    c.graph = orthogonality_graph(V, kDefaultOrthTol, false);
    c.distinguished = {0};
    c.params["entries"] = 43;
    return c;
}

// ---- nested extended gadget --------------------------------------------------

namespace {

// shell around an inner pair at (1,0,0) and (x,1,0): the Clifton mechanism
// with free apex parameter a (b = c = 1 fixed)
std::vector<LVec> nested_shell(long double x, long double a) {
    return {
        {-(1 + a * x), x - a, a - x},        // u1
        {0, 1, 1},                           // u2
        {x - a, x * (a - x), -(1 + x * x)},  // u3
        {1, 0, 0},                           // u4
        {x, 1, 0},                           // u5
        {0, -1, 1},                          // u6
        {1, -x, x - a},                      // u7
        {a, 1, 1},                           // u8
    };
}

struct NestedBuild {
    std::vector<LVec> vecs;
    int i1, i8;
};

NestedBuild nested_build(int k, long double a_last) {
    if (k == 1) {
        auto sh = nested_shell(0.0L, k == 1 && a_last >= 0 ? a_last : 1.0L);
        return {sh, 0, 7};
    }
    NestedBuild in = nested_build(k - 1, -1.0L);
    LVec p = lunit(in.vecs[in.i1]), q = lunit(in.vecs[in.i8]);
    if (ldot(p, q) < 0) q = lscale(q, -1);
    long double xk = (k - 1) / (2.0L * sqrtl(static_cast<long double>(k)));
    LVec s = lunit(lsub(q, lscale(p, ldot(p, q))));
    LVec t = lcross(p, s);
    std::vector<LVec> rotated;
    for (const auto& w : in.vecs) rotated.push_back({ldot(w, p), ldot(w, s), ldot(w, t)});
    long double a = a_last >= 0 ? a_last : sqrtl(static_cast<long double>(k));
    auto sh = nested_shell(xk, a);
    NestedBuild out;
    out.vecs = {sh[0], sh[1], sh[2], sh[5], sh[6], sh[7]};
    for (auto& w : rotated) out.vecs.push_back(w);
    out.i1 = 0;
    out.i8 = 5;
    return out;
}

long double nested_outer_overlap(int k, long double a_last) {
    NestedBuild nb = nested_build(k, a_last);
    return lcos(nb.vecs[nb.i1], nb.vecs[nb.i8]);
}

}  // namespace

Construction build_nested_extended(int k, std::optional<long double> target_overlap) {
    if (k < 1) throw std::invalid_argument("build_nested_extended: k >= 1 required");
    long double natural = static_cast<long double>(k) / (k + 2);
    long double a_last = -1.0L;
    if (target_overlap) {
        if (!(*target_overlap > 0.0L && *target_overlap <= natural + 1e-12L))
            throw std::invalid_argument("build_nested_extended: target outside (0, k/(k+2)]");
        // the last shell's apex parameter sweeps the outer overlap from 0 to
        // the natural value; bisect on it
        long double lo = 0.0L, hi = sqrtl(static_cast<long double>(k));
        for (int it = 0; it < 200; ++it) {
            long double mid = (lo + hi) / 2;
            if (nested_outer_overlap(k, mid) < *target_overlap)
                lo = mid;
            else
                hi = mid;
        }
        a_last = (lo + hi) / 2;
    }
    NestedBuild nb = nested_build(k, a_last);
    VectorSet V;
    V.d = 3;
    for (const auto& w : nb.vecs) V.vectors.push_back(from_ld(lunit(w)));
    Construction c;
    c.name = "nested_extended";
    c.mode = BuildMode::Expanded;
    c.vectors = V;
    c.graph = orthogonality_graph(V, kDefaultOrthTol, false);
    c.distinguished = {nb.i1, nb.i8};
    c.params["k"] = k;
    long double got = lcos(nb.vecs[nb.i1], nb.vecs[nb.i8]);
    long double want = target_overlap ? *target_overlap : natural;
    if (fabsl(got - want) > 1e-9L) throw std::runtime_error("build_nested_extended: overlap off target");
    c.params["overlap"] = static_cast<double>(got);
    return c;
}

// ---- alternative extended family (repeating four-vector unit) ---------------

Construction build_alt_extended(long double x, int t) {
    if (!(x > 0.0L && x < 1.0L)) throw std::invalid_argument("build_alt_extended: x in (0,1) required");
    if (t < 1) throw std::invalid_argument("build_alt_extended: t >= 1 required");
    long double x2 = x * x;
    long double lhs = powl(1.0L - x2, 3), rhs = 4.0L * powl(x, 4 * t);
    if (lhs < rhs) {
        int t_min = t;
        while (powl(1.0L - x2, 3) < 4.0L * powl(x, 4 * t_min) && t_min < 1000) ++t_min;
        throw std::invalid_argument("build_alt_extended: y not real for this (x,t); smallest valid t is " +
                                    std::to_string(t_min));
    }
    long double y = sqrtl(((1 - x2) * (1 - x2) + 2 * powl(x, 4 * t - 2) -
                           sqrtl((1 - x2) * (powl(1 - x2, 3) - 4 * powl(x, 4 * t)))) /
                          (2 * (1 - x2) * (1 - x2 + powl(x, 4 * t - 2))));
    long double sx = sqrtl(1 - x2), sy = sqrtl(1 - y * y), sxy = sqrtl((1 - x2) * (1 - y * y));
    std::vector<LVec> v = {
        {1, 0, 0},                              // v1
        {x, sx, 0},                             // v2
        {0, x, -sx},                            // v3
        {-(1 - x2), x * sx, x2},                // v4
        {x, (1 - x2) * sx, x * (1 - x2)},       // v5
        {0, y, sy},                             // v6
        {-sxy, x * sy, -x * y},                 // v7
        {x, (1 - y * y) * sx, -y * sxy},        // v8
        {0, 1, 0},                              // v9
        {-sx, x, 0},                            // v10
    };
    for (int tt = 1; tt <= t; ++tt) {
        v.push_back({-(1 - x2), 0, powl(x, 2 * (tt - 1))});
        v.push_back({powl(x, 2 * (tt - 1)), 0, 1 - x2});
        v.push_back({-x * (1 - x2), -(1 - x2) * sx, powl(x, 2 * tt - 1)});
        v.push_back({powl(x, 2 * tt), powl(x, 2 * tt - 1) * sx, 1 - x2});
    }
    VectorSet V;
    V.d = 3;
    for (const auto& w : v) V.vectors.push_back(from_ld(lunit(w)));
    Construction c;
    c.name = "alt_extended";
    c.mode = BuildMode::Expanded;
    c.vectors = V;
    c.graph = orthogonality_graph(V, kDefaultOrthTol, false);
    c.distinguished = {0, 1};
    c.params["x"] = static_cast<double>(x);
    c.params["t"] = t;
    c.params["overlap"] = static_cast<double>(x);
    return c;
}

// ---- Kochen-Specker synthesis ------------------------------------------------

Construction build_ks_from_gadget(const Construction& gadget, int p, int q) {
    if (!gadget.vectors || gadget.distinguished.size() != 2)
        throw std::invalid_argument("build_ks_from_gadget: expanded gadget with a distinguished pair required");
    if (p < 1 || q < 1 || q % 2 == 0) throw std::invalid_argument("build_ks_from_gadget: need p >= 1 and odd q");
    const VectorSet& VS = *gadget.vectors;
    int d = VS.d;
    std::vector<LVec> V;
    for (const auto& v : VS.vectors) V.push_back(lunit(to_ld(v)));
    int i1 = gadget.distinguished[0], i2 = gadget.distinguished[1];
    LVec v1 = V[i1], v2 = V[i2];
    long double cth = ldot(v1, v2);
    if (cth < 0) v2 = lscale(v2, -1), cth = -cth;
    if (cth < 1e-12L || cth > 1 - 1e-12L) throw std::invalid_argument("build_ks_from_gadget: degenerate pair");
    LVec eb = lunit(lsub(v2, lscale(v1, cth)));
    long double s = sqrtl(1 - cth * cth);
    LVec v2perp = lsub(lscale(v1, s), lscale(eb, cth));
    long double theta = acosl(s);
    long double theta_t = static_cast<long double>(q) * kPi / (2 * p);
    if (theta_t > 2 * theta + 1e-12L)
        throw std::invalid_argument("build_ks_from_gadget: target angle " + std::to_string((double)theta_t) +
                                    " unreachable; reachable interval is (0, " +
                                    std::to_string((double)(2 * theta)) + "]");
    // complement basis of the distinguished plane
    std::vector<LVec> w = complete_frame({v1, eb}, d);
    w.erase(w.begin(), w.begin() + 2);
    // concatenation unitary: v1 -> v2perp, eb -> -v2'(phi), w0 -> w0'(phi)
    long double cosphi = (cosl(theta_t) - s * s) / (cth * cth);
    cosphi = std::min(1.0L, std::max(-1.0L, cosphi));
    long double sinphi = sqrtl(1 - cosphi * cosphi);
    LVec m1 = v2, m2 = w[0];
    LVec v2p = ladd(lscale(m1, cosphi), lscale(m2, sinphi));
    LVec w0p = ladd(lscale(m1, -sinphi), lscale(m2, cosphi));
    auto applyU = [&](const LVec& xv) -> LVec {
        LVec r = lscale(v2perp, ldot(xv, v1));
        r = lsub(r, lscale(v2p, ldot(xv, eb)));
        r = ladd(r, lscale(w0p, ldot(xv, w[0])));
        for (size_t i = 1; i < w.size(); ++i) r = ladd(r, lscale(w[i], ldot(xv, w[i])));
        return r;
    };
    // block = gadget + closure vectors + the rotated copy sharing v2perp
    std::vector<LVec> block = V;
    block.push_back(v2perp);
    for (const auto& wi : w) block.push_back(wi);
    size_t base_count = block.size();
    for (size_t i = 0; i < base_count; ++i) {
        if (static_cast<int>(i) == i1) continue;
        block.push_back(applyU(block[i]));
    }
    LVec exitv = applyU(v2perp);
    // chain rotation: angle theta_t in the (v1, exit) plane
    long double ce = ldot(exitv, v1);
    LVec f2 = lunit(lsub(exitv, lscale(v1, ce)));
    auto applyChain = [&](const LVec& xv) -> LVec {
        long double a1 = ldot(xv, v1), a2 = ldot(xv, f2);
        LVec r = xv;
        r = ladd(r, lscale(v1, (cosl(theta_t) - 1) * a1 - sinl(theta_t) * a2));
        r = ladd(r, lscale(f2, sinl(theta_t) * a1 + (cosl(theta_t) - 1) * a2));
        return r;
    };
    std::vector<LVec> chain = block;
    {
        std::vector<LVec> copy = block;
        for (int step = 1; step < p; ++step) {
            for (auto& xv : copy) xv = applyChain(xv);
            chain.insert(chain.end(), copy.begin(), copy.end());
        }
    }
    // cyclic basis closure: c_0 = v1, c_1 = end of chain, rest completes
    LVec endv = v1;
    for (int step = 0; step < p; ++step) endv = applyChain(endv);
    std::vector<LVec> cbasis = complete_frame({v1, lunit(endv)}, d);
    auto applyCycle = [&](const LVec& xv) -> LVec {
        LVec r(xv.size(), 0.0L);
        for (int j = 0; j < d; ++j) r = ladd(r, lscale(cbasis[(j + 1) % d], ldot(xv, cbasis[j])));
        return r;
    };
    Scene sc(d);
    std::vector<LVec> cur = chain;
    for (int j = 0; j < d; ++j) {
        for (const auto& xv : cur) sc.add_ray(xv);
        if (j + 1 < d)
            for (auto& xv : cur) xv = applyCycle(xv);
    }
    Construction out;
    out.name = "ks_from_gadget";
    out.mode = BuildMode::Expanded;
    out.vectors = sc.vector_set();
    out.graph = sc.realized_graph();
    out.params["p"] = p;
    out.params["q"] = q;
    out.params["theta_target"] = static_cast<double>(theta_t);
    out.params["source"] = gadget.name;
    int w_got = maximal_cliques(out.graph).omega;
    if (w_got != d)
        throw std::runtime_error("build_ks_from_gadget: omega " + std::to_string(w_got) + " != dimension");
    return out;
}

// ---- dashed-edge assemblies ---------------------------------------------------

namespace {

// expanded helper: basis e_1..e_d plus a centre ray joined to each basis
// vector by a parametric gadget
void add_g0_unit(Scene& sc, const PairRotation* orient, std::vector<int>& basis_idx, int& centre_idx) {
    int d = sc.d;
    std::vector<LVec> basis(d);
    LVec centre(d, 0.0L);
    for (int i = 0; i < d; ++i) {
        basis[i] = LVec(d, 0.0L);
        basis[i][i] = 1.0L;
        centre[i] = 1.0L / sqrtl(static_cast<long double>(d));
    }
    if (orient) {
        for (auto& b : basis) b = orient->apply(b);
        centre = orient->apply(centre);
    }
    basis_idx.clear();
    for (int i = 0; i < d; ++i) basis_idx.push_back(sc.add_ray(basis[i]));
    centre_idx = sc.add_ray(centre);
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) sc.add_edge(basis_idx[i], basis_idx[j]);
    Construction gad = build_gadget_pair(1.0L / sqrtl(static_cast<long double>(d)));
    for (int i = 0; i < d; ++i) place_gadget(sc, gad, basis_idx[i], centre_idx);
}

}  // namespace

Construction build_g0(int d, BuildMode mode) {
    if (d < 3) throw std::invalid_argument("build_g0: d >= 3 required");
    Construction c;
    c.name = "g0";
    c.mode = mode;
    if (mode == BuildMode::Virtual) {
        Graph g(d + 1);
        for (int i = 0; i < d; ++i)
            for (int j = i + 1; j < d; ++j) g.add_edge(i, j);
        for (int i = 0; i < d; ++i) g.add_exclusive(i, d);
        std::vector<std::string> lab;
        for (int i = 1; i <= d; ++i) lab.push_back("u" + std::to_string(i));
        lab.push_back("center");
        g.set_labels(lab);
        c.graph = g;
        c.distinguished = {d};
    } else {
        if (d != 3) throw std::invalid_argument("build_g0: expanded mode implemented for d = 3");
        Scene sc(3);
        std::vector<int> basis;
        int centre;
        add_g0_unit(sc, nullptr, basis, centre);
        c.vectors = sc.vector_set();
        c.graph = sc.realized_graph();
        c.distinguished = {centre};
    }
    c.params["d"] = d;
    return c;
}

Construction build_g1(BuildMode mode) {
    Construction c;
    c.name = "g1";
    c.mode = mode;
    if (mode == BuildMode::Virtual) {
        // two G0 units with orthogonal centres and the closing basis vertex
        Graph g(9);
        auto unit = [&](int base, int centre) {
            for (int i = 0; i < 3; ++i)
                for (int j = i + 1; j < 3; ++j) g.add_edge(base + i, base + j);
            for (int i = 0; i < 3; ++i) g.add_exclusive(base + i, centre);
        };
        unit(0, 6);
        unit(3, 7);
        g.add_edge(6, 7);
        g.add_edge(6, 8);
        g.add_edge(7, 8);
        c.graph = g;
        c.distinguished = {8};
    } else {
        Scene sc(3);
        // centres at e1 and e2, third basis vector e3 forced to 1
        LVec e1 = {1, 0, 0}, e2 = {0, 1, 0}, e3 = {0, 0, 1};
        LVec diag = lunit(LVec{1, 1, 1});
        PairRotation r1 = ray_rotation(diag, e1);
        PairRotation r2 = ray_rotation(diag, e2);
        std::vector<int> basis;
        int c1, c2;
        add_g0_unit(sc, &r1, basis, c1);
        add_g0_unit(sc, &r2, basis, c2);
        int t = sc.add_ray(e3);
        sc.add_edge(c1, c2);
        sc.add_edge(c1, t);
        sc.add_edge(c2, t);
        c.vectors = sc.vector_set();
        c.graph = sc.realized_graph();
        c.distinguished = {t};
    }
    return c;
}

Construction build_ks1(BuildMode mode) {
    Construction c;
    c.name = "ks1";
    c.mode = mode;
    if (mode == BuildMode::Virtual) {
        Graph g(12);
        auto unit = [&](int base, int centre) {
            for (int i = 0; i < 3; ++i)
                for (int j = i + 1; j < 3; ++j) g.add_edge(base + i, base + j);
            for (int i = 0; i < 3; ++i) g.add_exclusive(base + i, centre);
        };
        unit(0, 9);
        unit(3, 10);
        unit(6, 11);
        g.add_edge(9, 10);
        g.add_edge(9, 11);
        g.add_edge(10, 11);
        c.graph = g;
    } else {
        Scene sc(3);
        LVec diag = lunit(LVec{1, 1, 1});
        std::vector<int> centres;
        for (int j = 0; j < 3; ++j) {
            LVec target(3, 0.0L);
            target[j] = 1.0L;
            PairRotation r = ray_rotation(diag, target);
            std::vector<int> basis;
            int centre;
            add_g0_unit(sc, &r, basis, centre);
            centres.push_back(centre);
        }
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j) sc.add_edge(centres[i], centres[j]);
        c.vectors = sc.vector_set();
        c.graph = sc.realized_graph();
    }
    return c;
}

Construction build_ks2(BuildMode mode) {
    Construction c;
    c.name = "ks2";
    c.mode = mode;
    if (mode == BuildMode::Virtual) {
        Graph g(6);
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j) {
                g.add_edge(i, j);
                g.add_edge(3 + i, 3 + j);
            }
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) g.add_exclusive(i, 3 + j);
        c.graph = g;
    } else {
        Scene sc(3);
        // second basis: rows of the rational rotation (2,-2,1;1,2,2;2,1,-2)/3,
        // every overlap against the standard basis is 1/3 or 2/3
        std::vector<LVec> u = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
        std::vector<LVec> v = {{2.0L / 3, -2.0L / 3, 1.0L / 3},
                               {1.0L / 3, 2.0L / 3, 2.0L / 3},
                               {2.0L / 3, 1.0L / 3, -2.0L / 3}};
        std::vector<int> ui, vi;
        for (auto& x : u) ui.push_back(sc.add_ray(x));
        for (auto& x : v) vi.push_back(sc.add_ray(x));
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j) {
                sc.add_edge(ui[i], ui[j]);
                sc.add_edge(vi[i], vi[j]);
            }
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                long double ov = lcos(u[i], v[j]);
                Construction gad = build_gadget_pair(ov);
                place_gadget(sc, gad, ui[i], vi[j]);
            }
        c.vectors = sc.vector_set();
        c.graph = sc.realized_graph();
    }
    return c;
}

// ---- state-independent simplex sets -----------------------------------------

Construction build_si_simplex(int d, BuildMode mode, SIRecord* record) {
    if (d < 3) throw std::invalid_argument("build_si_simplex: d >= 3 required");
    Construction c;
    c.name = "si_simplex";
    c.mode = mode;
    if (record) {
        record->classical_bound = Rational(1);
        record->quantum_value = Rational(d + 1, d);
    }
    c.params["d"] = d;
    c.params["classical_bound"] = "1";
    c.params["quantum_value"] = Rational(d + 1, d).to_string();
    if (mode == BuildMode::Virtual) {
        // d+1 simplex vertices pairwise joined by virtual gadget edges, plus a
        // disjoint reference basis clique anchoring the clique number at d
        Graph g(d + 1 + d);
        for (int i = 0; i <= d; ++i)
            for (int j = i + 1; j <= d; ++j) g.add_exclusive(i, j);
        for (int i = 0; i < d; ++i)
            for (int j = i + 1; j < d; ++j) g.add_edge(d + 1 + i, d + 1 + j);
        std::vector<std::string> lab;
        for (int i = 1; i <= d + 1; ++i) lab.push_back("u" + std::to_string(i));
        for (int i = 1; i <= d; ++i) lab.push_back("anchor" + std::to_string(i));
        g.set_labels(lab);
        c.graph = g;
        for (int i = 0; i <= d; ++i) c.distinguished.push_back(i);
    } else {
        if (d != 3) throw std::invalid_argument("build_si_simplex: expanded mode implemented for d = 3");
        Scene sc(3);
        VectorSet frame = simplex_frame(3);
        std::vector<int> idx;
        for (const auto& v : frame.vectors) idx.push_back(sc.add_ray(to_ld(v)));
        Construction gad = build_gadget_pair(1.0L / 3);
        for (int i = 0; i <= d; ++i)
            for (int j = i + 1; j <= d; ++j) place_gadget(sc, gad, idx[i], idx[j]);
        c.vectors = sc.vector_set();
        c.graph = sc.realized_graph();
        c.distinguished = idx;
    }
    return c;
}

// ---- extended-KS assembly (Pitowsky) -----------------------------------------

Construction build_pitowsky(long double overlap, BuildMode mode) {
    if (!(overlap > 0.0L && overlap < 1.0L)) throw std::invalid_argument("build_pitowsky: overlap in (0,1)");
    Construction c;
    c.name = "pitowsky";
    c.mode = mode;
    c.params["overlap"] = static_cast<double>(overlap);
    if (mode == BuildMode::Virtual) {
        // v1..v5 skeleton with virtual extended-gadget pairs
        Graph g(5);
        g.add_edge(0, 2);
        g.add_edge(0, 3);
        g.add_edge(2, 3);
        g.add_edge(1, 2);
        g.add_edge(1, 4);
        g.add_edge(2, 4);
        g.add_exclusive(0, 1);
        g.add_exclusive(0, 4);
        g.add_exclusive(1, 3);
        g.set_labels({"v1", "v2", "v3", "v4", "v5"});
        c.graph = g;
        c.distinguished = {0, 1};
        return c;
    }
    long double sx = sqrtl(1 - overlap * overlap);
    Scene sc(3);
    int v1 = sc.add_ray({1, 0, 0}, "v1");
    int v2 = sc.add_ray({overlap, sx, 0}, "v2");
    int v3 = sc.add_ray({0, 0, 1}, "v3");
    int v4 = sc.add_ray({0, 1, 0}, "v4");
    int v5 = sc.add_ray({sx, -overlap, 0}, "v5");
    sc.add_edge(v1, v3);
    sc.add_edge(v1, v4);
    sc.add_edge(v3, v4);
    sc.add_edge(v2, v3);
    sc.add_edge(v2, v5);
    sc.add_edge(v3, v5);
    auto nested_for = [&](long double target) {
        int k = 1;
        while (static_cast<long double>(k) / (k + 2) < target - 1e-12L && k < 400) ++k;
        return build_nested_extended(k, target);
    };
    place_gadget(sc, nested_for(overlap), v1, v2);
    place_gadget(sc, nested_for(sx), v1, v5);
    place_gadget(sc, nested_for(sx), v2, v4);
    c.vectors = sc.vector_set();
    c.graph = sc.realized_graph();
    c.distinguished = {v1, v2};
    return c;
}

// ---- serialization and CLI dispatch ------------------------------------------

json construction_to_json(const Construction& c) {
    json j;
    j["name"] = c.name;
    j["mode"] = c.mode == BuildMode::Expanded ? "expanded" : "virtual";
    j["graph"] = graph_to_json(c.graph);
    if (c.vectors) j["vectors"] = vectors_to_json(*c.vectors);
    if (!c.distinguished.empty()) j["distinguished"] = c.distinguished;
    j["params"] = c.params;
    return j;
}

Construction construction_from_json(const json& j) {
    Construction c;
    c.name = j.value("name", "");
    c.mode = j.value("mode", "expanded") == "virtual" ? BuildMode::Virtual : BuildMode::Expanded;
    c.graph = graph_from_json(j.at("graph"));
    if (j.contains("vectors")) c.vectors = vectors_from_json(j.at("vectors"));
    if (j.contains("distinguished")) c.distinguished = j.at("distinguished").get<std::vector<int>>();
    if (j.contains("params")) c.params = j.at("params");
    return c;
}

Construction build_by_name(const std::string& name, const json& params) {
    auto mode = params.value("mode", "") == "virtual" ? BuildMode::Virtual
               : params.value("mode", "") == "expanded" ? BuildMode::Expanded
                                                        : BuildMode::Virtual;
    bool mode_given = params.contains("mode");
    if (name == "clifton") return build_clifton();
    if (name == "clifton_lift") return build_clifton_lift(params.value("d", 4));
    if (name == "gadget_pair") return build_gadget_pair(params.value("overlap", 1.0 / 3));
    if (name == "state_dependent_40") return build_state_dependent_40();
    if (name == "nested_extended") {
        std::optional<long double> target;
        if (params.contains("overlap")) target = params.at("overlap").get<double>();
        return build_nested_extended(params.value("k", 1), target);
    }
    if (name == "alt_extended") return build_alt_extended(params.value("x", 0.5), params.value("t", 1));
    if (name == "g0") return build_g0(params.value("d", 3), mode_given ? mode : BuildMode::Virtual);
    if (name == "g1") return build_g1(mode_given ? mode : BuildMode::Virtual);
    if (name == "ks1") return build_ks1(mode_given ? mode : BuildMode::Virtual);
    if (name == "ks2") return build_ks2(mode_given ? mode : BuildMode::Virtual);
    if (name == "si_simplex") return build_si_simplex(params.value("d", 3), mode_given ? mode : BuildMode::Virtual);
    if (name == "pitowsky")
        return build_pitowsky(params.value("overlap", 1.0 / 3), mode_given ? mode : BuildMode::Virtual);
    if (name == "ks_from_gadget") {
        Construction gad = build_clifton();
        return build_ks_from_gadget(gad, params.value("p", 3), params.value("q", 1));
    }
    throw std::invalid_argument("unknown construction '" + name + "'");
}

}  // namespace ksg
