#include "ksg/vecset.hpp"

#include <cmath>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ksg {

Scalar inner(const SVec& u, const SVec& v) {
    if (u.size() != v.size()) throw std::invalid_argument("inner: dimension mismatch");
    Scalar s;
    for (size_t i = 0; i < u.size(); ++i) s = s + u[i] * v[i];
    return s;
}

Scalar norm_sq(const SVec& u) { return inner(u, u); }

Scalar overlap_sq(const SVec& u, const SVec& v) {
    Scalar ip = inner(u, v);
    return ip * ip / (norm_sq(u) * norm_sq(v));
}

long double overlap(const SVec& u, const SVec& v) {
    return sqrtl(overlap_sq(u, v).to_long_double());
}

LVec to_ld(const SVec& u) {
    LVec out(u.size());
    for (size_t i = 0; i < u.size(); ++i) out[i] = u[i].to_long_double();
    return out;
}

SVec from_ld(const LVec& u) {
    SVec out(u.size());
    for (size_t i = 0; i < u.size(); ++i) out[i] = Scalar::approx(u[i]);
    return out;
}

std::vector<std::vector<Scalar>> gram(const VectorSet& V) {
    int n = V.size();
    std::vector<std::vector<Scalar>> G(n, std::vector<Scalar>(n));
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) G[i][j] = G[j][i] = inner(V.vectors[i], V.vectors[j]);
    return G;
}

std::vector<std::vector<long double>> gram_normalized(const VectorSet& V) {
    int n = V.size();
    std::vector<long double> nrm(n);
    for (int i = 0; i < n; ++i) nrm[i] = sqrtl(norm_sq(V.vectors[i]).to_long_double());
    std::vector<std::vector<long double>> G(n, std::vector<long double>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) G[i][j] = inner(V.vectors[i], V.vectors[j]).to_long_double() / (nrm[i] * nrm[j]);
    return G;
}

namespace {

bool pair_orthogonal(const SVec& u, const SVec& v, long double tol) {
    Scalar ip = inner(u, v);
    if (ip.exact()) {
        if (ip.is_zero() || ip.sign() == 0) return true;
        if (tol == 0.0L) return false;
    } else if (tol == 0.0L) {
        throw std::invalid_argument("orthogonality_graph: tol 0 requires a fully exact vector set");
    }
    long double num = fabsl(ip.to_long_double());
    long double den = sqrtl(norm_sq(u).to_long_double() * norm_sq(v).to_long_double());
    return num <= tol * den;
}

Graph graph_from_flags(const VectorSet& V, const std::vector<uint8_t>& flag) {
    int n = V.size();
    Graph g(n);
    size_t k = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++k)
            if (flag[k]) g.add_edge(i, j);
    return g;
}

void check_set(const VectorSet& V) {
    for (const auto& v : V.vectors) {
        if (static_cast<int>(v.size()) != V.d) throw std::invalid_argument("VectorSet: dimension mismatch");
        bool all_zero = true;
        for (const auto& x : v)
            if (!x.is_zero()) all_zero = false;
        if (all_zero) throw std::invalid_argument("VectorSet: zero vector");
    }
}

}  // namespace

Graph orthogonality_graph_serial(const VectorSet& V, long double tol) {
    check_set(V);
    int n = V.size();
    std::vector<uint8_t> flag(static_cast<size_t>(n) * (n - 1) / 2, 0);
    size_t k = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++k) flag[k] = pair_orthogonal(V.vectors[i], V.vectors[j], tol);
    return graph_from_flags(V, flag);
}

Graph orthogonality_graph(const VectorSet& V, long double tol, bool parallel) {
    check_set(V);
    int n = V.size();
    if (!parallel || n < 64) return orthogonality_graph_serial(V, tol);
    size_t total = static_cast<size_t>(n) * (n - 1) / 2;
    std::vector<uint8_t> flag(total, 0);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 256)
#endif
    for (long long k = 0; k < static_cast<long long>(total); ++k) {
        // unrank pair index k -> (i,j)
        long double nf = n;
        long long i = static_cast<long long>(nf - 0.5L - sqrtl((nf - 0.5L) * (nf - 0.5L) - 2.0L * k));
        while (static_cast<long long>(i + 1) * (2 * n - i - 2) / 2 <= k) ++i;
        while (i > 0 && static_cast<long long>(i) * (2 * n - i - 1) / 2 > k) --i;
        long long j = k - static_cast<long long>(i) * (2 * n - i - 1) / 2 + i + 1;
        flag[k] = pair_orthogonal(V.vectors[i], V.vectors[j], tol);
    }
    return graph_from_flags(V, flag);
}

bool rays_equal(const SVec& u, const SVec& v, long double tol) {
    if (u.size() != v.size()) return false;
    Scalar ip = inner(u, v);
    bool exact_pair = ip.exact();
    if (exact_pair) {
        // proportionality: u_i v_j == u_j v_i for all i<j, and not orthogonal
        for (size_t i = 0; i < u.size() && exact_pair; ++i)
            for (size_t j = i + 1; j < u.size(); ++j) {
                Scalar lhs = u[i] * v[j], rhs = u[j] * v[i];
                if (!lhs.exact() || !rhs.exact()) {
                    exact_pair = false;
                    break;
                }
                if (!(lhs - rhs).is_zero()) return false;
            }
        if (exact_pair) return !ip.is_zero();
    }
    long double c = fabsl(ip.to_long_double()) / sqrtl(norm_sq(u).to_long_double() * norm_sq(v).to_long_double());
    return fabsl(c - 1.0L) <= tol;
}

FaithfulReport check_faithful(const VectorSet& V, const Graph& g, long double tol) {
    if (V.size() != g.n()) throw std::invalid_argument("check_faithful: size mismatch");
    FaithfulReport rep;
    for (int i = 0; i < g.n(); ++i) {
        for (int j = i + 1; j < g.n(); ++j) {
            bool orth = pair_orthogonal(V.vectors[i], V.vectors[j], tol);
            if (g.adjacent(i, j) && !orth)
                rep.violations.push_back({FaithfulViolation::Kind::EdgeNotOrthogonal, i, j});
            if (!g.adjacent(i, j) && orth)
                rep.violations.push_back({FaithfulViolation::Kind::OrthogonalNonEdge, i, j});
            if (!orth && rays_equal(V.vectors[i], V.vectors[j]))
                rep.violations.push_back({FaithfulViolation::Kind::DuplicateRay, i, j});
        }
    }
    rep.ok = rep.violations.empty();
    return rep;
}

FaithfulVersion faithful_version(const VectorSet& V, long double tol) {
    FaithfulVersion out;
    int n = V.size();
    out.merge_map.assign(n, -1);
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < out.vectors.size(); ++k) {
            if (rays_equal(V.vectors[i], out.vectors.vectors[k])) {
                out.merge_map[i] = k;
                break;
            }
        }
        if (out.merge_map[i] < 0) {
            out.merge_map[i] = out.vectors.size();
            out.vectors.vectors.push_back(V.vectors[i]);
        }
    }
    out.vectors.d = V.d;
    out.graph = orthogonality_graph(out.vectors, tol);
    return out;
}

VectorSet simplex_frame(int d) {
    if (d < 2) throw std::invalid_argument("simplex_frame: d >= 2 required");
    // u_1 = e_1; each later vector copies the established prefix and closes the
    // pairwise product at -1/d with one fresh coordinate
    std::vector<LVec> u(d + 1, LVec(d, 0.0L));
    u[0][0] = 1.0L;
    for (int k = 1; k <= d; ++k) {
        // the product with each earlier u_j fixes coordinate j; vector d has
        // every coordinate determined and needs no normalization slot
        for (int j = 0; j < k && j < d; ++j) {
            long double acc = 0;
            for (int l = 0; l < j; ++l) acc += u[k][l] * u[j][l];
            u[k][j] = (-1.0L / d - acc) / u[j][j];
        }
        if (k < d) {
            long double s = 0;
            for (int l = 0; l < k; ++l) s += u[k][l] * u[k][l];
            u[k][k] = sqrtl(1.0L - s);
        }
    }
    VectorSet V;
    V.d = d;
    for (auto& w : u) V.vectors.push_back(from_ld(w));
    return V;
}

long double simplex_frame_residual(const VectorSet& V) {
    int d = V.d;
    int n = V.size();
    std::vector<std::vector<long double>> S(d, std::vector<long double>(d, 0.0L));
    for (int k = 0; k < n; ++k) {
        LVec w = to_ld(V.vectors[k]);
        long double nn = 0;
        for (auto x : w) nn += x * x;
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) S[i][j] += w[i] * w[j] / nn;
    }
    long double target = static_cast<long double>(n) / d;
    long double frob = 0;
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            long double e = S[i][j] - (i == j ? target : 0.0L);
            frob += e * e;
        }
    return sqrtl(frob);
}

VectorSet pad_overlap_lift(const VectorSet& V, int v1, int v2, const Scalar& target) {
    if (v1 < 0 || v1 >= V.size() || v2 < 0 || v2 >= V.size() || v1 == v2)
        throw std::invalid_argument("pad_overlap_lift: bad distinguished pair");
    Scalar cur_sq = overlap_sq(V.vectors[v1], V.vectors[v2]);
    Scalar tgt_sq = target * target;
    if (target.sign() <= 0) throw std::invalid_argument("pad_overlap_lift: target must be positive");
    long double cur = sqrtl(cur_sq.to_long_double());
    if (target.to_long_double() > cur + 1e-15L)
        throw std::invalid_argument("pad_overlap_lift: target exceeds current overlap");
    // tilt parameter in the unnormalized frame: x'^2 = |u1|^2 (cur^2/tgt^2 - 1)
    Scalar xp_sq = norm_sq(V.vectors[v1]) * (cur_sq / tgt_sq - Scalar(1));
    Scalar xp = Scalar::sqrt(xp_sq);
    VectorSet out;
    out.d = V.d + 1;
    for (int i = 0; i < V.size(); ++i) {
        SVec w = V.vectors[i];
        w.push_back(i == v1 ? xp : Scalar(0));
        out.vectors.push_back(std::move(w));
    }
    SVec e(V.d + 1, Scalar(0));
    e[V.d] = Scalar(1);
    out.vectors.push_back(std::move(e));
    return out;
}

VectorSet apply_linear_map(const VectorSet& V, const std::vector<SVec>& M) {
    if (static_cast<int>(M.size()) != V.d) throw std::invalid_argument("apply_linear_map: non-square map");
    for (const auto& row : M)
        if (static_cast<int>(row.size()) != V.d) throw std::invalid_argument("apply_linear_map: non-square map");
    VectorSet out;
    out.d = V.d;
    for (const auto& v : V.vectors) {
        SVec w(V.d, Scalar(0));
        for (int i = 0; i < V.d; ++i)
            for (int j = 0; j < V.d; ++j) w[i] = w[i] + M[i][j] * v[j];
        out.vectors.push_back(std::move(w));
    }
    return out;
}

VectorSet embed_dim(const VectorSet& V, int d_new) {
    if (d_new < V.d) throw std::invalid_argument("embed_dim: target dimension too small");
    VectorSet out;
    out.d = d_new;
    for (const auto& v : V.vectors) {
        SVec w = v;
        w.resize(d_new, Scalar(0));
        out.vectors.push_back(std::move(w));
    }
    return out;
}

VectorSet ray_canonicalize(const VectorSet& V) {
    VectorSet out;
    out.d = V.d;
    for (const auto& v : V.vectors) {
        SVec w = v;
        bool all_rat = true;
        int lead = -1;
        for (size_t i = 0; i < w.size(); ++i) {
            if (w[i].kind() != Scalar::Kind::Rational) all_rat = false;
            if (lead < 0 && (w[i].exact() ? w[i].sign() != 0 : w[i].to_long_double() != 0.0L))
                lead = static_cast<int>(i);
        }
        int s = w[lead].exact() ? w[lead].sign() : (w[lead].to_long_double() < 0 ? -1 : 1);
        if (s < 0)
            for (auto& x : w) x = -x;
        if (all_rat) {
            // scale to primitive integers
            BigInt den(1), gcd_num(0);
            for (auto& x : w) den = den * x.rat().den() / BigInt::gcd(den, x.rat().den());
            for (auto& x : w) {
                BigInt scaled = x.rat().num() * (den / x.rat().den());
                gcd_num = BigInt::gcd(gcd_num, scaled);
            }
            for (auto& x : w) {
                BigInt scaled = x.rat().num() * (den / x.rat().den());
                x = Scalar(Rational(scaled / gcd_num, BigInt(1)));
            }
        } else {
            long double nn = sqrtl(norm_sq(w).to_long_double());
            for (auto& x : w) x = Scalar::approx(x.to_long_double() / nn);
        }
        out.vectors.push_back(std::move(w));
    }
    return out;
}

}  // namespace ksg
