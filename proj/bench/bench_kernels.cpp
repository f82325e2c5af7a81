// Benchmark: OpenMP kernels against their serial reference implementations.
// Run manually: ./ksg_bench [n]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <random>

#include "ksg/colorer.hpp"
#include "ksg/constructions.hpp"
#include "ksg/vecset.hpp"

using namespace ksg;
using Clock = std::chrono::steady_clock;

namespace {

double seconds(Clock::time_point a, Clock::time_point b) {
    return std::chrono::duration<double>(b - a).count();
}

VectorSet random_rays(int n, int d, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> U(-1.0, 1.0);
    VectorSet V;
    V.d = d;
    for (int i = 0; i < n; ++i) {
        LVec v(d);
        for (auto& x : v) x = U(rng);
        V.vectors.push_back(from_ld(v));
    }
    return V;
}

}  // namespace

int main(int argc, char** argv) {
    int n = argc > 1 ? std::atoi(argv[1]) : 1200;

    std::printf("orthogonality graph, %d random rays in R^6 (%d*%d/2 = %lld pairs)\n", n, n, n - 1,
                1LL * n * (n - 1) / 2);
    VectorSet V = random_rays(n, 6, 42);
    auto t0 = Clock::now();
    Graph gs = orthogonality_graph_serial(V, 1e-6L);
    auto t1 = Clock::now();
    Graph gp = orthogonality_graph(V, 1e-6L, true);
    auto t2 = Clock::now();
    double ts = seconds(t0, t1), tp = seconds(t1, t2);
    std::printf("  serial   %.3fs\n  parallel %.3fs  (x%.2f)  identical=%s\n", ts, tp, ts / tp,
                gs == gp ? "yes" : "NO");

    std::printf("exhaustive coloring enumeration, 40-vector gadget graph\n");
    Construction c40 = build_state_dependent_40();
    FaithfulVersion fv = faithful_version(*c40.vectors);
    long long count_s = 0, count_p = 0;
    SolveOptions ser, par;
    par.parallel = true;
    t0 = Clock::now();
    for (int rep = 0; rep < 40; ++rep) {
        count_s = 0;
        for_each_coloring(fv.graph, [&](const Coloring&) { ++count_s; return true; }, ser);
    }
    t1 = Clock::now();
    for (int rep = 0; rep < 40; ++rep) {
        count_p = 0;
        for_each_coloring(fv.graph, [&](const Coloring&) { ++count_p; return true; }, par);
    }
    t2 = Clock::now();
    ts = seconds(t0, t1);
    tp = seconds(t1, t2);
    std::printf("  serial   %.3fs\n  parallel %.3fs  (x%.2f)  colorings=%lld identical=%s\n", ts, tp,
                ts / tp, count_s, count_s == count_p ? "yes" : "NO");

    std::printf("full refutation sweep, synthesized Kochen-Specker graph\n");
    Construction ks = build_ks_from_gadget(build_clifton(), 3, 1);
    SearchStats st_s, st_p;
    t0 = Clock::now();
    for_each_coloring(ks.graph, [&](const Coloring&) { ++count_s; return true; }, ser, &st_s);
    t1 = Clock::now();
    for_each_coloring(ks.graph, [&](const Coloring&) { ++count_p; return true; }, par, &st_p);
    t2 = Clock::now();
    ts = seconds(t0, t1);
    tp = seconds(t1, t2);
    std::printf("  serial   %.3fs (%lld nodes)\n  parallel %.3fs (%lld nodes)  (x%.2f)\n", ts,
                st_s.nodes, tp, st_p.nodes, ts / tp);
    return 0;
}
