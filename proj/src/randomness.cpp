#include "ksg/randomness.hpp"

#include <stdexcept>

namespace ksg {

PairBounds pair_bounds(const Construction& c, int a, int b) {
    if (!c.vectors) throw std::invalid_argument("pair_bounds: expanded construction required");
    if (a < 0 || b < 0 || a >= c.graph.n() || b >= c.graph.n() || a == b)
        throw std::invalid_argument("pair_bounds: bad pair");
    PairBounds out;
    out.pair = {a, b};
    out.adjacent_warning = c.graph.adjacent(a, b);
    Scalar ov2 = overlap_sq(c.vectors->vectors[a], c.vectors->vectors[b]);
    out.quantum_prob = ov2 / Scalar(c.vectors->d);
    std::vector<Rational> obj(c.graph.n(), Rational(0));
    obj[a] = Rational(1);
    obj[b] = Rational(1);
    LPResult lp = lp_maximize(c.graph, obj);
    if (lp.status != LPStatus::Optimal) throw std::runtime_error("pair_bounds: assignment polytope infeasible");
    out.lp_value = lp.optimum;
    out.ns_upper = lp.optimum / Rational(2);
    return out;
}

LPResult restricted_lp_clifton() {
    // variables p1..p8 in the traditional bug-graph labeling: pairwise
    // cliques (1,2), (1,6), (3,8), (4,5), (7,8) and maximum cliques
    // {2,3,4}, {5,6,7}. (The summed form 2p1 + p2+...+p7 + 2p8 <= 5 pins the
    // third pair as (3,8).)
    LinearProgram lp;
    lp.nvars = 8;
    auto pairrow = [&](int i, int j) {
        std::vector<Rational> row(8, Rational(0));
        row[i - 1] = Rational(1);
        row[j - 1] = Rational(1);
        lp.add_row(row, Rational(1), false);
    };
    pairrow(1, 2);
    pairrow(1, 6);
    pairrow(3, 8);
    pairrow(4, 5);
    pairrow(7, 8);
    auto cliquerow = [&](int i, int j, int k) {
        std::vector<Rational> row(8, Rational(0));
        row[i - 1] = Rational(1);
        row[j - 1] = Rational(1);
        row[k - 1] = Rational(1);
        lp.add_row(row, Rational(1), true);
    };
    cliquerow(2, 3, 4);
    cliquerow(5, 6, 7);
    for (int v = 0; v < 8; ++v) {
        std::vector<Rational> row(8, Rational(0));
        row[v] = Rational(1);
        lp.add_row(row, Rational(1), false);
    }
    std::vector<Rational> obj(8, Rational(0));
    obj[0] = Rational(1);
    obj[7] = Rational(1);
    return simplex_maximize(lp, obj);
}

}  // namespace ksg
