#pragma once

#include <array>
#include <optional>
#include <vector>

#include "ksg/graph.hpp"
#include "ksg/rational.hpp"

namespace ksg {

// Exact rational linear programming over the [0,1]-assignment polytope of a
// graph: per maximal clique Q a row sum_{v in Q} p_v <= 1, tightened to an
// equality when |Q| equals the clique number; pairwise/virtual exclusivity
// enters as sum <= 1 over maximal cliques of the exclusivity graph. No
// floating point anywhere in this module.

struct FractionalAssignment {
    std::vector<Rational> values;
};

enum class LPStatus { Optimal, Infeasible };

struct LPResult {
    LPStatus status = LPStatus::Infeasible;
    Rational optimum;
    FractionalAssignment primal;
    // Farkas certificate for infeasible systems, integer lowest terms:
    // multipliers y (>= 0 on inequality rows) with y^T A >= 0 and y^T b < 0,
    // re-verified by direct arithmetic before being returned.
    std::vector<Rational> farkas;
    int pivots = 0;
};

// general form: A x {<=,=} b, x >= 0
struct LinearProgram {
    int nvars = 0;
    std::vector<std::vector<Rational>> rows;
    std::vector<Rational> rhs;
    std::vector<bool> is_eq;

    void add_row(const std::vector<Rational>& a, const Rational& b, bool eq);
};

// simplex with Bland's anti-cycling rule, two phases, exact pivots
LPResult simplex_maximize(const LinearProgram& lp, const std::vector<Rational>& objective);

// the coloring polytope of g; pins add p_v = value equalities
LinearProgram assignment_polytope(const Graph& g, const std::vector<std::pair<int, int>>& pins = {});

// maximize a vertex-weight objective over the assignment polytope; every
// Infeasible verdict is cross-checked by a second solve with permuted rows
LPResult lp_maximize(const Graph& g, const std::vector<Rational>& objective,
                     const std::vector<std::pair<int, int>>& pins = {});

bool lp_feasible(const Graph& g, const std::vector<std::pair<int, int>>& pins = {});

struct ExtendedGadgetCheck {
    bool is_extended_gadget = false;
    // feasible point with both distinguished values 1 (refutation), or the
    // Farkas ray of the pinned polytope (confirmation)
    std::optional<FractionalAssignment> counterexample;
    std::vector<Rational> farkas;
    bool base_colorable = false;
};

// both distinguished values pinned to 1 must be infeasible over [0,1]
// assignments, and the graph itself must admit a {0,1}-coloring
ExtendedGadgetCheck is_extended_gadget(const Graph& g, int v1, int v2);

// feasibility of the polytope with (p_v1, p_v2) pinned to each of the four
// corners, indexed [p1][p2]
std::array<std::array<bool, 2>, 2> indeterminacy_table(const Graph& g, int v1, int v2);

}  // namespace ksg
