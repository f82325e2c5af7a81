#pragma once

#include "ksg/constructions.hpp"
#include "ksg/lp.hpp"
#include "ksg/scalar.hpp"

namespace ksg {

// Certified-randomness bounds for a gadget pair measured on a maximally
// entangled state of local dimension d: the quantum probability of the joint
// (1,1) outcome against the no-signaling upper bound derived from the
// assignment-polytope LP (bound/2).
struct PairBounds {
    Scalar quantum_prob;   // |<v_a|v_b>|^2 / d, exact when the entries allow
    Rational lp_value;     // max p_a + p_b over the assignment polytope
    Rational ns_upper;     // lp_value / 2
    std::pair<int, int> pair;
    bool adjacent_warning = false;  // orthogonal pair: the bound degenerates
};

PairBounds pair_bounds(const Construction& c, int a, int b);

// The hand-derivation LP: exactly the five two-element cliques and the two
// maximum cliques of the Clifton graph in its traditional labeling, maximizing
// p1 + p8. Optimum is 3/2.
LPResult restricted_lp_clifton();

}  // namespace ksg
