#pragma once

#include "ksg/colorer.hpp"
#include "ksg/constructions.hpp"
#include "ksg/graph.hpp"

namespace ksg {

// Compiler from omega(G)-colorability: each source vertex becomes a clique,
// each source edge (u,v) constrains the pairs (u_i, v_i) by a 01-gadget:
// a virtual exclusive pair, or an expanded parametric instance placed on the
// fixed cyclic-shift representation.
struct Reduction {
    Graph source;
    Graph target;
    std::vector<std::vector<int>> vertex_map;  // source vertex -> its clique in H
    struct Placement {
        Edge source_edge;
        int index;                        // which clique slot i
        std::pair<int, int> distinguished;  // vertices of H
        int gadget_id;                    // -1 in virtual mode
    };
    std::vector<Placement> placements;
    std::vector<Construction> gadgets;  // memoized instances (expanded mode)
    BuildMode mode = BuildMode::Virtual;
};

Reduction reduce(const Graph& g, BuildMode mode);

struct KColoringResult {
    bool colorable = false;
    std::vector<int> coloring;  // colors 0..k-1
};

// independent proper-coloring oracle: plain backtracking, lowest vertex and
// lowest color first
KColoringResult k_colorable(const Graph& g, int k);

struct EquivalenceVerdict {
    bool source_colorable = false;
    bool target_colorable = false;
    bool equivalent = false;
    bool lift_checked = false;
    bool lift_valid = false;
};

// omega(G)-colorability of the source must match {0,1}-colorability of H;
// when both hold, the lifted coloring c'(v_i) = [i == c(v)] is validated
EquivalenceVerdict verify_equivalence(const Graph& g, const Reduction& r, const SolveOptions& opt = {});

}  // namespace ksg
