#pragma once

#include <optional>
#include <string>

#include "ksg/graph.hpp"
#include "ksg/jsonio.hpp"
#include "ksg/rational.hpp"
#include "ksg/vecset.hpp"

namespace ksg {

enum class BuildMode { Expanded, Virtual };

// One built object: a vector realization (expanded mode) or a gadget-as-
// virtual-edge abstraction (virtual mode), its graph, the distinguished
// vertices, and the parameter record that produced it.
struct Construction {
    std::string name;
    BuildMode mode = BuildMode::Expanded;
    std::optional<VectorSet> vectors;
    Graph graph;
    std::vector<int> distinguished;
    json params = json::object();
};

json construction_to_json(const Construction& c);
Construction construction_from_json(const json& j);

// ---- parametric gadget structure tables ---------------------------------
// The 22-vertex parametric block: vectors from the closed-form family, the
// edge set derived once in exact arithmetic (intersection over two rational
// parameter values), and the two extra pairs that become orthogonal exactly
// at x = 1.
VectorSet gadget_block_vectors(const Scalar& x);
const std::vector<Edge>& gadget_block_edges();
const std::vector<Edge>& gadget_block_edges_x1_extra();
// full 43-vertex two-block assembly (inner block pinned at x = 1)
const std::vector<Edge>& gadget_assembly43_edges();
int gadget_assembly43_vertex(int block, int local);  // block 0/1, local 1..22 -> global 0-based

// ---- builders ------------------------------------------------------------
Construction build_clifton();
Construction build_clifton_lift(int d);
// 01-gadget with the requested distinguished overlap in (0,1); 22 vertices up
// to 1/sqrt(2), the 43-vertex assembly above it
Construction build_gadget_pair(long double overlap);
Construction build_state_dependent_40();
// nested gadget of 8+6(k-1) vertices; default outer overlap k/(k+2), or any
// target in (0, k/(k+2)] via the last shell's free parameter
Construction build_nested_extended(int k, std::optional<long double> target_overlap = std::nullopt);
// the 10+4t vector alternative family; requires (1-x^2)^3 >= 4 x^{4t}
Construction build_alt_extended(long double x, int t);
// Kochen-Specker synthesis: concatenate two rotated gadget copies to reach
// step angle theta = q*pi/(2p) (q odd), chain p blocks, close a cyclic
// d-basis of chains; output graph is uncolorable with unchanged omega
Construction build_ks_from_gadget(const Construction& gadget, int p, int q);

Construction build_g0(int d = 3, BuildMode mode = BuildMode::Virtual);
Construction build_g1(BuildMode mode = BuildMode::Virtual);
Construction build_ks1(BuildMode mode = BuildMode::Virtual);
Construction build_ks2(BuildMode mode = BuildMode::Virtual);

struct SIRecord {
    Rational classical_bound;  // max of sum f(u_i) over colorings
    Rational quantum_value;    // (d+1)/d
};
Construction build_si_simplex(int d, BuildMode mode = BuildMode::Virtual, SIRecord* record = nullptr);

Construction build_pitowsky(long double overlap, BuildMode mode = BuildMode::Virtual);

// dispatch by name for the CLI; throws on unknown name
Construction build_by_name(const std::string& name, const json& params);

}  // namespace ksg
