#pragma once

#include <optional>
#include <vector>

#include "ksg/graph.hpp"
#include "ksg/scalar.hpp"

namespace ksg {

using SVec = std::vector<Scalar>;
using LVec = std::vector<long double>;

// List of nonzero vectors in a fixed ambient dimension. Entries live in the
// Scalar tower; purely rational or same-surd sets keep all inner products
// exact.
struct VectorSet {
    int d = 0;
    std::vector<SVec> vectors;

    int size() const { return static_cast<int>(vectors.size()); }
};

constexpr long double kDefaultOrthTol = 1e-9L;
// two rays closer than this are considered the same; see faithful_version
constexpr long double kRayMergeTol = 1e-15L;

Scalar inner(const SVec& u, const SVec& v);
Scalar norm_sq(const SVec& u);
// |<u|v>|^2 / (|u|^2 |v|^2); exact whenever the entries allow
Scalar overlap_sq(const SVec& u, const SVec& v);
long double overlap(const SVec& u, const SVec& v);

LVec to_ld(const SVec& u);
SVec from_ld(const LVec& u);

std::vector<std::vector<Scalar>> gram(const VectorSet& V);
// inner products scaled by the norms, long double entries
std::vector<std::vector<long double>> gram_normalized(const VectorSet& V);

// Edge iff the normalized inner product vanishes: exactly, when the product is
// exact; within tol otherwise. tol == 0 demands a fully exact set. The pair
// loop is data-parallel; `parallel` switches the OpenMP kernel on (the serial
// path is the reference and both produce identical graphs).
Graph orthogonality_graph(const VectorSet& V, long double tol = kDefaultOrthTol, bool parallel = true);
Graph orthogonality_graph_serial(const VectorSet& V, long double tol = kDefaultOrthTol);

bool rays_equal(const SVec& u, const SVec& v, long double tol = kRayMergeTol);

struct FaithfulViolation {
    enum class Kind { EdgeNotOrthogonal, OrthogonalNonEdge, DuplicateRay } kind;
    int i, j;
};

struct FaithfulReport {
    bool ok = true;
    std::vector<FaithfulViolation> violations;
};

// adjacency <=> orthogonality, and distinct vertices carry distinct rays
FaithfulReport check_faithful(const VectorSet& V, const Graph& g, long double tol = kDefaultOrthTol);

struct FaithfulVersion {
    VectorSet vectors;
    Graph graph;
    std::vector<int> merge_map;  // original index -> merged index
};

// merge identical rays and materialize every orthogonality as an edge
FaithfulVersion faithful_version(const VectorSet& V, long double tol = kDefaultOrthTol);

// d+1 unit vectors in R^d with pairwise inner product -1/d
VectorSet simplex_frame(int d);

// sum_i |u_i><u_i| - ((d+1)/d) I, Frobenius norm (simplex frame diagnostic)
long double simplex_frame_residual(const VectorSet& V);

// Overlap-lowering lift: embed in dimension d+1, append the new basis vector
// e_{d+1} as the last element, and tilt vector v1 into it so the (v1,v2)
// overlap drops from its current value to `target`. Exact when the tilt
// parameter stays inside the tower.
VectorSet pad_overlap_lift(const VectorSet& V, int v1, int v2, const Scalar& target);

VectorSet apply_linear_map(const VectorSet& V, const std::vector<SVec>& M);
VectorSet embed_dim(const VectorSet& V, int d_new);

// ray canonical form: first nonzero entry positive; all-rational vectors are
// scaled to primitive integers, others to unit norm
VectorSet ray_canonicalize(const VectorSet& V);

}  // namespace ksg
