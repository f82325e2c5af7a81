#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ksg/graph.hpp"

namespace ksg {

// {0,1}-coloring: at most one 1 per edge and per exclusive pair, exactly one 1
// per maximum clique (cliques over real edges only).
struct Coloring {
    std::vector<uint8_t> values;

    bool operator==(const Coloring& o) const { return values == o.values; }
    bool operator<(const Coloring& o) const { return values < o.values; }
    std::string bits() const;
};

struct SearchStats {
    long long nodes = 0;
    int max_depth = 0;
};

enum class SolveStatus { Colorable, Uncolorable, BudgetExceeded };

struct SolveOptions {
    long long node_budget = 100000000;        // overridable via CLI --budget
    std::vector<std::pair<int, int>> pins;    // forced (vertex, value) pairs
    bool parallel = false;                    // frontier-split search
};

struct SolveResult {
    SolveStatus status = SolveStatus::Uncolorable;
    Coloring coloring;  // populated when Colorable
    SearchStats stats;
};

// Branch-and-propagate decision procedure. Deterministic: fixed branch order
// (most-constrained maximum clique, lowest vertex, value 1 before 0) and a
// deterministic frontier split when parallel.
SolveResult solve(const Graph& g, const SolveOptions& opt = {});

// Streaming exhaustive enumeration; visitor returns false to abort early.
// Returns false if the node budget was exhausted.
bool for_each_coloring(const Graph& g, const std::function<bool(const Coloring&)>& visit,
                       const SolveOptions& opt = {}, SearchStats* stats = nullptr);

struct EnumerateResult {
    std::vector<Coloring> colorings;  // lexicographic on the bit vector
    bool truncated = false;
    bool budget_exceeded = false;
    SearchStats stats;
};

EnumerateResult enumerate_colorings(const Graph& g, long long cap, const SolveOptions& opt = {});

// Direct implementation of the coloring rules from the clique report;
// independent of the search path, used to validate every returned witness.
bool validate_coloring(const Graph& g, const Coloring& c);

struct GadgetCheck {
    enum class Verdict { Gadget, AdjacentPair, Uncolorable, Counterexample, BudgetExceeded };
    Verdict verdict = Verdict::BudgetExceeded;
    std::pair<int, int> pair{-1, -1};
    std::optional<Coloring> witness;         // some valid coloring (gadget case)
    std::optional<Coloring> counterexample;  // coloring with both distinguished at 1
    SearchStats exclusion_stats;
    std::string digest;  // binds graph hash + exhaustive-search stats

    bool is_gadget() const { return verdict == Verdict::Gadget; }
};

// v1 ~ v2 must fail, g must be colorable, and no coloring may set both to 1
GadgetCheck is_gadget(const Graph& g, int v1, int v2, const SolveOptions& opt = {});

// all non-adjacent pairs excluded in every coloring, canonical order;
// throws std::invalid_argument if g is uncolorable
std::vector<std::pair<int, int>> find_gadget_pairs(const Graph& g, const SolveOptions& opt = {});

enum class ForcedValue { Zero, One, Unforced };
ForcedValue forced_value(const Graph& g, int v, const SolveOptions& opt = {});

// Shrink an uncolorable graph to a vertex-critical (edge-critical) core while
// preserving the clique number. Throws std::invalid_argument on colorable
// input.
Graph make_vertex_critical(const Graph& g, const SolveOptions& opt = {});
Graph make_edge_critical(const Graph& g, const SolveOptions& opt = {});

struct GadgetExtraction {
    Graph graph;
    std::pair<int, int> pair;
    std::string case_tag;  // "i", "ii" or "iii"
};

// Gadget extraction from a KS graph via critical cores. Case iii returns the
// edge-deleted graph without attempting a faithful-version merge.
GadgetExtraction extract_gadget(const Graph& g_ks, const SolveOptions& opt = {});

}  // namespace ksg
