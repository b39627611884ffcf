#pragma once

#include <optional>
#include <vector>

#include "mdl/canon.hpp"
#include "mdl/graph.hpp"

namespace mdl {

/// Branch sets certifying that a graph H is a minor of a host G.
///
/// branch_sets[i] is the set of host vertices contracted onto vertex i of H.
/// Valid when the sets are nonempty, pairwise disjoint, each induces a
/// connected subgraph of G, and every edge of H joins two sets that are
/// adjacent in G.
struct MinorWitness {
    std::vector<VertexMask> branch_sets;
};

/// Independent check of every witness condition.
bool is_valid_witness(const SimpleGraph& minor, const SimpleGraph& host, const MinorWitness& witness);

/// A single minor operation. Vertex indices refer to the graph it is applied to.
struct MinorStep {
    enum class Kind { DeleteEdge, DeleteVertex, ContractEdge };
    Kind kind = Kind::DeleteEdge;
    int a = 0;
    int b = 0;

    friend bool operator==(const MinorStep&, const MinorStep&) = default;
};

/// Result of applying a step: the graph plus where each old vertex went
/// (-1 for a deleted vertex).
struct StepResult {
    SimpleGraph graph;
    std::vector<int> vertex_map;
};

/// Applies a step, throwing InvalidArgument for a missing edge or vertex or
/// for deleting the last vertex. A contraction keeps the smaller endpoint's
/// slot and renumbers the vertices above the larger one downward.
StepResult apply_step(const SimpleGraph& g, const MinorStep& step);

/// Merges the endpoints of e, collapsing parallel edges and dropping the loop.
SimpleGraph contract_edge(const SimpleGraph& g, Edge e);
SimpleGraph delete_edge(const SimpleGraph& g, Edge e);
SimpleGraph delete_vertex(const SimpleGraph& g, int v);

/// Every single deletion or contraction available on g, in a fixed order.
std::vector<MinorStep> all_steps(const SimpleGraph& g);

/// Canonical forms of all one-step minors, deduplicated and sorted by certificate.
std::vector<CanonicalForm> one_step_minors(const SimpleGraph& g);

/// Searches connected branch sets of G for a copy of H. Returns a validated
/// witness or nothing.
std::optional<MinorWitness> is_minor(const SimpleGraph& h, const SimpleGraph& g);

/// Composes branch sets through a step: the new set of each surviving vertex
/// is the union of the sets mapped onto it.
std::vector<VertexMask> push_branch_sets(const std::vector<VertexMask>& sets, const StepResult& step);

}  // namespace mdl
