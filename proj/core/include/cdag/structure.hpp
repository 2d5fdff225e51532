#pragma once

#include <map>
#include <vector>

#include "cdag/micro_graph.hpp"

namespace cdag {

/// A connected mixed subgraph in which every vertex either has at most one
/// outgoing arrow, or has two outgoing arrows and no arrowhead pointing into
/// it. Such a structure generalizes a path together with the directed escape
/// routes of its colliders. Roots are the vertices without children.
class StructureOfInterest {
public:
    /// InputError if the graph does not satisfy the degree and connectivity
    /// requirements. Roots are computed from the subgraph.
    explicit StructureOfInterest(MicroGraph subgraph);

    const MicroGraph& subgraph() const { return subgraph_; }
    const VertexSet& roots() const { return roots_; }

    friend bool operator==(const StructureOfInterest&, const StructureOfInterest&) = default;

private:
    MicroGraph subgraph_;
    VertexSet roots_;
};

bool is_structure_of_interest(const MicroGraph& g);

/// The four connection clauses: sigma is a subgraph of host, it touches both
/// x and y, all of its roots lie in x ∪ y ∪ z, and none of its other vertices
/// lies in z.
bool connects_under(const StructureOfInterest& sigma, const MicroGraph& host, const VertexSet& x,
                    const VertexSet& y, const VertexSet& z);

/// Builds a structure connecting x and y under z out of a z-active path and,
/// for every collider not itself in z, a directed escape path that meets z
/// exactly at its terminal vertex. The union is pruned until every vertex
/// satisfies the degree rule, keeping the component that contains both path
/// endpoints; colliders whose escape was pruned away are re-routed inside the
/// union.
StructureOfInterest structure_from_path(
    const MicroGraph& g, const std::vector<MicroVertex>& path,
    const std::map<MicroVertex, std::vector<MicroVertex>>& collider_escapes, const VertexSet& x,
    const VertexSet& y, const VertexSet& z);

/// Extracts a z-active path from x to y inside sigma. Colliders whose
/// descendants inside sigma reach x ∪ y instead of z are spliced out by
/// rerouting along their directed chain.
std::vector<MicroVertex> path_from_structure(const StructureOfInterest& sigma, const VertexSet& x,
                                             const VertexSet& y, const VertexSet& z);

}  // namespace cdag
