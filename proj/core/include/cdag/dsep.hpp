#pragma once

#include <optional>
#include <vector>

#include "cdag/micro_graph.hpp"

namespace cdag {

/// Classical d-separation on an acyclic mixed graph: true iff no path between
/// x and y is active given z. A collider is active when it or one of its
/// descendants lies in z; a non-collider is active when it is not in z.
/// Bidirected edges carry arrowheads at both endpoints.
///
/// Decided by reachability over (vertex, arrowhead-side) states, so the cost
/// is linear in the number of edges rather than the number of paths.
bool d_separated(const MicroGraph& g, const VertexSet& x, const VertexSet& y, const VertexSet& z);

/// A z-active walk from x to y, or nullopt when x and y are d-separated by z.
std::optional<std::vector<MicroVertex>> find_active_walk(const MicroGraph& g, const VertexSet& x,
                                                         const VertexSet& y, const VertexSet& z);

/// True when the vertex sequence can be realized with edges of g such that
/// every inner vertex is active relative to z. Between two adjacent vertices
/// any edge of g may be used; the check searches over the possible choices.
bool is_active_walk(const MicroGraph& g, const std::vector<MicroVertex>& walk, const VertexSet& z);

/// Collapses a z-active walk into a z-active path with the same endpoints:
/// the next path vertex is the successor of the last occurrence of the
/// current one.
std::vector<MicroVertex> walk_to_active_path(const MicroGraph& g,
                                             const std::vector<MicroVertex>& walk,
                                             const VertexSet& z);

}  // namespace cdag
