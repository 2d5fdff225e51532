#pragma once

#include <utility>
#include <vector>

namespace cdag::detail {

/// Reusable buffers for the reachability core so tight enumeration loops do
/// not reallocate per graph.
struct DsepScratch {
    std::vector<int> out_start, out_list;  // children, counting-sorted
    std::vector<int> in_start, in_list;    // parents
    std::vector<int> bi_start, bi_list;    // bidirected neighbors
    std::vector<char> anc_z;
    std::vector<char> seen;        // 2*n flags: state = vertex*2 + mark
    std::vector<int> parent_state; // predecessor state, -1 for start states
    std::vector<int> queue;
};

/// d-connection over vertex ids 0..n-1. States are (vertex, arrowhead-side):
/// mark 1 means the walk entered the vertex through an arrowhead, mark 0
/// through a tail. From a tail entry every continuation treats the vertex as
/// a non-collider; from an arrowhead entry, leaving through a tail is a chain
/// and leaving through another arrowhead is a collider, allowed only when the
/// vertex is an ancestor of z.
///
/// When `walk_out` is non-null and a connection exists, it receives a z-active
/// walk from x to y as vertex ids.
bool d_connected_core(int n, const std::vector<std::pair<int, int>>& directed,
                      const std::vector<std::pair<int, int>>& bidirected,
                      const std::vector<char>& in_x, const std::vector<char>& in_y,
                      const std::vector<char>& in_z, DsepScratch& scratch,
                      std::vector<int>* walk_out);

}  // namespace cdag::detail
