#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "cdag/cluster_dag.hpp"

namespace cdag::detail {

/// Maps (cluster, index) slots onto the vertex ids of graphs built over
/// ClusterDag::slots(), which are sorted by cluster name then index.
struct SlotTable {
    std::vector<int> first_slot;  // per cluster id: vertex id of its index-1 slot
    std::vector<int> cluster_of;  // per vertex id
    std::vector<int> index_of;    // per vertex id, 1-based
    int slot_count = 0;

    int slot_id(int cluster, int index) const {
        return first_slot[static_cast<std::size_t>(cluster)] + index - 1;
    }

    static SlotTable build(const ClusterDag& c);
};

/// One cluster-level edge and its micro realizations. A compatible graph
/// picks a nonempty subset of every group's candidates.
struct EdgeGroup {
    std::vector<std::pair<int, int>> candidates;  // slot id pairs, lexicographic
    bool bidirected = false;
};

/// Groups in a fixed order: directed inter-cluster edges, bidirected
/// inter-cluster edges, directed self-loops, bidirected self-loops.
std::vector<EdgeGroup> edge_groups(const ClusterDag& c, const SlotTable& slots);

/// Product of (2^candidates - 1) over the groups, saturating at uint64 max.
std::uint64_t combination_count(const std::vector<EdgeGroup>& groups);

/// Streams every acyclic subset combination in lexicographic odometer order
/// as id-edge lists. Stops early when `visit` returns true; the return value
/// says whether any visit did.
bool for_each_acyclic_combination(
    const std::vector<EdgeGroup>& groups, int slot_count,
    const std::function<bool(const std::vector<std::pair<int, int>>& directed,
                             const std::vector<std::pair<int, int>>& bidirected)>& visit);

}  // namespace cdag::detail
