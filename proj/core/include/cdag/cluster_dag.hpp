#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cdag/micro_graph.hpp"

namespace cdag {

struct ClusterInfo {
    std::string name;
    int size = 1;
    bool directed_selfloop = false;
    bool bidirected_selfloop = false;

    friend bool operator==(const ClusterInfo&, const ClusterInfo&) = default;
};

/// Cluster-level mixed graph: clusters with declared sizes, directed and
/// bidirected edges between distinct clusters, and self-loops of either kind.
/// The cluster-level graph may contain directed cycles; only the micro graphs
/// realizing it are required to be acyclic. Immutable after construction.
class ClusterDag {
public:
    ClusterDag() = default;
    ClusterDag(std::vector<ClusterInfo> clusters,
               const std::vector<std::pair<std::string, std::string>>& directed,
               const std::vector<std::pair<std::string, std::string>>& bidirected);

    int cluster_count() const { return static_cast<int>(clusters_.size()); }
    const std::vector<ClusterInfo>& clusters() const { return clusters_; }
    const ClusterInfo& cluster(int id) const { return clusters_[static_cast<std::size_t>(id)]; }
    std::optional<int> try_cluster_id(std::string_view name) const;
    int cluster_id(std::string_view name) const;  // InputError on unknown cluster

    /// Inter-cluster edges over cluster ids; bidirected pairs have first < second.
    const std::vector<std::pair<int, int>>& directed() const { return directed_; }
    const std::vector<std::pair<int, int>>& bidirected() const { return bidirected_; }
    bool has_directed(int from, int to) const;
    bool has_bidirected(int a, int b) const;

    /// Every slot of every cluster, sorted.
    VertexSet slots() const;
    /// Every slot of the named clusters. InputError on unknown names.
    VertexSet slots_of(const std::vector<std::string>& names) const;

    friend bool operator==(const ClusterDag&, const ClusterDag&) = default;

private:
    std::vector<ClusterInfo> clusters_;          // declaration order
    std::vector<std::pair<int, int>> directed_;  // sorted, unique, distinct endpoints
    std::vector<std::pair<int, int>> bidirected_;
};

/// Cluster-level d-separation query: sets of clusters x, y, z plus the
/// mutilation sets overline_a (arrowheads removed) and underline_b (tails
/// removed). x and y must be nonempty and x, y, z pairwise disjoint.
struct DsepQuery {
    std::vector<std::string> x;
    std::vector<std::string> y;
    std::vector<std::string> z;
    std::vector<std::string> overline_a;
    std::vector<std::string> underline_b;
};

/// InputError when the query references unknown clusters, x or y is empty, or
/// x, y, z overlap.
void validate_query(const ClusterDag& c, const DsepQuery& q);

/// A human-readable reason why no acyclic micro graph can realize the
/// cluster-level graph, or nullopt when the graph is admissible.
std::optional<std::string> admissibility_violation(const ClusterDag& c);

/// True iff at least one compatible micro graph exists: no directed cycle
/// running through size-1 clusters only (self-loops included) and no
/// bidirected self-loop on a size-1 cluster.
bool is_admissible(const ClusterDag& c);

/// Caps every cluster size at `cap`, keeping all edges. Cap 4 preserves every
/// cluster-level d-connection answer; smaller caps are unsound and rejected
/// with InputError.
ClusterDag reduce_clusters(const ClusterDag& c, int cap = 4);

}  // namespace cdag
