#include "cdag/cluster_dag.hpp"

#include <algorithm>
#include <set>

#include "cdag/errors.hpp"

namespace cdag {

ClusterDag::ClusterDag(std::vector<ClusterInfo> clusters,
                       const std::vector<std::pair<std::string, std::string>>& directed,
                       const std::vector<std::pair<std::string, std::string>>& bidirected)
    : clusters_(std::move(clusters)) {
    std::set<std::string> names;
    for (const ClusterInfo& info : clusters_) {
        if (info.name.empty()) throw InputError("cluster name must be nonempty");
        if (info.size < 1) throw InputError("cluster " + info.name + " must have positive size");
        if (!names.insert(info.name).second) {
            throw InputError("duplicate cluster " + info.name);
        }
    }
    for (const auto& [from, to] : directed) {
        int u = cluster_id(from);
        int v = cluster_id(to);
        if (u == v) throw InputError("self-loops are declared on the cluster, not as edges");
        directed_.emplace_back(u, v);
    }
    for (const auto& [a, b] : bidirected) {
        int u = cluster_id(a);
        int v = cluster_id(b);
        if (u == v) throw InputError("self-loops are declared on the cluster, not as edges");
        bidirected_.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(directed_.begin(), directed_.end());
    std::sort(bidirected_.begin(), bidirected_.end());
    if (std::adjacent_find(directed_.begin(), directed_.end()) != directed_.end() ||
        std::adjacent_find(bidirected_.begin(), bidirected_.end()) != bidirected_.end()) {
        throw InputError("duplicate edge");
    }
}

std::optional<int> ClusterDag::try_cluster_id(std::string_view name) const {
    for (std::size_t i = 0; i < clusters_.size(); ++i) {
        if (clusters_[i].name == name) return static_cast<int>(i);
    }
    return std::nullopt;
}

int ClusterDag::cluster_id(std::string_view name) const {
    if (auto id = try_cluster_id(name)) return *id;
    throw InputError("unknown cluster " + std::string(name));
}

bool ClusterDag::has_directed(int from, int to) const {
    return std::binary_search(directed_.begin(), directed_.end(), std::make_pair(from, to));
}

bool ClusterDag::has_bidirected(int a, int b) const {
    if (a > b) std::swap(a, b);
    return std::binary_search(bidirected_.begin(), bidirected_.end(), std::make_pair(a, b));
}

VertexSet ClusterDag::slots() const {
    VertexSet out;
    for (const ClusterInfo& info : clusters_) {
        for (int i = 1; i <= info.size; ++i) out.push_back({info.name, i});
    }
    std::sort(out.begin(), out.end());
    return out;
}

VertexSet ClusterDag::slots_of(const std::vector<std::string>& names) const {
    VertexSet out;
    for (const std::string& name : names) {
        const ClusterInfo& info = cluster(cluster_id(name));
        for (int i = 1; i <= info.size; ++i) out.push_back({info.name, i});
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

void validate_query(const ClusterDag& c, const DsepQuery& q) {
    if (q.x.empty() || q.y.empty()) throw InputError("x and y must be nonempty");
    for (const auto* set : {&q.x, &q.y, &q.z, &q.overline_a, &q.underline_b}) {
        for (const std::string& name : *set) (void)c.cluster_id(name);
    }
    auto overlap = [](const std::vector<std::string>& a, const std::vector<std::string>& b) {
        for (const std::string& name : a) {
            if (std::find(b.begin(), b.end(), name) != b.end()) return true;
        }
        return false;
    };
    if (overlap(q.x, q.y) || overlap(q.x, q.z) || overlap(q.y, q.z)) {
        throw InputError("x, y and z must be pairwise disjoint");
    }
}

std::optional<std::string> admissibility_violation(const ClusterDag& c) {
    for (const ClusterInfo& info : c.clusters()) {
        if (info.size == 1 && info.bidirected_selfloop) {
            return "bidirected self-loop on size-1 cluster " + info.name;
        }
        if (info.size == 1 && info.directed_selfloop) {
            return "size-1 cycle " + info.name + " -> " + info.name;
        }
    }

    // Directed cycle through size-1 clusters only.
    const int n = c.cluster_count();
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (const auto& [u, v] : c.directed()) {
        if (c.cluster(u).size == 1 && c.cluster(v).size == 1) {
            adj[static_cast<std::size_t>(u)].push_back(v);
        }
    }
    std::vector<int> state(static_cast<std::size_t>(n), 0);  // 0 new, 1 active, 2 done
    std::vector<int> trail;
    std::vector<int> cycle;
    auto dfs = [&](auto&& self, int v) -> bool {
        state[static_cast<std::size_t>(v)] = 1;
        trail.push_back(v);
        for (int w : adj[static_cast<std::size_t>(v)]) {
            if (state[static_cast<std::size_t>(w)] == 1) {
                auto it = std::find(trail.begin(), trail.end(), w);
                cycle.assign(it, trail.end());
                cycle.push_back(w);
                return true;
            }
            if (state[static_cast<std::size_t>(w)] == 0 && self(self, w)) return true;
        }
        trail.pop_back();
        state[static_cast<std::size_t>(v)] = 2;
        return false;
    };
    for (int v = 0; v < n; ++v) {
        if (state[static_cast<std::size_t>(v)] == 0 && dfs(dfs, v)) {
            std::string message = "size-1 cycle";
            for (std::size_t i = 0; i < cycle.size(); ++i) {
                message += (i == 0 ? " " : " -> ") + c.cluster(cycle[i]).name;
            }
            return message;
        }
    }
    return std::nullopt;
}

bool is_admissible(const ClusterDag& c) { return !admissibility_violation(c).has_value(); }

ClusterDag reduce_clusters(const ClusterDag& c, int cap) {
    if (cap < 4) throw InputError("cluster size cap below 4 is unsound");
    std::vector<ClusterInfo> clusters = c.clusters();
    for (ClusterInfo& info : clusters) info.size = std::min(info.size, cap);
    std::vector<std::pair<std::string, std::string>> directed, bidirected;
    for (const auto& [u, v] : c.directed()) {
        directed.emplace_back(c.cluster(u).name, c.cluster(v).name);
    }
    for (const auto& [u, v] : c.bidirected()) {
        bidirected.emplace_back(c.cluster(u).name, c.cluster(v).name);
    }
    return ClusterDag(std::move(clusters), directed, bidirected);
}

}  // namespace cdag
