#include "cdag/compat.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "cdag/errors.hpp"
#include "detail/compat_enum.hpp"
#include "detail/sigma_search.hpp"

namespace cdag {

namespace {

void check_layout(const MicroGraph& m, const ClusterDag& c) {
    if (m.vertices() != c.slots()) {
        throw InputError("vertex set does not match the cluster layout");
    }
}

}  // namespace

bool is_compatible(const MicroGraph& m, const ClusterDag& c) {
    check_layout(m, c);
    if (!is_acyclic(m)) return false;

    detail::SlotTable slots = detail::SlotTable::build(c);
    std::set<std::pair<int, int>> realized_directed, realized_bidirected;
    std::set<int> realized_dloop, realized_bloop;
    for (const auto& [u, v] : m.directed()) {
        int cu = slots.cluster_of[static_cast<std::size_t>(u)];
        int cv = slots.cluster_of[static_cast<std::size_t>(v)];
        if (cu == cv) {
            realized_dloop.insert(cu);
        } else {
            realized_directed.emplace(cu, cv);
        }
    }
    for (const auto& [u, v] : m.bidirected()) {
        int cu = slots.cluster_of[static_cast<std::size_t>(u)];
        int cv = slots.cluster_of[static_cast<std::size_t>(v)];
        if (cu == cv) {
            realized_bloop.insert(cu);
        } else {
            realized_bidirected.emplace(std::min(cu, cv), std::max(cu, cv));
        }
    }

    std::set<std::pair<int, int>> declared_directed(c.directed().begin(), c.directed().end());
    std::set<std::pair<int, int>> declared_bidirected(c.bidirected().begin(), c.bidirected().end());
    if (realized_directed != declared_directed) return false;
    if (realized_bidirected != declared_bidirected) return false;
    for (int u = 0; u < c.cluster_count(); ++u) {
        if (c.cluster(u).directed_selfloop != (realized_dloop.count(u) > 0)) return false;
        if (c.cluster(u).bidirected_selfloop != (realized_bloop.count(u) > 0)) return false;
    }
    return true;
}

MicroGraph canonicalize_indices(const MicroGraph& m, const ClusterDag& c) {
    check_layout(m, c);
    if (!is_acyclic(m)) throw InputError("cannot canonicalize a cyclic graph");

    detail::SlotTable slots = detail::SlotTable::build(c);
    detail::ReachMatrix closure = detail::ReachMatrix::closure_of(m);

    // Stable per-cluster topological relabeling: take the smallest original
    // index whose same-cluster ancestors have all been placed.
    std::vector<int> new_index(static_cast<std::size_t>(slots.slot_count), 0);
    for (int cluster = 0; cluster < c.cluster_count(); ++cluster) {
        const int size = c.cluster(cluster).size;
        std::vector<char> placed(static_cast<std::size_t>(size) + 1, 0);
        for (int position = 1; position <= size; ++position) {
            int pick = -1;
            for (int i = 1; i <= size && pick < 0; ++i) {
                if (placed[static_cast<std::size_t>(i)]) continue;
                bool ready = true;
                for (int j = 1; j <= size && ready; ++j) {
                    if (j == i || placed[static_cast<std::size_t>(j)]) continue;
                    if (closure.reaches(slots.slot_id(cluster, j), slots.slot_id(cluster, i))) {
                        ready = false;
                    }
                }
                if (ready) pick = i;
            }
            new_index[static_cast<std::size_t>(slots.slot_id(cluster, pick))] = position;
        }
    }

    auto relabel = [&](int id) {
        return MicroVertex{c.cluster(slots.cluster_of[static_cast<std::size_t>(id)]).name,
                           new_index[static_cast<std::size_t>(id)]};
    };
    EdgeList directed, bidirected;
    for (const auto& [u, v] : m.directed()) directed.emplace_back(relabel(u), relabel(v));
    for (const auto& [u, v] : m.bidirected()) bidirected.emplace_back(relabel(u), relabel(v));
    return MicroGraph(m.vertices(), directed, bidirected);
}

std::uint64_t compatible_combination_count(const ClusterDag& c) {
    detail::SlotTable slots = detail::SlotTable::build(c);
    return detail::combination_count(detail::edge_groups(c, slots));
}

std::vector<MicroGraph> enumerate_compatible(const ClusterDag& c, std::uint64_t bound) {
    if (auto why = admissibility_violation(c)) throw InputError("inadmissible: " + *why);
    detail::SlotTable slots = detail::SlotTable::build(c);
    std::vector<detail::EdgeGroup> groups = detail::edge_groups(c, slots);
    std::uint64_t count = detail::combination_count(groups);
    if (count > bound) {
        throw ResourceError("enumeration needs " + std::to_string(count) +
                                " combinations, over the bound " + std::to_string(bound),
                            bound);
    }

    const VertexSet vertices = c.slots();
    std::set<std::pair<std::vector<std::pair<int, int>>, std::vector<std::pair<int, int>>>> seen;
    std::vector<MicroGraph> out;
    detail::for_each_acyclic_combination(
        groups, slots.slot_count,
        [&](const std::vector<std::pair<int, int>>& directed,
            const std::vector<std::pair<int, int>>& bidirected) {
            EdgeList dir, bid;
            dir.reserve(directed.size());
            for (const auto& [u, v] : directed) {
                dir.emplace_back(vertices[static_cast<std::size_t>(u)],
                                 vertices[static_cast<std::size_t>(v)]);
            }
            bid.reserve(bidirected.size());
            for (const auto& [u, v] : bidirected) {
                bid.emplace_back(vertices[static_cast<std::size_t>(u)],
                                 vertices[static_cast<std::size_t>(v)]);
            }
            MicroGraph canon = canonicalize_indices(MicroGraph(vertices, dir, bid), c);
            if (seen.emplace(canon.directed(), canon.bidirected()).second) {
                out.push_back(std::move(canon));
            }
            return false;
        });
    return out;
}

}  // namespace cdag
