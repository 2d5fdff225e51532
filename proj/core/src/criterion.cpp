#include "cdag/criterion.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

#include "cdag/compat.hpp"
#include "cdag/construction.hpp"
#include "cdag/errors.hpp"
#include "detail/compat_enum.hpp"
#include "detail/dsep_core.hpp"
#include "detail/sigma_search.hpp"

namespace cdag {

namespace {

void check_admissible(const ClusterDag& c) {
    if (auto why = admissibility_violation(c)) throw InputError("inadmissible: " + *why);
}

std::vector<char> mask_of(const MicroGraph& g, const VertexSet& set) {
    std::vector<char> flags(static_cast<std::size_t>(g.vertex_count()), 0);
    for (const MicroVertex& v : set) flags[static_cast<std::size_t>(g.id(v))] = 1;
    return flags;
}

}  // namespace

std::optional<Witness> cluster_d_connected(const ClusterDag& c, const DsepQuery& q) {
    return cluster_d_connected(c, q, SearchOptions{});
}

std::optional<Witness> cluster_d_connected(const ClusterDag& c, const DsepQuery& q,
                                           const SearchOptions& options) {
    check_admissible(c);
    validate_query(c, q);

    const ClusterDag reduced = reduce_clusters(c, 4);
    const UnfoldedGraph unfolded = unfolded_graph(reduced);
    const VertexSet xm = reduced.slots_of(q.x);
    const VertexSet ym = reduced.slots_of(q.y);
    const VertexSet zm = reduced.slots_of(q.z);
    const VertexSet am = reduced.slots_of(q.overline_a);
    const VertexSet bm = reduced.slots_of(q.underline_b);

    // The structure lives in the mutilated unfolded graph, but its acyclicity
    // is checked jointly with the unmutilated g_min.
    const MicroGraph host = mutilate(unfolded.g_u, am, bm);
    detail::ReachMatrix base = options.enforce_joint_acyclicity
                                   ? detail::ReachMatrix::closure_of(unfolded.g_min)
                                   : detail::ReachMatrix(host.vertex_count());
    auto found = detail::find_connecting_structure(host, mask_of(host, xm), mask_of(host, ym),
                                                   mask_of(host, zm), base);
    if (!found) return std::nullopt;

    EdgeList directed, bidirected;
    VertexSet touched;
    for (const auto& [u, v] : found->directed) {
        directed.emplace_back(host.vertex(u), host.vertex(v));
        touched.push_back(host.vertex(u));
        touched.push_back(host.vertex(v));
    }
    for (const auto& [u, v] : found->bidirected) {
        bidirected.emplace_back(host.vertex(u), host.vertex(v));
        touched.push_back(host.vertex(u));
        touched.push_back(host.vertex(v));
    }
    StructureOfInterest sigma(MicroGraph(std::move(touched), directed, bidirected));
    MicroGraph compatible = graph_union(unfolded.g_min, sigma.subgraph());
    if (options.enforce_joint_acyclicity && !is_acyclic(compatible)) {
        throw std::logic_error("search committed a cyclic union");
    }
    std::vector<MicroVertex> active_path = path_from_structure(sigma, xm, ym, zm);
    return Witness{std::move(sigma), std::move(compatible), std::move(active_path)};
}

bool oracle_cluster_d_connected(const ClusterDag& c, const DsepQuery& q, std::uint64_t bound) {
    check_admissible(c);
    validate_query(c, q);

    detail::SlotTable slots = detail::SlotTable::build(c);
    std::vector<detail::EdgeGroup> groups = detail::edge_groups(c, slots);
    std::uint64_t count = detail::combination_count(groups);
    if (count > bound) {
        throw ResourceError("oracle enumeration needs " + std::to_string(count) +
                                " combinations, over the bound " + std::to_string(bound),
                            bound);
    }

    const int n = slots.slot_count;
    auto cluster_mask = [&](const std::vector<std::string>& names) {
        std::vector<char> flags(static_cast<std::size_t>(n), 0);
        for (const std::string& name : names) {
            int cluster = c.cluster_id(name);
            for (int i = 1; i <= c.cluster(cluster).size; ++i) {
                flags[static_cast<std::size_t>(slots.slot_id(cluster, i))] = 1;
            }
        }
        return flags;
    };
    const auto in_x = cluster_mask(q.x);
    const auto in_y = cluster_mask(q.y);
    const auto in_z = cluster_mask(q.z);
    const auto in_a = cluster_mask(q.overline_a);
    const auto in_b = cluster_mask(q.underline_b);

    detail::DsepScratch scratch;
    std::vector<std::pair<int, int>> dir, bid;
    return detail::for_each_acyclic_combination(
        groups, n,
        [&](const std::vector<std::pair<int, int>>& directed,
            const std::vector<std::pair<int, int>>& bidirected) {
            dir.clear();
            for (const auto& [u, v] : directed) {
                if (in_a[static_cast<std::size_t>(v)] || in_b[static_cast<std::size_t>(u)]) continue;
                dir.emplace_back(u, v);
            }
            bid.clear();
            for (const auto& [u, v] : bidirected) {
                if (in_a[static_cast<std::size_t>(u)] || in_a[static_cast<std::size_t>(v)]) continue;
                bid.emplace_back(u, v);
            }
            return detail::d_connected_core(n, dir, bid, in_x, in_y, in_z, scratch, nullptr);
        });
}

bool exists_directed_micro_path(const ClusterDag& c, const MicroVertex& source,
                                const MicroVertex& target) {
    check_admissible(c);
    if (source == target) throw InputError("source and target must differ");
    for (const MicroVertex* v : {&source, &target}) {
        int cluster = c.cluster_id(v->cluster);
        if (v->index < 1 || v->index > c.cluster(cluster).size) {
            throw InputError("unknown vertex " + to_string(*v));
        }
    }

    const UnfoldedGraph unfolded = unfolded_graph(c);
    const detail::ReachMatrix base = detail::ReachMatrix::closure_of(unfolded.g_min);

    // Which indices carry the path is immaterial: relabeling a compatible
    // graph inside a cluster yields another compatible graph, so the answer
    // depends only on the two clusters. Search every slot pair.
    const ClusterInfo& src_info = c.cluster(c.cluster_id(source.cluster));
    const ClusterInfo& dst_info = c.cluster(c.cluster_id(target.cluster));
    for (int i = 1; i <= src_info.size; ++i) {
        for (int j = 1; j <= dst_info.size; ++j) {
            if (src_info.name == dst_info.name && i == j) continue;
            int s = unfolded.g_u.id({src_info.name, i});
            int t = unfolded.g_u.id({dst_info.name, j});
            if (detail::find_directed_path(unfolded.g_u, s, t, base)) return true;
        }
    }
    return false;
}

bool docalc_check(const ClusterDag& c, int rule, const std::vector<std::string>& x,
                  const std::vector<std::string>& y, const std::vector<std::string>& z,
                  const std::vector<std::string>& w) {
    if (rule != 1 && rule != 2) throw InputError("do-calculus rule must be 1 or 2");
    if (y.empty() || z.empty()) throw InputError("y and z must be nonempty");
    const std::vector<const std::vector<std::string>*> sets{&x, &y, &z, &w};
    for (std::size_t i = 0; i < sets.size(); ++i) {
        for (std::size_t j = i + 1; j < sets.size(); ++j) {
            for (const std::string& name : *sets[i]) {
                if (std::find(sets[j]->begin(), sets[j]->end(), name) != sets[j]->end()) {
                    throw InputError("do-calculus sets must be pairwise disjoint");
                }
            }
        }
    }

    // Is y independent of z given x ∪ w once arrowheads into x (and for rule
    // 2 the tails leaving z) are removed?
    DsepQuery query;
    query.x = y;
    query.y = z;
    query.z = x;
    query.z.insert(query.z.end(), w.begin(), w.end());
    query.overline_a = x;
    if (rule == 2) query.underline_b = z;
    return !cluster_d_connected(c, query).has_value();
}

}  // namespace cdag
