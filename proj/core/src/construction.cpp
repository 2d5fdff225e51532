#include "cdag/construction.hpp"

#include <algorithm>

#include "cdag/errors.hpp"
#include "detail/sigma_search.hpp"

namespace cdag {

MicroGraph minimal_compatible_graph(const ClusterDag& c) {
    if (auto why = admissibility_violation(c)) throw InputError("inadmissible: " + *why);

    EdgeList directed, bidirected;
    // Bidirected edges are realized in full: every slot pair across the two
    // clusters, respectively every intra-cluster pair for a self-loop.
    for (const auto& [u, v] : c.bidirected()) {
        for (int i = 1; i <= c.cluster(u).size; ++i) {
            for (int j = 1; j <= c.cluster(v).size; ++j) {
                bidirected.emplace_back(MicroVertex{c.cluster(u).name, i},
                                        MicroVertex{c.cluster(v).name, j});
            }
        }
    }
    for (const ClusterInfo& info : c.clusters()) {
        if (info.bidirected_selfloop) {
            for (int i = 1; i <= info.size; ++i) {
                for (int j = i + 1; j <= info.size; ++j) {
                    bidirected.emplace_back(MicroVertex{info.name, i}, MicroVertex{info.name, j});
                }
            }
        }
        if (info.directed_selfloop) {
            for (int i = 1; i <= info.size; ++i) {
                for (int j = i + 1; j <= info.size; ++j) {
                    directed.emplace_back(MicroVertex{info.name, i}, MicroVertex{info.name, j});
                }
            }
        }
    }
    // One forced realization per directed inter-cluster edge: first slot of
    // the source into the last slot of the target.
    for (const auto& [u, v] : c.directed()) {
        directed.emplace_back(MicroVertex{c.cluster(u).name, 1},
                              MicroVertex{c.cluster(v).name, c.cluster(v).size});
    }
    return MicroGraph(c.slots(), directed, bidirected);
}

UnfoldedGraph unfolded_graph(const ClusterDag& c) {
    MicroGraph g_min = minimal_compatible_graph(c);
    detail::ReachMatrix closure = detail::ReachMatrix::closure_of(g_min);

    // A candidate joins when it is not already forced and, added on its own,
    // leaves g_min acyclic.
    EdgeList to_choose;
    for (const auto& [cu, cv] : c.directed()) {
        for (int i = 1; i <= c.cluster(cu).size; ++i) {
            for (int j = 1; j <= c.cluster(cv).size; ++j) {
                MicroVertex a{c.cluster(cu).name, i};
                MicroVertex b{c.cluster(cv).name, j};
                int u = g_min.id(a);
                int v = g_min.id(b);
                if (g_min.has_directed(u, v)) continue;
                if (closure.reaches(v, u)) continue;
                to_choose.emplace_back(std::move(a), std::move(b));
            }
        }
    }
    std::sort(to_choose.begin(), to_choose.end());

    EdgeList directed = g_min.directed_edges();
    directed.insert(directed.end(), to_choose.begin(), to_choose.end());
    MicroGraph g_u(g_min.vertices(), directed, g_min.bidirected_edges());
    return UnfoldedGraph{std::move(g_min), std::move(to_choose), std::move(g_u)};
}

}  // namespace cdag
