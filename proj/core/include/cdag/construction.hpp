#pragma once

#include <utility>
#include <vector>

#include "cdag/cluster_dag.hpp"
#include "cdag/micro_graph.hpp"

namespace cdag {

/// The minimal compatible graph together with the optional directed edges a
/// query may still commit. g_u is exactly g_min plus the to_choose edges; all
/// bidirected edges already live in g_min. Every compatible micro graph is an
/// edge-subgraph of g_u once its indices are canonicalized.
struct UnfoldedGraph {
    MicroGraph g_min;
    EdgeList to_choose;
    MicroGraph g_u;

    friend bool operator==(const UnfoldedGraph&, const UnfoldedGraph&) = default;
};

/// The canonical compatible realization of c: all bidirected slot pairs for
/// every bidirected edge (for a bidirected self-loop, all intra-cluster pairs),
/// the full i < j completion of every directed self-loop, and one forced edge
/// U1 -> V#V per directed inter-cluster edge. InputError when c is
/// inadmissible.
MicroGraph minimal_compatible_graph(const ClusterDag& c);

/// g_min plus every candidate Ui -> Vj for a directed inter-cluster edge
/// U -> V that is absent from g_min and, added on its own, keeps g_min
/// acyclic. Candidates are tested one at a time; whether a subset of them is
/// jointly usable is the query engine's concern. InputError when c is
/// inadmissible.
UnfoldedGraph unfolded_graph(const ClusterDag& c);

}  // namespace cdag
