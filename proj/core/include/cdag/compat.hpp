#pragma once

#include <cstdint>
#include <vector>

#include "cdag/cluster_dag.hpp"
#include "cdag/micro_graph.hpp"

namespace cdag {

/// True iff m realizes c exactly: the vertex set is the disjoint union of the
/// cluster slots, every inter-cluster edge of c is realized by at least one
/// micro edge and vice versa, self-loops are realized by intra-cluster edges
/// between distinct slots, and m is acyclic. InputError when the vertex set
/// does not match the slot layout of c.
bool is_compatible(const MicroGraph& m, const ClusterDag& c);

/// Relabels indices within every cluster so that they agree with a topological
/// order of m: whenever one slot is an ancestor of a same-cluster slot, it
/// gets the smaller index. Slots that are order-incomparable keep their
/// relative index order, so an already-consistent graph maps to itself.
/// InputError when m is cyclic or its vertex set does not match c.
MicroGraph canonicalize_indices(const MicroGraph& m, const ClusterDag& c);

/// Number of raw edge-subset combinations behind enumerate_compatible,
/// saturating at uint64 max. For each inter-cluster edge the choices are the
/// nonempty subsets of its slot pairs; for self-loops the nonempty subsets of
/// intra-cluster pairs. Acyclicity filtering happens afterwards, so this is
/// an upper bound on the number of compatible graphs.
std::uint64_t compatible_combination_count(const ClusterDag& c);

/// Every compatible micro graph, canonicalized and deduplicated, in a fixed
/// lexicographic order over edge subsets. InputError when c is inadmissible;
/// ResourceError when compatible_combination_count exceeds `bound`.
std::vector<MicroGraph> enumerate_compatible(const ClusterDag& c, std::uint64_t bound);

}  // namespace cdag
