#pragma once

#include <string>
#include <string_view>

#include "cdag/cluster_dag.hpp"
#include "cdag/construction.hpp"
#include "cdag/criterion.hpp"
#include "cdag/micro_graph.hpp"

namespace cdag {

/// JSON schema, versioned with "format_version". Every document carries a
/// "kind" tag; micro graphs list vertices as ["cluster", index] pairs plus
/// directed_edges / bidirected_edges, unfolded graphs additionally carry
/// to_choose, cluster graphs list clusters with sizes and self-loop flags.
std::string to_json(const ClusterDag& c);
std::string to_json(const MicroGraph& g);
std::string to_json(const UnfoldedGraph& u);
std::string to_json(const Witness& w);

ClusterDag cluster_dag_from_json(std::string_view text);
MicroGraph micro_graph_from_json(std::string_view text);
UnfoldedGraph unfolded_graph_from_json(std::string_view text);
Witness witness_from_json(std::string_view text);

/// Graphviz output. Micro-level exports box the slots of each cluster into a
/// subgraph; optional to_choose edges are drawn in red, mirroring the
/// mandatory/optional split of the unfolded graph. Bidirected edges are
/// dashed with arrowheads on both ends.
std::string to_dot(const ClusterDag& c);
std::string to_dot(const MicroGraph& g);
std::string to_dot(const UnfoldedGraph& u);

}  // namespace cdag
