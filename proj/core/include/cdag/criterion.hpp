#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cdag/cluster_dag.hpp"
#include "cdag/structure.hpp"

namespace cdag {

/// Evidence that a cluster-level query is d-connected: a structure of
/// interest inside the mutilated unfolded graph, the compatible micro graph
/// g_min ∪ sigma realizing it, and a z-active path inside that graph after
/// mutilation. Cluster sizes above 4 are reduced first, so the witness lives
/// in the reduced layout.
struct Witness {
    StructureOfInterest sigma;
    MicroGraph compatible_graph;
    std::vector<MicroVertex> active_path;
};

/// Testing hook: disabling the joint acyclicity check makes the search
/// unsound on cyclic cluster graphs, which the differential fuzzer must
/// detect.
struct SearchOptions {
    bool enforce_joint_acyclicity = true;
};

/// Decides whether some compatible micro graph d-connects x and y given z
/// after mutilation by overline_a / underline_b, quantified over every
/// compatible realization of c. Returns a Witness when connected, nullopt
/// when the separation holds in every compatible graph. Deterministic for
/// fixed input. InputError on inadmissible c or invalid query.
std::optional<Witness> cluster_d_connected(const ClusterDag& c, const DsepQuery& q);
std::optional<Witness> cluster_d_connected(const ClusterDag& c, const DsepQuery& q,
                                           const SearchOptions& options);

/// Ground truth by exhaustive enumeration: true iff some compatible micro
/// graph of c, mutilated by the query's overline/underline sets, d-connects
/// x and y given z. ResourceError when the combination count exceeds `bound`.
bool oracle_cluster_d_connected(const ClusterDag& c, const DsepQuery& q, std::uint64_t bound);

/// True iff some compatible micro graph contains a directed path from source
/// to target. The answer depends only on the two clusters, not on the chosen
/// indices. InputError on unknown vertices or source == target.
bool exists_directed_micro_path(const ClusterDag& c, const MicroVertex& source,
                                const MicroVertex& target);

/// Applicability of do-calculus rules over c. Rule 1 asks whether y ⊥ z
/// given x ∪ w with arrowheads into x removed; rule 2 additionally removes
/// the tails leaving z. Returns true when the separation holds, i.e. the rule
/// applies. Rules other than 1 and 2 are rejected with InputError.
bool docalc_check(const ClusterDag& c, int rule, const std::vector<std::string>& x,
                  const std::vector<std::string>& y, const std::vector<std::string>& z,
                  const std::vector<std::string>& w);

}  // namespace cdag
