#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "cdag/micro_graph.hpp"

namespace cdag::detail {

/// Transitive-closure bit matrix over vertex ids: row v holds the vertices
/// reachable from v through directed edges (v itself excluded). Supports
/// incremental edge insertion with whole-matrix snapshots, which is all the
/// backtracking search needs.
class ReachMatrix {
public:
    explicit ReachMatrix(int n);
    /// Closure of the directed part of g; g must be acyclic.
    static ReachMatrix closure_of(const MicroGraph& g);

    int vertex_count() const { return n_; }
    bool reaches(int from, int to) const;
    /// Caller must have checked !reaches(to, from); behavior on cycles is
    /// undefined.
    void add_edge(int from, int to);

    std::vector<std::uint64_t> snapshot() const { return rows_; }
    void restore(std::vector<std::uint64_t> snapshot) { rows_ = std::move(snapshot); }

private:
    int n_ = 0;
    int words_ = 0;
    std::vector<std::uint64_t> rows_;
};

struct SigmaResult {
    std::vector<std::pair<int, int>> directed;    // sigma edges over host ids
    std::vector<std::pair<int, int>> bidirected;  // first < second
    std::vector<int> path;                        // x .. y vertex ids
};

/// Exhaustive depth-first search for a structure of interest inside `host`
/// that connects x and y under z while base ∪ sigma stays acyclic
/// (base_closure is the closure of the base graph over the same ids; pass an
/// empty-graph closure to constrain sigma alone).
///
/// The search grows a simple path from x towards y and, each time a collider
/// is committed, attaches a directed escape chain that ends in z, in x ∪ y,
/// or in an already-committed chain. Every edge insertion maintains the
/// degree rule, keeps z-vertices childless, and preserves acyclicity against
/// the base closure, so a completed search state is a valid connecting
/// structure by construction. Candidate edges are explored in a fixed
/// lexicographic order; the first witness found is deterministic.
std::optional<SigmaResult> find_connecting_structure(const MicroGraph& host,
                                                     const std::vector<char>& in_x,
                                                     const std::vector<char>& in_y,
                                                     const std::vector<char>& in_z,
                                                     const ReachMatrix& base_closure);

/// Simple directed path from `source` to `target` inside `host` such that
/// base ∪ path is acyclic; nullopt when none exists.
std::optional<std::vector<int>> find_directed_path(const MicroGraph& host, int source, int target,
                                                   const ReachMatrix& base_closure);

}  // namespace cdag::detail
