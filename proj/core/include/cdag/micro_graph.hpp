#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cdag {

/// One variable slot: position `index` (1-based) inside cluster `cluster`.
struct MicroVertex {
    std::string cluster;
    int index = 1;

    friend auto operator<=>(const MicroVertex&, const MicroVertex&) = default;
};

std::string to_string(const MicroVertex& v);

using VertexSet = std::vector<MicroVertex>;
using EdgeList = std::vector<std::pair<MicroVertex, MicroVertex>>;

/// Mixed graph over micro vertices: directed plus bidirected edges with set
/// semantics and no self-edges. Directed cycles are representable; operations
/// that need acyclicity check for it themselves. Immutable once constructed,
/// so values can be shared freely across threads.
class MicroGraph {
public:
    MicroGraph() = default;
    MicroGraph(VertexSet vertices, const EdgeList& directed, const EdgeList& bidirected);

    int vertex_count() const { return static_cast<int>(vertices_.size()); }
    const std::vector<MicroVertex>& vertices() const { return vertices_; }
    const MicroVertex& vertex(int id) const { return vertices_[static_cast<std::size_t>(id)]; }
    std::optional<int> try_id(const MicroVertex& v) const;
    int id(const MicroVertex& v) const;  // InputError on unknown vertex
    bool has_vertex(const MicroVertex& v) const { return try_id(v).has_value(); }

    /// Edges over vertex ids (positions in vertices()). Directed pairs are
    /// (from, to); bidirected pairs are stored with first < second.
    const std::vector<std::pair<int, int>>& directed() const { return directed_; }
    const std::vector<std::pair<int, int>>& bidirected() const { return bidirected_; }
    const std::vector<int>& children_of(int id) const { return children_[static_cast<std::size_t>(id)]; }
    const std::vector<int>& parents_of(int id) const { return parents_[static_cast<std::size_t>(id)]; }
    const std::vector<int>& bidirected_neighbors_of(int id) const { return bidir_[static_cast<std::size_t>(id)]; }
    bool has_directed(int from, int to) const;
    bool has_bidirected(int a, int b) const;

    std::size_t edge_count() const { return directed_.size() + bidirected_.size(); }
    EdgeList directed_edges() const;
    EdgeList bidirected_edges() const;

    friend bool operator==(const MicroGraph& a, const MicroGraph& b) {
        return a.vertices_ == b.vertices_ && a.directed_ == b.directed_ &&
               a.bidirected_ == b.bidirected_;
    }

private:
    std::vector<MicroVertex> vertices_;            // sorted, unique
    std::vector<std::pair<int, int>> directed_;    // sorted, unique
    std::vector<std::pair<int, int>> bidirected_;  // first < second, sorted, unique
    std::vector<std::vector<int>> children_;
    std::vector<std::vector<int>> parents_;
    std::vector<std::vector<int>> bidir_;
};

/// True iff the directed edges contain no directed cycle. Bidirected edges
/// are ignored.
bool is_acyclic(const MicroGraph& g);

/// Vertices with no outgoing directed edge. Bidirected edges do not create
/// children.
VertexSet roots(const MicroGraph& g);

/// Removes every edge with an arrowhead into a vertex of `overline` and every
/// directed edge leaving a vertex of `underline`. Vertices are preserved.
MicroGraph mutilate(const MicroGraph& g, const VertexSet& overline, const VertexSet& underline);

/// Union of vertex and edge sets.
MicroGraph graph_union(const MicroGraph& a, const MicroGraph& b);

}  // namespace cdag
