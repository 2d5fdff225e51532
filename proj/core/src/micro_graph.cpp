#include "cdag/micro_graph.hpp"

#include <algorithm>

#include "cdag/errors.hpp"

namespace cdag {

std::string to_string(const MicroVertex& v) {
    return v.cluster + "_" + std::to_string(v.index);
}

namespace {

void sort_unique(std::vector<std::pair<int, int>>& edges) {
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
}

}  // namespace

MicroGraph::MicroGraph(VertexSet vertices, const EdgeList& directed, const EdgeList& bidirected)
    : vertices_(std::move(vertices)) {
    std::sort(vertices_.begin(), vertices_.end());
    vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
    for (const MicroVertex& v : vertices_) {
        if (v.index < 1) throw InputError("micro vertex index must be >= 1: " + to_string(v));
    }

    directed_.reserve(directed.size());
    for (const auto& [from, to] : directed) {
        int u = id(from);
        int v = id(to);
        if (u == v) throw InputError("self-edge on " + to_string(from));
        directed_.emplace_back(u, v);
    }
    bidirected_.reserve(bidirected.size());
    for (const auto& [a, b] : bidirected) {
        int u = id(a);
        int v = id(b);
        if (u == v) throw InputError("self-edge on " + to_string(a));
        bidirected_.emplace_back(std::min(u, v), std::max(u, v));
    }
    sort_unique(directed_);
    sort_unique(bidirected_);

    children_.resize(vertices_.size());
    parents_.resize(vertices_.size());
    bidir_.resize(vertices_.size());
    for (const auto& [u, v] : directed_) {
        children_[static_cast<std::size_t>(u)].push_back(v);
        parents_[static_cast<std::size_t>(v)].push_back(u);
    }
    for (const auto& [u, v] : bidirected_) {
        bidir_[static_cast<std::size_t>(u)].push_back(v);
        bidir_[static_cast<std::size_t>(v)].push_back(u);
    }
    for (auto& adj : parents_) std::sort(adj.begin(), adj.end());
    for (auto& adj : bidir_) std::sort(adj.begin(), adj.end());
}

std::optional<int> MicroGraph::try_id(const MicroVertex& v) const {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
    if (it == vertices_.end() || *it != v) return std::nullopt;
    return static_cast<int>(it - vertices_.begin());
}

int MicroGraph::id(const MicroVertex& v) const {
    if (auto found = try_id(v)) return *found;
    throw InputError("unknown vertex " + to_string(v));
}

bool MicroGraph::has_directed(int from, int to) const {
    return std::binary_search(directed_.begin(), directed_.end(), std::make_pair(from, to));
}

bool MicroGraph::has_bidirected(int a, int b) const {
    if (a > b) std::swap(a, b);
    return std::binary_search(bidirected_.begin(), bidirected_.end(), std::make_pair(a, b));
}

EdgeList MicroGraph::directed_edges() const {
    EdgeList out;
    out.reserve(directed_.size());
    for (const auto& [u, v] : directed_) out.emplace_back(vertex(u), vertex(v));
    return out;
}

EdgeList MicroGraph::bidirected_edges() const {
    EdgeList out;
    out.reserve(bidirected_.size());
    for (const auto& [u, v] : bidirected_) out.emplace_back(vertex(u), vertex(v));
    return out;
}

bool is_acyclic(const MicroGraph& g) {
    const int n = g.vertex_count();
    std::vector<int> indegree(static_cast<std::size_t>(n), 0);
    for (const auto& [u, v] : g.directed()) {
        (void)u;
        ++indegree[static_cast<std::size_t>(v)];
    }
    std::vector<int> stack;
    stack.reserve(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        if (indegree[static_cast<std::size_t>(v)] == 0) stack.push_back(v);
    }
    int seen = 0;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        ++seen;
        for (int w : g.children_of(v)) {
            if (--indegree[static_cast<std::size_t>(w)] == 0) stack.push_back(w);
        }
    }
    return seen == n;
}

VertexSet roots(const MicroGraph& g) {
    VertexSet out;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (g.children_of(v).empty()) out.push_back(g.vertex(v));
    }
    return out;
}

MicroGraph mutilate(const MicroGraph& g, const VertexSet& overline, const VertexSet& underline) {
    std::vector<char> in_over(static_cast<std::size_t>(g.vertex_count()), 0);
    std::vector<char> in_under(static_cast<std::size_t>(g.vertex_count()), 0);
    for (const MicroVertex& v : overline) in_over[static_cast<std::size_t>(g.id(v))] = 1;
    for (const MicroVertex& v : underline) in_under[static_cast<std::size_t>(g.id(v))] = 1;

    EdgeList directed;
    for (const auto& [u, v] : g.directed()) {
        if (in_over[static_cast<std::size_t>(v)] || in_under[static_cast<std::size_t>(u)]) continue;
        directed.emplace_back(g.vertex(u), g.vertex(v));
    }
    EdgeList bidirected;
    for (const auto& [u, v] : g.bidirected()) {
        if (in_over[static_cast<std::size_t>(u)] || in_over[static_cast<std::size_t>(v)]) continue;
        bidirected.emplace_back(g.vertex(u), g.vertex(v));
    }
    return MicroGraph(g.vertices(), directed, bidirected);
}

MicroGraph graph_union(const MicroGraph& a, const MicroGraph& b) {
    VertexSet vertices = a.vertices();
    vertices.insert(vertices.end(), b.vertices().begin(), b.vertices().end());
    EdgeList directed = a.directed_edges();
    {
        EdgeList other = b.directed_edges();
        directed.insert(directed.end(), other.begin(), other.end());
    }
    EdgeList bidirected = a.bidirected_edges();
    {
        EdgeList other = b.bidirected_edges();
        bidirected.insert(bidirected.end(), other.begin(), other.end());
    }
    return MicroGraph(std::move(vertices), directed, bidirected);
}

}  // namespace cdag
