#include "cdag/structure.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <set>
#include <stdexcept>

#include "cdag/errors.hpp"
#include "detail/sigma_search.hpp"

namespace cdag {

namespace {

struct Degrees {
    std::vector<int> out;  // outgoing directed arrows
    std::vector<int> in;   // arrowheads: directed in plus bidirected
};

Degrees degrees_of(const MicroGraph& g) {
    Degrees d;
    d.out.assign(static_cast<std::size_t>(g.vertex_count()), 0);
    d.in.assign(static_cast<std::size_t>(g.vertex_count()), 0);
    for (const auto& [u, v] : g.directed()) {
        ++d.out[static_cast<std::size_t>(u)];
        ++d.in[static_cast<std::size_t>(v)];
    }
    for (const auto& [u, v] : g.bidirected()) {
        ++d.in[static_cast<std::size_t>(u)];
        ++d.in[static_cast<std::size_t>(v)];
    }
    return d;
}

bool degree_rule_holds(int out, int in) { return out <= 1 || (out == 2 && in == 0); }

bool single_component(const MicroGraph& g) {
    const int n = g.vertex_count();
    if (n == 0) return false;
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        auto visit = [&](int w) {
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                ++count;
                stack.push_back(w);
            }
        };
        for (int w : g.children_of(v)) visit(w);
        for (int w : g.parents_of(v)) visit(w);
        for (int w : g.bidirected_neighbors_of(v)) visit(w);
    }
    return count == n;
}

std::vector<char> membership(const MicroGraph& g, const VertexSet& set) {
    std::vector<char> flags(static_cast<std::size_t>(g.vertex_count()), 0);
    for (const MicroVertex& v : set) {
        if (auto id = g.try_id(v)) flags[static_cast<std::size_t>(*id)] = 1;
    }
    return flags;
}

bool contains(const VertexSet& set, const MicroVertex& v) {
    return std::find(set.begin(), set.end(), v) != set.end();
}

void check_disjoint(const VertexSet& x, const VertexSet& y, const VertexSet& z) {
    for (const MicroVertex& v : x) {
        if (contains(y, v) || contains(z, v)) {
            throw InputError("query sets overlap at " + to_string(v));
        }
    }
    for (const MicroVertex& v : y) {
        if (contains(z, v)) throw InputError("query sets overlap at " + to_string(v));
    }
}

}  // namespace

bool is_structure_of_interest(const MicroGraph& g) {
    if (!single_component(g)) return false;
    Degrees d = degrees_of(g);
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (!degree_rule_holds(d.out[static_cast<std::size_t>(v)],
                               d.in[static_cast<std::size_t>(v)])) {
            return false;
        }
    }
    return true;
}

StructureOfInterest::StructureOfInterest(MicroGraph subgraph) : subgraph_(std::move(subgraph)) {
    if (!is_structure_of_interest(subgraph_)) {
        throw InputError("graph is not a structure of interest");
    }
    roots_ = cdag::roots(subgraph_);
}

bool connects_under(const StructureOfInterest& sigma, const MicroGraph& host, const VertexSet& x,
                    const VertexSet& y, const VertexSet& z) {
    check_disjoint(x, y, z);
    const MicroGraph& s = sigma.subgraph();

    for (const MicroVertex& v : s.vertices()) {
        if (!host.has_vertex(v)) return false;
    }
    for (const auto& [u, v] : s.directed_edges()) {
        if (!host.has_directed(host.id(u), host.id(v))) return false;
    }
    for (const auto& [u, v] : s.bidirected_edges()) {
        if (!host.has_bidirected(host.id(u), host.id(v))) return false;
    }

    bool meets_x = false;
    bool meets_y = false;
    for (const MicroVertex& v : s.vertices()) {
        meets_x = meets_x || contains(x, v);
        meets_y = meets_y || contains(y, v);
    }
    if (!meets_x || !meets_y) return false;

    for (const MicroVertex& r : sigma.roots()) {
        if (!contains(x, r) && !contains(y, r) && !contains(z, r)) return false;
    }
    for (const MicroVertex& v : s.vertices()) {
        if (!contains(sigma.roots(), v) && contains(z, v)) return false;
    }
    return true;
}

namespace {

// Edge kinds along a vertex sequence, relative to the walking direction.
enum StepKind : int { kFwd = 0, kBwd = 1, kBi = 2 };

bool head_at_step_target(StepKind k) { return k != kBwd; }
bool head_at_step_source(StepKind k) { return k != kFwd; }

/// Lexicographically-first edge-kind assignment of the path such that every
/// inner vertex v satisfies: when v is a collider, collider_allowed[v]; when
/// it is not, v avoids z and is not listed in collider_required. InputError
/// when two consecutive vertices are not adjacent; nullopt when no assignment
/// satisfies the constraints.
std::optional<std::vector<StepKind>> assign_step_kinds(const MicroGraph& g,
                                                       const std::vector<int>& ids,
                                                       const std::vector<char>& in_z,
                                                       const std::vector<char>& collider_allowed,
                                                       const std::vector<char>& collider_required) {
    const std::size_t steps = ids.size() - 1;
    std::vector<std::array<char, 3>> avail(steps);
    for (std::size_t i = 0; i < steps; ++i) {
        avail[i][kFwd] = g.has_directed(ids[i], ids[i + 1]) ? 1 : 0;
        avail[i][kBwd] = g.has_directed(ids[i + 1], ids[i]) ? 1 : 0;
        avail[i][kBi] = g.has_bidirected(ids[i], ids[i + 1]) ? 1 : 0;
        if (!avail[i][0] && !avail[i][1] && !avail[i][2]) {
            throw InputError("path is not in the graph: no edge between " +
                             to_string(g.vertex(ids[i])) + " and " +
                             to_string(g.vertex(ids[i + 1])));
        }
    }

    auto vertex_ok = [&](int v, bool collider) {
        auto i = static_cast<std::size_t>(v);
        if (collider) return collider_allowed[i] != 0;
        return in_z[i] == 0 && collider_required[i] == 0;
    };

    // feasible[i][k]: some valid assignment of steps i.. starts with kind k.
    std::vector<std::array<char, 3>> feasible(steps);
    feasible[steps - 1] = avail[steps - 1];
    for (std::size_t i = steps - 1; i-- > 0;) {
        for (int a = 0; a < 3; ++a) {
            feasible[i][static_cast<std::size_t>(a)] = 0;
            if (!avail[i][static_cast<std::size_t>(a)]) continue;
            for (int b = 0; b < 3; ++b) {
                if (!feasible[i + 1][static_cast<std::size_t>(b)]) continue;
                bool collider = head_at_step_target(static_cast<StepKind>(a)) &&
                                head_at_step_source(static_cast<StepKind>(b));
                if (vertex_ok(ids[i + 1], collider)) {
                    feasible[i][static_cast<std::size_t>(a)] = 1;
                    break;
                }
            }
        }
    }

    std::vector<StepKind> kinds;
    kinds.reserve(steps);
    for (std::size_t i = 0; i < steps; ++i) {
        bool placed = false;
        for (int k = 0; k < 3 && !placed; ++k) {
            if (!feasible[i][static_cast<std::size_t>(k)]) continue;
            if (i > 0) {
                bool collider =
                    head_at_step_target(kinds.back()) && head_at_step_source(static_cast<StepKind>(k));
                if (!vertex_ok(ids[i], collider)) continue;
            }
            kinds.push_back(static_cast<StepKind>(k));
            placed = true;
        }
        if (!placed) return std::nullopt;
    }
    return kinds;
}

using IdEdge = std::pair<int, int>;

struct EdgePool {
    std::set<IdEdge> directed;    // (from, to)
    std::set<IdEdge> bidirected;  // first < second
};

MicroGraph pool_to_graph(const MicroGraph& g, const EdgePool& pool) {
    std::set<int> touched;
    EdgeList directed, bidirected;
    for (const auto& [u, v] : pool.directed) {
        touched.insert(u);
        touched.insert(v);
        directed.emplace_back(g.vertex(u), g.vertex(v));
    }
    for (const auto& [u, v] : pool.bidirected) {
        touched.insert(u);
        touched.insert(v);
        bidirected.emplace_back(g.vertex(u), g.vertex(v));
    }
    VertexSet vertices;
    for (int v : touched) vertices.push_back(g.vertex(v));
    return MicroGraph(std::move(vertices), directed, bidirected);
}

}  // namespace

StructureOfInterest structure_from_path(
    const MicroGraph& g, const std::vector<MicroVertex>& path,
    const std::map<MicroVertex, std::vector<MicroVertex>>& collider_escapes, const VertexSet& x,
    const VertexSet& y, const VertexSet& z) {
    check_disjoint(x, y, z);
    if (!is_acyclic(g)) throw InputError("host graph must be acyclic");
    if (path.size() < 2) throw InputError("path must contain at least one edge");
    if (!contains(x, path.front()) || !contains(y, path.back())) {
        throw InputError("path must run from x to y");
    }

    const int n = g.vertex_count();
    std::vector<int> ids;
    ids.reserve(path.size());
    for (const MicroVertex& v : path) ids.push_back(g.id(v));
    std::vector<char> on_path_vertex(static_cast<std::size_t>(n), 0);
    for (int v : ids) {
        if (on_path_vertex[static_cast<std::size_t>(v)]) throw InputError("path repeats a vertex");
        on_path_vertex[static_cast<std::size_t>(v)] = 1;
    }

    auto in_z = membership(g, z);
    std::vector<char> escape_keys(static_cast<std::size_t>(n), 0);
    for (const auto& [c, esc] : collider_escapes) {
        (void)esc;
        int cid = g.id(c);
        if (!on_path_vertex[static_cast<std::size_t>(cid)]) {
            throw InputError("escape given for " + to_string(c) + " which is not on the path");
        }
        escape_keys[static_cast<std::size_t>(cid)] = 1;
    }

    // A collider must lie in z or carry an escape; an escape key must come out
    // as a collider.
    std::vector<char> collider_allowed(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v) {
        auto i = static_cast<std::size_t>(v);
        collider_allowed[i] = (in_z[i] || escape_keys[i]) ? 1 : 0;
    }
    auto kinds = assign_step_kinds(g, ids, in_z, collider_allowed, escape_keys);
    if (!kinds) throw InputError("path is not z-active with the given escapes");

    std::vector<char> is_collider(static_cast<std::size_t>(n), 0);
    for (std::size_t i = 1; i + 1 < ids.size(); ++i) {
        if (head_at_step_target((*kinds)[i - 1]) && head_at_step_source((*kinds)[i])) {
            is_collider[static_cast<std::size_t>(ids[i])] = 1;
        }
    }

    for (const auto& [c, esc] : collider_escapes) {
        int cid = g.id(c);
        if (in_z[static_cast<std::size_t>(cid)]) {
            if (!esc.empty()) {
                throw InputError("collider " + to_string(c) + " lies in z; its escape must be empty");
            }
            continue;
        }
        if (esc.empty()) throw InputError("collider " + to_string(c) + " needs a nonempty escape");
        int prev = cid;
        std::set<int> seen{cid};
        for (std::size_t i = 0; i < esc.size(); ++i) {
            int w = g.id(esc[i]);
            if (!g.has_directed(prev, w)) {
                throw InputError("escape for " + to_string(c) + " uses a missing edge " +
                                 to_string(g.vertex(prev)) + " -> " + to_string(esc[i]));
            }
            if (!seen.insert(w).second) {
                throw InputError("escape for " + to_string(c) + " repeats a vertex");
            }
            bool terminal = i + 1 == esc.size();
            if ((in_z[static_cast<std::size_t>(w)] != 0) != terminal) {
                throw InputError("escape for " + to_string(c) + " must meet z exactly at its end");
            }
            prev = w;
        }
    }

    // Union of the path and all escapes.
    EdgePool on_path;
    for (std::size_t i = 0; i + 1 < ids.size(); ++i) {
        switch ((*kinds)[i]) {
            case kFwd:
                on_path.directed.emplace(ids[i], ids[i + 1]);
                break;
            case kBwd:
                on_path.directed.emplace(ids[i + 1], ids[i]);
                break;
            case kBi:
            default:
                on_path.bidirected.emplace(std::min(ids[i], ids[i + 1]),
                                           std::max(ids[i], ids[i + 1]));
                break;
        }
    }
    EdgePool pool = on_path;
    for (const auto& [c, esc] : collider_escapes) {
        int prev = g.id(c);
        for (const MicroVertex& v : esc) {
            int w = g.id(v);
            pool.directed.emplace(prev, w);
            prev = w;
        }
    }
    const EdgePool full_union = pool;

    auto in_xy = [&](int v) { return contains(x, g.vertex(v)) || contains(y, g.vertex(v)); };

    std::vector<int> out_deg, in_deg;
    auto recompute = [&]() {
        out_deg.assign(static_cast<std::size_t>(n), 0);
        in_deg.assign(static_cast<std::size_t>(n), 0);
        for (const auto& [u, v] : pool.directed) {
            ++out_deg[static_cast<std::size_t>(u)];
            ++in_deg[static_cast<std::size_t>(v)];
        }
        for (const auto& [u, v] : pool.bidirected) {
            ++in_deg[static_cast<std::size_t>(u)];
            ++in_deg[static_cast<std::size_t>(v)];
        }
    };

    auto strip_non_path_edges = [&](int v) {
        for (auto it = pool.directed.begin(); it != pool.directed.end();) {
            if ((it->first == v || it->second == v) && !on_path.directed.count(*it)) {
                it = pool.directed.erase(it);
            } else {
                ++it;
            }
        }
        for (auto it = pool.bidirected.begin(); it != pool.bidirected.end();) {
            if ((it->first == v || it->second == v) && !on_path.bidirected.count(*it)) {
                it = pool.bidirected.erase(it);
            } else {
                ++it;
            }
        }
    };

    // Drop non-path edges at vertices breaking the degree rule; also strip
    // chains that lost their ending, until stable. Path edges are never
    // removed, so the endpoints stay connected.
    for (;;) {
        recompute();
        int victim = -1;
        for (int v = 0; v < n && victim < 0; ++v) {
            auto i = static_cast<std::size_t>(v);
            if (out_deg[i] == 0 && in_deg[i] == 0) continue;
            if (!degree_rule_holds(out_deg[i], in_deg[i])) {
                victim = v;
            } else if (out_deg[i] == 0 && !on_path_vertex[i] && !in_z[i] && !in_xy(v)) {
                victim = v;
            }
        }
        if (victim < 0) break;
        strip_non_path_edges(victim);
    }

    // Reattach colliders whose escape got pruned away, re-routing through the
    // original union with the same checks the union obeys.
    recompute();
    std::vector<std::vector<int>> union_children(static_cast<std::size_t>(n));
    for (const auto& [u, v] : full_union.directed) {
        union_children[static_cast<std::size_t>(u)].push_back(v);
    }
    std::function<bool(int)> reattach = [&](int v) -> bool {
        if (out_deg[static_cast<std::size_t>(v)] >= 1) return true;
        for (int w : union_children[static_cast<std::size_t>(v)]) {
            if (pool.directed.count({v, w})) continue;
            if (out_deg[static_cast<std::size_t>(w)] >= 2) continue;  // would break a fork
            pool.directed.emplace(v, w);
            ++out_deg[static_cast<std::size_t>(v)];
            ++in_deg[static_cast<std::size_t>(w)];
            bool ok = in_z[static_cast<std::size_t>(w)] || in_xy(w) || reattach(w);
            if (ok) return true;
            pool.directed.erase({v, w});
            --out_deg[static_cast<std::size_t>(v)];
            --in_deg[static_cast<std::size_t>(w)];
        }
        return false;
    };
    bool repaired = true;
    for (std::size_t i = 1; i + 1 < ids.size() && repaired; ++i) {
        int v = ids[i];
        if (is_collider[static_cast<std::size_t>(v)] && !in_z[static_cast<std::size_t>(v)]) {
            repaired = reattach(v);
        }
    }

    // Keep the component containing both endpoints.
    auto component_restrict = [&]() {
        std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
        for (const auto& [u, v] : pool.directed) {
            adj[static_cast<std::size_t>(u)].push_back(v);
            adj[static_cast<std::size_t>(v)].push_back(u);
        }
        for (const auto& [u, v] : pool.bidirected) {
            adj[static_cast<std::size_t>(u)].push_back(v);
            adj[static_cast<std::size_t>(v)].push_back(u);
        }
        std::vector<char> keep(static_cast<std::size_t>(n), 0);
        std::vector<int> stack{ids.front()};
        keep[static_cast<std::size_t>(ids.front())] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : adj[static_cast<std::size_t>(v)]) {
                if (!keep[static_cast<std::size_t>(w)]) {
                    keep[static_cast<std::size_t>(w)] = 1;
                    stack.push_back(w);
                }
            }
        }
        for (auto it = pool.directed.begin(); it != pool.directed.end();) {
            it = keep[static_cast<std::size_t>(it->first)] ? std::next(it)
                                                           : pool.directed.erase(it);
        }
        for (auto it = pool.bidirected.begin(); it != pool.bidirected.end();) {
            it = keep[static_cast<std::size_t>(it->first)] ? std::next(it)
                                                           : pool.bidirected.erase(it);
        }
    };
    component_restrict();

    if (repaired) {
        MicroGraph candidate = pool_to_graph(g, pool);
        if (is_structure_of_interest(candidate)) {
            StructureOfInterest sigma(std::move(candidate));
            if (connects_under(sigma, g, x, y, z)) return sigma;
        }
    }

    // Crossing escapes can defeat the plain pruning loop; fall back to the
    // exhaustive search restricted to the original union, which is complete.
    MicroGraph host = pool_to_graph(g, full_union);
    auto in_x_host = membership(host, x);
    auto in_y_host = membership(host, y);
    auto in_z_host = membership(host, z);
    detail::ReachMatrix empty_base(host.vertex_count());
    auto found =
        detail::find_connecting_structure(host, in_x_host, in_y_host, in_z_host, empty_base);
    if (!found) {
        throw InputError("path and escapes do not induce a connecting structure");
    }
    EdgeList directed, bidirected;
    for (const auto& [u, v] : found->directed) directed.emplace_back(host.vertex(u), host.vertex(v));
    for (const auto& [u, v] : found->bidirected) {
        bidirected.emplace_back(host.vertex(u), host.vertex(v));
    }
    VertexSet touched;
    for (const auto& [u, v] : directed) {
        touched.push_back(u);
        touched.push_back(v);
    }
    for (const auto& [u, v] : bidirected) {
        touched.push_back(u);
        touched.push_back(v);
    }
    StructureOfInterest sigma(MicroGraph(std::move(touched), directed, bidirected));
    if (!connects_under(sigma, g, x, y, z)) {
        throw std::logic_error("fallback search returned a non-connecting structure");
    }
    return sigma;
}

namespace {

struct TrackedPath {
    std::vector<int> ids;
    std::vector<StepKind> kinds;  // ids.size() - 1 entries
};

void reverse_path(TrackedPath& p) {
    std::reverse(p.ids.begin(), p.ids.end());
    std::reverse(p.kinds.begin(), p.kinds.end());
    for (StepKind& k : p.kinds) {
        if (k == kFwd) {
            k = kBwd;
        } else if (k == kBwd) {
            k = kFwd;
        }
    }
}

// Cut the path down to its last x-vertex before the first y-vertex, so inner
// vertices avoid x ∪ y.
void trim_to_endpoints(TrackedPath& p, const std::vector<char>& in_x,
                       const std::vector<char>& in_y) {
    std::size_t first_y = 0;
    while (!in_y[static_cast<std::size_t>(p.ids[first_y])]) ++first_y;
    p.ids.resize(first_y + 1);
    p.kinds.resize(first_y);
    std::size_t last_x = 0;
    for (std::size_t i = 0; i < p.ids.size(); ++i) {
        if (in_x[static_cast<std::size_t>(p.ids[i])]) last_x = i;
    }
    p.ids.erase(p.ids.begin(), p.ids.begin() + static_cast<std::ptrdiff_t>(last_x));
    p.kinds.erase(p.kinds.begin(), p.kinds.begin() + static_cast<std::ptrdiff_t>(last_x));
}

}  // namespace

std::vector<MicroVertex> path_from_structure(const StructureOfInterest& sigma, const VertexSet& x,
                                             const VertexSet& y, const VertexSet& z) {
    if (!is_acyclic(sigma.subgraph())) throw InputError("structure must be acyclic");
    if (!connects_under(sigma, sigma.subgraph(), x, y, z)) {
        throw InputError("structure does not connect x and y under z");
    }
    const MicroGraph& s = sigma.subgraph();
    const int n = s.vertex_count();
    auto in_x = membership(s, x);
    auto in_y = membership(s, y);
    auto in_z = membership(s, z);

    // Undirected BFS from x to y, tracking the edge kind of each step.
    TrackedPath path;
    {
        std::vector<int> parent(static_cast<std::size_t>(n), -1);
        std::vector<StepKind> via(static_cast<std::size_t>(n), kFwd);
        std::vector<char> seen(static_cast<std::size_t>(n), 0);
        std::vector<int> queue;
        for (int v = 0; v < n; ++v) {
            if (in_x[static_cast<std::size_t>(v)]) {
                seen[static_cast<std::size_t>(v)] = 1;
                queue.push_back(v);
            }
        }
        int goal = -1;
        for (std::size_t head = 0; head < queue.size() && goal < 0; ++head) {
            int v = queue[head];
            if (in_y[static_cast<std::size_t>(v)]) {
                goal = v;
                break;
            }
            auto visit = [&](int w, StepKind k) {
                if (seen[static_cast<std::size_t>(w)]) return;
                seen[static_cast<std::size_t>(w)] = 1;
                parent[static_cast<std::size_t>(w)] = v;
                via[static_cast<std::size_t>(w)] = k;
                queue.push_back(w);
            };
            for (int w : s.children_of(v)) visit(w, kFwd);
            for (int w : s.parents_of(v)) visit(w, kBwd);
            for (int w : s.bidirected_neighbors_of(v)) visit(w, kBi);
        }
        if (goal < 0) throw std::logic_error("connected structure without an x-y path");
        std::vector<int> rev{goal};
        std::vector<StepKind> rev_kinds;
        for (int v = goal; parent[static_cast<std::size_t>(v)] != -1;
             v = parent[static_cast<std::size_t>(v)]) {
            rev_kinds.push_back(via[static_cast<std::size_t>(v)]);
            rev.push_back(parent[static_cast<std::size_t>(v)]);
        }
        path.ids.assign(rev.rbegin(), rev.rend());
        path.kinds.assign(rev_kinds.rbegin(), rev_kinds.rend());
    }
    trim_to_endpoints(path, in_x, in_y);

    // Ancestors of z inside sigma.
    std::vector<char> anc_z = in_z;
    {
        std::vector<int> stack;
        for (int v = 0; v < n; ++v) {
            if (anc_z[static_cast<std::size_t>(v)]) stack.push_back(v);
        }
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int p : s.parents_of(v)) {
                if (!anc_z[static_cast<std::size_t>(p)]) {
                    anc_z[static_cast<std::size_t>(p)] = 1;
                    stack.push_back(p);
                }
            }
        }
    }

    // Splice out colliders that only descend into x ∪ y: walk the collider's
    // directed chain to its root r, then run r .. T .. far-end where T is the
    // last chain vertex still on the current path.
    const int guard = n * n + 16;
    for (int iter = 0; iter < guard; ++iter) {
        int bad_pos = -1;
        for (std::size_t i = 1; i + 1 < path.ids.size(); ++i) {
            bool collider =
                head_at_step_target(path.kinds[i - 1]) && head_at_step_source(path.kinds[i]);
            if (collider && !anc_z[static_cast<std::size_t>(path.ids[i])]) {
                bad_pos = static_cast<int>(i);
                break;
            }
        }
        if (bad_pos < 0) {
            std::vector<MicroVertex> out;
            out.reserve(path.ids.size());
            for (int id : path.ids) out.push_back(s.vertex(id));
            return out;
        }

        // Forced descent: a vertex with an arrowhead in has at most one child.
        std::vector<int> chain{path.ids[static_cast<std::size_t>(bad_pos)]};
        while (!s.children_of(chain.back()).empty()) {
            chain.push_back(s.children_of(chain.back()).front());
        }
        int r = chain.back();
        if (!in_x[static_cast<std::size_t>(r)] && !in_y[static_cast<std::size_t>(r)]) {
            throw std::logic_error("structure root outside x, y, z");
        }

        TrackedPath tail;  // from the collider toward the far endpoint
        if (in_x[static_cast<std::size_t>(r)]) {
            tail.ids.assign(path.ids.begin() + bad_pos, path.ids.end());
            tail.kinds.assign(path.kinds.begin() + bad_pos, path.kinds.end());
        } else {
            tail.ids.assign(path.ids.begin(), path.ids.begin() + bad_pos + 1);
            tail.kinds.assign(path.kinds.begin(), path.kinds.begin() + bad_pos);
            reverse_path(tail);
        }

        std::vector<char> on_tail(static_cast<std::size_t>(n), 0);
        for (int v : tail.ids) on_tail[static_cast<std::size_t>(v)] = 1;
        std::size_t t_pos = 0;
        for (std::size_t i = 0; i < chain.size(); ++i) {
            if (on_tail[static_cast<std::size_t>(chain[i])]) t_pos = i;
        }
        std::size_t t_on_tail = 0;
        while (tail.ids[t_on_tail] != chain[t_pos]) ++t_on_tail;

        TrackedPath next;
        for (std::size_t i = chain.size(); i-- > t_pos;) next.ids.push_back(chain[i]);
        for (std::size_t i = 0; i + 1 < next.ids.size(); ++i) next.kinds.push_back(kBwd);
        next.ids.insert(next.ids.end(),
                        tail.ids.begin() + static_cast<std::ptrdiff_t>(t_on_tail) + 1,
                        tail.ids.end());
        next.kinds.insert(next.kinds.end(),
                          tail.kinds.begin() + static_cast<std::ptrdiff_t>(t_on_tail),
                          tail.kinds.end());

        if (in_y[static_cast<std::size_t>(next.ids.front())]) reverse_path(next);
        trim_to_endpoints(next, in_x, in_y);
        path = std::move(next);
    }
    throw std::logic_error("collider rerouting did not converge");
}

}  // namespace cdag
