#include "cdag/dsep.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "cdag/errors.hpp"
#include "detail/dsep_core.hpp"

namespace cdag {

namespace detail {

namespace {

void counting_sort_adjacency(int n, const std::vector<std::pair<int, int>>& edges, bool by_from,
                             std::vector<int>& start, std::vector<int>& list) {
    start.assign(static_cast<std::size_t>(n) + 2, 0);
    for (const auto& [u, v] : edges) ++start[static_cast<std::size_t>((by_from ? u : v)) + 2];
    for (std::size_t i = 2; i < start.size(); ++i) start[i] += start[i - 1];
    list.resize(edges.size());
    for (const auto& [u, v] : edges) {
        int key = by_from ? u : v;
        list[static_cast<std::size_t>(start[static_cast<std::size_t>(key) + 1]++)] = by_from ? v : u;
    }
    start.pop_back();
}

void bidirected_adjacency(int n, const std::vector<std::pair<int, int>>& edges,
                          std::vector<int>& start, std::vector<int>& list) {
    start.assign(static_cast<std::size_t>(n) + 2, 0);
    for (const auto& [u, v] : edges) {
        ++start[static_cast<std::size_t>(u) + 2];
        ++start[static_cast<std::size_t>(v) + 2];
    }
    for (std::size_t i = 2; i < start.size(); ++i) start[i] += start[i - 1];
    list.resize(edges.size() * 2);
    for (const auto& [u, v] : edges) {
        list[static_cast<std::size_t>(start[static_cast<std::size_t>(u) + 1]++)] = v;
        list[static_cast<std::size_t>(start[static_cast<std::size_t>(v) + 1]++)] = u;
    }
    start.pop_back();
}

}  // namespace

bool d_connected_core(int n, const std::vector<std::pair<int, int>>& directed,
                      const std::vector<std::pair<int, int>>& bidirected,
                      const std::vector<char>& in_x, const std::vector<char>& in_y,
                      const std::vector<char>& in_z, DsepScratch& s, std::vector<int>* walk_out) {
    counting_sort_adjacency(n, directed, true, s.out_start, s.out_list);
    counting_sort_adjacency(n, directed, false, s.in_start, s.in_list);
    bidirected_adjacency(n, bidirected, s.bi_start, s.bi_list);

    // Ancestors of z (z included), walking parent lists backwards.
    s.anc_z.assign(static_cast<std::size_t>(n), 0);
    s.queue.clear();
    for (int v = 0; v < n; ++v) {
        if (in_z[static_cast<std::size_t>(v)]) {
            s.anc_z[static_cast<std::size_t>(v)] = 1;
            s.queue.push_back(v);
        }
    }
    for (std::size_t head = 0; head < s.queue.size(); ++head) {
        int v = s.queue[head];
        for (int i = s.in_start[static_cast<std::size_t>(v)];
             i < s.in_start[static_cast<std::size_t>(v) + 1]; ++i) {
            int p = s.in_list[static_cast<std::size_t>(i)];
            if (!s.anc_z[static_cast<std::size_t>(p)]) {
                s.anc_z[static_cast<std::size_t>(p)] = 1;
                s.queue.push_back(p);
            }
        }
    }

    s.seen.assign(static_cast<std::size_t>(n) * 2, 0);
    s.parent_state.assign(static_cast<std::size_t>(n) * 2, -1);
    s.queue.clear();
    for (int v = 0; v < n; ++v) {
        if (in_x[static_cast<std::size_t>(v)]) {
            s.seen[static_cast<std::size_t>(v) * 2] = 1;  // tail entry
            s.queue.push_back(v * 2);
        }
    }

    auto push = [&](int vertex, int mark, int from_state) {
        int state = vertex * 2 + mark;
        if (s.seen[static_cast<std::size_t>(state)]) return;
        s.seen[static_cast<std::size_t>(state)] = 1;
        s.parent_state[static_cast<std::size_t>(state)] = from_state;
        s.queue.push_back(state);
    };

    for (std::size_t head = 0; head < s.queue.size(); ++head) {
        int state = s.queue[head];
        int v = state / 2;
        int mark = state % 2;  // 0 tail, 1 head
        if (in_y[static_cast<std::size_t>(v)]) {
            if (walk_out) {
                walk_out->clear();
                for (int cur = state; cur != -1;
                     cur = s.parent_state[static_cast<std::size_t>(cur)]) {
                    walk_out->push_back(cur / 2);
                }
                std::reverse(walk_out->begin(), walk_out->end());
            }
            return true;
        }

        bool pass_non_collider = !in_z[static_cast<std::size_t>(v)];
        bool pass_collider = mark == 1 && s.anc_z[static_cast<std::size_t>(v)];

        if (pass_non_collider) {
            for (int i = s.out_start[static_cast<std::size_t>(v)];
                 i < s.out_start[static_cast<std::size_t>(v) + 1]; ++i) {
                push(s.out_list[static_cast<std::size_t>(i)], 1, state);
            }
        }
        // Continuing through another arrowhead: a non-collider step when we
        // entered through a tail, a collider step otherwise.
        if ((mark == 0 && pass_non_collider) || pass_collider) {
            for (int i = s.in_start[static_cast<std::size_t>(v)];
                 i < s.in_start[static_cast<std::size_t>(v) + 1]; ++i) {
                push(s.in_list[static_cast<std::size_t>(i)], 0, state);
            }
            for (int i = s.bi_start[static_cast<std::size_t>(v)];
                 i < s.bi_start[static_cast<std::size_t>(v) + 1]; ++i) {
                push(s.bi_list[static_cast<std::size_t>(i)], 1, state);
            }
        }
    }
    return false;
}

}  // namespace detail

namespace {

std::vector<char> membership(const MicroGraph& g, const VertexSet& set) {
    std::vector<char> flags(static_cast<std::size_t>(g.vertex_count()), 0);
    for (const MicroVertex& v : set) flags[static_cast<std::size_t>(g.id(v))] = 1;
    return flags;
}

void check_query_sets(const MicroGraph& g, const std::vector<char>& in_x,
                      const std::vector<char>& in_y, const std::vector<char>& in_z) {
    bool has_x = false;
    bool has_y = false;
    for (int v = 0; v < g.vertex_count(); ++v) {
        auto i = static_cast<std::size_t>(v);
        if ((in_x[i] && in_y[i]) || (in_x[i] && in_z[i]) || (in_y[i] && in_z[i])) {
            throw InputError("query sets overlap at " + to_string(g.vertex(v)));
        }
        has_x = has_x || in_x[i];
        has_y = has_y || in_y[i];
    }
    if (!has_x || !has_y) throw InputError("x and y must be nonempty");
}

enum class StepKind { Forward, Backward, Bidirected };

constexpr std::array<StepKind, 3> kAllKinds = {StepKind::Forward, StepKind::Backward,
                                               StepKind::Bidirected};

bool head_at_target(StepKind k) { return k != StepKind::Backward; }
bool head_at_source(StepKind k) { return k != StepKind::Forward; }

std::vector<char> ancestors_of(const MicroGraph& g, const std::vector<char>& seeds) {
    std::vector<char> anc = seeds;
    std::vector<int> stack;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (anc[static_cast<std::size_t>(v)]) stack.push_back(v);
    }
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int p : g.parents_of(v)) {
            if (!anc[static_cast<std::size_t>(p)]) {
                anc[static_cast<std::size_t>(p)] = 1;
                stack.push_back(p);
            }
        }
    }
    return anc;
}

/// Feasible edge kinds per walk step such that every inner vertex is active.
/// Empty result means inactive; InputError when a step has no realizing edge.
std::vector<std::vector<char>> walk_step_feasibility(const MicroGraph& g,
                                                     const std::vector<int>& ids,
                                                     const std::vector<char>& in_z,
                                                     const std::vector<char>& anc_z) {
    const std::size_t steps = ids.size() - 1;
    std::vector<std::vector<char>> avail(steps, std::vector<char>(3, 0));
    for (std::size_t i = 0; i < steps; ++i) {
        int u = ids[i];
        int v = ids[i + 1];
        if (g.has_directed(u, v)) avail[i][0] = 1;
        if (g.has_directed(v, u)) avail[i][1] = 1;
        if (g.has_bidirected(u, v)) avail[i][2] = 1;
        if (!avail[i][0] && !avail[i][1] && !avail[i][2]) {
            throw InputError("walk is not in the graph: no edge between " +
                             to_string(g.vertex(u)) + " and " + to_string(g.vertex(v)));
        }
    }

    std::vector<std::vector<char>> feasible(steps, std::vector<char>(3, 0));
    for (std::size_t k = 0; k < 3; ++k) feasible[0][k] = avail[0][k];
    for (std::size_t i = 1; i < steps; ++i) {
        int v = ids[i];
        for (StepKind prev : kAllKinds) {
            if (!feasible[i - 1][static_cast<std::size_t>(prev)]) continue;
            for (StepKind next : kAllKinds) {
                if (!avail[i][static_cast<std::size_t>(next)]) continue;
                bool collider = head_at_target(prev) && head_at_source(next);
                bool active = collider ? anc_z[static_cast<std::size_t>(v)] != 0
                                       : in_z[static_cast<std::size_t>(v)] == 0;
                if (active) feasible[i][static_cast<std::size_t>(next)] = 1;
            }
        }
    }
    return feasible;
}

bool walk_is_feasible(const std::vector<std::vector<char>>& feasible) {
    const auto& last = feasible.back();
    return last[0] || last[1] || last[2];
}

}  // namespace

bool d_separated(const MicroGraph& g, const VertexSet& x, const VertexSet& y, const VertexSet& z) {
    if (!is_acyclic(g)) throw InputError("d-separation requires an acyclic graph");
    auto in_x = membership(g, x);
    auto in_y = membership(g, y);
    auto in_z = membership(g, z);
    check_query_sets(g, in_x, in_y, in_z);
    detail::DsepScratch scratch;
    return !detail::d_connected_core(g.vertex_count(), g.directed(), g.bidirected(), in_x, in_y,
                                     in_z, scratch, nullptr);
}

std::optional<std::vector<MicroVertex>> find_active_walk(const MicroGraph& g, const VertexSet& x,
                                                         const VertexSet& y, const VertexSet& z) {
    if (!is_acyclic(g)) throw InputError("d-separation requires an acyclic graph");
    auto in_x = membership(g, x);
    auto in_y = membership(g, y);
    auto in_z = membership(g, z);
    check_query_sets(g, in_x, in_y, in_z);
    detail::DsepScratch scratch;
    std::vector<int> ids;
    if (!detail::d_connected_core(g.vertex_count(), g.directed(), g.bidirected(), in_x, in_y, in_z,
                                  scratch, &ids)) {
        return std::nullopt;
    }
    std::vector<MicroVertex> walk;
    walk.reserve(ids.size());
    for (int id : ids) walk.push_back(g.vertex(id));
    return walk;
}

bool is_active_walk(const MicroGraph& g, const std::vector<MicroVertex>& walk,
                    const VertexSet& z) {
    if (walk.empty()) throw InputError("empty walk");
    std::vector<int> ids;
    ids.reserve(walk.size());
    for (const MicroVertex& v : walk) ids.push_back(g.id(v));
    if (ids.size() == 1) return true;
    auto in_z = membership(g, z);
    auto anc_z = ancestors_of(g, in_z);
    return walk_is_feasible(walk_step_feasibility(g, ids, in_z, anc_z));
}

std::vector<MicroVertex> walk_to_active_path(const MicroGraph& g,
                                             const std::vector<MicroVertex>& walk,
                                             const VertexSet& z) {
    if (walk.empty()) throw InputError("empty walk");
    std::vector<int> ids;
    ids.reserve(walk.size());
    for (const MicroVertex& v : walk) ids.push_back(g.id(v));
    auto in_z = membership(g, z);
    auto anc_z = ancestors_of(g, in_z);
    if (ids.size() > 1 && !walk_is_feasible(walk_step_feasibility(g, ids, in_z, anc_z))) {
        throw InputError("walk is not active given z");
    }

    // Next path vertex = successor of the last occurrence of the current one.
    std::vector<int> path_ids{ids.front()};
    while (path_ids.back() != ids.back()) {
        std::size_t last = 0;
        for (std::size_t i = 0; i < ids.size(); ++i) {
            if (ids[i] == path_ids.back()) last = i;
        }
        path_ids.push_back(ids[last + 1]);
    }

    std::vector<char> on_path(static_cast<std::size_t>(g.vertex_count()), 0);
    for (int id : path_ids) {
        if (on_path[static_cast<std::size_t>(id)]) {
            throw std::logic_error("walk collapse produced a repeated vertex");
        }
        on_path[static_cast<std::size_t>(id)] = 1;
    }
    if (path_ids.size() > 1 && !walk_is_feasible(walk_step_feasibility(g, path_ids, in_z, anc_z))) {
        throw std::logic_error("walk collapse produced an inactive path");
    }

    std::vector<MicroVertex> path;
    path.reserve(path_ids.size());
    for (int id : path_ids) path.push_back(g.vertex(id));
    return path;
}

}  // namespace cdag
