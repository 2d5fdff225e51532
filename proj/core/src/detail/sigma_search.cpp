#include "detail/sigma_search.hpp"

#include <algorithm>

#include "cdag/errors.hpp"

namespace cdag::detail {

ReachMatrix::ReachMatrix(int n)
    : n_(n), words_((n + 63) / 64), rows_(static_cast<std::size_t>(n) * words_, 0) {}

ReachMatrix ReachMatrix::closure_of(const MicroGraph& g) {
    ReachMatrix m(g.vertex_count());
    const int n = g.vertex_count();
    // Vertices in reverse topological order accumulate their children's rows.
    std::vector<int> indegree(static_cast<std::size_t>(n), 0);
    for (const auto& [u, v] : g.directed()) {
        (void)u;
        ++indegree[static_cast<std::size_t>(v)];
    }
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        if (indegree[static_cast<std::size_t>(v)] == 0) order.push_back(v);
    }
    for (std::size_t head = 0; head < order.size(); ++head) {
        for (int w : g.children_of(order[head])) {
            if (--indegree[static_cast<std::size_t>(w)] == 0) order.push_back(w);
        }
    }
    if (static_cast<int>(order.size()) != n) {
        throw InputError("closure requested for a cyclic graph");
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        for (int w : g.children_of(*it)) m.add_edge(*it, w);
    }
    return m;
}

bool ReachMatrix::reaches(int from, int to) const {
    return (rows_[static_cast<std::size_t>(from) * words_ + static_cast<std::size_t>(to) / 64] >>
            (to % 64)) &
           1u;
}

void ReachMatrix::add_edge(int from, int to) {
    // Everything that reaches `from` (and `from` itself) now reaches `to` and
    // everything `to` reaches.
    const std::size_t to_row = static_cast<std::size_t>(to) * words_;
    for (int w = 0; w < n_; ++w) {
        if (w != from && !reaches(w, from)) continue;
        const std::size_t row = static_cast<std::size_t>(w) * words_;
        for (int i = 0; i < words_; ++i) rows_[row + i] |= rows_[to_row + i];
        rows_[row + static_cast<std::size_t>(to) / 64] |= std::uint64_t{1} << (to % 64);
    }
}

namespace {

enum EdgeKind : int { kOut = 0, kIn = 1, kBi = 2 };

struct HalfEdge {
    int other;
    EdgeKind kind;
};

class Searcher {
public:
    Searcher(const MicroGraph& host, const std::vector<char>& in_x, const std::vector<char>& in_y,
             const std::vector<char>& in_z, const ReachMatrix& base_closure)
        : host_(host),
          in_x_(in_x),
          in_y_(in_y),
          in_z_(in_z),
          n_(host.vertex_count()),
          reach_(base_closure),
          sig_dir_(static_cast<std::size_t>(n_) * n_, 0),
          sig_bi_(static_cast<std::size_t>(n_) * n_, 0),
          out_deg_(static_cast<std::size_t>(n_), 0),
          in_deg_(static_cast<std::size_t>(n_), 0),
          on_path_(static_cast<std::size_t>(n_), 0) {
        adj_.resize(static_cast<std::size_t>(n_));
        for (int v = 0; v < n_; ++v) {
            auto& list = adj_[static_cast<std::size_t>(v)];
            for (int w : host.children_of(v)) list.push_back({w, kOut});
            for (int w : host.parents_of(v)) list.push_back({w, kIn});
            for (int w : host.bidirected_neighbors_of(v)) list.push_back({w, kBi});
            std::sort(list.begin(), list.end(), [](const HalfEdge& a, const HalfEdge& b) {
                return a.other != b.other ? a.other < b.other : a.kind < b.kind;
            });
        }
    }

    std::optional<SigmaResult> run() {
        for (int x = 0; x < n_; ++x) {
            if (!in_x_[static_cast<std::size_t>(x)]) continue;
            on_path_[static_cast<std::size_t>(x)] = 1;
            path_.push_back(x);
            if (extend(x, false)) return build_result();
            path_.pop_back();
            on_path_[static_cast<std::size_t>(x)] = 0;
        }
        return std::nullopt;
    }

private:
    struct Undo {
        bool added = false;
        int u = -1, v = -1;
        bool bidirected = false;
        std::vector<std::uint64_t> reach_snapshot;  // empty for bidirected edges
    };

    bool extend(int tip, bool tip_mark_head) {
        for (const HalfEdge& e : adj_[static_cast<std::size_t>(tip)]) {
            const int o = e.other;
            if (on_path_[static_cast<std::size_t>(o)] || in_x_[static_cast<std::size_t>(o)]) {
                continue;
            }
            const bool head_at_tip = e.kind != kOut;
            const bool head_at_other = e.kind != kIn;
            const bool collider = tip_mark_head && head_at_tip;
            // The path start carries no status; everywhere else a non-collider
            // must avoid z. x is disjoint from z, so no special case is needed.
            if (!collider && in_z_[static_cast<std::size_t>(tip)]) continue;

            Undo undo;
            if (!insert(tip, e, undo)) continue;
            bool ok = false;
            if (collider && !in_z_[static_cast<std::size_t>(tip)]) {
                ok = solve_escape(tip, [&] { return arrive(o, head_at_other); });
            } else {
                ok = arrive(o, head_at_other);
            }
            if (ok) return true;
            rollback(undo);
        }
        return false;
    }

    bool arrive(int v, bool mark_head) {
        if (in_y_[static_cast<std::size_t>(v)]) {
            end_ = v;
            return true;
        }
        on_path_[static_cast<std::size_t>(v)] = 1;
        path_.push_back(v);
        if (extend(v, mark_head)) return true;
        path_.pop_back();
        on_path_[static_cast<std::size_t>(v)] = 0;
        return false;
    }

    template <class Cont>
    bool solve_escape(int v, Cont cont) {
        if (out_deg_[static_cast<std::size_t>(v)] >= 1) return cont();  // chain already attached
        for (int w : host_.children_of(v)) {
            Undo undo;
            if (!insert_directed(v, w, undo)) continue;
            bool ok;
            if (in_z_[static_cast<std::size_t>(w)] || in_x_[static_cast<std::size_t>(w)] ||
                in_y_[static_cast<std::size_t>(w)] || out_deg_[static_cast<std::size_t>(w)] >= 1) {
                ok = cont();
            } else {
                ok = solve_escape(w, cont);
            }
            if (ok) return true;
            rollback(undo);
        }
        return false;
    }

    bool insert(int tip, const HalfEdge& e, Undo& undo) {
        switch (e.kind) {
            case kOut:
                return insert_directed(tip, e.other, undo);
            case kIn:
                return insert_directed(e.other, tip, undo);
            case kBi:
            default:
                return insert_bidirected(tip, e.other, undo);
        }
    }

    bool insert_directed(int u, int v, Undo& undo) {
        if (sig_dir_[static_cast<std::size_t>(u) * n_ + v]) return true;  // already committed
        if (in_z_[static_cast<std::size_t>(u)]) return false;  // z-vertices stay childless
        const int new_out = out_deg_[static_cast<std::size_t>(u)] + 1;
        if (new_out > 2) return false;
        if (new_out == 2 && in_deg_[static_cast<std::size_t>(u)] > 0) return false;
        if (out_deg_[static_cast<std::size_t>(v)] >= 2) return false;  // arrowhead into a fork
        if (reach_.reaches(v, u)) return false;

        undo.added = true;
        undo.u = u;
        undo.v = v;
        undo.bidirected = false;
        undo.reach_snapshot = reach_.snapshot();
        reach_.add_edge(u, v);
        sig_dir_[static_cast<std::size_t>(u) * n_ + v] = 1;
        ++out_deg_[static_cast<std::size_t>(u)];
        ++in_deg_[static_cast<std::size_t>(v)];
        return true;
    }

    bool insert_bidirected(int a, int b, Undo& undo) {
        if (a > b) std::swap(a, b);
        if (sig_bi_[static_cast<std::size_t>(a) * n_ + b]) return true;
        if (out_deg_[static_cast<std::size_t>(a)] >= 2 ||
            out_deg_[static_cast<std::size_t>(b)] >= 2) {
            return false;
        }
        undo.added = true;
        undo.u = a;
        undo.v = b;
        undo.bidirected = true;
        sig_bi_[static_cast<std::size_t>(a) * n_ + b] = 1;
        ++in_deg_[static_cast<std::size_t>(a)];
        ++in_deg_[static_cast<std::size_t>(b)];
        return true;
    }

    void rollback(Undo& undo) {
        if (!undo.added) return;
        if (undo.bidirected) {
            sig_bi_[static_cast<std::size_t>(undo.u) * n_ + undo.v] = 0;
            --in_deg_[static_cast<std::size_t>(undo.u)];
            --in_deg_[static_cast<std::size_t>(undo.v)];
        } else {
            sig_dir_[static_cast<std::size_t>(undo.u) * n_ + undo.v] = 0;
            --out_deg_[static_cast<std::size_t>(undo.u)];
            --in_deg_[static_cast<std::size_t>(undo.v)];
            reach_.restore(std::move(undo.reach_snapshot));
        }
        undo.added = false;
    }

    std::optional<SigmaResult> build_result() {
        SigmaResult result;
        for (int u = 0; u < n_; ++u) {
            for (int v = 0; v < n_; ++v) {
                if (sig_dir_[static_cast<std::size_t>(u) * n_ + v]) result.directed.emplace_back(u, v);
                if (u < v && sig_bi_[static_cast<std::size_t>(u) * n_ + v]) {
                    result.bidirected.emplace_back(u, v);
                }
            }
        }
        result.path = path_;
        result.path.push_back(end_);
        return result;
    }

    const MicroGraph& host_;
    const std::vector<char>& in_x_;
    const std::vector<char>& in_y_;
    const std::vector<char>& in_z_;
    const int n_;
    std::vector<std::vector<HalfEdge>> adj_;
    ReachMatrix reach_;
    std::vector<char> sig_dir_, sig_bi_;
    std::vector<int> out_deg_, in_deg_;
    std::vector<char> on_path_;
    std::vector<int> path_;
    int end_ = -1;
};

}  // namespace

std::optional<SigmaResult> find_connecting_structure(const MicroGraph& host,
                                                     const std::vector<char>& in_x,
                                                     const std::vector<char>& in_y,
                                                     const std::vector<char>& in_z,
                                                     const ReachMatrix& base_closure) {
    Searcher searcher(host, in_x, in_y, in_z, base_closure);
    return searcher.run();
}

namespace {

bool directed_dfs(const MicroGraph& host, int v, int target, ReachMatrix& reach,
                  std::vector<char>& on_path, std::vector<int>& path) {
    if (v == target) return true;
    for (int w : host.children_of(v)) {
        if (on_path[static_cast<std::size_t>(w)]) continue;
        if (reach.reaches(w, v)) continue;
        auto snapshot = reach.snapshot();
        reach.add_edge(v, w);
        on_path[static_cast<std::size_t>(w)] = 1;
        path.push_back(w);
        if (directed_dfs(host, w, target, reach, on_path, path)) return true;
        path.pop_back();
        on_path[static_cast<std::size_t>(w)] = 0;
        reach.restore(std::move(snapshot));
    }
    return false;
}

}  // namespace

std::optional<std::vector<int>> find_directed_path(const MicroGraph& host, int source, int target,
                                                   const ReachMatrix& base_closure) {
    ReachMatrix reach = base_closure;
    std::vector<char> on_path(static_cast<std::size_t>(host.vertex_count()), 0);
    on_path[static_cast<std::size_t>(source)] = 1;
    std::vector<int> path{source};
    if (directed_dfs(host, source, target, reach, on_path, path)) return path;
    return std::nullopt;
}

}  // namespace cdag::detail
