#include "detail/compat_enum.hpp"

#include <algorithm>
#include <limits>

namespace cdag::detail {

SlotTable SlotTable::build(const ClusterDag& c) {
    // Slot ids follow the (cluster name, index) sort order of ClusterDag::slots().
    std::vector<int> order(static_cast<std::size_t>(c.cluster_count()));
    for (int i = 0; i < c.cluster_count(); ++i) order[static_cast<std::size_t>(i)] = i;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return c.cluster(a).name < c.cluster(b).name; });

    SlotTable table;
    table.first_slot.assign(static_cast<std::size_t>(c.cluster_count()), 0);
    int next = 0;
    for (int cluster : order) {
        table.first_slot[static_cast<std::size_t>(cluster)] = next;
        for (int i = 1; i <= c.cluster(cluster).size; ++i) {
            table.cluster_of.push_back(cluster);
            table.index_of.push_back(i);
            ++next;
        }
    }
    table.slot_count = next;
    return table;
}

std::vector<EdgeGroup> edge_groups(const ClusterDag& c, const SlotTable& slots) {
    std::vector<EdgeGroup> groups;
    for (const auto& [u, v] : c.directed()) {
        EdgeGroup g;
        for (int i = 1; i <= c.cluster(u).size; ++i) {
            for (int j = 1; j <= c.cluster(v).size; ++j) {
                g.candidates.emplace_back(slots.slot_id(u, i), slots.slot_id(v, j));
            }
        }
        groups.push_back(std::move(g));
    }
    for (const auto& [u, v] : c.bidirected()) {
        EdgeGroup g;
        g.bidirected = true;
        for (int i = 1; i <= c.cluster(u).size; ++i) {
            for (int j = 1; j <= c.cluster(v).size; ++j) {
                int a = slots.slot_id(u, i);
                int b = slots.slot_id(v, j);
                g.candidates.emplace_back(std::min(a, b), std::max(a, b));
            }
        }
        std::sort(g.candidates.begin(), g.candidates.end());
        groups.push_back(std::move(g));
    }
    for (int u = 0; u < c.cluster_count(); ++u) {
        if (!c.cluster(u).directed_selfloop) continue;
        EdgeGroup g;
        for (int i = 1; i <= c.cluster(u).size; ++i) {
            for (int j = 1; j <= c.cluster(u).size; ++j) {
                if (i != j) g.candidates.emplace_back(slots.slot_id(u, i), slots.slot_id(u, j));
            }
        }
        groups.push_back(std::move(g));
    }
    for (int u = 0; u < c.cluster_count(); ++u) {
        if (!c.cluster(u).bidirected_selfloop) continue;
        EdgeGroup g;
        g.bidirected = true;
        for (int i = 1; i <= c.cluster(u).size; ++i) {
            for (int j = i + 1; j <= c.cluster(u).size; ++j) {
                g.candidates.emplace_back(slots.slot_id(u, i), slots.slot_id(u, j));
            }
        }
        groups.push_back(std::move(g));
    }
    return groups;
}

std::uint64_t combination_count(const std::vector<EdgeGroup>& groups) {
    constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t total = 1;
    for (const EdgeGroup& g : groups) {
        std::uint64_t options;
        if (g.candidates.size() >= 64) {
            options = kMax;
        } else {
            options = (std::uint64_t{1} << g.candidates.size()) - 1;
        }
        if (options != 0 && total > kMax / options) return kMax;
        total *= options;
    }
    return total;
}

bool for_each_acyclic_combination(
    const std::vector<EdgeGroup>& groups, int slot_count,
    const std::function<bool(const std::vector<std::pair<int, int>>& directed,
                             const std::vector<std::pair<int, int>>& bidirected)>& visit) {
    std::vector<std::uint64_t> masks(groups.size(), 1);
    std::vector<std::pair<int, int>> directed, bidirected;
    std::vector<int> indegree(static_cast<std::size_t>(slot_count));
    std::vector<int> stack;
    std::vector<std::vector<int>> children(static_cast<std::size_t>(slot_count));

    auto acyclic = [&]() {
        for (auto& list : children) list.clear();
        std::fill(indegree.begin(), indegree.end(), 0);
        for (const auto& [u, v] : directed) {
            children[static_cast<std::size_t>(u)].push_back(v);
            ++indegree[static_cast<std::size_t>(v)];
        }
        stack.clear();
        for (int v = 0; v < slot_count; ++v) {
            if (indegree[static_cast<std::size_t>(v)] == 0) stack.push_back(v);
        }
        int seen = 0;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            ++seen;
            for (int w : children[static_cast<std::size_t>(v)]) {
                if (--indegree[static_cast<std::size_t>(w)] == 0) stack.push_back(w);
            }
        }
        return seen == slot_count;
    };

    for (;;) {
        directed.clear();
        bidirected.clear();
        for (std::size_t g = 0; g < groups.size(); ++g) {
            auto& target = groups[g].bidirected ? bidirected : directed;
            std::uint64_t mask = masks[g];
            for (std::size_t bit = 0; mask != 0; ++bit, mask >>= 1) {
                if (mask & 1) target.push_back(groups[g].candidates[bit]);
            }
        }
        if (acyclic() && visit(directed, bidirected)) return true;

        // Odometer over subset masks, last group fastest.
        std::size_t g = groups.size();
        while (g-- > 0) {
            std::uint64_t limit = (std::uint64_t{1} << groups[g].candidates.size()) - 1;
            if (masks[g] < limit) {
                ++masks[g];
                for (std::size_t h = g + 1; h < groups.size(); ++h) masks[h] = 1;
                break;
            }
            if (g == 0) return false;
        }
        if (groups.empty()) return false;
    }
}

}  // namespace cdag::detail
