#include "tmatch/analytics.hpp"

#include <algorithm>

namespace tmatch {

RankTable rank_nodes(std::span<const std::uint64_t> participation, const TemporalGraph& g,
                     const std::optional<std::string>& target) {
    RankTable table;
    for (NodeId n = 0; n < participation.size(); ++n)
        if (participation[n] > 0) table.rows.push_back({n, g.label(n), participation[n], 0});
    std::sort(table.rows.begin(), table.rows.end(), [](const RankedNode& a, const RankedNode& b) {
        if (a.count != b.count) return a.count > b.count;
        return a.node < b.node;
    });
    for (std::size_t i = 0; i < table.rows.size(); ++i) {
        if (i > 0 && table.rows[i].count == table.rows[i - 1].count)
            table.rows[i].rank = table.rows[i - 1].rank;
        else
            table.rows[i].rank = static_cast<std::uint32_t>(i + 1);
    }
    if (target) {
        for (const auto& row : table.rows)
            if (row.label == *target) {
                table.target_rank = row.rank;
                break;
            }
    }
    return table;
}

double mean_edges_per_window(const TemporalGraph& g, Timestamp delta) {
    const auto edges = g.edges();
    if (edges.empty()) return 0.0;
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const Timestamp deadline = saturating_add(edges[i].time, delta);
        auto last = std::upper_bound(edges.begin() + static_cast<std::ptrdiff_t>(i), edges.end(),
                                     deadline, [](Timestamp t, const TemporalEdge& e) {
                                         return t < e.time;
                                     });
        total += static_cast<std::uint64_t>(last - (edges.begin() + static_cast<std::ptrdiff_t>(i)));
    }
    return static_cast<double>(total) / static_cast<double>(edges.size());
}

}  // namespace tmatch
