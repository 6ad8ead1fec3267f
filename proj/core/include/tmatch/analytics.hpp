#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tmatch/temporal_graph.hpp"
#include "tmatch/types.hpp"

namespace tmatch {

// Node ranking by participation count. Only nodes with count >= 1 are listed,
// sorted by count descending (ties: ascending node id). Ranks use competition
// ("1224") numbering: tied nodes share the better rank and the next distinct
// count resumes at its positional rank.
struct RankedNode {
    NodeId node = 0;
    std::string label;
    std::uint64_t count = 0;
    std::uint32_t rank = 0;
};

struct RankTable {
    std::vector<RankedNode> rows;
    // Rank of the target label; nullopt ("absent") when the label is unknown
    // or its count is zero.
    std::optional<std::uint32_t> target_rank;
};

RankTable rank_nodes(std::span<const std::uint64_t> participation, const TemporalGraph& g,
                     const std::optional<std::string>& target = {});

// Mean, over every edge index i, of how many edges at index >= i fall in the
// window [t_i, t_i + delta]. This is the per-anchor candidate load the
// matcher faces at a given delta.
double mean_edges_per_window(const TemporalGraph& g, Timestamp delta);

}  // namespace tmatch
