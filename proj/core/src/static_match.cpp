#include "tmatch/static_match.hpp"

#include <algorithm>
#include <set>

namespace tmatch {

StaticPattern StaticPattern::from_motif(const Motif& m) {
    StaticPattern p;
    p.node_count = m.node_count();
    for (const auto& e : m.edges()) p.edges.emplace_back(e.src, e.dst);
    std::sort(p.edges.begin(), p.edges.end());
    p.edges.erase(std::unique(p.edges.begin(), p.edges.end()), p.edges.end());
    return p;
}

namespace detail {

std::vector<std::uint32_t> matching_order(const StaticPattern& p) {
    const std::size_t n = p.node_count;
    std::vector<std::uint32_t> degree(n, 0);
    for (const auto& [u, v] : p.edges) {
        degree[u]++;
        degree[v]++;
    }
    std::vector<std::uint32_t> order;
    std::vector<bool> placed(n, false);
    std::vector<std::uint32_t> edges_to_placed(n, 0);
    for (std::size_t step = 0; step < n; ++step) {
        std::int64_t best = -1;
        for (std::uint32_t cand = 0; cand < n; ++cand) {
            if (placed[cand]) continue;
            if (best < 0) {
                best = cand;
                continue;
            }
            const auto b = static_cast<std::uint32_t>(best);
            if (edges_to_placed[cand] != edges_to_placed[b]) {
                if (edges_to_placed[cand] > edges_to_placed[b]) best = cand;
            } else if (degree[cand] > degree[b]) {
                best = cand;
            }
        }
        const auto chosen = static_cast<std::uint32_t>(best);
        placed[chosen] = true;
        order.push_back(chosen);
        for (const auto& [u, v] : p.edges) {
            if (u == chosen && !placed[v]) edges_to_placed[v]++;
            if (v == chosen && !placed[u]) edges_to_placed[u]++;
        }
    }
    return order;
}

}  // namespace detail

std::uint64_t count_static_matches(const StaticGraph& g, const Motif& m,
                                   const StaticMatchOptions& options) {
    return static_match(g, m, [](const StaticEmbedding&) {}, options).embeddings;
}

std::uint64_t dedup_by_edge_set(const StaticPattern& p,
                                std::span<const StaticEmbedding> embeddings) {
    std::set<std::vector<std::pair<NodeId, NodeId>>> edge_sets;
    std::vector<std::pair<NodeId, NodeId>> mapped;
    for (const auto& emb : embeddings) {
        mapped.clear();
        for (const auto& [u, v] : p.edges)
            mapped.emplace_back(emb.node_map[u], emb.node_map[v]);
        std::sort(mapped.begin(), mapped.end());
        mapped.erase(std::unique(mapped.begin(), mapped.end()), mapped.end());
        edge_sets.insert(mapped);
    }
    return edge_sets.size();
}

}  // namespace tmatch
