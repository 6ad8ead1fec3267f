#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "tmatch/motif.hpp"
#include "tmatch/temporal_graph.hpp"

namespace tmatch {

// A motif with ranks erased and parallel edges collapsed: the query shape the
// static baseline searches for.
struct StaticPattern {
    std::size_t node_count = 0;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;  // deduped

    static StaticPattern from_motif(const Motif& m);
};

// An injective node mapping preserving every pattern edge (non-induced
// directed monomorphism: extra graph edges among the mapped nodes are fine).
struct StaticEmbedding {
    std::vector<NodeId> node_map;
};

struct StaticMatchOptions {
    // Wall-clock budget for one search; when exceeded the search stops and
    // the result is flagged capped (the count is the partial tally).
    std::optional<std::chrono::steady_clock::duration> time_cap;
};

struct StaticMatchResult {
    std::uint64_t embeddings = 0;
    bool capped = false;
};

namespace detail {

// Pattern-node matching order: seed with the highest-degree node, then
// greedily take the node with the most edges into the ordered prefix
// (most-constrained-first). Ties break toward higher degree, then lower index.
std::vector<std::uint32_t> matching_order(const StaticPattern& p);

}  // namespace detail

// Enumerates every embedding of the pattern, each exactly once, in a
// deterministic order (candidates ascend by node id at every depth). The sink
// receives a reusable StaticEmbedding per result.
template <typename Sink>
StaticMatchResult static_match(const StaticGraph& g, const StaticPattern& p, Sink&& sink,
                               const StaticMatchOptions& options = {}) {
    StaticMatchResult result;
    if (p.node_count == 0 || p.node_count > g.node_count()) return result;

    const auto order = detail::matching_order(p);
    // Per depth: pattern edges between order[d] and already-ordered nodes.
    struct Constraint {
        std::uint32_t mapped_pos;  // position in `order` of the mapped endpoint
        bool outgoing;             // true: candidate -> mapped, i.e. edge (order[d], other)
    };
    std::vector<std::vector<Constraint>> constraints(order.size());
    std::vector<bool> needs_loop(order.size(), false);
    {
        std::vector<std::int32_t> pos_of(p.node_count, -1);
        for (std::uint32_t d = 0; d < order.size(); ++d) {
            for (const auto& [u, v] : p.edges) {
                if (u == v) {
                    if (u == order[d]) needs_loop[d] = true;
                } else if (u == order[d] && pos_of[v] >= 0) {
                    constraints[d].push_back({static_cast<std::uint32_t>(pos_of[v]), true});
                } else if (v == order[d] && pos_of[u] >= 0) {
                    constraints[d].push_back({static_cast<std::uint32_t>(pos_of[u]), false});
                }
            }
            pos_of[order[d]] = static_cast<std::int32_t>(d);
        }
    }

    StaticEmbedding embedding;
    embedding.node_map.assign(p.node_count, 0);
    std::vector<NodeId> mapped(order.size(), 0);
    std::vector<bool> used(g.node_count(), false);

    const auto deadline = options.time_cap
                              ? std::optional(std::chrono::steady_clock::now() + *options.time_cap)
                              : std::nullopt;
    std::uint64_t steps = 0;

    auto loop_candidates = [&](std::uint32_t depth, auto&& try_node) -> bool {
        const auto& cons = constraints[depth];
        if (cons.empty()) {
            for (NodeId n = 0; n < g.node_count(); ++n)
                if (!try_node(n)) return false;
            return true;
        }
        // Iterate the smallest adjacency list; verify the rest by lookup.
        std::span<const NodeId> best;
        std::size_t best_at = 0;
        for (std::size_t i = 0; i < cons.size(); ++i) {
            auto list = cons[i].outgoing ? g.predecessors(mapped[cons[i].mapped_pos])
                                         : g.successors(mapped[cons[i].mapped_pos]);
            if (i == 0 || list.size() < best.size()) {
                best = list;
                best_at = i;
            }
        }
        for (NodeId n : best) {
            bool ok = true;
            for (std::size_t i = 0; i < cons.size() && ok; ++i) {
                if (i == best_at) continue;
                ok = cons[i].outgoing ? g.has_edge(n, mapped[cons[i].mapped_pos])
                                      : g.has_edge(mapped[cons[i].mapped_pos], n);
            }
            if (ok && !try_node(n)) return false;
        }
        return true;
    };

    auto search = [&](std::uint32_t depth, auto&& self) -> bool {
        if (deadline && (++steps & 1023u) == 0 && std::chrono::steady_clock::now() > *deadline) {
            result.capped = true;
            return false;
        }
        if (depth == order.size()) {
            for (std::uint32_t d = 0; d < order.size(); ++d)
                embedding.node_map[order[d]] = mapped[d];
            ++result.embeddings;
            sink(static_cast<const StaticEmbedding&>(embedding));
            return true;
        }
        return loop_candidates(depth, [&](NodeId n) -> bool {
            if (used[n]) return true;
            if (needs_loop[depth] && !g.has_edge(n, n)) return true;
            used[n] = true;
            mapped[depth] = n;
            const bool keep_going = self(depth + 1, self);
            used[n] = false;
            return keep_going;
        });
    };
    search(0, search);
    return result;
}

// Motif-facing wrapper (ranks and multiplicities erased).
template <typename Sink>
StaticMatchResult static_match(const StaticGraph& g, const Motif& m, Sink&& sink,
                               const StaticMatchOptions& options = {}) {
    return static_match(g, StaticPattern::from_motif(m), std::forward<Sink>(sink), options);
}

std::uint64_t count_static_matches(const StaticGraph& g, const Motif& m,
                                   const StaticMatchOptions& options = {});

// Number of distinct matched static edge sets among the embeddings: collapses
// pattern automorphisms (the 3 rotations of a directed triangle map the same
// edge set) the way a subgraph count does.
std::uint64_t dedup_by_edge_set(const StaticPattern& p, std::span<const StaticEmbedding> embeddings);

}  // namespace tmatch
