#pragma once

#include <cassert>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "tmatch/motif.hpp"
#include "tmatch/temporal_graph.hpp"
#include "tmatch/types.hpp"

namespace tmatch {

// A temporal match query: which motif, how wide the time window anchored at
// the first matched edge may be (inclusive), and optional result limiting.
struct MatchQuery {
    Motif motif;
    Timestamp delta = kTimeInfinity;
    std::optional<std::uint64_t> limit;
    bool use_attributes = true;
};

// One result: the matched edge indices in rank order (strictly ascending) and
// the induced motif-node -> graph-node mapping.
struct Match {
    std::vector<EdgeIndex> edges;
    std::vector<NodeId> node_map;
    Timestamp t_start = 0;
    Timestamp t_end = 0;
};

struct MatchSummary {
    std::uint64_t matches = 0;
    std::uint64_t edges_scanned = 0;  // candidate edges examined
    bool truncated = false;
};

// Search bookkeeping. map_gm/map_mg are mutually inverse partial bijections
// (-1 = unassigned); edge_count[v] tracks how many stacked edges touch v, and
// v is unassigned exactly when it drops to zero. edge_stack holds the matched
// graph edges for ranks 1..next_rank, strictly ascending, all with
// time <= t_prime. t_prime is the window deadline: first matched edge time
// plus delta, infinity while the stack is empty.
struct MatchState {
    std::vector<std::int32_t> map_gm;   // graph node -> motif node
    std::vector<std::int32_t> map_mg;   // motif node -> graph node
    std::vector<std::uint32_t> edge_count;
    std::vector<EdgeIndex> edge_stack;
    Timestamp t_prime = kTimeInfinity;
    EdgeIndex scan_from = 0;            // candidate scan floor
    std::uint32_t next_rank = 0;        // 0-based motif edge being matched

    void reset(std::size_t graph_nodes, std::size_t motif_nodes);

    // True when all bookkeeping is back to its initial value (used to check
    // that a finished search unwound completely).
    bool is_clean() const;
};

// The candidate step: smallest edge index >= state.scan_from with
// time <= state.t_prime that can play motif rank state.next_rank. Candidates
// come from the pair index when both motif endpoints are mapped, from the
// source's out-list or the destination's in-list when one is, and from the
// full sequence otherwise. A candidate is accepted when each mapped endpoint
// matches exactly, each unmapped endpoint is still unassigned (injectivity),
// loop edges pair only with loop motif edges, and attributes agree.
std::optional<EdgeIndex> find_next_match(const TemporalGraph& g, const Motif& m,
                                         const MatchState& state, bool use_attributes = true,
                                         std::uint64_t* edges_scanned = nullptr);

// Assign graph edge e to motif rank state.next_rank: set both node mappings,
// bump endpoint edge counts, start the window deadline on the first push.
void push_match(const TemporalGraph& g, const Motif& m, MatchState& state, EdgeIndex e,
                Timestamp delta);

// Undo the most recent push and resume scanning just past the popped edge.
// Endpoints are re-read from the popped edge's record; nodes whose edge count
// hits zero are unassigned; the deadline resets when the stack empties.
void pop_match(const TemporalGraph& g, MatchState& state);

// Exhaustive, chronologically ordered, delta-bounded backtracking search over
// the sorted edge sequence. Emits every match exactly once, in lexicographic
// order of ascending edge-index sequences, via a reusable Match passed to the
// sink; allocates nothing per match after warm-up.
class TemporalMatcher {
public:
    TemporalMatcher(const TemporalGraph& g, MatchQuery query)
        : graph_(&g), query_(std::move(query)) {
        state_.reset(g.node_count(), query_.motif.node_count());
        scratch_.edges.reserve(query_.motif.edge_count());
        scratch_.node_map.resize(query_.motif.node_count());
    }

    const MatchQuery& query() const { return query_; }
    const MatchState& state() const { return state_; }

    // sink is invoked as sink(const Match&). The search owns the Match; copy
    // it to keep it. Returns with the state fully unwound, including when the
    // result limit cuts the search short.
    template <typename Sink>
    MatchSummary run(Sink&& sink) {
        const TemporalGraph& g = *graph_;
        const Motif& m = query_.motif;
        MatchSummary summary;
        state_.reset(g.node_count(), m.node_count());
        if (g.edge_count() == 0 || m.edge_count() == 0) return summary;

        const std::uint32_t last_rank = static_cast<std::uint32_t>(m.edge_count()) - 1;
        MatchState& st = state_;
        const EdgeIndex n_edges = static_cast<EdgeIndex>(g.edge_count());

        while (true) {
            auto found = find_next_match(g, m, st, query_.use_attributes, &summary.edges_scanned);
            if (found) {
                if (st.next_rank == last_rank) {
                    // Complete match: the emitted edge set is the stack plus
                    // this final edge, which stays unpushed so the scan can
                    // move on to alternative final edges.
                    emit(*found, sink, summary);
                    if (query_.limit && summary.matches >= *query_.limit) {
                        summary.truncated = true;
                        unwind();
                        return summary;
                    }
                } else {
                    push_match(g, m, st, *found, query_.delta);
                }
                st.scan_from = *found + 1;
            } else {
                st.scan_from = n_edges;
            }
            while (st.scan_from >= n_edges || g.edge(st.scan_from).time > st.t_prime) {
                if (st.edge_stack.empty()) return summary;
                pop_match(g, st);
            }
        }
    }

private:
    template <typename Sink>
    void emit(EdgeIndex final_edge, Sink& sink, MatchSummary& summary) {
        const TemporalGraph& g = *graph_;
        const Motif& m = query_.motif;
        scratch_.edges.assign(state_.edge_stack.begin(), state_.edge_stack.end());
        scratch_.edges.push_back(final_edge);
        for (std::size_t n = 0; n < m.node_count(); ++n)
            scratch_.node_map[n] = static_cast<NodeId>(state_.map_mg[n]);
        // The final edge's endpoints were validated but never pushed, so they
        // may be missing from map_mg.
        const auto& last = m.edge(state_.next_rank);
        scratch_.node_map[last.src] = g.edge(final_edge).src;
        scratch_.node_map[last.dst] = g.edge(final_edge).dst;
        scratch_.t_start = g.edge(scratch_.edges.front()).time;
        scratch_.t_end = g.edge(final_edge).time;
        ++summary.matches;
        sink(static_cast<const Match&>(scratch_));
    }

    void unwind() {
        while (!state_.edge_stack.empty()) pop_match(*graph_, state_);
        state_.scan_from = 0;
    }

    const TemporalGraph* graph_;
    MatchQuery query_;
    MatchState state_;
    Match scratch_;
};

// Convenience wrapper: runs a full search, forwarding every match to sink.
MatchSummary temporal_match(const TemporalGraph& g, const MatchQuery& query,
                            const std::function<void(const Match&)>& sink);

// Counting search; no per-match work beyond the counter.
std::uint64_t count_matches(const TemporalGraph& g, const MatchQuery& query);

// Per-node participation: result[v] is the number of matches node v appears
// in, restricted to matches where v plays `role` when a role label is given.
// Throws std::invalid_argument for a role label the motif does not contain.
std::vector<std::uint64_t> node_participation(const TemporalGraph& g, const MatchQuery& query,
                                              const std::optional<std::string>& role = {});

}  // namespace tmatch
