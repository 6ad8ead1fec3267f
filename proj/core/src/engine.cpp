#include "tmatch/engine.hpp"

#include <algorithm>
#include <stdexcept>

namespace tmatch {

void MatchState::reset(std::size_t graph_nodes, std::size_t motif_nodes) {
    map_gm.assign(graph_nodes, -1);
    map_mg.assign(motif_nodes, -1);
    edge_count.assign(graph_nodes, 0);
    edge_stack.clear();
    t_prime = kTimeInfinity;
    scan_from = 0;
    next_rank = 0;
}

bool MatchState::is_clean() const {
    auto unassigned = [](std::int32_t v) { return v == -1; };
    return std::all_of(map_gm.begin(), map_gm.end(), unassigned) &&
           std::all_of(map_mg.begin(), map_mg.end(), unassigned) &&
           std::all_of(edge_count.begin(), edge_count.end(),
                       [](std::uint32_t c) { return c == 0; }) &&
           edge_stack.empty() && t_prime == kTimeInfinity && next_rank == 0;
}

std::optional<EdgeIndex> find_next_match(const TemporalGraph& g, const Motif& m,
                                         const MatchState& state, bool use_attributes,
                                         std::uint64_t* edges_scanned) {
    const Motif::Edge& me = m.edge(state.next_rank);
    const std::int32_t u_g = state.map_mg[me.src];
    const std::int32_t v_g = state.map_mg[me.dst];

    EdgeConstraint constraint = EdgeConstraint::any();
    if (u_g >= 0 && v_g >= 0)
        constraint = EdgeConstraint::pair(static_cast<NodeId>(u_g), static_cast<NodeId>(v_g));
    else if (u_g >= 0)
        constraint = EdgeConstraint::from(static_cast<NodeId>(u_g));
    else if (v_g >= 0)
        constraint = EdgeConstraint::into(static_cast<NodeId>(v_g));

    const bool motif_loop = me.src == me.dst;
    const Attr want_src_attr = use_attributes ? m.node_attr(me.src) : kNoAttr;
    const Attr want_dst_attr = use_attributes ? m.node_attr(me.dst) : kNoAttr;
    const Attr want_edge_attr = use_attributes ? me.attr : kNoAttr;

    for (EdgeIndex e : g.candidate_edges(constraint, state.scan_from, state.t_prime)) {
        if (edges_scanned) ++*edges_scanned;
        const TemporalEdge& ge = g.edge(e);
        // A loop edge can only play a loop motif edge and vice versa;
        // otherwise one motif node would claim two graph nodes (or two motif
        // nodes one graph node).
        if ((ge.src == ge.dst) != motif_loop) continue;
        if (u_g >= 0 ? ge.src != static_cast<NodeId>(u_g) : state.map_gm[ge.src] >= 0) continue;
        if (v_g >= 0 ? ge.dst != static_cast<NodeId>(v_g) : state.map_gm[ge.dst] >= 0) continue;
        if (want_edge_attr != kNoAttr && ge.attr != want_edge_attr) continue;
        if (want_src_attr != kNoAttr && g.node_attr(ge.src) != want_src_attr) continue;
        if (want_dst_attr != kNoAttr && g.node_attr(ge.dst) != want_dst_attr) continue;
        return e;
    }
    return std::nullopt;
}

void push_match(const TemporalGraph& g, const Motif& m, MatchState& state, EdgeIndex e,
                Timestamp delta) {
    const TemporalEdge& ge = g.edge(e);
    const Motif::Edge& me = m.edge(state.next_rank);
    state.map_gm[ge.src] = static_cast<std::int32_t>(me.src);
    state.map_gm[ge.dst] = static_cast<std::int32_t>(me.dst);
    state.map_mg[me.src] = static_cast<std::int32_t>(ge.src);
    state.map_mg[me.dst] = static_cast<std::int32_t>(ge.dst);
    state.edge_count[ge.src]++;
    state.edge_count[ge.dst]++;
    if (state.edge_stack.empty()) state.t_prime = saturating_add(ge.time, delta);
    state.edge_stack.push_back(e);
    state.next_rank++;
}

void pop_match(const TemporalGraph& g, MatchState& state) {
    const EdgeIndex e = state.edge_stack.back();
    state.edge_stack.pop_back();
    state.scan_from = e + 1;
    if (state.edge_stack.empty()) state.t_prime = kTimeInfinity;
    const TemporalEdge& ge = g.edge(e);
    if (--state.edge_count[ge.src] == 0) {
        state.map_mg[state.map_gm[ge.src]] = -1;
        state.map_gm[ge.src] = -1;
    }
    if (--state.edge_count[ge.dst] == 0) {
        state.map_mg[state.map_gm[ge.dst]] = -1;
        state.map_gm[ge.dst] = -1;
    }
    state.next_rank--;
}

MatchSummary temporal_match(const TemporalGraph& g, const MatchQuery& query,
                            const std::function<void(const Match&)>& sink) {
    TemporalMatcher matcher(g, query);
    return matcher.run([&sink](const Match& m) { sink(m); });
}

std::uint64_t count_matches(const TemporalGraph& g, const MatchQuery& query) {
    TemporalMatcher matcher(g, query);
    return matcher.run([](const Match&) {}).matches;
}

std::vector<std::uint64_t> node_participation(const TemporalGraph& g, const MatchQuery& query,
                                              const std::optional<std::string>& role) {
    std::optional<std::uint32_t> role_index;
    if (role) {
        role_index = query.motif.find_node(*role);
        if (!role_index)
            throw std::invalid_argument("motif has no node labelled `" + *role + "`");
    }
    std::vector<std::uint64_t> counts(g.node_count(), 0);
    TemporalMatcher matcher(g, query);
    if (role_index) {
        matcher.run([&counts, r = *role_index](const Match& m) { counts[m.node_map[r]]++; });
    } else {
        matcher.run([&counts](const Match& m) {
            for (NodeId v : m.node_map) counts[v]++;
        });
    }
    return counts;
}

}  // namespace tmatch
