#include "tmatch/oracle.hpp"

#include <stdexcept>
#include <string>

namespace tmatch {

namespace {

constexpr std::size_t kMaxEdges = 500;
constexpr std::size_t kMaxMotifEdges = 6;

struct OracleSearch {
    const TemporalGraph& g;
    const Motif& m;
    const MatchQuery& q;
    std::vector<Match>& out;

    std::vector<std::int32_t> motif_to_graph;  // -1 = unassigned
    std::vector<std::int32_t> graph_to_motif;
    std::vector<EdgeIndex> chosen;

    bool assign(std::uint32_t motif_node, NodeId graph_node) {
        if (motif_to_graph[motif_node] >= 0)
            return motif_to_graph[motif_node] == static_cast<std::int32_t>(graph_node);
        if (graph_to_motif[graph_node] >= 0) return false;
        motif_to_graph[motif_node] = static_cast<std::int32_t>(graph_node);
        graph_to_motif[graph_node] = static_cast<std::int32_t>(motif_node);
        return true;
    }

    void unassign(std::uint32_t motif_node, std::int32_t prev_graph) {
        if (prev_graph >= 0) return;  // was already assigned before this step
        const std::int32_t gnode = motif_to_graph[motif_node];
        graph_to_motif[gnode] = -1;
        motif_to_graph[motif_node] = -1;
    }

    bool attrs_ok(const Motif::Edge& me, const TemporalEdge& ge) const {
        if (!q.use_attributes) return true;
        if (me.attr != kNoAttr && ge.attr != me.attr) return false;
        if (m.node_attr(me.src) != kNoAttr && g.node_attr(ge.src) != m.node_attr(me.src)) return false;
        if (m.node_attr(me.dst) != kNoAttr && g.node_attr(ge.dst) != m.node_attr(me.dst)) return false;
        return true;
    }

    void extend(std::size_t rank, EdgeIndex from, Timestamp deadline) {
        if (rank == m.edge_count()) {
            Match match;
            match.edges = chosen;
            match.node_map.resize(m.node_count());
            for (std::size_t n = 0; n < m.node_count(); ++n)
                match.node_map[n] = static_cast<NodeId>(motif_to_graph[n]);
            match.t_start = g.edge(chosen.front()).time;
            match.t_end = g.edge(chosen.back()).time;
            out.push_back(std::move(match));
            return;
        }
        const Motif::Edge& me = m.edge(rank);
        for (EdgeIndex e = from; e < g.edge_count(); ++e) {
            const TemporalEdge& ge = g.edge(e);
            if (ge.time > deadline) break;  // sorted: nothing later can fit
            if (!attrs_ok(me, ge)) continue;
            const std::int32_t prev_src = motif_to_graph[me.src];
            if (!assign(me.src, ge.src)) continue;
            const std::int32_t prev_dst = motif_to_graph[me.dst];
            if (assign(me.dst, ge.dst)) {
                chosen.push_back(e);
                const Timestamp next_deadline =
                    rank == 0 ? saturating_add(ge.time, q.delta) : deadline;
                extend(rank + 1, e + 1, next_deadline);
                chosen.pop_back();
                unassign(me.dst, prev_dst);
            }
            unassign(me.src, prev_src);
        }
    }
};

}  // namespace

std::vector<Match> brute_force_temporal_match(const TemporalGraph& g, const MatchQuery& query) {
    if (g.edge_count() > kMaxEdges || query.motif.edge_count() > kMaxMotifEdges)
        throw std::invalid_argument(
            "instance too large for brute force: " + std::to_string(g.edge_count()) + " edges x " +
            std::to_string(query.motif.edge_count()) + " motif edges (budget: " +
            std::to_string(kMaxEdges) + " x " + std::to_string(kMaxMotifEdges) + ")");

    std::vector<Match> out;
    if (query.motif.edge_count() == 0 || query.motif.edge_count() > g.edge_count()) return out;
    OracleSearch search{g, query.motif, query, out,
                        std::vector<std::int32_t>(query.motif.node_count(), -1),
                        std::vector<std::int32_t>(g.node_count(), -1),
                        {}};
    search.extend(0, 0, kTimeInfinity);
    return out;
}

}  // namespace tmatch
