#include "tmatch/temporal_graph.hpp"

#include <algorithm>
#include <numeric>

namespace tmatch {

namespace {

// CSR build: bucket `keys[i]` -> i for every edge index, offsets per node.
void build_csr(std::size_t node_count, const std::vector<TemporalEdge>& edges,
               bool by_src, std::vector<EdgeIndex>& list, std::vector<std::uint64_t>& off) {
    off.assign(node_count + 1, 0);
    for (const auto& e : edges) off[(by_src ? e.src : e.dst) + 1]++;
    for (std::size_t n = 0; n < node_count; ++n) off[n + 1] += off[n];
    list.resize(edges.size());
    std::vector<std::uint64_t> cursor(off.begin(), off.end() - 1);
    for (EdgeIndex i = 0; i < edges.size(); ++i) {
        NodeId n = by_src ? edges[i].src : edges[i].dst;
        list[cursor[n]++] = i;
    }
}

}  // namespace

TemporalGraph build_graph(std::vector<EdgeTriple> triples) {
    TemporalGraph g;
    std::stable_sort(triples.begin(), triples.end(),
                     [](const EdgeTriple& a, const EdgeTriple& b) { return a.time < b.time; });

    g.edges_.reserve(triples.size());
    for (const auto& t : triples) {
        auto intern = [&g](const std::string& label) -> NodeId {
            auto [it, inserted] = g.ids_.try_emplace(label, static_cast<NodeId>(g.labels_.size()));
            if (inserted) {
                g.labels_.push_back(label);
                g.node_attrs_.push_back(kNoAttr);
            }
            return it->second;
        };
        TemporalEdge e;
        e.src = intern(t.src);
        e.dst = intern(t.dst);
        e.time = t.time;
        e.attr = t.attr;
        g.edges_.push_back(e);
    }

    const std::size_t nv = g.labels_.size();
    g.all_list_.resize(g.edges_.size());
    std::iota(g.all_list_.begin(), g.all_list_.end(), EdgeIndex{0});
    build_csr(nv, g.edges_, true, g.out_list_, g.out_off_);
    build_csr(nv, g.edges_, false, g.in_list_, g.in_off_);

    // Pair index: edge indices grouped by ordered (src, dst), ascending within
    // each group. Kept as a sorted offset table rather than a hash map.
    g.pair_list_.resize(g.edges_.size());
    std::iota(g.pair_list_.begin(), g.pair_list_.end(), EdgeIndex{0});
    std::sort(g.pair_list_.begin(), g.pair_list_.end(), [&g](EdgeIndex a, EdgeIndex b) {
        const auto& ea = g.edges_[a];
        const auto& eb = g.edges_[b];
        if (ea.src != eb.src) return ea.src < eb.src;
        if (ea.dst != eb.dst) return ea.dst < eb.dst;
        return a < b;
    });
    for (std::size_t i = 0; i < g.pair_list_.size(); ++i) {
        const auto& e = g.edges_[g.pair_list_[i]];
        if (g.pairs_.empty() || g.pairs_.back() != std::make_pair(e.src, e.dst)) {
            g.pairs_.emplace_back(e.src, e.dst);
            g.pair_off_.push_back(i);
        }
    }
    g.pair_off_.push_back(g.pair_list_.size());
    return g;
}

std::optional<NodeId> TemporalGraph::find_node(std::string_view label) const {
    auto it = ids_.find(std::string(label));
    if (it == ids_.end()) return std::nullopt;
    return it->second;
}

std::span<const EdgeIndex> TemporalGraph::out_edges(NodeId u) const {
    if (u >= node_count()) return {};
    return {out_list_.data() + out_off_[u], out_list_.data() + out_off_[u + 1]};
}

std::span<const EdgeIndex> TemporalGraph::in_edges(NodeId v) const {
    if (v >= node_count()) return {};
    return {in_list_.data() + in_off_[v], in_list_.data() + in_off_[v + 1]};
}

std::span<const EdgeIndex> TemporalGraph::pair_edges(NodeId u, NodeId v) const {
    const auto key = std::make_pair(u, v);
    auto it = std::lower_bound(pairs_.begin(), pairs_.end(), key);
    if (it == pairs_.end() || *it != key) return {};
    const auto slot = static_cast<std::size_t>(it - pairs_.begin());
    return {pair_list_.data() + pair_off_[slot], pair_list_.data() + pair_off_[slot + 1]};
}

std::span<const EdgeIndex> TemporalGraph::candidate_edges(const EdgeConstraint& c,
                                                          EdgeIndex min_index,
                                                          Timestamp max_time) const {
    std::span<const EdgeIndex> span;
    switch (c.kind) {
        case EdgeConstraint::Kind::kAny:
            span = all_list_;
            break;
        case EdgeConstraint::Kind::kFrom:
            span = out_edges(c.u);
            break;
        case EdgeConstraint::Kind::kInto:
            span = in_edges(c.v);
            break;
        case EdgeConstraint::Kind::kPair:
            span = pair_edges(c.u, c.v);
            break;
    }
    auto first = std::lower_bound(span.begin(), span.end(), min_index);
    // Time is non-decreasing along any index list, so the admissible window
    // is a contiguous slice.
    auto last = span.end();
    if (max_time != kTimeInfinity) {
        last = std::upper_bound(first, span.end(), max_time,
                                [this](Timestamp t, EdgeIndex i) { return t < edges_[i].time; });
    }
    return {first, last};
}

StaticGraph::StaticGraph(std::size_t node_count, std::vector<std::pair<NodeId, NodeId>> edges)
    : node_count_(node_count) {
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    edge_count_ = edges.size();

    succ_off_.assign(node_count_ + 1, 0);
    pred_off_.assign(node_count_ + 1, 0);
    for (const auto& [u, v] : edges) {
        succ_off_[u + 1]++;
        pred_off_[v + 1]++;
    }
    for (std::size_t n = 0; n < node_count_; ++n) {
        succ_off_[n + 1] += succ_off_[n];
        pred_off_[n + 1] += pred_off_[n];
    }
    succ_.resize(edges.size());
    pred_.resize(edges.size());
    std::vector<std::uint64_t> scur(succ_off_.begin(), succ_off_.end() - 1);
    std::vector<std::uint64_t> pcur(pred_off_.begin(), pred_off_.end() - 1);
    for (const auto& [u, v] : edges) succ_[scur[u]++] = v;
    for (const auto& [u, v] : edges) pred_[pcur[v]++] = u;
    // edges sorted by (u, v): successor lists come out ascending; predecessor
    // lists need a per-node sort.
    for (std::size_t n = 0; n < node_count_; ++n)
        std::sort(pred_.begin() + pred_off_[n], pred_.begin() + pred_off_[n + 1]);
}

std::span<const NodeId> StaticGraph::successors(NodeId u) const {
    if (u >= node_count_) return {};
    return {succ_.data() + succ_off_[u], succ_.data() + succ_off_[u + 1]};
}

std::span<const NodeId> StaticGraph::predecessors(NodeId v) const {
    if (v >= node_count_) return {};
    return {pred_.data() + pred_off_[v], pred_.data() + pred_off_[v + 1]};
}

bool StaticGraph::has_edge(NodeId u, NodeId v) const {
    auto s = successors(u);
    return std::binary_search(s.begin(), s.end(), v);
}

StaticGraph merge_parallel_edges(const TemporalGraph& g) {
    std::vector<std::pair<NodeId, NodeId>> pairs;
    pairs.reserve(g.edge_count());
    for (const auto& e : g.edges()) pairs.emplace_back(e.src, e.dst);
    return StaticGraph(g.node_count(), std::move(pairs));
}

}  // namespace tmatch
