#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "tmatch/types.hpp"

namespace tmatch {

// One timestamped directed edge. Its index in the graph is its position in
// the globally sorted edge sequence (ascending index implies non-decreasing time).
struct TemporalEdge {
    NodeId src = 0;
    NodeId dst = 0;
    Timestamp time = 0;
    Attr attr = kNoAttr;
};

// Ingestion record: labelled endpoints, not yet interned.
struct EdgeTriple {
    std::string src;
    std::string dst;
    Timestamp time = 0;
    Attr attr = kNoAttr;
};

// Structural filter for candidate_edges.
struct EdgeConstraint {
    enum class Kind { kAny, kFrom, kInto, kPair };

    Kind kind = Kind::kAny;
    NodeId u = 0;
    NodeId v = 0;

    static EdgeConstraint any() { return {}; }
    static EdgeConstraint from(NodeId u) { return {Kind::kFrom, u, 0}; }
    static EdgeConstraint into(NodeId v) { return {Kind::kInto, 0, v}; }
    static EdgeConstraint pair(NodeId u, NodeId v) { return {Kind::kPair, u, v}; }
};

// Directed graph with parallel edges collapsed; shares the node id space of
// the temporal graph it was merged from.
class StaticGraph {
public:
    StaticGraph() = default;
    StaticGraph(std::size_t node_count, std::vector<std::pair<NodeId, NodeId>> edges);

    std::size_t node_count() const { return node_count_; }
    std::size_t edge_count() const { return edge_count_; }

    std::span<const NodeId> successors(NodeId u) const;
    std::span<const NodeId> predecessors(NodeId v) const;
    bool has_edge(NodeId u, NodeId v) const;

private:
    std::size_t node_count_ = 0;
    std::size_t edge_count_ = 0;
    std::vector<NodeId> succ_;
    std::vector<std::uint64_t> succ_off_;
    std::vector<NodeId> pred_;
    std::vector<std::uint64_t> pred_off_;
};

// Immutable temporal multi-digraph. Edges are stably sorted by timestamp and
// indexed three ways (per source, per destination, per ordered pair) so the
// matcher can narrow candidates without scanning the whole sequence. Safe to
// share across threads once built.
class TemporalGraph {
public:
    TemporalGraph() = default;

    std::size_t node_count() const { return labels_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

    const TemporalEdge& edge(EdgeIndex i) const { return edges_[i]; }
    std::span<const TemporalEdge> edges() const { return edges_; }

    const std::string& label(NodeId n) const { return labels_[n]; }
    std::optional<NodeId> find_node(std::string_view label) const;

    Attr node_attr(NodeId n) const { return node_attrs_[n]; }
    void set_node_attr(NodeId n, Attr a) { node_attrs_[n] = a; }

    std::span<const EdgeIndex> out_edges(NodeId u) const;
    std::span<const EdgeIndex> in_edges(NodeId v) const;
    std::span<const EdgeIndex> pair_edges(NodeId u, NodeId v) const;

    // Edge indices satisfying the constraint, index >= min_index and
    // time <= max_time, ascending. Both ends located by binary search.
    std::span<const EdgeIndex> candidate_edges(const EdgeConstraint& c, EdgeIndex min_index,
                                               Timestamp max_time) const;

    Timestamp min_time() const { return edges_.empty() ? 0 : edges_.front().time; }
    Timestamp max_time() const { return edges_.empty() ? 0 : edges_.back().time; }

    friend TemporalGraph build_graph(std::vector<EdgeTriple> triples);

private:
    std::vector<TemporalEdge> edges_;
    std::vector<std::string> labels_;
    std::unordered_map<std::string, NodeId> ids_;
    std::vector<Attr> node_attrs_;

    std::vector<EdgeIndex> all_list_;
    std::vector<EdgeIndex> out_list_;
    std::vector<std::uint64_t> out_off_;
    std::vector<EdgeIndex> in_list_;
    std::vector<std::uint64_t> in_off_;

    std::vector<std::pair<NodeId, NodeId>> pairs_;
    std::vector<EdgeIndex> pair_list_;
    std::vector<std::uint64_t> pair_off_;
};

// Interns labels to dense ids, stably sorts edges by time (equal times keep
// input order) and builds all index structures.
TemporalGraph build_graph(std::vector<EdgeTriple> triples);

// Collapses parallel temporal edges: one static edge per ordered pair that
// has at least one temporal edge.
StaticGraph merge_parallel_edges(const TemporalGraph& g);

}  // namespace tmatch
