#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tmatch/types.hpp"

namespace tmatch {

// Query graph whose edges carry a strict total chronological order. Edge
// "timestamps" are pure ranks 1..m; the window length delta is a query
// parameter, not part of the motif. Parallel edges (same ordered pair at
// different ranks) are allowed. Immutable once parsed.
class Motif {
public:
    struct Edge {
        std::uint32_t src = 0;  // motif node index
        std::uint32_t dst = 0;
        Attr attr = kNoAttr;

        bool operator==(const Edge&) const = default;
    };

    std::size_t node_count() const { return labels_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

    // Edges in rank order: edges()[r-1] is the edge at rank r.
    std::span<const Edge> edges() const { return edges_; }
    const Edge& edge(std::size_t rank0) const { return edges_[rank0]; }

    const std::string& node_label(std::uint32_t n) const { return labels_[n]; }
    std::optional<std::uint32_t> find_node(std::string_view label) const;
    Attr node_attr(std::uint32_t n) const { return node_attrs_[n]; }

    bool operator==(const Motif& other) const = default;

    friend Motif parse_motif(std::string_view text);

private:
    std::vector<std::string> labels_;  // index order: first appearance by rank
    std::vector<Attr> node_attrs_;
    std::vector<Edge> edges_;
};

// Motif text: one edge per line, `<src> <dst> <rank> [edge_attr]`; optional
// node attribute lines `node <label> <attr>`; `#` comments. A `/` works as a
// line separator so small motifs can be written inline:
// "a b 1 / b c 2 / c a 3". Ranks must form exactly 1..m.
Motif parse_motif(std::string_view text);

// Inverse of parse_motif (stable node order, one edge per line).
std::string render_motif(const Motif& m);

// Builtin query shapes by name: m1..m6 (the fixed 4- and 5-node patterns),
// cert (the 5-edge logon/open/attach/send/logoff pattern), cycle(k) and
// path(k) sequential generalizations. cycleK/pathK also accepted.
Motif builtin_motif(std::string_view name);

// Non-fatal lint: flags every rank whose edge shares no endpoint with any
// earlier-ranked edge. Such ranks force an unconstrained full-sequence scan
// in the matcher and usually indicate a motif authoring mistake.
std::vector<std::string> validate_motif(const Motif& m);

}  // namespace tmatch
