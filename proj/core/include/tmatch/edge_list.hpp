#pragma once

#include <filesystem>
#include <iosfwd>
#include <vector>

#include "tmatch/temporal_graph.hpp"
#include "tmatch/types.hpp"

namespace tmatch {

// Input conventions for temporal edge lists.
//   kWhitespace: `<src> <dst> <unix_time>` per line; a 4th numeric column is
//                read as `<src> <dst> <weight> <unix_time>` (KONECT layout,
//                weight ignored); `#` and `%` start comments.
//   kCsv:        same columns, comma-delimited, optional `src,dst,time` header.
//   kAuto:       whitespace unless the first data line contains a comma.
enum class EdgeListFormat { kAuto, kWhitespace, kCsv };

// One triple per non-comment, non-blank line. Throws ParseError (with the
// 1-based line number) on short lines or non-integer times. An empty stream
// yields an empty sequence.
std::vector<EdgeTriple> parse_edge_list(std::istream& in, EdgeListFormat format = EdgeListFormat::kAuto);

// parse_edge_list + build_graph. `log`, when given, receives one line with the
// node/edge counts after loading.
TemporalGraph load_dataset(const std::filesystem::path& path,
                           EdgeListFormat format = EdgeListFormat::kAuto,
                           std::ostream* log = nullptr);

// Canonical whitespace form, one `<src> <dst> <time>` line per edge in index
// order. Re-parsing the output reproduces the same edge sequence.
void write_edge_list(const TemporalGraph& g, std::ostream& out);

}  // namespace tmatch
