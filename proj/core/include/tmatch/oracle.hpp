#pragma once

#include <vector>

#include "tmatch/engine.hpp"
#include "tmatch/motif.hpp"
#include "tmatch/temporal_graph.hpp"

namespace tmatch {

// Ground-truth enumerator for small instances: walks every strictly ascending
// |E_M|-tuple of edge indices (pruning only on the sorted-time window and on
// mapping consistency, which no valid extension can repair) and keeps the
// tuples whose span fits delta, whose rank-by-rank node assignment is a
// consistent injective mapping, and whose attributes agree. Shares only the
// graph and motif types with the search engine — none of its candidate
// narrowing or stack bookkeeping — so the two can check each other.
//
// Refuses instances beyond the brute-force budget (|E_G| <= 500, |E_M| <= 6)
// by throwing std::invalid_argument with the offending sizes.
std::vector<Match> brute_force_temporal_match(const TemporalGraph& g, const MatchQuery& query);

}  // namespace tmatch
