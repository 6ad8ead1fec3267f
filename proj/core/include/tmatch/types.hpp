#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace tmatch {

// Dense node id, assigned at ingestion. Original labels live in a side table.
using NodeId = std::uint32_t;

// Position in the globally time-sorted edge sequence.
using EdgeIndex = std::uint32_t;

// Timestamps are 64-bit integers (unix seconds or abstract ticks).
using Timestamp = std::int64_t;

inline constexpr Timestamp kTimeInfinity = std::numeric_limits<Timestamp>::max();

// Optional integer attribute on nodes and edges. Attributes are non-negative
// when present; kNoAttr marks "absent" (an absent query attribute matches anything).
using Attr = std::int32_t;
inline constexpr Attr kNoAttr = -1;

// t + delta with saturation at kTimeInfinity.
inline Timestamp saturating_add(Timestamp t, Timestamp delta) {
    if (delta >= kTimeInfinity - t) return kTimeInfinity;
    return t + delta;
}

// Raised for malformed input text (edge lists, motif files). Carries the
// 1-based line number when known (0 otherwise).
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& msg, std::size_t line = 0)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + msg : msg),
          line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// Parses a non-negative duration in seconds. Accepts a bare integer and the
// suffixed forms "Nh", "Nd", "Nw", plus "inf" for an unbounded window.
std::optional<Timestamp> parse_duration(std::string_view text);

// Renders a duration the way parse_duration reads it ("inf" for unbounded).
std::string format_duration(Timestamp delta);

}  // namespace tmatch
