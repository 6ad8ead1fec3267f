#include "tmatch/types.hpp"

#include <charconv>

namespace tmatch {

std::optional<Timestamp> parse_duration(std::string_view text) {
    if (text.empty()) return std::nullopt;
    if (text == "inf") return kTimeInfinity;

    Timestamp multiplier = 1;
    switch (text.back()) {
        case 'h': multiplier = 3600; break;
        case 'd': multiplier = 86400; break;
        case 'w': multiplier = 604800; break;
        default: break;
    }
    if (multiplier != 1) text.remove_suffix(1);

    Timestamp value{};
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || value < 0) return std::nullopt;
    if (multiplier != 1 && value > kTimeInfinity / multiplier) return std::nullopt;
    return value * multiplier;
}

std::string format_duration(Timestamp delta) {
    if (delta == kTimeInfinity) return "inf";
    return std::to_string(delta);
}

}  // namespace tmatch
