#include "tmatch/motif.hpp"

#include <algorithm>
#include <charconv>
#include <cctype>
#include <map>
#include <sstream>

namespace tmatch {

namespace {

std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream iss(line);
    std::string tok;
    while (iss >> tok) out.push_back(tok);
    return out;
}

template <typename T>
std::optional<T> parse_int(std::string_view s) {
    T value{};
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
    return value;
}

struct RawEdge {
    std::string src, dst;
    std::uint32_t rank;
    Attr attr;
    std::size_t line;
};

}  // namespace

std::optional<std::uint32_t> Motif::find_node(std::string_view label) const {
    for (std::uint32_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] == label) return i;
    return std::nullopt;
}

Motif parse_motif(std::string_view text) {
    std::string normalized(text);
    std::replace(normalized.begin(), normalized.end(), '/', '\n');

    std::vector<RawEdge> raw;
    std::map<std::string, Attr> node_attr_lines;
    std::istringstream stream(normalized);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(stream, line)) {
        ++lineno;
        if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
        auto toks = split_ws(line);
        if (toks.empty()) continue;
        if (toks[0] == "node") {
            if (toks.size() != 3) throw ParseError("node line needs `node <label> <attr>`", lineno);
            auto attr = parse_int<Attr>(toks[2]);
            if (!attr || *attr < 0) throw ParseError("node attribute must be a non-negative integer", lineno);
            node_attr_lines[toks[1]] = *attr;
            continue;
        }
        if (toks.size() < 3 || toks.size() > 4)
            throw ParseError("edge line needs `<src> <dst> <rank> [attr]`", lineno);
        auto rank = parse_int<std::uint32_t>(toks[2]);
        if (!rank || *rank == 0) throw ParseError("rank must be a positive integer", lineno);
        Attr attr = kNoAttr;
        if (toks.size() == 4) {
            auto a = parse_int<Attr>(toks[3]);
            if (!a || *a < 0) throw ParseError("edge attribute must be a non-negative integer", lineno);
            attr = *a;
        }
        raw.push_back({toks[0], toks[1], *rank, attr, lineno});
    }
    if (raw.empty()) throw ParseError("motif has no edges");

    std::sort(raw.begin(), raw.end(),
              [](const RawEdge& a, const RawEdge& b) { return a.rank < b.rank; });
    for (std::size_t i = 0; i < raw.size(); ++i) {
        if (i > 0 && raw[i].rank == raw[i - 1].rank)
            throw ParseError("duplicate rank " + std::to_string(raw[i].rank), raw[i].line);
        if (raw[i].rank != i + 1) throw ParseError("rank " + std::to_string(i + 1) + " missing");
    }

    Motif m;
    auto intern = [&m](const std::string& label) -> std::uint32_t {
        if (auto idx = m.find_node(label)) return *idx;
        m.labels_.push_back(label);
        m.node_attrs_.push_back(kNoAttr);
        return static_cast<std::uint32_t>(m.labels_.size() - 1);
    };
    for (const auto& r : raw)
        m.edges_.push_back({intern(r.src), intern(r.dst), r.attr});
    for (const auto& [label, attr] : node_attr_lines) {
        auto idx = m.find_node(label);
        if (!idx) throw ParseError("node attribute references unknown node `" + label + "`");
        m.node_attrs_[*idx] = attr;
    }
    return m;
}

std::string render_motif(const Motif& m) {
    std::ostringstream out;
    for (std::size_t r = 0; r < m.edge_count(); ++r) {
        const auto& e = m.edge(r);
        out << m.node_label(e.src) << ' ' << m.node_label(e.dst) << ' ' << r + 1;
        if (e.attr != kNoAttr) out << ' ' << e.attr;
        out << '\n';
    }
    for (std::uint32_t n = 0; n < m.node_count(); ++n)
        if (m.node_attr(n) != kNoAttr)
            out << "node " << m.node_label(n) << ' ' << m.node_attr(n) << '\n';
    return out.str();
}

namespace {

Motif sequential_motif(std::size_t k, bool close_cycle) {
    if (k < 1) throw std::invalid_argument("motif size must be >= 1");
    if (close_cycle && k < 2) throw std::invalid_argument("cycle needs k >= 2");
    auto label = [](std::size_t i) {
        if (i < 26) return std::string(1, static_cast<char>('a' + i));
        return "n" + std::to_string(i);
    };
    const std::size_t nodes = close_cycle ? k : k + 1;
    std::ostringstream text;
    for (std::size_t r = 0; r < k; ++r)
        text << label(r) << ' ' << label((r + 1) % nodes) << ' ' << r + 1 << '\n';
    return parse_motif(text.str());
}

}  // namespace

Motif builtin_motif(std::string_view name) {
    std::string key(name);
    std::transform(key.begin(), key.end(), key.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });

    if (key == "m1") return parse_motif("a b 1 / b c 2 / c d 3 / d a 4");
    if (key == "m2") return parse_motif("a b 1 / b c 2 / c d 3");
    if (key == "m3") return parse_motif("a b 1 / b c 2 / c d 3 / d b 4");
    if (key == "m4") return parse_motif("a b 1 / b c 2 / c a 3 / a d 4 / d c 5");
    if (key == "m5") return parse_motif("a b 1 / b c 2 / b d 3 / b e 4");
    if (key == "m6") return parse_motif("a b 1 / c b 2 / c d 3 / e d 4");
    // Logon, open, attach, send, logoff: emp->pc, pc->file, file->email,
    // pc->email, emp->pc again.
    if (key == "cert") return parse_motif("emp pc 1 / pc file 2 / file email 3 / pc email 4 / emp pc 5");

    for (std::string_view prefix : {"cycle", "path"}) {
        if (key.size() > prefix.size() && key.compare(0, prefix.size(), prefix) == 0) {
            std::string_view arg = std::string_view(key).substr(prefix.size());
            if (arg.front() == '(' && arg.back() == ')') arg = arg.substr(1, arg.size() - 2);
            auto k = parse_int<std::int64_t>(arg);
            if (!k || *k < 1)
                throw std::invalid_argument("bad motif size in `" + key + "`");
            return sequential_motif(static_cast<std::size_t>(*k), prefix == "cycle");
        }
    }
    throw std::invalid_argument("unknown builtin motif `" + std::string(name) +
                                "` (expected m1..m6, cert, cycle(k) or path(k))");
}

std::vector<std::string> validate_motif(const Motif& m) {
    std::vector<std::string> warnings;
    std::vector<bool> seen(m.node_count(), false);
    for (std::size_t r = 0; r < m.edge_count(); ++r) {
        const auto& e = m.edge(r);
        if (r > 0 && !seen[e.src] && !seen[e.dst])
            warnings.push_back("edge at rank " + std::to_string(r + 1) +
                               " shares no endpoint with earlier ranks; the matcher must scan "
                               "the full edge sequence at this rank");
        seen[e.src] = true;
        seen[e.dst] = true;
    }
    return warnings;
}

}  // namespace tmatch
