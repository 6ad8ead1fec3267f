#include "tmatch/edge_list.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

namespace tmatch {

namespace {

bool is_comment_or_blank(const std::string& line) {
    for (char c : line) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        return c == '#' || c == '%';
    }
    return true;
}

std::vector<std::string> split(const std::string& line, bool csv) {
    std::vector<std::string> out;
    if (csv) {
        std::string field;
        std::istringstream iss(line);
        while (std::getline(iss, field, ',')) {
            // trim surrounding whitespace
            auto b = field.find_first_not_of(" \t\r");
            auto e = field.find_last_not_of(" \t\r");
            out.push_back(b == std::string::npos ? "" : field.substr(b, e - b + 1));
        }
    } else {
        std::istringstream iss(line);
        std::string tok;
        while (iss >> tok) out.push_back(tok);
    }
    return out;
}

std::optional<Timestamp> parse_time(const std::string& s) {
    Timestamp value{};
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
    return value;
}

bool looks_like_header(const std::vector<std::string>& cols) {
    if (cols.size() < 3) return false;
    auto lower = [](std::string s) {
        std::transform(s.begin(), s.end(), s.begin(),
                       [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
        return s;
    };
    return lower(cols[0]) == "src" && lower(cols[1]) == "dst" && lower(cols[2]) == "time";
}

}  // namespace

std::vector<EdgeTriple> parse_edge_list(std::istream& in, EdgeListFormat format) {
    std::vector<EdgeTriple> triples;
    std::string line;
    std::size_t lineno = 0;
    bool format_decided = format != EdgeListFormat::kAuto;
    bool csv = format == EdgeListFormat::kCsv;
    bool first_data_line = true;

    while (std::getline(in, line)) {
        ++lineno;
        if (is_comment_or_blank(line)) continue;
        if (!format_decided) {
            csv = line.find(',') != std::string::npos;
            format_decided = true;
        }
        auto cols = split(line, csv);
        if (first_data_line) {
            first_data_line = false;
            if (csv && looks_like_header(cols)) continue;
        }
        if (cols.size() < 3)
            throw ParseError("expected at least 3 columns (<src> <dst> <time>), got " +
                                 std::to_string(cols.size()),
                             lineno);
        // 3 columns: src dst time. 4+ with a numeric 4th: KONECT src dst
        // weight time (weight ignored). Anything after that is ignored.
        std::optional<Timestamp> time;
        if (cols.size() >= 4) time = parse_time(cols[3]);
        if (!time) time = parse_time(cols[2]);
        if (!time)
            throw ParseError("non-integer time field `" + cols[2] + "`", lineno);
        triples.push_back({cols[0], cols[1], *time, kNoAttr});
    }
    return triples;
}

TemporalGraph load_dataset(const std::filesystem::path& path, EdgeListFormat format,
                           std::ostream* log) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open `" + path.string() + "`");
    TemporalGraph g;
    try {
        g = build_graph(parse_edge_list(in, format));
    } catch (const ParseError& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
    if (log)
        *log << path.filename().string() << ": " << g.node_count() << " nodes, " << g.edge_count()
             << " temporal edges\n";
    return g;
}

void write_edge_list(const TemporalGraph& g, std::ostream& out) {
    for (const auto& e : g.edges())
        out << g.label(e.src) << ' ' << g.label(e.dst) << ' ' << e.time << '\n';
}

}  // namespace tmatch
