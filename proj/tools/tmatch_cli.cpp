#include <CLI11.hpp>

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "tmatch/analytics.hpp"
#include "tmatch/edge_list.hpp"
#include "tmatch/engine.hpp"
#include "tmatch/motif.hpp"
#include "tmatch/static_match.hpp"
#include "tmatch/temporal_graph.hpp"

namespace {

using namespace tmatch;
using Clock = std::chrono::steady_clock;

int verbosity() {
    const char* env = std::getenv("TMATCH_LOG");
    if (!env) return 1;
    return std::atoi(env);
}

EdgeListFormat to_format(const std::string& name) {
    if (name.empty() || name == "auto") return EdgeListFormat::kAuto;
    if (name == "snap") return EdgeListFormat::kWhitespace;
    if (name == "csv") return EdgeListFormat::kCsv;
    throw std::invalid_argument("unknown edge list format `" + name + "` (snap|csv)");
}

TemporalGraph load_graph(const std::string& path, const std::string& format) {
    return load_dataset(path, to_format(format), verbosity() >= 1 ? &std::cerr : nullptr);
}

// `builtin:NAME`, a motif file path, or a bare builtin name.
Motif resolve_motif(const std::string& spec) {
    if (spec.rfind("builtin:", 0) == 0) return builtin_motif(spec.substr(8));
    if (std::filesystem::exists(spec)) {
        std::ifstream in(spec);
        std::ostringstream text;
        text << in.rdbuf();
        try {
            return parse_motif(text.str());
        } catch (const ParseError& e) {
            throw ParseError(spec + ": " + e.what());
        }
    }
    try {
        return builtin_motif(spec);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("`" + spec + "` is neither a motif file nor a builtin name");
    }
}

Timestamp require_duration(const std::string& text) {
    auto d = parse_duration(text);
    if (!d)
        throw std::invalid_argument("bad duration `" + text +
                                    "` (expected seconds, 1h/1d/1w forms, or inf)");
    return *d;
}

void warn_motif(const Motif& m) {
    if (verbosity() < 1) return;
    for (const auto& w : validate_motif(m)) std::cerr << "warning: " << w << '\n';
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char c : s) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    return quoted + "\"";
}

std::string node_map_cell(const TemporalGraph& g, const Motif& motif, const Match& m) {
    std::string out;
    for (std::size_t n = 0; n < motif.node_count(); ++n) {
        if (n) out += ' ';
        out += motif.node_label(static_cast<std::uint32_t>(n));
        out += '=';
        out += g.label(m.node_map[n]);
    }
    return out;
}

double seconds_between(Clock::time_point a, Clock::time_point b) {
    return std::chrono::duration<double>(b - a).count();
}

std::string format_seconds(double s) {
    std::ostringstream out;
    out.setf(std::ios::fixed);
    out.precision(6);
    out << s;
    return out.str();
}

std::string format_ratio(double r) {
    std::ostringstream out;
    out.precision(4);
    out << r;
    return out.str();
}

struct QueryArgs {
    std::string graph_path;
    std::string motif_spec;
    std::string delta_text;
    std::string format = "auto";
    std::uint64_t limit = 0;  // 0 = unlimited
    std::string out_path;
    std::string role;
    std::string target;
};

MatchQuery make_query(const Motif& motif, const QueryArgs& args) {
    MatchQuery q;
    q.motif = motif;
    q.delta = require_duration(args.delta_text);
    if (args.limit > 0) q.limit = args.limit;
    return q;
}

int cmd_match(const QueryArgs& args) {
    auto g = load_graph(args.graph_path, args.format);
    auto motif = resolve_motif(args.motif_spec);
    warn_motif(motif);
    auto q = make_query(motif, args);

    std::ofstream file;
    if (!args.out_path.empty()) {
        file.open(args.out_path);
        if (!file) throw std::runtime_error("cannot write `" + args.out_path + "`");
    }
    std::ostream& out = args.out_path.empty() ? std::cout : file;

    out << "match";
    for (std::size_t r = 1; r <= motif.edge_count(); ++r)
        out << ",e" << r << "_index,e" << r << "_src,e" << r << "_dst,e" << r << "_time";
    out << ",node_map,t_start,t_end\n";

    std::uint64_t match_id = 0;
    TemporalMatcher matcher(g, q);
    auto summary = matcher.run([&](const Match& m) {
        out << ++match_id;
        for (EdgeIndex e : m.edges) {
            const auto& ge = g.edge(e);
            out << ',' << e << ',' << csv_field(g.label(ge.src)) << ','
                << csv_field(g.label(ge.dst)) << ',' << ge.time;
        }
        out << ',' << csv_field(node_map_cell(g, motif, m)) << ',' << m.t_start << ',' << m.t_end
            << '\n';
    });
    std::cerr << "matches=" << summary.matches << " scanned=" << summary.edges_scanned
              << " truncated=" << (summary.truncated ? "true" : "false") << '\n';
    return 0;
}

int cmd_count(const QueryArgs& args) {
    auto g = load_graph(args.graph_path, args.format);
    auto motif = resolve_motif(args.motif_spec);
    warn_motif(motif);
    TemporalMatcher matcher(g, make_query(motif, args));
    auto summary = matcher.run([](const Match&) {});
    std::cout << summary.matches << '\n';
    if (summary.truncated) std::cerr << "truncated=true\n";
    return 0;
}

int cmd_rank(const QueryArgs& args) {
    auto g = load_graph(args.graph_path, args.format);
    auto motif = resolve_motif(args.motif_spec);
    warn_motif(motif);
    auto q = make_query(motif, args);
    std::optional<std::string> role;
    if (!args.role.empty()) role = args.role;
    auto counts = node_participation(g, q, role);
    std::optional<std::string> target;
    if (!args.target.empty()) target = args.target;
    auto table = rank_nodes(counts, g, target);

    std::cout << "label,count,rank\n";
    for (const auto& row : table.rows)
        std::cout << csv_field(row.label) << ',' << row.count << ',' << row.rank << '\n';
    if (target) {
        if (table.target_rank)
            std::cerr << "target: " << *table.target_rank << '\n';
        else
            std::cerr << "target: absent\n";
    }
    return 0;
}

struct BenchArgs {
    std::string graph_path;
    std::string motifs_text;
    std::string deltas_text;
    std::string format = "auto";
    std::string out_path;
    std::string plot_path;
    std::string time_cap_text;
    unsigned threads = 1;
};

struct TemporalCell {
    std::uint64_t count = 0;
    double seconds = 0.0;
};

struct StaticCell {
    std::uint64_t count = 0;
    double seconds = 0.0;
    bool capped = false;
};

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream iss(text);
    while (std::getline(iss, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

void run_tasks(std::vector<std::function<void()>>& tasks, unsigned threads) {
    if (threads <= 1) {
        for (auto& t : tasks) t();
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < threads; ++i)
        pool.emplace_back([&tasks, &next] {
            for (std::size_t k = next.fetch_add(1); k < tasks.size(); k = next.fetch_add(1))
                tasks[k]();
        });
    for (auto& t : pool) t.join();
}

int cmd_bench(const BenchArgs& args) {
    auto g = load_graph(args.graph_path, args.format);
    const std::string graph_name = std::filesystem::path(args.graph_path).stem().string();

    auto motif_names = split_list(args.motifs_text);
    auto delta_texts = split_list(args.deltas_text);
    if (motif_names.empty()) throw std::invalid_argument("--motifs is empty");
    if (delta_texts.empty()) throw std::invalid_argument("--deltas is empty");
    std::vector<Motif> motifs;
    for (const auto& name : motif_names) {
        motifs.push_back(resolve_motif(name));
        warn_motif(motifs.back());
    }
    std::vector<Timestamp> deltas;
    for (const auto& text : delta_texts) deltas.push_back(require_duration(text));

    StaticMatchOptions static_options;
    if (!args.time_cap_text.empty())
        static_options.time_cap = std::chrono::duration_cast<Clock::duration>(
            std::chrono::duration<double>(std::stod(args.time_cap_text)));

    // Search timings exclude loading and merging.
    const auto merged = merge_parallel_edges(g);
    std::vector<double> k_window(deltas.size());
    for (std::size_t d = 0; d < deltas.size(); ++d)
        k_window[d] = mean_edges_per_window(g, deltas[d]);

    // One discarded warm-up search before any timed cell.
    count_matches(g, {motifs.front(), deltas.front(), {}, true});

    std::vector<StaticCell> static_cells(motifs.size());
    std::vector<std::vector<TemporalCell>> temporal_cells(
        motifs.size(), std::vector<TemporalCell>(deltas.size()));
    std::vector<std::function<void()>> tasks;
    for (std::size_t mi = 0; mi < motifs.size(); ++mi) {
        tasks.push_back([&, mi] {
            const auto start = Clock::now();
            auto result =
                static_match(merged, motifs[mi], [](const StaticEmbedding&) {}, static_options);
            static_cells[mi] = {result.embeddings, seconds_between(start, Clock::now()),
                                result.capped};
        });
        for (std::size_t di = 0; di < deltas.size(); ++di) {
            tasks.push_back([&, mi, di] {
                MatchQuery q{motifs[mi], deltas[di], {}, true};
                const auto start = Clock::now();
                const auto count = count_matches(g, q);
                temporal_cells[mi][di] = {count, seconds_between(start, Clock::now())};
            });
        }
    }
    run_tasks(tasks, args.threads);

    std::ofstream file;
    if (!args.out_path.empty()) {
        file.open(args.out_path);
        if (!file) throw std::runtime_error("cannot write `" + args.out_path + "`");
    }
    std::ostream& out = args.out_path.empty() ? std::cout : file;

    std::ofstream plot;
    if (!args.plot_path.empty()) {
        plot.open(args.plot_path);
        if (!plot) throw std::runtime_error("cannot write `" + args.plot_path + "`");
        plot << "ratio,speedup\n";
    }

    out << "graph,motif,delta,temporal_count,temporal_sec,static_count,static_sec,speedup,"
           "k_window\n";
    for (std::size_t mi = 0; mi < motifs.size(); ++mi) {
        const auto& sc = static_cells[mi];
        for (std::size_t di = 0; di < deltas.size(); ++di) {
            const auto& tc = temporal_cells[mi][di];
            const double speedup = sc.seconds / tc.seconds;
            out << csv_field(graph_name) << ',' << csv_field(motif_names[mi]) << ','
                << format_duration(deltas[di]) << ',' << tc.count << ','
                << format_seconds(tc.seconds) << ',';
            if (sc.capped)
                out << "---,>" << format_seconds(sc.seconds) << ",>" << format_ratio(speedup);
            else
                out << sc.count << ',' << format_seconds(sc.seconds) << ','
                    << format_ratio(speedup);
            out << ',' << format_ratio(k_window[di]) << '\n';

            if (plot.is_open()) {
                if (!sc.capped && tc.count > 0 && sc.count > 0)
                    plot << format_ratio(static_cast<double>(sc.count) /
                                         static_cast<double>(tc.count))
                         << ',' << format_ratio(speedup) << '\n';
                else if (verbosity() >= 1)
                    std::cerr << "plot-data: skipping " << motif_names[mi] << " delta "
                              << format_duration(deltas[di]) << " (zero count or capped run)\n";
            }
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"temporal subgraph matching over time-stamped edge lists"};
    app.require_subcommand(1);

    QueryArgs query;
    BenchArgs bench;

    auto add_common = [&query](CLI::App* cmd) {
        cmd->add_option("--graph", query.graph_path, "temporal edge list file")->required();
        cmd->add_option("--motif", query.motif_spec, "motif file or builtin:NAME")->required();
        cmd->add_option("--delta", query.delta_text, "window length: seconds, 1h/1d/1w forms, or inf")
            ->required();
        cmd->add_option("--format", query.format, "edge list format: auto|snap|csv");
    };

    auto* match_cmd = app.add_subcommand("match", "enumerate matches as CSV");
    add_common(match_cmd);
    match_cmd->add_option("--limit", query.limit, "stop after N matches");
    match_cmd->add_option("--out", query.out_path, "write CSV here instead of stdout");

    auto* count_cmd = app.add_subcommand("count", "print the number of matches");
    add_common(count_cmd);
    count_cmd->add_option("--limit", query.limit, "stop after N matches");

    auto* rank_cmd = app.add_subcommand("rank", "rank nodes by match participation");
    add_common(rank_cmd);
    rank_cmd->add_option("--role", query.role,
                         "count only matches where the node plays this motif node");
    rank_cmd->add_option("--target", query.target, "report this node's rank on stderr");

    auto* bench_cmd = app.add_subcommand("bench", "compare against the static baseline");
    bench_cmd->add_option("--graph", bench.graph_path, "temporal edge list file")->required();
    bench_cmd->add_option("--motifs", bench.motifs_text, "comma-separated motif names/files")
        ->required();
    bench_cmd->add_option("--deltas", bench.deltas_text, "comma-separated window lengths")
        ->required();
    bench_cmd->add_option("--format", bench.format, "edge list format: auto|snap|csv");
    bench_cmd->add_option("--time-cap", bench.time_cap_text,
                          "seconds before a static search is cut off");
    bench_cmd->add_option("--out", bench.out_path, "write the report CSV here");
    bench_cmd->add_option("--plot-data", bench.plot_path,
                          "write (static/temporal ratio, speedup) pairs here");
    bench_cmd->add_option("--threads", bench.threads,
                          "run bench cells on this many threads (default 1)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (match_cmd->parsed()) return cmd_match(query);
        if (count_cmd->parsed()) return cmd_count(query);
        if (rank_cmd->parsed()) return cmd_rank(query);
        if (bench_cmd->parsed()) return cmd_bench(bench);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
