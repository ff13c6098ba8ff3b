#include "copmem/cli.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <vector>

#include <CLI11.hpp>

#include "copmem/oracle.hpp"
#include "copmem/sampling_index.hpp"

namespace copmem {

namespace {

constexpr std::uint64_t kMaxInputBytes = 1ull << 32;  // 32-bit position width

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void print_seconds(std::ostream& os, const char* phase, double seconds) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%s\t%.3f\n", phase, seconds);
    os << buf;
}

void print_count(std::ostream& os, const char* name, std::uint64_t value) {
    os << name << '\t' << value << '\n';
}

void check_input_file(const std::filesystem::path& path) {
    std::error_code ec;
    if (!std::filesystem::exists(path, ec) || ec)
        throw Error("cannot read input file: " + path.string());
    const auto size = std::filesystem::file_size(path, ec);
    if (ec) throw Error("cannot read input file: " + path.string());
    if (size >= kMaxInputBytes)
        throw ResourceError("input file too large for 32-bit positions: " + path.string());
}

}  // namespace

std::optional<int> parse_cli(int argc, const char* const* argv, CliConfig& cfg) {
    CLI::App app{"Find all maximal exact matches between two multi-FASTA genomes", "copmem"};
    app.add_option("reference", cfg.ref_path, "reference genome (multi-FASTA), gets indexed")
        ->required();
    app.add_option("query", cfg.query_path, "query genome (multi-FASTA), gets scanned")
        ->required();
    app.add_option("-o,--output", cfg.output_path, "output file for the MEM list")->required();
    app.add_option("-l,--min-length", cfg.min_length, "minimum MEM length")
        ->capture_default_str();
    app.add_option("--kmer", cfg.kmer, "seed length")->capture_default_str();
    app.add_option("--hash-bits", cfg.hash_bits, "hash table width in bits")
        ->check(CLI::Range(1, 32))
        ->capture_default_str();
    app.add_flag("-v,--verbose", cfg.verbose, "print per-phase timings and counters");
    // Undocumented: run the quadratic reference scan instead of the sampled
    // pipeline, for differential testing from the shell.
    app.add_flag("--oracle", cfg.use_oracle)->group("");
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }
    return std::nullopt;
}

std::uint64_t write_report(const MatchReport& report, std::span<const std::string> query_names,
                           std::span<const std::string> ref_names, std::ostream& os) {
    std::uint64_t bytes = 0;
    std::string line;
    const auto& mems = report.mems;
    std::size_t i = 0;
    while (i < mems.size()) {
        const std::uint32_t query_seq = mems[i].query_seq;
        line.assign("> ");
        line += query_names[query_seq];
        line += '\n';
        os.write(line.data(), static_cast<std::streamsize>(line.size()));
        bytes += line.size();
        for (; i < mems.size() && mems[i].query_seq == query_seq; ++i) {
            const Mem& m = mems[i];
            line.assign("  ");
            line += ref_names[m.ref_seq];
            line += ' ';
            line += std::to_string(m.ref_pos + 1);
            line += ' ';
            line += std::to_string(m.query_pos + 1);
            line += ' ';
            line += std::to_string(m.length);
            line += '\n';
            os.write(line.data(), static_cast<std::streamsize>(line.size()));
            bytes += line.size();
        }
    }
    if (!os) throw Error("failed writing report");
    return bytes;
}

int run(const CliConfig& cfg, std::ostream& out, std::ostream& err, MatchReport* report_out) {
    try {
        if (cfg.hash_bits < 1 || cfg.hash_bits > 32)
            throw ArgumentError("hash width must be in [1, 32]");
        if (cfg.kmer > cfg.min_length)
            throw ArgumentError("kmer length exceeds minimum MEM length");
        check_input_file(cfg.ref_path);
        check_input_file(cfg.query_path);

        std::ofstream out_file(cfg.output_path, std::ios::binary);
        if (!out_file) throw Error("cannot write output file: " + cfg.output_path.string());

        const auto total_start = std::chrono::steady_clock::now();
        const SequenceSet reference = load_fasta(cfg.ref_path);
        const SequenceSet query = load_fasta(cfg.query_path);
        const double load_seconds = seconds_since(total_start);

        const MatchParams params = select_params(cfg.min_length, cfg.kmer, cfg.hash_bits);

        MatchReport report;
        double index_seconds = 0.0;
        std::vector<std::pair<std::uint32_t, std::uint64_t>> histogram;
        if (cfg.use_oracle) {
            report.mems = oracle::brute_force_mems(reference, query, cfg.min_length);
        } else {
            const auto index_start = std::chrono::steady_clock::now();
            const SeedIndex index = build_index(reference, params);
            index_seconds = seconds_since(index_start);
            report = find_mems(reference, query, index, params);
            if (cfg.verbose) histogram = index.occupancy_histogram();
        }

        const auto write_start = std::chrono::steady_clock::now();
        const std::vector<std::string> query_names = query.names();
        const std::vector<std::string> ref_names = reference.names();
        write_report(report, query_names, ref_names, out_file);
        out_file.close();
        if (!out_file) throw Error("failed writing output file: " + cfg.output_path.string());
        const double write_seconds = seconds_since(write_start);

        if (cfg.verbose) {
            print_count(out, "min_length", params.min_mem_length);
            print_count(out, "kmer", params.kmer_length);
            print_count(out, "k1", params.ref_stride);
            print_count(out, "k2", params.query_stride);
            print_count(out, "hash_bits", params.hash_bits);
            print_count(out, "probes", report.stats.query_probes);
            print_count(out, "hash_hits", report.stats.hash_hits);
            print_count(out, "verified_seeds", report.stats.verified_seeds);
            print_count(out, "extensions", report.stats.extensions);
            print_count(out, "candidates", report.stats.candidates);
            print_count(out, "duplicates_suppressed", report.stats.duplicates_suppressed);
            print_seconds(out, "load", load_seconds);
            print_seconds(out, "index", index_seconds);
            print_seconds(out, "scan", report.stats.scan_seconds);
            print_seconds(out, "dedupe", report.stats.dedupe_seconds);
            print_seconds(out, "write", write_seconds);
            if (!histogram.empty()) {
                out << "# slot occupancy histogram\n";
                for (const auto& [occupancy, slots] : histogram)
                    out << occupancy << '\t' << slots << '\n';
            }
        }
        print_count(out, "mems", report.mems.size());
        print_seconds(out, "total", seconds_since(total_start));

        if (report_out) *report_out = std::move(report);
        return 0;
    } catch (const std::exception& e) {
        err << "copmem: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace copmem
