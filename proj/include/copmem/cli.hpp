#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>

#include "copmem/mem_finder.hpp"

namespace copmem {

struct CliConfig {
    std::filesystem::path ref_path;     // first positional: the indexed genome
    std::filesystem::path query_path;   // second positional: the scanned genome
    std::filesystem::path output_path;  // -o
    std::uint32_t min_length = 100;     // -l
    std::uint32_t kmer = 44;            // --kmer
    std::uint32_t hash_bits = 29;       // --hash-bits
    bool verbose = false;               // -v
    bool use_oracle = false;            // hidden --oracle: brute-force path for cross-checks
};

// Fills cfg from argv. Returns an exit code when parsing already settled the
// process outcome (--help, usage errors), nothing when the run should proceed.
std::optional<int> parse_cli(int argc, const char* const* argv, CliConfig& cfg);

// Writes the report grouped by query sequence:
//   "> " name
//   "  " ref_name SP ref_pos SP query_pos SP length      (1-based positions)
// Query sequences without matches emit no header. Returns bytes written.
std::uint64_t write_report(const MatchReport& report, std::span<const std::string> query_names,
                           std::span<const std::string> ref_names, std::ostream& os);

// load -> select_params -> build_index -> find_mems -> write, with timing on
// `out` and one-line diagnostics on `err`. Returns the process exit code.
// The final report is copied to `report_out` when non-null.
int run(const CliConfig& cfg, std::ostream& out, std::ostream& err,
        MatchReport* report_out = nullptr);

}  // namespace copmem
