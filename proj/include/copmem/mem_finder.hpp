#pragma once

#include <cstdint>
#include <vector>

#include "copmem/fasta_io.hpp"
#include "copmem/sampling_index.hpp"

namespace copmem {

// One maximal exact match, in per-sequence 0-based coordinates.
struct Mem {
    std::uint32_t ref_seq = 0;
    std::uint32_t ref_pos = 0;
    std::uint32_t query_seq = 0;
    std::uint32_t query_pos = 0;
    std::uint32_t length = 0;

    friend bool operator==(const Mem&, const Mem&) = default;
};

// Report order: (query_seq, query_pos, ref_seq, ref_pos, length).
bool report_less(const Mem& a, const Mem& b) noexcept;

struct FindStats {
    std::uint64_t query_probes = 0;           // clean sampled query k-mers looked up
    std::uint64_t hash_hits = 0;              // probes whose bucket was non-empty
    std::uint64_t verified_seeds = 0;         // probes with >= 1 byte-equal candidate
    std::uint64_t extensions = 0;             // seed extensions performed
    std::uint64_t candidates = 0;             // extensions that reached min length
    std::uint64_t duplicates_suppressed = 0;  // candidates merged away
    double scan_seconds = 0.0;
    double dedupe_seconds = 0.0;
};

struct MatchReport {
    std::vector<Mem> mems;  // deduplicated, in report order
    FindStats stats;
};

struct SeedExtension {
    std::uint64_t ref_start = 0;    // global
    std::uint64_t query_start = 0;  // global
    std::uint64_t length = 0;
};

// Grows a byte-verified seed to its maximal span: one byte at a time in each
// direction while both sides stay inside their sequence records, bytes are
// equal and residue-clean. Length filtering is the caller's job.
SeedExtension extend_seed(const SequenceSet& reference, const SequenceSet& query,
                          std::uint64_t ref_pos, std::uint64_t query_pos,
                          std::uint32_t kmer_len);

// One representative per distinct match, in report order.
std::vector<Mem> dedupe_and_sort(std::vector<Mem> candidates);

// Scans the query with stride k2, verifies bucket candidates, extends, and
// reports every maximal exact match of length >= L. The coprime stride pair
// guarantees no such match can be missed.
MatchReport find_mems(const SequenceSet& reference, const SequenceSet& query,
                      const SeedIndex& index, const MatchParams& params);

}  // namespace copmem
