#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "copmem/fasta_io.hpp"

namespace copmem {

// All numeric knobs of one matching run.
struct MatchParams {
    std::uint32_t min_mem_length = 100;  // L
    std::uint32_t kmer_length = 44;      // K
    std::uint32_t ref_stride = 0;        // k1
    std::uint32_t query_stride = 0;      // k2
    std::uint32_t hash_bits = 29;        // H

    friend bool operator==(const MatchParams&, const MatchParams&) = default;
};

// Picks coprime strides for a given minimum match length: the largest k1
// with k1 * (k1 - 1) <= L - K + 1 and k2 = k1 - 1. When L - K + 1 == 1 the
// strides degenerate to (1, 1). The literal ceil-sqrt rule can overshoot its
// own product bound (L = 300, K = 44 gives 17 * 16 > 257), so the bound is
// what we maximize against.
MatchParams select_params(std::uint32_t min_mem_length, std::uint32_t kmer_length = 44,
                          std::uint32_t hash_bits = 29);

// Hash functions are pluggable; results only steer bucket placement, never
// which matches are reported.
using KmerHashFn = std::uint64_t (*)(const char* data, std::size_t len) noexcept;

std::uint64_t mix_hash64(const char* data, std::size_t len) noexcept;
std::uint64_t fnv1a_hash64(const char* data, std::size_t len) noexcept;

inline constexpr KmerHashFn kDefaultHash = mix_hash64;

// Named lookup for the bindings and tools: "mix" or "fnv1a".
KmerHashFn hash_function(std::string_view name);

// Slot in [0, 2^hash_bits) for a residue-clean k-mer.
inline std::uint32_t hash_kmer(std::string_view kmer, std::uint32_t hash_bits,
                               KmerHashFn hash = kDefaultHash) {
    return static_cast<std::uint32_t>(hash(kmer.data(), kmer.size()) >> (64 - hash_bits));
}

// Visits every sampled k-mer window: start positions congruent to 0 modulo
// `stride` (global phase 0), lying fully inside one sequence record, free of
// non-residue bytes. Windows are visited in increasing start order; each
// buffer byte is classified at most once per call.
template <typename F>
void for_each_sampled_kmer(const SequenceSet& set, std::uint32_t kmer_len, std::uint32_t stride,
                           F&& visit) {
    const char* s = set.data();
    for (const auto& rec : set.records()) {
        if (rec.length < kmer_len) continue;
        const std::uint64_t last = rec.global_start + rec.length - kmer_len;  // inclusive
        std::uint64_t p = (rec.global_start + stride - 1) / stride * stride;
        if (p > last) continue;
        std::uint64_t scanned = p;    // next byte to classify
        std::uint64_t dirty_end = p;  // one past the latest non-residue byte seen
        for (; p <= last; p += stride) {
            const std::uint64_t end = p + kmer_len;
            if (scanned < p) scanned = p;  // stride > kmer_len skips bytes
            for (; scanned < end; ++scanned) {
                if (!is_residue(s[scanned])) dirty_end = scanned + 1;
            }
            if (dirty_end <= p) visit(p, std::string_view(s + p, kmer_len));
        }
    }
}

// Flat two-array hash index over the sampled reference k-mers: offsets holds
// 2^H + 1 prefix sums, positions the sampled start positions grouped by
// slot. Built by two counting-sort passes; no per-insertion allocation.
class SeedIndex {
public:
    SeedIndex() = default;
    SeedIndex(const SeedIndex&) = delete;
    SeedIndex& operator=(const SeedIndex&) = delete;
    SeedIndex(SeedIndex&&) = default;
    SeedIndex& operator=(SeedIndex&&) = default;

    // Bucket candidates for a residue-clean k-mer. May contain hash
    // collisions; callers must verify byte equality before extending.
    std::span<const std::uint32_t> lookup(std::string_view kmer) const {
        const std::uint32_t slot = hash_kmer(kmer, params_.hash_bits, hash_);
        return {positions_.data() + offsets_[slot], positions_.data() + offsets_[slot + 1]};
    }

    const std::vector<std::uint32_t>& offsets() const noexcept { return offsets_; }
    const std::vector<std::uint32_t>& positions() const noexcept { return positions_; }
    const MatchParams& params() const noexcept { return params_; }
    KmerHashFn hash_fn() const noexcept { return hash_; }

    // (2^H + 1) offsets plus one entry per sampled position; each entry is
    // 4 bytes wide.
    std::uint64_t entry_count() const noexcept { return offsets_.size() + positions_.size(); }

    // (slot occupancy, number of slots with that occupancy), ascending.
    std::vector<std::pair<std::uint32_t, std::uint64_t>> occupancy_histogram() const;

private:
    friend SeedIndex build_index(const SequenceSet&, const MatchParams&, KmerHashFn);

    std::vector<std::uint32_t> offsets_;
    std::vector<std::uint32_t> positions_;
    MatchParams params_{};
    KmerHashFn hash_ = kDefaultHash;
};

SeedIndex build_index(const SequenceSet& reference, const MatchParams& params,
                      KmerHashFn hash = kDefaultHash);

}  // namespace copmem
