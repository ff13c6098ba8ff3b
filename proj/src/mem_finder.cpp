#include "copmem/mem_finder.hpp"

#include <algorithm>
#include <cassert>
#include <chrono>
#include <cstring>
#include <tuple>

namespace copmem {

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

bool report_less(const Mem& a, const Mem& b) noexcept {
    return std::tie(a.query_seq, a.query_pos, a.ref_seq, a.ref_pos, a.length) <
           std::tie(b.query_seq, b.query_pos, b.ref_seq, b.ref_pos, b.length);
}

SeedExtension extend_seed(const SequenceSet& reference, const SequenceSet& query,
                          std::uint64_t ref_pos, std::uint64_t query_pos,
                          std::uint32_t kmer_len) {
    const char* r = reference.data();
    const char* q = query.data();

    const auto& ref_rec = reference.records()[reference.find_record(ref_pos)];
    const auto& query_rec = query.records()[query.find_record(query_pos)];
    const std::uint64_t r_lo = ref_rec.global_start;
    const std::uint64_t r_hi = ref_rec.global_start + ref_rec.length;
    const std::uint64_t q_lo = query_rec.global_start;
    const std::uint64_t q_hi = query_rec.global_start + query_rec.length;

    assert(ref_pos + kmer_len <= r_hi && query_pos + kmer_len <= q_hi);
    assert(std::memcmp(r + ref_pos, q + query_pos, kmer_len) == 0);

    std::uint64_t r_start = ref_pos;
    std::uint64_t q_start = query_pos;
    while (r_start > r_lo && q_start > q_lo) {
        const char c = r[r_start - 1];
        if (c != q[q_start - 1] || !is_residue(c)) break;
        --r_start;
        --q_start;
    }

    std::uint64_t r_end = ref_pos + kmer_len;
    std::uint64_t q_end = query_pos + kmer_len;
    while (r_end < r_hi && q_end < q_hi) {
        const char c = r[r_end];
        if (c != q[q_end] || !is_residue(c)) break;
        ++r_end;
        ++q_end;
    }
    return {r_start, q_start, r_end - r_start};
}

std::vector<Mem> dedupe_and_sort(std::vector<Mem> candidates) {
    std::sort(candidates.begin(), candidates.end(), report_less);
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    return candidates;
}

MatchReport find_mems(const SequenceSet& reference, const SequenceSet& query,
                      const SeedIndex& index, const MatchParams& params) {
    if (!(params == index.params()))
        throw ArgumentError("match parameters differ from the ones the index was built with");
    if (query.total_length() >= (1ull << 32))
        throw ResourceError("query exceeds the 32-bit position limit");

    MatchReport report;
    const std::uint32_t kmer_len = params.kmer_length;
    const std::uint32_t min_len = params.min_mem_length;
    const char* ref_bytes = reference.data();

    const auto scan_start = std::chrono::steady_clock::now();
    std::vector<Mem> raw;
    for_each_sampled_kmer(
        query, kmer_len, params.query_stride, [&](std::uint64_t q_pos, std::string_view kmer) {
            ++report.stats.query_probes;
            const auto bucket = index.lookup(kmer);
            if (bucket.empty()) return;
            ++report.stats.hash_hits;
            bool verified = false;
            for (const std::uint32_t r_pos : bucket) {
                if (std::memcmp(ref_bytes + r_pos, kmer.data(), kmer_len) != 0) continue;
                verified = true;
                ++report.stats.extensions;
                const SeedExtension ext = extend_seed(reference, query, r_pos, q_pos, kmer_len);
                if (ext.length < min_len) continue;
                ++report.stats.candidates;
                const auto [ref_seq, ref_local] = reference.translate(ext.ref_start);
                const auto [query_seq, query_local] = query.translate(ext.query_start);
                raw.push_back({ref_seq, static_cast<std::uint32_t>(ref_local), query_seq,
                               static_cast<std::uint32_t>(query_local),
                               static_cast<std::uint32_t>(ext.length)});
            }
            if (verified) ++report.stats.verified_seeds;
        });
    report.stats.scan_seconds = seconds_since(scan_start);

    const auto dedupe_start = std::chrono::steady_clock::now();
    const std::size_t before = raw.size();
    report.mems = dedupe_and_sort(std::move(raw));
    report.stats.duplicates_suppressed = before - report.mems.size();
    report.stats.dedupe_seconds = seconds_since(dedupe_start);
    return report;
}

}  // namespace copmem
