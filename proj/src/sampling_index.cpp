#include "copmem/sampling_index.hpp"

#include <bit>
#include <cmath>
#include <cstring>
#include <map>
#include <new>

namespace copmem {

MatchParams select_params(std::uint32_t min_mem_length, std::uint32_t kmer_length,
                          std::uint32_t hash_bits) {
    if (min_mem_length == 0 || kmer_length == 0)
        throw ArgumentError("match lengths must be positive");
    if (kmer_length > min_mem_length)
        throw ArgumentError("kmer length exceeds minimum MEM length");
    if (hash_bits < 1 || hash_bits > 32)
        throw ArgumentError("hash width must be in [1, 32]");

    const std::uint64_t n = static_cast<std::uint64_t>(min_mem_length) - kmer_length + 1;
    std::uint32_t k1 = 1, k2 = 1;
    if (n >= 2) {
        // Largest k1 with k1 * (k1 - 1) <= n; float start, integer finish.
        std::uint64_t c =
            static_cast<std::uint64_t>((1.0 + std::sqrt(1.0 + 4.0 * static_cast<double>(n))) / 2.0) + 2;
        while (c * (c - 1) > n) --c;
        k1 = static_cast<std::uint32_t>(c);
        k2 = k1 - 1;
    }
    return {min_mem_length, kmer_length, k1, k2, hash_bits};
}

std::uint64_t mix_hash64(const char* data, std::size_t len) noexcept {
    constexpr std::uint64_t kMul = 0x9E3779B97F4A7C15ull;
    constexpr std::uint64_t kRound = 0xC2B2AE3D27D4EB4Full;
    std::uint64_t h = 0x8445D61A4E774912ull ^ (len * kMul);
    while (len >= 8) {
        std::uint64_t w;
        std::memcpy(&w, data, 8);
        h = std::rotl(h ^ (w * kMul), 29) * kRound;
        data += 8;
        len -= 8;
    }
    if (len > 0) {
        std::uint64_t w = 0;
        std::memcpy(&w, data, len);
        h = std::rotl(h ^ (w * kMul), 29) * kRound;
    }
    h ^= h >> 33;
    h *= 0xFF51AFD7ED558CCDull;
    h ^= h >> 33;
    h *= 0xC4CEB9FE1A85EC53ull;
    h ^= h >> 33;
    return h;
}

std::uint64_t fnv1a_hash64(const char* data, std::size_t len) noexcept {
    std::uint64_t h = 14695981039346656037ull;
    for (std::size_t i = 0; i < len; ++i) {
        h ^= static_cast<unsigned char>(data[i]);
        h *= 1099511628211ull;
    }
    // FNV mixes its low bits well; slots are taken from the top, so finish
    // with an avalanche.
    h ^= h >> 33;
    h *= 0xFF51AFD7ED558CCDull;
    h ^= h >> 33;
    return h;
}

KmerHashFn hash_function(std::string_view name) {
    if (name == "mix") return mix_hash64;
    if (name == "fnv1a") return fnv1a_hash64;
    throw ArgumentError("unknown hash function '" + std::string(name) + "'");
}

SeedIndex build_index(const SequenceSet& reference, const MatchParams& params, KmerHashFn hash) {
    if (params.ref_stride == 0 || params.query_stride == 0 || params.kmer_length == 0)
        throw ArgumentError("match parameters not selected");
    if (params.hash_bits < 1 || params.hash_bits > 32)
        throw ArgumentError("hash width must be in [1, 32]");
    if (reference.total_length() >= (1ull << 32))
        throw ResourceError("reference exceeds the 32-bit position limit");

    SeedIndex index;
    index.params_ = params;
    index.hash_ = hash;

    const std::uint64_t slots = 1ull << params.hash_bits;
    try {
        index.offsets_.assign(slots + 1, 0);
    } catch (const std::bad_alloc&) {
        throw ResourceError("cannot allocate hash table offsets");
    } catch (const std::length_error&) {
        throw ResourceError("cannot allocate hash table offsets");
    }

    const std::uint32_t kmer_len = params.kmer_length;
    const std::uint32_t stride = params.ref_stride;
    const std::uint32_t bits = params.hash_bits;

    // Pass 1: per-slot occupancy.
    std::uint64_t sampled = 0;
    for_each_sampled_kmer(reference, kmer_len, stride,
                          [&](std::uint64_t, std::string_view kmer) {
                              ++index.offsets_[hash_kmer(kmer, bits, hash)];
                              ++sampled;
                          });

    // Exclusive prefix sum; offsets_[s] becomes the write cursor of slot s.
    std::uint32_t sum = 0;
    for (std::uint64_t s = 0; s < slots; ++s) {
        const std::uint32_t count = index.offsets_[s];
        index.offsets_[s] = sum;
        sum += count;
    }
    index.offsets_[slots] = sum;

    try {
        index.positions_.resize(sampled);
    } catch (const std::bad_alloc&) {
        throw ResourceError("cannot allocate sampled position array");
    }

    // Pass 2: place positions; cursors end up holding slot end offsets.
    for_each_sampled_kmer(reference, kmer_len, stride,
                          [&](std::uint64_t pos, std::string_view kmer) {
                              const std::uint32_t slot = hash_kmer(kmer, bits, hash);
                              index.positions_[index.offsets_[slot]++] =
                                  static_cast<std::uint32_t>(pos);
                          });

    // Shift cursors right by one to restore slot start offsets.
    std::memmove(index.offsets_.data() + 1, index.offsets_.data(),
                 slots * sizeof(std::uint32_t));
    index.offsets_[0] = 0;
    return index;
}

std::vector<std::pair<std::uint32_t, std::uint64_t>> SeedIndex::occupancy_histogram() const {
    std::map<std::uint32_t, std::uint64_t> hist;
    for (std::size_t s = 0; s + 1 < offsets_.size(); ++s)
        ++hist[offsets_[s + 1] - offsets_[s]];
    return {hist.begin(), hist.end()};
}

}  // namespace copmem
