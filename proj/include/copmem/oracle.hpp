#pragma once

#include <cstdint>
#include <vector>

#include "copmem/fasta_io.hpp"
#include "copmem/mem_finder.hpp"

namespace copmem {
namespace oracle {

struct OracleConfig {
    // Safety cap on |R| * |Q| for the quadratic scan.
    std::uint64_t max_cells = 100'000'000;
};

// Reference implementation of the match definition itself: walks every
// diagonal, emits maximal runs of equal residue-clean bytes within single
// records. Quadratic time, independent of any sampling or hashing.
std::vector<Mem> brute_force_mems(const SequenceSet& reference, const SequenceSet& query,
                                  std::uint32_t min_mem_length, OracleConfig config = {});

// True iff {i * k1 + r1 | i = 0..k2-1} contains an element congruent to r
// modulo k2, by direct enumeration. For coprime strides this is true for
// every residue pair, which is what makes dual-genome sampling lossless;
// coprimality is deliberately not enforced so the non-coprime failure mode
// can be demonstrated.
bool residue_coverage(std::uint32_t k1, std::uint32_t k2, std::uint32_t r1, std::uint32_t r);

}  // namespace oracle
}  // namespace copmem
