#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "copmem/error.hpp"

namespace copmem {

// Canonical byte for every input symbol outside {A,C,G,T}. It never takes
// part in a match, not even against another non-residue byte.
inline constexpr char kNonResidue = 'N';

inline bool is_residue(char c) noexcept {
    return c == 'A' || c == 'C' || c == 'G' || c == 'T';
}

namespace detail {
constexpr std::array<char, 256> make_symbol_table() {
    std::array<char, 256> t{};
    for (auto& c : t) c = kNonResidue;
    t['A'] = t['a'] = 'A';
    t['C'] = t['c'] = 'C';
    t['G'] = t['g'] = 'G';
    t['T'] = t['t'] = 'T';
    return t;
}
inline constexpr auto kSymbolTable = make_symbol_table();
}  // namespace detail

// Uppercase residues, collapse everything else to kNonResidue.
inline char normalize_symbol(char c) noexcept {
    return detail::kSymbolTable[static_cast<unsigned char>(c)];
}

struct SequenceRecord {
    std::string name;
    std::uint64_t global_start = 0;
    std::uint64_t length = 0;
};

// One side of a comparison: all sequences of a multi-FASTA file concatenated
// into a flat byte buffer, uppercased, non-ACGT bytes collapsed to
// kNonResidue. Records tile [0, total_length()) in file order.
class SequenceSet {
public:
    SequenceSet() = default;

    // Builds a set from (name, sequence) pairs, applying the same
    // normalization as the FASTA loader.
    static SequenceSet from_sequences(
        const std::vector<std::pair<std::string, std::string>>& sequences);

    const std::string& symbols() const noexcept { return symbols_; }
    const char* data() const noexcept { return symbols_.data(); }
    const std::vector<SequenceRecord>& records() const noexcept { return records_; }
    std::uint64_t total_length() const noexcept { return symbols_.size(); }

    // Index of the record containing the global position.
    std::size_t find_record(std::uint64_t global_pos) const;

    // Global position -> (record index, position within that record).
    std::pair<std::uint32_t, std::uint64_t> translate(std::uint64_t global_pos) const;

    std::vector<std::string> names() const;

private:
    friend SequenceSet parse_fasta(std::string_view text, const std::string& context);

    // Appends one record; strips whitespace and normalizes symbols.
    void append_record(std::string name, std::string_view raw_symbols,
                       const std::string& context);

    std::string symbols_;
    std::vector<SequenceRecord> records_;
};

SequenceSet load_fasta(const std::filesystem::path& path);
SequenceSet parse_fasta(std::string_view text, const std::string& context);

// Canonical serialization: '>' + name, sequence wrapped at line_width columns.
void write_fasta(const SequenceSet& set, std::ostream& os, std::size_t line_width = 80);

}  // namespace copmem
