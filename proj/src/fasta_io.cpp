#include "copmem/fasta_io.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <unordered_set>

namespace copmem {

namespace {

bool is_space(char c) noexcept {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f';
}

// Header names follow the common convention: everything up to the first
// whitespace, the rest of the line is a free-form description.
std::string header_name(std::string_view line) {
    std::size_t end = 0;
    while (end < line.size() && !is_space(line[end])) ++end;
    return std::string(line.substr(0, end));
}

}  // namespace

void SequenceSet::append_record(std::string name, std::string_view raw_symbols,
                                const std::string& context) {
    if (name.empty()) throw ParseError(context + ": sequence with empty name");
    const std::uint64_t start = symbols_.size();
    for (char c : raw_symbols) {
        if (!is_space(c)) symbols_.push_back(normalize_symbol(c));
    }
    const std::uint64_t length = symbols_.size() - start;
    if (length == 0) throw ParseError(context + ": zero-length sequence '" + name + "'");
    records_.push_back({std::move(name), start, length});
}

SequenceSet SequenceSet::from_sequences(
    const std::vector<std::pair<std::string, std::string>>& sequences) {
    SequenceSet set;
    std::unordered_set<std::string> seen;
    for (const auto& [name, seq] : sequences) {
        if (!seen.insert(name).second)
            throw ParseError("duplicate sequence name '" + name + "'");
        set.append_record(name, seq, "sequence set");
    }
    return set;
}

std::size_t SequenceSet::find_record(std::uint64_t global_pos) const {
    if (global_pos >= total_length())
        throw ArgumentError("position out of range");
    auto it = std::upper_bound(records_.begin(), records_.end(), global_pos,
                               [](std::uint64_t pos, const SequenceRecord& rec) {
                                   return pos < rec.global_start;
                               });
    return static_cast<std::size_t>(it - records_.begin()) - 1;
}

std::pair<std::uint32_t, std::uint64_t> SequenceSet::translate(std::uint64_t global_pos) const {
    const std::size_t idx = find_record(global_pos);
    return {static_cast<std::uint32_t>(idx), global_pos - records_[idx].global_start};
}

std::vector<std::string> SequenceSet::names() const {
    std::vector<std::string> out;
    out.reserve(records_.size());
    for (const auto& rec : records_) out.push_back(rec.name);
    return out;
}

SequenceSet parse_fasta(std::string_view text, const std::string& context) {
    std::size_t pos = 0;
    while (pos < text.size() && is_space(text[pos])) ++pos;
    if (pos == text.size()) throw ParseError(context + ": empty FASTA input");
    if (text[pos] != '>') throw ParseError(context + ": not FASTA (no '>' header)");

    SequenceSet set;
    std::unordered_set<std::string> seen;
    while (pos < text.size()) {
        // pos is at the '>' of a header line.
        std::size_t line_end = text.find('\n', pos);
        if (line_end == std::string_view::npos) line_end = text.size();
        std::string_view header = text.substr(pos + 1, line_end - pos - 1);
        if (!header.empty() && header.back() == '\r') header.remove_suffix(1);
        std::string name = header_name(header);
        if (!seen.insert(name).second)
            throw ParseError(context + ": duplicate sequence name '" + name + "'");

        // Sequence bytes run until the next header ('>' in column 0) or EOF.
        std::size_t seq_start = std::min(line_end + 1, text.size());
        std::size_t next = text.find("\n>", line_end);
        std::size_t seq_end = next == std::string_view::npos ? text.size() : next + 1;
        set.append_record(std::move(name), text.substr(seq_start, seq_end - seq_start), context);
        pos = next == std::string_view::npos ? text.size() : next + 1;
    }
    return set;
}

SequenceSet load_fasta(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot read input file: " + path.string());
    in.seekg(0, std::ios::end);
    const auto size = in.tellg();
    if (size < 0) throw Error("cannot read input file: " + path.string());
    in.seekg(0);
    std::string raw(static_cast<std::size_t>(size), '\0');
    in.read(raw.data(), size);
    if (in.gcount() != size) throw Error("failed reading input file: " + path.string());
    return parse_fasta(raw, path.string());
}

void write_fasta(const SequenceSet& set, std::ostream& os, std::size_t line_width) {
    const char* data = set.data();
    for (const auto& rec : set.records()) {
        os << '>' << rec.name << '\n';
        if (line_width == 0) {
            os.write(data + rec.global_start, static_cast<std::streamsize>(rec.length));
            os << '\n';
            continue;
        }
        for (std::uint64_t off = 0; off < rec.length; off += line_width) {
            const std::uint64_t n = std::min<std::uint64_t>(line_width, rec.length - off);
            os.write(data + rec.global_start + off, static_cast<std::streamsize>(n));
            os << '\n';
        }
    }
}

}  // namespace copmem
