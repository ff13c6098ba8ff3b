#include "copmem/oracle.hpp"

#include <algorithm>
#include <tuple>

namespace copmem {
namespace oracle {

namespace {

// Deliberately restated here so the oracle shares no ordering code with the
// pipeline it checks.
bool oracle_order(const Mem& a, const Mem& b) {
    return std::tie(a.query_seq, a.query_pos, a.ref_seq, a.ref_pos, a.length) <
           std::tie(b.query_seq, b.query_pos, b.ref_seq, b.ref_pos, b.length);
}

}  // namespace

std::vector<Mem> brute_force_mems(const SequenceSet& reference, const SequenceSet& query,
                                  std::uint32_t min_mem_length, OracleConfig config) {
    if (min_mem_length == 0) throw ArgumentError("minimum MEM length must be positive");
    if (config.max_cells == 0) throw ArgumentError("max_cells must be positive");
    const std::uint64_t n_ref = reference.total_length();
    const std::uint64_t n_query = query.total_length();
    std::vector<Mem> out;
    if (n_ref == 0 || n_query == 0) return out;
    if (n_ref > config.max_cells / n_query)
        throw ResourceError("instance too large for the quadratic oracle");

    const char* r = reference.data();
    const char* q = query.data();
    const auto& ref_recs = reference.records();
    const auto& query_recs = query.records();

    for (std::int64_t d = -static_cast<std::int64_t>(n_ref - 1);
         d <= static_cast<std::int64_t>(n_query - 1); ++d) {
        std::uint64_t rp = d < 0 ? static_cast<std::uint64_t>(-d) : 0;
        std::uint64_t qp = d < 0 ? 0 : static_cast<std::uint64_t>(d);
        std::size_t ri = reference.find_record(rp);
        std::size_t qi = query.find_record(qp);

        while (rp < n_ref && qp < n_query) {
            // Walk one boundary-free segment of the diagonal.
            const std::uint64_t r_end = ref_recs[ri].global_start + ref_recs[ri].length;
            const std::uint64_t q_end = query_recs[qi].global_start + query_recs[qi].length;
            const std::uint64_t steps = std::min(r_end - rp, q_end - qp);

            std::uint64_t run = 0;
            auto emit = [&](std::uint64_t one_past, std::uint64_t run_len) {
                if (run_len < min_mem_length) return;
                const std::uint64_t gr = rp + one_past - run_len;
                const std::uint64_t gq = qp + one_past - run_len;
                out.push_back({static_cast<std::uint32_t>(ri),
                               static_cast<std::uint32_t>(gr - ref_recs[ri].global_start),
                               static_cast<std::uint32_t>(qi),
                               static_cast<std::uint32_t>(gq - query_recs[qi].global_start),
                               static_cast<std::uint32_t>(run_len)});
            };
            for (std::uint64_t i = 0; i < steps; ++i) {
                const char a = r[rp + i];
                if (a == q[qp + i] && is_residue(a)) {
                    ++run;
                } else {
                    emit(i, run);
                    run = 0;
                }
            }
            emit(steps, run);  // record boundaries terminate matches

            rp += steps;
            qp += steps;
            if (rp == r_end && ri + 1 < ref_recs.size()) ++ri;
            if (qp == q_end && qi + 1 < query_recs.size()) ++qi;
        }
    }

    std::sort(out.begin(), out.end(), oracle_order);
    return out;
}

bool residue_coverage(std::uint32_t k1, std::uint32_t k2, std::uint32_t r1, std::uint32_t r) {
    if (k1 < 1 || k2 < 1) throw ArgumentError("strides must be positive");
    if (r1 >= k1 || r >= k2) throw ArgumentError("residue class out of range");
    for (std::uint32_t i = 0; i < k2; ++i) {
        if ((static_cast<std::uint64_t>(i) * k1 + r1) % k2 == r) return true;
    }
    return false;
}

}  // namespace oracle
}  // namespace copmem
