#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <sstream>

#include "copmem/cli.hpp"
#include "copmem/fasta_io.hpp"
#include "copmem/mem_finder.hpp"
#include "copmem/oracle.hpp"
#include "copmem/sampling_index.hpp"

namespace py = pybind11;
using namespace copmem;

namespace {

MatchReport find_mems_simple(const SequenceSet& reference, const SequenceSet& query,
                             std::uint32_t min_mem_length, std::uint32_t kmer_length,
                             std::uint32_t hash_bits, const std::string& hash) {
    const MatchParams params = select_params(min_mem_length, kmer_length, hash_bits);
    const SeedIndex index = build_index(reference, params, hash_function(hash));
    return find_mems(reference, query, index, params);
}

std::string format_report(const MatchReport& report, const std::vector<std::string>& query_names,
                          const std::vector<std::string>& ref_names) {
    std::ostringstream os;
    write_report(report, query_names, ref_names, os);
    return os.str();
}

}  // namespace

PYBIND11_MODULE(_copmem, m) {
    m.doc() = "Maximal exact match finder with coprime dual-genome sampling";
    m.attr("__version__") = "0.1.0";

    py::register_exception<Error>(m, "Error", PyExc_RuntimeError);

    py::class_<SequenceRecord>(m, "SequenceRecord")
        .def_readonly("name", &SequenceRecord::name)
        .def_readonly("global_start", &SequenceRecord::global_start)
        .def_readonly("length", &SequenceRecord::length)
        .def("__repr__", [](const SequenceRecord& r) {
            std::ostringstream os;
            os << "SequenceRecord(name='" << r.name << "', global_start=" << r.global_start
               << ", length=" << r.length << ")";
            return os.str();
        });

    py::class_<SequenceSet>(m, "SequenceSet")
        .def_static("from_sequences", &SequenceSet::from_sequences, py::arg("sequences"),
                    "Build a set from [(name, sequence), ...] pairs.")
        .def_property_readonly("total_length", &SequenceSet::total_length)
        .def_property_readonly("records", &SequenceSet::records)
        .def("names", &SequenceSet::names)
        .def("translate", &SequenceSet::translate, py::arg("global_pos"),
             "Global position -> (record index, position within record).")
        .def("sequence",
             [](const SequenceSet& s, std::uint32_t seq_id) {
                 if (seq_id >= s.records().size()) throw ArgumentError("sequence id out of range");
                 const auto& rec = s.records()[seq_id];
                 return std::string(s.symbols().substr(rec.global_start, rec.length));
             },
             py::arg("seq_id"), "Normalized symbols of one record.")
        .def("__len__", &SequenceSet::total_length);

    m.def("load_fasta", &load_fasta, py::arg("path"),
          py::call_guard<py::gil_scoped_release>(), "Load a multi-FASTA file.");

    py::class_<MatchParams>(m, "MatchParams")
        .def(py::init<>())
        .def_readwrite("min_mem_length", &MatchParams::min_mem_length)
        .def_readwrite("kmer_length", &MatchParams::kmer_length)
        .def_readwrite("ref_stride", &MatchParams::ref_stride)
        .def_readwrite("query_stride", &MatchParams::query_stride)
        .def_readwrite("hash_bits", &MatchParams::hash_bits)
        .def(py::self == py::self)
        .def("__repr__", [](const MatchParams& p) {
            std::ostringstream os;
            os << "MatchParams(min_mem_length=" << p.min_mem_length
               << ", kmer_length=" << p.kmer_length << ", ref_stride=" << p.ref_stride
               << ", query_stride=" << p.query_stride << ", hash_bits=" << p.hash_bits << ")";
            return os.str();
        });

    m.def("select_params", &select_params, py::arg("min_mem_length"), py::arg("kmer_length") = 44,
          py::arg("hash_bits") = 29,
          "Coprime stride pair maximizing k1 subject to k1*(k1-1) <= L-K+1.");

    py::class_<SeedIndex>(m, "SeedIndex")
        .def_property_readonly("params", &SeedIndex::params)
        .def_property_readonly("position_count",
                               [](const SeedIndex& i) { return i.positions().size(); })
        .def_property_readonly("entry_count", &SeedIndex::entry_count)
        .def("occupancy_histogram", &SeedIndex::occupancy_histogram);

    m.def("build_index",
          [](const SequenceSet& reference, const MatchParams& params, const std::string& hash) {
              return build_index(reference, params, hash_function(hash));
          },
          py::arg("reference"), py::arg("params"), py::arg("hash") = "mix",
          py::call_guard<py::gil_scoped_release>(),
          "Two-pass counting-sort index over the sampled reference k-mers.");

    py::class_<Mem>(m, "Mem")
        .def_readonly("ref_seq", &Mem::ref_seq)
        .def_readonly("ref_pos", &Mem::ref_pos)
        .def_readonly("query_seq", &Mem::query_seq)
        .def_readonly("query_pos", &Mem::query_pos)
        .def_readonly("length", &Mem::length)
        .def(py::self == py::self)
        .def("astuple",
             [](const Mem& m) {
                 return py::make_tuple(m.ref_seq, m.ref_pos, m.query_seq, m.query_pos, m.length);
             })
        .def("__repr__", [](const Mem& mem) {
            std::ostringstream os;
            os << "Mem(ref_seq=" << mem.ref_seq << ", ref_pos=" << mem.ref_pos
               << ", query_seq=" << mem.query_seq << ", query_pos=" << mem.query_pos
               << ", length=" << mem.length << ")";
            return os.str();
        });

    py::class_<FindStats>(m, "FindStats")
        .def_readonly("query_probes", &FindStats::query_probes)
        .def_readonly("hash_hits", &FindStats::hash_hits)
        .def_readonly("verified_seeds", &FindStats::verified_seeds)
        .def_readonly("extensions", &FindStats::extensions)
        .def_readonly("candidates", &FindStats::candidates)
        .def_readonly("duplicates_suppressed", &FindStats::duplicates_suppressed)
        .def_readonly("scan_seconds", &FindStats::scan_seconds)
        .def_readonly("dedupe_seconds", &FindStats::dedupe_seconds);

    py::class_<MatchReport>(m, "MatchReport")
        .def_readonly("mems", &MatchReport::mems)
        .def_readonly("stats", &MatchReport::stats);

    m.def("find_mems",
          py::overload_cast<const SequenceSet&, const SequenceSet&, const SeedIndex&,
                            const MatchParams&>(&find_mems),
          py::arg("reference"), py::arg("query"), py::arg("index"), py::arg("params"),
          py::call_guard<py::gil_scoped_release>(),
          "All maximal exact matches of length >= L, deduplicated and sorted.");
    m.def("find_mems", &find_mems_simple, py::arg("reference"), py::arg("query"),
          py::arg("min_mem_length"), py::arg("kmer_length") = 44, py::arg("hash_bits") = 29,
          py::arg("hash") = "mix", py::call_guard<py::gil_scoped_release>(),
          "Select parameters, build the index, and find MEMs in one call.");

    m.def("brute_force_mems",
          [](const SequenceSet& reference, const SequenceSet& query, std::uint32_t min_mem_length,
             std::uint64_t max_cells) {
              return oracle::brute_force_mems(reference, query, min_mem_length, {max_cells});
          },
          py::arg("reference"), py::arg("query"), py::arg("min_mem_length"),
          py::arg("max_cells") = oracle::OracleConfig{}.max_cells,
          py::call_guard<py::gil_scoped_release>(),
          "Quadratic diagonal-scan reference implementation.");

    m.def("residue_coverage", &oracle::residue_coverage, py::arg("k1"), py::arg("k2"),
          py::arg("r1"), py::arg("r"),
          "Whether {i*k1 + r1 | i < k2} covers residue r modulo k2.");

    m.def("format_report", &format_report, py::arg("report"), py::arg("query_names"),
          py::arg("ref_names"), "Render a report in the output file format.");
}
