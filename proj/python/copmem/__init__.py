"""Maximal exact match finder with coprime dual-genome sampling."""

from ._copmem import (
    Error,
    FindStats,
    MatchParams,
    MatchReport,
    Mem,
    SeedIndex,
    SequenceRecord,
    SequenceSet,
    __version__,
    build_index,
    brute_force_mems,
    find_mems,
    format_report,
    load_fasta,
    residue_coverage,
    select_params,
)

__all__ = [
    "Error",
    "FindStats",
    "MatchParams",
    "MatchReport",
    "Mem",
    "SeedIndex",
    "SequenceRecord",
    "SequenceSet",
    "__version__",
    "build_index",
    "brute_force_mems",
    "find_mems",
    "format_report",
    "load_fasta",
    "residue_coverage",
    "select_params",
]
