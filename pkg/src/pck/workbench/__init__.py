"""File format, example corpus, mutation harness and reports."""

from .corpus import builtin_corpus, construct_direct_sum, construct_from_associative, construct_from_lie_color, corpus_member
from .fileformat import AlgebraFormatError, AxiomFailure, dump_algebra, load_algebra, parse_algebra
from .report import analyze, emit_report

__all__ = [
    "AlgebraFormatError",
    "AxiomFailure",
    "analyze",
    "builtin_corpus",
    "construct_direct_sum",
    "construct_from_associative",
    "construct_from_lie_color",
    "corpus_member",
    "dump_algebra",
    "emit_report",
    "load_algebra",
    "parse_algebra",
]
