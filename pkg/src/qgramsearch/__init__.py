"""Byte-level exact string matching with q-gram distance shift tables.

The package bundles two distance-shift matchers (``distq_search`` and its
rolling-hash variant ``ldistq_search``), three baselines (naive, strong
border, 8-bit hash shift), the preprocessing that feeds them, corpus
generators and a small benchmark harness.  See the README for the CLI.
"""

from .bench import ALGORITHMS, BenchSpec, EmbedSource, FibonacciSource, \
    FileSource, ReportRow, emit_report, run_benchmark
from .corpus import CorpusSpec, GeneratedCorpus, alphabet_bytes, \
    fibonacci_string, load_text, random_text_with_occurrences, sample_patterns
from .errors import BenchmarkError, ConfigurationError, Error, GenerationError
from .hashing import MAX_Q, MOD8, MOD16, RollContext, qgram_hash8, \
    qgram_hash16, roll_hash16
from .matchers import SearchOutcome, SearchStats, SearchTrace, distq_search, \
    hashq_search, kmp_search, ldistq_search, naive_search
from .preprocess import PatternProfile, build_profile, dist_table, \
    hq_shift_table, kmp_shift_table, strong_border_table

__version__ = "0.1.0"

__all__ = [
    "ALGORITHMS", "BenchSpec", "BenchmarkError", "ConfigurationError",
    "CorpusSpec", "EmbedSource", "Error", "FibonacciSource", "FileSource",
    "GeneratedCorpus", "GenerationError", "MAX_Q", "MOD16", "MOD8",
    "PatternProfile", "ReportRow", "RollContext", "SearchOutcome",
    "SearchStats", "SearchTrace", "alphabet_bytes", "build_profile",
    "dist_table", "distq_search", "emit_report", "fibonacci_string",
    "hashq_search", "hq_shift_table", "kmp_search", "kmp_shift_table",
    "ldistq_search", "load_text", "naive_search", "qgram_hash16",
    "qgram_hash8", "random_text_with_occurrences", "roll_hash16",
    "run_benchmark", "sample_patterns", "strong_border_table",
]
