"""Dependency (sub)tree inventories from CoNLL-U treebanks, and their comparison.

The pipeline: parse a treebank (:mod:`syntrees.conllu`), optionally delete
punctuation or disfluency branches (:mod:`syntrees.prune`) or split it by
document metadata (:mod:`syntrees.partition`), enumerate the delexicalized
structure every token roots (:mod:`syntrees.extract`), aggregate structures
into frequency inventories with diversity statistics
(:mod:`syntrees.inventory`), and compare inventories across corpora with
overlap, keyness and type-token ratio tests (:mod:`syntrees.compare`).
"""
from .compare import (
    KeynessRow,
    OverlapReport,
    SttrComparison,
    composition_diff,
    keyness_table,
    log_likelihood_g2,
    overlap_report,
    percent_diff,
    significance_label,
    sttr_compare,
)
from .conllu import (
    Diagnostic,
    ParseError,
    ParseResult,
    Sentence,
    Token,
    Treebank,
    parse_file,
    parse_treebank,
    to_conllu,
    write_file,
    write_treebank,
)
from .extract import (
    CanonicalTree,
    ConfigError,
    DEFAULT_CONFIG,
    ExtractionConfig,
    extract_sentence,
    load_extraction_config,
    serialize_subtree,
)
from .inventory import (
    Inventory,
    InventoryEntry,
    InventoryStats,
    SttrSeries,
    build_inventory,
    inventory_stats,
    load_inventory,
    merge_inventories,
    read_inventory,
    save_inventory,
    segmented_ttr,
    write_inventory,
)
from .partition import (
    GUM_PARTITION,
    PartitionError,
    PartitionRule,
    PartitionSpec,
    load_partition_spec,
    partition_treebank,
)
from .prune import (
    DISFLUENCY_FREE,
    PUNCT_FREE,
    NormalizationStats,
    PruneSpec,
    normalize_treebank,
    prune_branches,
)

__version__ = "0.1.0"

__all__ = [
    "CanonicalTree",
    "ConfigError",
    "DEFAULT_CONFIG",
    "Diagnostic",
    "DISFLUENCY_FREE",
    "ExtractionConfig",
    "GUM_PARTITION",
    "Inventory",
    "InventoryEntry",
    "InventoryStats",
    "KeynessRow",
    "NormalizationStats",
    "OverlapReport",
    "ParseError",
    "ParseResult",
    "PartitionError",
    "PartitionRule",
    "PartitionSpec",
    "PruneSpec",
    "PUNCT_FREE",
    "Sentence",
    "SttrComparison",
    "SttrSeries",
    "Token",
    "Treebank",
    "build_inventory",
    "composition_diff",
    "extract_sentence",
    "inventory_stats",
    "keyness_table",
    "load_extraction_config",
    "load_inventory",
    "load_partition_spec",
    "log_likelihood_g2",
    "merge_inventories",
    "normalize_treebank",
    "overlap_report",
    "parse_file",
    "parse_treebank",
    "partition_treebank",
    "percent_diff",
    "prune_branches",
    "read_inventory",
    "save_inventory",
    "segmented_ttr",
    "serialize_subtree",
    "significance_label",
    "sttr_compare",
    "to_conllu",
    "write_file",
    "write_inventory",
    "write_treebank",
]
