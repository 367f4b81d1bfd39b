"""Path descriptions, partitions, chord statistics and certificates."""

from .certificates import CertKind, Certificate, Provenance, decimal_down, decimal_up
from .chords import ChordStats, chord_deltas, chord_deltas_exact, chord_stats, polyline_length
from .partitions import Partition, merge_partitions
from .paths import (
    PathSpec,
    Polyline,
    PolynomialPath,
    ResourceError,
    SampledGraph,
    SawtoothGraph,
    SawtoothMixture,
    as_polyline,
    canonical_partition,
    eval_path,
    eval_rational,
    path_from_json,
    path_from_json_dict,
    path_to_json,
    path_to_json_dict,
)

__all__ = [
    "CertKind",
    "Certificate",
    "Provenance",
    "decimal_down",
    "decimal_up",
    "ChordStats",
    "chord_deltas",
    "chord_deltas_exact",
    "chord_stats",
    "polyline_length",
    "Partition",
    "merge_partitions",
    "PathSpec",
    "Polyline",
    "PolynomialPath",
    "ResourceError",
    "SampledGraph",
    "SawtoothGraph",
    "SawtoothMixture",
    "as_polyline",
    "canonical_partition",
    "eval_path",
    "eval_rational",
    "path_from_json",
    "path_from_json_dict",
    "path_to_json",
    "path_to_json_dict",
]
