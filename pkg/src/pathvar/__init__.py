"""Certified lengths and directional variations of planar paths.

Every numeric answer is an interval with exact dyadic endpoints that
provably contains the true value; tolerances are met by construction, not
by floating-point luck.  The two headline operations convert between the
two quantities in both directions: certified_length averages directional
variations over a finite direction net, and certified_variation extracts
any directional variation from a length oracle through the refinement-gain
inequality.  Lipschitz-bounded sampled graphs, which cannot support
convergent answers at all, yield honest non-shrinking brackets instead.
"""

from .core.certificates import (
    Certificate,
    CertKind,
    Provenance,
    decimal_down,
    decimal_up,
)
from .core.chords import ChordStats, chord_stats, polyline_length
from .core.partitions import Partition, merge_partitions
from .core.paths import (
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
    path_to_json,
)
from .counterexamples import DemoReport, adversarial_demo, mixture, sawtooth, tilt
from .numerics.dyadic import Dyadic
from .numerics.interval import DomainError, Interval
from .numerics.ratpoly import RationalPoly
from .oracles import (
    LengthOracle,
    OracleUnavailable,
    PolylineOracle,
    PolynomialVariationOracle,
    VariationOracle,
    sampled_bracket,
    sampled_length_bracket,
    variation_oracle_for,
)
from .rectify import (
    CroftonLengthOracle,
    DirectionNet,
    Verdict,
    build_direction_net,
    certified_length,
    certified_variation,
    crofton_partition,
    length_oracle_for,
    length_oracle_from_variation,
    refinement_gain_bound,
    variation_order_decide,
)
from .variation import (
    Direction,
    direction_lipschitz_bound,
    directional_variation_on_partition,
    length_upper_bound,
    two_direction_length_bound,
    variation_profile,
)

__version__ = "0.1.0"

__all__ = [
    "Certificate",
    "CertKind",
    "ChordStats",
    "CroftonLengthOracle",
    "DemoReport",
    "Direction",
    "DirectionNet",
    "DomainError",
    "Dyadic",
    "Interval",
    "LengthOracle",
    "OracleUnavailable",
    "Partition",
    "PathSpec",
    "Polyline",
    "PolylineOracle",
    "PolynomialPath",
    "PolynomialVariationOracle",
    "Provenance",
    "RationalPoly",
    "ResourceError",
    "SampledGraph",
    "SawtoothGraph",
    "SawtoothMixture",
    "VariationOracle",
    "Verdict",
    "adversarial_demo",
    "as_polyline",
    "build_direction_net",
    "canonical_partition",
    "certified_length",
    "certified_variation",
    "chord_stats",
    "crofton_partition",
    "decimal_down",
    "decimal_up",
    "direction_lipschitz_bound",
    "directional_variation_on_partition",
    "eval_path",
    "eval_rational",
    "length_oracle_for",
    "length_oracle_from_variation",
    "length_upper_bound",
    "merge_partitions",
    "mixture",
    "path_from_json",
    "path_to_json",
    "polyline_length",
    "refinement_gain_bound",
    "sampled_bracket",
    "sampled_length_bracket",
    "sawtooth",
    "tilt",
    "two_direction_length_bound",
    "variation_oracle_for",
    "variation_order_decide",
    "variation_profile",
    "__version__",
]
