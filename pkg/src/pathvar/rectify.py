"""Certified length from variations, and certified variation from length.

Forward direction: the averaging identity l = (1/2) * integral over [0, pi)
of v_theta says a finite direction net pins the length once per-node defects,
net mesh, and node snapping are all charged against the tolerance.  With a
partition P whose defect at each net node is small, and v theta-Lipschitz
with constant 2 * l, the inscribed length l_P certifiably exhausts l.

Reverse direction: a partition that nearly maximizes length admits no
variation gain in any direction.  If refining P could grow the w-variation
by more than delta, the inscribed length would grow by at least
sqrt(l_P**2 + delta**2) - l_P; so a length oracle answering within that gain
yields partitions certifying every directional variation at once.
"""

from __future__ import annotations

import enum
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .core.certificates import Certificate, CertKind, Provenance
from .core.chords import polyline_length
from .core.partitions import Partition, merge_partitions
from .core.paths import (
    PathSpec,
    Polyline,
    PolynomialPath,
    ResourceError,
    SampledGraph,
    SawtoothGraph,
    SawtoothMixture,
)
from .numerics.dyadic import Dyadic, ONE, ceil_to, sqrt_down, sqrt_up
from .numerics.interval import Interval
from .numerics.trig import pi_enclosure
from .oracles import (
    LengthOracle,
    OracleUnavailable,
    VariationOracle,
    _eps_fraction,
    _exp_for,
    _floor_log2,
    variation_oracle_for,
)
from .variation import Direction, directional_variation_on_partition, length_upper_bound

_MASS_FLOOR = Fraction(1, 1 << 20)
_NET_MATERIALIZE_CAP = 1_000_000


# -- direction nets ----------------------------------------------------------------


@dataclass
class DirectionNet:
    """Evenly spread directions theta_j = j * pi / node_count, each snapped
    to an exact rational ray within snap_tol.  Nodes are built on demand;
    only the counts and tolerances are stored."""

    node_count: int
    mesh: Fraction
    snap_tol: Fraction
    budget: dict = field(default_factory=dict)

    def node(self, j: int) -> Direction:
        if not 0 <= j < self.node_count:
            raise IndexError("net node index out of range")
        d = Direction.from_theta_pi(Fraction(j, self.node_count))
        if d.exact_ray() is not None:
            return d
        wx, wy, _gap = d.rational_approx(self.snap_tol)
        return Direction.from_vector(wx, wy)

    def nodes(self) -> list[Direction]:
        if self.node_count > _NET_MATERIALIZE_CAP:
            raise ResourceError(
                f"refusing to materialize {self.node_count} net nodes; "
                "iterate node(j) instead"
            )
        return [self.node(j) for j in range(self.node_count)]


def build_direction_net(mass_bound: Fraction, eps) -> DirectionNet:
    """Net fine enough that averaging variations over it certifies length to
    eps for any path of length at most mass_bound.

    Budget: (pi/2) * [tau + 4M(mesh/2 + snap)] <= eps/2 + eps/3 + eps/6 with
    per-node defect tau = eps/pi charged by the caller.
    """
    eps_fr = _eps_fraction(eps)
    m = max(Fraction(mass_bound), _MASS_FLOOR)
    pi_hi = pi_enclosure(-64).hi.as_fraction()
    delta = eps_fr / (3 * pi_hi * m)
    count = max(1, -((-pi_hi.numerator * delta.denominator) // (pi_hi.denominator * delta.numerator)))
    snap = min(eps_fr / (12 * pi_hi * m), Fraction(1, 1 << 45))
    return DirectionNet(
        node_count=count,
        mesh=pi_hi / count,
        snap_tol=snap,
        budget={
            "eps": str(eps_fr),
            "mass_bound": str(m),
            "mesh_target": str(delta),
            "snap": str(snap),
        },
    )


def _length_mass_bound(path: PathSpec, oracle: VariationOracle) -> Fraction:
    ub = length_upper_bound(path, oracle)
    return max(ub.hi.as_fraction(), _MASS_FLOOR)


def crofton_partition(
    path: PathSpec,
    oracle: Optional[VariationOracle] = None,
    eps=Fraction(1, 1000),
    workers: int = 1,
    use_uniform_witness: bool = True,
) -> tuple[Partition, DirectionNet]:
    """Partition P with l(path) - l_P <= eps, via direction-net averaging.

    A uniform witness (one partition, defect <= tau for every direction)
    short-circuits the per-node work; otherwise each net node is sent to the
    oracle and the answers are merged.  The merge is a deterministic
    left-to-right fold in node order, so the worker count never changes the
    result, only the wall time.
    """
    eps_fr = _eps_fraction(eps)
    if oracle is None:
        oracle = variation_oracle_for(path)
    pi_hi = pi_enclosure(-64).hi.as_fraction()
    mass = _length_mass_bound(path, oracle)
    net = build_direction_net(mass, eps_fr)
    witness = getattr(oracle, "uniform_witness", None) if use_uniform_witness else None
    if witness is not None:
        # sup-defect tau_w over all directions gives l - l_P <= (pi/2) tau_w
        tau_w = 2 * eps_fr / pi_hi
        net.budget["witness_defect"] = str(tau_w)
        return witness(tau_w), net
    tau = eps_fr / pi_hi
    net.budget["node_defect"] = str(tau)

    def solve(j: int) -> Partition:
        return oracle.achieve_variation(net.node(j), tau)[0]

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(solve, range(net.node_count)))
    else:
        parts = [solve(j) for j in range(net.node_count)]
    merged = Partition.trivial()
    for p in parts:
        merged = merge_partitions(merged, p)
    return merged, net


def certified_length(
    path: PathSpec,
    eps=Fraction(1, 1000),
    oracle: Optional[VariationOracle] = None,
    workers: int = 1,
    use_uniform_witness: bool = True,
) -> Certificate:
    """Two-sided length certificate of width at most eps.

    The inscribed length over the net partition bounds from below; the
    averaging bound adds the certified defect on top.
    """
    eps_fr = _eps_fraction(eps)
    if oracle is None:
        oracle = variation_oracle_for(path)
    eps_alg = eps_fr * Fraction(15, 16)
    part, net = crofton_partition(path, oracle, eps_alg, workers, use_uniform_witness)
    exp = _floor_log2(eps_fr) - 8
    lp = polyline_length(path, part, exp)
    pad = ceil_to(eps_alg, exp)
    value = Interval(lp.lo, lp.hi + pad)
    return Certificate(
        value,
        CertKind.TWO_SIDED_CONVERGED,
        eps_fr,
        Provenance(
            "direction-net-averaging",
            len(part),
            net_size=net.node_count,
            budget=dict(net.budget),
        ),
    )


# -- refinement gain ----------------------------------------------------------------


def refinement_gain_bound(length_bound: Interval, delta) -> Interval:
    """Enclosure of sqrt(L**2 + delta**2) - L for L = hi(length_bound).

    Any refinement that grows some directional variation by more than delta
    grows the inscribed length by more than this; the bound is decreasing in
    L, so an upper length bound is the conservative choice.
    """
    d_fr = _eps_fraction(delta)
    l_hi = length_bound.hi.as_fraction()
    if l_hi < 0:
        l_hi = Fraction(0)
    s = l_hi * l_hi + d_fr * d_fr
    exp = -64
    for _ in range(64):
        g_lo = sqrt_down(s, exp).as_fraction() - l_hi
        g_hi = sqrt_up(s, exp).as_fraction() - l_hi
        if g_lo > 0:
            out = Interval.enclose_pair(g_lo, g_hi, exp - 8)
            if out.lo.sign > 0 and (g_hi - g_lo) * 4 <= g_lo:
                return out
        exp -= 32
    raise ResourceError("gain bound failed to separate from zero")


class Verdict(enum.Enum):
    GREATER_THAN_A = "greater-than-a"
    LESS_THAN_B = "less-than-b"


def _bound_fraction(x) -> Fraction:
    return x.as_fraction() if isinstance(x, Dyadic) else Fraction(x)


def _coarse_length_bound(length_oracle: LengthOracle) -> Interval:
    _, l0 = length_oracle.achieve_length(Fraction(1))
    return Interval(l0.lo, l0.hi + ONE)


def variation_order_decide(
    path: PathSpec,
    d: Direction,
    a,
    b,
    length_oracle: Optional[LengthOracle] = None,
) -> Verdict:
    """Decide v_d(path) > a or v_d(path) < b, given a < b.

    One length-oracle call at the refinement-gain tolerance produces a
    partition whose w-variation is within 3*(b-a)/8 of the truth for every
    direction at once; comparing its enclosure against the bracket then
    always resolves at finite precision.  When both answers are true the
    greater-than exit is preferred.
    """
    a_fr, b_fr = _bound_fraction(a), _bound_fraction(b)
    if not a_fr < b_fr:
        raise ValueError("decision bracket needs a < b")
    if length_oracle is None:
        length_oracle = length_oracle_for(path)
    eps = (b_fr - a_fr) / 2
    mid = (a_fr + b_fr) / 2
    coarse = _coarse_length_bound(length_oracle)
    tau = refinement_gain_bound(coarse, eps * Fraction(3, 4)).lo.as_fraction()
    part, _ = length_oracle.achieve_length(tau)
    exp = -60
    for _ in range(100):
        v = directional_variation_on_partition(path, part, d, exp)
        if v.lo.as_fraction() > a_fr:
            return Verdict.GREATER_THAN_A
        if v.hi.as_fraction() < mid + eps / 4:
            return Verdict.LESS_THAN_B
        exp -= 32
    raise ResourceError("decision enclosure failed to converge")


def certified_variation(
    path: PathSpec,
    d: Direction,
    eps=Fraction(1, 1000),
    length_oracle: Optional[LengthOracle] = None,
) -> Certificate:
    """Two-sided certificate for v_d(path) of width at most eps, produced
    through a length oracle alone."""
    eps_fr = _eps_fraction(eps)
    if length_oracle is None:
        length_oracle = length_oracle_for(path)
    eps_alg = eps_fr * Fraction(15, 16)
    coarse = _coarse_length_bound(length_oracle)
    tau = refinement_gain_bound(coarse, eps_alg).lo.as_fraction()
    part, _ = length_oracle.achieve_length(tau)
    exp = _floor_log2(eps_fr) - 8
    v = directional_variation_on_partition(path, part, d, exp)
    pad = ceil_to(eps_alg, exp)
    value = Interval(v.lo, v.hi + pad)
    return Certificate(
        value,
        CertKind.TWO_SIDED_CONVERGED,
        eps_fr,
        Provenance(
            "length-refinement-gain",
            len(part),
            budget={"gain_tolerance": str(tau), "defect": str(eps_alg)},
        ),
    )


# -- length oracles -----------------------------------------------------------------


class CroftonLengthOracle:
    """Length oracle synthesized from a variation oracle by direction-net
    averaging; together with the refinement-gain route this closes the loop
    between the two quantities."""

    def __init__(
        self,
        path: PathSpec,
        var_oracle: Optional[VariationOracle] = None,
        workers: int = 1,
        use_uniform_witness: bool = True,
    ):
        self.path = path
        self.var_oracle = var_oracle if var_oracle is not None else variation_oracle_for(path)
        self.workers = workers
        self.use_uniform_witness = use_uniform_witness

    def achieve_length(self, eps) -> tuple[Partition, Interval]:
        eps_fr = _eps_fraction(eps)
        part, _net = crofton_partition(
            self.path, self.var_oracle, eps_fr, self.workers, self.use_uniform_witness
        )
        return part, polyline_length(self.path, part, _exp_for(eps_fr))


def length_oracle_from_variation(path: PathSpec, var_oracle: VariationOracle) -> CroftonLengthOracle:
    return CroftonLengthOracle(path, var_oracle)


def length_oracle_for(path: PathSpec) -> LengthOracle:
    if isinstance(path, (Polyline, SawtoothGraph, SawtoothMixture)):
        oracle = variation_oracle_for(path)  # PolylineOracle serves both roles
        return oracle
    if isinstance(path, PolynomialPath):
        return CroftonLengthOracle(path)
    if isinstance(path, SampledGraph):
        raise OracleUnavailable(
            "sampled graphs admit no convergent length oracle; "
            "use sampled_length_bracket for an honest non-shrinking bracket"
        )
    raise TypeError(f"unknown path kind {type(path)!r}")
