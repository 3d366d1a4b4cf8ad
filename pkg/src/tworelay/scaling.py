"""Pre-log scaling laws, capacity regions and gap certificates.

The pre-log (scaling) of a rate curve is the limit of R / log2(p_x) as the
transmit power grows; at desk scale it is estimated from a ladder of
exponents, by default through successive finite differences, which converge
much faster than the raw ratio.

This module also builds the (c1, c2) region needed to sustain a target rate
in Case C, certifies the constant-bit gaps between achievable rates and
outer bounds over power grids, demonstrates that the cut-set bound is
strictly loose in Case C, and produces the rate-versus-sum-capacity sweep
data (best link split per sum) behind the composite rate curves.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, NamedTuple, Sequence

import numpy as np

from .achievable import AchievableReport, Scheme, achievable_case_c, best_achievable
from .bounds import cutset_case_c, modulo_bound_case_c, outer_bounds
from .model import ChannelConfig, ScenarioCase, gaussian_mi, make_preset

PRELOG_METHODS = ("finite_difference", "ratio")

#: Default exponent ladder (log2 of transmit power) for pre-log estimation.
DEFAULT_EXPONENTS = tuple(range(10, 41))


@dataclass(frozen=True)
class ScalingEstimate:
    """A pre-log slope estimate along an exponent ladder."""

    prelog: float
    exponent_grid: tuple[float, ...]
    rate_samples: tuple[float, ...]
    method: str


def estimate_prelog(
    rate_fn: Callable[[float], float],
    exponent_range: Sequence[float] = DEFAULT_EXPONENTS,
    method: str = "finite_difference",
) -> ScalingEstimate:
    """Estimate the pre-log of rate_fn(p_x) over p_x = 2**k, k in the grid.

    `rate_fn` must map a transmit power to a rate under whatever coupling
    of the remaining parameters to p_x the caller wants.  The
    finite-difference estimate is the slope between the two largest
    exponents; the ratio estimate is rate / log2(p_x) at the largest one.

    Raises:
        ValueError: on an empty grid, a non-finite rate sample, or an
            unknown method (finite differences need at least two points).
    """
    if method not in PRELOG_METHODS:
        raise ValueError(f"method must be one of {PRELOG_METHODS}, got {method!r}")
    exponents = tuple(float(k) for k in exponent_range)
    if not exponents:
        raise ValueError("exponent range must be nonempty")
    rates = []
    for k in exponents:
        r = float(rate_fn(2.0**k))
        if not math.isfinite(r):
            raise ValueError(f"rate_fn(2**{k}) = {r!r} is not finite")
        rates.append(r)
    if method == "finite_difference":
        if len(exponents) < 2:
            raise ValueError("finite differences need at least two exponents")
        prelog = (rates[-1] - rates[-2]) / (exponents[-1] - exponents[-2])
    else:
        if exponents[-1] == 0.0:
            raise ValueError("ratio method needs a nonzero top exponent")
        prelog = rates[-1] / exponents[-1]
    return ScalingEstimate(
        prelog=prelog,
        exponent_grid=exponents,
        rate_samples=tuple(rates),
        method=method,
    )


def _parse_coupling(coupling: str) -> Callable[[float], float]:
    """Interferer-power coupling: 'pj=px', 'pj=sqrt(px)' or 'pj=<value>'."""
    key = coupling.replace(" ", "").lower()
    if key == "pj=px":
        return lambda p_x: p_x
    if key == "pj=sqrt(px)":
        return math.sqrt
    if key.startswith("pj="):
        value = float(key[3:])
        if value < 0.0:
            raise ValueError(f"constant interferer power must be >= 0, got {value}")
        return lambda p_x: value
    raise ValueError(f"unrecognized coupling {coupling!r}")


def coupled_capacity_rate_fn(
    case: ScenarioCase,
    coupling: str = "pj=px",
    capacity_scale: float = 1.0,
) -> Callable[[float], float]:
    """Rate-vs-power function with link capacities tied to the power.

    Capacities grow with p_x exactly as the sufficiency side of each
    case's scaling law prescribes, times `capacity_scale`:

    * Case A: c2 = 0.5*log2(p_x*p_j/(p_x+p_j))
    * Case B: c1 = 0.5*log2(p_x), c2 as in Case A
    * Case C: the region corner c1 = max(R, g), c2 = R - g with
      R = 0.5*log2(p_x) and g = 0.5*log2(1 + p_x/p_j)

    At scale 1.0 the resulting pre-log is 1/2; scaling the capacities down
    (e.g. by 0.8) drags the pre-log below 1/2, witnessing necessity.
    """
    pj_of = _parse_coupling(coupling)

    def rate(p_x: float) -> float:
        p_j = pj_of(p_x)
        if case is ScenarioCase.CASE_A:
            c2 = capacity_scale * max(interference_info_lower_bound(p_x, p_j), 0.0)
            cfg = make_preset(ScenarioCase.CASE_A, p_x, p_j, c2=c2)
        elif case is ScenarioCase.CASE_B:
            c1 = capacity_scale * max(0.5 * math.log2(p_x), 0.0)
            c2 = capacity_scale * max(interference_info_lower_bound(p_x, p_j), 0.0)
            cfg = make_preset(ScenarioCase.CASE_B, p_x, p_j, c1=c1, c2=c2)
        elif case is ScenarioCase.CASE_C:
            target = max(0.5 * math.log2(p_x), 0.0)
            g = gaussian_mi(p_x, p_j)
            c1 = capacity_scale * max(target, g)
            c2 = capacity_scale * max(target - g, 0.0)
            cfg = make_preset(ScenarioCase.CASE_C, p_x, p_j, c1=c1, c2=c2)
        else:
            raise ValueError(f"no capacity coupling defined for {case!r}")
        return best_achievable(cfg).rate

    return rate


def interference_info_lower_bound(p_x: float, p_j: float) -> float:
    """Information about the interferer the destination must receive.

    0.5*log2(p_x*p_j/(p_x+p_j)) bits per channel use, the floor on the
    rate of relay 2's description when the overall rate scales like
    0.5*log2(p_x); behaves like 0.5*log2(min(p_x, p_j)) for unbalanced
    powers.
    """
    if not (p_x > 0.0 and p_j > 0.0):
        raise ValueError("interference information bound needs p_x > 0 and p_j > 0")
    return 0.5 * (math.log2(p_x) + math.log2(p_j) - math.log2(p_x + p_j))


# ---------------------------------------------------------------------------
# Case C capacity region


@dataclass(frozen=True)
class RegionPolygon:
    """The set of (c1, c2) pairs that can sustain `target_rate` in Case C.

    The region is the intersection of three half-planes (closed under
    componentwise increase, hence convex):

        c1 + c2 >= max(2R - g, R)      with g = 0.5*log2(1 + p_x/p_j)
        c1      >= R - g
        c2      >= R - g

    `vertices` lists the finite corner points of its boundary; `p1` is the
    corner with the larger c1 (c1 = max(R, g), c2 = R - g when R >= g) and
    `p2` its mirror image.
    """

    vertices: tuple[tuple[float, float], ...]
    target_rate: float
    constraints: tuple[tuple[str, float, float, float], ...]
    p1: tuple[float, float]
    p2: tuple[float, float]

    def contains(self, c1: float, c2: float, tol: float = 1e-12) -> bool:
        """Whether (c1, c2) satisfies every half-plane constraint."""
        return all(
            coef1 * c1 + coef2 * c2 >= rhs - tol
            for _, coef1, coef2, rhs in self.constraints
        )


def required_region_case_c(target_rate: float, p_x: float, p_j: float) -> RegionPolygon:
    """Half-plane description and corner points of the Case C region.

    Negative right-hand sides clamp to zero, so a zero target yields the
    whole nonnegative quadrant, and a target below 0.5*log2(1 + p_x/p_j)
    leaves only the sum constraint c1 + c2 >= target active.
    """
    if not p_j > 0.0:
        raise ValueError("the region needs p_j > 0")
    if target_rate < 0.0:
        raise ValueError("target rate must be >= 0")
    g = gaussian_mi(p_x, p_j)
    sum_rhs = max(2.0 * target_rate - g, target_rate, 0.0)
    link_rhs = max(target_rate - g, 0.0)
    constraints = (
        ("b1: c1 + c2", 1.0, 1.0, sum_rhs),
        ("b2: c1", 1.0, 0.0, link_rhs),
        ("b2: c2", 0.0, 1.0, link_rhs),
    )
    if 2.0 * link_rhs >= sum_rhs:
        corner = (link_rhs, link_rhs)
        vertices = (corner,)
        p1 = p2 = corner
    else:
        p1 = (sum_rhs - link_rhs, link_rhs)
        p2 = (link_rhs, sum_rhs - link_rhs)
        vertices = (p2, p1)
    return RegionPolygon(
        vertices=vertices,
        target_rate=float(target_rate),
        constraints=constraints,
        p1=p1,
        p2=p2,
    )


# ---------------------------------------------------------------------------
# Gap certificates


@dataclass(frozen=True)
class GapCertificate:
    """Outer bound minus achievable rate, certified over a parameter grid.

    `max_gap` is the largest observed difference on `grid`, `bound_used`
    names the outer bound it was measured against, and `claimed_bound` is
    the constant the gap is asserted to stay below.
    """

    case: ScenarioCase
    regime: str
    grid: tuple[tuple[float, float], ...]
    max_gap: float
    bound_used: str
    claimed_bound: float

    @property
    def satisfied(self) -> bool:
        return self.max_gap <= self.claimed_bound


def _certificate(case, regime, points, gaps, bound_used, claimed) -> GapCertificate:
    return GapCertificate(
        case=case,
        regime=regime,
        grid=tuple(points),
        max_gap=max(gaps),
        bound_used=bound_used,
        claimed_bound=claimed,
    )


def gap_case_a(p_x: float, p_j: float) -> GapCertificate:
    """Case A gap at the regime's prescribed relay-2 capacity.

    Regime "high_interference" (p_j >= p_x) pins c2 = 0.5*log2(1 + p_x)
    and certifies a gap of at most 0.7925 bits; regime "low_interference"
    (1 <= p_j < p_x) pins c2 = 0.5*log2(p_j) and certifies at most 1 bit.
    """
    if p_j >= p_x:
        regime, claimed = "high_interference", 0.7925
        c2 = 0.5 * math.log2(1.0 + p_x)
    elif p_j >= 1.0:
        regime, claimed = "low_interference", 1.0
        c2 = 0.5 * math.log2(p_j)
    else:
        raise ValueError(f"(p_x={p_x}, p_j={p_j}) lies outside both Case A gap regimes")
    cfg = make_preset(ScenarioCase.CASE_A, p_x, p_j, c2=c2)
    gap = outer_bounds(cfg, ScenarioCase.CASE_A).binding - best_achievable(cfg).rate
    return _certificate(ScenarioCase.CASE_A, regime, [(p_x, p_j)], [gap], "cut-set", claimed)


def gap_case_b(p_x: float, p_j: float) -> GapCertificate:
    """Case B gap at c1 = 0.5*log2(1+p_x), c2 = 0.5*log2(p_j); at most 1.29 bits.

    Requires p_x > 1 and p_j >= 1 (the prescribed capacities are
    nonnegative there).
    """
    if not p_x > 1.0:
        raise ValueError(f"Case B gap regime requires p_x > 1, got {p_x}")
    if not p_j >= 1.0:
        raise ValueError(f"Case B gap regime requires p_j >= 1, got {p_j}")
    c1 = 0.5 * math.log2(1.0 + p_x)
    c2 = 0.5 * math.log2(p_j)
    cfg = make_preset(ScenarioCase.CASE_B, p_x, p_j, c1=c1, c2=c2)
    gap = outer_bounds(cfg, ScenarioCase.CASE_B).binding - best_achievable(cfg).rate
    return _certificate(ScenarioCase.CASE_B, "standard", [(p_x, p_j)], [gap], "cut-set", 1.29)


def gap_case_c(p_x: float, p_j: float) -> GapCertificate:
    """Case C gap against the regime's designated outer bound.

    Regime "modulo" (1 < p_j < p_x) pins c1 = 0.5*log2(1+p_x),
    c2 = 0.5*log2(p_j) and certifies modulo bound minus achievable
    <= 2.816 bits.  Regime "cutset" (p_j > (1+p_x)^2/p_x) pins
    c1 = c2 = 0.5*log2(1+p_x) and certifies cut-set minus achievable
    <= 1.5 bits.  The narrow band between them belongs to neither regime.
    """
    half_log_1px = 0.5 * math.log2(1.0 + p_x)
    if 1.0 < p_j < p_x:
        cfg = make_preset(
            ScenarioCase.CASE_C, p_x, p_j, c1=half_log_1px, c2=0.5 * math.log2(p_j)
        )
        gap = modulo_bound_case_c(cfg) - achievable_case_c(p_x, p_j, cfg.c1, cfg.c2).rate
        return _certificate(ScenarioCase.CASE_C, "modulo", [(p_x, p_j)], [gap], "modulo", 2.816)
    if p_x > 0.0 and p_j > (1.0 + p_x) ** 2 / p_x:
        cfg = make_preset(ScenarioCase.CASE_C, p_x, p_j, c1=half_log_1px, c2=half_log_1px)
        gap = cutset_case_c(cfg).cutset_min - achievable_case_c(p_x, p_j, cfg.c1, cfg.c2).rate
        return _certificate(ScenarioCase.CASE_C, "cutset", [(p_x, p_j)], [gap], "cut-set", 1.5)
    raise ValueError(f"(p_x={p_x}, p_j={p_j}) lies outside both Case C gap regimes")


def default_power_grid() -> tuple[float, ...]:
    """Decade-spaced grid, 5 points per decade, over [10, 1e9]."""
    return tuple(10.0**e for e in np.arange(1.0, 9.0 + 1e-9, 0.2))


_GAP_FUNCTIONS = {
    ScenarioCase.CASE_A: gap_case_a,
    ScenarioCase.CASE_B: gap_case_b,
    ScenarioCase.CASE_C: gap_case_c,
}


def certify_gaps(
    case: ScenarioCase,
    px_grid: Sequence[float] | None = None,
    pj_grid: Sequence[float] | None = None,
) -> tuple[GapCertificate, ...]:
    """Sweep the gap over a power grid, one aggregated certificate per regime.

    Grid points outside every regime of the case (possible for Case C)
    are skipped.
    """
    gap_fn = _GAP_FUNCTIONS[case]
    px_grid = default_power_grid() if px_grid is None else tuple(px_grid)
    pj_grid = default_power_grid() if pj_grid is None else tuple(pj_grid)
    buckets: dict[str, tuple[list, list, str, float]] = {}
    for p_x in px_grid:
        for p_j in pj_grid:
            try:
                point = gap_fn(p_x, p_j)
            except ValueError:
                continue
            points, gaps, _, _ = buckets.setdefault(
                point.regime, ([], [], point.bound_used, point.claimed_bound)
            )
            points.append((p_x, p_j))
            gaps.append(point.max_gap)
    if not buckets:
        raise ValueError("no grid point fell inside any regime")
    return tuple(
        _certificate(case, regime, points, gaps, bound_used, claimed)
        for regime, (points, gaps, bound_used, claimed) in sorted(buckets.items())
    )


# ---------------------------------------------------------------------------
# Cut-set looseness demonstration


class LoosenessPrelogs(NamedTuple):
    cutset_prelog: float
    modulo_prelog: float


def cutset_looseness_demo(p_x: float) -> LoosenessPrelogs:
    """Pre-logs of the two Case C outer bounds along a decade ladder.

    With the interferer power tied to sqrt(p_x) and both link capacities
    to 0.25*log2(p_x), the cut-set bound keeps pre-log 1/2 while the
    modulo bound's pre-log sits strictly below it, so the cut-set bound
    cannot be tight.  Evaluated on powers 10, 100, ... up to p_x; the
    returned slopes are finite differences at the top of the ladder
    (plain ratios if p_x < 100 leaves a single rung).
    """
    if not p_x > 1.0:
        raise ValueError("looseness demo needs p_x > 1")
    ladder = [10.0**e for e in range(1, int(math.floor(math.log10(p_x))) + 1)]
    if not ladder or ladder[-1] != p_x:
        ladder.append(p_x)

    def both(power: float) -> tuple[float, float]:
        cap = 0.25 * math.log2(power)
        cfg = make_preset(ScenarioCase.CASE_C, power, math.sqrt(power), c1=cap, c2=cap)
        return cutset_case_c(cfg).cutset_min, modulo_bound_case_c(cfg)

    values = [both(p) for p in ladder]
    if len(ladder) >= 2:
        dk = math.log2(ladder[-1]) - math.log2(ladder[-2])
        cut = (values[-1][0] - values[-2][0]) / dk
        mod = (values[-1][1] - values[-2][1]) / dk
    else:
        k = math.log2(ladder[-1])
        cut, mod = values[-1][0] / k, values[-1][1] / k
    return LoosenessPrelogs(cutset_prelog=cut, modulo_prelog=mod)


# ---------------------------------------------------------------------------
# Rate versus sum capacity (composite curve data)


@dataclass(frozen=True)
class SweepPoint:
    """One point of the rate-versus-sum-capacity sweep."""

    sum_capacity: float
    best_rate: float
    winning_scheme: Scheme
    c1: float
    c2: float
    cutset: float
    modulo: float | None


def _config_for_split(case: ScenarioCase, p_x, p_j, c1, c2) -> ChannelConfig:
    if case is ScenarioCase.CASE_B:
        return make_preset(ScenarioCase.CASE_B, p_x, p_j, c1=c1, c2=c2)
    return make_preset(ScenarioCase.CASE_C, p_x, p_j, c1=c1, c2=c2)


def sweep_sum_capacity(
    case: ScenarioCase,
    p_x: float,
    p_j: float,
    sum_capacities: Sequence[float],
    split_samples: int = 1001,
) -> list[SweepPoint]:
    """Best achievable rate per total link budget, optimizing the split.

    For every sum c1 + c2 in `sum_capacities` the split is chosen by a
    uniform search with `split_samples` points (the objective is unimodal
    on the grids of interest); the reported cut-set value is likewise the
    best (largest) cut-set bound over splits, i.e. the outer envelope a
    genie split could reach.  Applies to Cases B and C; Case C points also
    carry the (split-independent) modulo bound.
    """
    if case not in (ScenarioCase.CASE_B, ScenarioCase.CASE_C):
        raise ValueError("the sum-capacity sweep applies to Cases B and C")
    if split_samples < 2:
        raise ValueError("need at least two split samples")
    points = []
    for total in sum_capacities:
        if total < 0.0:
            raise ValueError(f"sum capacity must be >= 0, got {total}")
        best_report: AchievableReport | None = None
        best_split = (0.0, 0.0)
        best_cut = -math.inf
        for c1 in np.linspace(0.0, total, split_samples):
            cfg = _config_for_split(case, p_x, p_j, float(c1), float(total - c1))
            report = best_achievable(cfg)
            if best_report is None or report.rate > best_report.rate:
                best_report, best_split = report, (cfg.c1, cfg.c2)
            cut = outer_bounds(cfg, case).cutset_min
            if cut > best_cut:
                best_cut = cut
        modulo = None
        if case is ScenarioCase.CASE_C and p_j > 0.0:
            cfg = _config_for_split(case, p_x, p_j, total / 2.0, total / 2.0)
            modulo = modulo_bound_case_c(cfg)
        points.append(
            SweepPoint(
                sum_capacity=float(total),
                best_rate=best_report.rate,
                winning_scheme=best_report.scheme,
                c1=best_split[0],
                c2=best_split[1],
                cutset=best_cut,
                modulo=modulo,
            )
        )
    return points
