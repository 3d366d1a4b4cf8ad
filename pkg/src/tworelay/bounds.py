"""Outer bounds on the reliable rate of the two-relay reception setup.

Each canonical case has a cut-set bound (minimum over network cuts of the
cut's information rate).  Case C additionally has a modulo bound, a
strictly tighter outer bound in part of the parameter space, obtained from
a multi-letter argument; it carries an additive constant 0.25*log2(8*pi*e)
which is evaluated exactly here (~1.5235 bits), never as a rounded figure.

All bound terms are formed in the log domain, so an unlimited link
(`INFINITE_CAPACITY`) simply makes its cut term infinite and never binding.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .model import (
    ChannelConfig,
    ScenarioCase,
    case_constraints_hold,
    gaussian_mi,
    validate_case,
)

#: Additive constant of the Case C modulo bound: 0.25 * log2(8*pi*e).
MODULO_BOUND_CONSTANT = 0.25 * math.log2(8.0 * math.pi * math.e)


@dataclass(frozen=True)
class BoundReport:
    """All outer bounds that apply to one channel configuration.

    Attributes:
        terms: labeled cut-set terms, one per network cut.
        cutset_min: minimum over the cut-set terms.
        modulo_bound: the Case C modulo bound, None for other cases.
        binding: minimum over every applicable bound.
    """

    terms: tuple[tuple[str, float], ...]
    cutset_min: float
    modulo_bound: float | None
    binding: float

    def term(self, label: str) -> float:
        for name, value in self.terms:
            if name == label:
                return value
        raise KeyError(label)


def _report(terms: list[tuple[str, float]], modulo: float | None = None) -> BoundReport:
    cutset = min(v for _, v in terms)
    binding = cutset if modulo is None else min(cutset, modulo)
    return BoundReport(
        terms=tuple(terms), cutset_min=cutset, modulo_bound=modulo, binding=binding
    )


def cutset_case_a(cfg: ChannelConfig) -> BoundReport:
    """Case A cut-set bound.

    R <= min{ c2 + 0.5*log2(1 + px/(pj+1)),  0.5*log2(1 + px) }

    The first term cuts the relay-2 link together with the interfered
    direct observation; the second is the interference-free ceiling.
    """
    validate_case(cfg, ScenarioCase.CASE_A)
    terms = [
        ("c2 + i(x;y1)", cfg.c2 + gaussian_mi(cfg.p_x, cfg.p_j + 1.0)),
        ("i(x;y1|j)", gaussian_mi(cfg.p_x, 1.0)),
    ]
    return _report(terms)


def cutset_case_b(cfg: ChannelConfig) -> BoundReport:
    """Case B cut-set bound: Case A's terms plus the relay-1 link cut c1.

    Accepts the c1 = INFINITE_CAPACITY sentinel, for which the c1 cut never
    binds and the bound collapses to the Case A bound.
    """
    if not (
        case_constraints_hold(cfg, ScenarioCase.CASE_B)
        or case_constraints_hold(cfg, ScenarioCase.CASE_A)
    ):
        raise ValueError(f"config {cfg} does not satisfy the CASE_B channel constraints")
    terms = [
        ("c1", cfg.c1),
        ("c2 + i(x;y1)", cfg.c2 + gaussian_mi(cfg.p_x, cfg.p_j + 1.0)),
        ("i(x;y1|y2)", gaussian_mi(cfg.p_x, 1.0)),
    ]
    return _report(terms)


def cutset_case_c(cfg: ChannelConfig) -> BoundReport:
    """Case C cut-set bound.

    R <= min{ c1+c2,  c1 + 0.5*log2(1+px/(pj+1)),  c2 + 0.5*log2(1+px/(pj+1)),
              0.5*log2(1+2*px) }
    """
    validate_case(cfg, ScenarioCase.CASE_C)
    interfered = gaussian_mi(cfg.p_x, cfg.p_j + 1.0)
    terms = [
        ("c1 + c2", cfg.c1 + cfg.c2),
        ("c1 + i(x;y2)", cfg.c1 + interfered),
        ("c2 + i(x;y1)", cfg.c2 + interfered),
        ("i(x;y1,y2)", gaussian_mi(2.0 * cfg.p_x, 1.0)),
    ]
    return _report(terms)


def modulo_bound_case_c(cfg: ChannelConfig) -> float:
    """Case C modulo bound.

    R <= 0.5*(c1 + c2 + 0.5*log2(1 + px/pj)) + 0.25*log2(8*pi*e)

    Requires pj > 0 (the signal-to-interferer ratio px/pj is undefined
    otherwise).
    """
    validate_case(cfg, ScenarioCase.CASE_C)
    if not cfg.p_j > 0.0:
        raise ValueError("modulo bound requires interferer power p_j > 0")
    return 0.5 * (cfg.c1 + cfg.c2 + gaussian_mi(cfg.p_x, cfg.p_j)) + MODULO_BOUND_CONSTANT


def full_cooperation_capacity(p_x: float) -> float:
    """Capacity with both links unlimited: 0.5*log2(1 + 2*px).

    Joint processing can subtract the two receptions, which removes the
    interferer entirely and leaves maximal-ratio combining of the signal.
    """
    if not p_x >= 0.0:
        raise ValueError(f"p_x must be >= 0, got {p_x!r}")
    return gaussian_mi(2.0 * p_x, 1.0)


def outer_bounds(cfg: ChannelConfig, case: ScenarioCase) -> BoundReport:
    """Assemble every outer bound applicable to `case`.

    For Case C the modulo bound is included (when pj > 0) and `binding`
    is the minimum of the cut-set and modulo bounds; the two are not
    ordered, and either may be the smaller one.
    """
    if case is ScenarioCase.CASE_A:
        return cutset_case_a(cfg)
    if case is ScenarioCase.CASE_B:
        return cutset_case_b(cfg)
    if case is ScenarioCase.CASE_C:
        cut = cutset_case_c(cfg)
        modulo = modulo_bound_case_c(cfg) if cfg.p_j > 0.0 else None
        return _report(list(cut.terms), modulo)
    if case is ScenarioCase.FULL_COOPERATION:
        cap = full_cooperation_capacity(cfg.p_x)
        return _report([("i(x;y1,y2)", cap)])
    raise ValueError(f"unknown case {case!r}")
