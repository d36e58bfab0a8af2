"""Multi-Hilbert polynomials, multi-slopes and rank-one (semi)stability."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import NamedTuple

from .curve import (
    DualGraph,
    RankOneSheaf,
    SheafClass,
    Subcurve,
    arithmetic_genus,
    check_class,
    chi_on_subcurve,
    connected_proper_subcurves,
    deg_on_subcurve,
    sheaf_chi_deg,
    subcurve_invariants,
)
from .errors import ZeroMultirank
from .polarization import Polarization, StabilityParameter, _check_length, as_parameter


class LinearPolynomial(NamedTuple):
    """``P(t) = constant + slope_coefficient * t``."""

    constant: Fraction
    slope_coefficient: Fraction

    def __call__(self, t) -> Fraction:
        return self.constant + self.slope_coefficient * t

    def reduced(self) -> "LinearPolynomial":
        """Divide by the leading coefficient (the reduced polynomial)."""
        return LinearPolynomial(self.constant / self.slope_coefficient, Fraction(1))


class Status(str, Enum):
    STABLE = "stable"
    STRICTLY_SEMISTABLE = "strictly_semistable"
    UNSTABLE = "unstable"

    @property
    def is_semistable(self) -> bool:
        return self is not Status.UNSTABLE


def status_from_margins(margins) -> Status:
    margins = list(margins)
    if any(m < 0 for m in margins):
        return Status.UNSTABLE
    if any(m == 0 for m in margins):
        return Status.STRICTLY_SEMISTABLE
    return Status.STABLE


@dataclass(frozen=True)
class StabilityVerdict:
    status: Status
    witnesses: tuple[tuple[Subcurve, Fraction], ...]

    @property
    def min_margin(self) -> Fraction | None:
        return min((m for _, m in self.witnesses), default=None)

    def recomputed_status(self) -> Status:
        return status_from_margins(m for _, m in self.witnesses)


def _weighted_sum(sigma: StabilityParameter, values) -> Fraction:
    return sum((s * v for s, v in zip(sigma.sigma, values)), Fraction(0))


def multi_hilbert(
    graph: DualGraph, P: Polarization, sigma, sheaf_class: SheafClass
) -> LinearPolynomial:
    sigma = as_parameter(sigma)
    _check_length(P, sigma)
    check_class(graph, sheaf_class)
    return LinearPolynomial(
        sheaf_class.chi * sum(sigma.sigma, Fraction(0)),
        _weighted_sum(sigma, P.weighted(sheaf_class.multirank)),
    )


def slope(graph: DualGraph, P: Polarization, sigma, sheaf_class: SheafClass) -> Fraction:
    """``chi / sum_{i,j} sigma_i r_j deg_{C_j} L_i``."""
    if sheaf_class.is_zero():
        raise ZeroMultirank("slope is undefined for a class supported nowhere")
    poly = multi_hilbert(graph, P, sigma, sheaf_class)
    return Fraction(sheaf_class.chi) / poly.slope_coefficient


def subcurve_weight(P: Polarization, sigma: StabilityParameter, D: Subcurve) -> Fraction:
    """``q_D``: share of the combined polarization degree carried by D."""
    return _weighted_sum(sigma, P.on(D.component_ids)) / _weighted_sum(sigma, P.totals())


def rank_one_threshold(
    graph: DualGraph, P: Polarization, sigma, degree: int, D: Subcurve
) -> Fraction:
    """Right-hand side of the subcurve inequality for a rank-one sheaf of total degree ``degree``."""
    sigma = as_parameter(sigma)
    inv = subcurve_invariants(graph, D)
    deg_omega = 2 * arithmetic_genus(graph) - 2
    q = subcurve_weight(P, sigma, D)
    return (
        q * (degree - Fraction(deg_omega, 2))
        + Fraction(inv.deg_omega_D, 2)
        - Fraction(inv.k_D, 2)
    )


def check_rank_one(
    graph: DualGraph, P: Polarization, sigma, F: RankOneSheaf
) -> StabilityVerdict:
    """Evaluate ``deg_D F`` against the threshold on every connected proper subcurve.

    Witness margins are ``deg_D F - threshold``; the verdict is stable when all
    are positive and semistable when none is negative.
    """
    sigma = as_parameter(sigma)
    _check_length(P, sigma)
    degree = sheaf_chi_deg(graph, F).deg
    witnesses = tuple(
        (D, deg_on_subcurve(graph, F, D) - rank_one_threshold(graph, P, sigma, degree, D))
        for D in connected_proper_subcurves(graph)
    )
    return StabilityVerdict(status_from_margins(m for _, m in witnesses), witnesses)


def oracle_check_rank_one(
    graph: DualGraph, P: Polarization, sigma, F: RankOneSheaf
) -> StabilityVerdict:
    """Slope comparison against the largest subsheaf of F supported on each connected D.

    That subsheaf is the kernel of ``F -> F_{D^c}``, so its Euler
    characteristic is ``chi(F) - chi(F_{D^c})`` and its multirank is the
    indicator of D.  Witness margins are ``mu(F) - mu(sub)``.
    """
    sigma = as_parameter(sigma)
    _check_length(P, sigma)
    chi = sheaf_chi_deg(graph, F).chi
    mu_total = Fraction(chi) / _weighted_sum(sigma, P.totals())
    witnesses = []
    for D in connected_proper_subcurves(graph):
        sub_chi = chi - chi_on_subcurve(graph, F, D.complement(graph))
        mu_sub = Fraction(sub_chi) / _weighted_sum(sigma, P.on(D.component_ids))
        witnesses.append((D, mu_total - mu_sub))
    witnesses = tuple(witnesses)
    return StabilityVerdict(status_from_margins(m for _, m in witnesses), witnesses)
