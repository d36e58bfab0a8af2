"""Numerical side of the sheaf-to-quiver comparison on a curve.

Nothing here builds quiver representations.  For a sheaf class E and a
subsheaf class F we compute the dimension vector ``(P_1(m1), P_1(m2), ...)``,
the weights theta_sigma, and the value of theta_sigma on the submodule that F
induces, whose dimensions are the Euler characteristics ``chi(F (x) L_j^m)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .curve import DualGraph, SheafClass, arithmetic_genus, check_class
from .errors import (
    BelowRegularity,
    InvalidInput,
    NonIntegralDimension,
    NonPositiveDenominator,
    OrderViolation,
)
from .polarization import Polarization, _check_length, as_parameter


def regularity_bound(graph: DualGraph, P: Polarization, r: int, d: int) -> int:
    """Smallest ``m >= 1`` with ``m > (2g - 2 - d/r) / deg L_i + 1`` for every i."""
    g = arithmetic_genus(graph)
    worst = max((2 * g - 2 - Fraction(d, r)) / a + 1 for a in P.totals())
    return max(1, math.floor(worst) + 1)


def _hilbert_values(chi, weights, m) -> tuple[Fraction, ...]:
    # chi(F (x) L_i^m) = chi(F) + m * sum_j r_j deg_{C_j} L_i
    return tuple(chi + m * w for w in weights)


@dataclass(frozen=True)
class DimensionVector:
    """``entries = (d_11, d_12, ..., d_k1, d_k2)`` with ``d_i1 = P_i(m1)``, ``d_i2 = P_i(m2)``."""

    entries: tuple[int, ...]
    m1: int
    m2: int

    @property
    def k(self) -> int:
        return len(self.entries) // 2

    def first(self) -> tuple[int, ...]:
        return self.entries[0::2]

    def second(self) -> tuple[int, ...]:
        return self.entries[1::2]


def dimension_vector(
    graph: DualGraph, P: Polarization, r: int, d: int, m1: int, m2: int
) -> DimensionVector:
    if m2 <= m1:
        raise OrderViolation(f"need m2 > m1, got m1={m1}, m2={m2}")
    bound = regularity_bound(graph, P, r, d)
    if m1 < bound:
        raise BelowRegularity(f"m1={m1} is below the regularity bound {bound}")
    chi = d + r * (1 - arithmetic_genus(graph))
    weights = tuple(r * a for a in P.totals())
    entries = []
    for v1, v2 in zip(_hilbert_values(chi, weights, m1), _hilbert_values(chi, weights, m2)):
        entries += [v1, v2]
    for v in entries:
        if v.denominator != 1:
            raise NonIntegralDimension("dimension vectors need integral polarization degrees")
        if v <= 0:
            raise NonPositiveDenominator(f"nonpositive dimension {v}")
    return DimensionVector(tuple(int(v) for v in entries), m1, m2)


@dataclass(frozen=True)
class ThetaWeights:
    first: tuple[Fraction, ...]   # theta_{j1}
    second: tuple[Fraction, ...]  # theta_{j2}

    def __call__(self, dims_first, dims_second) -> Fraction:
        """theta_sigma of a submodule with the given dimensions."""
        return sum(
            (t * x for t, x in zip(self.first, dims_first)), Fraction(0)
        ) + sum((t * x for t, x in zip(self.second, dims_second)), Fraction(0))

    def as_tuple(self) -> tuple[Fraction, ...]:
        out = []
        for a, b in zip(self.first, self.second):
            out += [a, b]
        return tuple(out)


def _theta(sigma, first, second) -> ThetaWeights:
    s = sigma.sigma
    den1 = sum((si * x for si, x in zip(s, first)), Fraction(0))
    den2 = sum((si * x for si, x in zip(s, second)), Fraction(0))
    if den1 <= 0 or den2 <= 0:
        raise NonPositiveDenominator("sigma-weighted dimensions must be positive")
    return ThetaWeights(tuple(si / den1 for si in s), tuple(-si / den2 for si in s))


def theta_weights(dvec: DimensionVector, sigma) -> ThetaWeights:
    sigma = as_parameter(sigma)
    if len(sigma) != dvec.k:
        raise InvalidInput(f"sigma has {len(sigma)} entries, dimension vector has k={dvec.k}")
    return _theta(sigma, dvec.first(), dvec.second())


def theta_of_subsheaf(
    graph: DualGraph,
    P: Polarization,
    sigma,
    E_class: SheafClass,
    F_class: SheafClass,
    m1: int,
    m2: int,
) -> Fraction:
    """theta_sigma of the submodule induced by F inside the module of E.

    Works with the E-side Hilbert values directly, so rational polarization
    degrees are allowed.  Equals ``P_F(m1)/P_E(m1) - P_F(m2)/P_E(m2)`` for the
    sigma-weighted Hilbert polynomials.
    """
    sigma = as_parameter(sigma)
    _check_length(P, sigma)
    check_class(graph, E_class)
    check_class(graph, F_class)
    if m2 <= m1:
        raise OrderViolation(f"need m2 > m1, got m1={m1}, m2={m2}")
    # uniform-rank E is the case covered by the bound; otherwise use its rank
    bound = regularity_bound(
        graph, P, E_class.rank, E_class.chi - E_class.rank * (1 - arithmetic_genus(graph))
    )
    if m1 < bound:
        raise BelowRegularity(f"m1={m1} is below the regularity bound {bound}")
    wE = P.weighted(E_class.multirank)
    wF = P.weighted(F_class.multirank)
    theta = _theta(
        sigma, _hilbert_values(E_class.chi, wE, m1), _hilbert_values(E_class.chi, wE, m2)
    )
    return theta(_hilbert_values(F_class.chi, wF, m1), _hilbert_values(F_class.chi, wF, m2))
