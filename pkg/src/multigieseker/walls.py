"""Walls in the simplex of stability parameters and the chambers they cut out.

A candidate subsheaf class ``(multirank, chi_F)`` of a class with rank ``r``
and Euler characteristic ``chi_E`` defines the linear functional

    h(sigma) = sum_i sigma_i (r chi_F a_i - chi_E b_i),

with ``a_i = deg L_i`` and ``b_i = sum_j r_j deg_{C_j} L_i``.  Its zero set in
the normalized simplex is empty, a hyperplane section, or everything.

Chambers are the open cells of the arrangement of proper walls inside the
simplex.  They are enumerated exactly for ``k <= 3``; larger ``k`` needs the
``sampling`` opt-in and the result is then not guaranteed complete.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from typing import NamedTuple, Sequence

from .curve import DualGraph, arithmetic_genus, connected_proper_subcurves
from .errors import InvalidInput, UnsupportedDimension
from .polarization import Polarization, as_parameter, normalize

PROPER = "proper"
WHOLE_SIMPLEX = "whole_simplex"


@dataclass(frozen=True)
class Wall:
    coefficients: tuple[int, ...]
    provenance: tuple[tuple[tuple[int, ...], int], ...]
    classification: str

    @property
    def is_proper(self) -> bool:
        return self.classification == PROPER

    @property
    def boundary_only(self) -> bool:
        """Proper wall meeting the simplex only where some weight vanishes."""
        c = self.coefficients
        return self.is_proper and not (any(x > 0 for x in c) and any(x < 0 for x in c))

    def evaluate(self, sigma: Sequence[Fraction]) -> Fraction:
        return sum((c * s for c, s in zip(self.coefficients, sigma)), Fraction(0))


@dataclass(frozen=True)
class Chamber:
    sign_vector: tuple[int, ...]
    representative: tuple[Fraction, ...]


def primitive(values: Sequence[Fraction]) -> tuple[int, ...]:
    """Clear denominators, divide by the gcd, make the first nonzero entry positive."""
    values = [Fraction(v) for v in values]
    scale = math.lcm(*(v.denominator for v in values)) if values else 1
    ints = [int(v * scale) for v in values]
    g = math.gcd(*ints)
    if g == 0:
        return tuple(ints)
    ints = [x // g for x in ints]
    first = next(x for x in ints if x)
    if first < 0:
        ints = [-x for x in ints]
    return tuple(ints)


def _euler_characteristic(graph: DualGraph, r: int, d: int) -> int:
    return d + r * (1 - arithmetic_genus(graph))


def chi_interval(
    graph: DualGraph, P: Polarization, r: int, d: int, multirank: Sequence[int]
) -> range:
    """Integers ``chi_F`` whose wall meets the closed simplex.

    At the vertex ``e_i`` the functional vanishes at ``chi_F = chi_E b_i / (r a_i)``
    and increases with ``chi_F``; by linearity the wall meets the simplex
    exactly when ``chi_F`` lies between the smallest and largest of these.
    """
    multirank = tuple(multirank)
    if len(multirank) != len(graph.components):
        raise InvalidInput("multirank length must match the number of components")
    if not any(multirank) or any(not 0 <= x <= r for x in multirank):
        raise InvalidInput(f"multirank entries must lie in [0, {r}] and not all vanish")
    chi_e = _euler_characteristic(graph, r, d)
    a = P.totals()
    b = P.weighted(dict(zip(graph.component_ids, multirank)))
    zeros = [chi_e * bi / (r * ai) for ai, bi in zip(a, b)]
    return range(math.ceil(min(zeros)), math.floor(max(zeros)) + 1)


def wall_coefficients(
    graph: DualGraph, P: Polarization, r: int, d: int, multirank: Sequence[int], chi_f: int
) -> tuple[Fraction, ...]:
    chi_e = _euler_characteristic(graph, r, d)
    b = P.weighted(dict(zip(graph.component_ids, multirank)))
    return tuple(r * chi_f * ai - chi_e * bi for ai, bi in zip(P.totals(), b))


def candidate_multiranks(graph: DualGraph, r: int) -> list[tuple[int, ...]]:
    ids = graph.component_ids
    if r == 1:
        return [
            tuple(int(c in D.component_ids) for c in ids)
            for D in connected_proper_subcurves(graph)
        ]
    return [
        m for m in product(range(r + 1), repeat=len(ids))
        if any(m) and any(x != r for x in m)
    ]


def enumerate_walls(graph: DualGraph, P: Polarization, r: int, d: int) -> list[Wall]:
    """Every wall coming from a candidate ``(multirank, chi_F)`` that meets the simplex.

    Proper walls come first, sorted by coefficients, then whole-simplex walls;
    the position of a proper wall in this list is its index everywhere else.
    This is a superset of the walls cut out by actual saturated subsheaves.
    """
    if r < 1:
        raise InvalidInput("rank must be positive")
    found: dict[tuple[int, ...], list] = {}
    for m in candidate_multiranks(graph, r):
        for chi_f in chi_interval(graph, P, r, d, m):
            key = primitive(wall_coefficients(graph, P, r, d, m, chi_f))
            found.setdefault(key, []).append((m, chi_f))
    walls = [
        Wall(key, tuple(sorted(prov)), PROPER if any(key) else WHOLE_SIMPLEX)
        for key, prov in found.items()
    ]
    walls.sort(key=lambda w: (not w.is_proper, w.coefficients))
    return walls


def is_proper_decomposition(walls: Sequence[Wall]) -> bool:
    return all(w.is_proper for w in walls)


def _sign(x: Fraction) -> int:
    return (x > 0) - (x < 0)


class Location(NamedTuple):
    on_walls: tuple[int, ...]
    sign_vector: tuple[int, ...]


def locate(sigma, walls: Sequence[Wall]) -> Location:
    """Signs of the proper-wall functionals at ``sigma`` (0 on a wall)."""
    s = normalize(as_parameter(sigma)).sigma
    on, signs = [], []
    for idx, w in enumerate(walls):
        if not w.is_proper:
            continue
        if len(w.coefficients) != len(s):
            raise InvalidInput("sigma length does not match the walls")
        v = _sign(w.evaluate(s))
        signs.append(v)
        if v == 0:
            on.append(idx)
    return Location(tuple(on), tuple(signs))


def _barycenter(k: int) -> tuple[Fraction, ...]:
    return tuple(Fraction(1, k) for _ in range(k))


def _signs_at(point, proper: Sequence[Wall]) -> tuple[int, ...]:
    return tuple(_sign(w.evaluate(point)) for w in proper)


def _chambers_segment(proper: Sequence[Wall]) -> list[tuple[Fraction, ...]]:
    # sigma = (x, 1 - x); wall value c2 + (c1 - c2) x
    cuts = {Fraction(0), Fraction(1)}
    for w in proper:
        c1, c2 = w.coefficients
        if c1 != c2:
            x = Fraction(c2, c2 - c1)
            if 0 < x < 1:
                cuts.add(x)
    cuts = sorted(cuts)
    return [((lo + hi) / 2, 1 - (lo + hi) / 2) for lo, hi in zip(cuts, cuts[1:])]


def _chambers_triangle(proper: Sequence[Wall]) -> list[tuple[Fraction, ...]]:
    # Plane coordinates (x, y) = (sigma1, sigma2); every line is A x + B y + C = 0.
    lines = [(Fraction(1), Fraction(0), Fraction(0)),
             (Fraction(0), Fraction(1), Fraction(0)),
             (Fraction(1), Fraction(1), Fraction(-1))]
    walls = []
    for w in proper:
        c1, c2, c3 = w.coefficients
        walls.append((Fraction(c1 - c3), Fraction(c2 - c3), Fraction(c3)))
    lines += walls
    xs = {Fraction(0), Fraction(1)}
    for (a1, b1, k1), (a2, b2, k2) in combinations(lines, 2):
        det = a1 * b2 - a2 * b1
        if det == 0:
            continue
        x = (b1 * k2 - b2 * k1) / det
        if 0 <= x <= 1:
            xs.add(x)
    xs = sorted(xs)
    points = []
    for lo, hi in zip(xs, xs[1:]):
        x = (lo + hi) / 2
        ys = {Fraction(0), 1 - x}
        for a, b, k in walls:
            if b != 0:
                y = -(a * x + k) / b
                if 0 < y < 1 - x:
                    ys.add(y)
        ys = sorted(ys)
        for ylo, yhi in zip(ys, ys[1:]):
            y = (ylo + yhi) / 2
            points.append((x, y, 1 - x - y))
    return points


def _chambers_sampled(proper: Sequence[Wall], k: int, max_points: int) -> list[tuple[Fraction, ...]]:
    """Interior grid points with denominator N, refined until the sign set stabilizes."""

    def grid(n):
        # compositions of n into k positive parts
        for cut in combinations(range(1, n), k - 1):
            parts = [b - a for a, b in zip((0,) + cut, cut + (n,))]
            yield tuple(Fraction(p, n) for p in parts)

    points: dict[tuple[int, ...], tuple[Fraction, ...]] = {}
    n, stable_rounds = k + 1, 0
    while math.comb(n - 1, k - 1) <= max_points:
        before = len(points)
        for pt in grid(n):
            sv = _signs_at(pt, proper)
            if 0 not in sv:
                points.setdefault(sv, pt)
        stable_rounds = stable_rounds + 1 if len(points) == before else 0
        if stable_rounds >= 2:
            break
        n *= 2  # every point of the previous grid stays a grid point
    return list(points.values())


def enumerate_chambers(
    walls: Sequence[Wall], k: int, sampling: bool = False, max_points: int = 200_000
) -> list[Chamber]:
    """Open chambers of the proper-wall arrangement on the normalized simplex.

    Whole-simplex walls do not subdivide and are ignored here.  Each chamber
    gets the barycenter as representative when the barycenter lies in it,
    otherwise a point found by the sweep.
    """
    proper = [w for w in walls if w.is_proper]
    for w in proper:
        if len(w.coefficients) != k:
            raise InvalidInput(f"wall {w.coefficients} does not have {k} coefficients")
    if k == 1:
        candidates = [(Fraction(1),)]
    elif k == 2:
        candidates = _chambers_segment(proper)
    elif k == 3:
        candidates = _chambers_triangle(proper)
    elif sampling:
        candidates = _chambers_sampled(proper, k, max_points)
    else:
        raise UnsupportedDimension(
            f"exact chamber enumeration supports k <= 3 (got k={k}); enable sampling"
        )
    reps: dict[tuple[int, ...], tuple[Fraction, ...]] = {}
    for pt in candidates:
        sv = _signs_at(pt, proper)
        assert 0 not in sv, "sweep point landed on a wall"
        reps.setdefault(sv, pt)
    bary = _barycenter(k)
    sv = _signs_at(bary, proper)
    if sv in reps:
        reps[sv] = bary
    chambers = [Chamber(sv, pt) for sv, pt in reps.items()]
    chambers.sort(key=lambda c: tuple(-s for s in c.sign_vector))
    return chambers
