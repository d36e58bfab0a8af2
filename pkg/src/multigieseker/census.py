"""Semistable multidegree censuses and wall crossings along segments.

Rank one only.  The enumeration box comes from the singleton-subcurve
inequalities evaluated at the simplex vertices; the threshold is a
linear-fractional function of sigma, so its minimum over the simplex is
attained at a vertex and the box contains every sheaf that is semistable for
some sigma.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterator, Sequence

from .curve import DualGraph, RankOneSheaf, Subcurve
from .errors import InvalidInput
from .polarization import Polarization, StabilityParameter, _check_length, as_parameter, normalize
from .stability import Status, check_rank_one, rank_one_threshold
from .walls import Wall, enumerate_walls


@dataclass(frozen=True)
class Census:
    """Semistable objects at one sigma.

    Members are multidegree tuples in the graph's component order, or
    ``(multidegree, nodes)`` pairs when non-locally-free sheaves are included.
    """

    semistable: frozenset
    stable: frozenset
    sigma: StabilityParameter
    degree: int
    include_non_locally_free: bool = False
    box: tuple[tuple[int, int], ...] = field(default=(), compare=False)

    @property
    def strictly_semistable(self) -> frozenset:
        return self.semistable - self.stable

    def same_loci(self, other: "Census") -> bool:
        return self.semistable == other.semistable and self.stable == other.stable


def _vertex(k: int, i: int) -> StabilityParameter:
    return StabilityParameter(tuple(Fraction(int(j == i)) for j in range(k)))


def enumeration_box(
    graph: DualGraph, P: Polarization, degree: int, nodes: Sequence[int] = (), enlarge: int = 0
) -> tuple[tuple[int, int], ...]:
    """Per-component ``(low, high)`` bounds on line-bundle degrees for node set ``nodes``."""
    ids = graph.component_ids
    total = degree - len(nodes)
    if len(ids) == 1:
        return ((total, total),)
    self_s = {c: 0 for c in ids}
    for n in nodes:
        a, b = graph.nodes[n]
        if a == b:
            self_s[a] += 1
    lows = {}
    for c in ids:
        D = Subcurve(frozenset([c]))
        least = min(
            rank_one_threshold(graph, P, _vertex(P.k, i), degree, D) for i in range(P.k)
        )
        lows[c] = math.ceil(least) - self_s[c] - enlarge
    low_sum = sum(lows.values())
    return tuple((lows[c], total - (low_sum - lows[c]) + enlarge) for c in ids)


def _fixed_sum(box, total) -> Iterator[tuple[int, ...]]:
    if len(box) == 1:
        lo, hi = box[0]
        if lo <= total <= hi:
            yield (total,)
        return
    lo, hi = box[0]
    rest_lo = sum(b[0] for b in box[1:])
    rest_hi = sum(b[1] for b in box[1:])
    for v in range(max(lo, total - rest_hi), min(hi, total - rest_lo) + 1):
        for tail in _fixed_sum(box[1:], total - v):
            yield (v,) + tail


def census(
    graph: DualGraph,
    P: Polarization,
    sigma,
    degree: int,
    include_non_locally_free: bool = False,
    enlarge: int = 0,
) -> Census:
    sigma = as_parameter(sigma)
    _check_length(P, sigma)
    node_sets: list[tuple[int, ...]] = [()]
    if include_non_locally_free:
        n = len(graph.nodes)
        node_sets = [s for size in range(n + 1) for s in combinations(range(n), size)]
    semistable, stable = set(), set()
    box0 = ()
    for S in node_sets:
        box = enumeration_box(graph, P, degree, S, enlarge)
        if not S:
            box0 = box
        for md in _fixed_sum(box, degree - len(S)):
            F = RankOneSheaf.from_sequence(graph, md, S)
            status = check_rank_one(graph, P, sigma, F).status
            if status is Status.UNSTABLE:
                continue
            key = (md, S) if include_non_locally_free else md
            semistable.add(key)
            if status is Status.STABLE:
                stable.add(key)
    return Census(
        frozenset(semistable), frozenset(stable), sigma, degree, include_non_locally_free, box0
    )


@dataclass(frozen=True)
class FlipEvent:
    t: Fraction
    wall_indices: tuple[int, ...]
    sigma: tuple[Fraction, ...]
    census_before: Census
    census_on_wall: Census
    census_after: Census

    @property
    def inclusions_hold(self) -> bool:
        wall = self.census_on_wall.semistable
        return self.census_before.semistable <= wall and self.census_after.semistable <= wall


@dataclass(frozen=True)
class FlipReport:
    sigma_start: tuple[Fraction, ...]
    sigma_end: tuple[Fraction, ...]
    walls: tuple[Wall, ...]
    events: tuple[FlipEvent, ...]
    chamber_censuses: tuple[Census, ...]  # one per open piece of the path
    containing_walls: tuple[int, ...]     # proper walls containing the whole path
    endpoint_walls: tuple[int, ...]       # proper walls through an endpoint only
    whole_simplex_walls: tuple[int, ...]

    @property
    def inclusions_hold(self) -> bool:
        return all(e.inclusions_hold for e in self.events)


def _point(s0, s1, t) -> tuple[Fraction, ...]:
    return tuple((1 - t) * a + t * b for a, b in zip(s0, s1))


def flip_report(
    graph: DualGraph,
    P: Polarization,
    degree: int,
    sigma_start,
    sigma_end,
    include_non_locally_free: bool = False,
) -> FlipReport:
    """Censuses along ``sigma_t = (1 - t) sigma_start + t sigma_end``.

    Crossing parameters are the exact roots of the proper-wall functionals on
    the segment.  Walls that vanish on the whole segment are listed
    separately instead of producing events.
    """
    s0 = normalize(sigma_start).sigma
    s1 = normalize(sigma_end).sigma
    if len(s0) != P.k or len(s1) != P.k:
        raise InvalidInput("path endpoints must have one weight per line bundle")
    walls = enumerate_walls(graph, P, 1, degree)
    crossings: dict[Fraction, list[int]] = {}
    containing, endpoint, whole = [], [], []
    for idx, w in enumerate(walls):
        if not w.is_proper:
            whole.append(idx)
            continue
        v0, v1 = w.evaluate(s0), w.evaluate(s1)
        if v0 == v1:
            if v0 == 0:
                containing.append(idx)
            continue
        t = v0 / (v0 - v1)
        if 0 < t < 1:
            crossings.setdefault(t, []).append(idx)
        elif t in (0, 1):
            endpoint.append(idx)

    def at(t):
        return census(graph, P, StabilityParameter(_point(s0, s1, t)), degree,
                      include_non_locally_free)

    ts = sorted(crossings)
    breaks = [Fraction(0)] + ts + [Fraction(1)]
    pieces = [at((lo + hi) / 2) for lo, hi in zip(breaks, breaks[1:])]
    events = tuple(
        FlipEvent(t, tuple(crossings[t]), _point(s0, s1, t), pieces[i], at(t), pieces[i + 1])
        for i, t in enumerate(ts)
    )
    return FlipReport(
        s0, s1, tuple(walls), events, tuple(pieces),
        tuple(containing), tuple(endpoint), tuple(whole),
    )
