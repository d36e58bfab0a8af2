import random
from collections import defaultdict
from fractions import Fraction as Q
from itertools import combinations, product

import pytest

from multigieseker import (
    DualGraph,
    Polarization,
    Wall,
    chi_interval,
    enumerate_chambers,
    enumerate_walls,
    is_proper_decomposition,
    locate,
)
from multigieseker.errors import AllZero, UnsupportedDimension
from multigieseker.walls import primitive, wall_coefficients
from randominstances import random_graph, random_polarization


def proper_wall(*c):
    return Wall(tuple(c), (), "proper")


class TestChiInterval:
    def test_fixture_e(self, curve_e, pol_e):
        assert list(chi_interval(curve_e, pol_e, 1, 4, (1, 0))) == [1]
        assert list(chi_interval(curve_e, pol_e, 1, 4, (0, 1))) == [2]

    def test_fixture_b(self, curve_b, pol_b):
        assert list(chi_interval(curve_b, pol_b, 1, 0, (1, 0))) == [0]

    def test_matches_vertex_sign_bruteforce(self):
        rng = random.Random(3)
        for _ in range(60):
            graph = random_graph(rng, max_components=4)
            if len(graph.components) < 2:
                continue
            P = random_polarization(rng, graph, rng.randint(1, 3))
            r = rng.randint(1, 3)
            d = rng.randint(-8, 8)
            m = tuple(rng.randint(0, r) for _ in graph.components)
            if not any(m):
                continue
            expected = []
            for chi_f in range(-60, 61):
                vals = wall_coefficients(graph, P, r, d, m, chi_f)  # value at each vertex
                if min(vals) <= 0 <= max(vals):
                    expected.append(chi_f)
            assert list(chi_interval(graph, P, r, d, m)) == expected


def test_primitive():
    assert primitive([Q(-1), Q(3)]) == (1, -3)
    assert primitive([Q(1, 2), Q(-3, 4)]) == (2, -3)
    assert primitive([Q(0), Q(-4)]) == (0, 1)
    assert primitive([Q(0), Q(0)]) == (0, 0)


class TestWalls:
    def test_fixture_e_single_wall(self, curve_e, pol_e):
        walls = enumerate_walls(curve_e, pol_e, 1, 4)
        assert len(walls) == 1
        w = walls[0]
        # locus sigma1 = 3 sigma2; first nonzero coefficient made positive
        assert w.coefficients == (1, -3)
        assert w.classification == "proper" and not w.boundary_only
        assert w.provenance == (((0, 1), 2), ((1, 0), 1))

    def test_fixture_e_bruteforce(self, curve_e, pol_e):
        # every (multirank, chi) with |chi| <= 20; locus recorded as the zero of sigma1 on the segment
        a = pol_e.totals()
        loci = set()
        for m in product([0, 1], repeat=2):
            if m in ((0, 0), (1, 1)):
                continue
            b = [m[0] * row["C1"] + m[1] * row["C2"] for row in pol_e.degrees]
            for chi in range(-20, 21):
                c = [chi * ai - 3 * bi for ai, bi in zip(a, b)]
                if c == [0, 0]:
                    loci.add("all")
                elif min(c) <= 0 <= max(c):
                    # c1 x + c2 (1 - x) = 0
                    loci.add(Q(c[1], c[1] - c[0]))
        assert loci == {Q(3, 4)}

    def test_fixture_b_whole_simplex(self, curve_b, pol_b):
        walls = enumerate_walls(curve_b, pol_b, 1, 0)
        assert [w.classification for w in walls] == ["whole_simplex"]
        assert walls[0].coefficients == (0, 0)
        assert not is_proper_decomposition(walls)

    def test_boundary_wall(self, curve_e, pol_e):
        walls = enumerate_walls(curve_e, pol_e, 1, 3)
        assert [w.coefficients for w in walls] == [(0, 1)]
        assert walls[0].is_proper and walls[0].boundary_only

    def test_provenance_regenerates(self):
        rng = random.Random(5)
        for _ in range(40):
            graph = random_graph(rng, max_components=4)
            P = random_polarization(rng, graph, rng.randint(1, 3))
            r = rng.randint(1, 2)
            d = rng.randint(-6, 6)
            for w in enumerate_walls(graph, P, r, d):
                assert w.provenance
                for m, chi in w.provenance:
                    assert primitive(wall_coefficients(graph, P, r, d, m, chi)) == w.coefficients
                if w.is_proper:
                    # meets the closed simplex
                    assert min(w.coefficients) <= 0 <= max(w.coefficients)

    def test_scaling_invariance(self, curve_e, pol_e):
        for p in (2, 5):
            assert enumerate_walls(curve_e, pol_e.scaled(p), 1, 4) == enumerate_walls(curve_e, pol_e, 1, 4)

    def test_higher_rank_includes_rank_one_loci(self, curve_e, pol_e):
        walls = enumerate_walls(curve_e, pol_e, 2, 8)
        assert all(len(w.coefficients) == 2 for w in walls)
        assert walls == sorted(walls, key=lambda w: (not w.is_proper, w.coefficients))


class TestChambers:
    def test_fixture_e(self, curve_e, pol_e):
        chambers = enumerate_chambers(enumerate_walls(curve_e, pol_e, 1, 4), 2)
        assert [(c.sign_vector, c.representative) for c in chambers] == [
            ((1,), (Q(7, 8), Q(1, 8))),
            ((-1,), (Q(1, 2), Q(1, 2))),
        ]

    def test_empty(self):
        (c,) = enumerate_chambers([], 2)
        assert c.representative == (Q(1, 2), Q(1, 2)) and c.sign_vector == ()

    def test_two_walls_on_segment(self):
        walls = [proper_wall(1, -3), proper_wall(1, -1)]
        chambers = enumerate_chambers(walls, 2)
        assert len(chambers) == 3
        assert {c.sign_vector for c in chambers} == {(1, 1), (-1, 1), (-1, -1)}

    def test_whole_simplex_does_not_split(self):
        assert len(enumerate_chambers([Wall((0, 0), (), "whole_simplex")], 2)) == 1

    def test_k1(self):
        (c,) = enumerate_chambers([], 1)
        assert c.representative == (1,)

    def test_k4_requires_sampling(self):
        walls = [proper_wall(1, -1, 0, 0), proper_wall(0, 0, 1, -1)]
        with pytest.raises(UnsupportedDimension):
            enumerate_chambers(walls, 4)
        assert len(enumerate_chambers(walls, 4, sampling=True)) == 4

    def test_triangle_known_arrangement(self):
        # three medians of the triangle: six chambers
        walls = [proper_wall(0, 1, -1), proper_wall(1, -1, 0), proper_wall(1, 0, -1)]
        chambers = enumerate_chambers(walls, 3)
        assert len(chambers) == 6
        for c in chambers:
            assert sum(c.representative) == 1 and min(c.representative) > 0


def _interior_point(c1, c2):
    """Solve c1.s = 0, c2.s = 0, sum s = 1 by Cramer's rule; None if singular."""
    rows = [list(map(Q, c1)), list(map(Q, c2)), [Q(1)] * 3]
    rhs = [Q(0), Q(0), Q(1)]

    def det(m):
        return (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
                - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
                + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]))

    D = det(rows)
    if D == 0:
        return None
    out = []
    for col in range(3):
        m = [row[:] for row in rows]
        for i in range(3):
            m[i][col] = rhs[i]
        out.append(det(m) / D)
    return tuple(out)


def _expected_region_count(walls):
    chords = [w.coefficients for w in walls
              if w.is_proper and min(w.coefficients) < 0 < max(w.coefficients)]
    multiplicity = defaultdict(set)
    for c1, c2 in combinations(chords, 2):
        p = _interior_point(c1, c2)
        if p is not None and min(p) > 0:
            multiplicity[p].update([c1, c2])
    return 1 + len(chords) + sum(len(s) - 1 for s in multiplicity.values())


def test_triangle_chambers_against_oracles():
    rng = random.Random(17)
    checked = 0
    for _ in range(120):
        graph = random_graph(rng, max_components=4, max_nodes=6)
        P = random_polarization(rng, graph, 3, max_degree=6)
        d = rng.randint(-4, 8)
        walls = enumerate_walls(graph, P, 1, d)
        chambers = enumerate_chambers(walls, 3)
        proper = [w for w in walls if w.is_proper]
        signs = set()
        for ch in chambers:
            rep = ch.representative
            assert sum(rep) == 1 and min(rep) > 0
            sv = tuple((w.evaluate(rep) > 0) - (w.evaluate(rep) < 0) for w in proper)
            assert sv == ch.sign_vector and 0 not in sv
            signs.add(sv)
        assert len(signs) == len(chambers)
        assert len(chambers) == _expected_region_count(walls)
        # grid sampling never finds a sign vector the sweep missed
        n = 30
        for i in range(1, n):
            for j in range(1, n - i):
                pt = (Q(i, n), Q(j, n), Q(n - i - j, n))
                sv = tuple((w.evaluate(pt) > 0) - (w.evaluate(pt) < 0) for w in proper)
                if 0 not in sv:
                    assert sv in signs
        checked += len(proper) > 1
    assert checked > 10


class TestLocate:
    def test_fixture_e(self, curve_e, pol_e):
        walls = enumerate_walls(curve_e, pol_e, 1, 4)
        assert locate((Q(3, 4), Q(1, 4)), walls).on_walls == (0,)
        assert locate((3, 1), walls).on_walls == (0,)
        assert locate((1, 0), walls).sign_vector == (1,)
        assert locate((0, 1), walls).sign_vector == (-1,)

    def test_all_zero(self, curve_e, pol_e):
        with pytest.raises(AllZero):
            locate((0, 0), enumerate_walls(curve_e, pol_e, 1, 4))
