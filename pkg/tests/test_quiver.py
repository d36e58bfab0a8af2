import random
from fractions import Fraction as Q

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from multigieseker import (
    DualGraph,
    Polarization,
    SheafClass,
    dimension_vector,
    regularity_bound,
    slope,
    theta_of_subsheaf,
    theta_weights,
)
from multigieseker.errors import BelowRegularity, NonIntegralDimension, OrderViolation
from randominstances import random_graph, random_polarization, random_sigma


def test_regularity_bound(curve_e, pol_e, curve_b):
    assert regularity_bound(curve_e, pol_e, 1, 4) == 1
    # g = 1: (2g - 2 - d) / deg L + 1 = 1 for both line bundles, and the bound is strict
    P = Polarization.from_rows(curve_b, [[1, 1], [3, 1]])
    assert regularity_bound(curve_b, P, 1, 0) == 2
    line = DualGraph((("C", 0),))
    assert regularity_bound(line, Polarization.from_rows(line, [[1]]), 1, 0) == 1


def test_regularity_bound_is_smallest():
    rng = random.Random(2)
    for _ in range(100):
        graph = random_graph(rng)
        P = random_polarization(rng, graph, rng.randint(1, 3))
        r, d = rng.randint(1, 3), rng.randint(-10, 10)
        g = graph.genus
        m0 = regularity_bound(graph, P, r, d)

        def ok(m):
            return m >= 1 and all(m > (2 * g - 2 - Q(d, r)) / a + 1 for a in P.totals())

        assert ok(m0) and not ok(m0 - 1)


def test_dimension_vector(curve_e, pol_e, curve_b):
    assert dimension_vector(curve_e, pol_e, 1, 4, 1, 2).entries == (5, 7, 9, 15)
    P = Polarization.from_rows(curve_b, [[1, 1], [3, 1]])
    # P_1(m) = 2m, P_2(m) = 4m; m = 1 is below the bound for this genus-1 curve
    assert dimension_vector(curve_b, P, 1, 0, 2, 3).entries == (4, 6, 8, 12)
    with pytest.raises(BelowRegularity):
        dimension_vector(curve_b, P, 1, 0, 1, 2)
    with pytest.raises(OrderViolation):
        dimension_vector(curve_e, pol_e, 1, 4, 2, 2)


def test_dimension_vector_needs_integral_degrees(curve_e):
    P = Polarization.from_rows(curve_e, [["1/2", 1]])
    with pytest.raises(NonIntegralDimension):
        dimension_vector(curve_e, P, 1, 4, 5, 6)


def test_theta_weights(curve_e, pol_e):
    dvec = dimension_vector(curve_e, pol_e, 1, 4, 1, 2)
    assert theta_weights(dvec, (1, 0)).as_tuple() == (Q(1, 5), Q(-1, 7), 0, 0)
    th = theta_weights(dvec, (Q(1, 2), Q(1, 2)))
    assert th.first == (Q(1, 14), Q(1, 14))
    assert th.second == (Q(-1, 22), Q(-1, 22))
    assert th(dvec.first(), dvec.second()) == 0


def test_theta_of_subsheaf_examples(curve_e, pol_e):
    E = SheafClass.uniform(curve_e, 1, 4)
    F = SheafClass.from_sequence(curve_e, 1, 1, [1, 0])
    assert theta_of_subsheaf(curve_e, pol_e, (Q(3, 4), Q(1, 4)), E, F, 1, 2) == 0
    assert theta_of_subsheaf(curve_e, pol_e, (1, 0), E, F, 1, 2) == Q(-1, 35)
    assert theta_of_subsheaf(curve_e, pol_e, (1, 0), E, E, 1, 2) == 0


def test_theta_matches_reduced_polynomial_difference(curve_e, pol_e):
    E = SheafClass.uniform(curve_e, 2, 7)
    F = SheafClass.from_sequence(curve_e, 2, 2, [1, 2])
    sigma = (Q(2, 3), Q(1, 5))

    def P(c, m):
        return sum(s * (c.chi + m * (c.multirank["C1"] * row["C1"] + c.multirank["C2"] * row["C2"]))
                   for s, row in zip(sigma, pol_e.degrees))

    m1, m2 = 3, 7
    expected = P(F, m1) / P(E, m1) - P(F, m2) / P(E, m2)
    assert theta_of_subsheaf(curve_e, pol_e, sigma, E, F, m1, m2) == expected


def _sign(x):
    return (x > 0) - (x < 0)


@settings(max_examples=300, deadline=None)
@given(st.integers(0, 2**31).map(random.Random))
def test_sign_identity(rng):
    graph = random_graph(rng)
    k = rng.randint(1, 3)
    P = random_polarization(rng, graph, k)
    sigma = random_sigma(rng, k)
    r = rng.randint(1, 3)
    E = SheafClass.uniform(graph, r, rng.randint(-10, 10))
    m = tuple(rng.randint(0, r) for _ in graph.components)
    if not any(m):
        m = (1,) + m[1:]
    F = SheafClass.from_sequence(graph, r, rng.randint(-15, 15), m)
    d = E.chi - r * (1 - graph.genus)
    m1 = regularity_bound(graph, P, r, d) + rng.randint(0, 5)
    m2 = m1 + rng.randint(1, 10)
    theta = theta_of_subsheaf(graph, P, sigma, E, F, m1, m2)
    assert _sign(theta) == _sign(slope(graph, P, sigma, F) - slope(graph, P, sigma, E))
    assert _sign(theta_of_subsheaf(graph, P, sigma.scaled(Q(3, 7)), E, F, m1, m2)) == _sign(theta)
    assert theta_of_subsheaf(graph, P, sigma, E, E, m1, m2) == 0
