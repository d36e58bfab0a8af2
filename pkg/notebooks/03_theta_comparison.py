# %% [markdown]
# # Quiver weights against slopes
#
# For a sheaf class E and a candidate subsheaf class F, theta_sigma evaluated on
# the submodule F induces has the sign of mu(F) - mu(E), for every admissible
# pair of twists, not only for large ones.

# %%
from fractions import Fraction

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

curve = DualGraph((("C1", 1), ("C2", 0)), (("C1", "C2"), ("C1", "C2")))
P = Polarization.from_rows(curve, [[1, 1], [1, 5]])
E = SheafClass.uniform(curve, 1, 4)
F = SheafClass.from_sequence(curve, 1, 1, [1, 0])

m0 = regularity_bound(curve, P, 1, 4)
dvec = dimension_vector(curve, P, 1, 4, m0, m0 + 1)
print("m0 =", m0, "dimension vector", dvec.entries)
print("theta at (1, 0):", [str(t) for t in theta_weights(dvec, (1, 0)).as_tuple()])

# %%
for sigma in [(1, 0), (Fraction(3, 4), Fraction(1, 4)), (0, 1)]:
    rows = []
    for m1, m2 in [(1, 2), (2, 7), (5, 6)]:
        rows.append(str(theta_of_subsheaf(curve, P, sigma, E, F, m1, m2)))
    diff = slope(curve, P, sigma, F) - slope(curve, P, sigma, E)
    print([str(s) for s in sigma], "theta:", rows, "mu(F) - mu(E):", diff)
