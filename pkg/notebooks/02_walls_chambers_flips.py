# %% [markdown]
# # Walls, chambers and a wall crossing
#
# Same curve and polarizations as the first script, degree-4 line bundles.

# %%
from fractions import Fraction

from multigieseker import (
    DualGraph,
    Polarization,
    census,
    enumerate_chambers,
    enumerate_walls,
    flip_report,
)

curve = DualGraph((("C1", 1), ("C2", 0)), (("C1", "C2"), ("C1", "C2")))
P = Polarization.from_rows(curve, [[1, 1], [1, 5]])

walls = enumerate_walls(curve, P, 1, 4)
for w in walls:
    print(w.coefficients, w.classification, w.provenance)

chambers = enumerate_chambers(walls, 2)
for ch in chambers:
    print(ch.sign_vector, [str(x) for x in ch.representative])

# %% [markdown]
# Censuses: one per chamber, plus the wall itself, where both chamber-side
# loci sit inside the strictly larger wall locus.

# %%
for sigma in [ch.representative for ch in chambers] + [(Fraction(3, 4), Fraction(1, 4))]:
    c = census(curve, P, sigma, 4)
    print([str(s) for s in sigma], sorted(c.semistable), "stable:", sorted(c.stable))

# %%
rep = flip_report(curve, P, 4, (1, 0), (0, 1))
for e in rep.events:
    print("t =", e.t, sorted(e.census_before.semistable), "->",
          sorted(e.census_on_wall.semistable), "<-", sorted(e.census_after.semistable))

# %% [markdown]
# On the banana curve (two rational components, two nodes) in degree 0 the
# only wall is the whole simplex: every parameter admits strictly semistable
# line bundles, and the decomposition is not proper.

# %%
banana = DualGraph((("C1", 0), ("C2", 0)), (("C1", "C2"), ("C1", "C2")))
Pb = Polarization.from_rows(banana, [[1, 1], [3, 1]])
print(enumerate_walls(banana, Pb, 1, 0))
c = census(banana, Pb, (2, 5), 0)
print(sorted(c.semistable), sorted(c.stable))
