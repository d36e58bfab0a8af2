# %% [markdown]
# # Chambers in a triangle of stability parameters
#
# A cycle of four rational curves with three polarizations.  Walls are lines
# in the triangle of normalized parameters; chambers are found exactly by
# sweeping vertical slabs between arrangement vertices.

# %%
from collections import Counter

from multigieseker import DualGraph, Polarization, census, enumerate_chambers, enumerate_walls

cycle = DualGraph(
    (("A", 0), ("B", 0), ("C", 0), ("D", 0)),
    (("A", "B"), ("B", "C"), ("C", "D"), ("D", "A")),
)
P = Polarization.from_rows(cycle, [[4, 6, 5, 3], [2, 1, 1, 6], [6, 1, 4, 4]])

walls = enumerate_walls(cycle, P, 1, 4)
chambers = enumerate_chambers(walls, 3)
print(f"{len(walls)} walls, {len(chambers)} chambers")
for w in walls:
    print("   ", w.coefficients, "boundary only" if w.boundary_only else "")

# %% [markdown]
# Off the walls every semistable line bundle is stable.  The number of
# stable multidegrees equals the complexity of the dual graph (4 spanning
# trees of the 4-cycle) in every chamber.

# %%
sizes = Counter()
for ch in chambers:
    c = census(cycle, P, ch.representative, 4)
    assert c.semistable == c.stable
    sizes[len(c.stable)] += 1
print("stable census sizes over chambers:", dict(sizes))
