# %% [markdown]
# # Rank-one stability on a two-component curve
#
# An elliptic component C1 meets a rational component C2 in two points, so the
# curve has arithmetic genus 2.  Two polarizations are fixed: L1 has degree 1
# on each component; L2 has degree 1 on C1 and 5 on C2.

# %%
from fractions import Fraction

from multigieseker import (
    DualGraph,
    Polarization,
    RankOneSheaf,
    check_rank_one,
    combined_degrees,
    oracle_check_rank_one,
    subcurve_invariants,
    Subcurve,
)

curve = DualGraph((("C1", 1), ("C2", 0)), (("C1", "C2"), ("C1", "C2")))
P = Polarization.from_rows(curve, [[1, 1], [1, 5]])
print("genus", curve.genus)
print("C1 invariants", subcurve_invariants(curve, Subcurve(frozenset({"C1"}))))

# %% [markdown]
# Degree-4 line bundles.  At sigma = (3/4, 1/4) the combined polarization has
# degrees (1, 2); the bidegree (1, 3) sits exactly on the threshold.

# %%
sigma = (Fraction(3, 4), Fraction(1, 4))
print("combined degrees", combined_degrees(P, sigma))
for md in [(2, 2), (1, 3), (0, 4)]:
    F = RankOneSheaf.from_sequence(curve, md)
    v = check_rank_one(curve, P, sigma, F)
    print(md, v.status.value, [(str(D), str(m)) for D, m in v.witnesses])

# %% [markdown]
# The same verdicts come out of a direct slope comparison with the largest
# subsheaf supported on each subcurve.

# %%
for md in [(2, 2), (1, 3), (0, 4)]:
    F = RankOneSheaf.from_sequence(curve, md)
    assert oracle_check_rank_one(curve, P, sigma, F).status == check_rank_one(curve, P, sigma, F).status
print("oracle agrees")

# %% [markdown]
# Sheaves failing to be locally free at a node are described by the line
# bundle on the partial normalization plus the node set.

# %%
F = RankOneSheaf.from_sequence(curve, (2, 1), not_locally_free=[0])
print(check_rank_one(curve, P, (1, 0), F).status.value)
