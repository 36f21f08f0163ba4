# Two six-dimensional nilpotent laws that agree over C but not over R.
# Run: python demos/01_two_real_forms.py

# %%
from rigidlie.catalog import catalog_get
from rigidlie.derivations import derivation_algebra, semisimplicity_class, torus_search
from rigidlie.liealg import base_change, complexify, series
from rigidlie.linalg import charpoly, minpoly

g1 = catalog_get("N6_6")
g2 = catalog_get("N6_7")
print(g1.algebra.pretty())
print()
print(g2.algebra.pretty())

# %% same invariants as far as series go
for e in (g1, g2):
    print(e.key, series(e.algebra, "lower_central"), "| dim Der =", derivation_algebra(e.algebra).dim)

# %% the second derivation of g1 rotates X1,X2 and X4,X6
f12 = g1.named_derivations["f1_2"]
print(f12)
print("charpoly", charpoly(f12), " minpoly", minpoly(f12), " ->", semisimplicity_class(f12))

# %% so only one real diagonalizable direction survives in g1, two in g2
for e in (g1, g2):
    rep = torus_search(e.algebra, derivation_algebra(e.algebra))
    print(e.key, "torus rank over R:", rep.rank_over_R, "  (", rep.banner, ")")

# %% over Q(i) the rescaling diag(1,i,i,i,i,1) identifies them
P = g2.base_changes["complex_iso_to_N6_6"]
h = base_change(complexify(g2.algebra), P)
print("certificate:", h == complexify(g1.algebra))
