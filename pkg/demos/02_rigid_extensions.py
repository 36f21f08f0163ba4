# The eight-dimensional solvable extensions: cohomology and complete solvability.
# Run: python demos/02_rigid_extensions.py

# %%
import time

from rigidlie.catalog import catalog_get
from rigidlie.cohomology import cohomology_dims, rigidity_certificate
from rigidlie.liealg import ad, complexify
from rigidlie.weights import is_completely_solvable, nilradical, triangularize

keys = ["g1hat_r8_22_2", "g2hat_r8_22_normal", "r8_29_2"]

# %% H^2 with adjoint coefficients; d2 is a 448 x 224 matrix here
for k in keys:
    g = catalog_get(k).algebra
    t = time.time()
    rep = cohomology_dims(g, with_derivations=True)
    print(f"{k:<20} h=({rep.h0},{rep.h1},{rep.h2}) dim Der={rep.der_dim}  "
          f"{rigidity_certificate(g).verdict}  [{time.time() - t:.2f}s]")

# %% ad(X8) on g1hat is a pair of rotations
g = catalog_get("g1hat_r8_22_2").algebra
print(ad(g, g.element("X8")))

# %% complete solvability, with a witness when it fails
for k in keys:
    rep = is_completely_solvable(catalog_get(k).algebra)
    print(k, rep.completely_solvable, rep.witness_label or "", rep.witness_minpoly or "")

# %% weights of the complexification, read at (X7, X8)
gc = complexify(g)
ws = triangularize(gc)
for j in range(8):
    print(j + 1, ws.weight_of(j, gc.element("X7")), ws.weight_of(j, gc.element("X8")))

# %% nilradicals
for k in keys:
    e = catalog_get(k)
    N = nilradical(e.algebra)
    print(k, "nilradical dim", N.dim, "partner", e.nil_partner)
