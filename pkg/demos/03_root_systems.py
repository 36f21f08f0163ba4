# Linear systems of roots at a regular torus vector, real and complex.
# Run: python demos/03_root_systems.py

# %%
from rigidlie.catalog import catalog_get
from rigidlie.errors import NotDiagonalizableError
from rigidlie.liealg import complexify
from rigidlie.roots import integer_solution_basis, rank_test, regular_vector, root_system

e = catalog_get("g2hat_r8_22_normal")
g = e.algebra
X = regular_vector(g, e.torus_vectors())
print("regular vector:", g.describe_vector(X))

# %%
S = root_system(g, X, e.torus_vectors(), "X7")
print(S.table())
print(rank_test(S, 6).note)

# %% the nilradical part alone has a two-dimensional solution space:
# both torus spectra solve it
N = S.nilradical_system()
print("rank", N.rank, "solutions", integer_solution_basis(N))

# %% g1hat: X8 is not diagonalizable over Q
e1 = catalog_get("g1hat_r8_22_2")
g1 = e1.algebra
try:
    root_system(g1, g1.element("X7"), e1.torus_vectors(), "X7")
except NotDiagonalizableError as exc:
    print("refused:", exc)

# %% keeping X8 as a variable without using it to split eigenspaces gives corank 1
S1 = root_system(g1, g1.element("X7"), e1.torus_vectors(), "X7", strict=False)
print("real system: rank", S1.rank, "corank", S1.corank)

# %% after complexification the corank matches the torus dimension again
gc = complexify(g1)
torus = [gc.element("X7"), gc.element("X8")]
Sc = root_system(gc, regular_vector(gc, torus), torus)
print("complex system: rank", Sc.rank, "corank", Sc.corank)
