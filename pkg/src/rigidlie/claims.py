"""Machine-checked reproduction of the published computations.

Each check returns a :class:`Claim` with a pass flag and a one-line detail.
``run_all`` is what ``rigidlie report paper`` and the acceptance tests use.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .catalog import catalog_get, catalog_keys, MU2_PRIME
from .cohomology import coboundary_matrix, cohomology_dims
from .derivations import (
    C_DIAGONALIZABLE_ONLY,
    derivation_algebra,
    is_derivation,
    semisimplicity_class,
    torus_search,
)
from .errors import SingularMatrixError
from .liealg import LieAlgebra, base_change, complexify, series, subalgebra, validate
from .linalg import Matrix, Subspace, charpoly, minpoly, poly_at
from .roots import integer_solution_basis, rank_test, root_system
from .scalars import Polynomial
from .weights import is_completely_solvable, nilradical

LIMITATION = ("not reproduced: the full dimension <= 8 classification statements rest on external "
              "classification lists; they are covered only by the catalog expectations and property suites")

# ad(X8) for g1hat as displayed in the published proof, rows top to bottom
AD_X8_PRINTED = [
    [0, -1, 0, 0, 0, 0, 0, 0],
    [1, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 1, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, -1, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0],
]

ROOT_EQUATIONS_G2HAT = [(1, 2, 3), (1, 3, 4), (1, 5, 6), (2, 3, 5), (2, 4, 6)]

T = Polynomial.T()


@dataclass
class Claim:
    key: str
    title: str
    passed: bool
    detail: str

    def line(self) -> str:
        return f"{self.key:<5} {'PASS' if self.passed else 'FAIL'}  {self.title}: {self.detail}"

    def to_json(self) -> dict:
        return {"id": self.key, "title": self.title, "passed": self.passed, "detail": self.detail}


def _alg(key: str) -> LieAlgebra:
    return catalog_get(key).algebra


def jacobi_catalog() -> Claim:
    bad = {k: len(validate(_alg(k))) for k in catalog_keys()}
    bad = {k: v for k, v in bad.items() if v}
    return Claim("AC1", "Jacobi on all catalog algebras", not bad,
                 f"{len(catalog_keys())} algebras, defects: {bad or 'none'}")


def charpoly_f12() -> Claim:
    p = charpoly(catalog_get("N6_6").named_derivations["f1_2"])
    want = T ** 2 * (T ** 2 + 1) ** 2
    return Claim("AC2", "charpoly(f1_2)", p == want, f"{p}")


def ad_x8_g1hat() -> Claim:
    g = _alg("g1hat_r8_22_2")
    from .liealg import ad

    A = ad(g, g.element("X8"))
    m = minpoly(A)
    cls = semisimplicity_class(A)
    ok = A == Matrix(AD_X8_PRINTED) and m == T ** 3 + T and cls == C_DIAGONALIZABLE_ONLY
    return Claim("AC3", "ad(X8) on g1hat", ok,
                 f"matches printed matrix: {A == Matrix(AD_X8_PRINTED)}; minpoly {m}; {cls}")


def f11_f12_commute() -> Claim:
    e = catalog_get("N6_6")
    f11, f12 = e.named_derivations["f1_1"], e.named_derivations["f1_2"]
    comm = f11 @ f12 == f12 @ f11
    d1, d2 = is_derivation(e.algebra, f11), is_derivation(e.algebra, f12)
    return Claim("AC4", "f1_1, f1_2 commuting derivations of g1", comm and not d1 and not d2,
                 f"commute: {comm}; Leibniz defects {len(d1)}, {len(d2)}")


def _spectrum(M: Matrix) -> list:
    from .linalg import eigenvalues

    return sorted(eigenvalues(M), key=lambda s: s.sort_key())


def spectra_g1() -> Claim:
    e = catalog_get("N6_7")
    s1 = _spectrum(e.named_derivations["g1_1"])
    s2 = _spectrum(e.named_derivations["g1_2"])
    ok = ([int(x.re) for x in s1] == sorted([1, 1, 2, 3, 3, 4])
          and [int(x.re) for x in s2] == sorted([-1, 1, 0, -1, 1, 0])
          and not any(x.im for x in s1 + s2))
    return Claim("AC5", "spectra of g1_1, g1_2", ok,
                 f"{[str(x) for x in s1]} and {[str(x) for x in s2]}")


def x_prime_basis() -> Claim:
    e = catalog_get("N6_7")
    P = e.base_changes["X_prime"]
    h = base_change(e.algebra, P)
    printed = LieAlgebra.from_brackets(6, MU2_PRIME)
    f21 = P.inverse() @ e.named_derivations["f2_1"] @ P
    same = h.same_table(printed)
    diag = f21 == Matrix.diag([1, 2, 3, 4, 5, 6])
    return Claim("AC6", "eigenbasis X' of N6_7", same and diag,
                 f"brackets reproduced: {same}; f2_1(X'_i) = i X'_i: {diag}")


def cohomology_h2() -> Claim:
    out, ok = [], True
    for key in ("g1hat_r8_22_2", "g2hat_r8_22_normal"):
        g = _alg(key)
        hq = cohomology_dims(g).h2
        hc = cohomology_dims(complexify(g)).h2
        ok &= hq == 0 and hc == hq
        out.append(f"{key}: h2={hq} over Q, {hc} over Q(i)")
    return Claim("AC7", "H^2 vanishes for g1hat, g2hat", ok, "; ".join(out))


def derivation_count() -> Claim:
    g = _alg("g2hat_r8_22_normal")
    rep = cohomology_dims(g, with_derivations=True)
    ok = rep.der_dim == 8 == g.dim + rep.h2
    bad = []
    for k in catalog_keys():
        r = cohomology_dims(_alg(k), with_derivations=True)
        if not r.der_consistent:
            bad.append(k)
    return Claim("AC8", "dim Der(g2hat) = dim + h2; h1 bookkeeping", ok and not bad,
                 f"dim Der = {rep.der_dim}, h2 = {rep.h2}; h1 inconsistent for: {bad or 'none'}")


def complete_solvability() -> Claim:
    r2 = is_completely_solvable(_alg("g2hat_r8_22_normal"))
    r1 = is_completely_solvable(_alg("g1hat_r8_22_2"))
    r29 = is_completely_solvable(_alg("r8_29_2"))
    ok = (r2.completely_solvable and not r1.completely_solvable and r1.witness_label == "X8"
          and not r29.completely_solvable and r29.witness_label == "X8")
    return Claim("AC9", "complete solvability", ok,
                 f"g2hat {r2.completely_solvable}; g1hat {r1.completely_solvable} (witness {r1.witness_label}); "
                 f"r8_29_2 {r29.completely_solvable} (witness {r29.witness_label})")


def nilradical_partners() -> Claim:
    ok, out = True, []
    for key in ("g1hat_r8_22_2", "g2hat_r8_22_normal", "r8_29_2"):
        e = catalog_get(key)
        N = nilradical(e.algebra)
        n = subalgebra(e.algebra, N)
        pkey, via = e.nil_partner
        partner = catalog_get(pkey)
        target = partner.algebra if via is None else base_change(partner.algebra, partner.base_changes[via])
        iso = n.same_table(target)
        ok &= N.dim == 6 and iso
        out.append(f"{key}: dim {N.dim}, = {pkey}{' via ' + via if via else ''}: {iso}")
    return Claim("AC10", "nilradicals and their partners", ok, "; ".join(out))


def root_system_g2hat() -> Claim:
    e = catalog_get("g2hat_r8_22_normal")
    g = e.algebra
    S = root_system(g, g.element("X7"), e.torus_vectors(), "X7")
    eqs = S.nilradical_equations()
    rt = rank_test(S, nilradical(g).dim)
    sols = integer_solution_basis(S.nilradical_system())
    span_ok = Subspace(6, sols) == Subspace(6, [(1, 2, 3, 4, 5, 6)])
    ok = eqs == ROOT_EQUATIONS_G2HAT and rt.passed and rt.rank == 5 and span_ok
    return Claim("AC11", "root system of g2hat at X7", ok,
                 f"{len(eqs)} nilradical equations (as listed: {eqs == ROOT_EQUATIONS_G2HAT}); "
                 f"rank {rt.rank} over {S.num_vars} variables, {'PASS' if rt.passed else 'FAIL'}; "
                 f"integer solutions {sols} span{{(1,2,3,4,5,6)}}: {span_ok}")


def complex_iso_and_tori() -> Claim:
    e6, e7 = catalog_get("N6_6"), catalog_get("N6_7")
    h = base_change(complexify(e7.algebra), e7.base_changes["complex_iso_to_N6_6"])
    iso = h.same_table(complexify(e6.algebra))
    r6 = torus_search(e6.algebra, derivation_algebra(e6.algebra)).rank_over_R
    r7 = torus_search(e7.algebra, derivation_algebra(e7.algebra)).rank_over_R
    ok = iso and r6 == 1 and r7 == 2
    return Claim("AC12", "g1 (x) C = g2 (x) C; real torus ranks differ", ok,
                 f"certificate: {iso}; torus ranks over R {r6} vs {r7}")


# -- randomized property suites ----------------------------------------------


def random_invertible(rng: random.Random, n: int, field_values=None, offdiag: int = 3) -> Matrix:
    """Sparse-ish random invertible rational matrix: identity, a few off-diagonal
    entries and a few diagonal rescalings."""
    while True:
        rows = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
        for _ in range(offdiag):
            i, j = rng.sample(range(n), 2)
            rows[i][j] = Fraction(rng.randint(-3, 3), rng.randint(1, 2))
        for i in range(n):
            if rng.random() < 0.3:
                rows[i][i] = Fraction(rng.choice([-2, -1, 2, 3])) / rng.randint(1, 2)
        P = Matrix(rows)
        try:
            P.inverse()
        except SingularMatrixError:
            continue
        return P


def random_matrix(rng: random.Random, n: int) -> Matrix:
    return Matrix([[Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(n)] for _ in range(n)])


_SMALL = [
    LieAlgebra.from_brackets(3, [(1, 2, {3: 1})], name="heisenberg"),
    LieAlgebra.from_brackets(3, [(1, 2, {3: 1}), (3, 1, {2: 1}), (2, 3, {1: 1})], name="so3"),
    LieAlgebra.from_brackets(3, [(1, 2, {2: 2}), (1, 3, {3: -2}), (2, 3, {1: 1})], name="sl2"),
    LieAlgebra.from_brackets(4, [(1, 2, {3: 1}), (1, 3, {4: 1})], name="filiform4"),
    LieAlgebra.from_brackets(4, [(1, 2, {2: 1}), (3, 4, {4: 1})], name="r2+r2"),
    LieAlgebra.from_brackets(4, [(4, 1, {1: 1}), (4, 2, {2: 1}), (4, 3, {3: 2}), (1, 2, {3: 1})], name="heis+diag"),
]


def property_dd_zero(count: int = 100, seed: int = 0) -> tuple[int, list[str]]:
    """d^{k+1} d^k = 0 on random base changes of small algebras."""
    rng = random.Random(seed)
    fails = []
    for t in range(count):
        g = _SMALL[t % len(_SMALL)]
        h = base_change(g, random_invertible(rng, g.dim))
        for k in (0, 1):
            if not (coboundary_matrix(h, k + 1) @ coboundary_matrix(h, k)).is_zero():
                fails.append(f"{g.name} #{t} k={k}")
    return count, fails


def property_cayley_hamilton(count: int = 100, seed: int = 1) -> tuple[int, list[str]]:
    rng = random.Random(seed)
    fails = []
    for t in range(count):
        M = random_matrix(rng, 1 + t % 6)
        if not poly_at(charpoly(M), M).is_zero():
            fails.append(f"#{t}")
    return count, fails


def fingerprint(g: LieAlgebra) -> tuple:
    c = cohomology_dims(g)
    return (tuple(series(g, "lower_central").dims), tuple(series(g, "derived").dims), c.dims(),
            is_completely_solvable(g).completely_solvable)


def property_base_change(per_entry: int = 20, seed: int = 2) -> tuple[int, list[str]]:
    rng = random.Random(seed)
    fails, total = [], 0
    for key in catalog_keys():
        g = _alg(key)
        ref = fingerprint(g)
        for t in range(per_entry):
            total += 1
            if fingerprint(base_change(g, random_invertible(rng, g.dim))) != ref:
                fails.append(f"{key} #{t}")
    return total, fails


def property_suites(count: int = 100, per_entry: int = 20) -> Claim:
    n1, f1 = property_dd_zero(count)
    n2, f2 = property_cayley_hamilton(count)
    n3, f3 = property_base_change(per_entry)
    ok = not (f1 or f2 or f3)
    return Claim("AC13", "randomized property suites", ok,
                 f"d∘d=0 {n1 - len(f1)}/{n1}; Cayley-Hamilton {n2 - len(f2)}/{n2}; "
                 f"base-change invariance {n3 - len(f3)}/{n3}")


CHECKS = [
    jacobi_catalog, charpoly_f12, ad_x8_g1hat, f11_f12_commute, spectra_g1, x_prime_basis,
    cohomology_h2, derivation_count, complete_solvability, nilradical_partners,
    root_system_g2hat, complex_iso_and_tori, property_suites,
]


def run_all(quick: bool = False) -> list[Claim]:
    out = []
    for check in CHECKS:
        if quick and check is property_suites:
            out.append(property_suites(count=10, per_entry=2))
        else:
            out.append(check())
    return out
