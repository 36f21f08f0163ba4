"""Command-line front end.

Exit status: 0 when the analysis ran and nothing was refuted, 1 when the
mathematics says no (Jacobi defects, a FAIL verdict, a failed certificate),
2 on bad input.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import claims
from .catalog import catalog_get, catalog_keys
from .cohomology import cohomology_dims, rigidity_certificate
from .derivations import (
    DEFAULT_HEIGHT,
    derivation_algebra,
    semisimplicity_class,
    torus_search,
)
from .errors import (
    FieldError,
    NotDiagonalizableError,
    NotSolvableError,
    NotSplitError,
    RigidLieError,
    StructureError,
)
from .liealg import (
    SCHEMA_VERSION,
    LieAlgebra,
    ad,
    base_change,
    center,
    complement_basis,
    complexify,
    series,
    validate,
)
from .linalg import Matrix, charpoly, minpoly
from .roots import integer_solution_basis, rank_test, regular_vector, root_system
from .scalars import Q, QI, parse_scalar
from .weights import is_completely_solvable, nilradical, weights_split

OK, MATH_FAIL, BAD_INPUT = 0, 1, 2


class InputError(Exception):
    pass


# -- input handling ------------------------------------------------------------


def _real_form(g: LieAlgebra) -> LieAlgebra:
    if any(c.im for terms in g.table.values() for _, c in terms):
        raise FieldError(f"{g.name or 'algebra'} has non-real structure constants; cannot read it over Q")
    return LieAlgebra(g.dim, {key: [(k, c.in_field(Q)) for k, c in terms] for key, terms in g.table.items()},
                      field=Q, name=g.name, basis_names=g.basis_names)


def load_algebra(source: str, field: str | None = None) -> tuple[LieAlgebra, object]:
    """Catalog key or JSON file; returns the algebra and the catalog entry (or None)."""
    entry = None
    if source in catalog_keys():
        entry = catalog_get(source)
        g = entry.algebra
    else:
        path = Path(source)
        if not path.is_file():
            raise InputError(f"{source!r} is neither a catalog key ({', '.join(catalog_keys())}) nor a file")
        g = LieAlgebra.loads(path.read_text())
    if field and field != g.field:
        g = complexify(g) if field == QI else _real_form(g)
    return g, entry


def load_matrix(path: str) -> Matrix:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read matrix file {path!r}: {exc.strerror}") from exc
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"unparseable JSON in {path} at line {exc.lineno} column {exc.colno}: {exc.msg}") from exc
    if isinstance(data, dict):
        data = data.get("matrix")
    if not isinstance(data, list) or not data or not all(isinstance(r, list) for r in data):
        raise InputError(f"{path}: expected a list of rows of scalar strings")
    return Matrix.from_json(data)


def parse_element(g: LieAlgebra, text: str) -> tuple:
    if text in g.basis_names:
        return g.element(text)
    parts = [p for p in text.split(",")]
    if len(parts) != g.dim:
        raise InputError(f"element must be a basis label ({', '.join(g.basis_names)}) or {g.dim} comma-separated scalars")
    return g.coerce_vector([parse_scalar(p) for p in parts])


def _need_real(g: LieAlgebra, what: str):
    if g.field != Q:
        raise FieldError(f"{what} is a real (Q) analysis; got an algebra over {g.field}")


# -- subcommands -------------------------------------------------------------
# each returns (text, payload, exit status)


def cmd_validate(args):
    g, _ = load_algebra(args.input, args.field)
    defects = validate(g)
    lines = [f"{g.name or args.input}: dim {g.dim} over {g.field}"]
    if defects:
        lines.append(f"Jacobi FAILS on {len(defects)} triple(s):")
        for (i, j, k), v in defects:
            lines.append(f"  ({i},{j},{k}): {g.describe_vector(v)}")
    else:
        lines.append("Jacobi identity holds (0 defects)")
    payload = {"defects": [{"triple": list(t), "value": [str(c) for c in v]} for t, v in defects]}
    return "\n".join(lines), payload, MATH_FAIL if defects else OK


def cmd_series(args):
    g, _ = load_algebra(args.input, args.field)
    lc, dr = series(g, "lower_central"), series(g, "derived")
    z = center(g).dim
    text = f"lower central: {lc}\nderived:       {dr}\ncenter dim:    {z}"
    return text, {"lower_central": lc.to_json(), "derived": dr.to_json(), "center_dim": z}, OK


def cmd_ad(args):
    g, _ = load_algebra(args.input, args.field)
    x = parse_element(g, args.element)
    A = ad(g, x)
    cp, mp = charpoly(A), minpoly(A)
    label = g.describe_vector(x)
    payload = {"element": label, "matrix": A.to_json(), "charpoly": str(cp), "minpoly": str(mp)}
    lines = [f"ad({label}) =", str(A), f"charpoly: {cp}", f"minpoly:  {mp}"]
    if g.field == Q:
        cls = semisimplicity_class(A)
        payload["semisimplicity"] = cls
        lines.append(f"class:    {cls}")
    return "\n".join(lines), payload, OK


def cmd_derivations(args):
    g, _ = load_algebra(args.input, args.field)
    der = derivation_algebra(g)
    lines = [f"dim Der = {der.dim}"]
    if args.verbose:
        for n, D in enumerate(der.basis, 1):
            lines += [f"D{n} =", str(D)]
    return "\n".join(lines), {"dim": der.dim, "basis": [D.to_json() for D in der.basis]}, OK


def _height(args) -> int:
    if args.height is not None:
        return args.height
    env = os.environ.get("RIGIDLIE_HEIGHT")
    if env:
        try:
            return int(env)
        except ValueError:
            raise InputError(f"RIGIDLIE_HEIGHT must be an integer, got {env!r}") from None
    return DEFAULT_HEIGHT


def cmd_torus(args):
    g, _ = load_algebra(args.input, args.field)
    _need_real(g, "torus search")
    h = _height(args)
    if h < 1:
        raise InputError("height must be at least 1")
    rep = torus_search(g, derivation_algebra(g), height=h)
    lines = [f"torus rank over R: {rep.rank_over_R}", f"({rep.banner})"]
    for n, D in enumerate(rep.generators, 1):
        diag = [str(x) for x in D.diagonal()] if D.is_upper_triangular() and D.T.is_upper_triangular() else None
        lines.append(f"t{n} = diag({', '.join(diag)})" if diag else f"t{n} =\n{D}")
    return "\n".join(lines), rep.to_json(), OK


def cmd_cohomology(args):
    g, _ = load_algebra(args.input, args.field)
    rep = cohomology_dims(g, with_derivations=True)
    cert = rigidity_certificate(g)
    text = (f"h0={rep.h0} h1={rep.h1} h2={rep.h2}; certificate: {cert.verdict}\n"
            f"dim Der = {rep.der_dim} (h1 bookkeeping {'consistent' if rep.der_consistent else 'INCONSISTENT'})")
    payload = rep.to_json()
    payload["certificate"] = cert.to_json()
    return text, payload, OK if rep.der_consistent else MATH_FAIL


def _default_torus(g: LieAlgebra, entry) -> list[tuple]:
    if entry is not None and entry.torus:
        return entry.torus_vectors()
    N = nilradical(g)
    comp = complement_basis(g, N)
    if not comp:
        raise InputError("algebra is nilpotent: no torus vector inside it; pass --torus")
    return comp


def cmd_roots(args):
    g, entry = load_algebra(args.input, args.field)
    if args.over_c and g.field == Q:
        g = complexify(g)
    if args.torus:
        torus = [parse_element(g, t) for t in args.torus.split(";")]
    else:
        torus = [g.coerce_vector(t) for t in _default_torus(g, entry)]
    X = parse_element(g, args.at) if args.at else regular_vector(g, torus)
    label = g.describe_vector(X)
    try:
        S = root_system(g, X, torus, label=label)
    except NotDiagonalizableError as exc:
        hint = "" if g.field == QI else "; rerun with --over-C to work over Q(i)"
        msg = f"root system refused over {g.field}: {exc}{hint}"
        return msg, {"refused": True, "reason": str(exc), "field": g.field}, MATH_FAIL
    nil_dim = S.nil_vars
    rt = rank_test(S, nil_dim)
    sols = integer_solution_basis(S)
    lines = [f"regular vector {label}; {len(S.equations)} equations in {S.num_vars} variables "
             f"({len(S.nilradical_equations())} inside the nilradical)",
             S.table(),
             f"rank {rt.rank}, corank {S.corank}; {'PASS' if rt.passed else 'FAIL'}: {rt.note}",
             "integer solution basis: " + ", ".join(str(tuple(v)) for v in sols)]
    lines += [f"note: {n}" for n in S.notes]
    payload = S.to_json()
    payload.update({"regular_vector": label, "field": g.field, "rank_test": rt.to_json()})
    return "\n".join(lines), payload, OK if rt.passed else MATH_FAIL


def cmd_solvability(args):
    g, _ = load_algebra(args.input, args.field)
    _need_real(g, "complete solvability")
    rep = is_completely_solvable(g)
    if rep.completely_solvable:
        text = "completely solvable: YES"
    else:
        text = (f"completely solvable: NO; witness {rep.witness_label}; "
                f"min poly of ad({rep.witness_label}): {rep.witness_minpoly}\n"
                f"eigenvalues: {', '.join(str(v) for v in rep.witness_eigenvalues)}")
    return text, rep.to_json(), OK if rep.completely_solvable else MATH_FAIL


def cmd_nilradical(args):
    g, _ = load_algebra(args.input, args.field)
    N = nilradical(g)
    ws = weights_split(g)
    lines = [f"nilradical dim {N.dim}"] + [f"  {g.describe_vector(v)}" for v in N.vectors()]
    lines.append("weights on the flag basis (value at each basis element):")
    for j, w in enumerate(ws.weights, 1):
        lines.append(f"  lambda_{j} = ({', '.join(str(c) for c in w)})")
    payload = {"dim": N.dim, "basis": [[str(c) for c in v] for v in N.vectors()], "weights": ws.to_json()}
    return "\n".join(lines), payload, OK


def cmd_complexify(args):
    g, _ = load_algebra(args.input, args.field)
    h = complexify(g)
    return h.dumps(), {"algebra": h.to_json()}, OK


def _fingerprint(g: LieAlgebra) -> dict:
    c = cohomology_dims(g, with_derivations=True)
    return {
        "dim": g.dim,
        "lower_central": series(g, "lower_central").dims,
        "derived": series(g, "derived").dims,
        "center_dim": center(g).dim,
        "der_dim": c.der_dim,
        "h0_h1_h2": list(c.dims()),
    }


def cmd_compare(args):
    a, _ = load_algebra(args.a, args.field)
    b, _ = load_algebra(args.b, args.field)
    P = load_matrix(args.via) if args.via else None
    if P is not None and P.field == QI or a.field != b.field:
        a = a if a.field == QI else complexify(a)
        b = b if b.field == QI else complexify(b)
    fa, fb = _fingerprint(a), _fingerprint(b)
    diff = [k for k in fa if fa[k] != fb[k]]
    payload = {"field": a.field, "fingerprint_a": fa, "fingerprint_b": fb, "differs_in": diff}
    lines = [f"over {a.field}: " + ("fingerprints agree" if not diff else f"fingerprints differ in {', '.join(diff)}")]
    for k in diff:
        lines.append(f"  {k}: {fa[k]} vs {fb[k]}")
    status = OK
    if diff:
        lines.append("NOT isomorphic (an isomorphism invariant differs)")
        payload["verdict"] = "not isomorphic"
        status = MATH_FAIL
    if P is not None:
        if P.shape != (a.dim, a.dim):
            raise InputError(f"matrix is {P.shape[0]}x{P.shape[1]}, algebras have dimension {a.dim}")
        h = base_change(a, P)
        ok = h.same_table(b)
        mismatch = sorted(set(h.table) ^ set(b.table) | {k for k in h.table if k in b.table and h.table[k] != b.table[k]})
        payload["certificate"] = {"verified": ok, "mismatched_pairs": [list(k) for k in mismatch]}
        if ok:
            lines.append("certificate verified: P^-1 [P x, P y]_A equals [x, y]_B on every basis pair")
            payload["verdict"] = "isomorphic"
        else:
            lines.append(f"certificate FAILS on {len(mismatch)} bracket pair(s): {mismatch[:6]}")
            status = MATH_FAIL
    elif not diff:
        payload["verdict"] = "undecided"
        if a.field == Q:
            ra = torus_search(a, derivation_algebra(a)).rank_over_R
            rb = torus_search(b, derivation_algebra(b)).rank_over_R
            payload["torus_rank_R_heuristic"] = [ra, rb]
            lines.append(f"torus rank over R found by bounded search: {ra} vs {rb}")
            if ra != rb:
                lines.append("the search separates them over R (heuristic: a larger torus may lie outside the grid)")
                payload["verdict"] = "undecided (heuristic torus ranks differ)"
        lines.append("no certificate given; isomorphism not decided")
    return "\n".join(lines), payload, status


def cmd_catalog(args):
    if args.action == "list":
        rows = [(k, catalog_get(k).label, catalog_get(k).algebra.dim) for k in catalog_keys()]
        text = "\n".join(f"{k:<20} dim {d}  {lab}" for k, lab, d in rows)
        return text, {"entries": [{"key": k, "label": lab, "dim": d} for k, lab, d in rows]}, OK
    if not args.key:
        raise InputError(f"catalog {args.action} needs a key")
    e = catalog_get(args.key)
    if args.action == "export":
        return e.algebra.dumps(), {"algebra": e.algebra.to_json()}, OK
    lines = [f"{e.key}: {e.label} (dim {e.algebra.dim} over {e.algebra.field})", e.algebra.pretty()]
    if e.torus:
        lines.append(f"torus: {', '.join(e.torus)}")
    if e.nil_partner:
        pk, via = e.nil_partner
        lines.append(f"nilradical partner: {pk}" + (f" via {via}" if via else ""))
    for name in e.named_derivations:
        lines.append(f"derivation {name}")
    for name in e.base_changes:
        lines.append(f"base change {name}")
    for claim, (value, tag) in e.expectations.items():
        lines.append(f"expect {claim} = {value} [{tag}]")
    payload = {
        "key": e.key, "label": e.label, "algebra": e.algebra.to_json(), "torus": list(e.torus),
        "nil_partner": list(e.nil_partner) if e.nil_partner else None,
        "named_derivations": {k: m.to_json() for k, m in e.named_derivations.items()},
        "base_changes": {k: m.to_json() for k, m in e.base_changes.items()},
        "expectations": {k: {"value": v, "provenance": t} for k, (v, t) in e.expectations.items()},
    }
    return "\n".join(lines), payload, OK


def cmd_report(args):
    results = claims.run_all(quick=args.quick)
    lines = [c.line() for c in results]
    passed = sum(c.passed for c in results)
    lines.append(f"{passed}/{len(results)} claims pass")
    lines.append(claims.LIMITATION)
    payload = {"claims": [c.to_json() for c in results], "limitation": claims.LIMITATION}
    return "\n".join(lines), payload, OK if passed == len(results) else MATH_FAIL


# -- parser ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--field", choices=[Q, QI], help="read the algebra over this field")

    p = argparse.ArgumentParser(prog="rigidlie", description="Exact computations with small Lie algebras.")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, help_, inp=True):
        sp = sub.add_parser(name, parents=[common], help=help_)
        if inp:
            sp.add_argument("input", help="catalog key or JSON file")
        sp.set_defaults(func=func)
        return sp

    add("validate", cmd_validate, "check the Jacobi identity")
    add("series", cmd_series, "lower central and derived series")
    sp = add("ad", cmd_ad, "adjoint matrix, charpoly and minpoly of an element")
    sp.add_argument("element", help="basis label such as X8, or comma-separated coefficients")
    sp = add("derivations", cmd_derivations, "derivation algebra")
    sp.add_argument("-v", "--verbose", action="store_true", help="print a basis")
    sp = add("torus", cmd_torus, "bounded search for a maximal R-diagonalizable torus")
    sp.add_argument("--height", type=int, default=None, help=f"coefficient bound (default {DEFAULT_HEIGHT}, env RIGIDLIE_HEIGHT)")
    add("cohomology", cmd_cohomology, "dimensions of H^0, H^1, H^2 with adjoint coefficients")
    sp = add("roots", cmd_roots, "linear system of roots at a regular vector")
    sp.add_argument("--over-C", dest="over_c", action="store_true", help="complexify first")
    sp.add_argument("--at", help="torus vector to use instead of the regular-vector search")
    sp.add_argument("--torus", help="torus generators separated by ';' (labels or coefficient lists)")
    add("solvability", cmd_solvability, "complete solvability with a witness")
    add("nilradical", cmd_nilradical, "nilradical and weights")
    add("complexify", cmd_complexify, "tensor with Q(i), JSON output")
    sp = add("compare", cmd_compare, "invariant screening and optional isomorphism certificate", inp=False)
    sp.add_argument("a")
    sp.add_argument("b")
    sp.add_argument("--via", help="JSON file with P (list of rows); checks base_change(a, P) == b")
    sp = add("catalog", cmd_catalog, "built-in algebras", inp=False)
    sp.add_argument("action", choices=["list", "show", "export"])
    sp.add_argument("key", nargs="?")
    sp = add("report", cmd_report, "rerun the published computations", inp=False)
    sp.add_argument("what", choices=["paper"])
    sp.add_argument("--quick", action="store_true", help="smaller randomized suites")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        text, payload, status = args.func(args)
    except (InputError, StructureError, FieldError) as exc:
        if getattr(args, "json", False):
            print(json.dumps({"schema_version": SCHEMA_VERSION, "command": args.command, "error": str(exc)}))
        print(f"rigidlie: error: {exc}", file=sys.stderr)
        return BAD_INPUT
    except (NotSolvableError, NotSplitError, NotDiagonalizableError) as exc:
        text, payload, status = f"FAIL: {exc}", {"error": str(exc)}, MATH_FAIL
    except RigidLieError as exc:  # pragma: no cover - internal consistency failure
        print(f"rigidlie: internal error: {exc}", file=sys.stderr)
        return MATH_FAIL
    if args.json:
        out = {"schema_version": SCHEMA_VERSION, "command": args.command, "exit_status": status}
        out.update(payload)
        print(json.dumps(out, ensure_ascii=False, indent=2, default=str))
    else:
        print(text)
    return status


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
