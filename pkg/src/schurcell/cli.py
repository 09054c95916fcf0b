"""schurcell command line.

Exit codes: 0 pass, 1 verification failure, 2 input error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from graphlib import CycleError, TopologicalSorter
from math import comb

from . import basedalg as ba
from . import cauchy
from . import cellular as cl
from . import combo
from . import exactlin as el
from . import weyl
from . import wreath as wr

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class InputError(ValueError):
    pass


def canonical_json(data) -> str:
    return json.dumps(data, sort_keys=True, indent=1, ensure_ascii=False)


# -- loading ----------------------------------------------------------------------


def order_cells(data: dict, toposort: bool) -> dict:
    """Linearize the cell list of a spec file.

    A cell may carry ``below``: labels of the cells strictly below it.  Without
    --toposort the given list must already list every cell after the cells
    below it; with it the list is reordered (ties keep file order).
    """
    cells = data.get("cells")
    if not isinstance(cells, list) or not any(isinstance(c, dict) and "below" in c for c in cells):
        return data
    labels = [str(c.get("label")) for c in cells]
    graph = {}
    for ci, c in enumerate(cells):
        below = [str(x) for x in c.get("below", [])]
        unknown = [b for b in below if b not in labels]
        if unknown:
            raise ba.SpecFileError(f"cells[{ci}].below", f"unknown cell labels {unknown}")
        graph[labels[ci]] = below
    if not toposort:
        seen = set()
        for ci, lab in enumerate(labels):
            missing = [b for b in graph[lab] if b not in seen]
            if missing:
                raise ba.SpecFileError(f"cells[{ci}]", f"listed before cells below it {missing}; use --toposort")
            seen.add(lab)
        return data
    ts = TopologicalSorter()
    for lab in labels:
        ts.add(lab, *graph[lab])
    try:
        order = list(ts.static_order())
    except CycleError as exc:
        raise ba.SpecFileError("cells", f"cell order has a cycle: {exc.args[1]}") from None
    pos = {lab: i for i, lab in enumerate(order)}
    out = dict(data)
    out["cells"] = sorted(cells, key=lambda c: pos[str(c.get("label"))])
    return out


def load_algebra(args) -> ba.BasedAlgebra:
    if getattr(args, "builtin", None):
        return ba.builtin(args.builtin)
    if getattr(args, "spec", None):
        try:
            with open(args.spec, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise InputError(f"cannot read {args.spec}: {exc.strerror}") from None
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ba.SpecFileError("$", f"invalid JSON: {exc}") from None
        if not isinstance(data, dict):
            raise ba.SpecFileError("$", "expected a JSON object")
        return ba.from_json(order_cells(data, getattr(args, "toposort", False)))
    raise InputError("give --builtin NAME or --spec PATH")


def check_limits(args, rank: int, d: int) -> None:
    """Refuse instances past the soft limits unless --force."""
    if args.force:
        return
    max_rank = args.max_rank
    if d <= 4 and rank <= max_rank:
        return
    tensor = rank ** d
    gamma = comb(rank + d - 1, d)
    raise InputError(
        f"instance over the soft limits (d <= 4, rank <= {max_rank}): rank {rank}, d {d}; "
        f"Gamma^d has rank {gamma}, the tensor expansion has {tensor} entries and the "
        f"product table {gamma * gamma} entries; pass --force to run anyway"
    )


# -- commands ---------------------------------------------------------------------


def cmd_builtin(args, out) -> int:
    out.write(ba.dumps(ba.builtin(args.name)) + "\n")
    return EXIT_OK


def cmd_algebra_validate(args, out) -> int:
    A = load_algebra(args)
    reports = [ba.validate(A)]
    ok = reports[0].ok
    lines = [reports[0].summary()]
    if ok and A.cells is not None:
        cr = cl.verify_axioms(A, A.cells)
        lines.append(cr.summary())
        ok = ok and cr.ok
        if cr.ok:
            rep = ba.check_chain(A, ba.gl_to_kx(A, check=False))
            lines.append(rep.summary())
            ok = ok and rep.ok
    for line in lines:
        out.write(line + "\n")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_gamma_basis(args, out) -> int:
    A = load_algebra(args)
    if args.d < 0:
        raise InputError("d must be nonnegative")
    check_limits(args, A.dim, args.d)
    weights = combo.enumerate_weights(A.dim, args.d)
    if args.format == "json":
        data = {"algebra": A.name, "d": args.d,
                "basis": [{"weight": list(w), "monomial": cl.format_monomial(A, w)} for w in weights]}
        out.write(canonical_json(data) + "\n")
    else:
        for i, w in enumerate(weights):
            out.write(f"{i}\t{','.join(map(str, w))}\t{cl.format_monomial(A, w)}\n")
    return EXIT_OK


def cmd_cellular(args, out) -> int:
    A = load_algebra(args)
    if args.n < 1 or args.d < 0:
        raise InputError("need n >= 1 and d >= 0")
    if A.cells is None:
        raise InputError(f"algebra {A.name} has no cell datum")
    check_limits(args, args.n * args.n * A.dim, args.d)
    t0 = time.perf_counter()
    M = ba.matrix_algebra(A, args.n)
    Z = cl.cellular_basis_gamma(M, args.d, check_closure=args.check_closure)
    report = None
    if not args.no_verify:
        report = cl.verify_axioms(cl.gamma_algebra(M, args.d), Z.cell_datum(), sample=args.sample)
    if args.format == "json":
        data = cl.zbasis_json(Z)
        data["base"] = ba.to_json(A)
        data["n"] = args.n
        data["sample"] = args.sample
        if report is not None:
            data["verification"] = report.to_json()
        out.write(canonical_json(data) + "\n")
    else:
        out.write(cl.format_table(Z) + "\n")
        if report is not None:
            print(f"verify: {report.summary()}", file=sys.stderr)
    print(f"{len(Z)} basis elements in {time.perf_counter() - t0:.2f}s", file=sys.stderr)
    if report is not None and not report.ok:
        return EXIT_FAIL
    return EXIT_OK


def _tuplify(x):
    return tuple(_tuplify(v) for v in x) if isinstance(x, list) else x


def reverify_data(data: dict) -> cl.CellReport:
    """Rebuild S^A(n, d) from an emitted JSON document and re-run the verifier."""
    try:
        A = ba.from_json(data["base"])
        n, d = int(data["n"]), int(data["d"])
        B = cl.gamma_algebra(ba.matrix_algebra(A, n), d)
        cells = []
        for cd in reversed(data["cells"]):
            M, C = [], {}
            for e in cd["elements"]:
                S, T = _tuplify(e["S"]), _tuplify(e["T"])
                if S not in M:
                    M.append(S)
                C[(S, T)] = [el.rational(x) for x in e["coordinates"]]
            cells.append(ba.Cell(_tuplify(cd["lambda"]), M, C))
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"malformed cellular JSON: {exc}") from None
    return cl.verify_axioms(B, ba.CellDatum(cells), sample=data.get("sample"))


def cmd_reverify(args, out) -> int:
    try:
        with open(args.path, encoding="utf-8") as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read {args.path}: {exc}") from None
    report = reverify_data(data)
    fresh = report.to_json()
    out.write(canonical_json(fresh) + "\n")
    old = data.get("verification")
    if old is not None and canonical_json(old) != canonical_json(fresh):
        print("verdicts differ from the recorded ones", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK if report.ok else EXIT_FAIL


def _parse_lambda(text: str):
    try:
        lam = combo.parse_partition(text)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    return lam


def cmd_weyl_rank(args, out) -> int:
    lam = _parse_lambda(args.lam)
    if args.dim < 1:
        raise InputError("dim must be positive")
    out.write(f"{weyl.weyl_rank(lam, args.dim)}\n")
    return EXIT_OK


def cmd_cauchy_check(args, out) -> int:
    if args.dimU < 1 or args.dimV < 1 or args.d < 0:
        raise InputError("need dimU, dimV >= 1 and d >= 0")
    check_limits(args, args.dimU * args.dimV, args.d)
    F = cauchy.classical_bimodule(args.dimU, args.dimV)
    filt = cauchy.cauchy_filtration(F, args.d, check_closure=True)
    ranks = []
    for cell in reversed(filt.cells):  # dominance-largest partition first
        lam = cell.mp[0]
        expected = weyl.weyl_rank(lam, args.dimU) * weyl.weyl_rank(lam, args.dimV)
        ranks.append(cell.rank)
        flag = "" if cell.rank == expected else f"  (expected {expected})"
        out.write(f"{combo.format_partition(lam)}\t{cell.rank}{flag}\n")
    total = comb(args.dimU * args.dimV + args.d - 1, args.d)
    out.write(f"{total} = {' + '.join(map(str, ranks)) or '0'}\n")
    out.write(filt.report.summary() + "\n")
    ok = filt.report.ok and sum(ranks) == total
    return EXIT_OK if ok else EXIT_FAIL


def cmd_wreath(args, out) -> int:
    A = load_algebra(args)
    if args.d < 1:
        raise InputError("d must be at least 1")
    if A.cells is None:
        raise InputError(f"algebra {A.name} has no cell datum")
    check_limits(args, args.d * args.d * A.dim, args.d)
    res = wr.wreath_cellular(A, args.d, sample=args.sample)
    reports = [res.ek.verify()]
    if args.tensor_space:
        reports.append(wr.tensor_space_check(A, args.d, args.d, res.ek))
    ok = res.report.ok and all(r.ok for r in reports)
    if args.format == "json":
        data = {
            "algebra": res.W.name,
            "dim": res.W.dim,
            "basis": res.W.labels,
            "cells": [{"lambda": combo.format_multipartition(c.label), "size": len(c.M)} for c in res.datum.cells],
            "verification": res.report.to_json(),
            "checks": {r.name: ("pass" if r.ok else "fail") for r in reports},
        }
        out.write(canonical_json(data) + "\n")
    else:
        out.write(f"{res.W.name}: dim {res.W.dim}\n")
        for c in res.datum.cells:
            out.write(f"{combo.format_multipartition(c.label)}\t{len(c.M)}\n")
        out.write(res.report.summary() + "\n")
        for r in reports:
            out.write(r.summary() + "\n")
    return EXIT_OK if ok else EXIT_FAIL


# -- parser -----------------------------------------------------------------------


def _source(p):
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--builtin", help="builtin algebra: " + ", ".join(sorted(ba.BUILTINS)) + " or matrix(n)")
    g.add_argument("--spec", help="algebra spec file (JSON)")
    p.add_argument("--toposort", action="store_true", help="order cells using their 'below' lists")


def _limits(p):
    p.add_argument("--max-rank", type=int, default=16, help="soft limit on the ambient rank (default 16)")
    p.add_argument("--force", action="store_true", help="ignore the soft limits")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="schurcell", description="cellular bases of generalized Schur algebras")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("builtin", help="print a builtin algebra as a spec file")
    p.add_argument("name")
    p.set_defaults(func=cmd_builtin)

    p = sub.add_parser("algebra", help="algebra utilities")
    asub = p.add_subparsers(dest="action", required=True)
    v = asub.add_parser("validate", help="check associativity, unit, anti-involution and cells")
    _source(v)
    v.set_defaults(func=cmd_algebra_validate)

    p = sub.add_parser("gamma-basis", help="list the basis of Gamma^d A")
    _source(p)
    p.add_argument("-d", type=int, required=True)
    p.add_argument("--format", choices=["table", "json"], default="table")
    _limits(p)
    p.set_defaults(func=cmd_gamma_basis)

    p = sub.add_parser("cellular", help="cellular basis of S^A(n, d)")
    _source(p)
    p.add_argument("-n", type=int, default=1)
    p.add_argument("-d", type=int, required=True)
    p.add_argument("--format", choices=["table", "json"], default="table")
    p.add_argument("--no-verify", action="store_true", help="skip the axiom check")
    p.add_argument("--sample", type=int, default=None, help="check C3 on N random basis elements only")
    p.add_argument("--check-closure", action="store_true", help="also check each filtration step is a sub-bimodule")
    _limits(p)
    p.set_defaults(func=cmd_cellular)

    p = sub.add_parser("reverify", help="re-run the verifier on JSON emitted by 'cellular'")
    p.add_argument("path")
    p.set_defaults(func=cmd_reverify)

    p = sub.add_parser("weyl-rank", help="rank of the Weyl module W_lambda(k^n)")
    p.add_argument("--lambda", dest="lam", required=True, help="partition, e.g. 2,1")
    p.add_argument("--dim", type=int, required=True)
    p.set_defaults(func=cmd_weyl_rank)

    p = sub.add_parser("cauchy-check", help="classical Cauchy filtration of Gamma^d(U (x) V)")
    p.add_argument("--dimU", type=int, required=True)
    p.add_argument("--dimV", type=int, required=True)
    p.add_argument("-d", type=int, required=True)
    _limits(p)
    p.set_defaults(func=cmd_cauchy_check)

    p = sub.add_parser("wreath", help="cellular datum for A wr S_d")
    _source(p)
    p.add_argument("-d", type=int, default=2)
    p.add_argument("--format", choices=["table", "json"], default="table")
    p.add_argument("--sample", type=int, default=None)
    p.add_argument("--tensor-space", action="store_true", help="also check the tensor space and the commutant")
    _limits(p)
    p.set_defaults(func=cmd_wreath)
    return ap


def run(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except ba.SpecFileError as exc:
        print(f"error: spec file: {exc}", file=sys.stderr)
    except (InputError, ba.AlgebraError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
    return EXIT_INPUT


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
