"""Cellular bases of Gamma^d A and S^A(n, d), the axiom verifier, standard
modules and the table/JSON emitters.
"""

from __future__ import annotations

import random
import re
import time
from dataclasses import dataclass, field

from . import basedalg as ba
from . import cauchy
from . import combo
from . import divpow as dp
from . import exactlin as el
from .exactlin import Q


# -- Gamma^d A as a based algebra ---------------------------------------------


def gamma_algebra(A: ba.BasedAlgebra, d: int) -> ba.BasedAlgebra:
    """Gamma^d A with basis x^mu (descending lex weights), inner product and tau^{(x) d}."""
    weights = combo.enumerate_weights(A.dim, d)
    idx = {w: i for i, w in enumerate(weights)}
    n = len(weights)
    mult = [[None] * n for _ in range(n)]
    for i, mu in enumerate(weights):
        for j, nu in enumerate(weights):
            prod = dp.inner_basis_product(A, mu, nu) if d else {mu: Q(1)}
            mult[i][j] = {idx[rho]: c for rho, c in prod.items()}
    unit = dp.gamma_unit(A, d).to_vector()
    tau = [dp.gamma_tau(A, dp.DividedElement.basis(A.dim, mu)).to_vector() for mu in weights]
    labels = [format_monomial(A, mu) for mu in weights]
    name = f"Gamma^{d}({A.name})"
    return ba.BasedAlgebra(name, labels, mult, unit, tau)


# -- printing -----------------------------------------------------------------

_COMPOUND = re.compile(r"([A-Za-z]+_[0-9]+){2,}|.*[+ *]")


def _letter(label: str) -> str:
    """Parenthesize compound labels such as products of arrows."""
    return f"({label})" if _COMPOUND.fullmatch(label) else label


def format_monomial(A: ba.BasedAlgebra, mu) -> str:
    """x^mu as a shuffle product of basis letters in basis order."""
    parts = []
    for b, k in enumerate(mu):
        if k == 0:
            continue
        letter = _letter(A.labels[b])
        parts.append(letter if k == 1 else f"{letter}^{{⊗{k}}}")
    return " ∗ ".join(parts) if parts else "1"


def format_element(A: ba.BasedAlgebra, x: dp.DividedElement) -> str:
    """Terms in descending lexicographic weight order; coefficients as p/q."""
    if x.is_zero():
        return "0"
    out = []
    for mu in sorted(x.coeffs, reverse=True):
        c = x.coeffs[mu]
        mono = format_monomial(A, mu)
        if c == 1:
            term = mono
        elif c == -1:
            term = f"-{mono}"
        else:
            term = f"{c}·{mono}"
        out.append(term)
    text = out[0]
    for t in out[1:]:
        text += f" - {t[1:]}" if t.startswith("-") else f" + {t}"
    return text


# -- z bases ----------------------------------------------------------------


@dataclass
class ZBasis:
    algebra: ba.BasedAlgebra  # the base algebra A
    d: int
    filtration: cauchy.CauchyFiltration
    order: list  # multipartitions, increasing (the first printed row is the bottom cell)

    @property
    def cells(self) -> dict:
        return {c.mp: c.z for c in self.filtration.cells}

    def elements(self):
        """(mp, S, T, z) in table order: increasing multipartitions, then S, then T."""
        for cell in self.filtration.cells:
            for S in cell.S_list:
                for T in cell.T_list:
                    yield cell.mp, S, T, cell.z[(S, T)]

    def __len__(self):
        return sum(c.rank for c in self.filtration.cells)

    def cell_datum(self) -> ba.CellDatum:
        """Cell datum for Gamma^d A listed top cell first (reverse of ``order``)."""
        cells = []
        for cell in reversed(self.filtration.cells):
            C = {(S, T): z.to_vector() for (S, T), z in cell.z.items()}
            cells.append(ba.Cell(cell.mp, list(cell.S_list), C))
        return ba.CellDatum(cells)


def cellular_basis_gamma(A: ba.BasedAlgebra, d: int, chain: ba.CellChain | None = None,
                         check_closure: bool = False) -> ZBasis:
    if d < 0:
        raise ValueError("degree must be nonnegative")
    chain = chain or ba.gl_to_kx(A)
    F = cauchy.from_cell_chain(A, chain)
    filt = cauchy.cauchy_filtration(F, d, check_closure=check_closure)
    if not filt.report.ok:
        raise ba.AlgebraError(f"filtration failed: {filt.report.failures[:3]}")
    return ZBasis(A, d, filt, [c.mp for c in filt.cells])


def schur_algebra_base(A: ba.BasedAlgebra, n: int) -> ba.BasedAlgebra:
    return ba.matrix_algebra(A, n)


def cellular_basis_schur(A: ba.BasedAlgebra, n: int, d: int, check_closure: bool = False) -> ZBasis:
    """Cellular basis of S^A(n, d) = Gamma^d M_n(A)."""
    return cellular_basis_gamma(ba.matrix_algebra(A, n), d, check_closure=check_closure)


# -- verification -------------------------------------------------------------


@dataclass
class CellReport:
    algebra: str
    verdicts: dict = field(default_factory=dict)  # axiom -> bool
    counterexamples: list = field(default_factory=list)
    sizes: dict = field(default_factory=dict)
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return all(self.verdicts.values()) and not self.counterexamples

    def summary(self) -> str:
        ax = " ".join(f"{k}={'pass' if v else 'FAIL'}" for k, v in self.verdicts.items())
        return f"{self.algebra}: {ax} ({self.seconds:.2f}s)"

    def to_json(self) -> dict:
        return {
            "algebra": self.algebra,
            "verdicts": {k: ("pass" if v else "fail") for k, v in self.verdicts.items()},
            "counterexamples": [_jsonable(c) for c in self.counterexamples[:20]],
            "sizes": self.sizes,
        }


def _jsonable(x):
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, Q):
        return el.format_rational(x)
    return x if isinstance(x, (int, str, float, bool)) or x is None else str(x)


def verify_axioms(B: ba.BasedAlgebra, datum: ba.CellDatum, sample: int | None = None,
                  seed: int = 0) -> CellReport:
    """Check (C1)-(C3) for a datum whose cells are listed top first.

    C3: a * C_{S,T} may have terms in the same cell with the same T, with
    coefficients independent of T, plus terms in cells earlier in the list.
    ``sample`` restricts the elements a to a random subset of the basis.
    """
    t0 = time.perf_counter()
    rep = CellReport(B.name)
    entries = datum.basis()
    rep.sizes = {"dim": B.dim, "cells": len(datum.cells), "basis": len(entries)}
    vectors = [e[3] for e in entries]
    c1 = len(vectors) == B.dim and el.rank(vectors) == B.dim
    rep.verdicts["C1"] = c1
    if not c1:
        rep.counterexamples.append({"axiom": "C1", "count": len(vectors), "rank": el.rank(vectors) if vectors else 0})
        rep.verdicts["C2"] = rep.verdicts["C3"] = False
        rep.seconds = time.perf_counter() - t0
        return rep
    lookup = {(ci, S, T): k for k, (ci, S, T, _) in enumerate(entries)}
    c2 = True
    for ci, S, T, v in entries:
        if B.apply_tau(v) != entries[lookup[(ci, T, S)]][3]:
            c2 = False
            rep.counterexamples.append({"axiom": "C2", "cell": datum.cells[ci].label, "S": S, "T": T})
    rep.verdicts["C2"] = c2
    cs = el.CoordinateSystem(vectors, B.dim)
    avals = list(range(B.dim))
    if sample is not None and sample < B.dim:
        avals = sorted(random.Random(seed).sample(avals, sample))
        rep.sizes["sampled"] = sample
    c3 = True
    for a in avals:
        av = B.basis_vector(a)
        for ci, cell in enumerate(datum.cells):
            ref = None
            for T in cell.M:
                coeffs = {}
                for S in cell.M:
                    co = cs.coords(B.mul(av, cell.C[(S, T)]))
                    for k, c in enumerate(co):
                        if not c:
                            continue
                        cj, S2, T2, _ = entries[k]
                        if cj > ci or (cj == ci and T2 != T):
                            c3 = False
                            rep.counterexamples.append({
                                "axiom": "C3", "a": B.labels[a], "cell": cell.label, "S": S, "T": T,
                                "term": (datum.cells[cj].label, S2, T2), "coefficient": c,
                            })
                        elif cj == ci:
                            coeffs[(S2, S)] = c
                if ref is None:
                    ref = coeffs
                elif coeffs != ref:
                    c3 = False
                    diff = sorted(set(ref.items()) ^ set(coeffs.items()), key=str)[:1]
                    rep.counterexamples.append({
                        "axiom": "C3", "a": B.labels[a], "cell": cell.label, "T": T,
                        "detail": "coefficients depend on T", "witness": diff,
                    })
    rep.verdicts["C3"] = c3
    rep.seconds = time.perf_counter() - t0
    return rep


def standard_module(B: ba.BasedAlgebra, datum: ba.CellDatum, label, check: bool = True) -> dict:
    """Action matrices r_a(U, S) of every basis element a on the standard module of a cell.

    The module is realized on {C_{S, T0}} modulo earlier cells, T0 the first
    label.  Returns ``{a: matrix}`` with ``matrix[U][S]`` indexed by positions in M.
    """
    if check:
        rep = verify_axioms(B, datum)
        if not rep.ok:
            raise ba.AlgebraError(f"datum fails the cellular axioms: {rep.summary()}")
    entries = datum.basis()
    cs = el.CoordinateSystem([e[3] for e in entries], B.dim)
    ci = datum.labels().index(label)
    cell = datum.cells[ci]
    T0 = cell.M[0]
    pos = {S: i for i, S in enumerate(cell.M)}
    out = {}
    for a in range(B.dim):
        m = [[Q(0)] * len(cell.M) for _ in cell.M]
        for S in cell.M:
            co = cs.coords(B.mul(B.basis_vector(a), cell.C[(S, T0)]))
            for k, c in enumerate(co):
                cj, S2, T2, _ = entries[k]
                if c and cj == ci:
                    m[pos[S2]][pos[S]] = c
        out[a] = m
    return out


# -- emitters -------------------------------------------------------------------


def table_rows(Z: ZBasis) -> list:
    """(lambda, S, T, element) strings in table order."""
    rows = []
    for mp, S, T, z in Z.elements():
        rows.append((combo.format_multipartition(mp), combo.format_multitableau(S),
                     combo.format_multitableau(T), format_element(Z.algebra, z)))
    return rows


def format_table(Z: ZBasis) -> str:
    rows = table_rows(Z)
    head = ("lambda", "S", "T", "element")
    widths = [max(len(r[i]) for r in rows + [head]) for i in range(3)]
    lines = [" | ".join(h.ljust(w) for h, w in zip(head[:3], widths)) + " | " + head[3]]
    lines.append("-+-".join("-" * w for w in widths) + "-+-" + "-" * 7)
    for r in rows:
        lines.append(" | ".join(x.ljust(w) for x, w in zip(r[:3], widths)) + " | " + r[3])
    return "\n".join(lines)


def _label_json(x):
    if isinstance(x, tuple):
        return [_label_json(v) for v in x]
    return x


def zbasis_json(Z: ZBasis) -> dict:
    weights = combo.enumerate_weights(Z.algebra.dim, Z.d)
    cells = []
    for cell in Z.filtration.cells:
        elems = []
        for S in cell.S_list:
            for T in cell.T_list:
                z = cell.z[(S, T)]
                elems.append({
                    "S": _label_json(S),
                    "T": _label_json(T),
                    "expression": format_element(Z.algebra, z),
                    "coordinates": [el.format_rational(c) for c in z.to_vector()],
                })
        cells.append({"lambda": [list(p) for p in cell.mp], "rank": cell.rank, "elements": elems})
    return {
        "algebra": Z.algebra.name,
        "d": Z.d,
        "gamma_basis": [list(w) for w in weights],
        "cells": cells,
    }
