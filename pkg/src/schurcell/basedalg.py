"""Finite-dimensional algebras given by structure constants, with an
anti-involution and optional cell data.

Cell data conventions
---------------------
A :class:`CellDatum` lists its cells from the top of the poset down: the
first cell spans the smallest two-sided ideal, and when ``a * C`` is expanded
in the cellular basis the lower-order terms live in cells *earlier* in the
list.  A :class:`CellChain` lists blocks ``J'_1, ..., J'_r`` in the same order,
so ``J_j = J'_1 + ... + J'_j`` is the ideal chain.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Hashable, Sequence

from . import exactlin as el
from .exactlin import Q, rational


class AlgebraError(ValueError):
    pass


@dataclass
class Report:
    """Outcome of a batch of exhaustive checks."""

    name: str
    failures: list = field(default_factory=list)
    checked: int = 0

    @property
    def ok(self) -> bool:
        return not self.failures

    def fail(self, check: str, **detail) -> None:
        self.failures.append({"check": check, **detail})

    def summary(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return f"{self.name}: {status} ({self.checked} checks, {len(self.failures)} failures)"


class BasedAlgebra:
    """Unital associative algebra with basis ``x_0..x_{dim-1}``.

    ``mult[i][j]`` is a sparse dict ``{k: c}`` meaning ``x_i x_j = sum c x_k``.
    ``tau[i]`` holds the coordinates of ``tau(x_i)``.
    """

    def __init__(self, name, labels, mult, unit, tau, cells=None):
        self.name = name
        self.labels = list(labels)
        self.dim = len(self.labels)
        self.mult = [[{k: rational(c) for k, c in mult[i][j].items() if c} for j in range(self.dim)]
                     for i in range(self.dim)]
        self.unit = [rational(c) for c in unit]
        self.tau = [[rational(c) for c in row] for row in tau]
        self.cells: CellDatum | None = cells
        if len(self.unit) != self.dim or len(self.tau) != self.dim:
            raise AlgebraError("unit/tau size does not match the basis")

    def __repr__(self):
        return f"BasedAlgebra({self.name!r}, dim={self.dim})"

    def basis_vector(self, i: int) -> list:
        return el.unit_vector(self.dim, i)

    def mul(self, u: Sequence, v: Sequence) -> list:
        out = [Q(0)] * self.dim
        for i, a in enumerate(u):
            if not a:
                continue
            row = self.mult[i]
            for j, b in enumerate(v):
                if not b:
                    continue
                ab = a * b
                for k, c in row[j].items():
                    out[k] += ab * c
        return out

    def apply_tau(self, v: Sequence) -> list:
        out = [Q(0)] * self.dim
        for i, a in enumerate(v):
            if a:
                el.axpy(a, self.tau[i], out)
        return out

    def element(self, **coeffs) -> list:
        """Vector from label keyword arguments, e.g. ``A.element(e_0=1)``."""
        v = [Q(0)] * self.dim
        for lab, c in coeffs.items():
            v[self.labels.index(lab)] += rational(c)
        return v

    def index(self, label) -> int:
        return self.labels.index(label)

    def left_matrix(self, a: Sequence) -> list:
        """Matrix ``L`` with ``L[k][j]`` = coefficient of x_k in a*x_j."""
        cols = [self.mul(a, self.basis_vector(j)) for j in range(self.dim)]
        return el.transpose(cols)


# -- validation ---------------------------------------------------------------


def validate(A: BasedAlgebra) -> Report:
    """Exhaustively check associativity, the unit and the anti-involution."""
    rep = Report(f"validate[{A.name}]")
    n = A.dim
    basis = [A.basis_vector(i) for i in range(n)]
    prods = [[A.mul(basis[i], basis[j]) for j in range(n)] for i in range(n)]
    for i in range(n):
        for j in range(n):
            for k in range(n):
                rep.checked += 1
                lhs = A.mul(prods[i][j], basis[k])
                rhs = A.mul(basis[i], prods[j][k])
                if lhs != rhs:
                    rep.fail("associativity", indices=(i, j, k))
    for i in range(n):
        rep.checked += 2
        if A.mul(A.unit, basis[i]) != basis[i]:
            rep.fail("left unit", indices=(i,))
        if A.mul(basis[i], A.unit) != basis[i]:
            rep.fail("right unit", indices=(i,))
    for i in range(n):
        rep.checked += 1
        if A.apply_tau(A.tau[i]) != basis[i]:
            rep.fail("tau involutive", indices=(i,))
    for i in range(n):
        for j in range(n):
            rep.checked += 1
            if A.apply_tau(prods[i][j]) != A.mul(A.tau[j], A.tau[i]):
                rep.fail("tau anti-multiplicative", indices=(i, j))
    return rep


# -- cell data ---------------------------------------------------------------


@dataclass
class Cell:
    label: Hashable
    M: list
    C: dict  # (S, T) -> coordinate vector

    @property
    def size(self) -> int:
        return len(self.M) ** 2


@dataclass
class CellDatum:
    """Cells listed from the top of the poset down (see module docstring)."""

    cells: list

    def labels(self):
        return [c.label for c in self.cells]

    def cell(self, label) -> Cell:
        for c in self.cells:
            if c.label == label:
                return c
        raise KeyError(label)

    def basis(self) -> list:
        """Flat list of ``(cell_index, S, T, vector)`` in cell order."""
        out = []
        for ci, cell in enumerate(self.cells):
            for S in cell.M:
                for T in cell.M:
                    out.append((ci, S, T, cell.C[(S, T)]))
        return out

    @property
    def size(self) -> int:
        return sum(c.size for c in self.cells)


@dataclass
class ChainBlock:
    label: Hashable
    B: list  # ordered basis labels of Delta_j
    pairing: dict  # (b, c) -> vector of the element of J'_j matching x_b (x) tau(x_c)

    @property
    def delta_basis(self) -> list:
        """Lifts of a basis of Delta_j: the elements paired with (b, B[0])."""
        return [self.pairing[(b, self.B[0])] for b in self.B]

    def vectors(self) -> list:
        return [self.pairing[(b, c)] for b in self.B for c in self.B]


@dataclass
class CellChain:
    blocks: list

    def block_sizes(self) -> list:
        return [len(b.B) ** 2 for b in self.blocks]


def gl_to_kx(A: BasedAlgebra, D: CellDatum | None = None, check: bool = True) -> CellChain:
    """Cellular decomposition from a cell datum.

    Block ``j`` is the span of cell ``j``; Delta_j is spanned by the
    ``C_{S, T0}`` with ``T0`` the first element of ``M``.
    """
    D = D or A.cells
    if D is None:
        raise AlgebraError(f"{A.name} carries no cell datum")
    chain = CellChain([ChainBlock(c.label, list(c.M), dict(c.C)) for c in D.cells])
    if check:
        rep = check_chain(A, chain)
        if not rep.ok:
            raise AlgebraError(f"cell chain check failed: {rep.failures[:3]}")
    return chain


def kx_to_gl(A: BasedAlgebra, chain: CellChain) -> CellDatum:
    """Cell datum with ``C^j_{b,c}`` the element paired with ``x_b (x) tau(x_c)``."""
    cells = []
    for j, blk in enumerate(chain.blocks, start=1):
        cells.append(Cell(j, list(blk.B), {(b, c): blk.pairing[(b, c)] for b in blk.B for c in blk.B}))
    return CellDatum(cells)


def check_chain(A: BasedAlgebra, chain: CellChain) -> Report:
    """Ideal chain, tau-square and cell-ideal checks for a cellular decomposition."""
    rep = Report(f"chain[{A.name}]")
    n = A.dim
    allvecs = [v for blk in chain.blocks for v in blk.vectors()]
    rep.checked += 1
    if len(allvecs) != n or el.rank(allvecs) != n:
        rep.fail("blocks do not form a basis", size=len(allvecs))
        return rep
    basis = [A.basis_vector(i) for i in range(n)]
    lower = el.Subspace(n)
    for j, blk in enumerate(chain.blocks):
        upper = lower.extend(blk.vectors())
        for v in blk.vectors():
            rep.checked += 1
            if not upper.contains(A.apply_tau(v)):
                rep.fail("ideal not tau-invariant", block=j)
            for x in basis:
                rep.checked += 2
                if not upper.contains(A.mul(x, v)):
                    rep.fail("not a left ideal", block=j)
                if not upper.contains(A.mul(v, x)):
                    rep.fail("not a right ideal", block=j)
        for b in blk.B:
            for c in blk.B:
                rep.checked += 1
                if A.apply_tau(blk.pairing[(b, c)]) != blk.pairing[(c, b)]:
                    rep.fail("tau-square", block=j, pair=(b, c))
        # bimodule isomorphism with Delta (x) tau(Delta): left action independent of c
        if rep.ok:
            _check_cell_action(A, blk, lower, rep, j)
        lower = upper
    return rep


def _check_cell_action(A, blk, lower, rep, j):
    B = blk.B
    vecs = [blk.pairing[(b, c)] for b in B for c in B]
    cs = el.CoordinateSystem(lower.basis_matrix + vecs, A.dim)
    off = lower.dim
    idx = {(b, c): off + k for k, (b, c) in enumerate((b, c) for b in B for c in B)}
    for x in range(A.dim):
        xv = A.basis_vector(x)
        ref = None
        for c in B:
            coeffs = {}
            for b in B:
                co = cs.coords(A.mul(xv, blk.pairing[(b, c)]))
                for (b2, c2), k in idx.items():
                    if co[k] and c2 != c:
                        rep.fail("left action leaves the column", block=j, basis=x)
                coeffs[b] = tuple(co[idx[(b2, c)]] for b2 in B)
            rep.checked += 1
            if ref is None:
                ref = coeffs
            elif coeffs != ref:
                rep.fail("left action depends on column", block=j, basis=x)


# -- constructions ---------------------------------------------------------


def matrix_algebra(A: BasedAlgebra, n: int) -> BasedAlgebra:
    """M_n(A) with basis E_ij (x) x_b and anti-involution tr (x) tau.

    Basis index of ``E_{ij} (x) x_b`` (0-based i, j) is ``(i*n + j)*dim A + b``.
    A cell datum on ``A`` is lifted blockwise, with ``M`` labels ``(i, S)``.
    """
    if n < 1:
        raise AlgebraError("matrix size must be at least 1")
    m = A.dim
    N = n * n * m

    def idx(i, j, b):
        return (i * n + j) * m + b

    labels = []
    for i in range(n):
        for j in range(n):
            for b in range(m):
                labels.append(A.labels[b] if n == 1 else f"E{i + 1}{j + 1}.{A.labels[b]}")
    mult = [[{} for _ in range(N)] for _ in range(N)]
    for i in range(n):
        for j in range(n):
            for l in range(n):
                for a in range(m):
                    for b in range(m):
                        mult[idx(i, j, a)][idx(j, l, b)] = {
                            idx(i, l, k): c for k, c in A.mult[a][b].items()
                        }
    unit = [Q(0)] * N
    for i in range(n):
        for b in range(m):
            unit[idx(i, i, b)] = A.unit[b]
    tau = [[Q(0)] * N for _ in range(N)]
    for i in range(n):
        for j in range(n):
            for b in range(m):
                for c, x in enumerate(A.tau[b]):
                    tau[idx(i, j, b)][idx(j, i, c)] = x
    cells = None
    if A.cells is not None:
        cells = CellDatum([lift_cell(cell, n, m) for cell in A.cells.cells])
    name = A.name if n == 1 else f"M{n}({A.name})"
    return BasedAlgebra(name, labels, mult, unit, tau, cells)


def lift_cell(cell: Cell, n: int, m: int) -> Cell:
    """Lift a cell of A to M_n(A): C_{(i,S),(k,T)} = E_ik (x) C_{S,T}."""
    if n == 1:
        return Cell(cell.label, list(cell.M), dict(cell.C))
    M = [(i, S) for i in range(n) for S in cell.M]
    C = {}
    for (i, S) in M:
        for (k, T) in M:
            v = [Q(0)] * (n * n * m)
            base = (i * n + k) * m
            for b, x in enumerate(cell.C[(S, T)]):
                v[base + b] = x
            C[((i, S), (k, T))] = v
    return Cell(cell.label, M, C)


@dataclass
class Truncation:
    algebra: BasedAlgebra
    basis: list  # vectors of the ambient algebra spanning eAe
    degenerate: bool


def idempotent_truncate(A: BasedAlgebra, e: Sequence, name: str | None = None) -> Truncation:
    """The corner algebra eAe for a tau-fixed idempotent e."""
    e = [rational(x) for x in e]
    if A.mul(e, e) != e:
        raise AlgebraError("e is not idempotent")
    if A.apply_tau(e) != e:
        raise AlgebraError("e is not fixed by tau")
    vecs = [A.mul(A.mul(e, A.basis_vector(b)), e) for b in range(A.dim)]
    basis = el.Subspace(A.dim, vecs).basis_matrix
    name = name or f"e{A.name}e"
    if not basis:
        return Truncation(BasedAlgebra(name, [], [], [], []), [], True)
    cs = el.CoordinateSystem(basis, A.dim)
    k = len(basis)
    mult = [[{} for _ in range(k)] for _ in range(k)]
    for i in range(k):
        for j in range(k):
            co = cs.coords(A.mul(basis[i], basis[j]))
            mult[i][j] = {t: c for t, c in enumerate(co) if c}
    tau = [cs.coords(A.apply_tau(b)) for b in basis]
    labels = [_vector_label(A, b) for b in basis]
    return Truncation(BasedAlgebra(name, labels, mult, cs.coords(e), tau), basis, False)


def _vector_label(A, v) -> str:
    terms = [(c, A.labels[i]) for i, c in enumerate(v) if c]
    if len(terms) == 1 and terms[0][0] == 1:
        return terms[0][1]
    return "+".join(f"{c}*{lab}" if c != 1 else lab for c, lab in terms)


# -- builtins ------------------------------------------------------------------


def _from_table(name, labels, products, unit_label, tau_map, cells=None):
    """Build from ``products[(a, b)] = {c: coeff}`` over labels; missing = 0."""
    pos = {lab: i for i, lab in enumerate(labels)}
    n = len(labels)
    mult = [[{} for _ in range(n)] for _ in range(n)]
    for (a, b), res in products.items():
        mult[pos[a]][pos[b]] = {pos[c]: rational(x) for c, x in res.items()}
    unit = el.unit_vector(n, pos[unit_label])
    tau = [[Q(0)] * n for _ in range(n)]
    for a, img in tau_map.items():
        for c, x in img.items():
            tau[pos[a]][pos[c]] = rational(x)
    A = BasedAlgebra(name, labels, mult, unit, tau)
    if cells is not None:
        A.cells = CellDatum([
            Cell(lab, list(M), {st: A.element(**{k: v for k, v in combo.items()}) for st, combo in C.items()})
            for lab, M, C in cells
        ])
    return A


def ground_field() -> BasedAlgebra:
    return _from_table("k", ["1"], {("1", "1"): {"1": 1}}, "1", {"1": {"1": 1}},
                       cells=[("0", [0], {(0, 0): {"1": 1}})])


def dual_numbers() -> BasedAlgebra:
    """k[x]/(x^2), tau = id, cell chain (x) < A."""
    prods = {("1", "1"): {"1": 1}, ("1", "x"): {"x": 1}, ("x", "1"): {"x": 1}}
    return _from_table("dual_numbers", ["1", "x"], prods, "1", {"1": {"1": 1}, "x": {"x": 1}},
                       cells=[("x", [0], {(0, 0): {"x": 1}}), ("1", [0], {(0, 0): {"1": 1}})])


def group_algebra_s2() -> BasedAlgebra:
    """kS_2 with tau(g) = g^{-1}; Murphy-type cells (1+s) < A."""
    prods = {("1", "1"): {"1": 1}, ("1", "s"): {"s": 1}, ("s", "1"): {"s": 1}, ("s", "s"): {"1": 1}}
    return _from_table("group_algebra_S2", ["1", "s"], prods, "1", {"1": {"1": 1}, "s": {"s": 1}},
                       cells=[("(2)", [0], {(0, 0): {"1": 1, "s": 1}}), ("(1,1)", [0], {(0, 0): {"1": 1}})])


def matrix_k(n: int) -> BasedAlgebra:
    """M_n(k) with transpose, a single cell indexed by rows."""
    A = matrix_algebra(ground_field(), n)
    cell = A.cells.cells[0]
    M = [i for i, _ in cell.M]
    A.cells = CellDatum([Cell("0", M, {(i, k): cell.C[((i, 0), (k, 0))] for i in M for k in M})])
    A.name = f"M{n}(k)"
    return A


ZIGZAG_EXT_LABELS = ["e_0", "e_1", "e_2", "a_01", "a_10", "a_12", "a_21", "a_01a_10", "a_12a_21"]
_ARROWS = {"a_01": (0, 1), "a_10": (1, 0), "a_12": (1, 2), "a_21": (2, 1)}


def _zigzag_ext_product(p: str, q: str):
    """Product of two basis paths of the extended zig-zag algebra."""
    def ends(x):
        if x.startswith("e_"):
            v = int(x[2:])
            return v, v, 0
        if x in _ARROWS:
            s, t = _ARROWS[x]
            return s, t, 1
        v = 0 if x == "a_01a_10" else 1
        return v, v, 2
    s1, t1, l1 = ends(p)
    s2, t2, l2 = ends(q)
    if t1 != s2:
        return {}
    if l1 == 0:
        return {q: 1}
    if l2 == 0:
        return {p: 1}
    if l1 + l2 >= 3:
        return {}
    # two arrows meeting at t1: a cycle iff it returns to s1
    if s1 != t2:
        return {}
    if s1 == 0:
        return {"a_01a_10": 1}
    if s1 == 1:
        return {"a_12a_21": 1}
    return {}  # a_21 a_12 = 0


def zigzag_extended() -> BasedAlgebra:
    labs = ZIGZAG_EXT_LABELS
    prods = {(p, q): _zigzag_ext_product(p, q) for p in labs for q in labs}
    tau = {"e_0": {"e_0": 1}, "e_1": {"e_1": 1}, "e_2": {"e_2": 1},
           "a_01": {"a_10": 1}, "a_10": {"a_01": 1}, "a_12": {"a_21": 1}, "a_21": {"a_12": 1},
           "a_01a_10": {"a_01a_10": 1}, "a_12a_21": {"a_12a_21": 1}}
    A = _from_table("zigzag_extended", labs, prods, "e_0", tau)
    A.unit = A.element(e_0=1, e_1=1, e_2=1)
    return A


ZIGZAG_LABELS = ["e_0", "e_1", "a_10", "a_01", "a_01a_10", "a_12a_21"]


def zigzag() -> BasedAlgebra:
    """The 6-dimensional zig-zag algebra e Z~ e, e = e_0 + e_1, with its cell datum.

    Cells (top of the poset first): the products x_b y_c with
    x = (a_12), (e_1, a_01), (e_0) and y_c = tau(x_c).  The product
    a_12 a_21 is formed in the extended algebra.
    """
    ext = zigzag_extended()
    labs = ZIGZAG_LABELS
    pos = {lab: ext.index(lab) for lab in labs}
    n = len(labs)
    mult = [[{} for _ in range(n)] for _ in range(n)]
    for i, p in enumerate(labs):
        for j, q in enumerate(labs):
            res = ext.mult[pos[p]][pos[q]]
            mult[i][j] = {labs.index(ext.labels[k]): c for k, c in res.items()}
    tau_ext = {"a_01": "a_10", "a_10": "a_01"}
    tau = [el.unit_vector(n, labs.index(tau_ext.get(lab, lab))) for lab in labs]
    unit = [Q(1), Q(1), Q(0), Q(0), Q(0), Q(0)]
    A = BasedAlgebra("zigzag", labs, mult, unit, tau)

    def ext_prod(x, y):
        res = _zigzag_ext_product(x, y)
        return A.element(**res)

    X = {1: "a_12", 2: "e_1", 3: "a_01", 4: "e_0"}
    Y = {b: {"a_12": "a_21", "a_01": "a_10"}.get(x, x) for b, x in X.items()}
    blocks = [(1, [1]), (2, [2, 3]), (3, [4])]
    cells = []
    for j, B in blocks:
        C = {(b, c): ext_prod(X[b], Y[c]) for b in B for c in B}
        cells.append(Cell(j, B, C))
    A.cells = CellDatum(cells)
    return A


BUILTINS = {
    "k": ground_field,
    "dual_numbers": dual_numbers,
    "group_algebra_S2": group_algebra_s2,
    "zigzag": zigzag,
    "zigzag_extended": zigzag_extended,
}


def builtin(name: str) -> BasedAlgebra:
    """Named example algebra; ``matrix(n)`` gives M_n(k)."""
    if name in BUILTINS:
        return BUILTINS[name]()
    if name.startswith("matrix(") and name.endswith(")"):
        return matrix_k(int(name[7:-1]))
    raise AlgebraError(f"unknown builtin algebra {name!r}; known: {sorted(BUILTINS)} and matrix(n)")


# -- JSON ----------------------------------------------------------------------


def _vec_to_json(v):
    return [el.format_rational(x) for x in v]


def to_json(A: BasedAlgebra) -> dict:
    mult = []
    for i in range(A.dim):
        for j in range(A.dim):
            for k, c in sorted(A.mult[i][j].items()):
                mult.append([i, j, k, el.format_rational(c)])
    out = {
        "name": A.name,
        "dim": A.dim,
        "basis": list(A.labels),
        "unit": _vec_to_json(A.unit),
        "mult": mult,
        "tau": [_vec_to_json(row) for row in A.tau],
    }
    if A.cells is not None:
        cells = []
        for cell in A.cells.cells:
            cells.append({
                "label": str(cell.label),
                "M": [_label_str(S) for S in cell.M],
                "C": {f"{_label_str(S)},{_label_str(T)}": _vec_to_json(cell.C[(S, T)])
                      for S in cell.M for T in cell.M},
            })
        out["cells"] = cells
    return out


def _label_str(x) -> str:
    if isinstance(x, tuple):
        return ":".join(map(str, x))
    return str(x)


class SpecFileError(ValueError):
    def __init__(self, path: str, msg: str):
        super().__init__(f"{path}: {msg}")
        self.path = path


def from_json(data: dict) -> BasedAlgebra:
    """Parse the algebra spec format; errors name the offending field path."""
    def need(key, typ):
        if key not in data:
            raise SpecFileError(key, "missing field")
        if not isinstance(data[key], typ):
            raise SpecFileError(key, f"expected {typ.__name__}")
        return data[key]

    def vec(value, path, n):
        if not isinstance(value, list) or len(value) != n:
            raise SpecFileError(path, f"expected a list of {n} rationals")
        try:
            return [rational(x) for x in value]
        except (ValueError, TypeError, ZeroDivisionError) as exc:
            raise SpecFileError(path, f"bad rational: {exc}") from None

    name = need("name", str)
    dim = need("dim", int)
    labels = need("basis", list)
    if len(labels) != dim:
        raise SpecFileError("basis", f"expected {dim} labels, got {len(labels)}")
    unit = vec(data.get("unit"), "unit", dim)
    mult = [[{} for _ in range(dim)] for _ in range(dim)]
    for t, entry in enumerate(need("mult", list)):
        path = f"mult[{t}]"
        if not isinstance(entry, list) or len(entry) != 4:
            raise SpecFileError(path, "expected [i, j, k, coefficient]")
        i, j, k, c = entry
        if not all(isinstance(x, int) and 0 <= x < dim for x in (i, j, k)):
            raise SpecFileError(path, "index out of range")
        try:
            mult[i][j][k] = mult[i][j].get(k, Q(0)) + rational(c)
        except (ValueError, TypeError, ZeroDivisionError) as exc:
            raise SpecFileError(path + "[3]", f"bad rational: {exc}") from None
    tau_rows = need("tau", list)
    if len(tau_rows) != dim:
        raise SpecFileError("tau", f"expected {dim} rows")
    tau = [vec(row, f"tau[{i}]", dim) for i, row in enumerate(tau_rows)]
    A = BasedAlgebra(name, labels, mult, unit, tau)
    if "cells" in data:
        cells = []
        for ci, cd in enumerate(data["cells"]):
            path = f"cells[{ci}]"
            if not isinstance(cd, dict) or not {"label", "M", "C"} <= set(cd):
                raise SpecFileError(path, "expected {label, M, C}")
            M = [str(x) for x in cd["M"]]
            C = {}
            for S in M:
                for T in M:
                    key = f"{S},{T}"
                    if key not in cd["C"]:
                        raise SpecFileError(f"{path}.C", f"missing entry {key!r}")
                    C[(S, T)] = vec(cd["C"][key], f"{path}.C[{key!r}]", dim)
            cells.append(Cell(str(cd["label"]), M, C))
        A.cells = CellDatum(cells)
    return A


def dumps(A: BasedAlgebra) -> str:
    return json.dumps(to_json(A), sort_keys=True, indent=1, ensure_ascii=False)


def loads(text: str) -> BasedAlgebra:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecFileError("$", f"invalid JSON: {exc}") from None
    if not isinstance(data, dict):
        raise SpecFileError("$", "expected a JSON object")
    return from_json(data)
