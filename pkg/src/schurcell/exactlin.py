"""Exact rational linear algebra.

Everything here works over :class:`fractions.Fraction`; there is no floating
point anywhere in the package.  Vectors are plain lists of Fractions and
matrices are lists of rows.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

Q = Fraction
Vector = list
Matrix = list


class DimensionError(ValueError):
    pass


class NotInSpanError(ValueError):
    pass


def rational(x) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to a reduced Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("bool is not a rational")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"cannot interpret {x!r} as a rational")


def format_rational(q) -> str:
    q = rational(q)
    return f"{q.numerator}/{q.denominator}"


def zero_vector(n: int) -> Vector:
    return [Q(0)] * n


def unit_vector(n: int, i: int) -> Vector:
    v = [Q(0)] * n
    v[i] = Q(1)
    return v


def is_zero(v: Iterable) -> bool:
    return all(x == 0 for x in v)


def add(u: Sequence, v: Sequence) -> Vector:
    if len(u) != len(v):
        raise DimensionError(f"length {len(u)} != {len(v)}")
    return [a + b for a, b in zip(u, v)]


def scale(c, v: Sequence) -> Vector:
    c = rational(c)
    return [c * x for x in v]


def axpy(c, x: Sequence, y: list) -> None:
    """In-place ``y += c*x``."""
    if c == 0:
        return
    for i, xi in enumerate(x):
        if xi:
            y[i] += c * xi


def matmul(a: Matrix, b: Matrix) -> Matrix:
    if a and len(a[0]) != len(b):
        raise DimensionError("inner dimensions differ")
    cols = len(b[0]) if b else 0
    out = []
    for row in a:
        acc = [Q(0)] * cols
        for k, aik in enumerate(row):
            if aik:
                bk = b[k]
                for j in range(cols):
                    if bk[j]:
                        acc[j] += aik * bk[j]
        out.append(acc)
    return out


def vecmat(v: Sequence, m: Matrix) -> Vector:
    """Row vector times matrix."""
    return matmul([list(v)], m)[0] if m else []


def transpose(m: Matrix) -> Matrix:
    return [list(col) for col in zip(*m)] if m else []


def identity(n: int) -> Matrix:
    return [unit_vector(n, i) for i in range(n)]


def _as_matrix(rows) -> Matrix:
    return [[rational(x) for x in row] for row in rows]


def rref(matrix) -> tuple[Matrix, list[int], int]:
    """Canonical reduced row echelon form.

    Returns ``(rows, pivots, rank)`` where ``rows`` holds only the nonzero
    rows.  Pivot entries are 1 and every pivot column is zero elsewhere.
    """
    m = _as_matrix(matrix)
    if not m:
        return [], [], 0
    ncols = len(m[0])
    if any(len(r) != ncols for r in m):
        raise DimensionError("ragged matrix")
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c]
        row = [x * inv for x in m[r]]
        m[r] = row
        nz = [j for j in range(c, ncols) if row[j]]
        for i in range(len(m)):
            if i != r:
                f = m[i][c]
                if f:
                    mi = m[i]
                    for j in nz:
                        mi[j] -= f * row[j]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots, r


def rank(matrix) -> int:
    return rref(matrix)[2] if matrix else 0


def nullspace(matrix, ncols: int | None = None) -> Matrix:
    """Basis of ``{x : matrix @ x = 0}`` (column-vector convention)."""
    if not matrix:
        if ncols is None:
            raise DimensionError("ncols required for an empty matrix")
        return identity(ncols)
    rows, pivots, _ = rref(matrix)
    n = len(matrix[0])
    free = [c for c in range(n) if c not in set(pivots)]
    basis = []
    for f in free:
        x = [Q(0)] * n
        x[f] = Q(1)
        for row, p in zip(rows, pivots):
            x[p] = -row[f]
        basis.append(x)
    return basis


def inverse(matrix) -> Matrix:
    m = _as_matrix(matrix)
    n = len(m)
    if any(len(r) != n for r in m):
        raise DimensionError("inverse of a non-square matrix")
    aug = [row + unit_vector(n, i) for i, row in enumerate(m)]
    rows, pivots, rk = rref(aug)
    if rk < n or pivots[n - 1] != n - 1:
        raise ZeroDivisionError("singular matrix")
    return [row[n:] for row in rows]


def determinant(matrix) -> Fraction:
    m = _as_matrix(matrix)
    n = len(m)
    det = Q(1)
    for c in range(n):
        p = next((i for i in range(c, n) if m[i][c] != 0), None)
        if p is None:
            return Q(0)
        if p != c:
            m[c], m[p] = m[p], m[c]
            det = -det
        det *= m[c][c]
        inv = 1 / m[c][c]
        for i in range(c + 1, n):
            f = m[i][c] * inv
            if f:
                for j in range(c, n):
                    m[i][j] -= f * m[c][j]
    return det


def is_integral(matrix) -> bool:
    return all(rational(x).denominator == 1 for row in matrix for x in row)


class Subspace:
    """A subspace of Q^n stored by its canonical RREF basis."""

    def __init__(self, ambient_rank: int, vectors: Iterable[Sequence] = ()):
        self.ambient_rank = ambient_rank
        vecs = [list(v) for v in vectors]
        for v in vecs:
            if len(v) != ambient_rank:
                raise DimensionError(f"vector of length {len(v)} in Q^{ambient_rank}")
        if vecs:
            self.basis_matrix, self.pivots, _ = rref(vecs)
        else:
            self.basis_matrix, self.pivots = [], []

    @property
    def dim(self) -> int:
        return len(self.pivots)

    def __len__(self):
        return self.dim

    def __eq__(self, other):
        return (
            isinstance(other, Subspace)
            and self.ambient_rank == other.ambient_rank
            and self.basis_matrix == other.basis_matrix
        )

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.ambient_rank})"

    def reduce(self, v: Sequence) -> Vector:
        """Normal form of ``v`` modulo the subspace (pivot coordinates zeroed)."""
        r = [rational(x) for x in v]
        for row, p in zip(self.basis_matrix, self.pivots):
            c = r[p]
            if c:
                for j, x in enumerate(row):
                    if x:
                        r[j] -= c * x
        return r

    def contains(self, v: Sequence) -> bool:
        if len(v) != self.ambient_rank:
            raise DimensionError("dimension mismatch")
        return is_zero(self.reduce(v))

    def __contains__(self, v):
        return self.contains(v)

    def includes(self, other: "Subspace") -> bool:
        return all(self.contains(row) for row in other.basis_matrix)

    def __add__(self, other: "Subspace") -> "Subspace":
        if self.ambient_rank != other.ambient_rank:
            raise DimensionError("ambient mismatch")
        return Subspace(self.ambient_rank, self.basis_matrix + other.basis_matrix)

    def extend(self, vectors: Iterable[Sequence]) -> "Subspace":
        return Subspace(self.ambient_rank, self.basis_matrix + [list(v) for v in vectors])


def membership(v: Sequence, space: Subspace):
    """Coefficients of ``v`` in the row basis of ``space``, or ``None``."""
    if len(v) != space.ambient_rank:
        raise DimensionError(f"vector of length {len(v)} vs ambient {space.ambient_rank}")
    v = [rational(x) for x in v]
    coeffs = [v[p] for p in space.pivots]
    recon = [Q(0)] * space.ambient_rank
    for c, row in zip(coeffs, space.basis_matrix):
        axpy(c, row, recon)
    return coeffs if recon == v else None


def quotient_coords(v: Sequence, space: Subspace, lifted_basis: Sequence[Sequence]) -> Vector:
    """Coordinates of ``v + space`` in the basis of images of ``lifted_basis``.

    ``lifted_basis`` must be linearly independent modulo ``space``; ``v`` must
    lie in ``space + span(lifted_basis)``.
    """
    n = space.ambient_rank
    if len(v) != n or any(len(b) != n for b in lifted_basis):
        raise DimensionError("dimension mismatch")
    reduced = [space.reduce(b) for b in lifted_basis]
    k = len(reduced)
    if k and rank(reduced) != k:
        raise ValueError("lifted basis is not independent modulo the subspace")
    target = space.reduce(v)
    if k == 0:
        if not is_zero(target):
            raise NotInSpanError("vector is not in the subspace")
        return []
    # columns are the reduced lifts; solve  sum c_i r_i = target
    aug = [[reduced[i][j] for i in range(k)] + [target[j]] for j in range(n)]
    rows, pivots, _ = rref(aug)
    if pivots and pivots[-1] == k:
        raise NotInSpanError("vector is outside span(subspace + lifted basis)")
    sol = [Q(0)] * k
    for row, p in zip(rows, pivots):
        sol[p] = row[k]
    return sol


class CoordinateSystem:
    """Fast repeated coordinates with respect to a fixed basis of a subspace.

    ``coords(v)`` raises :class:`NotInSpanError` when ``v`` is outside the span.
    Vectors may be dense lists or sparse ``{index: value}`` dicts.
    """

    def __init__(self, basis: Sequence[Sequence], ambient_rank: int | None = None):
        self.basis = [list(b) for b in basis]
        self.ambient_rank = ambient_rank if ambient_rank is not None else len(self.basis[0])
        k = len(self.basis)
        n = self.ambient_rank
        # rref of [B | I_k] row-wise: rows of B combined to reach echelon form
        aug = [self.basis[i] + unit_vector(k, i) for i in range(k)]
        rows, pivots, rk = rref(aug) if k else ([], [], 0)
        if k and (rk < k or pivots[k - 1] >= n):
            raise ValueError("basis vectors are linearly dependent")
        self._pivots = pivots[:k]
        self._echelon = [row[:n] for row in rows]
        self._transform = [row[n:] for row in rows]
        self._echelon_sparse = [
            [(j, x) for j, x in enumerate(row) if x] for row in self._echelon
        ]
        self._transform_sparse = [
            [(j, x) for j, x in enumerate(row) if x] for row in self._transform
        ]

    @property
    def dim(self):
        return len(self.basis)

    def coords(self, v) -> Vector:
        if isinstance(v, dict):
            r = dict(v)
        else:
            if len(v) != self.ambient_rank:
                raise DimensionError("dimension mismatch")
            r = {j: x for j, x in enumerate(v) if x}
        out = [Q(0)] * len(self.basis)
        for row_e, row_t, p in zip(self._echelon_sparse, self._transform_sparse, self._pivots):
            c = r.get(p)
            if not c:
                continue
            for j, x in row_e:
                y = r.get(j, 0) - c * x
                if y:
                    r[j] = y
                else:
                    r.pop(j, None)
            for j, x in row_t:
                out[j] += c * x
        if r:
            raise NotInSpanError("vector is not in the span of the basis")
        return out
