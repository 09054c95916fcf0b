"""Wreath products A wr S_d, the tensor space V^{(x) d}, the isomorphism
A wr S_d -> xi_omega S^A(n, d) xi_omega and a cellular datum for A wr S_d.

Permutations are tuples ``p`` with ``p[i]`` the image of ``i`` (0-based);
``rho sigma = rho o sigma``; the index action is ``i sigma = sigma^{-1}(i)``.
Tensors are permuted by ``(y . pi)_i = y_{pi(i)}``: the factor in slot ``j``
moves to slot ``j pi``.  With these conventions the product rule
``(x (x) rho)(y (x) sigma) = x (y . rho^{-1}) (x) rho sigma`` makes
``(x_1 ... x_d) (x) sigma -> xi^{x_1}_{1, 1 sigma} * ... * xi^{x_d}_{d, d sigma}``
multiplicative.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations, product
from math import factorial

from . import basedalg as ba
from . import cellular as cl
from . import combo
from . import divpow as dp
from . import exactlin as el
from .exactlin import Q


def compose(p, q) -> tuple:
    """(p o q)(i) = p(q(i))."""
    return tuple(p[q[i]] for i in range(len(q)))


def inverse_perm(p) -> tuple:
    out = [0] * len(p)
    for i, x in enumerate(p):
        out[x] = i
    return tuple(out)


def permute_slots(y, pi) -> tuple:
    """y . pi with (y . pi)_i = y_{pi(i)}."""
    return tuple(y[pi[i]] for i in range(len(pi)))


def format_perm(p) -> str:
    return "[" + "".join(str(x + 1) for x in p) + "]"


def _tensor_mul(A, xs, ys) -> dict:
    """Slotwise product of basis tensors as {index tuple: coeff}."""
    out = {(): Q(1)}
    for a, b in zip(xs, ys):
        entry = A.mult[a][b]
        if not entry:
            return {}
        nxt = {}
        for k, c in out.items():
            for z, e in entry.items():
                nxt[k + (z,)] = c * e
        out = nxt
    return out


class WreathAlgebra(ba.BasedAlgebra):
    """A wr S_d as a based algebra; basis ``(xs, sigma)``, xs outer loop."""

    def __init__(self, A: ba.BasedAlgebra, d: int, slot_action=permute_slots):
        if d < 1:
            raise ValueError("d must be at least 1")
        self.base = A
        self.d = d
        self.perms = list(permutations(range(d)))
        self.tensors = list(product(range(A.dim), repeat=d))
        self.keys = [(xs, s) for xs in self.tensors for s in self.perms]
        self.pos = {k: i for i, k in enumerate(self.keys)}
        n = len(self.keys)
        mult = [[None] * n for _ in range(n)]
        for i, (xs, rho) in enumerate(self.keys):
            rinv = inverse_perm(rho)
            for j, (ys, sigma) in enumerate(self.keys):
                rs = compose(rho, sigma)
                prod = _tensor_mul(A, xs, slot_action(ys, rinv))
                mult[i][j] = {self.pos[(z, rs)]: c for z, c in prod.items()}
        unit = [Q(0)] * n
        ident = tuple(range(d))
        for xs in self.tensors:
            c = Q(1)
            for b in xs:
                c *= A.unit[b]
            if c:
                unit[self.pos[(xs, ident)]] = c
        tau = [[Q(0)] * n for _ in range(n)]
        for i, (xs, s) in enumerate(self.keys):
            # tau(x (x) s) = (tau(x) . s) (x) s^{-1}
            terms = {(): Q(1)}
            for b in permute_slots(xs, s):
                nxt = {}
                for k, c in terms.items():
                    for z, e in enumerate(A.tau[b]):
                        if e:
                            nxt[k + (z,)] = c * e
                terms = nxt
            for z, c in terms.items():
                tau[i][self.pos[(z, inverse_perm(s))]] += c
        labels = ["⊗".join(A.labels[b] for b in xs) + format_perm(s) for xs, s in self.keys]
        super().__init__(f"{A.name}wrS{d}", labels, mult, unit, tau)


# -- Schur algebra side ---------------------------------------------------------


def _mn_index(A, n, i, j, b):
    return (i * n + j) * A.dim + b


def xi(A, n, i, j, x) -> dp.DividedElement:
    """Degree-one element E_ij (x) x of M_n(A) (0-based i, j; x a vector of A)."""
    v = [Q(0)] * (n * n * A.dim)
    for b, c in enumerate(x):
        v[_mn_index(A, n, i, j, b)] = c
    return dp.DividedElement.from_vector(v)


def xi_omega(A, n, d) -> dp.DividedElement:
    return dp.shuffle_all([xi(A, n, i, i, A.unit) for i in range(d)])


@dataclass
class WreathEmbedding:
    A: ba.BasedAlgebra
    n: int
    d: int
    W: WreathAlgebra
    M: ba.BasedAlgebra  # M_n(A)
    images: list  # images[k]: DividedElement of the k-th wreath basis element
    e: dp.DividedElement  # xi_omega
    S: ba.BasedAlgebra | None = None  # S^A(n, d) as a based algebra, when built

    def apply(self, w) -> dp.DividedElement:
        out = dp.DividedElement(self.M.dim, self.d, {})
        for k, c in enumerate(w):
            if c:
                out = out + self.images[k].scale(c)
        return out

    def image_vectors(self) -> list:
        return [x.to_vector() for x in self.images]

    def preimage(self, v) -> list:
        if isinstance(v, dp.DividedElement):
            v = v.to_vector()
        cs = self.__dict__.get("_cs")
        if cs is None:
            cs = self.__dict__["_cs"] = el.CoordinateSystem(self.image_vectors(), len(v))
        return cs.coords(v)

    def corner_dim(self) -> int:
        M, e = self.M, self.e
        vecs = []
        for mu in combo.enumerate_weights(M.dim, self.d):
            x = dp.inner_mul(M, dp.inner_mul(M, e, dp.DividedElement.basis(M.dim, mu)), e)
            vecs.append(x.to_vector())
        return el.rank(vecs)

    def verify(self, corner: bool = True) -> ba.Report:
        rep = ba.Report(f"embedding[{self.A.name}, n={self.n}, d={self.d}]")
        W, M, e = self.W, self.M, self.e
        rep.checked += 1
        if self.apply(W.unit) != e:
            rep.fail("unit does not map to xi_omega")
        rep.checked += 1
        if dp.inner_mul(M, e, e) != e:
            rep.fail("xi_omega is not idempotent")
        rep.checked += 1
        if dp.gamma_tau(M, e) != e:
            rep.fail("xi_omega is not fixed by the anti-involution")
        for i in range(W.dim):
            for j in range(W.dim):
                rep.checked += 1
                lhs = self.apply(W.mul(W.basis_vector(i), W.basis_vector(j)))
                if lhs != dp.inner_mul(M, self.images[i], self.images[j]):
                    rep.fail("not multiplicative", pair=(W.labels[i], W.labels[j]))
        rep.checked += 1
        rk = el.rank(self.image_vectors())
        if rk != W.dim:
            rep.fail("not injective", rank=rk, expected=W.dim)
        if corner:
            # the image lies in the corner (it is fixed by e on both sides) so equal ranks suffice
            rep.checked += 1
            for x in self.images:
                if dp.inner_mul(M, dp.inner_mul(M, e, x), e) != x:
                    rep.fail("image is not inside the corner algebra")
                    break
            rep.checked += 1
            cd = self.corner_dim()
            if cd != W.dim:
                rep.fail("image is not the whole corner algebra", corner=cd, expected=W.dim)
        return rep


def schur_algebra(A: ba.BasedAlgebra, n: int, d: int) -> ba.BasedAlgebra:
    """S^A(n, d) = Gamma^d M_n(A) with anti-involution (tr (x) tau)^{(x) d}."""
    return cl.gamma_algebra(ba.matrix_algebra(A, n), d)


def ek_embedding(A: ba.BasedAlgebra, n: int, d: int, S: ba.BasedAlgebra | None = None,
                 slot_action=permute_slots) -> WreathEmbedding:
    if n < d:
        raise ValueError(f"need n >= d, got n={n}, d={d}")
    W = WreathAlgebra(A, d, slot_action)
    M = ba.matrix_algebra(A, n)
    images = []
    for xs, s in W.keys:
        sinv = inverse_perm(s)  # i s = s^{-1}(i)
        factors = [xi(A, n, i, sinv[i], A.basis_vector(xs[i])) for i in range(d)]
        images.append(dp.shuffle_all(factors))
    return WreathEmbedding(A, n, d, W, M, images, xi_omega(A, n, d), S)


# -- tensor space -----------------------------------------------------------------


@dataclass
class TensorSpace:
    """V^{(x) d} for V = k^n (x) A; basis sequences of (i, b) with index i*dim A + b."""

    A: ba.BasedAlgebra
    n: int
    d: int
    seqs: list = field(init=False)
    pos: dict = field(init=False)

    def __post_init__(self):
        self.seqs = list(product(range(self.n * self.A.dim), repeat=self.d))
        self.pos = {s: k for k, s in enumerate(self.seqs)}

    @property
    def dim(self) -> int:
        return len(self.seqs)

    def _split(self, v):
        return divmod(v, self.A.dim)

    def left_matrix(self, S: ba.BasedAlgebra, s_index: int) -> list:
        """Matrix of a basis element x^mu of Gamma^d M_n(A) on V^{(x) d} (columns = inputs)."""
        A, n, d = self.A, self.n, self.d
        m = A.dim
        weights = combo.enumerate_weights(S_base_dim(A, n), d)
        mu = weights[s_index]
        terms = list(combo.multiset_permutations(combo.sequence_of_weight(mu)))
        N = self.dim
        M = [[Q(0)] * N for _ in range(N)]
        for col, w in enumerate(self.seqs):
            for t in terms:
                out = {(): Q(1)}
                for slot in range(d):
                    i, j, b = _mn_decode(A, n, t[slot])
                    k, c = self._split(w[slot])
                    if j != k:
                        out = {}
                        break
                    nxt = {}
                    for key, coef in out.items():
                        for z, e in A.mult[b][c].items():
                            nxt[key + (i * m + z,)] = coef * e
                    out = nxt
                for key, coef in out.items():
                    M[self.pos[key]][col] += coef
        return M

    def right_matrix(self, W: WreathAlgebra, w_index: int) -> list:
        """Matrix of v -> v . (x (x) sigma) = ((v x) . sigma)."""
        A, m = self.A, self.A.dim
        xs, s = W.keys[w_index]
        N = self.dim
        M = [[Q(0)] * N for _ in range(N)]
        for col, v in enumerate(self.seqs):
            out = {(): Q(1)}
            for slot in range(self.d):
                i, c = self._split(v[slot])
                nxt = {}
                for key, coef in out.items():
                    for z, e in A.mult[c][xs[slot]].items():
                        nxt[key + (i * m + z,)] = coef * e
                out = nxt
            for key, coef in out.items():
                M[self.pos[permute_slots(key, s)]][col] += coef
        return M

    def v_omega(self) -> list:
        """v_1 (x) ... (x) v_d with each v_i = e_i (x) 1_A."""
        m = self.A.dim
        v = [Q(0)] * self.dim
        for bs in product(range(m), repeat=self.d):
            c = Q(1)
            for b in bs:
                c *= self.A.unit[b]
            if c:
                v[self.pos[tuple(i * m + b for i, b in enumerate(bs))]] = c
        return v


def S_base_dim(A, n):
    return n * n * A.dim


def _mn_decode(A, n, idx):
    ij, b = divmod(idx, A.dim)
    i, j = divmod(ij, n)
    return i, j, b


def _matvec(M, v):
    return [sum((a * b for a, b in zip(row, v) if a and b), Q(0)) for row in M]


def _matmul(P, Q_):
    return el.matmul(P, Q_)


def commutant(mats: list, N: int) -> list:
    """Basis of {X : L X = X L for all L in mats}, X flattened row-major."""
    basis = el.identity(N * N)  # current solution space, rows are flattened X
    for L in mats:
        if not basis:
            break
        # equations: for each basis vector X_k, compute L X_k - X_k L, then find combos that vanish
        images = []
        for flat in basis:
            X = [flat[r * N:(r + 1) * N] for r in range(N)]
            D = el.matmul(L, X)
            XL = el.matmul(X, L)
            images.append([D[r][c] - XL[r][c] for r in range(N) for c in range(N)])
        # coefficient vectors a with sum a_k images[k] = 0
        cols = el.transpose(images)
        null = el.nullspace(cols, len(basis))
        basis = [[sum((a[k] * basis[k][t] for k in range(len(basis)) if a[k]), Q(0)) for t in range(N * N)]
                 for a in null]
        basis = el.Subspace(N * N, basis).basis_matrix if basis else []
    return basis


def tensor_space_check(A: ba.BasedAlgebra, n: int, d: int, ek: WreathEmbedding | None = None) -> ba.Report:
    """S^A xi_omega ~ V^{(x) d} as bimodules and the commutant of S^A on V^{(x) d}."""
    if n < d:
        raise ValueError(f"need n >= d, got n={n}, d={d}")
    ek = ek or ek_embedding(A, n, d)
    S = ek.S = ek.S or schur_algebra(A, n, d)
    W = ek.W
    imgs_s = ek.image_vectors()
    V = TensorSpace(A, n, d)
    rep = ba.Report(f"tensor_space[{A.name}, n={n}, d={d}]")
    left = [V.left_matrix(S, s) for s in range(S.dim)]
    right = [V.right_matrix(W, w) for w in range(W.dim)]
    # right action is an action: v.(uw) = (v.u).w, i.e. R_{uw} = R_w R_u
    for i in range(W.dim):
        for j in range(W.dim):
            rep.checked += 1
            uw = W.mul(W.basis_vector(i), W.basis_vector(j))
            R = [[Q(0)] * V.dim for _ in range(V.dim)]
            for k, c in enumerate(uw):
                if c:
                    for r in range(V.dim):
                        for t in range(V.dim):
                            if right[k][r][t]:
                                R[r][t] += c * right[k][r][t]
            if R != el.matmul(right[j], right[i]):
                rep.fail("right action is not an action", pair=(W.labels[i], W.labels[j]))
    # bimodule map S xi_omega -> V^{(x) d}, s -> s . v_omega
    vo = V.v_omega()
    e = ek.e.to_vector()
    sx = el.Subspace(S.dim, [S.mul(S.basis_vector(b), e) for b in range(S.dim)])
    rep.checked += 1
    if sx.dim != V.dim:
        rep.fail("rank of S xi_omega differs from the tensor space", rank=sx.dim, expected=V.dim)

    def act(svec, v):
        out = [Q(0)] * V.dim
        for k, c in enumerate(svec):
            if c:
                el.axpy(c, _matvec(left[k], v), out)
        return out

    imgs = [act(s, vo) for s in sx.basis_matrix]
    rep.checked += 1
    if el.rank(imgs) != V.dim:
        rep.fail("s -> s.v_omega is not bijective")
    rep.checked += 1
    if act(e, vo) != vo:
        rep.fail("xi_omega does not map to v_omega")
    for s in sx.basis_matrix:
        sv = act(s, vo)
        for w in range(W.dim):
            rep.checked += 1
            lhs = act(S.mul(s, imgs_s[w]), vo)
            rhs = _matvec(right[w], sv)
            if lhs != rhs:
                rep.fail("right equivariance", wreath=W.labels[w])
        for g in range(S.dim):
            rep.checked += 1
            if act(S.mul(S.basis_vector(g), s), vo) != _matvec(left[g], sv):
                rep.fail("left equivariance", generator=S.labels[g])
    # commutant
    comm = commutant(left, V.dim)
    rep.checked += 1
    if len(comm) != W.dim:
        rep.fail("commutant dimension", dim=len(comm), expected=W.dim)
    flat_right = [[R[r][c] for r in range(V.dim) for c in range(V.dim)] for R in right]
    rep.checked += 1
    if el.Subspace(V.dim ** 2, flat_right) != el.Subspace(V.dim ** 2, comm):
        rep.fail("commutant differs from the span of the right action")
    rep.checked += 1
    if el.rank(flat_right) != W.dim:
        rep.fail("right action is not faithful")
    rep.__dict__["commutant_dim"] = len(comm)
    return rep


# -- cellularity via truncation ---------------------------------------------------


@dataclass
class WreathCellular:
    W: WreathAlgebra
    datum: ba.CellDatum
    report: cl.CellReport
    ek: WreathEmbedding


def truncate_datum(S: ba.BasedAlgebra, datum: ba.CellDatum, e: list) -> ba.CellDatum:
    """Cell datum of eSe from one of S (cells top first), for tau-fixed idempotent e.

    In each cell the standard-module matrix R of e is formed; for the pivot
    columns K of R the elements e C_{k,l} e (k, l in K) form the new cell.
    """
    entries = datum.basis()
    cs = el.CoordinateSystem([x[3] for x in entries], S.dim)
    cells = []
    for ci, cell in enumerate(datum.cells):
        pos = {T: i for i, T in enumerate(cell.M)}
        T0 = cell.M[0]
        R = [[Q(0)] * len(cell.M) for _ in cell.M]
        for Sx in cell.M:
            co = cs.coords(S.mul(e, cell.C[(Sx, T0)]))
            for k, c in enumerate(co):
                cj, S2, T2, _ = entries[k]
                if c and cj == ci:
                    R[pos[S2]][pos[Sx]] = c
        _, pivots, _ = el.rref(R)
        K = [cell.M[p] for p in pivots]
        if not K:
            continue
        C = {(k, l): S.mul(S.mul(e, cell.C[(k, l)]), e) for k in K for l in K}
        cells.append(ba.Cell(cell.label, K, C))
    return ba.CellDatum(cells)


def wreath_cellular(A: ba.BasedAlgebra, d: int, sample: int | None = None) -> WreathCellular:
    if d < 1:
        raise ValueError("d must be at least 1")
    M = ba.matrix_algebra(A, d)
    S = cl.gamma_algebra(M, d)
    Z = cl.cellular_basis_gamma(M, d)
    ek = ek_embedding(A, d, d, S=S)
    eS = truncate_datum(S, Z.cell_datum(), ek.e.to_vector())
    cells = []
    for cell in eS.cells:
        C = {st: ek.preimage(v) for st, v in cell.C.items()}
        cells.append(ba.Cell(cell.label, cell.M, C))
    datum = ba.CellDatum(cells)
    report = cl.verify_axioms(ek.W, datum, sample=sample)
    return WreathCellular(ek.W, datum, report, ek)


def wreath_dim(A, d) -> int:
    return A.dim ** d * factorial(d)
