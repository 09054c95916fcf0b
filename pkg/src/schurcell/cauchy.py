"""Filtered bimodules J over (A, B) and the generalized Cauchy filtration of
Gamma^d J, including the elements z_{S,T}.

Setting: J has a basis, a chain of sub-bimodules J_j = J'_1 + ... + J'_j, and
for each block a bijection between a basis of J'_j and pairs (b, c) with b in
the ordered label set B_j of U_j and c in C_j of V_j.  The left and right
actions are given by structure tables ``left[a][j]`` and ``right[j][b]``
(sparse dicts over the basis of J).

Multipartitions are ordered by :func:`combo.multipartition_key`; the
filtration is decreasing along that order:
``J_lambda = sum of J'_mu for mu >= lambda``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from . import basedalg as ba
from . import combo
from . import divpow as dp
from . import exactlin as el
from .exactlin import Q


@dataclass
class Block:
    label: object
    B: list
    C: list
    pairing: dict  # (b, c) -> vector in J

    def map_matrix(self, dim: int) -> list:
        """Matrix of U (x) V -> J, basis (b, c) at index ib * |C| + ic."""
        cols = [self.pairing[(b, c)] for b in self.B for c in self.C]
        return [[cols[k][i] for k in range(len(cols))] for i in range(dim)]


@dataclass
class FilteredBimodule:
    name: str
    labels: list
    blocks: list
    left: list  # left[a][j] -> {k: coeff}
    right: list  # right[j][b] -> {k: coeff}
    left_dim: int
    right_dim: int
    _cache: dict = field(default_factory=dict, repr=False)

    @property
    def dim(self) -> int:
        return len(self.labels)

    @property
    def r(self) -> int:
        return len(self.blocks)

    def block_vectors(self, j: int) -> list:
        blk = self.blocks[j]
        return [blk.pairing[(b, c)] for b in blk.B for c in blk.C]

    def act_left(self, g: dp.DividedElement, z: dp.DividedElement) -> dp.DividedElement:
        return _cached_bilinear(self, "L", g, z, self.left)

    def act_right(self, z: dp.DividedElement, g: dp.DividedElement) -> dp.DividedElement:
        return _cached_bilinear(self, "R", z, g, self.right)


def _cached_bilinear(F, side, x, y, table):
    if x.degree != y.degree:
        raise dp.DegreeError("degree mismatch")
    if x.degree == 0:
        return dp.bilinear(x, y, table, F.dim)
    out = {}
    for mu, c in x.coeffs.items():
        for nu, e in y.coeffs.items():
            key = (side, mu, nu)
            if key not in F._cache:
                F._cache[key] = dp._bilinear_basis(mu, nu, table, F.dim)
            for rho, f in F._cache[key].items():
                dp._acc(out, rho, c * e * f)
    return dp.DividedElement(F.dim, x.degree, out)


def from_cell_chain(A: ba.BasedAlgebra, chain: ba.CellChain) -> FilteredBimodule:
    """A as an (A, A^op)-bimodule filtered by a cellular decomposition.

    U_j = Delta_j and V_j = tau(Delta_j) share the label set B_j; the right
    action of A^op is right multiplication in A.
    """
    blocks = [Block(b.label, list(b.B), list(b.B), dict(b.pairing)) for b in chain.blocks]
    return FilteredBimodule(A.name, list(A.labels), blocks, A.mult, A.mult, A.dim, A.dim)


def classical_bimodule(u: int, v: int) -> FilteredBimodule:
    """J = k^u (x) k^v as an (M_u(k), M_v(k))-bimodule with a single block."""
    dim = u * v
    labels = [f"E{i + 1}{k + 1}" for i in range(u) for k in range(v)]
    left = [[{} for _ in range(dim)] for _ in range(u * u)]
    for p in range(u):
        for q in range(u):
            for k in range(v):
                left[p * u + q][q * v + k] = {p * v + k: Q(1)}
    right = [[{} for _ in range(v * v)] for _ in range(dim)]
    for i in range(u):
        for p in range(v):
            for q in range(v):
                right[i * v + p][p * v + q] = {i * v + q: Q(1)}
    pairing = {(i, k): el.unit_vector(dim, (i - 1) * v + (k - 1)) for i in range(1, u + 1) for k in range(1, v + 1)}
    blk = Block(0, list(range(1, u + 1)), list(range(1, v + 1)), pairing)
    return FilteredBimodule(f"k^{u}(x)k^{v}", labels, [blk], left, right, u * u, v * v)


def check_filtered(F: FilteredBimodule) -> ba.Report:
    """Sub-bimodule chain and the U (x) V shape of each layer."""
    rep = ba.Report(f"filtered[{F.name}]")
    allv = [v for j in range(F.r) for v in F.block_vectors(j)]
    rep.checked += 1
    if len(allv) != F.dim or el.rank(allv) != F.dim:
        rep.fail("blocks do not form a basis of J")
        return rep
    lower = el.Subspace(F.dim)
    for j, blk in enumerate(F.blocks):
        upper = lower.extend(F.block_vectors(j))
        vecs = F.block_vectors(j)
        cs = el.CoordinateSystem(lower.basis_matrix + vecs, F.dim)
        off = lower.dim
        pairs = [(b, c) for b in blk.B for c in blk.C]
        for side, ngen in (("left", F.left_dim), ("right", F.right_dim)):
            for g in range(ngen):
                ref = {}
                for (b, c), v in zip(pairs, vecs):
                    w = _apply_table(F, side, g, v)
                    rep.checked += 1
                    try:
                        co = cs.coords(w)
                    except el.NotInSpanError:
                        rep.fail(f"J_{j + 1} not closed under {side} action", generator=g)
                        continue
                    for (b2, c2), x in zip(pairs, co[off:]):
                        if not x:
                            continue
                        if side == "left" and c2 != c:
                            rep.fail("left action mixes V labels", block=j, generator=g)
                        if side == "right" and b2 != b:
                            rep.fail("right action mixes U labels", block=j, generator=g)
                    moving = b if side == "left" else c
                    # the column of the action matrix may depend on the moving label only
                    sig = tuple(
                        x for (b2, c2), x in zip(pairs, co[off:])
                        if (c2 == c if side == "left" else b2 == b)
                    )
                    ref.setdefault(moving, set()).add(sig)
                for moving, sigs in ref.items():
                    if len(sigs) > 1:
                        rep.fail(f"{side} action depends on the fixed label", block=j, generator=g)
        lower = upper
    return rep


def _apply_table(F, side, g, v):
    out = [Q(0)] * F.dim
    for j, x in enumerate(v):
        if not x:
            continue
        entry = F.left[g][j] if side == "left" else F.right[j][g]
        for k, c in entry.items():
            out[k] += x * c
    return out


# -- filtration -----------------------------------------------------------------


def nabla_block_image(F: FilteredBimodule, nu, vectors_per_block) -> list:
    """Images under r-fold shuffle of Gamma^{(nu)}(W_1, ..., W_r) with W_j spanned by the given vectors."""
    d = sum(nu)
    factors = []
    for j, k in enumerate(nu):
        vecs = vectors_per_block[j]
        if k == 0:
            factors.append([dp.DividedElement.unit(F.dim)])
            continue
        if not vecs:
            return []
        phi = [[v[i] for v in vecs] for i in range(F.dim)]
        g = dp.gamma_map(phi, k)
        factors.append([g(b) for b in dp.gamma_basis(len(vecs), k)])
    out = []
    for choice in product(*factors):
        out.append(dp.shuffle_all(list(choice), F.dim).to_vector())
    return out


def j_submodules(F: FilteredBimodule, d: int, mu) -> tuple:
    """(J_mu, J'_mu) as subspaces of Gamma^d J in weight coordinates."""
    mu = tuple(mu)
    if len(mu) != F.r or sum(mu) != d:
        raise ValueError(f"weight {mu} is not of size {d} on {F.r} blocks")
    rank = dp.gamma_rank(F.dim, d)
    primes = [F.block_vectors(j) for j in range(F.r)]
    jp = el.Subspace(rank, nabla_block_image(F, mu, primes))
    cumul = []
    acc = []
    for j in range(F.r):
        acc = acc + primes[j]
        cumul.append(list(acc))
    gens = []
    for nu in combo.enumerate_weights(F.r, d):
        if combo.dominance_leq(mu, nu):
            gens.extend(nabla_block_image(F, nu, cumul))
    return el.Subspace(rank, gens), jp


def z_element(F: FilteredBimodule, mp, S, T) -> dp.DividedElement:
    """z_{S,T} in Gamma^d J for standard multitableaux S (labels B_*) and T (labels C_*)."""
    mp = tuple(tuple(p) for p in mp)
    if len(mp) != F.r or len(S) != F.r or len(T) != F.r:
        raise ValueError("multipartition/multitableaux do not match the number of blocks")
    parts = []
    for j, blk in enumerate(F.blocks):
        lam = mp[j]
        shape_s = tuple(len(row) for row in S[j])
        shape_t = tuple(len(row) for row in T[j])
        if shape_s != lam or shape_t != lam:
            raise ValueError(f"tableaux of block {j + 1} do not have shape {lam}")
        if not combo.is_standard(S[j], blk.B) or not combo.is_standard(T[j], blk.C):
            raise ValueError(f"tableaux of block {j + 1} are not standard")
        nu_j = sum(lam)
        if nu_j == 0:
            parts.append(dp.DividedElement.unit(F.dim))
            continue
        u, v = len(blk.B), len(blk.C)
        ks = combo.tableau_row_weights(S[j], blk.B)
        kt = combo.tableau_row_weights(T[j], blk.C)
        xs = dp.ProductElement(lam, (u,) * len(lam), {ks: 1})
        yt = dp.ProductElement(lam, (v,) * len(lam), {kt: 1})
        w = dp.psi_lambda(xs, yt)  # in Gamma^{nu_j}(U_j (x) V_j)
        parts.append(_block_inverse(F, j, nu_j)(w))
    return dp.shuffle_all(parts, F.dim)


def _block_inverse(F, j, k):
    key = ("alpha_inv", j, k)
    if key not in F._cache:
        F._cache[key] = dp.gamma_map(F.blocks[j].map_matrix(F.dim), k)
    return F._cache[key]


def multipartitions_for(F: FilteredBimodule, d: int) -> list:
    """All r-multipartitions of d in increasing order, restricted to nonempty cells."""
    lens = [min(len(b.B), len(b.C)) for b in F.blocks]
    return combo.enumerate_multipartitions(d, lens)


@dataclass
class Cell:
    mp: tuple
    S_list: list
    T_list: list
    z: dict  # (S, T) -> DividedElement

    @property
    def rank(self) -> int:
        return len(self.z)


@dataclass
class CauchyFiltration:
    F: FilteredBimodule
    d: int
    cells: list  # increasing multipartition order
    subspaces: dict  # mp -> Subspace J_mp
    report: ba.Report

    def cell(self, mp) -> Cell:
        for c in self.cells:
            if c.mp == tuple(tuple(p) for p in mp):
                return c
        raise KeyError(mp)

    def successor_subspace(self, mp) -> el.Subspace:
        """J_{mp+}: the next smaller member of the chain (zero after the top)."""
        idx = [c.mp for c in self.cells].index(tuple(tuple(p) for p in mp))
        if idx + 1 < len(self.cells):
            return self.subspaces[self.cells[idx + 1].mp]
        return el.Subspace(dp.gamma_rank(self.F.dim, self.d))

    def ranks(self) -> list:
        return [c.rank for c in self.cells]


def build_cells(F: FilteredBimodule, d: int) -> list:
    cells = []
    for mp in multipartitions_for(F, d):
        Ss = combo.enumerate_standard_multitableaux(mp, [b.B for b in F.blocks])
        Ts = combo.enumerate_standard_multitableaux(mp, [b.C for b in F.blocks])
        if not Ss or not Ts:
            continue
        z = {(S, T): z_element(F, mp, S, T) for S in Ss for T in Ts}
        cells.append(Cell(mp, Ss, Ts, z))
    return cells


def cauchy_filtration(F: FilteredBimodule, d: int, check_closure: bool = True) -> CauchyFiltration:
    """The chain J_lambda with per-cell z bases, closure verified on generators."""
    rank = dp.gamma_rank(F.dim, d)
    cells = build_cells(F, d)
    rep = ba.Report(f"cauchy[{F.name}, d={d}]")
    subspaces = {}
    acc = el.Subspace(rank)
    for cell in reversed(cells):
        acc = acc.extend([z.to_vector() for z in cell.z.values()])
        subspaces[cell.mp] = acc
    rep.checked += 1
    total = sum(c.rank for c in cells)
    if total != rank or acc.dim != rank:
        rep.fail("z elements do not form a basis", count=total, rank=acc.dim, expected=rank)
    if check_closure and rep.ok:
        left_gens = dp.gamma_basis(F.left_dim, d)
        right_gens = dp.gamma_basis(F.right_dim, d)
        for cell in cells:
            sub = subspaces[cell.mp]
            for (S, T), z in cell.z.items():
                for gi, g in enumerate(left_gens):
                    rep.checked += 1
                    if not sub.contains(F.act_left(g, z).to_vector()):
                        rep.fail("left closure", cell=cell.mp, S=S, T=T, generator=g.coeffs)
                for gi, g in enumerate(right_gens):
                    rep.checked += 1
                    if not sub.contains(F.act_right(z, g).to_vector()):
                        rep.fail("right closure", cell=cell.mp, S=S, T=T, generator=g.coeffs)
    return CauchyFiltration(F, d, cells, subspaces, rep)


def factorization_check(filt: CauchyFiltration, mp) -> ba.Report:
    """Left action on z_{S,T} (T fixed) is independent of T; right action symmetric."""
    F, d = filt.F, filt.d
    mp = tuple(tuple(p) for p in mp)
    cell = filt.cell(mp)
    rep = ba.Report(f"factorization[{combo.format_multipartition(mp)}]")
    lower = filt.successor_subspace(mp)
    keys = list(cell.z)
    cs = el.CoordinateSystem(lower.basis_matrix + [cell.z[k].to_vector() for k in keys], lower.ambient_rank)
    off = lower.dim
    pos = {k: off + i for i, k in enumerate(keys)}

    def coords(vec):
        co = cs.coords(vec)
        return {k: co[pos[k]] for k in keys if co[pos[k]]}

    for side, gens in (("left", dp.gamma_basis(F.left_dim, d)), ("right", dp.gamma_basis(F.right_dim, d))):
        for g in gens:
            mats = {}
            for (S, T) in keys:
                if side == "left":
                    w = coords(F.act_left(g, cell.z[(S, T)]).to_vector())
                    fixed, moving = T, S
                else:
                    w = coords(F.act_right(cell.z[(S, T)], g).to_vector())
                    fixed, moving = S, T
                rep.checked += 1
                col = {}
                for (S2, T2), c in w.items():
                    other_fixed = T2 if side == "left" else S2
                    other_moving = S2 if side == "left" else T2
                    if other_fixed != fixed:
                        rep.fail(f"{side} action leaves the line", generator=g.coeffs, S=S, T=T)
                    col[other_moving] = c
                mats.setdefault(fixed, {})[moving] = col
            ref = None
            for fixed, m in mats.items():
                if ref is None:
                    ref = m
                elif m != ref:
                    rep.fail(f"{side} action matrix depends on the fixed tableau", generator=g.coeffs)
    return rep


def cauchy_rank_identity(a: int, b: int, d: int) -> tuple:
    """(sum over lambda of rank W_lambda(k^a) * rank W_lambda(k^b), C(ab+d-1, d))."""
    from .weyl import weyl_rank

    total = 0
    for lam in combo.enumerate_partitions(d):
        total += weyl_rank(lam, a) * weyl_rank(lam, b)
    return total, dp.gamma_rank(a * b, d)
