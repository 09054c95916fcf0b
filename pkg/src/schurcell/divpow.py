"""Divided powers Gamma^d M of a free module M of rank m.

An element of Gamma^d M is stored by weights: the basis element ``x^mu``
(mu a weight of size d on m letters) is the sum of all tensors
``x_{b_1} (x) ... (x) x_{b_d}`` whose sequence ``b`` has weight ``mu``, each with
coefficient 1.  Tensor expansions are kept around as an oracle for tests.

Products ``Gamma^{(nu)}(M_1, ..., M_r) = Gamma^{nu_1} M_1 (x) ... (x) Gamma^{nu_r} M_r``
are :class:`ProductElement` values keyed by tuples of weights.

Tensor products of modules use the basis ``(a, b) -> a * rank(N) + b``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from math import comb, factorial, prod
from typing import Callable, Sequence

from . import combo
from .exactlin import Q, rational


class DegreeError(ValueError):
    pass


def _clean(coeffs: dict) -> dict:
    return {k: v for k, v in coeffs.items() if v}


def _acc(target: dict, key, value) -> None:
    if not value:
        return
    v = target.get(key, 0) + value
    if v:
        target[key] = v
    else:
        target.pop(key, None)


@dataclass
class DividedElement:
    rank: int
    degree: int
    coeffs: dict = field(default_factory=dict)

    def __post_init__(self):
        self.coeffs = _clean({tuple(k): rational(v) for k, v in self.coeffs.items()})
        for mu in self.coeffs:
            if len(mu) != self.rank or sum(mu) != self.degree or min(mu, default=0) < 0:
                raise DegreeError(f"weight {mu} invalid for rank {self.rank}, degree {self.degree}")

    @classmethod
    def basis(cls, rank: int, mu) -> "DividedElement":
        return cls(rank, sum(mu), {tuple(mu): Q(1)})

    @classmethod
    def unit(cls, rank: int) -> "DividedElement":
        return cls(rank, 0, {(0,) * rank: Q(1)})

    @classmethod
    def from_vector(cls, v: Sequence) -> "DividedElement":
        """Degree-one element with the given coordinates."""
        m = len(v)
        return cls(m, 1, {tuple(1 if i == j else 0 for i in range(m)): c for j, c in enumerate(v) if c})

    def _check(self, other):
        if not isinstance(other, DividedElement) or (self.rank, self.degree) != (other.rank, other.degree):
            raise DegreeError("elements live in different divided powers")

    def __add__(self, other):
        self._check(other)
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            _acc(out, k, v)
        return DividedElement(self.rank, self.degree, out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c) -> "DividedElement":
        c = rational(c)
        return DividedElement(self.rank, self.degree, {k: c * v for k, v in self.coeffs.items()})

    def __eq__(self, other):
        return (isinstance(other, DividedElement) and self.rank == other.rank
                and self.degree == other.degree and self.coeffs == other.coeffs)

    def is_zero(self) -> bool:
        return not self.coeffs

    def to_vector(self) -> list:
        """Coordinates in the descending-lex weight basis."""
        idx = combo.weight_index(self.rank, self.degree)
        v = [Q(0)] * len(idx)
        for mu, c in self.coeffs.items():
            v[idx[mu]] = c
        return v

    @classmethod
    def from_coordinates(cls, rank: int, degree: int, v: Sequence) -> "DividedElement":
        ws = combo.enumerate_weights(rank, degree)
        return cls(rank, degree, {ws[i]: c for i, c in enumerate(v) if c})


def gamma_rank(m: int, d: int) -> int:
    return combo.num_weights(m, d)


def gamma_basis(m: int, d: int) -> list:
    return [DividedElement.basis(m, mu) for mu in combo.enumerate_weights(m, d)]


# -- tensor oracle ---------------------------------------------------------


@dataclass
class TensorElement:
    rank: int
    degree: int
    coeffs: dict = field(default_factory=dict)

    def __post_init__(self):
        self.coeffs = _clean({tuple(k): rational(v) for k, v in self.coeffs.items()})

    def __eq__(self, other):
        return isinstance(other, TensorElement) and self.coeffs == other.coeffs and self.degree == other.degree

    def permute(self, perm: Sequence[int]) -> "TensorElement":
        """Move the factor in slot ``i`` to slot ``perm[i]``."""
        out = {}
        for seq, c in self.coeffs.items():
            new = [None] * self.degree
            for i, b in enumerate(seq):
                new[perm[i]] = b
            _acc(out, tuple(new), c)
        return TensorElement(self.rank, self.degree, out)

    def is_invariant(self) -> bool:
        for seq, c in self.coeffs.items():
            for other in combo.multiset_permutations(seq):
                if self.coeffs.get(other, 0) != c:
                    return False
        return True


def embed(x: DividedElement) -> TensorElement:
    out = {}
    for mu, c in x.coeffs.items():
        for seq in combo.multiset_permutations(combo.sequence_of_weight(mu)):
            out[seq] = c
    return TensorElement(x.rank, x.degree, out)


class NotInvariantError(ValueError):
    pass


def extract(t: TensorElement) -> DividedElement:
    if not t.is_invariant():
        raise NotInvariantError("tensor is not S_d-invariant")
    out = {}
    for seq, c in t.coeffs.items():
        if list(seq) == sorted(seq):
            out[combo.weight_of_sequence(seq, t.rank)] = c
    return DividedElement(t.rank, t.degree, out)


def tensor_product(*ts: TensorElement) -> TensorElement:
    """Concatenate tensor factors (all over modules of the same rank)."""
    out = {(): Q(1)}
    for t in ts:
        nxt = {}
        for s1, c1 in out.items():
            for s2, c2 in t.coeffs.items():
                _acc(nxt, s1 + s2, c1 * c2)
        out = nxt
    return TensorElement(ts[0].rank if ts else 0, sum(t.degree for t in ts), out)


# -- shuffle product and comultiplication -------------------------------------


def shuffle(x: DividedElement, y: DividedElement) -> DividedElement:
    """Outer product Gamma^d M (x) Gamma^e M -> Gamma^{d+e} M."""
    if x.rank != y.rank:
        raise DegreeError("shuffle of elements over different modules")
    out = {}
    for a, c in x.coeffs.items():
        for b, e in y.coeffs.items():
            s = tuple(p + q for p, q in zip(a, b))
            mult = prod(comb(p + q, p) for p, q in zip(a, b))
            _acc(out, s, c * e * mult)
    return DividedElement(x.rank, x.degree + y.degree, out)


def shuffle_all(xs: Sequence[DividedElement], rank: int | None = None) -> DividedElement:
    if not xs:
        if rank is None:
            raise DegreeError("empty shuffle needs a rank")
        return DividedElement.unit(rank)
    out = xs[0]
    for x in xs[1:]:
        out = shuffle(out, x)
    return out


def weight_splits(mu: Sequence[int], sizes: Sequence[int]):
    """All ways of writing ``mu`` as an ordered sum of weights of the given sizes."""
    mu = tuple(mu)
    if sum(sizes) != sum(mu):
        return
    if len(sizes) == 1:
        yield (mu,)
        return
    m = len(mu)

    def rec(rem, k):
        if k == len(sizes) - 1:
            yield (rem,)
            return
        for part in _sub_weights(rem, sizes[k]):
            rest = tuple(a - b for a, b in zip(rem, part))
            for tail in rec(rest, k + 1):
                yield (part,) + tail

    yield from rec(mu, 0)


def _sub_weights(mu, size):
    """Weights ``beta <= mu`` componentwise with ``|beta| = size``."""
    m = len(mu)
    out = []

    def rec(i, left, cur):
        if i == m:
            if left == 0:
                out.append(tuple(cur))
            return
        for k in range(min(mu[i], left), -1, -1):
            cur.append(k)
            rec(i + 1, left - k, cur)
            cur.pop()

    rec(0, size, [])
    return out


@dataclass
class ProductElement:
    """Element of Gamma^{nu_1} M_1 (x) ... (x) Gamma^{nu_r} M_r."""

    shape: tuple
    ranks: tuple
    coeffs: dict = field(default_factory=dict)

    def __post_init__(self):
        self.shape = tuple(self.shape)
        self.ranks = tuple(self.ranks)
        if len(self.shape) != len(self.ranks):
            raise DegreeError("shape and ranks differ in length")
        self.coeffs = _clean({tuple(tuple(w) for w in k): rational(v) for k, v in self.coeffs.items()})
        for key in self.coeffs:
            if len(key) != len(self.shape) or any(
                len(w) != r or sum(w) != s for w, r, s in zip(key, self.ranks, self.shape)
            ):
                raise DegreeError(f"key {key} does not match shape {self.shape}")

    def _check(self, other):
        if not isinstance(other, ProductElement) or (self.shape, self.ranks) != (other.shape, other.ranks):
            raise DegreeError("product elements of different shapes")

    def __add__(self, other):
        self._check(other)
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            _acc(out, k, v)
        return ProductElement(self.shape, self.ranks, out)

    def scale(self, c):
        c = rational(c)
        return ProductElement(self.shape, self.ranks, {k: c * v for k, v in self.coeffs.items()})

    def __eq__(self, other):
        return (isinstance(other, ProductElement) and self.shape == other.shape
                and self.ranks == other.ranks and self.coeffs == other.coeffs)

    def is_zero(self):
        return not self.coeffs

    @classmethod
    def basis(cls, ranks, key) -> "ProductElement":
        return cls(tuple(sum(w) for w in key), ranks, {tuple(key): Q(1)})

    def to_vector(self) -> list:
        keys = product_basis_keys(self.shape, self.ranks)
        idx = {k: i for i, k in enumerate(keys)}
        v = [Q(0)] * len(keys)
        for k, c in self.coeffs.items():
            v[idx[k]] = c
        return v

    @classmethod
    def from_coordinates(cls, shape, ranks, v) -> "ProductElement":
        keys = product_basis_keys(shape, ranks)
        return cls(shape, ranks, {keys[i]: c for i, c in enumerate(v) if c})


def product_basis_keys(shape, ranks) -> list:
    """Basis keys of a product, factors left to right, lexicographic in the weight lists."""
    return [tuple(k) for k in product(*[combo.enumerate_weights(r, s) for r, s in zip(ranks, shape)])]


def outer(*xs: DividedElement) -> ProductElement:
    """x_1 (x) ... (x) x_r as a product element."""
    out = {(): Q(1)}
    for x in xs:
        nxt = {}
        for k, c in out.items():
            for mu, e in x.coeffs.items():
                nxt[k + (mu,)] = c * e
        out = nxt
    return ProductElement(tuple(x.degree for x in xs), tuple(x.rank for x in xs), out)


def embed_product(p: ProductElement) -> TensorElement:
    """Concatenated tensor expansion (all factors must share one rank)."""
    if len(set(p.ranks)) > 1:
        raise DegreeError("embed_product needs factors of equal rank")
    rank = p.ranks[0] if p.ranks else 0
    out = {}
    for key, c in p.coeffs.items():
        parts = [embed(DividedElement.basis(rank, w)).coeffs for w in key]
        for seqs in product(*[list(d) for d in parts]):
            out[sum(seqs, ())] = c
    return TensorElement(rank, sum(p.shape), out)


def comult(x: DividedElement, c: int) -> ProductElement:
    """Component Gamma^d M -> Gamma^{d-c} M (x) Gamma^c M of the comultiplication."""
    if not 0 <= c <= x.degree:
        raise DegreeError(f"comultiplication component {c} out of range 0..{x.degree}")
    out = {}
    for mu, coef in x.coeffs.items():
        for a, b in weight_splits(mu, (x.degree - c, c)):
            _acc(out, (a, b), coef)
    return ProductElement((x.degree - c, c), (x.rank, x.rank), out)


def comult_multi(x: DividedElement, sizes: Sequence[int]) -> ProductElement:
    """Iterated comultiplication into Gamma^{sizes[0]} (x) ... (x) Gamma^{sizes[-1]}."""
    if sum(sizes) != x.degree or any(s < 0 for s in sizes):
        raise DegreeError(f"sizes {sizes} do not sum to {x.degree}")
    out = {}
    for mu, coef in x.coeffs.items():
        for parts in weight_splits(mu, sizes):
            _acc(out, parts, coef)
    return ProductElement(tuple(sizes), (x.rank,) * len(sizes), out)


def nabla(p: ProductElement) -> DividedElement:
    """Shuffle-multiply all factors (which must share one module)."""
    if len(set(p.ranks)) > 1:
        raise DegreeError("nabla needs factors over one module")
    rank = p.ranks[0]
    out = {}
    for key, c in p.coeffs.items():
        total = tuple(map(sum, zip(*key))) if key else (0,) * rank
        mult = prod(_multinomial([w[b] for w in key]) for b in range(rank))
        _acc(out, total, c * mult)
    return DividedElement(rank, sum(p.shape), out)


def _multinomial(parts) -> int:
    out = factorial(sum(parts))
    for k in parts:
        out //= factorial(k)
    return out


# -- bilinear maps: psi, inner multiplication -----------------------------------


def _bilinear_basis(mu, nu, table, out_rank):
    """Gamma^d(beta) o psi^d on x^mu (x) y^nu for beta given on basis pairs.

    ``table[a][b]`` is a sparse dict giving beta(x_a, y_b).  With ``a0`` the
    sorted sequence of weight ``mu``, the S_d-invariant result T satisfies
    T = (1/|Stab a0|) sum_sigma sigma(G) where
    G = sum_{b in orbit(nu)} (x)_i beta(x_{a0_i}, y_{b_i}); the coefficient of
    x^rho is then (prod rho! / prod mu!) * sum_{s of weight rho} G[s].
    """
    a0 = combo.sequence_of_weight(mu)
    d = len(a0)
    sums: dict = {}
    for bseq in combo.multiset_permutations(combo.sequence_of_weight(nu)):
        terms = {(): Q(1)}
        for i in range(d):
            entry = table[a0[i]][bseq[i]]
            if not entry:
                terms = {}
                break
            nxt = {}
            for s, c in terms.items():
                for k, e in entry.items():
                    key = s + (k,)
                    nxt[key] = nxt.get(key, 0) + c * e
            terms = nxt
        for s, c in terms.items():
            if c:
                _acc(sums, combo.weight_of_sequence(s, out_rank), c)
    mu_fact = prod(factorial(k) for k in mu)
    return {rho: c * Fraction(prod(factorial(k) for k in rho), mu_fact) for rho, c in sums.items()}


def bilinear(x: DividedElement, y: DividedElement, table, out_rank: int) -> DividedElement:
    if x.degree != y.degree:
        raise DegreeError(f"degrees {x.degree} and {y.degree} differ")
    if x.degree == 0:
        c = x.coeffs.get((0,) * x.rank, 0) * y.coeffs.get((0,) * y.rank, 0)
        return DividedElement(out_rank, 0, {(0,) * out_rank: c})
    out = {}
    for mu, c in x.coeffs.items():
        for nu, e in y.coeffs.items():
            for rho, f in _bilinear_basis(mu, nu, table, out_rank).items():
                _acc(out, rho, c * e * f)
    return DividedElement(out_rank, x.degree, out)


def tensor_table(m: int, n: int) -> list:
    return [[{a * n + b: Q(1)} for b in range(n)] for a in range(m)]


def psi(x: DividedElement, y: DividedElement) -> DividedElement:
    """psi^d : Gamma^d M (x) Gamma^d N -> Gamma^d (M (x) N)."""
    return bilinear(x, y, tensor_table(x.rank, y.rank), x.rank * y.rank)


def psi_lambda(x: ProductElement, y: ProductElement) -> DividedElement:
    """psi^lambda: componentwise psi followed by the shuffle product."""
    if x.shape != y.shape:
        raise DegreeError(f"shapes {x.shape} and {y.shape} differ")
    m = set(x.ranks)
    n = set(y.ranks)
    if len(m) > 1 or len(n) > 1:
        raise DegreeError("psi_lambda needs factors over single modules M and N")
    m, n = m.pop(), n.pop()
    table = tensor_table(m, n)
    out = DividedElement(m * n, sum(x.shape))
    cache = {}
    for kx, cx in x.coeffs.items():
        for ky, cy in y.coeffs.items():
            acc = DividedElement.unit(m * n)
            for a, b in zip(kx, ky):
                if (a, b) not in cache:
                    cache[(a, b)] = bilinear(DividedElement.basis(m, a), DividedElement.basis(n, b), table, m * n)
                acc = shuffle(acc, cache[(a, b)])
            out = out + acc.scale(cx * cy)
    return out


def psi_multipartition(groups: Sequence[int], x: ProductElement, y: ProductElement,
                       block_ranks: Sequence[tuple]) -> ProductElement:
    """r-fold psi^lambda landing in Gamma^{(nu)}(U_1 (x) V_1, ..., U_r (x) V_r).

    ``groups[j]`` consecutive factors of x and y form block j; ``block_ranks[j]``
    is ``(rank U_j, rank V_j)`` (needed when a block is empty).
    """
    if sum(groups) != len(x.shape) or x.shape != y.shape or len(block_ranks) != len(groups):
        raise DegreeError("shape mismatch")
    bounds = []
    pos = 0
    for g in groups:
        bounds.append((pos, pos + g))
        pos += g
    ranks = tuple(u * v for u, v in block_ranks)
    for (s, e), (u, v) in zip(bounds, block_ranks):
        if any(r != u for r in x.ranks[s:e]) or any(r != v for r in y.ranks[s:e]):
            raise DegreeError("factors of one block must share a module")
    shape = tuple(sum(x.shape[s:e]) for s, e in bounds)
    out = {}
    for kx, cx in x.coeffs.items():
        for ky, cy in y.coeffs.items():
            parts = []
            for (s, e), r in zip(bounds, ranks):
                if e == s:
                    parts.append(DividedElement.unit(r))
                    continue
                px = ProductElement(x.shape[s:e], x.ranks[s:e], {kx[s:e]: 1})
                py = ProductElement(y.shape[s:e], y.ranks[s:e], {ky[s:e]: 1})
                parts.append(psi_lambda(px, py))
            for key, c in outer(*parts).coeffs.items():
                _acc(out, key, cx * cy * c)
    return ProductElement(shape, ranks, out)


# -- functoriality -------------------------------------------------------------


def power_of_vector(v: Sequence, t: int) -> DividedElement:
    """Divided power v^{(t)} = v^{(x) t} in Gamma^t for v in M."""
    m = len(v)
    out = {}
    support = [i for i, c in enumerate(v) if c]
    for nu in combo.enumerate_weights(len(support), t):
        w = [0] * m
        c = Q(1)
        for i, k in zip(support, nu):
            w[i] = k
            c *= v[i] ** k
        out[tuple(w)] = c
    return DividedElement(m, t, out)


def gamma_map(phi: Sequence[Sequence], d: int) -> Callable[[DividedElement], DividedElement]:
    """Gamma^d(phi) for phi: M -> N given by ``phi[k][i]`` = coefficient of y_k in phi(x_i)."""
    rows = [[rational(c) for c in r] for r in phi]
    n = len(rows)
    m = len(rows[0]) if rows else 0
    cols = [[rows[k][i] for k in range(n)] for i in range(m)]
    cache = {}

    def image(mu):
        if mu not in cache:
            acc = DividedElement.unit(n)
            for i, k in enumerate(mu):
                if k:
                    acc = shuffle(acc, power_of_vector(cols[i], k))
            cache[mu] = acc
        return cache[mu]

    def apply(x: DividedElement) -> DividedElement:
        if x.rank != m or x.degree != d:
            raise DegreeError(f"expected an element of Gamma^{d} of rank {m}")
        out = DividedElement(n, d)
        for mu, c in x.coeffs.items():
            out = out + image(mu).scale(c)
        return out

    return apply


def twist_matrix(m: int, n: int) -> list:
    """Matrix of M (x) N -> N (x) M."""
    T = [[Q(0)] * (m * n) for _ in range(m * n)]
    for a in range(m):
        for b in range(n):
            T[b * m + a][a * n + b] = Q(1)
    return T


# -- algebras -----------------------------------------------------------------


def inner_mul(A, x: DividedElement, y: DividedElement) -> DividedElement:
    """Product in the algebra Gamma^d A."""
    if x.degree != y.degree:
        raise DegreeError(f"degrees {x.degree} and {y.degree} differ")
    if x.rank != A.dim or y.rank != A.dim:
        raise DegreeError("elements are not over this algebra")
    out = {}
    for mu, c in x.coeffs.items():
        for nu, e in y.coeffs.items():
            for rho, f in inner_basis_product(A, mu, nu).items():
                _acc(out, rho, c * e * f)
    return DividedElement(A.dim, x.degree, out)


def inner_basis_product(A, mu, nu) -> dict:
    """Memoized x^mu x^nu in Gamma^d A as a dict of weights."""
    cache = A.__dict__.setdefault("_gamma_cache", {})
    key = (mu, nu)
    if key not in cache:
        if sum(mu) == 0:
            cache[key] = {mu: Q(1)}
        else:
            cache[key] = _bilinear_basis(mu, nu, A.mult, A.dim)
    return cache[key]


def gamma_unit(A, d: int) -> DividedElement:
    """1_A^{(x) d} as an element of Gamma^d A."""
    return power_of_vector(A.unit, d)


def gamma_tau(A, x: DividedElement) -> DividedElement:
    """tau^{(x) d} restricted to Gamma^d A."""
    return gamma_map(_tau_columns(A), x.degree)(x)


def _tau_columns(A):
    return [[A.tau[i][k] for i in range(A.dim)] for k in range(A.dim)]


def act(A, xi: DividedElement, p: ProductElement) -> ProductElement:
    """Left action of Gamma^d A on Gamma^lambda A via comultiplication."""
    parts = comult_multi(xi, p.shape)
    out = {}
    for ka, ca in parts.coeffs.items():
        for kp, cp in p.coeffs.items():
            terms = [inner_basis_product(A, a, b) for a, b in zip(ka, kp)]
            for combo_key in product(*[list(t.items()) for t in terms]):
                key = tuple(w for w, _ in combo_key)
                c = ca * cp * prod((f for _, f in combo_key), start=Q(1))
                _acc(out, key, c)
    return ProductElement(p.shape, p.ranks, out)


def act_right(A, p: ProductElement, xi: DividedElement) -> ProductElement:
    parts = comult_multi(xi, p.shape)
    out = {}
    for ka, ca in parts.coeffs.items():
        for kp, cp in p.coeffs.items():
            terms = [inner_basis_product(A, b, a) for a, b in zip(ka, kp)]
            for combo_key in product(*[list(t.items()) for t in terms]):
                key = tuple(w for w, _ in combo_key)
                c = ca * cp * prod((f for _, f in combo_key), start=Q(1))
                _acc(out, key, c)
    return ProductElement(p.shape, p.ranks, out)


# -- standard homomorphisms -------------------------------------------------


def standard_hom(gamma: Sequence[Sequence[int]], x: ProductElement) -> ProductElement:
    """Standard homomorphism Gamma^mu M -> Gamma^lambda M for a nonnegative matrix.

    Row sums of ``gamma`` give lambda and column sums give mu: factor ``j`` is
    comultiplied into pieces of sizes ``gamma[i][j]``, then row ``i`` is
    shuffle-multiplied.
    """
    lam, mu = combo.gamma_matrix_sums(gamma)
    if tuple(x.shape) != mu:
        raise DegreeError(f"input shape {x.shape} does not match column sums {mu}")
    if len(set(x.ranks)) > 1:
        raise DegreeError("standard homomorphisms act on Gamma^mu of a single module")
    m = x.ranks[0] if x.ranks else 0
    q, p = len(lam), len(mu)
    out = {}
    for key, c in x.coeffs.items():
        splits = [list(weight_splits(key[j], [gamma[i][j] for i in range(q)])) for j in range(p)]
        for choice in product(*splits):
            # choice[j][i] is the piece of factor j sent to row i
            coef = c
            rows = []
            for i in range(q):
                pieces = [choice[j][i] for j in range(p)]
                total = tuple(sum(w[b] for w in pieces) for b in range(m))
                coef *= prod(_multinomial([w[b] for w in pieces]) for b in range(m))
                rows.append(total)
            _acc(out, tuple(rows), coef)
    return ProductElement(lam, (m,) * q, out)
