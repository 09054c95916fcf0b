"""Independent reference computations used by the tests.

Everything here works on full tensor expansions or brute-force enumeration
and avoids the closed formulas used in the library.
"""

from fractions import Fraction
from itertools import permutations, product
from math import factorial

from schurcell import basedalg as ba
from schurcell import divpow as dp


def tensor_of(x: dp.DividedElement) -> dict:
    """Orbit-sum expansion of x in M^{(x) d} as {sequence: coeff}."""
    out = {}
    for mu, c in x.coeffs.items():
        base = []
        for b, k in enumerate(mu):
            base += [b] * k
        for seq in set(permutations(base)):
            out[seq] = out.get(seq, 0) + c
    return {k: v for k, v in out.items() if v}


def divided_of(t: dict, rank: int, degree: int) -> dp.DividedElement:
    """Read off orbit-sum coefficients from an invariant tensor (asserts invariance)."""
    out = {}
    for seq, c in t.items():
        for p in permutations(range(degree)):
            assert t.get(tuple(seq[i] for i in p), 0) == c, "tensor is not symmetric"
        if list(seq) == sorted(seq):
            mu = [0] * rank
            for b in seq:
                mu[b] += 1
            out[tuple(mu)] = c
    return dp.DividedElement(rank, degree, out)


def symmetrize_cosets(t: dict, d: int, e: int) -> dict:
    """Sum over S_{d+e}/(S_d x S_e) of sigma(t) for an S_d x S_e invariant tensor."""
    out = {}
    n = d + e
    for p in permutations(range(n)):
        for seq, c in t.items():
            new = tuple(seq[p[i]] for i in range(n))
            out[new] = out.get(new, 0) + c
    scale = Fraction(1, factorial(d) * factorial(e))
    return {k: v * scale for k, v in out.items() if v}


def shuffle(x, y):
    t = {}
    for s1, c1 in tensor_of(x).items():
        for s2, c2 in tensor_of(y).items():
            t[s1 + s2] = t.get(s1 + s2, 0) + c1 * c2
    return divided_of(symmetrize_cosets(t, x.degree, y.degree), x.rank, x.degree + y.degree)


def slot_product(A: ba.BasedAlgebra, s1, s2) -> dict:
    out = {(): Fraction(1)}
    for a, b in zip(s1, s2):
        nxt = {}
        for key, c in out.items():
            for k, e in A.mult[a][b].items():
                nxt[key + (k,)] = nxt.get(key + (k,), 0) + c * e
        out = nxt
    return out


def inner_mul(A: ba.BasedAlgebra, x, y):
    """Product in Gamma^d A computed inside A^{(x) d}."""
    t = {}
    for s1, c1 in tensor_of(x).items():
        for s2, c2 in tensor_of(y).items():
            for key, c in slot_product(A, s1, s2).items():
                t[key] = t.get(key, 0) + c1 * c2 * c
    t = {k: v for k, v in t.items() if v}
    return divided_of(t, A.dim, x.degree)


def gamma_map(phi, x):
    """phi^{(x) d} on the tensor expansion; phi[k][i] = coefficient of y_k in phi(x_i)."""
    n = len(phi)
    t = {}
    for seq, c in tensor_of(x).items():
        for out in product(range(n), repeat=len(seq)):
            coef = c
            for i, k in zip(seq, out):
                coef *= phi[k][i]
                if not coef:
                    break
            if coef:
                t[out] = t.get(out, 0) + coef
    return divided_of({k: v for k, v in t.items() if v}, n, x.degree)


def psi(x, y):
    """Slotwise pairing M^{(x) d} (x) N^{(x) d} -> (M (x) N)^{(x) d}."""
    n = y.rank
    t = {}
    for s1, c1 in tensor_of(x).items():
        for s2, c2 in tensor_of(y).items():
            key = tuple(a * n + b for a, b in zip(s1, s2))
            t[key] = t.get(key, 0) + c1 * c2
    return divided_of({k: v for k, v in t.items() if v}, x.rank * n, x.degree)


def comult(x, c):
    """Split the tensor expansion into the first d-c and last c slots."""
    out = {}
    d = x.degree
    for seq, coef in tensor_of(x).items():
        left, right = seq[: d - c], seq[d - c:]
        if list(left) == sorted(left) and list(right) == sorted(right):
            ka = tuple(left.count(b) for b in range(x.rank))
            kb = tuple(right.count(b) for b in range(x.rank))
            out[(ka, kb)] = coef
    return dp.ProductElement((d - c, c), (x.rank, x.rank), out)


def standard_tableaux(shape, alphabet):
    """Brute force: every filling, kept when rows weakly and columns strictly increase."""
    cells = [(r, c) for r, length in enumerate(shape) for c in range(length)]
    found = []
    for fill in product(alphabet, repeat=len(cells)):
        tab = {rc: v for rc, v in zip(cells, fill)}
        ok = all(tab[(r, c)] <= tab[(r, c + 1)] for r, c in cells if (r, c + 1) in tab)
        ok = ok and all(tab[(r, c)] < tab[(r + 1, c)] for r, c in cells if (r + 1, c) in tab)
        if ok:
            found.append(tuple(tuple(tab[(r, c)] for c in range(shape[r])) for r in range(len(shape))))
    return found


def tensor_algebra(A: ba.BasedAlgebra, B: ba.BasedAlgebra) -> ba.BasedAlgebra:
    """A (x) B with basis index a * dim B + b."""
    n = A.dim * B.dim
    mult = [[{} for _ in range(n)] for _ in range(n)]
    for a1, b1, a2, b2 in product(range(A.dim), range(B.dim), range(A.dim), range(B.dim)):
        out = {}
        for ka, ca in A.mult[a1][a2].items():
            for kb, cb in B.mult[b1][b2].items():
                out[ka * B.dim + kb] = out.get(ka * B.dim + kb, 0) + ca * cb
        mult[a1 * B.dim + b1][a2 * B.dim + b2] = {k: v for k, v in out.items() if v}
    unit = [A.unit[a] * B.unit[b] for a in range(A.dim) for b in range(B.dim)]
    tau = [[A.tau[a][a2] * B.tau[b][b2] for a2 in range(A.dim) for b2 in range(B.dim)]
           for a in range(A.dim) for b in range(B.dim)]
    labels = [f"{x}|{y}" for x in A.labels for y in B.labels]
    return ba.BasedAlgebra(f"{A.name}(x){B.name}", labels, mult, unit, tau)
