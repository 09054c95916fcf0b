"""Index combinatorics: weights, partitions, multipartitions, sequences, tableaux.

Conventions
-----------
* A weight on ``n`` letters is a tuple of ``n`` nonnegative ints.
* A partition is a tuple of positive ints, weakly decreasing.  The empty
  partition is ``()``.
* A multipartition is a tuple of partitions.
* A tableau is a tuple of rows, each row a tuple of entries drawn from an
  ordered alphabet.  The alphabet is any sequence of distinct hashable labels;
  an int ``n`` stands for ``range(n)``.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from itertools import product
from math import comb, factorial
from typing import Iterator, Sequence

Weight = tuple
Partition = tuple
Multipartition = tuple
Tableau = tuple


def _alphabet(a) -> tuple:
    return tuple(range(a)) if isinstance(a, int) else tuple(a)


# -- weights ---------------------------------------------------------------


def enumerate_weights(n: int, d: int) -> list[Weight]:
    """All weights of size ``d`` on ``n`` letters, descending lexicographic."""
    return list(_weights(n, d))


@lru_cache(maxsize=None)
def _weights(n: int, d: int) -> tuple:
    if n == 0:
        return ((),) if d == 0 else ()
    if n == 1:
        return ((d,),)
    out = []
    for first in range(d, -1, -1):
        for rest in _weights(n - 1, d - first):
            out.append((first,) + rest)
    return tuple(out)


def weight_index(n: int, d: int) -> dict:
    return {w: i for i, w in enumerate(_weights(n, d))}


def num_weights(n: int, d: int) -> int:
    if n == 0:
        return 1 if d == 0 else 0
    return comb(n + d - 1, d)


def dominance_leq(mu: Sequence[int], nu: Sequence[int]) -> bool:
    """``mu`` is dominated by ``nu``: every prefix sum of ``mu`` is <= that of ``nu``."""
    if len(mu) != len(nu) or sum(mu) != sum(nu):
        raise ValueError(f"weights {mu} and {nu} are not comparable")
    a = b = 0
    for x, y in zip(mu, nu):
        a += x
        b += y
        if a > b:
            return False
    return True


def weight_of_sequence(seq: Sequence, n: int | None = None) -> Weight:
    """Occurrence counts of ``0..n-1`` in ``seq``."""
    if n is None:
        n = max(seq, default=-1) + 1
    counts = [0] * n
    for b in seq:
        counts[b] += 1
    return tuple(counts)


def sequence_of_weight(mu: Sequence[int]) -> tuple:
    """The sorted sequence with weight ``mu``: each letter repeated ``mu_b`` times."""
    return tuple(b for b, k in enumerate(mu) for _ in range(k))


def orbit_size(mu: Sequence[int]) -> int:
    out = factorial(sum(mu))
    for k in mu:
        out //= factorial(k)
    return out


def multiset_permutations(seq: Sequence) -> Iterator[tuple]:
    """Distinct rearrangements of ``seq`` in lexicographic order."""
    items = sorted(Counter(seq).items())
    keys = [k for k, _ in items]
    counts = [c for _, c in items]
    n = len(seq)
    cur: list = []

    def rec():
        if len(cur) == n:
            yield tuple(cur)
            return
        for i, k in enumerate(keys):
            if counts[i]:
                counts[i] -= 1
                cur.append(k)
                yield from rec()
                cur.pop()
                counts[i] += 1

    yield from rec()


def canonical_orbit_rep(seqs: Sequence[Sequence]) -> tuple:
    """Least element of the diagonal S_d-orbit of a tuple of sequences.

    The columns ``(b1_i, ..., br_i)`` are sorted lexicographically.
    """
    seqs = [tuple(s) for s in seqs]
    if not seqs:
        return ()
    d = len(seqs[0])
    if any(len(s) != d for s in seqs):
        raise ValueError("sequences must share their length")
    cols = sorted(zip(*seqs))
    if not cols:
        return tuple(() for _ in seqs)
    return tuple(tuple(c) for c in zip(*cols))


def orbit_reps(n_sizes: Sequence[int], d: int) -> list[tuple]:
    """Canonical representatives of seq^d(B_1, ..., B_r)/S_d by brute force."""
    reps = set()
    for cols in product(product(*[range(k) for k in n_sizes]), repeat=d):
        reps.add(canonical_orbit_rep(tuple(zip(*cols))) if d else tuple(() for _ in n_sizes))
    return sorted(reps)


# -- partitions and multipartitions -----------------------------------------


def is_partition(p: Sequence[int]) -> bool:
    return all(x > 0 for x in p) and all(p[i] >= p[i + 1] for i in range(len(p) - 1))


def enumerate_partitions(d: int, max_len: int | None = None) -> list[Partition]:
    """Partitions of ``d`` with at most ``max_len`` parts, increasing lex order."""
    out = []

    def rec(rem, cap, cur):
        if rem == 0:
            out.append(tuple(cur))
            return
        if max_len is not None and len(cur) >= max_len:
            return
        for k in range(min(rem, cap), 0, -1):
            cur.append(k)
            rec(rem - k, k, cur)
            cur.pop()

    rec(d, d, [])
    return sorted(out)


def multipartition_weight(mp: Multipartition) -> Weight:
    return tuple(sum(p) for p in mp)


def multipartition_key(mp: Multipartition):
    """Sort key realising the total order on multipartitions of fixed size.

    Weights are compared lexicographically first, then components left to
    right; partitions of equal size compare lexicographically as tuples.
    """
    return (multipartition_weight(mp), tuple(tuple(p) for p in mp))


def compare_multipartitions(a: Multipartition, b: Multipartition) -> int:
    """-1, 0 or 1 according to the multipartition order."""
    if sum(map(sum, a)) != sum(map(sum, b)):
        raise ValueError("multipartitions of different total weight are not comparable")
    if len(a) != len(b):
        raise ValueError("multipartitions with different numbers of components")
    ka, kb = multipartition_key(a), multipartition_key(b)
    return (ka > kb) - (ka < kb)


def enumerate_multipartitions(d: int, max_lens: Sequence[int | None]) -> list[Multipartition]:
    """All r-multipartitions of total size ``d`` in increasing order.

    ``max_lens[j]`` bounds the number of parts of component ``j``.
    """
    r = len(max_lens)
    out = []
    for nu in enumerate_weights(r, d):
        for comps in product(*[enumerate_partitions(nu[j], max_lens[j]) for j in range(r)]):
            out.append(tuple(comps))
    out.sort(key=multipartition_key)
    return out


def format_partition(p: Partition) -> str:
    return "(" + ",".join(map(str, p)) + ")" if p else "()"


def format_multipartition(mp: Multipartition) -> str:
    return "(" + "; ".join(",".join(map(str, p)) if p else "-" for p in mp) + ")"


def parse_partition(text: str) -> Partition:
    text = text.strip().strip("()")
    if not text or text == "-":
        return ()
    parts = tuple(int(x) for x in text.split(","))
    if not is_partition(parts):
        raise ValueError(f"{text!r} is not a partition")
    return parts


def lambda_modify(lam: Sequence[int], i: int, t: int) -> Weight:
    """Move ``t`` boxes from row ``i+1`` up to row ``i`` (rows numbered from 1)."""
    lam = tuple(lam)
    q = sum(1 for x in lam if x > 0)
    if not 1 <= i < q:
        raise ValueError(f"row index {i} out of range for {lam}")
    if not 1 <= t <= lam[i]:
        raise ValueError(f"t={t} out of range 1..{lam[i]}")
    out = list(lam)
    out[i - 1] += t
    out[i] -= t
    return tuple(out)


def gamma_matrix_sums(gamma: Sequence[Sequence[int]]) -> tuple[Weight, Weight]:
    """Row sums and column sums of a nonnegative integer matrix."""
    if any(x < 0 for row in gamma for x in row):
        raise ValueError("standard homomorphism matrices must be nonnegative")
    ncols = len(gamma[0]) if gamma else 0
    if any(len(row) != ncols for row in gamma):
        raise ValueError("ragged matrix")
    rows = tuple(sum(row) for row in gamma)
    cols = tuple(sum(row[j] for row in gamma) for j in range(ncols))
    return rows, cols


def box_matrix(lam: Sequence[int], i: int, t: int) -> list[list[int]]:
    """Matrix of the map Gamma^{lam(i,t)} -> Gamma^lam used for Weyl modules.

    ``diag(lam) + t E_{i+1,i} - t E_{i+1,i+1}``, rows numbered from 1.
    """
    lambda_modify(lam, i, t)
    q = len(lam)
    g = [[lam[a] if a == b else 0 for b in range(q)] for a in range(q)]
    g[i][i - 1] += t
    g[i][i] -= t
    return g


# -- tableaux ----------------------------------------------------------------


def young_diagram(shape: Partition) -> list[tuple[int, int]]:
    return [(i, j) for i, row in enumerate(shape) for j in range(row)]


def is_standard(tab: Tableau, alphabet) -> bool:
    """Rows weakly increasing, columns strictly increasing."""
    pos = {b: k for k, b in enumerate(_alphabet(alphabet))}
    try:
        t = [[pos[x] for x in row] for row in tab]
    except KeyError:
        return False
    for row in t:
        if any(row[j] > row[j + 1] for j in range(len(row) - 1)):
            return False
    for i in range(len(t) - 1):
        for j in range(len(t[i + 1])):
            if j >= len(t[i]) or t[i][j] >= t[i + 1][j]:
                return False
    return True


def is_row_standard(tab: Tableau, alphabet) -> bool:
    pos = {b: k for k, b in enumerate(_alphabet(alphabet))}
    return all(pos[r[j]] <= pos[r[j + 1]] for r in tab for j in range(len(r) - 1))


def enumerate_standard_tableaux(shape: Partition, alphabet) -> list[Tableau]:
    """Standard tableaux of the given shape, in lexicographic order of rows."""
    alpha = _alphabet(alphabet)
    n = len(alpha)
    shape = tuple(shape)
    if len(shape) > n:
        return []
    cells = young_diagram(shape)
    grid = [[None] * r for r in shape]
    out = []

    def rec(k):
        if k == len(cells):
            out.append(tuple(tuple(alpha[x] for x in row) for row in grid))
            return
        i, j = cells[k]
        lo = 0
        if j > 0:
            lo = grid[i][j - 1]
        if i > 0:
            lo = max(lo, grid[i - 1][j] + 1)
        for v in range(lo, n):
            grid[i][j] = v
            rec(k + 1)
        grid[i][j] = None

    rec(0)
    return out


def superstandard(shape: Partition, alphabet) -> Tableau:
    """Row ``i`` filled with the ``i``-th letter of the alphabet."""
    alpha = _alphabet(alphabet)
    if len(shape) > len(alpha):
        raise ValueError(f"shape {shape} has more rows than the alphabet has letters")
    return tuple(tuple([alpha[i]] * r) for i, r in enumerate(shape))


def tableau_row_weights(tab: Tableau, alphabet) -> tuple[Weight, ...]:
    """Content of each row as a weight over the alphabet."""
    alpha = _alphabet(alphabet)
    pos = {b: k for k, b in enumerate(alpha)}
    return tuple(weight_of_sequence([pos[x] for x in row], len(alpha)) for row in tab)


def enumerate_standard_multitableaux(mp: Multipartition, alphabets: Sequence) -> list[tuple]:
    return [tuple(t) for t in product(*[
        enumerate_standard_tableaux(p, a) for p, a in zip(mp, alphabets)
    ])]


def superstandard_multitableau(mp: Multipartition, alphabets: Sequence) -> tuple:
    return tuple(superstandard(p, a) for p, a in zip(mp, alphabets))


def format_tableau(tab: Tableau) -> str:
    if not tab:
        return "-"
    return "/".join("".join(map(str, row)) if all(len(str(x)) == 1 for x in row)
                    else ".".join(map(str, row)) for row in tab)


def format_multitableau(mt: tuple) -> str:
    return "(" + ", ".join(format_tableau(t) for t in mt) + ")"
