from fractions import Fraction
from itertools import product
from math import prod

import pytest

from schurcell import combo
from schurcell import divpow as dp
from schurcell import exactlin as el
from schurcell import weyl


def hook_content(lam, n):
    """rank W_lambda(k^n) by the hook-content formula."""
    conj = [sum(1 for r in lam if r > c) for c in range(lam[0])] if lam else []
    out = Fraction(1)
    for i, row in enumerate(lam):
        for j in range(row):
            hook = row - j + conj[j] - i - 1
            out *= Fraction(n + j - i, hook)
    return int(out)


def test_box_of_one_one_is_image_of_comultiplication():
    box = weyl.box_submodule((1, 1), 2)
    assert box.dim == 3
    comult = [dp.comult(x, 1).to_vector() for x in dp.gamma_basis(2, 2)]
    assert box == el.Subspace(4, comult)


def test_box_of_two_one():
    assert weyl.box_submodule((2, 1), 2).dim == 4
    assert weyl.weyl_rank((2, 1), 2) == 2


def test_single_row_has_no_box():
    for d in range(1, 5):
        for n in (1, 2, 3):
            assert weyl.box_submodule((d,), n).dim == 0
            assert weyl.weyl_rank((d,), n) == dp.gamma_rank(n, d)


def test_rank_matches_hook_content():
    for d in range(1, 5):
        for lam in combo.enumerate_partitions(d):
            for n in range(1, 4):
                assert weyl.weyl_rank(lam, n) == hook_content(lam, n), (lam, n)


def test_two_row_ranks():
    for d in range(1, 6):
        for lam in combo.enumerate_partitions(d, 2):
            l2 = lam[1] if len(lam) > 1 else 0
            assert weyl.weyl_rank(lam, 2) == lam[0] - l2 + 1


def test_more_rows_than_letters_is_zero():
    assert weyl.weyl_rank((1, 1, 1), 2) == 0
    assert weyl.weyl_rank((2, 1, 1), 1) == 0


def test_cauchy_rank_identity():
    from schurcell.cauchy import cauchy_rank_identity
    for a, b, d in [(1, 1, 3), (2, 2, 2), (2, 3, 3), (3, 3, 2), (2, 2, 4)]:
        total, expected = cauchy_rank_identity(a, b, d)
        assert total == expected


def _group_like(g, lam, x):
    """Apply Gamma^{lam_1}(g) (x) ... (x) Gamma^{lam_r}(g) to a ProductElement."""
    maps = [dp.gamma_map(g, k) for k in lam]
    n = len(g)
    out = None
    for key, c in x.coeffs.items():
        factors = [maps[i](dp.DividedElement.basis(len(g[0]), key[i])) for i in range(len(lam))]
        for choice in product(*(list(f.coeffs.items()) for f in factors)):
            k = tuple(w for w, _ in choice)
            coef = c * prod(e for _, e in choice)
            term = dp.ProductElement(lam, (n,) * len(lam), {k: coef})
            out = term if out is None else out + term
    return out


@pytest.mark.parametrize("lam", [(1, 1), (2, 1), (2, 2), (3, 1)])
def test_box_is_stable(lam):
    n = 2
    box = weyl.box_submodule(lam, n)
    gs = [[[1, 2], [0, 1]], [[0, 1], [1, 0]], [[2, -1], [3, 5]]]
    for g in gs:
        for v in box.basis_matrix:
            x = dp.ProductElement.from_coordinates(lam, (n,) * len(lam), v)
            assert box.contains(_group_like(g, lam, x).to_vector())


def test_standard_lifts_complement_box():
    W = weyl.weyl_module((2, 1), 3)
    assert W.rank == 8
    for T, vec in W.standard.items():
        co = W.quotient_coords(vec)
        assert co.count(1) == 1 and sum(co) == 1
    # a box element maps to zero in the quotient
    for v in W.box.basis_matrix:
        assert not any(W.quotient_coords(v))
