"""Weyl modules W_lambda(V) = Gamma^lambda V / box_lambda(V) for V = k^n.

Gamma^lambda V is coordinatized by :func:`divpow.product_basis_keys`; the
quotient is represented by the lifts x_T of the standard tableaux, which
together with a basis of the box submodule must span Gamma^lambda V.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import prod

from . import combo
from . import divpow as dp
from . import exactlin as el


class CertificationError(RuntimeError):
    """Box submodule plus standard lifts fail to give a basis (a bug, never expected)."""


def _parts(lam):
    return tuple(x for x in lam if x > 0)


def box_generators(lam, n: int) -> list:
    """Images of the maps gamma_{lambda(i,t)} applied to full bases, as vectors."""
    lam = _parts(lam)
    out = []
    ranks = (n,) * len(lam)
    for i in range(1, len(lam)):
        for t in range(1, lam[i] + 1):
            g = combo.box_matrix(lam, i, t)
            src = combo.lambda_modify(lam, i, t)
            for key in dp.product_basis_keys(src, ranks):
                img = dp.standard_hom(g, dp.ProductElement(src, ranks, {key: 1}))
                out.append(img.to_vector())
    return out


def box_submodule(lam, n: int) -> el.Subspace:
    lam = _parts(lam)
    dim = prod(dp.gamma_rank(n, k) for k in lam)
    return el.Subspace(dim, box_generators(lam, n))


def tableau_lift(T, lam, n: int, alphabet=None) -> dp.ProductElement:
    """x_T: the product over rows of x^{content of row i}."""
    alphabet = alphabet if alphabet is not None else list(range(1, n + 1))
    key = combo.tableau_row_weights(T, alphabet)
    return dp.ProductElement(_parts(lam), (n,) * len(key), {key: 1})


@dataclass
class WeylModule:
    lam: tuple
    n: int
    box: el.Subspace
    standard: dict  # tableau -> coordinate vector of x_T in Gamma^lambda V
    coords: el.CoordinateSystem | None

    @property
    def rank(self) -> int:
        return len(self.standard)

    @property
    def tableaux(self) -> list:
        return list(self.standard)

    def quotient_coords(self, x) -> list:
        """Coordinates of the image of x (ProductElement or vector) in the x_T basis."""
        v = x.to_vector() if isinstance(x, dp.ProductElement) else list(x)
        if self.coords is None:
            return []
        c = self.coords.coords(v)
        return c[self.box.dim:]


def weyl_module(lam, n: int) -> WeylModule:
    lam = _parts(lam)
    box = box_submodule(lam, n)
    alphabet = list(range(1, n + 1))
    tabs = combo.enumerate_standard_tableaux(lam, alphabet)
    lifts = {T: tableau_lift(T, lam, n, alphabet).to_vector() for T in tabs}
    dim = box.ambient_rank
    basis = box.basis_matrix + list(lifts.values())
    if len(basis) != dim or (basis and el.rank(basis) != dim):
        raise CertificationError(
            f"W_{lam}(k^{n}): box rank {box.dim} + {len(tabs)} standard lifts do not form a basis of rank {dim}"
        )
    cs = el.CoordinateSystem(basis, dim) if basis else None
    return WeylModule(lam, n, box, lifts, cs)


def weyl_rank(lam, n: int) -> int:
    return weyl_module(lam, n).rank


def generalized_weyl_rank(mp, ranks) -> int:
    """Rank of W_lambda(V_1) (x) ... (x) W_lambda(V_r): ranks multiply."""
    return prod(weyl_rank(p, n) if p else 1 for p, n in zip(mp, ranks))
