"""Acceptance criteria 1-9, one test each, exact equality throughout.

Each test records a pass/fail line that conftest prints after the run.
"""

import re
import subprocess
import sys
import time
from contextlib import contextmanager
from math import comb

import pytest

import conftest
import test_cellular
import test_combo
import test_divpow
from schurcell import basedalg as ba
from schurcell import cauchy as ca
from schurcell import cellular as cl
from schurcell import combo
from schurcell import divpow as dp
from schurcell import weyl
from schurcell import wreath as wr


@contextmanager
def criterion(n, title):
    info = {"detail": ""}
    try:
        yield info
    except BaseException as exc:
        conftest.ACCEPTANCE[n] = (False, title, f"{type(exc).__name__}: {exc}".splitlines()[0][:160])
        raise
    conftest.ACCEPTANCE[n] = (True, title, info["detail"])


def _instances():
    zig = ba.builtin("zigzag")
    return [
        ("Gamma^2(zigzag)", cl.cellular_basis_gamma(zig, 2), 21),
        ("S^dual(2,2)", cl.cellular_basis_schur(ba.builtin("dual_numbers"), 2, 2), 36),
        ("S(2,2)", cl.cellular_basis_schur(ba.builtin("k"), 2, 2), 10),
    ]


@pytest.fixture(scope="module")
def instances():
    return _instances()


def test_criterion_1_zigzag_golden():
    with criterion(1, "zig-zag golden table") as info:
        t0 = time.perf_counter()
        proc = subprocess.run([sys.executable, "-m", "schurcell.cli", "cellular", "--builtin", "zigzag",
                               "-n", "1", "-d", "2"], capture_output=True, text=True, check=False)
        elapsed = time.perf_counter() - t0
        assert proc.returncode == 0, proc.stderr
        rows = [line.split(" | ") for line in proc.stdout.strip().splitlines()[2:]]
        assert len(rows) == 21
        norm = lambda s: re.sub(r"[\s{}]", "", s)
        # cell order and tableaux agree with the table on every row
        for row, ref in zip(rows, test_cellular.ZIGZAG_TABLE):
            assert [c.strip() for c in row[:3]] == list(ref[:3])
        # rows quoted in full, symbol for symbol
        quoted = {0: "e_0^{⊗2}", 10: "e_1 ∗ (a_01 a_10) + a_10 ∗ a_01", 20: "(a_12 a_21)^{⊗2}"}
        for i, text in quoted.items():
            assert norm(rows[i][3]) == norm(text), (i, rows[i][3])
        # every row equal as an element; literal text differs only in the known notation rows
        zig = ba.builtin("zigzag")
        Zb = cl.cellular_basis_gamma(zig, 2)
        literal = 0
        for i, ((*_, z), ref, row) in enumerate(zip(Zb.elements(), test_cellular.ZIGZAG_TABLE, rows)):
            assert z == test_cellular.parse_element(zig, ref[3]), ref[3]
            if norm(row[3]) == norm(ref[3]):
                literal += 1
            else:
                assert test_cellular.NOTATION_ONLY[i] == row[3].strip()
        assert elapsed < 5
        info["detail"] = (f"21 rows, {len(quoted)} quoted rows exact, 21/21 equal as elements, "
                          f"{literal}/21 literal, {elapsed:.2f}s")


def test_criterion_2_axioms(instances):
    with criterion(2, "cellular axioms, exhaustive") as info:
        t0 = time.perf_counter()
        parts = []
        for name, Zb, dim in instances:
            G = cl.gamma_algebra(Zb.algebra, Zb.d)
            rep = cl.verify_axioms(G, Zb.cell_datum())
            assert G.dim == dim == len(Zb)
            assert rep.ok, (name, rep.counterexamples[:2])
            parts.append(f"{name} dim {dim}")
        classical = instances[2][1]
        assert [(c.mp, c.rank) for c in classical.filtration.cells] == [(((1, 1),), 1), (((2,),), 9)]
        elapsed = time.perf_counter() - t0
        assert elapsed < 60
        info["detail"] = ", ".join(parts) + f", {elapsed:.2f}s"


def test_criterion_3_involution(instances):
    with criterion(3, "tau(z_ST) = z_TS") as info:
        count = 0
        for name, Zb, _ in instances:
            cells = Zb.cells
            for mp, S, T, z in Zb.elements():
                assert dp.gamma_tau(Zb.algebra, z) == cells[mp][(T, S)], (name, mp, S, T)
                count += 1
        info["detail"] = f"{count} pairs"


def test_criterion_4_cauchy_ranks():
    with criterion(4, "Cauchy rank identity") as info:
        n = 0
        for a in range(1, 4):
            for b in range(1, 4):
                for d in range(4):
                    total, expected = ca.cauchy_rank_identity(a, b, d)
                    assert total == expected == comb(a * b + d - 1, d), (a, b, d)
                    n += 1
        Z = ba.builtin("zigzag")
        F = ca.from_cell_chain(Z, ba.gl_to_kx(Z))
        gen = 0
        for mp in ca.multipartitions_for(F, 2):
            s = len(combo.enumerate_standard_multitableaux(mp, [blk.B for blk in F.blocks]))
            t = len(combo.enumerate_standard_multitableaux(mp, [blk.C for blk in F.blocks]))
            gen += s * t
        assert gen == dp.gamma_rank(F.dim, 2) == 21
        info["detail"] = f"{n} triples, zig-zag sum {gen}"


def test_criterion_5_weyl_ranks():
    with criterion(5, "Weyl ranks equal standard tableau counts") as info:
        n_checked = 0
        for d in range(1, 5):
            for lam in combo.enumerate_partitions(d):
                for n in range(1, 4):
                    W = weyl.weyl_module(lam, n)  # raises CertificationError on failure
                    assert W.rank == len(combo.enumerate_standard_tableaux(lam, list(range(1, n + 1))))
                    n_checked += 1
        info["detail"] = f"{n_checked} (lambda, n) pairs certified"


def test_criterion_6_schur_weyl():
    with criterion(6, "wreath embedding and commutant, dual numbers n=d=2") as info:
        t0 = time.perf_counter()
        A = ba.builtin("dual_numbers")
        ek = wr.ek_embedding(A, 2, 2)
        rep = ek.verify(corner=True)
        assert rep.ok, rep.failures[:2]
        assert ek.W.dim == ek.corner_dim() == 8 == 2 ** 2 * 2
        ts = wr.tensor_space_check(A, 2, 2, ek)
        assert ts.ok, ts.failures[:2]
        assert ts.commutant_dim == 8
        elapsed = time.perf_counter() - t0
        assert elapsed < 30
        info["detail"] = f"corner dim 8, commutant dim {ts.commutant_dim}, {elapsed:.2f}s"


def test_criterion_7_wreath():
    with criterion(7, "wreath products cellular at d=2") as info:
        parts = []
        for name in ("k", "dual_numbers"):
            res = wr.wreath_cellular(ba.builtin(name), 2)
            assert res.report.ok, (name, res.report.counterexamples[:2])
            parts.append(f"{res.W.name} dim {res.W.dim}, {len(res.datum.cells)} cells")
        info["detail"] = "; ".join(parts)


def test_criterion_8_filtration():
    with criterion(8, "filtration sub-bimodules and layer ranks") as info:
        Z = ba.builtin("zigzag")
        Zb = cl.cellular_basis_gamma(Z, 2)
        G = cl.gamma_algebra(Z, 2)
        filt = Zb.filtration
        checks = 0
        for cell in filt.cells:
            J = filt.subspaces[cell.mp]
            for v in J.basis_matrix:
                for g in range(G.dim):
                    gv = G.basis_vector(g)
                    assert J.contains(G.mul(gv, v)) and J.contains(G.mul(v, gv)), cell.mp
                    checks += 2
        ranks = []
        for cell in filt.cells:
            layer = filt.subspaces[cell.mp].dim - filt.successor_subspace(cell.mp).dim
            assert layer == len(cell.S_list) * len(cell.T_list) == len(cell.S_list) ** 2
            ranks.append(layer)
        assert ranks == [1, 4, 1, 9, 1, 4, 1]
        info["detail"] = f"{checks} products, layer ranks {ranks}"


PROPERTY_SUITES = [
    ("bialgebra compatibility", test_divpow.test_bialgebra_compatibility_exhaustive),
    ("coassociativity", test_divpow.test_coassociative_exhaustive),
    ("shuffle laws", test_divpow.test_shuffle_commutative_associative),
    ("psi twist square", test_divpow.test_psi_twist_square),
    ("box maps commute with psi", test_divpow.test_box_maps_commute_with_psi),
    ("exponential decomposition", test_divpow.test_sum_decomposition),
    ("dominance refined by lex", test_combo.test_lex_refines_dominance),
]


def test_criterion_9_properties():
    with criterion(9, "property suites") as info:
        t0 = time.perf_counter()
        for name, fn in PROPERTY_SUITES:
            fn()
        info["detail"] = f"{len(PROPERTY_SUITES)} suites, {time.perf_counter() - t0:.2f}s"
