"""Acceptance criteria, one test each.

Every test records a PASS/FAIL line (with its wall time) that is printed
in the terminal summary; run ``pytest tests/test_acceptance.py`` to see
the table on its own.
"""
import subprocess
import sys
import time
from contextlib import contextmanager
from itertools import combinations

import pytest

from conftest import ACCEPTANCE_LINES
from oracles import jet_codim

from findet.determinacy import FINITELY_DETERMINED, check, extended_codim
from findet.experiments import (GenericSpec, build_generic_B, semicontinuity_scan, system_determinant_in_a,
                                verify_det_squared, verify_last_columns_factorization)
from findet.gaction import apply, random_group_element
from findet.jetspace import codim_stabilized, ideal_codim
from findet.matspace import PolyMatrix, minors_ideal, presentation_theta, tangent_image_gens
from findet.polyring import Poly
from findet.scalars import GF, QQ

F101 = GF(101)


@contextmanager
def criterion(number: int, title: str, limit: float | None):
    start = time.perf_counter()
    ok, detail = False, ""
    try:
        yield
        elapsed = time.perf_counter() - start
        ok = limit is None or elapsed < limit
        detail = f"{elapsed:.2f}s" + ("" if limit is None else f" (limit {limit:g}s)")
        assert ok, f"criterion {number} too slow: {detail}"
    except AssertionError as exc:
        detail = detail or str(exc).splitlines()[0]
        raise
    finally:
        ACCEPTANCE_LINES.append(f"{'PASS' if ok else 'FAIL'}  {number:2d}. {title}  [{detail}]")
        print(ACCEPTANCE_LINES[-1])


def regression_set():
    x, y = Poly.gens(F101, 2)
    z = Poly.zero(F101, 2)
    return {
        "diag(x,y)": PolyMatrix.diag([x, y]),
        "[[x,y],[y,x]]": PolyMatrix([[x, y], [y, x]]),
        "[[x,0],[0,0]]": PolyMatrix([[x, z], [z, z]]),
        "B(2,3,101)": build_generic_B(GenericSpec(2, 3, F101, seed=1)),
        "B(2,2,7)": build_generic_B(GenericSpec(2, 2, GF(7), seed=0)),
        "B(3,2,101)": build_generic_B(GenericSpec(3, 2, F101, seed=1)),
    }


def test_01_det_squared():
    with criterion(1, "M_{1,2,3,4}(Theta(B)) = det(B)^2", 5):
        shapes = [(2, 2), (2, 3), (3, 2), (3, 3)]
        count = 0
        for field, draws in ((F101, 20), (QQ, 5)):
            for s, N in shapes:
                for k in range(draws):
                    assert verify_det_squared(build_generic_B(GenericSpec(s, N, field, seed=1000 * s + 10 * N + k)))
                    count += 1
        assert count == 100


def test_02_system_determinant():
    with criterion(2, "system determinant = a^7 + a^6 over Q and F_101", 2):
        for field in (QQ, F101):
            assert system_determinant_in_a(field) == Poly(field, 1, {(7,): 1, (6,): 1})


def test_03_last_columns_factorization():
    with criterion(3, "derivative-column minors factor as det(c) N^4 prod x^(N-1)", 10):
        for N in (2, 3):
            for k in range(10):
                B = build_generic_B(GenericSpec(4, N, F101, seed=100 * N + k))
                for cols in combinations(range(9, 13), 4):
                    assert verify_last_columns_factorization(B, cols)


def test_04_generic_B_end_to_end():
    with criterion(4, "generic B (s=2, N=3, F_101): I_4(Theta) Artinian, bound from (iii)", 60):
        passes = 0
        for k in range(10):
            B = build_generic_B(GenericSpec(2, 3, F101, seed=7000 + k))
            ideal = ideal_codim(minors_ideal(presentation_theta(B), 4))
            rep = check(B)
            if (ideal.finite and rep.verdict == FINITELY_DETERMINED and rep.k_min is not None
                    and rep.bounds.get("iii") == 2 * rep.k_min - 3 + 2):
                passes += 1
        assert passes >= 9, f"{passes}/10 passed"


def test_05_criteria_equivalence():
    with criterion(5, "criteria (i), (ii), (iii) agree; stable under D_max + 3", 30):
        for name, A in regression_set().items():
            rep = check(A)
            statuses = {rep.d.finite, rep.d_e.finite, rep.ideal.finite}
            assert len(statuses) == 1, name
            if rep.d_e.finite:
                again = check(A, rep.max_degree + 3)
                assert (again.d.codim, again.d_e.codim, again.k_min) == (rep.d.codim, rep.d_e.codim, rep.k_min)


def test_06_diag_small_value():
    with criterion(6, "d_e(diag(x,y)) = 2, D* <= 3, matches brute-force oracle", 1):
        x, y = Poly.gens(QQ, 2)
        gens = tangent_image_gens(PolyMatrix.diag([x, y]), extended=True)
        res = codim_stabilized(gens)
        assert res.finite and res.codim == 2 and res.stab_degree <= 3
        dicts = [tuple(dict(c.terms) for c in g) for g in gens.gens]
        assert jet_codim(dicts, 2, 3) == 2 and jet_codim(dicts, 2, 4) == 2
        assert tuple(res.profile) == tuple(jet_codim(dicts, 2, D) for D in range(1, len(res.profile) + 1))


def test_07_negative_control():
    with criterion(7, "[[x,0],[0,0]] inconclusive at D_max = 12, profiles strictly increasing", 5):
        A = regression_set()["[[x,0],[0,0]]"]
        rep = check(A, max_degree=12)
        for res in (rep.d, rep.d_e, rep.ideal):
            assert not res.finite and len(res.profile) == 12
        for res in (rep.d, rep.d_e):
            assert all(a < b for a, b in zip(res.profile, res.profile[1:]))
        # I_4(Theta) is the zero ideal here: its codim (all of R) strictly grows as well
        assert all(a < b for a, b in zip(rep.ideal.profile, rep.ideal.profile[1:]))


def test_08_semicontinuity():
    with criterion(8, "scan B + tA (s=2, N=5, Q, A = diag(x,y)) has t with d_e(t) <= d_e(0)", 120):
        B = build_generic_B(GenericSpec(2, 5, QQ, seed=42))
        x, y = Poly.gens(QQ, 2)
        res = semicontinuity_scan(B, PolyMatrix.diag([x, y]), range(1, 11))
        assert res.d_e_at_zero.finite
        assert res.satisfied


def test_09_equivariance():
    with criterion(9, "d_e(U phi(A) V) = d_e(A) for 10 random g per regression matrix", 120):
        checked = 0
        for name, A in regression_set().items():
            base = extended_codim(A)
            if not base.finite:
                continue
            for k in range(10):
                g = random_group_element(2, 2, A.nvars, A.field, seed=31 * k + 5)
                Dst = base.stab_degree
                cap = max(Dst + g.phi.degree() * Dst + 2, 2 * base.codim + 2)
                moved = extended_codim(apply(g, A, cap))
                assert moved.finite and moved.codim == base.codim, (name, k)
                checked += 1
        assert checked == 50


def test_10_determinism():
    with criterion(10, "findet verify-paper --seed 42 is byte-identical across runs", None):
        cmd = [sys.executable, "-m", "findet.cli", "verify-paper", "--seed", "42"]
        first = subprocess.run(cmd, capture_output=True, check=True).stdout
        second = subprocess.run(cmd, capture_output=True, check=True).stdout
        assert first == second and b'"all_pass": true' in first


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
