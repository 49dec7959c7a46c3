"""
Acceptance criteria, one test per criterion.  Each test runs the full check at its
stated bound, measures wall time against its limit, and prints a single
``PASS criterion N`` / ``FAIL criterion N`` line (repeated in the terminal summary).
"""
from __future__ import annotations

import contextlib
import itertools
import math
import time

import pytest

from conftest import ACCEPTANCE_LINES
from cycsieve.cherednik import graded_multiplicity_oracle, molchanov_series, rational_q_schroder
from cycsieve.cli import _parity_for_n
from cycsieve.corpus import admissible_shape_taus, corpus, counterexample_pair
from cycsieve.csp import check_bracelet_csp, check_nc_secondary, check_technical_csp
from cycsieve.errors import BadTauShape
from cycsieve.molien import y_poly, y_zeta_prediction
from cycsieve.orbits import (
    CosetSpace, DoubleCosetSpace, bracelet_orbits, enumerate_necklaces, fiber_profile,
    verify_fixpts_identity,
)
from cycsieve.qpoly import IntPoly, c_alpha, eval_at_root_of_unity, is_palindromic, is_parity_unimodal
from cycsieve.symmgrp import (
    AffineMap, Permutation, affine_normal_form, cycle_type, cycle_type_of_cj_tau, cyclic_subgroup,
    is_c_admissible, normalizer_of_c, partitions, rotation, young_subgroup,
)


@contextlib.contextmanager
def criterion(number: int, title: str, limit_s: float):
    start = time.perf_counter()
    status, detail = "FAIL", ""
    try:
        yield
        elapsed = time.perf_counter() - start
        if elapsed < limit_s:
            status = "PASS"
        else:
            detail = " (time limit exceeded)"
    except BaseException as exc:
        detail = f" ({type(exc).__name__}: {str(exc)[:120]})"
        raise
    finally:
        elapsed = time.perf_counter() - start
        line = f"{status} criterion {number}: {title} [{elapsed:.1f}s / limit {limit_s:.0f}s]{detail}"
        ACCEPTANCE_LINES.append(line)
        print(line)
    assert elapsed < limit_s, line


def test_criterion_01_worked_example():
    with criterion(1, "alpha=(3,4) worked example", 1):
        alpha = (3, 4)
        poly = c_alpha(alpha)
        assert poly == IntPoly([1, 0, 1, 1, 1, 0, 1])
        assert len(enumerate_necklaces(alpha)) == 5
        b = bracelet_orbits(alpha)
        assert (b.total, b.asymmetric) == (4, 1)
        report = check_bracelet_csp(alpha)
        assert report.verdict
        y = y_poly(young_subgroup(alpha))
        assert y == poly
        assert y(-1) == 3 == b.symmetric_necklaces == report.rows[1].fix


def test_criterion_02_counterexample():
    with criterion(2, "S_10 counterexample flags (4,4,2) and fails", 120):
        tau, h = counterexample_pair()
        assert cycle_type(tau) == (4, 4, 1, 1)
        space = CosetSpace(h)
        assert space.size == 907200
        report = check_technical_csp(tau, h, DoubleCosetSpace(space))
        cond = report.conditions
        assert not cond["holds"]
        assert (4, 4, 2) in [tuple(v["cycle_type"]) for v in cond["violations"]]
        assert not report.verdict
        assert [r.b for r in report.witnesses] == [1, 3]


def test_criterion_03_technical_theorem_sweep():
    with criterion(3, "technical theorem, n <= 9, all admissible-shape tau, corpus H", 600):
        checked = 0
        for n in range(3, 10):
            for h in corpus(n):
                if not h.acts_freely_with_rotations():
                    continue
                orbits = None
                for tau in admissible_shape_taus(n):
                    if orbits is None:
                        orbits = DoubleCosetSpace(CosetSpace(h))
                    report = check_technical_csp(tau, h, orbits)
                    if report.conditions["holds"]:
                        assert report.verdict, (str(tau), repr(h))
                        checked += 1
        assert checked == 2669


def test_criterion_04_root_of_unity_prediction():
    with criterion(4, "Y(zeta_m) from fixed points equals direct evaluation, corpus n <= 10", 300):
        pairs = 0
        for n in range(3, 11):
            for h in corpus(n):
                if not h.acts_freely_with_rotations():
                    continue
                y = y_poly(h)
                for m in range(2, n + 2):
                    assert y_zeta_prediction(h, m) == eval_at_root_of_unity(y, m, 1), (repr(h), m)
                    pairs += 1
        assert pairs == 2313


def test_criterion_05_fixed_points_on_cosets():
    with criterion(5, "fixed points on S_5/H, all cyclic H, all gamma", 60):
        seen = set()
        for g in itertools.permutations(range(1, 6)):
            h = cyclic_subgroup(Permutation(g))
            key = frozenset(h.element_tuples)
            if key in seen:
                continue
            seen.add(key)
            space = CosetSpace(h)
            for gamma in itertools.permutations(range(1, 6)):
                check = verify_fixpts_identity(h, Permutation(gamma), space)
                assert check.lhs == check.rhs
        assert len(seen) == 67


def test_criterion_06_normalizer_facts_and_cycle_table():
    with criterion(6, "normaliser facts (a)-(e) and c^j tau cycle types, n <= 12", 60):
        for n in range(3, 13):
            c = rotation(n)
            rotations = {(c ** j).images for j in range(n)}
            elems = normalizer_of_c(n)
            assert len(elems) == n * sum(1 for d in range(1, n + 1) if math.gcd(d, n) == 1)
            for t in elems:
                p = t.to_permutation()
                assert AffineMap.from_permutation(p) == t                      # (a)
                assert (t.d == 1) == (p.images in rotations)
                nf = affine_normal_form(t)
                assert p.conjugate(nf.conjugator) == nf.canonical.to_permutation()   # (b)
                assert nf.r_prime == t.r % math.gcd(n, t.d - 1)
                g = math.gcd(n, t.d - 1)
                assert len(p.fixed_points()) == (g if t.r % g == 0 else 0)     # (c)
                mu = cycle_type(p)
                big = {x for x in mu if x > 1}
                if mu.count(1) == 2 and len(big) == 1:                           # (d)
                    assert n % 2 == 0 and nf.r_prime == 0
                    assert nf.canonical.to_permutation().fixed_points() == [n // 2, n]
                    if n % 4 == 0:                                               # (e)
                        assert big == {2}
                try:
                    cycle_type_of_cj_tau(t, 0)
                except BadTauShape:
                    continue
                for j in range(n):
                    assert cycle_type_of_cj_tau(t, j) == cycle_type((c ** j) * p)


def test_criterion_07_schroder_formula():
    with criterion(7, "hook-product formula equals C(k,a-k,b-k), coprime a<b<=15", 120):
        count = 0
        for b in range(2, 16):
            for a in range(1, b):
                if math.gcd(a, b) != 1:
                    continue
                for k in range(a + 1):
                    assert rational_q_schroder(a, b, k, check=False) == c_alpha((k, a - k, b - k))
                    count += 1
        assert count == 438


def test_criterion_08_bivariate_series_vs_characters():
    with criterion(8, "hook-product series equals character oracle, a <= 5, q-degree 10", 300):
        for a in range(2, 6):                    # S_1 has no reflection representation
            for lam in partitions(a):
                assert molchanov_series(lam, 10) == graded_multiplicity_oracle(lam, 10)


def test_criterion_09_palindromic_and_parity_unimodal():
    with criterion(9, "palindromic and parity-unimodal: a<b<=25; all compositions n<=14; "
                      "Schroder family a,b<=30", 300):
        for b in range(2, 31):
            for a in range(1, b):
                if math.gcd(a, b) != 1:
                    continue
                for k in range(a + 1):
                    p = rational_q_schroder(a, b, k, check=b <= 25)
                    assert is_palindromic(p), (a, b, k)
                    res = is_parity_unimodal(p)
                    assert res, (a, b, k, res.witness)
        for n in range(1, 15):
            row = _parity_for_n(n)
            assert not row["failures"], row["failures"][:3]


def test_criterion_10_noncrossing_bundle():
    with criterion(10, "noncrossing partitions, n <= 9, four checks", 120):
        count = 0
        for n in range(1, 10):
            for k in range(1, n + 1):
                if math.gcd(n, k) == 1 and math.gcd(n, k - 1) == 1:
                    assert check_nc_secondary(n, k).verdict, (n, k)
                    count += 1
        assert check_nc_secondary(5, 2).y_polynomial == IntPoly([1, 0, 1])
        assert count == 13


def test_criterion_11_fiber_sizes():
    with criterion(11, "fibres of Fix_X(tau) -> Fix_Y(tau) have size 1 or 2, n <= 9", 300):
        pairs = 0
        for n in range(3, 10):
            taus = admissible_shape_taus(n)
            for h in corpus(n):
                if not h.acts_freely_with_rotations():
                    continue
                x = y = None
                for tau in taus:
                    m = tau.order()
                    if n % m not in (1 % m, 2 % m) or not is_c_admissible(tau, h):
                        continue
                    if x is None:
                        x = CosetSpace(h)
                        y = DoubleCosetSpace(x)
                    expected = len(tau.fixed_points())
                    profile = fiber_profile(x, tau, y=y)
                    assert set(profile.values()) <= {expected}, (str(tau), repr(h), profile)
                    pairs += 1
        assert pairs == 2683


def test_acceptance_lines_are_recorded():
    # runs last in file order; every criterion above must have reported
    numbers = {int(line.split()[2].rstrip(":")) for line in ACCEPTANCE_LINES}
    if len(numbers) < 11:
        pytest.skip("acceptance tests were run selectively")
    assert numbers == set(range(1, 12))
