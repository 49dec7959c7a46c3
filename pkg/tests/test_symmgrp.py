from __future__ import annotations

import itertools
import math

import pytest
from hypothesis import given, strategies as st

from cycsieve.errors import BadTauShape, BudgetExceeded
from cycsieve.symmgrp import (
    AffineMap, Permutation, SubgroupSpec, affine_normal_form, centralizer_size, class_size,
    cycle_type, cycle_type_of_cj_tau, cyclic_subgroup, is_c_admissible, normalizer_of_c,
    partitions, permutation_of_type, reflection, rotation, symmetric_group, trivial_subgroup,
    young_subgroup,
)

from oracles import brute_centralizer_size, brute_normalizer, compose, cycle_lengths

S10_TAU = "(1)(2408)(3795)(6)"


def perms(n):
    return st.permutations(list(range(1, n + 1))).map(lambda p: Permutation(tuple(p)))


# -- permutations ------------------------------------------------------------

def test_parse_cycle_notation_variants():
    a = Permutation.from_cycles("(1 2 3 4)(5,6,7,8)(9 10)")
    assert a.n == 10 and a(4) == 1 and a(10) == 9
    assert Permutation.from_cycles("()", n=3).is_identity()
    assert Permutation.from_one_line("[2, 3, 1]") == Permutation.from_cycles("(1 2 3)")


@pytest.mark.parametrize("bad", ["(1 2", "(1 2)(2 3)", "(a b)", "1 2 3", "(1 2)x"])
def test_malformed_cycles_rejected(bad):
    with pytest.raises(ValueError):
        Permutation.from_cycles(bad, n=5)


def test_compact_notation_reads_zero_as_ten():
    tau = Permutation.from_cycles(S10_TAU, n=10, compact=True)
    assert tau.cycles(include_fixed=False) == [(2, 4, 10, 8), (3, 7, 9, 5)]
    assert cycle_type(tau) == (4, 4, 1, 1)


@given(perms(6), perms(6), perms(6))
def test_group_laws(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * a.inverse() == Permutation.identity(6)
    assert tuple((a * b).images) == compose(a.images, b.images)
    assert (a ** a.order()).is_identity()
    assert a ** -1 == a.inverse()


@given(perms(7))
def test_cycle_type_matches_oracle(g):
    assert cycle_type(g) == cycle_lengths(g.images)
    assert sum(cycle_type(g)) == 7


def test_cycle_type_examples():
    assert cycle_type(reflection(7)) == (2, 2, 2, 1)
    assert cycle_type(Permutation.identity(5)) == (1,) * 5


def test_centralizer_examples_and_oracle():
    assert centralizer_size((2, 2, 1)) == 8
    assert centralizer_size((1,) * 6) == 720
    for n in range(1, 8):
        assert centralizer_size((n,)) == n
    for mu in partitions(5):
        assert centralizer_size(mu) == brute_centralizer_size(permutation_of_type(mu).images)


def test_class_equation():
    for n in range(1, 11):
        assert sum(class_size(mu) for mu in partitions(n)) == math.factorial(n)
        for mu in partitions(n):
            assert centralizer_size(mu) * class_size(mu) == math.factorial(n)


# -- the normaliser of C -----------------------------------------------------

def test_normalizer_matches_brute_force():
    for n in range(3, 8):
        ours = {t.to_permutation().images for t in normalizer_of_c(n)}
        assert ours == brute_normalizer(n)
    assert len(normalizer_of_c(7)) == 42


def test_normalizer_requires_n_at_least_3():
    with pytest.raises(ValueError):
        normalizer_of_c(2)


def test_affine_examples():
    assert AffineMap.from_permutation(rotation(9)) == AffineMap(9, 1, 1)
    tau = Permutation.from_cycles(S10_TAU, n=10, compact=True)
    assert AffineMap.from_permutation(tau) == AffineMap(10, 3, 8)
    with pytest.raises(ValueError):
        AffineMap.from_permutation(Permutation.from_cycles("(1 2)", n=5))


def test_normal_form_examples():
    nf = affine_normal_form(AffineMap(10, 3, 8))
    assert nf.r_prime == 0 and nf.fix_count == 2 and nf.fixpoints == (1, 6)
    assert nf.canonical.to_permutation().fixed_points() == [5, 10]
    nf7 = affine_normal_form(AffineMap(7, 3, 0))
    assert nf7.fixpoints == (7,)
    assert cycle_type(AffineMap(7, 3, 0).to_permutation()) == (6, 1)
    assert affine_normal_form(AffineMap(8, 1, 0)).fix_count == 8


@pytest.mark.parametrize("n", range(3, 13))
def test_number_theory_facts(n):
    c = rotation(n)
    for t in normalizer_of_c(n):
        p = t.to_permutation()
        # (a) conversions are inverse, d = 1 exactly on C
        assert AffineMap.from_permutation(p) == t
        assert t.in_rotation_group() == any(p == c ** j for j in range(n))
        # (b) the constructed conjugator reaches the normal form
        nf = affine_normal_form(t)
        assert p.conjugate(nf.conjugator) == nf.canonical.to_permutation()
        assert nf.r_prime == t.r % math.gcd(n, t.d - 1)
        # (c) fixed-point count
        assert len(p.fixed_points()) == nf.fix_count
        mu = cycle_type(p)
        big = [x for x in mu if x > 1]
        if mu.count(1) == 2 and big and len(set(big)) == 1:
            # (d) and (e)
            assert n % 2 == 0 and nf.r_prime == 0
            assert nf.canonical.to_permutation().fixed_points() == [n // 2, n]
            if n % 4 == 0:
                assert big[0] == 2


@pytest.mark.parametrize("n", range(4, 13, 2))
def test_cj_tau_table_matches_composition(n):
    c = rotation(n)
    for t in normalizer_of_c(n):
        p = t.to_permutation()
        try:
            shape = cycle_type_of_cj_tau(t, 0)
        except BadTauShape:
            continue
        assert shape == cycle_type(p)
        for j in range(2 * n):
            assert cycle_type_of_cj_tau(t, j) == cycle_type((c ** j) * p)


def test_cj_tau_three_x_minus_two_example():
    t = AffineMap(10, 3, -2)
    assert cycle_type_of_cj_tau(t, 1) == (4, 4, 2)
    assert len(set(cycle_type_of_cj_tau(AffineMap(8, 7, 0), 1))) == 1


# -- subgroups ---------------------------------------------------------------

def test_subgroup_orders():
    assert symmetric_group(5).order == 120
    assert young_subgroup((3, 4)).order == 144
    assert cyclic_subgroup(Permutation.from_cycles("(1 2 3 4)(5 6 7 8)(9 10)")).order == 4
    assert trivial_subgroup(6).order == 1


@given(st.lists(perms(6), min_size=1, max_size=2))
def test_closure_is_a_group(gens):
    h = SubgroupSpec(6, gens)
    elems = set(h.element_tuples)
    assert tuple(range(1, 7)) in elems
    assert 720 % len(elems) == 0
    for a, b in itertools.islice(itertools.product(elems, repeat=2), 2000):
        assert compose(a, b) in elems


def test_element_budget():
    with pytest.raises(BudgetExceeded):
        SubgroupSpec(8, [rotation(8), Permutation.from_cycles("(1 2)", n=8)], budget=100).order


def test_admissibility_examples():
    assert is_c_admissible(reflection(7), young_subgroup((3, 4)))
    tau = Permutation.from_cycles(S10_TAU, n=10, compact=True)
    h = cyclic_subgroup(Permutation.from_cycles("(1 2 3 4)(5 6 7 8)(9 10)"))
    verdict = is_c_admissible(tau, h)
    assert not verdict
    labels = {(label, mu) for label, mu, _ in verdict.violations}
    assert ("m^k,2", (4, 4, 2)) in labels
    witness = verdict.violations[0][2]
    assert cycle_type(witness) == (4, 4, 2) and witness in h
    for n in (7, 8, 10):
        for t in normalizer_of_c(n):
            p = t.to_permutation()
            try:
                assert is_c_admissible(p, trivial_subgroup(n))
            except BadTauShape:
                pass


def test_bad_tau_shape():
    with pytest.raises(BadTauShape):
        is_c_admissible(rotation(6), trivial_subgroup(6))
