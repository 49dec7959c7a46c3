from __future__ import annotations

import math
from fractions import Fraction

import pytest

from cycsieve.corpus import corpus
from cycsieve.errors import NonFreeAction, NonPolynomialQuotient
from cycsieve.molien import (
    coset_poly_X, lemma_fix_oracle, molien_series, space_fix_oracle, y_poly, y_zeta_prediction,
)
from cycsieve.orbits import CosetSpace, WordSpace
from cycsieve.qpoly import IntPoly, eval_at_root_of_unity, q_int, q_multinomial
from cycsieve.symmgrp import (
    Permutation, SubgroupSpec, cyclic_subgroup, partitions, rotation,
    symmetric_group, trivial_subgroup, young_subgroup,
)

from oracles import group_closure, monomial_invariant_dims

SMALL_GROUPS = [
    (3, ["(1 2 3)"]),
    (4, ["(1 2)(3 4)", "(1 3)(2 4)"]),
    (4, ["(1 2 3 4)"]),
    (4, ["(1 2)"]),
    (5, ["(1 2 3 4 5)", "(2 5)(3 4)"]),
    (5, ["(1 2)(3 4 5)"]),
    (6, ["(1 2 3)(4 5 6)"]),
]


@pytest.mark.parametrize("n,gens", SMALL_GROUPS)
def test_molien_matches_invariant_monomial_count(n, gens):
    perms = [Permutation.from_cycles(g, n=n) for g in gens]
    h = SubgroupSpec(n, perms)
    group = group_closure([p.images for p in perms], n)
    assert molien_series(h).coefficients(5) == monomial_invariant_dims(group, n, 5)


def test_molien_of_trivial_group_counts_all_monomials():
    # 1/(1-q)^3: binomial(d+2, 2)
    assert molien_series(trivial_subgroup(3)).coefficients(5) == [1, 3, 6, 10, 15, 21]


def test_molien_value_is_a_fraction_of_polynomials():
    s = molien_series(symmetric_group(3))
    assert s.value.series(6) == [Fraction(x) for x in [1, 1, 2, 3, 4, 5, 7]]


def test_x_examples():
    assert coset_poly_X(cyclic_subgroup(Permutation.from_cycles("(1 2 3)"))) == IntPoly([1, 0, 0, 1])
    assert coset_poly_X(symmetric_group(5)) == IntPoly([1])
    for n in range(1, 6):
        assert coset_poly_X(trivial_subgroup(n))(1) == [1, 1, 2, 6, 24, 120][n]


def test_x_of_young_subgroup_is_q_multinomial():
    for n in range(1, 11):
        for mu in partitions(n):
            if math.prod(math.factorial(a) for a in mu) > 50_000:
                continue                        # keep the subgroup closure small
            assert coset_poly_X(young_subgroup(mu)) == q_multinomial(mu)


def test_x_at_one_is_index():
    for h in corpus(6, include_random=True):
        assert coset_poly_X(h)(1) * h.order == 720


def test_y_examples():
    assert y_poly(young_subgroup((3, 4))) == IntPoly([1, 0, 1, 1, 1, 0, 1])
    assert y_poly(trivial_subgroup(3)) == IntPoly([1, 1])
    with pytest.raises(NonPolynomialQuotient):
        y_poly(young_subgroup((2, 2)))


@pytest.mark.parametrize("n", range(3, 8))
def test_x_sieves_rotations(n):
    # X(zeta_n^b) counts cosets fixed by c^b
    for h in corpus(n, include_random=False):
        x = coset_poly_X(h)
        space = CosetSpace(h)
        for b in range(n):
            assert eval_at_root_of_unity(x, n, b).to_int() == space.fix_count(rotation(n) ** b)


@pytest.mark.parametrize("n", range(3, 9))
def test_prediction_matches_evaluation(n):
    for h in corpus(n, include_random=False):
        if not h.acts_freely_with_rotations():
            with pytest.raises(NonFreeAction):
                y_zeta_prediction(h, 2)
            continue
        y = y_poly(h)
        for m in range(2, n + 2):
            assert y_zeta_prediction(h, m) == eval_at_root_of_unity(y, m, 1)


def test_prediction_with_enumerated_fixed_points():
    for alpha in [(3, 4), (2, 5), (1, 2, 4), (3, 5)]:
        h = young_subgroup(alpha)
        oracle = space_fix_oracle(WordSpace(alpha))
        y = y_poly(h)
        for m in range(2, sum(alpha) + 2):
            assert y_zeta_prediction(h, m, oracle) == eval_at_root_of_unity(y, m, 1)


def test_lemma_oracle_matches_space():
    h = young_subgroup((2, 3))
    lemma, direct = lemma_fix_oracle(h), space_fix_oracle(CosetSpace(h))
    for mu in partitions(5):
        assert lemma(mu) == direct(mu)


def test_stembridge_example_value():
    y = y_poly(young_subgroup((3, 5)))
    assert y_zeta_prediction(young_subgroup((3, 5)), 2).to_int() == y(-1) == 3


def test_y_times_q_int_is_x():
    for h in corpus(7, include_random=True):
        if h.acts_freely_with_rotations():
            assert y_poly(h) * q_int(7) == coset_poly_X(h)
