"""
A fixed family of subgroups H <= S_n used by the sweeps.

Fixed-point counts on S_n / H and the polynomial Y(q) only depend on H up to
conjugacy, so one cyclic subgroup per cycle type already covers every cyclic H.
Beyond the cyclic and Young subgroups the corpus holds a few hand-picked groups
and a seeded batch of random two-generator subgroups of small order.
"""
from __future__ import annotations

import math
import random
from typing import Iterator

from .errors import BudgetExceeded
from .symmgrp import (
    Permutation, SubgroupSpec, cyclic_subgroup, normalizer_of_c, partitions, permutation_of_type,
    reflection, rotation, young_subgroup,
)

__all__ = [
    "CORPUS_SEED", "cyclic_corpus", "young_corpus", "hand_picked", "random_corpus", "corpus",
    "counterexample_pair", "admissible_shape_taus",
]

CORPUS_SEED = 20240611
_RANDOM_PER_DEGREE = 6
_RANDOM_MAX_ORDER = 72


def cyclic_corpus(n: int) -> Iterator[SubgroupSpec]:
    """<g_mu> for each cycle type mu of S_n (mu = 1^n gives the trivial group)."""
    for mu in partitions(n):
        g = permutation_of_type(mu)
        yield cyclic_subgroup(g, name="<" + ",".join(map(str, mu)) + ">")


def young_corpus(n: int) -> Iterator[SubgroupSpec]:
    for mu in partitions(n):
        if len(mu) > 1:
            yield young_subgroup(mu)


def _on_first(n: int, cycles, name: str) -> SubgroupSpec:
    gens = [Permutation.from_cycles(c, n) for c in cycles]
    return SubgroupSpec(n, gens, name=name)


def hand_picked(n: int) -> list[SubgroupSpec]:
    """Klein four, alternating and dihedral groups on initial segments, and degree-specific extras."""
    out = []
    if n >= 4:
        out.append(_on_first(n, [[(1, 2), (3, 4)], [(1, 3), (2, 4)]], "V4"))
        out.append(_on_first(n, [[(1, 2, 3)], [(2, 3, 4)]], "A4"))
    if n >= 5:
        out.append(_on_first(n, [[(1, 2, 3, 4, 5)], [(2, 5), (3, 4)]], "D5"))
        out.append(_on_first(n, [[(1, 2, 3)], [(3, 4, 5)]], "A5"))
    if n >= 6:
        out.append(_on_first(n, [[(1, 2, 3, 4)], [(1, 3)], [(5, 6)]], "D4xS2"))
    if n >= 3:
        # the dihedral group generated by the rotation c and tau_0 itself
        out.append(SubgroupSpec(n, [rotation(n), reflection(n)], name="<c,tau0>"))
    if n == 10:
        out.append(counterexample_pair()[1])
    return out


def random_corpus(n: int, count: int = _RANDOM_PER_DEGREE, max_order: int = _RANDOM_MAX_ORDER,
                  seed: int = CORPUS_SEED) -> list[SubgroupSpec]:
    """
    Seeded subgroups of order at most ``max_order``, each generated by two random
    conjugates of permutations whose order is at most 6.
    """
    rng = random.Random(seed * 100 + n)
    small = [mu for mu in partitions(n) if 1 < math.lcm(*mu) <= 6]
    out, seen, attempts = [], set(), 0
    while small and len(out) < count and attempts < 2000:
        attempts += 1
        gens = []
        for _ in range(2):
            base = permutation_of_type(rng.choice(small))
            images = list(range(1, n + 1))
            rng.shuffle(images)
            gens.append(base.conjugate(Permutation(tuple(images))))
        h = SubgroupSpec(n, gens, name=f"rand{n}.{attempts}", budget=max_order)
        try:
            key = h.element_tuples
        except BudgetExceeded:
            continue
        if key not in seen:
            seen.add(key)
            out.append(h)
    return out


def corpus(n: int, include_random: bool = True) -> list[SubgroupSpec]:
    """Every corpus subgroup of S_n, in a fixed order."""
    groups = list(cyclic_corpus(n)) + list(young_corpus(n)) + hand_picked(n)
    if include_random:
        groups += random_corpus(n)
    return groups


def counterexample_pair() -> tuple[Permutation, SubgroupSpec]:
    """tau of type (4,4,1,1) in N(C) <= S_10 and H = <(1234)(5678)(9 10)>, where sieving fails."""
    tau = Permutation.from_cycles("(1)(2408)(3795)(6)", n=10, compact=True)
    g = Permutation.from_cycles([(1, 2, 3, 4), (5, 6, 7, 8), (9, 10)], 10)
    return tau, cyclic_subgroup(g, name="<(1234)(5678)(9 10)>")


def admissible_shape_taus(n: int) -> list[Permutation]:
    """Elements of N(C) <= S_n with cycle type (m^k, 1) or (m^k, 1, 1), m >= 2."""
    out = []
    for t in normalizer_of_c(n):
        p = t.to_permutation()
        fixed = len(p.fixed_points())
        if fixed not in (1, 2) or p.is_identity():
            continue
        lengths = {len(c) for c in p.cycles(include_fixed=False)}
        if len(lengths) == 1:
            out.append(p)
    return sorted(out)
