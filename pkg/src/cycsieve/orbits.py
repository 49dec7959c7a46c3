"""
Finite S_n-sets and their orbit structure.

Two concrete S_n-sets share one interface (``size``, ``action``, ``fix_count``):

* :class:`WordSpace` -- words of a fixed content alpha, which as an S_n-set is
  S_n / (S_alpha_1 x ... x S_alpha_r);
* :class:`CosetSpace` -- S_n / H for a generator-defined H.

Elements are rows of a numpy array sorted by an integer key that is monotone in
lexicographic order, so the permutation induced by any sigma is one vectorised
gather plus a ``searchsorted``.  :class:`DoubleCosetSpace` layers the C-orbits
(necklaces, or double cosets C g H) on top of either.
"""
from __future__ import annotations

import dataclasses
import functools
import itertools
import json
import math
from fractions import Fraction
from typing import Sequence

import numpy as np

from .errors import AdmissibilityViolation, BudgetExceeded, NonFreeAction
from .symmgrp import (
    Permutation, SubgroupSpec, is_c_admissible, reflection, rotation,
    young_subgroup,
)

__all__ = [
    "DEFAULT_SPACE_BUDGET", "WordSpace", "CosetSpace", "DoubleCosetSpace", "NecklaceRep",
    "BraceletCounts", "FixptsCheck", "enumerate_necklaces", "necklace_space", "bracelet_orbits",
    "coset_space", "double_cosets", "fix_count", "verify_fixpts_identity", "fiber_profile",
    "necklaces_to_json", "normalize_composition",
]

DEFAULT_SPACE_BUDGET = 2 * 10 ** 6
_MAX_DEGREE = 15          # n^n must fit in int64 keys
_CHUNK = 1 << 21          # candidate rows materialised at once


def normalize_composition(alpha: Sequence[int]) -> tuple[int, ...]:
    """Drop zero parts; reject negative ones."""
    if any(a < 0 for a in alpha):
        raise ValueError(f"negative part in {tuple(alpha)}")
    return tuple(a for a in alpha if a > 0)


class _IndexedSpace:
    """Shared machinery: rows sorted by key, cached induced permutations."""

    n: int
    rows: np.ndarray
    keys: np.ndarray

    def __init__(self):
        self._actions: dict[tuple[int, ...], np.ndarray] = {}

    @property
    def size(self) -> int:
        return len(self.keys)

    def __len__(self) -> int:
        return self.size

    def _move(self, sigma: Permutation) -> np.ndarray:
        raise NotImplementedError

    def action(self, sigma: Permutation) -> np.ndarray:
        """Index array ``a`` with element ``i`` sent to element ``a[i]`` by ``sigma``."""
        if sigma.n != self.n:
            raise ValueError("degree mismatch")
        cached = self._actions.get(sigma.images)
        if cached is None:
            new_keys = self._move(sigma)
            cached = np.searchsorted(self.keys, new_keys)
            self._actions[sigma.images] = cached
        return cached

    def fix_count(self, sigma: Permutation) -> int:
        return int(np.count_nonzero(self.action(sigma) == np.arange(self.size)))

    def index_of_key(self, key: int) -> int:
        i = int(np.searchsorted(self.keys, key))
        if i >= self.size or self.keys[i] != key:
            raise KeyError(key)
        return i

    def summary(self) -> dict:
        return {"kind": type(self).__name__, "n": self.n, "size": self.size}


def _powers(base: int, n: int) -> np.ndarray:
    return np.array([base ** (n - 1 - i) for i in range(n)], dtype=np.int64)


def _multiset_words(alpha: Sequence[int]) -> np.ndarray:
    """All words with alpha[c] letters equal to c, as a (N, n) int8 array in lex order."""
    n = sum(alpha)
    out: list[tuple[int, ...]] = []
    counts = list(alpha)
    word = [0] * n

    def rec(pos: int) -> None:
        if pos == n:
            out.append(tuple(word))
            return
        for c, left in enumerate(counts):
            if left:
                counts[c] -= 1
                word[pos] = c
                rec(pos + 1)
                counts[c] += 1

    rec(0)
    return np.array(out, dtype=np.int8).reshape(len(out), n)


class WordSpace(_IndexedSpace):
    """
    Words of content ``alpha`` with S_n permuting positions.

    The letter in position i moves to position sigma(i).  Letters are 0-based internally;
    user-facing strings use 1-based colours.
    """

    def __init__(self, alpha: Sequence[int], budget: int = DEFAULT_SPACE_BUDGET):
        super().__init__()
        alpha = normalize_composition(alpha)
        if not alpha:
            raise ValueError("empty composition")
        self.alpha = alpha
        self.n = sum(alpha)
        count = math.factorial(self.n)
        for a in alpha:
            count //= math.factorial(a)
        if count > budget:
            raise BudgetExceeded(f"{count} words exceed the space budget {budget}")
        self.rows = _multiset_words(alpha)
        self._pow = _powers(max(len(alpha), 2), self.n)
        self.keys = self.rows.astype(np.int64) @ self._pow

    @functools.cached_property
    def subgroup(self) -> SubgroupSpec:
        return young_subgroup(self.alpha)

    def _move(self, sigma: Permutation) -> np.ndarray:
        inv = np.array(sigma.inverse().images, dtype=np.intp) - 1
        return self.rows[:, inv].astype(np.int64) @ self._pow

    def word(self, i: int) -> tuple[int, ...]:
        return tuple(int(x) + 1 for x in self.rows[i])

    def summary(self) -> dict:
        return {**super().summary(), "alpha": list(self.alpha)}


class CosetSpace(_IndexedSpace):
    """
    Left cosets g H, each represented by its lexicographically least element in
    one-line notation.  S_n acts by left multiplication.
    """

    def __init__(self, h: SubgroupSpec, budget: int = DEFAULT_SPACE_BUDGET):
        super().__init__()
        n = h.n
        if n > _MAX_DEGREE:
            raise BudgetExceeded(f"degree {n} exceeds the coset-space limit {_MAX_DEGREE}")
        index = math.factorial(n) // h.order
        if index > budget:
            raise BudgetExceeded(f"{index} cosets exceed the space budget {budget}")
        self.n = n
        self.subgroup = h
        self._h0 = np.array(h.element_tuples, dtype=np.intp) - 1
        self._pow = _powers(max(n, 2), n)
        self.rows, self.keys = self._enumerate(index)

    def _canon(self, rows: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        """Least element of each coset rows[i] H, with its key."""
        hsize = len(self._h0)
        step = max(1, _CHUNK // hsize)
        out_rows, out_keys = [], []
        for s in range(0, len(rows), step):
            block = rows[s:s + step]
            cand = block[:, self._h0]                       # (B, |H|, n): g o h
            ckeys = cand.astype(np.int64) @ self._pow
            best = np.argmin(ckeys, axis=1)
            sel = np.arange(len(block))
            out_rows.append(cand[sel, best])
            out_keys.append(ckeys[sel, best])
        if not out_rows:
            return rows, np.zeros(0, dtype=np.int64)
        return np.concatenate(out_rows), np.concatenate(out_keys)

    def _enumerate(self, index: int) -> tuple[np.ndarray, np.ndarray]:
        n = self.n
        gens = [np.array(rotation(n).images, dtype=np.int8) - 1]
        if n >= 2:
            gens.append(np.array(Permutation.from_cycles([(1, 2)], n).images, dtype=np.int8) - 1)
        start_rows, start_keys = self._canon(np.arange(n, dtype=np.int8).reshape(1, n))
        seen = start_keys.copy()
        all_rows, all_keys = [start_rows], [start_keys]
        frontier = start_rows
        while len(frontier):
            cand = np.concatenate([g[frontier] for g in gens])
            crows, ckeys = self._canon(cand)
            ckeys, first = np.unique(ckeys, return_index=True)
            crows = crows[first]
            pos = np.searchsorted(seen, ckeys)
            pos_c = np.minimum(pos, len(seen) - 1)
            fresh = seen[pos_c] != ckeys
            frontier = crows[fresh]
            if len(frontier):
                all_rows.append(frontier)
                all_keys.append(ckeys[fresh])
                seen = np.union1d(seen, ckeys[fresh])
        rows = np.concatenate(all_rows)
        keys = np.concatenate(all_keys)
        order = np.argsort(keys)
        if len(keys) != index:
            raise AssertionError(f"enumerated {len(keys)} cosets, expected {index}")
        return rows[order], keys[order]

    def _move(self, sigma: Permutation) -> np.ndarray:
        s0 = np.array(sigma.images, dtype=np.int8) - 1
        _, keys = self._canon(s0[self.rows])
        return keys

    def representative(self, i: int) -> Permutation:
        return Permutation(tuple(int(x) + 1 for x in self.rows[i]))

    def same_coset(self, g: Permutation, g2: Permutation) -> bool:
        return (g.inverse() * g2) in self.subgroup

    def summary(self) -> dict:
        return {**super().summary(), "subgroup": repr(self.subgroup), "subgroup_order": self.subgroup.order}


def coset_space(h: SubgroupSpec, budget: int = DEFAULT_SPACE_BUDGET) -> CosetSpace:
    return CosetSpace(h, budget)


class DoubleCosetSpace:
    """
    The C-orbits of an S_n-set, with normaliser elements acting on orbits by
    tau . C x = C (tau x).

    ``class_of[i]`` is the orbit index of element ``i``; ``class_reps[j]`` is the least
    element of orbit ``j``.
    """

    def __init__(self, base: _IndexedSpace, tau: Permutation | None = None):
        self.base = base
        self.n = base.n
        c_act = base.action(rotation(self.n))
        labels = np.arange(base.size)
        cur = labels
        for _ in range(self.n - 1):
            cur = c_act[cur]
            labels = np.minimum(labels, cur)
        self.class_reps, self.class_of = np.unique(labels, return_inverse=True)
        self.class_of = self.class_of.reshape(-1)
        self.class_sizes = np.bincount(self.class_of)
        self.tau = tau
        self._class_actions: dict[tuple[int, ...], np.ndarray] = {}
        if tau is not None:
            self.tau_action = self.class_action(tau)

    @property
    def size(self) -> int:
        return len(self.class_reps)

    def __len__(self) -> int:
        return self.size

    def is_free(self) -> bool:
        return bool(np.all(self.class_sizes == self.n))

    def class_action(self, tau: Permutation) -> np.ndarray:
        """Permutation of orbit indices induced by a normaliser element."""
        cached = self._class_actions.get(tau.images)
        if cached is None:
            act = self.base.action(tau)
            cached = self.class_of[act[self.class_reps]]
            if not np.array_equal(self.class_of[act], cached[self.class_of]):
                raise ValueError(f"{tau} does not normalise the rotation group")
            self._class_actions[tau.images] = cached
        return cached

    def fix_count(self, tau: Permutation) -> int:
        return int(np.count_nonzero(self.class_action(tau) == np.arange(self.size)))

    def summary(self) -> dict:
        return {
            "base": self.base.summary(),
            "classes": self.size,
            "free": self.is_free(),
        }


def double_cosets(space: _IndexedSpace, tau: Permutation | None = None) -> DoubleCosetSpace:
    return DoubleCosetSpace(space, tau)


def fix_count(space, g: Permutation) -> int:
    """Number of elements of ``space`` fixed by ``g``."""
    return space.fix_count(g)


# --------------------------------------------------------------------------
# necklaces and bracelets
# --------------------------------------------------------------------------

@dataclasses.dataclass(frozen=True)
class NecklaceRep:
    canonical: tuple[int, ...]
    orbit_size: int

    @property
    def word(self) -> str:
        sep = "" if max(self.canonical) < 10 else ","
        return sep.join(map(str, self.canonical))


def necklace_space(alpha: Sequence[int], budget: int = DEFAULT_SPACE_BUDGET) -> DoubleCosetSpace:
    words = WordSpace(alpha, budget)
    return DoubleCosetSpace(words, reflection(words.n) if words.n >= 3 else None)


def enumerate_necklaces(alpha: Sequence[int], budget: int = DEFAULT_SPACE_BUDGET) -> list[NecklaceRep]:
    """
    One representative (the least rotation) per necklace of content alpha.

    >>> [nk.word for nk in enumerate_necklaces((2, 2))]
    ['1122', '1212']
    """
    space = DoubleCosetSpace(WordSpace(alpha, budget))
    words = space.base
    return [NecklaceRep(words.word(int(r)), int(s)) for r, s in zip(space.class_reps, space.class_sizes)]


def necklaces_to_json(alpha: Sequence[int]) -> str:
    reps = enumerate_necklaces(alpha)
    return json.dumps({
        "alpha": list(normalize_composition(alpha)),
        "necklaces": [{"word": r.word, "orbit_size": r.orbit_size} for r in reps],
    })


@dataclasses.dataclass(frozen=True)
class BraceletCounts:
    total: int
    asymmetric: int
    symmetric_necklaces: int


def bracelet_orbits(alpha: Sequence[int]) -> BraceletCounts:
    """
    Orbits of the reflection tau_0 on necklaces of content alpha.

    >>> bracelet_orbits((3, 4))
    BraceletCounts(total=4, asymmetric=1, symmetric_necklaces=3)
    """
    alpha = normalize_composition(alpha)
    if math.gcd(*alpha) != 1:
        raise NonFreeAction(f"gcd{alpha} != 1: rotation does not act freely on words")
    n = sum(alpha)
    if n < 3:
        # a single necklace, fixed by any reflection
        return BraceletCounts(1, 0, 1)
    space = necklace_space(alpha)
    perm = space.tau_action
    fixed = int(np.count_nonzero(perm == np.arange(space.size)))
    asym = (space.size - fixed) // 2
    return BraceletCounts(fixed + asym, asym, fixed)


# --------------------------------------------------------------------------
# fixed points on G/H and the quotient map X -> Y
# --------------------------------------------------------------------------

@dataclasses.dataclass(frozen=True)
class FixptsCheck:
    lhs: int
    rhs: Fraction
    centralizer: int
    conj_in_h: int

    def __bool__(self) -> bool:
        return self.lhs == self.rhs


@functools.lru_cache(maxsize=4096)
def _brute_centralizer_and_class(images: tuple[int, ...]) -> tuple[int, frozenset]:
    gamma = Permutation(images)
    n = gamma.n
    z = 0
    conj = set()
    for t in itertools.permutations(range(1, n + 1)):
        g = Permutation(t)
        x = g * gamma * g.inverse()
        conj.add(x.images)
        if x == gamma:
            z += 1
    return z, frozenset(conj)


def verify_fixpts_identity(h: SubgroupSpec, gamma: Permutation, space: CosetSpace | None = None,
                           max_degree: int = 8) -> FixptsCheck:
    """
    Compare |Fix_{S_n/H}(gamma)| with |Z(gamma)| |Conj(gamma) & H| / |H|, every term
    counted by enumeration (the conjugacy class and centraliser by running over S_n).
    """
    if h.n > max_degree:
        raise BudgetExceeded(f"brute-force conjugacy enumeration limited to n <= {max_degree}")
    if space is None:
        space = CosetSpace(h)
    lhs = space.fix_count(gamma)
    z, conj = _brute_centralizer_and_class(gamma.images)
    hits = sum(1 for t in h.element_tuples if t in conj)
    return FixptsCheck(lhs, Fraction(z * hits, h.order), z, hits)


def fiber_profile(x: _IndexedSpace, tau: Permutation, m: int | None = None,
                  y: DoubleCosetSpace | None = None) -> dict[int, int]:
    """
    Sizes of the fibres of Fix_X(tau) -> Fix_Y(tau), keyed by orbit index in Y.

    Requires (tau, H) to be C-admissible and n = 1 or 2 mod the order m of tau.  Every
    tau-fixed orbit appears as a key (surjectivity is checked, not assumed).
    """
    order = tau.order()
    if m is None:
        m = order
    if m != order:
        raise ValueError(f"m={m} differs from the order {order} of tau")
    n = x.n
    if n % m not in (1 % m, 2 % m):
        raise AdmissibilityViolation(f"n={n} is not 1 or 2 mod m={m}")
    verdict = is_c_admissible(tau, x.subgroup)
    if not verdict:
        raise AdmissibilityViolation(f"({tau}, H) is not C-admissible: {verdict.violations}")
    if y is None:
        y = DoubleCosetSpace(x)
    act = x.action(tau)
    fixed_x = np.flatnonzero(act == np.arange(x.size))
    counts = np.bincount(y.class_of[fixed_x], minlength=y.size)
    fixed_y = np.flatnonzero(y.class_action(tau) == np.arange(y.size))
    profile = {int(j): int(counts[j]) for j in fixed_y}
    stray = set(np.flatnonzero(counts).tolist()) - set(profile)
    if stray:
        raise AssertionError(f"fixed cosets map to non-fixed orbits {sorted(stray)[:5]}")
    return profile
