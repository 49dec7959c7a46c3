"""
Cyclic sieving checks.

A triple (X, X(q), <g>) with g of order dividing m exhibits the cyclic sieving
phenomenon when |Fix_X(g^b)| = X(zeta^b) for every b, zeta a primitive m-th root of
unity.  :func:`check_csp` compares the two sides for each b using exact cyclotomic
evaluation; the other checkers build the set, the polynomial and the group action for
specific families and pass them through it.
"""
from __future__ import annotations

import dataclasses
import math
from fractions import Fraction
from typing import Callable, Iterator, Sequence

import numpy as np

from .errors import NonFreeAction
from .molien import y_poly
from .orbits import (
    CosetSpace, DoubleCosetSpace, WordSpace, bracelet_orbits, necklace_space, normalize_composition,
)
from .qpoly import (
    CyclotomicInt, IntPoly, c_alpha, eval_at_root_of_unity, exact_div_by_q_int, q_binomial,
)
from .symmgrp import (
    Permutation, SubgroupSpec, _as_partition, is_c_admissible, rotation, tau_shape,
)

__all__ = [
    "CSPRow", "CSPReport", "check_csp", "check_bracelet_csp", "TechnicalConditions",
    "technical_conditions", "check_technical_csp", "prime_corollary_applies",
    "NoncrossingPartition", "noncrossing_partitions", "nc_polynomial", "NCBundle",
    "check_nc_secondary",
]


@dataclasses.dataclass(frozen=True)
class CSPRow:
    b: int
    fix: int
    value: CyclotomicInt

    @property
    def integer_value(self) -> int | None:
        return self.value.to_int()

    @property
    def ok(self) -> bool:
        return self.integer_value == self.fix

    def to_json(self) -> dict:
        return {"b": self.b, "fix": self.fix, "eval": self.value.to_json(),
                "integer_eval": self.integer_value}


@dataclasses.dataclass
class CSPReport:
    """Per-power comparison of fixed-point counts with polynomial values at roots of unity."""
    m: int
    polynomial: IntPoly
    rows: list[CSPRow]
    conditions: dict = dataclasses.field(default_factory=dict)

    @property
    def verdict(self) -> bool:
        return all(row.ok for row in self.rows)

    @property
    def witnesses(self) -> list[CSPRow]:
        return [row for row in self.rows if not row.ok]

    def __bool__(self) -> bool:
        return self.verdict

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "polynomial": str(self.polynomial),
            "rows": [row.to_json() for row in self.rows],
            "verdict": self.verdict,
            "witnesses": [row.to_json() for row in self.witnesses],
            "conditions": self.conditions,
        }


def check_csp(fix_oracle: Callable[[int], int], m: int, p: IntPoly) -> CSPReport:
    """
    ``fix_oracle(b)`` is |Fix(g^b)|; ``m`` is a multiple of the order of g.

    >>> from cycsieve.qpoly import q_binomial
    >>> from cycsieve.orbits import WordSpace
    >>> from cycsieve.symmgrp import rotation
    >>> words = WordSpace((3, 4))
    >>> check_csp(lambda b: words.fix_count(rotation(7, b)), 7, q_binomial(7, 3)).verdict
    True
    """
    if m < 1:
        raise ValueError("m must be positive")
    rows = [CSPRow(b, int(fix_oracle(b)), eval_at_root_of_unity(p, m, b)) for b in range(m)]
    return CSPReport(m, p, rows)


# --------------------------------------------------------------------------
# bracelets
# --------------------------------------------------------------------------

def check_bracelet_csp(alpha: Sequence[int]) -> CSPReport:
    """
    The q = -1 phenomenon for alpha-necklaces under the reflection tau_0, plus the two
    averaging identities: (C(1) + C(-1))/2 counts bracelets and (C(1) - C(-1))/2 counts
    asymmetric ones.

    >>> check_bracelet_csp((3, 4)).conditions["bracelets"]
    {'total': 4, 'asymmetric': 1, 'from_polynomial': [4, 1], 'identities_hold': True}
    """
    alpha = normalize_composition(alpha)
    counts = bracelet_orbits(alpha)                # raises NonFreeAction when gcd > 1
    poly = c_alpha(alpha)
    at_one, at_minus_one = poly(1), poly(-1)
    total, asym = (at_one + at_minus_one) // 2, (at_one - at_minus_one) // 2
    if sum(alpha) >= 3:
        space = necklace_space(alpha)
        fixed = space.fix_count(space.tau)
        report = check_csp(lambda b: space.size if b == 0 else fixed, 2, poly)
    else:
        report = check_csp(lambda b: 1, 2, poly)
    report.conditions["bracelets"] = {
        "total": counts.total,
        "asymmetric": counts.asymmetric,
        "from_polynomial": [total, asym],
        "identities_hold": (total, asym) == (counts.total, counts.asymmetric),
    }
    return report


# --------------------------------------------------------------------------
# normaliser elements acting on C \ S_n / H
# --------------------------------------------------------------------------

def _proper_divisors_above_one(m: int) -> list[int]:
    return [d for d in range(2, m + 1) if m % d == 0]


def _valid(mu: Sequence[int], n: int) -> bool:
    return all(p > 0 for p in mu) and sum(mu) == n


@dataclasses.dataclass(frozen=True)
class TechnicalConditions:
    """
    ``holds``: H avoids every listed cycle type.  ``admissible_powers`` and ``avoids_4_2``
    give the reformulation through C-admissibility of tau^b, and ``equivalent`` records
    whether the two agree.
    """
    m: int
    holds: bool
    violations: tuple[tuple[str, tuple[int, ...]], ...]
    admissible_powers: bool
    avoids_4_2: bool

    @property
    def equivalent(self) -> bool:
        return self.holds == (self.admissible_powers and self.avoids_4_2)

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "holds": self.holds,
            "violations": [{"condition": label, "cycle_type": list(mu)} for label, mu in self.violations],
            "admissible_powers": self.admissible_powers,
            "avoids_4_2": self.avoids_4_2,
            "equivalent": self.equivalent,
        }


def technical_conditions(tau: Permutation, h: SubgroupSpec) -> TechnicalConditions:
    """
    Cycle types H must avoid for (C \\ S_n / H, Y(q), <tau>) to be guaranteed a CSP,
    where tau in N(C) has type (m^k, 1) or (m^k, 1, 1):

    * (l^(n/l)) for each divisor l > 1 of n;
    * (4, 2^((n-4)/2)) when m is even;
    * (l^((n-2)/l), 2) for each divisor l > 1 of m;
    * ((2l)^((n-2)/(2l)), 2) for each divisor l > 1 of m, when m is odd.
    """
    m, _, _ = tau_shape(tau)
    n = tau.n
    forbidden: list[tuple[str, tuple[int, ...]]] = []
    for ell in range(2, n + 1):
        if n % ell == 0:
            forbidden.append(("free", (ell,) * (n // ell)))
    four_two = _as_partition([4] + [2] * ((n - 4) // 2)) if n >= 4 and n % 2 == 0 else None
    if m % 2 == 0 and four_two:
        forbidden.append(("4,2^((n-4)/2)", four_two))
    for ell in _proper_divisors_above_one(m):
        if (n - 2) % ell == 0 and n >= 2:
            forbidden.append(("l^((n-2)/l),2", _as_partition([ell] * ((n - 2) // ell) + [2])))
        if m % 2 == 1 and (n - 2) % (2 * ell) == 0:
            forbidden.append(("(2l)^((n-2)/(2l)),2", _as_partition([2 * ell] * ((n - 2) // (2 * ell)) + [2])))
    violations = []
    seen = set()
    for label, mu in forbidden:
        if _valid(mu, n) and (label, mu) not in seen and not h.avoids(mu):
            violations.append((label, mu))
        seen.add((label, mu))
    powers_ok = all(is_c_admissible(tau ** b, h) for b in range(1, m))
    extra_ok = four_two is None or m % 2 == 1 or h.avoids(four_two)
    return TechnicalConditions(m, not violations, tuple(violations), powers_ok, extra_ok)


def _orbit_space(h: SubgroupSpec, space) -> DoubleCosetSpace:
    if isinstance(space, DoubleCosetSpace):
        return space
    if space is None:
        space = CosetSpace(h)
    return DoubleCosetSpace(space)


def check_technical_csp(tau: Permutation, h: SubgroupSpec,
                        space: CosetSpace | WordSpace | DoubleCosetSpace | None = None) -> CSPReport:
    """
    Run the CSP check for (C \\ S_n / H, X(q)/[n]_q, <tau>) whether or not the avoidance
    conditions hold; the conditions are reported alongside the verdict.  ``space`` may
    be any S_n-set isomorphic to S_n / H (for a Young subgroup, the word space).
    """
    if tau.n != h.n:
        raise ValueError("tau and H must live in the same S_n")
    conditions = technical_conditions(tau, h)      # BadTauShape for unsuitable tau
    y = y_poly(h)                                  # NonPolynomialQuotient when C is not free
    orbits = _orbit_space(h, space)
    m = conditions.m
    report = check_csp(lambda b: orbits.fix_count(tau ** b), m, y)
    report.conditions = {"tau": str(tau), "subgroup": repr(h), "orbits": orbits.size,
                         **conditions.to_json()}
    return report


def _is_odd_prime(p: int) -> bool:
    return p > 2 and all(p % d for d in range(2, math.isqrt(p) + 1))


def prime_corollary_applies(tau: Permutation, h: SubgroupSpec) -> bool:
    """n an odd prime, tau in N(C) outside C, and C free on S_n / H."""
    n = tau.n
    if not _is_odd_prime(n):
        return False
    c = rotation(n)
    in_c = any(tau == c ** j for j in range(n))
    return not in_c and h.acts_freely_with_rotations()


# --------------------------------------------------------------------------
# noncrossing partitions
# --------------------------------------------------------------------------

@dataclasses.dataclass(frozen=True, order=True)
class NoncrossingPartition:
    """Blocks of a set partition of {1..n}, each block sorted, blocks sorted by minimum."""
    blocks: tuple[tuple[int, ...], ...]

    @classmethod
    def from_blocks(cls, blocks) -> NoncrossingPartition:
        return cls(tuple(sorted(tuple(sorted(b)) for b in blocks)))

    def relabel(self, f: Callable[[int], int]) -> NoncrossingPartition:
        return NoncrossingPartition.from_blocks([f(x) for x in b] for b in self.blocks)

    def is_noncrossing(self) -> bool:
        # every element strictly between consecutive members u < v of a block must have
        # its whole block inside (u, v)
        span = {x: (b[0], b[-1]) for b in self.blocks for x in b}
        for block in self.blocks:
            for u, v in zip(block, block[1:]):
                for w in range(u + 1, v):
                    lo, hi = span.get(w, (u + 1, v - 1))
                    if lo < u or hi > v:
                        return False
        return True

    def __str__(self) -> str:
        return "".join("{" + ",".join(map(str, b)) + "}" for b in self.blocks)


def _set_partitions(n: int, k: int) -> Iterator[list[list[int]]]:
    # restricted growth strings with exactly k blocks
    def rec(i: int, blocks: list[list[int]]):
        if n - i + 1 < k - len(blocks):
            return
        if i > n:
            if len(blocks) == k:
                yield [list(b) for b in blocks]
            return
        for b in blocks:
            b.append(i)
            yield from rec(i + 1, blocks)
            b.pop()
        if len(blocks) < k:
            blocks.append([i])
            yield from rec(i + 1, blocks)
            blocks.pop()

    yield from rec(1, [])


def noncrossing_partitions(n: int, k: int) -> list[NoncrossingPartition]:
    """
    >>> len(noncrossing_partitions(4, 2)), len(noncrossing_partitions(5, 2))
    (6, 10)
    """
    if not 1 <= k <= n:
        raise ValueError("need 1 <= k <= n")
    out = []
    for blocks in _set_partitions(n, k):
        nc = NoncrossingPartition.from_blocks(blocks)
        if nc.is_noncrossing():
            out.append(nc)
    return sorted(out)


def nc_polynomial(n: int, k: int) -> IntPoly:
    """X_k(q) = [n choose k]_q [n choose k-1]_q / [n]_q."""
    return exact_div_by_q_int(q_binomial(n, k) * q_binomial(n, k - 1), n)


@dataclasses.dataclass
class NCBundle:
    """The four checks for noncrossing partitions with k blocks, plus both Narayana readings."""
    n: int
    k: int
    primary: CSPReport
    ding: tuple[int, int]              # (|Fix_X(tau_0)|, X_k(-1))
    fixed_equal: tuple[int, int]       # (|Fix_Y(tau_0)|, |Fix_X(tau_0)|)
    secondary: CSPReport
    y_polynomial: IntPoly
    narayana: dict

    @property
    def verdict(self) -> bool:
        return (self.primary.verdict and self.ding[0] == self.ding[1]
                and self.fixed_equal[0] == self.fixed_equal[1] and self.secondary.verdict)

    def __bool__(self) -> bool:
        return self.verdict

    def to_json(self) -> dict:
        return {
            "n": self.n, "k": self.k,
            "primary": self.primary.to_json(),
            "fix_x_tau": self.ding[0], "x_at_minus_one": self.ding[1],
            "fix_y_tau": self.fixed_equal[0],
            "secondary": self.secondary.to_json(),
            "y_polynomial": str(self.y_polynomial),
            "narayana": self.narayana,
            "verdict": self.verdict,
        }


def check_nc_secondary(n: int, k: int) -> NCBundle:
    """
    For noncrossing partitions X_k of {1..n} with k blocks, check
    (i) (X_k, X_k(q), <c>) is a CSP; (ii) |Fix_X(tau_0)| = X_k(-1);
    (iii) |Fix_Y(tau_0)| = |Fix_X(tau_0)| on Y_k = C-orbits; (iv) (Y_k, X_k(q)/[n]_q, <tau_0>) is a CSP.

    >>> str(check_nc_secondary(5, 2).y_polynomial)
    '1 + q^2'
    """
    if not 1 <= k <= n:
        raise ValueError("need 1 <= k <= n")
    if math.gcd(n, k) != 1 or math.gcd(n, k - 1) != 1:
        raise NonFreeAction(f"rotation is not free on noncrossing partitions for (n,k)=({n},{k})")
    elems = noncrossing_partitions(n, k)
    index = {x: i for i, x in enumerate(elems)}

    def perm_of(f: Callable[[int], int]) -> np.ndarray:
        return np.array([index[x.relabel(f)] for x in elems], dtype=np.intp)

    rot = perm_of(lambda i: i % n + 1)
    refl = perm_of(lambda i: n - i if i != n else n)
    ident = np.arange(len(elems))

    def power(p: np.ndarray, b: int) -> np.ndarray:
        out = ident
        for _ in range(b):
            out = p[out]
        return out

    x_poly = nc_polynomial(n, k)
    primary = check_csp(lambda b: int(np.count_nonzero(power(rot, b) == ident)), n, x_poly)
    fix_x = int(np.count_nonzero(refl == ident))
    ding = (fix_x, x_poly(-1))

    # C-orbits, labelled by least member
    labels = ident.copy()
    cur = ident
    for _ in range(n - 1):
        cur = rot[cur]
        labels = np.minimum(labels, cur)
    reps, class_of = np.unique(labels, return_inverse=True)
    class_of = class_of.reshape(-1)
    tau_on_y = class_of[refl[reps]]
    if not np.array_equal(class_of[refl], tau_on_y[class_of]):
        raise AssertionError("reflection does not act on rotation orbits")
    fix_y = int(np.count_nonzero(tau_on_y == np.arange(len(reps))))
    y = exact_div_by_q_int(x_poly, n)
    secondary = check_csp(lambda b: len(reps) if b == 0 else fix_y, 2, y)
    narayana = {
        "enumerated": len(elems),
        "q_formula_at_1": x_poly(1),
        "display_binom_k_k_plus_1": str(Fraction(math.comb(n, k) * math.comb(n, k + 1), n)),
    }
    return NCBundle(n, k, primary, ding, (fix_y, fix_x), secondary, y, narayana)
