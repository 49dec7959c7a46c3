"""
Partitions, hook lengths, and graded multiplicities of S_a-irreducibles.

The central identity is the hook-product formula for

    sum_{i,j} dim Hom(S^lam, S^i V* (x) wedge^j V) q^i t^j
        = (1 - q)/(1 + t) * prod_{(i,j) in lam} (q^(i-1) + t q^(j-1)) / (1 - q^h(i,j)),

V the reflection representation of S_a.  Setting t = -q^b gives the lam-isotypic
Hilbert series of the finite-dimensional quotient L_{b/a}(1), and summing the two
hook shapes inside wedge^k C^a gives the rational q-Schroder polynomial.

:func:`graded_multiplicity_oracle` recomputes the left-hand side directly from
characters (Murnaghan-Nakayama) so the product formula can be checked independently.
"""
from __future__ import annotations

import dataclasses
import functools
import math
from collections import Counter
from fractions import Fraction
from typing import Sequence

from .errors import BudgetExceeded, FormulaMismatch, NonPolynomialQuotient, NonPolynomialResult
from .qpoly import IntPoly, c_alpha
from .symmgrp import centralizer_size, partitions

__all__ = [
    "PartitionShape", "BivariateSeries", "hook_lengths", "hook_shape", "molchanov_series",
    "isotypic_hilbert", "rational_q_schroder", "schroder_summands", "mn_character",
    "graded_multiplicity_oracle",
]


@dataclasses.dataclass(frozen=True)
class PartitionShape:
    """
    A partition lam_1 >= lam_2 >= ... > 0.  Cells are (i, j) with 1 <= i <= len(parts),
    1 <= j <= parts[i-1]: row i, column j.

    >>> PartitionShape((6, 5, 5, 3, 1)).hook(2, 3)
    5
    """
    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if any(p <= 0 for p in parts) or any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"{self.parts} is not a partition")
        object.__setattr__(self, "parts", parts)

    @property
    def size(self) -> int:
        return sum(self.parts)

    @functools.cached_property
    def conjugate(self) -> PartitionShape:
        if not self.parts:
            return self
        return PartitionShape(tuple(sum(1 for p in self.parts if p >= j)
                                    for j in range(1, self.parts[0] + 1)))

    def cells(self) -> list[tuple[int, int]]:
        return [(i, j) for i, row in enumerate(self.parts, start=1) for j in range(1, row + 1)]

    def hook(self, i: int, j: int) -> int:
        return (self.parts[i - 1] - j) + (self.conjugate.parts[j - 1] - i) + 1

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.parts)) + ")"


def hook_lengths(lam: PartitionShape | Sequence[int]) -> dict[tuple[int, int], int]:
    if not isinstance(lam, PartitionShape):
        lam = PartitionShape(tuple(lam))
    return {cell: lam.hook(*cell) for cell in lam.cells()}


def hook_shape(arm: int, legs: int) -> PartitionShape | None:
    """(arm, 1^legs), or None when arm <= 0 (the vanishing conventions at k = 0 and k = a)."""
    if arm <= 0 or legs < 0:
        return None
    return PartitionShape((arm,) + (1,) * legs)


@dataclasses.dataclass(frozen=True)
class BivariateSeries:
    """Coefficients ``rows[j][i]`` of q^i t^j for i <= q_max."""
    q_max: int
    rows: tuple[tuple[int, ...], ...]

    def coeff(self, i: int, j: int) -> int:
        if j >= len(self.rows) or i > self.q_max:
            return 0
        row = self.rows[j]
        return row[i] if i < len(row) else 0

    def t_row(self, j: int) -> list[int]:
        return [self.coeff(i, j) for i in range(self.q_max + 1)]

    @property
    def t_degree(self) -> int:
        return len(self.rows) - 1

    def __eq__(self, other) -> bool:
        if not isinstance(other, BivariateSeries):
            return NotImplemented
        q = min(self.q_max, other.q_max)
        jm = max(len(self.rows), len(other.rows))
        return all(self.coeff(i, j) == other.coeff(i, j) for i in range(q + 1) for j in range(jm))

    def __hash__(self):
        return hash((self.q_max, self.rows))


def _normalize_rows(rows: list[list[int]], q_max: int) -> tuple[tuple[int, ...], ...]:
    out = [tuple(r[i] if i < len(r) else 0 for i in range(q_max + 1)) for r in rows]
    while out and not any(out[-1]):
        out.pop()
    return tuple(out)


def molchanov_series(lam: PartitionShape | Sequence[int], q_max: int) -> BivariateSeries:
    """
    Expand (1 - q)/(1 + t) prod_{cells} (q^(i-1) + t q^(j-1)) / (1 - q^h(i,j)) through q^q_max.

    >>> molchanov_series((2,), 5).t_row(0)
    [1, 0, 1, 0, 1, 0]
    """
    if not isinstance(lam, PartitionShape):
        lam = PartitionShape(tuple(lam))
    if lam.size < 2:
        raise ValueError("need a partition of a >= 2")
    # numerator as a polynomial in t with IntPoly coefficients
    num = [IntPoly([1])]
    for i, j in lam.cells():
        nxt = [IntPoly() for _ in range(len(num) + 1)]
        for d, coef in enumerate(num):
            nxt[d] = nxt[d] + coef.shift(i - 1)
            nxt[d + 1] = nxt[d + 1] + coef.shift(j - 1)
        num = nxt
    # exact division by (1 + t); cell (1,1) contributes the factor (1 + t)
    deg = len(num) - 1
    quot = [IntPoly() for _ in range(deg)]
    quot[deg - 1] = num[deg]
    for d in range(deg - 1, 0, -1):
        quot[d - 1] = num[d] - quot[d]
    if quot[0] != num[0]:
        raise NonPolynomialQuotient("(1 + t) does not divide the hook numerator")
    hooks = list(hook_lengths(lam).values())
    rows = []
    for coef in quot:
        p = coef.times_one_minus_q_pow(1).truncate(q_max)
        for h in hooks:
            p = p.series_div_one_minus_q_pow(h, q_max)
        rows.append(list(p.coeffs))
    return BivariateSeries(q_max, _normalize_rows(rows, q_max))


def isotypic_hilbert(lam: PartitionShape | Sequence[int], b: int) -> IntPoly:
    """
    (1 - q)/(1 - q^b) prod_{(i,j)} (q^(i-1) - q^(j-1+b)) / (1 - q^h(i,j)), as an exact polynomial.

    >>> isotypic_hilbert((2,), 3)
    IntPoly('1 + q^2')
    """
    if not isinstance(lam, PartitionShape):
        lam = PartitionShape(tuple(lam))
    a = lam.size
    if not (0 < a < b) or math.gcd(a, b) != 1:
        raise NonPolynomialResult(f"need gcd(a, b) = 1 and a < b, got a={a}, b={b}")
    # q^(i-1) - q^(j-1+b) = q^(i-1) (1 - q^(j-i+b)); cancel matching (1 - q^e) factors first
    lead = sum(i - 1 for i, _ in lam.cells())
    up = Counter([1] + [j - i + b for i, j in lam.cells()])
    down = Counter([b] + list(hook_lengths(lam).values()))
    common = up & down
    up, down = up - common, down - common
    p = IntPoly.monomial(lead)
    for e in sorted(up.elements()):
        p = p.times_one_minus_q_pow(e)
    try:
        for e in sorted(down.elements()):
            p = p.div_one_minus_q_pow(e)
    except NonPolynomialQuotient as exc:
        raise NonPolynomialResult(f"isotypic series for {lam}, b={b} is not a polynomial") from exc
    if any(c < 0 for c in p.coeffs):
        raise NonPolynomialResult(f"negative coefficient in isotypic series for {lam}, b={b}")
    return p


def schroder_summands(a: int, b: int, k: int) -> tuple[IntPoly, IntPoly]:
    """Isotypic Hilbert series of the two hook shapes (a-k, 1^k) and (a-k+1, 1^(k-1))."""
    parts = []
    for shape in (hook_shape(a - k, k), hook_shape(a - k + 1, k - 1)):
        parts.append(IntPoly() if shape is None else isotypic_hilbert(shape, b))
    return parts[0], parts[1]


def rational_q_schroder(a: int, b: int, k: int, check: bool = True) -> IntPoly:
    """
    q^(-binom(k,2)) times the Hilbert series of Hom(wedge^k C^a, L_{b/a}(1)), computed from
    hook shapes.  With ``check`` the result is compared with C(k, a-k, b-k; q) and a
    FormulaMismatch is raised if they differ.

    >>> rational_q_schroder(3, 4, 0)
    IntPoly('1 + q^2 + q^3 + q^4 + q^6')
    """
    if math.gcd(a, b) != 1 or not (0 <= k <= a < b):
        raise ValueError(f"need gcd(a,b)=1 and 0 <= k <= a < b, got {(a, b, k)}")
    first, second = schroder_summands(a, b, k)
    hilb = first + second
    shift = math.comb(k, 2)
    try:
        hook_side = hilb.shift(-shift)
    except NonPolynomialQuotient as exc:
        raise FormulaMismatch(f"Hilbert series for {(a, b, k)} has terms below q^{shift}",
                              left=hilb) from exc
    if check:
        product_side = c_alpha((k, a - k, b - k))
        if hook_side != product_side:
            raise FormulaMismatch(f"hook formula and C(k,a-k,b-k;q) differ at {(a, b, k)}",
                                  left=hook_side, right=product_side)
    return hook_side


# --------------------------------------------------------------------------
# character-theoretic oracle
# --------------------------------------------------------------------------

@functools.lru_cache(maxsize=None)
def _mn_beta(beta: tuple[int, ...], mu: tuple[int, ...]) -> int:
    # beta: strictly decreasing beta-set of lam; mu: remaining cycle lengths
    if not mu:
        return 1
    r, rest = mu[0], mu[1:]
    members = set(beta)
    total = 0
    for x in beta:
        y = x - r
        if y < 0 or y in members:
            continue
        sign = (-1) ** sum(1 for z in beta if y < z < x)
        new_beta = tuple(sorted((members - {x}) | {y}, reverse=True))
        total += sign * _mn_beta(new_beta, rest)
    return total


def mn_character(lam: Sequence[int], mu: Sequence[int]) -> int:
    """
    chi^lam at cycle type mu by the Murnaghan-Nakayama rule (border strips as beta-set moves).

    >>> mn_character((2, 1), (3,))
    -1
    """
    lam = tuple(lam)
    if sum(lam) != sum(mu):
        raise ValueError("lam and mu must partition the same integer")
    ell = len(lam)
    beta = tuple(p + ell - 1 - i for i, p in enumerate(lam))
    return _mn_beta(beta, tuple(sorted(mu, reverse=True)))


def graded_multiplicity_oracle(lam: PartitionShape | Sequence[int], q_max: int,
                               max_a: int = 6, max_q: int = 12) -> BivariateSeries:
    """
    sum_{i,j} dim Hom(S^lam, S^i V* (x) wedge^j V) q^i t^j via the class-weighted inner product

        (1/a!) sum_g chi^lam(g) * (1 - q)/prod_z (1 - q^|z|) * prod_z (1 - (-t)^|z|)/(1 + t).
    """
    if not isinstance(lam, PartitionShape):
        lam = PartitionShape(tuple(lam))
    a = lam.size
    if a > max_a or q_max > max_q:
        raise BudgetExceeded(f"oracle limited to a <= {max_a}, q_max <= {max_q}")
    table = [[Fraction(0)] * (q_max + 1) for _ in range(a)]
    for mu in partitions(a):
        chi = mn_character(lam.parts, mu)
        if chi == 0:
            continue
        weight = Fraction(chi, centralizer_size(mu))
        sym = IntPoly([1, -1])
        for part in mu:
            sym = sym.series_div_one_minus_q_pow(part, q_max)
        ext = IntPoly([1])
        for part in mu:
            ext = ext * (IntPoly([1]) - IntPoly.monomial(part, (-1) ** part))
        ext = ext.exact_div(IntPoly([1, 1]))
        for j, e in enumerate(ext.coeffs):
            if e:
                for i in range(q_max + 1):
                    table[j][i] += weight * e * sym[i]
    rows = []
    for row in table:
        if any(x.denominator != 1 for x in row):
            raise ArithmeticError("non-integral multiplicity")
        rows.append([int(x) for x in row])
    return BivariateSeries(q_max, _normalize_rows(rows, q_max))
