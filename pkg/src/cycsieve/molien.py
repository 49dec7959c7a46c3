"""
Hilbert series of invariant rings of permutation groups, the coset polynomial
X(q) = Hilb(C[x]^H) / Hilb(C[x]^{S_n}), Y(q) = X(q) / [n]_q, and the closed form for
Y at a primitive root of unity in terms of fixed-point counts on S_n / H.
"""
from __future__ import annotations

import dataclasses
import math
from collections import Counter
from fractions import Fraction
from typing import Callable, Sequence

from .errors import InternalDivisionFailure, NonFreeAction, NonPolynomialQuotient, NonUnitDivisor
from .qpoly import CyclotomicInt, CyclotomicNumber, IntPoly, PolyFrac, exact_div_by_q_int
from .symmgrp import SubgroupSpec, centralizer_size, partitions, permutation_of_type

__all__ = [
    "MolienSeries", "molien_series", "coset_poly_X", "y_poly", "y_zeta_prediction",
    "lemma_fix_oracle", "space_fix_oracle",
]

FixOracle = Callable[[tuple[int, ...]], int]


def _prod_one_minus(exponents: Sequence[int]) -> IntPoly:
    p = IntPoly([1])
    for e in exponents:
        p = p.times_one_minus_q_pow(e)
    return p


def _cycle_term(mu: Sequence[int], n: int) -> IntPoly:
    # prod_{i<=n} (1 - q^i) / prod_j (1 - q^{mu_j}); always a polynomial
    p = _prod_one_minus(range(1, n + 1))
    for part in mu:
        p = p.div_one_minus_q_pow(part)
    return p


@dataclasses.dataclass(frozen=True)
class MolienSeries:
    """
    Hilb(C[x]^H; q) = numerator / (|H| * prod_{i=1}^n (1 - q^i)).

    ``numerator`` is the sum over h in H of prod_i(1-q^i) / prod_{cycles z}(1-q^|z|).
    """
    subgroup: SubgroupSpec
    numerator: IntPoly
    scale: int

    @property
    def denominator(self) -> IntPoly:
        return _prod_one_minus(range(1, self.subgroup.n + 1))

    @property
    def value(self) -> PolyFrac:
        return PolyFrac(self.numerator, self.denominator * self.scale)

    def coefficients(self, max_degree: int) -> list[int]:
        """Dimensions of the degree-0..max_degree invariants."""
        p = self.numerator.truncate(max_degree)
        for i in range(1, self.subgroup.n + 1):
            p = p.series_div_one_minus_q_pow(i, max_degree)
        out = []
        for c in (p[i] for i in range(max_degree + 1)):
            d, r = divmod(c, self.scale)
            if r:
                raise InternalDivisionFailure("Molien coefficient is not an integer")
            out.append(d)
        return out


def molien_series(h: SubgroupSpec) -> MolienSeries:
    n = h.n
    num = IntPoly()
    for mu, count in sorted(h.cycle_type_counts().items()):
        num = num + _cycle_term(mu, n) * count
    return MolienSeries(h, num, h.order)


def coset_poly_X(h: SubgroupSpec) -> IntPoly:
    """
    X(q) for S_n / H; equals the q-multinomial when H is a Young subgroup.
    """
    series = molien_series(h)
    try:
        return series.numerator.exact_div(series.scale)
    except NonPolynomialQuotient as exc:
        raise InternalDivisionFailure(f"X(q) for {h!r} is not integral") from exc


def y_poly(h: SubgroupSpec) -> IntPoly:
    """X(q) / [n]_q; NonPolynomialQuotient means C does not act freely on S_n / H."""
    return exact_div_by_q_int(coset_poly_X(h), h.n)


# --------------------------------------------------------------------------
# Y at a primitive m-th root of unity from fixed-point counts
# --------------------------------------------------------------------------

def lemma_fix_oracle(h: SubgroupSpec) -> FixOracle:
    """|Fix_{S_n/H}(mu)| = |Z(mu)| * #{h in H of type mu} / |H|."""
    counts = h.cycle_type_counts()

    def oracle(mu: tuple[int, ...]) -> int:
        val = Fraction(centralizer_size(mu) * counts[mu], h.order)
        if val.denominator != 1:
            raise InternalDivisionFailure(f"non-integral fixed-point count for {mu}")
        return int(val)

    return oracle


def space_fix_oracle(space) -> FixOracle:
    """Count fixed points of a representative permutation directly on an enumerated space."""
    def oracle(mu: tuple[int, ...]) -> int:
        return space.fix_count(permutation_of_type(mu))

    return oracle


def _class_weight(lam: Sequence[int], zeta_pow: Callable[[int], CyclotomicNumber]) -> CyclotomicNumber:
    # 1 / prod_i (i (1 - zeta^i))^{c_i} c_i!
    denom = zeta_pow(0)
    for part, mult in Counter(lam).items():
        factor = part * (1 - zeta_pow(part))
        if factor.is_zero():
            raise NonUnitDivisor(f"1 - zeta^{part} vanishes")
        for _ in range(mult):
            denom = denom * factor
        denom = denom * math.factorial(mult)
    return denom.inverse()


def y_zeta_prediction(h: SubgroupSpec, m: int, fix_oracle: FixOracle | None = None) -> CyclotomicInt:
    """
    Y(zeta) for zeta a primitive m-th root of unity, computed only from fixed-point
    counts on X = S_n / H of the cycle types (m^k, lambda) and (2m, m^(k-1)),
    with k = floor((n - 1) / m).

    When m does not divide n:
        Y(zeta) = (1 - zeta) prod_{i=1}^{n-1-km} (1 - zeta^i) * S
    and when m divides n:
        Y(zeta) = (1 - zeta) (mk/4 |Fix(2m, m^(k-1))| + m * S),
    where S = sum over lambda of |Fix(m^k, lambda)| / prod_i (i (1 - zeta^i))^{c_i} c_i!,
    lambda running over partitions of n - km (with lambda_1 != m in the second case).
    """
    n = h.n
    if m < 2:
        raise ValueError("m must be at least 2")
    if not h.acts_freely_with_rotations():
        raise NonFreeAction(f"C does not act freely on S_{n}/{h!r}")
    if fix_oracle is None:
        fix_oracle = lemma_fix_oracle(h)
    zeta_cache: dict[int, CyclotomicNumber] = {}

    def zp(e: int) -> CyclotomicNumber:
        e %= m
        if e not in zeta_cache:
            zeta_cache[e] = CyclotomicNumber.zeta(m, e)
        return zeta_cache[e]

    k = (n - 1) // m
    rest = n - k * m
    total = CyclotomicNumber.from_int(m, 0)
    for lam in partitions(rest):
        if lam[0] == m:
            continue
        mu = tuple(sorted([m] * k + list(lam), reverse=True))
        fix = fix_oracle(mu)
        if fix:
            total = total + _class_weight(lam, zp) * fix
    one_minus_zeta = 1 - zp(1)
    if n % m:
        prefactor = one_minus_zeta
        for i in range(1, rest):
            prefactor = prefactor * (1 - zp(i))
        value = prefactor * total
    else:
        exceptional = 0
        if k >= 1:
            exceptional = fix_oracle(tuple(sorted([2 * m] + [m] * (k - 1), reverse=True)))
        value = one_minus_zeta * (Fraction(m * k, 4) * exceptional + total * m)
    try:
        return value.to_cyclotomic_int()
    except ValueError as exc:
        raise InternalDivisionFailure(f"prediction {value} is not integral") from exc
