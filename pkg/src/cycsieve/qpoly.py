"""
Exact integer polynomials in q, q-analogues, and root-of-unity evaluation.

A polynomial is stored densely, constant term first, with arbitrary-precision
integer coefficients.  Evaluations at roots of unity are carried out in the
ring Z[zeta_m] = Z[q]/Phi_m(q), so every comparison with a fixed-point count is
exact.

>>> c_alpha((3, 4))
IntPoly('1 + q^2 + q^3 + q^4 + q^6')
>>> eval_at_root_of_unity(c_alpha((3, 4)), 2, 1).to_int()
3
"""
from __future__ import annotations

import dataclasses
import functools
import json
import math
from collections import Counter
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import NegativeCoefficient, NonPolynomialQuotient, NonUnitDivisor, ZeroPolynomial

__all__ = [
    "IntPoly", "PolyFrac", "CyclotomicInt", "CyclotomicNumber", "ParityUnimodality",
    "q_int", "q_factorial", "q_binomial", "q_multinomial", "c_alpha", "exact_div_by_q_int",
    "cyclotomic_poly", "eval_at_root_of_unity", "is_parity_unimodal", "is_palindromic",
    "poly_to_json", "poly_from_json",
]


def _trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


@dataclasses.dataclass(frozen=True, init=False)
class IntPoly:
    """
    Dense polynomial in q over the integers; ``coeffs[i]`` is the coefficient of q^i.

    The zero polynomial has empty ``coeffs`` and degree ``-inf``.

    >>> IntPoly([1, 2, 0, 0]).coeffs
    (1, 2)
    >>> IntPoly([1, 1]) * IntPoly([1, -1])
    IntPoly('1 - q^2')
    """
    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int] = ()):
        coeffs = [int(c) for c in coeffs]
        object.__setattr__(self, "coeffs", _trim(coeffs))

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> IntPoly:
        if degree < 0:
            raise ValueError("negative exponent")
        return cls([0] * degree + [coeff])

    @classmethod
    def constant(cls, value: int) -> IntPoly:
        return cls([value])

    @property
    def degree(self) -> float | int:
        return len(self.coeffs) - 1 if self.coeffs else -math.inf

    @property
    def valuation(self) -> float | int:
        """Lowest exponent with a nonzero coefficient (``inf`` for zero)."""
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return math.inf

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __call__(self, x):
        """Horner evaluation at any value supporting ``*`` and ``+``."""
        acc = 0 * x
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    @staticmethod
    def _coerce(other) -> IntPoly:
        if isinstance(other, IntPoly):
            return other
        if isinstance(other, int):
            return IntPoly([other])
        return NotImplemented

    def __add__(self, other) -> IntPoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPoly(out)

    __radd__ = __add__

    def __neg__(self) -> IntPoly:
        return IntPoly(-c for c in self.coeffs)

    def __sub__(self, other) -> IntPoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> IntPoly:
        return (-self) + other

    def __mul__(self, other) -> IntPoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> IntPoly:
        if e < 0:
            raise ValueError("negative power")
        result, base = IntPoly([1]), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def shift(self, k: int) -> IntPoly:
        """Multiply by q^k (k may be negative if the low coefficients vanish)."""
        if k >= 0:
            return IntPoly([0] * k + list(self.coeffs))
        if self.valuation < -k:
            raise NonPolynomialQuotient(f"q^{-k} does not divide {self}")
        return IntPoly(self.coeffs[-k:])

    def substitute_power(self, b: int) -> IntPoly:
        """Return p(q^b) for b >= 0."""
        if b < 0:
            raise ValueError("use eval_at_root_of_unity for negative exponents")
        if b == 0:
            return IntPoly([sum(self.coeffs)])
        out = [0] * (b * (len(self.coeffs) - 1) + 1) if self.coeffs else []
        for i, c in enumerate(self.coeffs):
            out[i * b] = c
        return IntPoly(out)

    def divmod(self, other: IntPoly) -> tuple[IntPoly, IntPoly]:
        """
        Polynomial long division over Z.

        Requires each step's leading-coefficient division to be exact, which is
        always the case for monic or anti-monic divisors.
        """
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        rem = list(self.coeffs)
        db = len(other.coeffs) - 1
        lead = other.coeffs[-1]
        if len(rem) - 1 < db:
            return IntPoly(), self
        quot = [0] * (len(rem) - db)
        for i in range(len(rem) - 1, db - 1, -1):
            c = rem[i]
            if c == 0:
                continue
            qc, r = divmod(c, lead)
            if r:
                raise NonPolynomialQuotient(
                    f"leading coefficient {lead} does not divide {c}", remainder=IntPoly(rem))
            quot[i - db] = qc
            for j, y in enumerate(other.coeffs):
                rem[i - db + j] -= qc * y
        return IntPoly(quot), IntPoly(rem)

    def exact_div(self, other: IntPoly | int) -> IntPoly:
        if isinstance(other, int):
            out = []
            for c in self.coeffs:
                qc, r = divmod(c, other)
                if r:
                    raise NonPolynomialQuotient(f"{other} does not divide {self}")
                out.append(qc)
            return IntPoly(out)
        quot, rem = self.divmod(other)
        if not rem.is_zero():
            raise NonPolynomialQuotient(
                f"{other} does not divide {self}", quotient=quot, remainder=rem)
        return quot

    def __floordiv__(self, other):
        return self.exact_div(other)

    def times_one_minus_q_pow(self, h: int) -> IntPoly:
        """Multiply by (1 - q^h) in linear time."""
        out = list(self.coeffs) + [0] * h
        for i, c in enumerate(self.coeffs):
            out[i + h] -= c
        return IntPoly(out)

    def div_one_minus_q_pow(self, h: int) -> IntPoly:
        """Exact division by (1 - q^h) in linear time."""
        if h <= 0:
            raise ValueError("h must be positive")
        p = self.coeffs
        if len(p) <= h:
            if p:
                raise NonPolynomialQuotient(f"(1 - q^{h}) does not divide {self}", remainder=self)
            return IntPoly()
        quot = [0] * (len(p) - h)
        for i in range(len(quot)):
            quot[i] = p[i] + (quot[i - h] if i >= h else 0)
        # the top h coefficients of quot * (1 - q^h) must reproduce p exactly
        for i in range(len(quot), len(p)):
            if p[i] != -(quot[i - h] if i >= h else 0):
                raise NonPolynomialQuotient(f"(1 - q^{h}) does not divide {self}")
        return IntPoly(quot)

    def series_div_one_minus_q_pow(self, h: int, max_degree: int) -> IntPoly:
        """Power-series quotient p / (1 - q^h) truncated after q^max_degree."""
        out = [self[i] for i in range(max_degree + 1)]
        for i in range(h, max_degree + 1):
            out[i] += out[i - h]
        return IntPoly(out)

    def truncate(self, max_degree: int) -> IntPoly:
        return IntPoly(self.coeffs[:max_degree + 1])

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                body = ("" if mag == 1 else str(mag)) + ("q" if i == 1 else f"q^{i}")
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        first_sign, first = terms[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self) -> str:
        return f"IntPoly('{self}')"


def poly_to_json(p: IntPoly) -> list[str]:
    """Serialise as decimal-string coefficients, lowest exponent first."""
    return [str(c) for c in p.coeffs]


def poly_from_json(data: Sequence[str | int] | str) -> IntPoly:
    if isinstance(data, str):
        data = json.loads(data)
    return IntPoly(int(c) for c in data)


@dataclasses.dataclass(frozen=True)
class PolyFrac:
    """A quotient ``num / den`` of integer polynomials (not automatically reduced)."""
    num: IntPoly
    den: IntPoly

    def __post_init__(self):
        if self.den.is_zero():
            raise ZeroDivisionError("PolyFrac with zero denominator")

    def __add__(self, other: PolyFrac) -> PolyFrac:
        if self.den == other.den:
            return PolyFrac(self.num + other.num, self.den)
        return PolyFrac(self.num * other.den + other.num * self.den, self.den * other.den)

    def __mul__(self, other: PolyFrac) -> PolyFrac:
        return PolyFrac(self.num * other.num, self.den * other.den)

    def to_poly(self) -> IntPoly:
        """Exact quotient; raises NonPolynomialQuotient if ``den`` does not divide ``num``."""
        return self.num.exact_div(self.den)

    def series(self, max_degree: int) -> list[Fraction]:
        """Power-series coefficients through q^max_degree (requires den(0) != 0)."""
        d0 = self.den[0]
        if d0 == 0:
            raise ValueError("denominator vanishes at q = 0")
        out: list[Fraction] = []
        for i in range(max_degree + 1):
            acc = Fraction(self.num[i])
            for j in range(1, min(i, len(self.den) - 1) + 1):
                acc -= self.den[j] * out[i - j]
            out.append(acc / d0)
        return out


# --------------------------------------------------------------------------
# q-analogues
# --------------------------------------------------------------------------

def q_int(n: int) -> IntPoly:
    """[n]_q = 1 + q + ... + q^(n-1); [0]_q = 0."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return IntPoly([1] * n)


def _times_q_int(p: list[int], k: int) -> list[int]:
    # sliding-window sum: p * [k]_q
    out = [0] * (len(p) + k - 1)
    run = 0
    for i in range(len(out)):
        if i < len(p):
            run += p[i]
        if i - k >= 0:
            run -= p[i - k]
        out[i] = run
    return out


def _div_q_int(p: list[int], k: int) -> list[int]:
    # exact division by [k]_q, caller guarantees divisibility
    out = [0] * (len(p) - k + 1)
    run = 0
    for i in range(len(out)):
        out[i] = p[i] - run
        run += out[i]
        if i - k + 1 >= 0:
            run -= out[i - k + 1]
    return out


def q_factorial(n: int) -> IntPoly:
    p = [1]
    for k in range(2, n + 1):
        p = _times_q_int(p, k)
    return IntPoly(p)


@functools.lru_cache(maxsize=4096)
def q_binomial(n: int, k: int) -> IntPoly:
    """
    Gaussian binomial coefficient.

    >>> q_binomial(4, 2)
    IntPoly('1 + q + 2q^2 + q^3 + q^4')
    """
    if k < 0 or k > n:
        return IntPoly()
    k = min(k, n - k)
    p = [1]
    for i in range(1, k + 1):
        p = _times_q_int(p, n - k + i)
        p = _div_q_int(p, i)
    return IntPoly(p)


def q_multinomial(alpha: Sequence[int]) -> IntPoly:
    """
    [n]!_q / prod [alpha_i]!_q as a product of Gaussian binomials.

    >>> q_multinomial((1, 1, 1))
    IntPoly('1 + 2q + 2q^2 + q^3')
    """
    if any(a < 0 for a in alpha):
        raise ValueError("composition parts must be nonnegative")
    up = Counter(range(1, sum(alpha) + 1))
    down = Counter(e for a in alpha for e in range(1, a + 1))
    return _ratio_of_one_minus(up - down, down - up)


def _ratio_of_one_minus(up: Counter, down: Counter) -> IntPoly:
    # prod_{e in up} (1 - q^e) / prod_{e in down} (1 - q^e), divided exactly
    p = IntPoly([1])
    for e in sorted(up.elements()):
        p = p.times_one_minus_q_pow(e)
    for e in sorted(down.elements()):
        p = p.div_one_minus_q_pow(e)
    return p


def exact_div_by_q_int(p: IntPoly, n: int) -> IntPoly:
    """
    p / [n]_q, raising NonPolynomialQuotient (carrying the remainder) when inexact.

    >>> exact_div_by_q_int(q_binomial(7, 3), 7)
    IntPoly('1 + q^2 + q^3 + q^4 + q^6')
    """
    if n <= 0:
        raise ValueError("n must be positive")
    if n == 1:
        return p
    return p.exact_div(q_int(n))


def c_alpha(alpha: Sequence[int]) -> IntPoly:
    """
    The necklace q-analogue C(alpha; q) = [n; alpha]_q / [n]_q.

    Zero parts are allowed and ignored.  Raises NonPolynomialQuotient when
    gcd(alpha) > 1, where the quotient is not a polynomial.
    """
    n = sum(alpha)
    if n <= 0:
        raise ValueError("composition must have positive sum")
    if any(a < 0 for a in alpha):
        raise ValueError("composition parts must be nonnegative")
    parts = [a for a in alpha if a]
    if math.gcd(*parts) != 1:
        return exact_div_by_q_int(q_multinomial(parts), n)
    # [n]_q = (1 - q^n)/(1 - q): cancel it against the factorial ratio
    up = Counter(range(1, n)) + Counter([1])
    down = Counter(e for a in parts for e in range(1, a + 1))
    return _ratio_of_one_minus(up - down, down - up)


# --------------------------------------------------------------------------
# cyclotomic arithmetic
# --------------------------------------------------------------------------

def _divisors(m: int) -> list[int]:
    return [d for d in range(1, m + 1) if m % d == 0]


@functools.lru_cache(maxsize=None)
def cyclotomic_poly(m: int) -> IntPoly:
    """
    Phi_m, by dividing q^m - 1 by Phi_d for every proper divisor d.

    >>> cyclotomic_poly(6)
    IntPoly('1 - q + q^2')
    """
    if m < 1:
        raise ValueError("m must be positive")
    p = IntPoly.monomial(m) - 1
    for d in _divisors(m)[:-1]:
        p = p.exact_div(cyclotomic_poly(d))
    return p


def _reduce_mod_phi(vec: Sequence, m: int) -> list:
    # vec: coefficients of a polynomial in zeta; returns residue of length phi(m)
    phi = cyclotomic_poly(m).coeffs
    deg = len(phi) - 1
    rem = list(vec)
    for i in range(len(rem) - 1, deg - 1, -1):
        c = rem[i]
        if c:
            for j in range(deg + 1):
                rem[i - deg + j] -= c * phi[j]
    rem = rem[:deg] + [0] * max(0, deg - len(rem))
    return rem


@dataclasses.dataclass(frozen=True)
class CyclotomicInt:
    """
    Element of Z[zeta_m], stored as its residue modulo Phi_m in the basis 1, zeta, ..., zeta^(phi(m)-1).

    >>> z = CyclotomicInt.zeta(4)
    >>> (z * z).to_int()
    -1
    """
    m: int
    residue: tuple[int, ...]

    def __post_init__(self):
        if len(self.residue) != len(cyclotomic_poly(self.m).coeffs) - 1:
            raise ValueError("residue length must equal phi(m)")

    @classmethod
    def from_coeffs(cls, m: int, vec: Sequence[int]) -> CyclotomicInt:
        return cls(m, tuple(int(c) for c in _reduce_mod_phi(vec, m)))

    @classmethod
    def from_int(cls, m: int, k: int) -> CyclotomicInt:
        return cls.from_coeffs(m, [k])

    @classmethod
    def zeta(cls, m: int, power: int = 1) -> CyclotomicInt:
        vec = [0] * m
        vec[power % m] = 1
        return cls.from_coeffs(m, vec)

    def is_integer(self) -> bool:
        return all(c == 0 for c in self.residue[1:])

    def to_int(self) -> int | None:
        """The rational integer this element equals, or None."""
        return self.residue[0] if self.is_integer() else None

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self.is_integer() and self.residue[0] == other
        if isinstance(other, CyclotomicInt):
            return self.m == other.m and self.residue == other.residue
        return NotImplemented

    def __hash__(self):
        return hash((self.m, self.residue))

    def _other(self, other) -> CyclotomicInt:
        if isinstance(other, int):
            return CyclotomicInt.from_int(self.m, other)
        if other.m != self.m:
            raise ValueError("mismatched conductors")
        return other

    def __add__(self, other) -> CyclotomicInt:
        other = self._other(other)
        return CyclotomicInt(self.m, tuple(a + b for a, b in zip(self.residue, other.residue)))

    __radd__ = __add__

    def __neg__(self) -> CyclotomicInt:
        return CyclotomicInt(self.m, tuple(-a for a in self.residue))

    def __sub__(self, other) -> CyclotomicInt:
        return self + (-self._other(other))

    def __mul__(self, other) -> CyclotomicInt:
        other = self._other(other)
        prod = (IntPoly(self.residue) * IntPoly(other.residue)).coeffs
        return CyclotomicInt.from_coeffs(self.m, prod or [0])

    __rmul__ = __mul__

    def to_json(self) -> dict:
        return {"m": self.m, "residue": [str(c) for c in self.residue]}

    def __str__(self) -> str:
        k = self.to_int()
        if k is not None:
            return str(k)
        return str(IntPoly(self.residue)).replace("q", f"z{self.m}")


def _fpoly_trim(p: list[Fraction]) -> list[Fraction]:
    while p and p[-1] == 0:
        p.pop()
    return p


def _fpoly_divmod(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    a, b = _fpoly_trim(list(a)), _fpoly_trim(list(b))
    if len(a) < len(b):
        return [], a
    quot = [Fraction(0)] * (len(a) - len(b) + 1)
    for i in range(len(a) - 1, len(b) - 2, -1):
        c = a[i] / b[-1]
        quot[i - len(b) + 1] = c
        if c:
            for j, y in enumerate(b):
                a[i - len(b) + 1 + j] -= c * y
    return quot, _fpoly_trim(a[:len(b) - 1])


def _fpoly_mul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _fpoly_sub(a, b):
    out = [Fraction(0)] * max(len(a), len(b))
    for i, x in enumerate(a):
        out[i] += x
    for i, y in enumerate(b):
        out[i] -= y
    return _fpoly_trim(out)


@dataclasses.dataclass(frozen=True)
class CyclotomicNumber:
    """Element of Q(zeta_m); same representation as CyclotomicInt but with rational residues."""
    m: int
    residue: tuple[Fraction, ...]

    @classmethod
    def from_coeffs(cls, m: int, vec: Sequence) -> CyclotomicNumber:
        return cls(m, tuple(Fraction(c) for c in _reduce_mod_phi([Fraction(c) for c in vec], m)))

    @classmethod
    def from_int(cls, m: int, k) -> CyclotomicNumber:
        return cls.from_coeffs(m, [k])

    @classmethod
    def zeta(cls, m: int, power: int = 1) -> CyclotomicNumber:
        vec = [0] * m
        vec[power % m] = 1
        return cls.from_coeffs(m, vec)

    def _other(self, other) -> CyclotomicNumber:
        if isinstance(other, (int, Fraction)):
            return CyclotomicNumber.from_int(self.m, other)
        if isinstance(other, CyclotomicInt):
            return CyclotomicNumber(other.m, tuple(Fraction(c) for c in other.residue))
        return other

    def __add__(self, other) -> CyclotomicNumber:
        other = self._other(other)
        return CyclotomicNumber(self.m, tuple(a + b for a, b in zip(self.residue, other.residue)))

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicNumber(self.m, tuple(-a for a in self.residue))

    def __sub__(self, other):
        return self + (-self._other(other))

    def __rsub__(self, other):
        return self._other(other) - self

    def __mul__(self, other) -> CyclotomicNumber:
        other = self._other(other)
        return CyclotomicNumber.from_coeffs(
            self.m, _fpoly_mul(list(self.residue), list(other.residue)) or [0])

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.residue)

    def inverse(self) -> CyclotomicNumber:
        if self.is_zero():
            raise NonUnitDivisor("division by zero in Q(zeta)")
        # extended Euclid: find u with u * self == 1 mod Phi_m
        r0 = [Fraction(c) for c in cyclotomic_poly(self.m).coeffs]
        r1 = _fpoly_trim(list(self.residue))
        s0, s1 = [], [Fraction(1)]
        while r1:
            quot, rem = _fpoly_divmod(r0, r1)
            r0, r1 = r1, rem
            s0, s1 = s1, _fpoly_sub(s0, _fpoly_mul(quot, s1))
        # r0 is a nonzero constant since Phi_m is irreducible
        inv_c = 1 / r0[0]
        return CyclotomicNumber.from_coeffs(self.m, [c * inv_c for c in s0] or [0])

    def __truediv__(self, other) -> CyclotomicNumber:
        return self * self._other(other).inverse()

    def to_cyclotomic_int(self) -> CyclotomicInt:
        if any(c.denominator != 1 for c in self.residue):
            raise ValueError(f"{self} is not an algebraic integer in the power basis")
        return CyclotomicInt(self.m, tuple(int(c) for c in self.residue))


def eval_at_root_of_unity(p: IntPoly, m: int, b: int) -> CyclotomicInt:
    """
    Exact value of p(zeta^b) for zeta = exp(2 pi i / m), as an element of Z[zeta_m].

    >>> eval_at_root_of_unity(q_binomial(7, 3), 7, 1).to_int()
    0
    """
    if m < 1:
        raise ValueError("m must be positive")
    vec = [0] * m
    for i, c in enumerate(p.coeffs):
        if c:
            vec[(i * b) % m] += c
    return CyclotomicInt.from_coeffs(m, vec)


# --------------------------------------------------------------------------
# coefficient-sequence properties
# --------------------------------------------------------------------------

@dataclasses.dataclass(frozen=True)
class ParityUnimodality:
    """Truthy result; ``witness`` holds exponents (i, j, k) with a_i > a_j < a_k of equal parity."""
    ok: bool
    witness: tuple[int, int, int] | None = None

    def __bool__(self) -> bool:
        return self.ok


def _is_unimodal(seq: Sequence[int]) -> bool:
    i, n = 0, len(seq)
    while i + 1 < n and seq[i] <= seq[i + 1]:
        i += 1
    while i + 1 < n and seq[i] >= seq[i + 1]:
        i += 1
    return i >= n - 1


def _valley_witness(seq: Sequence[int]) -> tuple[int, int, int] | None:
    # lexicographically smallest (i, j, k) with seq[i] > seq[j] < seq[k]
    n = len(seq)
    suffix_max = [0] * (n + 1)
    for t in range(n - 1, -1, -1):
        suffix_max[t] = max(seq[t], suffix_max[t + 1])
    for i in range(n):
        for j in range(i + 1, n - 1):
            if seq[j] < seq[i] and suffix_max[j + 1] > seq[j]:
                k = next(t for t in range(j + 1, n) if seq[t] > seq[j])
                return i, j, k
    return None


def is_parity_unimodal(p: IntPoly) -> ParityUnimodality:
    """
    Whether the even-exponent and odd-exponent coefficient sequences are each unimodal.

    >>> is_parity_unimodal(IntPoly([1, 0, 0, 0, 1]))
    ParityUnimodality(ok=False, witness=(0, 2, 4))
    """
    if any(c < 0 for c in p.coeffs):
        raise NegativeCoefficient(f"{p} has a negative coefficient")
    evens, odds = p.coeffs[0::2], p.coeffs[1::2]
    if _is_unimodal(evens) and _is_unimodal(odds):
        return ParityUnimodality(True)
    candidates = []
    for parity, seq in ((0, evens), (1, odds)):
        w = _valley_witness(seq)
        if w is not None:
            candidates.append(tuple(2 * t + parity for t in w))
    return ParityUnimodality(False, min(candidates))


def is_palindromic(p: IntPoly) -> bool:
    """
    Symmetry of the coefficients about the centre of their support, so q^c * f counts as
    palindromic whenever f does.

    >>> is_palindromic(IntPoly([1, 2, 0, 1]))
    False
    """
    if p.is_zero():
        raise ZeroPolynomial("palindromicity of the zero polynomial is undefined")
    c = p.coeffs[p.valuation:]
    return c == c[::-1]
