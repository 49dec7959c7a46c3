"""
Permutations of {1, ..., n}, cycle types, subgroups given by generators, and the
normaliser of the rotation group C = <c>, c = (1 2 ... n), written as affine maps.

Composition is right-to-left: ``(g * h)(x) == g(h(x))``.  Residues mod n are
represented by {1, ..., n}, with n standing for 0.

>>> tau = Permutation.from_cycles("(1)(2 4 10 8)(3 7 9 5)(6)", 10)
>>> cycle_type(tau)
(4, 4, 1, 1)
>>> AffineMap.from_permutation(tau)
AffineMap(n=10, d=3, r=8)
"""
from __future__ import annotations

import dataclasses
import math
import re
from collections import Counter, deque
from typing import Iterable, Iterator, Sequence

from .errors import BadTauShape, BudgetExceeded

__all__ = [
    "Permutation", "AffineMap", "NormalForm", "SubgroupSpec", "Admissibility",
    "cycle_type", "centralizer_size", "class_size", "partitions", "permutation_of_type",
    "rotation", "reflection", "normalizer_of_c", "affine_normal_form",
    "is_c_admissible", "tau_shape", "cycle_type_of_cj_tau",
    "symmetric_group", "young_subgroup", "cyclic_subgroup", "trivial_subgroup",
    "DEFAULT_ELEMENT_BUDGET",
]

DEFAULT_ELEMENT_BUDGET = 10 ** 6

CycleType = tuple[int, ...]


@dataclasses.dataclass(frozen=True, order=True)
class Permutation:
    """A bijection of {1..n} in one-line notation: ``images[i-1] == g(i)``."""
    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError(f"{self.images} is not a permutation of 1..{len(self.images)}")

    @property
    def n(self) -> int:
        return len(self.images)

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def from_one_line(cls, images: Sequence[int] | str) -> Permutation:
        """Accepts a sequence or a JSON array string such as ``"[2, 3, 1]"``."""
        if isinstance(images, str):
            import json
            images = json.loads(images)
        return cls(tuple(int(x) for x in images))

    @classmethod
    def from_cycles(cls, text: str | Iterable[Sequence[int]], n: int | None = None,
                    compact: bool = False) -> Permutation:
        """
        Parse cycle notation such as ``"(1 2 3 4)(5,6,7,8)(9 10)"``.

        With ``compact=True`` each character inside a cycle is one point and the digit
        0 stands for 10, matching hand-written notation like ``"(2408)(3795)"``.
        """
        if isinstance(text, str):
            cycles = _parse_cycle_text(text, compact)
        else:
            cycles = [tuple(c) for c in text]
        points = [x for cyc in cycles for x in cyc]
        if len(points) != len(set(points)):
            raise ValueError(f"repeated point in {text!r}")
        if n is None:
            n = max(points, default=0)
        if any(x < 1 or x > n for x in points):
            raise ValueError(f"cycle entries must lie in 1..{n}")
        images = list(range(1, n + 1))
        for cyc in cycles:
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                images[a - 1] = b
        return cls(tuple(images))

    def __call__(self, x: int) -> int:
        return self.images[x - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        if other.n != self.n:
            raise ValueError("degree mismatch")
        g = self.images
        return Permutation(tuple(g[x - 1] for x in other.images))

    def inverse(self) -> Permutation:
        inv = [0] * self.n
        for i, x in enumerate(self.images, start=1):
            inv[x - 1] = i
        return Permutation(tuple(inv))

    def __pow__(self, e: int) -> Permutation:
        base = self if e >= 0 else self.inverse()
        e = abs(e)
        result = Permutation.identity(self.n)
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def conjugate(self, by: Permutation) -> Permutation:
        """by * self * by^-1."""
        return by * self * by.inverse()

    def cycles(self, include_fixed: bool = True) -> list[tuple[int, ...]]:
        seen = set()
        out = []
        for start in range(1, self.n + 1):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            x = self(start)
            while x != start:
                cyc.append(x)
                seen.add(x)
                x = self(x)
            if include_fixed or len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def order(self) -> int:
        return math.lcm(*cycle_type(self))

    def is_identity(self) -> bool:
        return self.images == tuple(range(1, self.n + 1))

    def fixed_points(self) -> list[int]:
        return [i for i, x in enumerate(self.images, start=1) if i == x]

    def __str__(self) -> str:
        cyc = self.cycles(include_fixed=False)
        if not cyc:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cyc)

    def __repr__(self) -> str:
        return f"Permutation({list(self.images)})"


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def _parse_cycle_text(text: str, compact: bool) -> list[tuple[int, ...]]:
    stripped = text.strip()
    if stripped in ("", "()", "e", "id"):
        return []
    if re.sub(_CYCLE_RE, "", stripped).strip():
        raise ValueError(f"malformed cycle notation: {text!r}")
    cycles = []
    for body in _CYCLE_RE.findall(stripped):
        body = body.strip()
        if not body:
            continue
        if compact:
            if not body.isdigit():
                raise ValueError(f"compact cycles must be digit strings: {body!r}")
            cyc = tuple(10 if ch == "0" else int(ch) for ch in body)
        else:
            tokens = [t for t in re.split(r"[\s,]+", body) if t]
            if not all(t.isdigit() for t in tokens):
                raise ValueError(f"malformed cycle: ({body})")
            cyc = tuple(int(t) for t in tokens)
        cycles.append(cyc)
    return cycles


def cycle_type(g: Permutation) -> CycleType:
    """Multiset of cycle lengths, nonincreasing."""
    return tuple(sorted((len(c) for c in g.cycles()), reverse=True))


def _multiplicities(mu: Sequence[int]) -> Counter:
    return Counter(mu)


def centralizer_size(mu: Sequence[int]) -> int:
    """
    Size of the centraliser in S_n of a permutation of cycle type ``mu``.

    >>> centralizer_size((2, 2, 1))
    8
    """
    size = 1
    for part, mult in _multiplicities(mu).items():
        size *= part ** mult * math.factorial(mult)
    return size


def class_size(mu: Sequence[int]) -> int:
    return math.factorial(sum(mu)) // centralizer_size(mu)


def partitions(n: int, max_part: int | None = None) -> Iterator[CycleType]:
    """Partitions of n in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def permutation_of_type(mu: Sequence[int]) -> Permutation:
    """The permutation (1 .. mu_1)(mu_1+1 .. mu_1+mu_2)... of cycle type ``mu``."""
    cycles, start = [], 1
    for part in mu:
        cycles.append(tuple(range(start, start + part)))
        start += part
    return Permutation.from_cycles(cycles, sum(mu))


# --------------------------------------------------------------------------
# the normaliser of C
# --------------------------------------------------------------------------

def _mod_rep(x: int, n: int) -> int:
    # residue in {1..n}
    return (x - 1) % n + 1


def rotation(n: int, j: int = 1) -> Permutation:
    """c^j where c = (1 2 ... n)."""
    return Permutation(tuple(_mod_rep(x + j, n) for x in range(1, n + 1)))


def reflection(n: int) -> Permutation:
    """The reflection tau_0 fixing n and sending i to n - i."""
    return Permutation(tuple(_mod_rep(n - x, n) for x in range(1, n + 1)))


@dataclasses.dataclass(frozen=True)
class AffineMap:
    """x -> d x + r (mod n), d a unit."""
    n: int
    d: int
    r: int

    def __post_init__(self):
        if math.gcd(self.d, self.n) != 1:
            raise ValueError(f"d={self.d} is not a unit mod {self.n}")
        object.__setattr__(self, "d", self.d % self.n)
        object.__setattr__(self, "r", self.r % self.n)

    def __call__(self, x: int) -> int:
        return _mod_rep(self.d * x + self.r, self.n)

    def to_permutation(self) -> Permutation:
        return Permutation(tuple(self(x) for x in range(1, self.n + 1)))

    @classmethod
    def from_permutation(cls, tau: Permutation) -> AffineMap:
        """Raises ValueError unless tau normalises C."""
        n = tau.n
        r = tau(n) % n
        d = (tau(1) - r) % n
        if math.gcd(d, n) != 1:
            raise ValueError(f"{tau} does not normalise the rotation group")
        aff = cls(n, d, r)
        if aff.to_permutation() != tau:
            raise ValueError(f"{tau} does not normalise the rotation group")
        return aff

    def __mul__(self, other: AffineMap) -> AffineMap:
        return AffineMap(self.n, self.d * other.d, self.d * other.r + self.r)

    def in_rotation_group(self) -> bool:
        return self.d == 1


def _units(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if math.gcd(d, n) == 1]


def normalizer_of_c(n: int) -> list[AffineMap]:
    """
    All n * phi(n) elements of N_{S_n}(C).

    >>> len(normalizer_of_c(7))
    42
    """
    if n < 3:
        raise ValueError("normaliser operations require n >= 3")
    return [AffineMap(n, d, r) for d in _units(n) for r in range(n)]


@dataclasses.dataclass(frozen=True)
class NormalForm:
    d: int
    r_prime: int
    fix_count: int
    fixpoints: tuple[int, ...]
    conjugator: Permutation

    @property
    def canonical(self) -> AffineMap:
        return AffineMap(self.conjugator.n, self.d, self.r_prime)


def affine_normal_form(t: AffineMap) -> NormalForm:
    """
    Conjugate x -> dx + r into x -> dx + r' with r' = r mod gcd(n, d - 1).

    ``fixpoints`` are those of ``t`` itself; ``conjugator`` is the rotation ``g``
    with ``g t g^-1`` equal to the canonical form.
    """
    n, d, r = t.n, t.d, t.r
    z = math.gcd(n, d - 1)
    r_prime = r % z
    fixpoints = tuple(x for x in range(1, n + 1) if ((d - 1) * x + r) % n == 0)
    fix_count = z if r % z == 0 else 0
    # Bezout: a n + b (d - 1) = z, then conjugating by c^(quot * b) shifts r down by quot * z
    _, _, b = _ext_gcd(n, d - 1)
    quot = (r - r_prime) // z
    conj = rotation(n, quot * b)
    return NormalForm(d, r_prime, fix_count, fixpoints, conj)


def _ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    # returns (g, x, y) with a x + b y = g >= 0
    if b == 0:
        return (abs(a), 1 if a >= 0 else -1, 0)
    g, x, y = _ext_gcd(b, a % b)
    return g, y, x - (a // b) * y


def tau_shape(tau: Permutation) -> tuple[int, int, int]:
    """
    Return (m, k, ones) for cycle type (m^k, 1) or (m^k, 1, 1) with m >= 2.

    Raises BadTauShape for any other cycle type.
    """
    mu = cycle_type(tau)
    ones = mu.count(1)
    big = [p for p in mu if p != 1]
    if not big or len(set(big)) != 1 or ones not in (1, 2):
        raise BadTauShape(f"{tau} has cycle type {mu}, not (m^k,1) or (m^k,1,1)")
    return big[0], len(big), ones


def _as_partition(parts: Iterable[int]) -> CycleType:
    return tuple(sorted(parts, reverse=True))


def cycle_type_of_cj_tau(t: AffineMap, j: int) -> CycleType:
    """
    Cycle type of c^j tau for tau of cycle type (m^k, 1, 1), read off from the
    parity of j and the order m, without composing permutations.
    """
    tau = t.to_permutation()
    m, k, ones = tau_shape(tau)
    if ones != 2:
        raise BadTauShape(f"{tau} does not have exactly two fixed points")
    n = t.n
    if j % 2 == 0:
        return _as_partition([m] * k + [1, 1])
    if m == 2:
        ell = next(b for b in range(2, n + 1, 2) if (b // 2) * (t.d + 1) % n == 0)
        return (ell,) * (n // ell)
    if m % 2 == 0:
        return _as_partition([m] * k + [2])
    return _as_partition([2 * m] * (k // 2) + [2])


# --------------------------------------------------------------------------
# subgroups
# --------------------------------------------------------------------------

class SubgroupSpec:
    """
    Subgroup of S_n generated by ``generators``; elements are materialised lazily by
    breadth-first closure, subject to an element budget.
    """

    def __init__(self, n: int, generators: Iterable[Permutation] = (), name: str | None = None,
                 budget: int = DEFAULT_ELEMENT_BUDGET, elements: Iterable[Permutation] | None = None):
        self.n = n
        self.generators = tuple(generators)
        for g in self.generators:
            if g.n != n:
                raise ValueError("generator degree mismatch")
        self.name = name
        self.budget = budget
        self._elements: tuple[tuple[int, ...], ...] | None = None
        if elements is not None:
            self._elements = tuple(sorted(g.images for g in elements))

    def __repr__(self) -> str:
        if self.name:
            return f"SubgroupSpec({self.name}, n={self.n})"
        gens = ", ".join(str(g) for g in self.generators)
        return f"SubgroupSpec(<{gens}>, n={self.n})"

    def _close(self) -> tuple[tuple[int, ...], ...]:
        ident = tuple(range(1, self.n + 1))
        gens = [g.images for g in self.generators if not g.is_identity()]
        seen = {ident}
        queue = deque([ident])
        while queue:
            x = queue.popleft()
            for g in gens:
                y = tuple(x[i - 1] for i in g)
                if y not in seen:
                    seen.add(y)
                    if len(seen) > self.budget:
                        raise BudgetExceeded(
                            f"subgroup {self!r} exceeds the element budget {self.budget}")
                    queue.append(y)
        return tuple(sorted(seen))

    @property
    def element_tuples(self) -> tuple[tuple[int, ...], ...]:
        """Sorted one-line tuples of every element."""
        if self._elements is None:
            self._elements = self._close()
        return self._elements

    @property
    def elements(self) -> list[Permutation]:
        return [Permutation(t) for t in self.element_tuples]

    @property
    def order(self) -> int:
        return len(self.element_tuples)

    def __len__(self) -> int:
        return self.order

    def __contains__(self, g: Permutation) -> bool:
        return g.images in self._element_set

    @property
    def _element_set(self) -> frozenset:
        cached = getattr(self, "_set_cache", None)
        if cached is None:
            cached = frozenset(self.element_tuples)
            self._set_cache = cached
        return cached

    def cycle_type_counts(self) -> Counter:
        """Number of elements of each cycle type."""
        cached = getattr(self, "_ct_cache", None)
        if cached is None:
            cached = Counter(cycle_type(Permutation(t)) for t in self.element_tuples)
            self._ct_cache = cached
        return cached

    def element_of_type(self, mu: Sequence[int]) -> Permutation | None:
        mu = _as_partition(mu)
        for t in self.element_tuples:
            g = Permutation(t)
            if cycle_type(g) == mu:
                return g
        return None

    def avoids(self, mu: Sequence[int]) -> bool:
        return self.cycle_type_counts()[_as_partition(mu)] == 0

    def acts_freely_with_rotations(self) -> bool:
        """True iff C acts freely on S_n/H, i.e. H avoids (l^(n/l)) for all l > 1 dividing n."""
        n = self.n
        return all(self.avoids((ell,) * (n // ell)) for ell in range(2, n + 1) if n % ell == 0)


def symmetric_group(n: int, budget: int = DEFAULT_ELEMENT_BUDGET) -> SubgroupSpec:
    gens = []
    if n >= 2:
        gens = [Permutation.from_cycles([(1, 2)], n), rotation(n)]
    return SubgroupSpec(n, gens, name=f"S{n}", budget=budget)


def young_subgroup(alpha: Sequence[int], budget: int = DEFAULT_ELEMENT_BUDGET) -> SubgroupSpec:
    """S_{alpha_1} x ... x S_{alpha_r}, acting on consecutive blocks of {1..n}."""
    n = sum(alpha)
    gens, start = [], 1
    for a in alpha:
        if a >= 2:
            gens.append(Permutation.from_cycles([(start, start + 1)], n))
            gens.append(Permutation.from_cycles([tuple(range(start, start + a))], n))
        start += a
    name = "S" + "xS".join(str(a) for a in alpha)
    return SubgroupSpec(n, gens, name=name, budget=budget)


def cyclic_subgroup(g: Permutation, name: str | None = None) -> SubgroupSpec:
    return SubgroupSpec(g.n, [g], name=name or f"<{g}>")


def trivial_subgroup(n: int) -> SubgroupSpec:
    return SubgroupSpec(n, [], name="1")


# --------------------------------------------------------------------------
# C-admissibility
# --------------------------------------------------------------------------

@dataclasses.dataclass(frozen=True)
class Admissibility:
    """Truthy verdict plus the avoidance conditions that failed, each with a witness in H."""
    ok: bool
    m: int
    k: int
    violations: tuple[tuple[str, CycleType, Permutation], ...] = ()

    def __bool__(self) -> bool:
        return self.ok


def _valid(mu: Sequence[int], n: int) -> bool:
    return all(p > 0 for p in mu) and sum(mu) == n


def is_c_admissible(tau: Permutation, h: SubgroupSpec) -> Admissibility:
    """
    Check that ``h`` avoids (l^(n/l)) for l > 1 dividing n, (m^k, 2), and
    ((2m)^(k/2), 2) when m is odd, where tau has cycle type (m^k, 1) or (m^k, 1, 1).
    """
    m, k, _ = tau_shape(tau)
    n = tau.n
    forbidden: list[tuple[str, CycleType]] = []
    for ell in range(2, n + 1):
        if n % ell == 0:
            forbidden.append(("free", (ell,) * (n // ell)))
    forbidden.append(("m^k,2", _as_partition([m] * k + [2])))
    if m % 2 == 1 and k % 2 == 0:
        forbidden.append(("(2m)^(k/2),2", _as_partition([2 * m] * (k // 2) + [2])))
    violations = []
    for label, mu in forbidden:
        if _valid(mu, n) and not h.avoids(mu):
            violations.append((label, mu, h.element_of_type(mu)))
    return Admissibility(not violations, m, k, tuple(violations))
