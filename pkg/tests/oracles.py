"""
Independent brute-force oracles.  None of these call into the library's fast paths;
they recount everything from first principles on small inputs.
"""
from __future__ import annotations

import cmath
import itertools
import math
from collections import Counter
from fractions import Fraction


def multiset_words(alpha):
    letters = [i for i, a in enumerate(alpha) for _ in range(a)]
    return sorted(set(itertools.permutations(letters)))


def inversion_generating_function(alpha) -> list[int]:
    """sum over words of content alpha of q^inv(w); classically equals [n; alpha]_q."""
    counts = Counter()
    for w in multiset_words(alpha):
        inv = sum(1 for i in range(len(w)) for j in range(i + 1, len(w)) if w[i] > w[j])
        counts[inv] += 1
    top = max(counts)
    return [counts[i] for i in range(top + 1)]


def rotate(w, j=1):
    j %= len(w)
    return w[-j:] + w[:-j] if j else w


def burnside_necklaces(alpha) -> int:
    """Necklace count by Burnside: (1/n) sum_j #words fixed by rotation by j."""
    words = multiset_words(alpha)
    n = sum(alpha)
    return sum(sum(1 for w in words if rotate(w, j) == w) for j in range(n)) // n


def necklace_classes(alpha):
    words = multiset_words(alpha)
    seen, classes = set(), []
    for w in words:
        if w in seen:
            continue
        orbit = {rotate(w, j) for j in range(len(w))}
        seen |= orbit
        classes.append(frozenset(orbit))
    return classes


def reflect_word(w):
    # position i -> n - i (position n fixed), positions 1-based
    n = len(w)
    out = [None] * n
    for i in range(1, n + 1):
        out[(n - i - 1) % n] = w[i - 1]
    return tuple(out)


def bracelet_counts(alpha):
    classes = necklace_classes(alpha)
    index = {w: i for i, cls in enumerate(classes) for w in cls}
    image = [index[reflect_word(next(iter(cls)))] for cls in classes]
    fixed = sum(1 for i, j in enumerate(image) if i == j)
    asym = (len(classes) - fixed) // 2
    return fixed + asym, asym, fixed


def compose(g, h):
    """(g h)(x) = g(h(x)), one-line tuples over 1..n."""
    return tuple(g[h[x] - 1] for x in range(len(g)))


def inverse(g):
    out = [0] * len(g)
    for i, x in enumerate(g, start=1):
        out[x - 1] = i
    return tuple(out)


def brute_normalizer(n: int) -> set[tuple[int, ...]]:
    c = tuple(x % n + 1 for x in range(1, n + 1))
    cgroup = set()
    p = tuple(range(1, n + 1))
    for _ in range(n):
        cgroup.add(p)
        p = compose(c, p)
    out = set()
    for g in itertools.permutations(range(1, n + 1)):
        if compose(compose(g, c), inverse(g)) in cgroup:
            out.add(g)
    return out


def brute_centralizer_size(g) -> int:
    n = len(g)
    return sum(1 for s in itertools.permutations(range(1, n + 1)) if compose(s, g) == compose(g, s))


def cycle_lengths(g) -> tuple[int, ...]:
    n, seen, out = len(g), set(), []
    for s in range(1, n + 1):
        if s in seen:
            continue
        ell, x = 0, s
        while x not in seen:
            seen.add(x)
            x = g[x - 1]
            ell += 1
        out.append(ell)
    return tuple(sorted(out, reverse=True))


def group_closure(gens, n):
    ident = tuple(range(1, n + 1))
    seen, frontier = {ident}, [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = compose(g, x)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return seen


def monomial_invariant_dims(group, n: int, max_degree: int) -> list[int]:
    """Dimension of degree-d invariants = number of orbits of the group on degree-d monomials."""
    dims = []
    for d in range(max_degree + 1):
        monos = [e for e in itertools.product(range(d + 1), repeat=n) if sum(e) == d]
        seen, orbits = set(), 0
        for e in monos:
            if e in seen:
                continue
            orbits += 1
            for g in group:
                # variable i moves to g(i)
                moved = [0] * n
                for i in range(n):
                    moved[g[i] - 1] = e[i]
                seen.add(tuple(moved))
        dims.append(orbits)
    return dims


def left_cosets(group, n: int):
    """Map from each permutation to a frozenset label of its left coset gH."""
    label = {}
    for g in itertools.permutations(range(1, n + 1)):
        if g in label:
            continue
        coset = frozenset(compose(g, h) for h in group)
        for x in coset:
            label[x] = coset
    return label


def coset_fix_count(group, n: int, gamma) -> int:
    label = left_cosets(group, n)
    cosets = set(label.values())
    return sum(1 for cs in cosets if label[compose(gamma, next(iter(cs)))] == cs)


def complex_eval(coeffs, m: int, b: int) -> complex:
    z = cmath.exp(2j * math.pi * b / m)
    return sum(c * z ** i for i, c in enumerate(coeffs))


def all_set_partitions(n: int):
    if n == 0:
        yield []
        return
    for part in all_set_partitions(n - 1):
        for i in range(len(part)):
            yield part[:i] + [part[i] + [n]] + part[i + 1:]
        yield part + [[n]]


def crosses(a, b) -> bool:
    return any(i < j < p < q or j < i < q < p
               for i, p in itertools.combinations(sorted(a), 2)
               for j, q in itertools.combinations(sorted(b), 2))


def brute_noncrossing(n: int, k: int) -> list:
    out = []
    for part in all_set_partitions(n):
        if len(part) != k:
            continue
        if not any(crosses(a, b) for a, b in itertools.combinations(part, 2)):
            out.append(part)
    return out


def class_weighted_character_sum(values: dict, n: int) -> Fraction:
    """(1/n!) sum over S_n of f(cycle type) for a class function given on cycle types."""
    total = Fraction(0)
    for g in itertools.permutations(range(1, n + 1)):
        total += values[cycle_lengths(g)]
    return total / math.factorial(n)
