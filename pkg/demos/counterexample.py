"""
When the avoidance conditions fail
==================================

A subgroup H of S_10 and a normaliser element tau of order 4 for which tau does
not sieve the rotation orbits C \\ S_10 / H.  Enumerates 907 200 cosets (a few seconds).
"""
from cycsieve import check_technical_csp, technical_conditions
from cycsieve.corpus import counterexample_pair
from cycsieve.symmgrp import AffineMap, cycle_type

tau, h = counterexample_pair()
print("tau =", tau, " cycle type", cycle_type(tau))
print("as an affine map:", AffineMap.from_permutation(tau))
print("H =", repr(h), " |H| =", h.order)

# H is generated by an element of type (4,4,2).  With m = 4 that is the type (m^k, 2),
# one of the shapes H must avoid.
cond = technical_conditions(tau, h)
print("conditions hold:", cond.holds)
for label, mu in cond.violations:
    print("  H contains cycle type", mu, f"[{label}]")

# Rotation still acts freely, so Y(q) = X(q)/[10]_q is a polynomial, but its values at
# +-i disagree with the fixed-point counts of tau and tau^3.
report = check_technical_csp(tau, h)
print("Y(q) =", report.polynomial)
for row in report.rows:
    mark = "ok" if row.ok else "MISMATCH"
    print(f"  b={row.b}: |Fix(tau^b)| = {row.fix:6d}   Y(i^b) = {row.value}   {mark}")
print("sieving holds:", report.verdict)
