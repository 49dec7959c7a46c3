"""
Reflection acting on rotation classes of noncrossing partitions
===============================================================

Noncrossing partitions of a 5-gon with 2 blocks, their rotation classes, and the
reflection i -> 5 - i acting on those classes.
"""
from cycsieve import check_nc_secondary
from cycsieve.csp import noncrossing_partitions

for x in noncrossing_partitions(5, 2):
    print("  ", x)

bundle = check_nc_secondary(5, 2)
print("X_2(q) =", bundle.primary.polynomial, "  rotation sieving:", bundle.primary.verdict)
print("reflection-fixed partitions:", bundle.ding[0], " X_2(-1) =", bundle.ding[1])
print("reflection-fixed rotation classes:", bundle.fixed_equal[0])
print("Y_2(q) =", bundle.y_polynomial, "  sieving on classes:", bundle.secondary.verdict)

# Two ways to count: enumeration and the q-formula at q = 1 agree; the binomial
# expression C(n,k)C(n,k+1)/n counts something else.
print(bundle.narayana)
