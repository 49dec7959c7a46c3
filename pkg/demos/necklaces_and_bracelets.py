"""
Necklaces, bracelets and the value at q = -1
============================================

Two-coloured necklaces with three beads of colour 1 and four of colour 2.
"""
from cycsieve import (
    WordSpace, bracelet_orbits, c_alpha, check_bracelet_csp, check_csp, enumerate_necklaces,
    q_multinomial, rotation,
)

alpha = (3, 4)

# C(alpha; q) is the q-multinomial divided by [7]_q.  Here it is a polynomial because
# gcd(3, 4) = 1, which is also why rotation acts freely on the 35 words.
poly = c_alpha(alpha)
print("C(alpha; q) =", poly)
print("C(alpha; 1) =", poly(1), " C(alpha; -1) =", poly(-1))

# The necklaces themselves, one least rotation per orbit.
for nk in enumerate_necklaces(alpha):
    print("  ", nk.word)

# Rotation sieves the words with the full q-multinomial: the number of words fixed by
# rotation by b equals [7; 3, 4]_q at the b-th power of a primitive 7th root of unity.
words = WordSpace(alpha)
rot = check_csp(lambda b: words.fix_count(rotation(7, b)), 7, q_multinomial(alpha))
print("rotation sieving on words:", rot.verdict)

# Reflecting a necklace gives a necklace.  Three are their own mirror image, and the
# remaining two are swapped, giving 4 bracelets of which 1 is asymmetric.
counts = bracelet_orbits(alpha)
print("bracelets:", counts.total, " asymmetric:", counts.asymmetric,
      " self-mirror necklaces:", counts.symmetric_necklaces)

# The reflection count is C(alpha; -1), and the bracelet counts are the two averages
# (C(1) + C(-1))/2 and (C(1) - C(-1))/2.
report = check_bracelet_csp(alpha)
print("q = -1 check:", report.verdict, report.conditions["bracelets"])
