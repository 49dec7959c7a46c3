"""
Rational q-Schroder polynomials from hook products
===================================================

The graded multiplicity of an S_a-irreducible in S(V*) (x) wedge(V) has a hook-product
closed form.  Specialising t = -q^b and adding two hook shapes recovers C(k, a-k, b-k; q).
"""
import math

from cycsieve import (
    c_alpha, is_palindromic, is_parity_unimodal, isotypic_hilbert, molchanov_series,
    rational_q_schroder,
)
from cycsieve.cherednik import graded_multiplicity_oracle

# The bivariate series for lambda = (2, 1), compared with a character-table computation.
series = molchanov_series((2, 1), 8)
oracle = graded_multiplicity_oracle((2, 1), 8)
for j in range(series.t_degree + 1):
    print(f"t^{j}:", series.t_row(j))
print("matches Murnaghan-Nakayama oracle:", series == oracle)

# At t = -q^4 the (3)-isotypic part becomes a polynomial: the (3,4) necklace polynomial.
print("isotypic (3), b = 4:", isotypic_hilbert((3,), 4))

# The full family for a = 3, b = 5.
a, b = 3, 5
for k in range(a + 1):
    p = rational_q_schroder(a, b, k)
    assert p == c_alpha((k, a - k, b - k))
    print(f"k={k}: {p}   palindromic={is_palindromic(p)}  "
          f"parity-unimodal={bool(is_parity_unimodal(p))}")

# A quick sweep: every coprime pair with b <= 12.
triples = [(a, b, k) for b in range(2, 13) for a in range(1, b) if math.gcd(a, b) == 1
           for k in range(a + 1)]
print(len(triples), "triples, all matching:",
      all(rational_q_schroder(*t) == c_alpha((t[2], t[0] - t[2], t[1] - t[2])) for t in triples))
