"""
Schubert calculus on flag varieties
===================================

Multiply Schubert classes two independent ways (Chevalley's rule against
reduction in the coinvariant algebra) and inspect the graded dimensions.
"""

from chevalley_chow import (
    IntMatrix,
    RootDatum,
    chevalley_multiply,
    codegree_histogram,
    expand_in_schubert_basis,
    linear_poly,
    poly_mul,
    schubert_product,
    schubert_representatives,
    weyl_group,
)

# the full flag variety of SL3: Weyl group S3, six Schubert cells
sl3 = RootDatum(2, IntMatrix(((2, -1), (-1, 2))), IntMatrix.identity(2))
w = weyl_group(sl3)
print("Weyl order:", len(w))
print("cells per codegree:", codegree_histogram(sl3))

# Monk's rule: the two divisor classes multiply to the two length-2 cells
prod = schubert_product(sl3, 1, 2)
print("sigma_1 . sigma_2 =", prod.integral_terms())

# the same product through polynomial representatives mod the ideal
reps = schubert_representatives(sl3)
poly = poly_mul(reps[1], reps[2])
print("via coinvariants  =", expand_in_schubert_basis(sl3, poly, 2).integral_terms())

# Chevalley's formula for a fundamental weight against every cell
for idx in range(len(w)):
    exp = chevalley_multiply(sl3, (1, 0), idx)
    print(f"omega_1 . sigma_{idx} ->", exp.integral_terms())

# B2 and G2 work the same way; structure constants stay nonnegative
g2 = RootDatum(2, IntMatrix.identity(2), IntMatrix(((2, -3), (-1, 2))))
print("G2 cells per codegree:", codegree_histogram(g2))
top = schubert_product(g2, 1, 2)
print("G2 sigma_1 . sigma_2 =", top.integral_terms())
