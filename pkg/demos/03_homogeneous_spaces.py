"""
Homogeneous spaces: Chow rings and when integral Pic makes sense
================================================================

The key example: G = SL2 x E acting on itself twisted by the order-2
component group whose generator acts by inversion on SL2 and by a
translation on E.  The quotient G/H is a smooth projective surface whose
Picard group is only computable rationally, and the machinery says so.
"""

from chevalley_chow.formats import parse_descriptor
from chevalley_chow.chow import (
    ModeUnsupported,
    homogeneous_picard,
    homogeneous_rational_chow,
)

doc = parse_descriptor(open("fixtures/product_sl2.json", "rb").read())
g = doc.group

# H = nlt: trivial identity component, order-2 component group with a
# translation part.  G/H is complete but the torsor is not linearizable.
h = doc.subgroup("nlt")

chow = homogeneous_rational_chow(g, h, 2)
print("A*(G/H)_Q concrete dims:", chow.concrete_factor.dims)
print("abelian factor:", chow.abelian_factor())
print("independent formal generators:", chow.j_rank)

pic = homogeneous_picard(g, h)
print("mode:", pic.mode)
print("Pic(G/H)_Q rank:", pic.ns.rank, " X-part:", pic.x_part.describe())

# asking for the integral answer is refused, with the reason
try:
    homogeneous_picard(g, h, integral=True)
except ModeUnsupported as e:
    print("integral mode refused:", e)

# contrast: H = B (a Borel with the anti-affine flag) is integral and
# G/B fibers over E with flag fibers
b = doc.subgroup("borel")
pic_b = homogeneous_picard(g, b, integral=True)
print("Pic(G/B) =", pic_b.ns.describe(), "mode:", pic_b.mode)
chow_b = homogeneous_rational_chow(g, b, 3)
print("A*(G/B)_Q concrete dims:", chow_b.concrete_factor.dims)
