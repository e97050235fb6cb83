"""
Picard and Neron-Severi groups of a product group
=================================================

Build SL2 x E for an elliptic curve E directly from finite data and read
off Pic, NS, and the character bookkeeping behind them.
"""

from chevalley_chow import (
    AbelianVarietyData,
    AntiAffineGluing,
    FGAbelianGroup,
    GroupDescriptor,
    IntMatrix,
    Presentation,
    RootDatum,
    ns_group,
    picard_group,
    validate_group,
)

# SL2: one simple root 2 in X(T) = Z, one simple coroot 1 in the dual
sl2 = RootDatum(1, IntMatrix(((2,),)), IntMatrix(((1,),)))

# an elliptic curve carries g = 1 and NS = Z
curve = AbelianVarietyData(1, FGAbelianGroup(1))

# a product has no anti-affine gluing: X(D) = 0
no_gluing = AntiAffineGluing(Presentation.free(0), IntMatrix((), 1), IntMatrix((), 0))

g = GroupDescriptor("sl2 x E", sl2, curve, no_gluing)
print("valid:", validate_group(g).ok)

# Pic splits into NS and a formal divisible part Pic0(A)/im(gamma)
report = picard_group(g)
print("NS(G)  =", report.ns.describe())
print("Pic0   =", report.pic0)
print("X(G)   =", report.presentation.x_g_group.describe())

# the same NS through the one-liner
print("ns_group =", ns_group(g).describe())

# swap SL2 for PGL2 and torsion appears: Pic(PGL2) = Z/2
pgl2 = RootDatum(1, IntMatrix(((1,),)), IntMatrix(((2,),)))
g2 = GroupDescriptor("pgl2 x E", pgl2, curve, no_gluing)
print("NS(PGL2 x E) =", picard_group(g2).ns.describe())
