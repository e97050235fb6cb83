"""Shared test data: root data, descriptors and subgroups used across the suite."""

from __future__ import annotations

import pathlib

from chevalley_chow.descriptors import (
    AbelianVarietyData,
    AntiAffineGluing,
    GroupDescriptor,
    SubgroupDescriptor,
)
from chevalley_chow.lattice import FGAbelianGroup, IntMatrix, Presentation
from chevalley_chow.rootdata import RootDatum

FIXTURE_DIR = pathlib.Path(__file__).resolve().parent.parent / "fixtures"
FIXTURE_NAMES = (
    "product_sl2", "product_pgl2", "semiabelian", "cover_torsion",
    "sl2_affine", "gl2_center", "sl2_torus_d",
)


def fixture_bytes(name: str) -> bytes:
    return (FIXTURE_DIR / f"{name}.json").read_bytes()


# root data (X(T) coordinates chosen per classical model)
sl2 = RootDatum(1, IntMatrix(((2,),)), IntMatrix(((1,),)))
pgl2 = RootDatum(1, IntMatrix(((1,),)), IntMatrix(((2,),)))
gl2 = RootDatum(2, IntMatrix(((1, -1),)), IntMatrix(((1, -1),)))
torus1 = RootDatum(1, IntMatrix((), 1), IntMatrix((), 1))
torus2 = RootDatum(2, IntMatrix((), 2), IntMatrix((), 2))
sl2_sl2 = RootDatum(2, IntMatrix(((2, 0), (0, 2))), IntMatrix(((1, 0), (0, 1))))
sl3 = RootDatum(2, IntMatrix(((2, -1), (-1, 2))), IntMatrix(((1, 0), (0, 1))))
pgl3 = RootDatum(2, IntMatrix(((1, 0), (0, 1))), IntMatrix(((2, -1), (-1, 2))))
sp4 = RootDatum(2, IntMatrix(((1, -1), (0, 2))), IntMatrix(((1, -1), (0, 1))))
so5 = RootDatum(2, IntMatrix(((1, -1), (0, 1))), IntMatrix(((1, -1), (0, 2))))
sl4 = RootDatum(3, IntMatrix(((2, -1, 0), (-1, 2, -1), (0, -1, 2))), IntMatrix.identity(3))
g2 = RootDatum(2, IntMatrix(((1, 0), (0, 1))), IntMatrix(((2, -3), (-1, 2))))
rank3 = RootDatum(3, IntMatrix(((1, 0, 0),)), IntMatrix(((2, 0, 0),)))
sl2xt = RootDatum(2, IntMatrix(((2, 0),)), IntMatrix(((1, 0),)))

RANK_LE2 = {
    "sl2": sl2, "pgl2": pgl2, "gl2": gl2, "sl2_sl2": sl2_sl2,
    "sl3": sl3, "pgl3": pgl3, "sp4": sp4, "so5": so5, "g2": g2,
}


def no_d(rank: int) -> AntiAffineGluing:
    return AntiAffineGluing(Presentation.free(0), IntMatrix((), rank), IntMatrix((), 0))


A1_AV = AbelianVarietyData(1, FGAbelianGroup(1))
POINT = AbelianVarietyData(0, FGAbelianGroup(0))

product_sl2 = GroupDescriptor("product_sl2", sl2, A1_AV, no_d(1))
product_pgl2 = GroupDescriptor("product_pgl2", pgl2, A1_AV, no_d(1))
semiab = GroupDescriptor(
    "semiabelian", torus1, A1_AV,
    AntiAffineGluing(Presentation.free(1), IntMatrix(((1,),)), IntMatrix((), 1)))
gl2c = GroupDescriptor(
    "gl2_center", gl2, A1_AV,
    AntiAffineGluing(Presentation.free(1), IntMatrix(((1, 1),)), IntMatrix((), 1)))
cover_torsion = GroupDescriptor(
    "cover_torsion", rank3, A1_AV,
    AntiAffineGluing(Presentation(2, IntMatrix(((0, 2),))),
                     IntMatrix(((0, 1, 0), (0, 0, 1))), IntMatrix((), 2)))
sl2_affine = GroupDescriptor("sl2_affine", sl2, POINT, no_d(1))
sl2t_d = GroupDescriptor(
    "sl2_torus_d", sl2xt, A1_AV,
    AntiAffineGluing(Presentation.free(1), IntMatrix(((0, 1),)), IntMatrix((), 1)))
product_sl3 = GroupDescriptor("product_sl3", sl3, A1_AV, no_d(2))

ALL_GROUPS = (product_sl2, product_pgl2, semiab, gl2c, cover_torsion,
              sl2_affine, sl2t_d, product_sl3)

# subgroups of rank-1 ambient groups
t_sl2 = SubgroupDescriptor("torus", IntMatrix.identity(1))
borel = SubgroupDescriptor("borel", IntMatrix.identity(1), ((0, 1),),
                           ant_contains_gantaff=True)
neg_borel = SubgroupDescriptor("bminus", IntMatrix.identity(1), ((0, -1),),
                               ant_contains_gantaff=True)
nlt = SubgroupDescriptor("nlt", IntMatrix.identity(1), (),
                         component_generators=(IntMatrix(((-1,),)),),
                         translations=(True,), ant_contains_gantaff=True)
full_aff = SubgroupDescriptor("full", IntMatrix.identity(1), ((0, 1), (0, -1)))
full_aff_ant = SubgroupDescriptor("gaff", IntMatrix.identity(1), ((0, 1), (0, -1)),
                                  ant_contains_gantaff=True)
t_ant = SubgroupDescriptor("torus_ant", IntMatrix.identity(1),
                           ant_contains_gantaff=True)
g_ant_sub = SubgroupDescriptor("ant", IntMatrix.identity(1),
                               contains_G_ant=True, ant_contains_gantaff=True)
trivial1 = SubgroupDescriptor("trivial", IntMatrix((), 1))
trivial2 = SubgroupDescriptor("trivial", IntMatrix((), 2))
trivial3 = SubgroupDescriptor("trivial", IntMatrix((), 3))
TRIVIAL_BY_RANK = {1: trivial1, 2: trivial2, 3: trivial3}
full_t = SubgroupDescriptor("gaff", IntMatrix.identity(1))

# borel of SL3 x A: positive roots of A2 are indexed 0, 1 (simples) and 2
borel_sl3 = SubgroupDescriptor("borel", IntMatrix.identity(2),
                               ((0, 1), (1, 1), (2, 1)),
                               ant_contains_gantaff=True)
