"""Picard, Neron-Severi and Chow presentations of groups and quotients."""

from fractions import Fraction

import pytest

import helpers as z
from chevalley_chow.chow import (
    chow_presentation,
    homogeneous_ns,
    homogeneous_picard,
    homogeneous_rational_chow,
    ns_group,
    picard_group,
    rational_chow,
)
from chevalley_chow.descriptors import derived_attributes
from chevalley_chow.errors import ModeUnsupported
from chevalley_chow.lattice import FGAbelianGroup, IntMatrix
from chevalley_chow.structure import albanese_split_test

M = IntMatrix


def test_picard_product_sl2():
    p = picard_group(z.product_sl2)
    assert p.ns == FGAbelianGroup(1)
    assert p.pic0.quotient_by.is_trivial
    assert p.presentation.x_g.nrows == 0
    assert p.pic0.describe() == "Pic0(A_1)"


def test_picard_product_pgl2():
    p = picard_group(z.product_pgl2)
    assert p.ns == FGAbelianGroup(1, (2,))  # NS(A) + Pic(PGL2)


def test_picard_semiabelian():
    p = picard_group(z.semiab)
    assert p.ns == FGAbelianGroup(1)
    assert p.pic0.quotient_by == FGAbelianGroup(1)
    assert p.presentation.x_g.nrows == 0
    assert "Pic0(A_1) / <1 generators" in p.pic0.describe()


def test_picard_cover_torsion():
    p = picard_group(z.cover_torsion)
    assert p.ns == FGAbelianGroup(1, (2,))
    assert p.pic0.quotient_by == FGAbelianGroup(1, (2,))
    assert p.presentation.x_g == M(((0, 0, 2),))
    assert ns_group(z.cover_torsion) == FGAbelianGroup(1, (2,))


def test_ns_decomposes_as_direct_sum(any_group):
    p = picard_group(any_group)
    assert p.ns.rank == any_group.av.ns.rank
    assert p.ns == any_group.av.ns.direct_sum(
        chow_presentation(any_group, 1).degree1_concrete)
    assert p.ns == ns_group(any_group)


def test_character_rank_bookkeeping(any_group):
    att = derived_attributes(any_group)
    p = picard_group(any_group)
    assert p.presentation.x_g.nrows == att.x_gaff.nrows - att.rank_im_gamma
    if albanese_split_test(any_group).answer == "yes":
        assert p.pic0.quotient_by.is_trivial


def test_chow_presentation_product_sl2():
    c = chow_presentation(z.product_sl2, 3)
    assert c.mode == "integral"
    assert c.concrete_factor.dims == (1, 1, 0, 0)
    assert len(c.ideal_degree1) == 1
    formal, exp = c.ideal_degree1[0]
    assert formal == () and exp.codegree == 1 and exp.terms == {1: Fraction(1)}
    assert c.degree1_concrete.is_trivial
    assert c.abelian_factor() == "A*(A_1)"


def test_chow_presentation_semiabelian():
    c = chow_presentation(z.semiab, 2)
    assert c.concrete_factor.dims == (1, 0, 0)
    assert len(c.ideal_degree1) == 1
    formal, exp = c.ideal_degree1[0]
    assert formal == (1,) and exp.is_zero


def test_chow_presentation_pgl2_torsion():
    c = chow_presentation(z.product_pgl2, 2)
    assert c.degree1_concrete == FGAbelianGroup(0, (2,))


def test_rational_chow_degree_bound(any_group):
    r = rational_chow(any_group, any_group.av.g + 1)
    assert r.mode == "rational"
    assert r.degree_bound == any_group.av.g
    assert all(d == 0 for d in r.concrete_factor.dims[1:])
    assert r.concrete_factor.dims[0] == 1


def test_rational_chow_values():
    r = rational_chow(z.product_sl2, 3)
    assert r.j_rank == 0 and r.degree_bound == 1 and r.ideal_degree1 == ()
    r = rational_chow(z.semiab, 2)
    assert r.j_rank == 1 and len(r.ideal_degree1) == 1
    assert r.ideal_degree1[0][0] == (1,) and r.ideal_degree1[0][1].is_zero
    assert r.abelian_factor() == "A*(A_1)_Q"
    r = rational_chow(z.sl2_affine, 2)
    assert r.degree_bound == 0 and r.abelian_g == 0 and r.j_rank == 0
    r = rational_chow(z.cover_torsion, 2)
    assert r.j_rank == 1 and len(r.ideal_degree1) == 1


def test_homogeneous_chow_torus_in_sl2():
    h = homogeneous_rational_chow(z.sl2_affine, z.t_sl2, 3)
    assert h.concrete_factor.dims == (1, 1, 0, 0)
    assert h.j_rank == 0


def test_homogeneous_chow_translation_components():
    # order-2 translation component group kills every concrete class
    h = homogeneous_rational_chow(z.product_sl2, z.nlt, 4)
    assert h.concrete_factor.dims == (1, 0, 0, 0, 0)
    assert h.j_rank == 0 and h.abelian_g == 1


def test_homogeneous_chow_borel():
    h = homogeneous_rational_chow(z.product_sl2, z.borel, 3)
    assert h.concrete_factor.dims == (1, 1, 0, 0)
    assert h.j_rank == 0
    h = homogeneous_rational_chow(z.product_sl3, z.borel_sl3, 4)
    assert h.concrete_factor.dims == (1, 2, 2, 1, 0)
    assert h.j_rank == 0


def test_homogeneous_chow_trivial_subgroup():
    h = homogeneous_rational_chow(z.semiab, z.trivial1, 2)
    assert h.concrete_factor.dims == (1, 0, 0) and h.j_rank == 1
    h = homogeneous_rational_chow(z.semiab, z.full_t, 2)
    assert h.concrete_factor.dims == (1, 0, 0) and h.j_rank == 0


def test_homogeneous_chow_refuses_g_ant():
    with pytest.raises(ModeUnsupported):
        homogeneous_rational_chow(z.semiab, z.g_ant_sub, 2)


def test_homogeneous_picard_nlt():
    hp = homogeneous_picard(z.product_sl2, z.nlt)
    assert hp.mode == "rational"
    assert hp.ns_part == FGAbelianGroup(1) and hp.x_part.is_trivial
    assert hp.ns == FGAbelianGroup(1)
    assert hp.x_gh.nrows == 0
    with pytest.raises(ModeUnsupported):
        homogeneous_picard(z.product_sl2, z.nlt, integral=True)


def test_homogeneous_picard_integral_cases():
    hp = homogeneous_picard(z.sl2_affine, z.t_sl2)
    assert hp.mode == "integral"
    assert hp.ns == FGAbelianGroup(1)
    assert hp.ns_part.is_trivial and hp.x_part == FGAbelianGroup(1)
    hp = homogeneous_picard(z.product_sl2, z.borel)
    assert hp.mode == "integral"
    assert hp.ns == FGAbelianGroup(2)  # NS(A) + Pic(P^1)
    assert hp.tail.is_trivial
    assert hp.x_gh.nrows == 0


def test_homogeneous_picard_torsion_x_part():
    from chevalley_chow.descriptors import SubgroupDescriptor, validate_subgroup

    # H = quotient torus along chi1 + chi2 in GL2: X(G_aff) = Z(1,1) restricts
    # onto 2 X(H), so the character part of Pic(G/H) picks up a Z/2
    diag = SubgroupDescriptor("diag", M(((1, 1),)))
    assert validate_subgroup(z.gl2c, diag).ok
    hp = homogeneous_picard(z.gl2c, diag)
    assert hp.mode == "integral"
    assert hp.x_part == FGAbelianGroup(0, (2,))
    assert hp.ns == FGAbelianGroup(1, (2,))


def test_homogeneous_ns():
    n = homogeneous_ns(z.product_sl2, z.t_sl2)
    assert n.mode == "integral" and n.group == FGAbelianGroup(2)
    n = homogeneous_ns(z.product_sl2, z.nlt)
    assert n.mode == "rational" and n.group == FGAbelianGroup(1)
    assert n.pic0.quotient_by.is_trivial
    n = homogeneous_ns(z.semiab, z.full_t)
    assert n.mode == "integral" and n.group == FGAbelianGroup(1)
    n = homogeneous_ns(z.product_pgl2, z.t_sl2)  # PGL2 is not factorial
    assert n.mode == "rational" and n.group == FGAbelianGroup(2)
