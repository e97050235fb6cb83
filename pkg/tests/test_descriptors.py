"""Group and subgroup descriptors: validation and derived attributes."""

import pytest

import helpers as z
from chevalley_chow.descriptors import (
    AbelianVarietyData,
    AntiAffineGluing,
    GroupDescriptor,
    SubgroupDescriptor,
    affinization_hom,
    derived_attributes,
    descended_coroot,
    gamma_kernel,
    gamma_kernel_by_intersection,
    restriction_to_subgroup,
    subgroup_characters,
    validate_group,
    validate_subgroup,
)
from chevalley_chow.lattice import FGAbelianGroup, IntMatrix, Presentation

M = IntMatrix


def test_all_zoo_groups_validate(any_group):
    rep = validate_group(any_group)
    assert rep.ok, rep.failed()


def test_product_sl2_attributes():
    att = derived_attributes(z.product_sl2)
    assert (att.dim_G, att.dim_G_aff, att.dim_G_ant, att.dim_Aff_G, att.dim_D) \
        == (4, 3, 1, 3, 0)
    assert att.x_gaff.nrows == 0 and att.ker_gamma.nrows == 0
    assert att.im_gamma.is_trivial and att.rank_im_gamma == 0
    assert att.d_smooth_connected


def test_semiabelian_attributes():
    att = derived_attributes(z.semiab)
    assert (att.dim_G, att.dim_G_aff, att.dim_G_ant, att.dim_D) == (2, 1, 2, 1)
    assert att.dim_Aff_G == 0
    assert att.x_gaff == M.identity(1)
    assert att.ker_gamma.nrows == 0 and att.rank_im_gamma == 1
    assert att.im_gamma == FGAbelianGroup(1)


def test_gl2_center_attributes():
    att = derived_attributes(z.gl2c)
    assert att.x_gaff == M(((1, 1),))
    assert att.ker_gamma.nrows == 0 and att.rank_im_gamma == 1
    u = affinization_hom(z.gl2c)
    assert not u.is_surjective()  # image 2Z inside X(D) = Z
    assert u.cokernel_group() == FGAbelianGroup(0, (2,))


def test_cover_torsion_attributes():
    att = derived_attributes(z.cover_torsion)
    assert att.x_gaff == M(((0, 1, 0), (0, 0, 1)))
    assert att.ker_gamma == M(((0, 0, 2),))
    assert att.rank_im_gamma == 1
    assert att.im_gamma == FGAbelianGroup(1, (2,))
    assert not att.d_smooth_connected
    assert att.xd_group == FGAbelianGroup(1, (2,))


def test_gamma_kernel_two_routes(any_group):
    assert gamma_kernel(any_group) == gamma_kernel_by_intersection(any_group)


def test_group_failure_centrality():
    bad = GroupDescriptor(
        "bad", z.gl2, z.A1_AV,
        AntiAffineGluing(Presentation.free(1), M(((1, 0),)), M((), 1)))
    rep = validate_group(bad)
    assert not rep.ok and rep.failed()[0].name == "centrality-of-D"


def test_group_failure_v_surjectivity():
    bad = GroupDescriptor(
        "bad", z.torus1, z.A1_AV,
        AntiAffineGluing(Presentation.free(1), M(((2,),)), M((), 1)))
    rep = validate_group(bad)
    assert [c.name for c in rep.failed()] == ["v-surjectivity"]


def test_group_failure_anti_affine_over_point():
    bad = GroupDescriptor(
        "bad", z.torus1, z.POINT,
        AntiAffineGluing(Presentation.free(1), M(((1,),)), M((), 1)))
    rep = validate_group(bad)
    assert any(c.name == "no-anti-affine-over-a-point" for c in rep.failed())


def test_group_failure_unipotent_char_p():
    bad = GroupDescriptor(
        "bad", z.torus1, z.A1_AV,
        AntiAffineGluing(Presentation.free(0), M((), 1), M((), 0),
                         unipotent_dim=1, char=3))
    rep = validate_group(bad)
    assert any(c.name == "unipotent-dimension-bound" for c in rep.failed())


def test_group_failure_ns_over_point():
    bad = GroupDescriptor(
        "bad", z.sl2, AbelianVarietyData(0, FGAbelianGroup(1)), z.no_d(1))
    rep = validate_group(bad)
    assert any(c.name == "ns-over-a-point" for c in rep.failed())


def test_group_warning_torsion_rank():
    warn = GroupDescriptor(
        "warn", z.torus1, z.A1_AV,
        AntiAffineGluing(Presentation(3, M(((2, 0, 0), (0, 2, 0), (0, 0, 2)))),
                         M(((1,), (0,), (0,))), M((), 3)))
    rep = validate_group(warn)
    assert any("2-torsion rank 3" in w for w in rep.warnings), rep.warnings


def test_subgroups_validate_on_product_sl2():
    for hd in (z.t_sl2, z.borel, z.nlt, z.full_aff, z.trivial1, z.g_ant_sub):
        rep = validate_subgroup(z.product_sl2, hd)
        assert rep.ok, (hd.name, rep.failed())


def test_subgroup_characters_values():
    # the order-2 translation component has no invariant characters
    assert subgroup_characters(z.product_sl2, z.nlt).nrows == 0
    assert subgroup_characters(z.product_sl2, z.borel) == M.identity(1)
    assert subgroup_characters(z.product_sl2, z.full_aff).nrows == 0
    assert subgroup_characters(z.product_sl2, z.trivial1) == M((), 0)
    assert subgroup_characters(z.product_sl2, z.t_sl2) == M.identity(1)


def test_descended_coroot():
    assert z.full_aff.symmetric_root_indices() == (0,)
    assert descended_coroot(z.product_sl2, z.full_aff, 0) == (1,)
    assert descended_coroot(z.product_sl3, z.borel_sl3, 1) == (1, 0)


def test_restriction_maps():
    r = restriction_to_subgroup(z.product_sl2, z.nlt)
    assert r.matrix.shape == (0, 0) and r.ker_r.nrows == 0
    r = restriction_to_subgroup(z.product_sl2, z.trivial1)
    assert r.x_h.nrows == 0
    r = restriction_to_subgroup(z.semiab, z.full_t)
    assert r.matrix == M.identity(1) and r.ker_r.nrows == 0


def test_subgroup_failure_flags():
    bad = SubgroupDescriptor("bad", M.identity(1), contains_G_ant=True)
    rep = validate_subgroup(z.product_sl2, bad)
    assert any(c.name == "ant-flags-consistent" for c in rep.failed())


def test_subgroup_failure_coroot_descent():
    bad = SubgroupDescriptor("bad", M(((1, 0),)), ((0, 1), (0, -1)))
    rep = validate_subgroup(z.gl2c, bad)
    assert any(c.name == "coroot-descent" for c in rep.failed())


def test_subgroup_failure_component_group_infinite():
    bad = SubgroupDescriptor("bad", M.identity(2), (),
                             component_generators=(M(((1, 1), (0, 1))),),
                             translations=(False,))
    rep = validate_subgroup(z.gl2c, bad)
    assert any(c.name == "component-group-finite" for c in rep.failed())


def test_subgroup_weyl_compatibility():
    swap = SubgroupDescriptor("weyl", M.identity(2), (),
                              component_generators=(M(((0, 1), (1, 0))),),
                              translations=(False,))
    assert validate_subgroup(z.gl2c, swap).ok
    rot = M(((0, -1), (1, 1)))  # order 6: no Weyl element of GL2 acts this way
    bad = SubgroupDescriptor("bad", M.identity(2), (),
                             component_generators=(rot,), translations=(False,))
    rep = validate_subgroup(z.gl2c, bad)
    assert any(c.name == "component-weyl-compatibility" for c in rep.failed())


def test_subgroup_root_index_out_of_range():
    bad = SubgroupDescriptor("bad", M.identity(1), ((7, 1),))
    rep = validate_subgroup(z.product_sl2, bad)
    assert any(c.name == "roots-valid" for c in rep.failed())


def test_descriptor_shape_errors():
    with pytest.raises(ValueError):
        AbelianVarietyData(-1, FGAbelianGroup(0))
    with pytest.raises(ValueError):
        # v must have one row per X(D) generator
        AntiAffineGluing(Presentation.free(2), M(((1,),)), M((), 2))
    with pytest.raises(ValueError):
        # v width is checked against the rank at the descriptor level
        GroupDescriptor("bad", z.sl2, z.A1_AV,
                        AntiAffineGluing(Presentation.free(1), M(((1, 0),)), M((), 1)))
    with pytest.raises(ValueError):
        SubgroupDescriptor("bad", M.identity(1), ((0, 2),))
    with pytest.raises(ValueError):
        SubgroupDescriptor("bad", M.identity(1),
                           component_generators=(M.identity(2),))
