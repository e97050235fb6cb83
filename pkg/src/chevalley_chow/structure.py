"""Structural verdicts: splitting, triviality, covers, fibrations, completeness.

Each test certifies a lattice-level criterion that is necessary and
sufficient for the geometric property in the intended model; no geometry
is ever constructed.  Answers are Verdict records naming the criterion
applied, with a witness whenever one exists.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from .descriptors import (
    DEFAULT_CAP,
    AntiAffineGluing,
    GroupDescriptor,
    SubgroupDescriptor,
    affinization_hom,
    derived_attributes,
)
from .lattice import (
    FGAbelianGroup,
    IntMatrix,
    Presentation,
    enumerate_matrix_group,
    hermite_row_basis,
    intersect_rows,
    saturate_rows,
    smith_normal_form,
    solve_integer,
    vstack,
)
from .rootdata import (
    contains_borel,
    factorial_cover_with_basis,
    root_system,
    validate_root_datum,
    weyl_group,
)


@dataclass(frozen=True)
class Verdict:
    answer: str                      # "yes" | "no" | "unknown"
    criterion: str
    witness: Any = None

    def __post_init__(self):
        if self.answer not in ("yes", "no", "unknown"):
            raise ValueError("answer must be yes, no, or unknown")


def albanese_split_test(gd: GroupDescriptor) -> Verdict:
    """Does G -> A split, i.e. is G = A x G_aff?

    Splitting is equivalent to D = G_aff meet G_ant being trivial.  The
    Albanese fibration itself is always Zariski-locally trivial; that fact
    is recorded in the witness rather than recomputed.
    """
    att = derived_attributes(gd)
    split = att.xd_group.is_trivial and gd.gluing.unipotent_dim == 0
    witness = {"albanese_locally_trivial": "yes"}
    if split:
        witness["factors"] = (f"A_{gd.av.g}", validate_root_datum(gd.rd).describe())
        return Verdict("yes", "D = G_aff meet G_ant is trivial, so the extension splits", witness)
    return Verdict("no", f"D is nontrivial (X(D) = {att.xd_group.describe()}, "
                         f"unipotent dim {gd.gluing.unipotent_dim})", witness)


@dataclass(frozen=True)
class AffinizationReport:
    locally_trivial: Verdict
    trivial: Verdict


def affinization_test(gd: GroupDescriptor) -> AffinizationReport:
    """Is the G_ant-torsor G -> Aff(G) (Zariski-locally) trivial?

    Locally trivial iff D is smooth and connected, i.e. X(D) torsion-free
    (plus, away from characteristic 0, no unipotent part).  Trivial iff in
    addition every character of D extends to G_aff, i.e. u is onto X(D).
    """
    att = derived_attributes(gd)
    if att.d_smooth_connected:
        lt = Verdict("yes", "X(D) is torsion-free, so D is smooth and connected",
                     {"xd": att.xd_group.describe()})
    else:
        lt = Verdict("no", f"D is not smooth and connected (X(D) = {att.xd_group.describe()})")
    if lt.answer == "yes" and affinization_hom(gd).is_surjective():
        tv = Verdict("yes", "D is smooth connected and every character of D extends to G_aff",
                     {"u_surjective": "yes"})
    elif lt.answer == "yes":
        tv = Verdict("no", "a character of D does not extend to G_aff (u is not onto X(D))")
    else:
        tv = Verdict("no", "not even locally trivial: D is not smooth and connected")
    return AffinizationReport(lt, tv)


def _free_quotient_projection(relations: IntMatrix, ambient: int) -> IntMatrix:
    """Integer projection Z^ambient -> Z^f with kernel the saturation of the rows."""
    if relations.nrows == 0:
        return IntMatrix.identity(ambient)
    sat = saturate_rows(relations)
    if sat.nrows == 0:
        return IntMatrix.identity(ambient)
    _, _, v = smith_normal_form(sat)
    vt = v.transpose()
    return IntMatrix(vt.rows[sat.nrows:], ambient)


def construct_cover(gd: GroupDescriptor, cap: int = DEFAULT_CAP) -> GroupDescriptor:
    """The quasi-complete cover: factorial affine part, smooth connected D.

    Enlarges X(T) by the weight lattice and replaces X(D) by the image of
    the enlarged lattice under the rational extension of v, with torsion
    discarded.  The output always has a trivial affinization torsor and a
    factorial affine part; applying the construction twice changes nothing.
    """
    rd2, basis_num, denom = factorial_cover_with_basis(gd.rd)
    glue = gd.gluing
    ambient = glue.xd.ngens
    proj = _free_quotient_projection(glue.xd.relations, ambient)
    f = proj.nrows
    # images of the new basis vectors, scaled by denom to stay integral
    scaled_images = [proj.apply(glue.v_matrix.apply(row)) for row in basis_num.rows]
    lattice = hermite_row_basis(IntMatrix(scaled_images, f))
    r = lattice.nrows
    lt = lattice.transpose()
    cols = []
    for img in scaled_images:
        sol = solve_integer(lt, img) if r else ()
        assert sol is not None, "image must lie in the lattice it generates"
        cols.append(tuple(sol))
    v2 = IntMatrix.from_columns(cols, r)
    if glue.sigma_kernel_gens.nrows and r:
        pushed = IntMatrix([proj.apply(k) for k in glue.sigma_kernel_gens.rows], f)
        sat = saturate_rows(pushed)
        meet = intersect_rows(lattice, sat) if sat.nrows else IntMatrix((), f)
        ker2 = IntMatrix([solve_integer(lt, k) for k in meet.rows], r)
    else:
        ker2 = IntMatrix((), r)
    glue2 = AntiAffineGluing(Presentation.free(r), v2, ker2, glue.unipotent_dim, glue.char)
    if rd2 == gd.rd and glue2 == glue:
        return gd
    return GroupDescriptor(f"{gd.name}-cover", rd2, gd.av, glue2)


@dataclass(frozen=True)
class FibrationReport:
    """The G/H -> A/image fibration: its torsor group and automorphism data.

    phi: G/H -> quotient abelian variety is a torsor under K = G_aff H meet
    G_ant.  K contains (G_ant)_aff with finite index; the bound multiplies
    the X(D)-torsion order by the index of the normal closure of the
    non-translating component generators.  dim_aut_ant is the dimension of
    the anti-affine automorphism group G_ant/(G_ant meet H).
    """

    torsor_dim: int
    torsor_xd: FGAbelianGroup
    torsor_unipotent_dim: int
    translation_index_bound: int | None
    index_bound_over_gant_aff: int | None
    dim_aut_ant: int
    note: str = ""


def _matrix_inverse(m: IntMatrix) -> IntMatrix:
    n = m.nrows
    cols = []
    for j in range(n):
        sol = solve_integer(m, tuple(1 if i == j else 0 for i in range(n)))
        assert sol is not None, "matrix must be invertible over Z"
        cols.append(sol)
    return IntMatrix.from_columns(cols, n)


def _translation_index_bound(hd: SubgroupDescriptor, cap: int) -> int:
    """Bound on the order of the image of H in A: the index in H/H0 of the
    normal closure of the generators that do not translate."""
    if not hd.component_generators or not any(hd.translations):
        return 1
    elements = enumerate_matrix_group(hd.component_generators, cap=cap)
    unflagged = [g for g, t in zip(hd.component_generators, hd.translations) if not t]
    if not unflagged:
        return len(elements)
    conj = tuple(e @ u @ _matrix_inverse(e) for e in elements for u in unflagged)
    closure = enumerate_matrix_group(conj, cap=cap)
    return len(elements) // len(closure)


def fibration_report(gd: GroupDescriptor, hd: SubgroupDescriptor, cap: int = DEFAULT_CAP) -> FibrationReport:
    att = derived_attributes(gd)
    if hd.contains_G_ant and att.dim_G_ant > 0:
        return FibrationReport(
            torsor_dim=att.dim_G_ant,
            torsor_xd=att.xd_group,
            torsor_unipotent_dim=gd.gluing.unipotent_dim,
            translation_index_bound=None,
            index_bound_over_gant_aff=None,
            dim_aut_ant=0,
            note="H contains G_ant: the torsor group is G_ant itself and has "
                 "positive-dimensional quotient over (G_ant)_aff",
        )
    tbound = _translation_index_bound(hd, cap)
    return FibrationReport(
        torsor_dim=att.dim_D,
        torsor_xd=att.xd_group,
        torsor_unipotent_dim=gd.gluing.unipotent_dim,
        translation_index_bound=tbound,
        index_bound_over_gant_aff=att.xd_group.torsion_order() * tbound,
        dim_aut_ant=att.dim_G_ant,
        note="torsor group contains D with quotient the (finite) image of H in A",
    )


def phi_local_triviality_test(gd: GroupDescriptor, hd: SubgroupDescriptor) -> Verdict:
    """Is phi: G/H -> A(G/H) Zariski-locally trivial?

    Criterion: D = (G_ant)_aff (X(D) torsion-free) and H lies inside G_aff
    (no translating components).  The hypothesis needs the faithful model,
    so H containing a nontrivial G_ant answers no by failed hypothesis.
    """
    att = derived_attributes(gd)
    if hd.contains_G_ant and att.dim_G_ant > 0:
        return Verdict("no", "criterion requires the faithful model; H contains G_ant")
    torsion_free = not att.xd_group.torsion
    inside = not hd.has_translations
    if torsion_free and inside:
        return Verdict("yes", "X(D) is torsion-free (D = (G_ant)_aff) and H lies in G_aff",
                       {"pi_x_locally_trivial": "yes"})
    reasons = []
    if not torsion_free:
        reasons.append(f"X(D) has torsion ({att.xd_group.describe()})")
    if not inside:
        reasons.append("H has components translating A, so H is not inside G_aff")
    return Verdict("no", "; ".join(reasons))


def _parabolic_witness(gd: GroupDescriptor, hd: SubgroupDescriptor, found, cap: int):
    idx, word = found
    w = weyl_group(gd.rd, cap=cap)
    rs = root_system(gd.rd)
    minv = _matrix_inverse(w.elements[idx])
    transformed = {minv.apply(v) for v in hd.root_vectors(gd.rd)}
    levi = tuple(
        i for i, a in enumerate(gd.rd.simple_roots.rows)
        if tuple(-x for x in a) in transformed
    )
    inside_levi = sum(
        1 for r in rs.positive
        if all(c == 0 for j, c in enumerate(r.coords) if j not in levi)
    )
    return {
        "weyl_word": word,
        "levi_simples": levi,
        "flag_factor_dim": len(rs.positive) - inside_levi,
        "abelian_factor_dim": gd.av.g,
    }


def completeness_test(gd: GroupDescriptor, hd: SubgroupDescriptor, cap: int = DEFAULT_CAP) -> Verdict:
    """Is G/H complete?

    Criterion: H meet G_aff contains a Borel subgroup of G_aff (some Weyl
    translate of the positive system lies in the subgroup roots, with the
    full torus) and H meet G_ant contains (G_ant)_aff.  A yes comes with
    the product decomposition: abelian factor of dimension g and a flag
    factor with its parabolic type.
    """
    q = hd.q_matrix
    q_full = q.nrows == q.ncols == gd.rd.rank and abs(q.det()) == 1
    found_flag, witness = contains_borel(gd.rd, hd.root_vectors(gd.rd), q_full, cap=cap)
    if found_flag and hd.ant_contains_gantaff:
        return Verdict("yes", "H meet G_aff contains a Borel subgroup and "
                              "H meet G_ant contains (G_ant)_aff",
                       _parabolic_witness(gd, hd, witness, cap))
    reasons = []
    if not found_flag:
        reasons.append("no Weyl translate of the positive system lies in the subgroup roots"
                       if q_full else "the torus of H is a proper quotient, so H contains no Borel subgroup")
    if not hd.ant_contains_gantaff:
        reasons.append("H meet G_ant does not contain (G_ant)_aff")
    return Verdict("no", "; ".join(reasons))


def affine_test(gd: GroupDescriptor, hd: SubgroupDescriptor) -> Verdict:
    """Is G/H affine?  Yes iff H contains G_ant and H meet G_aff is reductive.

    Reductivity of the model: all subgroup roots come in opposite pairs and
    there is no extra unipotent dimension.  The reductive-isotropy
    criterion is classical input, used only in characteristic 0; elsewhere
    the answer is unknown.  Quasi-affineness is answered only when the
    affine test already says yes.
    """
    att = derived_attributes(gd)
    contains = hd.contains_G_ant or att.dim_G_ant == 0
    sym = set(hd.symmetric_root_indices())
    reductive = all(i in sym for i, _ in hd.roots) and hd.extra_unipotent_dim == 0
    if gd.gluing.char != 0:
        return Verdict("unknown", "reductive-isotropy criterion applied only in characteristic 0",
                       {"quasi_affine": "unknown"})
    if contains and reductive:
        return Verdict("yes", "H contains G_ant and H meet G_aff is reductive",
                       {"quasi_affine": "yes"})
    reasons = []
    if not contains:
        reasons.append("H does not contain G_ant")
    if not reductive:
        reasons.append("H meet G_aff is not reductive (asymmetric roots or extra unipotent part)")
    return Verdict("no", "; ".join(reasons), {"quasi_affine": "unknown"})
