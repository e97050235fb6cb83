"""Picard, Neron-Severi, and Chow reports for groups and homogeneous spaces.

Every Picard-type answer splits as (finitely generated part, formal part).
The finitely generated part is exact.  The formal part is Pic0 of the
abelian variety A modulo the image of a character lattice; Pic0(A) itself
is never enumerated, only the modded-out data is reported.

Chow rings are reported as a concrete graded factor (symmetric algebra
data over Q, truncated at a requested degree) times a symbolic factor
A*(A_g), plus the degree-1 ideal generators tying the two together.
"""

from __future__ import annotations

from dataclasses import dataclass

from .descriptors import (
    DEFAULT_CAP,
    AttributeReport,
    GroupDescriptor,
    SubgroupDescriptor,
    SubgroupRestriction,
    derived_attributes,
    descended_coroot,
    restriction_to_subgroup,
)
from .errors import ModeUnsupported
from .invariants import (
    TruncatedQuotient,
    full_algebra,
    invariant_algebra,
    invariant_slice,
    linear_poly,
    restrict_symmetric,
    truncated_quotient,
)
from .lattice import (
    FGAbelianGroup,
    IntMatrix,
    Presentation,
    group_from_relations,
    hermite_row_basis,
    image_lattice,
    intersect_rows,
    saturate_rows,
    vstack,
)
from .qlinalg import SpanBuilder
from .rootdata import flag_picard_map, root_system, simple_reflection
from .schubert import SchubertExpansion, chevalley_multiply


@dataclass(frozen=True)
class FormalPicardZero:
    """Pic0(A_g) divided by the image of a finitely generated group."""

    g: int
    quotient_by: FGAbelianGroup

    def describe(self) -> str:
        base = f"Pic0(A_{self.g})"
        ngen = self.quotient_by.rank + len(self.quotient_by.torsion)
        if ngen == 0:
            return base
        return f"{base} / <{ngen} generators, {self.quotient_by.describe()}>"


@dataclass(frozen=True)
class PicardSequence:
    """The five-term picture 0 -> X(G) -> X(G_aff) -> Pic(A) -> Pic(G) -> Pic(G_aff) -> 0.

    Everything is in coordinates: X(G) and X(G_aff) as row bases inside
    X(T), and the middle map as a matrix into X(D)/ker(sigma_A), through
    which the characteristic map to Pic(A) factors faithfully.
    """

    x_g: IntMatrix
    x_g_group: FGAbelianGroup
    x_gaff: IntMatrix
    gamma_matrix: IntMatrix
    gamma_target: Presentation
    pic_gaff: FGAbelianGroup


@dataclass(frozen=True)
class PicardReport:
    ns: FGAbelianGroup
    pic0: FormalPicardZero
    presentation: PicardSequence


def _sigma_quotient(gd: GroupDescriptor) -> Presentation:
    glue = gd.gluing
    if glue.xd.relations.nrows or glue.sigma_kernel_gens.nrows:
        rel = vstack(glue.xd.relations, glue.sigma_kernel_gens)
    else:
        rel = IntMatrix((), glue.xd.ngens)
    return Presentation(glue.xd.ngens, rel)


def picard_group(gd: GroupDescriptor) -> PicardReport:
    """Pic(G) split into NS(G) = NS(A) + Pic(G_aff) and a formal Pic0 part.

    The sequence data carries X(G) = ker(gamma_A) as a sublattice of X(T).
    """
    att = derived_attributes(gd)
    pic_gaff = flag_picard_map(gd.rd).pic
    ns = gd.av.ns.direct_sum(pic_gaff)
    pic0 = FormalPicardZero(gd.av.g, att.im_gamma)
    seq = PicardSequence(
        x_g=att.ker_gamma,
        x_g_group=FGAbelianGroup(att.ker_gamma.nrows),
        x_gaff=att.x_gaff,
        gamma_matrix=gd.gluing.v_matrix @ att.x_gaff.transpose(),
        gamma_target=_sigma_quotient(gd),
        pic_gaff=pic_gaff,
    )
    return PicardReport(ns, pic0, seq)


def ns_group(gd: GroupDescriptor) -> FGAbelianGroup:
    """NS(G) = NS(A) + Pic(G_aff), in canonical invariant-factor form."""
    return gd.av.ns.direct_sum(flag_picard_map(gd.rd).pic)


@dataclass(frozen=True)
class GradedPresentation:
    """A graded ring presented as (concrete factor) x A*(A_g) / ideal.

    ``ideal_degree1`` pairs each degree-1 ideal generator's formal
    component (a vector in the X(D)/ker sigma_A coordinates, mapping into
    Pic0(A)) with its concrete component as a codegree-1 Schubert class
    expansion.  ``degree1_concrete`` is the integral cokernel of the
    concrete components, i.e. the concrete contribution to degree 1 of the
    quotient.  In rational mode ``degree_bound`` is the degree above which
    all classes vanish and ``j_rank`` counts independent formal generators.
    """

    mode: str
    concrete_factor: TruncatedQuotient
    abelian_g: int
    ideal_degree1: tuple[tuple[tuple[int, ...], SchubertExpansion], ...]
    degree1_concrete: FGAbelianGroup
    degree_bound: int | None = None
    j_rank: int | None = None

    def abelian_factor(self) -> str:
        tag = "_Q" if self.mode == "rational" else ""
        return f"A*(A_{self.abelian_g}){tag}"


def _weyl_reflections(rd):
    return tuple(simple_reflection(rd, i) for i in range(rd.nsimple))


def _invariant_ideal_gens(rd, max_degree, cap):
    """W-invariants of positive degree up to max_degree, as polynomials."""
    refl = _weyl_reflections(rd)
    gens = []
    for e in range(1, max_degree + 1):
        gens.extend(invariant_slice(rd.rank, refl, e, cap=cap))
    return gens


def chow_presentation(gd: GroupDescriptor, max_degree: int, cap: int = DEFAULT_CAP) -> GradedPresentation:
    """Integral presentation data for A*(G).

    Concrete factor: the Schubert-basis ring of the flag variety of G_aff
    (symmetric algebra modulo positive-degree Weyl invariants).  The ideal
    is generated in degree 1 by, for each basis character of X(T), the
    pair (class of v(chi) in X(D)/ker sigma_A, divisor Schubert expansion).
    """
    rd = gd.rd
    concrete = truncated_quotient(
        full_algebra(rd.rank), _invariant_ideal_gens(rd, max_degree, cap), max_degree)
    pairs = []
    for j in range(rd.rank):
        chi = tuple(1 if i == j else 0 for i in range(rd.rank))
        formal = gd.gluing.v_matrix.apply(chi)
        # index 0 is the identity in the Weyl enumeration
        pairs.append((formal, chevalley_multiply(rd, chi, 0, cap=cap)))
    return GradedPresentation(
        mode="integral",
        concrete_factor=concrete,
        abelian_g=gd.av.g,
        ideal_degree1=tuple(pairs),
        degree1_concrete=flag_picard_map(rd).pic,
    )


def _independent_formal_generators(gd: GroupDescriptor, att: AttributeReport):
    """Characters of G_aff whose images form a Q-basis of im(gamma_A)."""
    glue = gd.gluing
    ambient = glue.xd.ngens
    rel = vstack(glue.xd.relations, glue.sigma_kernel_gens) \
        if glue.xd.relations.nrows or glue.sigma_kernel_gens.nrows \
        else IntMatrix((), ambient)
    sb = SpanBuilder(ambient)
    if rel.nrows:
        for row in saturate_rows(rel).rows:
            sb.add(row)
    kept = []
    for chi in att.x_gaff.rows:
        if sb.add(glue.v_matrix.apply(chi)):
            kept.append((chi, glue.v_matrix.apply(chi)))
    assert len(kept) == att.rank_im_gamma, "independent generator count must match rank"
    return kept


def rational_chow(gd: GroupDescriptor, max_degree: int, cap: int = DEFAULT_CAP) -> GradedPresentation:
    """A*(G)_Q = A*(A_g)_Q modulo the degree-1 ideal J from gamma_A.

    The concrete factor collapses to Q in degree 0; all classes vanish
    above degree g.  J is generated by rank(im gamma_A) formal classes.
    """
    rd = gd.rd
    att = derived_attributes(gd)
    concrete = truncated_quotient(
        full_algebra(rd.rank),
        [linear_poly(tuple(1 if i == j else 0 for i in range(rd.rank))) for j in range(rd.rank)],
        max_degree)
    pairs = tuple(
        (vec, SchubertExpansion(1, {}))
        for _, vec in _independent_formal_generators(gd, att)
    )
    return GradedPresentation(
        mode="rational",
        concrete_factor=concrete,
        abelian_g=gd.av.g,
        ideal_degree1=pairs,
        degree1_concrete=FGAbelianGroup(0),
        degree_bound=gd.av.g,
        j_rank=att.rank_im_gamma,
    )


# ---------------------------------------------------------------------------
# Homogeneous spaces G/H
# ---------------------------------------------------------------------------


def _effective_contains_ant(gd: GroupDescriptor, hd: SubgroupDescriptor) -> bool:
    """Whether H contains a nontrivial G_ant (g = 0 makes the flag vacuous)."""
    att = derived_attributes(gd)
    return hd.contains_G_ant and att.dim_G_ant > 0


def _subgroup_reflections(gd: GroupDescriptor, hd: SubgroupDescriptor):
    """Reflections of the symmetric subgroup roots, acting on X(T_H)."""
    rs = root_system(gd.rd)
    out = []
    h = hd.h_rank
    for i in hd.symmetric_root_indices():
        beta = hd.q_matrix.apply(rs.positive[i].vector)
        beta_cov = descended_coroot(gd, hd, i)
        out.append(IntMatrix(
            tuple(
                tuple((1 if r == c else 0) - beta[r] * beta_cov[c] for c in range(h))
                for r in range(h)
            ),
            h,
        ))
    return tuple(out)


def gamma_j_rank(gd: GroupDescriptor, hd: SubgroupDescriptor, cap: int = DEFAULT_CAP) -> int:
    """Rank of gamma_A(ker r_H), measured as (ker r_H + ker gamma_A)/ker gamma_A."""
    att = derived_attributes(gd)
    restr = restriction_to_subgroup(gd, hd, cap)
    if restr.ker_r.nrows == 0:
        return 0
    joined = hermite_row_basis(vstack(restr.ker_r, att.ker_gamma))
    return joined.nrows - att.ker_gamma.nrows


def homogeneous_rational_chow(gd: GroupDescriptor, hd: SubgroupDescriptor,
                              max_degree: int, cap: int = DEFAULT_CAP) -> GradedPresentation:
    """A*(G/H)_Q as (invariant algebra of X(T_H) mod restricted invariants) x A*(A)_Q / J.

    The concrete ambient is the subring of Sym X(T_H)_Q invariant under
    both the reflections of the symmetric subgroup roots and the component
    group; the ideal is generated by the q-restrictions of the
    positive-degree Weyl invariants of G.  J on the abelian factor has
    rank gamma_A(ker r_H), recorded in ``j_rank``.
    """
    if _effective_contains_ant(gd, hd):
        raise ModeUnsupported("Chow reports for G/H need H inside the faithful model (H does not contain G_ant)")
    rd = gd.rd
    gens = _subgroup_reflections(gd, hd) + hd.component_generators
    ambient = invariant_algebra(hd.h_rank, gens, cap=cap)
    ideal = []
    for f in _invariant_ideal_gens(rd, max_degree, cap):
        rf = restrict_symmetric(hd.q_matrix, f)
        if rf:
            ideal.append(rf)
    concrete = truncated_quotient(ambient, ideal, max_degree)
    return GradedPresentation(
        mode="rational",
        concrete_factor=concrete,
        abelian_g=gd.av.g,
        ideal_degree1=(),
        degree1_concrete=FGAbelianGroup(0),
        degree_bound=None,
        j_rank=gamma_j_rank(gd, hd, cap),
    )


@dataclass(frozen=True)
class HomogeneousPicardReport:
    """Pic(G/H) split into NS(A)-part, character part, and formal Pic0 part.

    ``x_part`` is X(H)/r_H(X(G_aff)); ``x_gh`` is a row basis of
    X(G/H) = ker gamma_A meet ker r_H inside X(T).  ``tail`` is Pic(G_aff),
    toward which the sequence is exact only up to an uncomputed image, and
    is reported only in integral mode.  Rational mode keeps ranks alone.
    """

    mode: str
    ns_part: FGAbelianGroup
    x_part: FGAbelianGroup
    ns: FGAbelianGroup
    pic0: FormalPicardZero
    x_gh: IntMatrix
    x_gh_group: FGAbelianGroup
    tail: FGAbelianGroup


def _integral_mode_ok(gd: GroupDescriptor, hd: SubgroupDescriptor) -> bool:
    return not hd.has_translations and not _effective_contains_ant(gd, hd)


def homogeneous_picard(gd: GroupDescriptor, hd: SubgroupDescriptor,
                       integral: bool | None = None, cap: int = DEFAULT_CAP) -> HomogeneousPicardReport:
    """Pic(G/H) report; integral when H sits inside G_aff, else rational.

    ``integral=None`` picks the strongest available mode; ``integral=True``
    raises ModeUnsupported when H has translation components or contains a
    nontrivial G_ant.
    """
    ok = _integral_mode_ok(gd, hd)
    if integral is True and not ok:
        raise ModeUnsupported("integral Pic(G/H) needs H inside G_aff (no translations, no G_ant)")
    mode = "integral" if (ok and integral is not False) else "rational"
    att = derived_attributes(gd)
    restr = restriction_to_subgroup(gd, hd, cap)
    rank_r = restr.x_gaff.nrows - restr.ker_r.nrows
    if mode == "integral":
        ns_part = gd.av.ns
        x_part = group_from_relations(restr.x_h.nrows, image_lattice(restr.matrix))
        tail = flag_picard_map(gd.rd).pic
    else:
        ns_part = FGAbelianGroup(gd.av.ns.rank)
        x_part = FGAbelianGroup(restr.x_h.nrows - rank_r)
        tail = FGAbelianGroup(0)
    x_gh = intersect_rows(att.ker_gamma, restr.ker_r)
    return HomogeneousPicardReport(
        mode=mode,
        ns_part=ns_part,
        x_part=x_part,
        ns=ns_part.direct_sum(x_part),
        pic0=FormalPicardZero(gd.av.g, att.im_gamma),
        x_gh=x_gh,
        x_gh_group=FGAbelianGroup(x_gh.nrows),
        tail=tail,
    )


@dataclass(frozen=True)
class HomogeneousNSReport:
    group: FGAbelianGroup
    mode: str
    pic0: FormalPicardZero   # Pic0(G/H)_Q is isomorphic to Pic0(G)_Q


def homogeneous_ns(gd: GroupDescriptor, hd: SubgroupDescriptor, cap: int = DEFAULT_CAP) -> HomogeneousNSReport:
    """NS(G/H): integral NS(A) + X(H)/r_H(X(G_aff)) when H is inside a
    factorial G_aff, otherwise the rational ranks of the same two parts."""
    pic = homogeneous_picard(gd, hd, cap=cap)
    factorial = flag_picard_map(gd.rd).pic.is_trivial
    if pic.mode == "integral" and factorial:
        return HomogeneousNSReport(pic.ns, "integral", pic.pic0)
    rank = pic.ns_part.rank + pic.x_part.rank
    return HomogeneousNSReport(FGAbelianGroup(rank), "rational", pic.pic0)
