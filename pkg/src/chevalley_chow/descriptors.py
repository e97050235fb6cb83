"""Descriptors for a connected algebraic group G and subgroups H.

A group is glued from three finite pieces:

* a :class:`~chevalley_chow.rootdata.RootDatum` for the affine part G_aff,
* dimension and Neron-Severi data for the abelian variety A = G/G_aff,
* the intersection D = G_aff with the largest anti-affine subgroup G_ant,
  presented by its character group X(D), the restriction v: X(T) -> X(D),
  and the kernel of the classifying map sigma_A: X(D) -> Pic0(A).

Subgroups carry the character-lattice surjection q: X(T) -> X(T_H), a set
of roots, a finite component group acting on X(T_H) with per-generator
translation flags, and two intersection flags against G_ant.

Validation is report-based: each structural requirement becomes a named
pass/fail entry instead of an exception, so a caller can show all failures
at once.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import GroupTooLarge, InvalidCartan
from .lattice import (
    FGAbelianGroup,
    GroupHom,
    IntMatrix,
    Presentation,
    enumerate_matrix_group,
    fixed_sublattice,
    hermite_row_basis,
    integer_kernel,
    intersect_rows,
    quotient_group,
    solve_integer,
    vstack,
)
from .rootdata import (
    RootDatum,
    characters_of_group,
    root_system,
    validate_root_datum,
    weyl_group,
)

DEFAULT_CAP = 1_000_000


@dataclass(frozen=True)
class AbelianVarietyData:
    """Dimension g of A = G/G_aff and the Neron-Severi group NS(A)."""

    g: int
    ns: FGAbelianGroup

    def __post_init__(self):
        if self.g < 0:
            raise ValueError("abelian variety dimension must be nonnegative")


@dataclass(frozen=True)
class AntiAffineGluing:
    """Presentation of D = G_aff meet G_ant and the maps through it.

    ``xd`` presents X(D) on ambient generators; ``v_matrix`` is the
    restriction X(T) -> X(D) in ambient coordinates; ``sigma_kernel_gens``
    rows generate ker sigma_A inside X(D); ``unipotent_dim`` is the
    dimension of the unipotent part of D; ``char`` the field characteristic.
    """

    xd: Presentation
    v_matrix: IntMatrix
    sigma_kernel_gens: IntMatrix
    unipotent_dim: int = 0
    char: int = 0

    def __post_init__(self):
        if self.v_matrix.nrows != self.xd.ngens:
            raise ValueError("v must land in the ambient generators of X(D)")
        if self.sigma_kernel_gens.ncols != self.xd.ngens:
            raise ValueError("sigma kernel generators must live in X(D) ambient coordinates")
        if self.unipotent_dim < 0 or self.char < 0:
            raise ValueError("negative dimension or characteristic")


@dataclass(frozen=True)
class GroupDescriptor:
    name: str
    rd: RootDatum
    av: AbelianVarietyData
    gluing: AntiAffineGluing

    def __post_init__(self):
        if self.gluing.v_matrix.ncols != self.rd.rank:
            raise ValueError("v must be defined on X(T)")


@dataclass(frozen=True)
class SubgroupDescriptor:
    """A subgroup H of G, through its torus, roots, and component group.

    ``roots`` lists (index, sign) pairs into the positive-root enumeration
    of the ambient datum.  ``component_generators`` act on X(T_H); the
    parallel ``translations`` flags record which generators act on A by a
    nontrivial translation.
    """

    name: str
    q_matrix: IntMatrix
    roots: tuple[tuple[int, int], ...] = ()
    extra_unipotent_dim: int = 0
    component_generators: tuple[IntMatrix, ...] = ()
    translations: tuple[bool, ...] = ()
    contains_G_ant: bool = False
    ant_contains_gantaff: bool = False

    def __post_init__(self):
        object.__setattr__(self, "roots", tuple((int(i), int(s)) for i, s in self.roots))
        if any(s not in (1, -1) for _, s in self.roots):
            raise ValueError("root signs must be +1 or -1")
        if len(self.component_generators) != len(self.translations):
            raise ValueError("one translation flag per component generator")
        h = self.q_matrix.nrows
        for g in self.component_generators:
            if g.shape != (h, h):
                raise ValueError("component generators must act on X(T_H)")
        if self.extra_unipotent_dim < 0:
            raise ValueError("negative unipotent dimension")

    @property
    def h_rank(self) -> int:
        return self.q_matrix.nrows

    def symmetric_root_indices(self) -> tuple[int, ...]:
        have = set(self.roots)
        return tuple(sorted({i for i, s in self.roots if (i, -s) in have}))

    def root_vectors(self, rd: RootDatum):
        rs = root_system(rd)
        return tuple(rs.vector(i, s) for i, s in self.roots)

    @property
    def has_translations(self) -> bool:
        return any(self.translations)


# ---------------------------------------------------------------------------
# Validation
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class ValidationReport:
    subject: str
    checks: tuple[CheckResult, ...]
    warnings: tuple[str, ...] = ()

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def failed(self) -> tuple[CheckResult, ...]:
        return tuple(c for c in self.checks if not c.passed)


def _check(checks, name, condition, detail_fail="", detail_ok=""):
    checks.append(CheckResult(name, bool(condition), detail_fail if not condition else detail_ok))
    return bool(condition)


def validate_group(gd: GroupDescriptor, cap: int = DEFAULT_CAP) -> ValidationReport:
    """All structural requirements on a group descriptor, as a report.

    Never raises on bad data; each failed requirement is an entry.
    """
    checks: list[CheckResult] = []
    warnings: list[str] = []
    try:
        ctype = validate_root_datum(gd.rd)
        _check(checks, "cartan", True, detail_ok=ctype.describe())
    except InvalidCartan as e:
        _check(checks, "cartan", False, str(e))
        return ValidationReport(gd.name, tuple(checks), tuple(warnings))

    glue = gd.gluing
    v_hom = GroupHom(Presentation.free(gd.rd.rank), glue.xd, glue.v_matrix)
    _check(checks, "v-surjectivity", v_hom.is_surjective(),
           "v does not map X(T) onto X(D)")

    central = all(
        glue.xd.contains_relation(glue.v_matrix.apply(r.vector))
        for r in root_system(gd.rd).positive
    )
    _check(checks, "centrality-of-D", central,
           "v(alpha) != 0 for a root alpha; D must be central in G_aff")

    if glue.char == 0:
        _check(checks, "unipotent-dimension-bound", glue.unipotent_dim <= gd.av.g,
               f"unipotent part of D has dim {glue.unipotent_dim} > g = {gd.av.g}")
    else:
        _check(checks, "unipotent-dimension-bound", glue.unipotent_dim == 0,
               f"anti-affine groups have no unipotent part in char {glue.char}")

    if gd.av.g == 0:
        _check(checks, "no-anti-affine-over-a-point",
               glue.xd.group().is_trivial and glue.unipotent_dim == 0,
               "g = 0 forces X(D) trivial and unipotent_dim = 0")
        _check(checks, "ns-over-a-point", gd.av.ns.is_trivial,
               "g = 0 forces NS(A) = 0")

    if gd.av.ns.torsion:
        warnings.append(f"NS(A) given with torsion {gd.av.ns.torsion}; NS of an abelian variety is torsion-free")

    quotient = quotient_group(
        IntMatrix.identity(glue.xd.ngens),
        vstack(glue.xd.relations, glue.sigma_kernel_gens)
        if glue.xd.relations.nrows or glue.sigma_kernel_gens.nrows
        else IntMatrix((), glue.xd.ngens),
    )
    for p in sorted({f for t in quotient.torsion for f in _prime_factors(t)}):
        p_rank = sum(1 for t in quotient.torsion if t % p == 0)
        if p_rank > 2 * gd.av.g:
            warnings.append(
                f"X(D)/ker sigma has {p}-torsion rank {p_rank} > 2g = {2 * gd.av.g}; "
                f"no {gd.av.g}-dimensional abelian variety can host it"
            )
        if glue.char == p:
            warnings.append(
                f"X(D)/ker sigma has {p}-torsion in characteristic {p}; "
                "check the descriptor against the p-rank of A"
            )
    return ValidationReport(gd.name, tuple(checks), tuple(warnings))


def _prime_factors(n: int) -> set[int]:
    out = set()
    d = 2
    while d * d <= n:
        while n % d == 0:
            out.add(d)
            n //= d
        d += 1
    if n > 1:
        out.add(n)
    return out


def validate_subgroup(gd: GroupDescriptor, hd: SubgroupDescriptor, cap: int = DEFAULT_CAP) -> ValidationReport:
    checks: list[CheckResult] = []
    warnings: list[str] = []
    rd = gd.rd
    q = hd.q_matrix
    _check(checks, "q-shape", q.ncols == rd.rank,
           f"q has {q.ncols} columns but X(T) has rank {rd.rank}")
    if q.ncols != rd.rank:
        return ValidationReport(hd.name, tuple(checks), tuple(warnings))

    q_hom = GroupHom(Presentation.free(rd.rank), Presentation.free(hd.h_rank), q)
    _check(checks, "q-surjectivity", q_hom.is_surjective(), "q is not onto X(T_H)")

    rs = root_system(rd)
    _check(checks, "roots-valid",
           all(0 <= i < len(rs.positive) for i, _ in hd.roots),
           "a root index is out of range")

    ker_q = integer_kernel(q)
    descent_ok = True
    for i in hd.symmetric_root_indices():
        cov = rs.positive[i].coroot
        if any(sum(a * b for a, b in zip(row, cov)) != 0 for row in ker_q.rows):
            descent_ok = False
    _check(checks, "coroot-descent", descent_ok,
           "a symmetric root's coroot does not kill ker(q), so it cannot descend to T_H")

    finite_ok = True
    detail = ""
    if hd.component_generators:
        try:
            gamma = enumerate_matrix_group(hd.component_generators, cap=cap)
            detail = f"|H/H0| = {len(gamma)}"
        except (GroupTooLarge, ValueError) as e:
            finite_ok = False
            detail = str(e)
    _check(checks, "component-group-finite", finite_ok, detail, detail)

    if finite_ok and hd.component_generators:
        try:
            w = weyl_group(rd, cap=cap)
            compat = all(
                any((g @ q) == (q @ m) for m in w.elements)
                for g in hd.component_generators
            )
        except GroupTooLarge:
            compat = False
        _check(checks, "component-weyl-compatibility", compat,
               "a component generator is not q-compatible with any Weyl element")
        if compat:
            xh0 = _connected_character_lattice(gd, hd)
            stable = all(
                all(solve_integer(xh0.transpose(), g.apply(row)) is not None for row in xh0.rows)
                for g in hd.component_generators
            ) if xh0.nrows else True
            _check(checks, "component-group-preserves-characters", stable,
                   "the component group does not stabilize the character lattice of H0")

    _check(checks, "ant-flags-consistent",
           (not hd.contains_G_ant) or hd.ant_contains_gantaff,
           "H containing G_ant must contain its affine part too")
    return ValidationReport(hd.name, tuple(checks), tuple(warnings))


# ---------------------------------------------------------------------------
# Derived attributes
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class AttributeReport:
    """Dimensions and character data derived from a valid descriptor."""

    dim_G: int
    dim_G_aff: int
    dim_G_ant: int
    dim_Aff_G: int
    dim_D: int
    x_gaff: IntMatrix            # basis rows of X(G_aff) inside X(T)
    ker_gamma: IntMatrix         # basis rows of ker gamma_A inside X(T)
    im_gamma: FGAbelianGroup     # X(G_aff)/ker gamma_A, the image inside Pic0(A)
    rank_im_gamma: int
    xd_group: FGAbelianGroup
    d_smooth_connected: bool


def _sigma_quotient_presentation(gd: GroupDescriptor) -> Presentation:
    """X(D)/(ker sigma_A) as a presentation on the X(D) ambient generators."""
    glue = gd.gluing
    rel = vstack(glue.xd.relations, glue.sigma_kernel_gens) \
        if glue.xd.relations.nrows or glue.sigma_kernel_gens.nrows \
        else IntMatrix((), glue.xd.ngens)
    return Presentation(glue.xd.ngens, rel)


def gamma_kernel(gd: GroupDescriptor) -> IntMatrix:
    """Basis of ker(gamma_A) = X(G) inside X(T), by the composite-map route."""
    basis = characters_of_group(gd.rd)
    target = _sigma_quotient_presentation(gd)
    if basis.nrows == 0:
        return basis
    matrix = gd.gluing.v_matrix @ basis.transpose()
    hom = GroupHom(Presentation.free(basis.nrows), target, matrix)
    coords = hom.kernel_lattice()
    return hermite_row_basis(coords @ basis)


def gamma_kernel_by_intersection(gd: GroupDescriptor) -> IntMatrix:
    """Same lattice as :func:`gamma_kernel`, via X(G_aff) meet v^{-1}(ker sigma)."""
    target = _sigma_quotient_presentation(gd)
    hom = GroupHom(Presentation.free(gd.rd.rank), target, gd.gluing.v_matrix)
    preimage = hom.kernel_lattice()
    return intersect_rows(characters_of_group(gd.rd), preimage)


def derived_attributes(gd: GroupDescriptor) -> AttributeReport:
    """Dimensions and the gamma_A kernel/image data of a valid descriptor.

    The kernel is computed along two independent routes which must agree;
    a mismatch is an internal bug and raises AssertionError.
    """
    rd = gd.rd
    glue = gd.gluing
    n_pos = len(root_system(rd).positive)
    dim_gaff = rd.rank + 2 * n_pos + rd.u_rad
    xd_group = glue.xd.group()
    dim_d = xd_group.rank + glue.unipotent_dim
    dim_gant = gd.av.g + dim_d
    dim_g = dim_gaff + gd.av.g
    x_gaff = characters_of_group(rd)
    ker = gamma_kernel(gd)
    ker2 = gamma_kernel_by_intersection(gd)
    assert ker == ker2, "gamma_A kernel routes disagree"
    im = quotient_group(x_gaff, ker) if x_gaff.nrows else FGAbelianGroup(0)
    return AttributeReport(
        dim_G=dim_g,
        dim_G_aff=dim_gaff,
        dim_G_ant=dim_gant,
        dim_Aff_G=dim_g - dim_gant,
        dim_D=dim_d,
        x_gaff=x_gaff,
        ker_gamma=ker,
        im_gamma=im,
        rank_im_gamma=x_gaff.nrows - ker.nrows,
        xd_group=xd_group,
        d_smooth_connected=(not xd_group.torsion) and (glue.char == 0 or glue.unipotent_dim == 0),
    )


def affinization_hom(gd: GroupDescriptor) -> GroupHom:
    """u: X(G_aff) -> X(D), the restriction of v to the group characters."""
    basis = characters_of_group(gd.rd)
    matrix = gd.gluing.v_matrix @ basis.transpose()
    return GroupHom(Presentation.free(basis.nrows), gd.gluing.xd, matrix)


# ---------------------------------------------------------------------------
# Subgroup character data
# ---------------------------------------------------------------------------


def descended_coroot(gd: GroupDescriptor, hd: SubgroupDescriptor, index: int):
    """Coroot of a symmetric subgroup root, in Y(T_H) coordinates."""
    cov = root_system(gd.rd).positive[index].coroot
    sol = solve_integer(hd.q_matrix.transpose(), cov)
    if sol is None:
        raise ValueError(f"coroot {index} does not descend along q")
    return sol


def _connected_character_lattice(gd: GroupDescriptor, hd: SubgroupDescriptor) -> IntMatrix:
    """Basis rows of X(H0) inside X(T_H): characters killing all descended coroots."""
    sym = hd.symmetric_root_indices()
    if not sym:
        return IntMatrix.identity(hd.h_rank)
    rows = [descended_coroot(gd, hd, i) for i in sym]
    return integer_kernel(IntMatrix(rows, hd.h_rank))


@lru_cache(maxsize=None)
def subgroup_characters(gd: GroupDescriptor, hd: SubgroupDescriptor, cap: int = DEFAULT_CAP) -> IntMatrix:
    """Basis rows of X(H) inside X(T_H).

    X(H) is the fixed part of X(H0) under the component group; X(H0) is cut
    out of X(T_H) by the descended coroots of the symmetric roots.
    """
    xh0 = _connected_character_lattice(gd, hd)
    if not hd.component_generators or xh0.nrows == 0:
        return xh0
    # action of each generator in X(H0) coordinates
    induced = []
    bt = xh0.transpose()
    for g in hd.component_generators:
        cols = []
        for row in xh0.rows:
            sol = solve_integer(bt, g.apply(row))
            if sol is None:
                raise ValueError("component group does not stabilize X(H0)")
            cols.append(sol)
        induced.append(IntMatrix.from_columns(cols, xh0.nrows))
    fixed = fixed_sublattice(induced, xh0.nrows, cap=cap)
    return hermite_row_basis(fixed @ xh0) if fixed.nrows else IntMatrix((), hd.h_rank)


@dataclass(frozen=True)
class SubgroupRestriction:
    """r_H: X(G_aff) -> X(H) with bases fixed on both sides."""

    x_gaff: IntMatrix    # rows: basis of X(G_aff) in X(T) coordinates
    x_h: IntMatrix       # rows: basis of X(H) in X(T_H) coordinates
    matrix: IntMatrix    # (x_h.nrows x x_gaff.nrows), column action on coordinates
    ker_r: IntMatrix     # rows: basis of ker r_H in X(T) coordinates


def restriction_to_subgroup(gd: GroupDescriptor, hd: SubgroupDescriptor, cap: int = DEFAULT_CAP) -> SubgroupRestriction:
    """Restriction of G_aff-characters to H, in the chosen bases.

    q maps X(G_aff) into X(H) because group characters are Weyl-fixed and
    kill all coroots; integrality of the change of basis is asserted.
    """
    x_gaff = characters_of_group(gd.rd)
    x_h = subgroup_characters(gd, hd, cap)
    cols = []
    ker_rows = []
    xht = x_h.transpose()
    for chi in x_gaff.rows:
        img = hd.q_matrix.apply(chi)
        sol = solve_integer(xht, img) if x_h.nrows else (None if any(img) else ())
        assert sol is not None, "restriction of a group character escaped X(H)"
        cols.append(tuple(sol))
    matrix = IntMatrix.from_columns(cols, x_h.nrows)
    # kernel of r_H inside X(T): coordinates in the X(G_aff) basis, then back
    ker_coords = integer_kernel(matrix)
    ker = hermite_row_basis(ker_coords @ x_gaff) if x_gaff.nrows else IntMatrix((), gd.rd.rank)
    return SubgroupRestriction(x_gaff, x_h, matrix, ker)
