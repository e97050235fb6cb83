"""Reductive root data: validation, Weyl groups, characters, flag Picard map.

A :class:`RootDatum` is the finite descriptor of a connected reductive group
``G_aff`` (up to its unipotent radical, which is tracked only as a
dimension): the character lattice X(T) = Z^rank with chosen simple roots and
simple coroots.  The fixed simple system plays the role of a Borel subgroup.

Weyl elements are integer matrices acting on column vectors in X(T)
coordinates.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import GroupTooLarge, InvalidCartan
from .lattice import (
    FGAbelianGroup,
    GroupHom,
    IntMatrix,
    Presentation,
    Vec,
    hermite_row_basis,
    integer_kernel_by_columns,
)
from .qlinalg import qrank, qsolve

#: |W| for each irreducible type, as a function of the rank
_WEYL_ORDERS = {
    "A": lambda n: math.factorial(n + 1),
    "B": lambda n: 2**n * math.factorial(n),
    "C": lambda n: 2**n * math.factorial(n),
    "D": lambda n: 2 ** (n - 1) * math.factorial(n),
    "G": lambda n: 12,
    "F": lambda n: 1152,
    "E": lambda n: {6: 51840, 7: 2903040, 8: 696729600}[n],
}


@dataclass(frozen=True)
class RootDatum:
    """Character lattice Z^rank with simple roots and coroots as rows.

    ``u_rad`` is the dimension of the unipotent radical, bookkeeping only;
    no formula in this package looks past the reductive quotient.
    """

    rank: int
    simple_roots: IntMatrix
    simple_coroots: IntMatrix
    u_rad: int = 0

    def __post_init__(self):
        if self.rank < 0 or self.u_rad < 0:
            raise ValueError("rank and u_rad must be nonnegative")
        if self.simple_roots.nrows != self.simple_coroots.nrows:
            raise ValueError("need equally many roots and coroots")
        for mat, what in ((self.simple_roots, "roots"), (self.simple_coroots, "coroots")):
            if mat.ncols != self.rank:
                raise ValueError(f"simple {what} must live in Z^{self.rank}")

    @property
    def nsimple(self) -> int:
        return self.simple_roots.nrows

    def pairing(self, chi, coroot) -> int:
        """<chi, beta^vee> for a character and a coroot, both coordinate tuples."""
        return sum(int(a) * int(b) for a, b in zip(chi, coroot))


@dataclass(frozen=True)
class CartanComponent:
    letter: str
    rank: int
    nodes: tuple[int, ...]

    @property
    def weyl_order(self) -> int:
        return _WEYL_ORDERS[self.letter](self.rank)

    def __str__(self):
        return f"{self.letter}{self.rank}"


@dataclass(frozen=True)
class CartanType:
    """Classification report: irreducible components plus the central torus rank."""

    components: tuple[CartanComponent, ...]
    torus_rank: int

    @property
    def weyl_order(self) -> int:
        return math.prod(c.weyl_order for c in self.components) if self.components else 1

    def describe(self) -> str:
        parts = [str(c) for c in self.components]
        if self.torus_rank:
            parts.append(f"T{self.torus_rank}")
        return " x ".join(parts) if parts else "trivial"

    def __str__(self):
        return self.describe()


def cartan_matrix(rd: RootDatum) -> IntMatrix:
    """C[i][j] = <alpha_i, alpha_j^vee>."""
    return IntMatrix(
        tuple(
            tuple(rd.pairing(rd.simple_roots.rows[i], rd.simple_coroots.rows[j]) for j in range(rd.nsimple))
            for i in range(rd.nsimple)
        ),
        rd.nsimple,
    )


def _classify_component(c, nodes, weight):
    """Type of one connected diagram on ``nodes``; raises InvalidCartan."""
    n = len(nodes)
    edges = [(i, j) for i in nodes for j in nodes if i < j and weight(i, j)]
    deg = {i: sum(1 for a, b in edges if i in (a, b)) for i in nodes}
    if len(edges) != n - 1:
        raise InvalidCartan(f"diagram on nodes {nodes} has a cycle")
    triple = [(i, j) for i, j in edges if weight(i, j) == 3]
    double = [(i, j) for i, j in edges if weight(i, j) == 2]
    if triple:
        if n == 2 and not double:
            return CartanComponent("G", 2, tuple(nodes))
        raise InvalidCartan(f"triple bond in a diagram of size {n} is not finite type")
    if len(double) > 1:
        raise InvalidCartan("more than one double bond in a component")
    if double:
        if any(deg[i] > 2 for i in nodes):
            raise InvalidCartan("double bond with a branch node")
        a, b = double[0]
        if n == 2:
            return CartanComponent("B", 2, tuple(nodes))
        if deg[a] == 2 and deg[b] == 2:
            if n != 4:
                raise InvalidCartan("interior double bond only occurs in rank 4 (F4)")
            return CartanComponent("F", 4, tuple(nodes))
        leaf, mid = (a, b) if deg[a] == 1 else (b, a)
        if c[mid][leaf] == -2:
            return CartanComponent("B", n, tuple(nodes))  # leaf root is short
        if c[leaf][mid] == -2:
            return CartanComponent("C", n, tuple(nodes))
        raise InvalidCartan(f"double bond pairing ({c[leaf][mid]}, {c[mid][leaf]}) is not finite type")
    # simply laced
    if all(deg[i] <= 2 for i in nodes):
        return CartanComponent("A", n, tuple(nodes))
    branch = [i for i in nodes if deg[i] >= 3]
    if len(branch) != 1 or deg[branch[0]] != 3:
        raise InvalidCartan("diagram branches more than D/E allow")
    center = branch[0]
    arms = []
    adjacency = {i: [j for j in nodes if j != i and weight(i, j)] for i in nodes}
    for start in adjacency[center]:
        length, prev, cur = 1, center, start
        while True:
            nxt = [j for j in adjacency[cur] if j != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            length += 1
        arms.append(length)
    arms.sort()
    if arms[0] == 1 and arms[1] == 1:
        return CartanComponent("D", n, tuple(nodes))
    if arms[:2] == [1, 2] and arms[2] in (2, 3, 4):
        return CartanComponent("E", n, tuple(nodes))
    raise InvalidCartan(f"branching arms {tuple(arms)} are not finite type")


def validate_root_datum(rd: RootDatum) -> CartanType:
    """Classify the datum into irreducible Cartan components.

    Raises :class:`InvalidCartan` naming the violated condition.

    >>> sl2 = RootDatum(1, IntMatrix(((2,),)), IntMatrix(((1,),)))
    >>> validate_root_datum(sl2).describe()
    'A1'
    """
    k = rd.nsimple
    cm = cartan_matrix(rd)
    c = [list(r) for r in cm.rows]
    for i in range(k):
        if c[i][i] != 2:
            raise InvalidCartan(f"<alpha_{i}, alpha_{i}^vee> = {c[i][i]} must equal 2")
        for j in range(k):
            if i == j:
                continue
            if c[i][j] > 0:
                raise InvalidCartan(f"<alpha_{i}, alpha_{j}^vee> = {c[i][j]} must be <= 0")
            if (c[i][j] == 0) != (c[j][i] == 0):
                raise InvalidCartan(f"pairing of roots {i}, {j} vanishes on one side only")
            if c[i][j] * c[j][i] > 3:
                raise InvalidCartan(f"bond {i}-{j} has product {c[i][j] * c[j][i]} > 3")
    if qrank(rd.simple_roots.rows, rd.rank) != k:
        raise InvalidCartan("simple roots are linearly dependent")
    if qrank(rd.simple_coroots.rows, rd.rank) != k:
        raise InvalidCartan("simple coroots are linearly dependent")

    def weight(i, j):
        return c[i][j] * c[j][i]

    remaining = set(range(k))
    components = []
    while remaining:
        seed = min(remaining)
        comp = {seed}
        frontier = [seed]
        while frontier:
            i = frontier.pop()
            for j in range(k):
                if j not in comp and weight(i, j):
                    comp.add(j)
                    frontier.append(j)
        remaining -= comp
        components.append(_classify_component(c, sorted(comp), weight))
    components.sort(key=lambda comp: comp.nodes)
    return CartanType(tuple(components), rd.rank - k)


def simple_reflection(rd: RootDatum, i: int) -> IntMatrix:
    """Matrix of s_i on X(T): x - <x, alpha_i^vee> alpha_i (column action)."""
    alpha = rd.simple_roots.rows[i]
    cov = rd.simple_coroots.rows[i]
    n = rd.rank
    return IntMatrix(
        tuple(tuple((1 if r == c else 0) - alpha[r] * cov[c] for c in range(n)) for r in range(n)),
        n,
    )


def dual_simple_reflection(rd: RootDatum, i: int) -> IntMatrix:
    """Matrix of s_i on the dual lattice Y(T): y - <alpha_i, y> alpha_i^vee."""
    alpha = rd.simple_roots.rows[i]
    cov = rd.simple_coroots.rows[i]
    n = rd.rank
    return IntMatrix(
        tuple(tuple((1 if r == c else 0) - cov[r] * alpha[c] for c in range(n)) for r in range(n)),
        n,
    )


class WeylGroup:
    """Fully enumerated Weyl group with lengths and reduced words.

    Elements are listed in breadth-first order from the identity (so lengths
    are nondecreasing) and each element carries its lexicographically least
    reduced word.
    """

    def __init__(self, elements, lengths, words, generators):
        self.elements: tuple[IntMatrix, ...] = tuple(elements)
        self.lengths: tuple[int, ...] = tuple(lengths)
        self.words: tuple[tuple[int, ...], ...] = tuple(words)
        self.generators: tuple[IntMatrix, ...] = tuple(generators)
        self.index: dict[IntMatrix, int] = {m: i for i, m in enumerate(self.elements)}

    def __len__(self):
        return len(self.elements)

    def length(self, m: IntMatrix) -> int:
        return self.lengths[self.index[m]]

    @property
    def longest(self) -> IntMatrix:
        return self.elements[-1]


@lru_cache(maxsize=None)
def weyl_group(rd: RootDatum, cap: int = 1_000_000) -> WeylGroup:
    """Enumerate W by breadth-first closure over the simple reflections.

    The element count is checked against the order formula for the detected
    Cartan type.  Raises :class:`GroupTooLarge` past ``cap``.
    """
    ctype = validate_root_datum(rd)
    expected = ctype.weyl_order
    if expected > cap:
        raise GroupTooLarge(f"|W| = {expected} exceeds cap {cap}")
    gens = tuple(simple_reflection(rd, i) for i in range(rd.nsimple))
    ident = IntMatrix.identity(rd.rank)
    elements = [ident]
    lengths = [0]
    words: list[tuple[int, ...]] = [()]
    seen = {ident: 0}
    frontier = [0]
    while frontier:
        nxt = []
        for pos in frontier:
            for i, g in enumerate(gens):
                prod = elements[pos] @ g
                if prod not in seen:
                    if len(elements) >= cap:
                        raise GroupTooLarge(f"Weyl enumeration exceeds cap {cap}")
                    seen[prod] = len(elements)
                    elements.append(prod)
                    lengths.append(lengths[pos] + 1)
                    words.append(words[pos] + (i,))
                    nxt.append(len(elements) - 1)
        frontier = nxt
    if len(elements) != expected:
        raise InvalidCartan(
            f"enumerated {len(elements)} Weyl elements but type {ctype.describe()} has {expected}"
        )
    return WeylGroup(elements, lengths, words, gens)


@dataclass(frozen=True)
class PositiveRoot:
    index: int
    vector: Vec          # X(T) coordinates
    coroot: Vec          # Y(T) coordinates
    coords: Vec          # coefficients over the simple roots
    height: int
    reflection: IntMatrix


class RootSystem:
    """All roots of the datum; positives sorted by (height, simple coords).

    That sort order is the public index contract used by subgroup
    descriptors to name roots.
    """

    def __init__(self, positive, by_vector):
        self.positive: tuple[PositiveRoot, ...] = tuple(positive)
        self.by_vector: dict[Vec, tuple[int, int]] = dict(by_vector)  # vector -> (index, sign)

    def __len__(self):
        return 2 * len(self.positive)

    def vector(self, index: int, sign: int) -> Vec:
        v = self.positive[index].vector
        return v if sign > 0 else tuple(-x for x in v)

    def all_vectors(self) -> tuple[Vec, ...]:
        pos = tuple(r.vector for r in self.positive)
        return pos + tuple(tuple(-x for x in v) for v in pos)


@lru_cache(maxsize=None)
def root_system(rd: RootDatum) -> RootSystem:
    """Generate the full root system by reflection closure.

    >>> a1 = RootDatum(1, IntMatrix(((2,),)), IntMatrix(((1,),)))
    >>> root_system(a1).positive[0].vector
    (2,)
    """
    validate_root_datum(rd)
    gens = [simple_reflection(rd, i) for i in range(rd.nsimple)]
    dual_gens = [dual_simple_reflection(rd, i) for i in range(rd.nsimple)]
    pairs = {
        (rd.simple_roots.rows[i], rd.simple_coroots.rows[i]) for i in range(rd.nsimple)
    }
    frontier = list(pairs)
    while frontier:
        nxt = []
        for vec, cov in frontier:
            for g, gd in zip(gens, dual_gens):
                p = (g.apply(vec), gd.apply(cov))
                if p not in pairs:
                    pairs.add(p)
                    nxt.append(p)
        frontier = nxt
    simple_t = rd.simple_roots.transpose()  # columns are the simple roots
    records = []
    for vec, cov in sorted(pairs):
        coeffs = qsolve(simple_t.rows, vec)
        assert coeffs is not None, "reflection closure left the root span"
        assert all(x.denominator == 1 for x in coeffs), "non-integral root coordinates"
        ints = tuple(int(x) for x in coeffs)
        if all(x >= 0 for x in ints):
            records.append((sum(ints), ints, vec, cov))
    records.sort(key=lambda rec: (rec[0], rec[1]))
    positive = []
    by_vector = {}
    n = rd.rank
    for idx, (height, coords, vec, cov) in enumerate(records):
        refl = IntMatrix(
            tuple(tuple((1 if r == c else 0) - vec[r] * cov[c] for c in range(n)) for r in range(n)),
            n,
        )
        positive.append(PositiveRoot(idx, vec, cov, coords, height, refl))
        by_vector[vec] = (idx, 1)
        by_vector[tuple(-x for x in vec)] = (idx, -1)
    return RootSystem(positive, by_vector)


def characters_of_group(rd: RootDatum) -> IntMatrix:
    """Basis of X(G_aff) = {chi in X(T) : <chi, alpha^vee> = 0 for all alpha}.

    Computed by column reduction, deliberately not via Smith form, so that
    the agreement with ``flag_picard_map(rd).hom.kernel_lattice()`` is a real
    cross-check of two code paths.

    >>> gl2 = RootDatum(2, IntMatrix(((1, -1),)), IntMatrix(((1, -1),)))
    >>> characters_of_group(gl2).rows
    ((1, 1),)
    """
    if rd.nsimple == 0:
        return IntMatrix.identity(rd.rank)
    return integer_kernel_by_columns(rd.simple_coroots)


@dataclass(frozen=True)
class FlagPicardMap:
    """The coroot-pairing map X(B) = X(T) -> Pic(flag variety) = Z^nsimple.

    ``pic`` is the cokernel: the Picard group of G_aff itself.
    """

    hom: GroupHom
    pic: FGAbelianGroup


def flag_picard_map(rd: RootDatum) -> FlagPicardMap:
    """chi |-> (<chi, alpha_1^vee>, ...) and its cokernel Pic(G_aff).

    >>> pgl2 = RootDatum(1, IntMatrix(((1,),)), IntMatrix(((2,),)))
    >>> flag_picard_map(pgl2).pic.describe()
    'Z/2'
    """
    hom = GroupHom(
        Presentation.free(rd.rank),
        Presentation.free(rd.nsimple),
        rd.simple_coroots,
    )
    return FlagPicardMap(hom, hom.cokernel_group())


def fundamental_weights_q(rd: RootDatum) -> list[tuple[Fraction, ...]]:
    """Fundamental weights of the root system inside X(T) tensor Q.

    varpi_j is the unique rational combination of simple roots with
    <varpi_j, alpha_i^vee> = delta_ij.
    """
    k = rd.nsimple
    if k == 0:
        return []
    cm = cartan_matrix(rd)
    weights = []
    for j in range(k):
        target = tuple(Fraction(1 if i == j else 0) for i in range(k))
        coeffs = qsolve(cm.transpose().rows, target)
        assert coeffs is not None, "Cartan matrix is invertible for finite type"
        vec = tuple(
            sum((c * r for c, r in zip(coeffs, col)), Fraction(0))
            for col in zip(*[[Fraction(x) for x in row] for row in rd.simple_roots.rows])
        )
        weights.append(vec)
    return weights


def factorial_cover_datum(rd: RootDatum) -> RootDatum:
    """Enlarge X(T) to X(T) + (weight lattice of the root system).

    The output datum has the same root system, its flag Picard map has
    trivial cokernel (the derived group becomes simply connected), and the
    inclusion of lattices corresponds to a finite central isogeny onto the
    input.  Data whose character lattice already contains every fundamental
    weight come back unchanged (the same object), so the construction is
    idempotent.  Note the enlargement can trigger even when the cokernel is
    already trivial (GL2: the weight (1/2, -1/2) is not a character); the
    larger lattice is what later makes the affinization of the cover
    surjective on characters.

    >>> pgl2 = RootDatum(1, IntMatrix(((1,),)), IntMatrix(((2,),)))
    >>> cover = factorial_cover_datum(pgl2)
    >>> cover.simple_roots.rows, cover.simple_coroots.rows
    (((2,),), ((1,),))
    """
    return factorial_cover_with_basis(rd)[0]


def factorial_cover_with_basis(rd: RootDatum) -> tuple[RootDatum, IntMatrix, int]:
    """Like :func:`factorial_cover_datum`, plus the change of lattice.

    Returns ``(datum, numerators, denom)`` where row j of ``numerators``
    divided by ``denom`` is the j-th new basis vector of the enlarged
    character lattice, written in the old rational coordinates.  Unchanged
    data return the identity basis with denominator 1.
    """
    validate_root_datum(rd)
    weights = fundamental_weights_q(rd)
    if all(all(x.denominator == 1 for x in w) for w in weights):
        return rd, IntMatrix.identity(rd.rank), 1
    denom = math.lcm(*[x.denominator for w in weights for x in w])
    n = rd.rank
    gens = [tuple(denom if i == j else 0 for j in range(n)) for i in range(n)]
    gens += [tuple(int(x * denom) for x in w) for w in weights]
    scaled = hermite_row_basis(IntMatrix(gens, n))
    assert scaled.nrows == n, "enlarged lattice must have full rank"
    # columns of basis_q are the new basis vectors in old (rational) coords
    basis_q = [[Fraction(scaled.rows[i][j], denom) for i in range(n)] for j in range(n)]

    def to_new(vec):
        sol = qsolve(basis_q, [Fraction(x) for x in vec])
        assert sol is not None and all(x.denominator == 1 for x in sol)
        return tuple(int(x) for x in sol)

    new_roots = IntMatrix(tuple(to_new(r) for r in rd.simple_roots.rows), n)
    new_coroots = []
    for cov in rd.simple_coroots.rows:
        row = []
        for i in range(n):
            val = sum(basis_q[c][i] * cov[c] for c in range(n))
            assert val.denominator == 1, "coroot fails to pair integrally with the new lattice"
            row.append(int(val))
        new_coroots.append(tuple(row))
    return RootDatum(n, new_roots, IntMatrix(new_coroots, n), rd.u_rad), scaled, denom


def contains_borel(rd: RootDatum, root_subset, q_is_identity: bool, cap: int = 1_000_000):
    """Does the root subset contain w(positive system) for some w in W?

    ``root_subset`` is an iterable of root vectors (X(T) coordinates, either
    sign).  Returns ``(found, witness)`` where the witness is the first such
    Weyl element in enumeration order, as a pair (index, reduced word), or
    None.  A subgroup whose torus is a proper quotient (``q_is_identity``
    false) never contains a Borel subgroup.
    """
    if not q_is_identity:
        return False, None
    subset = {tuple(int(x) for x in v) for v in root_subset}
    rs = root_system(rd)
    pos = [r.vector for r in rs.positive]
    w = weyl_group(rd, cap=cap)
    for idx, m in enumerate(w.elements):
        if all(m.apply(v) in subset for v in pos):
            return True, (idx, w.words[idx])
    return False, None
