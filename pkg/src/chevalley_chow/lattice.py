"""Exact integer linear algebra over Z and finitely generated abelian groups.

Everything here is exact and deterministic: matrices are immutable tuples of
ints, Smith and Hermite forms use fixed pivot rules, and every lattice-valued
answer is returned in row Hermite normal form so equal lattices compare equal.

Conventions:

* Matrices act on column vectors, ``f(x) = M @ x``.
* A lattice in Z^n is stored as a matrix whose rows are a basis.
* A finitely generated abelian group is presented by ``ngens`` generators
  and a matrix of relation rows; its isomorphism type is an
  :class:`FGAbelianGroup`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import GroupTooLarge, IllFormedHom, TorsionDomain

Vec = tuple[int, ...]


class IntMatrix:
    """Immutable integer matrix; hashable so it can key caches.

    >>> m = IntMatrix(((1, 2), (3, 4)))
    >>> m.apply((1, 0))
    (1, 3)
    >>> (m @ m).rows
    ((7, 10), (15, 22))
    """

    __slots__ = ("rows", "nrows", "ncols")

    def __init__(self, rows, ncols: int | None = None):
        rows = tuple(tuple(int(x) for x in r) for r in rows)
        if rows:
            width = len(rows[0])
            if any(len(r) != width for r in rows):
                raise ValueError("ragged rows")
            if ncols is not None and ncols != width:
                raise ValueError("ncols disagrees with row width")
            ncols = width
        elif ncols is None:
            raise ValueError("empty matrix needs explicit ncols")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "nrows", len(rows))
        object.__setattr__(self, "ncols", ncols)

    def __setattr__(self, name, value):
        raise AttributeError("IntMatrix is immutable")

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)), n)

    @classmethod
    def zero(cls, nrows: int, ncols: int) -> "IntMatrix":
        return cls(tuple((0,) * ncols for _ in range(nrows)), ncols)

    @classmethod
    def from_columns(cls, cols, nrows: int | None = None) -> "IntMatrix":
        cols = tuple(tuple(int(x) for x in c) for c in cols)
        if not cols:
            if nrows is None:
                raise ValueError("empty column list needs explicit nrows")
            return cls((), nrows).transpose()
        return cls(cols).transpose()

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    def column(self, j: int) -> Vec:
        return tuple(r[j] for r in self.rows)

    def columns(self) -> tuple[Vec, ...]:
        return tuple(self.column(j) for j in range(self.ncols))

    def transpose(self) -> "IntMatrix":
        if self.nrows == 0:
            return IntMatrix(tuple(() for _ in range(self.ncols)), 0) if self.ncols else IntMatrix((), 0)
        if self.ncols == 0:
            return IntMatrix((), self.nrows)
        return IntMatrix(tuple(zip(*self.rows)), self.nrows)

    def apply(self, vec) -> Vec:
        vec = tuple(vec)
        if len(vec) != self.ncols:
            raise ValueError("vector length mismatch")
        return tuple(sum(a * b for a, b in zip(row, vec)) for row in self.rows)

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch")
        cols = other.columns()
        return IntMatrix(
            tuple(tuple(sum(a * b for a, b in zip(row, col)) for col in cols) for row in self.rows),
            other.ncols,
        )

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return IntMatrix(tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows)), self.ncols)

    def __sub__(self, other: "IntMatrix") -> "IntMatrix":
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return IntMatrix(tuple(tuple(a - b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows)), self.ncols)

    def __neg__(self) -> "IntMatrix":
        return IntMatrix(tuple(tuple(-a for a in r) for r in self.rows), self.ncols)

    def is_zero(self) -> bool:
        return all(all(a == 0 for a in r) for r in self.rows)

    def det(self) -> int:
        """Determinant by fraction-free (Bareiss) elimination.

        >>> IntMatrix(((2, 3), (4, 5))).det()
        -2
        """
        if self.nrows != self.ncols:
            raise ValueError("det of non-square matrix")
        n = self.nrows
        if n == 0:
            return 1
        a = [list(r) for r in self.rows]
        sign = 1
        prev = 1
        for k in range(n - 1):
            if a[k][k] == 0:
                for i in range(k + 1, n):
                    if a[i][k] != 0:
                        a[k], a[i] = a[i], a[k]
                        sign = -sign
                        break
                else:
                    return 0
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
                a[i][k] = 0
            prev = a[k][k]
        return sign * a[n - 1][n - 1]

    def __eq__(self, other):
        return isinstance(other, IntMatrix) and self.rows == other.rows and self.ncols == other.ncols

    def __hash__(self):
        return hash((self.rows, self.ncols))

    def __repr__(self):
        return f"IntMatrix({list(map(list, self.rows))!r}, ncols={self.ncols})"


def vstack(*mats: IntMatrix) -> IntMatrix:
    if not mats:
        raise ValueError("nothing to stack")
    ncols = mats[0].ncols
    if any(m.ncols != ncols for m in mats):
        raise ValueError("column count mismatch")
    rows: list[Vec] = []
    for m in mats:
        rows.extend(m.rows)
    return IntMatrix(tuple(rows), ncols)


def hstack(*mats: IntMatrix) -> IntMatrix:
    if not mats:
        raise ValueError("nothing to stack")
    nrows = mats[0].nrows
    if any(m.nrows != nrows for m in mats):
        raise ValueError("row count mismatch")
    return IntMatrix(
        tuple(tuple(x for m in mats for x in m.rows[i]) for i in range(nrows)),
        sum(m.ncols for m in mats),
    )


# ---------------------------------------------------------------------------
# Smith and Hermite normal forms
# ---------------------------------------------------------------------------


def smith_normal_form(m: IntMatrix) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Return unimodular ``(U, S, V)`` with ``U @ m @ V == S`` in Smith form.

    The diagonal of S is nonnegative and each entry divides the next.
    Pivot choice is the minimal absolute value with lowest (row, col) as
    tie break, so the transform matrices are deterministic.

    >>> U, S, V = smith_normal_form(IntMatrix(((2, 4), (6, 8))))
    >>> [S.rows[i][i] for i in range(2)]
    [2, 4]
    >>> (U @ IntMatrix(((2, 4), (6, 8))) @ V) == S
    True
    """
    a = [list(r) for r in m.rows]
    nr, nc = m.nrows, m.ncols
    u = [[1 if i == j else 0 for j in range(nr)] for i in range(nr)]
    v = [[1 if i == j else 0 for j in range(nc)] for i in range(nc)]

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):
        # row_dst += q * row_src
        a[dst] = [x + q * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x + q * y for x, y in zip(u[dst], u[src])]

    def add_col(dst, src, q):
        for row in a:
            row[dst] += q * row[src]
        for row in v:
            row[dst] += q * row[src]

    t = 0
    while t < min(nr, nc):
        best = None
        for i in range(t, nr):
            for j in range(t, nc):
                if a[i][j] != 0 and (best is None or (abs(a[i][j]), i, j) < best[0]):
                    best = ((abs(a[i][j]), i, j), i, j)
        if best is None:
            break
        _, pi, pj = best
        if pi != t:
            swap_rows(t, pi)
        if pj != t:
            swap_cols(t, pj)
        while True:
            # clear column t with row operations; a swap strictly shrinks the pivot
            for i in range(nr):
                if i == t:
                    continue
                while a[i][t] != 0:
                    add_row(i, t, -(a[i][t] // a[t][t]))
                    if a[i][t] != 0:
                        swap_rows(i, t)
            for j in range(nc):
                if j == t:
                    continue
                while a[t][j] != 0:
                    add_col(j, t, -(a[t][j] // a[t][t]))
                    if a[t][j] != 0:
                        swap_cols(j, t)
            if any(a[i][t] != 0 for i in range(nr) if i != t):
                continue  # column swaps disturbed column t, redo
            bad = None
            for i in range(t + 1, nr):
                for j in range(t + 1, nc):
                    if a[i][j] % a[t][t] != 0:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            add_row(t, bad, 1)  # pull a non-multiple into row t, then re-clear
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]
        t += 1
    return IntMatrix(u, nr), IntMatrix(a, nc), IntMatrix(v, nc)


def invariant_factors(m: IntMatrix) -> tuple[int, ...]:
    """Nonzero diagonal of the Smith form, in divisibility order."""
    _, s, _ = smith_normal_form(m)
    return tuple(s.rows[i][i] for i in range(min(s.nrows, s.ncols)) if s.rows[i][i] != 0)


def hermite_row_basis(m: IntMatrix) -> IntMatrix:
    """Canonical basis of the lattice spanned by the rows of ``m``.

    Row Hermite normal form with positive pivots, entries above each pivot
    reduced into ``[0, pivot)``, zero rows dropped.  Two matrices span the
    same lattice iff this returns the same matrix.

    >>> hermite_row_basis(IntMatrix(((2, 1), (0, 3)))).rows
    ((2, 1), (0, 3))
    >>> hermite_row_basis(IntMatrix(((0, 3), (2, 1)))).rows
    ((2, 1), (0, 3))
    """
    a = [list(r) for r in m.rows]
    nr, nc = len(a), m.ncols
    r = 0
    for c in range(nc):
        if r == nr:
            break
        while True:
            nz = [i for i in range(r, nr) if a[i][c] != 0]
            if not nz:
                break
            i0 = min(nz, key=lambda i: (abs(a[i][c]), i))
            if i0 != r:
                a[r], a[i0] = a[i0], a[r]
            changed = False
            for i in range(r + 1, nr):
                if a[i][c] != 0:
                    q = a[i][c] // a[r][c]
                    a[i] = [x - q * y for x, y in zip(a[i], a[r])]
                    if a[i][c] != 0:
                        changed = True
            if not changed:
                break
        if a[r][c] != 0:
            if a[r][c] < 0:
                a[r] = [-x for x in a[r]]
            for i in range(r):
                q = a[i][c] // a[r][c]
                if q:
                    a[i] = [x - q * y for x, y in zip(a[i], a[r])]
            r += 1
    return IntMatrix(tuple(tuple(row) for row in a[:r]), nc)


def integer_kernel(m: IntMatrix) -> IntMatrix:
    """Canonical row basis of ``{x in Z^ncols : m @ x == 0}``.

    >>> integer_kernel(IntMatrix(((2, 4),))).rows
    ((2, -1),)
    """
    _, s, v = smith_normal_form(m)
    rank = len(invariant_factors_from_smith(s))
    cols = [v.column(j) for j in range(rank, m.ncols)]
    return hermite_row_basis(IntMatrix(tuple(cols), m.ncols))


def invariant_factors_from_smith(s: IntMatrix) -> tuple[int, ...]:
    return tuple(s.rows[i][i] for i in range(min(s.nrows, s.ncols)) if s.rows[i][i] != 0)


def integer_kernel_by_columns(m: IntMatrix) -> IntMatrix:
    """Same lattice as :func:`integer_kernel`, by plain column reduction.

    Kept as an independent second path so higher layers can cross-check the
    Smith route against it.
    """
    a = [list(r) for r in m.rows]
    nr, nc = m.nrows, m.ncols
    v = [[1 if i == j else 0 for j in range(nc)] for i in range(nc)]

    def col(j):
        return [a[i][j] for i in range(nr)]

    def add_col(dst, src, q):
        for row in a:
            row[dst] += q * row[src]
        for row in v:
            row[dst] += q * row[src]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    t = 0  # next column to place a pivot in
    for i in range(nr):
        while True:
            nz = [j for j in range(t, nc) if a[i][j] != 0]
            if not nz:
                break
            j0 = min(nz, key=lambda j: (abs(a[i][j]), j))
            if j0 != t:
                swap_cols(t, j0)
            done = True
            for j in range(t + 1, nc):
                if a[i][j] != 0:
                    add_col(j, t, -(a[i][j] // a[i][t]))
                    if a[i][j] != 0:
                        done = False
            if done:
                break
        if any(a[i][j] != 0 for j in range(t, nc)):
            t += 1
    kernel_cols = [tuple(v[i][j] for i in range(nc)) for j in range(t, nc) if all(col(j)[i] == 0 for i in range(nr))]
    return hermite_row_basis(IntMatrix(tuple(kernel_cols), nc))


def solve_integer(m: IntMatrix, b) -> Vec | None:
    """One integer solution of ``m @ x == b``, or None.

    >>> solve_integer(IntMatrix(((2, 4), (6, 8))), (2, 6))
    (1, 0)
    >>> solve_integer(IntMatrix(((2,),)), (3,)) is None
    True
    """
    b = tuple(int(x) for x in b)
    if len(b) != m.nrows:
        raise ValueError("rhs length mismatch")
    u, s, v = smith_normal_form(m)
    c = u.apply(b)
    y = []
    for i in range(m.ncols):
        d = s.rows[i][i] if i < s.nrows else 0
        if d != 0:
            if c[i] % d != 0:
                return None
            y.append(c[i] // d)
        else:
            if i < m.nrows and c[i] != 0:
                return None
            y.append(0)
    if any(c[i] != 0 for i in range(m.ncols, m.nrows)):
        return None
    return v.apply(tuple(y))


def lattice_contains(basis: IntMatrix, vec) -> bool:
    """Is ``vec`` in the row lattice of ``basis``?"""
    vec = tuple(int(x) for x in vec)
    if len(vec) != basis.ncols:
        raise ValueError("vector length mismatch")
    return solve_integer(basis.transpose(), vec) is not None


def lattice_le(sub: IntMatrix, sup: IntMatrix) -> bool:
    """Is every row of ``sub`` in the row lattice of ``sup``?"""
    return all(lattice_contains(sup, r) for r in sub.rows)


def saturate_rows(m: IntMatrix) -> IntMatrix:
    """Saturation of the row lattice: ``(Q-span of rows) intersect Z^n``.

    >>> saturate_rows(IntMatrix(((2, 4),))).rows
    ((1, 2),)
    """
    return integer_kernel(integer_kernel(m))


def intersect_rows(m1: IntMatrix, m2: IntMatrix) -> IntMatrix:
    """Canonical basis of the intersection of two row lattices in Z^n."""
    if m1.ncols != m2.ncols:
        raise ValueError("ambient mismatch")
    # x in L1 cap L2  iff  x = a @ m1 = b @ m2 for integer a, b
    stacked = hstack(m1.transpose(), -m2.transpose())
    ker = integer_kernel(stacked)  # rows are (a, b) with a @ m1 == b @ m2
    rows = tuple(m1.transpose().apply(r[: m1.nrows]) for r in ker.rows)
    return hermite_row_basis(IntMatrix(rows, m1.ncols) if rows else IntMatrix((), m1.ncols))


# ---------------------------------------------------------------------------
# Finitely generated abelian groups
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FGAbelianGroup:
    """Isomorphism type ``Z^rank + Z/t1 + ... + Z/tk`` with ``t1 | t2 | ...``.

    >>> FGAbelianGroup(1, (2, 6)).describe()
    'Z + Z/2 + Z/6'
    """

    rank: int
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        if self.rank < 0:
            raise ValueError("negative rank")
        object.__setattr__(self, "torsion", tuple(int(t) for t in self.torsion))
        if any(t < 2 for t in self.torsion):
            raise ValueError("torsion entries must be >= 2")
        for a, b in zip(self.torsion, self.torsion[1:]):
            if b % a != 0:
                raise ValueError("torsion must form a divisibility chain")

    @property
    def is_trivial(self) -> bool:
        return self.rank == 0 and not self.torsion

    @property
    def is_finite(self) -> bool:
        return self.rank == 0

    def order(self) -> int | None:
        """Number of elements, or None when infinite."""
        if self.rank:
            return None
        return math.prod(self.torsion) if self.torsion else 1

    def torsion_order(self) -> int:
        return math.prod(self.torsion) if self.torsion else 1

    def direct_sum(self, other: "FGAbelianGroup") -> "FGAbelianGroup":
        rel = [[0] * (len(self.torsion) + len(other.torsion)) for _ in range(len(self.torsion) + len(other.torsion))]
        for i, t in enumerate(self.torsion + other.torsion):
            rel[i][i] = t
        merged = group_from_relations(len(rel), IntMatrix(rel, len(rel)) if rel else IntMatrix((), 0))
        return FGAbelianGroup(self.rank + other.rank + merged.rank, merged.torsion)

    def describe(self) -> str:
        parts = []
        if self.rank == 1:
            parts.append("Z")
        elif self.rank > 1:
            parts.append(f"Z^{self.rank}")
        parts.extend(f"Z/{t}" for t in self.torsion)
        return " + ".join(parts) if parts else "0"

    def __str__(self):
        return self.describe()


def group_from_relations(ngens: int, relations: IntMatrix) -> FGAbelianGroup:
    """Structure of ``Z^ngens / (row lattice of relations)``.

    >>> group_from_relations(2, IntMatrix(((2, 0), (1, 3)))).describe()
    'Z/6'
    """
    if relations.nrows and relations.ncols != ngens:
        raise ValueError("relation width mismatch")
    if relations.nrows == 0:
        return FGAbelianGroup(ngens)
    facs = invariant_factors(relations)
    return FGAbelianGroup(ngens - len(facs), tuple(f for f in facs if f > 1))


def quotient_group(sup: IntMatrix, sub: IntMatrix) -> FGAbelianGroup:
    """Structure of ``(L_sup + L_sub) / L_sub`` for row lattices in Z^n."""
    if sup.ncols != sub.ncols:
        raise ValueError("ambient mismatch")
    basis = hermite_row_basis(vstack(sup, sub))
    if basis.nrows == 0:
        return FGAbelianGroup(0)
    rel_rows = []
    bt = basis.transpose()
    for r in sub.rows:
        coeffs = solve_integer(bt, r)
        assert coeffs is not None, "sublattice escaped its own span"
        rel_rows.append(coeffs)
    rels = IntMatrix(tuple(rel_rows), basis.nrows) if rel_rows else IntMatrix((), basis.nrows)
    return group_from_relations(basis.nrows, rels)


@dataclass(frozen=True)
class Presentation:
    """A f.g. abelian group with chosen generators: ``Z^ngens / relations``."""

    ngens: int
    relations: IntMatrix

    def __post_init__(self):
        if self.relations.nrows and self.relations.ncols != self.ngens:
            raise ValueError("relation width mismatch")
        if not self.relations.nrows and self.relations.ncols != self.ngens:
            object.__setattr__(self, "relations", IntMatrix((), self.ngens))

    @classmethod
    def free(cls, n: int) -> "Presentation":
        return cls(n, IntMatrix((), n))

    @property
    def is_free(self) -> bool:
        return self.relations.nrows == 0 or hermite_row_basis(self.relations).nrows == 0

    def group(self) -> FGAbelianGroup:
        return group_from_relations(self.ngens, self.relations)

    def contains_relation(self, vec) -> bool:
        """Is ``vec`` zero in the presented group?"""
        if self.relations.nrows == 0:
            return all(x == 0 for x in vec)
        return lattice_contains(hermite_row_basis(self.relations), vec)


@dataclass(frozen=True)
class GroupHom:
    """Homomorphism between presented groups, as a matrix on generator coords.

    ``matrix`` has shape (codomain.ngens, domain.ngens) and acts on column
    vectors.  Well-definedness (relations land in relations) is checked at
    construction time and raises :class:`IllFormedHom` when violated.
    """

    domain: Presentation
    codomain: Presentation
    matrix: IntMatrix

    def __post_init__(self):
        if self.matrix.shape != (self.codomain.ngens, self.domain.ngens):
            raise ValueError(
                f"hom matrix shape {self.matrix.shape} does not match "
                f"({self.codomain.ngens}, {self.domain.ngens})"
            )
        for rel in self.domain.relations.rows:
            if not self.codomain.contains_relation(self.matrix.apply(rel)):
                raise IllFormedHom(f"relation {rel} maps to a nonzero element")

    def apply(self, vec) -> Vec:
        return self.matrix.apply(vec)

    def compose(self, inner: "GroupHom") -> "GroupHom":
        """self after inner."""
        if inner.codomain != self.domain:
            raise ValueError("composition mismatch")
        return GroupHom(inner.domain, self.codomain, self.matrix @ inner.matrix)

    def kernel_lattice(self, saturate: bool = False) -> IntMatrix:
        """Canonical basis of ``{x : f(x) = 0 in codomain}``.

        Only defined when the domain is an honest lattice; a domain with
        relations raises :class:`TorsionDomain`.  With ``saturate=True`` the
        result is enlarged to its rational closure in the domain.
        """
        if self.domain.relations.nrows and not self.domain.is_free:
            raise TorsionDomain("kernel lattice of a torsion domain is not a lattice")
        rel = hermite_row_basis(self.codomain.relations) if self.codomain.relations.nrows \
            else IntMatrix((), self.codomain.ngens)
        if rel.nrows:
            stacked = hstack(self.matrix, -rel.transpose())
            ker = integer_kernel(stacked)
            rows = tuple(r[: self.domain.ngens] for r in ker.rows)
            out = hermite_row_basis(IntMatrix(rows, self.domain.ngens))
        else:
            out = integer_kernel(self.matrix)
        if saturate:
            out = saturate_rows(out)
        return out

    def image_group(self) -> FGAbelianGroup:
        """Isomorphism type of the image subgroup of the codomain."""
        img = self.matrix.transpose()  # rows are images of domain generators
        rel = self.codomain.relations
        sup = vstack(img, rel) if rel.nrows else img
        return quotient_group(sup, rel if rel.nrows else IntMatrix((), self.codomain.ngens))

    def cokernel_group(self) -> FGAbelianGroup:
        rels = vstack(self.matrix.transpose(), self.codomain.relations) \
            if self.codomain.relations.nrows else self.matrix.transpose()
        return group_from_relations(self.codomain.ngens, rels)

    def cokernel_presentation(self) -> Presentation:
        rels = vstack(self.matrix.transpose(), self.codomain.relations) \
            if self.codomain.relations.nrows else self.matrix.transpose()
        return Presentation(self.codomain.ngens, hermite_row_basis(rels))

    def is_surjective(self) -> bool:
        return self.cokernel_group().is_trivial


def image_lattice(m: IntMatrix) -> IntMatrix:
    """Canonical basis of the column span of ``m`` (codomain assumed free)."""
    return hermite_row_basis(m.transpose())


# ---------------------------------------------------------------------------
# Finite matrix groups
# ---------------------------------------------------------------------------


def enumerate_matrix_group(gens, cap: int = 1_000_000) -> tuple[IntMatrix, ...]:
    """All products of the generators, by breadth-first closure.

    The identity comes first and elements appear in BFS discovery order, so
    the output is deterministic.  Raises :class:`GroupTooLarge` beyond
    ``cap`` elements.  Generators must be invertible over Z (det +-1); this
    guarantees the closure is a group when it is finite.
    """
    gens = tuple(gens)
    if not gens:
        raise ValueError("need at least one generator (or pass the identity)")
    n = gens[0].nrows
    for g in gens:
        if g.shape != (n, n):
            raise ValueError("generators must be square of equal size")
        if g.det() not in (1, -1):
            raise ValueError("generator is not invertible over Z")
    ident = IntMatrix.identity(n)
    seen = {ident}
    order = [ident]
    frontier = [ident]
    while frontier:
        nxt = []
        for m in frontier:
            for g in gens:
                prod = m @ g
                if prod not in seen:
                    if len(seen) >= cap:
                        raise GroupTooLarge(f"matrix group exceeds cap {cap}")
                    seen.add(prod)
                    order.append(prod)
                    nxt.append(prod)
        frontier = nxt
    return tuple(order)


def fixed_sublattice(gens, n: int, cap: int = 1_000_000) -> IntMatrix:
    """Canonical basis of ``{x in Z^n : g @ x == x for every generator}``.

    The generated group must be finite; that is enforced by enumerating it
    under ``cap`` (GroupTooLarge otherwise).  The fixed lattice itself only
    needs the generators: a vector fixed by all of them is fixed by the
    whole group.

    >>> swap = IntMatrix(((0, 1), (1, 0)))
    >>> fixed_sublattice([swap], 2).rows
    ((1, 1),)
    """
    gens = tuple(gens)
    if not gens:
        return IntMatrix.identity(n)
    enumerate_matrix_group(gens, cap=cap)
    blocks = [g - IntMatrix.identity(n) for g in gens]
    return integer_kernel(vstack(*blocks))
