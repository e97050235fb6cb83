"""Degree-truncated graded algebra over Q.

Polynomials are dicts mapping exponent tuples to nonzero Fractions.  The
variables are the coordinates of a character lattice Z^rank, matrices act by
linear substitution, and every slice computation is plain exact linear
algebra over the monomial basis.

Monomial order everywhere: within a fixed total degree, exponent vectors in
descending lexicographic order, so for two variables degree 2 reads
x^2, xy, y^2.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable

from .errors import DegreeTooLarge
from .lattice import IntMatrix, enumerate_matrix_group
from .qlinalg import SpanBuilder

Poly = dict[tuple[int, ...], Fraction]

#: hard ceiling on requested degrees; generous for desk-scale data
DEGREE_BUDGET = 64


@lru_cache(maxsize=None)
def sym_basis(rank: int, d: int) -> tuple[tuple[int, ...], ...]:
    """Monomials of total degree d in ``rank`` variables, lex descending.

    >>> sym_basis(2, 2)
    ((2, 0), (1, 1), (0, 2))
    >>> len(sym_basis(3, 2))
    6
    """
    if d < 0:
        raise ValueError("negative degree")
    if d > DEGREE_BUDGET:
        raise DegreeTooLarge(f"degree {d} exceeds budget {DEGREE_BUDGET}")
    if rank == 0:
        return ((),) if d == 0 else ()

    def gen(nvars, total):
        if nvars == 1:
            yield (total,)
            return
        for first in range(total, -1, -1):
            for rest in gen(nvars - 1, total - first):
                yield (first,) + rest

    return tuple(gen(rank, d))


def poly_add(a: Poly, b: Poly) -> Poly:
    out = dict(a)
    for m, c in b.items():
        s = out.get(m, Fraction(0)) + c
        if s:
            out[m] = s
        else:
            out.pop(m, None)
    return out


def poly_scale(a: Poly, c) -> Poly:
    c = Fraction(c)
    if not c:
        return {}
    return {m: v * c for m, v in a.items()}


def poly_sub(a: Poly, b: Poly) -> Poly:
    return poly_add(a, poly_scale(b, -1))


def poly_mul(a: Poly, b: Poly) -> Poly:
    out: Poly = {}
    for ma, ca in a.items():
        for mb, cb in b.items():
            m = tuple(x + y for x, y in zip(ma, mb))
            s = out.get(m, Fraction(0)) + ca * cb
            if s:
                out[m] = s
            else:
                out.pop(m, None)
    return out


def poly_degree(a: Poly) -> int | None:
    """Total degree, or None for the zero polynomial (must be homogeneous)."""
    degs = {sum(m) for m in a}
    if not degs:
        return None
    if len(degs) != 1:
        raise ValueError("polynomial is not homogeneous")
    return degs.pop()


def linear_poly(vec) -> Poly:
    """The linear form with the given lattice coordinates."""
    n = len(vec)
    out: Poly = {}
    for i, c in enumerate(vec):
        if c:
            m = tuple(1 if j == i else 0 for j in range(n))
            out[m] = Fraction(c)
    return out


def coeff_vector(a: Poly, rank: int, d: int) -> tuple[Fraction, ...]:
    basis = sym_basis(rank, d)
    lookup = {m: i for i, m in enumerate(basis)}
    vec = [Fraction(0)] * len(basis)
    for m, c in a.items():
        vec[lookup[m]] = c
    return tuple(vec)


def poly_from_vector(vec, rank: int, d: int) -> Poly:
    basis = sym_basis(rank, d)
    return {m: Fraction(c) for m, c in zip(basis, vec) if c}


def substitute(matrix: IntMatrix, a: Poly) -> Poly:
    """Act by the lattice map: variable x_i becomes sum_j matrix[j][i] x_j.

    This is the action induced on Sym(X) by the column action on X, so
    ``substitute(g, substitute(h, f)) == substitute(g @ h, f)``.
    """
    n = matrix.nrows
    images = [linear_poly(matrix.column(i)) for i in range(matrix.ncols)]
    out: Poly = {}
    for m, c in a.items():
        term: Poly = {(0,) * n: c}
        for i, e in enumerate(m):
            for _ in range(e):
                term = poly_mul(term, images[i])
        out = poly_add(out, term)
    return out


def exact_divide_linear(a: Poly, linear: Poly) -> Poly:
    """Quotient a / linear when the division is exact; raises otherwise."""
    if not a:
        return {}
    if not linear:
        raise ZeroDivisionError("division by zero polynomial")
    # pivot variable: the first variable the linear form involves
    pvar = min(next(i for i, e in enumerate(m) if e) for m in linear)
    nvars = len(next(iter(linear)))
    pcoeff = linear[tuple(1 if j == pvar else 0 for j in range(nvars))]
    rem = dict(a)
    quo: Poly = {}
    while rem:
        m = max(rem, key=lambda mm: (mm[pvar], mm))
        if m[pvar] == 0:
            raise ValueError("polynomial is not divisible by the linear form")
        qm = tuple(e - (1 if i == pvar else 0) for i, e in enumerate(m))
        qc = rem[m] / pcoeff
        quo = poly_add(quo, {qm: qc})
        rem = poly_sub(rem, poly_mul({qm: qc}, linear))
    return quo


# ---------------------------------------------------------------------------
# Invariant slices and graded algebras
# ---------------------------------------------------------------------------


def invariant_slice(rank: int, generators, d: int, cap: int = 1_000_000) -> list[Poly]:
    """Basis of the degree-d invariants of the finite group the generators span.

    Reynolds averaging: each monomial is averaged over the enumerated group
    and the resulting vectors are reduced to an echelon basis.  Deterministic
    for fixed inputs.

    >>> minus = IntMatrix(((-1,),))
    >>> [len(invariant_slice(1, [minus], d)) for d in range(4)]
    [1, 0, 1, 0]
    """
    gens = tuple(generators)
    if not gens:
        return [{m: Fraction(1)} for m in sym_basis(rank, d)]
    group = enumerate_matrix_group(gens, cap=cap)
    scale = Fraction(1, len(group))
    builder = SpanBuilder(len(sym_basis(rank, d)))
    polys = []
    for m in sym_basis(rank, d):
        avg: Poly = {}
        for g in group:
            avg = poly_add(avg, substitute(g, {m: Fraction(1)}))
        avg = poly_scale(avg, scale)
        if avg and builder.add(coeff_vector(avg, rank, d)):
            polys.append(avg)
    return polys


def invariant_slice_bruteforce(rank: int, generators, d: int) -> int:
    """Dimension of the degree-d invariants by a fixed-space solve.

    Independent oracle for :func:`invariant_slice`: stacks the matrices of
    (g - 1) acting on Sym^d for each generator and counts the nullspace.
    """
    from .qlinalg import nullspace

    basis = sym_basis(rank, d)
    if not basis:
        return 0
    gens = tuple(generators)
    if not gens:
        return len(basis)
    rows = []
    for g in gens:
        # columns of rho_d(g) are the images of the source monomials
        cols = [coeff_vector(substitute(g, {m: Fraction(1)}), rank, d) for m in basis]
        for t in range(len(basis)):
            rows.append([cols[s][t] - (1 if s == t else 0) for s in range(len(basis))])
    return len(nullspace(rows, len(basis)))


def restrict_symmetric(q_matrix: IntMatrix, a: Poly) -> Poly:
    """Push a polynomial along a lattice surjection q: X(T) -> X(T_H).

    Plain substitution: a character chi maps to q(chi), so the variable x_i
    maps to the linear form with coordinates column i of q.

    >>> q = IntMatrix(((1, 1),))
    >>> restrict_symmetric(q, {(1, 1): Fraction(1)})  # x*y with (a,b) -> a+b
    {(2,): Fraction(1, 1)}
    """
    return substitute(q_matrix, a)


@dataclass(frozen=True)
class GradedAlgebra:
    """A graded subalgebra of a polynomial ring, presented by its slices."""

    rank: int
    slice_basis: Callable[[int], list[Poly]]

    def dim(self, d: int) -> int:
        return len(self.slice_basis(d))


def full_algebra(rank: int) -> GradedAlgebra:
    """Sym(Q^rank) itself."""

    def slices(d: int) -> list[Poly]:
        return [{m: Fraction(1)} for m in sym_basis(rank, d)]

    return GradedAlgebra(rank, slices)


def invariant_algebra(rank: int, generators, cap: int = 1_000_000) -> GradedAlgebra:
    """The invariant subalgebra of a finite matrix-group action; slices cached."""
    gens = tuple(generators)
    cache: dict[int, list[Poly]] = {}

    def slices(d: int) -> list[Poly]:
        if d not in cache:
            cache[d] = invariant_slice(rank, gens, d, cap=cap)
        return cache[d]

    return GradedAlgebra(rank, slices)


def ideal_slice(ambient: GradedAlgebra, generators: list[Poly], d: int) -> list[Poly]:
    """Degree-d piece of the ideal the generators span inside ``ambient``.

    Generators must be homogeneous of positive degree.  The slice is the span
    of g * a over generators g and ambient basis elements a of complementary
    degree, echelon-reduced.

    >>> t2 = {(2,): Fraction(1)}
    >>> ideal_slice(full_algebra(1), [t2], 3)
    [{(3,): Fraction(1, 1)}]
    >>> ideal_slice(full_algebra(1), [t2], 1)
    []
    """
    builder = SpanBuilder(len(sym_basis(ambient.rank, d)))
    out = []
    for g in generators:
        e = poly_degree(g)
        if e is None:
            continue
        if e < 1:
            raise ValueError("ideal generators must have positive degree")
        if e > d:
            continue
        for a in ambient.slice_basis(d - e):
            prod = poly_mul(g, a)
            if prod and builder.add(coeff_vector(prod, ambient.rank, d)):
                out.append(prod)
    return out


@dataclass(frozen=True)
class TruncatedQuotient:
    """Graded quotient ambient/ideal, truncated at max_degree.

    ``reps`` holds coset representatives (ambient basis elements that
    complete the ideal slice to the full slice); ``dims`` their counts.
    """

    rank: int
    max_degree: int
    dims: tuple[int, ...]
    reps: tuple[tuple[Poly, ...], ...]
    ideal: tuple[tuple[Poly, ...], ...]
    ambient_dims: tuple[int, ...]

    @property
    def total_dim(self) -> int:
        return sum(self.dims)

    @property
    def top_degree(self) -> int | None:
        """Largest degree with a nonzero slice, None if the quotient is 0."""
        nz = [d for d, k in enumerate(self.dims) if k]
        return nz[-1] if nz else None

    @property
    def vanishes_at_top(self) -> bool:
        """False means the truncation window may have cut off nonzero slices."""
        return self.dims[-1] == 0 if self.dims else True


def truncated_quotient(ambient: GradedAlgebra, generators: list[Poly], max_degree: int) -> TruncatedQuotient:
    """Quotient of ``ambient`` by the ideal the generators span, degreewise.

    >>> t = {(2,): Fraction(1)}
    >>> truncated_quotient(full_algebra(1), [t], 3).dims
    (1, 1, 0, 0)
    """
    dims = []
    reps = []
    ideal = []
    ambient_dims = []
    for d in range(max_degree + 1):
        amb = ambient.slice_basis(d)
        ambient_dims.append(len(amb))
        ide = ideal_slice(ambient, generators, d)
        ideal.append(tuple(ide))
        builder = SpanBuilder(len(sym_basis(ambient.rank, d)))
        for p in ide:
            builder.add(coeff_vector(p, ambient.rank, d))
        chosen = []
        for p in amb:
            if builder.add(coeff_vector(p, ambient.rank, d)):
                chosen.append(p)
        reps.append(tuple(chosen))
        dims.append(len(chosen))
    return TruncatedQuotient(
        ambient.rank, max_degree, tuple(dims), tuple(reps), tuple(ideal), tuple(ambient_dims)
    )
