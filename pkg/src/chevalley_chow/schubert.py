"""Chow ring of the flag variety of a reductive datum.

Schubert classes are indexed by Weyl elements (their position in the
breadth-first enumeration); the codegree of sigma_w is length(w).  Two
independent multiplication routes are provided: the closed divisor formula
(:func:`chevalley_multiply`) and polynomial representatives in the
coinvariant algebra (:func:`schubert_product`), which agree on divisors and
cross-check each other in the tests.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import NonIntegralStructureConstant
from .invariants import (
    Poly,
    coeff_vector,
    exact_divide_linear,
    full_algebra,
    ideal_slice,
    invariant_slice,
    linear_poly,
    poly_mul,
    poly_scale,
    poly_sub,
    substitute,
    sym_basis,
)
from .lattice import Vec
from .qlinalg import SpanBuilder, qsolve
from .rootdata import RootDatum, root_system, weyl_group


@dataclass(frozen=True)
class SchubertClass:
    index: int      # position in the Weyl enumeration
    codegree: int   # = length of the Weyl element


@dataclass(frozen=True)
class SchubertExpansion:
    """Homogeneous element of the flag Chow ring in the Schubert basis."""

    codegree: int
    terms: dict[int, Fraction]  # weyl index -> nonzero coefficient

    def integral_terms(self) -> dict[int, int]:
        out = {}
        for idx, c in self.terms.items():
            if Fraction(c).denominator != 1:
                raise NonIntegralStructureConstant(f"coefficient {c} at class {idx}")
            out[idx] = int(c)
        return out

    @property
    def is_zero(self) -> bool:
        return not self.terms


def schubert_basis(rd: RootDatum, cap: int = 1_000_000) -> tuple[SchubertClass, ...]:
    """One class per Weyl element, in enumeration order (codegrees ascending).

    >>> from .lattice import IntMatrix
    >>> a1 = RootDatum(1, IntMatrix(((2,),)), IntMatrix(((1,),)))
    >>> [c.codegree for c in schubert_basis(a1)]
    [0, 1]
    """
    w = weyl_group(rd, cap=cap)
    return tuple(SchubertClass(i, w.lengths[i]) for i in range(len(w)))


def codegree_histogram(rd: RootDatum, cap: int = 1_000_000) -> tuple[int, ...]:
    w = weyl_group(rd, cap=cap)
    top = max(w.lengths) if len(w) else 0
    hist = [0] * (top + 1)
    for length in w.lengths:
        hist[length] += 1
    return tuple(hist)


def chevalley_multiply(rd: RootDatum, lam, w_index: int, cap: int = 1_000_000) -> SchubertExpansion:
    """Divisor class of the character ``lam`` times sigma_w.

    The closed formula: sum over positive roots beta with
    length(w s_beta) = length(w) + 1 of <lam, beta^vee> sigma_{w s_beta}.

    >>> from .lattice import IntMatrix
    >>> a1 = RootDatum(1, IntMatrix(((2,),)), IntMatrix(((1,),)))
    >>> chevalley_multiply(a1, (1,), 0).terms
    {1: Fraction(1, 1)}
    """
    w = weyl_group(rd, cap=cap)
    rs = root_system(rd)
    lam = tuple(int(x) for x in lam)
    base = w.elements[w_index]
    target_len = w.lengths[w_index] + 1
    terms: dict[int, Fraction] = {}
    for root in rs.positive:
        prod = base @ root.reflection
        idx = w.index[prod]
        if w.lengths[idx] != target_len:
            continue
        c = rd.pairing(lam, root.coroot)
        if c:
            s = terms.get(idx, Fraction(0)) + c
            if s:
                terms[idx] = Fraction(s)
            else:
                terms.pop(idx, None)
    return SchubertExpansion(target_len, terms)


@lru_cache(maxsize=None)
def _representative_table(rd: RootDatum, cap: int = 1_000_000) -> tuple[Poly, ...]:
    """BGG representatives P_w in Sym X(T)_Q, one per Weyl element.

    P_{w0} is the product of the positive roots over |W|; going down,
    P_v = divided_difference_i(P_{v s_i}) for the least i ascending v.  The
    identity must come out as the constant 1, which is asserted.
    """
    w = weyl_group(rd, cap=cap)
    rs = root_system(rd)
    n = rd.rank
    reps: list[Poly | None] = [None] * len(w)
    top: Poly = {(0,) * n: Fraction(1, len(w))}
    for root in rs.positive:
        top = poly_mul(top, linear_poly(root.vector))
    order = sorted(range(len(w)), key=lambda i: -w.lengths[i])
    reps[order[0]] = top
    simple_linears = [linear_poly(rd.simple_roots.rows[i]) for i in range(rd.nsimple)]
    for pos in order[1:]:
        v = w.elements[pos]
        length = w.lengths[pos]
        done = False
        for i in range(rd.nsimple):
            up = v @ w.generators[i]
            up_idx = w.index[up]
            if w.lengths[up_idx] == length + 1 and reps[up_idx] is not None:
                f = reps[up_idx]
                reps[pos] = exact_divide_linear(poly_sub(f, substitute(w.generators[i], f)), simple_linears[i])
                done = True
                break
        assert done, "every non-longest element has an ascent"
    assert reps[0] == {(0,) * n: Fraction(1)}, f"degree-0 representative came out as {reps[0]}"
    return tuple(reps)


def schubert_representatives(rd: RootDatum, max_degree: int | None = None, cap: int = 1_000_000) -> dict[int, Poly]:
    """Coinvariant-algebra representatives, keyed by Weyl index.

    Only classes of codegree <= max_degree are returned when a bound is given.
    """
    table = _representative_table(rd, cap)
    w = weyl_group(rd, cap=cap)
    return {
        i: table[i]
        for i in range(len(w))
        if max_degree is None or w.lengths[i] <= max_degree
    }


@lru_cache(maxsize=None)
def _coinvariant_reducer(rd: RootDatum, d: int, cap: int = 1_000_000):
    """SpanBuilder primed with the degree-d slice of the coinvariant ideal."""
    gens: list[Poly] = []
    refl = weyl_group(rd, cap=cap).generators
    for e in range(1, d + 1):
        gens.extend(invariant_slice(rd.rank, refl, e, cap=cap))
    slice_basis = ideal_slice(full_algebra(rd.rank), gens, d) if gens else []
    builder = SpanBuilder(len(sym_basis(rd.rank, d)))
    for p in slice_basis:
        builder.add(coeff_vector(p, rd.rank, d))
    return builder


def _reduce_mod_coinvariant_ideal(rd: RootDatum, poly: Poly, d: int, cap: int) -> tuple[Fraction, ...]:
    builder = _coinvariant_reducer(rd, d, cap)
    return tuple(builder.reduce(coeff_vector(poly, rd.rank, d)))


def expand_in_schubert_basis(rd: RootDatum, poly: Poly, d: int, cap: int = 1_000_000) -> SchubertExpansion:
    """Write a degree-d polynomial, mod the coinvariant ideal, in the P_w.

    Raises ValueError when the polynomial is not in the span (which cannot
    happen for elements coming from actual products of representatives).
    """
    w = weyl_group(rd, cap=cap)
    rs = root_system(rd)
    if d > len(rs.positive):
        # everything in degrees beyond dim(flag variety) lies in the ideal
        residue = _reduce_mod_coinvariant_ideal(rd, poly, d, cap)
        if any(residue):
            raise ValueError("nonzero residue above the top degree")
        return SchubertExpansion(d, {})
    table = _representative_table(rd, cap)
    indices = [i for i in range(len(w)) if w.lengths[i] == d]
    cols = [_reduce_mod_coinvariant_ideal(rd, table[i], d, cap) for i in indices]
    rhs = _reduce_mod_coinvariant_ideal(rd, poly, d, cap)
    ncols = len(cols)
    rows = [[cols[j][r] for j in range(ncols)] for r in range(len(rhs))]
    sol = qsolve(rows, rhs)
    if sol is None:
        raise ValueError("polynomial is not a combination of Schubert classes")
    terms = {idx: c for idx, c in zip(indices, sol) if c}
    return SchubertExpansion(d, terms)


def schubert_product(rd: RootDatum, w1: int, w2: int, cap: int = 1_000_000) -> SchubertExpansion:
    """sigma_{w1} * sigma_{w2} by coinvariant multiplication.

    The structure constants must come out nonnegative integers; anything
    else raises :class:`NonIntegralStructureConstant` (it would mean a bug,
    not bad input).

    >>> from .lattice import IntMatrix
    >>> a1 = RootDatum(1, IntMatrix(((2,),)), IntMatrix(((1,),)))
    >>> schubert_product(a1, 1, 1).terms
    {}
    """
    w = weyl_group(rd, cap=cap)
    d = w.lengths[w1] + w.lengths[w2]
    table = _representative_table(rd, cap)
    product = poly_mul(table[w1], table[w2])
    expansion = expand_in_schubert_basis(rd, product, d, cap)
    for idx, c in expansion.terms.items():
        if Fraction(c).denominator != 1 or c < 0:
            raise NonIntegralStructureConstant(
                f"sigma_{w1} * sigma_{w2} has coefficient {c} at class {idx}"
            )
    return expansion
