"""Gram matrices of permutation orbits and the exact dimensions they induce.

The N-particle sector spanned by one index multiset is analysed through the
Gram matrix of all distinct orderings of the multiset. Its rank over the
rationals is the number of independent states the multiset contributes;
summing single-site extensions gives the one-particle dimension, and
differences of those give the extended exclusion-statistics parameter.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from math import lcm
from typing import Iterable, Sequence

from .core import AlgebraSpec, ModeLattice, MonomialState
from .algebra_engine import inner_product
from .restrictions import RestrictionRule, is_allowed


def _integer_matrix(rows: Sequence[Sequence[Fraction]]) -> tuple[list[list[int]], int]:
    """Clear denominators; returns the scaled matrix and the common scale."""
    scale = 1
    for row in rows:
        for x in row:
            scale = lcm(scale, Fraction(x).denominator)
    return [[int(Fraction(x) * scale) for x in row] for row in rows], scale


def rational_rank(rows: Sequence[Sequence[Fraction]]) -> int:
    """Exact rank over the rationals by fraction-free Gaussian elimination.

    The matrix is scaled to integers and reduced Bareiss-style, so every
    division is exact; the pivot search takes the first non-zero entry in
    the column.
    """
    if not rows:
        return 0
    m, _ = _integer_matrix(rows)
    n_rows, n_cols = len(m), len(m[0])
    rank = 0
    prev = 1
    for col in range(n_cols):
        piv = next((r for r in range(rank, n_rows) if m[r][col]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        pivot = m[rank][col]
        for r in range(rank + 1, n_rows):
            factor = m[r][col]
            row = m[r]
            top = m[rank]
            for c in range(col, n_cols):
                row[c] = (row[c] * pivot - factor * top[c]) // prev
        prev = pivot
        rank += 1
        if rank == n_rows:
            break
    return rank


def exact_determinant(rows: Sequence[Sequence[Fraction]]) -> Fraction:
    """Exact determinant via the same fraction-free elimination."""
    n = len(rows)
    if n == 0:
        return Fraction(1)
    if any(len(row) != n for row in rows):
        raise ValueError("determinant requires a square matrix")
    m, scale = _integer_matrix(rows)
    sign = 1
    prev = 1
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col]), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            sign = -sign
        pivot = m[col][col]
        for r in range(col + 1, n):
            factor = m[r][col]
            row = m[r]
            top = m[col]
            for c in range(col, n):
                row[c] = (row[c] * pivot - factor * top[c]) // prev
        prev = pivot
    return Fraction(sign * m[n - 1][n - 1], scale**n)


@dataclass(frozen=True)
class GramMatrix:
    """Inner-product matrix over the distinct orderings of one multiset."""

    states: tuple[MonomialState, ...]
    entries: tuple[tuple[Fraction, ...], ...]

    @property
    def dimension(self) -> int:
        return len(self.states)

    def rank(self) -> int:
        return rational_rank(self.entries)


def permutation_orbit(indices: Iterable[int]) -> tuple[MonomialState, ...]:
    """Distinct orderings of an index multiset, lexicographically sorted."""
    base = tuple(sorted(indices))
    if not base:
        raise ValueError("index multiset must be non-empty")
    return tuple(sorted(set(permutations(base))))


def gram_matrix(
    indices: Iterable[int],
    alg: AlgebraSpec,
    rule: RestrictionRule | None = None,
) -> GramMatrix:
    """Gram matrix of the multiset's orderings; words failing the rule are
    projected out, i.e. their rows and columns are zeroed."""
    states = permutation_orbit(indices)
    alive = [is_allowed(s, rule) for s in states]
    zero = Fraction(0)
    rows = []
    for i, si in enumerate(states):
        row = [zero] * len(states)
        if alive[i]:
            for j, sj in enumerate(states):
                if alive[j]:
                    row[j] = inner_product(si, sj, alg)
        rows.append(tuple(row))
    return GramMatrix(states=states, entries=tuple(rows))


def sector_dimension(
    indices: Iterable[int],
    alg: AlgebraSpec,
    rule: RestrictionRule | None = None,
) -> int:
    """Number of independent states the multiset carries: the Gram rank."""
    return gram_matrix(indices, alg, rule).rank()


def one_particle_dimension(
    fixed: Iterable[int],
    lattice: ModeLattice,
    alg: AlgebraSpec,
    rule: RestrictionRule | None = None,
) -> int:
    """Dimension available to one extra particle given the fixed multiset.

    Defined as the sum over lattice sites of the sector dimension of the
    fixed multiset extended by that site. The fixed multiset may be empty.
    """
    fixed = tuple(fixed)
    for idx in fixed:
        if idx not in lattice:
            raise ValueError(f"fixed index {idx} is not a site of the lattice")
    return sum(sector_dimension(fixed + (j,), alg, rule) for j in lattice)


def extended_g(
    fixed: Iterable[int],
    added: Iterable[int],
    lattice: ModeLattice,
    alg: AlgebraSpec,
    rule: RestrictionRule | None = None,
) -> Fraction:
    """Exclusion-statistics parameter from one-particle dimension loss.

    Fixing k additional particles on the listed sites shrinks the
    one-particle dimension; the parameter is that loss divided by k.
    """
    fixed = tuple(fixed)
    added = tuple(added)
    if not added:
        raise ValueError("at least one added particle is required")
    for idx in added:
        if idx not in lattice:
            raise ValueError(f"added index {idx} is not a site of the lattice")
    before = one_particle_dimension(fixed, lattice, alg, rule)
    after = one_particle_dimension(fixed + added, lattice, alg, rule)
    return Fraction(before - after, len(added))
