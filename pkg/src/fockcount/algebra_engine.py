"""Exact contraction engine for Bose, Fermi and quon monomial states.

An annihilator moves right through a creator word, collecting one factor of
the exchange parameter per creator it passes and contracting against every
matching creator. Inner products follow by recursive annihilation: the
sign/phase convention is fixed by this left-to-right order, so individual
values are convention-dependent while norms, Gram ranks and dimensions are
not.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .core import AlgebraSpec, ModeLattice, MonomialState


@dataclass(frozen=True)
class LinearCombination:
    """Finite rational linear combination of monomial states.

    Terms are kept lexicographically sorted by state and never carry a zero
    coefficient, so equal combinations compare equal structurally.
    """

    terms: tuple[tuple[MonomialState, Fraction], ...]

    @classmethod
    def from_dict(cls, coeffs: dict[MonomialState, Fraction]) -> "LinearCombination":
        return cls(tuple(sorted((s, c) for s, c in coeffs.items() if c != 0)))

    def coefficient(self, state: MonomialState) -> Fraction:
        for s, c in self.terms:
            if s == state:
                return c
        return Fraction(0)

    def as_dict(self) -> dict[MonomialState, Fraction]:
        return dict(self.terms)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self) -> int:
        return len(self.terms)


def apply_annihilator(
    mode: int,
    state: MonomialState,
    alg: AlgebraSpec,
    lattice: ModeLattice | None = None,
) -> LinearCombination:
    """Normal-ordered image of a_mode acting on a creator word.

    The term dropping the creator at (0-based) position k carries the
    coefficient q**k; terms with equal remainders merge and zeros vanish.
    """
    if lattice is not None:
        if mode not in lattice:
            raise ValueError(f"mode {mode} is not a site of the lattice")
        for idx in state:
            if idx not in lattice:
                raise ValueError(f"index {idx} is not a site of the lattice")
    q = alg.q
    acc: dict[MonomialState, Fraction] = {}
    coeff = Fraction(1)
    for pos, idx in enumerate(state):
        if idx == mode and coeff:
            rest = state[:pos] + state[pos + 1 :]
            acc[rest] = acc.get(rest, Fraction(0)) + coeff
        coeff = coeff * q
    return LinearCombination.from_dict(acc)


def apply_annihilator_to_combination(
    mode: int, combo: LinearCombination, alg: AlgebraSpec
) -> LinearCombination:
    """Linear extension of apply_annihilator to combinations."""
    acc: dict[MonomialState, Fraction] = {}
    for state, weight in combo.terms:
        for rest, c in apply_annihilator(mode, state, alg).terms:
            acc[rest] = acc.get(rest, Fraction(0)) + weight * c
    return LinearCombination.from_dict(acc)


@lru_cache(maxsize=1 << 18)
def _contract(bra: MonomialState, ket: MonomialState, q: Fraction) -> Fraction:
    # Gram matrices evaluate the same sub-contractions many times over an
    # orbit of permuted words; caching turns the factorial tree into a walk
    # over distinct (sub-bra, sub-ket) pairs.
    if not bra:
        return Fraction(1)
    mode = bra[0]
    total = Fraction(0)
    coeff = Fraction(1)
    for pos, idx in enumerate(ket):
        if idx == mode and coeff:
            total += coeff * _contract(bra[1:], ket[:pos] + ket[pos + 1 :], q)
        coeff = coeff * q
    return total


def inner_product(bra: MonomialState, ket: MonomialState, alg: AlgebraSpec) -> Fraction:
    """Vacuum expectation value of the bra word's adjoint against the ket word.

    States with different particle numbers are orthogonal. For Bose the
    result equals the permanent of the index-coincidence matrix, for Fermi
    its determinant up to the convention sign, and for quons on distinct
    indices q raised to the inversion number of the relating permutation.
    """
    if len(bra) != len(ket):
        return Fraction(0)
    return _contract(tuple(bra), tuple(ket), alg.q)
