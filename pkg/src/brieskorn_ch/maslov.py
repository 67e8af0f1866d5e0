"""Maslov indices of orbit spaces, computed in exact integer arithmetic.

The index of a loop of unitary rotations through a total angle of `turns`
full revolutions is 2*turns when the loop closes up, and 2*floor(turns)+1
otherwise.  Summing that over the coordinate rotations of the flow and
subtracting the two-plane the ambient space adds gives the index of an
orbit space.  Whether indices grow or shrink with the period is governed
by the sign of sum(1/a_j) - 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .orbits import OrbitType, valid_multiplier
from .randell import ExponentVector

POSITIVE = "positive"
NEGATIVE = "negative"
DEGENERATE = "degenerate"


@dataclass(frozen=True)
class IndexCharacter:
    """Growth behaviour of Maslov indices: the sign of sum(1/a_j) - 1."""

    sign: str
    reciprocal_sum: Fraction

    @property
    def is_positive(self) -> bool:
        return self.sign == POSITIVE

    @property
    def is_negative(self) -> bool:
        return self.sign == NEGATIVE

    @property
    def is_degenerate(self) -> bool:
        return self.sign == DEGENERATE


def classify_index(a: ExponentVector) -> IndexCharacter:
    total = a.reciprocal_sum()
    if total > 1:
        sign = POSITIVE
    elif total < 1:
        sign = NEGATIVE
    else:
        sign = DEGENERATE
    return IndexCharacter(sign=sign, reciprocal_sum=total)


def maslov_unitary(turns: Fraction | int) -> int:
    """Index of a unitary rotation path through `turns` full revolutions.

    `turns` is an exact rational (angle divided by 2*pi) and must be
    positive.  Integral turns close the path: index 2*turns.  Otherwise
    the index is 2*floor(turns) + 1.
    """
    turns = Fraction(turns)
    if turns <= 0:
        raise ValueError("rotation angle must be positive")
    if turns.denominator == 1:
        return 2 * int(turns)
    return 2 * (turns.numerator // turns.denominator) + 1


def _index_formula(a: ExponentVector, t: OrbitType, N: int) -> int:
    # 2*sum over J of N*m/a_j (exact division there, since a_j | m) plus
    # 2*sum of floors outside J, plus #(I-J), minus 2*N*m.  For positive
    # ints // is both at once.  Exact on any N; the caller decides whether
    # validity matters.
    total = N * t.m
    return (
        2 * sum(total // aj for aj in a) + (len(a) - len(t.J)) - 2 * total
    )


def maslov_orbit_space(a: ExponentVector, t: OrbitType, N: int) -> int:
    """Maslov index of the N-fold cover of the orbit space of type `t`.

    Requires N to keep the iterate inside the type: otherwise the orbit
    belongs to a larger space and this formula does not apply to it.
    """
    if not valid_multiplier(a, t, N):
        raise ValueError("iterate leaves orbit type")
    return _index_formula(a, t, N)


def maslov_crosscheck(a: ExponentVector, t: OrbitType, N: int) -> int:
    """Same index by the ambient-minus-complement route.

    Sum of unitary-path indices of the coordinate rotations, minus the
    index of the complementary two-plane rotation.  No validity check, so
    tests can observe exactly where the closed formula stops applying:
    for invalid N the two computations differ precisely on the indices j
    outside J whose a_j divides N*m.
    """
    if N < 1:
        raise ValueError("multiplier must be a positive integer")
    total = N * t.m
    ambient = sum(maslov_unitary(Fraction(total, aj)) for aj in a)
    return ambient - maslov_unitary(total)
