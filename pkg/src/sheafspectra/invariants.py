"""Exact numerical invariants of normalized rank-2 sheaves on P^3.

Everything in this module is closed-form integer arithmetic: Euler
characteristics of twists, generic splitting types, the spectrum length,
and a total-Chern-class oracle that recovers (e, c2, c3) from a
resolution by sums of line bundles.  Intermediate values use
fractions.Fraction; every public result is an exact int.

The Euler characteristic of a normalized class (e, c2, c3) at twist t is

    e = -1:  chi(t) = (t+1)(t+2)(2t+3)/6 - c2 (t+2) + (c2+c3)/2
    e =  0:  chi(t) = (t+1)(t+2)(t+3)/3  - c2 (t+2) + c3/2

The parity law (c3 even when e = 0; c2+c3 even when e = -1) is exactly
the condition that makes both formulas integral for all t, so it is
enforced at construction time.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple

from .errors import (
    DegenerateClassError,
    IntegralityError,
    NotNormalizedError,
    ParityError,
    RankMismatchError,
)

__all__ = [
    "ChernClasses",
    "SplittingType",
    "SingularityProfile",
    "ChernSeries",
    "euler_characteristic",
    "line_bundle_chi",
    "splitting_type",
    "splitting_type_from_e",
    "restriction_chi",
    "spectrum_length",
    "chern_from_resolution",
    "kernel_invariants",
]


@dataclass(frozen=True)
class ChernClasses:
    """Normalized rank-2 numerical class (e, c2, c3).

    e is the first Chern class after normalization, so e in {-1, 0}.
    The parity law ties c2 and c3 together; classes violating it admit
    no integral Euler characteristic and no integer s-invariant, so the
    constructor rejects them.
    """

    e: int
    c2: int
    c3: int

    def __post_init__(self):
        if self.e not in (-1, 0):
            raise NotNormalizedError(
                f"first Chern class must be -1 or 0 after normalization, got {self.e}"
            )
        if self.e == 0 and self.c3 % 2 != 0:
            raise ParityError(f"c3 must be even when e = 0, got c3 = {self.c3}")
        if self.e == -1 and (self.c2 + self.c3) % 2 != 0:
            raise ParityError(
                f"c2 + c3 must be even when e = -1, got c2 = {self.c2}, c3 = {self.c3}"
            )

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.e, self.c2, self.c3)


class SplittingType(NamedTuple):
    """Degrees (a1, a2) of the restriction to a generic line, a1 <= a2."""

    a1: int
    a2: int


@dataclass(frozen=True)
class SingularityProfile:
    """Shape of the double-dual quotient Q = E^vv / E.

    zero_dim_length is the length s of the maximal 0-dimensional
    subsheaf of Q; one_dim_part, when present, describes the pure
    1-dimensional quotient (a curve-supported symbol, kept opaque here
    so this module stays free of the symbolic calculus).
    """

    zero_dim_length: int
    one_dim_part: object | None = None

    def __post_init__(self):
        if self.zero_dim_length < 0:
            raise ValueError(
                f"zero-dimensional length must be >= 0, got {self.zero_dim_length}"
            )

    @property
    def classification(self) -> str:
        if self.one_dim_part is None:
            return "zero_dimensional" if self.zero_dim_length > 0 else "trivial"
        return "mixed" if self.zero_dim_length > 0 else "pure_one_dimensional"


def euler_characteristic(cc: ChernClasses, t: int) -> int:
    """chi(E(t)) for the normalized class cc, as an exact integer."""
    if cc.e == -1:
        value = (
            Fraction((t + 1) * (t + 2) * (2 * t + 3), 6)
            - cc.c2 * (t + 2)
            + Fraction(cc.c2 + cc.c3, 2)
        )
    else:
        value = (
            Fraction((t + 1) * (t + 2) * (t + 3), 3)
            - cc.c2 * (t + 2)
            + Fraction(cc.c3, 2)
        )
    if value.denominator != 1:
        # unreachable once the parity law holds; kept as a hard check
        raise IntegralityError(f"chi({cc}, {t}) = {value} is not an integer")
    return int(value)


def line_bundle_chi(a: int, t: int) -> int:
    """chi(O(a+t)) on P^3.

    Equals the binomial coefficient C(a+t+3, 3) read as a cubic
    polynomial, so it vanishes for a+t in {-1, -2, -3}, is positive for
    a+t >= 0 and negative for a+t <= -4.
    """
    d = a + t
    return (d + 1) * (d + 2) * (d + 3) // 6


def splitting_type(cc: ChernClasses) -> SplittingType:
    """Generic splitting type of a normalized semistable sheaf."""
    return splitting_type_from_e(cc.e)


def splitting_type_from_e(e: int) -> SplittingType:
    if e == -1:
        return SplittingType(-1, 0)
    if e == 0:
        return SplittingType(0, 0)
    raise NotNormalizedError(f"no semistable splitting type for e = {e}")


def restriction_chi(cc: ChernClasses, t: int) -> int:
    """chi of the restriction to a generic plane, chi(E(t)) - chi(E(t-1))."""
    return euler_characteristic(cc, t) - euler_characteristic(cc, t - 1)


def spectrum_length(cc: ChernClasses) -> int:
    """Length m of the spectrum; equals c2 for normalized semistable data."""
    if cc.c2 <= 0:
        raise DegenerateClassError(
            f"spectrum undefined for c2 = {cc.c2} (need c2 >= 1)"
        )
    a2 = splitting_type(cc).a2
    # the count identity: the plane restriction at twist -a2-1 has chi = -c2
    assert -restriction_chi(cc, -a2 - 1) == cc.c2
    return cc.c2


@dataclass(frozen=True)
class ChernSeries:
    """Total Chern polynomial truncated at degree 3.

    Coefficients are exact Fractions during arithmetic; integrality is
    asserted only when converting out, so products and quotients of
    admissible series never truncate silently.
    """

    c0: Fraction
    c1: Fraction
    c2: Fraction
    c3: Fraction

    @staticmethod
    def one() -> "ChernSeries":
        return ChernSeries(Fraction(1), Fraction(0), Fraction(0), Fraction(0))

    @staticmethod
    def line_bundle(a: int) -> "ChernSeries":
        return ChernSeries(Fraction(1), Fraction(a), Fraction(0), Fraction(0))

    @staticmethod
    def points(n: int) -> "ChernSeries":
        # a length-n zero-dimensional sheaf has total class 1 + 2n t^3
        return ChernSeries(Fraction(1), Fraction(0), Fraction(0), Fraction(2 * n))

    def coefficients(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.c0, self.c1, self.c2, self.c3)

    def __mul__(self, other: "ChernSeries") -> "ChernSeries":
        a = self.coefficients()
        b = other.coefficients()
        prod = [Fraction(0)] * 4
        for i in range(4):
            for j in range(4 - i):
                prod[i + j] += a[i] * b[j]
        return ChernSeries(*prod)

    def inverse(self) -> "ChernSeries":
        a = self.coefficients()
        if a[0] != 1:
            raise IntegralityError("only series with constant term 1 are invertible")
        b = [Fraction(1), Fraction(0), Fraction(0), Fraction(0)]
        for k in range(1, 4):
            b[k] = -sum(a[j] * b[k - j] for j in range(1, k + 1))
        return ChernSeries(*b)

    def __truediv__(self, other: "ChernSeries") -> "ChernSeries":
        return self * other.inverse()

    def integer_coefficients(self) -> tuple[int, int, int, int]:
        coeffs = self.coefficients()
        if any(c.denominator != 1 for c in coeffs):
            raise IntegralityError(f"non-integer total Chern class {coeffs}")
        return tuple(int(c) for c in coeffs)  # type: ignore[return-value]


def chern_from_resolution(
    positive_terms: Iterable[int],
    negative_terms: Iterable[int],
    rank: int = 2,
) -> ChernClasses:
    """Chern classes of a virtual sum of line bundles.

    positive_terms and negative_terms are line bundle degrees; the result
    is the class of (+)sum O(a_i) - (+)sum O(b_j), i.e. the truncated
    power series prod(1 + a_i t) / prod(1 + b_j t).  This is the oracle
    used to pin sign conventions: it needs nothing but multiplicativity
    of total Chern classes on exact sequences.
    """
    pos = list(positive_terms)
    neg = list(negative_terms)
    if len(pos) - len(neg) != rank:
        raise RankMismatchError(
            f"resolution has rank {len(pos) - len(neg)}, expected {rank}"
        )
    series = ChernSeries.one()
    for a in pos:
        series = series * ChernSeries.line_bundle(a)
    for b in neg:
        series = series / ChernSeries.line_bundle(b)
    c0, c1, c2, c3 = series.integer_coefficients()
    assert c0 == 1
    return ChernClasses(c1, c2, c3)


def kernel_invariants(
    f_chern: ChernClasses, n_points: int
) -> tuple[ChernClasses, int]:
    """Invariants of the kernel of a surjection onto n_points points.

    For E = ker(F ->> O_S) with S a set of n points away from the
    singularities of F, the total class of the quotient is 1 + 2n t^3,
    so only c3 moves: c3(E) = c3(F) - 2n, and the s-invariant of E is n.
    """
    if n_points < 0:
        raise ValueError(f"point count must be nonnegative, got {n_points}")
    return ChernClasses(f_chern.e, f_chern.c2, f_chern.c3 - 2 * n_points), n_points
