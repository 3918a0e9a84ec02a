"""Spectrum constraints, s/c3 identities, bounds, and exhaustive enumeration.

A spectrum is a nondecreasing tuple of m = c2 integers attached to a
normalized semistable sheaf, together with a companion integer s >= 0
(the length of the zero-dimensional part of the double-dual quotient).
The identities tying (spectrum, s) to (e, c2, c3) are

    e = -1:  c3 = -2 sum(k_i) - c2 - 2 s
    e =  0:  c3 = -2 sum(k_i) - 2 s

which make s determined by the class and the spectrum.  The chain rules
constrain which tuples can occur at all, and enumerate_spectra walks
every candidate for given Chern classes.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .errors import (
    DegenerateClassError,
    InadmissibleSpectrumError,
    UnsupportedSymmetryError,
)
from .invariants import (
    ChernClasses,
    SplittingType,
    euler_characteristic,
    splitting_type,
)

__all__ = [
    "SpectrumWithS",
    "ChainUpParam",
    "UNBOUNDED",
    "validate_spectrum",
    "c3_from_spectrum",
    "s_from_spectrum",
    "sum_via_chi",
    "validate_chain_down",
    "validate_chain_up",
    "validate_reflexive_symmetry",
    "s_upper_bound",
    "pure_one_dimensional",
    "enumerate_spectra",
]


class SpectrumWithS(NamedTuple):
    """A spectrum tuple together with its companion invariant s."""

    values: tuple[int, ...]
    s: int


@dataclass(frozen=True)
class ChainUpParam:
    """Threshold s_eh for the ascending chain rule.

    s_eh = None means "unbounded": the rule never triggers.  This is the
    sound default, since no single finite threshold reproduces every
    realized spectrum (see enumerate_spectra).
    """

    s_eh: int | None = None

    def __post_init__(self):
        if self.s_eh is not None and self.s_eh < 0:
            raise ValueError(f"s_eh must be nonnegative or None, got {self.s_eh}")


UNBOUNDED = ChainUpParam(None)


def validate_spectrum(values: Iterable[int]) -> tuple[int, ...]:
    """Normalize to a tuple and reject empty or decreasing input."""
    spec = tuple(int(v) for v in values)
    if not spec:
        raise InadmissibleSpectrumError("spectrum must have at least one entry")
    if any(spec[i] > spec[i + 1] for i in range(len(spec) - 1)):
        raise InadmissibleSpectrumError(f"spectrum {spec} is not nondecreasing")
    return spec


def c3_from_spectrum(e: int, c2: int, sw: SpectrumWithS) -> int:
    """c3 determined by (spectrum, s) for first Chern class e."""
    spec = validate_spectrum(sw.values)
    if len(spec) != c2:
        raise InadmissibleSpectrumError(
            f"spectrum has {len(spec)} entries, expected m = c2 = {c2}"
        )
    if sw.s < 0:
        raise InadmissibleSpectrumError(f"s must be nonnegative, got {sw.s}")
    total = sum(spec)
    if e == -1:
        return -2 * total - c2 - 2 * sw.s
    if e == 0:
        return -2 * total - 2 * sw.s
    raise InadmissibleSpectrumError(f"e must be -1 or 0, got {e}")


def _sum_max(cc: ChernClasses) -> int:
    # sum(k_i) at s = 0, from the c3 identities
    if cc.e == -1:
        return -(cc.c2 + cc.c3) // 2
    return -cc.c3 // 2


def s_from_spectrum(cc: ChernClasses, values: Iterable[int]) -> int:
    """The unique s making the c3 identity hold; rejects s < 0."""
    spec = validate_spectrum(values)
    if len(spec) != cc.c2:
        raise InadmissibleSpectrumError(
            f"spectrum has {len(spec)} entries, expected m = c2 = {cc.c2}"
        )
    s = _sum_max(cc) - sum(spec)
    if s < 0:
        raise InadmissibleSpectrumError(
            f"spectrum {spec} inadmissible for {cc.as_tuple()}: s = {s} < 0"
        )
    return s


def sum_via_chi(cc: ChernClasses, s: int) -> int:
    """sum(k_i) computed from the Euler characteristic instead of c3.

    Independent route: m (a2 - 1) - chi(E(-a2 - 1)) - s.  Agreement with
    the c3 identities is the basic consistency check of the sign
    conventions.
    """
    a2 = splitting_type(cc).a2
    return cc.c2 * (a2 - 1) - euler_characteristic(cc, -a2 - 1) - s


def validate_chain_down(
    values: Iterable[int], st: SplittingType
) -> list[tuple[int, int]]:
    """Descending chain rule violations.

    Any entry k <= a1 - 1 forces every integer of [k, -1] to appear.
    Returns (trigger, missing) pairs; the spectrum is admissible on this
    rule iff the list is empty.
    """
    spec = validate_spectrum(values)
    present = set(spec)
    out = []
    for k in sorted(set(v for v in spec if v <= st.a1 - 1)):
        for kp in range(k, 0):
            if kp not in present:
                out.append((k, kp))
    return out


def validate_chain_up(
    values: Iterable[int],
    st: SplittingType,
    p: ChainUpParam = UNBOUNDED,
) -> list[tuple[int, int]]:
    """Ascending chain rule violations under threshold p.

    For every k > a2 + 1 occurring with multiplicity-weighted count
    #{i : k_i >= k} >= s_eh + 1, every integer of [a2 + 1, k] must
    appear.  With p unbounded the rule never triggers.
    """
    spec = validate_spectrum(values)
    if p.s_eh is None:
        return []
    present = set(spec)
    out = []
    for k in sorted(set(v for v in spec if v > st.a2 + 1)):
        count = sum(1 for v in spec if v >= k)
        if count >= p.s_eh + 1:
            for kp in range(st.a2 + 1, k + 1):
                if kp not in present:
                    out.append((k, kp))
    return out


def validate_reflexive_symmetry(values: Iterable[int], e: int) -> bool:
    """Whether the spectrum multiset equals its own negation.

    Only meaningful for e = 0.  The naive e = -1 variant is false even
    for reflexive sheaves (the class (-1,1,1) has one-element spectrum
    (-1)), so it is refused rather than guessed.
    """
    if e == -1:
        raise UnsupportedSymmetryError(
            "reflexive symmetry is implemented for e = 0 only"
        )
    if e != 0:
        raise UnsupportedSymmetryError(f"e must be -1 or 0, got {e}")
    spec = validate_spectrum(values)
    return sorted(spec) == sorted(-v for v in spec)


def s_upper_bound(e: int, c2: int, regime: str = "general") -> int:
    """Closed-form upper bounds for s.

    regime "general" covers all semistable torsion-free sheaves;
    "zero_dimensional" assumes the double-dual quotient has dimension 0.
    """
    if c2 < 1:
        raise DegenerateClassError(f"bounds need c2 >= 1, got {c2}")
    if regime == "general":
        if e == 0:
            return (c2 * c2 + c2) // 2
        if e == -1:
            return (c2 * c2 + 3 * c2) // 2
    elif regime == "zero_dimensional":
        if e == 0:
            return (c2 * c2 - c2 + 2) // 2
        if e == -1:
            return c2 * c2 // 2 if c2 % 2 == 0 else (c2 * c2 - 1) // 2
    else:
        raise ValueError(f"unknown regime {regime!r}")
    raise DegenerateClassError(f"e must be -1 or 0, got {e}")


def pure_one_dimensional(s: int) -> bool:
    """Singularities are pure 1-dimensional exactly when s vanishes."""
    if s < 0:
        raise ValueError(f"s must be nonnegative, got {s}")
    return s == 0


def enumerate_spectra(
    cc: ChernClasses, p: ChainUpParam = UNBOUNDED
) -> list[SpectrumWithS]:
    """All spectrum candidates for the class cc, sorted lexicographically.

    Walks nondecreasing m-tuples (m = c2) by depth-first search.  The
    chain-down rule bounds entries below by -m; the constraint
    0 <= s <= s_upper_bound(general) pins sum(k_i) to a window, which
    bounds the top entry above.  Survivors pass both chain rules.
    """
    m = cc.c2
    if m < 1:
        raise DegenerateClassError(f"enumeration needs c2 >= 1, got {cc.c2}")
    st = splitting_type(cc)
    sum_max = _sum_max(cc)
    sum_min = sum_max - s_upper_bound(cc.e, m, "general")
    lo = -m
    hi = sum_max + m * (m - 1)

    results: list[SpectrumWithS] = []
    prefix: list[int] = []

    def walk(total: int):
        depth = len(prefix)
        if depth == m:
            if not (sum_min <= total <= sum_max):
                return
            values = tuple(prefix)
            if validate_chain_down(values, st):
                return
            if validate_chain_up(values, st, p):
                return
            results.append(SpectrumWithS(values, sum_max - total))
            return
        remaining = m - depth
        start = prefix[-1] if prefix else lo
        for v in range(start, hi + 1):
            if total + v * remaining > sum_max:
                break  # larger v only increases the minimum achievable sum
            if total + v + (remaining - 1) * hi < sum_min:
                continue
            prefix.append(v)
            walk(total + v)
            prefix.pop()

    walk(0)
    results.sort(key=lambda sw: (sw.values, sw.s))
    return results
