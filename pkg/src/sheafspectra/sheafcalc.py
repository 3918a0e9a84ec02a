"""Symbolic building blocks, the long-exact-sequence splicer, and monads.

Building blocks (line bundles, point sheaves, modules pushed forward
from curves, ideal sheaves, sums, twists) all have total cohomology
tables computable in closed form.  splice_ses takes a short exact
sequence with one unknown slot and solves the twelve-term cohomology
sequence twist by twist under the generic maximal-rank policy: every
free connecting or interior map takes the largest rank its source and
target allow, forced maps (injectivity at the left end, surjectivity at
the right end) are checked for feasibility.  splice_bounds reports, for
each entry, the interval of values attainable over all rank choices, so
callers can tell policy output from forced output.

monad_table chains two splices (kernel, then quotient) and attaches the
Chern classes read off the power-series oracle.  construction_spectrum
and construction_table run the full pipeline from a construction recipe
to a spectrum and back to a printed-window table; the raw policy h2 is
discarded below the twist -3-e, where the generic-rank assumption is
known to misread deep syzygies, and the spectrum inverter is fed only
the sound window.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Mapping

from .cohomology import CohomologyTable, spectrum_from_table, table_from_spectrum
from .errors import (
    AmbiguousCurveModuleError,
    CatalogError,
    RangeInsufficientError,
    RankMismatchError,
    SequenceInfeasibleError,
)
from .invariants import (
    ChernClasses,
    chern_from_resolution,
    line_bundle_chi,
    splitting_type_from_e,
)
from .cohomology import p1_cohomology
from .spectrum import SpectrumWithS

__all__ = [
    "LineBundle",
    "DirectSum",
    "PointSheaf",
    "RationalCurveModule",
    "CurveModule",
    "IdealOfCurve",
    "Twist",
    "ShortExactSequenceSpec",
    "MonadShape",
    "block_table",
    "splice_ses",
    "splice_bounds",
    "monad_table",
    "quotient_table",
    "symbol_from_json",
    "recipe_table",
    "construction_spectrum",
    "construction_table",
]


# ---------------------------------------------------------------- symbols

@dataclass(frozen=True)
class LineBundle:
    a: int


@dataclass(frozen=True)
class DirectSum:
    terms: tuple

    def __init__(self, terms):
        object.__setattr__(self, "terms", tuple(terms))


@dataclass(frozen=True)
class PointSheaf:
    n: int

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"point count must be nonnegative, got {self.n}")


@dataclass(frozen=True)
class RationalCurveModule:
    """Pushforward of O(d t + b) from a degree-d rational curve."""

    d: int
    b: int


@dataclass(frozen=True)
class CurveModule:
    """Module on a genus-g curve with Hilbert polynomial slope*t + offset.

    Line bundles of degree outside [0, 2g-2] have one-sided cohomology;
    inside that strip only a generic module is determined (h0 = max(chi, 0)),
    and non-generic input is refused rather than guessed.
    """

    genus: int
    slope: int
    offset: int
    generic: bool = True


@dataclass(frozen=True)
class IdealOfCurve:
    """Ideal sheaf of the curve whose structure module is given."""

    curve: object


@dataclass(frozen=True)
class Twist:
    of: object
    n: int


def _symbol_row(sym, t: int) -> tuple:
    if isinstance(sym, LineBundle):
        chi = line_bundle_chi(sym.a, t)
        d = sym.a + t
        return (chi if d >= 0 else 0, 0, 0, -chi if d <= -4 else 0)
    if isinstance(sym, DirectSum):
        total = [0, 0, 0, 0]
        for term in sym.terms:
            row = _symbol_row(term, t)
            for i in range(4):
                total[i] += row[i]
        return tuple(total)
    if isinstance(sym, PointSheaf):
        return (sym.n, 0, 0, 0)
    if isinstance(sym, RationalCurveModule):
        h0, h1 = p1_cohomology(sym.d * t + sym.b)
        return (h0, h1, 0, 0)
    if isinstance(sym, CurveModule):
        chi = sym.slope * t + sym.offset
        deg = chi + sym.genus - 1
        if 0 <= deg <= 2 * sym.genus - 2 and not sym.generic:
            raise AmbiguousCurveModuleError(
                f"degree {deg} lies in the special strip of a genus-{sym.genus} "
                "curve and the module is not declared generic"
            )
        return (max(chi, 0), max(-chi, 0), 0, 0)
    if isinstance(sym, IdealOfCurve):
        ambient = _symbol_row(LineBundle(0), t)
        curve = _symbol_row(sym.curve, t)
        return _solve_left(ambient, curve)
    if isinstance(sym, Twist):
        return _symbol_row(sym.of, t + sym.n)
    raise TypeError(f"not a sheaf symbol: {sym!r}")


def block_table(sym, rng: tuple[int, int]) -> CohomologyTable:
    """Total cohomology table of a building-block symbol."""
    lo, hi = rng
    return CohomologyTable(lo, hi, {t: _symbol_row(sym, t) for t in range(lo, hi + 1)})


# ------------------------------------------------------- sequence solving
#
# The twelve-term sequence at one twist,
#
#   0 -> L0 -> M0 -> R0 -> L1 -> M1 -> R1 -> L2 -> M2 -> R2 -> L3 -> M3 -> R3 -> 0,
#
# is solved for one unknown column.  Entries are ints or None; None
# propagates.  rho/sigma/tau denote the ranks of the maps M->R, R->L,
# L->M respectively.

def _min(a, b):
    if a is None or b is None:
        return None
    return min(a, b)


def _sub(a, b):
    if a is None or b is None:
        return None
    return a - b


def _add(a, b):
    if a is None or b is None:
        return None
    return a + b


def _solve_left(m: tuple, r: tuple, ranks=None) -> tuple:
    # rho_3 is forced: R3 must die in M3
    if r[3] is not None and m[3] is not None and r[3] > m[3]:
        raise SequenceInfeasibleError(
            f"h3 of the right column ({r[3]}) exceeds h3 of the middle ({m[3]})"
        )
    rho = [_min(m[i], r[i]) for i in range(3)] + [r[3]]
    if ranks is not None:
        rho[:3] = ranks
    out = [_sub(m[0], rho[0])]
    for i in range(1, 4):
        out.append(_add(_sub(r[i - 1], rho[i - 1]), _sub(m[i], rho[i])))
    return tuple(out)


def _solve_middle(l: tuple, r: tuple, ranks=None) -> tuple:
    # sigma_i = rank of the connecting map R_i -> L_{i+1}; sigma_3 = 0
    sigma = [_min(r[i], l[i + 1]) for i in range(3)] + [0]
    if ranks is not None:
        sigma[:3] = ranks
    out = [_add(l[0], _sub(r[0], sigma[0]))]
    for i in range(1, 4):
        out.append(_add(_sub(l[i], sigma[i - 1]), _sub(r[i], sigma[i])))
    return tuple(out)


def _solve_right(l: tuple, m: tuple, ranks=None) -> tuple:
    # tau_0 is forced: L0 injects into M0
    if l[0] is not None and m[0] is not None and l[0] > m[0]:
        raise SequenceInfeasibleError(
            f"h0 of the left column ({l[0]}) exceeds h0 of the middle ({m[0]})"
        )
    tau = [l[0]] + [_min(l[i], m[i]) for i in range(1, 4)]
    if ranks is not None:
        tau[1:] = ranks
    ext = list(l) + [0]
    tau = tau + [0]
    out = []
    for i in range(4):
        out.append(_add(_sub(m[i], tau[i]), _sub(ext[i + 1], tau[i + 1])))
    return tuple(out)


@dataclass(frozen=True)
class ShortExactSequenceSpec:
    """0 -> left -> middle -> right -> 0 with exactly one unknown slot.

    Known slots are sheaf symbols or ready-made total tables; the
    unknown slot is None.  policy names the genericity convention; only
    maximal-rank is implemented.
    """

    left: object = None
    middle: object = None
    right: object = None
    policy: str = "maximal_rank"

    def __post_init__(self):
        unknowns = [s is None for s in (self.left, self.middle, self.right)]
        if sum(unknowns) != 1:
            raise ValueError("exactly one slot of the sequence must be unknown")
        if self.policy != "maximal_rank":
            raise ValueError(f"unsupported genericity policy {self.policy!r}")

    @property
    def unknown(self) -> str:
        if self.left is None:
            return "left"
        return "middle" if self.middle is None else "right"


def _slot_table(slot, rng: tuple[int, int]) -> CohomologyTable:
    if isinstance(slot, CohomologyTable):
        if slot.lo > rng[0] or slot.hi < rng[1]:
            raise RangeInsufficientError(
                f"slot table covers [{slot.lo}, {slot.hi}], need [{rng[0]}, {rng[1]}]"
            )
        return slot
    return block_table(slot, rng)


def splice_ses(spec: ShortExactSequenceSpec, rng: tuple[int, int]) -> CohomologyTable:
    """Solve the sequence for its unknown slot under maximal rank."""
    lo, hi = rng
    rows = {}
    if spec.unknown == "left":
        m, r = _slot_table(spec.middle, rng), _slot_table(spec.right, rng)
        for t in range(lo, hi + 1):
            rows[t] = _solve_left(m.row(t), r.row(t))
    elif spec.unknown == "middle":
        l, r = _slot_table(spec.left, rng), _slot_table(spec.right, rng)
        for t in range(lo, hi + 1):
            rows[t] = _solve_middle(l.row(t), r.row(t))
    else:
        l, m = _slot_table(spec.left, rng), _slot_table(spec.middle, rng)
        for t in range(lo, hi + 1):
            rows[t] = _solve_right(l.row(t), m.row(t))
    return CohomologyTable(lo, hi, rows)


def splice_bounds(spec: ShortExactSequenceSpec, rng: tuple[int, int]) -> dict:
    """Attainable [lo, hi] per entry over all admissible rank choices.

    Twists where any input entry is unknown get None bounds.  The exact
    values from splice_ses always lie inside these intervals; an entry
    is genuinely forced when its interval has length zero.
    """
    lo, hi = rng
    if spec.unknown == "left":
        ta, tb = _slot_table(spec.middle, rng), _slot_table(spec.right, rng)
        solver = _solve_left
        caps = lambda m, r: [min(m[i], r[i]) for i in range(3)]
    elif spec.unknown == "middle":
        ta, tb = _slot_table(spec.left, rng), _slot_table(spec.right, rng)
        solver = _solve_middle
        caps = lambda l, r: [min(r[i], l[i + 1]) for i in range(3)]
    else:
        ta, tb = _slot_table(spec.left, rng), _slot_table(spec.middle, rng)
        solver = _solve_right
        caps = lambda l, m: [min(l[i], m[i]) for i in range(1, 4)]
    out = {}
    for t in range(lo, hi + 1):
        ra, rb = ta.row(t), tb.row(t)
        if any(h is None for h in ra + rb):
            out[t] = (None, None, None, None)
            continue
        best = [None] * 4
        for free in itertools.product(*(range(c + 1) for c in caps(ra, rb))):
            row = solver(ra, rb, ranks=list(free))
            for i, h in enumerate(row):
                best[i] = (
                    (h, h) if best[i] is None
                    else (min(best[i][0], h), max(best[i][1], h))
                )
        out[t] = tuple(best)
    return out


@dataclass(frozen=True)
class MonadShape:
    """Line-bundle degrees (a, b, c) of a three-term monad.

    The middle cohomology of 0 -> sum O(a_i) -> sum O(b_j) -> sum O(c_k) -> 0
    is a rank-2 sheaf; its Chern classes come from the series oracle.
    """

    a: tuple
    b: tuple
    c: tuple

    def __init__(self, a, b, c):
        object.__setattr__(self, "a", tuple(a))
        object.__setattr__(self, "b", tuple(b))
        object.__setattr__(self, "c", tuple(c))
        if len(self.b) - len(self.a) - len(self.c) != 2:
            raise RankMismatchError(
                f"monad has rank {len(self.b) - len(self.a) - len(self.c)}, expected 2"
            )

    def chern(self) -> ChernClasses:
        return chern_from_resolution(self.b, self.a + self.c)


def monad_table(shape: MonadShape, rng: tuple[int, int]) -> CohomologyTable:
    """Cohomology of the monad's middle term, Chern classes attached."""
    bundle = lambda degrees: DirectSum(LineBundle(d) for d in degrees)
    kernel = splice_ses(
        ShortExactSequenceSpec(middle=bundle(shape.b), right=bundle(shape.c)), rng
    )
    out = splice_ses(
        ShortExactSequenceSpec(left=bundle(shape.a), middle=kernel), rng
    )
    return CohomologyTable(out.lo, out.hi, out.rows, shape.chern())


def _flatten_quotient(sym) -> list:
    if isinstance(sym, DirectSum):
        leaves = []
        for term in sym.terms:
            leaves.extend(_flatten_quotient(term))
        return leaves
    return [sym]


def quotient_table(ambient, quotient, rng: tuple[int, int]) -> CohomologyTable:
    """Table of the kernel of ambient ->> quotient.

    The quotient must be supported in dimension <= 1: a sum of point
    sheaves with at most one rational-curve module.
    """
    leaves = _flatten_quotient(quotient)
    curves = [s for s in leaves if isinstance(s, RationalCurveModule)]
    points = [s for s in leaves if isinstance(s, PointSheaf)]
    if len(curves) > 1 or len(points) + len(curves) != len(leaves):
        raise ValueError(
            "quotient must be a sum of point sheaves and at most one "
            "rational-curve module"
        )
    ambient_table = _slot_table(ambient, rng)
    return splice_ses(
        ShortExactSequenceSpec(middle=ambient_table, right=quotient), rng
    )


# ------------------------------------------------------------- recipes

_SYMBOL_KINDS = frozenset(
    {"line", "sum", "points", "rational_curve", "curve", "ideal", "twist"}
)


def symbol_from_json(node: Mapping):
    """Build a sheaf symbol from its catalog JSON form."""
    try:
        kind = node["kind"]
        if kind == "line":
            return LineBundle(int(node["a"]))
        if kind == "sum":
            return DirectSum(symbol_from_json(term) for term in node["terms"])
        if kind == "points":
            return PointSheaf(int(node["n"]))
        if kind == "rational_curve":
            return RationalCurveModule(int(node["d"]), int(node["b"]))
        if kind == "curve":
            return CurveModule(
                int(node["genus"]),
                int(node["slope"]),
                int(node["offset"]),
                bool(node.get("generic", True)),
            )
        if kind == "ideal":
            return IdealOfCurve(symbol_from_json(node["curve"]))
        if kind == "twist":
            return Twist(symbol_from_json(node["of"]), int(node["n"]))
    except (KeyError, TypeError, ValueError) as exc:
        raise CatalogError(f"malformed symbol node {node!r}: {exc}") from exc
    raise CatalogError(f"unknown symbol kind {kind!r}")


def _slot_from_json(node, rng):
    # a slot is either a plain symbol (kept symbolic) or a nested recipe
    if node.get("kind") in _SYMBOL_KINDS:
        return symbol_from_json(node)
    return recipe_table(node, rng)


def recipe_table(node: Mapping, rng: tuple[int, int]) -> CohomologyTable:
    """Evaluate a construction recipe node to a cohomology table."""
    try:
        kind = node["kind"]
    except (KeyError, TypeError) as exc:
        raise CatalogError(f"malformed recipe node {node!r}") from exc
    if kind in _SYMBOL_KINDS:
        return block_table(symbol_from_json(node), rng)
    if kind == "table":
        try:
            return CohomologyTable.from_json_dict(node["table"])
        except (KeyError, ValueError) as exc:
            raise CatalogError(f"malformed stored table: {exc}") from exc
    if kind == "ses":
        slots = {}
        for name in ("left", "middle", "right"):
            value = node.get(name)
            slots[name] = None if value is None else _slot_from_json(value, rng)
        unknown = node.get("unknown")
        if unknown not in ("left", "middle", "right") or slots[unknown] is not None:
            raise CatalogError(f"recipe must leave exactly the slot {unknown!r} empty")
        try:
            return splice_ses(ShortExactSequenceSpec(**slots), rng)
        except ValueError as exc:
            raise CatalogError(str(exc)) from exc
    if kind == "monad":
        try:
            shape = MonadShape(node["a"], node["b"], node["c"])
        except (KeyError, TypeError) as exc:
            raise CatalogError(f"malformed monad node {node!r}") from exc
        return monad_table(shape, rng)
    if kind == "quotient":
        quotient = symbol_from_json(node["quotient"])
        ambient = _slot_from_json(node["ambient"], rng)
        try:
            return quotient_table(ambient, quotient, rng)
        except ValueError as exc:
            raise CatalogError(str(exc)) from exc
    raise CatalogError(f"unknown recipe kind {kind!r}")


# ------------------------------------------------------------- pipeline

def _drop_unsound_h2(table: CohomologyTable, e: int) -> CohomologyTable:
    # below t = -3-e the maximal-rank policy can misjudge deep syzygies,
    # so the h2 column is withheld from the inverter there
    rows = {}
    for t in range(table.lo, table.hi + 1):
        h0, h1, h2, h3 = table.row(t)
        if t < -3 - e:
            h2 = None
        rows[t] = (h0, h1, h2, h3)
    return CohomologyTable(table.lo, table.hi, rows)


def construction_spectrum(
    construction, e: int, rng: tuple[int, int] = (-8, 0)
) -> SpectrumWithS:
    """Spectrum of a constructed sheaf: splice, trim, invert."""
    if isinstance(construction, CohomologyTable):
        table = construction
    elif isinstance(construction, Mapping):
        table = recipe_table(construction, rng)
    else:
        raise TypeError(f"expected recipe node or table, got {construction!r}")
    return spectrum_from_table(
        _drop_unsound_h2(table, e), splitting_type_from_e(e)
    )


def construction_table(
    construction, e: int, rng: tuple[int, int] = (-4, -1)
) -> CohomologyTable:
    """Printed-window table of a constructed sheaf (twists -4..-1)."""
    sw = construction_spectrum(construction, e)
    return table_from_spectrum(sw, splitting_type_from_e(e), rng)
