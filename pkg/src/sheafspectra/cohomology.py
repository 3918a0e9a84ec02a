"""Cohomology-dimension tables and both directions of the spectrum link.

A CohomologyTable records, for every twist t in an integer range, the
four dimensions h0..h3, each a nonnegative integer or None (unknown).
table_from_spectrum fills the two formula windows

    h1(l) = s + sum_i h0(O_P1(k_i + l + 1))   for l <= -a2 - 1
    h2(l) = sum_i h1(O_P1(k_i + l + 1))       for l >= a1 - 3

and spectrum_from_table inverts them: the backward differences of h2
count spectrum values from below, the forward differences of h1 count
them from above and expose s as the stabilized deep value of h1.
Unknown entries stay unknown; they are never conflated with zero.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .errors import InconsistentTableError, RangeInsufficientError
from .invariants import ChernClasses, SplittingType, euler_characteristic
from .spectrum import SpectrumWithS, c3_from_spectrum, validate_spectrum

__all__ = [
    "CohomologyTable",
    "ValidityWindows",
    "p1_cohomology",
    "table_from_spectrum",
    "spectrum_from_table",
    "chi_consistency",
]

Row = tuple  # (h0, h1, h2, h3), each int or None


def p1_cohomology(d: int) -> tuple[int, int]:
    """(h0, h1) of O(d) on the projective line; h0 - h1 = d + 1."""
    return (max(0, d + 1), max(0, -d - 1))


@dataclass(frozen=True)
class ValidityWindows:
    """Twist windows on which the two spectrum formulas are asserted."""

    h1_max: int  # h1 formula valid for l <= h1_max
    h2_min: int  # h2 formula valid for l >= h2_min

    @classmethod
    def from_splitting_type(cls, st: SplittingType) -> "ValidityWindows":
        return cls(h1_max=-st.a2 - 1, h2_min=st.a1 - 3)


@dataclass(frozen=True)
class CohomologyTable:
    """Partial or total table of h^i(E(t)) over a twist range.

    rows maps each twist of [lo, hi] to a 4-tuple; missing twists are
    normalized to all-unknown rows.  When Chern classes are attached,
    every fully known row is checked against the Euler characteristic.
    """

    lo: int
    hi: int
    rows: dict = field(default_factory=dict)
    cc: ChernClasses | None = None

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError(f"empty twist range [{self.lo}, {self.hi}]")
        normalized = {}
        for t in range(self.lo, self.hi + 1):
            row = self.rows.get(t, (None, None, None, None))
            row = tuple(row)
            if len(row) != 4:
                raise ValueError(f"row at t={t} must have 4 entries, got {row}")
            for h in row:
                if h is not None and (not isinstance(h, int) or h < 0):
                    raise ValueError(f"bad entry {h!r} at t={t}")
            normalized[t] = row
        for t in self.rows:
            if not self.lo <= t <= self.hi:
                raise ValueError(f"row at t={t} outside range [{self.lo}, {self.hi}]")
        object.__setattr__(self, "rows", normalized)
        if self.cc is not None:
            for t, row in normalized.items():
                if all(h is not None for h in row):
                    chi = row[0] - row[1] + row[2] - row[3]
                    want = euler_characteristic(self.cc, t)
                    if chi != want:
                        raise InconsistentTableError(
                            f"row t={t} has chi {chi}, class demands {want}"
                        )

    def row(self, t: int) -> Row:
        if not self.lo <= t <= self.hi:
            raise RangeInsufficientError(
                f"twist {t} outside table range [{self.lo}, {self.hi}]"
            )
        return self.rows[t]

    def entry(self, t: int, i: int):
        return self.row(t)[i]

    def is_total(self) -> bool:
        return all(
            h is not None for row in self.rows.values() for h in row
        )

    def to_json_dict(self) -> dict:
        out = {
            "range": [self.lo, self.hi],
            "rows": {
                str(t): [h for h in self.rows[t]]
                for t in range(self.lo, self.hi + 1)
            },
        }
        if self.cc is not None:
            out["cc"] = list(self.cc.as_tuple())
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True, separators=(",", ":"))

    @classmethod
    def from_json_dict(cls, data: Mapping) -> "CohomologyTable":
        try:
            lo, hi = (int(v) for v in data["range"])
            rows = {}
            for key, row in data["rows"].items():
                rows[int(key)] = tuple(
                    None if h is None else int(h) for h in row
                )
            cc = None
            if data.get("cc") is not None:
                e, c2, c3 = (int(v) for v in data["cc"])
                cc = ChernClasses(e, c2, c3)
        except (KeyError, TypeError, ValueError) as exc:
            raise ValueError(f"malformed table JSON: {exc}") from exc
        return cls(lo, hi, rows, cc)

    @classmethod
    def from_json(cls, text: str) -> "CohomologyTable":
        return cls.from_json_dict(json.loads(text))

    def to_markdown(self) -> str:
        lines = ["| t | h0 | h1 | h2 | h3 |", "| --- | --- | --- | --- | --- |"]
        for t in range(self.hi, self.lo - 1, -1):
            cells = ["" if h is None else str(h) for h in self.rows[t]]
            lines.append("| " + " | ".join([str(t)] + cells) + " |")
        return "\n".join(lines)


def table_from_spectrum(
    sw: SpectrumWithS,
    st: SplittingType,
    rng: tuple[int, int],
    stable: bool = True,
) -> CohomologyTable:
    """Fill the h1/h2 formula windows over rng; everything else unknown.

    With stable=True the vanishing windows h0 = 0 (t <= -1) and
    h3 = 0 (t >= -3-e, e = a1+a2) are filled as well; both rest on
    (semi)stability, so an unstable caller passes stable=False.
    """
    values = validate_spectrum(sw.values)
    if sw.s < 0:
        raise ValueError(f"s must be nonnegative, got {sw.s}")
    lo, hi = rng
    win = ValidityWindows.from_splitting_type(st)
    e = st.a1 + st.a2
    rows = {}
    for t in range(lo, hi + 1):
        h0 = 0 if stable and t <= -1 else None
        h3 = 0 if stable and t >= -3 - e else None
        h1 = None
        if t <= win.h1_max:
            h1 = sw.s + sum(p1_cohomology(k + t + 1)[0] for k in values)
        h2 = None
        if t >= win.h2_min:
            h2 = sum(p1_cohomology(k + t + 1)[1] for k in values)
        rows[t] = (h0, h1, h2, h3)
    cc = ChernClasses(e, len(values), c3_from_spectrum(e, len(values), sw))
    return CohomologyTable(lo, hi, rows, cc)


def _h1_run_top(table: CohomologyTable, h1_max: int) -> tuple[int, int]:
    # topmost consecutive run [p, q] of known h1 entries within the window
    top = min(table.hi, h1_max)
    q = None
    for t in range(top, table.lo - 1, -1):
        if table.entry(t, 1) is not None:
            q = t
            break
    if q is None:
        raise RangeInsufficientError("no known h1 entry inside the h1 window")
    if q != h1_max:
        raise RangeInsufficientError(
            f"h1 known only up to t={q}, need it at the window top t={h1_max}"
        )
    p = q
    while p - 1 >= table.lo and table.entry(p - 1, 1) is not None:
        p -= 1
    return p, q


def _h2_run(table: CohomologyTable, h2_min: int, a2: int) -> tuple[int, int]:
    # maximal consecutive run of known h2 entries, within the h2 window,
    # containing both -a2-2 and -a2-1
    need = (-a2 - 2, -a2 - 1)
    for t in need:
        if not (table.lo <= t <= table.hi) or table.entry(t, 2) is None:
            raise RangeInsufficientError(
                f"h2 must be known at t={need[0]} and t={need[1]} to count the spectrum"
            )
    u = need[0]
    while u - 1 >= max(table.lo, h2_min) and table.entry(u - 1, 2) is not None:
        u -= 1
    v = need[1]
    while v + 1 <= table.hi and table.entry(v + 1, 2) is not None:
        v += 1
    return u, v


def spectrum_from_table(table: CohomologyTable, st: SplittingType) -> SpectrumWithS:
    """Recover (spectrum, s) from a table, or fail loudly.

    The h1 side must witness stabilization (two equal consecutive deep
    values) to read s and the part of the spectrum above a2 - 1; the h2
    side counts everything below via backward differences, aggregating
    whatever lies at or below the deepest visible twist into a bucket
    that must be pinned by one of four closed rules.  No extrapolation:
    anything unwitnessed raises a range error, and any difference
    running in a forbidden direction raises an inconsistency error.
    The result is verified by regenerating the windows and comparing
    every known in-window entry.
    """
    win = ValidityWindows.from_splitting_type(st)
    a2 = st.a2

    # --- h1 side: s and the top part (values >= a2)
    p, q = _h1_run_top(table, win.h1_max)
    if p == q:
        raise RangeInsufficientError(
            "single h1 value cannot witness stabilization; extend the range down"
        )
    upward = {}
    for l in range(p + 1, q + 1):
        u_l = table.entry(l, 1) - table.entry(l - 1, 1)
        if u_l < 0:
            raise InconsistentTableError(f"h1 decreases from t={l - 1} to t={l}")
        upward[l] = u_l
    for l in range(p + 2, q + 1):
        if upward[l] < upward[l - 1]:
            raise InconsistentTableError(
                f"h1 differences drop from t={l - 1} to t={l}"
            )
    settled = [l for l, u_l in upward.items() if u_l == 0]
    if not settled:
        raise RangeInsufficientError(
            "h1 never stabilizes inside the table; extend the range down"
        )
    l_s = max(settled)
    s = table.entry(l_s, 1)
    x_top = -l_s - 2
    count_ge = {x_top + 1: 0}
    for y in range(a2, x_top + 1):
        count_ge[y] = upward[-y - 1]
    top_part = []
    for y in range(a2, x_top + 1):
        for _ in range(count_ge[y] - count_ge[y + 1]):
            top_part.append(y)

    # --- h2 side: the bottom part (values <= a2 - 1)
    u, v = _h2_run(table, win.h2_min, a2)
    down = {}
    for l in range(u + 1, v + 1):
        d_l = table.entry(l - 1, 2) - table.entry(l, 2)
        if d_l < 0:
            raise InconsistentTableError(f"h2 increases from t={l - 1} to t={l}")
        down[l] = d_l
    for l in range(u + 2, v + 1):
        if down[l] > down[l - 1]:
            raise InconsistentTableError(
                f"h2 differences grow from t={l - 1} to t={l}"
            )
    count_le = {x: down[-x - 2] for x in range(-v - 2, a2)}
    x_min = -v - 2
    bottom_part = []
    r = count_le[x_min]
    w = table.entry(v, 2)
    if r == 0:
        if w != 0:
            raise InconsistentTableError(
                f"h2(t={v}) = {w} but the difference count claims no deeper values"
            )
    elif w == 0:
        bottom_part.extend([x_min] * r)
    elif r == 1:
        bottom_part.append(x_min - w)
    elif w == 1:
        bottom_part.append(x_min - 1)
        bottom_part.extend([x_min] * (r - 1))
    else:
        raise RangeInsufficientError(
            f"{r} spectrum values at or below t-dual {x_min} cannot be placed "
            f"from residual h2 weight {w}; extend the range up"
        )
    for x in range(x_min + 1, a2):
        for _ in range(count_le[x] - count_le[x - 1]):
            bottom_part.append(x)

    values = tuple(sorted(bottom_part + top_part))
    if not values:
        raise InconsistentTableError("table forces an empty spectrum")
    result = SpectrumWithS(values, s)

    # --- verify: regenerate both windows and compare every known entry
    regen = table_from_spectrum(result, st, (table.lo, table.hi), stable=False)
    for t in range(table.lo, table.hi + 1):
        for i in (1, 2):
            have = table.entry(t, i)
            want = regen.entry(t, i)
            if have is not None and want is not None and have != want:
                raise InconsistentTableError(
                    f"recovered spectrum {values}, s={s} regenerates "
                    f"h{i}(t={t}) = {want}, table says {have}"
                )
    return result


def chi_consistency(
    table: CohomologyTable, cc: ChernClasses
) -> list[tuple[int, int, int]]:
    """Violations of -h1 + h2 = chi on the conservative window.

    On -3-e <= t <= -1 both h0 and h3 are forced to vanish under
    stability, so the alternating sum collapses; unknown h0/h3 entries
    are treated as those forced zeros, unknown h1/h2 make the twist
    unverifiable and are skipped.  Returns (t, got, want) triples.
    """
    out = []
    for t in range(max(table.lo, -3 - cc.e), min(table.hi, -1) + 1):
        h0, h1, h2, h3 = table.row(t)
        if h1 is None or h2 is None:
            continue
        got = (h0 or 0) - h1 + h2 - (h3 or 0)
        want = euler_characteristic(cc, t)
        if got != want:
            out.append((t, got, want))
    return out
