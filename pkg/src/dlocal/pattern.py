"""Littelmann patterns for D_r: shape, bounds, weights, and enumeration.

A pattern is a triangular array of nonnegative integers a_{i,j} with rows
i = 1..r-1; row i holds the columns j = i..2r-1-i, so the first row has
2r-2 boxes and the last row 2.  The reflected accessor is
bar(i, j) = a_{i, 2r-1-j}; in particular bar(i, r-1) and bar(i, r) swap
the two middle columns.

Admissibility asks each row to decrease weakly left to right except that
the two middle entries a_{i,r-1}, a_{i,r} are never compared with each
other (both are <= a_{i,r-2} and >= a_{i,r+1}).

A highest weight with coefficients m_k adds one upper bound per entry.
With the cumulative column sums

    S(c, i)  = sum over k <= i of (a_{k,c} + bar(k,c))        for c <= r-2,
    Sm(i)    = sum over k <= i of (a_{k,r-1} + a_{k,r}),
    T1(i)    = sum over k <= i of a_{k,r-1},    T2(i) likewise for a_{k,r},

the bounds for row i are

    bar(i,j) <= m_{r-j+1} + [bar(i,j-1)] + S(j-1,i-1) - 2 S(j,i-1)
                + (S(j+1,i-1) if j+1 <= r-2 else Sm(i-1))          (j <= r-2)
    a_{i,j}  <= m_{r-j+1} + (S(j+1,i) if j+1 <= r-2 else Sm(i))
                - 2 (bar(i,j) + S(j,i-1)) + [bar(i,j-1)] + S(j-1,i-1)
    a_{i,r-1} <= m_2 + [bar(i,r-2)] + S(r-2,i-1) - 2 T1(i-1)
    a_{i,r}   <= m_1 + [bar(i,r-2)] + S(r-2,i-1) - 2 T2(i-1)

Boundary conventions: sums over an empty row range are 0 (so everything
with i = 1 sees zeros), S(0, .) = 0, and a bracketed in-row term [bar(i,c)]
with c < i refers to a box that does not exist in row i and is taken as 0
while the cumulative part of its column sum is kept.  An entry is critical
when it equals its own bound.  These conventions are validated by the
dimension suite: the number of bounded patterns must equal the Weyl
dimension for every tested highest weight.

Enumeration fills rows top to bottom.  Within a row the only order in
which every bound is available as soon as its entry is placed is right to
left: the right half first (bar indices j = i..r-2, i.e. boxes from the
right end inward), then the middle pair, then the left half from column
r-2 back to column i.  Filled this way each entry has a known lower bound
from the row chain and its exact upper bound, so the search never
backtracks over infeasible prefixes.  Row candidates are sorted before
recursing, which restores the canonical row-major lexicographic order of
the emitted patterns.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterator, Optional

from .root_data import HighestWeight, RootSystemD

Position = tuple[int, int]


@dataclass(frozen=True)
class LittelmannPattern:
    """Immutable pattern; rows[i-1][j-i] stores a_{i,j}."""

    rank: int
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        r = self.rank
        if r < 2:
            raise ValueError(f"rank must be >= 2, got {r}")
        rows = tuple(tuple(int(v) for v in row) for row in self.rows)
        if len(rows) != r - 1:
            raise ValueError(f"expected {r - 1} rows, got {len(rows)}")
        for i, row in enumerate(rows, start=1):
            if len(row) != 2 * (r - i):
                raise ValueError(
                    f"row {i} must have {2 * (r - i)} entries, got {len(row)}"
                )
            if any(v < 0 for v in row):
                raise ValueError(f"row {i} has a negative entry: {row}")
        object.__setattr__(self, "rows", rows)

    # -- access -------------------------------------------------------------

    def entry(self, i: int, j: int) -> int:
        """a_{i,j} for i <= j <= 2r-1-i."""
        return self.rows[i - 1][j - i]

    def bar(self, i: int, j: int) -> int:
        """bar(i,j) = a_{i, 2r-1-j}."""
        return self.rows[i - 1][2 * self.rank - 1 - j - i]

    def row_columns(self, i: int) -> range:
        return range(i, 2 * self.rank - i)

    def positions(self) -> Iterator[Position]:
        for i in range(1, self.rank):
            for j in self.row_columns(i):
                yield (i, j)

    def is_admissible(self) -> bool:
        r = self.rank
        for i in range(1, r):
            top, bot = self.entry(i, r - 1), self.entry(i, r)
            for j in range(i, r - 2):
                if self.entry(i, j) < self.entry(i, j + 1):
                    return False
            if i <= r - 2:
                outer = self.entry(i, r - 2)
                inner = self.entry(i, r + 1)
                if top > outer or bot > outer or top < inner or bot < inner:
                    return False
                for j in range(r + 1, 2 * r - 1 - i):
                    if self.entry(i, j) < self.entry(i, j + 1):
                        return False
        return True

    # -- serialization --------------------------------------------------------

    def to_string(self) -> str:
        return ";".join(",".join(str(v) for v in row) for row in self.rows)

    @classmethod
    def from_string(cls, text: str) -> "LittelmannPattern":
        try:
            rows = tuple(
                tuple(int(v) for v in chunk.split(",")) for chunk in text.split(";")
            )
        except ValueError as exc:
            raise ValueError(f"cannot parse pattern literal {text!r}") from exc
        return cls(rank=len(rows) + 1, rows=rows)

    def to_json_obj(self):
        return {"rank": self.rank, "rows": [list(row) for row in self.rows]}

    @classmethod
    def from_json_obj(cls, obj) -> "LittelmannPattern":
        return cls(rank=obj["rank"], rows=tuple(tuple(row) for row in obj["rows"]))

    def to_json_str(self) -> str:
        return json.dumps(self.to_json_obj(), separators=(",", ":"))


# -- partial sums -----------------------------------------------------------


@dataclass(frozen=True)
class PartialSums:
    """Cumulative column sums over rows 1..row (all zero for row = 0)."""

    rank: int
    row: int
    col_pairs: tuple[int, ...]  # index c-1 holds S(c, row) for c = 1..rank-2
    mid_top: int  # T1(row)
    mid_bot: int  # T2(row)

    @property
    def mid_sum(self) -> int:  # Sm(row)
        return self.mid_top + self.mid_bot

    def s(self, c: int) -> int:
        """S(c, row); S(0, .) = 0 by convention."""
        return self.col_pairs[c - 1] if c >= 1 else 0


def partial_sums(T: LittelmannPattern, upto_row: int) -> PartialSums:
    r = T.rank
    if not 0 <= upto_row <= r - 1:
        raise ValueError(f"row must be in 0..{r - 1}, got {upto_row}")
    cols = [0] * (r - 2)
    t1 = t2 = 0
    for i in range(1, upto_row + 1):
        for c in range(i, r - 1):
            cols[c - 1] += T.entry(i, c) + T.bar(i, c)
        t1 += T.entry(i, r - 1)
        t2 += T.entry(i, r)
    return PartialSums(rank=r, row=upto_row, col_pairs=tuple(cols), mid_top=t1, mid_bot=t2)


# -- bounds and criticality ---------------------------------------------------


def upper_bound(T: LittelmannPattern, hw: HighestWeight, position: Position) -> int:
    """Right-hand side of the unique bound whose left side is this entry."""
    r = T.rank
    if hw.rank != r:
        raise ValueError(f"rank mismatch: pattern {r}, weight {hw.rank}")
    i, j = position
    if not (1 <= i <= r - 1 and i <= j <= 2 * r - 1 - i):
        raise ValueError(f"position {position} outside a rank-{r} pattern")
    m = hw.m
    ps = partial_sums(T, i - 1)

    def inrow_bar(c: int) -> int:
        return T.bar(i, c) if c >= i else 0

    if j <= r - 2:
        if j + 1 <= r - 2:
            right = ps.s(j + 1) + T.entry(i, j + 1) + T.bar(i, j + 1)
        else:
            right = ps.mid_sum + T.entry(i, r - 1) + T.entry(i, r)
        return (
            m[r - j]
            + right
            - 2 * (T.bar(i, j) + ps.s(j))
            + inrow_bar(j - 1)
            + ps.s(j - 1)
        )
    if j == r - 1:
        return m[1] + inrow_bar(r - 2) + ps.s(r - 2) - 2 * ps.mid_top
    if j == r:
        return m[0] + inrow_bar(r - 2) + ps.s(r - 2) - 2 * ps.mid_bot
    jb = 2 * r - 1 - j  # bar index, i <= jb <= r-2
    tail = ps.s(jb + 1) if jb + 1 <= r - 2 else ps.mid_sum
    return m[r - jb] + inrow_bar(jb - 1) + ps.s(jb - 1) - 2 * ps.s(jb) + tail


def is_theta_admissible(T: LittelmannPattern, hw: HighestWeight) -> bool:
    return T.is_admissible() and first_bound_violation(T, hw) is None


def first_bound_violation(
    T: LittelmannPattern, hw: HighestWeight
) -> Optional[tuple[Position, int, int]]:
    """First (row-major) entry exceeding its bound, as (position, value, bound)."""
    for pos in T.positions():
        value = T.entry(*pos)
        bound = upper_bound(T, hw, pos)
        if value > bound:
            return pos, value, bound
    return None


def critical_positions(T: LittelmannPattern, hw: HighestWeight) -> frozenset[Position]:
    """Positions whose entry meets its bound; defined for bounded patterns only."""
    if not is_theta_admissible(T, hw):
        raise ValueError("pattern is not admissible for this highest weight")
    return frozenset(
        pos for pos in T.positions() if T.entry(*pos) == upper_bound(T, hw, pos)
    )


def weight_vector(T: LittelmannPattern) -> tuple[int, ...]:
    """The exponent vector this pattern contributes to.

    Coordinates 1 and 2 are the column sums of the two middle columns; the
    k-th coordinate for k >= 3 is the paired sum of column r+1-k.
    """
    r = T.rank
    lam = [0] * r
    for i in range(1, r):
        lam[0] += T.entry(i, r - 1)
        lam[1] += T.entry(i, r)
    for k in range(3, r + 1):
        c = r + 1 - k
        lam[k - 1] = sum(T.entry(i, c) + T.bar(i, c) for i in range(1, c + 1))
    return tuple(lam)


# -- enumeration --------------------------------------------------------------


def _row_fills(r, m, i, s, t1, t2, lam):
    """Yield (row, crit, new_s, new_t1, new_t2) over all valid fills of row i.

    ``s`` carries S(c, i-1) at index c-1; entries for columns c < i-1 are
    never read.  ``lam`` is an optional target weight: when set, column
    capacities prune the fill and the last row contributing to a column is
    forced to land exactly on the target.
    """
    smid = t1 + t2
    nbar = r - 1 - i  # number of bar boxes in this row

    def sget(c):
        return s[c - 1] if c >= 1 else 0

    bars = {}  # bar index j -> value
    results = []
    crit: list[tuple[int, int]] = []

    def fill_bars(j):
        if j > r - 2:
            fill_mid_top()
            return
        low = bars[j - 1] if j - 1 >= i else 0
        high = (
            m[r - j]
            + (bars[j - 1] if j - 1 >= i else 0)
            + sget(j - 1)
            - 2 * sget(j)
            + (sget(j + 1) if j + 1 <= r - 2 else smid)
        )
        bound = high
        if lam is not None:
            high = min(high, lam[r - j] - sget(j))
        for v in range(low, high + 1):
            bars[j] = v
            if v == bound:
                crit.append((i, 2 * r - 1 - j))
                fill_bars(j + 1)
                crit.pop()
            else:
                fill_bars(j + 1)
        bars.pop(j, None)

    def fill_mid_top():
        low = bars[r - 2] if i <= r - 2 else 0
        bound = m[1] + (bars[r - 2] if i <= r - 2 else 0) + sget(r - 2) - 2 * t1
        high = bound
        if lam is not None:
            cap = lam[0] - t1
            if i == r - 1:
                if not (low <= cap <= bound):
                    return
                low = high = cap
            else:
                high = min(high, cap)
        for v in range(low, high + 1):
            if v == bound:
                crit.append((i, r - 1))
                fill_mid_bot(v)
                crit.pop()
            else:
                fill_mid_bot(v)

    def fill_mid_bot(top):
        low = bars[r - 2] if i <= r - 2 else 0
        bound = m[0] + (bars[r - 2] if i <= r - 2 else 0) + sget(r - 2) - 2 * t2
        high = bound
        if lam is not None:
            cap = lam[1] - t2
            if i == r - 1:
                if not (low <= cap <= bound):
                    return
                low = high = cap
            else:
                high = min(high, cap)
        for v in range(low, high + 1):
            if v == bound:
                crit.append((i, r))
                fill_left(r - 2, top, v, {})
                crit.pop()
            else:
                fill_left(r - 2, top, v, {})

    def fill_left(j, top, bot, lefts):
        if j < i:
            emit(top, bot, lefts)
            return
        low = max(top, bot) if j == r - 2 else lefts[j + 1]
        if j + 1 <= r - 2:
            right = sget(j + 1) + lefts[j + 1] + bars[j + 1]
        else:
            right = smid + top + bot
        bound = (
            m[r - j]
            + right
            - 2 * (bars[j] + sget(j))
            + (bars[j - 1] if j - 1 >= i else 0)
            + sget(j - 1)
        )
        high = bound
        if lam is not None:
            cap = lam[r - j] - sget(j) - bars[j]
            if i == j:
                if not (low <= cap <= bound):
                    return
                low = high = cap
            else:
                high = min(high, cap)
        for v in range(low, high + 1):
            lefts[j] = v
            if v == bound:
                crit.append((i, j))
                fill_left(j - 1, top, bot, lefts)
                crit.pop()
            else:
                fill_left(j - 1, top, bot, lefts)
        lefts.pop(j, None)

    def emit(top, bot, lefts):
        row = (
            tuple(lefts[j] for j in range(i, r - 1))
            + (top, bot)
            + tuple(bars[j] for j in range(r - 2, i - 1, -1))
        )
        new_s = list(s)
        for j in range(i, r - 1):
            new_s[j - 1] += lefts[j] + bars[j]
        results.append((row, tuple(crit), tuple(new_s), t1 + top, t2 + bot))

    if nbar >= 1:
        fill_bars(i)
    else:
        fill_mid_top()
    return results


def _complete(r, m, lam, i, s, t1, t2):
    """Yield (rows, crit) over all completions starting at row i, sorted."""
    if i == r:
        yield (), ()
        return
    fills = _row_fills(r, m, i, s, t1, t2, lam)
    fills.sort(key=lambda f: f[0])
    for row, crit, s2, t1n, t2n in fills:
        for rest_rows, rest_crit in _complete(r, m, lam, i + 1, s2, t1n, t2n):
            yield (row,) + rest_rows, crit + rest_crit


def _check_args(rs: RootSystemD, hw: HighestWeight, weight_filter):
    if hw.rank != rs.rank:
        raise ValueError(f"rank mismatch: root system {rs.rank}, weight {hw.rank}")
    if weight_filter is not None:
        weight_filter = tuple(int(v) for v in weight_filter)
        if len(weight_filter) != rs.rank or any(v < 0 for v in weight_filter):
            raise ValueError(f"weight filter must be {rs.rank} nonnegative integers")
    return weight_filter


def enumerate_decorated(
    rs: RootSystemD, hw: HighestWeight, weight_filter=None
) -> Iterator[tuple[LittelmannPattern, frozenset[Position]]]:
    """Yield (pattern, critical positions) in canonical row-major lex order.

    Criticality falls out of the fill bounds, so consumers that need the
    decorations avoid a second bound pass.
    """
    weight_filter = _check_args(rs, hw, weight_filter)
    r = rs.rank
    for rows, crit in _complete(r, hw.m, weight_filter, 1, (0,) * (r - 2), 0, 0):
        yield LittelmannPattern(rank=r, rows=rows), frozenset(crit)


def enumerate_patterns(
    rs: RootSystemD, hw: HighestWeight, weight_filter=None
) -> Iterator[LittelmannPattern]:
    """Yield every bounded pattern exactly once, canonically ordered."""
    for T, _ in enumerate_decorated(rs, hw, weight_filter):
        yield T


def count_patterns(rs: RootSystemD, hw: HighestWeight) -> int:
    """Number of bounded patterns, without materializing them.

    Counts by dynamic programming over the cumulative-sum state between
    rows: identical states have identical completion counts, and the sums
    for columns left of the next row are dropped from the memo key once no
    later bound can read them.
    """
    _check_args(rs, hw, None)
    r = rs.rank
    m = hw.m
    memo: dict = {}

    def rec(i, s, t1, t2):
        if i == r:
            return 1
        key = (i, s[max(i - 2, 0) :], t1, t2)
        cached = memo.get(key)
        if cached is not None:
            return cached
        total = 0
        for _, _, s2, t1n, t2n in _row_fills(r, m, i, s, t1, t2, None):
            total += rec(i + 1, s2, t1n, t2n)
        memo[key] = total
        return total

    return rec(1, (0,) * (r - 2), 0, 0)
