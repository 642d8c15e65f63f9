"""Decorated graphs of patterns: components, leaners, and strictness.

Each entry of a pattern is a vertex.  Two vertices are joined when their
entries are consecutive and comparable in the row chain and equal; the two
middle entries of a row are never joined with each other.  Every component
therefore sits inside one row and all its vertices share one value.
Criticality circles a vertex.

A component containing a mirrored pair a_{i,j} = bar(i,j) with j outside
the two middle columns is a multiple leaner; equivalently, both of its
legs (the vertices in columns <= r-2 and >= r+1) are nonempty.  It is
symmetric exactly when the legs have the same number of vertices, and its
length is then half the vertex count.

A pattern is strict unless some circled vertex carries the value 0, or
some component that is not a multiple leaner has an edge whose earlier
endpoint (in the row-chain order) is circled.

Component structure depends only on the values of one row, so everything
here is memoized per (rank, row index, row values); enumeration revisits
the same rows constantly and the cache turns classification into lookups.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .pattern import (
    LittelmannPattern,
    Position,
    critical_positions,
    first_bound_violation,
)
from .root_data import HighestWeight

ORDINARY = "ordinary"
ML_ASYMMETRIC = "ml_asymmetric"
ML_SYMMETRIC = "ml_symmetric"


@lru_cache(maxsize=None)
def row_chain_pairs(rank: int, i: int) -> tuple[tuple[int, int], ...]:
    """Consecutive comparable column pairs of row i, earlier column first."""
    r = rank
    pairs = [(j, j + 1) for j in range(i, r - 2)]
    if i <= r - 2:
        pairs += [(r - 2, r - 1), (r - 2, r), (r - 1, r + 1), (r, r + 1)]
    pairs += [(j, j + 1) for j in range(r + 1, 2 * r - 1 - i)]
    return tuple(pairs)


@dataclass(frozen=True)
class Component:
    """One connected component, always contained in a single row."""

    row: int
    value: int
    columns: tuple[int, ...]
    kind: str
    rightmost: Position
    length: Optional[int] = None  # ml_symmetric only
    shorter_leg_endpoint: Optional[Position] = None  # ml_asymmetric only
    upsilon: Optional[Position] = None  # ml_symmetric only

    @property
    def vertices(self) -> tuple[Position, ...]:
        return tuple((self.row, c) for c in self.columns)


@dataclass(frozen=True)
class DecoratedGraph:
    """A pattern together with its equality edges and circled vertices."""

    pattern: LittelmannPattern
    circled: frozenset[Position]
    edges: tuple[tuple[Position, Position], ...]


def _classify(rank: int, i: int, columns: list[int], value: int) -> Component:
    r = rank
    colset = set(columns)
    left = sum(1 for c in columns if c <= r - 2)
    right = sum(1 for c in columns if c >= r + 1)
    maxcol = columns[-1]

    if maxcol >= r + 1:
        rightmost = (i, maxcol)
    elif r - 1 in colset and r in colset:
        rightmost = (i, r - 1)  # two rightmost vertices: take the upper one
    elif r in colset:
        rightmost = (i, r)
    elif r - 1 in colset:
        rightmost = (i, r - 1)
    else:
        rightmost = (i, maxcol)

    if left >= 1 and right >= 1:
        assert r - 1 in colset and r in colset, "a leaner spans both middle columns"
        if left == right:
            return Component(
                row=i,
                value=value,
                columns=tuple(columns),
                kind=ML_SYMMETRIC,
                rightmost=rightmost,
                length=left + 1,
                upsilon=(i, maxcol - 1),
            )
        shorter = (i, columns[0]) if left < right else (i, maxcol)
        return Component(
            row=i,
            value=value,
            columns=tuple(columns),
            kind=ML_ASYMMETRIC,
            rightmost=rightmost,
            shorter_leg_endpoint=shorter,
        )
    return Component(
        row=i, value=value, columns=tuple(columns), kind=ORDINARY, rightmost=rightmost
    )


@lru_cache(maxsize=None)
def _row_analysis(
    rank: int, i: int, row: tuple[int, ...]
) -> tuple[tuple[Component, ...], tuple[Position, ...], tuple[int, ...]]:
    """Per-row data: (components, strictness probes, weight delta).

    The probes are the earlier endpoints of every edge inside a component
    that is not a multiple leaner; circling any of them makes the pattern
    nonstrict.  The weight delta is this row's contribution to the weight
    vector.
    """
    r = rank

    def entry(c: int) -> int:
        return row[c - i]

    cols = list(range(i, 2 * r - i))
    parent = {c: c for c in cols}

    def find(c):
        while parent[c] != c:
            parent[c] = parent[parent[c]]
            c = parent[c]
        return c

    for a, b in row_chain_pairs(rank, i):
        if entry(a) == entry(b):
            parent[find(a)] = find(b)
    groups: dict[int, list[int]] = {}
    for c in cols:
        groups.setdefault(find(c), []).append(c)

    components = tuple(
        _classify(rank, i, sorted(group), entry(group[0]))
        for group in sorted(groups.values())
    )

    probes = []
    for comp in components:
        if comp.kind != ORDINARY:
            continue
        colset = set(comp.columns)
        for a, b in row_chain_pairs(rank, i):
            if a in colset and b in colset:
                probes.append((i, a))

    delta = [0] * r
    delta[0] = entry(r - 1)
    delta[1] = entry(r)
    for k in range(3, r + 1):
        c = r + 1 - k
        if c >= i:
            delta[k - 1] = entry(c) + entry(2 * r - 1 - c)
    return components, tuple(probes), tuple(delta)


def component_structure(T: LittelmannPattern) -> tuple[Component, ...]:
    """All components of the (undecorated) graph, row by row."""
    out = []
    for i, row in enumerate(T.rows, start=1):
        out.extend(_row_analysis(T.rank, i, row)[0])
    return tuple(out)


def decorate(T: LittelmannPattern, hw: HighestWeight) -> DecoratedGraph:
    """Build the decorated graph; rejects patterns that violate a bound."""
    if not T.is_admissible():
        raise ValueError("pattern rows are not weakly decreasing")
    violation = first_bound_violation(T, hw)
    if violation is not None:
        pos, value, bound = violation
        raise ValueError(
            f"entry {value} at row {pos[0]}, column {pos[1]} exceeds its bound {bound}"
        )
    edges = []
    for i in range(1, T.rank):
        for a, b in row_chain_pairs(T.rank, i):
            if T.entry(i, a) == T.entry(i, b):
                edges.append(((i, a), (i, b)))
    return DecoratedGraph(
        pattern=T, circled=critical_positions(T, hw), edges=tuple(edges)
    )


def classify_components(g: DecoratedGraph) -> tuple[Component, ...]:
    return component_structure(g.pattern)


def _strictness_failure_rows(rank, rows, circled) -> Optional[str]:
    for i, j in circled:
        if rows[i - 1][j - i] == 0:
            return f"circled zero at row {i}, column {j}"
    for i, row in enumerate(rows, start=1):
        for pos in _row_analysis(rank, i, row)[1]:
            if pos in circled:
                return (
                    f"circled entry at row {pos[0]}, column {pos[1]} leans on its "
                    "equal right neighbor"
                )
    return None


def _strictness_failure(T: LittelmannPattern, circled) -> Optional[str]:
    return _strictness_failure_rows(T.rank, T.rows, circled)


def is_strict(T: LittelmannPattern, hw: HighestWeight) -> bool:
    return _strictness_failure(T, critical_positions(T, hw)) is None


# -- rendering ----------------------------------------------------------------


def _cell(value: int, circled: bool) -> str:
    return f"({value})" if circled else str(value)


def render_decorated(g: DecoratedGraph) -> str:
    """ASCII picture, three text lines per pattern row.

    The chains run along the middle line with " — " marking edges and three
    spaces otherwise; the two middle entries sit stacked above and below
    the gap between the chains, flanked by "—" marks exactly where edges
    toward column r-2 (left) and column r+1 (right) exist.
    """
    T = g.pattern
    r = T.rank
    blocks = []
    for i in range(1, r):
        def cell(c):
            return _cell(T.entry(i, c), (i, c) in g.circled)

        def eq(a, b):
            return T.entry(i, a) == T.entry(i, b)

        def chain(columns):
            text = ""
            for idx, c in enumerate(columns):
                if idx:
                    text += " — " if eq(columns[idx - 1], c) else "   "
                text += cell(c)
            return text

        left = chain(list(range(i, r - 1)))
        right = chain(list(range(r + 1, 2 * r - i)))
        top_cell, bot_cell = cell(r - 1), cell(r)
        width = max(len(top_cell), len(bot_cell))

        def mid_line(text, col):
            lead = " — " if left and eq(r - 2, col) else "   "
            trail = " — " if right and eq(col, r + 1) else "   "
            return " " * len(left) + lead + text.center(width) + trail

        gap = " " * (width + 6)
        lines = [
            mid_line(top_cell, r - 1),
            left + gap + right,
            mid_line(bot_cell, r),
        ]
        blocks.append("\n".join(line.rstrip() for line in lines))
    return "\n".join(blocks)
