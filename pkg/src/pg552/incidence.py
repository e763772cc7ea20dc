"""Incidence structures, partial-geometry verification, duals, and the
point/line graphs.

A partial geometry pg(s,t,alpha) is a partial linear space with lines of
degree s+1 and points of degree t+1 such that every non-incident point-line
pair (P, l) has exactly alpha points of l collinear with P.  Verification
here is by direct enumeration over all pairs, never by spectral shortcuts,
so a failure always comes with a concrete witness.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import TextIO

from .bits import bits, mask_of
from .graphs import Graph, collinearity_graph, intersection_graph


@dataclass(frozen=True)
class IncidenceStructure:
    """``v`` points 0..v-1 and a list of lines, each line a point mask.

    Lines are stored deduplicated and sorted by mask value, so line indices
    are deterministic and shared by the dual and the file format.
    """

    v: int
    lines: tuple[int, ...]

    def __init__(self, v: int, lines):
        object.__setattr__(self, "v", v)
        normalized = tuple(sorted(set(int(m) for m in lines)))
        full = (1 << v) - 1
        for m in normalized:
            if m & ~full:
                raise ValueError("line contains a point outside 0..v-1")
        object.__setattr__(self, "lines", normalized)

    @property
    def b(self) -> int:
        return len(self.lines)

    def lines_through(self, p: int) -> list[int]:
        return [j for j, m in enumerate(self.lines) if m >> p & 1]

    def pencil_mask(self, p: int) -> int:
        """Mask over line indices of the lines through p."""
        return mask_of(self.lines_through(p))


@dataclass(frozen=True)
class PgParams:
    s: int
    t: int
    alpha: int
    v: int
    b: int

    def as_tuple(self) -> tuple[int, int, int, int, int]:
        return (self.s, self.t, self.alpha, self.v, self.b)


class PgViolation(ValueError):
    """Raised when a structure fails a partial-geometry axiom; carries the
    first concrete witness."""

    def __init__(self, reason: str, witness=None):
        super().__init__(f"{reason}" + (f"; witness {witness}" if witness else ""))
        self.reason = reason
        self.witness = witness


def validate_partial_linear_space(g: IncidenceStructure):
    """True iff every pair of distinct points is on at most one common line.

    Returns ``(ok, witness)`` where the witness of a violation is the first
    quadruple (point, point, line, line) in line-index order.
    """
    for i in range(g.b):
        mi = g.lines[i]
        for j in range(i + 1, g.b):
            common = mi & g.lines[j]
            if common.bit_count() >= 2:
                it = bits(common)
                p, q = next(it), next(it)
                return False, (p, q, i, j)
    return True, None


def degrees(g: IncidenceStructure) -> tuple[Counter, Counter]:
    """Multisets of line sizes and of point degrees."""
    line_sizes = Counter(m.bit_count() for m in g.lines)
    point_degrees = Counter()
    for p in range(g.v):
        point_degrees[sum(1 for m in g.lines if m >> p & 1)] += 1
    return line_sizes, point_degrees


def verify_pg(g: IncidenceStructure) -> PgParams:
    """Full partial-geometry verification by direct enumeration.

    Checks the partial linear space axiom, uniform line and point degrees,
    and the alpha condition over every non-incident point-line pair, then
    asserts the point and line count formulas.  Raises :class:`PgViolation`
    with the first witness on any failure.
    """
    if g.b == 0:
        raise PgViolation("no lines")
    ok, witness = validate_partial_linear_space(g)
    if not ok:
        raise PgViolation("two points on two common lines", witness)
    line_sizes, point_degrees = degrees(g)
    if len(line_sizes) != 1:
        raise PgViolation("line degree not uniform", dict(line_sizes))
    if len(point_degrees) != 1:
        raise PgViolation("point degree not uniform", dict(point_degrees))
    s = next(iter(line_sizes)) - 1
    t = next(iter(point_degrees)) - 1
    collin = collinearity_graph(g.v, g.lines)
    alpha = None
    for p in range(g.v):
        row = collin.adj[p]
        for j, m in enumerate(g.lines):
            if m >> p & 1:
                continue
            c = (row & m).bit_count()
            if alpha is None:
                alpha = c
            elif c != alpha:
                raise PgViolation("alpha not constant", (p, j, c, alpha))
    if alpha is None:
        raise PgViolation("no non-incident point-line pair; alpha undefined")
    if alpha == 0:
        raise PgViolation("alpha is zero")
    # v = (s+1)(st/alpha + 1) and b = (t+1)(st/alpha + 1), checked exactly
    # (st/alpha itself need not be integral: here st/alpha = 25/2)
    if alpha * g.v != (s + 1) * (s * t + alpha):
        raise PgViolation("point count formula violated", (g.v, s, t, alpha))
    if alpha * g.b != (t + 1) * (s * t + alpha):
        raise PgViolation("line count formula violated", (g.b, s, t, alpha))
    return PgParams(s=s, t=t, alpha=alpha, v=g.v, b=g.b)


def dual(g: IncidenceStructure) -> IncidenceStructure:
    """Points of the dual are line indices of g; lines are point pencils."""
    return IncidenceStructure(g.b, (g.pencil_mask(p) for p in range(g.v)))


def point_graph(g: IncidenceStructure) -> Graph:
    return collinearity_graph(g.v, g.lines)


def line_graph(g: IncidenceStructure) -> Graph:
    return intersection_graph(g.lines)


# ---------------------------------------------------------------------------
# incidence file format: "pg <v> <b>" header, then one line of strictly
# increasing point indices per geometry line, single spaces, trailing newline.


def to_text(g: IncidenceStructure) -> str:
    rows = [f"pg {g.v} {g.b}"]
    for m in g.lines:
        rows.append(" ".join(str(p) for p in bits(m)))
    return "\n".join(rows) + "\n"


def from_text(text: str) -> IncidenceStructure:
    lines = text.split("\n")
    if not lines or not lines[0]:
        raise ValueError("missing header")
    head = lines[0].split(" ")
    if len(head) != 3 or head[0] != "pg":
        raise ValueError(f"bad header: {lines[0]!r}")
    try:
        v, b = int(head[1]), int(head[2])
    except ValueError:
        raise ValueError(f"bad header: {lines[0]!r}") from None
    if v < 0 or b < 0:
        raise ValueError(f"bad header: {lines[0]!r}")
    if len(lines) != b + 2 or lines[-1] != "":
        raise ValueError(f"expected {b} rows plus trailing newline")
    masks = []
    for row in lines[1 : b + 1]:
        parts = row.split(" ")
        if not parts or "" in parts:
            raise ValueError(f"malformed row: {row!r}")
        try:
            pts = [int(p) for p in parts]
        except ValueError:
            raise ValueError(f"malformed row: {row!r}") from None
        if any(not 0 <= p < v for p in pts):
            raise ValueError(f"point index out of range in row: {row!r}")
        if any(x >= y for x, y in zip(pts, pts[1:])):
            raise ValueError(f"row not strictly increasing: {row!r}")
        masks.append(mask_of(pts))
    if len(set(masks)) != len(masks):
        raise ValueError("duplicate line")
    return IncidenceStructure(v, masks)


def write_incidence(g: IncidenceStructure, f: TextIO | str) -> None:
    if isinstance(f, str):
        with open(f, "w") as fh:
            fh.write(to_text(g))
    else:
        f.write(to_text(g))


def read_incidence(f: TextIO | str) -> IncidenceStructure:
    if isinstance(f, str):
        with open(f) as fh:
            return from_text(fh.read())
    return from_text(f.read())
