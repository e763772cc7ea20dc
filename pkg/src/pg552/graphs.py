"""Simple graphs on up to 81 vertices as bitset adjacency rows.

Includes exhaustive strongly-regular certification, the local collinearity
configuration around a collinear point pair, and a small backtracking
isomorphism test for comparing the local configurations against reference
shapes.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .bits import bits


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph; ``adj[i]`` is the neighbour mask of vertex i."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if len(self.adj) != self.n:
            raise ValueError("adjacency row count != n")
        full = (1 << self.n) - 1
        for i, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"vertex {i}: neighbour out of range")
            if row >> i & 1:
                raise ValueError(f"vertex {i}: self-loop")
        for i, row in enumerate(self.adj):
            for j in bits(row):
                if not self.adj[j] >> i & 1:
                    raise ValueError(f"asymmetric edge ({i}, {j})")

    @classmethod
    def from_edges(cls, n: int, edges) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(self.n) for j in bits(self.adj[i]) if i < j]

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << i) for i in range(n)))


def collinearity_graph(v: int, line_masks) -> Graph:
    """Graph on ``v`` points joining pairs that share a line."""
    adj = [0] * v
    for m in line_masks:
        for p in bits(m):
            adj[p] |= m
    for p in range(v):
        adj[p] &= ~(1 << p)
    return Graph(v, tuple(adj))


def intersection_graph(line_masks) -> Graph:
    """Graph on line indices joining pairs of lines that meet."""
    lines = list(line_masks)
    b = len(lines)
    adj = [0] * b
    for i in range(b):
        for j in range(i + 1, b):
            if lines[i] & lines[j]:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return Graph(b, tuple(adj))


@dataclass(frozen=True)
class SrgParams:
    """Certified strongly-regular parameters.

    ``complete``/``empty`` flag the degenerate graphs where mu (resp. lam)
    has no witnessing pair; the count is reported as 0 there.
    """

    v: int
    k: int
    lam: int
    mu: int
    complete: bool = False
    empty: bool = False

    def feasibility_identity(self) -> bool:
        return self.k * (self.k - self.lam - 1) == (self.v - self.k - 1) * self.mu


class SrgViolation(ValueError):
    """Raised by srg_check; carries the first offending pair."""

    def __init__(self, reason: str, pair: tuple[int, int] | None = None,
                 count: int | None = None):
        msg = reason if pair is None else f"{reason} at pair {pair} (count {count})"
        super().__init__(msg)
        self.reason = reason
        self.pair = pair
        self.count = count


def srg_check(g: Graph) -> SrgParams:
    """Certify strong regularity by exhaustive count over all vertex pairs."""
    if g.n < 2:
        raise SrgViolation("graph too small")
    k = g.adj[0].bit_count()
    for v in range(g.n):
        if g.adj[v].bit_count() != k:
            raise SrgViolation("not regular", (0, v), g.adj[v].bit_count())
    lam = mu = None
    for x in range(g.n):
        ax = g.adj[x]
        for y in range(x + 1, g.n):
            c = (ax & g.adj[y]).bit_count()
            if ax >> y & 1:
                if lam is None:
                    lam = c
                elif c != lam:
                    raise SrgViolation("lambda not constant", (x, y), c)
            else:
                if mu is None:
                    mu = c
                elif c != mu:
                    raise SrgViolation("mu not constant", (x, y), c)
    return SrgParams(
        v=g.n,
        k=k,
        lam=0 if lam is None else lam,
        mu=0 if mu is None else mu,
        complete=mu is None,
        empty=lam is None,
    )


def common_neighbors(g: Graph, x: int, y: int) -> int:
    if x == y:
        raise ValueError("x and y must be distinct")
    return g.adj[x] & g.adj[y]


def induced_subgraph(g: Graph, vertices) -> Graph:
    """Induced subgraph with vertices relabelled 0.. in the given order."""
    verts = list(vertices)
    pos = {v: i for i, v in enumerate(verts)}
    adj = [0] * len(verts)
    for i, v in enumerate(verts):
        for u in bits(g.adj[v]):
            j = pos.get(u)
            if j is not None:
                adj[i] |= 1 << j
    return Graph(len(verts), tuple(adj))


@dataclass(frozen=True)
class LocalConfig:
    """Common neighbourhood of a collinear pair, split into the four points
    of their common line (A), four more points (B), and a ninth point z."""

    a_mask: int
    b_mask: int
    z: int
    induced: Graph = field(compare=False)
    vertices: tuple[int, ...] = field(compare=False)

    @property
    def edge_list(self) -> list[tuple[int, int]]:
        """Induced edges, as pairs of original point indices."""
        return [
            (self.vertices[i], self.vertices[j]) for i, j in self.induced.edges()
        ]


def local_configuration(g, x: int, y: int) -> LocalConfig:
    """Decompose the common neighbourhood of collinear points x, y.

    ``g`` is an incidence structure (81 points, 6-point lines).  A is the
    common line minus {x, y}; z is the unique common neighbour isolated in
    the induced collinearity graph; B is the rest.
    """
    common_lines = [m for m in g.lines if m >> x & 1 and m >> y & 1]
    if len(common_lines) != 1:
        raise ValueError(f"points {x}, {y} are not collinear on a unique line")
    pg = collinearity_graph(g.v, g.lines)
    commons = pg.adj[x] & pg.adj[y]
    a_mask = common_lines[0] & ~(1 << x) & ~(1 << y)
    rest = commons & ~a_mask
    isolated = [p for p in bits(rest) if not pg.adj[p] & (commons & ~(1 << p))]
    if len(isolated) != 1:
        raise ValueError(
            f"expected a unique isolated common neighbour, got {isolated}"
        )
    z = isolated[0]
    b_mask = rest & ~(1 << z)
    verts = tuple(bits(a_mask)) + tuple(bits(b_mask)) + (z,)
    return LocalConfig(
        a_mask=a_mask,
        b_mask=b_mask,
        z=z,
        induced=induced_subgraph(pg, verts),
        vertices=verts,
    )


def isomorphic_small(g1: Graph, g2: Graph) -> bool:
    """Exact isomorphism decision by backtracking; for graphs on <= 12 vertices."""
    if g1.n > 12 or g2.n > 12:
        raise ValueError("isomorphic_small is for graphs on <= 12 vertices")
    if g1.n != g2.n:
        return False
    if sorted(map(int.bit_count, g1.adj)) != sorted(map(int.bit_count, g2.adj)):
        return False
    n = g1.n
    image = [-1] * n
    used = 0

    def extend(i: int) -> bool:
        nonlocal used
        if i == n:
            return True
        row = g1.adj[i]
        for j in range(n):
            if used >> j & 1:
                continue
            if g1.adj[i].bit_count() != g2.adj[j].bit_count():
                continue
            ok = True
            for u in bits(row & ((1 << i) - 1)):  # already-mapped neighbours
                if not g2.adj[j] >> image[u] & 1:
                    ok = False
                    break
            if ok:
                # non-neighbours must map to non-neighbours
                for u in range(i):
                    if not row >> u & 1 and g2.adj[j] >> image[u] & 1:
                        ok = False
                        break
            if ok:
                image[i] = j
                used |= 1 << j
                if extend(i + 1):
                    return True
                used ^= 1 << j
                image[i] = -1
        return False

    return extend(0)
