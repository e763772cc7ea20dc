"""Canonical labeling of colored graphs, automorphism groups, isomorphism
and self-duality testing, and permutation-group machinery.

The canonical-labeling engine is an individualization-refinement search:
refine an ordered partition to equitability, branch on the vertices of the
first smallest non-singleton cell, and take the smallest leaf certificate
as the canonical form.  Whenever two explored leaves carry equal
certificates, the permutation relating them is an automorphism of the
input graph.  Discovered automorphisms prune sibling branches (orbit
pruning with the pointwise stabilizer of the individualization prefix,
available whenever the prefix lies along the first root-to-leaf path) and
at the end generate the full automorphism group, whose order a
deterministic Schreier-Sims stabilizer chain certifies.

Incidence structures are canonized through their 2-colored bipartite
incidence graph (points color 0, lines color 1), which yields isomorphism
testing, self-duality and automorphism groups with one engine.

Permutations are image tuples at the API level.  Inside the stabilizer
chain they are 256-byte strings padded with the identity, so composition
is a single ``bytes.translate`` call.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from . import gf3space as gf3
from .bits import bits, mask_of
from .graphs import Graph
from .incidence import IncidenceStructure, dual

Perm = tuple[int, ...]

_TAIL = bytes(range(256))


# ---------------------------------------------------------------------------
# permutations


def compose(p: Perm, q: Perm) -> Perm:
    """Left-to-right composition: ``compose(p, q)[i] == q[p[i]]``."""
    return tuple(q[x] for x in p)


def inverse(p: Perm) -> Perm:
    inv = [0] * len(p)
    for i, x in enumerate(p):
        inv[x] = i
    return tuple(inv)


def permute_mask(mask: int, p: Perm) -> int:
    out = 0
    for i in bits(mask):
        out |= 1 << p[i]
    return out


def _pad(p) -> bytes:
    b = bytes(p)
    return b + _TAIL[len(b):]


def _inv_table(p: bytes) -> bytes:
    inv = bytearray(256)
    for i, y in enumerate(p):
        inv[y] = i
    return bytes(inv)


class _Chain:
    """One level of a deterministic Schreier-Sims stabilizer chain.

    Permutations are identity-padded 256-byte strings.  Transversal entries
    are only ever appended, never recomputed, so Schreier generators already
    processed stay processed when the orbit grows.
    """

    def __init__(self, base: tuple[int, ...] = ()):
        self.basepoint: int | None = base[0] if base else None
        self.gens: list[bytes] = []
        self.transversal: dict[int, bytes] = {}
        self.stab: _Chain | None = None
        self._done: set[tuple[int, bytes]] = set()
        if self.basepoint is not None:
            self.transversal[self.basepoint] = _TAIL
            self.stab = _Chain(base[1:])

    def all_gens(self) -> list[bytes]:
        out = list(self.gens)
        if self.stab is not None:
            out += self.stab.all_gens()
        return out

    def sift(self, g: bytes) -> bytes:
        level = self
        while level is not None and level.basepoint is not None:
            u = level.transversal.get(g[level.basepoint])
            if u is None:
                return g
            g = g.translate(_inv_table(u))  # right-multiply by u^{-1}
            level = level.stab
        return g

    def insert(self, g: bytes) -> None:
        """Insert a non-identity element that is not yet a member."""
        if self.basepoint is None:
            self.basepoint = next(i for i in range(256) if g[i] != i)
            self.transversal = {self.basepoint: _TAIL}
            self.stab = _Chain()
        if g[self.basepoint] == self.basepoint:
            self.stab.insert(g)
        else:
            self.gens.append(g)
        self._grow_orbit()
        self._process_schreier()

    def _grow_orbit(self) -> None:
        gens = self.all_gens()
        queue = deque(sorted(self.transversal))
        while queue:
            p = queue.popleft()
            u = self.transversal[p]
            for s in gens:
                x = s[p]
                if x not in self.transversal:
                    self.transversal[x] = u.translate(s)
                    queue.append(x)

    def _process_schreier(self) -> None:
        gens = self.all_gens()
        for p in sorted(self.transversal):
            u_p = self.transversal[p]
            for s in gens:
                key = (p, s)
                if key in self._done:
                    continue
                self._done.add(key)
                schreier = u_p.translate(s).translate(
                    _inv_table(self.transversal[s[p]])
                )
                if schreier == _TAIL:
                    continue
                residue = self.stab.sift(schreier)
                if residue != _TAIL:
                    self.stab.insert(residue)

    def order(self) -> int:
        if self.basepoint is None:
            return 1
        return len(self.transversal) * self.stab.order()

    def level(self, k: int) -> "_Chain":
        lvl = self
        for _ in range(k):
            if lvl.stab is None:
                return _Chain()
            lvl = lvl.stab
        return lvl


class PermutationGroup:
    """Permutation group given by generators, with a stabilizer chain for
    order, membership and orbit queries.

    ``base`` fixes a prefix of the chain's base points (useful both for
    prefix-stabilizer queries and for reproducing the order with a second,
    independent base).
    """

    def __init__(self, degree: int, generators=(), base: tuple[int, ...] = ()):
        if degree > 256:
            raise ValueError("degree > 256 not supported")
        self.degree = degree
        self.base = tuple(base)
        self.generators: list[Perm] = []
        self._chain = _Chain(self.base)
        for g in generators:
            self.add(g)

    def add(self, g) -> bool:
        """Add a generator; returns False if it was already a member."""
        g = tuple(g)
        if len(g) != self.degree or len(set(g)) != self.degree:
            raise ValueError("not a permutation of the right degree")
        padded = _pad(g)
        if self._chain.sift(padded) == _TAIL:
            return False
        self.generators.append(g)
        self._chain.insert(padded)
        return True

    def order(self) -> int:
        return self._chain.order()

    def contains(self, g) -> bool:
        return self._chain.sift(_pad(tuple(g))) == _TAIL

    def orbit_of(self, point: int) -> list[int]:
        return sorted(bits(orbit_closure(1 << point, self.generators)))

    def orbits(self) -> list[list[int]]:
        """Orbit partition of 0..degree-1, ordered by smallest member."""
        seen = 0
        out = []
        for p in range(self.degree):
            if seen >> p & 1:
                continue
            orb = orbit_closure(1 << p, self.generators)
            seen |= orb
            out.append(sorted(bits(orb)))
        return out

    def is_transitive(self) -> bool:
        if self.degree == 0:
            return True
        return len(self.orbit_of(0)) == self.degree

    def stabilizer_order(self, point: int) -> int:
        return self.order() // len(self.orbit_of(point))

    def prefix_stabilizer_gens(self, k: int) -> list[Perm]:
        """Strong generators of the pointwise stabilizer of base[:k]."""
        if k > len(self.base):
            raise ValueError("k exceeds the fixed base prefix")
        n = self.degree
        return [tuple(g[:n]) for g in self._chain.level(k).all_gens()]


def orbit_closure(mask: int, gens) -> int:
    """Closure of a point set under a list of permutations (image tuples)."""
    queue = list(bits(mask))
    while queue:
        p = queue.pop()
        for g in gens:
            x = g[p]
            if not mask >> x & 1:
                mask |= 1 << x
                queue.append(x)
    return mask


# ---------------------------------------------------------------------------
# colored graphs and the individualization-refinement search


@dataclass(frozen=True)
class ColoredGraph:
    n: int
    adj: tuple[int, ...]
    colors: tuple[int, ...]

    def __post_init__(self):
        if len(self.adj) != self.n or len(self.colors) != self.n:
            raise ValueError("adjacency/colors length mismatch")

    @classmethod
    def from_graph(cls, g: Graph, colors=None) -> "ColoredGraph":
        return cls(g.n, g.adj, tuple(colors) if colors else (0,) * g.n)


def colored_incidence_graph(g: IncidenceStructure) -> ColoredGraph:
    """Bipartite point/line graph of an incidence structure; points get
    vertex ids 0..v-1 and color 0, lines ids v..v+b-1 and color 1."""
    n = g.v + g.b
    adj = [0] * n
    for j, m in enumerate(g.lines):
        adj[g.v + j] = m
        for p in bits(m):
            adj[p] |= 1 << (g.v + j)
    return ColoredGraph(n, tuple(adj), (0,) * g.v + (1,) * g.b)


def _initial_cells(cg: ColoredGraph) -> list[tuple[int, ...]]:
    by_color: dict[int, list[int]] = {}
    for v, c in enumerate(cg.colors):
        by_color.setdefault(c, []).append(v)
    return [tuple(by_color[c]) for c in sorted(by_color)]


def refine(adj, cells, active) -> list[tuple[int, ...]]:
    """Equitable refinement of an ordered partition.

    ``active`` is a list of splitter masks to propagate from.  Each splitter
    W splits every touched cell by the count |N(v) ∩ W|; fragments replace
    their cell in place, ordered by ascending count.  Newly created
    fragments are queued (all of them if the split cell was itself queued,
    else all but one largest).  Deterministic.
    """
    cells = list(cells)
    queue = deque(active)
    queued = set(active)
    while queue:
        w = queue.popleft()
        if w not in queued:
            continue
        queued.discard(w)
        counts: dict[int, int] = {}
        for x in bits(w):
            for u in bits(adj[x]):
                counts[u] = counts.get(u, 0) + 1
        cell_index: dict[int, int] = {}
        for i, cell in enumerate(cells):
            for v in cell:
                cell_index[v] = i
        touched = sorted({cell_index[u] for u in counts}, reverse=True)
        for i in touched:
            cell = cells[i]
            if len(cell) == 1:
                continue
            groups: dict[int, list[int]] = {}
            for v in cell:
                groups.setdefault(counts.get(v, 0), []).append(v)
            if len(groups) == 1:
                continue
            frags = [tuple(groups[k]) for k in sorted(groups)]
            cells[i : i + 1] = frags
            cell_mask = mask_of(cell)
            frag_masks = [mask_of(f) for f in frags]
            if cell_mask in queued:
                queued.discard(cell_mask)
                new = frag_masks
            else:
                skip = max(range(len(frags)), key=lambda j: len(frags[j]))
                new = [fm for j, fm in enumerate(frag_masks) if j != skip]
            for fm in new:
                queue.append(fm)
                queued.add(fm)
    return cells


def _target_cell(cells) -> int:
    """Index of the first smallest non-singleton cell, or -1 if discrete."""
    best = -1
    best_len = None
    for i, cell in enumerate(cells):
        if len(cell) > 1 and (best_len is None or len(cell) < best_len):
            best, best_len = i, len(cell)
    return best


@dataclass(frozen=True)
class CanonicalForm:
    """Canonical labeling (vertex -> canonical position), a certificate that
    two colored graphs share iff they are isomorphic, and generators of the
    automorphism group together with its stabilizer-chain order."""

    labeling: Perm
    certificate: tuple
    generators: tuple[Perm, ...] = field(compare=False)
    group: PermutationGroup = field(compare=False)


class _Search:
    def __init__(self, cg: ColoredGraph):
        self.cg = cg
        self.adj = cg.adj
        self.n = cg.n
        self.colors = cg.colors
        self.first_cert = None
        self.first_lab: Perm | None = None
        self.base: list[int] = []
        self.group: PermutationGroup | None = None
        self.best_cert = None
        self.best_lab: Perm | None = None
        self.backjump: int | None = None

    def run(self) -> CanonicalForm:
        initial = _initial_cells(self.cg)
        cells = refine(self.adj, initial, [mask_of(c) for c in initial])
        self._node(cells, [])
        return CanonicalForm(
            labeling=self.best_lab,
            certificate=self.best_cert,
            generators=tuple(self.group.generators),
            group=self.group,
        )

    def _node(self, cells, prefix) -> None:
        t = _target_cell(cells)
        if t < 0:
            self._leaf(cells, prefix)
            return
        target = cells[t]
        k = len(prefix)
        processed = 0
        for v in target:
            if processed and self.group is not None and self.base[:k] == prefix:
                gens = self.group.prefix_stabilizer_gens(k)
                if orbit_closure(processed, gens) >> v & 1:
                    continue
            child = list(cells)
            child[t : t + 1] = [(v,), tuple(u for u in target if u != v)]
            child = refine(self.adj, child, [1 << v])
            self._node(child, prefix + [v])
            processed |= 1 << v
            if self.backjump is not None:
                if self.backjump < k:
                    return  # keep unwinding
                self.backjump = None

    def _leaf(self, cells, prefix) -> None:
        lab_list = [0] * self.n
        for pos, cell in enumerate(cells):
            lab_list[cell[0]] = pos
        lab = tuple(lab_list)
        cert = self._certificate(lab)
        if self.first_cert is None:
            self.first_cert, self.first_lab = cert, lab
            self.best_cert, self.best_lab = cert, lab
            self.base = list(prefix)
            self.group = PermutationGroup(self.n, base=tuple(prefix))
            return
        if cert == self.first_cert:
            self._record_automorphism(self.first_lab, lab)
            # The new automorphism fixes the common prefix of this leaf's
            # path and the first path pointwise and maps the (already fully
            # explored) first-path subtree below the fork onto this leaf's
            # subtree, so nothing above the fork level is left to learn
            # here: unwind to the fork and continue with its next sibling.
            fork = 0
            for a, b in zip(self.base, prefix):
                if a != b:
                    break
                fork += 1
            self.backjump = fork
            return
        if cert < self.best_cert:
            self.best_cert, self.best_lab = cert, lab
        elif cert == self.best_cert and cert != self.first_cert:
            self._record_automorphism(self.best_lab, lab)

    def _certificate(self, lab: Perm) -> tuple:
        rows = [0] * self.n
        cols = [0] * self.n
        for v in range(self.n):
            pos = lab[v]
            cols[pos] = self.colors[v]
            row = 0
            for u in bits(self.adj[v]):
                row |= 1 << lab[u]
            rows[pos] = row
        return (tuple(cols), tuple(rows))

    def _record_automorphism(self, lab_a: Perm, lab_b: Perm) -> None:
        gamma = compose(lab_a, inverse(lab_b))
        for v in range(self.n):  # a wrong map here would poison the pruning
            if self.colors[gamma[v]] != self.colors[v]:
                raise AssertionError("discovered map does not preserve colors")
            if permute_mask(self.adj[v], gamma) != self.adj[gamma[v]]:
                raise AssertionError("discovered map is not an automorphism")
        self.group.add(gamma)


def canonical_form(cg: ColoredGraph) -> CanonicalForm:
    return _Search(cg).run()


# ---------------------------------------------------------------------------
# high-level operations on graphs and incidence structures


def aut_graph(g: Graph) -> PermutationGroup:
    """Automorphism group of an uncolored graph."""
    return canonical_form(ColoredGraph.from_graph(g)).group


def induced_line_permutation(g: IncidenceStructure, point_perm: Perm) -> Perm:
    """Action of a point permutation on the line list of an incidence
    structure; raises if some line image is not a line."""
    index = {m: i for i, m in enumerate(g.lines)}
    images = []
    for m in g.lines:
        j = index.get(permute_mask(m, point_perm))
        if j is None:
            raise ValueError("permutation does not preserve the line set")
        images.append(j)
    return tuple(images)


def aut_incidence(g: IncidenceStructure, on: str = "points") -> PermutationGroup:
    """Automorphism group of an incidence structure.

    Computed on the 2-colored incidence graph and restricted to the point
    class; ``on="lines"`` returns the induced action on line indices
    instead.
    """
    cf = canonical_form(colored_incidence_graph(g))
    point_gens = [p[: g.v] for p in cf.generators]
    if on == "points":
        return PermutationGroup(g.v, point_gens)
    if on == "lines":
        return PermutationGroup(
            g.b, [induced_line_permutation(g, p) for p in point_gens]
        )
    raise ValueError(f"unknown action {on!r}")


def is_isomorphic(g1: IncidenceStructure, g2: IncidenceStructure) -> bool:
    """Isomorphism test for incidence structures via certificates of their
    colored incidence graphs."""
    if g1.v != g2.v or g1.b != g2.b:
        return False
    c1 = canonical_form(colored_incidence_graph(g1)).certificate
    c2 = canonical_form(colored_incidence_graph(g2)).certificate
    return c1 == c2


def is_self_dual(g: IncidenceStructure) -> tuple[bool, Perm | None]:
    """Whether g is isomorphic to its dual; on success also returns a
    witness isomorphism from the incidence graph of g to that of dual(g)."""
    cg = colored_incidence_graph(g)
    cd = colored_incidence_graph(dual(g))
    f1 = canonical_form(cg)
    f2 = canonical_form(cd)
    if f1.certificate != f2.certificate:
        return False, None
    witness = compose(f1.labeling, inverse(f2.labeling))
    for v in range(cg.n):  # hand back only a checked witness
        if permute_mask(cg.adj[v], witness) != cd.adj[witness[v]]:
            raise AssertionError("self-duality witness failed verification")
    return True, witness


def relabel_incidence(g: IncidenceStructure, perm: Perm) -> IncidenceStructure:
    """The incidence structure with points renamed by ``perm``."""
    return IncidenceStructure(g.v, (permute_mask(m, perm) for m in g.lines))


def translation_check(g: IncidenceStructure, subspace) -> bool:
    """True iff x -> x + a preserves the line set for every a in the
    subspace (g an incidence structure on the 81 points of GF(3)^4)."""
    line_set = set(g.lines)
    for a in bits(subspace.members):
        for m in g.lines:
            if gf3.translate_mask(m, a) not in line_set:
                return False
    return True
