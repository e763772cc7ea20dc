"""Maximal-clique enumeration over bitset adjacency, and the classification
of 6-cliques of a line graph into stars and non-stars."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .bits import bits
from .graphs import Graph


@dataclass(frozen=True)
class CliqueReport:
    size_histogram: dict[int, int]
    cliques_of_size_6: tuple[int, ...]  # vertex masks, sorted
    all_cliques: tuple[int, ...]  # every maximal clique, sorted by mask


def max_cliques(g: Graph) -> CliqueReport:
    """All maximal cliques via Bron-Kerbosch with pivoting.

    The pivot maximizes |P ∩ N(u)| over u in P ∪ X, ties broken by smallest
    vertex index; output is sorted by mask, so the result is deterministic.
    """
    adj = g.adj
    found: list[int] = []

    def expand(r: int, p: int, x: int) -> None:
        if not p and not x:
            found.append(r)
            return
        pivot, best = -1, -1
        for u in bits(p | x):
            c = (p & adj[u]).bit_count()
            if c > best:
                pivot, best = u, c
        for v in bits(p & ~adj[pivot]):
            bv = 1 << v
            expand(r | bv, p & adj[v], x & adj[v])
            p &= ~bv
            x |= bv

    expand(0, (1 << g.n) - 1, 0)
    found.sort()
    histogram = dict(Counter(m.bit_count() for m in found))
    six = tuple(m for m in found if m.bit_count() == 6)
    return CliqueReport(
        size_histogram=histogram, cliques_of_size_6=six, all_cliques=tuple(found)
    )


def classify_line_cliques(g, cliques) -> tuple[list[int], list[int]]:
    """Split 6-cliques of the line graph of ``g`` into stars and non-stars.

    ``cliques`` are masks over line indices; a clique is a star iff its six
    lines share a common point.
    """
    stars, non_stars = [], []
    for c in cliques:
        common = (1 << g.v) - 1
        for i in bits(c):
            common &= g.lines[i]
        (stars if common else non_stars).append(c)
    return stars, non_stars


def one_secant_lines(g, point_set: int) -> int:
    """Mask of indices of lines meeting the given point set in exactly one point."""
    out = 0
    for i, m in enumerate(g.lines):
        if (m & point_set).bit_count() == 1:
            out |= 1 << i
    return out


def match_negative_lines(g, non_stars, neg_lines) -> dict[int, int]:
    """Match each non-star 6-clique of the line graph of ``g`` to the unique
    negative line whose six 1-secants it consists of.

    Returns {clique mask: negative line mask}; raises if any clique matches
    zero or several negative lines, or if the map is not a bijection.
    """
    secants = {one_secant_lines(g, m): m for m in neg_lines}
    if len(secants) != len(list(neg_lines)):
        raise ValueError("two negative lines share their 1-secant set")
    matching: dict[int, int] = {}
    for c in non_stars:
        if c not in secants:
            raise ValueError(f"non-star clique {c:x} matches no negative line")
        matching[c] = secants[c]
    if len(set(matching.values())) != len(matching) or len(matching) != len(secants):
        raise ValueError("clique/negative-line matching is not a bijection")
    return matching
