"""Isomorphism classes of small graphs.

A canonical form is the minimum upper-triangle encoding over all vertex
orders that respect a colour-refinement partition.  The refinement is
isomorphism-invariant, so restricting the minimum to those orders still
gives a complete invariant while cutting the permutations to try.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations, product

from .complexes import bits
from .graphs import Graph

MAX_ENUMERATION_N = 7


def _refine(g: Graph) -> list[list[int]]:
    colour = [g.degree(v) for v in range(g.n)]
    while True:
        sig = [(colour[v], tuple(sorted(colour[u] for u in bits(g.adj[v])))) for v in range(g.n)]
        ranks = {s: i for i, s in enumerate(sorted(set(sig)))}
        new = [ranks[s] for s in sig]
        if len(set(new)) == len(set(colour)):
            colour = new
            break
        colour = new
    cells: dict[int, list[int]] = {}
    for v in range(g.n):
        cells.setdefault(colour[v], []).append(v)
    return [cells[c] for c in sorted(cells)]


def _encode(g: Graph, order: tuple[int, ...]) -> int:
    code = 0
    n = len(order)
    for j in range(1, n):
        aj = g.adj[order[j]]
        for i in range(j):
            code = code << 1 | (aj >> order[i] & 1)
    return code


def canonical_form(g: Graph) -> tuple[int, int, tuple[int, ...]]:
    """``(n, code, order)``; ``order[k]`` is the vertex placed at position ``k``."""
    cells = _refine(g)
    best = None
    best_order: tuple[int, ...] = ()
    for parts in product(*(permutations(c) for c in cells)):
        order = tuple(v for part in parts for v in part)
        code = _encode(g, order)
        if best is None or code < best:
            best, best_order = code, order
    return g.n, best or 0, best_order


def canonical_key(g: Graph) -> tuple[int, int]:
    n, code, _ = canonical_form(g)
    return n, code


def canonical_graph(g: Graph) -> Graph:
    n, _, order = canonical_form(g)
    pos = {v: i for i, v in enumerate(order)}
    return Graph.from_edges(n, ((pos[a], pos[b]) for a, b in g.edges()))


@lru_cache(maxsize=None)
def _all_classes(n: int) -> tuple[Graph, ...]:
    if n == 0:
        return (Graph.empty(0),)
    found: dict[tuple[int, int], Graph] = {}
    for h in _all_classes(n - 1):
        for nb in range(1 << (n - 1)):
            adj = list(h.adj) + [nb]
            for v in bits(nb):
                adj[v] |= 1 << (n - 1)
            g = Graph(n, tuple(adj))
            key = canonical_key(g)
            if key not in found:
                found[key] = canonical_graph(g)
    return tuple(found[k] for k in sorted(found))


def enumerate_graphs(n: int, connected: bool = False):
    """One graph per isomorphism class on ``n`` vertices, in a fixed order."""
    if n > MAX_ENUMERATION_N:
        raise ValueError(
            f"internal enumeration stops at n={MAX_ENUMERATION_N}; "
            "supply a graph6 file (e.g. from nauty's geng) for larger n"
        )
    if n < 0:
        raise ValueError("n must be non-negative")
    for g in _all_classes(n):
        if not connected or g.is_connected():
            yield g


def enumerate_up_to(max_n: int, connected: bool = False, min_n: int = 1):
    for n in range(min_n, max_n + 1):
        yield from enumerate_graphs(n, connected)
