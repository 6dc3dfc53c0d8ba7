"""Simple graphs on ``{0..n-1}`` with bitmask adjacency, and the graph
predicates used by the verification harness.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Iterable

from .complexes import MAX_VERTICES, SimplicialComplex, bits, independence_complex, to_mask
from .monomial import MonomialIdeal


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph.

    ``adj[v]`` is the neighbour bitmask of ``v``.  ``labels`` maps vertices
    back to the 0-based names of the graph they were cut from; it is
    informational and ignored by equality and hashing.
    """

    n: int
    adj: tuple[int, ...]
    labels: tuple[int, ...] | None = field(default=None, compare=False, hash=False)

    def __post_init__(self):
        if not 0 <= self.n <= MAX_VERTICES:
            raise ValueError(f"graphs are limited to {MAX_VERTICES} vertices, got {self.n}")
        if len(self.adj) != self.n:
            raise ValueError("adjacency list length differs from n")
        for v, nb in enumerate(self.adj):
            if nb >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
            if nb >> self.n:
                raise ValueError(f"vertex {v} has a neighbour outside 0..{self.n - 1}")
            for u in bits(nb):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"adjacency not symmetric at {{{u}, {v}}}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Graph from 0-based edge pairs."""
        adj = [0] * n
        for a, b in edges:
            if a == b:
                raise ValueError(f"self-loop at vertex {a}")
            if not (0 <= a < n and 0 <= b < n):
                raise ValueError(f"edge {{{a}, {b}}} outside 0..{n - 1}")
            adj[a] |= 1 << b
            adj[b] |= 1 << a
        return cls(n, tuple(adj))

    @classmethod
    def from_edges_1based(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        return cls.from_edges(n, ((a - 1, b - 1) for a, b in edges))

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        return cls.from_edges(n, ((i, (i + 1) % n) for i in range(n)))

    @classmethod
    def path(cls, n: int) -> "Graph":
        return cls.from_edges(n, ((i, i + 1) for i in range(n - 1)))

    @classmethod
    def complete(cls, n: int) -> "Graph":
        return cls.from_edges(n, combinations(range(n), 2))

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, (0,) * n)

    # queries ---------------------------------------------------------------

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    @property
    def num_edges(self) -> int:
        return sum(a.bit_count() for a in self.adj) // 2

    def degree(self, x: int) -> int:
        return self.adj[x].bit_count()

    def neighbors(self, x: int) -> frozenset[int]:
        self._check_vertex(x)
        return frozenset(bits(self.adj[x]))

    def closed_neighborhood(self, x: int) -> frozenset[int]:
        self._check_vertex(x)
        return frozenset(bits(self.adj[x] | 1 << x))

    def closed_mask(self, x: int) -> int:
        return self.adj[x] | 1 << x

    def has_edge(self, a: int, b: int) -> bool:
        return bool(self.adj[a] >> b & 1)

    def _check_vertex(self, x: int):
        if not 0 <= x < self.n:
            raise ValueError(f"vertex {x} outside 0..{self.n - 1}")

    # subgraphs -------------------------------------------------------------

    def induced(self, mask: int) -> "Graph":
        """Induced subgraph on ``mask``, relabelled to ``0..k-1`` in order."""
        keep = bits(mask & self.full_mask)
        pos = {v: i for i, v in enumerate(keep)}
        adj = []
        for v in keep:
            adj.append(to_mask(pos[u] for u in bits(self.adj[v] & mask)))
        base = self.labels or tuple(range(self.n))
        return Graph(len(keep), tuple(adj), tuple(base[v] for v in keep))

    def delete_vertex(self, x: int) -> "Graph":
        self._check_vertex(x)
        return self.induced(self.full_mask & ~(1 << x))

    def delete_closed_neighborhood(self, x: int) -> "Graph":
        self._check_vertex(x)
        return self.induced(self.full_mask & ~self.closed_mask(x))

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        seen = 1
        frontier = 1
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= self.adj[v]
            frontier = nxt & ~seen
            seen |= nxt
        return seen == self.full_mask

    # algebra ------------------------------------------------------------

    def edge_ideal(self) -> MonomialIdeal:
        return MonomialIdeal.from_supports(self.n, self.edges())

    def independence_complex(self) -> SimplicialComplex:
        return independence_complex(self)

    # I/O -----------------------------------------------------------------

    def to_graph6(self) -> str:
        return to_graph6(self)

    def to_json(self) -> dict:
        return {"n": self.n, "edges": [[a + 1, b + 1] for a, b in self.edges()]}

    def edge_list_text(self) -> str:
        return "\n".join(f"{a + 1} {b + 1}" for a, b in self.edges())

    def __repr__(self) -> str:
        es = ",".join(f"{a + 1}{b + 1}" if self.n < 10 else f"{a + 1}-{b + 1}" for a, b in self.edges())
        return f"Graph(n={self.n}, edges=[{es}])"


# ---------------------------------------------------------------------------
# parsing


def parse_edge_list(text: str, n: int | None = None) -> Graph:
    """Whitespace-separated 1-based pairs, one edge per line.

    A line ``n=7`` (or an explicit ``n``) fixes the vertex count so isolated
    vertices survive; otherwise it is the largest label seen.
    """
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("n="):
            n = int(line[2:])
            continue
        parts = line.replace(",", " ").split()
        if len(parts) != 2:
            raise ValueError(f"line {lineno}, column 1: expected two vertex labels, got {line!r}")
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            col = raw.find(parts[1] if parts[0].lstrip("-").isdigit() else parts[0]) + 1
            raise ValueError(f"line {lineno}, column {col}: vertex labels must be integers") from None
        if a < 1 or b < 1:
            raise ValueError(f"line {lineno}, column 1: labels are 1-based")
        edges.append((a, b))
    top = max((max(e) for e in edges), default=0)
    if n is None:
        n = top
    if top > n:
        raise ValueError(f"label {top} exceeds vertex count {n}")
    return Graph.from_edges_1based(n, set(tuple(sorted(e)) for e in edges))


def graph_from_json(data: dict) -> Graph:
    return Graph.from_edges_1based(int(data["n"]), [tuple(e) for e in data["edges"]])


def to_graph6(g: Graph) -> str:
    n = g.n
    if n <= 62:
        out = [n + 63]
    elif n <= 258047:
        out = [126, (n >> 12 & 63) + 63, (n >> 6 & 63) + 63, (n & 63) + 63]
    else:
        raise ValueError("graph too large for graph6")
    bitstream = []
    for j in range(1, n):
        for i in range(j):
            bitstream.append(g.adj[i] >> j & 1)
    while len(bitstream) % 6:
        bitstream.append(0)
    for k in range(0, len(bitstream), 6):
        v = 0
        for b in bitstream[k:k + 6]:
            v = v << 1 | b
        out.append(v + 63)
    return bytes(out).decode("ascii")


def from_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    data = [ord(c) - 63 for c in s]
    if not data or any(not 0 <= d < 64 for d in data):
        raise ValueError(f"invalid graph6 string {text!r}")
    if data[0] == 63:
        if len(data) < 4 or data[1] == 63:
            raise ValueError("graph6 strings for n > 258047 are not supported")
        n = data[1] << 12 | data[2] << 6 | data[3]
        body = data[4:]
    else:
        n = data[0]
        body = data[1:]
    need = (n * (n - 1) // 2 + 5) // 6
    if len(body) != need:
        raise ValueError(f"graph6 body has {len(body)} bytes, expected {need} for n={n}")
    stream = [(d >> (5 - k)) & 1 for d in body for k in range(6)]
    edges = []
    pos = 0
    for j in range(1, n):
        for i in range(j):
            if stream[pos]:
                edges.append((i, j))
            pos += 1
    return Graph.from_edges(n, edges)


def read_graph6_file(path) -> list[Graph]:
    out = []
    with open(path, encoding="ascii") as fh:
        for line in fh:
            line = line.strip()
            if line:
                out.append(from_graph6(line))
    return out


def load_graph(text: str, fmt: str = "auto") -> Graph:
    """Parse a graph from ``edges``, ``graph6`` or ``json`` text."""
    s = text.strip()
    if fmt == "auto":
        if s.startswith("{"):
            fmt = "json"
        elif s.startswith(">>graph6<<") or (s and "\n" not in s and " " not in s):
            fmt = "graph6"
        else:
            fmt = "edges"
    if fmt == "json":
        return graph_from_json(json.loads(s))
    if fmt == "graph6":
        return from_graph6(s)
    if fmt == "edges":
        return parse_edge_list(text)
    raise ValueError(f"unknown graph format {fmt!r}")


# ---------------------------------------------------------------------------
# independent sets


def maximal_independent_sets(g: Graph) -> list[int]:
    """Maximal independent sets as bitmasks (Bron-Kerbosch on the complement)."""
    full = g.full_mask
    non = [full & ~g.adj[v] & ~(1 << v) for v in range(g.n)]
    out: list[int] = []

    def expand(r: int, p: int, x: int):
        if not p and not x:
            out.append(r)
            return
        pivot_pool = p | x
        pivot = max(bits(pivot_pool), key=lambda u: (non[u] & p).bit_count())
        for v in bits(p & ~non[pivot]):
            expand(r | 1 << v, p & non[v], x & non[v])
            p &= ~(1 << v)
            x |= 1 << v

    expand(0, full, 0)
    return sorted(out)


def independence_number(g: Graph) -> int:
    return max(m.bit_count() for m in maximal_independent_sets(g))


# ---------------------------------------------------------------------------
# shedding / codominated


def is_shedding_vertex(g: Graph, x: int) -> bool:
    """No face of the link of ``x`` in the independence complex is a facet of
    the deletion of ``x``."""
    g._check_vertex(x)
    delta = independence_complex(g)
    dele = delta.deletion(x)
    lk = delta.link(1 << x)
    return not any(lk.contains(f) for f in dele.facets)


def is_codominated(g: Graph, x: int) -> bool:
    g._check_vertex(x)
    nx_ = g.closed_mask(x)
    return any(g.closed_mask(y) & ~nx_ == 0 for y in range(g.n) if y != x)


def shedding_vertices(g: Graph) -> list[int]:
    return [x for x in range(g.n) if is_shedding_vertex(g, x)]


def codominated_vertices(g: Graph) -> list[int]:
    return [x for x in range(g.n) if is_codominated(g, x)]


# ---------------------------------------------------------------------------
# cycles and families


def five_cycles(g: Graph) -> list[tuple[int, ...]]:
    """All 5-cycles (chords allowed), each once: smallest vertex first and
    its smaller neighbour on the cycle second."""
    found = []
    for s in range(g.n):
        higher = g.full_mask & ~((1 << (s + 1)) - 1)

        def walk(path: list[int], used: int):
            last = path[-1]
            if len(path) == 5:
                if g.adj[last] >> s & 1 and path[1] < path[4]:
                    found.append(tuple(path))
                return
            for v in bits(g.adj[last] & higher & ~used):
                path.append(v)
                walk(path, used | 1 << v)
                path.pop()

        walk([s], 1 << s)
    return sorted(found)


def is_basic_cycle(g: Graph, cycle: tuple[int, ...]) -> bool:
    k = len(cycle)
    return not any(g.degree(cycle[i]) >= 3 and g.degree(cycle[(i + 1) % k]) >= 3 for i in range(k))


def basic_five_cycles(g: Graph) -> list[tuple[int, ...]]:
    return [c for c in five_cycles(g) if is_basic_cycle(g, c)]


def is_c5_free(g: Graph, induced: bool = False) -> bool:
    """No 5-cycle in ``g``, chorded or not.

    With ``induced=True`` only chordless 5-cycles count.  The shedding /
    codominated equivalence needs the stronger default: the graph with
    edges 12,15,24,34,35,45 has no induced 5-cycle, yet x3 is shedding and
    not codominated.
    """
    if not induced:
        return not five_cycles(g)
    for combo in combinations(range(g.n), 5):
        m = to_mask(combo)
        if all((g.adj[v] & m).bit_count() == 2 for v in combo):
            return False
    return True


def is_chordal(g: Graph) -> bool:
    """Maximum cardinality search, then a perfect elimination check."""
    n = g.n
    weight = [0] * n
    numbered = 0
    order = []
    for _ in range(n):
        v = max((u for u in range(n) if not numbered >> u & 1), key=lambda u: (weight[u], -u))
        order.append(v)
        numbered |= 1 << v
        for u in bits(g.adj[v] & ~numbered):
            weight[u] += 1
    # order reversed is a perfect elimination ordering iff chordal
    pos = {v: i for i, v in enumerate(order)}
    for v in order:
        earlier = [u for u in bits(g.adj[v]) if pos[u] < pos[v]]
        if not earlier:
            continue
        parent = max(earlier, key=pos.__getitem__)
        rest = to_mask(earlier) & ~(1 << parent)
        if rest & ~g.adj[parent]:
            return False
    return True


def is_bipartite(g: Graph) -> bool:
    color = [-1] * g.n
    for s in range(g.n):
        if color[s] >= 0:
            continue
        color[s] = 0
        stack = [s]
        while stack:
            v = stack.pop()
            for u in bits(g.adj[v]):
                if color[u] < 0:
                    color[u] = 1 - color[v]
                    stack.append(u)
                elif color[u] == color[v]:
                    return False
    return True


def is_vertex_decomposable(g: Graph) -> bool:
    """Vertex decomposability of the independence complex."""
    return _vd(g.n, g.adj, g.full_mask)


@lru_cache(maxsize=100_000)
def _vd(n: int, adj: tuple[int, ...], mask: int) -> bool:
    # The complex on ``mask`` is a simplex (or {}) iff no edge survives.
    if not any(adj[v] & mask for v in bits(mask)):
        return True
    sub = Graph(n, adj).induced(mask)
    keep = bits(mask)
    for i in range(sub.n):
        if not is_shedding_vertex(sub, i):
            continue
        x = keep[i]
        if _vd(n, adj, mask & ~(1 << x)) and _vd(n, adj, mask & ~(adj[x] | 1 << x)):
            return True
    return False


def is_well_covered(g: Graph) -> bool:
    return len({m.bit_count() for m in maximal_independent_sets(g)}) <= 1


def is_very_well_covered(g: Graph) -> bool:
    if g.n == 0 or any(a == 0 for a in g.adj):
        return False
    return is_well_covered(g) and 2 * independence_number(g) == g.n


# ---------------------------------------------------------------------------
# matchings


def are_3_disjoint(g: Graph, e: tuple[int, int], f: tuple[int, int]) -> bool:
    """Vertex-disjoint edges with no edge of ``g`` running between them."""
    a, b = e
    c, d = f
    if len({a, b, c, d}) < 4:
        return False
    return not ((g.adj[a] | g.adj[b]) & (1 << c | 1 << d))


def induced_matching_number(g: Graph) -> int:
    """Largest pairwise 3-disjoint edge set, by branch and bound."""
    edges = g.edges()
    if not edges:
        return 0
    blocks = []
    for a, b in edges:
        reach = g.adj[a] | g.adj[b] | 1 << a | 1 << b
        blocks.append(reach)
    best = 0

    def search(i: int, count: int, banned: int, free_vertices: int):
        nonlocal best
        if count > best:
            best = count
        if i == len(edges):
            return
        # at most one chosen edge per two free vertices
        if count + free_vertices.bit_count() // 2 <= best:
            return
        a, b = edges[i]
        if not (banned >> a & 1 or banned >> b & 1):
            search(i + 1, count + 1, banned | blocks[i], free_vertices & ~blocks[i])
        search(i + 1, count, banned, free_vertices)

    search(0, 0, 0, g.full_mask)
    return best


def matching_number(g: Graph) -> int:
    import networkx as nx

    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return len(nx.max_weight_matching(h, maxcardinality=True))


def is_cameron_walker(g: Graph) -> bool:
    if g.num_edges == 0:
        raise ValueError("Cameron-Walker test needs at least one edge")
    return matching_number(g) == induced_matching_number(g)
