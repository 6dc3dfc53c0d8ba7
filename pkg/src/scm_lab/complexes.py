"""Simplicial complexes stored by facets, with faces as vertex bitmasks.

Vertex ``k`` of the ambient set ``{0, ..., n-1}`` is bit ``1 << k``.  Two
degenerate complexes are kept apart: VOID (no faces at all, no facets) and
EMPTY (the single face ``{}``, i.e. facets ``(0,)``).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable

MAX_VERTICES = 64


def bits(mask: int) -> tuple[int, ...]:
    """Sorted vertex indices of a bitmask."""
    out = []
    k = 0
    while mask:
        if mask & 1:
            out.append(k)
        mask >>= 1
        k += 1
    return tuple(out)


def to_mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def face_key(mask: int) -> tuple[int, ...]:
    """Lexicographic sort key on the vertex set."""
    return bits(mask)


def maximal_sets(masks: Iterable[int]) -> tuple[int, ...]:
    """Inclusion-maximal members of ``masks``, in canonical order."""
    kept: list[int] = []
    for m in sorted(set(masks), key=lambda x: -x.bit_count()):
        if not any(m & ~k == 0 for k in kept):
            kept.append(m)
    return tuple(sorted(kept, key=face_key))


def popcount(mask: int) -> int:
    return mask.bit_count()


@dataclass(frozen=True)
class SimplicialComplex:
    """A complex on the ambient vertex set ``{0..n-1}``.

    Vertices that lie in no face are allowed; ``n`` records the ambient ring
    size so that Stanley-Reisner depth computations keep their meaning.
    """

    n: int
    facets: tuple[int, ...]

    def __post_init__(self):
        if not 0 <= self.n <= MAX_VERTICES:
            raise ValueError(f"ambient vertex count must be in [0, {MAX_VERTICES}], got {self.n}")
        full = (1 << self.n) - 1
        for f in self.facets:
            if f & ~full:
                raise ValueError(f"face {bits(f)} has a vertex outside 0..{self.n - 1}")

    # construction ---------------------------------------------------------

    @classmethod
    def from_facets(cls, n: int, facets: Iterable[Iterable[int]]) -> "SimplicialComplex":
        masks = []
        for f in facets:
            f = list(f)
            for v in f:
                if not 0 <= v < n:
                    raise ValueError(f"vertex {v} outside 0..{n - 1}")
            masks.append(to_mask(f))
        return cls(n, maximal_sets(masks))

    @classmethod
    def from_masks(cls, n: int, masks: Iterable[int]) -> "SimplicialComplex":
        return cls(n, maximal_sets(masks))

    @classmethod
    def void(cls, n: int = 0) -> "SimplicialComplex":
        return cls(n, ())

    @classmethod
    def empty(cls, n: int = 0) -> "SimplicialComplex":
        return cls(n, (0,))

    @classmethod
    def simplex(cls, n: int, vertices: Iterable[int] | None = None) -> "SimplicialComplex":
        verts = range(n) if vertices is None else vertices
        return cls.from_facets(n, [verts])

    # basic queries -------------------------------------------------------

    @property
    def is_void(self) -> bool:
        return not self.facets

    @property
    def is_empty(self) -> bool:
        return self.facets == (0,)

    @property
    def dim(self) -> int:
        """Dimension; VOID is given dimension -2 so that it sits below EMPTY."""
        if not self.facets:
            return -2
        return max(popcount(f) for f in self.facets) - 1

    @property
    def vertex_mask(self) -> int:
        m = 0
        for f in self.facets:
            m |= f
        return m

    @property
    def vertices(self) -> tuple[int, ...]:
        return bits(self.vertex_mask)

    @property
    def is_pure(self) -> bool:
        return len({popcount(f) for f in self.facets}) <= 1

    def facet_sets(self) -> list[tuple[int, ...]]:
        return [bits(f) for f in self.facets]

    def contains(self, face) -> bool:
        m = face if isinstance(face, int) else to_mask(face)
        return any(m & ~f == 0 for f in self.facets)

    __contains__ = contains

    @cached_property
    def _faces_by_dim(self) -> tuple[tuple[int, ...], ...]:
        seen: set[int] = set()
        for f in self.facets:
            sub = f
            while True:
                seen.add(sub)
                if sub == 0:
                    break
                sub = (sub - 1) & f
        by_dim: list[list[int]] = [[] for _ in range(self.dim + 2)]
        for m in seen:
            by_dim[popcount(m)].append(m)
        return tuple(tuple(sorted(d, key=face_key)) for d in by_dim)

    def faces(self, i: int) -> tuple[int, ...]:
        """All faces of dimension ``i`` as bitmasks, lexicographically ordered."""
        if i < -1:
            raise ValueError("face dimension must be >= -1")
        if self.is_void or i > self.dim:
            return ()
        return self._faces_by_dim[i + 1]

    def all_faces(self) -> list[int]:
        """Every face, by increasing dimension."""
        return [f for layer in self._faces_by_dim for f in layer] if self.facets else []

    def f_vector(self) -> tuple[int, ...]:
        """Face counts ``(f_{-1}, f_0, ..., f_dim)``."""
        if self.is_void:
            return ()
        return tuple(len(layer) for layer in self._faces_by_dim)

    # operators ------------------------------------------------------------

    def link(self, face) -> "SimplicialComplex":
        """Link of a face; VOID when ``face`` is not in the complex."""
        m = face if isinstance(face, int) else to_mask(face)
        return SimplicialComplex.from_masks(self.n, (f & ~m for f in self.facets if m & ~f == 0))

    def deletion(self, x: int) -> "SimplicialComplex":
        if not 0 <= x < self.n:
            raise ValueError(f"vertex {x} outside 0..{self.n - 1}")
        return SimplicialComplex.from_masks(self.n, (f & ~(1 << x) for f in self.facets))

    def pure_skeleton(self, i: int) -> "SimplicialComplex":
        """Subcomplex generated by the ``i``-dimensional faces."""
        if i < -1 or i > self.dim:
            raise ValueError(f"skeleton dimension {i} outside [-1, {self.dim}]")
        if i == -1:
            return SimplicialComplex.empty(self.n)
        if i == self.dim and self.is_pure:
            return self
        return SimplicialComplex(self.n, self.faces(i))

    def restriction(self, w) -> "SimplicialComplex":
        """Induced subcomplex on the vertex set ``w`` (labels kept)."""
        m = w if isinstance(w, int) else to_mask(w)
        return SimplicialComplex.from_masks(self.n, (f & m for f in self.facets))

    def cone(self, apex: int) -> "SimplicialComplex":
        if self.vertex_mask >> apex & 1:
            raise ValueError("cone apex must not be a vertex of the complex")
        n = max(self.n, apex + 1)
        return SimplicialComplex(n, tuple(sorted((f | 1 << apex for f in self.facets), key=face_key)))

    # serialization --------------------------------------------------------

    def to_json(self) -> dict:
        return {"n": self.n, "facets": [list(f) for f in self.facet_sets()]}

    @classmethod
    def from_json(cls, data: dict) -> "SimplicialComplex":
        return cls.from_facets(int(data["n"]), data["facets"])

    def __repr__(self) -> str:
        if self.is_void:
            return f"SimplicialComplex(n={self.n}, VOID)"
        return f"SimplicialComplex(n={self.n}, facets={self.facet_sets()})"


def independence_complex(graph) -> SimplicialComplex:
    """Complex of independent vertex sets of ``graph``."""
    from .graphs import maximal_independent_sets

    return SimplicialComplex(graph.n, maximal_sets(maximal_independent_sets(graph)))


def random_complex(rng, n: int, max_facets: int = 6) -> SimplicialComplex:
    """Complex generated by a few random vertex subsets of ``{0..n-1}``."""
    k = rng.randint(1, max_facets)
    masks = [rng.getrandbits(n) if n else 0 for _ in range(k)]
    return SimplicialComplex.from_masks(n, masks)


def faces_of_size(mask: int, k: int) -> list[int]:
    return [to_mask(c) for c in combinations(bits(mask), k)]
