"""Reduced simplicial homology with exact coefficients."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .complexes import SimplicialComplex, bits
from .linalg import RATIONALS, FieldSpec, rank


@dataclass(frozen=True)
class ChainComplex:
    """Augmented chain complex of a simplicial complex.

    ``bases[d + 1]`` lists the ``d``-faces (``d >= -1``) and ``boundaries[d]``
    is the matrix of the boundary map from ``d``-chains to ``(d-1)``-chains,
    stored as rows indexed by ``(d-1)``-faces. ``boundaries[-1]`` is absent.
    """

    field: FieldSpec
    bases: tuple[tuple[int, ...], ...]
    boundaries: tuple[tuple[tuple[int, ...], ...], ...]

    @property
    def top(self) -> int:
        return len(self.bases) - 2

    def boundary(self, d: int) -> tuple[tuple[int, ...], ...]:
        """Matrix of the boundary from dimension ``d`` to ``d - 1`` (``d >= 0``)."""
        return self.boundaries[d]

    def dump(self) -> str:
        """Plain-text grid of every boundary matrix, labelled by dimension."""
        lines = []
        for d, mat in enumerate(self.boundaries):
            lines.append(f"d_{d}: {len(self.bases[d])} x {len(self.bases[d + 1])}")
            for row in mat:
                lines.append(" ".join(f"{x:>2d}" for x in row))
        return "\n".join(lines)


@dataclass(frozen=True)
class HomologyProfile:
    """Dimensions of reduced homology ``H~_i`` for ``i = -1 .. top``."""

    dims: tuple[int, ...]

    def __getitem__(self, i: int) -> int:
        k = i + 1
        return self.dims[k] if 0 <= k < len(self.dims) else 0

    def is_zero(self) -> bool:
        return not any(self.dims)

    def as_dict(self) -> dict[int, int]:
        return {i - 1: v for i, v in enumerate(self.dims)}


def _reduce_field(mat, field: FieldSpec):
    if field.p:
        return tuple(tuple(x % field.p for x in row) for row in mat)
    return mat


def boundary_matrices(delta: SimplicialComplex, field: FieldSpec = RATIONALS) -> ChainComplex:
    if delta.is_void:
        raise ValueError("the void complex has no chain complex")
    bases = tuple(delta.faces(d) for d in range(-1, delta.dim + 1))
    mats = []
    for d in range(0, delta.dim + 1):
        lower = {f: i for i, f in enumerate(bases[d])}
        upper = bases[d + 1]
        mat = [[0] * len(upper) for _ in lower]
        for j, face in enumerate(upper):
            for pos, v in enumerate(bits(face)):
                mat[lower[face & ~(1 << v)]][j] = -1 if pos & 1 else 1
        mats.append(_reduce_field(tuple(tuple(r) for r in mat), field))
    return ChainComplex(field, bases, tuple(mats))


def _boundary_rank(lower: tuple[int, ...], upper: tuple[int, ...], field: FieldSpec) -> int:
    if not lower or not upper:
        return 0
    index = {f: i for i, f in enumerate(lower)}
    # Columns are the upper faces: build the transpose, rank is the same.
    rows = []
    for face in upper:
        row = [0] * len(lower)
        for pos, v in enumerate(bits(face)):
            row[index[face & ~(1 << v)]] = -1 if pos & 1 else 1
        rows.append(row)
    return rank(rows, field)


@lru_cache(maxsize=200_000)
def _homology_of_facets(facets: tuple[int, ...], field: FieldSpec) -> tuple[int, ...]:
    delta = SimplicialComplex(max((f.bit_length() for f in facets), default=0), facets)
    layers = [delta.faces(d) for d in range(-1, delta.dim + 1)]
    ranks = [0] * (len(layers) + 1)
    # ranks[k] is the rank of the map out of layers[k]; layers[0] is {empty}.
    for k in range(1, len(layers)):
        ranks[k] = _boundary_rank(layers[k - 1], layers[k], field)
    return tuple(len(layers[k]) - ranks[k] - ranks[k + 1] for k in range(len(layers)))


def reduced_homology(delta: SimplicialComplex, field: FieldSpec = RATIONALS) -> HomologyProfile:
    """Reduced homology profile of a non-void complex over ``field``."""
    if delta.is_void:
        raise ValueError("reduced homology of the void complex is undefined here")
    return HomologyProfile(_homology_of_facets(delta.facets, field))


def euler_characteristic(delta: SimplicialComplex) -> int:
    """Reduced Euler characteristic ``sum (-1)^d f_d`` over ``d >= -1``."""
    return sum((-1) ** (k - 1) * f for k, f in enumerate(delta.f_vector()))
