"""Cohen-Macaulay and sequentially Cohen-Macaulay tests, graded Betti numbers
and the invariants read off them (reg, pd, depth), associated primes of
square-free monomial ideals.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .complexes import SimplicialComplex, bits, popcount
from .homology import _homology_of_facets
from .linalg import RATIONALS, FieldSpec
from .monomial import MonomialIdeal, polarize, stanley_reisner


# ---------------------------------------------------------------------------
# Betti tables


@dataclass
class BettiTable:
    """Graded Betti numbers ``beta_{i,j}(R/I)`` of a quotient of ``K[x1..xn]``."""

    n: int
    entries: dict[tuple[int, int], int] = field(default_factory=dict)

    def __post_init__(self):
        self.entries = {k: v for k, v in self.entries.items() if v}
        if any(v < 0 for v in self.entries.values()):
            raise ValueError("Betti numbers are non-negative")

    def __getitem__(self, key: tuple[int, int]) -> int:
        return self.entries.get(key, 0)

    @property
    def reg(self) -> int:
        return max((j - i for i, j in self.entries), default=0)

    @property
    def pd(self) -> int:
        return max((i for i, _ in self.entries), default=0)

    @property
    def depth(self) -> int:
        return self.n - self.pd

    def total(self, i: int) -> int:
        return sum(v for (a, _), v in self.entries.items() if a == i)

    def to_json(self) -> dict:
        return {"n": self.n, "entries": [[i, j, v] for (i, j), v in sorted(self.entries.items())]}

    @classmethod
    def from_json(cls, data: dict) -> "BettiTable":
        return cls(int(data["n"]), {(i, j): v for i, j, v in data["entries"]})

    def render(self) -> str:
        """Macaulay2-style display: columns are ``i``, rows are ``j - i``."""
        cols = range(self.pd + 1)
        rows = range(self.reg + 1)
        cells = {(r, i): str(self[i, i + r]) if self[i, i + r] else "." for r in rows for i in cols}
        width = max([len(str(self.total(i))) for i in cols] + [len(c) for c in cells.values()])
        lines = ["       " + " ".join(f"{i:>{width}}" for i in cols)]
        lines.append("total: " + " ".join(f"{self.total(i):>{width}}" for i in cols))
        for r in rows:
            lines.append(f"{r:>5}: " + " ".join(f"{cells[r, i]:>{width}}" for i in cols))
        return "\n".join(lines)


# ---------------------------------------------------------------------------
# Reisner and Duval


def _homology(delta: SimplicialComplex, field: FieldSpec) -> tuple[int, ...]:
    return _homology_of_facets(delta.facets, field)


def is_cm(delta: SimplicialComplex, field: FieldSpec = RATIONALS) -> bool:
    """Reisner's criterion over ``field``, checked on the links of all faces."""
    if delta.is_void:
        raise ValueError("Cohen-Macaulayness of the void complex is undefined")
    return _is_cm(delta.facets, field)


@lru_cache(maxsize=200_000)
def _is_cm(facets: tuple[int, ...], field: FieldSpec) -> bool:
    n = max((f.bit_length() for f in facets), default=0)
    delta = SimplicialComplex(n, facets)
    if not delta.is_pure:
        return False
    for face in delta.all_faces():
        lk = delta.link(face)
        h = _homology(lk, field)
        # entries -1 .. dim(lk) - 1 must vanish
        if any(h[:-1]):
            return False
    return True


def is_scm(delta: SimplicialComplex, field: FieldSpec = RATIONALS) -> bool:
    """Every pure skeleton is Cohen-Macaulay."""
    if delta.is_void:
        raise ValueError("sequential Cohen-Macaulayness of the void complex is undefined")
    return _is_scm(delta.facets, field)


@lru_cache(maxsize=200_000)
def _is_scm(facets: tuple[int, ...], field: FieldSpec) -> bool:
    n = max((f.bit_length() for f in facets), default=0)
    delta = SimplicialComplex(n, facets)
    return all(_is_cm(delta.pure_skeleton(i).facets, field) for i in range(delta.dim, -2, -1))


def _squarefree_complex(ideal: MonomialIdeal) -> SimplicialComplex:
    if ideal.is_unit:
        raise ValueError("the unit ideal is excluded")
    if not ideal.is_squarefree:
        ideal, _ = polarize(ideal)
    return stanley_reisner(ideal)


def is_scm_ideal(ideal: MonomialIdeal, field: FieldSpec = RATIONALS) -> bool:
    """SCM test for any proper monomial ideal, through polarization."""
    return is_scm(_squarefree_complex(ideal), field)


def is_cm_ideal(ideal: MonomialIdeal, field: FieldSpec = RATIONALS) -> bool:
    return is_cm(_squarefree_complex(ideal), field)


# ---------------------------------------------------------------------------
# Hochster


def betti_hochster(ideal: MonomialIdeal, field: FieldSpec = RATIONALS) -> BettiTable:
    """Graded Betti numbers of ``R/I`` for square-free ``I`` via restriction homology."""
    if not ideal.is_squarefree:
        raise ValueError("Hochster's formula needs a square-free ideal; polarize first")
    if ideal.is_unit:
        raise ValueError("the unit ideal is excluded")
    delta = stanley_reisner(ideal)
    gens = ideal.support_masks()
    entries: dict[tuple[int, int], int] = {(0, 0): 1}
    # Restrictions containing no generator are full simplices: acyclic.
    for w in range(1, 1 << ideal.n):
        if not any(g & ~w == 0 for g in gens):
            continue
        j = popcount(w)
        h = _homology(delta.restriction(w), field)
        for k, v in enumerate(h):
            if v:
                i = j - k
                entries[i, j] = entries.get((i, j), 0) + v
    return BettiTable(ideal.n, entries)


def betti_table(ideal: MonomialIdeal, field: FieldSpec = RATIONALS) -> BettiTable:
    """Betti table of ``R/I``; non-square-free ideals are polarized first.

    The table keeps the original ring size, so ``depth`` is ``n - pd``
    with ``pd`` read in the polarized ring.
    """
    if ideal.is_unit:
        raise ValueError("the unit ideal is excluded")
    if ideal.is_squarefree:
        return betti_hochster(ideal, field)
    pol, _ = polarize(ideal)
    return BettiTable(ideal.n, betti_hochster(pol, field).entries)


def regularity(ideal: MonomialIdeal, field: FieldSpec = RATIONALS) -> int:
    return betti_table(ideal, field).reg


def proj_dim(ideal: MonomialIdeal, field: FieldSpec = RATIONALS) -> int:
    return betti_table(ideal, field).pd


def depth(ideal: MonomialIdeal, field: FieldSpec = RATIONALS) -> int:
    return betti_table(ideal, field).depth


def krull_dim(ideal: MonomialIdeal) -> int:
    """``dim R/I``, read from the radical."""
    if ideal.is_unit:
        raise ValueError("the unit ideal is excluded")
    radical = MonomialIdeal.from_masks(ideal.n, ideal.support_masks())
    return stanley_reisner(radical).dim + 1


# ---------------------------------------------------------------------------
# associated primes


@dataclass(frozen=True)
class PrimeSupport:
    """Prime ideal generated by the variables in ``mask``."""

    mask: int

    @property
    def height(self) -> int:
        return popcount(self.mask)

    @property
    def variables(self) -> tuple[int, ...]:
        return bits(self.mask)

    def __str__(self) -> str:
        return "(" + ",".join(f"x{v + 1}" for v in self.variables) + ")"


def associated_primes(ideal: MonomialIdeal) -> list[PrimeSupport]:
    """Associated primes of a square-free ideal: complements of the facets."""
    if not ideal.is_squarefree:
        raise ValueError("associated primes are only computed for square-free ideals")
    if ideal.is_zero:
        return []
    delta = stanley_reisner(ideal)
    full = (1 << ideal.n) - 1
    return sorted((PrimeSupport(full & ~f) for f in delta.facets), key=lambda p: p.variables)


def is_unmixed(ideal: MonomialIdeal) -> bool:
    return len({p.height for p in associated_primes(ideal)}) <= 1


# ---------------------------------------------------------------------------
# reports


@dataclass
class InvariantReport:
    object_id: str
    field: str
    is_cm: bool
    is_scm: bool
    is_unmixed: bool | None
    dim: int
    depth: int
    pd: int
    reg: int
    ass: list[list[int]] | None

    def to_json(self) -> dict:
        return dict(self.__dict__)

    @classmethod
    def from_json(cls, data: dict) -> "InvariantReport":
        return cls(**data)


def analyze_ideal(ideal: MonomialIdeal, field: FieldSpec = RATIONALS, object_id: str | None = None) -> InvariantReport:
    table = betti_table(ideal, field)
    cm = is_cm_ideal(ideal, field)
    scm = is_scm_ideal(ideal, field)
    unmixed = ass = None
    if ideal.is_squarefree:
        primes = associated_primes(ideal)
        unmixed = is_unmixed(ideal)
        ass = [[v + 1 for v in p.variables] for p in primes]
        if cm != (unmixed and scm):
            raise AssertionError(f"CM != unmixed and SCM for {ideal}")
    return InvariantReport(
        object_id=object_id or str(ideal),
        field=str(field),
        is_cm=cm,
        is_scm=scm,
        is_unmixed=unmixed,
        dim=krull_dim(ideal),
        depth=table.depth,
        pd=table.pd,
        reg=table.reg,
        ass=ass,
    )
