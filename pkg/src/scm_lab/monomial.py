"""Monomial ideals: minimal generators, colon, intersection, polarization and
the Stanley-Reisner correspondence.

Exponent vectors are 0-based internally; text I/O uses ``x1 .. xn``.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from .complexes import SimplicialComplex, bits, maximal_sets, to_mask

Monomial = tuple[int, ...]


def monomial(n: int, *factors: int | tuple[int, int]) -> Monomial:
    """Build an exponent vector from 1-based variable indices or ``(index, power)`` pairs.

    >>> monomial(4, 1, 3)
    (1, 0, 1, 0)
    >>> monomial(2, (1, 2), 2)
    (2, 1)
    """
    e = [0] * n
    for f in factors:
        i, k = f if isinstance(f, tuple) else (f, 1)
        if not 1 <= i <= n:
            raise ValueError(f"variable x{i} outside x1..x{n}")
        e[i - 1] += k
    return tuple(e)


def divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def gcd(a: Monomial, b: Monomial) -> Monomial:
    return tuple(min(x, y) for x, y in zip(a, b))


def quotient(a: Monomial, b: Monomial) -> Monomial:
    """``a / gcd(a, b)``."""
    return tuple(max(x - y, 0) for x, y in zip(a, b))


def degree(a: Monomial) -> int:
    return sum(a)


def support(a: Monomial) -> int:
    return to_mask(i for i, x in enumerate(a) if x)


def format_monomial(a: Monomial) -> str:
    parts = []
    for i, e in enumerate(a):
        if e == 1:
            parts.append(f"x{i + 1}")
        elif e > 1:
            parts.append(f"x{i + 1}^{e}")
    return "*".join(parts) if parts else "1"


def _check(gens: Iterable[Sequence[int]], n: int) -> list[Monomial]:
    out = []
    for g in gens:
        g = tuple(int(x) for x in g)
        if len(g) != n:
            raise ValueError(f"exponent vector {g} has length {len(g)}, expected {n}")
        if any(x < 0 for x in g):
            raise ValueError(f"negative exponent in {g}")
        out.append(g)
    return out


def minimize(gens: Iterable[Sequence[int]], n: int) -> "MonomialIdeal":
    """Ideal with the divisibility-reduced generating set of ``gens``."""
    cands = sorted(set(_check(gens, n)), key=lambda g: (sum(g), g))
    kept: list[Monomial] = []
    for g in cands:
        if not any(divides(h, g) for h in kept):
            kept.append(g)
    return MonomialIdeal(n, tuple(sorted(kept, reverse=True)))


@dataclass(frozen=True)
class MonomialIdeal:
    """Monomial ideal of ``K[x1..xn]`` given by its minimal generators.

    Generators are kept in decreasing lexicographic order on exponent
    vectors; build instances with :func:`minimize` or the helpers below.
    """

    n: int
    gens: tuple[Monomial, ...]

    @classmethod
    def zero(cls, n: int) -> "MonomialIdeal":
        return cls(n, ())

    @classmethod
    def unit(cls, n: int) -> "MonomialIdeal":
        return cls(n, ((0,) * n,))

    @classmethod
    def from_supports(cls, n: int, supports: Iterable[Iterable[int]]) -> "MonomialIdeal":
        """Square-free ideal from 0-based variable sets."""
        gens = []
        for s in supports:
            e = [0] * n
            for v in s:
                e[v] = 1
            gens.append(e)
        return minimize(gens, n)

    @classmethod
    def from_masks(cls, n: int, masks: Iterable[int]) -> "MonomialIdeal":
        return cls.from_supports(n, (bits(m) for m in masks))

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return any(not any(g) for g in self.gens)

    @property
    def is_squarefree(self) -> bool:
        return all(x <= 1 for g in self.gens for x in g)

    def support_masks(self) -> list[int]:
        return [support(g) for g in self.gens]

    def contains(self, m: Sequence[int]) -> bool:
        return any(divides(g, m) for g in self.gens)

    __contains__ = contains

    def __str__(self) -> str:
        if not self.gens:
            return "(0)"
        return "(" + ", ".join(format_monomial(g) for g in self.gens) + ")"

    def to_text(self) -> str:
        return "\n".join(format_monomial(g) for g in self.gens)

    def to_json(self) -> dict:
        return {"n": self.n, "gens": [list(g) for g in self.gens]}

    @classmethod
    def from_json(cls, data: dict) -> "MonomialIdeal":
        return minimize(data["gens"], int(data["n"]))


def colon_monomial(ideal: MonomialIdeal, u: Sequence[int]) -> MonomialIdeal:
    u = _check([u], ideal.n)[0]
    return minimize((quotient(g, u) for g in ideal.gens), ideal.n)


def intersect(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    if a.n != b.n:
        raise ValueError("ideals live in rings of different sizes")
    return minimize((lcm(g, h) for g in a.gens for h in b.gens), a.n)


def colon_ideal(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    """``a : b`` as the intersection of the colons by the generators of ``b``."""
    if b.is_zero:
        raise ValueError("colon by the zero ideal is not supported")
    if a.n != b.n:
        raise ValueError("ideals live in rings of different sizes")
    out = None
    for g in b.gens:
        c = colon_monomial(a, g)
        out = c if out is None else intersect(out, c)
    return out


def add_variable(ideal: MonomialIdeal, x: int) -> MonomialIdeal:
    """``(I, x)`` for the 0-based variable index ``x``."""
    if not 0 <= x < ideal.n:
        raise ValueError(f"variable index {x} outside 0..{ideal.n - 1}")
    e = [0] * ideal.n
    e[x] = 1
    return minimize(list(ideal.gens) + [e], ideal.n)


def ideal_sum(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    if a.n != b.n:
        raise ValueError("ideals live in rings of different sizes")
    return minimize(a.gens + b.gens, a.n)


def polarize(ideal: MonomialIdeal) -> tuple[MonomialIdeal, int]:
    """Standard polarization.

    Variable ``x_k`` with largest exponent ``e_k`` becomes ``e_k`` square-free
    variables laid out in blocks (``x_k`` itself first, then its copies);
    variables absent from every generator keep one slot so the ambient ring
    only grows.  Returns the polarized ideal and its number of variables.
    """
    widths = [max([g[k] for g in ideal.gens] + [1]) for k in range(ideal.n)]
    offsets = [0]
    for w in widths:
        offsets.append(offsets[-1] + w)
    total = offsets[-1]
    gens = []
    for g in ideal.gens:
        e = [0] * total
        for k, a in enumerate(g):
            for j in range(a):
                e[offsets[k] + j] = 1
        gens.append(e)
    return minimize(gens, total), total


def stanley_reisner(ideal: MonomialIdeal) -> SimplicialComplex:
    """Complex whose faces are the square-free monomials outside ``ideal``."""
    if not ideal.is_squarefree:
        raise ValueError("Stanley-Reisner complex needs a square-free ideal; polarize first")
    if ideal.is_unit:
        raise ValueError("the unit ideal has no Stanley-Reisner complex")
    full = (1 << ideal.n) - 1
    covers = minimal_transversals(ideal.support_masks())
    return SimplicialComplex.from_masks(ideal.n, (full & ~t for t in covers))


def complex_ideal(delta: SimplicialComplex) -> MonomialIdeal:
    """Stanley-Reisner ideal: generated by the minimal non-faces."""
    if delta.is_void:
        raise ValueError("the void complex has no Stanley-Reisner ideal")
    full = (1 << delta.n) - 1
    return MonomialIdeal.from_masks(delta.n, minimal_transversals([full & ~f for f in delta.facets]))


def minimal_transversals(edges: Iterable[int]) -> list[int]:
    """Minimal vertex sets meeting every set in ``edges`` (Berge's method).

    An empty member admits no transversal; no members admit only ``{}``.
    """
    trans = [0]
    for e in sorted(set(edges), key=lambda m: m.bit_count()):
        if e == 0:
            return []
        nxt = set()
        for t in trans:
            if t & e:
                nxt.add(t)
            else:
                for v in bits(e):
                    nxt.add(t | 1 << v)
        trans = _minimal(nxt)
    return sorted(trans)


def _minimal(masks: Iterable[int]) -> list[int]:
    kept: list[int] = []
    for m in sorted(masks, key=lambda x: x.bit_count()):
        if not any(k & ~m == 0 for k in kept):
            kept.append(m)
    return kept


# ---------------------------------------------------------------------------
# text / JSON input

_FACTOR = re.compile(r"^x(\d+)(?:\^(\d+))?$")


def parse_ideal_text(text: str, n: int | None = None) -> MonomialIdeal:
    """Parse one generator per line, e.g. ``x1*x3`` or ``x2^2*x4``.

    Blank lines and ``#`` comments are skipped.  Without ``n`` the ring size
    is the largest variable index that appears.
    """
    rows: list[list[tuple[int, int]]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("n="):
            n = int(line[2:])
            continue
        factors = []
        if line != "1":
            col = 1
            for tok in line.split("*"):
                m = _FACTOR.match(tok.strip())
                if not m or int(m.group(1)) < 1:
                    raise ValueError(f"line {lineno}, column {col}: cannot parse factor {tok.strip()!r}")
                factors.append((int(m.group(1)), int(m.group(2) or 1)))
                col += len(tok) + 1
        rows.append(factors)
    top = max((i for r in rows for i, _ in r), default=0)
    if n is None:
        n = max(top, 1)
    if top > n:
        raise ValueError(f"variable x{top} exceeds ring size {n}")
    return minimize([monomial(n, *r) for r in rows], n)


def load_ideal(text: str) -> MonomialIdeal:
    """Read either the JSON or the line-per-generator form."""
    s = text.strip()
    if s.startswith("{"):
        return MonomialIdeal.from_json(json.loads(s))
    return parse_ideal_text(text)
