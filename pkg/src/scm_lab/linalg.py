"""Exact rank computation over Q (fraction-free) and over prime fields."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class FieldSpec:
    """Coefficient field: ``p == 0`` means the rationals, otherwise GF(p)."""

    p: int = 0

    def __post_init__(self):
        if self.p < 0 or (self.p and not _is_prime(self.p)):
            raise ValueError(f"field characteristic must be 0 or a prime, got {self.p}")

    @property
    def is_rational(self) -> bool:
        return self.p == 0

    @classmethod
    def parse(cls, text: str) -> "FieldSpec":
        """Parse ``q``, ``0``, ``2``, ``p:3`` or ``gf(5)`` style field names."""
        t = text.strip().lower()
        if t in ("q", "qq", "rationals", "0"):
            return RATIONALS
        for prefix in ("p:", "gf(", "f"):
            if t.startswith(prefix):
                t = t[len(prefix):].rstrip(")")
                break
        try:
            return cls(int(t))
        except ValueError as exc:
            raise ValueError(f"cannot parse field {text!r}: {exc}") from None

    def __str__(self) -> str:
        return "QQ" if self.p == 0 else f"GF({self.p})"


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


RATIONALS = FieldSpec(0)
GF2 = FieldSpec(2)


def rank(matrix, field: FieldSpec = RATIONALS) -> int:
    """Rank of an integer matrix given as a sequence of rows."""
    rows = [list(r) for r in matrix if any(r)]
    if not rows:
        return 0
    if field.p == 0:
        return _rank_bareiss(rows)
    if field.p == 2:
        return _rank_gf2(rows)
    return _rank_mod_p(rows, field.p)


def _rank_bareiss(m: list[list[int]]) -> int:
    # Fraction-free elimination: every division below is exact.
    nrows, ncols = len(m), len(m[0])
    r = 0
    prev = 1
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if m[i][c]), None)
        if piv is None:
            continue
        if piv != r:
            m[r], m[piv] = m[piv], m[r]
        pr = m[r]
        a = pr[c]
        for i in range(r + 1, nrows):
            row = m[i]
            b = row[c]
            if b:
                for k in range(c + 1, ncols):
                    row[k] = (a * row[k] - b * pr[k]) // prev
            else:
                for k in range(c + 1, ncols):
                    row[k] = (a * row[k]) // prev
            row[c] = 0
        prev = a
        r += 1
    return r


def _rank_mod_p(m: list[list[int]], p: int) -> int:
    m = [[x % p for x in row] for row in m]
    nrows, ncols = len(m), len(m[0])
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = pow(m[r][c], p - 2, p)
        pr = [(x * inv) % p for x in m[r]]
        m[r] = pr
        for i in range(r + 1, nrows):
            f = m[i][c]
            if f:
                row = m[i]
                for k in range(c, ncols):
                    row[k] = (row[k] - f * pr[k]) % p
        r += 1
    return r


def _rank_gf2(m: list[list[int]]) -> int:
    # Rows packed into ints; xor elimination keyed on the leading bit.
    pivots: dict[int, int] = {}
    for row in m:
        v = 0
        for k, x in enumerate(row):
            if x & 1:
                v |= 1 << k
        while v:
            top = v.bit_length() - 1
            if top in pivots:
                v ^= pivots[top]
            else:
                pivots[top] = v
                break
    return len(pivots)
