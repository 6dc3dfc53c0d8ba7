"""Independent Betti-number oracle: homology of the Koszul complex of ``R/I``
in each multidegree, ``beta_{i,a} = dim_K H_i(K(x; R/I))_a``.

Kept separate from the Hochster path on purpose; it is slow and only meant
for cross-checking small rings.
"""

from __future__ import annotations

from itertools import product

from .complexes import bits
from .invariants import BettiTable
from .linalg import RATIONALS, FieldSpec, rank
from .monomial import MonomialIdeal, divides

ORACLE_LIMIT = 6


def _standard(ideal: MonomialIdeal, m: tuple[int, ...]) -> bool:
    return not any(divides(g, m) for g in ideal.gens)


def koszul_multidegree(ideal: MonomialIdeal, a: tuple[int, ...], field: FieldSpec) -> dict[int, int]:
    """Nonzero ``dim H_i`` of the Koszul complex in multidegree ``a``."""
    n = ideal.n
    supp = [k for k in range(n) if a[k] > 0]
    # basis of K_i in degree a: subsets S of supp(a) with x^(a - 1_S) standard
    basis: dict[int, list[int]] = {}
    for r in range(1 << len(supp)):
        s = 0
        for t, k in enumerate(supp):
            if r >> t & 1:
                s |= 1 << k
        m = tuple(a[k] - (s >> k & 1) for k in range(n))
        if _standard(ideal, m):
            basis.setdefault(s.bit_count(), []).append(s)
    if not basis:
        return {}
    ranks: dict[int, int] = {}
    for i, sources in basis.items():
        targets = basis.get(i - 1)
        if i == 0 or not targets:
            ranks[i] = 0
            continue
        index = {t: r for r, t in enumerate(targets)}
        rows = []
        for s in sources:
            row = [0] * len(targets)
            for pos, k in enumerate(bits(s)):
                t = s & ~(1 << k)
                # x_k * x^(a - 1_S) is zero in R/I unless the target is standard
                if t in index:
                    row[index[t]] = -1 if pos & 1 else 1
            rows.append(row)
        ranks[i] = rank(rows, field)
    out = {}
    for i, sources in basis.items():
        h = len(sources) - ranks[i] - ranks.get(i + 1, 0)
        if h:
            out[i] = h
    return out


def betti_koszul_oracle(ideal: MonomialIdeal, field: FieldSpec = RATIONALS, limit: int = ORACLE_LIMIT) -> BettiTable:
    """Graded Betti table of ``R/I`` from multigraded Koszul homology."""
    if ideal.n > limit:
        raise ValueError(f"Koszul oracle refuses n={ideal.n} > {limit}")
    if ideal.is_unit:
        raise ValueError("the unit ideal is excluded")
    # Tor vanishes outside the lcm lattice of the generators.
    top = [max([g[k] for g in ideal.gens] + [0]) for k in range(ideal.n)]
    entries: dict[tuple[int, int], int] = {}
    for a in product(*(range(t + 1) for t in top)):
        j = sum(a)
        for i, h in koszul_multidegree(ideal, a, field).items():
            entries[i, j] = entries.get((i, j), 0) + h
    return BettiTable(ideal.n, entries)
