from functools import lru_cache

from hypothesis import strategies as st

from scm_lab.complexes import SimplicialComplex
from scm_lab.graphs import Graph
from scm_lab.monomial import MonomialIdeal


@lru_cache(maxsize=None)
def antichains(n: int) -> tuple[tuple[int, ...], ...]:
    """Every antichain of non-empty subsets of ``{0..n-1}`` (as bitmasks)."""
    subsets = sorted(range(1, 1 << n), key=lambda m: (m.bit_count(), m))
    out = []

    def grow(i: int, chosen: list[int]):
        if i == len(subsets):
            out.append(tuple(chosen))
            return
        s = subsets[i]
        grow(i + 1, chosen)
        # sizes are non-decreasing, so only earlier sets can be contained in s
        if not any(c & ~s == 0 for c in chosen):
            chosen.append(s)
            grow(i + 1, chosen)
            chosen.pop()

    grow(0, [])
    return tuple(out)


def all_squarefree_ideals(n: int):
    for a in antichains(n):
        yield MonomialIdeal.from_masks(n, a)


@st.composite
def squarefree_ideals(draw, max_n=6, min_n=1):
    n = draw(st.integers(min_n, max_n))
    masks = draw(st.lists(st.integers(1, (1 << n) - 1), max_size=n + 3))
    return MonomialIdeal.from_masks(n, masks)


@st.composite
def complexes(draw, max_n=7):
    n = draw(st.integers(0, max_n))
    masks = draw(st.lists(st.integers(0, (1 << n) - 1), min_size=1, max_size=6))
    return SimplicialComplex.from_masks(n, masks)


@st.composite
def graphs(draw, max_n=7):
    n = draw(st.integers(0, max_n))
    pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    return Graph.from_edges(n, chosen)


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for k in sorted(mod.TITLES):
        rows = mod.RESULTS.get(k)
        if not rows:
            tr.write_line(f"criterion {k} ({mod.TITLES[k]}): NOT RUN")
            continue
        status = "PASS" if all(ok for _, ok, _ in rows) else "FAIL"
        tr.write_line(f"criterion {k} ({mod.TITLES[k]}): {status}")
        for name, ok, detail in rows:
            tail = f": {detail}" if detail else ""
            tr.write_line(f"    [{'ok' if ok else 'FAIL'}] {name}{tail}")
