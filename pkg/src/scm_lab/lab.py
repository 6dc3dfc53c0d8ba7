"""Corpus-driven verification of the results on SCM graphs and monomial ideals.

Each theorem arm takes one corpus object (a graph or a square-free ideal),
filters it by the arm's hypotheses and returns an :class:`ItemResult`.
Objects whose hypotheses fail are skipped with a reason, never counted as
failures.  Arms run serially or on a process pool; results are merged in
corpus order so reports do not depend on the worker count.
"""

from __future__ import annotations

import enum
import json
import os
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Any, Callable, Iterable

from . import graphs as gs
from .enumeration import canonical_key, enumerate_up_to
from .graphs import Graph, from_graph6, read_graph6_file
from .invariants import (
    associated_primes,
    betti_table,
    is_cm,
    is_scm,
    is_scm_ideal,
    is_unmixed,
)
from .linalg import GF2, RATIONALS, FieldSpec
from .monomial import (
    MonomialIdeal,
    add_variable,
    colon_ideal,
    colon_monomial,
    parse_ideal_text,
    stanley_reisner,
)

SCHEMA_VERSION = 1


class TheoremId(str, enum.Enum):
    P0 = "P0"
    P1 = "P1"
    L0 = "L0"
    T1 = "T1"
    COR_T1 = "COR_T1"
    L1 = "L1"
    C1 = "C1"
    P2 = "P2"
    L2 = "L2"
    L3 = "L3"
    L4 = "L4"
    T2 = "T2"
    C2i = "C2i"
    C2ii = "C2ii"
    C2iii = "C2iii"
    C2iv = "C2iv"
    C2v = "C2v"
    EX1 = "EX1"
    EX2 = "EX2"
    EX3 = "EX3"

    @classmethod
    def parse(cls, text: str) -> "TheoremId":
        t = text.strip().replace("-", "_").replace("(", "").replace(")", "")
        for member in cls:
            if member.value.lower() == t.lower():
                return member
        raise ValueError(f"unknown theorem id {text!r}; choose from {', '.join(m.value for m in cls)}")


IDEAL_ARMS = {TheoremId.P0, TheoremId.P1, TheoremId.L1, TheoremId.C1}
EXAMPLE_ARMS = {TheoremId.EX1, TheoremId.EX2, TheoremId.EX3}
C2_FAMILIES = (TheoremId.C2i, TheoremId.C2ii, TheoremId.C2iii, TheoremId.C2iv, TheoremId.C2v)


# ---------------------------------------------------------------------------
# graph invariants, memoized on isomorphism class and field


def graph_scm(g: Graph, field: FieldSpec = RATIONALS) -> bool:
    return _graph_cached("scm", g, field)


def graph_cm(g: Graph, field: FieldSpec = RATIONALS) -> bool:
    return _graph_cached("cm", g, field)


def graph_reg(g: Graph, field: FieldSpec = RATIONALS) -> int:
    return _graph_cached("reg", g, field)


def graph_a(g: Graph) -> int:
    return _graph_cached("a", g, None)


_GRAPH_CACHE: dict[tuple, Any] = {}


def _graph_cached(what: str, g: Graph, field: FieldSpec | None):
    key = (what, canonical_key(g) if g.n <= 7 else (g.n, g.adj), field)
    if key in _GRAPH_CACHE:
        return _GRAPH_CACHE[key]
    if what == "scm":
        val = is_scm(g.independence_complex(), field)
    elif what == "cm":
        val = is_cm(g.independence_complex(), field)
    elif what == "reg":
        val = betti_table(g.edge_ideal(), field).reg
    else:
        val = gs.induced_matching_number(g)
    _GRAPH_CACHE[key] = val
    return val


def clear_caches():
    _GRAPH_CACHE.clear()


FAMILY_PREDICATES: dict[str, Callable[[Graph, FieldSpec], bool]] = {
    "connected": lambda g, k: g.is_connected(),
    "chordal": lambda g, k: gs.is_chordal(g),
    "bipartite": lambda g, k: gs.is_bipartite(g),
    "c5_free": lambda g, k: gs.is_c5_free(g),
    "vertex_decomposable": lambda g, k: gs.is_vertex_decomposable(g),
    "cameron_walker": lambda g, k: g.num_edges > 0 and gs.is_cameron_walker(g),
    "very_well_covered": lambda g, k: gs.is_very_well_covered(g),
    "well_covered": lambda g, k: gs.is_well_covered(g),
    "scm": lambda g, k: graph_scm(g, k),
    "cm": lambda g, k: graph_cm(g, k),
    "basic_5_cycle": lambda g, k: bool(gs.basic_five_cycles(g)),
}


def family_members(g: Graph, field: FieldSpec = RATIONALS) -> dict[str, bool]:
    """Membership in each graph family carrying a reg = a(G) statement."""
    return {
        "chordal": gs.is_chordal(g),
        "scm_bipartite": gs.is_bipartite(g) and graph_scm(g, field),
        "c5_free_vertex_decomposable": gs.is_c5_free(g) and gs.is_vertex_decomposable(g),
        "cameron_walker": g.num_edges > 0 and gs.is_cameron_walker(g),
        "very_well_covered_cm": gs.is_very_well_covered(g) and graph_cm(g, field),
    }


_C2_TEST = {
    TheoremId.C2i: ("chordal", lambda g, k: gs.is_chordal(g)),
    TheoremId.C2ii: ("SCM bipartite", lambda g, k: gs.is_bipartite(g) and graph_scm(g, k)),
    TheoremId.C2iii: ("C5-free vertex decomposable", lambda g, k: gs.is_c5_free(g) and gs.is_vertex_decomposable(g)),
    TheoremId.C2iv: ("Cameron-Walker", lambda g, k: g.num_edges > 0 and gs.is_cameron_walker(g)),
    TheoremId.C2v: ("very well-covered CM", lambda g, k: gs.is_very_well_covered(g) and graph_cm(g, k)),
}


# ---------------------------------------------------------------------------
# corpus


@dataclass
class CorpusSpec:
    """Where the objects come from.

    ``source`` is ``"enumerate"`` (isomorphism classes with ``min_n <= n <=
    max_n``), ``"graph6"`` (a file at ``path``) or ``"list"`` (``graphs``).
    Ideal arms use the edge ideals of corpus graphs with at most
    ``ideal_max_n`` vertices plus ``random_ideals`` seeded random
    square-free ideals, and any explicit ``ideals``.
    """

    source: str = "enumerate"
    max_n: int = 6
    min_n: int = 1
    connected: bool = False
    path: str | None = None
    graphs: list[Graph] | None = None
    filters: tuple[str, ...] = ()
    ideals: list[MonomialIdeal] | None = None
    ideal_pairs: list[tuple[MonomialIdeal, MonomialIdeal]] | None = None
    random_ideals: int = 200
    ideal_max_n: int = 5
    pairs_per_ideal: int = 3
    seed: int = 0

    def describe(self) -> dict:
        d = {k: v for k, v in asdict(self).items() if k not in ("graphs", "ideals", "ideal_pairs")}
        if self.graphs is not None:
            d["graphs"] = [g.to_graph6() for g in self.graphs]
        if self.ideals is not None:
            d["ideals"] = [i.to_json() for i in self.ideals]
        return d


def corpus_graphs(corpus: CorpusSpec, field: FieldSpec = RATIONALS) -> list[Graph]:
    if corpus.source == "enumerate":
        if corpus.max_n > 10:
            raise ValueError("corpora are limited to n <= 10")
        out = list(enumerate_up_to(corpus.max_n, corpus.connected, corpus.min_n))
    elif corpus.source == "graph6":
        if not corpus.path:
            raise ValueError("graph6 corpus needs a path")
        out = read_graph6_file(corpus.path)
    elif corpus.source == "list":
        out = list(corpus.graphs or [])
    else:
        raise ValueError(f"unknown corpus source {corpus.source!r}")
    if corpus.source != "enumerate" and corpus.connected:
        out = [g for g in out if g.is_connected()]
    for name in corpus.filters:
        if name not in FAMILY_PREDICATES:
            raise ValueError(f"unknown filter {name!r}; choose from {', '.join(FAMILY_PREDICATES)}")
        pred = FAMILY_PREDICATES[name]
        out = [g for g in out if pred(g, field)]
    return out


def random_squarefree_ideal(rng: random.Random, max_n: int, min_n: int = 1) -> MonomialIdeal:
    """Random proper square-free ideal; the zero ideal is possible."""
    n = rng.randint(min_n, max_n)
    k = rng.randint(0, n + 2)
    masks = [rng.randint(1, (1 << n) - 1) for _ in range(k)]
    return MonomialIdeal.from_masks(n, masks)


def random_monomial(rng: random.Random, n: int, max_exp: int = 2) -> tuple[int, ...]:
    return tuple(rng.randint(0, max_exp) for _ in range(n))


def corpus_ideals(corpus: CorpusSpec, field: FieldSpec = RATIONALS) -> list[MonomialIdeal]:
    out: list[MonomialIdeal] = []
    if corpus.ideals:
        out.extend(corpus.ideals)
    for g in corpus_graphs(corpus, field):
        if g.n <= corpus.ideal_max_n:
            out.append(g.edge_ideal())
    rng = random.Random(corpus.seed)
    out.extend(random_squarefree_ideal(rng, corpus.ideal_max_n) for _ in range(corpus.random_ideals))
    return out


# ---------------------------------------------------------------------------
# reports


@dataclass
class ItemResult:
    key: str
    checked: bool
    reason: str = ""
    failures: list[dict] = field(default_factory=list)
    subcases: int = 0
    observation: Any = None
    tallies: dict[str, int] = field(default_factory=dict)


@dataclass
class VerificationReport:
    theorem: str
    field: str
    instances_checked: int = 0
    subcases_checked: int = 0
    failures: list[dict] = field(default_factory=list)
    skipped: list[dict] = field(default_factory=list)
    wall_time: float = 0.0
    seed: int | None = None
    corpus: dict | None = None
    tallies: dict[str, int] = field(default_factory=dict)
    observations: dict[str, Any] = field(default_factory=dict)
    schema_version: int = SCHEMA_VERSION

    @property
    def passed(self) -> bool:
        return not self.failures

    @property
    def corpus_size(self) -> int:
        return self.instances_checked + len(self.skipped)

    def to_json(self) -> dict:
        d = asdict(self)
        d["passed"] = self.passed
        return d

    @classmethod
    def from_json(cls, data: dict) -> "VerificationReport":
        data = dict(data)
        data.pop("passed", None)
        return cls(**data)

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        extra = "".join(f", {k}={v}" for k, v in sorted(self.tallies.items()))
        return (
            f"{status} {self.theorem} [{self.field}] checked={self.instances_checked} "
            f"subcases={self.subcases_checked} skipped={len(self.skipped)} "
            f"failures={len(self.failures)}{extra} ({self.wall_time:.2f}s)"
        )


def _fail(obj: str, expected, got, theorem: str, kind: str = "graph", tag: str | None = None) -> dict:
    if kind == "graph":
        repro = f"scm-lab verify --theorem {theorem} --graph6 '{obj}'"
    else:
        repro = f"scm-lab verify --theorem {theorem} --ideal-json '{obj}'"
    rec = {"object": obj, "expected": expected, "got": got, "repro": repro}
    if tag:
        rec["tag"] = tag
    return rec


def _vname(x: int) -> str:
    return f"x{x + 1}"


# ---------------------------------------------------------------------------
# graph arms


def _arm_L0(g: Graph, field: FieldSpec) -> ItemResult:
    key = g.to_graph6()
    if not g.is_connected():
        return ItemResult(key, False, "graph not connected")
    cycles = gs.basic_five_cycles(g)
    if not cycles:
        return ItemResult(key, False, "no basic 5-cycle")
    res = ItemResult(key, True)
    seen = set()
    for c in cycles:
        for x in c:
            if g.degree(x) >= 3 and x not in seen:
                seen.add(x)
                res.subcases += 1
                if not gs.is_shedding_vertex(g, x):
                    res.failures.append(_fail(key, f"{_vname(x)} shedding", "not shedding", "L0"))
    return res


def _t1_rhs(g: Graph, cycle, field: FieldSpec, holds: Callable[[Graph, FieldSpec], bool]) -> bool:
    return any(
        gs.is_shedding_vertex(g, x)
        and holds(g.delete_vertex(x), field)
        and holds(g.delete_closed_neighborhood(x), field)
        for x in cycle
    )


def _arm_T1(g: Graph, field: FieldSpec, cm_version: bool = False) -> ItemResult:
    key = g.to_graph6()
    theorem = "COR_T1" if cm_version else "T1"
    if not g.is_connected():
        return ItemResult(key, False, "graph not connected")
    cycles = gs.basic_five_cycles(g)
    if not cycles:
        return ItemResult(key, False, "no basic 5-cycle")
    if cm_version and not gs.is_well_covered(g):
        return ItemResult(key, False, "graph not unmixed")
    holds = graph_cm if cm_version else graph_scm
    lhs = holds(g, field)
    agree = [lhs == _t1_rhs(g, c, field, holds) for c in cycles]
    res = ItemResult(key, True, subcases=len(cycles), observation={"lhs": lhs, "agree": agree})
    res.tallies = {"every_failures": 0, "some_failures": 0}
    if not all(agree):
        res.tallies["every_failures"] = 1
        bad = [c for c, ok in zip(cycles, agree) if not ok]
        res.failures.append(_fail(key, f"biconditional for every basic 5-cycle (lhs={lhs})",
                                  f"fails on {[[v + 1 for v in c] for c in bad]}", theorem, tag="every"))
    if not any(agree):
        res.tallies["some_failures"] = 1
        res.failures.append(_fail(key, f"biconditional for some basic 5-cycle (lhs={lhs})",
                                  "fails on all basic 5-cycles", theorem, tag="some"))
    # forward direction, strengthened as in the argument for G != C
    is_bare_cycle = g.n == 5 and g.num_edges == 5
    if lhs and not is_bare_cycle and not cm_version:
        for c in cycles:
            for x in c:
                if g.degree(x) < 3:
                    continue
                res.subcases += 1
                ok = gs.is_shedding_vertex(g, x) and graph_scm(g.delete_closed_neighborhood(x), field)
                if not ok:
                    res.failures.append(_fail(key, f"{_vname(x)} shedding and G\\N[{_vname(x)}] SCM",
                                              "violated", theorem, tag="forward"))
    return res


def _arm_P2(g: Graph, field: FieldSpec) -> ItemResult:
    key = g.to_graph6()
    ideal = g.edge_ideal()
    res = ItemResult(key, False, "no shedding vertex x with (I,x) SCM")
    res.tallies = {"P2(i)": 0, "P2(ii)": 0, "P2(iii)": 0, "P2(iii)+1_on_colon": 0}
    base = betti_table(ideal, field)
    obs = []
    for x in range(g.n):
        if not gs.is_shedding_vertex(g, x):
            continue
        with_x = add_variable(ideal, x)
        if not is_scm_ideal(with_x, field):
            continue
        res.checked = True
        res.reason = ""
        res.subcases += 1
        u = tuple(int(k == x) for k in range(g.n))
        bc = betti_table(colon_monomial(ideal, u), field)
        ba = betti_table(with_x, field)
        obs.append((x, base.depth, base.pd, base.reg))
        checks = [
            ("P2(i)", "depth", base.depth, min(bc.depth, ba.depth)),
            ("P2(ii)", "pd", base.pd, max(bc.pd, ba.pd)),
            ("P2(iii)", "reg", base.reg, max(bc.reg, ba.reg + 1)),
        ]
        for tag, what, got, want in checks:
            if got != want:
                res.tallies[tag] += 1
                res.failures.append(_fail(key, f"{what}(R/I)={want} for x={_vname(x)}", f"{what}(R/I)={got}", "P2", tag=tag))
        # same statement with the shift on the colon term, as from the short exact sequence
        if base.reg != max(bc.reg + 1, ba.reg):
            res.tallies["P2(iii)+1_on_colon"] += 1
    res.observation = obs
    return res


def _arm_L2(g: Graph, field: FieldSpec) -> ItemResult:
    key = g.to_graph6()
    if not gs.is_c5_free(g):
        return ItemResult(key, False, "graph contains a 5-cycle")
    res = ItemResult(key, True, subcases=g.n)
    for x in range(g.n):
        s, c = gs.is_shedding_vertex(g, x), gs.is_codominated(g, x)
        if s != c:
            res.failures.append(_fail(key, f"shedding({_vname(x)}) == codominated({_vname(x)})", f"shedding={s}, codominated={c}", "L2"))
    return res


def _arm_L3(g: Graph, field: FieldSpec) -> ItemResult:
    key = g.to_graph6()
    xs = gs.codominated_vertices(g)
    if not xs:
        return ItemResult(key, False, "no codominated vertex")
    res = ItemResult(key, True, subcases=len(xs))
    a = graph_a(g)
    for x in xs:
        a_del = graph_a(g.delete_vertex(x))
        a_nbr = graph_a(g.delete_closed_neighborhood(x))
        if not (a_del <= a and a_nbr + 1 <= a):
            res.failures.append(_fail(key, f"a(G\\x)<=a(G) and a(G\\N[x])+1<=a(G) at {_vname(x)}",
                                      f"a(G)={a}, a(G\\x)={a_del}, a(G\\N[x])={a_nbr}", "L3"))
    return res


def _arm_L4(g: Graph, field: FieldSpec) -> ItemResult:
    key = g.to_graph6()
    if g.n == 0:
        return ItemResult(key, False, "graph has no vertices")
    res = ItemResult(key, True, subcases=g.n)
    r = graph_reg(g, field)
    res.observation = r
    for x in range(g.n):
        r_del = graph_reg(g.delete_vertex(x), field)
        r_nbr = graph_reg(g.delete_closed_neighborhood(x), field) + 1
        if r > max(r_del, r_nbr) or r not in (r_del, r_nbr):
            res.failures.append(_fail(key, f"reg in {{{r_del}, {r_nbr}}} at {_vname(x)}", f"reg={r}", "L4"))
    return res


def _arm_T2(g: Graph, field: FieldSpec) -> ItemResult:
    key = g.to_graph6()
    r, a = graph_reg(g, field), graph_a(g)
    res = ItemResult(key, False, "no codominated vertex with reg = a on both minors", observation=(r, a))
    if r < a:
        res.checked = True
        res.reason = ""
        res.failures.append(_fail(key, f"reg(R/I(G)) >= a(G)={a}", f"reg={r}", "T2", tag="lower_bound"))
    for x in gs.codominated_vertices(g):
        d, nb = g.delete_vertex(x), g.delete_closed_neighborhood(x)
        if graph_reg(d, field) == graph_a(d) and graph_reg(nb, field) == graph_a(nb):
            res.checked = True
            res.reason = ""
            res.subcases += 1
            if r != a:
                res.failures.append(_fail(key, f"reg=a(G)={a} via {_vname(x)}", f"reg={r}", "T2", tag="induction"))
    return res


def _arm_C2(g: Graph, field: FieldSpec, theorem: TheoremId) -> ItemResult:
    key = g.to_graph6()
    name, member = _C2_TEST[theorem]
    if not member(g, field):
        return ItemResult(key, False, f"not {name}")
    r, a = graph_reg(g, field), graph_a(g)
    res = ItemResult(key, True, subcases=1, observation=(r, a))
    if r != a:
        res.failures.append(_fail(key, f"reg(R/I(G)) = a(G) = {a}", f"reg={r}", theorem.value))
    return res


# ---------------------------------------------------------------------------
# ideal arms


def _ikey(ideal: MonomialIdeal) -> str:
    return json.dumps(ideal.to_json(), separators=(",", ":"))


def _squarefree_monomials(n: int):
    for m in range(1, 1 << n):
        yield tuple(m >> k & 1 for k in range(n))


def _arm_P0(ideal: MonomialIdeal, field: FieldSpec) -> ItemResult:
    key = _ikey(ideal)
    if not is_scm_ideal(ideal, field):
        return ItemResult(key, False, "I not SCM")
    res = ItemResult(key, True)
    for u in _squarefree_monomials(ideal.n):
        colon = colon_monomial(ideal, u)
        if colon.is_unit:
            continue
        res.subcases += 1
        if not is_scm_ideal(colon, field):
            res.failures.append(_fail(key, f"(I:{list(u)}) SCM", "not SCM", "P0", kind="ideal"))
    if not res.subcases:
        return ItemResult(key, False, "every colon is the unit ideal")
    return res


def _arm_P1(ideal: MonomialIdeal, field: FieldSpec) -> ItemResult:
    key = _ikey(ideal)
    if ideal.is_zero:
        return ItemResult(key, False, "zero ideal")
    if not is_unmixed(ideal):
        return ItemResult(key, False, "I not unmixed")
    delta = stanley_reisner(ideal)
    res = ItemResult(key, False, "no shedding vertex")
    for x in delta.vertices:
        dele, lk = delta.deletion(x), delta.link(1 << x)
        if any(lk.contains(f) for f in dele.facets):
            continue
        res.checked, res.reason = True, ""
        res.subcases += 1
        u = tuple(int(k == x) for k in range(ideal.n))
        colon = colon_monomial(ideal, u)
        plus = add_variable(ideal, x)
        link_ideal = add_variable(colon, x)
        for name, j in (("(I:x)", colon), ("(I,x)", plus), ("((I:x),x)", link_ideal)):
            if not is_unmixed(j):
                res.failures.append(_fail(key, f"{name} unmixed for x={_vname(x)}", "mixed", "P1", kind="ideal"))
    return res


def _arm_L1(ideal: MonomialIdeal, field: FieldSpec) -> ItemResult:
    key = _ikey(ideal)
    if ideal.is_zero:
        return ItemResult(key, False, "zero ideal has no associated primes")
    if not is_scm_ideal(ideal, field):
        return ItemResult(key, False, "I not SCM")
    want = min(ideal.n - p.height for p in associated_primes(ideal))
    got = betti_table(ideal, field).depth
    res = ItemResult(key, True, subcases=1, observation=got)
    if got != want:
        res.failures.append(_fail(key, f"depth={want}", f"depth={got}", "L1", kind="ideal"))
    return res


def _c1_partners(ideal: MonomialIdeal, seed: int, count: int) -> list[MonomialIdeal]:
    rng = random.Random(f"{seed}:{_ikey(ideal)}")
    out = []
    for _ in range(count):
        j = random_squarefree_ideal(rng, ideal.n, ideal.n)
        if not j.is_zero:
            out.append(j)
    return out


def c1_forced(i: MonomialIdeal, j: MonomialIdeal, field: FieldSpec = RATIONALS) -> tuple[int, int]:
    """``(depth R/I, depth R/(I:J))`` with no hypothesis check."""
    return betti_table(i, field).depth, betti_table(colon_ideal(i, j), field).depth


def _arm_C1(payload, field: FieldSpec, seed: int = 0, count: int = 3) -> ItemResult:
    ideal, partners = payload
    key = _ikey(ideal)
    if partners is None:
        partners = _c1_partners(ideal, seed, count)
    res = ItemResult(key, False, "no partner J with I:J proper and SCM")
    reasons = []
    for j in partners:
        colon = colon_ideal(ideal, j)
        if colon.is_unit:
            reasons.append(f"J={j}: I:J is the unit ideal")
            continue
        if not is_scm_ideal(colon, field):
            d_i, d_c = c1_forced(ideal, j, field)
            verdict = "holds" if d_i <= d_c else "violated"
            reasons.append(f"J={j}: I:J={colon} not SCM (forced: depth(R/I)={d_i}, depth(R/(I:J))={d_c}, {verdict})")
            continue
        res.checked, res.reason = True, ""
        res.subcases += 1
        d_i, d_c = c1_forced(ideal, j, field)
        if d_i > d_c:
            res.failures.append(_fail(key, f"depth(R/I) <= depth(R/(I:J)) for J={j}", f"{d_i} > {d_c}", "C1", kind="ideal"))
    if not res.checked:
        res.reason = "; ".join(reasons) or res.reason
    return res


# ---------------------------------------------------------------------------
# worked examples

EX1_EDGES = [(1, 2), (1, 4), (2, 3), (3, 4), (1, 5)]
EX2_EDGES = [(1, 2), (1, 4), (1, 5), (2, 3), (2, 7), (3, 4), (4, 5), (4, 7), (6, 7)]
EX3_I = "x1*x3\nx2*x4"
EX3_J = "x2*x3\nx1*x4"
EX3_COLON = "x1*x2\nx1*x4\nx2*x3\nx3*x4"


def example_graph_1() -> Graph:
    return Graph.from_edges_1based(5, EX1_EDGES)


def example_graph_2() -> Graph:
    return Graph.from_edges_1based(7, EX2_EDGES)


def example_3() -> tuple[MonomialIdeal, MonomialIdeal]:
    return parse_ideal_text(EX3_I, 4), parse_ideal_text(EX3_J, 4)


def _check_example(which: str, field: FieldSpec) -> ItemResult:
    res = ItemResult(which, True)

    def expect(label, want, got):
        res.subcases += 1
        if want != got:
            res.failures.append({"object": which, "expected": f"{label} = {want}", "got": f"{label} = {got}",
                                 "repro": "scm-lab examples"})

    if which == "EX1":
        g = example_graph_1()
        expect("is_scm(G)", True, graph_scm(g, field))
        expect("is_scm(G\\x5)", False, graph_scm(g.delete_vertex(4), field))
    elif which == "EX2":
        g = example_graph_2()
        expect("is_scm(G)", True, graph_scm(g, field))
        expect("is_shedding(x5)", True, gs.is_shedding_vertex(g, 4))
        expect("is_scm(G\\x5)", False, graph_scm(g.delete_vertex(4), field))
    elif which == "EX3":
        i, j = example_3()
        colon = colon_ideal(i, j)
        expect("I:J", str(parse_ideal_text(EX3_COLON, 4)), str(colon))
        expect("depth(R/I)", 2, betti_table(i, field).depth)
        expect("depth(R/(I:J))", 1, betti_table(colon, field).depth)
    elif which == "EX-C5":
        expect("is_scm(C5)", True, graph_scm(Graph.cycle(5), field))
        expect("is_scm(C4)", False, graph_scm(Graph.cycle(4), field))
    else:
        raise ValueError(f"unknown example {which!r}")
    return res


def run_paper_examples(field: FieldSpec = RATIONALS) -> VerificationReport:
    """All worked examples plus the 5-cycle / 4-cycle fixtures, in one report."""
    start = time.perf_counter()
    results = [_check_example(w, field) for w in ("EX1", "EX2", "EX3", "EX-C5")]
    report = _merge("EXAMPLES", field, results, None, None)
    report.wall_time = time.perf_counter() - start
    return report


# ---------------------------------------------------------------------------
# driver


def _run_item(args) -> ItemResult:
    theorem, payload, field, seed, pairs = args
    theorem = TheoremId(theorem)
    if theorem in IDEAL_ARMS:
        if theorem is TheoremId.C1:
            ideal_json, partners_json = payload
            ideal = MonomialIdeal.from_json(ideal_json)
            partners = None if partners_json is None else [MonomialIdeal.from_json(p) for p in partners_json]
            return _arm_C1((ideal, partners), field, seed, pairs)
        ideal = MonomialIdeal.from_json(payload)
        return {TheoremId.P0: _arm_P0, TheoremId.P1: _arm_P1, TheoremId.L1: _arm_L1}[theorem](ideal, field)
    g = from_graph6(payload)
    if theorem is TheoremId.T1:
        return _arm_T1(g, field)
    if theorem is TheoremId.COR_T1:
        return _arm_T1(g, field, cm_version=True)
    if theorem in C2_FAMILIES:
        return _arm_C2(g, field, theorem)
    arm = {
        TheoremId.L0: _arm_L0,
        TheoremId.P2: _arm_P2,
        TheoremId.L2: _arm_L2,
        TheoremId.L3: _arm_L3,
        TheoremId.L4: _arm_L4,
        TheoremId.T2: _arm_T2,
    }[theorem]
    return arm(g, field)


def _payloads(theorem: TheoremId, corpus: CorpusSpec, field: FieldSpec) -> list:
    if theorem in IDEAL_ARMS:
        items = []
        if theorem is TheoremId.C1 and corpus.ideal_pairs:
            for i, j in corpus.ideal_pairs:
                items.append((i.to_json(), [j.to_json()]))
        for ideal in corpus_ideals(corpus, field):
            items.append((ideal.to_json(), None) if theorem is TheoremId.C1 else ideal.to_json())
        return items
    return [g.to_graph6() for g in corpus_graphs(corpus, field)]


def _merge(theorem: str, field: FieldSpec, results: Iterable[ItemResult], seed, corpus) -> VerificationReport:
    report = VerificationReport(theorem=theorem, field=str(field), seed=seed, corpus=corpus)
    failures = []
    for idx, r in enumerate(results):
        if r.checked:
            report.instances_checked += 1
            report.subcases_checked += r.subcases
            for f in r.failures:
                failures.append((idx, f))
        else:
            report.skipped.append({"object": r.key, "reason": r.reason})
        for k, v in r.tallies.items():
            report.tallies[k] = report.tallies.get(k, 0) + v
        if r.observation is not None:
            report.observations[r.key] = r.observation
    report.failures = [f for _, f in sorted(failures, key=lambda t: t[0])]
    return report


def default_workers() -> int:
    return os.cpu_count() or 1


def verify(
    theorem: TheoremId | str,
    corpus: CorpusSpec | None = None,
    field: FieldSpec = RATIONALS,
    workers: int = 1,
) -> VerificationReport:
    """Check one result over a corpus; see the module docstring."""
    theorem = TheoremId.parse(theorem) if isinstance(theorem, str) else theorem
    corpus = corpus or CorpusSpec()
    start = time.perf_counter()
    if theorem in EXAMPLE_ARMS:
        results = [_check_example(theorem.value, field)]
        report = _merge(theorem.value, field, results, None, None)
    else:
        payloads = _payloads(theorem, corpus, field)
        args = [(theorem.value, p, field, corpus.seed, corpus.pairs_per_ideal) for p in payloads]
        if workers > 1 and len(args) > 1:
            with ProcessPoolExecutor(max_workers=workers) as pool:
                results = list(pool.map(_run_item, args, chunksize=max(1, len(args) // (workers * 8))))
        else:
            results = [_run_item(a) for a in args]
        report = _merge(theorem.value, field, results, corpus.seed, corpus.describe())
    report.wall_time = time.perf_counter() - start
    return report


# ---------------------------------------------------------------------------
# field audit


@dataclass
class FieldAudit:
    reports: dict[str, dict[str, VerificationReport]]
    discrepancies: list[dict]

    @property
    def completed(self) -> bool:
        return all(r is not None for by_field in self.reports.values() for r in by_field.values())


def compare_reports(a: VerificationReport, b: VerificationReport) -> list[dict]:
    """Per-object differences between two runs of the same theorem."""
    out = []
    keys = sorted(set(a.observations) | set(b.observations))
    for k in keys:
        va, vb = a.observations.get(k), b.observations.get(k)
        if _normal(va) != _normal(vb):
            out.append({"theorem": a.theorem, "object": k, a.field: va, b.field: vb})
    skipped_a = {s["object"] for s in a.skipped}
    skipped_b = {s["object"] for s in b.skipped}
    for k in sorted(skipped_a ^ skipped_b):
        out.append({"theorem": a.theorem, "object": k, "note": "hypothesis status differs between fields"})
    if a.passed != b.passed:
        out.append({"theorem": a.theorem, "object": None, a.field: a.passed, b.field: b.passed,
                    "note": "verdict differs between fields"})
    return out


def _normal(v):
    return json.loads(json.dumps(v))


def audit_fields(
    theorems: Iterable[TheoremId | str],
    corpus: CorpusSpec,
    fields: tuple[FieldSpec, FieldSpec] = (RATIONALS, GF2),
    workers: int = 1,
) -> FieldAudit:
    """Run every theorem over two fields and list the disagreements.

    Disagreements are findings, not failures: the result may genuinely
    depend on the characteristic.
    """
    reports: dict[str, dict[str, VerificationReport]] = {}
    found: list[dict] = []
    for t in theorems:
        t = TheoremId.parse(t) if isinstance(t, str) else t
        runs = {str(k): verify(t, corpus, k, workers) for k in fields}
        reports[t.value] = runs
        first, second = (runs[str(k)] for k in fields)
        found.extend(compare_reports(first, second))
    return FieldAudit(reports, found)
