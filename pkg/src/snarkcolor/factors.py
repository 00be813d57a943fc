"""Spanning even subgraphs: perfect matchings, 2-factors, Hamiltonian cycles.

A 2-factor keeps every vertex at degree exactly 2, so on a graph of maximum
degree 3 its deleted edge set is a perfect matching on the degree-3 vertices
using only edges joining two of them.  On a cubic graph that degenerates to
an ordinary perfect matching, making 2-factors and perfect matchings
complementary in bijection.
"""

from __future__ import annotations

import time
from typing import Iterable, Iterator, Sequence

from .coloring import SearchTimeout
from .multipole import Multipole, MultipoleError


class FactorError(ValueError):
    pass


def _canon_cycle(pos: dict[str, int], cyc: Sequence[str]) -> tuple[str, ...]:
    """Rotate to the least vertex and pick the lexicographically lesser direction."""
    n = len(cyc)
    i = min(range(n), key=lambda k: pos[cyc[k]])
    fwd = tuple(cyc[(i + k) % n] for k in range(n))
    rev = tuple(cyc[(i - k) % n] for k in range(n))
    return fwd if [pos[v] for v in fwd] <= [pos[v] for v in rev] else rev


class TwoFactor:
    """Vertex-disjoint cycles covering a vertex set, with their edge ids."""

    def __init__(self, cycles: Iterable[Sequence[str]], edge_ids: Iterable[str]):
        self.cycles = tuple(tuple(c) for c in cycles)
        self.edge_ids = frozenset(edge_ids)

    @property
    def vertices(self) -> frozenset:
        return frozenset(v for c in self.cycles for v in c)

    def cycle_through(self, v: str) -> tuple[str, ...]:
        for c in self.cycles:
            if v in c:
                return c
        raise FactorError(f"{v} not covered by this 2-factor")

    def __eq__(self, other) -> bool:
        return isinstance(other, TwoFactor) and self.cycles == other.cycles

    def __hash__(self) -> int:
        return hash(self.cycles)

    def __repr__(self) -> str:
        return f"TwoFactor({[len(c) for c in self.cycles]} cycles)"

    def to_json_obj(self) -> dict:
        return {"cycles": [list(c) for c in self.cycles]}


def _decompose(g: Multipole, eids: Iterable[str]) -> TwoFactor:
    """Split a degree-2 edge set into canonical cycles."""
    eset = set(eids)
    adj: dict[str, list[str]] = {}
    for eid in g.edges:  # iterate in id order so walks are deterministic
        if eid not in eset:
            continue
        u, v = g.edges[eid]
        adj.setdefault(u, []).append(eid)
        adj.setdefault(v, []).append(eid)
    for v, inc in adj.items():
        if len(inc) != 2:
            raise FactorError(f"vertex {v} has degree {len(inc)} in the factor")
    cycles = []
    unused = set(eset)
    for start in g.vertices:
        if start not in adj:
            continue
        first = next((e for e in adj[start] if e in unused), None)
        if first is None:
            continue
        cyc = [start]
        eid, v = first, start
        while eid in unused:
            unused.discard(eid)
            v = g.other_end(eid, v)
            if v == start:
                break
            cyc.append(v)
            eid = next(e for e in adj[v] if e in unused)
        cycles.append(_canon_cycle(g._pos, cyc))
    cycles.sort(key=lambda c: g._pos[c[0]])
    return TwoFactor(cycles, eset)


def two_factor_from_cycles(g: Multipole, cycles: Iterable[Sequence[str]]) -> TwoFactor:
    """Build a 2-factor from closed vertex walks, validating every edge."""
    eids = []
    for cyc in cycles:
        cyc = list(cyc)
        if len(cyc) < 3:
            raise FactorError(f"cycle too short: {cyc}")
        if len(set(cyc)) != len(cyc):
            raise FactorError(f"repeated vertex in cycle: {cyc}")
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            eid = g.edge_between(a, b)
            if eid is None:
                raise FactorError(f"no edge between {a} and {b}")
            eids.append(eid)
    if len(set(eids)) != len(eids):
        raise FactorError("cycles overlap on an edge")
    return _decompose(g, eids)


def perfect_matchings(g: Multipole) -> Iterator[tuple[str, ...]]:
    """Every matching covering all vertices, deterministically ordered."""
    if not g.is_graph:
        raise FactorError("matching enumeration expects a graph")
    yield from _core_matchings(g, set(g.vertices))


def _core_matchings(g: Multipole, core: set[str]) -> Iterator[tuple[str, ...]]:
    """Matchings covering exactly `core`, using edges inside core only."""
    order = [v for v in g.vertices if v in core]
    covered: set[str] = set()
    picked: list[str] = []

    def extend(i: int) -> Iterator[tuple[str, ...]]:
        while i < len(order) and order[i] in covered:
            i += 1
        if i == len(order):
            yield tuple(picked)
            return
        v = order[i]
        for eid in g.incidences(v):
            if eid not in g.edges:
                continue
            w = g.other_end(eid, v)
            if w in covered or w not in core:
                continue
            covered.update((v, w))
            picked.append(eid)
            yield from extend(i + 1)
            picked.pop()
            covered.difference_update((v, w))

    return extend(0)


def two_factors(g: Multipole) -> Iterator[TwoFactor]:
    """All 2-factors of a graph with degrees 2 and 3 only.

    Deleted edge sets are exactly the matchings pairing up the degree-3
    vertices among themselves, so each yielded factor is the complement of
    one such matching.  A vertex of degree < 2 admits no 2-factor at all.
    """
    if not g.is_graph:
        raise FactorError("2-factor enumeration expects a graph")
    degs = {v: g.degree(v) for v in g.vertices}
    if any(d > 3 for d in degs.values()):
        raise FactorError("2-factor enumeration supports maximum degree 3")
    if any(d < 2 for d in degs.values()):
        return
    core = {v for v, d in degs.items() if d == 3}
    all_edges = set(g.edges)
    for matching in _core_matchings(g, core):
        yield _decompose(g, all_edges - set(matching))


def hamiltonian_cycle(g: Multipole, budget_ms: int = 60000) -> tuple[str, ...] | None:
    """Some Hamiltonian cycle in canonical search order, or None if none exists."""
    if not g.is_graph:
        raise FactorError("hamiltonian search expects a graph")
    n = len(g.vertices)
    if n == 0:
        return None
    if n == 1:
        return None
    deadline = time.monotonic() + budget_ms / 1000.0
    start = g.vertices[0]
    path = [start]
    on_path = {start}
    tick = 0

    def extend() -> bool:
        nonlocal tick
        tick += 1
        if tick % 1024 == 0 and time.monotonic() > deadline:
            raise SearchTimeout(f"budget {budget_ms} ms exceeded")
        v = path[-1]
        if len(path) == n:
            return g.edge_between(v, start) is not None
        for w in g.neighbors(v):
            if w in on_path:
                continue
            path.append(w)
            on_path.add(w)
            if extend():
                return True
            path.pop()
            on_path.discard(w)
        return False

    if extend():
        return _canon_cycle(g._pos, path)
    return None


class RightGood:
    """A 2-factor of H - y whose single odd cycle passes through x."""

    def __init__(self, j: int, cycle_x: tuple[str, ...]):
        self.j = j
        self.cycle_x = cycle_x

    def __repr__(self) -> str:
        return f"RightGood(j={self.j}, |C_x|={len(self.cycle_x)})"


class LeftGood:
    """A 2-factor of H with exactly two odd cycles, one through x, one through y."""

    def __init__(self, j: int, k: int, cycle_x: tuple[str, ...], cycle_y: tuple[str, ...]):
        self.j = j
        self.k = k
        self.cycle_x = cycle_x
        self.cycle_y = cycle_y

    def __repr__(self) -> str:
        return f"LeftGood(j={self.j}, k={self.k})"


class Neither:
    def __init__(self, reason: str):
        self.reason = reason

    def __repr__(self) -> str:
        return f"Neither({self.reason})"


def _missing_index(g: Multipole, f: TwoFactor, v: str) -> int:
    """1-based position of v's neighbor whose edge the factor omits."""
    absent = []
    for i, n in enumerate(g.neighbors(v), start=1):
        if g.edge_between(v, n) not in f.edge_ids:
            absent.append(i)
    if len(absent) != 1:
        raise FactorError(f"{v} is missing {len(absent)} incident edges, expected 1")
    return absent[0]


def classify_factor(f: TwoFactor, h: Multipole, x: str, y: str):
    """Sort a factor into the right-good or left-good family, or Neither.

    A factor spanning all of h qualifies as left-good when its odd cycles
    are exactly two, split between x and y.  A factor spanning h minus y
    qualifies as right-good when its only odd cycle passes through x.
    """
    verts = f.vertices
    all_v = frozenset(h.vertices)
    odd = [c for c in f.cycles if len(c) % 2]
    if verts == all_v:
        if len(odd) != 2:
            return Neither(f"{len(odd)} odd cycles, need exactly 2")
        cx = [c for c in odd if x in c]
        cy = [c for c in odd if y in c]
        if not cx or not cy or cx[0] is cy[0]:
            return Neither("odd cycles do not separate x and y")
        j = _missing_index(h, f, x)
        k = _missing_index(h, f, y)
        return LeftGood(j, k, cx[0], cy[0])
    if verts == all_v - {y}:
        if len(odd) != 1:
            return Neither(f"{len(odd)} odd cycles, need exactly 1")
        if x not in odd[0]:
            return Neither("odd cycle avoids x")
        j = _missing_index(h, f, x)
        return RightGood(j, odd[0])
    raise FactorError("factor spans neither V(h) nor V(h) minus y")
