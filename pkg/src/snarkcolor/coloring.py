"""Edge colorings of multipoles: verification, schemes, Kempe chains, search.

Colors are the integers 1..5.  A coloring maps every edge and semiedge id to
a color; the two halves of an isolated edge must agree.  An edge uv is poor
when the six colors around it span 3 values, rich when they span all 5; the
in-between span of 4 is tracked as its own diagnostic class.  A proper
coloring is normal when every full edge is poor or rich.
"""

from __future__ import annotations

import time
from typing import Iterable, Iterator, Mapping, NamedTuple

from .multipole import Multipole

COLORS = (1, 2, 3, 4, 5)


class ColoringError(ValueError):
    pass


class SearchTimeout(Exception):
    """Budget exhausted before the search space was; not a negative answer."""


class Scheme(NamedTuple):
    """What a semiedge sees at its vertex: own color plus the other two."""

    primary: int
    pair: frozenset

    def complement_pair(self) -> frozenset:
        return frozenset(COLORS) - {self.primary} - self.pair


def make_scheme(primary: int, pair: Iterable[int]) -> Scheme:
    p = frozenset(pair)
    if primary in p or len(p) != 2:
        raise ColoringError(f"bad scheme ({primary}, {set(pair)})")
    return Scheme(primary, p)


def scheme(m: Multipole, colors: Mapping[str, int], sid: str) -> Scheme:
    if sid not in m.semi_vertex:
        raise ColoringError(f"{sid} is not a vertex-incident semiedge")
    v = m.semi_vertex[sid]
    others = [colors[e] for e in m.incidences(v) if e != sid]
    if len(others) != 2:
        raise ColoringError(f"vertex {v} does not have exactly 3 incidences")
    return make_scheme(colors[sid], others)


def consistent(a: Scheme, b: Scheme) -> bool:
    if a.primary != b.primary:
        return False
    return a.pair == b.pair or a.pair == b.complement_pair()


class VerificationReport:
    def __init__(
        self,
        proper: bool,
        classes: dict[str, str],
        clashes: tuple[str, ...] = (),
    ):
        self.proper = proper
        self.classes = classes
        self.clashes = clashes
        self.poor_count = sum(1 for c in classes.values() if c == "poor")
        self.rich_count = sum(1 for c in classes.values() if c == "rich")
        self.abnormal = tuple(e for e, c in classes.items() if c == "abnormal")

    @property
    def normal(self) -> bool:
        return self.proper and not self.abnormal

    def to_json_obj(self) -> dict:
        return {
            "proper": self.proper,
            "normal": self.normal,
            "poor_count": self.poor_count,
            "rich_count": self.rich_count,
            "abnormal": list(self.abnormal),
            "classes": dict(self.classes),
            "clashes": list(self.clashes),
        }

    def __repr__(self) -> str:
        verdict = "normal" if self.normal else ("proper" if self.proper else "improper")
        return (
            f"VerificationReport({verdict}, poor={self.poor_count}, "
            f"rich={self.rich_count}, abnormal={len(self.abnormal)})"
        )


def verify(m: Multipole, colors: Mapping[str, int]) -> VerificationReport:
    """Classify every full edge of a totally colored multipole.

    Raises on partial colorings, out-of-range colors, or isolated-edge halves
    that disagree; properness failures are reported, not raised.
    """
    for elem in m.elements:
        if elem not in colors:
            raise ColoringError(f"element {elem} is uncolored")
        if colors[elem] not in COLORS:
            raise ColoringError(f"color {colors[elem]} out of range on {elem}")
    for s, t in m.semi_partner.items():
        if colors[s] != colors[t]:
            raise ColoringError(f"isolated edge halves {s}, {t} colored differently")

    clashes = []
    for v in m.vertices:
        seen = [colors[e] for e in m.incidences(v)]
        if len(set(seen)) != len(seen):
            clashes.append(v)

    palette = {
        v: frozenset(colors[e] for e in m.incidences(v)) for v in m.vertices
    }
    classes = {}
    for eid, (u, v) in m.edges.items():
        span = len(palette[u] | palette[v])
        classes[eid] = {3: "poor", 4: "abnormal", 5: "rich"}.get(span, "abnormal")
    return VerificationReport(not clashes, classes, tuple(clashes))


def _pair_subgraph_step(
    m: Multipole, colors: Mapping[str, int], pair: frozenset, v: str, avoid: str
) -> str | None:
    """The unique other element at v colored within pair, if any."""
    for e in m.incidences(v):
        if e != avoid and colors[e] in pair:
            return e
    return None


def kempe_component(
    m: Multipole, colors: Mapping[str, int], start: str, pair: Iterable[int]
) -> tuple[str, ...]:
    """Maximal two-colored path or cycle of elements through start.

    Elements are returned in walk order; for a path the walk begins at the
    end reached from start's canonically-first endpoint, so the result is
    deterministic.  An isolated edge is its own two-element component.
    """
    pset = frozenset(pair)
    if len(pset) != 2:
        raise ColoringError(f"need exactly two colors, got {sorted(pset)}")
    if colors[start] not in pset:
        raise ColoringError(f"start {start} not colored within {sorted(pset)}")
    if start in m.semi_partner:
        return (start, m.semi_partner[start])

    def walk(from_vertex: str, via: str) -> tuple[list[str], bool]:
        out = []
        v, prev = from_vertex, via
        while True:
            nxt = _pair_subgraph_step(m, colors, pset, v, prev)
            if nxt == start:
                return out, True  # closed a cycle
            if nxt is None:
                return out, False
            out.append(nxt)
            ends = m.element_vertices(nxt)
            if len(ends) < 2:
                return out, False  # ran onto a semiedge
            v = ends[0] if ends[1] == v else ends[1]
            prev = nxt

    ends = m.element_vertices(start)
    if not ends:
        return (start,)
    if len(ends) == 1:
        return (start, *walk(ends[0], start)[0])
    u, v = ends
    if m._pos[v] < m._pos[u]:
        u, v = v, u
    forth, closed = walk(v, start)
    if closed:
        return (start, *forth)
    back, _ = walk(u, start)
    return tuple(reversed(back)) + (start,) + tuple(forth)


def kempe_swap(
    m: Multipole,
    colors: Mapping[str, int],
    component: Iterable[str],
    pair: Iterable[int] | None = None,
) -> dict[str, int]:
    """Exchange the two chain colors on exactly the component's elements.

    The pair is inferred from the component when it alternates; a component
    carrying a single color (one lone element, or an isolated edge) needs
    the pair given explicitly.
    """
    comp = tuple(component)
    present = {colors[e] for e in comp}
    if pair is not None:
        pset = set(pair)
        if len(pset) != 2 or not present <= pset:
            raise ColoringError(f"component colors {sorted(present)} not within {sorted(pset)}")
    elif len(present) == 2:
        pset = present
    else:
        raise ColoringError("cannot infer the color pair from a one-colored component")
    a, b = sorted(pset)
    out = dict(colors)
    for e in comp:
        out[e] = a if colors[e] == b else b
    for s in comp:
        if s in m.semi_partner and m.semi_partner[s] not in comp:
            raise ColoringError("component splits an isolated edge")
    return out


def _search_order(m: Multipole, seeds: Iterable[str]) -> list[str]:
    """Element order: DFS over vertices from the seed vertices, then the rest."""
    order: list[str] = []
    placed: set[str] = set()
    seen_v: set[str] = set()

    def visit(v: str):
        stack = [v]
        while stack:
            w = stack.pop()
            if w in seen_v:
                continue
            seen_v.add(w)
            nbrs = []
            for e in m.incidences(w):
                if e not in placed:
                    placed.add(e)
                    order.append(e)
                ends = m.element_vertices(e)
                for t in ends:
                    if t != w and t not in seen_v:
                        nbrs.append(t)
            stack.extend(reversed(nbrs))

    for s in seeds:
        if s in m.semi_vertex and m.semi_vertex[s] not in seen_v:
            visit(m.semi_vertex[s])
    for v in m.vertices:
        if v not in seen_v:
            visit(v)
    for e in m.elements:
        if e not in placed:
            placed.add(e)
            order.append(e)
    return order


def search_normal_5(
    m: Multipole,
    constraints: Mapping[str, Scheme] | None = None,
    fixed: Mapping[str, int] | None = None,
    budget_ms: int = 60000,
    dedup: bool = False,
) -> Iterator[dict[str, int]]:
    """Yield every normal coloring satisfying the given boundary constraints.

    constraints maps semiedge ids to schemes; a coloring qualifies when each
    constrained semiedge has the scheme's primary color and its vertex pair
    equals the scheme's pair or that pair's complement.  fixed pins element
    colors outright.  Exhaustion simply ends the stream; exceeding the time
    budget raises SearchTimeout from within it.  With dedup=True only one
    representative per color-permutation class is yielded.
    """
    constraints = dict(constraints or {})
    fixed = dict(fixed or {})
    for sid in constraints:
        if sid not in m.semi_vertex:
            raise ColoringError(f"constraint on non-semiedge {sid}")

    # Isolated-edge halves share one decision; map each to a representative.
    rep: dict[str, str] = {}
    for e in m.elements:
        if e in m.semi_partner:
            p = m.semi_partner[e]
            r = e if m.elements.index(e) <= m.elements.index(p) else p
            rep[e] = r
        else:
            rep[e] = e

    order_all = _search_order(m, constraints)
    order = [e for e in order_all if rep[e] == e]
    idx = {e: i for i, e in enumerate(order)}

    # For normality pruning: edges to check when an element is assigned last
    # among the 6-7 elements around a full edge.
    around: dict[str, tuple[str, ...]] = {}
    for eid, (u, v) in m.edges.items():
        elems = {rep[x] for x in m.incidences(u) + m.incidences(v)}
        around[eid] = tuple(elems)
    watchers: dict[str, list[str]] = {e: [] for e in order}
    for eid, elems in around.items():
        last = max(elems, key=idx.__getitem__)
        watchers[last].append(eid)

    con_by_vertex: dict[str, list[str]] = {}
    for sid in constraints:
        con_by_vertex.setdefault(m.semi_vertex[sid], []).append(sid)

    deadline = time.monotonic() + budget_ms / 1000.0
    colors: dict[str, int] = {}
    seen_canon: set[tuple] = set()
    tick = 0

    def full(e: str) -> int | None:
        r = rep.get(e, e)
        return colors.get(r)

    def vertex_ok(v: str) -> bool:
        seen = []
        for e in m.incidences(v):
            c = full(e)
            if c is not None:
                if c in seen:
                    return False
                seen.append(c)
        # scheme constraints at this vertex
        for sid in con_by_vertex.get(v, ()):
            sc = constraints[sid]
            c = full(sid)
            if c is not None and c != sc.primary:
                return False
            others = [full(e) for e in m.incidences(v) if e != sid]
            known = [c2 for c2 in others if c2 is not None]
            allowed = sc.pair | sc.complement_pair()
            if any(c2 not in allowed for c2 in known):
                return False
            if len(known) == 2:
                got = frozenset(known)
                if got != sc.pair and got != sc.complement_pair():
                    return False
        return True

    def assign_ok(e: str) -> bool:
        for v in m.element_vertices(e):
            if not vertex_ok(v):
                return False
        if e in m.semi_partner:
            for v in m.element_vertices(m.semi_partner[e]):
                if not vertex_ok(v):
                    return False
        for eid in watchers.get(e, ()):
            u, v = m.edges[eid]
            span = set()
            for x in m.incidences(u) + m.incidences(v):
                c = full(x)
                if c is None:
                    break
                span.add(c)
            else:
                if len(span) == 4:
                    return False
        return True

    def canonical(c: dict[str, int]) -> tuple:
        ren: dict[int, int] = {}
        out = []
        for e in order:
            col = c[e]
            if col not in ren:
                ren[col] = len(ren) + 1
            out.append(ren[col])
        return tuple(out)

    def extend(k: int) -> Iterator[dict[str, int]]:
        nonlocal tick
        tick += 1
        if tick % 256 == 0 and time.monotonic() > deadline:
            raise SearchTimeout(f"budget {budget_ms} ms exceeded")
        if k == len(order):
            result = {e: colors[rep[e]] for e in m.elements}
            if dedup:
                key = canonical(colors)
                if key in seen_canon:
                    return
                seen_canon.add(key)
            yield result
            return
        e = order[k]
        choices = (fixed[e],) if e in fixed else COLORS
        if e in m.semi_partner and m.semi_partner[e] in fixed:
            pc = fixed[m.semi_partner[e]]
            choices = tuple(c for c in choices if c == pc)
        for c in choices:
            colors[e] = c
            if assign_ok(e):
                yield from extend(k + 1)
            del colors[e]

    return extend(0)


def is_3_edge_colorable(g: Multipole, budget_ms: int = 60000) -> bool:
    """Exact proper-3-coloring existence for a cubic graph, by backtracking.

    Raises SearchTimeout when the budget runs out before an answer is known.
    """
    if not g.is_graph:
        raise ColoringError("3-edge-colorability check expects a graph")
    if not g.vertices:
        return True
    order = _search_order(g, ())
    deadline = time.monotonic() + budget_ms / 1000.0
    colors: dict[str, int] = {}

    # fix the colors around the first vertex: any proper coloring permutes to this
    first = g.vertices[0]
    pinned = {e: i + 1 for i, e in enumerate(g.incidences(first))}
    if len(pinned) != 3:
        raise ColoringError("graph is not cubic")

    tick = 0

    def ok(e: str) -> bool:
        for v in g.edges[e]:
            seen = [colors[x] for x in g.incidences(v) if x in colors]
            if len(set(seen)) != len(seen):
                return False
        return True

    def extend(k: int) -> bool:
        nonlocal tick
        tick += 1
        if tick % 1024 == 0 and time.monotonic() > deadline:
            raise SearchTimeout(f"budget {budget_ms} ms exceeded")
        if k == len(order):
            return True
        e = order[k]
        for c in (pinned[e],) if e in pinned else (1, 2, 3):
            colors[e] = c
            if ok(e) and extend(k + 1):
                return True
            del colors[e]
        return False

    return extend(0)


def coloring_to_json_obj(m: Multipole, colors: Mapping[str, int]) -> dict:
    return {
        "colors": {e: colors[e] for e in m.edges},
        "semiedge_colors": {s: colors[s] for s in m.semiedge_ids},
    }
