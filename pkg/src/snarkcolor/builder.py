"""Build concrete cubic graphs from superposition descriptions.

A superposition description names a base graph, one or more vertex-disjoint
cycles in it, and per cycle position a gadget kind plus a superedge slot
(source snark, removed vertex pair, orientation, 3-permutation, dock index).
Cycle vertices become junction gadgets, cycle edges become superedge bodies,
and everything off the cycles is carried over untouched.

At the junction entering position i, the right semiedges of the previous
slot are matched to the left semiedges of slot i through the permutation;
the matched pair at the dock index is subdivided by a junction vertex that
also picks up the base's third edge.  Kind "A" leaves the two remaining
pass-throughs as plain edges; kind "A'" subdivides both and joins the two
new vertices.  A twist at position i crosses those two non-dock matchings.
"""

from __future__ import annotations

import json
from typing import Iterable, Mapping

from .multipole import Multipole, from_graph6, to_graph6
from .snarks import Superedge, flower, petersen, superedge


class SpecError(ValueError):
    pass


_SNARK_CACHE: dict[str, Multipole] = {}


def resolve_snark(name: str) -> Multipole:
    """Turn a slot's snark field into a graph: named family or graph6."""
    if name not in _SNARK_CACHE:
        if name == "petersen":
            g = petersen()
        elif name.startswith("J") and name[1:].isdigit():
            g = flower(int(name[1:]))
        else:
            g = from_graph6(name)
        _SNARK_CACHE[name] = g
    return _SNARK_CACHE[name]


class SuperedgeSlot:
    def __init__(self, snark: str, x: str, y: str, orientation: str = "xy",
                 p: tuple[int, int, int] = (1, 2, 3), d: int = 1):
        if orientation not in ("xy", "yx"):
            raise SpecError(f"slot orientation {orientation!r}")
        if sorted(p) != [1, 2, 3]:
            raise SpecError(f"slot permutation {p} is not a bijection on 1..3")
        if d not in (1, 2, 3):
            raise SpecError(f"slot dock {d} out of range")
        self.snark = snark
        self.x = x
        self.y = y
        self.orientation = orientation
        self.p = tuple(p)
        self.d = d

    @property
    def left_owner(self) -> str:
        return self.x if self.orientation == "xy" else self.y

    @property
    def right_owner(self) -> str:
        return self.y if self.orientation == "xy" else self.x

    def apply_p(self, q: int) -> int:
        return self.p[q - 1]

    def invert_p(self, j: int) -> int:
        return self.p.index(j) + 1

    def to_json_obj(self) -> dict:
        return {
            "snark": self.snark,
            "x": self.x,
            "y": self.y,
            "orientation": self.orientation,
            "p": list(self.p),
            "d": self.d,
        }

    def replace(self, **kw) -> "SuperedgeSlot":
        fields = self.to_json_obj()
        fields["p"] = tuple(fields["p"])
        fields.update(kw)
        return SuperedgeSlot(**fields)


class SuperpositionSpec:
    """Base graph + cycle selection + per-position gadget descriptions.

    kinds and slots are flat lists over all cycles in order; twists is a set
    of global positions.  Position i's slot spans the cycle edge leaving the
    i-th cycle vertex; the junction gadget replaces the vertex itself.
    """

    def __init__(
        self,
        base: Multipole,
        cycles: Iterable[Iterable[str]],
        kinds: Iterable[str],
        slots: Iterable[SuperedgeSlot],
        twists: Iterable[int] = (),
        base_name: str | None = None,
    ):
        self.base = base
        self.cycles = tuple(tuple(c) for c in cycles)
        self.kinds = tuple(kinds)
        self.slots = tuple(slots)
        self.twists = frozenset(twists)
        self.base_name = base_name
        self.total = sum(len(c) for c in self.cycles)
        if len(self.kinds) != self.total or len(self.slots) != self.total:
            raise SpecError(
                f"need {self.total} kinds and slots, got "
                f"{len(self.kinds)} and {len(self.slots)}"
            )
        if any(k not in ("A", "A'") for k in self.kinds):
            raise SpecError("kinds must be 'A' or 'A\\''")
        if any(i not in range(self.total) for i in self.twists):
            raise SpecError("twist index out of range")
        # global index bookkeeping
        self._cycle_of: dict[int, int] = {}
        self._offset: list[int] = []
        off = 0
        for ci, cyc in enumerate(self.cycles):
            self._offset.append(off)
            for t in range(len(cyc)):
                self._cycle_of[off + t] = ci
            off += len(cyc)

    def cycle_of(self, i: int) -> int:
        return self._cycle_of[i]

    def vertex_at(self, i: int) -> str:
        ci = self._cycle_of[i]
        return self.cycles[ci][i - self._offset[ci]]

    def prev_index(self, i: int) -> int:
        ci = self._cycle_of[i]
        off, n = self._offset[ci], len(self.cycles[ci])
        return off + (i - off - 1) % n

    def next_index(self, i: int) -> int:
        ci = self._cycle_of[i]
        off, n = self._offset[ci], len(self.cycles[ci])
        return off + (i - off + 1) % n

    def positions_of_cycle(self, ci: int) -> range:
        return range(self._offset[ci], self._offset[ci] + len(self.cycles[ci]))

    def non_dock(self, i: int) -> tuple[int, int]:
        a, b = sorted({1, 2, 3} - {self.slots[i].d})
        return a, b

    def matched_right(self, i: int, j: int) -> int:
        """Right position of the previous slot matched to left position j at i."""
        prev = self.slots[self.prev_index(i)]
        if i in self.twists and j != self.slots[i].d:
            j1, j2 = self.non_dock(i)
            j = j2 if j == j1 else j1
        return prev.invert_p(j)

    def replace(self, **kw) -> "SuperpositionSpec":
        fields = dict(
            base=self.base,
            cycles=self.cycles,
            kinds=self.kinds,
            slots=self.slots,
            twists=self.twists,
            base_name=self.base_name,
        )
        fields.update(kw)
        return SuperpositionSpec(**fields)

    def to_json_obj(self) -> dict:
        return {
            "base": self.base_name or to_graph6(self.base),
            "cycles": [list(c) for c in self.cycles],
            "kinds": list(self.kinds),
            "slots": [s.to_json_obj() for s in self.slots],
            "twists": sorted(self.twists),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), indent=2, sort_keys=True)


def spec_from_json_obj(obj: Mapping) -> SuperpositionSpec:
    base_name = obj["base"]
    base = resolve_snark(base_name)
    slots = [
        SuperedgeSlot(
            s["snark"], s["x"], s["y"], s.get("orientation", "xy"),
            tuple(s.get("p", (1, 2, 3))), s.get("d", 1),
        )
        for s in obj["slots"]
    ]
    return SuperpositionSpec(
        base, obj["cycles"], obj["kinds"], slots, obj.get("twists", ()), base_name
    )


def spec_from_json(text: str) -> SuperpositionSpec:
    return spec_from_json_obj(json.loads(text))


def twist(spec: SuperpositionSpec, x: Iterable[int]) -> SuperpositionSpec:
    """Symmetric difference on the twist set; an involution."""
    return spec.replace(twists=spec.twists ^ frozenset(x))


def normalize_twists(spec: SuperpositionSpec) -> SuperpositionSpec:
    """Fold every twist into the preceding slot's permutation.

    Crossing the two non-dock matchings equals composing the previous
    permutation with the transposition of those two left indices, so the
    built graph is unchanged (asserted by tests, not here).
    """
    if not spec.twists:
        return spec
    slots = list(spec.slots)
    for i in sorted(spec.twists):
        j1, j2 = spec.non_dock(i)
        swap = {j1: j2, j2: j1}
        prev = spec.prev_index(i)
        old = slots[prev]
        slots[prev] = old.replace(p=tuple(swap.get(old.apply_p(q), old.apply_p(q)) for q in (1, 2, 3)))
    return spec.replace(slots=tuple(slots), twists=frozenset())


def validate(spec: SuperpositionSpec, check_snarks: bool = False,
             budget_ms: int = 60000) -> list[str]:
    """Collect diagnostics; entries starting with "error:" block build()."""
    out: list[str] = []
    base = spec.base
    base_vs = set(base.vertices)
    if not base.is_graph:
        out.append("error: base has semiedges")
    if check_snarks and base.is_graph:
        from .coloring import is_3_edge_colorable

        if is_3_edge_colorable(base, budget_ms=budget_ms):
            out.append("warning: base graph is 3-edge-colorable")
    seen: set[str] = set()
    for cyc in spec.cycles:
        if len(cyc) < 3:
            out.append(f"error: cycle {cyc} too short")
            continue
        if len(set(cyc)) != len(cyc):
            out.append(f"error: cycle {cyc} repeats a vertex")
            continue
        if set(cyc) & seen:
            out.append(f"error: cycles overlap at {sorted(set(cyc) & seen)}")
        seen.update(cyc)
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            if a not in base_vs or b not in base_vs:
                out.append(f"error: cycle vertex {a if a not in base_vs else b} not in base")
            elif base.edge_between(a, b) is None:
                out.append(f"error: cycle skips adjacency {a}-{b}")
    for v in seen:
        if v in base_vs and base.degree(v) != 3:
            out.append(f"error: cycle vertex {v} is not cubic in the base")
    if base.is_graph and not base.is_bridgeless():
        out.append("warning: base graph has a bridge")
    for i, slot in enumerate(spec.slots):
        try:
            h = resolve_snark(slot.snark)
        except Exception as exc:
            out.append(f"error: slot {i} snark {slot.snark!r}: {exc}")
            continue
        h_vs = set(h.vertices)
        for v in (slot.x, slot.y):
            if v not in h_vs:
                out.append(f"error: slot {i} vertex {v} not in {slot.snark}")
        if slot.x in h_vs and slot.y in h_vs:
            if slot.x == slot.y:
                out.append(f"error: slot {i} removes one vertex twice")
            elif h.edge_between(slot.x, slot.y) is not None:
                out.append(f"error: slot {i} pair {slot.x},{slot.y} adjacent")
            elif h.distance(slot.x, slot.y) < 3:
                out.append(f"warning: slot {i} pair {slot.x},{slot.y} at distance 2")
        if check_snarks:
            from .coloring import is_3_edge_colorable

            if is_3_edge_colorable(h, budget_ms=budget_ms):
                out.append(f"warning: slot {i} graph {slot.snark} is 3-edge-colorable")
    return out


class BuiltSuperposition:
    """The constructed graph plus maps back to the description.

    roles tags each vertex; the edge lookups name the graph edges realizing
    each slot's connector semiedges, dock edge halves, junction third edges,
    and gadget internal edges.
    """

    def __init__(self, graph: Multipole, spec: SuperpositionSpec,
                 superedges: list[Superedge], roles: dict[str, tuple],
                 third: dict[int, str]):
        self.graph = graph
        self.spec = spec
        self.superedges = superedges
        self.roles = roles
        self._third = third

    def junction_vertex(self, i: int) -> str:
        return f"u{i}"

    def planted_vertex(self, i: int, j: int) -> str:
        return f"u{i}j{j}"

    def left_vertex(self, i: int, j: int) -> str:
        se = self.superedges[i]
        return se.m.semi_vertex[se.left_semi(j)]

    def right_vertex(self, i: int, q: int) -> str:
        se = self.superedges[i]
        return se.m.semi_vertex[se.right_semi(q)]

    def left_edge(self, i: int, j: int) -> str:
        """Graph edge carrying slot i's left semiedge j."""
        w = self.left_vertex(i, j)
        slot = self.spec.slots[i]
        if j == slot.d:
            return self.graph.edge_between(w, self.junction_vertex(i))
        if self.spec.kinds[i] == "A'":
            return self.graph.edge_between(w, self.planted_vertex(i, j))
        q = self.spec.matched_right(i, j)
        z = self.right_vertex(self.spec.prev_index(i), q)
        return self.graph.edge_between(w, z)

    def right_edge(self, i: int, q: int) -> str:
        """Graph edge carrying slot i's right semiedge q."""
        nxt = self.spec.next_index(i)
        z = self.right_vertex(i, q)
        j = None
        for jj in (1, 2, 3):
            if self.spec.matched_right(nxt, jj) == q:
                j = jj
                break
        if j == self.spec.slots[nxt].d:
            return self.graph.edge_between(z, self.junction_vertex(nxt))
        if self.spec.kinds[nxt] == "A'":
            return self.graph.edge_between(z, self.planted_vertex(nxt, j))
        w = self.left_vertex(nxt, j)
        return self.graph.edge_between(z, w)

    def third_edge(self, i: int) -> str:
        """The junction's non-cycle edge (the base vertex's third edge)."""
        return self._third[i]

    def internal_edge(self, i: int) -> str:
        a, b = self.spec.non_dock(i)
        return self.graph.edge_between(self.planted_vertex(i, a), self.planted_vertex(i, b))

    def to_roles_json_obj(self) -> dict:
        return {v: list(r) for v, r in self.roles.items()}


def build(spec: SuperpositionSpec) -> BuiltSuperposition:
    diags = [d for d in validate(spec) if d.startswith("error:")]
    if diags:
        raise SpecError("; ".join(diags))

    base = spec.base
    on_cycle = {spec.vertex_at(i): i for i in range(spec.total)}

    vertices: list[str] = []
    edges: list[tuple[str, str]] = []
    roles: dict[str, tuple] = {}
    superedges: list[Superedge] = []

    for i, slot in enumerate(spec.slots):
        h = resolve_snark(slot.snark)
        pre = h.relabel({v: f"B{i}/{v}" for v in h.vertices})
        se = superedge(pre, f"B{i}/{slot.left_owner}", f"B{i}/{slot.right_owner}", "xy",
                       source=slot.snark)
        superedges.append(se)
        vertices.extend(se.m.vertices)
        edges.extend(se.m.edges.values())
        for v in se.m.vertices:
            roles[v] = ("slot", i, v.split("/", 1)[1])

    for v in base.vertices:
        if v not in on_cycle:
            vertices.append(v)
            roles[v] = ("base", v)
    for u, v in base.edges.values():
        if u not in on_cycle and v not in on_cycle:
            edges.append((u, v))

    third_pairs: dict[int, tuple[str, str]] = {}
    for i in range(spec.total):
        u_i = f"u{i}"
        vertices.append(u_i)
        roles[u_i] = ("junction", i)
        prev = spec.prev_index(i)
        se_prev, se_here = superedges[prev], superedges[i]
        for j in (1, 2, 3):
            w = se_here.m.semi_vertex[se_here.left_semi(j)]
            q = spec.matched_right(i, j)
            z = se_prev.m.semi_vertex[se_prev.right_semi(q)]
            if j == spec.slots[i].d:
                edges.append((w, u_i))
                edges.append((u_i, z))
            elif spec.kinds[i] == "A":
                edges.append((w, z))
            else:
                planted = f"u{i}j{j}"
                vertices.append(planted)
                roles[planted] = ("planted", i, j)
                edges.append((w, planted))
                edges.append((planted, z))
        if spec.kinds[i] == "A'":
            a, b = spec.non_dock(i)
            edges.append((f"u{i}j{a}", f"u{i}j{b}"))

        # the base vertex's third edge: to the rest of the base or to another junction
        v_i = spec.vertex_at(i)
        ci = spec.cycle_of(i)
        cyc = spec.cycles[ci]
        t = cyc.index(v_i)
        ring = {cyc[(t - 1) % len(cyc)], cyc[(t + 1) % len(cyc)]}
        others = [n for n in base.neighbors(v_i) if n not in ring]
        if len(others) != 1:
            raise SpecError(f"junction {i}: base vertex {v_i} third edge ambiguous")
        b_v = others[0]
        if b_v in on_cycle:
            i2 = on_cycle[b_v]
            if i < i2:
                edges.append((u_i, f"u{i2}"))
            third_pairs[i] = (u_i, f"u{i2}")
        else:
            edges.append((u_i, b_v))
            third_pairs[i] = (u_i, b_v)

    graph = Multipole(vertices, edges)
    if not graph.is_cubic:
        bad = [v for v in graph.vertices if graph.degree(v) != 3]
        raise SpecError(f"construction left non-cubic vertices: {bad[:4]}")
    third = {i: graph.edge_between(a, b) for i, (a, b) in third_pairs.items()}
    return BuiltSuperposition(graph, spec, superedges, roles, third)
