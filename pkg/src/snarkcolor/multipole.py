"""Multipoles: graphs whose vertices may carry dangling half-edges.

A multipole holds ordinary vertices and edges plus *semiedges*: half-edges
that are either incident to a vertex or paired with another semiedge (the
pair forming an isolated edge with no endpoints).  Named connectors group
semiedges into ordered interfaces for gluing.  A Graph in this package is
simply a multipole with no semiedges.

All operations return new multipoles; instances are treated as immutable.
Vertex ids are opaque strings.  Edge ids are derived deterministically from
their endpoints in canonical vertex order ("a|b", with "#k" suffixes for
parallel copies), so identically-constructed multipoles agree on all ids.
"""

from __future__ import annotations

from typing import Iterable, Mapping


class MultipoleError(ValueError):
    pass


class Multipole:
    def __init__(
        self,
        vertices: Iterable[str],
        edges: Iterable[tuple[str, str]] = (),
        semi: Mapping[str, str] | None = None,
        isolated: Iterable[tuple[str, str]] = (),
        connectors: Mapping[str, Iterable[str]] | None = None,
        semi_origin: Mapping[str, str] | None = None,
    ):
        self.vertices: tuple[str, ...] = tuple(vertices)
        self._pos = {v: i for i, v in enumerate(self.vertices)}
        if len(self._pos) != len(self.vertices):
            raise MultipoleError("duplicate vertex id")

        self.edges: dict[str, tuple[str, str]] = {}
        seen: dict[str, int] = {}
        for e in edges:
            u, v = e
            if u not in self._pos or v not in self._pos:
                raise MultipoleError(f"edge endpoint not a vertex: {e}")
            if u == v:
                raise MultipoleError(f"loop edge not supported: {e}")
            if self._pos[u] > self._pos[v]:
                u, v = v, u
            base = f"{u}|{v}"
            k = seen.get(base, 0)
            seen[base] = k + 1
            eid = base if k == 0 else f"{base}#{k}"
            self.edges[eid] = (u, v)

        self.semi_vertex: dict[str, str] = dict(semi or {})
        for sid, v in self.semi_vertex.items():
            if v not in self._pos:
                raise MultipoleError(f"semiedge {sid} at unknown vertex {v}")
        self.semi_partner: dict[str, str] = {}
        for s1, s2 in isolated:
            if s1 == s2 or s1 in self.semi_vertex or s2 in self.semi_vertex:
                raise MultipoleError(f"bad isolated edge ({s1}, {s2})")
            if s1 in self.semi_partner or s2 in self.semi_partner:
                raise MultipoleError(f"semiedge in two isolated edges")
            self.semi_partner[s1] = s2
            self.semi_partner[s2] = s1
        if set(self.semi_vertex) & set(self.edges) or set(self.semi_partner) & set(self.edges):
            raise MultipoleError("semiedge id collides with edge id")

        self.semi_origin: dict[str, str] = dict(semi_origin or {})

        self.connectors: dict[str, tuple[str, ...]] = {}
        used: set[str] = set()
        for name, sids in (connectors or {}).items():
            group = tuple(sids)
            for sid in group:
                if sid not in self.semi_vertex and sid not in self.semi_partner:
                    raise MultipoleError(f"connector {name}: unknown semiedge {sid}")
                if sid in used:
                    raise MultipoleError(f"semiedge {sid} in two connectors")
                used.add(sid)
            self.connectors[name] = group

        inc: dict[str, list[str]] = {v: [] for v in self.vertices}
        for eid, (u, v) in self.edges.items():
            inc[u].append(eid)
            inc[v].append(eid)
        for sid, v in self.semi_vertex.items():
            inc[v].append(sid)
        self._inc = {v: tuple(ids) for v, ids in inc.items()}

    # -- basic queries ----------------------------------------------------

    @property
    def semiedge_ids(self) -> tuple[str, ...]:
        return tuple(self.semi_vertex) + tuple(self.semi_partner)

    @property
    def elements(self) -> tuple[str, ...]:
        """All colorable element ids: edges then semiedges."""
        return tuple(self.edges) + self.semiedge_ids

    @property
    def is_graph(self) -> bool:
        return not self.semi_vertex and not self.semi_partner

    def incidences(self, v: str) -> tuple[str, ...]:
        return self._inc[v]

    def degree(self, v: str) -> int:
        return len(self._inc[v])

    @property
    def is_cubic(self) -> bool:
        return all(len(ids) == 3 for ids in self._inc.values())

    def endpoints(self, eid: str) -> tuple[str, str]:
        return self.edges[eid]

    def other_end(self, eid: str, v: str) -> str:
        u, w = self.edges[eid]
        return w if v == u else u

    def element_vertices(self, elem: str) -> tuple[str, ...]:
        if elem in self.edges:
            return self.edges[elem]
        if elem in self.semi_vertex:
            return (self.semi_vertex[elem],)
        return ()

    def neighbors(self, v: str) -> tuple[str, ...]:
        """Neighbors via full edges, sorted by canonical vertex order."""
        out = [self.other_end(eid, v) for eid in self._inc[v] if eid in self.edges]
        return tuple(sorted(out, key=self._pos.__getitem__))

    def edge_between(self, u: str, v: str) -> str | None:
        for eid in self._inc[u]:
            if eid in self.edges and self.other_end(eid, u) == v:
                return eid
        return None

    def is_connected(self) -> bool:
        if not self.vertices:
            return True
        seen = {self.vertices[0]}
        stack = [self.vertices[0]]
        while stack:
            for w in self.neighbors(stack.pop()):
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == len(self.vertices)

    def is_bridgeless(self) -> bool:
        """True iff no full edge is a bridge (via DFS low-links)."""
        index: dict[str, int] = {}
        low: dict[str, int] = {}
        counter = 0
        for root in self.vertices:
            if root in index:
                continue
            stack = [(root, None, iter(self._inc[root]))]
            index[root] = low[root] = counter
            counter += 1
            while stack:
                v, via, it = stack[-1]
                advanced = False
                for eid in it:
                    if eid not in self.edges or eid == via:
                        continue
                    w = self.other_end(eid, v)
                    if w in index:
                        low[v] = min(low[v], index[w])
                    else:
                        index[w] = low[w] = counter
                        counter += 1
                        stack.append((w, eid, iter(self._inc[w])))
                        advanced = True
                        break
                if advanced:
                    continue
                stack.pop()
                if stack:
                    parent = stack[-1][0]
                    low[parent] = min(low[parent], low[v])
                    if low[v] > index[parent]:
                        return False
        return True

    def distance(self, a: str, b: str) -> int:
        if a == b:
            return 0
        dist = {a: 0}
        frontier = [a]
        while frontier:
            nxt = []
            for v in frontier:
                for w in self.neighbors(v):
                    if w not in dist:
                        dist[w] = dist[v] + 1
                        if w == b:
                            return dist[w]
                        nxt.append(w)
            frontier = nxt
        raise MultipoleError(f"no path between {a} and {b}")

    # -- structural operations --------------------------------------------

    def induced(self, keep: Iterable[str]) -> "Multipole":
        """Submultipole induced on a vertex subset.

        Boundary edges become semiedges at their surviving endpoint, each
        remembering its originating edge id.  Isolated edges are dropped;
        connectors are filtered to surviving semiedges.
        """
        kept = set(keep)
        unknown = kept - set(self._pos)
        if unknown:
            raise MultipoleError(f"unknown vertices: {sorted(unknown)}")
        vertices = [v for v in self.vertices if v in kept]
        edges = []
        semi: dict[str, str] = {}
        origin: dict[str, str] = {}
        for eid, (u, v) in self.edges.items():
            inside = (u in kept) + (v in kept)
            if inside == 2:
                edges.append((u, v))
            elif inside == 1:
                at = u if u in kept else v
                sid = f"{eid}~"
                semi[sid] = at
                origin[sid] = eid
        for sid, v in self.semi_vertex.items():
            if v in kept:
                semi[sid] = v
                if sid in self.semi_origin:
                    origin[sid] = self.semi_origin[sid]
        connectors = {}
        for name, group in self.connectors.items():
            filtered = tuple(s for s in group if s in semi)
            if filtered:
                connectors[name] = filtered
        return Multipole(vertices, edges, semi, (), connectors, origin)

    def with_connectors(self, connectors: Mapping[str, Iterable[str]]) -> "Multipole":
        return Multipole(
            self.vertices,
            self.edges.values(),
            self.semi_vertex,
            _pairs(self.semi_partner),
            connectors,
            self.semi_origin,
        )

    def relabel(self, mapping: Mapping[str, str]) -> "Multipole":
        """Rename vertices (canonical order follows the old order)."""
        ren = {v: mapping.get(v, v) for v in self.vertices}
        if len(set(ren.values())) != len(ren):
            raise MultipoleError("relabel collision")
        return Multipole(
            [ren[v] for v in self.vertices],
            [(ren[u], ren[v]) for u, v in self.edges.values()],
            {s: ren[v] for s, v in self.semi_vertex.items()},
            _pairs(self.semi_partner),
            self.connectors,
            self.semi_origin,
        )

    def subdivide(self, eid: str, mid: str) -> "Multipole":
        """Replace an edge (or isolated edge) by a path through new vertex mid.

        Subdividing a full edge leaves mid with degree 2; callers attach a
        third incidence or accept the non-cubic result.  Subdividing an
        isolated edge re-homes both of its semiedges onto mid.
        """
        if mid in self._pos:
            raise MultipoleError(f"vertex {mid} already present")
        if eid in self.edges:
            u, v = self.edges[eid]
            edges = [e for k, e in self.edges.items() if k != eid]
            edges += [(u, mid), (mid, v)]
            return Multipole(
                list(self.vertices) + [mid],
                edges,
                self.semi_vertex,
                _pairs(self.semi_partner),
                self.connectors,
                self.semi_origin,
            )
        if eid in self.semi_partner:
            s1, s2 = eid, self.semi_partner[eid]
            semi = dict(self.semi_vertex)
            semi[s1] = mid
            semi[s2] = mid
            iso = [(a, b) for a, b in _pairs(self.semi_partner) if a not in (s1, s2)]
            return Multipole(
                list(self.vertices) + [mid],
                self.edges.values(),
                semi,
                iso,
                self.connectors,
                self.semi_origin,
            )
        raise MultipoleError(f"unknown edge {eid}")

    def contract(self, group: Iterable[str], new_name: str) -> "Multipole":
        """Merge a vertex set into one vertex, dropping internal edges.

        Edges leaving the set are re-ended at new_name (parallel copies may
        arise); semiedges inside the set are re-homed.  new_name takes the
        canonical position of the first group member.
        """
        gset = set(group)
        missing = gset - set(self._pos)
        if missing:
            raise MultipoleError(f"unknown vertices: {sorted(missing)}")
        if new_name in set(self._pos) - gset:
            raise MultipoleError(f"vertex {new_name} already present")
        vertices = []
        placed = False
        for v in self.vertices:
            if v in gset:
                if not placed:
                    vertices.append(new_name)
                    placed = True
            else:
                vertices.append(v)
        ren = lambda v: new_name if v in gset else v
        edges = [
            (ren(u), ren(v))
            for u, v in self.edges.values()
            if not (u in gset and v in gset)
        ]
        return Multipole(
            vertices,
            edges,
            {s: ren(v) for s, v in self.semi_vertex.items()},
            _pairs(self.semi_partner),
            self.connectors,
            self.semi_origin,
        )

    def delete_vertices(self, drop: Iterable[str]) -> "Multipole":
        """Remove vertices along with every edge or semiedge touching them."""
        gone = set(drop)
        vertices = [v for v in self.vertices if v not in gone]
        edges = [e for e in self.edges.values() if not (set(e) & gone)]
        semi = {s: v for s, v in self.semi_vertex.items() if v not in gone}
        connectors = {}
        for name, grp in self.connectors.items():
            filtered = tuple(s for s in grp if s in semi or s in self.semi_partner)
            if filtered:
                connectors[name] = filtered
        return Multipole(
            vertices,
            edges,
            semi,
            _pairs(self.semi_partner),
            connectors,
            {s: e for s, e in self.semi_origin.items() if s in semi},
        )

    def add_edges(self, new: Iterable[tuple[str, str]]) -> "Multipole":
        return Multipole(
            self.vertices,
            list(self.edges.values()) + list(new),
            self.semi_vertex,
            _pairs(self.semi_partner),
            self.connectors,
            self.semi_origin,
        )

    def attach(self, v: str, sid: str) -> "Multipole":
        """Add a dangling semiedge at an existing vertex."""
        if sid in self.semi_vertex or sid in self.semi_partner:
            raise MultipoleError(f"semiedge {sid} already present")
        semi = dict(self.semi_vertex)
        semi[sid] = v
        return Multipole(
            self.vertices,
            self.edges.values(),
            semi,
            _pairs(self.semi_partner),
            self.connectors,
            self.semi_origin,
        )


def _pairs(partner: Mapping[str, str]) -> list[tuple[str, str]]:
    return [(a, b) for a, b in partner.items() if a < b]


def glue(
    m1: Multipole,
    c1: str,
    m2: Multipole,
    c2: str,
    p: tuple[int, ...] | None = None,
) -> Multipole:
    """Identify connector c1 of m1 with connector c2 of m2 position-wise.

    p maps c1-positions to c2-positions (1-based): c1's q-th semiedge is
    identified with c2's p[q-1]-th.  Identifying through isolated edges
    re-wires their pairings; an identification cycle (which would create a
    vertex-free loop) is an error.  m1 and m2 must have disjoint ids unless
    they are the same multipole, in which case c1 and c2 must differ.
    """
    same = m1 is m2
    if same and c1 == c2:
        raise MultipoleError("cannot glue a connector to itself")
    if c1 not in m1.connectors or c2 not in m2.connectors:
        raise MultipoleError("unknown connector")
    g1, g2 = m1.connectors[c1], m2.connectors[c2]
    if len(g1) != len(g2):
        raise MultipoleError(f"connector widths differ: {len(g1)} vs {len(g2)}")
    n = len(g1)
    if p is None:
        p = tuple(range(1, n + 1))
    if sorted(p) != list(range(1, n + 1)):
        raise MultipoleError(f"p is not a permutation of 1..{n}: {p}")

    if same:
        vertices = list(m1.vertices)
        all_edges = list(m1.edges.values())
        semi_vertex = dict(m1.semi_vertex)
        partner = dict(m1.semi_partner)
        origin = dict(m1.semi_origin)
        connectors = {k: v for k, v in m1.connectors.items() if k not in (c1, c2)}
    else:
        overlap = (
            (set(m1.vertices) & set(m2.vertices))
            or (set(m1.edges) & set(m2.edges))
            or (set(m1.semiedge_ids) & set(m2.semiedge_ids))
        )
        if overlap:
            raise MultipoleError(f"id overlap between multipoles: {sorted(overlap)[:4]}")
        vertices = list(m1.vertices) + list(m2.vertices)
        all_edges = list(m1.edges.values()) + list(m2.edges.values())
        semi_vertex = dict(m1.semi_vertex) | dict(m2.semi_vertex)
        partner = dict(m1.semi_partner) | dict(m2.semi_partner)
        origin = dict(m1.semi_origin) | dict(m2.semi_origin)
        connectors = {k: v for k, v in m1.connectors.items() if k != c1}
        for k, v in m2.connectors.items():
            if k == c2:
                continue
            if k in connectors:
                raise MultipoleError(f"connector name collision: {k}")
            connectors[k] = v

    ident = {}
    for q in range(n):
        a, b = g1[q], g2[p[q] - 1]
        if a == b or a in ident or b in ident:
            raise MultipoleError("semiedge identified twice")
        ident[a] = b
        ident[b] = a

    consumed: set[str] = set()
    new_iso: list[tuple[str, str]] = []
    for start in list(ident):
        if start in consumed:
            continue
        # Walk the identify/partner linkage both ways from this semiedge.
        chain = [start]
        for step in (ident, partner):
            cur, link = start, step
            while cur in link and link[cur] not in chain:
                cur = link[cur]
                chain.append(cur) if step is ident else chain.insert(0, cur)
                link = partner if link is ident else ident
            if cur in link and link[cur] in chain:
                raise MultipoleError("gluing would create a vertex-free loop")
        ends = (chain[0], chain[-1])
        consumed.update(chain)
        at = [semi_vertex.get(s) for s in ends]
        if at[0] is not None and at[1] is not None:
            if at[0] == at[1]:
                raise MultipoleError("gluing would create a loop edge")
            all_edges.append((at[0], at[1]))
        elif at[0] is not None or at[1] is not None:
            v = at[0] if at[0] is not None else at[1]
            free = ends[1] if at[0] is not None else ends[0]
            semi_vertex[free] = v
            consumed.discard(free)
        else:
            new_iso.append(ends)
            consumed.difference_update(ends)

    semi = {s: v for s, v in semi_vertex.items() if s not in consumed}
    iso = [
        (a, b)
        for a, b in _pairs(partner)
        if a not in consumed and b not in consumed and a not in semi and b not in semi
    ]
    iso += new_iso
    origin = {s: e for s, e in origin.items() if s not in consumed}
    return Multipole(vertices, all_edges, semi, iso, connectors, origin)


# -- serialization ---------------------------------------------------------


def to_json_obj(m: Multipole) -> dict:
    semis = []
    for sid, v in m.semi_vertex.items():
        semis.append({"id": sid, "vertex": v})
    for sid, part in m.semi_partner.items():
        semis.append({"id": sid, "partner": part})
    return {
        "vertices": list(m.vertices),
        "edges": [list(e) for e in m.edges.values()],
        "semiedges": semis,
        "connectors": {k: list(v) for k, v in m.connectors.items()},
    }


def from_json_obj(obj: dict) -> Multipole:
    semi = {}
    iso = []
    seen = set()
    for rec in obj.get("semiedges", ()):
        sid = rec["id"]
        if "vertex" in rec:
            semi[sid] = rec["vertex"]
        else:
            if sid not in seen:
                iso.append((sid, rec["partner"]))
                seen.update((sid, rec["partner"]))
    return Multipole(
        obj["vertices"],
        [tuple(e) for e in obj.get("edges", ())],
        semi,
        iso,
        obj.get("connectors"),
    )


def to_dot(m: Multipole, name: str = "M") -> str:
    lines = [f"graph {name} {{"]
    for v in m.vertices:
        lines.append(f'  "{v}";')
    for u, v in m.edges.values():
        lines.append(f'  "{u}" -- "{v}";')
    for sid, v in m.semi_vertex.items():
        lines.append(f'  "{sid}" [shape=point];')
        lines.append(f'  "{v}" -- "{sid}" [style=dashed];')
    for a, b in _pairs(m.semi_partner):
        lines.append(f'  "{a}" [shape=point]; "{b}" [shape=point];')
        lines.append(f'  "{a}" -- "{b}" [style=dashed];')
    lines.append("}")
    return "\n".join(lines)


def to_graph6(m: Multipole) -> str:
    """Encode a simple graph (no semiedges, no parallel edges) as graph6."""
    if not m.is_graph:
        raise MultipoleError("graph6 cannot encode semiedges")
    if any("#" in eid for eid in m.edges):
        raise MultipoleError("graph6 cannot encode parallel edges")
    n = len(m.vertices)
    pos = {v: i for i, v in enumerate(m.vertices)}
    if n <= 62:
        head = chr(n + 63)
    elif n <= 258047:
        head = "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    else:
        raise MultipoleError("graph too large for supported graph6 forms")
    adj = set()
    for u, v in m.edges.values():
        i, j = pos[u], pos[v]
        adj.add((min(i, j), max(i, j)))
    bits = []
    for j in range(1, n):
        for i in range(j):
            bits.append(1 if (i, j) in adj else 0)
    while len(bits) % 6:
        bits.append(0)
    body = "".join(
        chr(sum(b << (5 - k) for k, b in enumerate(bits[i : i + 6])) + 63)
        for i in range(0, len(bits), 6)
    )
    return head + body


def from_graph6(s: str) -> Multipole:
    """Decode graph6 into a graph with vertices named "0".."n-1"."""
    s = s.strip()
    if not s:
        raise MultipoleError("empty graph6 string")
    if s[0] == "~":
        if len(s) < 4 or s[1] == "~":
            raise MultipoleError("unsupported graph6 size form")
        n = 0
        for ch in s[1:4]:
            n = (n << 6) | (ord(ch) - 63)
        body = s[4:]
    else:
        n = ord(s[0]) - 63
        body = s[1:]
    if n < 0:
        raise MultipoleError("bad graph6 header")
    need = (n * (n - 1) // 2 + 5) // 6
    if len(body) != need:
        raise MultipoleError(f"graph6 body length {len(body)}, expected {need}")
    bits = []
    for ch in body:
        val = ord(ch) - 63
        if not 0 <= val <= 63:
            raise MultipoleError(f"bad graph6 character {ch!r}")
        bits.extend((val >> (5 - k)) & 1 for k in range(6))
    vertices = [str(i) for i in range(n)]
    edges = []
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if bits[idx]:
                edges.append((str(i), str(j)))
            idx += 1
    return Multipole(vertices, edges)


def is_isomorphic(m1: Multipole, m2: Multipole) -> bool:
    """Brute-force graph isomorphism; intended for graphs up to ~40 vertices."""
    return find_isomorphism(m1, m2) is not None


def find_isomorphism(m1: Multipole, m2: Multipole) -> dict[str, str] | None:
    if not (m1.is_graph and m2.is_graph):
        raise MultipoleError("isomorphism check expects graphs")
    if len(m1.vertices) != len(m2.vertices) or len(m1.edges) != len(m2.edges):
        return None
    deg1 = sorted(m1.degree(v) for v in m1.vertices)
    deg2 = sorted(m2.degree(v) for v in m2.vertices)
    if deg1 != deg2:
        return None

    # Map m1's vertices in BFS order so each new vertex touches mapped ones.
    order: list[str] = []
    seen: set[str] = set()
    for root in m1.vertices:
        if root in seen:
            continue
        seen.add(root)
        queue = [root]
        while queue:
            v = queue.pop(0)
            order.append(v)
            for w in m1.neighbors(v):
                if w not in seen:
                    seen.add(w)
                    queue.append(w)

    n2 = {v: set(m2.neighbors(v)) for v in m2.vertices}
    n1 = {v: m1.neighbors(v) for v in m1.vertices}
    mapping: dict[str, str] = {}
    used: set[str] = set()

    def extend(k: int) -> bool:
        if k == len(order):
            return True
        v = order[k]
        mapped_nbrs = [mapping[w] for w in n1[v] if w in mapping]
        if mapped_nbrs:
            cands = set.intersection(*(n2[x] for x in mapped_nbrs))
        else:
            cands = set(m2.vertices)
        for c in sorted(cands, key=m2._pos.__getitem__):
            if c in used or m2.degree(c) != m1.degree(v):
                continue
            # Every already-mapped neighbor relation must be preserved both ways.
            ok = all(
                (w in mapping) == (mapping.get(w) in n2[c])
                for w in n1[v]
            ) and all(
                x not in used or any(mapping.get(w) == x for w in n1[v])
                for x in n2[c]
            )
            if not ok:
                continue
            mapping[v] = c
            used.add(c)
            if extend(k + 1):
                return True
            del mapping[v]
            used.discard(c)
        return False

    return dict(mapping) if extend(0) else None
