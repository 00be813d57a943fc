"""Canonical cubic graph generators and gadget constructions.

Provides the Petersen graph, the flower snark family, superedges (a snark
with two nonadjacent vertices removed, the six dangling half-edges grouped
into two ordered 3-connectors), and the section-triple contraction that
shrinks a flower to the next smaller one.
"""

from __future__ import annotations

from .multipole import Multipole, MultipoleError


def petersen() -> Multipole:
    """Petersen graph: outer pentagon 0..4, inner pentagram 5..9, spokes."""
    vs = [str(i) for i in range(10)]
    edges = [(str(i), str((i + 1) % 5)) for i in range(5)]
    edges += [(str(5 + i), str(5 + (i + 2) % 5)) for i in range(5)]
    edges += [(str(i), str(i + 5)) for i in range(5)]
    return Multipole(vs, edges)


def flower_vertex(role: str, i: int, r: int) -> str:
    if role not in "xyzw":
        raise ValueError(f"bad flower role {role!r}")
    return f"{role}{i % r}"


def flower(r: int) -> Multipole:
    """Flower snark on 4r vertices, r odd and at least 5.

    Section i holds x_i on the hub cycle, a spoke vertex y_i, and the rim
    pair z_i, w_i; rims cross between consecutive sections.
    """
    if r % 2 == 0 or r < 5:
        raise ValueError(f"flower needs odd r >= 5, got {r}")
    vs = [f"{role}{i}" for role in "xyzw" for i in range(r)]
    edges = []
    for i in range(r):
        j = (i + 1) % r
        edges += [
            (f"x{i}", f"x{j}"),
            (f"x{i}", f"y{i}"),
            (f"y{i}", f"z{i}"),
            (f"y{i}", f"w{i}"),
            (f"z{i}", f"w{j}"),
            (f"w{i}", f"z{j}"),
        ]
    return Multipole(vs, edges)


class Superedge:
    """A graph minus two nonadjacent vertices, with ordered 3-connectors.

    The three half-edges left behind by each removed vertex form one
    connector, ordered by the canonical order of the removed vertex's
    neighbors.  Position j of a connector is 1-based throughout.
    """

    def __init__(self, m: Multipole, source: str, x: str, y: str, orientation: str):
        self.m = m
        self.source = source
        self.x = x
        self.y = y
        self.orientation = orientation

    @property
    def left(self) -> tuple[str, str, str]:
        return self.m.connectors["left"]

    @property
    def right(self) -> tuple[str, str, str]:
        return self.m.connectors["right"]

    def left_semi(self, j: int) -> str:
        return self.left[j - 1]

    def right_semi(self, j: int) -> str:
        return self.right[j - 1]

    def __repr__(self) -> str:
        return f"Superedge({self.source}, x={self.x}, y={self.y}, {self.orientation})"


def superedge(h: Multipole, x: str, y: str, orientation: str = "xy", source: str = "") -> Superedge:
    """Remove x and y from a cubic graph, grouping half-edges into connectors.

    orientation "xy" puts x's half-edges on the left, "yx" swaps sides.
    x and y must be distinct and nonadjacent so all six half-edges survive.
    """
    if orientation not in ("xy", "yx"):
        raise ValueError(f"orientation must be 'xy' or 'yx', got {orientation!r}")
    if not h.is_graph:
        raise ValueError("superedge source must have no semiedges")
    if x == y:
        raise ValueError("x and y must differ")
    if x not in h.vertices or y not in h.vertices:
        raise ValueError(f"unknown vertex: {x if x not in h.vertices else y}")
    if h.edge_between(x, y) is not None:
        raise ValueError(f"{x} and {y} are adjacent")
    if h.degree(x) != 3 or h.degree(y) != 3:
        raise ValueError("removed vertices must be cubic")

    core = h.induced([v for v in h.vertices if v not in (x, y)])

    def group(removed: str) -> tuple[str, ...]:
        sids = []
        for n in h.neighbors(removed):
            eid = h.edge_between(removed, n)
            sids.append(f"{eid}~")
        return tuple(sids)

    sides = {"left": group(x), "right": group(y)}
    if orientation == "yx":
        sides = {"left": sides["right"], "right": sides["left"]}
    m = core.with_connectors(sides)
    a, b = (x, y) if orientation == "xy" else (y, x)
    return Superedge(m, source, a, b, orientation)


_PATCH_EDGES = [
    ("x1", "x2"), ("x2", "x3"),
    ("x1", "y1"), ("x2", "y2"), ("x3", "y3"),
    ("y1", "z1"), ("y1", "w1"),
    ("y2", "z2"), ("y2", "w2"),
    ("y3", "z3"), ("y3", "w3"),
    ("z1", "w2"), ("w2", "z3"),
    ("w1", "z2"), ("z2", "w3"),
]

_PATCH_ROLES = [f"{role}{i}" for role in "xyzw" for i in (1, 2, 3)]


def k_reduce(g: Multipole, embedding: dict[str, str]) -> Multipole:
    """Contract a three-consecutive-sections patch, shrinking the graph by 8.

    embedding maps the twelve patch roles (x1..x3, y1..y3, z1..z3, w1..w3)
    to vertices of g.  The two outer spoke vertices y1, y3 are removed,
    bracing edges x1x3, z1z3, w1w3 are inserted, and the three resulting
    triangles collapse to single vertices; the middle spoke y2 survives.
    """
    missing = [k for k in _PATCH_ROLES if k not in embedding]
    if missing:
        raise ValueError(f"embedding missing roles: {missing}")
    at = {k: embedding[k] for k in _PATCH_ROLES}
    if len(set(at.values())) != 12:
        raise ValueError("embedding roles must map to distinct vertices")
    for a, b in _PATCH_EDGES:
        if g.edge_between(at[a], at[b]) is None:
            raise ValueError(f"embedding invalid: edge {a}-{b} missing at ({at[a]}, {at[b]})")

    out = g.delete_vertices([at["y1"], at["y3"]])
    out = out.add_edges(
        [(at["x1"], at["x3"]), (at["z1"], at["z3"]), (at["w1"], at["w3"])]
    )
    out = out.contract([at["x1"], at["x2"], at["x3"]], at["x2"])
    out = out.contract([at["z1"], at["w2"], at["z3"]], at["w2"])
    out = out.contract([at["w1"], at["z2"], at["w3"]], at["z2"])
    return out


def find_K_in_flower(g: Multipole, s: int | None = None) -> dict[str, str]:
    """Locate the contractible patch on three consecutive flower sections.

    g must be a flower built by flower(r) with r >= 7; s is the first of the
    three sections (default r-3).  Returns the twelve-role embedding map.
    """
    n = len(g.vertices)
    if n % 4:
        raise ValueError("not a flower snark")
    r = n // 4
    expect = {f"{role}{i}" for role in "xyzw" for i in range(r)}
    if set(g.vertices) != expect:
        raise ValueError("not a flower snark built by flower()")
    if r == 5:
        raise ValueError("flower on 5 sections has no contractible patch to a smaller flower")
    if s is None:
        s = r - 3
    s %= r
    emb = {}
    for k, i in (("1", s), ("2", (s + 1) % r), ("3", (s + 2) % r)):
        for role in "xyzw":
            emb[f"{role}{k}"] = f"{role}{i}"
    for a, b in _PATCH_EDGES:
        assert g.edge_between(emb[a], emb[b]) is not None
    return emb
