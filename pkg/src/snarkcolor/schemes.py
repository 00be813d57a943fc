"""Right and left colorings of superedges.

A right coloring makes all three right semiedges primary-3 with the left
side split 3/2/2; a left coloring makes one semiedge per side primary-3.
Both come out of suitable 2-factors of the source snark: the factor's
cycles alternate colors 1 and 2 (doubling at the removed vertices), all
other edges take color 3, and the coloring is restricted to the superedge.
Each carries one or two recorded two-colored chains whose recoloring
produces consistent variants; instantiation permutes the palette so the
boundary matches an ambient coloring.
"""

from __future__ import annotations

import time
from typing import Iterator, Mapping, Sequence

from .coloring import (
    COLORS,
    ColoringError,
    Scheme,
    SearchTimeout,
    consistent,
    kempe_component,
    make_scheme,
    scheme,
    search_normal_5,
    verify,
)
from .factors import (
    FactorError,
    LeftGood,
    RightGood,
    TwoFactor,
    classify_factor,
    hamiltonian_cycle,
    two_factor_from_cycles,
    two_factors,
)
from .multipole import Multipole
from .snarks import Superedge, superedge


class SchemeError(ValueError):
    pass


def right_pattern(j: int) -> dict[str, Scheme]:
    """Reference schemes, keyed "l1".."l3", "r1".."r3", for a j-right coloring."""
    out = {}
    for i in (1, 2, 3):
        out[f"l{i}"] = make_scheme(3, (1, 2)) if i == j else make_scheme(2, (1, 3))
        out[f"r{i}"] = make_scheme(3, (1, 2))
    return out


def left_pattern(j: int, k: int) -> dict[str, Scheme]:
    """Reference schemes for a left coloring with exits j (left) and k (right)."""
    out = {}
    for i in (1, 2, 3):
        out[f"l{i}"] = make_scheme(3, (1, 2)) if i == j else make_scheme(1, (2, 3))
        out[f"r{i}"] = make_scheme(3, (1, 2)) if i == k else make_scheme(2, (1, 3))
    return out


class SuperedgeColoring:
    """A coloring of a superedge plus its recorded chain metadata.

    chain_l joins the two non-exit left semiedges; its ordered pair is
    (endpoint color, alternate color).  Left colorings also carry chain_r
    joining the two non-exit right semiedges.  kind is "right" or "left".
    """

    def __init__(
        self,
        se: Superedge,
        colors: dict[str, int],
        kind: str,
        j: int,
        k: int | None = None,
        chain_l: Sequence[str] = (),
        chain_l_pair: tuple[int, int] | None = None,
        chain_r: Sequence[str] = (),
        chain_r_pair: tuple[int, int] | None = None,
    ):
        self.se = se
        self.colors = dict(colors)
        self.kind = kind
        self.j = j
        self.k = k
        self.chain_l = tuple(chain_l)
        self.chain_l_pair = chain_l_pair
        self.chain_r = tuple(chain_r)
        self.chain_r_pair = chain_r_pair

    def scheme_left(self, i: int) -> Scheme:
        return scheme(self.se.m, self.colors, self.se.left_semi(i))

    def scheme_right(self, i: int) -> Scheme:
        return scheme(self.se.m, self.colors, self.se.right_semi(i))

    def verify(self):
        return verify(self.se.m, self.colors)

    def clone(self, **overrides) -> "SuperedgeColoring":
        fields = dict(
            se=self.se,
            colors=self.colors,
            kind=self.kind,
            j=self.j,
            k=self.k,
            chain_l=self.chain_l,
            chain_l_pair=self.chain_l_pair,
            chain_r=self.chain_r,
            chain_r_pair=self.chain_r_pair,
        )
        fields.update(overrides)
        return SuperedgeColoring(**fields)

    def __repr__(self) -> str:
        tag = f"j={self.j}" if self.k is None else f"j={self.j},k={self.k}"
        return f"SuperedgeColoring({self.kind}, {tag})"


def matches_pattern(sec: SuperedgeColoring) -> bool:
    """Scheme-wise consistency with the reference pattern, chains included."""
    pattern = (
        right_pattern(sec.j) if sec.kind == "right" else left_pattern(sec.j, sec.k)
    )
    for i in (1, 2, 3):
        if not consistent(sec.scheme_left(i), pattern[f"l{i}"]):
            return False
        if not consistent(sec.scheme_right(i), pattern[f"r{i}"]):
            return False
    lefts = {sec.se.left_semi(i) for i in (1, 2, 3) if i != sec.j}
    if not lefts <= set(sec.chain_l):
        return False
    if sec.chain_l[0] not in lefts or sec.chain_l[-1] not in lefts:
        return False
    if sec.kind == "left":
        rights = {sec.se.right_semi(i) for i in (1, 2, 3) if i != sec.k}
        if not rights <= set(sec.chain_r):
            return False
        touched_l = {v for e in sec.chain_l for v in sec.se.m.element_vertices(e)}
        touched_r = {v for e in sec.chain_r for v in sec.se.m.element_vertices(e)}
        if touched_l & touched_r:
            return False
    return True


def _factor_coloring(
    h: Multipole,
    f: TwoFactor,
    doubled: dict[str, int],
) -> dict[str, int]:
    """Alternate 1/2 around each factor cycle, 3 elsewhere.

    doubled maps a cycle-entry vertex to the color both its cycle edges
    get; such cycles must be odd.  Other cycles start with color 1 at their
    canonical first edge and must be even.
    """
    colors = {eid: 3 for eid in h.edges}
    for cyc in f.cycles:
        special = [v for v in cyc if v in doubled]
        if special:
            if len(cyc) % 2 == 0:
                raise SchemeError(f"cycle through {special[0]} must be odd")
            v0 = special[0]
            base = doubled[v0]
            other = 1 if base == 2 else 2
            i0 = cyc.index(v0)
            rot = [cyc[(i0 + t) % len(cyc)] for t in range(len(cyc))]
        else:
            if len(cyc) % 2:
                raise SchemeError("even alternation impossible on a stray odd cycle")
            base, other = 1, 2
            rot = list(cyc)
        for t in range(len(rot)):
            a, b = rot[t], rot[(t + 1) % len(rot)]
            eid = h.edge_between(a, b)
            colors[eid] = base if t % 2 == 0 else other
    return colors


def _restrict(se: Superedge, colors_h: Mapping[str, int]) -> dict[str, int]:
    out = {}
    for eid in se.m.edges:
        out[eid] = colors_h[eid]
    for sid in se.m.semi_vertex:
        out[sid] = colors_h[se.m.semi_origin[sid]]
    return out


def right_from_factor(
    h: Multipole, x: str, y: str, f: TwoFactor, se: Superedge | None = None
) -> SuperedgeColoring:
    """Right coloring of the superedge at (x, y) from a right-good factor.

    The factor's odd cycle through x alternates so both edges at x get
    color 2; every other cycle alternates evenly; non-factor edges get 3.
    The exit index is the factor's missing edge at x.
    """
    got = classify_factor(f, h, x, y)
    if not isinstance(got, RightGood):
        raise SchemeError(f"factor is not right-good: {got!r}")
    colors_h = _factor_coloring(h, f, {x: 2})
    # y keeps no factor edges; its three edges already sit at color 3
    se = se or superedge(h, x, y, "xy")
    colors = _restrict(se, colors_h)
    sec = SuperedgeColoring(se, colors, "right", got.j)
    ends = [se.left_semi(i) for i in (1, 2, 3) if i != got.j]
    chain = kempe_component(se.m, colors, ends[0], (1, 2))
    if ends[1] not in chain:
        raise SchemeError("left chain fails to join the non-exit semiedges")
    sec.chain_l = tuple(chain)
    sec.chain_l_pair = (2, 1)
    rep = sec.verify()
    assert rep.normal and rep.rich_count == 0, "factor coloring must be all-poor"
    assert matches_pattern(sec)
    return sec


def left_from_factor(
    h: Multipole, x: str, y: str, f: TwoFactor, se: Superedge | None = None
) -> SuperedgeColoring:
    """Left coloring of the superedge at (x, y) from a left-good factor.

    x's odd cycle doubles color 1, y's doubles color 2; the two recorded
    chains live on those disjoint cycles, so they never share a vertex.
    """
    got = classify_factor(f, h, x, y)
    if not isinstance(got, LeftGood):
        raise SchemeError(f"factor is not left-good: {got!r}")
    colors_h = _factor_coloring(h, f, {x: 1, y: 2})
    se = se or superedge(h, x, y, "xy")
    colors = _restrict(se, colors_h)
    sec = SuperedgeColoring(se, colors, "left", got.j, got.k)
    l_ends = [se.left_semi(i) for i in (1, 2, 3) if i != got.j]
    chain_l = kempe_component(se.m, colors, l_ends[0], (1, 2))
    if l_ends[1] not in chain_l:
        raise SchemeError("left chain fails to join the non-exit left semiedges")
    r_ends = [se.right_semi(i) for i in (1, 2, 3) if i != got.k]
    chain_r = kempe_component(se.m, colors, r_ends[0], (1, 2))
    if r_ends[1] not in chain_r:
        raise SchemeError("right chain fails to join the non-exit right semiedges")
    sec.chain_l = tuple(chain_l)
    sec.chain_l_pair = (1, 2)
    sec.chain_r = tuple(chain_r)
    sec.chain_r_pair = (2, 1)
    rep = sec.verify()
    assert rep.normal and rep.rich_count == 0, "factor coloring must be all-poor"
    assert matches_pattern(sec)
    return sec


class RightProfile:
    def __init__(self, witnesses: dict[int, SuperedgeColoring]):
        self.witnesses = dict(witnesses)

    @property
    def right_js(self) -> tuple[int, ...]:
        return tuple(sorted(self.witnesses))

    def witness(self, j: int) -> SuperedgeColoring:
        return self.witnesses[j]

    def dock_right(self, d: int) -> bool:
        return d in self.witnesses

    @property
    def doubly_right(self) -> bool:
        return len(self.witnesses) >= 2

    @property
    def fully_right(self) -> bool:
        return len(self.witnesses) == 3


class LeftProfile:
    def __init__(self, witnesses: dict[tuple[int, int], SuperedgeColoring]):
        self.witnesses = dict(witnesses)

    def ks_for(self, j: int) -> tuple[int, ...]:
        return tuple(sorted(k for (jj, k) in self.witnesses if jj == j))

    def witness(self, j: int, k: int) -> SuperedgeColoring:
        return self.witnesses[(j, k)]

    @property
    def doubly_left(self) -> bool:
        return all(len(self.ks_for(j)) >= 2 for j in (1, 2, 3))


def classify_superedge(
    h: Multipole, x: str, y: str, budget_ms: int = 300000
) -> tuple[RightProfile, LeftProfile]:
    """Sweep every 2-factor of h - y and of h, keeping first witnesses.

    Factors enumerate in canonical matching order, so the recorded witness
    for each exit index (or index pair) is reproducible.
    """
    deadline = time.monotonic() + budget_ms / 1000.0
    se = superedge(h, x, y, "xy")
    rights: dict[int, SuperedgeColoring] = {}
    g_y = h.delete_vertices([y])
    for f in two_factors(g_y):
        if time.monotonic() > deadline:
            raise SearchTimeout(f"budget {budget_ms} ms exceeded")
        got = classify_factor(f, h, x, y)
        if isinstance(got, RightGood) and got.j not in rights:
            rights[got.j] = right_from_factor(h, x, y, f, se)
            if len(rights) == 3:
                break
    lefts: dict[tuple[int, int], SuperedgeColoring] = {}
    for f in two_factors(h):
        if time.monotonic() > deadline:
            raise SearchTimeout(f"budget {budget_ms} ms exceeded")
        got = classify_factor(f, h, x, y)
        if isinstance(got, LeftGood) and (got.j, got.k) not in lefts:
            lefts[(got.j, got.k)] = left_from_factor(h, x, y, f, se)
            if len(lefts) == 9:
                break
    return RightProfile(rights), LeftProfile(lefts)


def hypo_right(h: Multipole, x: str, y: str, budget_ms: int = 60000) -> SuperedgeColoring:
    """Right coloring from a Hamiltonian cycle of h - y (hypohamiltonian route)."""
    g_y = h.delete_vertices([y])
    cyc = hamiltonian_cycle(g_y, budget_ms)
    if cyc is None:
        raise SchemeError(f"{y}-deleted graph has no Hamiltonian cycle")
    f = two_factor_from_cycles(g_y, [cyc])
    return right_from_factor(h, x, y, f)


_VARIANTS = ((1, 2), (2, 1), (4, 5), (5, 4))


def instantiate(
    sec: SuperedgeColoring,
    targets: tuple[int, int, int],
    chain_variant: tuple[int, int] | None = None,
) -> SuperedgeColoring:
    """Recolor a canonical 3-colored base to meet ambient boundary colors.

    targets (t1, t2, t3) sends base color 1 to t1, 2 to t2, 3 to t3; the two
    leftover colors follow in ascending order.  chain_variant, given in base
    colors as one of (1,2), (2,1), (4,5), (5,4), first rewrites the recorded
    left chain (elements colored 1 take the first entry, elements colored 2
    the second); the right connector's schemes are unaffected by the choice.
    """
    t1, t2, t3 = targets
    if len({t1, t2, t3}) != 3 or not {t1, t2, t3} <= set(COLORS):
        raise SchemeError(f"targets must be three distinct colors, got {targets}")
    used = {c for c in sec.colors.values()}
    if not used <= {1, 2, 3}:
        raise SchemeError("instantiation expects a 3-colored base")
    rest = sorted(set(COLORS) - {t1, t2, t3})
    perm = {1: t1, 2: t2, 3: t3, 4: rest[0], 5: rest[1]}

    colors = dict(sec.colors)
    l_pair = sec.chain_l_pair
    if chain_variant is not None:
        if chain_variant not in _VARIANTS:
            raise SchemeError(f"bad chain variant {chain_variant}")
        v1, v2 = chain_variant
        base_pair = {sec.colors[e] for e in sec.chain_l}
        if base_pair != {1, 2}:
            raise SchemeError("left chain is not colored {1,2} in the base")
        for e in sec.chain_l:
            colors[e] = v1 if sec.colors[e] == 1 else v2
        a, b = sec.chain_l_pair
        l_pair = (v1 if a == 1 else v2, v1 if b == 1 else v2)

    out = {e: perm[c] for e, c in colors.items()}
    return sec.clone(
        colors=out,
        chain_l_pair=(perm[l_pair[0]], perm[l_pair[1]]) if l_pair else None,
        chain_r_pair=(
            (perm[sec.chain_r_pair[0]], perm[sec.chain_r_pair[1]])
            if sec.chain_r_pair
            else None
        ),
    )


def complement(sec: SuperedgeColoring) -> SuperedgeColoring:
    """Swap the two recorded left-chain colors; right schemes stay consistent."""
    if not sec.chain_l or sec.chain_l_pair is None:
        raise SchemeError("coloring carries no left chain to complement")
    a, b = sec.chain_l_pair
    colors = dict(sec.colors)
    for e in sec.chain_l:
        if colors[e] == a:
            colors[e] = b
        elif colors[e] == b:
            colors[e] = a
        else:
            raise SchemeError(f"chain element {e} not colored {a}/{b}")
    return sec.clone(colors=colors, chain_l_pair=(b, a))


def right_js_via_search(
    h: Multipole, x: str, y: str, budget_ms: int = 60000
) -> tuple[int, ...]:
    """Independent oracle: exhaustive search for each exit index.

    For each j, asks search_normal_5 for a normal coloring whose semiedge
    schemes are consistent with the j-right pattern, then insists on a
    {2,1}-chain joining the two non-exit left semiedges.  Returns the sorted
    j values for which one exists.
    """
    se = superedge(h, x, y, "xy")
    found = []
    deadline = time.monotonic() + budget_ms / 1000.0
    for j in (1, 2, 3):
        pattern = right_pattern(j)
        cons = {}
        for i in (1, 2, 3):
            cons[se.left_semi(i)] = pattern[f"l{i}"]
            cons[se.right_semi(i)] = pattern[f"r{i}"]
        ends = [se.left_semi(i) for i in (1, 2, 3) if i != j]
        remaining = max(1, int((deadline - time.monotonic()) * 1000))
        for colors in search_normal_5(se.m, constraints=cons, budget_ms=remaining):
            chain = kempe_component(se.m, colors, ends[0], (2, 1))
            if ends[1] in chain:
                found.append(j)
                break
    return tuple(found)
