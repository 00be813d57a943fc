"""Assemble normal 5-edge-colorings of built superpositions.

Given a normal coloring of the base graph, each slot receives a recolored
connector witness and the junction edges inherit the scheme primaries.  Two
strategies exist per cycle: the dock-exit strategy needs every slot to admit
a right coloring exiting at its dock; the general strategy schedules slots
into chunks (procedures P1/P2/P3) and only needs two right exits and two
left exit pairs per slot.  Gadget kind A' is absorbed either by
complementing the slot's left chain (chunk leaders) or by letting the
planted vertices separate the deliberately crossed junction colors.

The emitted certificate always re-verifies the full coloring; assembly
raises instead of returning anything abnormal.
"""

from __future__ import annotations

import hashlib
import json
from typing import Mapping

from .builder import BuiltSuperposition, SuperpositionSpec, resolve_snark
from .coloring import SearchTimeout, VerificationReport, search_normal_5, verify
from .multipole import Multipole, to_graph6
from .schemes import (
    LeftProfile,
    RightProfile,
    classify_superedge,
    complement,
    instantiate,
)


class AssembleError(ValueError):
    pass


_PROFILE_CACHE: dict[tuple[str, str, str], tuple[RightProfile, LeftProfile]] = {}


def slot_profiles(
    spec: SuperpositionSpec, budget_ms: int = 300000
) -> list[tuple[RightProfile, LeftProfile]]:
    """Connector profiles per slot, cached across identical slot descriptors."""
    out = []
    for slot in spec.slots:
        key = (slot.snark, slot.left_owner, slot.right_owner)
        if key not in _PROFILE_CACHE:
            h = resolve_snark(slot.snark)
            _PROFILE_CACHE[key] = classify_superedge(
                h, slot.left_owner, slot.right_owner, budget_ms=budget_ms
            )
        out.append(_PROFILE_CACHE[key])
    return out


def base_coloring(
    g: Multipole, colors: Mapping[str, int] | None = None, budget_ms: int = 60000
) -> dict[str, int]:
    """A normal 5-edge-coloring of the base: searched, or verified if given."""
    if colors is not None:
        rep = verify(g, colors)
        if not rep.normal:
            raise AssembleError(f"supplied base coloring is not normal: {rep!r}")
        return dict(colors)
    for found in search_normal_5(g, budget_ms=budget_ms):
        return found
    raise SearchTimeout("base graph has no normal coloring")


class ChunkPlan:
    """Procedure schedule for one cycle, in real slot indices.

    Chunks run right to left; each tuple lists its slots in descending
    order, so the chunk's leading slot comes last.  K collects the leading
    indices, T the rest.
    """

    def __init__(self, cycle: int, steps, k_set, t_set):
        self.cycle = cycle
        self.steps = tuple(steps)
        self.K = frozenset(k_set)
        self.T = frozenset(t_set)

    def to_json_obj(self) -> dict:
        return {
            "cycle": self.cycle,
            "steps": [[name, list(idx)] for name, idx in self.steps],
            "K": sorted(self.K),
            "T": sorted(self.T),
        }

    def __repr__(self) -> str:
        inner = ", ".join(f"{n}{idx}" for n, idx in self.steps)
        return f"ChunkPlan[{inner}]"


def chunk_plan(
    spec: SuperpositionSpec,
    profiles: list[tuple[RightProfile, LeftProfile]],
    cycle: int = 0,
) -> ChunkPlan:
    """Schedule one cycle into P1/P2/P3 chunks.

    When some slot is dock-right the indexing rotates so one such slot sits
    at local position 0; single dock-right slots become P1 chunks.  Without
    any dock-right slot an even cycle is covered by P2 pairs and an odd one
    ends in a single P3 triple.
    """
    positions = list(spec.positions_of_cycle(cycle))
    g = len(positions)
    dock_right = [profiles[i][0].dock_right(spec.slots[i].d) for i in positions]

    shift = dock_right.index(True) if any(dock_right) else 0
    real = lambda a: positions[(a + shift) % g]
    dr = lambda a: dock_right[(a + shift) % g]

    steps: list[tuple[str, tuple[int, ...]]] = []
    if not any(dock_right):
        i = g - 1
        while i >= 3:
            steps.append(("P2", (i, i - 1)))
            i -= 2
        if i == 2:
            steps.append(("P3", (2, 1, 0)))
        else:
            steps.append(("P2", (1, 0)))
    else:
        i = g - 1
        while i >= 3:
            if dr(i):
                steps.append(("P1", (i,)))
                i -= 1
            else:
                steps.append(("P2", (i, i - 1)))
                i -= 2
        if i == 2:
            if not dr(2):
                steps.append(("P3", (2, 1, 0)))
            elif dr(1):
                steps.extend([("P1", (2,)), ("P1", (1,)), ("P1", (0,))])
            else:
                steps.extend([("P1", (2,)), ("P2", (1, 0))])
        elif i == 1:
            if dr(1):
                steps.extend([("P1", (1,)), ("P1", (0,))])
            else:
                steps.append(("P2", (1, 0)))
        elif i == 0:
            steps.append(("P1", (0,)))

    real_steps = [(name, tuple(real(a) for a in idx)) for name, idx in steps]
    k_set = {idx[-1] for _, idx in real_steps}
    t_set = set(positions) - k_set
    return ChunkPlan(cycle, real_steps, k_set, t_set)


class Certificate:
    def __init__(
        self,
        built: BuiltSuperposition,
        colors: dict[str, int],
        report: VerificationReport,
        provenance: dict[int, dict],
    ):
        self.built = built
        self.colors = dict(colors)
        self.report = report
        self.provenance = provenance

    @property
    def graph_hash(self) -> str:
        return hashlib.sha256(to_graph6(self.built.graph).encode()).hexdigest()

    @property
    def is_normal(self) -> bool:
        return self.report.normal

    def right_colored_slots(self) -> tuple[int, ...]:
        return tuple(
            sorted(i for i, p in self.provenance.items() if p["coloring"] == "R")
        )

    def to_json_obj(self) -> dict:
        return {
            "graph_hash": self.graph_hash,
            "colors": {e: self.colors[e] for e in self.built.graph.edges},
            "provenance": {str(i): p for i, p in sorted(self.provenance.items())},
            "report": self.report.to_json_obj(),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), indent=2, sort_keys=True)


def _sigma_tables(spec: SuperpositionSpec, sigma: Mapping[str, int]):
    """Per position: base colors of the outgoing cycle edge and third edge."""
    base = spec.base
    sig_e: dict[int, int] = {}
    sig_f: dict[int, int] = {}
    for i in range(spec.total):
        v = spec.vertex_at(i)
        w = spec.vertex_at(spec.next_index(i))
        sig_e[i] = sigma[base.edge_between(v, w)]
        ring = {spec.vertex_at(spec.prev_index(i)), w}
        third = [n for n in base.neighbors(v) if n not in ring][0]
        sig_f[i] = sigma[base.edge_between(v, third)]
    return sig_e, sig_f


_VARIANT_BY_BASE = {1: (1, 2), 2: (2, 1), 4: (4, 5), 5: (5, 4)}


def _right_sec(profile: RightProfile, j: int, spec, i, sig_e, sig_f):
    targets = (sig_f[i], sig_e[spec.prev_index(i)], sig_e[i])
    sec = instantiate(profile.witness(j), targets)
    return sec, {"coloring": "R", "j": j, "targets": list(targets)}


def _left_sec(profile: LeftProfile, j: int, k: int, spec, i, sig_e, sig_f):
    """Left witness recolored for slot i.

    The exit pair takes the colors around the far junction; the chain
    variant then drags the non-exit left primaries onto the near neighbor's
    color.  Which variant family applies is decided by where that color
    sits in the permutation, i.e. by the poor/rich split of the spanned
    base edge.
    """
    nxt = spec.next_index(i)
    targets = (sig_f[nxt], sig_e[nxt], sig_e[i])
    rest = sorted({1, 2, 3, 4, 5} - set(targets))
    perm = {1: targets[0], 2: targets[1], 3: targets[2], 4: rest[0], 5: rest[1]}
    need_a = sig_e[spec.prev_index(i)]
    a_base = next(b for b, c in perm.items() if c == need_a)
    variant = _VARIANT_BY_BASE.get(a_base)
    if variant is None or perm[variant[1]] != sig_f[i]:
        raise AssembleError(
            f"slot {i}: no chain variant realizes left colors "
            f"({need_a}, {sig_f[i]}) under targets {targets}"
        )
    sec = instantiate(profile.witness(j, k), targets, variant)
    return sec, {
        "coloring": "L",
        "j": j,
        "k": k,
        "targets": list(targets),
        "variant": list(variant),
    }


def _eff_matched(spec: SuperpositionSpec, flips, i: int, j: int) -> int:
    """Right position paired with left j, with extra crossings at flips."""
    if i in flips and j != spec.slots[i].d:
        a, b = spec.non_dock(i)
        j = b if j == a else a
    return spec.matched_right(i, j)


def _eff_left_of(spec, flips, i: int, q: int) -> int:
    for j in (1, 2, 3):
        if _eff_matched(spec, flips, i, j) == q:
            return j
    raise AssembleError(f"junction {i}: right position {q} unmatched")


def _third_index(pair: set[int]) -> int:
    (out,) = {1, 2, 3} - pair
    return out


def _pick_k(profile: LeftProfile, j: int, forbidden: int, slot: int) -> int:
    ks = [k for k in profile.ks_for(j) if k != forbidden]
    if not ks:
        raise AssembleError(f"slot {slot}: no admissible left exit pair at {j}")
    return ks[0]


def _run_steps(spec, profiles, plan, flips, sig_e, sig_f, secs, prov):
    """Execute one cycle's chunk schedule, filling secs and provenance."""
    for name, idx in plan.steps:
        if name == "P1":
            (i,) = idx
            d = spec.slots[i].d
            secs[i], info = _right_sec(profiles[i][0], d, spec, i, sig_e, sig_f)
            prov[i] = {**info, "procedure": "P1"}
        elif name == "P2":
            i, m = idx
            d_m, d_i = spec.slots[m].d, spec.slots[i].d
            k_m = _pick_k(
                profiles[m][1], d_m, _eff_matched(spec, flips, i, d_i), m
            )
            j_i = _third_index({_eff_left_of(spec, flips, i, k_m), d_i})
            secs[m], info_m = _left_sec(
                profiles[m][1], d_m, k_m, spec, m, sig_e, sig_f
            )
            secs[i], info_i = _right_sec(profiles[i][0], j_i, spec, i, sig_e, sig_f)
            prov[m] = {**info_m, "procedure": "P2"}
            prov[i] = {**info_i, "procedure": "P2"}
        else:
            i, mid, m = idx
            d_m, d_mid, d_i = (spec.slots[a].d for a in (m, mid, i))
            k_m = _pick_k(
                profiles[m][1], d_m, _eff_matched(spec, flips, mid, d_mid), m
            )
            j_mid = _third_index({_eff_left_of(spec, flips, mid, k_m), d_mid})
            k_mid = _pick_k(
                profiles[mid][1], j_mid, _eff_matched(spec, flips, i, d_i), mid
            )
            j_i = _third_index({_eff_left_of(spec, flips, i, k_mid), d_i})
            secs[m], info_m = _left_sec(
                profiles[m][1], d_m, k_m, spec, m, sig_e, sig_f
            )
            secs[mid], info_mid = _left_sec(
                profiles[mid][1], j_mid, k_mid, spec, mid, sig_e, sig_f
            )
            secs[i], info_i = _right_sec(profiles[i][0], j_i, spec, i, sig_e, sig_f)
            prov[m] = {**info_m, "procedure": "P3"}
            prov[mid] = {**info_mid, "procedure": "P3"}
            prov[i] = {**info_i, "procedure": "P3"}

    # junction consistency under the effective pairing, before kind fixups
    for i in spec.positions_of_cycle(plan.cycle):
        prev = spec.prev_index(i)
        for j in (1, 2, 3):
            if j == spec.slots[i].d:
                continue
            q = _eff_matched(spec, flips, i, j)
            left = secs[i].colors[secs[i].se.left_semi(j)]
            right = secs[prev].colors[secs[prev].se.right_semi(q)]
            if left != right:
                raise AssembleError(
                    f"junction {i}: pass-through {j} carries {left} on the "
                    f"left and {right} on the right"
                )


def _internal_crossed(sec, d: int) -> int:
    """Internal edge color for a planted pair left on a crossed junction.

    Of the two non-dock left semiedges, exactly one repeats the dock's
    color; the member of its scheme pair missing from the other's primary
    fills the internal edge.
    """
    dock_c = sec.colors[sec.se.left_semi(d)]
    others = [j for j in (1, 2, 3) if j != d]
    cs = {j: sec.colors[sec.se.left_semi(j)] for j in others}
    same = [j for j in others if cs[j] == dock_c]
    if len(same) != 1:
        raise AssembleError(
            f"crossed junction expects exactly one repeated color, got {cs}"
        )
    j1 = same[0]
    j2 = others[0] if others[1] == j1 else others[1]
    pool = set(sec.scheme_left(j1).pair) - {cs[j2]}
    if len(pool) != 1:
        raise AssembleError(f"no unique internal color in {sorted(pool)}")
    return pool.pop()


def _transfer(built: BuiltSuperposition, secs, internal, sigma, sig_f):
    """Write every edge color of the built graph from its source."""
    spec = built.spec
    base = spec.base
    on_cycle = {spec.vertex_at(i) for i in range(spec.total)}
    colors: dict[str, int] = {}

    for eid, (a, b) in base.edges.items():
        if a not in on_cycle and b not in on_cycle:
            colors[built.graph.edge_between(a, b)] = sigma[eid]

    for i in range(spec.total):
        colors[built.third_edge(i)] = sig_f[i]

    for i in range(spec.total):
        sec = secs[i]
        for eid in sec.se.m.edges:
            u, v = sec.se.m.endpoints(eid)
            target = built.graph.edge_between(f"B{i}/{u}", f"B{i}/{v}")
            colors[target] = sec.colors[eid]

    for i in range(spec.total):
        prev = spec.prev_index(i)
        d = spec.slots[i].d
        sec_l = secs[i]
        sec_r = secs[prev]
        for j in (1, 2, 3):
            q = spec.matched_right(i, j)
            left_c = sec_l.colors[sec_l.se.left_semi(j)]
            right_c = sec_r.colors[sec_r.se.right_semi(q)]
            if j == d or spec.kinds[i] == "A'":
                colors[built.left_edge(i, j)] = left_c
                colors[built.right_edge(prev, q)] = right_c
            else:
                if left_c != right_c:
                    raise AssembleError(
                        f"junction {i}: pass-through {j} disagrees "
                        f"({left_c} vs {right_c})"
                    )
                colors[built.left_edge(i, j)] = left_c
        if spec.kinds[i] == "A'":
            colors[built.internal_edge(i)] = internal[i]

    return colors


def _finalize(built, colors, provenance) -> Certificate:
    report = verify(built.graph, colors)
    if not report.normal:
        detail = (
            f"clashes={list(report.clashes)[:6]} abnormal={list(report.abnormal)[:6]}"
        )
        raise AssembleError(f"assembled coloring failed verification: {detail}")
    return Certificate(built, colors, report, provenance)


def _assemble(built, sigma, strategy: str, profiles, budget_ms: int) -> Certificate:
    spec = built.spec
    rep = verify(spec.base, sigma)
    if not rep.normal:
        raise AssembleError("base coloring is not normal")
    if profiles is None:
        profiles = slot_profiles(spec, budget_ms=budget_ms)
    sig_e, sig_f = _sigma_tables(spec, sigma)

    secs: dict[int, object] = {}
    internal: dict[int, int] = {}
    prov: dict[int, dict] = {}

    for ci in range(len(spec.cycles)):
        positions = list(spec.positions_of_cycle(ci))
        all_dock = all(
            profiles[i][0].dock_right(spec.slots[i].d) for i in positions
        )
        mode = strategy
        if mode == "auto":
            mode = "dock" if all_dock else "general"

        if mode == "dock":
            if not all_dock:
                bad = [
                    i
                    for i in positions
                    if not profiles[i][0].dock_right(spec.slots[i].d)
                ]
                raise AssembleError(
                    f"slots {bad} admit no right coloring exiting at their dock"
                )
            for i in positions:
                d = spec.slots[i].d
                secs[i], info = _right_sec(profiles[i][0], d, spec, i, sig_e, sig_f)
                prov[i] = {**info, "case": "dock-right", "complement": False}
                if spec.kinds[i] == "A'":
                    secs[i] = complement(secs[i])
                    internal[i] = sig_e[i]
                    prov[i]["complement"] = True
        else:
            lacking = [
                i
                for i in positions
                if not (profiles[i][0].doubly_right and profiles[i][1].doubly_left)
            ]
            if lacking:
                raise AssembleError(
                    f"slots {lacking} are not both doubly-right and doubly-left"
                )
            plan = chunk_plan(spec, profiles, ci)
            primes = {i for i in positions if spec.kinds[i] == "A'"}
            flips = primes & plan.T
            _run_steps(spec, profiles, plan, flips, sig_e, sig_f, secs, prov)
            for i in positions:
                if i in primes and i in plan.K:
                    secs[i] = complement(secs[i])
                    internal[i] = sig_e[i]
                    prov[i].update(case="2.a", complement=True)
                elif i in primes:
                    internal[i] = _internal_crossed(secs[i], spec.slots[i].d)
                    prov[i].update(case="2.b", complement=False)
                else:
                    prov[i].update(case="2.c" if primes else "1", complement=False)

    colors = _transfer(built, secs, internal, sigma, sig_f)
    return _finalize(built, colors, prov)


def assemble_dock_right(
    built: BuiltSuperposition,
    sigma: Mapping[str, int],
    profiles=None,
    budget_ms: int = 300000,
) -> Certificate:
    """Every slot exits right at its dock; gadget kind A' complements."""
    return _assemble(built, sigma, "dock", profiles, budget_ms)


def assemble_general(
    built: BuiltSuperposition,
    sigma: Mapping[str, int],
    profiles=None,
    budget_ms: int = 300000,
) -> Certificate:
    """Chunked P1/P2/P3 assembly; needs doubly-right and doubly-left slots."""
    return _assemble(built, sigma, "general", profiles, budget_ms)


def assemble_even_subgraph(
    built: BuiltSuperposition,
    sigma: Mapping[str, int],
    profiles=None,
    budget_ms: int = 300000,
) -> Certificate:
    """Pick the strategy cycle by cycle; cycles do not interact."""
    return _assemble(built, sigma, "auto", profiles, budget_ms)
