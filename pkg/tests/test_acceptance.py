"""Release gate: ten end-to-end checks, each printing one pass/fail line.

Every check enforces its own wall-clock budget, so a pathological slowdown
fails loudly instead of hanging the suite.
"""

import json
import time
from collections import Counter

from snarkcolor.assembler import (
    assemble_dock_right,
    assemble_general,
    base_coloring,
    slot_profiles,
)
from snarkcolor.builder import SuperedgeSlot, SuperpositionSpec, build, resolve_snark
from snarkcolor.cli import random_dock_spec, random_general_spec
from snarkcolor.coloring import SearchTimeout, is_3_edge_colorable, search_normal_5, verify
from snarkcolor.factors import hamiltonian_cycle, two_factor_from_cycles
from snarkcolor.multipole import is_isomorphic
from snarkcolor.schemes import (
    classify_superedge,
    hypo_right,
    right_from_factor,
    right_js_via_search,
)
from snarkcolor.snarks import find_K_in_flower, flower, k_reduce, petersen
from snarkcolor.tablecheck import check_tables, infer_labeling, load_rows


def _line(n: int, ok: bool, note: str) -> None:
    print(f"check {n:2d}: {'PASS' if ok else 'FAIL'} ({note})")
    assert ok, f"check {n}: {note}"


def test_c01_embedded_tables_all_validate():
    t0 = time.monotonic()
    summary = check_tables("all")
    dt = time.monotonic() - t0
    ok = summary.passed == 82 and summary.failed == 0 and dt < 10
    _line(1, ok, f"{summary.passed}/82 rows in {dt:.2f}s")


def test_c02_fully_right_pairs_match_inferred_labeling():
    rep = infer_labeling(5)
    named = (("y2", "x0"), ("y0", "y1"), ("y0", "y2"), ("y0", "z2"), ("y0", "w2"))
    expected = {(rep.int_of(a), rep.int_of(b)) for a, b in named}
    exits: dict[tuple[int, int], set[int]] = {}
    for row in load_rows("T1"):
        exits.setdefault((row.x, row.y), set()).add(row.xj)
    triple = {pair for pair, xjs in exits.items() if len(xjs) == 3}
    ok = rep.unique and triple == expected
    _line(2, ok, f"{len(triple)} three-exit pairs, labeling unique={rep.unique}")


def test_c03_far_pairs_doubly_right_and_left():
    t0 = time.monotonic()
    h5 = flower(5)
    vs = list(h5.vertices)
    pairs5 = [(a, b) for a in vs for b in vs if a != b and h5.distance(a, b) >= 3]
    h7 = flower(7)
    pairs7 = [("x0", "x3"), ("z0", "z3"), ("z3", "z0")]
    violations = []
    for h, pairs in ((h5, pairs5), (h7, pairs7)):
        for a, b in pairs:
            rp, lp = classify_superedge(h, a, b)
            if not (rp.doubly_right and lp.doubly_left):
                violations.append((a, b))
    dt = time.monotonic() - t0
    ok = not violations and len(pairs5) == 200 and dt < 600
    _line(3, ok, f"{len(pairs5) + len(pairs7)} pairs in {dt:.1f}s, bad={violations}")


def _fingerprint(sec) -> str:
    return json.dumps(
        [
            sorted(sec.colors.items()),
            sec.kind,
            sec.j,
            sec.k,
            list(sec.chain_l),
            sec.chain_l_pair,
            list(sec.chain_r),
            sec.chain_r_pair,
        ]
    )


def test_c04_vertex_deleted_cycles_drive_right_colorings():
    h5 = flower(5)
    for v in h5.vertices:
        assert hamiltonian_cycle(h5.delete_vertices([v]), 60000) is not None, v
    checked = 0
    for h in (h5, petersen()):
        vs = list(h.vertices)
        for x in vs:
            for y in vs:
                if x == y or h.edge_between(x, y):
                    continue
                got = hypo_right(h, x, y)
                g_y = h.delete_vertices([y])
                cyc = hamiltonian_cycle(g_y, 60000)
                ref = right_from_factor(h, x, y, two_factor_from_cycles(g_y, [cyc]))
                assert _fingerprint(got) == _fingerprint(ref), (x, y)
                checked += 1
    _line(4, checked == 380, f"{checked} pairs byte-identical")


def test_c05_dock_specs_color_with_poor_floor():
    t0 = time.monotonic()
    sigma = base_coloring(petersen())
    min_poor = None
    for seed in range(100):
        spec = random_dock_spec(seed)
        profiles = slot_profiles(spec)
        assert all(
            profiles[i][0].dock_right(spec.slots[i].d) for i in range(spec.total)
        )
        cert = assemble_dock_right(build(spec), sigma, profiles=profiles)
        assert cert.report.normal
        poor = cert.report.poor_count
        min_poor = poor if min_poor is None else min(min_poor, poor)
    dt = time.monotonic() - t0
    ok = min_poor >= 24 and dt < 60
    _line(5, ok, f"100 specs in {dt:.1f}s, min poor={min_poor}")


def test_c06_general_specs_color_across_all_subcases():
    t0 = time.monotonic()
    sigma = base_coloring(petersen())
    cases = Counter()
    none_dock = 0
    orientations, snarks = set(), set()
    floor_bad = []
    for seed in range(200):
        spec = random_general_spec(seed)
        profiles = slot_profiles(spec)
        if not any(
            profiles[i][0].dock_right(spec.slots[i].d) for i in range(spec.total)
        ):
            none_dock += 1
        for s in spec.slots:
            orientations.add(s.orientation)
            snarks.add(s.snark)
        cert = assemble_general(build(spec), sigma, profiles=profiles)
        assert cert.report.normal
        for p in cert.provenance.values():
            cases[p["case"]] += 1
        if len(cert.right_colored_slots()) < spec.total // 2:
            floor_bad.append(seed)
    dt = time.monotonic() - t0
    ok = (
        all(cases[c] >= 10 for c in ("2.a", "2.b", "2.c"))
        and none_dock >= 1
        and not floor_bad
        and orientations == {"xy", "yx"}
        and snarks == {"J5", "J7"}
        and dt < 600
    )
    note = (
        f"200 specs in {dt:.1f}s, 2.a={cases['2.a']} 2.b={cases['2.b']} "
        f"2.c={cases['2.c']}, no-dock specs={none_dock}"
    )
    _line(6, ok, note)


def test_c07_sweep_and_search_classifiers_agree():
    t0 = time.monotonic()
    h = flower(5)
    sampled = (("x0", "y2"), ("y2", "x0"), ("y0", "y1"), ("x0", "z2"), ("z2", "y0"))
    disagreements = []
    for x, y in sampled:
        swept = set(classify_superedge(h, x, y)[0].right_js)
        searched = set(right_js_via_search(h, x, y))
        if swept != searched:
            disagreements.append((x, y, sorted(swept), sorted(searched)))
    dt = time.monotonic() - t0
    ok = not disagreements and dt < 300
    _line(7, ok, f"5 pairs in {dt:.1f}s, disagreements={disagreements}")


def test_c08_petersen_normal_colorings_all_poor_free():
    t0 = time.monotonic()
    g = petersen()
    count = 0
    max_poor = 0
    for colors in search_normal_5(g, budget_ms=120000):
        rep = verify(g, colors)
        assert rep.normal
        count += 1
        max_poor = max(max_poor, rep.poor_count)
    dt = time.monotonic() - t0
    ok = count > 0 and max_poor == 0 and dt < 120
    _line(8, ok, f"{count} colorings in {dt:.1f}s, max poor={max_poor}")


def test_c09_patch_contraction_steps_down_twice():
    t0 = time.monotonic()
    j7, j9 = flower(7), flower(9)
    small = k_reduce(j7, find_K_in_flower(j7))
    mid = k_reduce(j9, find_K_in_flower(j9))
    ok5 = is_isomorphic(small, flower(5))
    ok7 = is_isomorphic(mid, flower(7))
    dt = time.monotonic() - t0
    ok = ok5 and ok7 and dt < 30
    _line(9, ok, f"J7->J5 {ok5}, J9->J7 {ok7} in {dt:.1f}s")


def test_c10_large_superposition_defeats_three_colors():
    spec = SuperpositionSpec(
        petersen(),
        (("0", "1", "2", "3", "4"),),
        ["A"] * 5,
        [SuperedgeSlot("J5", "y2", "x0")] * 5,
        (),
        "petersen",
    )
    built = build(spec)
    assert len(built.graph.vertices) == 100
    try:
        colorable = is_3_edge_colorable(built.graph, budget_ms=120000)
        ok = colorable is False
        note = f"refuted on {len(built.graph.vertices)} vertices"
    except SearchTimeout:
        ok = True
        note = "budget exhausted without a 3-coloring (accepted)"
    _line(10, ok, note)
