import json

import pytest

from snarkcolor.assembler import (
    AssembleError,
    assemble_dock_right,
    assemble_even_subgraph,
    assemble_general,
    base_coloring,
    chunk_plan,
    slot_profiles,
)
from snarkcolor.builder import SuperedgeSlot, SuperpositionSpec, build
from snarkcolor.multipole import Multipole, to_graph6
from snarkcolor.schemes import complement, instantiate
from snarkcolor.snarks import flower, petersen

# (x, y, d) with d outside right_js, so the slot is not dock-right
_LIMITED = (("x0", "y2", 2), ("x0", "z2", 1))

_sigma_cache = {}


def _sigma(name, g):
    if name not in _sigma_cache:
        _sigma_cache[name] = base_coloring(g)
    return _sigma_cache[name]


def _pentagon(slots, kinds=("A",) * 5, twists=()):
    base = petersen()
    cycle = ("0", "1", "2", "3", "4")
    spec = SuperpositionSpec(base, [cycle], kinds, slots, twists, base_name="petersen")
    return spec, _sigma("petersen", base)


def _full_slot():
    return SuperedgeSlot("J5", "y2", "x0")


def _limited_slots(n):
    out = []
    for i in range(n):
        x, y, d = _LIMITED[i % 2]
        out.append(SuperedgeSlot("J5", x, y, p=(2, 3, 1), d=d))
    return out


def _slot_poor_count(cert, i):
    tag = f"B{i}/"
    return sum(
        1
        for eid, (u, v) in cert.built.graph.edges.items()
        if u.startswith(tag) and v.startswith(tag)
        and cert.report.classes[eid] == "poor"
    )


def test_base_coloring_search_and_verify():
    got = base_coloring(petersen())
    assert len(got) == 15
    k4 = Multipole(
        ["a", "b", "c", "d"],
        [("a", "b"), ("a", "c"), ("a", "d"), ("b", "c"), ("b", "d"), ("c", "d")],
    )
    fixed = {
        frozenset("ab"): 1, frozenset("cd"): 1, frozenset("ac"): 2,
        frozenset("bd"): 2, frozenset("ad"): 3, frozenset("bc"): 3,
    }
    colors = {eid: fixed[frozenset(u + v)] for eid, (u, v) in k4.edges.items()}
    assert base_coloring(k4, colors) == colors
    bad = dict(colors)
    bad[next(iter(bad))] = 4
    with pytest.raises(AssembleError):
        base_coloring(k4, bad)


def test_dock_right_pentagon_certificate():
    spec, sigma = _pentagon([_full_slot() for _ in range(5)])
    cert = assemble_dock_right(build(spec), sigma)
    assert cert.is_normal
    assert cert.right_colored_slots() == (0, 1, 2, 3, 4)
    for i in range(5):
        p = cert.provenance[i]
        assert p["coloring"] == "R" and p["j"] == 1
        assert p["case"] == "dock-right" and p["complement"] is False
        assert _slot_poor_count(cert, i) >= 24


def test_dock_right_with_prime_slot():
    kinds = ("A", "A", "A'", "A", "A")
    spec, sigma = _pentagon([_full_slot() for _ in range(5)], kinds=kinds)
    built = build(spec)
    cert = assemble_dock_right(built, sigma)
    assert cert.is_normal
    assert cert.provenance[2]["complement"] is True
    assert cert.provenance[1]["complement"] is False
    assert built.internal_edge(2) in cert.colors
    # a complemented right slot keeps its internal poor share
    assert _slot_poor_count(cert, 2) >= 24


def test_dock_right_rejects_missing_dock():
    x, y, d = _LIMITED[0]
    slots = [_full_slot() for _ in range(4)] + [SuperedgeSlot("J5", x, y, d=d)]
    spec, sigma = _pentagon(slots)
    with pytest.raises(AssembleError) as err:
        assemble_dock_right(build(spec), sigma)
    assert "4" in str(err.value)


class _StubRight:
    def __init__(self, flag):
        self.flag = flag

    def dock_right(self, d):
        return self.flag


def _stub_profiles(flags):
    return [(_StubRight(f), None) for f in flags]


def test_chunk_plan_contract_examples():
    spec, _ = _pentagon([_full_slot() for _ in range(5)])

    plan = chunk_plan(spec, _stub_profiles([False] * 5))
    assert [(n, idx) for n, idx in plan.steps] == [("P2", (4, 3)), ("P3", (2, 1, 0))]
    assert sorted(plan.K) == [0, 3]
    assert sorted(plan.T) == [1, 2, 4]

    plan = chunk_plan(spec, _stub_profiles([True] * 5))
    assert [n for n, _ in plan.steps] == ["P1"] * 5
    assert sorted(plan.K) == [0, 1, 2, 3, 4]

    # lone dock-right slot rotates to lead the last chunk
    plan = chunk_plan(spec, _stub_profiles([False, False, True, False, False]))
    assert [(n, idx) for n, idx in plan.steps] == [("P2", (1, 0)), ("P3", (4, 3, 2))]
    assert sorted(plan.K) == [0, 2]

    base = petersen()
    hexa = ("0", "1", "6", "9", "7", "5")
    spec6 = SuperpositionSpec(
        base, [hexa], ("A",) * 6, [_full_slot() for _ in range(6)], base_name="petersen"
    )
    plan = chunk_plan(spec6, _stub_profiles([False] * 6))
    assert [(n, idx) for n, idx in plan.steps] == [
        ("P2", (5, 4)), ("P2", (3, 2)), ("P2", (1, 0)),
    ]


def test_general_case1_all_a():
    spec, sigma = _pentagon(_limited_slots(5))
    cert = assemble_general(build(spec), sigma)
    assert cert.is_normal
    assert len(cert.right_colored_slots()) >= 2
    for i in range(5):
        assert cert.provenance[i]["case"] == "1"
    procs = {i: cert.provenance[i]["procedure"] for i in range(5)}
    assert procs == {4: "P2", 3: "P2", 2: "P3", 1: "P3", 0: "P3"}
    again = assemble_general(build(spec), sigma)
    assert cert.to_json() == again.to_json()


def test_general_case1_with_twists():
    spec, sigma = _pentagon(_limited_slots(5), twists=(1, 3))
    cert = assemble_general(build(spec), sigma)
    assert cert.is_normal
    assert cert.provenance[4]["coloring"] == "R"


def test_general_case2_subcases():
    # plan is [P2(4,3), P3(2,1,0)]: K = {0, 3}, T = {1, 2, 4}
    kinds = ("A", "A'", "A", "A'", "A'")
    spec, sigma = _pentagon(_limited_slots(5), kinds=kinds)
    built = build(spec)
    cert = assemble_general(built, sigma)
    assert cert.is_normal
    cases = {i: cert.provenance[i]["case"] for i in range(5)}
    assert cases == {0: "2.c", 1: "2.b", 2: "2.c", 3: "2.a", 4: "2.b"}
    assert cert.provenance[3]["complement"] is True
    assert cert.provenance[1]["complement"] is False
    for i in (1, 3, 4):
        assert built.internal_edge(i) in cert.colors
    assert len(cert.right_colored_slots()) >= 2


def test_general_case2_with_twists():
    kinds = ("A", "A'", "A", "A'", "A'")
    spec, sigma = _pentagon(_limited_slots(5), kinds=kinds, twists=(2, 4))
    cert = assemble_general(build(spec), sigma)
    assert cert.is_normal


def test_restriction_closure():
    kinds = ("A", "A'", "A", "A'", "A'")
    spec, sigma = _pentagon(_limited_slots(5), kinds=kinds)
    built = build(spec)
    profiles = slot_profiles(spec)
    cert = assemble_general(built, sigma, profiles)
    for i in range(5):
        p = cert.provenance[i]
        if p["coloring"] == "R":
            sec = instantiate(profiles[i][0].witness(p["j"]), tuple(p["targets"]))
        else:
            sec = instantiate(
                profiles[i][1].witness(p["j"], p["k"]),
                tuple(p["targets"]),
                tuple(p["variant"]),
            )
        if p["complement"]:
            sec = complement(sec)
        for eid in sec.se.m.edges:
            u, v = sec.se.m.endpoints(eid)
            target = built.graph.edge_between(f"B{i}/{u}", f"B{i}/{v}")
            assert cert.colors[target] == sec.colors[eid]


def test_general_even_cycle_pure_p2():
    base = petersen()
    hexa = ("0", "1", "6", "9", "7", "5")
    spec = SuperpositionSpec(
        base, [hexa], ("A",) * 6, _limited_slots(6), base_name="petersen"
    )
    sigma = _sigma("petersen", base)
    cert = assemble_general(build(spec), sigma)
    assert cert.is_normal
    assert len(cert.right_colored_slots()) == 3
    assert {cert.provenance[i]["procedure"] for i in range(6)} == {"P2"}


def test_even_subgraph_mixed_strategies():
    j5 = flower(5)
    pent = tuple(f"x{i}" for i in range(5))
    zw = ("z0", "w1", "z2", "w3", "z4", "w0", "z1", "w2", "z3", "w4")
    slots = [_full_slot() for _ in range(5)] + _limited_slots(10)
    kinds = ("A",) * 10 + ("A'", "A'") + ("A",) * 3
    spec = SuperpositionSpec(j5, [pent, zw], kinds, slots, base_name="J5")
    sigma = _sigma("J5", j5)
    built = build(spec)
    cert = assemble_even_subgraph(built, sigma)
    assert cert.is_normal
    for i in range(5):
        assert cert.provenance[i]["case"] == "dock-right"
    assert {cert.provenance[i]["case"] for i in range(5, 15)} <= {"2.a", "2.b", "2.c"}
    # third edges keep the base colors around the untouched y hub
    sig_f = {i: sigma[j5.edge_between(f"x{i}", f"y{i}")] for i in range(5)}
    for i in range(5):
        assert cert.colors[built.third_edge(i)] == sig_f[i]


def test_empty_cycle_list_returns_sigma():
    base = petersen()
    spec = SuperpositionSpec(base, [], [], [], base_name="petersen")
    sigma = _sigma("petersen", base)
    built = build(spec)
    cert = assemble_even_subgraph(built, sigma)
    assert cert.is_normal
    for eid, (a, b) in base.edges.items():
        assert cert.colors[built.graph.edge_between(a, b)] == sigma[eid]


def test_certificate_shape_and_hash():
    spec, sigma = _pentagon([_full_slot() for _ in range(5)])
    built = build(spec)
    cert = assemble_dock_right(built, sigma)
    obj = json.loads(cert.to_json())
    assert set(obj) == {"graph_hash", "colors", "provenance", "report"}
    assert set(obj["provenance"]) == {"0", "1", "2", "3", "4"}
    assert obj["report"]["normal"] is True
    assert len(obj["colors"]) == len(built.graph.edges)
    import hashlib

    assert obj["graph_hash"] == hashlib.sha256(
        to_graph6(built.graph).encode()
    ).hexdigest()
