import pytest

from snarkcolor.coloring import SearchTimeout
from snarkcolor.factors import (
    FactorError,
    LeftGood,
    Neither,
    RightGood,
    classify_factor,
    hamiltonian_cycle,
    perfect_matchings,
    two_factor_from_cycles,
    two_factors,
)
from snarkcolor.multipole import Multipole
from snarkcolor.snarks import flower, petersen


def _k4():
    vs = "abcd"
    return Multipole(vs, [(u, v) for i, u in enumerate(vs) for v in vs[i + 1 :]])


def _k33():
    a = [f"a{i}" for i in range(3)]
    b = [f"b{i}" for i in range(3)]
    return Multipole(a + b, [(x, y) for x in a for y in b])


def test_matching_counts():
    assert len(list(perfect_matchings(_k4()))) == 3
    assert len(list(perfect_matchings(_k33()))) == 6
    assert len(list(perfect_matchings(petersen()))) == 6


def test_matchings_deterministic_and_odd_empty():
    g = petersen()
    assert list(perfect_matchings(g)) == list(perfect_matchings(g))
    triangle = Multipole("abc", [("a", "b"), ("b", "c"), ("a", "c")])
    assert list(perfect_matchings(triangle)) == []


def test_two_factor_complement_bijection():
    for g in (_k4(), _k33(), petersen(), flower(5)):
        matchings = list(perfect_matchings(g))
        factors = list(two_factors(g))
        assert len(matchings) == len(factors)
        for m, f in zip(matchings, factors):
            assert f.edge_ids == frozenset(g.edges) - frozenset(m)


def test_k4_and_petersen_factor_shapes():
    for f in two_factors(_k4()):
        assert [len(c) for c in f.cycles] == [4]
    for f in two_factors(petersen()):
        assert sorted(len(c) for c in f.cycles) == [5, 5]


def test_odd_cycle_parity_even_order():
    for f in two_factors(flower(5)):
        odd = sum(1 for c in f.cycles if len(c) % 2)
        assert odd % 2 == 0
        assert odd >= 2  # an all-even 2-factor would 3-color a snark


def test_two_factors_subcubic():
    g = flower(5).delete_vertices(["y0"])
    factors = list(two_factors(g))
    assert factors
    for f in factors:
        assert f.vertices == frozenset(g.vertices)
        odd = sum(1 for c in f.cycles if len(c) % 2)
        assert odd % 2 == 1  # 19 vertices
    # every deleted edge avoided the degree-2 vertices
    deg2 = {v for v in g.vertices if g.degree(v) == 2}
    for f in factors:
        for eid, (u, v) in g.edges.items():
            if eid not in f.edge_ids:
                assert u not in deg2 and v not in deg2


def test_two_factors_degenerate_inputs():
    path = Multipole("abc", [("a", "b"), ("b", "c")])
    assert list(two_factors(path)) == []
    with pytest.raises(FactorError):
        list(two_factors(_k33().add_edges([("a0", "a1")]).add_edges([("a0", "a2")])))


def test_factor_from_cycles_and_errors():
    g = _k4()
    f = two_factor_from_cycles(g, [("a", "b", "c", "d")])
    assert f.cycles == (("a", "b", "c", "d"),)
    assert f.edge_ids == {"a|b", "b|c", "c|d", "a|d"}
    assert f.cycle_through("c") == ("a", "b", "c", "d")
    with pytest.raises(FactorError, match="no edge"):
        two_factor_from_cycles(_k33(), [("a0", "a1", "a2")])
    with pytest.raises(FactorError, match="short"):
        two_factor_from_cycles(g, [("a", "b")])
    with pytest.raises(FactorError, match="repeated"):
        two_factor_from_cycles(g, [("a", "b", "a", "d")])
    with pytest.raises(FactorError, match="overlap"):
        two_factor_from_cycles(g, [("a", "b", "c"), ("a", "c", "d")])
    bowtie = Multipole(
        "abcde",
        [("a", "b"), ("b", "c"), ("a", "c"), ("a", "d"), ("d", "e"), ("a", "e")],
    )
    with pytest.raises(FactorError, match="degree"):
        two_factor_from_cycles(bowtie, [("a", "b", "c"), ("a", "d", "e")])


def test_factor_canonicalization():
    g = _k4()
    same = [
        two_factor_from_cycles(g, [cyc])
        for cyc in (("a", "b", "c", "d"), ("c", "d", "a", "b"), ("d", "c", "b", "a"))
    ]
    assert same[0] == same[1] == same[2]
    assert len({f for f in same}) == 1


def test_hamiltonian_existence():
    assert hamiltonian_cycle(_k4()) == ("a", "b", "c", "d")
    assert hamiltonian_cycle(petersen()) is None
    assert hamiltonian_cycle(flower(5)) is None  # snark, also non-hamiltonian
    for v in ("x0", "y3", "w2"):
        cyc = hamiltonian_cycle(flower(5).delete_vertices([v]))
        assert cyc is not None and len(cyc) == 19
    with pytest.raises(SearchTimeout):
        hamiltonian_cycle(flower(9), budget_ms=0)


def test_classify_right_good_from_hamiltonian():
    h = flower(5)
    g = h.delete_vertices(["y0"])
    cyc = hamiltonian_cycle(g)
    f = two_factor_from_cycles(g, [cyc])
    got = classify_factor(f, h, "z2", "y0")
    assert isinstance(got, RightGood)
    assert got.j in (1, 2, 3)
    # the reported j names the one absent edge at x
    nbr = h.neighbors("z2")[got.j - 1]
    assert h.edge_between("z2", nbr) not in f.edge_ids
    assert len(got.cycle_x) == 19


def test_classify_left_good_and_neither():
    h = flower(5)
    found_left = found_neither = False
    for f in two_factors(h):
        odd = [c for c in f.cycles if len(c) % 2]
        if len(odd) != 2:
            continue
        x = odd[0][0]
        y_same = odd[0][2]  # two steps along the same odd cycle: nonadjacent (girth 5)
        y_other = odd[1][0]
        if h.edge_between(x, y_other) is None and not found_left:
            got = classify_factor(f, h, x, y_other)
            assert isinstance(got, LeftGood)
            assert got.cycle_x == f.cycle_through(x)
            assert got.cycle_y == f.cycle_through(y_other)
            assert 1 <= got.j <= 3 and 1 <= got.k <= 3
            found_left = True
        if h.edge_between(x, y_same) is None and not found_neither:
            got = classify_factor(f, h, x, y_same)
            assert isinstance(got, Neither)
            found_neither = True
        if found_left and found_neither:
            break
    assert found_left and found_neither


def test_classify_span_mismatch():
    h = flower(5)
    g = h.delete_vertices(["y0"])
    f = next(iter(two_factors(g)))
    with pytest.raises(FactorError, match="spans"):
        classify_factor(f, h, "z2", "y1")  # wrong missing vertex
