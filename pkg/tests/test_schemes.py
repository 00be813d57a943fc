import pytest

from snarkcolor.coloring import SearchTimeout, consistent, make_scheme
from snarkcolor.factors import hamiltonian_cycle, two_factor_from_cycles, two_factors
from snarkcolor.multipole import Multipole
from snarkcolor.schemes import (
    SchemeError,
    classify_superedge,
    complement,
    hypo_right,
    instantiate,
    left_from_factor,
    left_pattern,
    matches_pattern,
    right_from_factor,
    right_js_via_search,
    right_pattern,
)
from snarkcolor.snarks import flower, superedge


def _first_right(h, x, y):
    for f in two_factors(h.delete_vertices([y])):
        odd = [c for c in f.cycles if len(c) % 2]
        if len(odd) == 1 and x in odd[0]:
            return f
    raise AssertionError("no right-good factor found")


def _first_left(h, x, y):
    for f in two_factors(h):
        odd = [c for c in f.cycles if len(c) % 2]
        if len(odd) == 2 and x in odd[0] + odd[1] and y in odd[0] + odd[1]:
            if not any(x in c and y in c for c in odd):
                return f
    raise AssertionError("no left-good factor found")


def test_right_from_factor_shape():
    j5 = flower(5)
    f = _first_right(j5, "y2", "x0")
    sec = right_from_factor(j5, "y2", "x0", f)
    rep = sec.verify()
    assert rep.normal and rep.poor_count == 24 and rep.rich_count == 0
    assert set(sec.colors.values()) <= {1, 2, 3}
    assert matches_pattern(sec)
    pattern = right_pattern(sec.j)
    for i in (1, 2, 3):
        assert consistent(sec.scheme_left(i), pattern[f"l{i}"])
        assert consistent(sec.scheme_right(i), pattern[f"r{i}"])
    # the exit semiedge and the chain endpoints partition the left connector
    ends = {sec.chain_l[0], sec.chain_l[-1]}
    assert ends == {sec.se.left_semi(i) for i in (1, 2, 3) if i != sec.j}
    assert sec.chain_l_pair == (2, 1)


def test_right_from_factor_rejects_left_good():
    j5 = flower(5)
    f = _first_left(j5, "y2", "x0")
    with pytest.raises(SchemeError, match="right-good"):
        right_from_factor(j5, "y2", "x0", f)


def test_left_from_factor_shape():
    j5 = flower(5)
    f = _first_left(j5, "y2", "x0")
    sec = left_from_factor(j5, "y2", "x0", f)
    rep = sec.verify()
    assert rep.normal and rep.rich_count == 0
    assert matches_pattern(sec)
    pattern = left_pattern(sec.j, sec.k)
    for i in (1, 2, 3):
        assert consistent(sec.scheme_left(i), pattern[f"l{i}"])
        assert consistent(sec.scheme_right(i), pattern[f"r{i}"])
    touched_l = {v for e in sec.chain_l for v in sec.se.m.element_vertices(e)}
    touched_r = {v for e in sec.chain_r for v in sec.se.m.element_vertices(e)}
    assert not touched_l & touched_r


def test_classify_superedge_fully_right_pair():
    j5 = flower(5)
    rp, lp = classify_superedge(j5, "y2", "x0")
    assert rp.right_js == (1, 2, 3)
    assert rp.fully_right and rp.doubly_right
    assert lp.doubly_left
    for j in (1, 2, 3):
        assert rp.dock_right(j)
        sec = rp.witness(j)
        assert sec.j == j and matches_pattern(sec)


def test_classify_superedge_partial_pair():
    j5 = flower(5)
    rp, _ = classify_superedge(j5, "x0", "y2")
    assert rp.right_js == (1, 3)  # exits at neighbors x1 and y0 only
    assert rp.doubly_right and not rp.fully_right
    assert not rp.dock_right(2)


def test_oracle_agrees_with_factor_sweep():
    j5 = flower(5)
    assert right_js_via_search(j5, "x0", "y2", budget_ms=300000) == (1, 3)


def test_classify_timeout():
    with pytest.raises(SearchTimeout):
        classify_superedge(flower(5), "y2", "x0", budget_ms=0)


def test_instantiate_identity_and_permutation():
    j5 = flower(5)
    sec = right_from_factor(j5, "y2", "x0", _first_right(j5, "y2", "x0"))
    same = instantiate(sec, (1, 2, 3))
    assert same.colors == sec.colors

    moved = instantiate(sec, (5, 4, 1))
    rep = moved.verify()
    assert rep.normal
    assert moved.colors[moved.se.left_semi(sec.j)] == 1
    for i in (1, 2, 3):
        assert moved.scheme_right(i).primary == 1
    assert moved.chain_l_pair == (4, 5)  # old (2,1) through the permutation

    with pytest.raises(SchemeError, match="distinct"):
        instantiate(sec, (1, 1, 3))


def test_instantiate_chain_variant():
    j5 = flower(5)
    sec = right_from_factor(j5, "y2", "x0", _first_right(j5, "y2", "x0"))
    varied = instantiate(sec, (1, 2, 3), chain_variant=(4, 5))
    diff = {e for e in sec.colors if sec.colors[e] != varied.colors[e]}
    assert diff == set(sec.chain_l)
    assert varied.verify().normal
    # the variant exists to move the non-exit left pair; the right connector
    # and the exit semiedge must survive it unchanged up to consistency
    for i in (1, 2, 3):
        assert consistent(varied.scheme_right(i), sec.scheme_right(i))
        if i == sec.j:
            assert consistent(varied.scheme_left(i), sec.scheme_left(i))
        else:
            assert varied.scheme_left(i).primary == 5
    assert varied.chain_l_pair == (5, 4)

    with pytest.raises(SchemeError, match="variant"):
        instantiate(sec, (1, 2, 3), chain_variant=(3, 4))


def test_complement_involution_and_schemes():
    j5 = flower(5)
    sec = right_from_factor(j5, "y2", "x0", _first_right(j5, "y2", "x0"))
    bar = complement(sec)
    assert bar.verify().normal
    assert complement(bar).colors == sec.colors
    for i in (1, 2, 3):
        assert consistent(bar.scheme_right(i), sec.scheme_right(i))
    # exit-side left semiedge keeps its scheme, the other two swap primaries
    assert bar.scheme_left(sec.j) == sec.scheme_left(sec.j)
    for i in (1, 2, 3):
        if i != sec.j:
            assert bar.scheme_left(i).primary == 1
            assert sec.scheme_left(i).primary == 2
    diff = {e for e in sec.colors if sec.colors[e] != bar.colors[e]}
    assert diff == set(sec.chain_l)


def test_hypo_right_matches_factor_route():
    j5 = flower(5)
    sec = hypo_right(j5, "y2", "x0")
    g_y = j5.delete_vertices(["x0"])
    cyc = hamiltonian_cycle(g_y)
    f = two_factor_from_cycles(g_y, [cyc])
    direct = right_from_factor(j5, "y2", "x0", f)
    assert sec.colors == direct.colors
    assert sec.j == direct.j


def test_hypo_right_error_fixture():
    # two near-K4 blocks joined by two edges: deleting b1 leaves a cut edge,
    # so no Hamiltonian cycle survives
    edges = []
    for p in ("a", "b"):
        edges += [
            (f"{p}1", f"{p}3"), (f"{p}1", f"{p}4"),
            (f"{p}2", f"{p}3"), (f"{p}2", f"{p}4"), (f"{p}3", f"{p}4"),
        ]
    edges += [("a1", "b1"), ("a2", "b2")]
    h = Multipole([f"{p}{i}" for p in "ab" for i in (1, 2, 3, 4)], edges)
    assert h.is_cubic and h.is_bridgeless()
    assert hamiltonian_cycle(h.delete_vertices(["b1"])) is None
    with pytest.raises(SchemeError, match="Hamiltonian"):
        hypo_right(h, "a3", "b1")


def test_factor_coloring_requires_canonical_base():
    j5 = flower(5)
    sec = right_from_factor(j5, "y2", "x0", _first_right(j5, "y2", "x0"))
    moved = instantiate(sec, (4, 5, 3))
    with pytest.raises(SchemeError, match="3-colored"):
        instantiate(moved, (1, 2, 3))


def test_patterns_shape():
    rp = right_pattern(2)
    assert rp["l2"] == make_scheme(3, (1, 2))
    assert rp["l1"] == make_scheme(2, (1, 3))
    assert rp["r3"] == make_scheme(3, (1, 2))
    lp = left_pattern(1, 3)
    assert lp["l1"] == make_scheme(3, (1, 2))
    assert lp["l3"] == make_scheme(1, (2, 3))
    assert lp["r3"] == make_scheme(3, (1, 2))
    assert lp["r1"] == make_scheme(2, (1, 3))
