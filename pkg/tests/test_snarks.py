import pytest

from snarkcolor.multipole import is_isomorphic
from snarkcolor.snarks import (
    find_K_in_flower,
    flower,
    k_reduce,
    petersen,
    superedge,
)


def _girth(g):
    best = None
    for root in g.vertices:
        dist = {root: 0}
        parent_edge = {root: None}
        frontier = [root]
        while frontier:
            nxt = []
            for v in frontier:
                for eid in g.incidences(v):
                    if eid not in g.edges or eid == parent_edge[v]:
                        continue
                    w = g.other_end(eid, v)
                    if w in dist:
                        cyc = dist[v] + dist[w] + 1
                        if best is None or cyc < best:
                            best = cyc
                    else:
                        dist[w] = dist[v] + 1
                        parent_edge[w] = eid
                        nxt.append(w)
            frontier = nxt
    return best


def test_petersen_shape():
    p = petersen()
    assert len(p.vertices) == 10
    assert len(p.edges) == 15
    assert p.is_cubic
    assert p.is_graph
    assert p.is_bridgeless()
    assert _girth(p) == 5


def test_flower_shape():
    j5 = flower(5)
    assert len(j5.vertices) == 20
    assert len(j5.edges) == 30
    assert j5.is_cubic
    assert j5.edge_between("x0", "x1")
    assert j5.edge_between("z0", "w1")
    assert j5.edge_between("w0", "z1")
    assert j5.edge_between("z4", "w0")  # rim wraps around
    assert j5.is_bridgeless()
    assert _girth(j5) == 5


def test_flower_rejects_bad_r():
    for bad in (4, 6, 3, 1, 0, -5):
        with pytest.raises(ValueError):
            flower(bad)


def test_flower_rotation_is_automorphism():
    for r in (5, 7):
        g = flower(r)
        rot = {f"{role}{i}": f"{role}{(i + 1) % r}" for role in "xyzw" for i in range(r)}
        for u, v in g.edges.values():
            assert g.edge_between(rot[u], rot[v]) is not None


def test_superedge_shape():
    j5 = flower(5)
    se = superedge(j5, "y2", "x0")
    assert len(se.m.vertices) == 18
    assert len(se.m.edges) == 24
    assert len(se.m.semi_vertex) == 6
    assert se.m.is_cubic
    # connector order follows ascending canonical order of the lost neighbor
    assert se.left == ("x2|y2~", "y2|z2~", "y2|w2~")
    assert se.right == ("x0|x1~", "x0|x4~", "x0|y0~")
    assert se.left_semi(2) == "y2|z2~"
    assert se.m.semi_origin["x2|y2~"] == "x2|y2"


def test_superedge_orientation_swap():
    j5 = flower(5)
    a = superedge(j5, "y2", "x0", "xy")
    b = superedge(j5, "y2", "x0", "yx")
    assert a.left == b.right
    assert a.right == b.left
    assert b.x == "x0" and b.y == "y2"


def test_superedge_errors():
    j5 = flower(5)
    with pytest.raises(ValueError, match="adjacent"):
        superedge(j5, "x0", "x1")
    with pytest.raises(ValueError, match="differ"):
        superedge(j5, "x0", "x0")
    with pytest.raises(ValueError, match="unknown"):
        superedge(j5, "x0", "nope")
    with pytest.raises(ValueError, match="orientation"):
        superedge(j5, "y2", "x0", "sideways")


def test_find_patch_and_reduce_j7():
    j7 = flower(7)
    emb = find_K_in_flower(j7)
    assert len(emb) == 12
    assert emb["x1"] == "x4" and emb["w3"] == "w6"
    small = k_reduce(j7, emb)
    assert len(small.vertices) == len(j7.vertices) - 8
    assert small.is_cubic
    assert is_isomorphic(small, flower(5))


def test_reduce_j9():
    j9 = flower(9)
    small = k_reduce(j9, find_K_in_flower(j9, 0))
    assert len(small.vertices) == 28
    assert small.is_cubic
    assert is_isomorphic(small, flower(7))


def test_patch_errors():
    with pytest.raises(ValueError):
        find_K_in_flower(flower(5))
    j7 = flower(7)
    emb = find_K_in_flower(j7)
    bogus = dict(emb)
    bogus["x1"], bogus["z1"] = bogus["z1"], bogus["x1"]
    with pytest.raises(ValueError, match="invalid|distinct"):
        k_reduce(j7, bogus)
    with pytest.raises(ValueError, match="missing"):
        k_reduce(j7, {"x1": "x0"})
    with pytest.raises(ValueError):
        find_K_in_flower(petersen())
