"""Golden witness tables for the two Flower-snark superedge families.

Each right-table row is (x, y, xj, factor): a spanning union of disjoint
cycles of J - y whose induced boundary coloring is dock-pattern right at the
connector position of neighbor xj.  Left-table rows carry (x, y, xj, yk,
factor) for two-sided patterns on the full snark.  Vertex names are the
canonical integer labels 1..4r.  Cycles are stored closed-implicitly: the
last vertex connects back to the first.

The rows are frozen data.  Validation code must never edit them; the
checksum below guards against accidental modification.
"""

RIGHT_J5 = (
    (1, 8, 2, ((1, 5, 4, 3, 2, 7, 17, 13, 19, 9, 14, 18, 12, 16, 15, 10, 20, 11, 6),)),
    (1, 8, 6, ((1, 2, 3, 4, 5), (6, 11, 20, 10, 15, 16), (7, 12, 18, 14, 9, 19, 13, 17),)),
    (8, 1, 3, ((2, 3, 4, 5, 10, 20, 14, 9, 19, 15, 16, 6, 11, 17, 13, 8, 18, 12, 7),)),
    (8, 1, 13, ((2, 3, 8, 18, 12, 16, 6, 11, 20, 14, 9, 4, 5, 10, 15, 19, 13, 17, 7),)),
    (8, 1, 18, ((2, 3, 8, 13, 17, 11, 6, 16, 15, 19, 9, 4, 5, 10, 20, 14, 18, 12, 7),)),
    (1, 12, 2, ((8, 13, 19, 9, 14, 18), (1, 5, 4, 3, 2, 7, 17, 11, 20, 10, 15, 16, 6),)),
    (1, 12, 6, ((3, 4, 9, 14, 18, 8), (1, 2, 7, 17, 13, 19, 15, 16, 6, 11, 20, 10, 5),)),
    (12, 1, 7, ((2, 3, 4, 5, 10, 15, 19, 9, 14, 20, 11, 6, 16, 12, 18, 8, 13, 17, 7),)),
    (12, 1, 16, ((2, 3, 4, 5, 10, 20, 14, 9, 19, 15, 16, 6, 11, 17, 13, 8, 18, 12, 7),)),
    (1, 13, 5, ((1, 2, 3, 8, 18, 14, 20, 10, 5, 4, 9, 19, 15, 16, 12, 7, 17, 11, 6),)),
    (1, 13, 6, ((6, 11, 17, 7, 12, 16), (1, 2, 3, 8, 18, 14, 20, 10, 15, 19, 9, 4, 5),)),
    (13, 1, 8, ((2, 3, 8, 18, 12, 16, 6, 11, 20, 14, 9, 4, 5, 10, 15, 19, 13, 17, 7),)),
    (13, 1, 19, ((2, 3, 4, 5, 10, 15, 19, 9, 14, 20, 11, 6, 16, 12, 18, 8, 13, 17, 7),)),
    (1, 17, 2, ((8, 13, 19, 9, 14, 18), (1, 5, 4, 3, 2, 7, 12, 16, 15, 10, 20, 11, 6),)),
    (1, 17, 6, ((3, 4, 9, 19, 13, 8), (1, 2, 7, 12, 18, 14, 20, 11, 6, 16, 15, 10, 5),)),
    (17, 1, 7, ((2, 3, 4, 5, 10, 20, 14, 9, 19, 15, 16, 6, 11, 17, 13, 8, 18, 12, 7),)),
    (17, 1, 11, ((2, 3, 4, 5, 10, 15, 19, 9, 14, 20, 11, 6, 16, 12, 18, 8, 13, 17, 7),)),
    (1, 18, 5, ((1, 2, 7, 12, 16, 15, 19, 9, 14, 20, 10, 5, 4, 3, 8, 13, 17, 11, 6),)),
    (1, 18, 6, ((9, 14, 20, 10, 15, 19), (1, 2, 7, 12, 16, 6, 11, 17, 13, 8, 3, 4, 5),)),
    (18, 1, 8, ((4, 5, 10, 15, 19, 9), (2, 3, 8, 13, 17, 7), (6, 11, 20, 14, 18, 12, 16),)),
    (18, 1, 14, ((2, 3, 8, 18, 12, 16, 6, 11, 20, 14, 9, 4, 5, 10, 15, 19, 13, 17, 7),)),
    (6, 7, 1, ((1, 2, 3, 8, 13, 17, 11, 6, 16, 12, 18, 14, 20, 10, 15, 19, 9, 4, 5),)),
    (6, 7, 11, ((1, 2, 3, 4, 5, 10, 15, 19, 9, 14, 20, 11, 17, 13, 8, 18, 12, 16, 6),)),
    (6, 7, 16, ((1, 2, 3, 4, 5, 10, 20, 14, 9, 19, 15, 16, 12, 18, 8, 13, 17, 11, 6),)),
    (6, 8, 1, ((1, 2, 3, 4, 9, 19, 13, 17, 7, 12, 18, 14, 20, 11, 6, 16, 15, 10, 5),)),
    (6, 8, 11, ((2, 3, 4, 9, 14, 18, 12, 7), (1, 5, 10, 20, 11, 17, 13, 19, 15, 16, 6),)),
    (6, 8, 16, ((2, 3, 4, 9, 19, 13, 17, 7), (1, 5, 10, 15, 16, 12, 18, 14, 20, 11, 6),)),
    (6, 13, 1, ((9, 14, 20, 10, 15, 19), (1, 2, 7, 17, 11, 6, 16, 12, 18, 8, 3, 4, 5),)),
    (6, 13, 11, ((1, 2, 7, 17, 11, 20, 14, 9, 19, 15, 10, 5, 4, 3, 8, 18, 12, 16, 6),)),
    (6, 13, 16, ((1, 2, 3, 8, 18, 14, 20, 10, 5, 4, 9, 19, 15, 16, 12, 7, 17, 11, 6),)),
    (13, 6, 8, ((1, 2, 7, 12, 16, 15, 10, 20, 11, 17, 13, 19, 9, 14, 18, 8, 3, 4, 5),)),
    (13, 6, 17, ((1, 2, 3, 4, 9, 19, 13, 8, 18, 14, 20, 11, 17, 7, 12, 16, 15, 10, 5),)),
    (6, 18, 1, ((9, 14, 20, 10, 15, 19), (1, 2, 7, 12, 16, 6, 11, 17, 13, 8, 3, 4, 5),)),
    (6, 18, 11, ((1, 2, 3, 8, 13, 19, 15, 10, 5, 4, 9, 14, 20, 11, 17, 7, 12, 16, 6),)),
    (6, 18, 16, ((1, 2, 7, 12, 16, 15, 19, 9, 14, 20, 10, 5, 4, 3, 8, 13, 17, 11, 6),)),
    (18, 6, 8, ((1, 2, 7, 17, 11, 20, 10, 15, 16, 12, 18, 14, 9, 19, 13, 8, 3, 4, 5),)),
    (18, 6, 12, ((1, 2, 3, 4, 9, 14, 18, 8, 13, 19, 15, 16, 12, 7, 17, 11, 20, 10, 5),)),
    (11, 12, 6, ((1, 5, 10, 20, 11, 17, 7, 2, 3, 4, 9, 14, 18, 8, 13, 19, 15, 16, 6),)),
    (11, 12, 17, ((3, 4, 9, 14, 18, 8), (1, 2, 7, 17, 13, 19, 15, 16, 6, 11, 20, 10, 5),)),
    (12, 11, 7, ((2, 3, 8, 13, 17, 7), (1, 5, 4, 9, 19, 15, 10, 20, 14, 18, 12, 16, 6),)),
    (12, 11, 16, ((1, 2, 3, 8, 13, 17, 7, 12, 18, 14, 20, 10, 5, 4, 9, 19, 15, 16, 6),)),
    (11, 18, 6, ((1, 2, 3, 8, 13, 19, 15, 10, 5, 4, 9, 14, 20, 11, 17, 7, 12, 16, 6),)),
    (11, 18, 20, ((4, 5, 10, 20, 14, 9), (1, 2, 3, 8, 13, 19, 15, 16, 12, 7, 17, 11, 6),)),
    (18, 11, 8, ((2, 3, 8, 13, 17, 7), (1, 5, 4, 9, 19, 15, 10, 20, 14, 18, 12, 16, 6),)),
    (18, 11, 14, ((9, 14, 20, 10, 15, 19), (1, 5, 4, 3, 2, 7, 17, 13, 8, 18, 12, 16, 6),)),
    (16, 17, 6, ((1, 5, 10, 20, 11, 6), (2, 3, 4, 9, 14, 18, 8, 13, 19, 15, 16, 12, 7),)),
    (16, 17, 12, ((1, 2, 7, 12, 18, 14, 9, 4, 3, 8, 13, 19, 15, 16, 6, 11, 20, 10, 5),)),
    (17, 16, 7, ((1, 5, 4, 9, 19, 15, 10, 20, 14, 18, 12, 7, 2, 3, 8, 13, 17, 11, 6),)),
    (17, 16, 11, ((4, 5, 10, 15, 19, 9), (1, 2, 3, 8, 13, 17, 7, 12, 18, 14, 20, 11, 6),)),
)

RIGHT_J7 = (
    (1, 4, 2, ((2, 3, 10, 17, 23, 9), (1, 7, 14, 21, 22, 16, 24, 18, 11, 25, 19, 27, 13, 6, 5, 12, 26, 20, 28, 15, 8),)),
    (1, 4, 8, ((5, 6, 13, 27, 19, 12), (1, 2, 3, 10, 24, 16, 9, 23, 17, 25, 11, 18, 26, 20, 28, 15, 8, 22, 21, 14, 7),)),
    (15, 18, 8, ((12, 19, 27, 13, 20, 26), (2, 3, 10, 24, 16, 9), (1, 7, 6, 5, 4, 11, 25, 17, 23, 15, 28, 14, 21, 22, 8),)),
    (15, 18, 23, ((12, 19, 27, 13, 20, 26), (1, 7, 6, 5, 4, 11, 25, 17, 23, 9, 2, 3, 10, 24, 16, 22, 21, 14, 28, 15, 8),)),
    (18, 15, 11, ((1, 2, 3, 10, 17, 23, 9, 16, 24, 18, 26, 12, 19, 25, 11, 4, 5, 6, 7, 14, 28, 20, 13, 27, 21, 22, 8),)),
    (18, 15, 24, ((9, 16, 24, 10, 17, 23), (1, 2, 3, 4, 5, 12, 19, 25, 11, 18, 26, 20, 28, 14, 7, 6, 13, 27, 21, 22, 8),)),
)

LEFT_J7 = (
    (1, 4, 2, 3, ((1, 7, 14, 28, 20, 26, 12, 19, 25, 17, 23, 15, 8), (2, 3, 10, 24, 18, 11, 4, 5, 6, 13, 27, 21, 22, 16, 9),)),
    (1, 4, 2, 5, ((1, 7, 14, 28, 20, 26, 18, 24, 10, 17, 23, 15, 8), (2, 3, 4, 11, 25, 19, 12, 5, 6, 13, 27, 21, 22, 16, 9),)),
    (1, 4, 2, 11, ((2, 3, 4, 5, 6, 13, 27, 21, 22, 16, 9), (1, 7, 14, 28, 20, 26, 12, 19, 25, 11, 18, 24, 10, 17, 23, 15, 8),)),
    (1, 4, 7, 3, ((4, 5, 6, 7, 14, 21, 22, 16, 9, 23, 17, 25, 11), (1, 2, 3, 10, 24, 18, 26, 12, 19, 27, 13, 20, 28, 15, 8),)),
    (1, 4, 7, 5, ((3, 4, 11, 18, 26, 20, 13, 27, 21, 22, 16, 24, 10), (1, 2, 9, 23, 17, 25, 19, 12, 5, 6, 7, 14, 28, 15, 8),)),
    (1, 4, 7, 11, ((3, 4, 5, 6, 7, 14, 21, 22, 16, 24, 10), (1, 2, 9, 23, 17, 25, 11, 18, 26, 12, 19, 27, 13, 20, 28, 15, 8),)),
    (1, 4, 8, 3, ((1, 2, 3, 10, 17, 25, 19, 12, 26, 20, 28, 14, 7), (4, 5, 6, 13, 27, 21, 22, 8, 15, 23, 9, 16, 24, 18, 11),)),
    (1, 4, 8, 5, ((1, 2, 9, 16, 24, 18, 26, 20, 28, 14, 7), (3, 4, 11, 25, 19, 12, 5, 6, 13, 27, 21, 22, 8, 15, 23, 17, 10),)),
    (1, 4, 8, 11, ((3, 4, 5, 6, 13, 27, 21, 22, 8, 15, 23, 17, 10), (1, 2, 9, 16, 24, 18, 11, 25, 19, 12, 26, 20, 28, 14, 7),)),
    (15, 18, 8, 11, ((1, 2, 9, 16, 24, 18, 26, 20, 13, 27, 21, 22, 8), (3, 4, 11, 25, 19, 12, 5, 6, 7, 14, 28, 15, 23, 17, 10),)),
    (15, 18, 8, 24, ((5, 6, 7, 14, 28, 15, 23, 17, 25, 19, 12), (1, 2, 9, 16, 24, 10, 3, 4, 11, 18, 26, 20, 13, 27, 21, 22, 8),)),
    (15, 18, 8, 26, ((3, 4, 5, 6, 7, 14, 28, 15, 23, 17, 10), (1, 2, 9, 16, 24, 18, 11, 25, 19, 12, 26, 20, 13, 27, 21, 22, 8),)),
    (15, 18, 23, 11, ((13, 20, 26, 18, 24, 16, 22, 21, 27), (1, 2, 9, 23, 17, 10, 3, 4, 11, 25, 19, 12, 5, 6, 7, 14, 28, 15, 8),)),
    (15, 18, 23, 24, ((3, 4, 11, 18, 26, 20, 13, 27, 21, 22, 16, 24, 10), (1, 2, 9, 23, 17, 25, 19, 12, 5, 6, 7, 14, 28, 15, 8),)),
    (15, 18, 23, 26, ((11, 18, 24, 16, 22, 21, 27, 13, 20, 26, 12, 19, 25), (1, 2, 9, 23, 17, 10, 3, 4, 5, 6, 7, 14, 28, 15, 8),)),
    (15, 18, 28, 11, ((12, 19, 27, 13, 20, 28, 14, 21, 22, 16, 24, 18, 26), (1, 7, 6, 5, 4, 11, 25, 17, 10, 3, 2, 9, 23, 15, 8),)),
    (15, 18, 28, 24, ((1, 7, 6, 5, 4, 3, 2, 9, 23, 15, 8), (10, 17, 25, 11, 18, 26, 12, 19, 27, 13, 20, 28, 14, 21, 22, 16, 24),)),
    (15, 18, 28, 26, ((4, 5, 6, 13, 27, 21, 22, 16, 24, 18, 11), (1, 7, 14, 28, 20, 26, 12, 19, 25, 17, 10, 3, 2, 9, 23, 15, 8),)),
    (18, 15, 11, 8, ((1, 7, 14, 21, 27, 19, 12, 26, 18, 24, 16, 22, 8), (2, 3, 10, 17, 25, 11, 4, 5, 6, 13, 20, 28, 15, 23, 9),)),
    (18, 15, 11, 23, ((13, 20, 26, 18, 24, 16, 22, 21, 27), (1, 2, 9, 23, 17, 10, 3, 4, 11, 25, 19, 12, 5, 6, 7, 14, 28, 15, 8),)),
    (18, 15, 11, 28, ((12, 19, 27, 13, 20, 28, 14, 21, 22, 16, 24, 18, 26), (1, 7, 6, 5, 4, 11, 25, 17, 10, 3, 2, 9, 23, 15, 8),)),
    (18, 15, 24, 8, ((2, 3, 4, 5, 6, 13, 20, 28, 15, 23, 9), (1, 7, 14, 21, 27, 19, 12, 26, 18, 11, 25, 17, 10, 24, 16, 22, 8),)),
    (18, 15, 24, 23, ((3, 4, 11, 18, 26, 20, 13, 27, 21, 22, 16, 24, 10), (1, 2, 9, 23, 17, 25, 19, 12, 5, 6, 7, 14, 28, 15, 8),)),
    (18, 15, 24, 28, ((1, 7, 6, 5, 4, 3, 2, 9, 23, 15, 8), (10, 17, 25, 11, 18, 26, 12, 19, 27, 13, 20, 28, 14, 21, 22, 16, 24),)),
    (18, 15, 26, 8, ((1, 7, 6, 5, 4, 11, 18, 24, 16, 22, 8), (2, 3, 10, 17, 25, 19, 12, 26, 20, 13, 27, 21, 14, 28, 15, 23, 9),)),
    (18, 15, 26, 23, ((11, 18, 24, 16, 22, 21, 27, 13, 20, 26, 12, 19, 25), (1, 2, 9, 23, 17, 10, 3, 4, 5, 6, 7, 14, 28, 15, 8),)),
    (18, 15, 26, 28, ((4, 5, 6, 13, 27, 21, 22, 16, 24, 18, 11), (1, 7, 14, 28, 20, 26, 12, 19, 25, 17, 10, 3, 2, 9, 23, 15, 8),)),
)

TABLES_SHA256 = "49e2d5d7b414b9d9d0b34cdb5172c1a2119cbcbdc39d7c0150e56cadaaf4062c"


def checksum() -> str:
    """Recompute the checksum over the embedded rows."""
    import hashlib

    canon = repr((RIGHT_J5, RIGHT_J7, LEFT_J7)).encode()
    return hashlib.sha256(canon).hexdigest()
