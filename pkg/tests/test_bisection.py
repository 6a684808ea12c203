import pytest

from hcpack import (
    Point,
    Side,
    bisecting_line,
    constrained_ham_sandwich,
    ham_sandwich,
    perpendicular_baseline,
    separating_subset_line,
    side_of_line,
)
from hcpack.bisection import bisecting_lines
from hcpack.errors import NotSeparable

from conftest import general_instance


def classify_counts(line, points, idx):
    left = sum(1 for i in idx if side_of_line(line, points[i]) is Side.LEFT)
    on = sum(1 for i in idx if side_of_line(line, points[i]) is Side.ON)
    return left, on


def test_bisecting_line_two_points():
    ps = general_instance(3, 1)
    bi = bisecting_line(ps, [0, 1])
    assert len(bi.left) == 1 and len(bi.right) == 1


def test_bisecting_line_square():
    pts = [Point(0, 0), Point(10, 1), Point(11, 10), Point(1, 11)]
    bi = bisecting_line(pts, range(4))
    assert len(bi.left) == 2 and len(bi.right) == 2


@pytest.mark.parametrize("n,seed", [(5, 0), (8, 1), (13, 2), (20, 3), (33, 4)])
def test_bisecting_line_invariants(n, seed):
    ps = general_instance(n, seed)
    bi = bisecting_line(ps, range(n))
    assert len(bi.left) - len(bi.right) in (0, 1)
    # reclassification reproduces the returned split exactly, nothing ON
    for i in bi.left:
        assert side_of_line(bi.line, ps.points[i]) is Side.LEFT
    for i in bi.right:
        assert side_of_line(bi.line, ps.points[i]) is Side.RIGHT


def test_bisecting_lines_are_distinct_splits():
    ps = general_instance(10, 5)
    seen = set()
    for bi in list(bisecting_lines(ps, range(10)))[:12]:
        assert bi.left not in seen
        seen.add(bi.left)


@pytest.mark.parametrize("seed", range(6))
def test_ham_sandwich_counts(seed):
    ps = general_instance(16, seed)
    s1, s2 = list(range(8)), list(range(8, 16))
    line, parts = ham_sandwich(ps, s1, s2)
    s1l, s1r, s2l, s2r = parts
    assert sorted(s1l + s1r) == s1 and sorted(s2l + s2r) == s2
    for grp in (s1l, s2l):
        for i in grp:
            assert side_of_line(line, ps.points[i]) is Side.LEFT
    for grp in (s1r, s2r):
        for i in grp:
            assert side_of_line(line, ps.points[i]) is Side.RIGHT
    assert abs(len(s1l) - len(s1r)) <= 1
    assert abs(len(s2l) - len(s2r)) <= 1


def test_ham_sandwich_odd_sets():
    ps = general_instance(15, 9)
    s1, s2 = list(range(7)), list(range(7, 15))
    line, parts = ham_sandwich(ps, s1, s2)
    assert abs(len(parts[0]) - len(parts[1])) == 1  # |s1| = 7
    assert len(parts[2]) == len(parts[3])  # |s2| = 8


def test_ham_sandwich_singletons():
    ps = general_instance(4, 2)
    line, parts = ham_sandwich(ps, [0], [1])
    assert len(parts[0]) + len(parts[1]) == 1
    assert len(parts[2]) + len(parts[3]) == 1


def test_constrained_ham_sandwich_keeps_pair_together():
    ps = general_instance(16, 11)
    s1, s2 = list(range(8)), list(range(8, 16))
    found = 0
    for pair in [(0, 1), (2, 5), (3, 7)]:
        res = constrained_ham_sandwich(ps, s1, s2, pair)
        if res is None:
            continue
        found += 1
        line, parts = res
        s1l = set(parts[0])
        assert (pair[0] in s1l) == (pair[1] in s1l)
        assert abs(len(parts[0]) - len(parts[1])) <= 1
    assert found > 0


def test_constrained_ham_sandwich_pair_outside_s1_rejected():
    ps = general_instance(8, 3)
    with pytest.raises(ValueError):
        constrained_ham_sandwich(ps, [0, 1, 2, 3], [4, 5, 6, 7], (0, 4))


def test_separating_subset_line_base_case():
    ps = general_instance(8, 4)
    pts = ps.points
    xs = sorted(range(8), key=lambda i: (pts[i].x, pts[i].y))
    pair = (xs[0], xs[1])
    line, grown = separating_subset_line(ps, range(8), pair, target_size=2)
    assert set(grown) == set(pair)


def test_separating_subset_line_balanced_growth():
    ps = general_instance(12, 8)
    pts = ps.points
    xs = sorted(range(12), key=lambda i: (pts[i].x, pts[i].y))
    pair = (xs[0], xs[1])
    line, grown = separating_subset_line(ps, range(12), pair, target_size=6)
    assert len(grown) == 6 and set(pair) <= set(grown)
    for i in range(12):
        s = side_of_line(line, pts[i])
        assert s is not Side.ON
        assert (s is Side.LEFT) == (i in grown)


def test_separating_subset_line_not_separable():
    # the pair strictly inside the hull of the rest cannot be cut off
    pts = [Point(0, 0), Point(100, 3), Point(50, 90), Point(48, 30), Point(52, 33)]
    with pytest.raises(NotSeparable):
        separating_subset_line(pts, range(5), (3, 4), target_size=2)


@pytest.mark.parametrize("seed", range(4))
def test_perpendicular_baseline(seed):
    ps = general_instance(10, seed)
    bi = bisecting_line(ps, range(10))
    base = perpendicular_baseline(bi.line, ps)
    sides = {side_of_line(base, p) for p in ps.points}
    assert len(sides) == 1 and Side.ON not in sides
    (dx, dy) = bi.line.direction
    (ex, ey) = base.direction
    assert dx * ex + dy * ey == 0  # exactly perpendicular


def test_constrained_ham_sandwich_absent_when_pair_straddles_everything():
    # pair at opposite extremes of s1: every simultaneous bisection must
    # separate them, so the constrained search comes back empty
    pts = [
        Point(-1000, 0), Point(-990, 31), Point(990, 17), Point(1000, 53),
        Point(-50, 200), Point(10, -210), Point(40, 190), Point(-30, -195),
    ]
    s1, s2 = [0, 1, 2, 3], [4, 5, 6, 7]
    from hcpack.bisection import ham_sandwich_cuts

    unconstrained = list(ham_sandwich_cuts(pts, s1, s2))
    assert unconstrained, "sanity: plain cuts exist"
    for _line, parts in unconstrained:
        assert (0 in parts[0]) != (3 in parts[0])
    assert constrained_ham_sandwich(pts, s1, s2, (0, 3)) is None


def test_ham_sandwich_two_against_two():
    pts = [Point(-100, -50), Point(-100, 50), Point(100, -47), Point(100, 53)]
    line, parts = ham_sandwich(pts, [0, 1], [2, 3])
    assert len(parts[0]) == len(parts[1]) == 1
    assert len(parts[2]) == len(parts[3]) == 1


from hypothesis import given, settings, strategies as st

small_points = st.lists(
    st.tuples(st.integers(-8, 8), st.integers(-8, 8)),
    min_size=2,
    max_size=12,
    unique=True,
)


@given(small_points, st.integers(0, 10_000))
@settings(max_examples=300, deadline=None)
def test_cut_engine_exact_on_tiny_grids(raw, dseed):
    # tiny grids force cross-value ties and the gcd fallback paths
    from hcpack.bisection import cut_at

    pts = [Point(x, y) for x, y in raw]
    n = len(pts)
    i, j = dseed % n, (dseed // n) % n
    if i == j:
        j = (j + 1) % n
    d = (pts[j].x - pts[i].x, pts[j].y - pts[i].y)
    if d == (0, 0):
        return
    sense = 1 if dseed % 2 else -1
    left_count = 1 + dseed % (n - 1)
    bi = cut_at(pts, range(n), d, sense, left_count)
    assert len(bi.left) == left_count
    for k in bi.left:
        assert side_of_line(bi.line, pts[k]) is Side.LEFT
    for k in bi.right:
        assert side_of_line(bi.line, pts[k]) is Side.RIGHT
