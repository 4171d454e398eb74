"""Planar configurations: incidence, intersection, triangles, pruning."""

import pytest

from matroid_joints.core import MatroidError
from matroid_joints.planar import (
    Configuration,
    diagonal,
    find_triangles,
    horizontal,
    incident,
    intersect,
    is_triangle_free,
    line,
    prune_lines,
    triple_points,
    vertical,
)


def test_line_canonicalization():
    assert line(0, 2, 6) == line(0, 1, 3)
    assert line(-1, 1, 0) == line(1, -1, 0)
    assert line(2, -2, 4) == line(1, -1, 2)
    with pytest.raises(MatroidError):
        line(0, 0, 5)


def test_incident_examples():
    assert incident(line(0, 1, 3), (5, 3))
    assert incident(line(1, -1, 0), (2, 2))
    assert not incident(line(1, 0, 4), (5, 5))


def test_intersect_examples():
    assert intersect(vertical(2), horizontal(3)) == (2, 3)
    assert intersect(horizontal(1), horizontal(2)) is None
    assert intersect(vertical(1), diagonal(0)) == (1, 1)
    with pytest.raises(MatroidError):
        intersect(horizontal(1), horizontal(1))


def test_intersect_non_integral_is_absent():
    # x + y = 1 and x - y = 2 meet at (3/2, -1/2)
    assert intersect(line(1, 1, 1), line(1, -1, 2)) is None


def test_two_lines_share_at_most_one_point():
    cfg = one_triangle()
    for i in range(len(cfg.lines)):
        for j in range(i + 1, len(cfg.lines)):
            common = set(cfg.line_points[i]) & set(cfg.line_points[j])
            assert len(common) <= 1


def one_triangle():
    return Configuration(
        [(1, 1), (1, 2), (2, 2)],
        [vertical(1), horizontal(2), diagonal(0)],
    )


def test_one_triangle_found():
    tris = find_triangles(one_triangle())
    assert len(tris) == 1
    (t,) = tris
    assert t.points == (0, 1, 2)


def test_triangle_exactly_two_incidence():
    cfg = one_triangle()
    for t in find_triangles(cfg):
        for li in t.lines:
            assert sum(1 for p in t.points if p in cfg.line_points[li]) == 2


def test_is_triangle_free():
    assert not is_triangle_free(one_triangle())
    assert is_triangle_free(Configuration([(0, 0), (5, 7)], [horizontal(0)]))
    assert is_triangle_free(Configuration([], []))


def test_find_triangles_limit():
    # full 3x3 grid has several triangles; the limit caps the output
    pts = [(a, b) for a in range(1, 4) for b in range(1, 4)]
    lines = [horizontal(b) for b in range(1, 4)] + [vertical(a) for a in range(1, 4)] + [
        diagonal(c) for c in range(-2, 3)
    ]
    cfg = Configuration(pts, lines)
    assert len(find_triangles(cfg, limit=2)) == 2
    assert len(find_triangles(cfg)) > 2


def test_triple_points():
    cfg = one_triangle()
    assert triple_points(cfg) == []  # every point is on exactly two lines
    pts = [(a, b) for a in range(1, 4) for b in range(1, 4)]
    lines = [horizontal(b) for b in range(1, 4)] + [vertical(a) for a in range(1, 4)] + [
        diagonal(c) for c in range(-2, 3)
    ]
    cfg = Configuration(pts, lines)
    assert triple_points(cfg) == list(range(9))  # every grid point is a triple point


def test_prune_lines():
    cfg = Configuration([(1, 1), (2, 1)], [horizontal(1), vertical(1), horizontal(5)])
    pruned = prune_lines(cfg)
    assert pruned.lines == (horizontal(1),)
    assert pruned.points == cfg.points


def test_prune_idempotent():
    pts = [(a, b) for a in range(1, 4) for b in range(1, 4)]
    cfg = Configuration(pts, [horizontal(1), horizontal(9), vertical(2), diagonal(7)])
    once = prune_lines(cfg)
    twice = prune_lines(once)
    assert once.lines == twice.lines


def test_duplicate_rejection():
    with pytest.raises(MatroidError):
        Configuration([(0, 0), (0, 0)], [])
    with pytest.raises(MatroidError):
        Configuration([], [horizontal(1), line(0, 2, 2)])


def test_triangle_free_triple_line_property(build200):
    # three pairwise-meeting lines whose intersections all land in E would
    # form a triangle; in a triangle-free configuration at least one of the
    # pairwise meets must fall outside E (or coincide)
    cfg = build200.config
    point_set = set(cfg.points)
    lines = cfg.lines
    for i in range(0, len(lines), 7):
        for j in range(i + 1, len(lines), 7):
            for k in range(j + 1, len(lines), 7):
                meets = [intersect(lines[a], lines[b]) for a, b in ((i, j), (i, k), (j, k))]
                if any(p is None for p in meets) or len(set(meets)) < 3:
                    continue
                assert not all(p in point_set for p in meets)


def test_json_round_trip():
    cfg = one_triangle()
    data = cfg.to_json()
    back = Configuration.from_json(data)
    assert back.points == cfg.points
    assert back.lines == cfg.lines
