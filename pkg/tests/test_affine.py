"""Exact affine independence and the 3D grid of joints."""

from fractions import Fraction

import pytest

from matroid_joints.affine import (
    affine_independent,
    affine_matroid,
    descriptor_flats,
    grid3d,
    integer_rank,
    point,
)
from matroid_joints.core import MatroidError, check_axioms, count_joints, rank


def test_integer_rank():
    assert integer_rank([]) == 0
    assert integer_rank([[1, 2], [2, 4]]) == 1
    assert integer_rank([[1, 0, 0], [0, 1, 0], [0, 0, 1]]) == 3
    assert integer_rank([[2, 3], [5, 7], [1, 1]]) == 2


def test_single_point_independent():
    assert affine_independent([point(3, 4)])
    assert affine_independent([])


def test_collinear_points_dependent():
    assert not affine_independent([point(0, 0), point(1, 1), point(2, 2)])


def test_rational_collinearity_is_exact():
    # slope 1/3 through awkward rationals; floats would wobble here
    pts = [point(0, 0), point(Fraction(1, 3), Fraction(1, 9)), point(1, Fraction(1, 3))]
    assert not affine_independent(pts)
    assert affine_independent([point(0, 0), point(Fraction(1, 3), Fraction(1, 9)), point(1, 1)])


def test_five_points_in_q3_dependent():
    pts = [point(0, 0, 0), point(1, 0, 0), point(0, 1, 0), point(0, 0, 1), point(1, 1, 1)]
    assert not affine_independent(pts)


def test_mixed_dimension_rejected():
    with pytest.raises(MatroidError):
        affine_independent([point(0, 0), point(1, 2, 3)])


def test_translation_and_permutation_invariance():
    pts = [point(0, 1), point(2, 3), point(5, 5)]
    shifted = [point(c[0] + 7, c[1] - 2) for c in (p.coords for p in pts)]
    assert affine_independent(pts) == affine_independent(shifted)
    assert affine_independent(pts) == affine_independent(pts[::-1])


def test_affine_matroid_axioms():
    m = affine_matroid(
        [point(0, 0), point(1, 0), point(0, 1), point(2, 3), point(-1, 4), point(3, -2)]
    )
    assert check_axioms(m, mode="exhaustive").ok


def test_generic_q3_full_rank_four():
    m = affine_matroid([point(0, 0, 0), point(1, 0, 0), point(0, 1, 0), point(0, 0, 1), point(1, 2, 3)])
    assert rank(m, range(m.size)) == 4


def test_affine_matroid_is_simple():
    m = affine_matroid([point(0, 0), point(1, 0), point(2, 0)])
    assert all(m.oracle(frozenset({a, b})) for a in range(3) for b in range(a + 1, 3))


def test_affine_matroid_rejects_duplicates():
    with pytest.raises(MatroidError):
        affine_matroid([point(0, 0), point(0, 0)])


def test_grid3d_counts():
    pts, lines = grid3d(2)
    assert len(pts) == 8 and len(lines) == 12
    pts, lines = grid3d(4)
    assert len(pts) == 64 and len(lines) == 48
    with pytest.raises(MatroidError):
        grid3d(1)


def test_grid3d_joints_equal_k_cubed():
    for k in (2, 3):
        pts, desc = grid3d(k)
        m = affine_matroid(pts)
        lines = descriptor_flats(m, desc)
        joints = count_joints(m, lines)
        assert joints == k**3
        assert joints**2 * 27 == len(lines) ** 3


def test_descriptor_flats_cover_descriptor_points():
    pts, desc = grid3d(3)
    m = affine_matroid(pts)
    lines = descriptor_flats(m, desc)
    for d, f in zip(desc, lines):
        assert frozenset(d.members) == f.members
        assert f.rank == 2
