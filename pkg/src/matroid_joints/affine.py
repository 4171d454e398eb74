"""Exact-rational affine independence and the classical 3D grid of joints.

All rank decisions use exact arithmetic: rational coordinates are scaled
to integers row by row and the rank is computed with fraction-free
(Bareiss) elimination.  Floating point never touches an incidence
decision.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence

from .core import Flat, Matroid, MatroidError, make_flat


@dataclass(frozen=True)
class RationalPoint:
    coords: tuple[Fraction, ...]

    @property
    def dim(self) -> int:
        return len(self.coords)


def point(*coords) -> RationalPoint:
    return RationalPoint(tuple(Fraction(c) for c in coords))


def integer_rank(rows: Sequence[Sequence[int]]) -> int:
    """Rank of an integer matrix by fraction-free Gaussian elimination.

    Bareiss one-step elimination: every division is exact, intermediate
    entries stay bounded by minors of the input.
    """
    mat = [list(row) for row in rows]
    if not mat:
        return 0
    ncols = len(mat[0])
    r = 0
    prev = 1
    for c in range(ncols):
        piv = next((i for i in range(r, len(mat)) if mat[i][c]), None)
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        for i in range(r + 1, len(mat)):
            for j in range(c + 1, ncols):
                mat[i][j] = (mat[i][j] * mat[r][c] - mat[i][c] * mat[r][j]) // prev
            mat[i][c] = 0
        prev = mat[r][c]
        r += 1
        if r == len(mat):
            break
    return r


def affine_independent(points: Sequence[RationalPoint]) -> bool:
    """True iff the affine span of the points has dimension len(points) - 1."""
    pts = list(points)
    if len(pts) <= 1:
        return True
    dim = pts[0].dim
    if any(p.dim != dim for p in pts):
        raise MatroidError("points of mixed dimension")
    base = pts[0].coords
    rows = []
    for p in pts[1:]:
        diff = [p.coords[i] - base[i] for i in range(dim)]
        scale = lcm(*(f.denominator for f in diff)) if diff else 1
        rows.append([int(f * scale) for f in diff])
    return integer_rank(rows) == len(pts) - 1


def affine_matroid(points: Sequence[RationalPoint]) -> Matroid:
    """The matroid of affinely independent subsets of a finite point set."""
    pts = tuple(points)
    if len(set(pts)) != len(pts):
        raise MatroidError("duplicate points")

    def oracle(subset: frozenset) -> bool:
        return affine_independent([pts[i] for i in sorted(subset)])

    return Matroid(labels=pts, oracle=oracle)


@dataclass(frozen=True)
class LineDescriptor:
    """An axis-parallel grid line given by its member point indices."""

    axis: int  # varying coordinate: 0 = x, 1 = y, 2 = z
    fixed: tuple[int, int]  # values of the two fixed coordinates, in index order
    members: tuple[int, ...]


def grid3d(k: int) -> tuple[tuple[RationalPoint, ...], list[LineDescriptor]]:
    """The {1..k}^3 grid with its 3k^2 axis-parallel lines.

    Every grid point lies on exactly three of these lines, one per axis.
    """
    if k < 2:
        raise MatroidError("grid3d requires k >= 2")
    coords = range(1, k + 1)
    pts = tuple(point(x, y, z) for x in coords for y in coords for z in coords)
    index = {p.coords: i for i, p in enumerate(pts)}

    def at(x: int, y: int, z: int) -> int:
        return index[(Fraction(x), Fraction(y), Fraction(z))]

    lines = []
    for a in coords:
        for b in coords:
            lines.append(LineDescriptor(0, (a, b), tuple(at(t, a, b) for t in coords)))
    for a in coords:
        for b in coords:
            lines.append(LineDescriptor(1, (a, b), tuple(at(a, t, b) for t in coords)))
    for a in coords:
        for b in coords:
            lines.append(LineDescriptor(2, (a, b), tuple(at(a, b, t) for t in coords)))
    return pts, lines


def descriptor_flats(m: Matroid, lines: Iterable[LineDescriptor]) -> list[Flat]:
    """Matroid lines for the descriptors: closures of a point pair on each."""
    return [make_flat(m, desc.members[:2]) for desc in lines]
