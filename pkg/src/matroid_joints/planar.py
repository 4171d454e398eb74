"""Planar integer point-line configurations.

Points are integer pairs (a, b); lines are canonical primitive triples
(A, B, C) representing { (x, y) : A*x + B*y = C }.  A Configuration
precomputes the full incidence structure and answers triangle, triple
point, and pruning queries exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, Optional

from .core import MatroidError

Point = tuple[int, int]


@dataclass(frozen=True, order=True)
class IntLine:
    A: int
    B: int
    C: int


def line(a: int, b: int, c: int) -> IntLine:
    """Canonical form: gcd(|A|,|B|,|C|) = 1, leading coefficient positive."""
    if a == 0 and b == 0:
        raise MatroidError("degenerate line: A = B = 0")
    g = gcd(gcd(abs(a), abs(b)), abs(c))
    a, b, c = a // g, b // g, c // g
    if a < 0 or (a == 0 and b < 0):
        a, b, c = -a, -b, -c
    return IntLine(a, b, c)


def horizontal(b: int) -> IntLine:
    return line(0, 1, b)


def vertical(a: int) -> IntLine:
    return line(1, 0, a)


def diagonal(c: int) -> IntLine:
    # x - y = c
    return line(1, -1, c)


def incident(l: IntLine, p: Point) -> bool:
    return l.A * p[0] + l.B * p[1] == l.C


def intersect(l1: IntLine, l2: IntLine) -> Optional[Point]:
    """The common integer point, or None when parallel or non-integral."""
    if l1 == l2:
        raise MatroidError("intersect requires two distinct lines")
    det = l1.A * l2.B - l2.A * l1.B
    if det == 0:
        return None
    xn = l1.C * l2.B - l2.C * l1.B
    yn = l1.A * l2.C - l2.A * l1.C
    if xn % det or yn % det:
        return None
    return (xn // det, yn // det)


@dataclass(frozen=True)
class Triangle:
    """Three points and three lines, each line through exactly two points.

    ``points`` is sorted; ``lines[k]`` passes through the pair omitting
    ``points[2 - k]`` (so lines[0] joins points[0],points[1], etc.).
    """

    points: tuple[int, int, int]
    lines: tuple[int, int, int]


class Configuration:
    """Immutable incidence structure over distinct points and lines."""

    def __init__(self, points: Iterable[Point], lines: Iterable[IntLine]):
        self.points: tuple[Point, ...] = tuple((int(a), int(b)) for a, b in points)
        self.lines: tuple[IntLine, ...] = tuple(lines)
        if len(set(self.points)) != len(self.points):
            raise MatroidError("duplicate points in configuration")
        if len(set(self.lines)) != len(self.lines):
            raise MatroidError("duplicate lines in configuration")
        self.line_points: tuple[tuple[int, ...], ...] = tuple(
            tuple(i for i, p in enumerate(self.points) if incident(l, p))
            for l in self.lines
        )
        point_lines: list[list[int]] = [[] for _ in self.points]
        for li, pts in enumerate(self.line_points):
            for pi in pts:
                point_lines[pi].append(li)
        self.point_lines: tuple[tuple[int, ...], ...] = tuple(tuple(ls) for ls in point_lines)

    def to_json(self) -> dict:
        return {
            "points": [[a, b] for a, b in self.points],
            "lines": [{"A": l.A, "B": l.B, "C": l.C} for l in self.lines],
        }

    @classmethod
    def from_json(cls, data: dict) -> "Configuration":
        return cls(
            [(p[0], p[1]) for p in data["points"]],
            [line(d["A"], d["B"], d["C"]) for d in data["lines"]],
        )


def _collinear_pairs(cfg: Configuration) -> dict[tuple[int, int], list[int]]:
    """Map from point-index pair (i < j) to the lines through both."""
    pairs: dict[tuple[int, int], list[int]] = {}
    for li, pts in enumerate(cfg.line_points):
        for a in range(len(pts)):
            for b in range(a + 1, len(pts)):
                pairs.setdefault((pts[a], pts[b]), []).append(li)
    return pairs


def find_triangles(cfg: Configuration, limit: Optional[int] = None) -> list[Triangle]:
    """Enumerate triangles in lexicographic order of their point triples.

    A triangle is three distinct points and three distinct lines with each
    line incident to exactly two of the points.  ``limit`` caps the number
    of records returned.
    """
    pairs = _collinear_pairs(cfg)
    neighbors: dict[int, set[int]] = {}
    for (i, j) in pairs:
        neighbors.setdefault(i, set()).add(j)
        neighbors.setdefault(j, set()).add(i)
    out: list[Triangle] = []
    for i in sorted(neighbors):
        succ = sorted(n for n in neighbors[i] if n > i)
        for a in range(len(succ)):
            j = succ[a]
            for b in range(a + 1, len(succ)):
                k = succ[b]
                if (j, k) not in pairs:
                    continue
                for lij in pairs[(i, j)]:
                    if k in cfg.line_points[lij]:
                        continue
                    for lik in pairs[(i, k)]:
                        if j in cfg.line_points[lik]:
                            continue
                        for ljk in pairs[(j, k)]:
                            if i in cfg.line_points[ljk]:
                                continue
                            out.append(Triangle((i, j, k), (lij, lik, ljk)))
                            if limit is not None and len(out) >= limit:
                                return out
    return out


def is_triangle_free(cfg: Configuration) -> bool:
    return not find_triangles(cfg, limit=1)


def triple_points(cfg: Configuration) -> list[int]:
    """Indices of points incident to at least three lines."""
    return [i for i, ls in enumerate(cfg.point_lines) if len(ls) >= 3]


def prune_lines(cfg: Configuration) -> Configuration:
    """Keep only lines incident to at least two configuration points."""
    kept = [cfg.lines[li] for li, pts in enumerate(cfg.line_points) if len(pts) >= 2]
    return Configuration(cfg.points, kept)
