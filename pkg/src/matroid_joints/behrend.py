"""Large 3-AP-free subsets of {1..N} via sphere shells of a digit lattice.

The construction picks a dimension n and digit bound s, slices the cube
{0..s-1}^n into shells of constant squared norm, and encodes the largest
shell in radix 2s.  Digits stay below s, so sums of two members never
carry, and a 3-term arithmetic progression in the encoded set would force
three collinear points on a sphere.

Note on the radix: the source material writes the encoding with radix 2s
but displays 2s+1 in the distinctness equations.  Radix 2s is the
self-consistent choice (doubled digits stay below 2s) and is used here
throughout.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from math import isqrt

from .core import MatroidError


@dataclass(frozen=True)
class BehrendParams:
    N: int
    n: int
    s: int
    k: int
    n_clamped: bool = False
    s_clamped: bool = False

    @property
    def radix(self) -> int:
        return 2 * self.s


@dataclass(frozen=True)
class BehrendSet:
    members: tuple[int, ...]
    params: BehrendParams
    via_fallback: bool = False

    def __len__(self) -> int:
        return len(self.members)


def _dimension(N: int) -> tuple[int, bool]:
    # floor(sqrt(log2 N)), clamped to >= 1
    n = isqrt(N.bit_length() - 1)
    return (max(n, 1), n < 1)


def _digit_bound(N: int, n: int) -> tuple[int, bool]:
    # largest s with (2s)^n <= N, clamped to >= 1
    s = 1
    while (2 * (s + 1)) ** n <= N:
        s += 1
    return (s, (2 * s) ** n > N)


def sphere_shells(n: int, s: int, budget: int = 2_000_000) -> dict[int, list[tuple[int, ...]]]:
    """Partition {0..s-1}^n by squared Euclidean norm."""
    if s ** n > budget:
        raise MatroidError(f"shell enumeration of {s}^{n} points exceeds budget {budget}")
    shells: dict[int, list[tuple[int, ...]]] = {}
    for x in product(range(s), repeat=n):
        shells.setdefault(sum(v * v for v in x), []).append(x)
    return shells


def behrend_params(N: int) -> BehrendParams:
    """Construction parameters for N: dimension, digit bound, best shell."""
    if N < 4:
        raise MatroidError("behrend_params requires N >= 4; use optimal_3ap_free for tiny N")
    n, n_clamped = _dimension(N)
    s, s_clamped = _digit_bound(N, n)
    shells = sphere_shells(n, s)
    shells.pop(0, None)  # the all-zero vector would encode 0, outside 1..N
    if shells:
        k = max(shells, key=lambda k: (len(shells[k]), -k))
    else:
        k = 1
    return BehrendParams(N=N, n=n, s=s, k=k, n_clamped=n_clamped, s_clamped=s_clamped)


def encode(digits: tuple[int, ...], radix: int) -> int:
    return sum(d * radix ** i for i, d in enumerate(digits))


def decode(value: int, radix: int, n: int) -> tuple[int, ...]:
    digits = []
    for _ in range(n):
        value, d = divmod(value, radix)
        digits.append(d)
    if value:
        raise MatroidError(f"value does not fit in {n} digits of radix {radix}")
    return tuple(digits)


def has_3ap(members) -> bool:
    """True iff some x < y < z in the set satisfies x + z = 2y."""
    s = set(members)
    elems = sorted(s)
    for i, x in enumerate(elems):
        for y in elems[i + 1:]:
            if 2 * y - x in s:
                return True
    return False


def behrend_set(N: int) -> BehrendSet:
    """A verified 3-AP-free subset of {1..N} from the best sphere shell.

    Falls back to the brute-force optimum when the shell construction
    degenerates (n <= 1, which happens for N < 16).
    """
    if N < 1:
        raise MatroidError("behrend_set requires N >= 1")
    if N < 4:
        s, s_clamped = _digit_bound(N, 1)
        params = BehrendParams(N=N, n=1, s=s, k=0, n_clamped=True, s_clamped=s_clamped)
    else:
        params = behrend_params(N)
    if params.n <= 1:
        members = tuple(sorted(optimal_3ap_free(N)))
        return BehrendSet(members=members, params=params, via_fallback=True)
    shell = sphere_shells(params.n, params.s)[params.k]
    members = tuple(sorted(encode(x, params.radix) for x in shell))
    if len(set(members)) != len(members):
        raise MatroidError("internal error: shell encoding collided")
    if any(v < 1 or v > N for v in members):
        raise MatroidError("internal error: encoded member outside 1..N")
    if has_3ap(members):
        raise MatroidError("internal error: constructed set has a 3-term AP")
    return BehrendSet(members=members, params=params)


def _max_3ap_free_size(N: int) -> int:
    best = 0
    chosen: list[int] = []

    def extend(start: int) -> None:
        nonlocal best
        if len(chosen) + (N - start + 1) <= best:
            return
        if len(chosen) > best:
            best = len(chosen)
        for v in range(start, N + 1):
            if any(2 * b - a == v for i, a in enumerate(chosen) for b in chosen[i + 1:]):
                continue
            chosen.append(v)
            extend(v + 1)
            chosen.pop()

    extend(1)
    return best


def optimal_3ap_free(N: int) -> tuple[int, ...]:
    """Lexicographically smallest maximum 3-AP-free subset of {1..N}.

    Branch-and-bound; restricted to N <= 30.
    """
    if N < 1 or N > 30:
        raise MatroidError("optimal_3ap_free supports 1 <= N <= 30")
    target = _max_3ap_free_size(N)
    chosen: list[int] = []

    def search(start: int) -> bool:
        if len(chosen) == target:
            return True
        if len(chosen) + (N - start + 1) < target:
            return False
        for v in range(start, N + 1):
            if any(2 * b - a == v for i, a in enumerate(chosen) for b in chosen[i + 1:]):
                continue
            chosen.append(v)
            if search(v + 1):
                return True
            chosen.pop()
        return False

    search(1)
    return tuple(chosen)
