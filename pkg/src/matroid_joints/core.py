"""Generic finite matroid engine over an abstract independence oracle.

A matroid is given by an ordered ground set (a tuple of labels) and a pure
predicate on frozensets of element indices.  Everything else -- rank,
closure, flats, lines, planes, joints -- is derived from the oracle.
All operations are deterministic: subsets are canonicalized to sorted
index tuples, greedy rank scans in ground order, and reports list
counterexamples in (size, lex) order.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Iterable, Optional


class MatroidError(ValueError):
    """Domain error: bad subset, non-line input, violated precondition."""


@dataclass(frozen=True)
class Matroid:
    """Ground set plus independence oracle.

    ``labels`` fixes the element order; all index-based operations refer
    to positions in this tuple.  ``oracle`` must be a pure total function
    from frozensets of indices to bool.
    """

    labels: tuple
    oracle: Callable[[frozenset], bool]

    @property
    def size(self) -> int:
        return len(self.labels)

    @property
    def ground(self) -> frozenset:
        return frozenset(range(len(self.labels)))

    def is_independent(self, subset: Iterable[int]) -> bool:
        return self.oracle(self._subset(subset))

    def _subset(self, subset: Iterable[int]) -> frozenset:
        s = frozenset(subset)
        for e in s:
            if not (isinstance(e, int) and 0 <= e < len(self.labels)):
                raise MatroidError(f"element {e!r} not in ground set of size {len(self.labels)}")
        return s


@dataclass(frozen=True)
class Flat:
    """A closed set together with its rank."""

    members: frozenset
    rank: int

    def key(self) -> tuple:
        return tuple(sorted(self.members))


def rank(m: Matroid, subset: Iterable[int]) -> int:
    """Greedy rank: scan in ground order, keep elements that stay independent."""
    s = m._subset(subset)
    current: set = set()
    for e in sorted(s):
        if m.oracle(frozenset(current | {e})):
            current.add(e)
    return len(current)


def closure(m: Matroid, subset: Iterable[int]) -> frozenset:
    """All elements whose addition leaves the rank unchanged."""
    s = m._subset(subset)
    r = rank(m, s)
    return s | frozenset(e for e in range(m.size) if e not in s and rank(m, s | {e}) == r)


def is_flat(m: Matroid, subset: Iterable[int]) -> bool:
    s = m._subset(subset)
    return closure(m, s) == s


def make_flat(m: Matroid, subset: Iterable[int]) -> Flat:
    """The flat spanned by ``subset``: its closure with the common rank."""
    s = m._subset(subset)
    return Flat(closure(m, s), rank(m, s))


def flats_of_rank(m: Matroid, k: int, *, allow_large: bool = False) -> list[Flat]:
    """All flats of rank exactly k, as closures of independent k-subsets.

    The enumeration cost grows as size**k, so k > 3 requires
    ``allow_large=True``.
    """
    if k < 1:
        raise MatroidError("k must be >= 1")
    if k > 3 and not allow_large:
        raise MatroidError("flats_of_rank with k > 3 requires allow_large=True")
    seen: dict[tuple, Flat] = {}
    for combo in combinations(range(m.size), k):
        s = frozenset(combo)
        if not m.oracle(s):
            continue
        cl = closure(m, s)
        key = tuple(sorted(cl))
        if key not in seen:
            seen[key] = Flat(cl, k)
    return [seen[key] for key in sorted(seen)]


def _require_lines(m: Matroid, lines: Iterable[Flat]) -> list[Flat]:
    out = list(lines)
    for f in out:
        if not isinstance(f, Flat) or f.rank != 2:
            raise MatroidError(f"expected a rank-2 flat, got {f!r}")
        m._subset(f.members)
    return out


def coplanar(m: Matroid, lines: list[Flat]) -> bool:
    """True iff the union of the given lines lies in a plane (rank <= 3)."""
    lines = _require_lines(m, lines)
    union: frozenset = frozenset().union(*(f.members for f in lines)) if lines else frozenset()
    return rank(m, union) <= 3


def lines_through(x: int, lines: list[Flat]) -> list[int]:
    return [i for i, f in enumerate(lines) if x in f.members]


def is_joint(m: Matroid, x: int, lines: list[Flat]) -> bool:
    """x is a joint iff it lies on three lines whose union has rank >= 4."""
    lines = _require_lines(m, lines)
    m._subset({x})
    return _is_joint_unchecked(m, x, lines)


def _is_joint_unchecked(m: Matroid, x: int, lines: list[Flat]) -> bool:
    through = [f for f in lines if x in f.members]
    for trio in combinations(through, 3):
        union = trio[0].members | trio[1].members | trio[2].members
        if rank(m, union) >= 4:
            return True
    return False


def joint_witness(m: Matroid, x: int, lines: list[Flat]) -> Optional[tuple[int, int, int]]:
    """Indices into ``lines`` of a witnessing non-coplanar triple, or None."""
    through = [i for i, f in enumerate(lines) if x in f.members]
    for trio in combinations(through, 3):
        union = lines[trio[0]].members | lines[trio[1]].members | lines[trio[2]].members
        if rank(m, union) >= 4:
            return trio
    return None


def count_joints(m: Matroid, lines: list[Flat]) -> int:
    lines = _require_lines(m, lines)
    return sum(1 for x in range(m.size) if _is_joint_unchecked(m, x, lines))


def is_n_joint(m: Matroid, x: int, lines: list[Flat], n: int) -> bool:
    """x lies on n lines of ``lines`` whose union has rank >= n + 1."""
    if n < 2:
        raise MatroidError("n must be >= 2")
    lines = _require_lines(m, lines)
    m._subset({x})
    through = [f for f in lines if x in f.members]
    if len(through) < n:
        return False
    for combo in combinations(through, n):
        union: frozenset = frozenset().union(*(f.members for f in combo))
        if rank(m, union) >= n + 1:
            return True
    return False


# ---------------------------------------------------------------------------
# Checkers
# ---------------------------------------------------------------------------

PASS = "pass"
FAIL = "fail"
INCONCLUSIVE = "inconclusive"


@dataclass
class CheckResult:
    status: str
    counterexample: Optional[tuple] = None
    detail: str = ""

    @property
    def ok(self) -> bool:
        return self.status == PASS


@dataclass
class AxiomReport:
    mode: str
    axiom1: CheckResult
    axiom2: CheckResult
    axiom3: CheckResult
    oracle_calls: int = 0
    checks_done: int = 0

    @property
    def ok(self) -> bool:
        return self.axiom1.ok and self.axiom2.ok and self.axiom3.ok

    @property
    def inconclusive(self) -> bool:
        return INCONCLUSIVE in (self.axiom1.status, self.axiom2.status, self.axiom3.status)


def _subset_key(s: frozenset) -> tuple:
    return (len(s), tuple(sorted(s)))


def check_axioms(
    m: Matroid,
    mode: str = "exhaustive",
    sample_budget: int = 10_000_000,
    rng_seed: int = 0,
) -> AxiomReport:
    """Test Axioms 1-3 against the oracle.

    Exhaustive mode evaluates the oracle on every subset and checks every
    axiom-3 pair; exceeding ``sample_budget`` (total oracle calls plus
    pair checks) yields an explicit "inconclusive" status, never a silent
    pass.  Sampled mode draws random subsets from ``rng_seed``.
    Counterexamples are minimal in (size, lex) order.
    """
    if mode == "exhaustive":
        return _check_axioms_exhaustive(m, sample_budget)
    if mode == "sampled":
        return _check_axioms_sampled(m, sample_budget, rng_seed)
    raise MatroidError(f"unknown mode {mode!r}")


def _check_axioms_exhaustive(m: Matroid, budget: int) -> AxiomReport:
    n = m.size
    if 2 ** n > budget:
        res = CheckResult(INCONCLUSIVE, detail=f"2^{n} subsets exceed budget {budget}")
        return AxiomReport("exhaustive", res, res, res)

    independent: dict[frozenset, bool] = {}
    calls = 0
    all_subsets = sorted(
        (frozenset(c) for k in range(n + 1) for c in combinations(range(n), k)),
        key=_subset_key,
    )
    for s in all_subsets:
        independent[s] = bool(m.oracle(s))
        calls += 1

    ax1 = CheckResult(PASS) if independent[frozenset()] else CheckResult(
        FAIL, counterexample=((),), detail="empty set is dependent"
    )

    ind_sets = [s for s in all_subsets if independent[s]]

    ax2 = CheckResult(PASS)
    for s in ind_sets:
        bad = next(
            (e for e in sorted(s) if not independent[s - {e}]),
            None,
        )
        if bad is not None:
            ax2 = CheckResult(
                FAIL,
                counterexample=(tuple(sorted(s - {bad})), tuple(sorted(s))),
                detail="dependent subset of an independent set",
            )
            break

    ax3 = CheckResult(PASS)
    checks = calls
    done = True
    for x1 in ind_sets:
        for x2 in ind_sets:
            if len(x1) >= len(x2):
                continue
            checks += 1
            if checks > budget:
                ax3 = CheckResult(INCONCLUSIVE, detail=f"budget {budget} exhausted")
                done = False
                break
            if not any(independent[x1 | {e}] for e in x2 - x1):
                ax3 = CheckResult(
                    FAIL,
                    counterexample=(tuple(sorted(x1)), tuple(sorted(x2))),
                    detail="no augmenting element",
                )
                done = False
                break
        if not done:
            break

    return AxiomReport("exhaustive", ax1, ax2, ax3, oracle_calls=calls, checks_done=checks)


def _random_subset(rng: random.Random, n: int) -> frozenset:
    return frozenset(e for e in range(n) if rng.random() < 0.5)


def _check_axioms_sampled(m: Matroid, budget: int, seed: int) -> AxiomReport:
    rng = random.Random(seed)
    n = m.size
    calls = 0

    ax1 = CheckResult(PASS) if m.oracle(frozenset()) else CheckResult(
        FAIL, counterexample=((),), detail="empty set is dependent"
    )
    calls += 1

    ax2 = CheckResult(PASS, detail="sampled")
    ax3 = CheckResult(PASS, detail="sampled")
    while calls < budget:
        s = _random_subset(rng, n)
        calls += 1
        if not m.oracle(s):
            continue
        if s and ax2.ok:
            sub = frozenset(rng.sample(sorted(s), rng.randint(0, len(s) - 1)))
            calls += 1
            if not m.oracle(sub):
                ax2 = CheckResult(
                    FAIL, counterexample=(tuple(sorted(sub)), tuple(sorted(s)))
                )
                break
        t = _random_subset(rng, n)
        calls += 1
        if not m.oracle(t):
            continue
        x1, x2 = (s, t) if len(s) < len(t) else (t, s)
        if len(x1) == len(x2):
            continue
        ok = False
        for e in sorted(x2 - x1):
            calls += 1
            if m.oracle(x1 | {e}):
                ok = True
                break
        if not ok:
            ax3 = CheckResult(FAIL, counterexample=(tuple(sorted(x1)), tuple(sorted(x2))))
            break

    return AxiomReport("sampled", ax1, ax2, ax3, oracle_calls=calls, checks_done=calls)


@dataclass
class SubmodularityReport:
    pairs_checked: int
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def check_submodularity(m: Matroid, pairs: int, rng_seed: int = 0) -> SubmodularityReport:
    """Sample subset pairs and test rank(X|Y) + rank(X&Y) <= rank(X) + rank(Y)."""
    rng = random.Random(rng_seed)
    report = SubmodularityReport(pairs_checked=pairs)
    for _ in range(pairs):
        x = _random_subset(rng, m.size)
        y = _random_subset(rng, m.size)
        if rank(m, x | y) + rank(m, x & y) > rank(m, x) + rank(m, y):
            report.violations.append((tuple(sorted(x)), tuple(sorted(y))))
    return report


@dataclass
class IncidenceReport:
    unique_line: CheckResult
    unique_plane: CheckResult
    line_in_plane: CheckResult
    angle_plane: CheckResult
    lines: int = 0
    planes: int = 0

    @property
    def ok(self) -> bool:
        return all(
            r.ok for r in (self.unique_line, self.unique_plane, self.line_in_plane, self.angle_plane)
        )


def check_incidence_properties(m: Matroid, rng_seed: int = 0, samples: int = 1000) -> IncidenceReport:
    """Verify the four point/line/plane incidence laws of a simple matroid.

    Raises MatroidError (naming the violating subset) when the matroid is
    not simple.  Properties over pairs/triples are checked exhaustively
    when their count is at most ``samples``, otherwise on a seeded sample.
    """
    for e in range(m.size):
        if not m.oracle(frozenset({e})):
            raise MatroidError(f"matroid is not simple: singleton {{{e}}} is dependent")
    for a, b in combinations(range(m.size), 2):
        if not m.oracle(frozenset({a, b})):
            raise MatroidError(f"matroid is not simple: pair {{{a}, {b}}} is dependent")

    rng = random.Random(rng_seed)
    lines = flats_of_rank(m, 2)
    planes = flats_of_rank(m, 3)
    line_sets = [f.members for f in lines]
    plane_sets = [f.members for f in planes]

    def sample_or_all(items: list, count: int) -> list:
        if len(items) <= count:
            return items
        return [items[i] for i in sorted(rng.sample(range(len(items)), count))]

    # (1) any two points lie in exactly one line
    r1 = CheckResult(PASS)
    for a, b in sample_or_all(list(combinations(range(m.size), 2)), samples):
        n_lines = sum(1 for s in line_sets if a in s and b in s)
        if n_lines != 1:
            r1 = CheckResult(FAIL, counterexample=(a, b), detail=f"{n_lines} lines")
            break

    # (2) three non-collinear points lie in exactly one plane
    r2 = CheckResult(PASS)
    triples = sample_or_all(list(combinations(range(m.size), 3)), samples)
    for t in triples:
        if any(set(t) <= s for s in line_sets):
            continue
        n_planes = sum(1 for s in plane_sets if set(t) <= s)
        if n_planes != 1:
            r2 = CheckResult(FAIL, counterexample=t, detail=f"{n_planes} planes")
            break

    # (3) a line meeting a plane in two points is contained in it
    r3 = CheckResult(PASS)
    lp_pairs = sample_or_all(
        [(i, j) for i in range(len(lines)) for j in range(len(planes))], samples
    )
    for i, j in lp_pairs:
        if len(line_sets[i] & plane_sets[j]) >= 2 and not line_sets[i] <= plane_sets[j]:
            r3 = CheckResult(FAIL, counterexample=(tuple(sorted(line_sets[i])), tuple(sorted(plane_sets[j]))))
            break

    # (4) two intersecting lines lie in a unique plane
    r4 = CheckResult(PASS)
    meeting = [
        (i, j)
        for i, j in combinations(range(len(lines)), 2)
        if line_sets[i] & line_sets[j]
    ]
    for i, j in sample_or_all(meeting, samples):
        union = line_sets[i] | line_sets[j]
        n_planes = sum(1 for s in plane_sets if union <= s)
        if n_planes != 1:
            r4 = CheckResult(
                FAIL,
                counterexample=(tuple(sorted(line_sets[i])), tuple(sorted(line_sets[j]))),
                detail=f"{n_planes} planes",
            )
            break

    return IncidenceReport(r1, r2, r3, r4, lines=len(lines), planes=len(planes))
