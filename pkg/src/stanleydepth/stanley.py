"""Exact Stanley depth and shreg via exact-cover search over interval partitions.

A quasi Stanley decomposition of a pair module is the same data as a
partition of its grid into closed intervals (order-convexity of the grid
makes the two-corner membership test sufficient for interval admissibility).
The decision problem "sdepth >= t" is an exact cover of the grid by
intervals whose top touches the box in at least t coordinates; "shreg <= r"
restricts interval bottoms to support size at most r.  Both searches are
deterministic: cells are ordered by fewest covering candidates, candidates
by larger volume then lexicographic corners.
"""
from __future__ import annotations

import itertools
import time
from dataclasses import dataclass

from .core import Interval, Multidegree, leq, supp, supp_rel
from .errors import DomainError, ResourceError, ZeroModuleError
from .pairmod import PairModule

__all__ = [
    "SearchConfig",
    "IntervalPartition",
    "StanleySpace",
    "PartitionCheck",
    "validate_partition",
    "partition_sdepth",
    "partition_shreg",
    "sdepth",
    "shreg",
    "refine_to_stanley",
    "dual_partition",
    "stanley_space_degrees",
]


@dataclass(frozen=True)
class SearchConfig:
    max_nodes: int = 20_000_000
    max_seconds: float | None = None
    #: restrict candidate intervals to classic Stanley-space shape
    #: (every top coordinate equals either the box or the bottom coordinate)
    stanley_only: bool = False
    tie_break: str = "volume-lex"

    def __post_init__(self):
        if self.max_nodes <= 0:
            raise DomainError("node limit must be positive")
        if self.max_seconds is not None and self.max_seconds <= 0:
            raise DomainError("time limit must be positive")
        if self.tie_break != "volume-lex":
            raise DomainError(f"unknown tie-break policy {self.tie_break!r}")


DEFAULT_CONFIG = SearchConfig()


@dataclass(frozen=True)
class IntervalPartition:
    box: Multidegree
    parts: tuple[Interval, ...]


@dataclass(frozen=True)
class StanleySpace:
    origin: Multidegree
    free_vars: frozenset[int]


@dataclass(frozen=True)
class PartitionCheck:
    ok: bool
    outside: tuple[Multidegree, ...]
    overlapping: tuple[Multidegree, ...]
    uncovered: tuple[Multidegree, ...]


def validate_partition(M: PairModule, P: IntervalPartition) -> PartitionCheck:
    """Disjointness + exact cover of the grid, with diagnostics."""
    if P.box != M.box:
        raise DomainError(f"partition box {P.box} does not match module box {M.box}")
    seen: dict[Multidegree, int] = {}
    outside, overlapping = [], []
    for part in P.parts:
        for p in part.points():
            if p not in M.grid:
                outside.append(p)
            if p in seen:
                overlapping.append(p)
            seen[p] = seen.get(p, 0) + 1
    uncovered = [p for p in sorted(M.grid) if p not in seen]
    ok = not outside and not overlapping and not uncovered
    return PartitionCheck(ok, tuple(sorted(set(outside))),
                          tuple(sorted(set(overlapping))), tuple(uncovered))


def partition_sdepth(P: IntervalPartition, a: Multidegree | None = None) -> int:
    """min #supp^a(hi) over the parts."""
    if not P.parts:
        raise DomainError("sdepth of an empty partition is undefined")
    a = P.box if a is None else tuple(a)
    return min(len(supp_rel(part.hi, a)) for part in P.parts)


def partition_shreg(P: IntervalPartition) -> int:
    """max #supp(lo) over the parts."""
    if not P.parts:
        raise DomainError("shreg of an empty partition is undefined")
    return max(len(supp(part.lo)) for part in P.parts)


def dual_partition(P: IntervalPartition, a: Multidegree | None = None) -> IntervalPartition:
    """Reflect every part [c, b] to [a-b, a-c]; an involution up to order."""
    a = P.box if a is None else tuple(a)
    parts = tuple(
        sorted(
            Interval(tuple(x - y for x, y in zip(a, p.hi)),
                     tuple(x - y for x, y in zip(a, p.lo)))
            for p in P.parts
        )
    )
    return IntervalPartition(a, parts)


def refine_to_stanley(P: IntervalPartition, a: Multidegree | None = None) -> list[StanleySpace]:
    """Split each interval into Stanley spaces x^{c'} k[supp^a(hi)].

    c' agrees with the bottom corner on supp^a(hi) and ranges over the
    interval elsewhere; the resulting spaces tile the same degree set.
    """
    a = P.box if a is None else tuple(a)
    spaces = []
    for part in P.parts:
        Z = supp_rel(part.hi, a)
        ranges = [
            (range(part.lo[i], part.hi[i] + 1) if i not in Z else (part.lo[i],))
            for i in range(len(a))
        ]
        for origin in itertools.product(*ranges):
            spaces.append(StanleySpace(origin, Z))
    return spaces


def stanley_space_degrees(space: StanleySpace, box: Multidegree):
    """Degrees of the space that lie inside [0, box]."""
    ranges = [
        range(space.origin[i], (box[i] if i in space.free_vars else space.origin[i]) + 1)
        for i in range(len(box))
    ]
    return itertools.product(*ranges)


# -- the exact-cover engine -------------------------------------------


class _Budget:
    def __init__(self, cfg: SearchConfig):
        self.nodes_left = cfg.max_nodes
        self.deadline = None if cfg.max_seconds is None else time.monotonic() + cfg.max_seconds

    def spend(self, bounds: dict) -> None:
        self.nodes_left -= 1
        if self.nodes_left < 0:
            raise ResourceError("search node limit exceeded", bounds)
        if self.deadline is not None and self.nodes_left % 4096 == 0:
            if time.monotonic() > self.deadline:
                raise ResourceError("search time limit exceeded", bounds)


def _box_contacts(p: Multidegree, box: Multidegree) -> int:
    return sum(1 for x, y in zip(p, box) if x == y)


def _cover_search(cells, box, los, tops, pair_ok, budget, bounds):
    """Find a disjoint interval cover of `cells`, or None.

    `los`/`tops` are the admissible bottom/top corners.  Deterministic DFS:
    first uncovered cell in the static order, candidates by volume then lex.
    """
    if not cells:
        return []
    bit = {p: 1 << k for k, p in enumerate(cells)}
    cand_by_cell: dict[Multidegree, list[tuple[Multidegree, Multidegree]]] = {}
    for p in cells:
        pairs = [
            (c, t)
            for t in tops
            if leq(p, t)
            for c in los
            if leq(c, p) and pair_ok(c, t)
        ]
        if not pairs:
            return None
        pairs.sort(key=lambda ct: (-Interval(*ct).size, ct))
        cand_by_cell[p] = pairs
    order = sorted(cells, key=lambda p: (len(cand_by_cell[p]), p))
    masks: dict[tuple[Multidegree, Multidegree], int] = {}

    def mask_of(c, t):
        m = masks.get((c, t))
        if m is None:
            m = 0
            for q in Interval(c, t).points():
                m |= bit[q]
            masks[(c, t)] = m
        return m

    full = (1 << len(cells)) - 1
    failed: set[int] = set()

    def solve(uncovered: int):
        if uncovered == 0:
            return []
        if uncovered in failed:
            return None
        cell = next(p for p in order if bit[p] & uncovered)
        for c, t in cand_by_cell[cell]:
            budget.spend(bounds)
            m = mask_of(c, t)
            if m & ~uncovered:
                continue
            rest = solve(uncovered & ~m)
            if rest is not None:
                return [(c, t)] + rest
        if len(failed) < 1_000_000:
            failed.add(uncovered)
        return None

    return solve(full)


def _partition_from(pairs, box) -> IntervalPartition:
    return IntervalPartition(box, tuple(sorted(Interval(c, t) for c, t in pairs)))


def _greedy_partition(M: PairModule) -> IntervalPartition:
    """A valid partition found greedily; certifies a lower bound for sdepth."""
    cells = sorted(M.grid)
    uncovered = set(cells)
    box = M.box
    parts = []
    while uncovered:
        p = min(uncovered)
        best = None
        for t in cells:
            if t not in M.grid or not leq(p, t):
                continue
            pts = [q for q in Interval(p, t).points()]
            if all(q in uncovered for q in pts):
                key = (_box_contacts(t, box), len(pts), tuple(-x for x in t))
                if best is None or key > best[0]:
                    best = (key, t, pts)
        _, t, pts = best
        parts.append(Interval(p, t))
        uncovered.difference_update(pts)
    return IntervalPartition(box, tuple(parts))


_SDEPTH_CACHE: dict[tuple[PairModule, bool], tuple[int, IntervalPartition]] = {}


def sdepth(
    M: PairModule, cfg: SearchConfig | None = None
) -> tuple[int, IntervalPartition]:
    """Exact Stanley depth of M with a witness partition.

    Sweeps the decision threshold downward from dim M; the first
    satisfiable exact cover gives the value.
    """
    if M.is_zero:
        raise ZeroModuleError("sdepth of the zero module is undefined")
    use_cache = cfg is None or cfg == DEFAULT_CONFIG
    key = (M, False if cfg is None else cfg.stanley_only)
    if use_cache and key in _SDEPTH_CACHE:
        return _SDEPTH_CACHE[key]
    cfg = cfg or DEFAULT_CONFIG
    cells = sorted(M.grid)
    box = M.box
    maximal = [p for p in cells if not any(q != p and leq(p, q) for q in cells)]
    upper = min(M.dim(), min(_box_contacts(q, box) for q in maximal))
    budget = _Budget(cfg)
    pair_ok = _pair_filter(cfg, box)
    for t in range(upper, -1, -1):
        tops = [p for p in cells if _box_contacts(p, box) >= t]
        bounds = {"sdepth_upper": t, "sdepth_lower_witness": None}
        try:
            sol = _cover_search(cells, box, cells, tops, pair_ok, budget, bounds)
        except ResourceError as err:
            greedy = _greedy_partition(M)
            err.bounds.update(
                sdepth_upper=t,
                sdepth_lower=partition_sdepth(greedy),
                exact=False,
            )
            raise
        if sol is not None:
            result = (t, _partition_from(sol, box))
            if use_cache:
                if len(_SDEPTH_CACHE) > 8192:
                    _SDEPTH_CACHE.clear()
                _SDEPTH_CACHE[key] = result
            return result
    raise AssertionError("threshold 0 must always admit the singleton cover")


def _pair_filter(cfg: SearchConfig, box: Multidegree):
    if not cfg.stanley_only:
        return lambda c, t: True

    def stanley_shape(c, t):
        return all(tv == bv or tv == cv for cv, tv, bv in zip(c, t, box))

    return stanley_shape


def shreg(
    M: PairModule, cfg: SearchConfig | None = None, mode: str = "direct"
) -> tuple[int, IntervalPartition]:
    """Exact shreg of M with a witness partition.

    Direct mode sweeps the bottom-support bound upward; dual mode computes
    n - sdepth of the Alexander dual and reflects its witness.
    """
    if M.is_zero:
        raise ZeroModuleError("shreg of the zero module is undefined")
    if mode not in ("direct", "dual"):
        raise DomainError(f"unknown shreg mode {mode!r}")
    cfg = cfg or DEFAULT_CONFIG
    n = M.nvars
    if mode == "dual":
        value, witness = sdepth(M.alexander_dual(), cfg)
        return n - value, dual_partition(witness, M.box)
    cells = sorted(M.grid)
    box = M.box
    minimal = [p for p in cells if not any(q != p and leq(q, p) for q in cells)]
    lower = max(len(supp(p)) for p in minimal)
    budget = _Budget(cfg)
    pair_ok = _pair_filter(cfg, box)
    for r in range(lower, n + 1):
        los = [p for p in cells if len(supp(p)) <= r]
        bounds = {"shreg_lower": r}
        try:
            sol = _cover_search(cells, box, los, cells, pair_ok, budget, bounds)
        except ResourceError as err:
            err.bounds.update(shreg_lower=r, shreg_upper=n, exact=False)
            raise
        if sol is not None:
            return r, _partition_from(sol, box)
    raise AssertionError("bound n must always admit the singleton cover")
