"""Multidegree arithmetic over a box [0, a].

A multidegree is a plain tuple of nonnegative ints; its length is the number
of variables.  All operations are pure and all values immutable, so
everything here is safe for unrestricted concurrent use.  Index sets
(supports) are 0-based frozensets.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterator

from .errors import DimensionError, DomainError, ResourceError

Multidegree = tuple[int, ...]

#: Implementation bound on the number of variables.
MAX_VARS = 12

#: Default bound on the number of cells of a materialized grid.
GRID_CELL_LIMIT = 2 ** 20


def check_nvars(n: int, limit: int = MAX_VARS) -> None:
    if not 1 <= n <= limit:
        raise DomainError(f"number of variables must be in [1, {limit}], got {n}")


def check_multidegree(a: Multidegree) -> None:
    check_nvars(len(a))
    if any(x < 0 for x in a):
        raise DomainError(f"multidegree entries must be nonnegative: {a}")


def _same_length(a: Multidegree, b: Multidegree) -> None:
    if len(a) != len(b):
        raise DimensionError(f"length mismatch: {len(a)} vs {len(b)}")


def leq(a: Multidegree, b: Multidegree) -> bool:
    """Componentwise a ≼ b."""
    _same_length(a, b)
    return all(x <= y for x, y in zip(a, b))


def join(a: Multidegree, b: Multidegree) -> Multidegree:
    """Componentwise max."""
    _same_length(a, b)
    return tuple(max(x, y) for x, y in zip(a, b))


def meet(a: Multidegree, b: Multidegree) -> Multidegree:
    """Componentwise min."""
    _same_length(a, b)
    return tuple(min(x, y) for x, y in zip(a, b))


def supp_rel(b: Multidegree, a: Multidegree) -> frozenset[int]:
    """Indices i with b_i >= a_i (the support of b relative to the bound a)."""
    _same_length(a, b)
    return frozenset(i for i, (x, y) in enumerate(zip(b, a)) if x >= y)


def supp(b: Multidegree) -> frozenset[int]:
    """Indices i with b_i >= 1."""
    return frozenset(i for i, x in enumerate(b) if x >= 1)


def slide_vec(a: Multidegree, b: Multidegree) -> Multidegree:
    """Coordinate i becomes a_i + b_i where a_i != 0, and stays 0 elsewhere."""
    _same_length(a, b)
    return tuple(x + y if x != 0 else 0 for x, y in zip(a, b))


def setminus_vec(c: Multidegree, a: Multidegree) -> Multidegree:
    """Coordinate i becomes c_i + 1 - a_i where a_i != 0, and 0 elsewhere.

    Requires a ≼ c.
    """
    if not leq(a, c):
        raise DomainError(f"setminus_vec requires a <= c componentwise: a={a}, c={c}")
    return tuple(x + 1 - y if y != 0 else 0 for x, y in zip(c, a))


def add(a: Multidegree, b: Multidegree) -> Multidegree:
    _same_length(a, b)
    return tuple(x + y for x, y in zip(a, b))


def sub_trunc(a: Multidegree, b: Multidegree) -> Multidegree:
    """Componentwise max(a_i - b_i, 0)."""
    _same_length(a, b)
    return tuple(max(x - y, 0) for x, y in zip(a, b))


def box_cells(a: Multidegree) -> int:
    return math.prod(x + 1 for x in a)


def enumerate_box(a: Multidegree, limit: int = GRID_CELL_LIMIT) -> Iterator[Multidegree]:
    """Lexicographic stream of all b with 0 ≼ b ≼ a."""
    check_multidegree(a)
    size = box_cells(a)
    if size > limit:
        raise ResourceError(f"box [0, {a}] has {size} cells, above the limit {limit}")
    return itertools.product(*(range(x + 1) for x in a))


@dataclass(frozen=True, order=True)
class Interval:
    """A closed interval [lo, hi] of multidegrees, lo ≼ hi."""

    lo: Multidegree
    hi: Multidegree

    def __post_init__(self):
        if not leq(self.lo, self.hi):
            raise DomainError(f"interval requires lo <= hi: {self.lo}, {self.hi}")

    def points(self) -> Iterator[Multidegree]:
        return itertools.product(*(range(l, h + 1) for l, h in zip(self.lo, self.hi)))

    @property
    def size(self) -> int:
        return math.prod(h - l + 1 for l, h in zip(self.lo, self.hi))

    def __contains__(self, p: Multidegree) -> bool:
        return leq(self.lo, p) and leq(p, self.hi)


@dataclass(frozen=True)
class Grid:
    """A subset of the box [0, box], stored explicitly."""

    box: Multidegree
    members: frozenset[Multidegree]

    def __post_init__(self):
        check_multidegree(self.box)
        for m in self.members:
            if not (leq((0,) * len(self.box), m) and leq(m, self.box)):
                raise DomainError(f"grid member {m} outside [0, {self.box}]")

    def __contains__(self, p: Multidegree) -> bool:
        return p in self.members

    def __len__(self) -> int:
        return len(self.members)
