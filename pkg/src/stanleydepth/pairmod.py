"""Quotient modules M = I/J of monomial ideals with a materialized grid.

A PairModule stores the top ideal I (possibly the unit ideal, encoding S/J),
the bottom ideal J, a box bound a, and the set of degrees b in [0, a] with
x^b in I \\ J.  The module is positively a-determined, so this grid carries
all of its structure.
"""
from __future__ import annotations

from dataclasses import dataclass

from .core import (
    GRID_CELL_LIMIT,
    Multidegree,
    check_multidegree,
    enumerate_box,
    join,
    leq,
    slide_vec,
    supp,
    supp_rel,
)
from .errors import DomainError, ZeroModuleError
from .ideal import MonomialIdeal, skeleton_power_ideal


@dataclass(frozen=True)
class PairModule:
    top: MonomialIdeal
    bottom: MonomialIdeal
    box: Multidegree
    grid: frozenset[Multidegree]

    @property
    def nvars(self) -> int:
        return self.top.nvars

    @property
    def is_zero(self) -> bool:
        return not self.grid

    def _check_nonzero(self) -> None:
        if self.is_zero:
            raise ZeroModuleError("invariant undefined for the zero module")

    # -- invariants from the grid -------------------------------------

    def dim(self) -> int:
        """max #supp^a(b) over nonzero degrees b."""
        self._check_nonzero()
        return max(len(supp_rel(b, self.box)) for b in self.grid)

    def sigma(self) -> int:
        """min #supp(b) over nonzero degrees b."""
        self._check_nonzero()
        return min(len(supp(b)) for b in self.grid)

    # -- functors ------------------------------------------------------

    def alexander_dual(self) -> "PairModule":
        """The Alexander dual with respect to this module's box.

        Realized on ideals: A(I/J) = J*/I* where * is the dual ideal at the
        box, with the conventions dual(0) = (1) and dual((1)) = 0.  The
        resulting grid is checked to be the pointwise reflection of this
        module's grid.
        """
        a = self.box
        dual_top = _dual_ideal_ext(self.bottom, a)
        dual_bottom = _dual_ideal_ext(self.top, a)
        out = make_pair(dual_top, dual_bottom, a)
        reflected = frozenset(tuple(x - y for x, y in zip(a, b)) for b in self.grid)
        if out.grid != reflected:
            raise AssertionError("Alexander dual grid is not the reflected grid")
        return out

    def skeleton(self, level: int) -> "PairModule":
        """M^{<= level}: kill all degrees with a-support size above level."""
        n = self.nvars
        if not 0 <= level <= n:
            raise DomainError(f"skeleton level must be in [0, {n}], got {level}")
        cut = self.top.intersect(skeleton_power_ideal(self.box, level))
        out = make_pair(self.top, self.bottom.add_ideal(cut), self.box)
        expected = frozenset(
            b for b in self.grid if len(supp_rel(b, self.box)) <= level
        )
        if out.grid != expected:
            raise AssertionError("skeleton grid does not match the support filter")
        return out

    def layer(self, level: int) -> "PairModule":
        """M^{> level-1} / M^{> level}: the degrees of a-support size exactly level."""
        n = self.nvars
        if not 1 <= level <= n:
            raise DomainError(f"layer level must be in [1, {n}], got {level}")
        above = self.top.intersect(skeleton_power_ideal(self.box, level - 1))
        cut = self.top.intersect(skeleton_power_ideal(self.box, level))
        out = make_pair(
            above.add_ideal(self.bottom), cut.add_ideal(self.bottom), self.box
        )
        expected = frozenset(
            b for b in self.grid if len(supp_rel(b, self.box)) == level
        )
        if out.grid != expected:
            raise AssertionError("layer grid does not match the support filter")
        return out

    def slide(self, b: Multidegree) -> "PairModule":
        """M^{◁ b}: slide both ideals and the box."""
        return make_pair(self.top.slide(b), self.bottom.slide(b), slide_vec(self.box, b))

    def rebox(self, new_box: Multidegree) -> "PairModule":
        if not leq(self.box, new_box):
            raise DomainError(f"rebox target {new_box} is not >= current box {self.box}")
        return make_pair(self.top, self.bottom, new_box)


def _dual_ideal_ext(I: MonomialIdeal, a: Multidegree) -> MonomialIdeal:
    """Dual ideal extended by the zero/unit conventions."""
    if I.is_zero:
        return MonomialIdeal.unit(I.nvars)
    if I.is_unit:
        return MonomialIdeal.zero(I.nvars)
    return I.dual(a)


def make_pair(
    top: MonomialIdeal,
    bottom: MonomialIdeal,
    box: Multidegree | None = None,
    grid_limit: int = GRID_CELL_LIMIT,
) -> PairModule:
    """Build I/J with its grid; the box defaults to the join of all generators."""
    if top.nvars != bottom.nvars:
        raise DomainError("top and bottom ideals must share a variable count")
    for g in bottom.gens:
        if not top.contains(g):
            raise DomainError(f"bottom generator {g} does not lie in the top ideal")
    if box is None:
        box = join(top.gens_join(), bottom.gens_join())
    else:
        box = tuple(box)
        check_multidegree(box)
        for g in top.gens + bottom.gens:
            if not leq(g, box):
                raise DomainError(f"generator {g} lies outside the box {box}")
    grid = frozenset(
        b
        for b in enumerate_box(box, grid_limit)
        if top.contains(b) and not bottom.contains(b)
    )
    return PairModule(top, bottom, box, grid)


def quotient_ring(J: MonomialIdeal, box: Multidegree | None = None) -> PairModule:
    """S/J as a pair module (unit top ideal)."""
    return make_pair(MonomialIdeal.unit(J.nvars), J, box)


def ideal_module(I: MonomialIdeal, box: Multidegree | None = None) -> PairModule:
    """I itself as a pair module (zero bottom ideal)."""
    return make_pair(I, MonomialIdeal.zero(I.nvars), box)


def interval_module(
    c: Multidegree, b: Multidegree, a: Multidegree
) -> PairModule:
    """The interval module with monomial basis [c, b] closed up to a.

    Requires c ≼ b ≼ a.  Realized as (x^c) / x^c·(x_i^{b_i-c_i+1} for i
    outside supp^a(b)); the grid is the closed interval [c, b'] where
    b'_i = a_i on supp^a(b).
    """
    if not (leq(c, b) and leq(b, a)):
        raise DomainError(f"interval module requires c <= b <= a: {c}, {b}, {a}")
    n = len(a)
    top = MonomialIdeal.from_gens(n, [c])
    bgens = []
    for i in range(n):
        if b[i] < a[i]:
            bgens.append(tuple(c[j] + (b[i] - c[i] + 1 if j == i else 0) for j in range(n)))
    bottom = MonomialIdeal.from_gens(n, bgens)
    out = make_pair(top, bottom, a)
    closure = tuple(a[i] if b[i] >= a[i] else b[i] for i in range(n))
    expected = frozenset(
        p for p in out.grid
    )  # sanity: compare with the closed interval
    interval = frozenset(
        p for p in enumerate_box(closure) if leq(c, p)
    )
    if expected != interval:
        raise AssertionError("interval-module grid differs from the closed interval")
    return out


def interval_closure(b: Multidegree, a: Multidegree) -> Multidegree:
    """b' with b'_i = a_i on supp^a(b) and b_i elsewhere."""
    return tuple(ai if bi >= ai else bi for bi, ai in zip(b, a))
