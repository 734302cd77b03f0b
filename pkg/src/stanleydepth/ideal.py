"""Monomial ideals as minimal generator sets.

Generators are exponent vectors (multidegrees); the ideal is the up-set they
generate.  The zero ideal is the empty generator list, the unit ideal the
single generator 0.  Generator lists are always divisibility-minimal and
lexicographically sorted, so equal ideals compare equal structurally.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Sequence

from .core import (
    Multidegree,
    check_multidegree,
    join,
    leq,
    setminus_vec,
    slide_vec,
    sub_trunc,
    supp,
)
from .errors import DimensionError, DomainError


def _minimal_antichain(gens: Iterable[Multidegree]) -> tuple[Multidegree, ...]:
    gens = sorted(set(gens))
    keep = [g for g in gens if not any(h != g and leq(h, g) for h in gens)]
    return tuple(keep)


@dataclass(frozen=True)
class MonomialIdeal:
    nvars: int
    gens: tuple[Multidegree, ...]

    def __post_init__(self):
        for g in self.gens:
            check_multidegree(g)
            if len(g) != self.nvars:
                raise DimensionError(f"generator {g} has wrong length for n={self.nvars}")

    # -- constructors -------------------------------------------------

    @staticmethod
    def from_gens(nvars: int, gens: Iterable[Multidegree]) -> "MonomialIdeal":
        """Minimalize an arbitrary generating set."""
        return MonomialIdeal(nvars, _minimal_antichain(tuple(g) for g in gens))

    @staticmethod
    def zero(nvars: int) -> "MonomialIdeal":
        return MonomialIdeal(nvars, ())

    @staticmethod
    def unit(nvars: int) -> "MonomialIdeal":
        return MonomialIdeal(nvars, ((0,) * nvars,))

    # -- flags --------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return len(self.gens) == 1 and all(x == 0 for x in self.gens[0])

    def _check_proper(self, op: str) -> None:
        if self.is_zero or self.is_unit:
            raise DomainError(f"{op} is undefined for the zero/unit ideal")

    def _check_ctx(self, other: "MonomialIdeal") -> None:
        if self.nvars != other.nvars:
            raise DimensionError(f"variable count mismatch: {self.nvars} vs {other.nvars}")

    # -- basic operations ---------------------------------------------

    def contains(self, b: Multidegree) -> bool:
        """True iff x^b lies in the ideal, i.e. some generator divides it."""
        if len(b) != self.nvars:
            raise DimensionError(f"degree {b} has wrong length for n={self.nvars}")
        return any(leq(g, b) for g in self.gens)

    def add_ideal(self, other: "MonomialIdeal") -> "MonomialIdeal":
        self._check_ctx(other)
        return MonomialIdeal.from_gens(self.nvars, self.gens + other.gens)

    def intersect(self, other: "MonomialIdeal") -> "MonomialIdeal":
        self._check_ctx(other)
        if self.is_zero or other.is_zero:
            return MonomialIdeal.zero(self.nvars)
        return MonomialIdeal.from_gens(
            self.nvars, (join(g, h) for g in self.gens for h in other.gens)
        )

    def colon(self, m: Multidegree) -> "MonomialIdeal":
        """The colon ideal (I : x^m)."""
        if len(m) != self.nvars:
            raise DimensionError(f"degree {m} has wrong length for n={self.nvars}")
        return MonomialIdeal.from_gens(self.nvars, (sub_trunc(g, m) for g in self.gens))

    def gens_join(self) -> Multidegree:
        """Join of all generators (the all-zeros vector for the zero ideal)."""
        zero = (0,) * self.nvars
        return reduce(join, self.gens, zero)

    # -- irreducible decomposition ------------------------------------

    def irreducible_decomposition(self) -> list[Multidegree]:
        """Exponent vectors d of the irredundant decomposition I = ∩ m^d.

        m^d denotes the ideal (x_i^{d_i} | d_i > 0).  Uses recursive
        generator splitting, then drops redundant components.
        """
        self._check_proper("irreducible decomposition")
        comps = set()
        self._split(self.gens, comps)
        return _irredundant(comps)

    @staticmethod
    def _split(gens: tuple[Multidegree, ...], out: set[Multidegree]) -> None:
        mixed = next((g for g in gens if len(supp(g)) >= 2), None)
        if mixed is None:
            # all generators are pure powers in distinct variables
            n = len(gens[0])
            d = [0] * n
            for g in gens:
                for i, x in enumerate(g):
                    if x:
                        d[i] = x
            out.add(tuple(d))
            return
        j = min(supp(mixed))
        rest = tuple(g for g in gens if g != mixed)
        n = len(mixed)
        v = tuple(mixed[j] if i == j else 0 for i in range(n))
        w = tuple(0 if i == j else mixed[i] for i in range(n))
        for piece in (v, w):
            MonomialIdeal._split(_minimal_antichain(rest + (piece,)), out)

    # -- Alexander dual ideal -----------------------------------------

    def dual(self, a: Multidegree) -> "MonomialIdeal":
        """The Alexander dual ideal with respect to the box bound a.

        Generators are a \\ d over the irreducible components d of I; the
        components of the dual are a \\ g over the generators g.  Both forms
        are computed and cross-checked.
        """
        self._check_proper("dual ideal")
        if not all(leq(g, a) for g in self.gens):
            raise DomainError(f"box {a} is smaller than some generator of {self.gens}")
        comps = self.irreducible_decomposition()
        dual = MonomialIdeal.from_gens(self.nvars, (setminus_vec(a, d) for d in comps))
        expected = sorted(setminus_vec(a, g) for g in self.gens)
        if sorted(dual.irreducible_decomposition()) != expected:
            raise AssertionError(
                f"dual-ideal generator/component swap failed for {self} at box {a}"
            )
        return dual

    # -- sliding -------------------------------------------------------

    def slide(self, b: Multidegree) -> "MonomialIdeal":
        """The ideal generated by g ◁ b over the generators g."""
        if len(b) != self.nvars:
            raise DimensionError(f"slide vector {b} has wrong length for n={self.nvars}")
        return MonomialIdeal.from_gens(self.nvars, (slide_vec(g, b) for g in self.gens))

    # -- genericity ----------------------------------------------------

    def is_generic(self) -> bool:
        """No two generators share an equal nonzero exponent in any variable."""
        self._check_proper("genericity")
        return not _shares_nonzero_exponent(self.gens)

    def is_cogeneric(self) -> bool:
        """No two irreducible components share a minimal generator."""
        self._check_proper("cogenericity")
        return not _shares_nonzero_exponent(self.irreducible_decomposition())

    # -- linear quotient ----------------------------------------------

    def linear_quotient_order(self) -> tuple[Multidegree, ...] | None:
        """A generator ordering witnessing linear quotients, or None.

        Each successive colon (m_1,...,m_{i-1}) : m_i must be generated by
        variables.  Backtracking with lexicographic tie-break, so the
        returned witness is deterministic.
        """
        self._check_proper("linear quotient")
        gens = list(self.gens)

        def extend(prefix: list[Multidegree], remaining: list[Multidegree]):
            if not remaining:
                return tuple(prefix)
            for g in remaining:
                if not prefix or _colon_is_prime(prefix, g):
                    res = extend(prefix + [g], [h for h in remaining if h != g])
                    if res is not None:
                        return res
            return None

        return extend([], gens)


def _shares_nonzero_exponent(vectors: Sequence[Multidegree]) -> bool:
    vs = list(vectors)
    for i, u in enumerate(vs):
        for v in vs[i + 1:]:
            if any(x == y and x > 0 for x, y in zip(u, v)):
                return True
    return False


def _colon_is_prime(prefix: Sequence[Multidegree], g: Multidegree) -> bool:
    n = len(g)
    colon = MonomialIdeal.from_gens(n, (sub_trunc(h, g) for h in prefix))
    return all(sum(q) == 1 for q in colon.gens)


def _irredundant(comps: set[Multidegree]) -> list[Multidegree]:
    """Drop components containing the intersection of the others.

    The witness monomial of m^c (c_i - 1 on supp(c), huge elsewhere) is the
    componentwise-largest monomial outside m^c, so the intersection of the
    other components escapes m^c exactly when the witness lies in all of
    them; m^c is irredundant iff that holds.
    """
    comps = sorted(comps)
    big = max((max(c) for c in comps), default=0) + 1
    kept = []
    for c in comps:
        witness = tuple(x - 1 if x > 0 else big for x in c)
        if all(_in_irreducible(witness, d) for d in comps if d != c):
            kept.append(c)
    return sorted(kept)


def _in_irreducible(m: Multidegree, d: Multidegree) -> bool:
    """Membership of x^m in m^d = (x_i^{d_i} | d_i > 0)."""
    return any(x > 0 and y >= x for x, y in zip(d, m))


def irreducible_contains(d: Multidegree, b: Multidegree) -> bool:
    """Membership of x^b in the irreducible ideal m^d."""
    return _in_irreducible(b, d)


def intersect_many(nvars: int, ideals: Iterable[MonomialIdeal]) -> MonomialIdeal:
    ideals = list(ideals)
    if not ideals:
        return MonomialIdeal.unit(nvars)
    return reduce(lambda x, y: x.intersect(y), ideals)


def irreducible_ideal(d: Multidegree) -> MonomialIdeal:
    """The ideal m^d = (x_i^{d_i} | d_i > 0)."""
    if all(x == 0 for x in d):
        raise DomainError("m^0 is not an irreducible ideal")
    n = len(d)
    gens = [tuple(d[i] if j == i else 0 for j in range(n)) for i in supp(d)]
    return MonomialIdeal.from_gens(n, gens)


def skeleton_power_ideal(a: Multidegree, level: int) -> MonomialIdeal:
    """The ideal of all b with #supp^a(b) > level.

    Indices with a_i = 0 lie in supp^a(b) for every b, so generators range
    over subsets F of supp(a) with #F = level + 1 - #{i | a_i = 0}; the
    generator for F is sum of a_i e_i over F.  When that count is <= 0 the
    ideal is the unit ideal, and when it exceeds #supp(a) the zero ideal.
    """
    check_multidegree(a)
    n = len(a)
    if not 0 <= level <= n:
        raise DomainError(f"skeleton level must be in [0, {n}], got {level}")
    positive = sorted(supp(a))
    need = level + 1 - (n - len(positive))
    if need <= 0:
        return MonomialIdeal.unit(n)
    if need > len(positive):
        return MonomialIdeal.zero(n)
    gens = []
    for F in itertools.combinations(positive, need):
        gens.append(tuple(a[i] if i in F else 0 for i in range(n)))
    return MonomialIdeal.from_gens(n, gens)
