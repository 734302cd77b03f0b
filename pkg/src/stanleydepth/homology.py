"""Multigraded Betti numbers via degree-by-degree Koszul homology.

In multidegree b the Koszul complex of M has i-th component spanned by the
subsets F of supp(b) with #F = i and b - e_F in the grid; the differential
drops one index at a time with the usual alternating sign.  Ranks are exact:
rational elimination in characteristic 0, modular elimination mod p.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .core import Multidegree, leq, supp
from .errors import DomainError, ZeroModuleError
from .pairmod import PairModule


@dataclass(frozen=True)
class FieldSpec:
    """Coefficient field: characteristic 0 (exact rationals) or a prime p."""

    characteristic: int = 0

    def __post_init__(self):
        c = self.characteristic
        if c < 0 or c == 1 or (c > 1 and not _is_prime(c)):
            raise DomainError(f"characteristic must be 0 or a prime, got {c}")


QQ = FieldSpec(0)


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    for q in range(2, int(p ** 0.5) + 1):
        if p % q == 0:
            return False
    return True


@dataclass(frozen=True)
class BettiTable:
    entries: dict[tuple[int, Multidegree], int]
    field: FieldSpec
    box: Multidegree

    def projdim(self) -> int:
        return max(i for (i, _b) in self.entries)

    def betti(self, i: int, b: Multidegree) -> int:
        return self.entries.get((i, tuple(b)), 0)


def _rank_char0(rows: list[list[int]]) -> int:
    m = [[Fraction(x) for x in row] for row in rows]
    rank = 0
    cols = len(m[0]) if m else 0
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        pr = m[r]
        inv = 1 / pr[c]
        for i in range(r + 1, len(m)):
            if m[i][c] != 0:
                f = m[i][c] * inv
                mi = m[i]
                for j in range(c, cols):
                    mi[j] -= f * pr[j]
        r += 1
        rank += 1
        if r == len(m):
            break
    return rank


def _rank_modp(rows: list[list[int]], p: int) -> int:
    m = [[x % p for x in row] for row in rows]
    rank = 0
    cols = len(m[0]) if m else 0
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, len(m)) if m[i][c]), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        pr = m[r]
        inv = pow(pr[c], -1, p)
        for i in range(r + 1, len(m)):
            if m[i][c]:
                f = (m[i][c] * inv) % p
                mi = m[i]
                for j in range(c, cols):
                    mi[j] = (mi[j] - f * pr[j]) % p
        r += 1
        rank += 1
        if r == len(m):
            break
    return rank


def matrix_rank(rows: list[list[int]], fld: FieldSpec = QQ) -> int:
    if not rows or not rows[0]:
        return 0
    if fld.characteristic == 0:
        return _rank_char0(rows)
    return _rank_modp(rows, fld.characteristic)


def _sub_unit(b: Multidegree, F: tuple[int, ...]) -> Multidegree:
    return tuple(x - 1 if i in F else x for i, x in enumerate(b))


def koszul_basis(M: PairModule, i: int, b: Multidegree) -> list[tuple[int, ...]]:
    """Subsets F of supp(b) with #F = i and b - e_F in the grid."""
    sb = sorted(supp(b))
    out = []
    for F in itertools.combinations(sb, i):
        if _sub_unit(b, F) in M.grid:
            out.append(F)
    return out


def koszul_differential(
    M: PairModule, i: int, b: Multidegree,
    basis_i: list[tuple[int, ...]] | None = None,
    basis_lo: list[tuple[int, ...]] | None = None,
) -> list[list[int]]:
    """Matrix of d_i: C_i -> C_{i-1} in degree b, rows indexed by C_{i-1}."""
    if basis_i is None:
        basis_i = koszul_basis(M, i, b)
    if basis_lo is None:
        basis_lo = koszul_basis(M, i - 1, b)
    index = {F: k for k, F in enumerate(basis_lo)}
    rows = [[0] * len(basis_i) for _ in basis_lo]
    for col, F in enumerate(basis_i):
        for pos, j in enumerate(F):
            G = tuple(x for x in F if x != j)
            k = index.get(G)
            if k is not None:
                rows[k][col] = -1 if pos % 2 else 1
    return rows


def betti_degree(M: PairModule, i: int, b: Multidegree, fld: FieldSpec = QQ) -> int:
    """The (i, b)-th multigraded Betti number of M."""
    b = tuple(b)
    if not leq(b, M.box):
        raise DomainError(f"degree {b} lies outside the box {M.box}")
    basis_hi = koszul_basis(M, i + 1, b)
    basis_i = koszul_basis(M, i, b)
    basis_lo = koszul_basis(M, i - 1, b) if i > 0 else []
    dim_i = len(basis_i)
    if dim_i == 0:
        return 0
    rank_i = matrix_rank(koszul_differential(M, i, b, basis_i, basis_lo), fld) if i > 0 else 0
    rank_hi = matrix_rank(koszul_differential(M, i + 1, b, basis_hi, basis_i), fld)
    return dim_i - rank_i - rank_hi


_TABLE_CACHE: dict[tuple[PairModule, int], BettiTable] = {}


def betti_table(M: PairModule, fld: FieldSpec = QQ) -> BettiTable:
    """All nonzero Betti numbers of M in degrees within [0, box]."""
    if M.is_zero:
        raise ZeroModuleError("the zero module has no Betti table")
    key = (M, fld.characteristic)
    cached = _TABLE_CACHE.get(key)
    if cached is not None:
        return cached
    entries: dict[tuple[int, Multidegree], int] = {}
    n = M.nvars
    for b in itertools.product(*(range(x + 1) for x in M.box)):
        bases = []
        for i in range(len(supp(b)) + 1):
            bases.append(koszul_basis(M, i, b))
        if not any(bases):
            continue
        ranks = [0] * (len(bases) + 1)
        for i in range(1, len(bases)):
            if bases[i] and bases[i - 1]:
                ranks[i] = matrix_rank(
                    koszul_differential(M, i, b, bases[i], bases[i - 1]), fld
                )
        for i in range(len(bases)):
            beta = len(bases[i]) - ranks[i] - ranks[i + 1]
            if beta:
                entries[(i, b)] = beta
    table = BettiTable(entries, fld, M.box)
    if len(_TABLE_CACHE) > 4096:
        _TABLE_CACHE.clear()
    _TABLE_CACHE[key] = table
    return table


def projdim(M: PairModule, fld: FieldSpec = QQ) -> int:
    return betti_table(M, fld).projdim()


def depth(M: PairModule, fld: FieldSpec = QQ) -> int:
    """Auslander-Buchsbaum: n minus the projective dimension."""
    return M.nvars - projdim(M, fld)


def sreg(M: PairModule, fld: FieldSpec = QQ) -> int:
    """max #supp(b) - i over nonzero Betti numbers."""
    table = betti_table(M, fld)
    return max(len(supp(b)) - i for (i, b) in table.entries)


def is_cohen_macaulay(M: PairModule, fld: FieldSpec = QQ) -> bool:
    return depth(M, fld) == M.dim()
