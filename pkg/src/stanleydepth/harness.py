"""Instance generators and theorem-verification checks.

Every check returns a CheckReport whose ``instance`` field is a JSON
encoding sufficient to re-run the check bit-for-bit.  Failures never raise;
resource exhaustion is reported as skipped-resource with the certified
bounds that were available.
"""
from __future__ import annotations

import itertools
import json
import random
from dataclasses import dataclass, field
from math import comb

from .core import Interval, Multidegree, join, leq, slide_vec, supp, supp_rel
from .errors import DomainError, ResourceError
from .homology import FieldSpec, QQ, betti_table, depth, is_cohen_macaulay, sreg
from .ideal import MonomialIdeal, intersect_many, irreducible_ideal
from .pairmod import PairModule, ideal_module, interval_closure, make_pair, quotient_ring
from .stanley import (
    IntervalPartition,
    SearchConfig,
    dual_partition,
    partition_sdepth,
    partition_shreg,
    sdepth,
    shreg,
    validate_partition,
)


@dataclass(frozen=True)
class InstanceFamily:
    nvars: int
    max_exp: int
    max_gens: int
    mode: str = "exhaustive"  # or "random"
    seed: int = 0
    count: int | None = None
    instance_limit: int = 100_000

    def __post_init__(self):
        if self.mode not in ("exhaustive", "random"):
            raise DomainError(f"unknown family mode {self.mode!r}")
        if self.mode == "random" and self.count is None:
            raise DomainError("random families need an explicit count")


@dataclass
class CheckReport:
    check: str
    instance: str
    status: str  # pass | fail | skipped | skipped-resource
    details: dict = field(default_factory=dict)


def ideal_id(I: MonomialIdeal, **extra) -> str:
    payload = {"n": I.nvars, "gens": [list(g) for g in I.gens]}
    payload.update(extra)
    return json.dumps(payload, sort_keys=True)


def module_id(M: PairModule, **extra) -> str:
    payload = {
        "n": M.nvars,
        "top": [list(g) for g in M.top.gens],
        "bottom": [list(g) for g in M.bottom.gens],
        "box": list(M.box),
    }
    payload.update(extra)
    return json.dumps(payload, sort_keys=True)


# -- instance generation ----------------------------------------------


def enumerate_ideals(family: InstanceFamily):
    """Deterministic stream of distinct minimalized non-trivial ideals."""
    if family.mode == "exhaustive":
        yield from _exhaustive_ideals(family)
    else:
        yield from _random_ideals(family)


def _exhaustive_ideals(family: InstanceFamily):
    n, e = family.nvars, family.max_exp
    candidates = [
        g
        for g in itertools.product(range(e + 1), repeat=n)
        if any(x > 0 for x in g)
    ]
    total = sum(comb(len(candidates), k) for k in range(1, family.max_gens + 1))
    if total > family.instance_limit:
        raise ResourceError(
            f"exhaustive family would enumerate {total} generator sets, "
            f"above the limit {family.instance_limit}"
        )
    seen = set()
    emitted = 0
    for k in range(1, family.max_gens + 1):
        for gens in itertools.combinations(candidates, k):
            I = MonomialIdeal.from_gens(n, gens)
            if I.is_zero or I.is_unit or I.gens in seen:
                continue
            seen.add(I.gens)
            yield I
            emitted += 1
            if family.count is not None and emitted >= family.count:
                return


def _random_ideals(family: InstanceFamily):
    rng = random.Random(family.seed)
    n, e = family.nvars, family.max_exp
    seen = set()
    emitted = 0
    attempts = 0
    while emitted < family.count:
        attempts += 1
        if attempts > 1000 * family.count + 1000:
            raise ResourceError("random family failed to produce enough distinct ideals")
        k = rng.randint(1, family.max_gens)
        gens = []
        for _ in range(k):
            g = tuple(rng.randint(0, e) for _ in range(n))
            while all(x == 0 for x in g):
                g = tuple(rng.randint(0, e) for _ in range(n))
            gens.append(g)
        I = MonomialIdeal.from_gens(n, gens)
        if I.is_zero or I.is_unit or I.gens in seen:
            continue
        seen.add(I.gens)
        yield I
        emitted += 1


def random_cogeneric_ideal(
    rng: random.Random, nvars: int, max_exp: int, max_components: int = 4
) -> MonomialIdeal:
    """Intersection of irreducible ideals with pairwise-distinct nonzero exponents."""
    for _ in range(10_000):
        k = rng.randint(1, max_components)
        comps = []
        for _ in range(k):
            d = tuple(rng.randint(0, max_exp) for _ in range(nvars))
            while all(x == 0 for x in d):
                d = tuple(rng.randint(0, max_exp) for _ in range(nvars))
            comps.append(d)
        clash = any(
            any(x == y and x > 0 for x, y in zip(u, v))
            for i, u in enumerate(comps)
            for v in comps[i + 1:]
        )
        if clash:
            continue
        I = intersect_many(nvars, (irreducible_ideal(d) for d in comps))
        if I.is_zero or I.is_unit:
            continue
        if I.is_cogeneric():
            return I
    raise ResourceError("could not sample a cogeneric ideal with the given bounds")


# -- duality checks ----------------------------------------------------


def check_duality_depth(M: PairModule, fld: FieldSpec = QQ) -> CheckReport:
    """sreg(M) + depth(A_a(M)) = n, both sides via homology."""
    inst = module_id(M)
    try:
        lhs = sreg(M, fld)
        rhs = depth(M.alexander_dual(), fld)
    except ResourceError as err:
        return CheckReport("duality-depth", inst, "skipped-resource", err.bounds)
    ok = lhs + rhs == M.nvars
    return CheckReport(
        "duality-depth", inst, "pass" if ok else "fail",
        {"sreg": lhs, "depth_dual": rhs, "n": M.nvars},
    )


def check_duality_sdepth(M: PairModule, cfg: SearchConfig | None = None) -> CheckReport:
    """shreg(M) (direct search) + sdepth(A_a(M)) = n."""
    inst = module_id(M)
    try:
        lhs, lhs_witness = shreg(M, cfg, mode="direct")
        rhs, _ = sdepth(M.alexander_dual(), cfg)
    except ResourceError as err:
        return CheckReport("duality-sdepth", inst, "skipped-resource", err.bounds)
    ok = lhs + rhs == M.nvars
    return CheckReport(
        "duality-sdepth", inst, "pass" if ok else "fail",
        {"shreg": lhs, "sdepth_dual": rhs, "n": M.nvars,
         "witness": _partition_payload(lhs_witness)},
    )


# -- sliding -----------------------------------------------------------


def check_slide_invariance(
    M: PairModule, b: Multidegree, cfg: SearchConfig | None = None,
    fld: FieldSpec = QQ,
) -> CheckReport:
    """dim, depth, sreg, Betti reindexing, sdepth and shreg survive sliding."""
    inst = module_id(M, slide=list(b))
    Ms = M.slide(b)
    try:
        results = {
            "dim": (M.dim(), Ms.dim()),
            "depth": (depth(M, fld), depth(Ms, fld)),
            "sreg": (sreg(M, fld), sreg(Ms, fld)),
            "sdepth": (sdepth(M, cfg)[0], sdepth(Ms, cfg)[0]),
            "shreg": (shreg(M, cfg, mode="dual")[0], shreg(Ms, cfg, mode="dual")[0]),
        }
        reindexed = {
            (i, slide_vec(d, b)): v
            for (i, d), v in betti_table(M, fld).entries.items()
        }
        results["betti"] = (True, reindexed == betti_table(Ms, fld).entries)
    except ResourceError as err:
        return CheckReport("slide-invariance", inst, "skipped-resource", err.bounds)
    ok = all(x == y for x, y in results.values())
    return CheckReport(
        "slide-invariance", inst, "pass" if ok else "fail",
        {k: list(v) for k, v in results.items()},
    )


# -- skeletons ---------------------------------------------------------


def _sdepth_ge(M: PairModule, t: int, cfg: SearchConfig | None) -> bool:
    if M.is_zero:
        return True
    return sdepth(M, cfg)[0] >= t


def check_skeletons(
    M: PairModule, cfg: SearchConfig | None = None, fld: FieldSpec = QQ
) -> CheckReport:
    """Depth via CM skeletons, layer CM-ness and sdepth, and the
    sdepth-skeleton threshold equivalence."""
    inst = module_id(M)
    failures = []
    try:
        d = M.dim()
        dep = depth(M, fld)
        cm_levels = []
        for level in range(0, d + 1):
            sk = M.skeleton(level)
            if not sk.is_zero and is_cohen_macaulay(sk, fld):
                cm_levels.append(level)
        if max(cm_levels, default=-1) != dep:
            failures.append(f"depth {dep} != max CM skeleton level {cm_levels}")
        sk_dep = M.skeleton(dep)
        if sk_dep.is_zero or sk_dep.dim() != dep:
            failures.append("dim of depth-skeleton differs from depth")
        for level in range(1, M.nvars + 1):
            layer = M.layer(level)
            if layer.is_zero:
                continue
            if not is_cohen_macaulay(layer, fld) or layer.dim() != level:
                failures.append(f"layer {level} is not CM of dimension {level}")
            if sdepth(layer, cfg)[0] != level:
                failures.append(f"layer {level} has sdepth != {level}")
        sd = sdepth(M, cfg)[0]
        for t in range(0, d + 1):
            if (sd >= t) != _sdepth_ge(M.skeleton(t), t, cfg):
                failures.append(f"sdepth>= {t} equivalence fails")
    except ResourceError as err:
        return CheckReport("skeletons", inst, "skipped-resource", err.bounds)
    status = "pass" if not failures else "fail"
    return CheckReport("skeletons", inst, status, {"failures": failures})


def check_sequences(
    M: PairModule, cfg: SearchConfig | None = None
) -> CheckReport:
    """sdepth subadditivity and shreg subadditivity on skeleton sequences."""
    inst = module_id(M)
    failures = []
    try:
        d = M.dim()
        for i in range(1, d + 1):
            mid, quo = M.skeleton(i), M.skeleton(i - 1)
            lay = M.layer(i)
            if mid.is_zero:
                continue
            sd_mid = sdepth(mid, cfg)[0]
            lower = min(
                (sdepth(X, cfg)[0] for X in (lay, quo) if not X.is_zero),
                default=None,
            )
            if lower is not None and sd_mid < lower:
                failures.append(f"sdepth subadditivity fails at level {i}")
            sh_mid = shreg(mid, cfg, mode="dual")[0]
            upper = max(
                (shreg(X, cfg, mode="dual")[0] for X in (lay, quo) if not X.is_zero),
                default=None,
            )
            if upper is not None and sh_mid > upper:
                failures.append(f"shreg subadditivity fails at level {i}")
    except ResourceError as err:
        return CheckReport("sequences", inst, "skipped-resource", err.bounds)
    status = "pass" if not failures else "fail"
    return CheckReport("sequences", inst, status, {"failures": failures})


# -- cogeneric / generic theorems --------------------------------------


def check_cogeneric_conjecture(
    I: MonomialIdeal, cfg: SearchConfig | None = None, fld: FieldSpec = QQ
) -> CheckReport:
    """sdepth(S/I) >= depth(S/I) for cogeneric I, plus the generic mirror
    shreg(I*) <= sreg(I*) computed independently."""
    inst = ideal_id(I)
    if not I.is_cogeneric():
        return CheckReport("cogeneric", inst, "skipped", {"reason": "not cogeneric"})
    try:
        a = I.gens_join()
        M = quotient_ring(I, a)
        sd = sdepth(M, cfg)[0]
        dep = depth(M, fld)
        dual = ideal_module(I.dual(a), a)
        mirror_lhs, _ = shreg(dual, cfg, mode="direct")
        mirror_rhs = sreg(dual, fld)
    except ResourceError as err:
        return CheckReport("cogeneric", inst, "skipped-resource", err.bounds)
    ok = sd >= dep and mirror_lhs <= mirror_rhs
    return CheckReport(
        "cogeneric", inst, "pass" if ok else "fail",
        {"sdepth": sd, "depth": dep,
         "shreg_dual_ideal": mirror_lhs, "sreg_dual_ideal": mirror_rhs},
    )


def construct_generic_J(I: MonomialIdeal):
    """The auxiliary generic subideal used to peel one support level.

    Slides I by (r,...,r) for r = generator count, orders the slid
    generators by support size then lexicographically, and attaches, for
    each generator of minimal support size s and 1-based position i, the
    monomials x_j^i * m_i over variables j outside supp(m_i).  Returns
    (I', J, metadata); guarantees J generic, J within I', sigma(J) = s + 1.
    """
    if not I.is_generic():
        raise DomainError("construction requires a generic ideal")
    n = I.nvars
    s = min(len(supp(g)) for g in I.gens)
    if s >= n:
        raise DomainError("construction requires sigma(I) < n")
    r = len(I.gens)
    rvec = (r,) * n
    Ip = I.slide(rvec)
    ordered = sorted(Ip.gens, key=lambda g: (len(supp(g)), g))
    t = sum(1 for g in ordered if len(supp(g)) == s)
    jgens = list(ordered[t:])
    for i, m in enumerate(ordered[:t], start=1):
        for j in range(n):
            if j not in supp(m):
                jgens.append(tuple(m[k] + (i if k == j else 0) for k in range(n)))
    J = MonomialIdeal.from_gens(n, jgens)
    if not all(Ip.contains(g) for g in J.gens):
        raise AssertionError("J is not contained in the slid ideal")
    if min(len(supp(g)) for g in J.gens) != s + 1:
        raise AssertionError("sigma(J) != s + 1")
    # When some minimal-support generator has two or more variables outside
    # its support, the attached generators x_j^i m_i and x_k^i m_i share all
    # of m_i's exponents, so J fails the strict genericity test; it always
    # holds when s = n - 1.  Reported rather than asserted.
    meta = {"r": r, "s": s, "t": t, "ordered_gens": ordered, "rvec": rvec,
            "J_generic": J.is_generic()}
    return Ip, J, meta


def check_IJ_layer(
    Ip: MonomialIdeal, J: MonomialIdeal, meta: dict, fld: FieldSpec = QQ
) -> CheckReport:
    """The layer I'/J: explicit interval partition with shreg = s, matching
    sreg = s via homology, split along the fixed-support components."""
    inst = json.dumps(
        {"n": Ip.nvars, "I": [list(g) for g in Ip.gens], "J": [list(g) for g in J.gens]},
        sort_keys=True,
    )
    n = Ip.nvars
    s, t = meta["s"], meta["t"]
    ordered = meta["ordered_gens"]
    rvec = meta["rvec"]
    failures = []
    try:
        M = make_pair(Ip, J)
        if M.is_zero:
            failures.append("I'/J is the zero module")
        else:
            if any(len(supp_rel(b, rvec)) != s for b in M.grid):
                failures.append("a nonzero degree has r-support size != s")
            if sreg(M, fld) != s:
                failures.append(f"sreg(I'/J) = {sreg(M, fld)} != {s}")
        groups: dict[frozenset, list[tuple[int, Multidegree]]] = {}
        for i, m in enumerate(ordered[:t], start=1):
            groups.setdefault(supp(m), []).append((i, m))
        shregs = []
        for F, members in sorted(groups.items(), key=lambda kv: sorted(kv[0])):
            a_F = (0,) * n
            for _, m in members:
                a_F = join(a_F, m)
            box_F = join(a_F, rvec)
            I_F = MonomialIdeal.from_gens(n, [m for _, m in members])
            jg = []
            for i, m in members:
                for j in range(n):
                    if j not in F:
                        jg.append(tuple(m[k] + (i if k == j else 0) for k in range(n)))
            M_F = make_pair(I_F, MonomialIdeal.from_gens(n, jg), box_F)
            parts = []
            for b in itertools.product(*(range(x + 1) for x in a_F)):
                if not I_F.contains(b):
                    continue
                l_b = min(i for i, m in members if leq(m, b))
                b_prime = tuple(b[k] if k in F else l_b - 1 for k in range(n))
                parts.append(Interval(b, interval_closure(b_prime, box_F)))
            P = IntervalPartition(box_F, tuple(sorted(parts)))
            result = validate_partition(M_F, P)
            if not result.ok:
                failures.append(f"partition invalid on component {sorted(F)}")
            shregs.append(partition_shreg(P))
        if shregs and max(shregs) != s:
            failures.append(f"partition shreg {max(shregs)} != {s}")
    except ResourceError as err:
        return CheckReport("IJ-layer", inst, "skipped-resource", err.bounds)
    status = "pass" if not failures else "fail"
    return CheckReport("IJ-layer", inst, status, {"failures": failures, "s": s})


def check_linear_quotient_slides(
    I: MonomialIdeal, b: Multidegree, cfg: SearchConfig | None = None,
    fld: FieldSpec = QQ,
) -> CheckReport:
    """Stanley's conjecture for I^{<| b} when I has linear quotients."""
    inst = ideal_id(I, slide=list(b))
    order = I.linear_quotient_order()
    if order is None:
        return CheckReport(
            "linear-quotient-slide", inst, "skipped", {"reason": "no linear quotient"}
        )
    try:
        M = ideal_module(I.slide(b))
        sd = sdepth(M, cfg)[0]
        dep = depth(M, fld)
    except ResourceError as err:
        return CheckReport("linear-quotient-slide", inst, "skipped-resource", err.bounds)
    ok = sd >= dep
    return CheckReport(
        "linear-quotient-slide", inst, "pass" if ok else "fail",
        {"sdepth": sd, "depth": dep, "order": [list(g) for g in order]},
    )


# -- conjecture survey -------------------------------------------------


def survey_conjecture(
    family: InstanceFamily, cfg: SearchConfig | None = None, fld: FieldSpec = QQ
) -> list[dict]:
    """Depth/sdepth table over a family; reports, never asserts.

    A negative gap would be a notable finding (the conjecture was open at
    desk scale), flagged in the row rather than raised.
    """
    rows = []
    for I in enumerate_ideals(family):
        a = I.gens_join()
        for name, M in (("quotient", quotient_ring(I, a)), ("ideal", ideal_module(I, a))):
            if M.is_zero:
                continue
            row = {"ideal": ideal_id(I), "module": name}
            try:
                row.update(
                    depth=depth(M, fld),
                    sdepth=sdepth(M, cfg)[0],
                    dim=M.dim(),
                    generic=I.is_generic(),
                    cogeneric=I.is_cogeneric(),
                )
                row["gap"] = row["sdepth"] - row["depth"]
                row["notable"] = row["gap"] < 0
            except ResourceError as err:
                row["status"] = "partial"
                row["bounds"] = err.bounds
            rows.append(row)
    return rows


def _partition_payload(P: IntervalPartition) -> list[list[list[int]]]:
    return [[list(p.lo), list(p.hi)] for p in P.parts]
