"""Command-line interface: parse ideals, run computations, emit JSON.

Exit codes: 0 success, 2 validation/syntax, 3 domain error, 4 resource
exhaustion, 5 check failure.
"""
from __future__ import annotations

import argparse
import json
import random
import re
import sys
import time
from concurrent.futures import ProcessPoolExecutor

from .core import Multidegree, check_nvars
from .errors import DimensionError, DomainError, ParseError, ResourceError
from .harness import (
    CheckReport,
    InstanceFamily,
    check_cogeneric_conjecture,
    check_duality_depth,
    check_duality_sdepth,
    check_IJ_layer,
    check_linear_quotient_slides,
    check_sequences,
    check_skeletons,
    check_slide_invariance,
    construct_generic_J,
    enumerate_ideals,
    random_cogeneric_ideal,
    survey_conjecture,
)
from .homology import FieldSpec, betti_table, depth, sreg
from .ideal import MonomialIdeal
from .pairmod import ideal_module, make_pair, quotient_ring
from .stanley import (
    SearchConfig,
    partition_sdepth,
    refine_to_stanley,
    sdepth,
    shreg,
)

_MONOMIAL = re.compile(r"x(\d+)(?:\^(\d+))?")


def parse_ideal(text: str, nvars: int | None = None) -> MonomialIdeal:
    """Parse "x1^3, x1^2*x2" (also "0" for the zero, "1" for the unit ideal)."""
    stripped = text.strip()
    if not stripped:
        raise ParseError("empty ideal text", 0)
    if stripped == "0":
        if nvars is None:
            raise ParseError("the zero ideal needs an explicit variable count")
        return MonomialIdeal.zero(nvars)
    terms = []
    max_index = 0
    offset = 0
    for chunk in text.split(","):
        term = chunk.strip()
        pos = offset + len(chunk) - len(chunk.lstrip())
        offset += len(chunk) + 1
        if term == "1":
            terms.append({})
            continue
        if not term:
            raise ParseError("empty monomial", pos)
        exps: dict[int, int] = {}
        for factor in term.split("*"):
            factor = factor.strip()
            m = _MONOMIAL.fullmatch(factor)
            if m is None:
                raise ParseError(f"malformed factor {factor!r}", pos)
            idx = int(m.group(1))
            if idx < 1:
                raise ParseError(f"variable index must be >= 1 in {factor!r}", pos)
            e = int(m.group(2) or 1)
            if e > 10**6:
                raise ParseError(f"exponent overflow in {factor!r}", pos)
            exps[idx - 1] = exps.get(idx - 1, 0) + e
        max_index = max(max_index, max(exps) + 1)
        terms.append(exps)
    n = nvars if nvars is not None else max_index
    check_nvars(n)
    if max_index > n:
        raise ParseError(f"variable x{max_index} exceeds the declared count {n}")
    gens = [tuple(t.get(i, 0) for i in range(n)) for t in terms]
    return MonomialIdeal.from_gens(n, gens)


def print_ideal(I: MonomialIdeal) -> str:
    if I.is_zero:
        return "0"
    parts = []
    for g in I.gens:
        factors = [
            f"x{i + 1}" + (f"^{e}" if e > 1 else "")
            for i, e in enumerate(g)
            if e > 0
        ]
        parts.append("*".join(factors) if factors else "1")
    return ", ".join(parts)


def _parse_vec(text: str, n: int | None = None) -> Multidegree:
    try:
        v = tuple(int(x) for x in text.split(","))
    except ValueError as err:
        raise ParseError(f"malformed integer vector {text!r}") from err
    if n is not None and len(v) != n:
        raise DimensionError(f"vector {v} has length {len(v)}, expected {n}")
    if any(x < 0 for x in v):
        raise DomainError(f"vector entries must be nonnegative: {v}")
    return v


def _ideal_payload(I: MonomialIdeal) -> dict:
    return {"n": I.nvars, "gens": [list(g) for g in I.gens], "text": print_ideal(I)}


def _build_module(args):
    I = parse_ideal(args.ideal, args.n)
    box = _parse_vec(args.box, I.nvars) if args.box else None
    kind = getattr(args, "module", "quotient")
    if kind == "quotient":
        return quotient_ring(I, box), I
    if kind == "ideal":
        return ideal_module(I, box), I
    if kind == "pair":
        if not getattr(args, "bottom", None):
            raise DomainError("--module pair requires --bottom")
        J = parse_ideal(args.bottom, I.nvars)
        return make_pair(I, J, box), I
    raise DomainError(f"unknown module kind {kind!r}")


def _search_config(args) -> SearchConfig | None:
    kwargs = {}
    if getattr(args, "max_nodes", None):
        kwargs["max_nodes"] = args.max_nodes
    if getattr(args, "max_seconds", None):
        kwargs["max_seconds"] = args.max_seconds
    if getattr(args, "stanley_only", False):
        kwargs["stanley_only"] = True
    return SearchConfig(**kwargs) if kwargs else None


def _partition_payload(P) -> list:
    return [{"lo": list(p.lo), "hi": list(p.hi)} for p in P.parts]


# -- subcommand handlers ----------------------------------------------


def _cmd_info(args):
    I = parse_ideal(args.ideal, args.n)
    box = _parse_vec(args.box, I.nvars) if args.box else None
    out = {"ideal": _ideal_payload(I)}
    for name, M in (("quotient", quotient_ring(I, box)), ("ideal", ideal_module(I, box))):
        if M.is_zero:
            out[name] = {"zero": True, "box": list(M.box)}
            continue
        out[name] = {
            "box": list(M.box),
            "dim": M.dim(),
            "sigma": M.sigma(),
            "depth": depth(M),
            "sreg": sreg(M),
        }
    return out


def _cmd_dual(args):
    I = parse_ideal(args.ideal, args.n)
    a = _parse_vec(args.box, I.nvars)
    return {"ideal": _ideal_payload(I), "box": list(a), "dual": _ideal_payload(I.dual(a))}


def _cmd_slide(args):
    I = parse_ideal(args.ideal, args.n)
    b = _parse_vec(args.by, I.nvars)
    return {"ideal": _ideal_payload(I), "by": list(b), "slid": _ideal_payload(I.slide(b))}


def _cmd_skeleton(args):
    M, I = _build_module(args)
    sk = M.skeleton(args.level)
    return {
        "ideal": _ideal_payload(I),
        "level": args.level,
        "top": _ideal_payload(sk.top),
        "bottom": _ideal_payload(sk.bottom),
        "box": list(sk.box),
        "zero": sk.is_zero,
    }


def _cmd_betti(args):
    M, I = _build_module(args)
    fld = FieldSpec(args.char)
    table = betti_table(M, fld)
    entries = [
        {"i": i, "deg": list(b), "beta": v}
        for (i, b), v in sorted(table.entries.items())
    ]
    return {
        "ideal": _ideal_payload(I),
        "char": args.char,
        "box": list(M.box),
        "entries": entries,
        "projdim": table.projdim(),
        "depth": depth(M, fld),
        "sreg": sreg(M, fld),
    }


def _cmd_sdepth(args):
    M, I = _build_module(args)
    value, witness = sdepth(M, _search_config(args))
    return {
        "ideal": _ideal_payload(I),
        "box": list(M.box),
        "sdepth": value,
        "exact": True,
        "witness": _partition_payload(witness),
    }


def _cmd_shreg(args):
    M, I = _build_module(args)
    value, witness = shreg(M, _search_config(args), mode=args.mode)
    return {
        "ideal": _ideal_payload(I),
        "box": list(M.box),
        "mode": args.mode,
        "shreg": value,
        "exact": True,
        "witness": _partition_payload(witness),
    }


def _cmd_decomp(args):
    M, I = _build_module(args)
    value, witness = sdepth(M, _search_config(args))
    spaces = refine_to_stanley(witness)
    return {
        "ideal": _ideal_payload(I),
        "box": list(M.box),
        "sdepth": value,
        "exact": True,
        "partition": _partition_payload(witness),
        "partition_sdepth": partition_sdepth(witness),
        "stanley_spaces": [
            {"origin": list(s.origin), "free_vars": sorted(s.free_vars)}
            for s in spaces
        ],
    }


def _cmd_irr_decomp(args):
    I = parse_ideal(args.ideal, args.n)
    return {
        "ideal": _ideal_payload(I),
        "components": [list(d) for d in I.irreducible_decomposition()],
    }


_SUITES = ("duality", "slides", "skeletons", "sequences", "cogeneric",
           "generic-layer", "linear-quotient")


def _suite_instances(args) -> list[tuple]:
    """Pre-sampled (check-kind, payload) task list for one suite run."""
    rng = random.Random(args.seed)
    tasks = []
    if args.suite in ("duality", "slides", "skeletons", "sequences",
                      "linear-quotient"):
        family = InstanceFamily(
            args.n, args.max_exp, args.max_gens,
            mode="random" if args.count else "exhaustive",
            seed=args.seed, count=args.count,
        )
        for I in enumerate_ideals(family):
            if args.suite == "slides":
                b = tuple(rng.randint(0, 3) for _ in range(I.nvars))
                tasks.append((args.suite, (I, b)))
            elif args.suite == "linear-quotient":
                b = tuple(rng.randint(1, 3) for _ in range(I.nvars))
                tasks.append((args.suite, (I, b)))
            else:
                tasks.append((args.suite, (I,)))
    elif args.suite == "cogeneric":
        count = args.count or 100
        for _ in range(count):
            tasks.append((args.suite, (random_cogeneric_ideal(rng, args.n, args.max_exp),)))
    elif args.suite == "generic-layer":
        count = args.count or 50
        family = InstanceFamily(
            args.n, args.max_exp, args.max_gens,
            mode="random", seed=args.seed, count=10 * count,
        )
        found = 0
        for I in enumerate_ideals(family):
            if found >= count:
                break
            try:
                if not I.is_generic() or min(len([x for x in g if x > 0]) for g in I.gens) >= I.nvars:
                    continue
            except DomainError:
                continue
            tasks.append((args.suite, (I,)))
            found += 1
    else:
        raise DomainError(f"unknown suite {args.suite!r}; choose from {_SUITES}")
    return tasks


def _run_task(task) -> list[CheckReport]:
    kind, payload = task
    if kind == "duality":
        (I,) = payload
        mods = [quotient_ring(I), ideal_module(I)]
        out = []
        for M in mods:
            if M.is_zero:
                continue
            out.append(check_duality_depth(M))
            out.append(check_duality_sdepth(M))
        return out
    if kind == "slides":
        I, b = payload
        M = quotient_ring(I)
        return [] if M.is_zero else [check_slide_invariance(M, b)]
    if kind == "skeletons":
        (I,) = payload
        M = quotient_ring(I)
        return [] if M.is_zero else [check_skeletons(M)]
    if kind == "sequences":
        (I,) = payload
        M = quotient_ring(I)
        return [] if M.is_zero else [check_sequences(M)]
    if kind == "cogeneric":
        (I,) = payload
        return [check_cogeneric_conjecture(I)]
    if kind == "generic-layer":
        (I,) = payload
        try:
            Ip, J, meta = construct_generic_J(I)
        except DomainError as err:
            return [CheckReport("IJ-layer", str(I.gens), "skipped", {"reason": str(err)})]
        return [check_IJ_layer(Ip, J, meta)]
    if kind == "linear-quotient":
        I, b = payload
        return [check_linear_quotient_slides(I, b)]
    raise DomainError(f"unknown task kind {kind!r}")


def run_suite(args) -> list[CheckReport]:
    tasks = _suite_instances(args)
    if args.workers > 1:
        with ProcessPoolExecutor(max_workers=args.workers) as pool:
            chunks = list(pool.map(_run_task, tasks))
    else:
        chunks = [_run_task(t) for t in tasks]
    reports = [r for chunk in chunks for r in chunk]
    reports.sort(key=lambda r: (r.check, r.instance))
    return reports


def _cmd_check(args):
    reports = run_suite(args)
    counts = {"pass": 0, "fail": 0, "skipped": 0, "skipped-resource": 0}
    for r in reports:
        counts[r.status] = counts.get(r.status, 0) + 1
    payload = {
        "suite": args.suite,
        "counts": counts,
        "reports": [
            {"check": r.check, "instance": json.loads(r.instance)
             if r.instance.startswith("{") else r.instance,
             "status": r.status, "details": r.details}
            for r in reports
            if r.status != "pass" or args.verbose
        ],
    }
    payload["_exit"] = 5 if counts["fail"] else 0
    return payload


def _cmd_survey(args):
    if args.input:
        with open(args.input) as fh:
            spec = json.load(fh)
        family = InstanceFamily(**spec)
    else:
        family = InstanceFamily(
            args.n, args.max_exp, args.max_gens,
            mode="random" if args.count else "exhaustive",
            seed=args.seed, count=args.count,
        )
    rows = survey_conjecture(family)
    return {"family": family.__dict__, "rows": rows}


# -- argument parsing --------------------------------------------------


def _add_ideal_args(p, box_required=False):
    p.add_argument("--ideal", required=True, help='e.g. "x1^3, x1^2*x2"')
    p.add_argument("--n", type=int, default=None, help="variable count (inferred if omitted)")
    p.add_argument("--box", required=box_required, default=None,
                   help="comma-separated box bound, e.g. 3,2")


def _add_module_args(p):
    p.add_argument("--module", choices=("quotient", "ideal", "pair"), default="quotient")
    p.add_argument("--bottom", default=None, help="bottom ideal for --module pair")


def _add_search_args(p):
    p.add_argument("--max-nodes", type=int, default=None)
    p.add_argument("--max-seconds", type=float, default=None)
    p.add_argument("--stanley-only", action="store_true",
                   help="restrict to classic Stanley-decomposition intervals")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="stanleydepth",
        description="Exact invariants of monomial quotient modules",
    )
    ap.add_argument("--format", choices=("json", "jsonl"), default="json")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("info", help="dim, sigma, depth, sreg for S/I and I")
    _add_ideal_args(p)
    p.set_defaults(fn=_cmd_info)

    p = sub.add_parser("dual", help="Alexander dual ideal at a box")
    _add_ideal_args(p, box_required=True)
    p.set_defaults(fn=_cmd_dual)

    p = sub.add_parser("slide", help="slide the ideal by a vector")
    _add_ideal_args(p)
    p.add_argument("--by", required=True, help="comma-separated slide vector")
    p.set_defaults(fn=_cmd_slide)

    p = sub.add_parser("skeleton", help="the level-l skeleton of the module")
    _add_ideal_args(p)
    _add_module_args(p)
    p.add_argument("--level", type=int, required=True)
    p.set_defaults(fn=_cmd_skeleton)

    p = sub.add_parser("betti", help="multigraded Betti table")
    _add_ideal_args(p)
    _add_module_args(p)
    p.add_argument("--char", type=int, default=0)
    p.set_defaults(fn=_cmd_betti)

    p = sub.add_parser("sdepth", help="exact Stanley depth with witness")
    _add_ideal_args(p)
    _add_module_args(p)
    _add_search_args(p)
    p.set_defaults(fn=_cmd_sdepth)

    p = sub.add_parser("shreg", help="exact shreg with witness")
    _add_ideal_args(p)
    _add_module_args(p)
    _add_search_args(p)
    p.add_argument("--mode", choices=("direct", "dual"), default="direct")
    p.set_defaults(fn=_cmd_shreg)

    p = sub.add_parser("decomp", help="witness partition and refined Stanley spaces")
    _add_ideal_args(p)
    _add_module_args(p)
    _add_search_args(p)
    p.set_defaults(fn=_cmd_decomp)

    p = sub.add_parser("irr-decomp", help="irreducible decomposition")
    _add_ideal_args(p)
    p.set_defaults(fn=_cmd_irr_decomp)

    p = sub.add_parser("check", help="run a theorem-verification suite")
    p.add_argument("--suite", required=True, choices=_SUITES)
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--max-exp", type=int, default=2)
    p.add_argument("--max-gens", type=int, default=4)
    p.add_argument("--count", type=int, default=None,
                   help="random instance count (exhaustive when omitted)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--verbose", action="store_true", help="include passing reports")
    p.set_defaults(fn=_cmd_check)

    p = sub.add_parser("survey", help="depth/sdepth survey over a family")
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--max-exp", type=int, default=2)
    p.add_argument("--max-gens", type=int, default=3)
    p.add_argument("--count", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--input", default=None, help="JSON family description file")
    p.set_defaults(fn=_cmd_survey)

    return ap


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as err:
        return 2 if err.code else 0
    start = time.monotonic()
    try:
        payload = args.fn(args)
    except ParseError as err:
        _emit({"error": "syntax", "message": str(err), "position": err.position}, args)
        return 2
    except (DomainError, DimensionError) as err:
        _emit({"error": "domain", "message": str(err)}, args)
        return 3
    except ResourceError as err:
        _emit({"error": "resource", "message": str(err), "bounds": err.bounds}, args)
        return 4
    exit_code = payload.pop("_exit", 0)
    payload["elapsed_s"] = round(time.monotonic() - start, 3)
    _emit(payload, args)
    return exit_code


def _emit(payload: dict, args) -> None:
    if getattr(args, "format", "json") == "jsonl":
        records = payload.pop("reports", None) or payload.pop("rows", None)
        if records is not None:
            for rec in records:
                print(json.dumps(rec, sort_keys=True))
            print(json.dumps({"summary": payload}, sort_keys=True))
            return
    print(json.dumps(payload, indent=2, sort_keys=True))


if __name__ == "__main__":
    sys.exit(main())
