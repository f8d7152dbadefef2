"""Command line entry point: ``ybtruss VERB [FILE] [flags]``.

Exit status: 0 success or a true verdict, 1 a verified false verdict,
2 bad input or unmet precondition, 3 resource limit.
"""

from __future__ import annotations

import argparse
import sys

from . import census, csemi, io, matched, monoid, semitruss, solution
from .errors import InputError, PreconditionError, ResourceError
from .matched import MatchedSystemSol, MatchedSystemST
from .semitruss import SemiTruss
from .solution import Solution


class Verdict(Exception):
    """Carries a report together with a false verdict (exit 1)."""

    def __init__(self, report):
        self.report = report


def _want(obj, *types, verb: str):
    if not isinstance(obj, types):
        names = " or ".join(t.__name__ for t in types)
        raise InputError(f"{verb} expects a {names} file")
    return obj


def _word(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(c) for c in text.split(","))
    except ValueError:
        raise InputError(f"bad word {text!r}: use comma separated letters") from None


def cmd_verify_solution(args):
    S = _want(io.load(args.file), Solution, verb="verify-solution")
    rep = solution.check_ybe(S)
    out = {"valid": rep.valid, "violations": [list(v) for v in rep.violations],
           "flags": solution.classify(S).as_dict()}
    if not rep.valid:
        print("warning: table fails the braid relation; flags are table predicates only", file=sys.stderr)
        raise Verdict(out)
    return out


def cmd_verify_semitruss(args):
    T = _want(io.load(args.file), SemiTruss, verb="verify-semitruss")
    rep = semitruss.verify_semitruss(T)
    if not rep.valid:
        raise Verdict(rep.to_json())
    return rep.to_json()


def cmd_derive(args):
    obj = _want(io.load(args.file), Solution, SemiTruss, verb="derive")
    if isinstance(obj, SemiTruss):
        return semitruss.associated_derived(obj).to_json()
    return solution.derived_solution(obj).to_json()


def cmd_invert(args):
    obj = _want(io.load(args.file), Solution, SemiTruss, verb="invert")
    if isinstance(obj, SemiTruss):
        return semitruss.opposite(obj).to_json()
    return solution.inverse_solution(obj).to_json()


def cmd_diagonal(args):
    S = _want(io.load(args.file), Solution, verb="diagonal")
    d = solution.diagonal(S)
    return {"q": list(d.q), "bijective": d.bijective}


def cmd_retract(args):
    obj = _want(io.load(args.file), Solution, SemiTruss, verb="retract")
    if isinstance(obj, SemiTruss):
        G, f, audit = semitruss.retract_semitruss(obj)
        return {"retract": G.to_json(), "proj": list(f), "audit": audit.to_json()}
    res = solution.retract_solution(obj)
    out = {"retract": res.quotient.to_json(), "proj": list(res.proj), "well_defined": res.well_defined}
    if res.well_defined:
        out["tower_sizes"] = [T.n for T in solution.retract_tower(obj)]
    return out


def cmd_grow(args):
    S = _want(io.load(args.file), Solution, verb="grow")
    gc = monoid.grow_classes(S, args.degree, args.flavor, args.budget)
    out = {"flavor": args.flavor, "dims": gc.dims}
    if args.estimate:
        out["growth_estimate"] = monoid.growth_degree_estimate(S, args.degree, args.budget)
    return out


def cmd_dims(args):
    S = _want(io.load(args.file), Solution, verb="dims")
    rep = monoid.graded_dims(S, args.degree, args.budget)
    return {"dimsM": rep.dimsM, "dimsA": rep.dimsA, "pi_agrees": rep.pi_agrees}


def cmd_normal_form(args):
    S = _want(io.load(args.file), Solution, verb="normal-form")
    w = _word(args.word)
    if any(not 0 <= c < S.n for c in w):
        raise InputError(f"word letters must lie in [0, {S.n})")
    gc = monoid.grow_classes(S, len(w), "additive", args.budget)
    return {"word": list(w), "coefficients": list(monoid.greedy_normal_form(S, w, gc))}


def cmd_bv(args):
    S = _want(io.load(args.file), Solution, verb="bv")
    rep = monoid.bv_decomposition(S, args.degree, args.budget)
    out = {"v": rep.v, "degree": rep.degrees, "classes": rep.classes, "greedy_hits": rep.greedy_hits,
           "search_hits": rep.search_hits, "uncovered": [list(w) for w in rep.uncovered], "ok": rep.ok}
    if not rep.ok:
        raise Verdict(out)
    return out


def cmd_matched_validate(args):
    sysm = _want(io.load(args.file), MatchedSystemST, MatchedSystemSol, verb="matched-validate")
    if isinstance(sysm, MatchedSystemST):
        rep = matched.validate_system_semitruss(sysm).to_json()
    else:
        rep = matched.validate_system_solutions(sysm).to_json()
        if args.probe:
            found = matched.random_systems(sysm.rS, sysm.rT, args.probe, args.seed)
            rep["probe"] = {"tries": args.probe, "seed": args.seed, "valid": len(found)}
    if not rep["valid"]:
        raise Verdict(rep)
    return rep


def cmd_matched_build(args):
    sysm = _want(io.load(args.file), MatchedSystemST, MatchedSystemSol, verb="matched-build")
    if isinstance(sysm, MatchedSystemST):
        P = matched.matched_product_semitruss(sysm)
        return {"product": P.to_json(), "mismatches": [list(p) for p in matched.compatibility_mismatches(sysm)]}
    return {"product": matched.matched_product_solutions(sysm).to_json()}


def cmd_c_analyze(args):
    obj = _want(io.load(args.file), Solution, SemiTruss, verb="c-analyze")
    C = csemi.generate_c(obj)
    v = csemi.idempotent_exponent(C)
    band, sub = csemi.band_check(C, v)
    return {"size": len(C.elements), "elements": [list(f) for f in C.elements],
            "idempotents": [list(f) for f in C.idempotents], "v": v, "band": band,
            "band_size": len(sub), "left_ideals_two_sided": csemi.left_ideals_two_sided(C)}


def cmd_decompose(args):
    T = _want(io.load(args.file), SemiTruss, verb="decompose")
    return csemi.left_simple_decomposition(T)


def cmd_enumerate(args):
    spec = census.SearchSpec(args.n, require_lnd=not args.any, require_rnd=args.rnd,
                             require_bijective=args.bijective, require_involutive=args.involutive,
                             dedup=args.dedup, budget=args.budget, jobs=args.jobs)
    res = census.enumerate_solutions(spec)
    out = dict(res.summary)
    out["candidates"] = res.candidates
    if args.out:
        with open(args.out, "w") as fh:
            for S in res.solutions:
                fh.write(io.dumps(S) + "\n")
    else:
        out["solutions"] = [S.to_json() for S in res.solutions]
    return out


def cmd_audit(args):
    if args.which == "theorem-b":
        return census.audit_theorem_b(args.n, args.jobs, args.budget)
    return census.audit_involutive_dim(args.n, args.jobs, args.budget)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="ybtruss", description="Finite Yang-Baxter solutions and YB-semitrusses.")
    sub = p.add_subparsers(dest="verb", required=True)

    def verb(name, fn, file=True, **kw):
        sp = sub.add_parser(name, **kw)
        if file:
            sp.add_argument("file")
        sp.add_argument("--csv", action="store_true", help="emit CSV where the report is tabular")
        sp.set_defaults(fn=fn)
        return sp

    verb("verify-solution", cmd_verify_solution)
    verb("verify-semitruss", cmd_verify_semitruss)
    verb("derive", cmd_derive)
    verb("invert", cmd_invert)
    verb("diagonal", cmd_diagonal)
    verb("retract", cmd_retract)
    for name, fn in (("grow", cmd_grow), ("dims", cmd_dims), ("bv", cmd_bv), ("normal-form", cmd_normal_form)):
        sp = verb(name, fn)
        sp.add_argument("--degree", type=int, default=4)
        sp.add_argument("--budget", type=int, default=monoid.DEFAULT_BUDGET)
        if name == "grow":
            sp.add_argument("--flavor", choices=monoid.FLAVORS, default="multiplicative")
            sp.add_argument("--estimate", action="store_true")
        if name == "normal-form":
            sp.add_argument("--word", required=True, help="comma separated letters, e.g. 1,0")
    sp = verb("matched-validate", cmd_matched_validate)
    sp.add_argument("--probe", type=int, default=0, help="random systems to try on the same factors")
    sp.add_argument("--seed", type=int, default=0)
    verb("matched-build", cmd_matched_build)
    verb("c-analyze", cmd_c_analyze)
    verb("decompose", cmd_decompose)
    sp = verb("enumerate", cmd_enumerate, file=False)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--any", action="store_true", help="drop the left non-degenerate constraint")
    sp.add_argument("--rnd", action="store_true")
    sp.add_argument("--bijective", action="store_true")
    sp.add_argument("--involutive", action="store_true")
    sp.add_argument("--dedup", action="store_true")
    sp.add_argument("--budget", type=int, default=census.DEFAULT_BUDGET)
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--out", help="write solutions as JSON lines here")
    sp = verb("audit", cmd_audit, file=False)
    sp.add_argument("which", choices=("theorem-b", "involutive-dim"))
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--budget", type=int, default=census.DEFAULT_BUDGET)
    sp.add_argument("--jobs", type=int, default=1)
    return p


def _csv(report) -> str:
    if "dims" in report:
        lines = ["degree,dim"] + [f"{k},{d}" for k, d in enumerate(report["dims"])]
    elif "dimsM" in report:
        lines = ["degree,dimM,dimA"] + [f"{k},{a},{b}" for k, (a, b) in enumerate(zip(report["dimsM"], report["dimsA"]))]
    else:
        lines = ["key,value"] + [f"{k},{io.dumps(v) if isinstance(v, (list, dict)) else v}" for k, v in sorted(report.items())]
    return "\n".join(lines)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    code = 0
    try:
        report = args.fn(args)
    except Verdict as v:
        report, code = v.report, 1
    except (InputError, PreconditionError) as exc:
        print(io.dumps({"error": "input", "message": str(exc)}))
        return 2
    except ResourceError as exc:
        print(io.dumps({"error": "resource", "message": str(exc)}))
        return 3
    print(_csv(report) if args.csv else io.dumps(report))
    return code


if __name__ == "__main__":
    sys.exit(main())
