"""
Command-line driver:  upqgl verify <check> [flags]  and  upqgl list.

Each check expands to independent tasks; tasks may run in a process pool
(--parallel k) and reports are emitted sorted by (check, params).
Exit status: 0 all pass, 1 any fail or error, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
import traceback
from concurrent.futures import ProcessPoolExecutor

from . import hopf, ncalg, relations, rll, rmatrix
from .report import SCHEMA, Report

SUBCHECKS = ("k-relation", "anticommutator", "d-coefficient", "phi-psi", "axioms", "coassoc")
CHECKS = ("ybe", "unitarity", "symmetry", "golden", "gauss", "rll-extract", "derive-x1x2",
          "serre", "hopf", "confluence", "all")

SERRE_GENERAL_SPLITS = ((2, 2), (3, 1), (1, 3))


# task bodies (top level so worker processes can import them) ---------------------

def _t_ybe(m, n):
    return [rmatrix.check_graded_YBE(m, n)]


def _t_unitarity(m, n):
    return [rmatrix.check_unitarity(m, n)]


def _t_symmetry(m, n):
    return [rmatrix.check_symmetry(m, n)]


def _t_golden(name):
    return [rmatrix.verify_golden(name)]


def _t_gauss(N, level):
    return [rll.verify_gauss_inverse(N, level)]


def _t_extract(indices, level):
    return [rll.check_pre_rel1(tuple(indices), level)]


def _t_derive(m, n):
    return [rll.verify_derive_x1x2(m, n)]


def _t_serre_n3(case, rel):
    return [relations.verify_serre(case=case, rel=rel),
            _as_control(relations.verify_serre(case=case, rel=rel, mutate=True))]


def _t_serre_general(m, n, rel, i):
    return [relations.verify_serre(rel=rel, m=m, n=n, i=i),
            _as_control(relations.verify_serre(rel=rel, m=m, n=n, i=i, mutate=True))]


def _t_hopf(sub, m, n, N=None):
    if sub == "k-relation":
        out = []
        for rid in hopf.k_relation_ids(m, n):
            out.append(hopf.verify_coproduct_on_k_relation(rid))
        kiki = [r for r in hopf.k_relation_ids(m, n) if r.tag == "kiki"]
        if kiki:
            out.append(_as_control(hopf.verify_coproduct_on_k_relation(kiki[0], mutate="g2-squared")))
        out.append(hopf.verify_counit_on_k_relations(m, n))
        return out
    if sub == "anticommutator":
        out = [hopf.verify_coproduct_anticommutator(m, n)] if m and n else []
        if m >= 2:
            out.append(hopf.verify_coproduct_anticommutator(m, n, i=1))
        return out
    if sub == "d-coefficient":
        return [hopf.verify_serre_coproduct_coefficient(),
                _as_control(hopf.verify_serre_coproduct_coefficient(flip_last=True))]
    if sub == "phi-psi":
        return [hopf.verify_phi_psi_commutation(),
                _as_control(hopf.verify_phi_psi_commutation(drop=0))]
    if sub == "axioms":
        return [hopf.verify_counit_antipode_axioms(m, n)]
    if sub == "coassoc":
        splits = sorted({N, N // 2})
        out = [hopf.verify_coassociativity_L(N, lv, m=mm) for mm in splits for lv in "+-"]
        if N >= 2:
            out.append(_as_control(hopf.verify_coassociativity_L(N, "+", mutate="own-marker")))
        return out
    raise ValueError(f"unknown hopf sub-check {sub!r}")


def _t_confluence(m, n, maxlen):
    return relations.verify_confluence(m, n, maxlen)


TASKS = {f.__name__: f for f in (_t_ybe, _t_unitarity, _t_symmetry, _t_golden, _t_gauss, _t_extract,
                                  _t_derive, _t_serre_n3, _t_serre_general, _t_hopf, _t_confluence)}


def _as_control(r):
    """A mutated input must fail; the control passes iff it does."""
    ok = r.status == "fail"
    return Report(r.check + "-control", dict(r.params, mutated=True), "pass" if ok else "fail",
                  "" if ok else "mutated input was not rejected", r.elapsed_ms,
                  [f"mutated run status: {r.status}"] + list(r.notes))


def run_task(task):
    name, kwargs, budget = task
    saved = ncalg.DEFAULT_BUDGET
    if budget is not None:
        ncalg.set_default_budget(budget)
    t0 = time.perf_counter()
    try:
        return TASKS[name](**kwargs)
    except Exception as exc:  # reported, never swallowed
        return [Report(name[3:].replace("_", "-"), dict(kwargs), "error",
                       f"{type(exc).__name__}: {exc}", int((time.perf_counter() - t0) * 1000),
                       traceback.format_exc().splitlines()[-3:])]
    finally:
        ncalg.set_default_budget(saved)


# task planning --------------------------------------------------------------------

def _splits(args, lo=1, hi=None):
    hi = args.max_dim if hi is None else min(hi, args.max_dim)
    if args.m is not None or args.n is not None:
        if args.m is None or args.n is None:
            raise UsageError("--m and --n must be given together")
        return [(args.m, args.n)]
    return [(m, N - m) for N in range(lo, hi + 1) for m in range(N, -1, -1)]


class UsageError(Exception):
    pass


def plan(check, args):
    t = []
    if check in ("ybe", "unitarity", "symmetry"):
        for m, n in _splits(args):
            t.append((f"_t_{check}", {"m": m, "n": n}))
    elif check == "golden":
        t += [("_t_golden", {"name": k}) for k in rmatrix.GOLDEN]
    elif check == "gauss":
        for N in range(1, min(args.max_dim, 4) + 1):
            for lv in "+-":
                t.append(("_t_gauss", {"N": N, "level": lv}))
    elif check == "rll-extract":
        idx = [int(x) for x in args.indices.split(",")] if args.indices else list(rll.PRINTED_TUPLE)
        if len(idx) != 4:
            raise UsageError("--indices takes four comma-separated integers")
        for lv in "+-":
            t.append(("_t_extract", {"indices": idx, "level": lv}))
    elif check == "derive-x1x2":
        ms = [args.m] if args.m is not None else [3, 2, 1, 0]
        t += [("_t_derive", {"m": m, "n": 3 - m}) for m in ms]
    elif check == "serre":
        if args.case is not None:
            rels = [args.rel] if args.rel is not None else [1, 2, 3, 4]
            t += [("_t_serre_n3", {"case": args.case, "rel": r}) for r in rels]
        elif args.m is not None or args.n is not None:
            m, n = _splits(args)[0]
            for k, i in relations.all_serre_instances(m, n):
                if args.rel is None or args.rel == k:
                    t.append(("_t_serre_general", {"m": m, "n": n, "rel": k, "i": i}))
        else:
            for c in ("m3", "m2", "m1", "m0"):
                t += [("_t_serre_n3", {"case": c, "rel": r}) for r in (1, 2, 3, 4)]
            for m, n in SERRE_GENERAL_SPLITS:
                for k, i in relations.all_serre_instances(m, n):
                    t.append(("_t_serre_general", {"m": m, "n": n, "rel": k, "i": i}))
    elif check == "hopf":
        subs = [args.sub] if args.sub else list(SUBCHECKS)
        m, n = (args.m, args.n) if args.m is not None else (2, 1)
        for s in subs:
            if s == "coassoc":
                t += [("_t_hopf", {"sub": s, "m": m, "n": n, "N": N}) for N in range(1, min(args.max_dim, 4) + 1)]
            elif s == "k-relation" and args.m is None:
                for mm, nn in _splits(args, 2, 3):
                    t.append(("_t_hopf", {"sub": s, "m": mm, "n": nn}))
            else:
                t.append(("_t_hopf", {"sub": s, "m": m, "n": n}))
    elif check == "confluence":
        for m, n in _splits(args, 2):
            t.append(("_t_confluence", {"m": m, "n": n, "maxlen": 3}))
    elif check == "all":
        for c in CHECKS[:-1]:
            t += plan(c, args)
    else:
        raise UsageError(f"unknown check {check!r}")
    return t


def execute(tasks, parallel=1, budget=None):
    tasks = [(name, kw, budget) for name, kw in tasks]
    if parallel > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=parallel) as pool:
            chunks = list(pool.map(run_task, tasks))
    else:
        chunks = [run_task(t) for t in tasks]
    reports = [r for c in chunks for r in c]
    return sorted(reports, key=Report.sort_key)


def summarize(reports):
    counts = {}
    for r in reports:
        counts[r.status] = counts.get(r.status, 0) + 1
    return {"total": len(reports), **{k: counts.get(k, 0) for k in ("pass", "fail", "skipped", "error")}}


# argument parsing -------------------------------------------------------------------

def _parser():
    ap = argparse.ArgumentParser(prog="upqgl", description="Exact verification checks.")
    sub = ap.add_subparsers(dest="command", required=True)
    v = sub.add_parser("verify", help="run a check")
    v.add_argument("check", choices=CHECKS)
    v.add_argument("sub", nargs="?", choices=SUBCHECKS, help="hopf sub-check")
    v.add_argument("--m", type=int)
    v.add_argument("--n", type=int)
    v.add_argument("--case", choices=("m3", "m2", "m1", "m0"), help="rank-three Serre display")
    v.add_argument("--rel", type=int)
    v.add_argument("--max-dim", type=int, default=4)
    v.add_argument("--json", metavar="PATH", help="also write the full report document here")
    v.add_argument("--budget", type=int, help="rewrite step budget")
    v.add_argument("--parallel", type=int, default=1)
    v.add_argument("--indices", help="rll-extract index tuple, e.g. 3,2,2,1")
    sub.add_parser("list", help="list checks and sub-checks")
    return ap


def main(argv=None):
    ap = _parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    if args.command == "list":
        for c in CHECKS:
            print(c)
        for s in SUBCHECKS:
            print(f"hopf {s}")
        return 0
    if args.sub and args.check != "hopf":
        ap.print_usage(sys.stderr)
        print("upqgl: a sub-check is only valid for 'hopf'", file=sys.stderr)
        return 2
    if args.m is not None and args.m < 0 or args.n is not None and args.n < 0 or args.max_dim < 1:
        ap.print_usage(sys.stderr)
        print("upqgl: dimensions must be non-negative", file=sys.stderr)
        return 2
    if args.parallel < 1:
        print("upqgl: --parallel must be at least 1", file=sys.stderr)
        return 2
    if args.budget is not None and args.budget < 1:
        print("upqgl: --budget must be positive", file=sys.stderr)
        return 2
    try:
        tasks = plan(args.check, args)
    except (UsageError, relations.NotApplicable) as exc:
        ap.print_usage(sys.stderr)
        print(f"upqgl: {exc}", file=sys.stderr)
        return 2
    t0 = time.perf_counter()
    reports = execute(tasks, args.parallel, args.budget)
    for r in reports:
        print(r.to_json())
    summary = summarize(reports)
    summary["elapsed_ms"] = int((time.perf_counter() - t0) * 1000)
    if args.json:
        doc = {"schema": SCHEMA, "command": args.check, "summary": summary,
               "reports": [r.to_dict() for r in reports]}
        with open(args.json, "w", encoding="utf-8") as fh:
            json.dump(doc, fh, indent=1, sort_keys=True)
    print(json.dumps({"schema": SCHEMA, "summary": summary}, sort_keys=True), file=sys.stderr)
    return 0 if summary["pass"] == summary["total"] else 1


if __name__ == "__main__":
    sys.exit(main())
