"""Command-line front end.

Exit codes: 0 every verdict holds, 1 a counterexample was found, 2 usage or
validation error, 3 an exhaustive sweep was refused for exceeding the budget.
"""

import argparse
import csv
import io
import json
import logging
import sys

from . import bindet, verify
from .errors import BudgetExceeded, SigmaLabError
from .polyring import SparsePoly, anr_verdict, check_modulus, liu_sun_verdict
from .subsums import (Multiset, ResidueSet, common_multiplicities, elements_of, sigma_bits,
                      sigma_star_bits)

log = logging.getLogger("sigma_lab")

EXIT_OK, EXIT_COUNTEREXAMPLE, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


class UsageError(SigmaLabError):
    pass


# ---------------------------------------------------------------- parsing helpers

def parse_set(text):
    try:
        return [int(x) for x in text.replace(" ", "").split(",") if x]
    except ValueError:
        raise UsageError(f"bad residue list {text!r}; expected e.g. 1,2,3")


def parse_multiset(text):
    """``1^3,2^1`` -> {1: 3, 2: 1}; a bare ``x`` means multiplicity 1."""
    out = {}
    for term in text.replace(" ", "").split(","):
        if not term:
            continue
        x, _, m = term.partition("^")
        try:
            out[int(x)] = out.get(int(x), 0) + (int(m) if m else 1)
        except ValueError:
            raise UsageError(f"bad multiset term {term!r}; expected x^m")
    return out


def parse_sets(text):
    return [parse_set(part) for part in text.split(";")]


def _load_instances(path):
    with open(path) as fh:
        data = json.load(fh)
    return data["instances"] if isinstance(data, dict) and "instances" in data else (
        data if isinstance(data, list) else [data])


# ---------------------------------------------------------------- reports

def make_report(command, params, verdicts, **extra):
    rep = verify.SweepReport(command, params, list(verdicts)).to_dict()
    rep.update(extra)
    return rep


def exit_code(report):
    if report.get("refused"):
        return EXIT_BUDGET
    return EXIT_OK if report["pass"] else EXIT_COUNTEREXAMPLE


def _cell(v):
    if isinstance(v, (dict, list)):
        return json.dumps(v, separators=(",", ":"))
    return v


def verdict_rows(report):
    rows = []
    for v in report["verdicts"]:
        rows.append({"claim": v["claim"], "params": v["params"], "holds": v["holds"],
                     "applicable": v["applicable"], "instances_checked": v["instances_checked"],
                     "elapsed": round(v["elapsed"], 6), "counterexample": v["counterexample"]})
    return rows


def render(report, fmt):
    if fmt == "json":
        return json.dumps(report, indent=2, default=str)
    rows = report.get("rows") or verdict_rows(report)
    if fmt == "csv":
        buf = io.StringIO()
        fields = list(rows[0]) if rows else ["claim"]
        w = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
        w.writeheader()
        for r in rows:
            w.writerow({k: _cell(r.get(k)) for k in fields})
        return buf.getvalue().rstrip("\n")
    lines = []
    for k, v in report.items():
        if k in ("command", "params", "verdicts", "pass", "rows", "figures", "refused"):
            continue
        lines.append(f"{k}: {_cell(v)}")
    if report.get("rows"):
        fields = list(report["rows"][0])
        lines.append("  ".join(fields))
        for r in report["rows"]:
            lines.append("  ".join(str(_cell(r[f])) for f in fields))
    for v in report["verdicts"]:
        status = "n/a " if not v["applicable"] else ("PASS" if v["holds"] else "FAIL")
        lines.append(f"{status} {v['claim']} {_cell(v['params'])} "
                     f"instances={v['instances_checked']} elapsed={v['elapsed']:.3f}s")
        if v["counterexample"]:
            lines.append(f"     counterexample: {_cell(v['counterexample'])}")
    for path in report.get("figures", []):
        lines.append(f"figure: {path}")
    if report.get("refused"):
        lines.append(f"REFUSED: {report['refused']['message']}")
    else:
        lines.append("pass" if report["pass"] else "FAIL")
    return "\n".join(lines)


# ---------------------------------------------------------------- commands

def cmd_bindet(args):
    d, i = args.d, args.i
    det = bindet.d_value(d, i)
    closed = bindet.d_closed_form(d, i)
    norm = bindet.d_normalized(d, i)
    extra = {"d": d, "i": i, "det": str(det), "closed_form": str(closed),
             "normalized": str(norm), "match": det == closed}
    if d >= 2 and i >= 1:
        rhs = bindet.d_recurrence_rhs(d, i)
        extra["recurrence_rhs"] = str(rhs)
        extra["recurrence_match"] = rhs == det
    v = verify.Verdict("bindet", {"d": d, "i": i}, det == closed, 1,
                       None if det == closed else {"det": str(det), "closed_form": str(closed)})
    return make_report("bindet", {"d": d, "i": i}, [v], **extra)


def cmd_expand_check(args):
    v = verify.verify_devlp(args.d, args.t, args.p)
    return make_report("expand-check", {"d": args.d, "t": args.t, "p": args.p}, [v],
                       terms=v.details["terms"])


def _anr_from_json(inst):
    p = check_modulus(inst["p"], odd=True)
    sets = inst["sets"]
    R = inst.get("R", "1")
    if isinstance(R, dict):
        R = SparsePoly(p, len(sets), [(tuple(e), c) for e, c in R["terms"]])
    return p, sets, verify.anr_instance(p, sets, R)


def cmd_anr(args):
    if args.file:
        insts = [_anr_from_json(x) for x in _load_instances(args.file)]
    else:
        if args.p is None or args.sets is None:
            raise UsageError("anr needs --file or both --p and --sets")
        p = check_modulus(args.p, odd=True)
        sets = parse_sets(args.sets)
        insts = [(p, sets, verify.anr_instance(p, sets, args.R))]
    verdicts, rows = [], []
    for p, sets, R in insts:
        r = anr_verdict(sets, R, p)
        row = {"p": p, "sets": sets, "m": r.m, "coeff": r.coeff, "guaranteed_min": r.guaranteed_min,
               "witness_card": r.witness_card, "holds": r.holds}
        rows.append(row)
        verdicts.append(verify.Verdict("anr", {"p": p, "sets": sets}, r.holds, 1,
                                       None if r.holds else row))
    return make_report("anr", {"instances": len(insts)}, verdicts, rows=rows)


def cmd_liusun(args):
    if args.file:
        insts = [(x["p"], x["sets"], x["polys"]) for x in _load_instances(args.file)]
    else:
        if args.p is None or args.sets is None or args.polys is None:
            raise UsageError("liusun needs --file or --p, --sets and --polys")
        insts = [(args.p, parse_sets(args.sets), parse_sets(args.polys))]
    verdicts, rows = [], []
    for p, sets, polys in insts:
        p = check_modulus(p)
        r = liu_sun_verdict(sets, polys, p)
        row = {"p": p, "sets": sets, "applicable": r.applicable, "K": r.K, "card": r.card,
               "holds": r.holds, "reason": r.reason}
        rows.append(row)
        verdicts.append(verify.Verdict("liu_sun", {"p": p, "sets": sets}, r.holds, 1,
                                       None if r.holds else row, applicable=r.applicable,
                                       details={"reason": r.reason} if r.reason else {}))
    return make_report("liusun", {"instances": len(insts)}, verdicts, rows=rows)


def cmd_subsums(args):
    p = check_modulus(args.p, odd=True)
    if (args.set is None) == (args.mset is None):
        raise UsageError("give exactly one of --set or --mset")
    if args.set is not None:
        A = ResidueSet(p, parse_set(args.set))
        sig, star = sigma_bits(A, p), sigma_star_bits(A, p)
        extra = {"p": p, "set": list(A), "sigma": elements_of(sig), "sigma_star": elements_of(star),
                 "card_sigma": sig.bit_count(), "card_sigma_star": star.bit_count(),
                 "zero_sum_free": not star & 1, "asymmetric": A.is_asymmetric()}
        if A.is_asymmetric():
            b1, b2, _ = verify.main_bounds(p, len(A))
            extra.update(bound_sigma=b1, bound_sigma_star=b2)
            cex = verify.main_theorem_violation(p, list(A))
            v = verify.Verdict("main_theorem", {"p": p, "set": list(A)}, cex is None, 1, cex)
        else:
            v = verify.Verdict("main_theorem", {"p": p, "set": list(A)}, True, 1, applicable=False,
                               details={"reason": "A meets -A"})
    else:
        S = Multiset(p, parse_multiset(args.mset))
        sig, star = sigma_bits(S, p), sigma_star_bits(S, p)
        l = common_multiplicities(S)
        s = verify.sequence_bounds(l)
        extra = {"p": p, "multiset": dict(S.mult), "sigma": elements_of(sig),
                 "sigma_star": elements_of(star), "card_sigma": sig.bit_count(),
                 "card_sigma_star": star.bit_count(), "zero_sum_free": not star & 1,
                 "common_multiplicities": l, "bound_sigma": min(p, 1 + s),
                 "bound_sigma_star": min(p, s)}
        cex = verify.sequence_violation(p, list(S))
        v = verify.Verdict("sequence_theorem", {"p": p, "multiset": list(S)}, cex is None, 1, cex)
    return make_report("subsums", {"p": p}, [v], **extra)


def cmd_selfridge(args):
    primes = verify.primes_upto(args.max_p, max(2, args.min_p))
    verdicts = [verify.verify_selfridge(p, args.budget, args.symmetry, args.jobs) for p in primes]
    rows = [{"p": v.params["p"], "k_search": v.details["k_search"],
             "k_formula": v.details["k_formula"], "match": v.holds} for v in verdicts]
    figures = []
    if args.plot_dir and rows:
        from .plotting import plot_selfridge
        figures.append(plot_selfridge(rows, args.plot_dir))
    return make_report("selfridge", {"max_p": args.max_p}, verdicts, rows=rows, figures=figures)


def cmd_acr(args):
    primes = verify.primes_upto(args.max_p, max(7, args.min_p))
    for p in primes:
        verify._check_budget(3 ** ((p - 1) // 2), args.budget)
    verdicts = [verify.verify_acr(p, args.budget, args.symmetry, args.jobs) for p in primes]
    rows = [{"p": v.params["p"], "acr_search": v.details["acr_search"],
             "acr_formula": v.details["acr_formula"], "match": v.holds} for v in verdicts]
    figures = []
    if args.plot_dir and rows:
        from .plotting import plot_acr
        figures.append(plot_acr(rows, args.plot_dir))
    return make_report("acr", {"max_p": args.max_p}, verdicts, rows=rows, figures=figures)


def cmd_verify_all(args):
    odd = verify.primes_upto(args.max_p, 3)
    budget = verify.default_budget() if args.budget is None else args.budget
    # refuse up front rather than after hours of partial work
    for p in odd:
        verify._check_budget(3 ** ((p - 1) // 2), budget)
    seq_primes = [p for p in odd if 5 <= p <= args.seq_max_p]
    struct_primes = [p for p in odd if 5 <= p <= args.struct_max_p]
    for p in seq_primes:
        verify._check_budget(verify.count_multisets(p, args.max_len), budget)
    for p in struct_primes:
        verify._check_budget(verify.count_multisets(p, p - 1), budget)

    V = []
    log.info("determinant identities up to d=%d", args.max_d)
    V.append(verify.verify_det_identities(args.max_d, args.seed, args.n_random))
    for p in (5, 7, 11, 13):
        for d in range(1, args.devlp_max_d + 1):
            for t in range(0, min(args.devlp_max_t, p - 1) + 1):
                V.append(verify.verify_devlp(d, t, p))
    main_rows = {}
    for p in odd:
        log.info("main theorem sweep p=%d", p)
        v = verify.verify_main_theorem(p, budget, args.symmetry, args.jobs)
        main_rows[p] = v.details["by_size"]
        V.append(v)
    for p in seq_primes:
        V.append(verify.verify_sequence_theorem(p, args.max_len, args.symmetry, budget))
    for p in struct_primes:
        V.append(verify.verify_structural_multiplicity(p, p - 1, args.k_max, budget))
    for p in [2] + odd:
        V.append(verify.verify_selfridge(p, budget, False, args.jobs))
    for p in odd:
        V.append(verify.verify_acr(p, budget, args.symmetry, args.jobs))
    for p in [q for q in odd if q <= 13]:
        V.append(verify.verify_cauchy_davenport(p))
        V.append(verify.verify_restricted_sumsets(p))
    V.append(verify.verify_genesum(args.trials, args.seed))
    V.append(verify.verify_liu_sun(args.trials, args.seed))

    figures = []
    if args.plot_dir:
        from .plotting import plot_acr, plot_main_theorem, plot_selfridge
        sr = [{"p": v.params["p"], **{k: v.details[k] for k in ("k_search", "k_formula")}}
              for v in V if v.claim == "selfridge"]
        ar = [{"p": v.params["p"], **{k: v.details[k] for k in ("acr_search", "acr_formula")}}
              for v in V if v.claim == "acr" and v.applicable]
        figures.append(plot_selfridge(sr, args.plot_dir))
        if ar:
            figures.append(plot_acr(ar, args.plot_dir))
        if odd:
            figures.append(plot_main_theorem(odd[-1], main_rows[odd[-1]], args.plot_dir))
    params = {"max_p": args.max_p, "budget": budget, "jobs": args.jobs, "seed": args.seed,
              "symmetry": args.symmetry, "max_d": args.max_d, "max_len": args.max_len,
              "k_max": args.k_max, "trials": args.trials}
    return make_report("verify-all", params, V, figures=figures)


# ---------------------------------------------------------------- argument parser

def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv", "text"), default="text")
    common.add_argument("--budget", type=int, default=None,
                        help="max instances per exhaustive sweep (default: $SIGMA_LAB_BUDGET "
                             f"or {verify.DEFAULT_BUDGET})")
    common.add_argument("--jobs", type=int, default=1)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--symmetry", action="store_true",
                        help="enumerate one representative per dilation orbit")
    common.add_argument("--plot-dir", default=None, help="write PNG figures into this directory")
    common.add_argument("-v", "--verbose", action="store_true")

    ap = argparse.ArgumentParser(prog="sigma-lab", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    s = sub.add_parser("bindet", parents=[common], help="evaluate D(d, i) three ways")
    s.add_argument("--d", type=int, required=True)
    s.add_argument("--i", type=int, required=True)
    s.set_defaults(func=cmd_bindet)

    s = sub.add_parser("expand-check", parents=[common], help="coefficientwise expansion check")
    s.add_argument("--d", type=int, required=True)
    s.add_argument("--t", type=int, required=True)
    s.add_argument("--p", type=int, required=True)
    s.set_defaults(func=cmd_expand_check)

    s = sub.add_parser("anr", parents=[common], help="polynomial-method bound on instances")
    s.add_argument("--file", help="JSON instance file")
    s.add_argument("--p", type=int)
    s.add_argument("--sets", help="sets separated by ';', e.g. '1,2;3,4'")
    s.add_argument("--R", default="1", choices=("1", "vandermonde", "vandermonde_squares"))
    s.set_defaults(func=cmd_anr)

    s = sub.add_parser("liusun", parents=[common], help="distinct-values restricted sums")
    s.add_argument("--file", help="JSON instance file")
    s.add_argument("--p", type=int)
    s.add_argument("--sets", help="sets separated by ';'")
    s.add_argument("--polys", help="monic coefficient lists low-to-high separated by ';'")
    s.set_defaults(func=cmd_liusun)

    s = sub.add_parser("subsums", parents=[common], help="subsum sets of a set or multiset")
    s.add_argument("--p", type=int, required=True)
    s.add_argument("--set")
    s.add_argument("--mset", help="multiset as x^m terms, e.g. 1^3,2^1")
    s.set_defaults(func=cmd_subsums)

    s = sub.add_parser("selfridge", parents=[common], help="max zero-sum-free set sizes")
    s.add_argument("--max-p", type=int, required=True)
    s.add_argument("--min-p", type=int, default=2)
    s.set_defaults(func=cmd_selfridge)

    s = sub.add_parser("acr", parents=[common], help="asymmetric critical numbers")
    s.add_argument("--max-p", type=int, required=True)
    s.add_argument("--min-p", type=int, default=7)
    s.set_defaults(func=cmd_acr)

    s = sub.add_parser("verify-all", parents=[common], help="run every verification suite")
    s.add_argument("--max-p", type=int, default=29)
    s.add_argument("--max-d", type=int, default=10)
    s.add_argument("--n-random", type=int, default=500)
    s.add_argument("--devlp-max-d", type=int, default=4)
    s.add_argument("--devlp-max-t", type=int, default=6)
    s.add_argument("--seq-max-p", type=int, default=13)
    s.add_argument("--max-len", type=int, default=7)
    s.add_argument("--struct-max-p", type=int, default=11)
    s.add_argument("--k-max", type=int, default=3)
    s.add_argument("--trials", type=int, default=1000)
    s.set_defaults(func=cmd_verify_all)
    return ap


def run(argv=None, stdout=None):
    stdout = stdout or sys.stdout
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(message)s", stream=sys.stderr)
    if args.jobs < 1:
        print("error: --jobs must be >= 1", file=sys.stderr)
        return EXIT_USAGE
    try:
        report = args.func(args)
    except BudgetExceeded as exc:
        report = make_report(args.command, {}, [], refused={
            "required": exc.required, "budget": exc.budget, "message": str(exc)})
        report["pass"] = False
    except (SigmaLabError, IndexError, ValueError, OSError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print(render(report, args.format), file=stdout)
    return exit_code(report)


def main():
    sys.exit(run())
