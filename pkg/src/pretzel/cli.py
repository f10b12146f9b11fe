"""Command-line front end: ``pretzel invariants`` and ``pretzel sweep``.

Exit codes: 0 success, 1 usage error, 2 verification mismatch, 3 resource budget.
"""

from __future__ import annotations

import argparse
import itertools
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict

from .alexander_jones import alexander_classical, family_report, jones_torus
from .classify_genus_basket import (
    SplitLinkError,
    basket_number,
    classify_classical,
    genus_classical_knot,
    genus_classical_link,
    genus_npretzel,
    oracle_min_genus,
)
from .conway_engine import ShapeError, closed_form_conway, computation_tree, computation_tree_conway
from .diagram_oracle import DEFAULT_JONES_BUDGET, OracleBudgetError, conway_skein, kauffman_jones
from .poly_core import HalfLaurent, equal_up_to_unit, parse, substitute_z
from .pretzel_model import PretzelSpec, parity_profile, parse_spec, realizations, reduce_minus_one, sign

EXIT_OK, EXIT_USAGE, EXIT_MISMATCH, EXIT_BUDGET = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(EXIT_USAGE)


# ---------------------------------------------------------------------------
# JSON helpers
# ---------------------------------------------------------------------------

def poly_json(p: HalfLaurent, source: str) -> dict:
    """Canonical text plus ``[2*exponent, coefficient]`` pairs."""
    return {"source": source, "var": p.var, "text": str(p), "terms": p.to_pairs()}


def poly_from_json(d: dict) -> HalfLaurent:
    """Rebuild a polynomial from :func:`poly_json` output; text and terms must agree."""
    from_text = parse(d["text"], d["var"])
    from_terms = HalfLaurent.from_pairs(d["terms"], d["var"])
    if from_text != from_terms:
        raise ValueError(f"inconsistent polynomial record {d['text']!r}")
    return from_text


def _threads() -> int:
    try:
        return max(1, int(os.environ.get("PRETZEL_THREADS", "1")))
    except ValueError:
        return 1


# ---------------------------------------------------------------------------
# invariants
# ---------------------------------------------------------------------------

def _classical_alexander(p: tuple):
    """alexander_classical for vectors of the shape K(-2l, q, +-r) up to rotation and mirror."""
    for base in (p, tuple(-x for x in p)):
        for k in range(3):
            a, b, c = base[k:] + base[:k]
            for q, r in ((b, c), (c, b)):
                if a < 0 and a % 2 == 0 and q > 0 and q % 2 and r % 2:
                    return alexander_classical(-a // 2, q, abs(r), sign(r))
    return None


def _genus_section(spec: PretzelSpec, prof, verify: bool):
    p = spec.p
    if spec.n == 3 and prof.component_count == 1:
        rep = genus_classical_knot(p)
        kind = "classical knot"
    elif prof.s >= 1 and all(abs(x) >= 2 for x in p):
        rep = genus_npretzel(spec, verify=verify)
        kind = "n-pretzel"
    elif spec.n == 3 and prof.s >= 2:
        k = next(i for i in range(3) if p[i] % 2 == 0 and p[(i + 1) % 3] % 2 == 0)
        a, b, r = p[k], p[(k + 1) % 3], p[(k + 2) % 3]
        if abs(a) < abs(b):
            a, b = b, a
        rep = genus_classical_link(a // 2, b // 2, r)
        kind = "classical link"
    else:
        g, eps = oracle_min_genus(spec)
        return {"kind": "oracle", "genus": g, "orientation": list(eps), "warnings": []}
    d = asdict(rep)
    d["kind"] = kind
    if d.get("orientation") is not None:
        d["orientation"] = list(d["orientation"])
    return d


def build_report(spec: PretzelSpec, orientation="all", verify: bool = False,
                 jones_budget: int | None = None, trace: bool = False) -> dict:
    """Compute every applicable invariant.  Raises OracleBudgetError when a
    verification needs an oracle run that exceeds its budget."""
    budget = DEFAULT_JONES_BUDGET if jones_budget is None else jones_budget
    prof = parity_profile(spec)
    ops = list(realizations(spec))
    if orientation == "all":
        chosen = list(enumerate(ops))
    else:
        idx = int(orientation)
        if not 0 <= idx < len(ops):
            raise UsageError(f"orientation index {idx} out of range 0..{len(ops) - 1}")
        chosen = [(idx, ops[idx])]
    report = {"spec": str(spec), "p": list(spec.p), "components": prof.component_count,
              "orientation_classes": len(ops), "notes": []}
    agreement = {}

    if spec.n == 3 and -1 in spec.p:
        report["notes"].append(f"isotopic to {reduce_minus_one(spec)} by the -1 move")

    if spec.n == 3 and prof.component_count == 1:
        report["classification"] = asdict(classify_classical(spec))
    else:
        report["classification"] = None

    conway = []
    all_zero = True
    for idx, op in chosen:
        tree = computation_tree_conway(op)
        all_zero &= tree.is_zero()
        entry = {"index": idx, "eps": list(op.eps), "flips": list(op.component_orientations),
                 "polynomials": [poly_json(tree, "computation-tree")]}
        try:
            closed = closed_form_conway(spec, op)
            entry["polynomials"].append(poly_json(closed, "closed-form"))
            entry["closed_form_agrees"] = closed == tree
            agreement.setdefault("conway", True)
            agreement["conway"] &= closed == tree
        except ShapeError as exc:
            entry["closed_form"] = f"not available: {exc}"
        if verify:
            oracle = conway_skein(op.diagram())
            entry["polynomials"].append(poly_json(oracle, "oracle"))
            entry["oracle_agrees"] = oracle == tree
            agreement.setdefault("conway", True)
            agreement["conway"] &= oracle == tree
        conway.append(entry)
    report["conway"] = conway
    if all_zero and orientation == "all":
        report["notes"].append("Conway polynomial vanishes in every orientation (as for split links); "
                               "no genus bound")

    first_idx, first = chosen[0]
    tree = computation_tree_conway(first)
    alex = {"orientation": first_idx, "polynomials": [poly_json(substitute_z(tree), "computation-tree")]}
    if spec.n == 3 and prof.component_count == 1:
        closed = _classical_alexander(spec.p)
        if closed is not None:
            alex["polynomials"].append(poly_json(closed, "closed-form"))
            agreement["alexander"] = equal_up_to_unit(closed, substitute_z(tree))
    report["alexander"] = alex

    jones = {"orientation": first_idx, "polynomials": []}
    d = first.diagram()
    truth = None
    if d.n_crossings <= budget:
        truth = kauffman_jones(d, budget)
        jones["polynomials"].append(poly_json(truth, "oracle"))
    elif verify:
        raise OracleBudgetError(f"Jones oracle needs {d.n_crossings} crossings, budget is "
                                f"{budget}; raise --jones-budget")
    else:
        jones["oracle"] = f"skipped: {d.n_crossings} crossings exceed budget {budget}"
    cls = report["classification"]
    if cls and cls["kind"] in ("Torus", "Unknot"):
        m, n = (cls["m"], cls["n"]) if cls["kind"] == "Torus" else (2, 1)
        torus = jones_torus(m, n)
        jones["polynomials"].append(poly_json(torus, "closed-form"))
        if truth is not None:
            agreement["jones"] = torus == truth
    elif spec.n == 3 and prof.component_count == 1 and truth is not None:
        try:
            fam = family_report(spec, budget)
        except ShapeError:
            fam = None
        if fam is not None:
            jones["family_row"] = fam
            agreement["jones_family_display"] = fam["exact"]
    report["jones"] = jones

    try:
        report["genus"] = _genus_section(spec, prof, verify)
    except SplitLinkError as exc:
        report["genus"] = None
        report["notes"].append(f"genus: {exc}")
    if prof.s >= 1 and all(abs(x) >= 2 for x in spec.p):
        try:
            bk = basket_number(spec)
            report["basket"] = asdict(bk)
        except SplitLinkError as exc:
            report["basket"] = None
            report["notes"].append(f"basket: {exc}")
    else:
        report["basket"] = None
    if trace:
        report["trace"] = computation_tree(first).to_dict()
    report["oracle_agreement"] = agreement
    return report


# Display rows for Jones families are known to be inexact in places and do not
# count as verification failures.
_SOFT_AGREEMENT = {"jones_family_display"}


def report_ok(report: dict) -> bool:
    return all(v for k, v in report["oracle_agreement"].items() if k not in _SOFT_AGREEMENT)


def render_text(report: dict) -> str:
    out = [f"{report['spec']}: {report['components']} component(s), "
           f"{report['orientation_classes']} orientation class(es)"]
    for note in report["notes"]:
        out.append(f"  note: {note}")
    cls = report.get("classification")
    if cls:
        label = f"Torus({cls['m']},{cls['n']})" if cls["kind"] == "Torus" else cls["kind"]
        out.append(f"  classification: {label} ({cls['reason']})")
    for entry in report["conway"]:
        out.append(f"  conway[{entry['index']}] eps={tuple(entry['eps'])}:")
        for pj in entry["polynomials"]:
            out.append(f"    {pj['source']:>16}: {pj['text']}")
    for name in ("alexander", "jones"):
        sec = report[name]
        out.append(f"  {name} (orientation {sec['orientation']}):")
        for pj in sec["polynomials"]:
            out.append(f"    {pj['source']:>16}: {pj['text']}")
        if "oracle" in sec:
            out.append(f"    oracle: {sec['oracle']}")
        if "family_row" in sec:
            fr = sec["family_row"]
            out.append(f"    family row {fr['row']}: {fr['display']} (exact: {fr['exact']})")
    g = report.get("genus")
    if g:
        out.append(f"  genus: {g['genus']} [{g['kind']}, {g.get('case')}]")
        for w in g.get("warnings", []):
            out.append(f"    warning: {w}")
    bk = report.get("basket")
    if bk:
        out.append(f"  basket number: {bk['basket_number']}")
        for w in bk.get("warnings", []):
            out.append(f"    warning: {w}")
    if report["oracle_agreement"]:
        flags = ", ".join(f"{k}={v}" for k, v in report["oracle_agreement"].items())
        out.append(f"  agreement: {flags}")
    if "trace" in report:
        out.append("  trace: " + json.dumps(report["trace"]))
    return "\n".join(out)


def cmd_invariants(args) -> int:
    try:
        spec = parse_spec(args.pretzel)
    except ValueError as exc:
        print(f"pretzel: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        report = build_report(spec, args.orientation, args.verify, args.jones_budget, args.trace)
    except UsageError as exc:
        print(f"pretzel: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OracleBudgetError as exc:
        print(f"pretzel: budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    print(json.dumps(report, indent=2) if args.json else render_text(report))
    return EXIT_OK if report_ok(report) else EXIT_MISMATCH


# ---------------------------------------------------------------------------
# sweep
# ---------------------------------------------------------------------------

def sweep_specs(nmax: int, pmax: int):
    vals = range(-pmax, pmax + 1)
    for n in range(1, nmax + 1):
        yield from itertools.product(vals, repeat=n)


def check_spec(p: tuple, jones: bool = False, budget: int = DEFAULT_JONES_BUDGET) -> dict:
    """Oracle checks for one vector: counts plus a list of mismatch descriptions."""
    res = {"checked": 0, "agreed": 0, "skipped": 0, "mismatches": []}
    spec = PretzelSpec(p)
    prof = parity_profile(spec)

    def record(ok: bool, what: str):
        res["checked"] += 1
        if ok:
            res["agreed"] += 1
        else:
            res["mismatches"].append(f"{spec} {what}")

    for op in realizations(spec):
        tree = computation_tree_conway(op)
        try:
            oracle = conway_skein(op.diagram())
        except OracleBudgetError:
            res["skipped"] += 1
            continue
        record(tree == oracle, f"eps={op.eps}: tree {tree} != oracle {oracle}")
        try:
            closed = closed_form_conway(spec, op)
            record(closed == oracle, f"eps={op.eps}: closed form {closed} != oracle {oracle}")
        except ShapeError:
            pass
        if prof.s == 0 and not oracle.is_zero():
            want = 0 if spec.n % 2 else 1
            opposite = spec.n % 2 == 0 and all(e == -1 for e in op.eps)
            if spec.n % 2 or opposite:
                ok = all((k // 2) % 2 == want for k, _ in oracle.items())
                record(ok, f"eps={op.eps}: z-power parity of {oracle}")
    if jones and spec.n == 3 and prof.component_count == 1:
        cls = classify_classical(spec)
        if cls.kind in ("Torus", "Unknot"):
            d = next(realizations(spec)).diagram()
            if d.n_crossings > budget:
                res["skipped"] += 1
            else:
                m, n = (cls.m, cls.n) if cls.kind == "Torus" else (2, 1)
                truth = kauffman_jones(d, budget)
                record(truth == jones_torus(m, n), f"Jones {truth} != torus {cls}")
    return res


def _check_star(args):
    return check_spec(*args)


def run_sweep(nmax: int, pmax: int, jones: bool = False, budget: int = DEFAULT_JONES_BUDGET,
              threads: int | None = None) -> dict:
    threads = threads or _threads()
    jobs = [(p, jones, budget) for p in sweep_specs(nmax, pmax)]
    total = {"specs": len(jobs), "checked": 0, "agreed": 0, "skipped": 0, "mismatches": []}
    if threads > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(_check_star, jobs, chunksize=64))
    else:
        results = [check_spec(*job) for job in jobs]
    for r in results:
        for key in ("checked", "agreed", "skipped"):
            total[key] += r[key]
        total["mismatches"].extend(r["mismatches"])
    return total


def cmd_sweep(args) -> int:
    if not (0 <= args.nmax <= 6 and 0 <= args.pmax <= 5):
        print("pretzel: error: sweep needs 0 <= nmax <= 6 and 0 <= pmax <= 5", file=sys.stderr)
        return EXIT_USAGE
    total = run_sweep(args.nmax, args.pmax, args.jones, args.jones_budget)
    if args.json:
        print(json.dumps(total, indent=2))
    else:
        print(f"{total['specs']} specs, {total['checked']} checked, {total['agreed']} agreed, "
              f"{len(total['mismatches'])} mismatches, {total['skipped']} skipped")
        for m in total["mismatches"][:20]:
            print(f"  mismatch: {m}")
    return EXIT_MISMATCH if total["mismatches"] else EXIT_OK


# ---------------------------------------------------------------------------

def make_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="pretzel", description="Invariants of pretzel links.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    inv = sub.add_parser("invariants", help="compute invariants of one pretzel link")
    inv.add_argument("-p", "--pretzel", required=True,
                     help="comma-separated box twists, e.g. -2,3,7 (quote negatives: -p=-2,3,7)")
    inv.add_argument("--json", action="store_true")
    inv.add_argument("--verify", action="store_true", help="cross-check against the diagram oracles")
    inv.add_argument("--orientation", default="all", help="orientation class index or 'all'")
    inv.add_argument("--jones-budget", type=int, default=None,
                     help=f"max crossings for the bracket oracle (default {DEFAULT_JONES_BUDGET})")
    inv.add_argument("--trace", action="store_true", help="include the computation tree")
    inv.set_defaults(func=cmd_invariants)

    sw = sub.add_parser("sweep", help="exhaustive oracle agreement sweep")
    sw.add_argument("--nmax", type=int, default=4)
    sw.add_argument("--pmax", type=int, default=3)
    sw.add_argument("--jones", action="store_true", help="also check torus-knot Jones polynomials")
    sw.add_argument("--jones-budget", type=int, default=DEFAULT_JONES_BUDGET)
    sw.add_argument("--json", action="store_true")
    sw.set_defaults(func=cmd_sweep)
    return parser


def main(argv=None) -> int:
    args = make_parser().parse_args(argv)
    if getattr(args, "orientation", "all") != "all":
        try:
            int(args.orientation)
        except ValueError:
            print("pretzel: error: --orientation takes an index or 'all'", file=sys.stderr)
            return EXIT_USAGE
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
