"""Command-line interface.

Exit codes: 0 success, 1 disagreement between methods, 2 invalid input,
3 enumeration guard exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from . import chambers as ch
from .exactmath import HurwitzInput, Partition, all_inputs, rational_text
from .methods import METHODS, hurwitz
from .monodromy import enumerate_monodromy_graphs
from .symoracle import DEFAULT_MAX_DEGREE, DegreeGuardError

EXIT_OK, EXIT_MISMATCH, EXIT_INVALID, EXIT_GUARD = 0, 1, 2, 3


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def _nonnegative(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be nonnegative")
    return value


def _partition(text: str) -> Partition:
    try:
        return Partition.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="trophurwitz", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("human", "json"), default="human")
    common.add_argument("--max-degree", type=_positive, default=None,
                        help=f"degree guard for permutation enumeration (default {DEFAULT_MAX_DEGREE})")
    common.add_argument("--jobs", type=_positive, default=1, help="worker processes")

    profile = argparse.ArgumentParser(add_help=False)
    profile.add_argument("--genus", "-g", type=_nonnegative, required=True)
    profile.add_argument("--eta", type=_partition, required=True, help="e.g. 2,1,1")
    profile.add_argument("--nu", type=_partition, required=True)

    p = sub.add_parser("compute", parents=[common, profile], help="compute H^g(eta, nu)")
    p.add_argument("--method", choices=sorted(METHODS) + ["all"], default="cutjoin")

    sub.add_parser("graphs", parents=[common, profile], help="list monodromy graphs with weights")

    kl = argparse.ArgumentParser(add_help=False)
    kl.add_argument("--k", type=_positive, required=True)
    kl.add_argument("--l", type=_positive, required=True)
    sub.add_parser("chambers", parents=[common, kl], help="genus-0 chambers and their polynomials")
    p = sub.add_parser("wallcross", parents=[common, kl], help="wall crossing across one wall")
    p.add_argument("--wall", required=True, help='e.g. "I=1;J=1"')

    p = sub.add_parser("verify", parents=[common], help="cross-check all methods")
    p.add_argument("--dmax", type=_positive, required=True)
    p.add_argument("--gmax", type=_nonnegative, required=True)
    return parser


def _emit(args, human: str, data) -> None:
    if args.format == "json":
        print(json.dumps(data, indent=2))
    else:
        print(human)


def _input(args) -> HurwitzInput:
    return HurwitzInput(args.genus, args.eta, args.nu)


def cmd_compute(args) -> int:
    inp = _input(args)
    methods = sorted(METHODS) if args.method == "all" else [args.method]
    values = {}
    for m in methods:
        values[m] = hurwitz(inp, m, max_degree=args.max_degree, jobs=args.jobs)
    agree = len(set(values.values())) == 1
    data = {
        "genus": inp.g,
        "eta": str(inp.eta),
        "nu": str(inp.nu),
        "s": inp.s,
        "values": {m: rational_text(v) for m, v in values.items()},
    }
    lines = [f"H^{inp.g}({inp.eta}; {inp.nu})  s={inp.s}"]
    lines += [f"  {m:<10} {rational_text(v)}" for m, v in values.items()]
    if len(methods) > 1:
        data["agree"] = agree
        lines.append("PASS" if agree else "FAIL")
    _emit(args, "\n".join(lines), data)
    return EXIT_OK if agree else EXIT_MISMATCH


def cmd_graphs(args) -> int:
    inp = _input(args)
    graphs = enumerate_monodromy_graphs(inp)
    data = [g.to_json(with_weights=True) for g in graphs]
    lines = [f"{len(graphs)} monodromy graphs for H^{inp.g}({inp.eta}; {inp.nu})"]
    lines.append(f"{'key':<44} {'(i)':>4} {'(ii)':>4} {'(iii)':>6} {'(iv)':>5} {'(v)':>7} "
                 f"{'prod w':>6} {'|Aut|':>5} {'total':>7}")
    for g, d in zip(graphs, data):
        f = d["lemma42"]
        lines.append(f"{g.key:<44} {f['i']:>4} {f['ii']:>4} {f['iii']:>6} {f['iv']:>5} {f['v']:>7} "
                     f"{d['interior_product']:>6} {d['aut']:>5} {d['total']:>7}")
    total = sum((Fraction(d["total"]) for d in data), Fraction(0))
    lines.append(f"sum = {rational_text(total)}")
    _emit(args, "\n".join(lines), data)
    return EXIT_OK


def cmd_chambers(args) -> int:
    data = ch.atlas(args.k, args.l)
    lines = [f"(k, l) = ({args.k}, {args.l}): {len(data['walls'])} walls, "
             f"{len(data['chambers'])} chambers"]
    names = [ch.Wall.make(args.k, args.l, w["I"], w["J"]).text() for w in data["walls"]]
    if names:
        lines.append("walls: " + ", ".join(f"[{n}]" for n in names))
    for i, c in enumerate(data["chambers"]):
        lines.append(f"  C{i} {c['signs'] or '(no walls)':<12} witness {c['witness_point']}  "
                     f"P = {c['polynomial_text']}")
    for x in data["wall_crossings"]:
        w = ch.Wall.make(args.k, args.l, x["wall"]["I"], x["wall"]["J"])
        lines.append(f"  WC[{w.text()}] C{x['c1']} -> C{x['c2']}: {x['polynomial_text']}"
                     + ("" if x["consistent"] else "  INCONSISTENT"))
    _emit(args, "\n".join(lines), data)
    ok = all(x["consistent"] for x in data["wall_crossings"])
    return EXIT_OK if ok else EXIT_MISMATCH


def cmd_wallcross(args) -> int:
    wall = ch.Wall.parse(args.k, args.l, args.wall)
    results = [ch.wall_crossing(w, c1, c2) for w, c1, c2 in ch.adjacent_pairs(args.k, args.l)
               if w == wall]
    reports = [ch.cut_glue_check(r.wall, r.c1, r.c2) for r in results]
    data = {
        "wall": wall.to_json(),
        "delta": wall.text(),
        "crossings": [
            dict(r.to_json(), r=r.r, r1=r.r1, r2=r.r2, cut_glue=rep.ok)
            for r, rep in zip(results, reports)
        ],
    }
    lines = [f"wall {wall.text()} = 0 ({wall.spec()})"]
    for r, rep in zip(results, reports):
        status = "PASS" if r.consistent and rep.ok else "FAIL"
        lines.append(f"  {r.c1.sign_text()} -> {r.c2.sign_text()}: {r.difference.to_text()}  "
                     f"[difference = graph sum = closed form: {status}]")
    _emit(args, "\n".join(lines), data)
    ok = all(r.consistent and rep.ok for r, rep in zip(results, reports))
    return EXIT_OK if ok else EXIT_MISMATCH


def _verify_one(payload):
    inp, max_degree = payload
    return inp, {m: hurwitz(inp, m, max_degree=max_degree) for m in sorted(METHODS)}


def cmd_verify(args) -> int:
    limit = DEFAULT_MAX_DEGREE if args.max_degree is None else args.max_degree
    if args.dmax > limit:
        raise DegreeGuardError(f"dmax {args.dmax} exceeds the enumeration guard {limit}")
    start = time.perf_counter()
    inputs = all_inputs(args.dmax, args.gmax)
    payload = [(inp, args.max_degree) for inp in inputs]
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            rows = list(pool.map(_verify_one, payload))
    else:
        rows = [_verify_one(p) for p in payload]
    failures = 0
    data = []
    lines = [f"{'g':>2} {'eta':<12} {'nu':<12} {'value':>12}  status"]
    for inp, values in rows:
        agree = len(set(values.values())) == 1
        failures += not agree
        data.append({"genus": inp.g, "eta": str(inp.eta), "nu": str(inp.nu),
                     "values": {m: rational_text(v) for m, v in values.items()}, "agree": agree})
        shown = rational_text(values["cutjoin"]) if agree else " / ".join(
            f"{m}={rational_text(v)}" for m, v in values.items())
        lines.append(f"{inp.g:>2} {str(inp.eta):<12} {str(inp.nu):<12} {shown:>12}  "
                     f"{'PASS' if agree else 'FAIL'}")
    elapsed = time.perf_counter() - start
    lines.append(f"{len(rows)} inputs, {failures} failures, {elapsed:.1f} s: "
                 f"{'PASS' if not failures else 'FAIL'}")
    _emit(args, "\n".join(lines), {"results": data, "failures": failures})
    return EXIT_OK if not failures else EXIT_MISMATCH


COMMANDS = {
    "compute": cmd_compute,
    "graphs": cmd_graphs,
    "chambers": cmd_chambers,
    "wallcross": cmd_wallcross,
    "verify": cmd_verify,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INVALID if exc.code else EXIT_OK
    try:
        return COMMANDS[args.command](args)
    except DegreeGuardError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
