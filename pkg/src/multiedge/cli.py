"""Command-line front end.

Machine-readable output goes to stdout; log lines go to stderr. The exit
status is 0 only when every requested check passed.
"""

from __future__ import annotations

import argparse
import csv
import json
import logging
import sys
from collections import Counter

from . import counting
from .bijection import from_dary, to_dary
from .sampler import sample_trees
from .trees import DAryMultiEdgeTree, OracleCeilingError, parse_dary, parse_tree, stats
from .validation import CLAIMS, run_claim

log = logging.getLogger("multiedge")


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _nonneg(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError("must be nonnegative")
    return v


def cmd_count(args, out) -> int:
    values = counting.a_n_list(args.n_max)
    if args.format == "bfile":
        out.write(counting.bfile(args.n_max))
    elif args.format == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["n", "a_n"])
        w.writerows(enumerate(values))
    else:
        json.dump([{"n": n, "a_n": a} for n, a in enumerate(values)], out)
        out.write("\n")
    return 0


def cmd_height_table(args, out) -> int:
    table = counting.height_table(args.n, args.method, ceiling=args.ceiling)
    out.write(table.to_csv())
    return 0


def cmd_vertices(args, out) -> int:
    out.write(counting.vertex_table(args.n).to_csv())
    return 0


def cmd_bijection(args, out) -> int:
    if args.inverse:
        source = parse_dary(args.tree, args.d)
        image = from_dary(source)
    else:
        source = DAryMultiEdgeTree(parse_tree(args.tree), args.d)
        image = to_dary(source)
    s_src, s_img = stats(source), stats(image)
    preserved = s_src == s_img
    json.dump({
        "d": args.d,
        "direction": "from_dary" if args.inverse else "to_dary",
        "input": source.to_text(),
        "image": image.to_text(),
        "stats": s_src.to_dict(),
        "preserved": preserved,
    }, out)
    out.write("\n")
    return 0 if preserved else 1


def cmd_sample(args, out) -> int:
    trees = sample_trees(args.n, args.count, args.seed)
    if args.stat == "none":
        for t in trees:
            out.write(t.to_text() + "\n")
        return 0
    key = {"height": lambda t: t.height, "vertices": lambda t: t.vertices, "leaves": lambda t: t.leaves}[args.stat]
    hist = Counter(key(t) for t in trees)
    w = csv.writer(out, lineterminator="\n")
    w.writerow([args.stat, "count"])
    w.writerows(sorted(hist.items()))
    return 0


def cmd_validate(args, out) -> int:
    names = sorted(CLAIMS) if args.claim == "all" else [args.claim]
    reports = []
    for name in names:
        log.info("validating %s", name)
        grid = args.grid if args.grid is not None and len(names) == 1 else None
        n = args.n if args.n is not None and len(names) == 1 else None
        rep = run_claim(name, grid=grid, n=n)
        log.info("%s: %s", name, rep.verdict)
        reports.append(rep)
    if args.format == "json":
        payload = [r.to_dict() for r in reports]
        json.dump(payload[0] if len(payload) == 1 else payload, out, indent=2)
        out.write("\n")
    else:
        for i, r in enumerate(reports):
            text = r.to_csv()
            out.write(text if i == 0 else text.split("\n", 1)[1])
    return 0 if all(r.passed for r in reports) else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="multiedge", description="Exact counting, sampling and asymptotic "
                                "validation for plane multi-edge trees.")
    p.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("count", help="A_0..A_n of the multi-edge tree counting sequence")
    c.add_argument("--n-max", type=_nonneg, required=True)
    c.add_argument("--format", choices=("bfile", "csv", "json"), default="bfile")
    c.set_defaults(func=cmd_count)

    h = sub.add_parser("height-table", help="exact number of trees of size n by height (CSV h,count_eq,count_gt)")
    h.add_argument("--n", type=_nonneg, required=True)
    h.add_argument("--method", choices=counting.HEIGHT_METHODS, default="formula")
    h.add_argument("--ceiling", type=_nonneg, default=None, help="oracle ceiling for --method brute")
    h.set_defaults(func=cmd_height_table)

    v = sub.add_parser("vertices", help="exact number of trees of size n by vertex count (CSV k,count)")
    v.add_argument("--n", type=_nonneg, required=True)
    v.set_defaults(func=cmd_vertices)

    b = sub.add_parser("bijection", help="map a d-ary multi-edge tree to its d-ary tree (or back)")
    b.add_argument("--tree", required=True, help="canonical text, e.g. '(1:(),3:())'")
    b.add_argument("--d", type=int, required=True)
    b.add_argument("--inverse", action="store_true", help="input is a d-ary tree with slot positions")
    b.set_defaults(func=cmd_bijection)

    s = sub.add_parser("sample", help="uniform random trees with n edges")
    s.add_argument("--n", type=_nonneg, required=True)
    s.add_argument("--count", type=_nonneg, default=1)
    s.add_argument("--seed", type=int, required=True)
    s.add_argument("--stat", choices=("none", "height", "vertices", "leaves"), default="none",
                   help="emit a histogram CSV of this statistic instead of the trees")
    s.set_defaults(func=cmd_sample)

    val = sub.add_parser("validate", help="compare asymptotic laws with exact values")
    val.add_argument("--claim", choices=sorted(CLAIMS) + ["all"], default="all")
    val.add_argument("--grid", type=_int_list, default=None, help="comma-separated sizes for trend claims")
    val.add_argument("--n", type=int, default=None, help="size for single-point claims")
    val.add_argument("--format", choices=("json", "csv"), default="json")
    val.set_defaults(func=cmd_validate)
    return p


def main(argv=None, out=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr)
    out = sys.stdout if out is None else out
    try:
        return args.func(args, out)
    except (ValueError, OracleCeilingError) as exc:
        log.error("%s", exc)
        return 2


if __name__ == "__main__":
    sys.exit(main())
