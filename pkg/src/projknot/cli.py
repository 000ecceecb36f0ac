"""Command-line front end.

Exit codes: 0 on success (including uncertified results, which carry
``"certified": false``), 2 on parse errors, 3 on precondition failures.
"""

from __future__ import annotations

import argparse
import csv
import json
import random
import shlex
import sys
import time
from fractions import Fraction

from .errors import DomainError, ParseError, PrimitivityError, UnsupportedGeneratorError
from .genus import g4_interval
from .knots import KnotCombo, TorusKnot, combo_signature, parse_combo, sharp_S
from .metric import (
    ConsistencyError,
    NotCertifiedError,
    big_delta_interval,
    ball_radius_one,
    dbar_search,
    default_universe,
    delta_certified,
    zz_chain,
    zz_delta,
)
from .projective import (
    canonicalize,
    class_count,
    common_multiple_witness,
    equivalent,
    parse_element,
    parse_group,
    related_one_step,
)
from .rips import build_rips, twist_clique

EXIT_OK, EXIT_PARSE, EXIT_PRECONDITION = 0, 2, 3


def _jsonable(x):
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return x


# --- SVG ----------------------------------------------------------------


def signature_svg(f, title="", width=640, height=360) -> str:
    """Step plot on t in [0, 1] with integer gridlines; no endpoint marks."""
    pad = 40
    vals = list(f.interval_values) + [0]
    lo, hi = min(vals), max(vals)
    if lo == hi:
        hi = lo + 1

    def X(t):
        return pad + float(t) * (width - 2 * pad)

    def Y(v):
        return height - pad - (v - lo) / (hi - lo) * (height - 2 * pad)

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<rect width="{width}" height="{height}" fill="white"/>',
    ]
    for v in range(lo, hi + 1):
        parts.append(f'<line x1="{X(0):.2f}" y1="{Y(v):.2f}" x2="{X(1):.2f}" y2="{Y(v):.2f}" '
                     'stroke="#ccc" stroke-width="1"/>')
        parts.append(f'<text x="{pad - 6}" y="{Y(v) + 4:.2f}" font-size="11" text-anchor="end">{v}</text>')
    parts.append(f'<line x1="{X(0):.2f}" y1="{Y(0):.2f}" x2="{X(1):.2f}" y2="{Y(0):.2f}" stroke="black"/>')
    for t in (0, 1):
        parts.append(f'<text x="{X(t):.2f}" y="{height - pad + 16}" font-size="11" text-anchor="middle">{t}</text>')
    for a, b, v in f.intervals():
        parts.append(f'<line x1="{X(a):.2f}" y1="{Y(v):.2f}" x2="{X(b):.2f}" y2="{Y(v):.2f}" '
                     'stroke="#1f4e9c" stroke-width="2.5"/>')
    if title:
        parts.append(f'<text x="{width / 2:.0f}" y="20" font-size="13" text-anchor="middle">{title}</text>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


# --- commands -----------------------------------------------------------
# Each returns (record, text_lines, csv_rows or None).


def cmd_sig(args):
    c = parse_combo(args.combo)
    f = combo_signature(c)
    rows = [(str(a), str(b), v) for a, b, v in f.intervals()]
    if args.svg:
        with open(args.svg, "w") as fh:
            fh.write(signature_svg(f, title=f"sigma' of {c}"))
    rec = {
        "inputs": {"combo": str(c)},
        "value": sharp_S(c),
        "certified": True,
        "breakpoints": [str(t) for t in f.breakpoints],
        "values": list(f.interval_values),
        "witnesses": {"kind": "signature"},
    }
    text = [f"{c}"] + [f"  ({a}, {b})  {v}" for a, b, v in rows] + [f"S = {sharp_S(c)}"]
    return rec, text, (["t_lo", "t_hi", "value"], rows)


def cmd_g4(args):
    c = parse_combo(args.combo)
    gi = g4_interval(c)
    rec = {"inputs": {"combo": str(c)}, **gi.to_json(), "value": gi.lower if gi.exact else None}
    text = [f"g4({c}) in [{gi.lower}, {gi.upper}]" + (" (exact)" if gi.exact else ""),
            f"  lower: signature at t = {gi.lower_witness}",
            f"  upper: {gi.upper_kind}"]
    return rec, text, None


def cmd_dbar(args):
    res = dbar_search(args.k, args.n, workers=args.parallel)
    rec = {"inputs": {"k": args.k, "n": args.n}, **res.to_json()}
    text = [f"dbar(T(2,{2 * args.k + 1}), T(2,{2 * args.n + 1})) = {res.value}"
            + ("" if res.all_certified else " (not certified)"),
            "  argmins (b, a): " + " ".join(f"({b},{a})" for b, a in res.argmins)]
    rows = [(r["b"], r["a"], r["lower"], "" if r["upper"] is None else r["upper"], r["exact"])
            for r in res.candidates]
    return rec, text, (["b", "a", "lower", "upper", "exact"], rows)


def _interval_record(inputs, d, name):
    rec = {"inputs": inputs, **d.to_json()}
    text = [f"{name} in {d}" + (" (exact)" if d.exact else "")]
    up = d.upper_certificate
    if up.get("chain"):
        text.append("  chain: " + " -> ".join(up["chain"]))
    elif up.get("combo"):
        text.append(f"  upper: {up.get('kind')} on {up['combo']}")
    return rec, text, None


def cmd_delta(args):
    a, b = parse_combo(args.a), parse_combo(args.b)
    d = delta_certified(a, b, workers=args.parallel)
    return _interval_record({"a": str(a), "b": str(b)}, d, f"delta([{a}], [{b}])")


def _parse_universe(spec):
    if spec is None or spec.strip() == "default":
        return default_universe()
    return [parse_combo(s) for s in spec.split(";") if s.strip()]


def cmd_big_delta(args):
    a, b = parse_combo(args.a), parse_combo(args.b)
    d = big_delta_interval(a, b, _parse_universe(args.universe), workers=args.parallel)
    return _interval_record({"a": str(a), "b": str(b), "universe": args.universe or "default"},
                            d, f"Delta([{a}], [{b}])")


def cmd_ball(args):
    if args.N % 2 == 0 or args.N < 3:
        raise DomainError(f"N must be odd and >= 3, got {args.N}")
    m = (args.N - 1) // 2
    ball = ball_radius_one(m, args.max, workers=args.parallel)
    crossings = [2 * v + 1 for v in ball]
    rec = {"inputs": {"N": args.N, "max": args.max}, "value": crossings, "certified": True,
           "witnesses": {"kind": "classification+delta"}}
    return rec, [" ".join(map(str, crossings))], None


def _int_list(s):
    try:
        return [int(t) for t in s.split(",") if t.strip()]
    except ValueError:
        raise ParseError("expected a comma-separated list of integers", s, 0) from None


def cmd_rips(args):
    if args.twist:
        rc = twist_clique(_int_list(args.twist))
    else:
        if args.torus:
            verts = [KnotCombo.torus(q) for q in _int_list(args.torus)]
        else:
            with open(args.combos) as fh:
                verts = [parse_combo(line) for line in fh if line.strip() and not line.lstrip().startswith("#")]
        rc = build_rips(verts)
    rec = {"inputs": {"torus": args.torus, "twist": args.twist, "combos": args.combos},
           **rc.to_json(), "value": rc.dimension, "certified": not rc.excluded_pairs,
           "witnesses": {"edges": "axiom-labelled" if args.twist else "delta"}}
    text = [f"dimension {rc.dimension}"] + ["  {" + ", ".join(rc.labelled(s)) + "}" for s in rc.maximal_simplices]
    if rc.excluded_pairs:
        text.append(f"  undecided pairs: {list(rc.excluded_pairs)}")
    return rec, text, None


def cmd_proj(args):
    G = parse_group(args.group)
    x = parse_element(args.elem, G)
    cx = canonicalize(G, x)
    rec = {"inputs": {"group": str(G), "elem": str(x)}, "value": str(cx), "certified": True,
           "witnesses": {"kind": "canonical-form"}}
    text = [f"[{x}] = {cx} in P({G})"]
    if G.rank == 0:
        rec["class_count"] = class_count(G)
        text.append(f"  classes: {rec['class_count']}")
    if args.elem2:
        y = parse_element(args.elem2, G)
        if x.is_zero() or y.is_zero():
            raise DomainError("comparison needs nonzero elements")
        eq = equivalent(G, x, y)
        one = related_one_step(G, x, y)
        cmw = common_multiple_witness(G, x, y)
        rec["inputs"]["elem2"] = str(y)
        rec.update(value=eq, equivalent=eq, related_one_step=one,
                   common_multiple=None if cmw is None else list(cmw), class2=str(canonicalize(G, y)))
        text = [f"{x} ~ {y}: {eq}", f"  one step: {one}",
                f"  common multiple: {cmw}" if cmw else "  common multiple: none"]
    return rec, text, None


def _point(s):
    try:
        a, b = (int(t) for t in s.split(","))
    except ValueError:
        raise ParseError("expected a lattice point 'x,y'", s, 0) from None
    return a, b


def cmd_zz(args):
    x, y = _point(args.x), _point(args.y)
    if args.mode == "delta":
        v = zz_delta(x, y)
        return ({"inputs": {"x": list(x), "y": list(y)}, "value": v, "certified": True,
                 "witnesses": {"kind": "lattice-region"}}, [f"delta = {v}"], None)
    bound = args.bound or max(map(abs, x + y))
    chain = zz_chain(x, y, bound)
    value = None if chain is None else len(chain)
    rec = {"inputs": {"x": list(x), "y": list(y), "bound": bound}, "value": value,
           "upper": value, "certified": False,
           "witnesses": {"kind": "chain", "chain": None if chain is None else [[list(a), list(b)] for a, b in chain]}}
    if chain is None:
        return rec, [f"unreachable within bound {bound}"], None
    lines = [f"Delta <= {value} (bound {bound})"]
    lines += [f"  {a} -> {b}" for a, b in chain]
    return rec, lines, None


def cmd_props(args):
    """Randomized spot checks of signature additivity and delta symmetry."""
    rng = random.Random(args.seed)
    failures = 0
    for _ in range(args.count):
        a = KnotCombo({TorusKnot(rng.randint(1, 12)): rng.choice([-2, -1, 1, 2])})
        b = KnotCombo({TorusKnot(rng.randint(1, 12)): rng.choice([-2, -1, 1, 2])})
        if combo_signature(a + b) != combo_signature(a) + combo_signature(b):
            failures += 1
        if sharp_S(a + b) > sharp_S(a) + sharp_S(b):
            failures += 1
        u, v = a.terms[0][0], b.terms[0][0]
        ku, kv = KnotCombo({u: 1}), KnotCombo({v: 1})
        if delta_certified(ku, kv).as_pair() != delta_certified(kv, ku).as_pair():
            failures += 1
    rec = {"inputs": {"seed": args.seed, "count": args.count}, "value": failures, "certified": failures == 0,
           "witnesses": {"kind": "randomized"}}
    return rec, [f"{args.count} trials, {failures} failures (seed {args.seed})"], None


# --- parser -------------------------------------------------------------


def _add_globals(p, suppress):
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    p.add_argument("--json", action="store_true", default=d(False), help="emit a JSON record")
    p.add_argument("--csv", action="store_true", default=d(False), help="emit CSV rows (sig, dbar)")
    p.add_argument("--seed", type=int, default=d(0), help="seed for randomized checks")
    p.add_argument("--parallel", type=int, default=d(1), metavar="N", help="worker processes")


def build_parser():
    parser = argparse.ArgumentParser(prog="projknot", description="Certified projective distances between knot classes.")
    _add_globals(parser, suppress=False)
    common = argparse.ArgumentParser(add_help=False)
    _add_globals(common, suppress=True)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("sig", parents=[common], help="signature step function")
    p.add_argument("combo")
    p.add_argument("--svg", metavar="PATH")
    p.set_defaults(func=cmd_sig)

    p = sub.add_parser("g4", parents=[common], help="four-genus interval")
    p.add_argument("combo")
    p.set_defaults(func=cmd_g4)

    p = sub.add_parser("dbar", parents=[common], help="min g4(b*T_n - a*T_k)")
    p.add_argument("k", type=int)
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_dbar)

    p = sub.add_parser("delta", parents=[common], help="projective distance interval")
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(func=cmd_delta)

    p = sub.add_parser("big-delta", parents=[common], help="chain distance interval")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--universe", help="'default' or combos separated by ';'")
    p.set_defaults(func=cmd_big_delta)

    p = sub.add_parser("ball", parents=[common], help="torus classes at distance one from T(2,N)")
    p.add_argument("N", type=int)
    p.add_argument("--max", type=int, default=30, help="largest torus parameter m (default 30)")
    p.set_defaults(func=cmd_ball)

    p = sub.add_parser("rips", parents=[common], help="Rips complex at scale one")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--torus", metavar="LIST", help="crossing numbers, e.g. 3,5,7")
    g.add_argument("--twist", metavar="LIST", help="twist parameters, e.g. 1,2,3")
    g.add_argument("--combos", metavar="FILE", help="one combo per line")
    p.set_defaults(func=cmd_rips)

    p = sub.add_parser("proj", parents=[common], help="projective class in a f.g. abelian group")
    p.add_argument("group")
    p.add_argument("elem")
    p.add_argument("elem2", nargs="?")
    p.set_defaults(func=cmd_proj)

    p = sub.add_parser("zz", parents=[common], help="Z+Z with the max norm")
    p.add_argument("mode", choices=["delta", "chain"])
    p.add_argument("x")
    p.add_argument("y")
    p.add_argument("--bound", type=int, help="coordinate bound for chains")
    p.set_defaults(func=cmd_zz)

    p = sub.add_parser("props", parents=[common], help="seeded randomized property checks")
    p.add_argument("--count", type=int, default=50)
    p.set_defaults(func=cmd_props)
    return parser


def run(argv=None, out=None) -> int:
    out = out or sys.stdout
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_PARSE if e.code else EXIT_OK
    t0 = time.perf_counter()
    try:
        rec, text, table = args.func(args)
    except ParseError as e:
        print(e.annotated(), file=sys.stderr)
        return EXIT_PARSE
    except (DomainError, PrimitivityError, UnsupportedGeneratorError, NotCertifiedError, ConsistencyError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PRECONDITION
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PRECONDITION
    rec = {"command": shlex.join(argv), **rec, "timing_s": round(time.perf_counter() - t0, 6)}
    if args.json:
        json.dump(_jsonable(rec), out, ensure_ascii=False)
        out.write("\n")
    elif args.csv and table is not None:
        w = csv.writer(out, lineterminator="\n")
        w.writerow(table[0])
        w.writerows(table[1])
    else:
        for line in text:
            print(line, file=out)
    return EXIT_OK


def main():
    sys.exit(run())
