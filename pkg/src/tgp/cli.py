"""Command line front end: ``tgp <command> ...``."""

from __future__ import annotations

import argparse
import json
import sys
from collections import Counter
from fractions import Fraction

from .arrow import format_arrow, load, to_json
from .errors import TGPError
from .polynomial import MultiPoly, as_fraction


def _read_graph(path: str):
    text = sys.stdin.read() if path == "-" else open(path, encoding="utf-8").read()
    return load(text)


def _edges(spec: str | None) -> list:
    if not spec:
        return []
    return [e.strip() for e in spec.split(",") if e.strip()]


def _assignments(spec: str | None) -> dict:
    out = {}
    if not spec:
        return out
    for item in spec.split(","):
        if "=" not in item:
            raise argparse.ArgumentTypeError(f"expected name=value, got {item!r}")
        name, value = item.split("=", 1)
        out[name.strip()] = Fraction(value.strip())
    return out


def _emit_graph(ap, as_json: bool):
    print(json.dumps(to_json(ap)) if as_json else format_arrow(ap))


def _emit_value(value):
    if isinstance(value, MultiPoly):
        print(json.dumps(value.to_json()))
    else:
        print(json.dumps({"value": str(as_fraction(value))}))


# --------------------------------------------------------------------------

def cmd_op(args):
    from . import surgery

    g = _read_graph(args.input)
    edges = _edges(args.edges)
    if args.operation == "dual":
        out = surgery.partial_dual(g, edges) if edges else surgery.geometric_dual(g)
    elif args.operation == "petrial":
        out = surgery.partial_petrial(g, edges) if edges else surgery.petrial(g)
    elif args.operation == "tau":
        out = surgery.partial_petrial(g, edges)
    elif args.operation == "delta":
        out = surgery.partial_dual(g, edges)
    elif args.operation == "delete":
        out = surgery.delete(g, edges)
    else:
        out = g
        for e in edges:
            out = surgery.contract(out, e)
    _emit_graph(out, args.json)
    return 0


def cmd_poly(args):
    from . import engines

    g = _read_graph(args.input)
    poly = {
        "q": engines.q_statesum,
        "br": engines.br_poly,
        "tutte": engines.tutte_poly,
        "penrose": engines.penrose_poly,
        "chromatic-dual": engines.chromatic_dual,
    }[args.kind](g)
    at = _assignments(args.at)
    if not at:
        _emit_value(poly)
        return 0
    unknown = set(at) - set(poly.vars)
    if unknown:
        raise TGPError(f"unknown variable(s) {sorted(unknown)}; polynomial is over {list(poly.vars)}")
    if set(at) == set(poly.vars):
        _emit_value(poly.eval(at))
    else:
        _emit_value(poly.substitute(at))
    return 0


def cmd_kval(args):
    from .medial import medial_graph, type_histogram, valuation_sum

    g = _read_graph(args.input)
    mg = medial_graph(g)
    kw = {}
    if args.b is not None:
        kw["b"] = Fraction(args.b)
    for name in ("alpha", "beta", "gamma"):
        v = getattr(args, name)
        if v is not None:
            kw[name] = Fraction(v)
    value = valuation_sum(mg, args.k, args.cls, args.weight, limit=args.limit, **kw)
    hist = type_histogram(mg, args.k, args.cls, args.limit)
    marginals = {key: Counter() for key in ("wh", "bl", "cr", "tot")}
    for (wh, bl, cr, tot), n in hist.items():
        for key, val in zip(("wh", "bl", "cr", "tot"), (wh, bl, cr, tot)):
            marginals[key][val] += n
    out = {
        "value": value.to_json() if isinstance(value, MultiPoly) else str(value),
        "valuations": sum(hist.values()),
        "histograms": {key: {str(k): v for k, v in sorted(c.items())} for key, c in marginals.items()},
        "joint": [{"wh": wh, "bl": bl, "cr": cr, "tot": tot, "count": n}
                  for (wh, bl, cr, tot), n in sorted(hist.items())],
    }
    print(json.dumps(out, sort_keys=True))
    return 0


def cmd_tensor(args):
    from .tensor import TensorSpec, double, tensor_product

    g = _read_graph(args.base)
    if args.double:
        out = double(g)
    else:
        if not args.pattern or not args.edge:
            raise TGPError("--pattern and --edge are required unless --double is given")
        phi = {f: int(v) for f, v in _assignments(args.phi).items()}
        out = tensor_product(TensorSpec(g, _read_graph(args.pattern), args.edge, phi))
    _emit_graph(out, args.json)
    return 0


def cmd_tensor_weights(args):
    from .tensor import tensor_weights_at

    point = _assignments(args.at)
    missing = {"alpha", "beta", "gamma", "t"} - set(point)
    if missing:
        raise TGPError(f"--at needs alpha, beta, gamma and t; missing {sorted(missing)}")
    w = tensor_weights_at(_read_graph(args.pattern), args.edge, point)
    print(json.dumps({"kappa": str(w.kappa), "lambda": str(w.lam), "mu": str(w.mu)}))
    return 0


def cmd_verify(args):
    from .verify import VerifyConfig, list_identities, reports_json, verify_all, verify_identity

    if args.list:
        for ident, desc in list_identities():
            print(f"{ident:12s} {desc}")
        return 0
    cfg = VerifyConfig(scope=args.scope, seed=args.seed, max_edges=args.max_edges, samples=args.samples)
    if args.all:
        reports = verify_all(cfg)
    elif args.id:
        reports = [verify_identity(i, cfg.scope, cfg) for i in _edges(args.id)]
    else:
        raise TGPError("give --list, --id or --all")
    for r in reports:
        status = "PASS" if r.passed else "FAIL"
        print(f"{status} {r.id:12s} {len(r.cases) - len(r.failures)}/{len(r.cases)} cases")
    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            fh.write(reports_json(reports))
            fh.write("\n")
    return 0 if all(r.passed for r in reports) else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="tgp", description="Exact polynomials of embedded graphs.")
    sub = p.add_subparsers(dest="command", required=True)

    op = sub.add_parser("op", help="surgery on an arrow presentation")
    op.add_argument("operation", choices=["dual", "petrial", "tau", "delta", "delete", "contract"])
    op.add_argument("--input", default="-")
    op.add_argument("--edges")
    op.add_argument("--json", action="store_true", help="write the JSON form")
    op.set_defaults(func=cmd_op)

    poly = sub.add_parser("poly", help="compute a graph polynomial")
    poly.add_argument("kind", choices=["q", "br", "tutte", "penrose", "chromatic-dual"])
    poly.add_argument("--input", default="-")
    poly.add_argument("--at", help="e.g. alpha=1,beta=0,gamma=-1,t=3")
    poly.set_defaults(func=cmd_poly)

    kv = sub.add_parser("kval", help="weighted k-valuation sums of the medial graph")
    kv.add_argument("--input", default="-")
    kv.add_argument("--k", type=int, required=True)
    kv.add_argument("--class", dest="cls", default="all")
    kv.add_argument("--weight", default="count")
    kv.add_argument("--b")
    kv.add_argument("--alpha")
    kv.add_argument("--beta")
    kv.add_argument("--gamma")
    kv.add_argument("--limit", type=int, default=3 ** 8)
    kv.set_defaults(func=cmd_kval)

    tp = sub.add_parser("tensor", help="tensor product G (x) H")
    tp.add_argument("--base", required=True)
    tp.add_argument("--pattern")
    tp.add_argument("--edge")
    tp.add_argument("--phi", help="per-edge identification choices, e.g. a=2,b=1")
    tp.add_argument("--double", action="store_true")
    tp.add_argument("--json", action="store_true")
    tp.set_defaults(func=cmd_tensor)

    tw = sub.add_parser("tensor-weights", help="solve for the tensor weights at a point")
    tw.add_argument("--pattern", required=True)
    tw.add_argument("--edge", required=True)
    tw.add_argument("--at", required=True)
    tw.set_defaults(func=cmd_tensor_weights)

    vf = sub.add_parser("verify", help="run registered identity checks")
    vf.add_argument("--list", action="store_true")
    vf.add_argument("--id")
    vf.add_argument("--all", action="store_true")
    vf.add_argument("--scope", default="catalog", choices=["catalog", "seeded-random"])
    vf.add_argument("--seed", type=int, default=42)
    vf.add_argument("--max-edges", type=int, default=6)
    vf.add_argument("--samples", type=int, default=20)
    vf.add_argument("--json")
    vf.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (TGPError, argparse.ArgumentTypeError, ValueError, OSError) as exc:
        print(f"tgp: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
