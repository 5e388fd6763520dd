"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
3 internal inconsistency.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import catalog, dsl, verifier
from .catalog import SurfaceModel, plurigenus
from .cobordism import diffeomorphic_product, h_cobordant
from .constructions import ThreefoldModel, threefold_plurigenus
from .errors import (
    InternalInconsistency,
    KodfoldError,
    RuleUnavailable,
)
from .invariants import intersection_form

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_INTERNAL = 3

SCHEMA = 1


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _emit(payload: dict, as_json: bool, text: str) -> None:
    if as_json:
        print(json.dumps({"schema": SCHEMA, **payload}, indent=2))
    else:
        print(text)


def _table(headers, rows) -> str:
    rows = [[str(c) for c in r] for r in rows]
    widths = [max(len(h), *(len(r[i]) for r in rows)) if rows else len(h) for i, h in enumerate(headers)]
    fmt = "  ".join(f"{{:<{w}}}" for w in widths)
    out = [fmt.format(*headers), fmt.format(*("-" * w for w in widths))]
    out.extend(fmt.format(*r).rstrip() for r in rows)
    return "\n".join(out)


def _describe(model) -> dict:
    if isinstance(model, ThreefoldModel):
        return {
            "kind": "threefold",
            "surface": model.surface.describe(),
            "curve_genus": model.curve.genus,
            "chern3": {
                "c1_cubed": model.chern3.c1_cubed,
                "c1c2": model.chern3.c1c2,
                "c3": model.chern3.c3,
            },
            "kod": model.kod.to_json(),
            "pi1": model.pi1.to_json(),
        }
    s: SurfaceModel = model
    out = {
        "kind": "surface",
        "family": s.family.name,
        "params": list(s.family.params),
        "blowups": s.blowups,
        "chern": {"c1_sq": s.chern.c1_sq, "c2": s.chern.c2},
        "hodge": {"p_g": s.hodge.p_g, "q": s.hodge.q, "chi_O": s.hodge.chi_O},
        "kod": s.kod.to_json(),
        "spin": s.spin,
        "intersection_form": intersection_form(s).to_json(),
    }
    if s.elliptic is not None:
        out["elliptic"] = {"multiplicities": list(s.elliptic.multiplicities)}
    if s.c1_coords is not None:
        out["c1_coords"] = list(s.c1_coords)
    return out


def _describe_text(model) -> str:
    d = _describe(model)
    if d["kind"] == "threefold":
        c = d["chern3"]
        return "\n".join(
            [
                f"threefold   {model.describe()}",
                f"chern       c1^3={c['c1_cubed']}  c1c2={c['c1c2']}  c3={c['c3']}",
                f"kod         {model.kod}",
                f"pi1         {model.pi1}",
            ]
        )
    f = d["intersection_form"]
    return "\n".join(
        [
            f"surface     {model.describe()}",
            f"chern       c1^2={d['chern']['c1_sq']}  c2={d['chern']['c2']}",
            f"hodge       p_g={d['hodge']['p_g']}  q={d['hodge']['q']}  chi={d['hodge']['chi_O']}",
            f"kod         {model.kod}",
            f"spin        {'yes' if model.spin else 'no'}",
            f"form        rank={f['rank']}  b+={f['b_plus']}  b-={f['b_minus']}  "
            f"sigma={f['signature']}  {f['parity']}",
        ]
    )


def cmd_invariants(args) -> int:
    model = dsl.evaluate_text(args.expr)
    _emit({"expr": args.expr, "model": _describe(model)}, args.json, _describe_text(model))
    return EXIT_OK


def _plurigenus_fn(model):
    return threefold_plurigenus if isinstance(model, ThreefoldModel) else plurigenus


def cmd_plurigenera(args) -> int:
    if args.max < 1:
        return _usage(f"--max must be >= 1, got {args.max}")
    model = dsl.evaluate_text(args.expr)
    value = _plurigenus_fn(model)
    entries = []
    for m in range(1, args.max + 1):
        try:
            entries.append({"m": m, "value": value(model, m)})
        except RuleUnavailable as exc:
            entries.append({"m": m, "value": None, "error": exc.kind, "message": exc.message})
    text = _table(
        ("m", "P_m"),
        [(e["m"], e["value"] if e["value"] is not None else e["error"]) for e in entries],
    )
    _emit({"expr": args.expr, "plurigenera": entries}, args.json, text)
    return EXIT_OK


def _usage(message: str) -> int:
    print(f"kodfold: error: {message}", file=sys.stderr)
    return EXIT_USAGE


def cmd_compare(args) -> int:
    a = dsl.evaluate_text(args.expr_a)
    b = dsl.evaluate_text(args.expr_b)
    if isinstance(a, ThreefoldModel) != isinstance(b, ThreefoldModel):
        return _usage("compare needs two surfaces or two threefolds")
    result: dict = {"a": args.expr_a, "b": args.expr_b}
    lines = [f"A  {args.expr_a}", f"B  {args.expr_b}"]
    if isinstance(a, ThreefoldModel):
        result["chern_equal"] = a.chern3 == b.chern3
        result["kod"] = [a.kod.to_json(), b.kod.to_json()]
        if a.curve.genus != b.curve.genus:
            result["verdict"] = {"outcome": "NoConclusion", "chain": [], "reason": "curve genera differ"}
            lines.append("verdict        NoConclusion (curve genera differ)")
        else:
            verdict = diffeomorphic_product(a.surface, b.surface, a.curve.genus)
            result["h_cobordant_surfaces"] = h_cobordant(a.surface, b.surface)
            result["verdict"] = verdict.to_json()
            lines.append(f"h-cobordant    {'yes' if result['h_cobordant_surfaces'] else 'no'} (surface factors)")
            lines.append(f"verdict        {verdict.outcome}  [{', '.join(verdict.chain)}]")
        lines.append(f"chern equal    {'yes' if result['chern_equal'] else 'no'}  {a.chern3.as_tuple()} vs {b.chern3.as_tuple()}")
    else:
        result["h_cobordant"] = h_cobordant(a, b)
        result["chern_equal"] = a.chern == b.chern
        result["kod"] = [a.kod.to_json(), b.kod.to_json()]
        lines.append(f"h-cobordant    {'yes' if result['h_cobordant'] else 'no'}")
        lines.append(f"chern equal    {'yes' if result['chern_equal'] else 'no'}")
    lines.append(f"kod            {a.kod} vs {b.kod}")
    try:
        m = verifier.min_distinguishing_plurigenus(a, b, args.max)
    except RuleUnavailable as exc:
        result["min_distinguishing_plurigenus"] = {"error": exc.kind, "message": exc.message}
        lines.append(f"min P_m differ {exc.kind}")
    else:
        if m is None:
            result["min_distinguishing_plurigenus"] = None
            lines.append(f"min P_m differ none for m <= {args.max}")
        else:
            value = _plurigenus_fn(a)
            result["min_distinguishing_plurigenus"] = {"m": m, "values": [value(a, m), value(b, m)]}
            lines.append(f"min P_m differ m={m}  ({value(a, m)} vs {value(b, m)})")
    _emit(result, args.json, "\n".join(lines))
    return EXIT_OK


def _verify_jobs(args):
    theorem = args.theorem.upper()
    ids = verifier.THEOREM_A_IDS if theorem == "A" else verifier.THEOREM_B_IDS
    if args.example:
        if args.example.upper() not in ids:
            raise ValueError(f"example {args.example!r} does not belong to Theorem {theorem}")
        ids = (args.example.upper(),)
    for ex in ids:
        genera = (args.genus,) if args.genus is not None else verifier.EXAMPLES[ex].genera
        for g in genera:
            if theorem == "A":
                yield verifier.verify_theorem_A(ex, args.kmax, g)
            else:
                yield verifier.verify_theorem_B(ex, args.kmax, g, args.mbound)


def cmd_verify(args) -> int:
    try:
        reports = list(_verify_jobs(args))
    except ValueError as exc:
        return _usage(str(exc))
    ok = all(r.ok for r in reports)
    if args.json:
        print(json.dumps({"schema": SCHEMA, "ok": ok, "reports": [r.to_json() for r in reports]}, indent=2))
    else:
        print("\n\n".join(verifier.format_report(r) for r in reports))
    return EXIT_OK if ok else EXIT_FAILED


def cmd_catalog(args) -> int:
    rows = catalog.catalog_rows()
    text = _table(
        ("family", "params", "c1^2", "c2", "p_g", "kod", "spin", "P_m"),
        [
            (r["family"], ",".join(map(str, r["params"])) or "-", r["c1_sq"], r["c2"], r["p_g"],
             r["kod"], "yes" if r["spin"] else "no", r["plurigenus_rule"])
            for r in rows
        ],
    )
    _emit({"families": rows}, args.json, text)
    return EXIT_OK


def cmd_anomalies(args) -> int:
    flags = verifier.anomaly_scan()
    if args.json:
        print(json.dumps({"schema": SCHEMA, "anomalies": [f.to_json() for f in flags]}, indent=2))
    else:
        for f in flags:
            print(f"[{f.flag_id}] {f.message}")
            print(f"    claimed:  {json.dumps(f.claimed)}")
            print(f"    computed: {json.dumps(f.computed)}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="kodfold", description="Invariant calculus for surfaces and surface x curve threefolds.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("invariants", help="Chern, Hodge, kod, spin and form data")
    p.add_argument("expr")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("plurigenera", help="table of P_1..P_max")
    p.add_argument("expr")
    p.add_argument("--max", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_plurigenera)

    p = sub.add_parser("compare", help="h-cobordism / diffeomorphism verdict for two constructions")
    p.add_argument("expr_a")
    p.add_argument("expr_b")
    p.add_argument("--max", type=int, default=12)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("verify", help="run the Theorem A or B example checks")
    p.add_argument("theorem", choices=["A", "B", "a", "b"])
    p.add_argument("--example")
    p.add_argument("--kmax", type=int, default=20)
    p.add_argument("--genus", type=int)
    p.add_argument("--mbound", type=int, default=40)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("catalog", help="dump the family table")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("anomalies", help="stated example claims that disagree with recomputation")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_anomalies)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InternalInconsistency as exc:
        print(f"kodfold: internal inconsistency: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except KodfoldError as exc:
        print(f"kodfold: {exc}", file=sys.stderr)
        text = getattr(args, "expr", None)
        if text is not None and exc.span is not None:
            start, end = exc.span
            print(f"  {text}\n  {' ' * start}{'^' * max(1, end - start)}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
