"""Command-line front end.

Every answered query (including Overtwisted and Unknown verdicts) exits 0;
invalid input exits 2 and I/O failures exit 3.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from .cabling import CablingSpec, ParentState, cabling_sign, classify_cabling, normalize_basis, parent_state
from .classifier import classify, strongly_quasipositive
from .contact_curve import build_full_form, export_tubes
from .errors import NotApplicable, SeifertError, ValidationError
from .exact import fmt
from .fibration import (
    SeifertMultilink,
    component_signs,
    fiber_boundary_slope,
    is_fibered,
    normalize_ptp,
)
from .notation import SpecText, format_spec, parse_multilink, parse_spec
from .seifert import SeifertData, euler_number
from .svg import emit_svg

EXIT_OK, EXIT_INVALID, EXIT_IO = 0, 2, 3
COMMANDS = ("validate", "invariants", "classify", "sqp", "cable", "curve")


class InvalidInput(Exception):
    pass


def _report(input_text: str) -> dict:
    return {"input": input_text, "invariants": {}, "verdict": None, "witness": None, "trace": [], "warnings": []}


def data_invariants(data: SeifertData) -> dict:
    inv = {
        "a": list(data.a),
        "b": list(data.b),
        "A": data.A,
        "sigma": list(data.sigma),
        "delta": list(data.delta),
        "S3": data.is_s3(),
    }
    if data.A != 0:
        inv["e"] = fmt(euler_number(data))
    return inv


def multilink_invariants(ml: SeifertMultilink, warnings: list[str]) -> dict:
    inv = data_invariants(ml.data)
    inv["m"] = list(ml.m)
    inv["fibered"] = is_fibered(ml)
    if ml.data.A == 0 or not inv["fibered"]:
        return inv
    try:
        slopes = fiber_boundary_slope(ml)
        ptp, flipped = normalize_ptp(ml)
    except SeifertError as exc:
        warnings.append(f"{type(exc).__name__}: {exc}")
        return inv
    inv["lambda"] = list(slopes.lam)
    inv["slopes"] = [[u, v] for u, v in zip(slopes.u, slopes.v)]
    inv["I"] = list(slopes.I)
    inv["ptp_flipped"] = flipped
    inv["signs"] = [s.value for s in component_signs(ptp)]
    return inv


def _spec(text: str, b_override: Optional[str]) -> SpecText:
    spec = parse_spec(text)
    if b_override is not None:
        try:
            b = tuple(int(x) for x in b_override.split(","))
        except ValueError as exc:
            raise InvalidInput(f"--b expects a comma-separated integer list: {b_override!r}") from exc
        spec = SpecText(spec.a, b, spec.m)
    return spec


def run(command: str, text: str, args: argparse.Namespace) -> dict:
    """Answer one query; raises InvalidInput for bad input."""
    try:
        if command == "cable":
            return _run_cable(text, args)
        spec = _spec(text, getattr(args, "b", None))
        rep = _report(format_spec(spec))
        if command in ("validate", "invariants") and spec.m is None:
            rep["invariants"] = data_invariants(spec.data())
            rep["verdict"] = "Valid" if command == "validate" else None
            return rep
        ml = spec.multilink()
    except (SeifertError, InvalidInput) as exc:
        raise InvalidInput(f"{type(exc).__name__}: {exc}") from exc
    rep["invariants"] = multilink_invariants(ml, rep["warnings"])
    if command == "validate":
        rep["verdict"] = "Valid"
    elif command == "classify":
        _put_verdict(rep, classify(ml))
    elif command == "sqp":
        try:
            rep["verdict"] = "true" if strongly_quasipositive(ml) else "false"
        except (NotApplicable, SeifertError) as exc:
            rep["verdict"] = "NotApplicable"
            rep["warnings"].append(str(exc))
    elif command == "curve":
        try:
            form = build_full_form(ml)
        except SeifertError as exc:
            rep["warnings"].append(f"{type(exc).__name__}: {exc}")
        else:
            rep["invariants"]["radii"] = {"mode": form.radii.mode.value, "R": [fmt(r) for r in form.radii.R]}
            rep["invariants"]["tubes"] = export_tubes(form.tubes)
            rep["invariants"]["lutz_census"] = sorted(i + 1 for i in form.census)
            rep["_tubes"] = form.tubes
    return rep


def _put_verdict(rep: dict, verdict) -> None:
    rep["verdict"] = verdict.kind.value
    rep["witness"] = verdict.witness.to_record() if verdict.witness else None
    rep["trace"] = list(verdict.trace)
    rep["warnings"].extend(verdict.notes)


def _run_cable(text: str, args: argparse.Namespace) -> dict:
    try:
        p, q = (int(x) for x in text.replace(",", " ").split())
    except ValueError as exc:
        raise InvalidInput(f"cable expects 'P Q', got {text!r}") from exc
    parent = args.parent
    if parent.lower() in ("tight", "overtwisted"):
        state = ParentState(parent.lower())
    else:
        state = parent_state(classify(parse_multilink(parent)))
    spec = CablingSpec(p, q, args.u, args.v, args.components, state)
    rep = _report(f"cable p={p} q={q} u={args.u} v={args.v} components={args.components} parent={parent}")
    norm = normalize_basis(spec)
    sign = cabling_sign(norm)
    rep["invariants"] = {"normalized": {"p": norm.p, "q": norm.q, "u": norm.u, "v": norm.v}, "eps": sign.eps, "eps_n": sign.eps_n}
    _put_verdict(rep, classify_cabling(spec))
    return rep


def emit_json(report: dict, indent: Optional[int] = 2) -> str:
    public = {k: v for k, v in report.items() if not k.startswith("_")}
    return json.dumps(public, sort_keys=True, indent=indent)


def emit_text(report: dict) -> str:
    lines = [f"input: {report['input']}"]
    for key, value in sorted(report["invariants"].items()):
        if key != "tubes":
            lines.append(f"  {key}: {value}")
    if report["verdict"] is not None:
        lines.append(f"verdict: {report['verdict']}")
    if report["witness"]:
        lines.append(f"witness: {report['witness']}")
    if report["trace"]:
        lines.append("trace: " + " -> ".join(report["trace"]))
    for w in report["warnings"]:
        lines.append(f"warning: {w}")
    return "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="seifert-contact", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        sp = sub.add_parser(name)
        if name == "cable":
            sp.add_argument("spec", nargs="?", help="'P Q'; read one per line from stdin when omitted")
            sp.add_argument("--u", type=int, default=0)
            sp.add_argument("--v", type=int, default=1)
            sp.add_argument("--components", type=int, default=1)
            sp.add_argument("--parent", default="tight", help="tight, overtwisted, or a multilink spec")
        else:
            sp.add_argument("spec", nargs="?", help="e.g. 'sigma(1,2,3) m=[1]'; stdin batch mode when omitted")
            sp.add_argument("--b", help="comma-separated numerators overriding b=[...] (use --b=-1,2)")
        sp.add_argument("--json", action="store_true", help="emit JSON")
        if name == "curve":
            sp.add_argument("--svg", help="write an SVG plot of the tube curves")
    return parser


def _answer(args, text: str, out, batch: bool) -> int:
    try:
        rep = run(args.command, text, args)
    except InvalidInput as exc:
        if args.json:
            rep = _report(text.strip())
            rep["warnings"].append(str(exc))
            print(emit_json(rep, None if batch else 2), file=out)
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    print(emit_json(rep, None if batch else 2) if args.json else emit_text(rep), file=out)
    svg_path = getattr(args, "svg", None)
    if svg_path and "_tubes" in rep:
        try:
            with open(svg_path, "w", encoding="utf-8") as fh:
                fh.write(emit_svg(rep["_tubes"], rep["input"]))
        except OSError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_IO
    return EXIT_OK


def main(argv: Optional[Sequence[str]] = None, stdin=None, stdout=None) -> int:
    args = build_parser().parse_args(argv)
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    if args.spec is not None:
        return _answer(args, args.spec, stdout, batch=False)
    code = EXIT_OK
    for line in stdin:
        if line.strip() and not line.lstrip().startswith("#"):
            code = max(code, _answer(args, line.strip(), stdout, batch=True))
    return code


if __name__ == "__main__":
    sys.exit(main())
