"""Command-line front end: subcommand dispatch, JSON codecs, run manifests.

Exit codes: 0 on success, 1 on a domain error (ArithdtError), 2 on usage
errors (argparse).  All numeric payloads are exact -- rationals are
serialized as strings, never floats -- and output bytes are deterministic
for fixed inputs and package version.  When writing to a file, a manifest
describing the invocation is written next to it; JSON written to stdout
embeds the same manifest.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from dataclasses import dataclass
from fractions import Fraction

from . import __version__
from .castelnuovo import gv_compare
from .dt import partition_function
from .ekl import ekl_class
from .errors import ArithdtError, InputDataError
from .fields import QQ, parse_field_label
from .gw import GwElement, diagonalize_symmetric
from .motivic import chi_a1, chi_complex, chi_real
from .multipoly import MultiPoly
from .nearby import SncData, local_nearby_class, nearby_class, virtual_class_critical_locus
from .partitions import count_plane_partitions, count_symmetric_plane_partitions

DEFAULT_MAX_ORDER = 30


def max_series_order() -> int:
    raw = os.environ.get("ARITHDT_MAX_ORDER")
    if raw is None:
        return DEFAULT_MAX_ORDER
    try:
        value = int(raw)
    except ValueError:
        raise InputDataError(f"ARITHDT_MAX_ORDER must be an integer, got {raw!r}") from None
    if value < 1:
        raise InputDataError("ARITHDT_MAX_ORDER must be positive")
    return value


@dataclass
class RunManifest:
    subcommand: str
    parameters: dict
    artifact_version: str
    outputs: list

    def to_json_dict(self) -> dict:
        return {
            "subcommand": self.subcommand,
            "parameters": self.parameters,
            "artifact_version": self.artifact_version,
            "outputs": self.outputs,
        }


def _dump(payload: dict) -> str:
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def _emit(args, manifest: RunManifest, payload: dict, text: str) -> None:
    out_path = getattr(args, "out", None)
    as_json = getattr(args, "json", False) or out_path is not None
    if out_path:
        manifest.outputs.append(out_path)
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(_dump(payload))
        with open(out_path + ".manifest.json", "w", encoding="utf-8") as fh:
            fh.write(_dump(manifest.to_json_dict()))
        return
    manifest.outputs.append("stdout")
    if as_json:
        payload = dict(payload)
        payload["manifest"] = manifest.to_json_dict()
        sys.stdout.write(_dump(payload))
    else:
        sys.stdout.write(text + "\n")


# -- GW expression parsing -------------------------------------------------------

_GW_TOKEN = re.compile(r"\s*(H|<\s*(-?\d+(?:/\d+)?)\s*>|\+|-|(\d+)\s*\*)\s*")


def parse_gw(text: str, field) -> GwElement:
    """Parse '3*<1> + 2*<-1> - H' style expressions."""
    pos = 0
    sign = 1
    coeff = 1
    pending_coeff = False
    result = GwElement.zero(field)
    saw_term = False
    while pos < len(text):
        match = _GW_TOKEN.match(text, pos)
        if not match:
            raise InputDataError(f"cannot parse GW expression at: {text[pos:]!r}")
        token = match.group(1)
        if token == "+":
            if pending_coeff:
                raise InputDataError("dangling coefficient in GW expression")
            sign, coeff = 1, 1
        elif token == "-":
            if pending_coeff:
                raise InputDataError("dangling coefficient in GW expression")
            sign, coeff = -sign, 1
        elif match.group(3) is not None:
            coeff = int(match.group(3))
            pending_coeff = True
        elif token == "H":
            result = result + GwElement.hyperbolic(field) * (sign * coeff)
            sign, coeff, pending_coeff, saw_term = 1, 1, False, True
        else:
            value = Fraction(match.group(2))
            result = result + GwElement.unit(field, value) * (sign * coeff)
            sign, coeff, pending_coeff, saw_term = 1, 1, False, True
        pos = match.end()
    if pending_coeff:
        raise InputDataError("dangling coefficient in GW expression")
    if not saw_term and text.strip() not in ("", "0"):
        raise InputDataError(f"empty GW expression: {text!r}")
    return result


def _polys_from_json(data: dict) -> list[MultiPoly]:
    try:
        variables = tuple(str(v) for v in data["vars"])
        polys = [MultiPoly.from_pairs(variables, pairs) for pairs in data["polys"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise InputDataError(f"malformed polynomial payload: {exc}") from exc
    if not polys:
        raise InputDataError("no polynomials given")
    return polys


# -- subcommand handlers ---------------------------------------------------------


def _cmd_gw(args) -> tuple[dict, str]:
    field = parse_field_label(args.field)
    a = parse_gw(args.a, field)
    op = args.op
    if op in ("add", "mul", "sub", "equal"):
        if args.b is None:
            raise InputDataError(f"--b is required for op {op}")
        b = parse_gw(args.b, field)
        if op == "add":
            value = a + b
        elif op == "sub":
            value = a - b
        elif op == "mul":
            value = a * b
        else:
            verdict = a.gw_equal(b)
            return {"equal": verdict}, str(verdict).lower()
        text = value.render(contract_h=args.contract_h)
        return {"value": value.to_json_dict(), "rendered": text}, text
    if op == "rank":
        return {"rank": a.rank()}, str(a.rank())
    if op == "signature":
        return {"signature": a.signature()}, str(a.signature())
    if op == "discriminant":
        disc = a.discriminant()
        return {"discriminant": disc.rep}, f"<{disc.rep}>"
    if op == "diagonalize":
        if args.matrix is None:
            raise InputDataError("--matrix is required for op diagonalize")
        rows = json.loads(args.matrix)
        value = diagonalize_symmetric(rows, field)
        text = value.render(contract_h=args.contract_h)
        return {"value": value.to_json_dict(), "rendered": text}, text
    raise InputDataError(f"unknown gw op {op!r}")


def _series_payload(series, renderer) -> tuple[dict, str]:
    lines = [f"t^{n}: {renderer(c)}" for n, c in enumerate(series.coeffs)]
    return {"series": series.to_json_dict()}, "\n".join(lines)


def _cmd_dt_a3(args) -> tuple[dict, str]:
    cap = max_series_order()
    if args.order > cap:
        raise InputDataError(f"order {args.order} exceeds the cap {cap} (ARITHDT_MAX_ORDER)")
    result = partition_function(args.order, parse_field_label(args.field))
    kind = args.output
    if kind == "motivic":
        return _series_payload(result.motivic, lambda c: c.render())
    if kind == "arithmetic":
        return _series_payload(result.arithmetic, lambda c: c.render())
    if kind == "real":
        return _series_payload(result.real, str)
    payload, _ = _series_payload(result.complex, str)
    text = ", ".join(str(c) for c in result.complex.coeffs)
    return payload, text


def _cmd_ekl(args) -> tuple[dict, str]:
    with open(args.map, encoding="utf-8") as fh:
        data = json.load(fh)
    system = _polys_from_json(data)
    field = parse_field_label(args.field)
    result = ekl_class(system, field)
    cls = result.gw_class
    payload = {
        "class": cls.to_json_dict(),
        "rendered": cls.render(contract_h=args.contract_h),
        "rank": cls.rank(),
        "signature": cls.signature() if field.is_ordered else None,
        "algebra_dimension": result.rank,
    }
    text = (
        f"{payload['rendered']}\nrank: {payload['rank']}"
        + (f"\nsignature: {payload['signature']}" if field.is_ordered else "")
    )
    return payload, text


def _cmd_nearby(args) -> tuple[dict, str]:
    with open(args.data, encoding="utf-8") as fh:
        data = SncData.from_json_dict(json.load(fh))
    cls = local_nearby_class(data) if args.local else nearby_class(data)
    key = "local_nearby_class" if args.local else "nearby_class"
    payload = {key: cls.to_json_dict(), "rendered": cls.render()}
    lines = [f"{key}: {cls.render()}"]
    if data.central_fiber_class is not None and not args.local:
        virt = virtual_class_critical_locus(cls, data.central_fiber_class, data.ambient_dimension)
        payload["virtual_class"] = virt.to_json_dict()
        lines.append(f"virtual_class: {virt.render()}")
    payload["euler"] = {
        "complex": chi_complex(cls),
        "real": chi_real(cls).to_json_dict(),
        "a1": chi_a1(cls, QQ).to_json_dict(),
    }
    return payload, "\n".join(lines)


def _cmd_gv(args) -> tuple[dict, str]:
    report = gv_compare(args.m, parse_field_label(args.field))
    payload = {
        "m": report.m,
        "fiber_dim": report.fiber_dim,
        "direct": report.direct.to_json_dict(),
        "rendered": report.direct.render(),
        "rank": report.rank_direct,
    }
    lines = [f"m={report.m} (N={report.fiber_dim}): {report.direct.render()}"]
    if args.compare:
        payload["compare"] = {
            "closed": report.closed.to_json_dict() if report.closed else None,
            "closed_error": report.closed_error,
            "rank_closed": str(report.rank_closed),
            "ranks_agree": report.ranks_agree,
            "signatures_agree": report.signatures_agree,
            "gw_equal": report.gw_equal_verdict,
            "alpha_factor_match": report.alpha_factor_match,
            "description": report.description,
        }
        lines.append(report.description)
    return payload, "\n".join(lines)


def _cmd_oracle(args) -> tuple[dict, str]:
    if args.kind == "pp":
        value = count_plane_partitions(args.n)
    else:
        value = count_symmetric_plane_partitions(args.n)
    return {"kind": args.kind, "n": args.n, "count": value}, str(value)


def _cmd_selftest(args) -> tuple[dict, str]:
    from .selftest import run_selftest

    report = run_selftest()
    lines = [f"{'PASS' if ok else 'FAIL'} {name}" for name, ok in report]
    ok = all(flag for _, flag in report)
    lines.append("selftest: " + ("all checks passed" if ok else "FAILURES PRESENT"))
    if not ok:
        raise ArithdtError("\n".join(lines))
    return {"checks": [{"name": n, "ok": o} for n, o in report]}, "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="arithdt",
        description="Exact Grothendieck-Witt / motivic computations and refined DT-type counts",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def common(p):
        p.add_argument("--json", action="store_true", help="emit JSON to stdout")
        p.add_argument("--out", help="write JSON payload to this path (with manifest)")

    p = sub.add_parser("gw", help="Grothendieck-Witt ring operations")
    p.add_argument("--op", required=True,
                   choices=["add", "sub", "mul", "equal", "rank", "signature",
                            "discriminant", "diagonalize"])
    p.add_argument("--a", default="0", help="GW expression, e.g. '3*<1> + 2*<-1>' or 'H'")
    p.add_argument("--b", help="second GW expression")
    p.add_argument("--matrix", help="JSON rows of a symmetric rational matrix")
    p.add_argument("--field", default="Q", help="Q, R, C, or Fp (e.g. F5)")
    p.add_argument("--contract-h", action="store_true", dest="contract_h")
    common(p)
    p.set_defaults(handler=_cmd_gw)

    p = sub.add_parser("dt-a3", help="degree-zero DT partition function of affine 3-space")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--output", default="complex",
                   choices=["motivic", "arithmetic", "complex", "real"])
    p.add_argument("--field", default="Q")
    common(p)
    p.set_defaults(handler=_cmd_dt_a3)

    p = sub.add_parser("ekl", help="local degree of a polynomial map at the origin")
    p.add_argument("--map", required=True, help="JSON file with vars and polys")
    p.add_argument("--field", default="Q")
    p.add_argument("--contract-h", action="store_true", dest="contract_h")
    common(p)
    p.set_defaults(handler=_cmd_ekl)

    p = sub.add_parser("nearby", help="nearby class from SNC stratification data")
    p.add_argument("--data", required=True, help="JSON file with dim, strata, x0_class")
    p.add_argument("--local", action="store_true", help="treat classes as fiber data")
    common(p)
    p.set_defaults(handler=_cmd_nearby)

    p = sub.add_parser("gv", help="refined genus-bound invariants of the quintic")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--compare", action="store_true")
    p.add_argument("--field", default="Q")
    common(p)
    p.set_defaults(handler=_cmd_gv)

    p = sub.add_parser("oracle", help="brute-force plane partition counts")
    p.add_argument("kind", choices=["pp", "spp"])
    p.add_argument("--n", type=int, required=True)
    common(p)
    p.set_defaults(handler=_cmd_oracle)

    p = sub.add_parser("selftest", help="run the built-in invariant suite")
    common(p)
    p.set_defaults(handler=_cmd_selftest)

    return parser


def _manifest_parameters(args) -> dict:
    skip = {"handler", "subcommand", "json", "out"}
    return {
        key: value
        for key, value in sorted(vars(args).items())
        if key not in skip and value is not None
    }


def dispatch(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    manifest = RunManifest(
        subcommand=args.subcommand,
        parameters=_manifest_parameters(args),
        artifact_version=__version__,
        outputs=[],
    )
    try:
        payload, text = args.handler(args)
    except ArithdtError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    _emit(args, manifest, payload, text)
    return 0


def main() -> None:
    sys.exit(dispatch())
