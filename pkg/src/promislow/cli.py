"""Command-line front end.

Exit codes: 0 success (or Unit for ``verify``), 1 NonUnit / failed check,
2 input error, 3 internal error (an adjugate inverse that fails to
round-trip).  Reports are deterministic for identical inputs.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import replace
from pathlib import Path
from typing import Any, Optional, Sequence

from . import __version__
from .algebra import check_modulus
from .analysis import BudgetExceeded, length_L, mirowicz_e, parse_search_spec, quotient_xy, search_units, unique_products
from .expr import parse_ring_element
from .group import GEN_A, GEN_B, PElement
from .groupring import ZeroElement, ring_project, translate
from .matembed import InverseOutsideImage, decide_unit, det4, embed
from .units import UnitCertificate, counterexample, family_alpha


class InputError(Exception):
    pass


def _check(name: str, passed: bool) -> dict:
    return {"name": name, "passed": bool(passed)}


def certificate_report(cert: UnitCertificate) -> dict:
    return {
        "element": str(cert.alpha),
        "support_size": len(cert.alpha),
        "is_unit": True,
        "is_trivial_unit": cert.alpha.is_trivial_unit(),
        "inverse": str(cert.alpha_inv),
        "inverse_support_size": len(cert.alpha_inv),
        "method": cert.method,
        "verified": "both sides" if cert.verified else "FAILED",
        "checks": [
            _check("inverse*alpha == 1", cert.left_ok),
            _check("alpha*inverse == 1", cert.right_ok),
        ],
    }


def emit(report: dict, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(report, indent=2))
        return
    for key, value in report.items():
        if key == "checks":
            for chk in value:
                print(f"check: {chk['name']}: {'pass' if chk['passed'] else 'FAIL'}")
        elif key == "matrix":
            print("matrix:")
            for row in value:
                print("  " + " | ".join(row))
        elif isinstance(value, list):
            print(f"{key}:")
            for item in value:
                print(f"  {json.dumps(item) if isinstance(item, dict) else item}")
        elif isinstance(value, dict):
            print(f"{key}:")
            for k, v in value.items():
                print(f"  {k}: {v}")
        else:
            print(f"{key}: {value}")


def _read_element(text: str, modulus: int):
    try:
        return parse_ring_element(text, modulus)
    except ValueError as exc:
        raise InputError(str(exc)) from None


def _read_pelements(path: str) -> list[PElement]:
    try:
        lines = Path(path).read_text().splitlines()
    except OSError as exc:
        raise InputError(str(exc)) from None
    out = []
    for lineno, raw in enumerate(lines, 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            out.append(PElement.parse(line))
        except ValueError as exc:
            raise InputError(f"{path}:{lineno}: {exc}") from None
    return out


def cmd_verify(args) -> int:
    alpha = _read_element(args.element, args.modulus)
    try:
        cert = decide_unit(alpha)
    except ZeroElement as exc:
        raise InputError(str(exc)) from None
    det = det4(embed(alpha))
    if cert is None:
        report = {
            "element": str(alpha),
            "support_size": len(alpha),
            "is_unit": False,
            "inverse": None,
            "determinant": str(det),
            "checks": [_check("determinant is a Laurent monomial", False)],
        }
        emit(report, args.format)
        return 1
    report = certificate_report(cert)
    report["determinant"] = str(det)
    report["checks"].insert(0, _check("determinant is a Laurent monomial", True))
    if args.matrix:
        report["matrix"] = [[str(e) for e in row] for row in embed(alpha)]
    emit(report, args.format)
    return 0


def cmd_counterexample(args) -> int:
    cert = counterexample()
    emit(certificate_report(cert), args.format)
    return 0 if cert.verified else 1


def cmd_family(args) -> int:
    if args.k < 0:
        raise InputError("--k must be non-negative")
    cert = family_alpha(args.k)
    report = certificate_report(cert)
    report["k"] = args.k
    if args.project:
        image = ring_project(translate(GEN_A.inverse(), cert.alpha, GEN_B))
        target = mirowicz_e(4 * args.k + 2, 0)
        report["projection"] = str(image)
        report["checks"].append(_check(f"pi(a^-1 alpha_{args.k} b) == e_{{{4 * args.k + 2},0}}", image == target))
    emit(report, args.format)
    return 0 if all(c["passed"] for c in report["checks"]) else 1


def cmd_project(args) -> int:
    alpha = _read_element(args.element, args.modulus)
    emit({"element": str(alpha), "projection": str(ring_project(alpha))}, args.format)
    return 0


def cmd_length(args) -> int:
    alpha = _read_element(args.element, args.modulus)
    try:
        value = length_L(alpha, args.generators)
    except ZeroElement as exc:
        raise InputError(str(exc)) from None
    images = sorted({str(quotient_xy(e)) for e in alpha.support()})
    emit({"element": str(alpha), "length_L": value, "quotient_images": images}, args.format)
    return 0


def cmd_unique_products(args) -> int:
    A, B = _read_pelements(args.A), _read_pelements(args.B)
    if not A or not B:
        raise InputError("A and B must be non-empty")
    rep = unique_products(A, B)
    report: dict[str, Any] = {
        "size_A": len(set(A)),
        "size_B": len(set(B)),
        "products": rep.total,
        "distinct_products": len(rep.entries),
        "unique_elements": [str(e) for e in rep.unique_elements],
        "multiplicities": {str(e): c for e, c in rep.entries.items()},
    }
    emit(report, args.format)
    return 0


def cmd_search(args) -> int:
    try:
        spec = parse_search_spec(Path(args.spec).read_text())
        if args.budget is not None:
            spec = replace(spec, budget=args.budget)
    except (OSError, ValueError) as exc:
        raise InputError(str(exc)) from None

    def progress(done: int, total: int) -> None:
        if args.progress:
            print(f"searched {done}/{total}", file=sys.stderr)

    try:
        found = search_units(spec, workers=args.workers, progress=progress)
    except BudgetExceeded as exc:
        raise InputError(str(exc)) from None
    report = {
        "mode": spec.mode,
        "modulus": spec.modulus,
        "cardinality": spec.cardinality(),
        "nontrivial_units": len(found),
        "units": [certificate_report(c) for c in found],
    }
    emit(report, args.format)
    return 0


def cmd_selftest(args) -> int:
    from .acceptance import run_all

    return 0 if run_all() else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="promislow", description="Exact arithmetic in K[P] for the Hantzsche-Wendt group P.")
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument("-p", "--modulus", type=int, default=2, help="prime field size (default 2)")
    parser.add_argument("--format", choices=("text", "json"), default="text")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="decide whether an element is a unit")
    p.add_argument("element")
    p.add_argument("--matrix", action="store_true", help="include the 4x4 embedding")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("counterexample", help="print the non-trivial unit and its inverse")
    p.set_defaults(func=cmd_counterexample)

    p = sub.add_parser("family", help="the unit alpha_k")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--project", action="store_true", help="check the image in F_2[D_inf]")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("project", help="image under a -> t, b -> b")
    p.add_argument("element")
    p.set_defaults(func=cmd_project)

    p = sub.add_parser("length", help="dihedral length proxy")
    p.add_argument("element")
    p.add_argument("--generators", choices=("reflections", "ab"), default="reflections")
    p.set_defaults(func=cmd_length)

    p = sub.add_parser("unique-products", help="multiplicity census of A*B")
    p.add_argument("--A", required=True, metavar="FILE")
    p.add_argument("--B", required=True, metavar="FILE")
    p.set_defaults(func=cmd_unique_products)

    p = sub.add_parser("search", help="bounded exhaustive unit search")
    p.add_argument("--spec", required=True, metavar="FILE")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--budget", type=int)
    p.add_argument("--progress", action="store_true")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("selftest", help="run the acceptance criteria")
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        check_modulus(args.modulus)
        return args.func(args)
    except (InputError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except InverseOutsideImage as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
