"""Command-line interface: structure reports for Lie algebras given by
structure constants, in human-readable or JSON form.

Exit codes: 0 success, 1 usage, 2 parse/validation, 3 certification failure
or analytic/oracle mismatch, 4 enumeration budget exceeded, 5 an undecided
or heuristic verdict was reached under --strict.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from typing import Optional

from .algebra import (
    AlgebraError,
    AntisymmetryViolation,
    JacobiViolation,
    LieAlgebra,
    center,
    derived_series,
    is_nilpotent,
    is_solvable,
    lower_central_series,
)
from .chief import chief_series, connected, solvable_radical
from .corpus import ParseError, builtin, load
from .crowns import all_crowns, prefrattini
from .fields import GF, QQ, Field, FieldError, field_to_doc
from .linalg import Subspace
from .oracle import BudgetExceeded, EnumBudget, oracle_check
from .primitive import classify_primitive
from .status import CertificationFailure

SCHEMA_VERSION = 1

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PARSE = 2
EXIT_CERT = 3
EXIT_BUDGET = 4
EXIT_UNDECIDED = 5


def parse_field(text: str) -> Field:
    t = text.strip().lower()
    if t in ("q", "qq", "rationals"):
        return QQ
    m = re.fullmatch(r"gf\(?(\d+)\)?", t)
    if m:
        return GF(int(m.group(1)))
    raise FieldError(f"cannot parse field {text!r}; use q or gfP")


def space_doc(U: Subspace) -> list:
    F = U.field
    return [[F.scalar_to_str(x) for x in row] for row in U.basis]


def space_str(L: LieAlgebra, U: Subspace) -> str:
    if U.is_zero():
        return "0"
    if U.is_full():
        return "L"
    F = U.field
    parts = []
    for row in U.basis:
        terms = []
        for name, c in zip(L.basis_names, row):
            if F.is_zero(c):
                continue
            cs = F.scalar_to_str(c)
            if cs == "1":
                terms.append(name)
            elif cs == "-1":
                terms.append(f"-{name}")
            else:
                terms.append(f"{cs}*{name}")
        parts.append("+".join(terms).replace("+-", "-"))
    return "span{" + ", ".join(parts) + "}"


def factor_doc(idx: int, f) -> dict:
    return {
        "index": idx,
        "A": space_doc(f.A),
        "B": space_doc(f.B),
        "dim": f.dim,
        "abelian": f.abelian,
        "centralizer": space_doc(f.centralizer),
        "supplemented": f.supplemented,
        "complemented": f.complemented,
        "frattini": f.frattini,
    }


def build_report(L: LieAlgebra, name: Optional[str]) -> dict:
    series = chief_series(L)
    crowns = all_crowns(L, series)
    witness = classify_primitive(L)
    rad, rad_status = solvable_radical(L)
    solvable = is_solvable(L)
    report = {
        "schema_version": SCHEMA_VERSION,
        "algebra": {
            "name": name,
            "field": field_to_doc(L.field),
            "dim": L.dim,
            "basis": list(L.basis_names),
        },
        "solvable": solvable,
        "nilpotent": is_nilpotent(L),
        "chief_series": {
            "chain": [space_doc(S) for S in series.chain],
            "factors": [factor_doc(i, f) for i, f in enumerate(series.factors)],
            "status": str(series.status),
        },
        "crowns": [
            {
                "numerator": space_doc(c.C),
                "denominator": space_doc(c.R),
                "rank": c.rank,
                "abelian": c.class_rep.abelian,
                "status": str(c.status),
            }
            for c in crowns
        ],
        "primitive": {
            "verdict": witness.verdict,
            "reason": witness.reason,
            "monolith": space_doc(witness.monolith) if witness.monolith else None,
            "core_free_maximal": space_doc(witness.core_free_maximal)
            if witness.core_free_maximal
            else None,
            "common_complement": space_doc(witness.common_complement)
            if witness.common_complement
            else None,
            "status": str(witness.status),
        },
        "radical": {"space": space_doc(rad), "status": str(rad_status)},
        "prefrattini": space_doc(prefrattini(L, series=series)) if solvable else None,
    }
    return report


def render_report(L: LieAlgebra, report: dict) -> str:
    lines = []
    alg = report["algebra"]
    fieldname = "Q" if alg["field"]["kind"] == "Q" else f"GF({alg['field']['p']})"
    lines.append(
        f"algebra {alg['name'] or '(file input)'} of dimension {alg['dim']} over {fieldname}"
    )
    lines.append(
        f"  solvable: {report['solvable']}   nilpotent: {report['nilpotent']}"
    )
    lines.append("chief series:")
    chain = report["chief_series"]["chain"]
    factors = report["chief_series"]["factors"]
    for i, f in enumerate(factors):
        flags = []
        flags.append("abelian" if f["abelian"] else "nonabelian")
        if f["frattini"]:
            flags.append("frattini")
        if f["supplemented"]:
            flags.append("supplemented")
        if f["complemented"] is True:
            flags.append("complemented")
        elif f["complemented"] is None:
            flags.append("complemented?")
        lines.append(
            f"  [{i}] dim {f['dim']}: {_chain_str(L, report, i + 1)} / {_chain_str(L, report, i)}"
            f"  ({', '.join(flags)})"
        )
    lines.append("crowns:")
    for c in report["crowns"]:
        lines.append(
            f"  C = {_rows_str(L, c['numerator'])}, R = {_rows_str(L, c['denominator'])}, rank {c['rank']}"
        )
    prim = report["primitive"]
    lines.append(f"primitive: {prim['verdict']}" + (f" ({prim['reason']})" if prim["reason"] else ""))
    lines.append(f"radical: {_rows_str(L, report['radical']['space'])}")
    if report["prefrattini"] is not None:
        lines.append(f"prefrattini: {_rows_str(L, report['prefrattini'])}")
    return "\n".join(lines)


def _parse_rows(L: LieAlgebra, rows: list) -> Subspace:
    F = L.field
    return Subspace.from_vectors(
        F, L.dim, [[F.scalar_from_str(x) for x in row] for row in rows]
    )


def _rows_str(L: LieAlgebra, rows: list) -> str:
    return space_str(L, _parse_rows(L, rows))


def _chain_str(L: LieAlgebra, report: dict, i: int) -> str:
    return _rows_str(L, report["chief_series"]["chain"][i])


def _load_algebra(args) -> tuple[LieAlgebra, Optional[str]]:
    if args.builtin and args.input:
        raise UsageError("give either --builtin or --input, not both")
    if args.builtin:
        field = parse_field(args.field) if args.field else QQ
        return builtin(args.builtin, field), args.builtin
    if args.input:
        with open(args.input) as fh:
            return load(fh.read()), None
    raise UsageError("an algebra is required: --builtin NAME or --input FILE")


class UsageError(ValueError):
    pass


def _budget(args) -> EnumBudget:
    return EnumBudget(
        max_subspaces=args.max_subspaces, max_field_order=args.max_field_order
    )


def _emit(args, payload: dict, human: str) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True, indent=2))
    else:
        print(human)


def _strict_gate(args, *statuses) -> int:
    if args.strict and any(
        s is not None and str(s) != "certified" and not str(s).startswith("certified")
        for s in statuses
    ):
        return EXIT_UNDECIDED
    return EXIT_OK


COMMANDS = (
    "validate", "info", "chief-series", "factors", "crowns", "prefrattini",
    "primitive", "connected", "radical", "oracle-check", "report",
)


def main(argv: Optional[list] = None) -> int:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", help="algebra document file")
    common.add_argument("--builtin", help="builtin fixture name")
    common.add_argument("--field", help="field for builtins: q or gfP", default="q")
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--strict", action="store_true",
                        help="nonzero exit on heuristic or undecided results")
    common.add_argument("--max-subspaces", type=int, default=500_000)
    common.add_argument("--max-field-order", type=int, default=4)
    parser = argparse.ArgumentParser(
        prog="liestruct",
        description="chief-factor structure reports for finite-dimensional Lie algebras",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for cmd in COMMANDS:
        p = sub.add_parser(cmd, parents=[common])
        if cmd == "connected":
            p.add_argument("selectors", nargs=2, type=int,
                           help="two factor indices into the computed chief series")
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return _dispatch(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ParseError, FieldError, AntisymmetryViolation, JacobiViolation) as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except AlgebraError as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except CertificationFailure as exc:
        print(f"certification failure: {exc}", file=sys.stderr)
        return EXIT_CERT


def _dispatch(args) -> int:
    cmd = args.command
    L, name = _load_algebra(args)
    if cmd == "validate":
        _emit(args, {"schema_version": SCHEMA_VERSION, "valid": True,
                     "dim": L.dim, "field": field_to_doc(L.field)},
              f"valid Lie algebra of dimension {L.dim}")
        return EXIT_OK
    if cmd == "info":
        ds = derived_series(L)
        lcs = lower_central_series(L)
        payload = {
            "schema_version": SCHEMA_VERSION,
            "dim": L.dim,
            "field": field_to_doc(L.field),
            "basis": list(L.basis_names),
            "solvable": is_solvable(L),
            "nilpotent": is_nilpotent(L),
            "center": space_doc(center(L)),
            "derived_dims": [d.dim for d in ds],
            "lower_central_dims": [d.dim for d in lcs],
        }
        human = (
            f"dimension {L.dim}; solvable {payload['solvable']}; nilpotent {payload['nilpotent']}; "
            f"derived dims {payload['derived_dims']}; center {space_str(L, center(L))}"
        )
        _emit(args, payload, human)
        return EXIT_OK
    if cmd in ("chief-series", "factors"):
        series = chief_series(L)
        payload = {
            "schema_version": SCHEMA_VERSION,
            "chain": [space_doc(S) for S in series.chain],
            "factors": [factor_doc(i, f) for i, f in enumerate(series.factors)],
            "status": str(series.status),
        }
        lines = [
            f"[{i}] dim {f.dim} "
            + ("abelian" if f.abelian else "nonabelian")
            + (", frattini" if f.frattini else "")
            + (", complemented" if f.complemented else "")
            + f": {space_str(L, f.A)} / {space_str(L, f.B)}"
            for i, f in enumerate(series.factors)
        ]
        _emit(args, payload, "\n".join(lines))
        return _strict_gate(args, series.status)
    if cmd == "crowns":
        series = chief_series(L)
        crowns = all_crowns(L, series)
        payload = {
            "schema_version": SCHEMA_VERSION,
            "crowns": [
                {
                    "numerator": space_doc(c.C),
                    "denominator": space_doc(c.R),
                    "rank": c.rank,
                    "abelian": c.class_rep.abelian,
                    "status": str(c.status),
                }
                for c in crowns
            ],
        }
        lines = [
            f"crown C = {space_str(L, c.C)}, R = {space_str(L, c.R)}, rank {c.rank}"
            for c in crowns
        ]
        _emit(args, payload, "\n".join(lines))
        return _strict_gate(args, *(c.status for c in crowns))
    if cmd == "prefrattini":
        if not is_solvable(L):
            raise AlgebraError("prefrattini subalgebras require a solvable algebra")
        P = prefrattini(L)
        _emit(args, {"schema_version": SCHEMA_VERSION, "prefrattini": space_doc(P)},
              f"prefrattini: {space_str(L, P)}")
        return EXIT_OK
    if cmd == "primitive":
        w = classify_primitive(L)
        payload = {
            "schema_version": SCHEMA_VERSION,
            "verdict": w.verdict,
            "reason": w.reason,
            "monolith": space_doc(w.monolith) if w.monolith else None,
            "core_free_maximal": space_doc(w.core_free_maximal) if w.core_free_maximal else None,
            "common_complement": space_doc(w.common_complement) if w.common_complement else None,
            "status": str(w.status),
        }
        human = f"{w.verdict}" + (f" ({w.reason})" if w.reason else "")
        _emit(args, payload, human)
        if w.verdict == "undecided" and args.strict:
            return EXIT_UNDECIDED
        return _strict_gate(args, w.status)
    if cmd == "connected":
        series = chief_series(L)
        try:
            i, j = args.selectors
            f1, f2 = series.factors[i], series.factors[j]
        except IndexError as exc:
            raise UsageError(f"bad factor selectors: {exc}") from exc
        ok, witness, status = connected(f1, f2)
        payload = {
            "schema_version": SCHEMA_VERSION,
            "connected": ok,
            "kind": witness.kind if witness else None,
            "kernel": space_doc(witness.kernel) if witness and witness.kernel else None,
            "status": str(status),
        }
        if ok and witness.kind == "type3":
            human = f"connected via N = {space_str(L, witness.kernel)}, type 3 quotient"
        elif ok:
            human = "connected (module-isomorphic)"
        else:
            human = "not connected"
        _emit(args, payload, human)
        if str(status).startswith("undecided") and args.strict:
            return EXIT_UNDECIDED
        return _strict_gate(args, status)
    if cmd == "radical":
        rad, status = solvable_radical(L)
        _emit(args, {"schema_version": SCHEMA_VERSION, "radical": space_doc(rad),
                     "status": str(status)},
              f"radical: {space_str(L, rad)}")
        return _strict_gate(args, status)
    if cmd == "oracle-check":
        problems = oracle_check(L, _budget(args))
        payload = {"schema_version": SCHEMA_VERSION, "agree": not problems,
                   "problems": problems}
        human = "all checks agree" if not problems else "\n".join(
            f"mismatch: {p}" for p in problems
        )
        _emit(args, payload, human)
        return EXIT_OK if not problems else EXIT_CERT
    if cmd == "report":
        report = build_report(L, name)
        _emit(args, report, render_report(L, report))
        statuses = [report["chief_series"]["status"], report["primitive"]["status"],
                    report["radical"]["status"]] + [c["status"] for c in report["crowns"]]
        return _strict_gate(args, *statuses)
    raise UsageError(f"unknown command {cmd}")


if __name__ == "__main__":
    sys.exit(main())
