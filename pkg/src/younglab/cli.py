"""Batch driver: enumeration commands, verification sweeps, and exact
certificates with deterministic output.

Exit status: 0 on success, 1 when a verification sweep finds a
counterexample, 2 on usage errors.  Errors go to stderr as a single JSON
object; timing also goes to stderr so that stdout stays byte-identical
across runs.  Rationals serialize as "p/q" strings ("p" for integers).
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional

from .characters import (
    class_size,
    class_types,
    conjugate_twist_check,
    eq1_check,
    irreducible_characters,
    lemma1_check,
    theorem1_check,
    theorem1_components,
)
from .errors import YounglabError
from .forms import (
    example4_check,
    format_form,
    specht_poly,
    statement2_check,
    theorem5_check,
    two_row_decomposition,
)
from .linsys import (
    build_flow_instance,
    build_system3,
    polymorphism_feasibility,
    statement1_check,
)
from .partitions import (
    enumerate_partitions,
    format_partition,
    parse_partition,
    standard_count,
    successors,
)
from .tableaux import (
    enumerate_ssyt,
    enumerate_standard,
    eq2_check,
    format_tableau,
    kostka,
    theorem4_bijection,
)

VERIFY_CHECKS = (
    "theorem1",
    "youngs-rule",
    "eq1",
    "eq2",
    "lemma1",
    "dimension",
    "conjugate-twist",
)


def frac_str(x) -> str:
    f = Fraction(x)
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


@dataclass
class VerificationReport:
    """Outcome of one verification sweep; fails iff a counterexample exists."""

    check_name: str
    parameters: dict
    counterexamples: list = field(default_factory=list)
    artifact: Optional[dict] = None

    @property
    def status(self) -> str:
        return "fail" if self.counterexamples else "pass"

    def payload(self) -> dict:
        out = {
            "check": self.check_name,
            "parameters": self.parameters,
            "status": self.status,
            "counterexamples": self.counterexamples,
        }
        if self.artifact is not None:
            out["artifact"] = self.artifact
        return out


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _tableau_ascii(t) -> str:
    return " / ".join(" ".join(str(x) for x in row) for row in t)


def _emit(args, payload: dict, ascii_lines: list[str], tsv_lines: list[str]) -> None:
    fmt = getattr(args, "format", "ascii")
    if fmt == "json":
        text = json.dumps(payload, indent=2) + "\n"
    elif fmt == "tsv":
        text = "".join(line + "\n" for line in tsv_lines)
    else:
        text = "".join(line + "\n" for line in ascii_lines)
    if getattr(args, "out", None):
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _cmd_partitions(args) -> int:
    parts = enumerate_partitions(args.n)
    payload = {"n": args.n, "count": len(parts), "partitions": [list(p) for p in parts]}
    lines = [format_partition(p) for p in parts]
    _emit(args, payload, lines, lines)
    return 0


def _cmd_kostka(args) -> int:
    mu = parse_partition(args.mu)
    lam = parse_partition(getattr(args, "lambda"))
    value = kostka(mu, lam)
    payload = {"mu": list(mu), "lambda": list(lam), "kostka": value}
    _emit(args, payload, [str(value)], [str(value)])
    return 0


def _cmd_ssyt(args) -> int:
    shape = parse_partition(args.shape)
    weight = tuple(int(s) for s in args.weight.split(",")) if args.weight else ()
    tabs = enumerate_ssyt(shape, weight)
    payload = {
        "shape": list(shape),
        "weight": list(weight),
        "count": len(tabs),
        "tableaux": [[list(row) for row in t] for t in tabs],
    }
    lines = [_tableau_ascii(t) for t in tabs]
    tsv = [format_tableau(t) for t in tabs]
    _emit(args, payload, lines, tsv)
    return 0


def _cmd_bijection(args) -> int:
    lam = parse_partition(getattr(args, "lambda"))
    rho = parse_partition(args.rho)
    cert = theorem4_bijection(lam, rho)
    if not cert.check():
        raise YounglabError("bijection certificate failed verification")
    payload = {
        "lambda": list(lam),
        "rho": list(rho),
        "canonical": cert.canonical,
        "pairs": [
            {
                "mu_tableau": [list(r) for r in p.mu_tableau],
                "removed_symbol": p.removed_symbol,
                "rho_tableau": [list(r) for r in p.rho_tableau],
                "gamma_weight": list(p.gamma_weight),
                "canonical": p.canonical,
            }
            for p in cert.pairs
        ],
    }
    lines = [
        f"{_tableau_ascii(p.mu_tableau)}  -({p.removed_symbol})->  "
        f"{_tableau_ascii(p.rho_tableau)}  [weight {format_partition(p.gamma_weight)}]"
        for p in cert.pairs
    ]
    lines.append(f"pairs: {len(cert.pairs)}  canonical: {cert.canonical}")
    tsv = [
        "\t".join([
            format_tableau(p.mu_tableau), str(p.removed_symbol),
            format_tableau(p.rho_tableau), format_partition(p.gamma_weight),
        ])
        for p in cert.pairs
    ]
    _emit(args, payload, lines, tsv)
    return 0


def _cmd_character_table(args) -> int:
    n = args.n
    chis = irreducible_characters(n)
    types = class_types(n)
    payload = {
        "n": n,
        "partitions": [format_partition(p) for p in chis],
        "classes": [
            {
                "cycle_type": format_partition(rho),
                "class_size": class_size(rho),
                "values": {
                    format_partition(mu): frac_str(chi(rho))
                    for mu, chi in chis.items()
                },
            }
            for rho in types
        ],
    }
    header = ["cycle_type", "class_size"] + [format_partition(mu) for mu in chis]
    rows = [
        [format_partition(rho), str(class_size(rho))]
        + [frac_str(chi(rho)) for chi in chis.values()]
        for rho in types
    ]
    widths = [max(len(h), *(len(r[i]) for r in rows)) for i, h in enumerate(header)]
    ascii_lines = [
        "  ".join(h.rjust(w) for h, w in zip(header, widths)),
    ] + ["  ".join(c.rjust(w) for c, w in zip(row, widths)) for row in rows]
    tsv_lines = ["\t".join(header)] + ["\t".join(row) for row in rows]
    _emit(args, payload, ascii_lines, tsv_lines)
    return 0


def _verify_theorem1(max_n: int) -> VerificationReport:
    report = VerificationReport("theorem1", {"max_n": max_n})
    checked = 0
    for n in range(1, max_n + 1):
        for lam in enumerate_partitions(n):
            checked += 1
            value = theorem1_check(lam)
            common = theorem1_components(lam)
            if value != 1 or common != [(lam, 1, 1)]:
                report.counterexamples.append({
                    "lambda": list(lam),
                    "pairing": frac_str(value),
                    "common": [
                        {"mu": list(mu), "in_rows": a, "in_columns": b}
                        for mu, a, b in common
                    ],
                })
    report.artifact = {"shapes_checked": checked}
    return report


def _verify_youngs_rule(max_n: int) -> VerificationReport:
    from .characters import multiplicity_table

    report = VerificationReport("youngs-rule", {"max_n": max_n})
    checked = 0
    for n in range(1, max_n + 1):
        table = multiplicity_table(n)
        for mu in enumerate_partitions(n):
            for lam in enumerate_partitions(n):
                checked += 1
                if table(mu, lam) != kostka(mu, lam):
                    report.counterexamples.append({
                        "mu": list(mu), "lambda": list(lam),
                        "multiplicity": table(mu, lam),
                        "kostka": kostka(mu, lam),
                    })
    report.artifact = {"pairs_checked": checked}
    return report


def _verify_eq(which: str, max_n: int) -> VerificationReport:
    check = eq1_check if which == "eq1" else eq2_check
    report = VerificationReport(which, {"max_n": max_n})
    checked = 0
    for n in range(2, max_n + 1):
        for lam in enumerate_partitions(n):
            for rho in enumerate_partitions(n - 1):
                checked += 1
                left, right = check(lam, rho)
                if left != right:
                    report.counterexamples.append({
                        "lambda": list(lam), "rho": list(rho),
                        "left": left, "right": right,
                    })
    report.artifact = {"pairs_checked": checked}
    return report


def _verify_lemma1(max_n: int) -> VerificationReport:
    report = VerificationReport("lemma1", {"max_n": max_n})
    checked = 0
    for n in range(2, max_n + 1):
        for lam in enumerate_partitions(n):
            checked += 1
            if not lemma1_check(lam):
                report.counterexamples.append({"lambda": list(lam)})
    report.artifact = {"shapes_checked": checked}
    return report


def _verify_dimension(max_n: int) -> VerificationReport:
    report = VerificationReport("dimension", {"max_n": max_n})
    checked = 0
    for n in range(2, max_n + 1):
        for rho in enumerate_partitions(n - 1):
            checked += 1
            total = sum(standard_count(mu) for mu in successors(rho))
            if total != n * standard_count(rho):
                report.counterexamples.append({
                    "rho": list(rho), "n": n,
                    "left": n * standard_count(rho), "right": total,
                })
    report.artifact = {"shapes_checked": checked}
    return report


def _verify_conjugate_twist(max_n: int) -> VerificationReport:
    report = VerificationReport("conjugate-twist", {"max_n": max_n})
    for n in range(1, max_n + 1):
        if not conjugate_twist_check(n):
            report.counterexamples.append({"n": n})
    report.artifact = {"degrees_checked": max_n}
    return report


_VERIFY_DISPATCH: dict[str, Callable[[int], VerificationReport]] = {
    "theorem1": _verify_theorem1,
    "youngs-rule": _verify_youngs_rule,
    "eq1": lambda m: _verify_eq("eq1", m),
    "eq2": lambda m: _verify_eq("eq2", m),
    "lemma1": _verify_lemma1,
    "dimension": _verify_dimension,
    "conjugate-twist": _verify_conjugate_twist,
}


def _cmd_verify(args) -> int:
    report = _VERIFY_DISPATCH[args.check](args.max_n)
    payload = report.payload()
    lines = [f"{report.check_name}: {report.status.upper()} (max_n={args.max_n})"]
    for ce in report.counterexamples:
        lines.append(f"counterexample: {json.dumps(ce)}")
    tsv = [f"{report.check_name}\t{report.status}\t{args.max_n}"]
    _emit(args, payload, lines, tsv)
    return 0 if report.status == "pass" else 1


def _cmd_linsys(args) -> int:
    lam = parse_partition(getattr(args, "lambda"))
    system = build_system3(lam)
    report = statement1_check(lam)
    payload = {
        "lambda": list(lam),
        "rows": [list(r) for r in system.row_index],
        "columns": [list(c) for c in system.col_index],
        "matrix": [[int(x) for x in row] for row in system.matrix.entries],
        "bar_bijective": report.bar_bijective,
        "square": report.square,
        "kernel_dim": report.kernel_dim,
        "unipotent": report.unipotent,
    }
    lines = [
        f"lambda: {format_partition(lam)}",
        "rows: " + "  ".join(format_partition(r) for r in system.row_index),
        "columns: " + "  ".join(format_partition(c) for c in system.col_index),
    ]
    lines += [
        " ".join(str(int(x)) for x in row) for row in system.matrix.entries
    ]
    lines.append(
        f"bar_bijective: {report.bar_bijective}  square: {report.square}  "
        f"kernel_dim: {report.kernel_dim}  unipotent: {report.unipotent}"
    )
    tsv = [
        "\t".join(str(int(x)) for x in row) for row in system.matrix.entries
    ]
    _emit(args, payload, lines, tsv)
    return 0


def _cmd_polymorphism(args) -> int:
    result = polymorphism_feasibility(args.n)
    instance = build_flow_instance(args.n)
    witness_rows = []
    if result["witness"] is not None:
        order = {(g, m): i for i, (g, m) in enumerate(instance.edges)}
        for (g, m), value in sorted(
            result["witness"].items(), key=lambda kv: order[kv[0]]
        ):
            witness_rows.append({
                "from": format_partition(g),
                "to": format_partition(m),
                "value": frac_str(value),
            })
    payload = {
        "n": args.n,
        "feasible": result["feasible"],
        "max_flow": result["max_flow"],
        "required": result["required"],
        "witness": witness_rows if result["witness"] is not None else None,
    }
    lines = [f"n: {args.n}  feasible: {result['feasible']}"]
    lines += [f"{r['from']} -> {r['to']}: {r['value']}" for r in witness_rows]
    tsv = [f"{r['from']}\t{r['to']}\t{r['value']}" for r in witness_rows]
    _emit(args, payload, lines, tsv)
    return 0


def _jsonable(value):
    if isinstance(value, Fraction):
        return frac_str(value)
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return value


def _cmd_forms(args) -> int:
    check = args.check
    if check == "example4":
        report = example4_check()
        ok = (
            report["direct_sum"] and report["parity_assignments"]
            and report["c_relation"]
            and all(report["invariant"].values())
            and all(report["characters_match"].values())
        )
    elif check == "statement2":
        if getattr(args, "lambda") is None:
            raise _UsageError("statement2 requires --lambda")
        lam = parse_partition(getattr(args, "lambda"))
        ok = statement2_check(lam, sum(lam))
        report = {"lambda": list(lam), "matches_permutation_character": ok}
    elif check == "specht":
        if getattr(args, "lambda") is None:
            raise _UsageError("specht requires --lambda")
        lam = parse_partition(getattr(args, "lambda"))
        report = theorem5_check(lam, sum(lam))
        report["basis"] = [
            format_form(specht_poly(t, sum(lam))) for t in enumerate_standard(lam)
        ]
        ok = (
            report["independent"] and report["kernel_matches"]
            and report["character_matches"]
        )
    elif check == "two-row":
        if args.k is None or args.n is None:
            raise _UsageError("two-row requires --n and --k")
        report = two_row_decomposition(args.n, args.k)
        ok = (
            report["dims_match"] and report["direct_sum"]
            and report["pairwise_zero"] and report["characters_match"]
            and report["top_is_shift_invariant"] is not False
        )
    else:  # pragma: no cover - argparse restricts choices
        raise _UsageError(f"unknown check {check}")
    payload = {"check": check, "status": "pass" if ok else "fail"}
    payload.update(_jsonable(report))
    lines = [f"{check}: {'PASS' if ok else 'FAIL'}"]
    lines += [f"{key}: {value}" for key, value in _jsonable(report).items()]
    tsv = [f"{check}\t{'pass' if ok else 'fail'}"]
    _emit(args, payload, lines, tsv)
    return 0 if ok else 1


def build_parser() -> _Parser:
    parser = _Parser(prog="younglab", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--format", choices=["json", "tsv", "ascii"], default="ascii")
        p.add_argument("--out", default=None, help="write output to a file")

    p = sub.add_parser("partitions", help="list partitions in the frozen order")
    p.add_argument("--n", type=int, required=True)
    add_common(p)
    p.set_defaults(func=_cmd_partitions)

    p = sub.add_parser("kostka", help="count semistandard tableaux")
    p.add_argument("--mu", required=True, help="shape, e.g. 4,2")
    p.add_argument("--lambda", required=True, help="weight, e.g. 3,2,1")
    add_common(p)
    p.set_defaults(func=_cmd_kostka)

    p = sub.add_parser("ssyt", help="list semistandard tableaux")
    p.add_argument("--shape", required=True)
    p.add_argument("--weight", required=True, help="comma-separated counts")
    add_common(p)
    p.set_defaults(func=_cmd_ssyt)

    p = sub.add_parser("bijection", help="two-way counting certificate")
    p.add_argument("--lambda", required=True)
    p.add_argument("--rho", required=True)
    add_common(p)
    p.set_defaults(func=_cmd_bijection)

    p = sub.add_parser("character-table", help="exact irreducible characters")
    p.add_argument("--n", type=int, required=True)
    add_common(p)
    p.set_defaults(func=_cmd_character_table)

    p = sub.add_parser("verify", help="run a verification sweep")
    p.add_argument("check", choices=VERIFY_CHECKS)
    p.add_argument("--max-n", type=int, default=8, dest="max_n")
    add_common(p)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("linsys", help="multiplicity-deviation system of a shape")
    p.add_argument("--lambda", required=True)
    add_common(p)
    p.set_defaults(func=_cmd_linsys)

    p = sub.add_parser("polymorphism", help="uniform-transport feasibility")
    p.add_argument("--n", type=int, required=True)
    add_common(p)
    p.set_defaults(func=_cmd_polymorphism)

    p = sub.add_parser("forms", help="form-space checks")
    p.add_argument("--check", choices=["example4", "statement2", "specht", "two-row"],
                   required=True)
    p.add_argument("--lambda", default=None)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--k", type=int, default=None)
    add_common(p)
    p.set_defaults(func=_cmd_forms)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    started = time.monotonic()
    try:
        args = parser.parse_args(argv)
        code = args.func(args)
    except _UsageError as exc:
        sys.stderr.write(json.dumps({"error": str(exc), "kind": "usage"}) + "\n")
        return 2
    except (YounglabError, ValueError) as exc:
        sys.stderr.write(json.dumps({"error": str(exc), "kind": "usage"}) + "\n")
        return 2
    finally:
        elapsed_ms = int((time.monotonic() - started) * 1000)
        sys.stderr.write(json.dumps({"timing_ms": elapsed_ms}) + "\n")
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
