"""Command-line front end: ``abpair <command> ...``.

Exit codes: 0 success, 1 a "no" verdict (``nondeg``, ``verify``), 2 usage
or input errors, 3 an enumeration limit was hit.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Sequence

from . import bilinear as bil
from . import oracle
from .duality import DivisibilityError, PrimeFieldRealization, duality_pairing, realize_in_prime_field
from .groups import FinAbGroup
from .limits import EnumerationLimitError, set_enum_limit
from .tensor import canonical_map, tensor_product

EXIT_OK, EXIT_NO, EXIT_USAGE, EXIT_LIMIT = 0, 1, 2, 3


class GroupSpecError(ValueError):
    def __init__(self, text: str, pos: int, msg: str):
        super().__init__(f"{msg} at position {pos} in {text!r}")
        self.text = text
        self.pos = pos


class UsageError(Exception):
    pass


def parse_group_spec(text: str) -> FinAbGroup:
    """Parse ``Z6xZ4``, ``z2 * z2 * z3`` and the like, keeping factor order."""
    factors: list[int] = []
    i, n = 0, len(text)

    def skip_ws(k: int) -> int:
        while k < n and text[k].isspace():
            k += 1
        return k

    i = skip_ws(i)
    while True:
        if i >= n or text[i] not in "zZ":
            raise GroupSpecError(text, i, "expected 'Z'")
        i = skip_ws(i + 1)
        start = i
        while i < n and text[i].isdigit():
            i += 1
        if start == i:
            raise GroupSpecError(text, start, "expected a factor order")
        value = int(text[start:i])
        if value < 1:
            raise GroupSpecError(text, start, "factor order must be >= 1")
        factors.append(value)
        i = skip_ws(i)
        if i == n:
            return FinAbGroup(tuple(factors))
        if text[i] not in "x*":
            raise GroupSpecError(text, i, "expected 'x' or '*'")
        i = skip_ws(i + 1)


def format_group(G: FinAbGroup) -> str:
    return str(G)


def _element_str(x: Sequence[int]) -> str:
    return "(" + ",".join(map(str, x)) + ")"


def _grid_str(f: bil.BilinearMap) -> list[str]:
    return [" ".join(_element_str(cell) for cell in row) for row in f.grid] or ["(empty)"]


def _verdict_word(v: bool | None) -> str:
    return {True: "non-degenerate", False: "degenerate", None: "unknown"}[v]


@dataclass
class Outcome:
    payload: dict[str, Any]
    lines: list[str]
    code: int = EXIT_OK


def _load_map(path: str) -> bil.BilinearMap:
    try:
        data = json.loads(Path(path).read_text())
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path} is not valid JSON: {exc}") from None
    if not isinstance(data, dict):
        raise UsageError(f"{path}: expected a JSON object")
    return bil.BilinearMap.from_dict(data)


# -- commands ----------------------------------------------------------------


def cmd_tensor(args) -> Outcome:
    A, B = parse_group_spec(args.A), parse_group_spec(args.B)
    tr = tensor_product(A, B)
    cells = sorted(tr.index_map.items(), key=lambda kv: kv[1])
    lines = [format_group(tr.product)]
    lines += [f"e{i} (x) e'{j} -> factor {pos} (Z{tr.product.factors[pos]})" for (i, j), pos in cells]
    lines.append("canonical grid:")
    lines += ["  " + row for row in _grid_str(tr.canonical)]
    payload = {
        "product": list(tr.product.factors),
        "product_str": format_group(tr.product),
        "index_map": [{"cell": [i, j], "factor": pos} for (i, j), pos in cells],
        "canonical": tr.canonical.to_dict(),
    }
    return Outcome(payload, lines)


def cmd_nondeg(args) -> Outcome:
    A, B = parse_group_spec(args.A), parse_group_spec(args.B)
    if args.map in (None, "canonical"):
        f = canonical_map(A, B)
    else:
        f = _load_map(args.map)
        if (f.left, f.right) != (A, B):
            raise UsageError(f"map in {args.map} is defined on {f.left} x {f.right}, not {A} x {B}")
    v = bil.nondegeneracy(f)
    verdict = {True: "pairing", False: "degenerate", None: "unknown"}[v.pairing]
    lines = [
        f"left: {_verdict_word(v.left)}",
        f"right: {_verdict_word(v.right)}",
        f"verdict: {verdict}",
        f"method: {v.method}",
    ]
    payload = {"left": v.left, "right": v.right, "verdict": verdict, "method": v.method}
    return Outcome(payload, lines, EXIT_OK if v.pairing else EXIT_NO)


def cmd_pairings(args) -> Outcome:
    if args.a < 1:
        raise UsageError("a must be >= 1")
    count = bil.count_pairings_cyclic(args.a)
    lines = [str(count)]
    payload: dict[str, Any] = {"a": args.a, "count": count}
    if args.list:
        ks = [k for k, _ in bil.cyclic_pairings(args.a)]
        lines.append("k: " + " ".join(map(str, ks)))
        payload["exponents"] = ks
    return Outcome(payload, lines)


def cmd_quotient(args) -> Outcome:
    f = _load_map(args.file)
    qp = bil.quotient_pairing(f)
    ql, qr = qp.quotient_left, qp.quotient_right
    induced = qp.induced.to_dict()
    lines = [
        f"left kernel ({len(ql.subgroup)}): " + " ".join(map(_element_str, ql.subgroup)),
        f"right kernel ({len(qr.subgroup)}): " + " ".join(map(_element_str, qr.subgroup)),
        f"left quotient: {format_group(ql.group)}",
        f"right quotient: {format_group(qr.group)}",
        "induced grid:",
    ]
    lines += ["  " + row for row in _grid_str(qp.induced)]
    payload = {
        "left_kernel": [list(x) for x in ql.subgroup],
        "right_kernel": [list(x) for x in qr.subgroup],
        "left_quotient": list(ql.group.factors),
        "right_quotient": list(qr.group.factors),
        "left_generators": [list(g) for g in ql.generators],
        "right_generators": [list(g) for g in qr.generators],
        "induced": induced,
    }
    if args.output:
        Path(args.output).write_text(json.dumps(induced, sort_keys=True) + "\n")
        lines.append(f"induced map written to {args.output}")
    return Outcome(payload, lines)


def cmd_dual(args) -> Outcome:
    A = parse_group_spec(args.A)
    N = args.N if args.N is not None else A.exponent
    f = duality_pairing(A, N)
    lines = [f"N = {N}", "duality grid:"] + ["  " + row for row in _grid_str(f)]
    payload: dict[str, Any] = {"group": list(A.factors), "N": N, "pairing": f.to_dict()}
    if args.realize_prime is not None:
        real = PrimeFieldRealization.for_prime(args.realize_prime)
        table = realize_in_prime_field(f, real)
        lines.append(f"values in F_{real.p}^* (generator {real.generator}):")
        lines += ["  " + " ".join(map(str, row)) for row in table.values]
        payload["realization"] = {"p": real.p, "generator": real.generator,
                                  "table": [list(row) for row in table.values]}
    return Outcome(payload, lines)


def _parse_bound_value(text: str) -> Any:
    if ".." in text:
        lo, hi = text.split("..", 1)
        return list(range(int(lo), int(hi) + 1))
    if ":" in text:
        return [int(t) for t in text.split(":")]
    return int(text)


def parse_bounds(text: str | None) -> dict[str, Any]:
    """``k=v,k=v`` with ``v`` an int, an inclusive range ``lo..hi`` or a list ``a:b:c``."""
    out: dict[str, Any] = {}
    if not text:
        return out
    for item in text.split(","):
        key, sep, value = item.partition("=")
        if not sep or not key.strip():
            raise UsageError(f"bad bound {item!r}; expected key=value")
        try:
            out[key.strip()] = _parse_bound_value(value.strip())
        except ValueError:
            raise UsageError(f"bad value in bound {item!r}") from None
    return out


def cmd_verify(args) -> Outcome:
    bounds = parse_bounds(args.bounds)
    try:
        reports = oracle.run_suite(args.suite, bounds)
    except KeyError as exc:
        raise UsageError(exc.args[0]) from None
    lines = []
    for r in reports:
        lines.append(r.summary().rsplit(" (", 1)[0])
        lines += [f"  note: {n}" for n in r.notes]
        lines += [f"  FAIL {msg}" for msg in r.failures]
    ok = all(r.ok for r in reports)
    lines.append("all claims hold" if ok else "some claims FAILED")
    # elapsed is left out of the payload so that output is reproducible
    payload = {"suite": args.suite, "ok": ok,
               "reports": [{k: v for k, v in r.to_dict().items() if k != "elapsed"} for r in reports]}
    return Outcome(payload, lines, EXIT_OK if ok else EXIT_NO)


# -- wiring ----------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        sub = self.prog.partition(" ")[2]
        raise UsageError(f"{sub}: {message}" if sub else message)


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
    if value < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="machine-readable output")
    common.add_argument("--max-enum", type=_positive_int, default=argparse.SUPPRESS,
                        help="enumeration threshold (overrides ABPAIR_MAX_ENUM)")

    p = _Parser(prog="abpair", description="Tensor products, bilinear maps and pairings "
                                           "on finite abelian groups.", parents=[common])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("tensor", parents=[common], help="tensor product and canonical map")
    s.add_argument("A")
    s.add_argument("B")
    s.set_defaults(run=cmd_tensor)

    s = sub.add_parser("nondeg", parents=[common], help="non-degeneracy of a bilinear map")
    s.add_argument("A")
    s.add_argument("B")
    s.add_argument("--map", default="canonical", help="'canonical' or a JSON map file")
    s.set_defaults(run=cmd_nondeg)

    s = sub.add_parser("pairings", parents=[common], help="pairings Z_a x Z_a -> Z_a")
    s.add_argument("a", type=int)
    s.add_argument("--list", action="store_true", help="list the exponents k")
    s.set_defaults(run=cmd_pairings)

    s = sub.add_parser("quotient", parents=[common], help="divide a map by its kernels")
    s.add_argument("file")
    s.add_argument("-o", "--output", help="write the induced map as JSON")
    s.set_defaults(run=cmd_quotient)

    s = sub.add_parser("dual", parents=[common], help="duality pairing on A x A")
    s.add_argument("A")
    s.add_argument("--N", type=_positive_int)
    s.add_argument("--realize-prime", type=int, metavar="P")
    s.set_defaults(run=cmd_dual)

    s = sub.add_parser("verify", parents=[common], help="run oracle suites")
    s.add_argument("--suite", default="all", choices=["all", *oracle.SUITES])
    s.add_argument("--bounds", help="k=v,... passed to the checks")
    s.set_defaults(run=cmd_verify)
    return p


def _emit(outcome: Outcome, command: str, as_json: bool, out) -> None:
    if as_json:
        doc = {"command": command, "exit_code": outcome.code, **outcome.payload}
        out.write(json.dumps(doc, sort_keys=True) + "\n")
    else:
        out.write("\n".join(outcome.lines) + "\n")


def _fail(code: int, msg: str, command: str | None, as_json: bool, out, err) -> int:
    err.write(f"abpair: {msg}\n")
    if as_json:
        out.write(json.dumps({"command": command, "exit_code": code, "error": msg}, sort_keys=True) + "\n")
    return code


def main(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    argv = list(sys.argv[1:] if argv is None else argv)
    as_json = "--json" in argv
    command = None
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        return _fail(EXIT_USAGE, str(exc), None, as_json, out, err)
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    command = args.command
    as_json = getattr(args, "json", False)
    set_enum_limit(getattr(args, "max_enum", None))
    try:
        outcome = args.run(args)
    except EnumerationLimitError as exc:
        return _fail(EXIT_LIMIT, str(exc), command, as_json, out, err)
    except (UsageError, GroupSpecError, DivisibilityError, ValueError) as exc:
        return _fail(EXIT_USAGE, str(exc), command, as_json, out, err)
    finally:
        set_enum_limit(None)
    _emit(outcome, command, as_json, out)
    return outcome.code


def main_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
