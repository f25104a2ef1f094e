"""Terminal front end: every operation, with text or JSON envelope output.

Exit codes: 0 success, 1 domain failure, 2 usage or input error,
3 search exhaustion.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import characters, numtheory, pretzel, seifert
from .characters import SearchExhausted
from .laurent import LaurentPoly, NotUnitAtOne
from .pretzel import PretzelKnot
from .seifert import SeifertMatrix

SCHEMA_VERSION = "1"


class InputError(ValueError):
    """Malformed command input; maps to exit code 2."""


def _emit(args, command: str, result: dict, text_lines: list[str]) -> None:
    if args.json:
        envelope = {
            "schema_version": SCHEMA_VERSION,
            "command": command,
            "result": result,
        }
        print(json.dumps(envelope, sort_keys=True, indent=2))
    else:
        for line in text_lines:
            print(line)


def _parse_pretzel(text: str) -> PretzelKnot:
    parts = text.split(",")
    if len(parts) != 3:
        raise InputError(
            f"--pretzel needs three comma-separated strand values, got {text!r}"
        )
    try:
        strands = [int(v) for v in parts]
    except ValueError:
        raise InputError(f"strand values must be integers, got {text!r}") from None
    try:
        return PretzelKnot.from_strands(*strands)
    except ValueError as exc:
        raise InputError(str(exc)) from None


def _load_seifert(path: str) -> SeifertMatrix:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}") from None
    try:
        return SeifertMatrix.from_json(data)
    except ValueError as exc:
        raise InputError(str(exc)) from None


def _resolve_polynomial(args) -> tuple[LaurentPoly, int]:
    """Normalized Alexander polynomial plus the genus of the carrying surface."""
    if args.pretzel is not None:
        knot = _parse_pretzel(args.pretzel)
        return pretzel.alexander_closed_form(knot), 1
    V = _load_seifert(args.seifert)
    return seifert.alexander_from_seifert(V), V.genus


def cmd_alexander(args) -> int:
    poly, _ = _resolve_polynomial(args)
    result = {"alexander": poly.to_json(), "pretty": str(poly)}
    _emit(args, "alexander", result, [str(poly)])
    return 0


def cmd_fibered(args) -> int:
    poly, genus = _resolve_polynomial(args)
    span = poly.degree_span()
    at_zero = poly.eval_at(0)
    failing: list[str] = []
    if span != 2 * genus:
        failing.append(f"degree {span} != {2 * genus}")
    if abs(at_zero) != 1:
        failing.append(f"Delta(0) = {at_zero}")
    fibered = not failing
    result = {
        "fibered": fibered,
        "genus": genus,
        "degree_span": span,
        "at_zero": at_zero,
        "failing": failing,
        "alexander": poly.to_json(),
    }
    text = "true" if fibered else "false (" + "; ".join(failing) + ")"
    _emit(args, "fibered", result, [text])
    return 0


def cmd_witness(args) -> int:
    p = args.prime
    m = numtheory.sqrt_minus_one(p)
    n = numtheory.witness_index(p)
    cw = characters.certify(pretzel.witness(n))
    result = {
        "prime": p,
        "m": m,
        "n": n,
        "pretzel": list(cw.witness.base.strands),
        "rank": cw.rank,
        "factorization": [[q, e] for q, e in cw.factorization],
        "rank_mod_p": cw.rank % p,
    }
    strands = cw.witness.base.strands
    text = [
        f"prime: {p}",
        f"m: {m} (m^2 = -1 mod {p})",
        f"witness index: {n}",
        f"pretzel: P({strands[0]}, {strands[1]}, {strands[2]})",
        f"rank: {cw.rank}",
        "factorization: " + " * ".join(f"{q}^{e}" if e > 1 else str(q) for q, e in cw.factorization),
        f"rank mod {p}: {cw.rank % p}",
    ]
    _emit(args, "witness", result, text)
    return 0


def cmd_certificate(args) -> int:
    if args.count < 1:
        raise InputError(f"--count must be >= 1, got {args.count}")
    if args.search_limit < 1:
        raise InputError(f"--search-limit must be >= 1, got {args.search_limit}")
    cert = characters.build_certificate(args.count, args.search_limit)
    check = characters.verify_certificate(cert)
    if args.csv:
        try:
            with open(args.csv, "w", encoding="utf-8") as fh:
                fh.write(cert.to_csv())
        except OSError as exc:
            raise InputError(f"cannot write {args.csv}: {exc}") from None
    result = cert.to_json()
    result["verified"] = bool(check)
    text = cert.to_csv().rstrip("\n").split("\n")
    text.append(f"verified: {'true' if check else 'false'}")
    _emit(args, "certificate", result, text)
    if not check:
        print(f"error: {check.reason}", file=sys.stderr)
        return 1
    return 0


def cmd_rank(args) -> int:
    if args.index < 1:
        raise InputError(f"--index must be >= 1, got {args.index}")
    if args.stab < 0:
        raise InputError(f"--stab must be >= 0, got {args.stab}")
    w = pretzel.witness(args.index)
    if args.stab:
        w = pretzel.stabilize(w, args.stab)
    poly = pretzel.alexander_of_witness(w)
    result = {
        "index": args.index,
        "stab": args.stab,
        "rank": characters.rank_value(w),
        "genus": w.genus,
        "alexander": poly.to_json(),
        "pretty": str(poly),
    }
    text = [
        f"rank: {result['rank']}",
        f"genus: {w.genus}",
        f"alexander: {poly}",
    ]
    if args.stab == 0:
        split = pretzel.hfk_bigraded(w)
        result["bigraded"] = [[g, r] for g, r in split]
        text.append("bigraded: " + "  ".join(f"grading {g}: rank {r}" for g, r in split))
    _emit(args, "rank", result, text)
    return 0


# -- selftest ------------------------------------------------------------


def _check_closed_form() -> None:
    expected = LaurentPoly(0, (1, -1, 1))
    for n in range(1, 201):
        got = pretzel.alexander_closed_form(pretzel.witness(n).base)
        if got != expected:
            raise AssertionError(f"witness {n}: closed form gave {got}")


def _check_box_oracle(half_width: int) -> None:
    span = range(-half_width, half_width + 1)
    for l in span:
        for m in span:
            for n in span:
                via_matrix = seifert.alexander_from_seifert(
                    seifert.pretzel_seifert_matrix(l, m, n)
                )
                via_formula = pretzel.alexander_closed_form(PretzelKnot(l, m, n))
                if via_matrix != via_formula:
                    raise AssertionError(f"routes disagree at (l, m, n) = ({l}, {m}, {n})")


def _check_rank_formula() -> None:
    for n in range(1, 101):
        w = pretzel.witness(n)
        r = pretzel.hfk_top_rank(w)
        if r != 2 * n * n - 2 * n + 1:
            raise AssertionError(f"index {n}: rank {r} != {2 * n * n - 2 * n + 1}")
        split = pretzel.hfk_bigraded(w)
        if split != [(1, n * n - n), (2, n * n - n + 1)]:
            raise AssertionError(f"index {n}: bigraded split {split} is wrong")
        if sum(c for _, c in split) != r:
            raise AssertionError(f"index {n}: bigraded ranks do not sum to {r}")


def _check_witnesses(limit: int) -> None:
    for p in numtheory.primes_one_mod_four(limit):
        cw = characters.witness_for_prime(p)
        if cw.rank % p != 0:
            raise AssertionError(f"prime {p}: witness rank {cw.rank} is not divisible")
        if characters.prime_component(cw.witness, p) < 1:
            raise AssertionError(f"prime {p}: prime component vanished")


def _check_certificate(rows: int) -> None:
    cert = characters.build_certificate(rows, 10_000)
    check = characters.verify_certificate(cert)
    if not check:
        raise AssertionError(check.reason)


def _selftest_checks(fast: bool):
    half_width = 6 if fast else 15
    prime_limit = 1_000 if fast else 10_000
    rows = 10 if fast else 25
    return [
        ("closed form", _check_closed_form),
        ("pretzel box oracle", lambda: _check_box_oracle(half_width)),
        ("rank formula", _check_rank_formula),
        ("witness verification", lambda: _check_witnesses(prime_limit)),
        ("certificate", lambda: _check_certificate(rows)),
    ]


def cmd_selftest(args) -> int:
    results: list[dict] = []
    failed = False
    for name, check in _selftest_checks(args.fast):
        try:
            check()
        except Exception as exc:  # a selftest reports any failure and stops
            results.append({"name": name, "ok": False, "detail": str(exc)})
            failed = True
            break
        results.append({"name": name, "ok": True})
    if args.json:
        _emit(args, "selftest", {"checks": results, "ok": not failed}, [])
    else:
        for r in results:
            if r["ok"]:
                print(f"ok: {r['name']}")
            else:
                print(f"FAIL: {r['name']} ({r['detail']})")
    return 1 if failed else 0


# -- parser ----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="knotrank",
        description="Exact Alexander polynomials of pretzel knots, homological "
        "fiberedness tests, witness ranks, and independence certificates.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_json(p: argparse.ArgumentParser) -> None:
        p.add_argument("--json", action="store_true", help="emit a JSON envelope")

    def add_knot_source(p: argparse.ArgumentParser) -> None:
        group = p.add_mutually_exclusive_group(required=True)
        group.add_argument(
            "--pretzel", metavar="A,B,C", help="odd strand values of the pretzel knot P(A,B,C)"
        )
        group.add_argument(
            "--seifert", metavar="PATH", help="path to a Seifert matrix JSON file"
        )

    p = sub.add_parser("alexander", help="normalized Alexander polynomial")
    add_knot_source(p)
    add_json(p)
    p.set_defaults(func=cmd_alexander)

    p = sub.add_parser("fibered", help="homological fiberedness test")
    add_knot_source(p)
    add_json(p)
    p.set_defaults(func=cmd_fibered)

    p = sub.add_parser("witness", help="witness knot for a prime p = 1 (mod 4)")
    p.add_argument("--prime", type=int, required=True, metavar="P")
    add_json(p)
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("certificate", help="build and verify an independence certificate")
    p.add_argument("--count", type=int, default=10, metavar="N")
    p.add_argument("--search-limit", type=int, default=10_000, metavar="L")
    p.add_argument("--csv", metavar="PATH", help="also write the evaluation matrix as CSV")
    add_json(p)
    p.set_defaults(func=cmd_certificate)

    p = sub.add_parser("rank", help="rank data of a (possibly stabilized) witness")
    p.add_argument("--index", type=int, required=True, metavar="N")
    p.add_argument("--stab", type=int, default=0, metavar="K")
    add_json(p)
    p.set_defaults(func=cmd_rank)

    p = sub.add_parser("selftest", help="run the built-in consistency checks")
    p.add_argument("--fast", action="store_true", help="reduced ranges, finishes in seconds")
    add_json(p)
    p.set_defaults(func=cmd_selftest)

    return parser


def _absorb_negative_values(argv: list[str]) -> list[str]:
    # argparse mistakes "-1,3,3" for a flag; glue such values onto --pretzel
    out: list[str] = []
    i = 0
    while i < len(argv):
        if (
            argv[i] == "--pretzel"
            and i + 1 < len(argv)
            and argv[i + 1].startswith("-")
            and len(argv[i + 1]) > 1
            and argv[i + 1][1].isdigit()
        ):
            out.append(f"--pretzel={argv[i + 1]}")
            i += 2
        else:
            out.append(argv[i])
            i += 1
    return out


def main(argv: Optional[Sequence[str]] = None) -> int:
    raw = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(_absorb_negative_values(raw))
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except NotUnitAtOne as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except SearchExhausted as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (InputError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
