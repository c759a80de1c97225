"""Command-line front end.

Exit codes: 0 success, 1 usage error, 2 not integrable, 3 Jacobi violation,
4 parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from liefol.families import FAMILIES, ParamError, load_params
from liefol.geometry import JacobiError, NotIntegrableError, classify
from liefol.liecore import AlgebraError, MetricLieAlgebra, Splitting, algebra_from_dict, algebra_to_dict, jacobi_check
from liefol.ratlin import fmt_rat
from liefol.symbolic import TEMPLATES, reduce_template, verify_identically_zero
from liefol.verify import format_table, verify_families

EXIT_OK, EXIT_USAGE, EXIT_NOT_INTEGRABLE, EXIT_JACOBI, EXIT_PARSE = 0, 1, 2, 3, 4


class ParseError(Exception):
    def __init__(self, path, line, msg):
        self.path, self.line, self.msg = path, line, msg
        super().__init__(f"{path}:{line}: {msg}")


def _line_of(text: str, pos: int) -> int:
    return text.count("\n", 0, pos) + 1


def _bracket_lines(text: str) -> list[int]:
    """Line number of each element of the top-level "brackets" array."""
    dec = json.JSONDecoder()
    key = text.find('"brackets"')
    if key < 0:
        return []
    pos = text.find("[", key)
    lines = []
    pos += 1
    while pos < len(text):
        while pos < len(text) and text[pos] in " \t\r\n,":
            pos += 1
        if pos >= len(text) or text[pos] == "]":
            break
        lines.append(_line_of(text, pos))
        try:
            _, pos = dec.raw_decode(text, pos)
        except json.JSONDecodeError:
            break
    return lines


def _key_line(text: str, key: str) -> int:
    pos = text.find(f'"{key}"')
    return _line_of(text, pos) if pos >= 0 else 1


def parse_algebra_file(path) -> tuple[MetricLieAlgebra, Splitting | None]:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        raise ParseError(path, 0, f"cannot read file: {exc}") from None
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(path, exc.lineno, f"malformed JSON: {exc.msg} (column {exc.colno})") from None
    try:
        return algebra_from_dict(doc)
    except AlgebraError as exc:
        msg = str(exc)
        line = 1
        if msg.startswith("brackets["):
            idx = int(msg[len("brackets[") : msg.index("]")])
            lines = _bracket_lines(text)
            line = lines[idx] if idx < len(lines) else _key_line(text, "brackets")
        else:
            for key in ("dimension", "basis", "brackets", "vertical"):
                if msg.startswith(key):
                    line = _key_line(text, key)
                    break
        raise ParseError(path, line, msg) from None


def write_algebra_file(path, g: MetricLieAlgebra, s: Splitting | None = None) -> None:
    Path(path).write_text(_dumps(algebra_to_dict(g, s)), encoding="utf-8")


def _dumps(doc) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def _err(msg: str) -> None:
    print(f"liefol: {msg}", file=sys.stderr)


# -- subcommands -------------------------------------------------------------


def cmd_check_jacobi(args) -> int:
    g, _ = parse_algebra_file(args.file)
    bad = jacobi_check(g)
    for (i, j, k), d in bad:
        names = ",".join(g.basis[x] for x in (i, j, k))
        print(f"({i},{j},{k}) [{names}]: " + " ".join(fmt_rat(c) for c in d))
    print(f"{len(bad)} violations")
    return EXIT_OK if not bad else EXIT_JACOBI


def cmd_classify(args) -> int:
    g, s = parse_algebra_file(args.file)
    if args.vertical is not None:
        try:
            s = Splitting(g.dim, tuple(int(v) for v in args.vertical.split(",") if v.strip()))
        except (ValueError, AlgebraError) as exc:
            _err(f"--vertical: {exc}")
            return EXIT_USAGE
    if s is None:
        _err("no vertical block: add \"vertical\" to the file or pass --vertical")
        return EXIT_USAGE
    try:
        report = classify(g, s)
    except NotIntegrableError as exc:
        _err(str(exc))
        return EXIT_NOT_INTEGRABLE
    except JacobiError as exc:
        _err(str(exc))
        return EXIT_JACOBI
    sys.stdout.write(_dumps(report.to_dict()))
    return EXIT_OK


def cmd_family(args) -> int:
    cls, gen = FAMILIES[args.name]
    try:
        params = load_params(args.name, args.params) if args.params else cls()
    except FileNotFoundError as exc:
        _err(f"{args.params}: {exc.strerror}")
        return EXIT_PARSE
    except json.JSONDecodeError as exc:
        _err(f"{args.params}:{exc.lineno}: malformed JSON: {exc.msg}")
        return EXIT_PARSE
    except ParamError as exc:
        _err(f"{args.params}: {exc}")
        return EXIT_PARSE
    g, s = gen(params)
    write_algebra_file(args.out, g, s)
    print(f"wrote {args.name} algebra (dimension {g.dim}) to {args.out}")
    return EXIT_OK


def cmd_reduce(args) -> int:
    reduced, result = reduce_template(args.template, branch=not args.no_branch)
    defects = verify_identically_zero(reduced) if not result.residual else None
    doc = {"template": args.template, **result.to_dict()}
    doc["identically_zero"] = None if defects is None else not defects
    Path(args.out).write_text(_dumps(doc), encoding="utf-8")
    print(f"{args.template}: {len(result.substitutions)} substitutions, {len(result.free)} free, "
          f"{len(result.residual)} residual")
    if result.assumptions:
        print("assumptions: " + ", ".join(f"{p} = 0" for p in result.assumptions))
    if defects is not None:
        print(f"identically zero after substitution: {'yes' if not defects else 'no'}")
    return EXIT_OK


def cmd_verify_families(args) -> int:
    rows = verify_families(args.seed, args.draws)
    sys.stdout.write(format_table(rows, args.seed, args.draws))
    return EXIT_OK if all(r.ok for r in rows) else EXIT_JACOBI


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="liefol", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check-jacobi", help="list triples violating the Jacobi identity")
    c.add_argument("file")
    c.set_defaults(func=cmd_check_jacobi)

    c = sub.add_parser("classify", help="classify the foliation of the vertical block")
    c.add_argument("file")
    c.add_argument("--vertical", help="comma-separated vertical indices; overrides the file")
    c.set_defaults(func=cmd_classify)

    c = sub.add_parser("family", help="write an algebra file for one of the four families")
    c.add_argument("name", choices=list(FAMILIES))
    c.add_argument("--params", help="JSON object of rational-string parameters (missing = 0)")
    c.add_argument("--out", required=True)
    c.set_defaults(func=cmd_family)

    c = sub.add_parser("reduce", help="reduce the Jacobi system of an ansatz template")
    c.add_argument("template", help=f"{'|'.join(TEMPLATES)} or generic:DIM:V1,V2,...")
    c.add_argument("--out", required=True)
    c.add_argument("--no-branch", action="store_true", help="do not add the template's branch equations")
    c.set_defaults(func=cmd_reduce)

    c = sub.add_parser("verify-families", help="seeded property checks of all four families")
    c.add_argument("--seed", type=int, default=0)
    c.add_argument("--draws", type=int, default=100)
    c.set_defaults(func=cmd_verify_families)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except ParseError as exc:
        _err(str(exc))
        return EXIT_PARSE
    except ValueError as exc:
        _err(str(exc))
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
