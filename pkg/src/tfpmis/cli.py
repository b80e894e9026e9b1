"""Command-line front end.

Exit codes: 0 completed, 1 a verified check failed, 2 usage or parse error,
3 budget exceeded or unknown answer, 4 internal invariant violation.
"""

from __future__ import annotations

import argparse
import os
import sys
from fractions import Fraction
from pathlib import Path

from . import generators
from .errors import BudgetExceeded, InvariantViolation, TfpmisError
from .graph import AbstractGraph, is_independent
from .oracle import OracleBudget, alpha_exact
from .plane_graph import PlaneGraph, format_pg, parse_pg
from .solver import SolverConfig, analyze, decide, find_set
from .treewidth import format_td, heuristic_td, parse_gr, validate_td

EXIT_OK, EXIT_CHECK_FAILED, EXIT_USAGE, EXIT_BUDGET, EXIT_INVARIANT = 0, 1, 2, 3, 4


class UsageError(TfpmisError):
    pass


def _timeout_seconds(args) -> float | None:
    ms = args.timeout_ms
    if ms is None:
        env = os.environ.get("TFPMIS_TIMEOUT_MS")
        if env:
            try:
                ms = int(env)
            except ValueError:
                raise UsageError(f"TFPMIS_TIMEOUT_MS={env!r} is not an integer") from None
    if ms is None:
        return 10.0
    if ms <= 0:
        raise UsageError("timeout must be positive")
    return ms / 1000


def _read_text(path: str) -> str:
    try:
        return sys.stdin.read() if path == "-" else Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _read_plane(path: str) -> PlaneGraph:
    return parse_pg(_read_text(path))


def _read_any(path: str):
    """A ``.pg`` or PACE ``.gr`` file, told apart by its header line."""
    text = _read_text(path)
    for line in text.splitlines():
        s = line.strip()
        if not s or s.startswith(("#", "c")):
            continue
        return parse_pg(text) if s.startswith("pg") else parse_gr(text)
    raise UsageError(f"{path} contains no graph")


def _write(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def format_solution(vertices) -> str:
    vs = sorted(vertices)
    return "".join([f"s is {len(vs)}\n"] + [f"{v}\n" for v in vs])


def parse_solution(text: str) -> list:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines or not lines[0].startswith("s is "):
        raise UsageError("solution file must start with 's is <size>'")
    try:
        size = int(lines[0][5:])
        vs = [int(x) for x in lines[1:]]
    except ValueError:
        raise UsageError("solution file holds a non-integer entry") from None
    if size != len(vs):
        raise UsageError(f"header says {size} vertices, file lists {len(vs)}")
    return vs


def _config(args) -> SolverConfig:
    c = None
    if args.c is not None:
        try:
            c = Fraction(args.c)
        except (ValueError, ZeroDivisionError):
            raise UsageError(f"--c {args.c!r} is not a rational number") from None
    mode = "theorem" if c is not None else "exact"
    return SolverConfig(W_max=args.wmax, mode=mode, c_theorem=c, color_timeout=_timeout_seconds(args))


# subcommands -------------------------------------------------------------------

def cmd_gen(args) -> int:
    params = {k: getattr(args, k) for k in ("n", "rows", "cols", "a", "length") if getattr(args, k) is not None}
    g = generators.gen_named(generators.GenSpec(args.family, params, args.seed))
    _write(format_pg(g), args.output)
    return EXIT_OK


def _print_report(rep) -> None:
    print(rep.answer)
    parts = [f"path={rep.path}", f"n={rep.n}", f"k={rep.k}", f"s_hat={rep.s_hat}"]
    if rep.width_used is not None:
        parts.append(f"width={rep.width_used}")
    if rep.alpha is not None:
        parts.append(f"alpha={rep.alpha}")
    if rep.note:
        parts.append(f"note={rep.note}")
    print(" ".join(parts))


def cmd_decide(args) -> int:
    rep = decide(_read_plane(args.input), args.k, _config(args))
    _print_report(rep)
    return EXIT_BUDGET if rep.answer == "unknown" else EXIT_OK


def cmd_find(args) -> int:
    g = _read_plane(args.input)
    res = find_set(g, args.k, _config(args))
    print(res.status)
    if res.status == "found":
        ok, edge = is_independent(g.adj, res.vertices)
        if not ok:
            raise InvariantViolation(f"returned set contains edge {edge}")
        print(f"size={len(res.vertices)} path={res.path}")
        _write(format_solution(res.vertices), args.output)
        return EXIT_OK
    return EXIT_BUDGET if res.status == "unknown" else EXIT_OK


def cmd_analyze(args) -> int:
    g = _read_plane(args.input)
    c = Fraction(args.c) if args.c is not None else None
    rep = analyze(g, c=c, augment_rounds=args.augment)
    for key, val in rep.items():
        print(f"{key}: {val}")
    if args.scatter is not None:
        from .scatter import fat_extract

        d, t = args.scatter
        res = fat_extract(g, range(g.n), d, t)
        print(f"scatter: d={d} t={t} |S|={g.n} |Q|={len(res.Q)} |X|={len(res.X)} K={res.constants.K}")
        print(f"scatter_Q: {sorted(res.Q)}")
        print(f"scatter_X: {sorted(res.X)}")
        print(f"scatter_certificates: {res.ratios}")
    return EXIT_OK


def cmd_tw(args) -> int:
    g = parse_gr(_read_text(args.input))
    td = heuristic_td(g, args.strategy)
    bad = validate_td(g, td)
    if bad is not None:
        raise InvariantViolation(f"heuristic decomposition is invalid: {bad}")
    _write(format_td(td, g.n), args.output)
    print(f"width {td.width}", file=sys.stderr)
    return EXIT_OK


def cmd_alpha(args) -> int:
    g = _read_any(args.input)
    ag = g if isinstance(g, AbstractGraph) else g.to_abstract()
    alpha, wit = alpha_exact(ag, OracleBudget(max_n=args.max_n))
    print(alpha)
    if args.witness:
        print(" ".join(map(str, sorted(wit))))
    return EXIT_OK


def cmd_verify(args) -> int:
    g = _read_plane(args.input)
    vs = parse_solution(_read_text(args.solution))
    bad = [v for v in vs if not 0 <= v < g.n]
    if bad:
        print(f"invalid: vertex {bad[0]} out of range")
        return EXIT_CHECK_FAILED
    if len(set(vs)) != len(vs):
        print("invalid: repeated vertex")
        return EXIT_CHECK_FAILED
    ok, edge = is_independent(g.adj, vs)
    if not ok:
        print(f"invalid: edge {edge[0]} {edge[1]} inside the set")
        return EXIT_CHECK_FAILED
    if args.k is not None and 3 * len(vs) < g.n + args.k:
        print(f"invalid: size {len(vs)} below (n+k)/3 = ({g.n}+{args.k})/3")
        return EXIT_CHECK_FAILED
    print(f"valid: independent set of size {len(vs)}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="tfpmis", description=__doc__.splitlines()[0])
    p.add_argument("--timeout-ms", type=int, default=None,
                   help="colouring timeout per instance (fallback: TFPMIS_TIMEOUT_MS)")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="generate a plane graph")
    g.add_argument("--family", required=True, choices=generators.FAMILIES)
    for name in ("n", "rows", "cols", "a", "length"):
        g.add_argument(f"--{name}", type=int)
    g.add_argument("--seed", type=int)
    g.add_argument("-o", "--output")
    g.set_defaults(func=cmd_gen)

    for name, func, text in (("decide", cmd_decide, "answer yes/no/unknown"),
                             ("find", cmd_find, "find and write an independent set")):
        s = sub.add_parser(name, help=text)
        s.add_argument("--k", type=int, required=True)
        s.add_argument("--c", help="user constant enabling the s_hat shortcut, e.g. 1/100")
        s.add_argument("--wmax", type=int, default=24)
        if name == "find":
            s.add_argument("-o", "--output")
        s.add_argument("input")
        s.set_defaults(func=func)

    a = sub.add_parser("analyze", help="report structural quantities")
    a.add_argument("--c")
    a.add_argument("--augment", type=int, default=2, metavar="L")
    a.add_argument("--scatter", type=int, nargs=2, metavar=("D", "T"))
    a.add_argument("input")
    a.set_defaults(func=cmd_analyze)

    t = sub.add_parser("tw", help="heuristic tree decomposition in PACE format")
    t.add_argument("--strategy", choices=("min_fill", "min_degree"), default="min_fill")
    t.add_argument("-o", "--output")
    t.add_argument("input")
    t.set_defaults(func=cmd_tw)

    al = sub.add_parser("alpha", help="exact independence number (.gr or .pg)")
    al.add_argument("--max-n", type=int, default=40)
    al.add_argument("--witness", action="store_true")
    al.add_argument("input")
    al.set_defaults(func=cmd_alpha)

    v = sub.add_parser("verify", help="check a solution file")
    v.add_argument("--k", type=int)
    v.add_argument("input")
    v.add_argument("solution")
    v.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if getattr(args, "k", None) is not None and args.k < 0:
            raise UsageError("--k must be >= 0")
        return args.func(args)
    except InvariantViolation as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (TfpmisError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def _entry() -> None:  # pragma: no cover
    sys.exit(main())
