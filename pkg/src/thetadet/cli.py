"""Command-line interface: ``thetadet <command> ...``.

Exit status is 0 when every check passes, 1 when a check fails, 2 on bad
input, 3 when two computation routes disagree and 4 when a graph is too
large for the brute-force oracle.
"""

from __future__ import annotations

import argparse
import random
import sys
from functools import lru_cache
from pathlib import Path
from typing import Optional

from . import families
from .pd import DisagreementError, PDError, PlanarDiagram, knot_determinant, parse_pd, tait_graphs
from .signed_graph import (
    GraphError,
    OracleLimitError,
    random_signed_graph,
    tree_weight,
    tree_weight_oracle,
)
from .symmetric import (
    SymmetricTaitGraph,
    parse_symmetric,
    random_symmetric_graph,
    theta_determinant,
)

EXIT_OK, EXIT_FAIL, EXIT_PARSE, EXIT_DISAGREE, EXIT_ORACLE = 0, 1, 2, 3, 4


class Report:
    """Ordered key/value report, printed as prose or as ``key=value`` lines."""

    def __init__(self, structured: bool):
        self.structured = structured
        self.items: list[tuple[str, object]] = []
        self.lines: list[str] = []

    def add(self, key: str, value):
        self.items.append((key, value))

    def say(self, line: str):
        self.lines.append(line)

    def render(self) -> str:
        if self.structured:
            return "".join(f"{k}={_fmt(v)}\n" for k, v in self.items)
        return "".join(f"{line}\n" for line in self.lines)


def _fmt(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def _read_source(arg: str) -> str:
    """File contents for ``arg``; ``fixtures/...`` also resolves inside the package."""
    path = Path(arg)
    if path.is_file():
        return path.read_text()
    if arg.startswith("fixtures/"):
        bundled = families.fixture_path(arg[len("fixtures/"):])
        if bundled.is_file():
            return bundled.read_text()
    raise PDError(f"no such file: {arg}")


def _load_pd(arg: str) -> PlanarDiagram:
    if not Path(arg).is_file() and arg.lstrip().startswith(("X", "[", "outer=")):
        return parse_pd(arg)
    return parse_pd(_read_source(arg))


def _load_symmetric(arg: str) -> SymmetricTaitGraph:
    try:
        text = _read_source(arg)
    except PDError as exc:
        raise GraphError(str(exc)) from None
    return parse_symmetric(text)


def cmd_det_knot(args, out: Report) -> int:
    d = _load_pd(args.pd)
    values = []
    for graph in tait_graphs(d):
        pivot = None if args.delete_vertex is None else args.delete_vertex % graph.vertex_count
        values.append(tree_weight(graph, pivot))
    a, b = (abs(v) for v in values)
    oracle_ok = None
    if args.oracle:
        oracle_ok = all(tree_weight_oracle(g) == v for g, v in zip(tait_graphs(d), values))
    out.add("crossings", d.crossing_count)
    out.add("det", a)
    out.add("det_shading_a", a)
    out.add("det_shading_b", b)
    out.add("shadings_agree", a == b)
    out.add("oracle_agrees", "skipped" if oracle_ok is None else oracle_ok)
    if a != b:
        raise DisagreementError(f"shadings disagree on the determinant: {a} vs {b}")
    if oracle_ok is False:
        raise DisagreementError("brute-force tree weight disagrees with the Laplacian")
    out.say(f"det = {a}")
    out.say(f"both shadings agree ({a}, {b}); {d.crossing_count} crossings")
    if oracle_ok:
        out.say("spanning-tree enumeration agrees")
    return EXIT_OK


def _theta_lines(report, out: Report):
    for key, value in report.items():
        out.add(key, value)
        out.say(f"{key}: {_fmt(value)}")


def cmd_det_theta(args, out: Report) -> int:
    s = _load_symmetric(args.sym)
    report = theta_determinant(s, oracle=args.oracle)
    _theta_lines(report, out)
    out.lines.insert(0, f"det = {report.det_full} = {report.det_ab} × {report.det_bc}")
    return EXIT_OK


def cmd_pretzel(args, out: Report) -> int:
    params = families.PretzelParams(args.p, args.q)
    report = theta_determinant(families.pretzel_theta(params), oracle=args.oracle)
    p, q = params.p, params.q
    closed = params.closed_form
    ok = report.det_full == closed and report.factors == tuple(sorted((p, p + q)))
    out.add("p", p)
    out.add("q", q)
    _theta_lines(report, out)
    out.add("closed_form", closed)
    out.add("closed_form_agrees", ok)
    small, large = report.factors
    mark = "✓" if ok else "✗"
    out.lines.insert(
        0, f"det = {report.det_full} = {small} × {large}; closed form {p}²+{p}·{q} = {closed} {mark}"
    )
    return EXIT_OK if ok else EXIT_FAIL


@lru_cache(maxsize=None)
def _fixture_det(name: str) -> Optional[int]:
    if name == "0_1":
        return 1
    if name not in families.KNOT_FIXTURES:
        return None
    return knot_determinant(families.load_knot(name))


def cmd_verify_table(args, out: Report) -> int:
    failures = 0
    records = families.table_records()
    for rec in records:
        product_ok = rec.consistent
        # the printed determinant list omits unknot factors in some rows
        printed = sorted(x for x in rec.constituent_dets if x != 1)
        from_pd = [_fixture_det(k) for k in rec.constituents]
        if None in from_pd:
            pd_ok = None
        else:
            pd_ok = sorted(x for x in from_pd if x != 1) == printed
        ok = product_ok and pd_ok is not False
        failures += not ok
        out.add(f"{rec.theta_name}", "pass" if ok else "fail")
        status = "pass" if ok else "FAIL"
        check = "n/a" if pd_ok is None else ("ok" if pd_ok else "mismatch")
        out.say(
            f"{rec.theta_name:>5}  {'*'.join(map(str, rec.constituent_dets)):>6} = {rec.theta_det:<4}"
            f" constituents from PD: {check:<8} {status}"
        )
    out.add("passed", len(records) - failures)
    out.add("total", len(records))
    out.say(f"{len(records) - failures}/{len(records)} rows pass")
    return EXIT_OK if failures == 0 else EXIT_FAIL


def cmd_oracle_check(args, out: Report) -> int:
    rng = random.Random(args.seed)
    tree_pass = pivot_pass = 0
    for _ in range(args.count):
        g = random_signed_graph(rng, max_vertices=args.max_vertices)
        laplace = tree_weight(g)
        tree_pass += laplace == tree_weight_oracle(g)
        pivot_pass += all(tree_weight(g, v) == laplace for v in range(g.vertex_count))
    zy_pass = 0
    for _ in range(args.count):
        s = random_symmetric_graph(rng, max_expanded_edges=20)
        r = theta_determinant(s, oracle=True, strict=False)
        zy_pass += bool(r.zy_agrees and r.oracle_agrees)
    for key, value in (
        ("seed", args.seed),
        ("count", args.count),
        ("matrix_tree_pass", tree_pass),
        ("pivot_invariance_pass", pivot_pass),
        ("factorization_pass", zy_pass),
    ):
        out.add(key, value)
    out.say(f"seed {args.seed}")
    out.say(f"matrix-tree vs enumeration: {tree_pass}/{args.count}")
    out.say(f"pivot invariance: {pivot_pass}/{args.count}")
    out.say(f"symmetric factorization: {zy_pass}/{args.count}")
    ok = tree_pass == pivot_pass == zy_pass == args.count
    return EXIT_OK if ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", choices=("text", "structured"), default="text")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--oracle", action="store_true", help="cross-check by spanning-tree enumeration")
    common.add_argument("--delete-vertex", type=int, default=None, metavar="I",
                        help="reduced-Laplacian pivot")

    parser = argparse.ArgumentParser(prog="thetadet", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("det-knot", parents=[common], help="knot determinant from a PD code")
    p.add_argument("pd", help="PD file, bundled fixtures/<name>.pd, or an inline code")
    p.set_defaults(func=cmd_det_knot)

    p = sub.add_parser("det-theta", parents=[common], help="theta determinant from a symmetric graph")
    p.add_argument("sym", help="symmetric graph file or bundled fixtures/<name>.sym")
    p.set_defaults(func=cmd_det_theta)

    p = sub.add_parser("pretzel", parents=[common], help="theta curve of the pretzel knot P(p, q/2, p)")
    p.add_argument("p", type=int)
    p.add_argument("q", type=int)
    p.set_defaults(func=cmd_pretzel)

    p = sub.add_parser("verify-table", parents=[common], help="check the bundled theta table")
    p.set_defaults(func=cmd_verify_table)

    p = sub.add_parser("oracle-check", parents=[common], help="randomized property checks")
    p.add_argument("--count", type=int, default=200)
    p.add_argument("--max-vertices", type=int, default=8)
    p.set_defaults(func=cmd_oracle_check)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    out = Report(args.output == "structured")
    try:
        status = args.func(args, out)
    except OracleLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ORACLE
    except DisagreementError as exc:
        sys.stdout.write(out.render())
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DISAGREE
    except (PDError, GraphError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    sys.stdout.write(out.render())
    return status


if __name__ == "__main__":
    sys.exit(main())
