"""Command-line front end.

Graph files are UTF-8 text: ``#`` starts a comment, the first remaining line
is ``n m`` and it is followed by exactly ``m`` lines ``u v`` with integer
vertex labels in ``[0, n)``.

Exit codes: 0 success, 1 input or validation error, 2 unsupported graph
class, 3 oracle size limit exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import asdict, dataclass, field

import numpy as np

from .block_dp import solve_r2d_block
from .checkers import as_labels, is_ir2df, is_r2df, is_vertex_cover, weight
from .decomposition import is_block_graph
from .errors import AssignmentError, GraphError, OracleSizeError
from .graph import (
    Graph, build_graph, connected_components, induced_subgraph, is_complete, is_tree,
)
from .oracle import (
    brute_gamma_r2, brute_i_r2, brute_min_vertex_cover, gen_random_block_graph,
    gen_random_tree,
)
from .reduction import vc_to_r2d
from .tree_dp import solve_ir2d_tree

EXIT_OK, EXIT_INPUT, EXIT_UNSUPPORTED, EXIT_SIZE = 0, 1, 2, 3

PROBLEM_NAMES = {"gamma": "gamma_r2", "igamma": "i_r2", "vc": "vc"}


class GraphParseError(GraphError):
    pass


class UnsupportedGraphClass(GraphError):
    pass


@dataclass
class ComponentReport:
    index: int
    size: int
    method: str
    optimum: int


@dataclass
class RunReport:
    problem: str
    method: str
    optimum: int
    assignment: list[int]
    components: list[ComponentReport] = field(default_factory=list)
    elapsed: float = 0.0

    def to_json(self) -> str:
        return json.dumps(asdict(self))


def _strip(line: str) -> str:
    return line.split("#", 1)[0].strip()


def parse_graph(text: str) -> Graph:
    """Parse the edge-list format; errors carry 1-based line numbers."""
    header = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    n = m = 0
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = _strip(raw)
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphParseError(f"line {lineno}: expected two integers, got {line!r}")
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphParseError(f"line {lineno}: expected two integers, got {line!r}") from None
        if header is None:
            if a < 0 or b < 0:
                raise GraphParseError(f"line {lineno}: negative vertex or edge count")
            header, n, m = lineno, a, b
            continue
        if len(edges) == m:
            raise GraphParseError(f"line {lineno}: more than the declared {m} edges")
        if not (0 <= a < n and 0 <= b < n):
            raise GraphParseError(f"line {lineno}: vertex label outside [0, {n})")
        if a == b:
            raise GraphParseError(f"line {lineno}: self-loop at vertex {a}")
        key = (min(a, b), max(a, b))
        if key in seen:
            raise GraphParseError(f"line {lineno}: duplicate edge {a} {b}")
        seen.add(key)
        edges.append((a, b))
    if header is None:
        raise GraphParseError("missing 'n m' header line")
    if len(edges) != m:
        raise GraphParseError(f"declared {m} edges but found {len(edges)}")
    return build_graph(n, edges)


def format_graph(g: Graph, comment: str | None = None) -> str:
    lines = [f"# {comment}"] if comment else []
    lines.append(f"{g.n} {g.m}")
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def _solve_component(h: Graph, problem: str, use_oracle: bool) -> tuple[int, np.ndarray, str]:
    if h.n == 1:
        return 1, np.ones(1, dtype=np.int64), "complete-case"
    if is_complete(h):
        f = np.zeros(h.n, dtype=np.int64)
        f[0] = 2
        return 2, f, "complete-case"
    if problem == "igamma" and is_tree(h):
        value, f = solve_ir2d_tree(h)
        return value, f, "tree-dp"
    if problem == "gamma" and is_block_graph(h):
        value, f = solve_r2d_block(h)
        return value, f, "block-dp"
    if use_oracle:
        res = brute_i_r2(h) if problem == "igamma" else brute_gamma_r2(h)
        return res.optimum, np.asarray(res.witness, dtype=np.int64), "oracle"
    needed = "a tree" if problem == "igamma" else "a block graph"
    raise UnsupportedGraphClass(
        f"component on {h.n} vertices is not {needed}; rerun with --oracle for brute force"
    )


def _overall_method(methods: list[str]) -> str:
    for m in ("oracle", "tree-dp", "block-dp"):
        if m in methods:
            return m
    return "complete-case"


def solve(g: Graph, problem: str = "gamma", use_oracle: bool = False) -> RunReport:
    """Solve ``gamma`` or ``igamma`` component by component and validate the result."""
    if problem not in ("gamma", "igamma"):
        raise ValueError(f"unknown problem {problem!r}")
    start = time.perf_counter()
    labels = np.zeros(g.n, dtype=np.int64)
    comps = []
    for idx, verts in enumerate(connected_components(g)):
        h = induced_subgraph(g, verts)
        value, f, method = _solve_component(h, problem, use_oracle)
        labels[list(verts)] = f
        comps.append(ComponentReport(idx, len(verts), method, int(value)))
    elapsed = (time.perf_counter() - start) * 1000.0

    total = sum(c.optimum for c in comps)
    valid = is_ir2df(g, labels) if problem == "igamma" else is_r2df(g, labels)
    if not valid or weight(labels) != total:
        raise RuntimeError("internal error: solver produced an invalid certificate")
    return RunReport(
        PROBLEM_NAMES[problem], _overall_method([c.method for c in comps]), total,
        labels.tolist(), comps, elapsed,
    )


def oracle_report(g: Graph, problem: str) -> RunReport:
    """Brute force per component; ``vc`` reports the cover as the assignment."""
    start = time.perf_counter()
    comps = []
    witness: list[int] = [] if problem == "vc" else [0] * g.n
    for idx, verts in enumerate(connected_components(g)):
        h = induced_subgraph(g, verts)
        if problem == "vc":
            res = brute_min_vertex_cover(h)
            witness.extend(verts[i] for i in res.witness)
        else:
            res = brute_i_r2(h) if problem == "igamma" else brute_gamma_r2(h)
            for i, v in enumerate(verts):
                witness[v] = res.witness[i]
        comps.append(ComponentReport(idx, len(verts), "oracle", res.optimum))
    elapsed = (time.perf_counter() - start) * 1000.0
    if problem == "vc":
        witness.sort()
        ok = is_vertex_cover(g, witness)
    else:
        ok = (is_ir2df if problem == "igamma" else is_r2df)(g, witness)
    if not ok:
        raise RuntimeError("internal error: oracle produced an invalid certificate")
    return RunReport(
        PROBLEM_NAMES[problem], "oracle", sum(c.optimum for c in comps), witness, comps, elapsed,
    )


def format_report(r: RunReport) -> str:
    lines = [
        f"problem     {r.problem}",
        f"method      {r.method}",
        f"optimum     {r.optimum}",
        f"elapsed     {r.elapsed:.3f} ms",
        "",
        f"{'component':>9}  {'size':>6}  {'method':<13}  {'optimum':>7}",
    ]
    for c in r.components:
        lines.append(f"{c.index:>9}  {c.size:>6}  {c.method:<13}  {c.optimum:>7}")
    label = "cover" if r.problem == "vc" else "assignment"
    lines += ["", f"{label}  " + " ".join(map(str, r.assignment))]
    return "\n".join(lines)


def read_assignment(text: str) -> list[int]:
    text = text.strip()
    if text.startswith("["):
        data = json.loads(text)
    else:
        data = [int(tok) for tok in text.split()]
    return [int(x) for x in data]


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _emit(report: RunReport, as_json: bool) -> None:
    print(report.to_json() if as_json else format_report(report))


def cmd_solve(args) -> int:
    g = parse_graph(_read(args.graph))
    _emit(solve(g, args.problem, args.oracle), args.json)
    return EXIT_OK


def cmd_oracle(args) -> int:
    g = parse_graph(_read(args.graph))
    _emit(oracle_report(g, args.problem), args.json)
    return EXIT_OK


def cmd_check(args) -> int:
    g = parse_graph(_read(args.graph))
    labels = as_labels(read_assignment(_read(args.assignment)), g.n)
    valid = is_ir2df(g, labels) if args.problem == "igamma" else is_r2df(g, labels)
    result = {"problem": PROBLEM_NAMES[args.problem], "valid": valid, "weight": weight(labels)}
    if args.json:
        print(json.dumps(result))
    else:
        print(f"{'valid' if valid else 'INVALID'}  weight {result['weight']}")
    return EXIT_OK if valid else EXIT_INPUT


def cmd_reduce(args) -> int:
    g = parse_graph(_read(args.graph))
    inst = vc_to_r2d(g)
    text = format_graph(inst.graph, f"split instance of a {g.n}-vertex, {g.m}-edge graph")
    roles = "".join(
        f"{v} {role} {orig}\n" for v, (role, orig) in enumerate(zip(inst.role, inst.origin))
    )
    roles_path = args.roles or (args.output + ".roles" if args.output else None)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if roles_path:
        with open(roles_path, "w", encoding="utf-8") as fh:
            fh.write(roles)
    return EXIT_OK


def cmd_gen(args) -> int:
    if args.kind == "tree":
        g = gen_random_tree(args.n, args.seed)
    else:
        g = gen_random_block_graph(args.n, args.max_block, args.seed)
    sys.stdout.write(format_graph(g, f"{args.kind} n={args.n} seed={args.seed}"))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="r2dom", description="Exact Roman {2}-domination solvers."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="solve with the linear-time DPs")
    p.add_argument("graph", help="edge-list file, or - for stdin")
    p.add_argument("--problem", choices=["gamma", "igamma"], default="gamma")
    p.add_argument("--oracle", action="store_true",
                   help="fall back to brute force on unsupported components")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("check", help="validate an assignment")
    p.add_argument("graph")
    p.add_argument("--problem", choices=["gamma", "igamma"], default="gamma")
    p.add_argument("--assignment", required=True,
                   help="file with n labels (whitespace separated or a JSON array)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("oracle", help="exhaustive search (small components only)")
    p.add_argument("graph")
    p.add_argument("--problem", choices=["gamma", "igamma", "vc"], default="gamma")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("reduce-vc", help="emit the split-graph instance of a graph")
    p.add_argument("graph")
    p.add_argument("-o", "--output", help="write the instance here instead of stdout")
    p.add_argument("--roles", help="role sidecar path (default: OUTPUT.roles)")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("gen", help="generate a seeded random instance")
    p.add_argument("kind", choices=["tree", "block"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--max-block", type=int, default=3)
    p.set_defaults(func=cmd_gen)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except OracleSizeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SIZE
    except UnsupportedGraphClass as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except (GraphError, AssignmentError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
