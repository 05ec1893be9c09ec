"""Command line front end.

Every capability is a subcommand with line-oriented, deterministic
output so pipelines and golden files stay stable.  Graph arguments are
edge-list files; ``-`` (or omitting the argument where noted) reads
standard input.  Exit codes: 0 success (for ``verify``, a valid code;
for ``solve``, status Optimal), 1 failed verification / Infeasible /
unreachable target, 2 usage error, 3 malformed input file.
"""

import argparse
import os
import sys

from .bounds import bounds_report
from .graph_core import (
    EdgeSet,
    FormatError,
    Multigraph,
    line_graph,
    read_code_file,
    read_edge_list,
    write_edge_list,
)
from .families import (
    STANDARD_KINDS,
    FamilyInstance,
    claw_free_example,
    extremal_low1,
    hypercube_matching,
    jk_graph,
    known_code,
    standard_graph,
    subdivided_regular_code,
)
from .identify import verify_edge_code
from .reduction import (
    assignment_to_code,
    build_reduction,
    build_reduction_girth,
    labels_to_text,
    read_dimacs,
    validate_formula,
)
from .solver import (
    DEFAULT_BUDGET,
    STATUS_OPTIMAL,
    SolveOptions,
    approx_edge_code,
    min_edge_code,
)

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_FORMAT = 3


class _UsageError(Exception):
    pass


def _read_text(path):
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise FormatError(f"{path}: {exc.strerror or exc}") from None


def _default_budget():
    raw = os.environ.get("EDGEID_BUDGET")
    if raw is None:
        return DEFAULT_BUDGET
    try:
        budget = int(raw)
    except ValueError:
        raise _UsageError(f"EDGEID_BUDGET must be an integer, got {raw!r}") from None
    if budget < 1:
        raise _UsageError("EDGEID_BUDGET must be positive")
    return budget


def _emit(text):
    sys.stdout.write(text)
    if text and not text.endswith("\n"):
        sys.stdout.write("\n")


def cmd_verify(args):
    g, embedded, _ = read_edge_list(_read_text(args.graph))
    if args.code is not None:
        listed = read_code_file(_read_text(args.code), g.m)
    elif embedded is not None:
        listed = embedded
    else:
        raise _UsageError("no code to verify: pass a code file or embed c lines")
    code = EdgeSet.from_indices(g, listed)
    report = verify_edge_code(g, code)
    _emit(report.to_text())
    print(f"size {len(code)}")
    return EXIT_OK if report.is_code else EXIT_FAIL


def cmd_solve(args):
    g, _, _ = read_edge_list(_read_text(args.graph))
    hint = None
    if args.hint is not None:
        hint = read_code_file(_read_text(args.hint), g.m)
    budget = args.budget if args.budget is not None else _default_budget()
    if budget < 1:
        raise _UsageError("budget must be positive")
    opts = SolveOptions(budget=budget, upper_hint=hint, parallel=args.parallel)
    try:
        result = min_edge_code(g, opts)
    except ValueError as exc:
        # a rejected hint is a failed verification, not a usage slip
        print(str(exc), file=sys.stderr)
        return EXIT_FAIL
    size = result.size if result.size is not None else "-"
    print(f"size {size} status {result.status}")
    if result.lower_bound_used is not None:
        name, value = result.lower_bound_used
        print(f"lower-bound {name} {value}")
    if result.code is not None:
        for i in result.code.indices():
            print(f"c {i}")
    return EXIT_OK if result.status == STATUS_OPTIMAL else EXIT_FAIL


def cmd_approx(args):
    g, _, _ = read_edge_list(_read_text(args.graph))
    try:
        code = approx_edge_code(g)
    except ValueError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_FAIL
    print(f"size {len(code)}")
    for i in code.indices():
        print(f"c {i}")
    return EXIT_OK


def cmd_bounds(args):
    g, _, _ = read_edge_list(_read_text(args.graph))
    report = bounds_report(g)
    _emit(report.to_text())
    _emit(report.to_key_values())
    return EXIT_OK


def _family_instance(args):
    kind = args.kind
    params = args.params
    if kind in STANDARD_KINDS:
        if args.with_code:
            return known_code(kind, params)
        return FamilyInstance(graph=standard_graph(kind, params))
    if kind == "matching":
        if len(params) != 1:
            raise _UsageError("matching takes one parameter d")
        matching = hypercube_matching(params[0])
        return FamilyInstance(
            graph=standard_graph("hypercube", params[0]),
            claimed_code=matching,
            claimed_gamma=len(matching),
        )
    if kind == "jk":
        if len(params) != 1:
            raise _UsageError("jk takes one parameter k")
        return jk_graph(params[0])
    if kind == "extremal1":
        if len(params) != 1:
            raise _UsageError("extremal1 takes one parameter k")
        return extremal_low1(params[0])
    if kind == "clawfree":
        if len(params) != 1:
            raise _UsageError("clawfree takes one parameter k")
        return claw_free_example(params[0])
    if kind == "subdivided":
        if len(params) != 1 or args.multigraph is None:
            raise _UsageError("subdivided takes one parameter k and --multigraph FILE")
        mg = _read_multigraph(_read_text(args.multigraph))
        return subdivided_regular_code(mg, params[0])
    raise _UsageError(f"unknown family kind {kind!r}")


def cmd_family(args):
    inst = _family_instance(args)
    code = None
    comments = []
    if args.with_code:
        if inst.claimed_code is None:
            raise _UsageError(f"no code available for {args.kind}")
        if inst.code_kind == "vertex":
            listed = " ".join(str(v) for v in inst.claimed_code)
            comments.append(f"vertex-code {listed}")
        else:
            code = sorted(inst.claimed_code.indices())
    _emit(write_edge_list(inst.graph, code=code, comments=comments))
    return EXIT_OK


def cmd_linegraph(args):
    g, _, _ = read_edge_list(_read_text(args.graph))
    lg, mapping = line_graph(g)
    comments = [
        f"vertex {mapping[i]} = edge {u} {v}" for i, (u, v) in enumerate(g.edges)
    ]
    _emit(write_edge_list(lg, comments=comments))
    return EXIT_OK


def cmd_reduce(args):
    formula = read_dimacs(_read_text(args.cnf))
    problems = validate_formula(formula)
    if problems:
        for p in problems:
            print(p, file=sys.stderr)
        return EXIT_FORMAT
    if args.girth is not None:
        lam, mu = args.girth
        try:
            inst = build_reduction_girth(formula, lam, mu)
        except ValueError as exc:
            raise _UsageError(str(exc)) from None
    else:
        inst = build_reduction(formula)
    code = None
    if args.assignment is not None:
        tokens = _read_text(args.assignment).split()
        try:
            asg = [bool(int(t)) for t in tokens]
        except ValueError:
            raise FormatError(
                f"{args.assignment}: assignment entries must be 0 or 1"
            ) from None
        try:
            code = sorted(assignment_to_code(inst, asg).indices())
        except ValueError as exc:
            print(str(exc), file=sys.stderr)
            return EXIT_FAIL
    if args.labels is not None:
        with open(args.labels, "w", encoding="utf-8") as fh:
            fh.write(labels_to_text(inst.labels))
    _emit(write_edge_list(inst.graph, code=code, k=inst.k))
    return EXIT_OK


def _read_multigraph(text):
    header = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if header is None:
            if len(parts) != 2:
                raise FormatError(f"line {lineno}: expected 'n m' header")
            try:
                header = (int(parts[0]), int(parts[1]))
            except ValueError:
                raise FormatError(f"line {lineno}: expected 'n m' header") from None
            continue
        if parts[0] in ("c", "k"):
            continue
        if len(parts) != 2:
            raise FormatError(f"line {lineno}: expected 'u v' edge line")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise FormatError(f"line {lineno}: expected 'u v' edge line") from None
        edges.append((u, v))
    if header is None:
        raise FormatError("empty multigraph input")
    n, m = header
    if len(edges) != m:
        raise FormatError(f"header declares {m} edges, found {len(edges)}")
    try:
        return Multigraph(n, edges)
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def build_parser():
    parser = argparse.ArgumentParser(
        prog="edgeid",
        description="Compute, verify, and bound edge-identifying codes.",
    )
    sub = parser.add_subparsers(dest="subcommand", metavar="subcommand")
    sub.required = True

    p = sub.add_parser("verify", help="check an edge set against a graph")
    p.add_argument("graph", nargs="?", default="-", help="edge-list file, - for stdin")
    p.add_argument("code", nargs="?", help="code file; defaults to embedded c lines")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("solve", help="exact minimum edge-identifying code")
    p.add_argument("graph", nargs="?", default="-")
    p.add_argument("--budget", type=int, help="search node budget")
    p.add_argument("--hint", help="file with a known code, used as upper bound")
    p.add_argument("--parallel", action="store_true", help="split the search")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("approx", help="inclusionwise minimal code (4-approximation)")
    p.add_argument("graph", nargs="?", default="-")
    p.set_defaults(func=cmd_approx)

    p = sub.add_parser("bounds", help="lower and upper bounds report")
    p.add_argument("graph", nargs="?", default="-")
    p.set_defaults(func=cmd_bounds)

    kinds = sorted(
        STANDARD_KINDS + ("matching", "jk", "extremal1", "clawfree", "subdivided")
    )
    p = sub.add_parser("family", help="emit a named graph family member")
    p.add_argument("kind", choices=kinds)
    p.add_argument("params", nargs="*", type=int)
    p.add_argument("--with-code", action="store_true", help="embed the known code")
    p.add_argument("--multigraph", help="input multigraph for kind 'subdivided'")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("linegraph", help="emit the line graph with its index map")
    p.add_argument("graph", nargs="?", default="-")
    p.set_defaults(func=cmd_linegraph)

    p = sub.add_parser("reduce", help="build a SAT reduction instance")
    p.add_argument("cnf", nargs="?", default="-", help="DIMACS CNF file")
    p.add_argument(
        "--girth",
        nargs=2,
        type=int,
        metavar=("LAMBDA", "MU"),
        help="stretch parameters, default 1 2",
    )
    p.add_argument("--assignment", help="0/1 assignment file, emits the mapped code")
    p.add_argument("--labels", help="write the edge-label sidecar to this path")
    p.set_defaults(func=cmd_reduce)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except FormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FORMAT
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
