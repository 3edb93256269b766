"""Command-line front end.

Exit status: 0 for a definitive answer, 2 when a search or criterion is
inconclusive, 1 for usage and input errors.
"""

from __future__ import annotations

import argparse
import sys

from finspace.aspherical import asphericity_certificate, is_strong_aspherical, strong_aspherical_complex, whitehead_check
from finspace.algebra import edge_path_presentation, free_rank_height1, homology, homology_space, tietze_simplify
from finspace.errors import FiniteSpaceError
from finspace.fixtures import FIXTURES
from finspace.poset import components, extremal_points, height, maximum, minimum
from finspace.qc import is_qc_reducible, prop25_check, qc_candidates, qc_reduce
from finspace.reduction import ReductionTrace, core, is_collapsible
from finspace.search import DEFAULT_BUDGET, Outcome
from finspace.simplicial import barycentric, collapse_to_dimension, face_poset, order_complex
from finspace.textio import export_dot, parse_complex, parse_space, serialize_complex, serialize_space

OK, ERROR, UNDECIDED = 0, 1, 2

COMPLEX_INPUT = {"face-poset", "barycentric"}


class UsageError(Exception):
    pass


def _read(path):
    if path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def _labels(value):
    return [x for x in value.split(",") if x] if value else []


def _load_space(args):
    if args.fixture:
        if args.fixture not in FIXTURES:
            raise UsageError(f"unknown fixture {args.fixture!r}; choose from {', '.join(FIXTURES)}")
        X = FIXTURES[args.fixture]
    elif args.input:
        X = parse_space(_read(args.input))
    else:
        raise UsageError("give an input file or --fixture NAME")
    if args.remove and args.command != "whitehead":
        X = X.remove(*_labels(args.remove))
    return X


def _load_complex(args):
    if args.input:
        return parse_complex(_read(args.input))
    if args.fixture:
        return order_complex(_load_space(args))
    raise UsageError("give a complex file (or --fixture NAME to use its order complex)")


def _search_line(name, result):
    if isinstance(result, Outcome):
        return f"{name}: {result}"
    trace = result[0] if isinstance(result, tuple) else result
    return f"{name}: found ({len(trace)} moves)"


def _status(result):
    return UNDECIDED if result is Outcome.UNKNOWN else OK


def cmd_info(args, out):
    X = _load_space(args)
    out.append(f"points: {len(X)}")
    out.append(f"covers: {len(X.covers)}")
    if len(X):
        out.append(f"height: {height(X)}")
        out.append(f"maximal: {' '.join(sorted(extremal_points(X, 'max')))}")
        out.append(f"minimal: {' '.join(sorted(extremal_points(X, 'min')))}")
        out.append(f"maximum: {maximum(X) or '-'}")
        out.append(f"minimum: {minimum(X) or '-'}")
    comps = components(X)
    out.append(f"components: {len(comps)}")
    for comp in comps:
        out.append("  {" + " ".join(sorted(comp)) + "}")
    return OK


def cmd_core(args, out):
    X = _load_space(args)
    C, trace = core(X)
    out.append(f"core: {len(C)} points: {' '.join(C)}")
    out.append(f"contractible: {'yes' if len(C) == 1 else 'no'}")
    out.append(trace.to_text())
    return OK


def cmd_collapse(args, out):
    if args.complex or args.dim is not None:
        K = _load_complex(args)
        d = 0 if args.dim is None else args.dim
        result = collapse_to_dimension(K, d, args.budget)
        if isinstance(result, Outcome):
            out.append(f"collapse to dimension {d}: {result}")
            return _status(result)
        out.append(f"collapse to dimension {d}: {len(result)} collapses")
        out += [f"{' '.join(s)} < {' '.join(t)}" for s, t in result.steps]
        return OK
    X = _load_space(args)
    result = is_collapsible(X, args.budget)
    out.append(_search_line("collapsible", result))
    if isinstance(result, ReductionTrace):
        out.append(result.to_text())
    return _status(result)


def cmd_homology(args, out):
    if args.complex:
        hom = homology(_load_complex(args))
    else:
        hom = homology_space(_load_space(args))
    out.append(f"H: {hom.compact()}")
    out.append(str(hom))
    return OK


def cmd_pi1(args, out):
    X = _load_space(args)
    K = order_complex(X)
    base = args.basepoint or min(K.vertices)
    raw = edge_path_presentation(K, base)
    simple = tietze_simplify(raw, args.budget)
    out.append(f"edge-path presentation: {raw}")
    out.append(f"simplified: {simple}")
    if simple.is_trivial():
        out.append("trivial: proved")
        return OK
    if height(X) <= 1:
        out.append(f"free of rank {free_rank_height1(X)[0]}")
        return OK
    out.append("trivial: unknown")
    return UNDECIDED


def cmd_qc(args, out):
    X = _load_space(args)
    if args.pair:
        a, b = args.pair
        report = prop25_check(X, a, b)
        out.append(f"pair {a} {b}: {_triple(report)}")
        Y, move = qc_reduce(X, a, b)
        out.append(f"reduced: {move.a} {move.b} -> {move.c}")
        out.append(serialize_space(Y).rstrip())
        return OK
    pairs = qc_candidates(X)
    if not pairs:
        out.append("no candidates")
    else:
        out.append("candidates: " + ", ".join(f"{a} {b}" for a, b in pairs))
    maxima = sorted(extremal_points(X, "max"))
    for i, a in enumerate(maxima):
        for b in maxima[i + 1:]:
            out.append(f"  {a} {b}: {_triple(prop25_check(X, a, b))}")
    result = is_qc_reducible(X, args.budget)
    out.append(_search_line("qc-reducible", result))
    if not isinstance(result, Outcome):
        out.append(result[0].to_text())
    return _status(result)


def _triple(report):
    flags = "/".join("T" if v else "F" for v in report.triple)
    note = "" if report.hypothesis_holds else " (H_2 != 0: equivalence not asserted)"
    return f"union contractible/intersection connected/intersection contractible = {flags}{note}"


def cmd_strong_aspherical(args, out):
    if args.complex:
        cert = strong_aspherical_complex(_load_complex(args), args.budget)
        out.append(cert.report())
        return OK if cert.verdict.definitive else UNDECIDED
    result = is_strong_aspherical(_load_space(args), args.budget)
    out.append(_search_line("strong aspherical", result))
    if isinstance(result, ReductionTrace):
        out.append(result.to_text())
    return _status(result)


def cmd_aspherical(args, out):
    cert = asphericity_certificate(_load_space(args), args.budget)
    out.append(cert.report())
    return OK if cert.verdict.definitive else UNDECIDED


def cmd_whitehead(args, out):
    X = _load_space(args)
    points = _labels(args.remove)
    if len(points) != 1:
        raise UsageError("whitehead needs --remove LABEL naming one point")
    report = whitehead_check(X, points[0], args.budget)
    out.append(report.report())
    return OK if report.definitive else UNDECIDED


def cmd_order_complex(args, out):
    out.append(serialize_complex(order_complex(_load_space(args))).rstrip())
    return OK


def cmd_face_poset(args, out):
    out.append(serialize_space(face_poset(_load_complex(args))).rstrip())
    return OK


def cmd_barycentric(args, out):
    out.append(serialize_complex(barycentric(_load_complex(args))).rstrip())
    return OK


def cmd_replay(args, out):
    if not args.trace:
        raise UsageError("replay needs --trace FILE")
    X = _load_space(args)
    trace = ReductionTrace.from_text(_read(args.trace), X)
    final = trace.replay()
    out.append(f"replayed {len(trace)} moves: {len(X)} -> {len(final)} points")
    out.append(serialize_space(final).rstrip())
    return OK


def cmd_export_dot(args, out):
    out.append(export_dot(_load_space(args)).rstrip())
    return OK


def cmd_fixture(args, out):
    name = args.input or args.fixture
    if not name:
        out += list(FIXTURES)
        return OK
    if name not in FIXTURES:
        raise UsageError(f"unknown fixture {name!r}")
    out.append(f"# {name}")
    out.append(serialize_space(FIXTURES[name]).rstrip())
    return OK


COMMANDS = {
    "info": cmd_info,
    "core": cmd_core,
    "collapse": cmd_collapse,
    "homology": cmd_homology,
    "pi1": cmd_pi1,
    "qc": cmd_qc,
    "strong-aspherical": cmd_strong_aspherical,
    "aspherical": cmd_aspherical,
    "whitehead": cmd_whitehead,
    "order-complex": cmd_order_complex,
    "face-poset": cmd_face_poset,
    "barycentric": cmd_barycentric,
    "replay": cmd_replay,
    "export-dot": cmd_export_dot,
    "fixture": cmd_fixture,
}


def build_parser():
    parser = argparse.ArgumentParser(prog="finspace", description="Finite spaces and asphericity certificates.")
    parser.add_argument("command", choices=sorted(COMMANDS))
    parser.add_argument("input", nargs="?", help="input file ('-' for stdin); fixture name for 'fixture'")
    parser.add_argument("--fixture", help="use a built-in space instead of a file")
    parser.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="search node budget")
    parser.add_argument("--remove", help="comma-separated labels to delete (the point a for 'whitehead')")
    parser.add_argument("--pair", nargs=2, metavar=("A", "B"), help="maximal pair for 'qc'")
    parser.add_argument("--trace", help="trace file for 'replay'")
    parser.add_argument("--complex", action="store_true", help="input file is a simplicial complex")
    parser.add_argument("--dim", type=int, help="target dimension for 'collapse' on a complex")
    parser.add_argument("--basepoint", help="basepoint for 'pi1'")
    return parser


def dispatch(argv, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return OK if exc.code == 0 else ERROR
    if args.command in COMPLEX_INPUT:
        args.complex = True
    out: list[str] = []
    try:
        code = COMMANDS[args.command](args, out)
    except (UsageError, FiniteSpaceError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=stderr)
        return ERROR
    if out:
        print("\n".join(out), file=stdout)
    return code


def main(argv=None) -> int:
    return dispatch(sys.argv[1:] if argv is None else argv)


if __name__ == "__main__":
    sys.exit(main())
