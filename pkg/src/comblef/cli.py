"""Command-line front end.

Every command prints ``key = value`` lines (or one flat JSON object with
``--json``).  Exit codes: 0 success, 1 precondition violated, 2 bad input,
3 property or suite failure.
"""
from __future__ import annotations

import argparse
import json
import sys
import warnings

from . import corpus, textio
from .chains import betti, boundary_system, homology_lefschetz
from .complex import barycentric_subdivide, euler_comb, subdivide_cellset
from .engine import (
    SelfMapSystem,
    Verdict,
    certify_fixed_point,
    check_compatibility,
    index_via_lambda,
    lambda_comb,
    lefschetz,
    quotient_lambda,
    relative_lefschetz,
    restricted_lefschetz,
)
from .errors import ComblefError, ParseError, PreconditionError
from .proptest import run_properties
from .torus import OutOfHypothesisWarning, TorusMapMatrix, torus_lefschetz, torus_nielsen, triad_bound_via_lambda, triad_lower_bound
from .unbounded import CompactifiedSystem, SpaceClass, certify_unbounded

EXIT_OK, EXIT_PRECONDITION, EXIT_PARSE, EXIT_FAILURE = 0, 1, 2, 3


class Report:
    def __init__(self):
        self.pairs: list[tuple[str, str]] = []
        self.table: list[str] = []
        self.extra: list[str] = []
        self.warnings: list[str] = []
        self.code = EXIT_OK

    def add(self, key, value):
        if isinstance(value, bool):
            value = str(value).lower()
        elif isinstance(value, (list, tuple)):
            value = " ".join(str(v) for v in value)
        self.pairs.append((key, str(value)))

    def render(self, as_json: bool) -> str:
        if as_json:
            return json.dumps(dict(self.pairs), sort_keys=False)
        lines = self.table + [f"{k} = {v}" for k, v in self.pairs] + self.extra
        return "\n".join(lines)


def _system(args) -> SelfMapSystem:
    X = textio.load_complex(args.complex)
    return SelfMapSystem.of(textio.load_map(args.map, X))


def cmd_check(args, out: Report):
    X = textio.load_complex(args.complex)
    out.add("vertices", len(X.vertices))
    out.add("dim", X.dim)
    out.add("f_vector", X.f_vector())
    if args.map:
        textio.load_map(args.map, X)
        out.add("map", "simplicial")


def cmd_euler(args, out: Report):
    X = textio.load_complex(args.complex)
    out.add("euler", X.euler_characteristic())


def cmd_euler_comb(args, out: Report):
    X = textio.load_complex(args.complex)
    A = textio.load_cells(args.set, X) if args.set else X.all_cells()
    out.add("euler_comb", euler_comb(A))


def cmd_homology(args, out: Report):
    X = textio.load_complex(args.complex)
    b = betti(boundary_system(X))
    out.add("betti", b)
    out.add("euler", sum((-1) ** p * x for p, x in enumerate(b)))


def cmd_lefschetz(args, out: Report):
    S = _system(args)
    out.add("lefschetz", lefschetz(S))
    out.add("homology_lefschetz", homology_lefschetz(S.chains))
    if args.dump_chain:
        out.extra.append(S.chains.dump())


def cmd_lefschetz_comb(args, out: Report):
    S = _system(args)
    A = textio.load_cells(args.set, S.complex)
    report = check_compatibility(S, A)
    out.add("a_preserved", report.a_preserved)
    out.add("complement_preserved", report.complement_preserved)
    out.add("nondegenerate_on_cells", report.nondegenerate_on_cells)
    out.add("lambda_comb", lambda_comb(S, A, enforce=not args.no_enforce))
    if args.dump_chain:
        out.extra.append(S.chains.restrict(A).dump() if A.is_locally_closed() else S.chains.dump())


def cmd_relative(args, out: Report):
    S = _system(args)
    C = textio.load_cells(args.sub, S.complex)
    out.add("relative_lefschetz", relative_lefschetz(S, C))


def cmd_quotient(args, out: Report):
    S = _system(args)
    A = textio.load_cells(args.sub, S.complex)
    q = quotient_lambda(S, A)
    total, sub = lefschetz(S), restricted_lefschetz(S, A)
    out.add("quotient_lambda", q)
    out.add("lefschetz", total)
    out.add("restricted_lefschetz", sub)
    out.add("cofibration", total == sub + q - 1)


def cmd_index(args, out: Report):
    S = _system(args)
    U = textio.load_cells(args.open, S.complex)
    out.add("index", index_via_lambda(S, U))


def _emit_certificate(cert, out: Report):
    for k, v in cert.as_pairs():
        out.add(k, v)
    if cert.verdict is Verdict.PRECONDITION_VIOLATED:
        out.code = EXIT_PRECONDITION


def cmd_certify(args, out: Report):
    S = _system(args)
    _emit_certificate(certify_fixed_point(S, textio.load_cells(args.set, S.complex)), out)


def cmd_certify_unbounded(args, out: Report):
    S = _system(args)
    corona = textio.load_cells(args.corona, S.complex)
    chi = None
    if args.chi is not None:
        try:
            chi = tuple(int(x) for x in args.chi.replace(",", " ").split())
        except ValueError:
            raise ParseError(f"--chi expects integers, got {args.chi!r}") from None
    try:
        cls = SpaceClass(args.space_class, chi)
    except ValueError as exc:
        raise ParseError(str(exc)) from None
    _emit_certificate(certify_unbounded(CompactifiedSystem(S, corona), cls, args.assume_conjecture), out)


def _matrix(text: str, p: int | None) -> TorusMapMatrix:
    try:
        return TorusMapMatrix.parse(text, p)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def cmd_torus_lefschetz(args, out: Report):
    M = _matrix(args.matrix, args.p)
    out.add("lefschetz", torus_lefschetz(M))
    out.add("nielsen", torus_nielsen(M))


def cmd_nielsen_bound(args, out: Report):
    if args.lambda_total is not None:
        if args.lambda_sphere is None or args.case is None:
            raise ParseError("--lambda-total needs --lambda-sphere and --case")
        out.add("bound", triad_bound_via_lambda(args.lambda_total, args.lambda_sphere, args.case))
        return
    if args.matrix1 is None or args.matrix2 is None:
        raise ParseError("give --matrix1 and --matrix2, or --lambda-total, --lambda-sphere and --case")
    M1, M2 = _matrix(args.matrix1, args.p), _matrix(args.matrix2, args.p)
    if M1.p != M2.p:
        raise ParseError(f"dimension mismatch: {M1.p} vs {M2.p}")
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", OutOfHypothesisWarning)
        bound = triad_lower_bound(M1, M2)
    out.add("lefschetz_1", torus_lefschetz(M1))
    out.add("lefschetz_2", torus_lefschetz(M2))
    out.add("bound", bound)
    out.add("in_hypothesis", not caught)
    out.warnings += [f"warning: {w.message}" for w in caught]


def _label(v) -> str:
    if isinstance(v, tuple):
        return "{" + ",".join(_label(x) for x in v) + "}"
    return str(v)


def cmd_subdivide(args, out: Report):
    X = textio.load_complex(args.complex)
    if args.rounds < 1:
        raise ParseError("--rounds must be at least 1")
    sd = barycentric_subdivide(X, args.rounds)
    out.add("rounds", args.rounds)
    out.add("f_vector", sd.subdivided.f_vector())
    out.add("euler", sd.subdivided.euler_characteristic())
    if args.set:
        A = textio.load_cells(args.set, X)
        out.add("euler_comb", euler_comb(A))
        out.add("euler_comb_subdivided", euler_comb(subdivide_cellset(sd, A)))
    if args.output:
        rows = ["simplex " + " ".join(_label(v) for v in s) for s in sd.subdivided.maximal_simplices()]
        with open(args.output, "w") as fh:
            fh.write("\n".join(rows) + "\n")
        out.add("output", args.output)


def cmd_reference_suite(args, out: Report):
    rows = corpus.run_suite()
    width = max(len(r.fixture) for r in rows)
    qwidth = max(len(r.quantity) for r in rows)
    for i, r in enumerate(rows):
        status = "PASS" if r.ok else "FAIL"
        computed = "error" if r.computed is None else r.computed
        if args.json:
            out.add(f"{r.fixture}/{r.quantity}", f"{r.expected} {computed} {r.source} {status}")
        else:
            out.table.append(
                f"{r.fixture:<{width}}  {r.quantity:<{qwidth}}  expected={r.expected:>3}  "
                f"computed={computed!s:>5}  {r.source:<8}  {status}"
            )
    failed = sum(not r.ok for r in rows)
    out.add("rows", len(rows))
    out.add("failed", failed)
    out.add("suite", "PASS" if not failed else "FAIL")
    if failed:
        out.code = EXIT_FAILURE


def cmd_proptest(args, out: Report):
    if args.cases < 1:
        raise ParseError("--cases must be positive")
    results = run_properties(args.seed, args.cases)
    out.add("seed", args.seed)
    out.add("cases", args.cases)
    for r in results:
        out.add(r.name, f"{'PASS' if r.ok else 'FAIL'} checked={r.checked} failures={len(r.failures)}")
    passed = all(r.ok for r in results)
    out.add("proptest", "PASS" if passed else "FAIL")
    if not passed:
        out.code = EXIT_FAILURE


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit one flat JSON object")
    parser = argparse.ArgumentParser(prog="comblef", description="Combinatorial Lefschetz numbers and fixed-point certificates.")
    sub = parser.add_subparsers(dest="command", required=True)

    def command(name, func, help_text, complex_=True, map_=False, map_optional=False):
        p = sub.add_parser(name, parents=[common], help=help_text)
        if complex_:
            p.add_argument("complex", help="complex file (simplex records)")
        if map_:
            p.add_argument("map", nargs="?" if map_optional else None, help="vertex map file (map records)")
        p.set_defaults(func=func)
        return p

    command("check", cmd_check, "validate a complex and optionally a map", map_=True, map_optional=True)
    command("euler", cmd_euler, "Euler characteristic")
    command("euler-comb", cmd_euler_comb, "combinatorial Euler characteristic of a cell set").add_argument("--set")
    command("homology", cmd_homology, "rational Betti numbers")
    p = command("lefschetz", cmd_lefschetz, "Lefschetz number by chain and homology traces", map_=True)
    p.add_argument("--dump-chain", action="store_true")
    p = command("lefschetz-comb", cmd_lefschetz_comb, "combinatorial Lefschetz number of a cell set", map_=True)
    p.add_argument("--set", required=True)
    p.add_argument("--no-enforce", action="store_true", help="skip the compatibility check")
    p.add_argument("--dump-chain", action="store_true")
    command("relative", cmd_relative, "relative Lefschetz number", map_=True).add_argument("--sub", required=True)
    command("quotient-lefschetz", cmd_quotient, "Lefschetz number on the quotient", map_=True).add_argument("--sub", required=True)
    command("index", cmd_index, "fixed-point index of an open set", map_=True).add_argument("--open", required=True)
    command("certify", cmd_certify, "fixed-point certificate", map_=True).add_argument("--set", required=True)
    p = command("certify-unbounded", cmd_certify_unbounded, "certificate for an unbounded space", map_=True)
    p.add_argument("--corona", required=True)
    p.add_argument("--class", dest="space_class", required=True,
                   choices=["graph", "surface", "surface-boundary", "wedge", "collapse"])
    p.add_argument("--chi", help="combinatorial Euler characteristics of the wedge summands")
    p.add_argument("--assume-conjecture", action="store_true")
    p = command("torus-lefschetz", cmd_torus_lefschetz, "det(I - A) on the p-torus", complex_=False)
    p.add_argument("--p", type=int)
    p.add_argument("--matrix", required=True)
    p = command("nielsen-bound", cmd_nielsen_bound, "Nielsen triad lower bound", complex_=False)
    p.add_argument("--p", type=int)
    p.add_argument("--matrix1")
    p.add_argument("--matrix2")
    p.add_argument("--lambda-total", type=int)
    p.add_argument("--lambda-sphere", type=int)
    p.add_argument("--case", choices=["plus", "minus"])
    p = command("subdivide", cmd_subdivide, "barycentric subdivision")
    p.add_argument("--rounds", type=int, default=1)
    p.add_argument("--set")
    p.add_argument("--output")
    command("paper-suite", cmd_reference_suite, "run every fixture with expected values", complex_=False)
    p = command("proptest", cmd_proptest, "seeded randomized identity checks", complex_=False)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--cases", type=int, default=100)
    return parser


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_PARSE if exc.code else EXIT_OK
    out = Report()
    try:
        args.func(args, out)
    except PreconditionError as exc:
        print(f"precondition violated: {exc}", file=stderr)
        if exc.report is not None:
            print(exc.report.describe(), file=stderr)
        return EXIT_PRECONDITION
    except (ComblefError, ValueError) as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_PARSE
    for w in out.warnings:
        print(w, file=stderr)
    print(out.render(args.json), file=stdout)
    return out.code


def main() -> None:
    sys.exit(run())
