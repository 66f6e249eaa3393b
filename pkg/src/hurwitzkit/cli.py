"""Command-line front end.

Exit codes: 0 success (and exact identity for ``verify``), 1 verified
mismatch, 2 usage or input error, 3 capacity error.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from .characters import character_table
from .exactcore import CapacityError, Partition, format_scalar, parse_scalar
from .fixtures import emit_fixture_suite
from .hurwitz import BranchingData, hurwitz_character, hurwitz_permutation_oracle
from .matrices import ExactMatrix, fixed_space_pair, seeded_matrix
from .symfunc import (
    cut_and_join_apply,
    jacobi_trudi_schur,
    powersum_monomial,
    schur_in_powersums,
)
from .weyl import (
    PreconditionError,
    verify_commutator,
    verify_lemma_L1,
    verify_mmn_eigen,
    verify_schur_pairing,
    verify_star,
    verify_three_point_action,
)

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_CAPACITY = 0, 1, 2, 3


class UsageError(ValueError):
    pass


def _partition(text: str) -> Partition:
    try:
        return Partition.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _profiles(text: str) -> list[Partition]:
    text = text.strip()
    if not text:
        return []
    try:
        return [Partition.parse(chunk) for chunk in text.split("|")]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _check_profiles(profiles, degree):
    for p in profiles:
        if p.weight != degree:
            raise UsageError(f"profile {p} has weight {p.weight}, but --degree is {degree}")


def _dump(obj) -> str:
    return json.dumps(obj, indent=2)


# -- matrix sources --------------------------------------------------------------

def _load_matrix_file(path: str) -> dict[str, ExactMatrix]:
    try:
        raw = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read matrix file {path}: {exc}") from exc
    try:
        return {k: ExactMatrix([[parse_scalar(str(x)) for x in row] for row in v])
                for k, v in raw.items()}
    except (ValueError, TypeError) as exc:
        raise UsageError(f"bad matrix in {path}: {exc}") from exc


def _matrices(args, names: list[str]) -> dict[str, ExactMatrix]:
    n = args.size
    if args.matrix_file:
        loaded = _load_matrix_file(args.matrix_file)
        missing = [k for k in names if k not in loaded]
        if missing:
            raise UsageError(f"matrix file lacks {missing}")
        return {k: loaded[k] for k in names}
    out = {}
    for offset, name in enumerate(names):
        if args.matrices == "identity":
            out[name] = ExactMatrix.identity(n)
        elif args.matrices == "diagonal":
            out[name] = ExactMatrix.diagonal([Fraction(k + 1 + offset, 1 + offset) for k in range(n)])
        else:
            out[name] = seeded_matrix(n, args.seed * 1009 + offset, max_den=args.max_den)
    return out


# -- handlers ----------------------------------------------------------------------

def _hurwitz_payload(value, data: BranchingData, brute: bool) -> dict:
    payload = {"value": format_scalar(value), "degree": data.degree, "euler": data.euler,
               "profiles": [str(p) for p in data.profiles]}
    if brute:
        payload["handles"] = data.handles
        payload["crosscaps"] = data.crosscaps
    return payload


def cmd_hurwitz(args) -> int:
    _check_profiles(args.profiles, args.degree)
    if args.subcommand == "char":
        data = BranchingData(args.degree, tuple(args.profiles), euler=args.euler)
        value = hurwitz_character(data)
    else:
        data = BranchingData(args.degree, tuple(args.profiles), handles=args.handles,
                             crosscaps=args.crosscaps)
        value = hurwitz_permutation_oracle(data)
    payload = _hurwitz_payload(value, data, args.subcommand == "brute")
    print(payload["value"] if args.format == "text" else _dump(payload))
    return EXIT_OK


def cmd_char(args) -> int:
    table = character_table(args.degree, cap=args.cap)
    sys.stdout.write(table.to_csv() if args.format == "csv" else table.to_json() + "\n")
    return EXIT_OK


def cmd_schur(args) -> int:
    lam = args.partition
    if args.method == "jacobi-trudi":
        poly = jacobi_trudi_schur(lam, max(len(lam), 1))
    else:
        poly = schur_in_powersums(lam)
    print(_dump(poly.to_json()))
    return EXIT_OK


def cmd_cutjoin(args) -> int:
    if (args.schur is None) == (args.powersum is None):
        raise UsageError("give exactly one of --schur or --powersum")
    f = schur_in_powersums(args.schur) if args.schur is not None else powersum_monomial(args.powersum)
    print(_dump({"input": f.to_json(), "output": cut_and_join_apply(f).to_json()}))
    return EXIT_OK


def _need(args, *names):
    for name in names:
        if getattr(args, name) is None:
            raise UsageError(f"verify {args.subcommand} needs --{name}")


def cmd_verify(args) -> int:
    sub, n = args.subcommand, args.size
    if sub == "commute":
        _need(args, "mu", "nu")
        a = _matrices(args, ["A"])["A"]
        b = {"identity": ExactMatrix.identity(n), "a": a}.get(args.b)
        if b is None:
            b = seeded_matrix(n, args.seed * 1009 + 7, max_den=args.max_den)
        report = verify_commutator(args.mu, args.nu, a, b, n, args.dmax)
    elif sub == "l1":
        _need(args, "mu", "nu")
        m = _matrices(args, ["F", "C"])
        report = verify_lemma_L1(args.mu, args.nu, m["F"], m["C"])
    elif sub == "schur-pair":
        _need(args, "lam", "mu")
        m = _matrices(args, ["C", "F"])
        report = verify_schur_pairing(args.lam, args.mu, m["C"], m["F"])
    elif sub == "three-point":
        _need(args, "mu", "nu")
        m = _matrices(args, ["A", "C"])
        report = verify_three_point_action(args.mu, args.nu, m["A"], m["C"])
    elif sub == "mmn":
        _need(args, "mu", "lam")
        if args.matrices == "identity" and not args.matrix_file:
            a = c = ExactMatrix.identity(n)
        elif args.matrix_file:
            m = _matrices(args, ["A", "C"])
            a, c = m["A"], m["C"]
        else:
            a, c = fixed_space_pair(n, args.seed, k=args.fixed_rank)
        report = verify_mmn_eigen(args.mu, args.lam, a, c)
    else:
        _need(args, "lam")
        mus = _profiles(args.mus) if args.mus else [args.lam] * args.legs
        if args.matrices == "identity" and not args.matrix_file:
            a_list = c_list = [ExactMatrix.identity(n)] * args.legs
        else:
            pairs = [fixed_space_pair(n, args.seed + i, k=args.fixed_rank) for i in range(args.legs)]
            a_list, c_list = [p[0] for p in pairs], [p[1] for p in pairs]
        report = verify_star(args.legs, mus, a_list, c_list, args.lam)
    if args.format == "text":
        print(f"{report.identity}: {report.status} (residual terms: {report.residual_terms})")
    else:
        print(_dump(report.to_dict(timing=args.timing)))
    return EXIT_OK if report.ok else EXIT_MISMATCH


def cmd_fixtures(args) -> int:
    paths = emit_fixture_suite(args.out)
    for p in paths:
        print(p)
    return EXIT_OK


# -- parser ------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hurwitzkit", description=__doc__.splitlines()[0])
    top = parser.add_subparsers(dest="command", required=True)

    hz = top.add_parser("hurwitz", help="Hurwitz numbers").add_subparsers(dest="subcommand", required=True)
    char = hz.add_parser("char", help="character formula")
    char.add_argument("--euler", type=int, required=True)
    brute = hz.add_parser("brute", help="permutation count")
    brute.add_argument("--handles", type=int, default=0)
    brute.add_argument("--crosscaps", type=int, default=0)
    for p in (char, brute):
        p.add_argument("--degree", type=int, required=True)
        p.add_argument("--profiles", type=_profiles, default=[],
                       help='"|"-separated partitions, e.g. "[3]|[3]"')
        p.add_argument("--format", choices=["json", "text"], default="json")
        p.set_defaults(handler=cmd_hurwitz)

    ch = top.add_parser("char", help="character tables").add_subparsers(dest="subcommand", required=True)
    table = ch.add_parser("table")
    table.add_argument("--degree", type=int, required=True)
    table.add_argument("--format", choices=["json", "csv"], default="json")
    table.add_argument("--cap", type=int, default=12)
    table.set_defaults(handler=cmd_char)

    sc = top.add_parser("schur", help="Schur functions").add_subparsers(dest="subcommand", required=True)
    expand = sc.add_parser("expand")
    expand.add_argument("--partition", type=_partition, required=True)
    expand.add_argument("--method", choices=["character-map", "jacobi-trudi"], default="character-map")
    expand.set_defaults(handler=cmd_schur)

    cj = top.add_parser("cutjoin", help="cut-and-join operator").add_subparsers(dest="subcommand", required=True)
    apply_ = cj.add_parser("apply")
    apply_.add_argument("--schur", type=_partition)
    apply_.add_argument("--powersum", type=_partition)
    apply_.set_defaults(handler=cmd_cutjoin)

    vf = top.add_parser("verify", help="operator identities").add_subparsers(dest="subcommand", required=True)
    for name in ("commute", "l1", "schur-pair", "three-point", "mmn", "star"):
        p = vf.add_parser(name)
        p.add_argument("--mu", type=_partition)
        p.add_argument("--nu", type=_partition)
        p.add_argument("--lam", type=_partition)
        p.add_argument("--size", type=int, default=2)
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--dmax", type=int, default=3)
        p.add_argument("--max-den", type=int, default=1)
        p.add_argument("--matrices", choices=["seeded", "identity", "diagonal"], default="seeded")
        p.add_argument("--matrix-file")
        p.add_argument("--format", choices=["json", "text"], default="json")
        p.add_argument("--timing", action="store_true", help="include elapsed_ms in the report")
        p.set_defaults(handler=cmd_verify)
        if name == "commute":
            p.add_argument("--b", choices=["identity", "a", "independent"], default="a")
        if name in ("mmn", "star"):
            p.add_argument("--fixed-rank", type=int, default=None,
                           help="rank of C in the generated A C = C pair")
        if name == "star":
            p.add_argument("--legs", type=int, default=2)
            p.add_argument("--mus", default=None, help='per-leg partitions, "|"-separated')

    fx = top.add_parser("fixtures", help="golden files").add_subparsers(dest="subcommand", required=True)
    emit = fx.add_parser("emit")
    emit.add_argument("--out", required=True)
    emit.set_defaults(handler=cmd_fixtures)
    return parser


def parse_and_dispatch(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.handler(args)
    except CapacityError as exc:
        print(f"capacity error: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except (UsageError, PreconditionError, argparse.ArgumentTypeError) as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(parse_and_dispatch())


if __name__ == "__main__":
    main()
