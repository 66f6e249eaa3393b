"""Golden fixtures: every reference value the package reproduces, one JSON file each."""
from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path
from typing import Callable

from .exactcore import Partition, class_size, enumerate_partitions, format_scalar, zeta
from .hurwitz import (
    BranchingData,
    hurwitz_character,
    hurwitz_permutation_oracle,
    riemann_hurwitz_euler,
)
from .weyl import FockPoly, NormalOp, VarSpace, wick_pair

__all__ = ["FIXTURES", "build_fixtures", "emit_fixture_suite"]


def _both(data_char: BranchingData, data_brute: BranchingData) -> dict:
    a = hurwitz_character(data_char)
    b = hurwitz_permutation_oracle(data_brute)
    return {"character_formula": format_scalar(a), "permutation_count": format_scalar(b)}


def _hurwitz_fixture(name, degree, profiles, euler, handles, crosscaps, expected):
    def build():
        char = BranchingData(degree, profiles, euler=euler)
        brute = BranchingData(degree, profiles, handles=handles, crosscaps=crosscaps)
        computed = _both(char, brute)
        return {
            "name": name,
            "inputs": {"degree": degree, "profiles": [str(Partition(p)) for p in profiles],
                       "euler": euler, "handles": handles, "crosscaps": crosscaps},
            "expected": expected,
            "computed": computed,
            "match": all(v == expected for v in computed.values()),
        }
    return build


def _two_point_delta(max_degree: int = 5):
    def build():
        rows = []
        for d in range(1, max_degree + 1):
            parts = enumerate_partitions(d)
            for p in parts:
                for q in parts:
                    expected = format_scalar(Fraction(1, zeta(p))) if p == q else "0"
                    value = hurwitz_character(BranchingData(d, (p, q), euler=2))
                    rows.append({"degree": d, "profiles": [str(p), str(q)], "expected": expected,
                                 "computed": format_scalar(value)})
        return {
            "name": "two_point_delta",
            "inputs": {"max_degree": max_degree, "euler": 2},
            "expected": "delta(D1, D2) / zeta(D1)",
            "computed": rows,
            "match": all(r["expected"] == r["computed"] for r in rows),
        }
    return build


def _scalar_fixture(name, inputs, expected, fn: Callable[[], object]):
    def build():
        computed = format_scalar(fn())
        return {"name": name, "inputs": inputs, "expected": expected, "computed": computed,
                "match": computed == expected}
    return build


def _pairing_convention(n: int = 2):
    def build():
        space = VarSpace(n)
        v = space.n_vars
        rows, ok = [], True
        for i in range(n):
            for j in range(n):
                dag = [0] * v
                dag[space.index(0, j, i)] = 1  # Zdag[i, j] differentiates Z[j, i]
                op = NormalOp(space, {((0,) * v, tuple(dag)): 1})
                for k in range(n):
                    for l in range(n):
                        value = wick_pair(op, FockPoly.variable(space, 0, k, l))
                        expected = int(i == l and j == k)
                        ok &= value == expected
                        rows.append({"dagger": [i + 1, j + 1], "z": [k + 1, l + 1],
                                     "expected": expected, "computed": int(value)})
        return {"name": "pairing_convention", "inputs": {"size": n},
                "expected": "delta(i, l) delta(j, k)", "computed": rows, "match": ok}
    return build


FIXTURES = {
    "H1_unbranched_d3": _hurwitz_fixture("H1_unbranched_d3", 3, [], 1, 0, 1, "2/3"),
    "H1_trivial_profile_d3": _hurwitz_fixture("H1_trivial_profile_d3", 3, [(1, 1, 1)], 1, 0, 1, "2/3"),
    "H2_3_3": _hurwitz_fixture("H2_3_3", 3, [(3,), (3,)], 2, 0, 0, "1/3"),
    "H2_33": _hurwitz_fixture("H2_33", 6, [(3, 3), (3, 3)], 2, 0, 0, "1/18"),
    "two_point_delta": _two_point_delta(),
    "zeta_33": _scalar_fixture("zeta_33", {"partition": "[3,3]"}, "18", lambda: zeta((3, 3))),
    "class_size_3": _scalar_fixture("class_size_3", {"partition": "[3]"}, "2", lambda: class_size((3,))),
    "class_size_21": _scalar_fixture("class_size_21", {"partition": "[2,1]"}, "3",
                                      lambda: class_size((2, 1))),
    "riemann_hurwitz_u3": _scalar_fixture(
        "riemann_hurwitz_u3", {"e_base": 2, "degree": 3, "profiles": ["[3]", "[3]"]}, "2",
        lambda: riemann_hurwitz_euler(2, 3, [(3,), (3,)])),
    "pairing_convention": _pairing_convention(),
}


def build_fixtures() -> list[dict]:
    return [FIXTURES[name]() for name in sorted(FIXTURES)]


def emit_fixture_suite(directory: str | Path) -> list[Path]:
    directory = Path(directory)
    try:
        directory.mkdir(parents=True, exist_ok=True)
    except OSError as exc:
        raise OSError(f"cannot create fixture directory {directory}: {exc}") from exc
    paths = []
    for record in build_fixtures():
        path = directory / f"{record['name']}.json"
        try:
            path.write_text(json.dumps(record, indent=2) + "\n")
        except OSError as exc:
            raise OSError(f"cannot write fixture {path}: {exc}") from exc
        paths.append(path)
    return paths
