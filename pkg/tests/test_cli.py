import json
import subprocess
import sys

import pytest

from hurwitzkit.cli import parse_and_dispatch


def run(argv, capsys):
    code = parse_and_dispatch(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_hurwitz_char_unbranched(capsys):
    code, out, _ = run(["hurwitz", "char", "--euler", "1", "--degree", "3", "--profiles", "[1,1,1]"], capsys)
    assert code == 0 and json.loads(out)["value"] == "2/3"


def test_hurwitz_char_two_profiles(capsys):
    code, out, _ = run(["hurwitz", "char", "--euler", "2", "--degree", "3", "--profiles", "[3]|[3]",
                        "--format", "text"], capsys)
    assert code == 0 and out.strip() == "1/3"


def test_hurwitz_brute(capsys):
    code, out, _ = run(["hurwitz", "brute", "--crosscaps", "1", "--degree", "3"], capsys)
    data = json.loads(out)
    assert code == 0 and data["value"] == "2/3" and data["euler"] == 1


def test_verify_commute_example(capsys):
    code, out, _ = run(["verify", "commute", "--mu", "[2]", "--nu", "[1,1]", "--size", "2",
                        "--seed", "7", "--dmax", "3", "--format", "json"], capsys)
    report = json.loads(out)
    assert code == 0 and report["status"] == "exact-zero"
    assert list(report)[:4] == ["identity", "parameters", "status", "residual_terms"]


def test_verify_commute_exploratory_mismatch(capsys):
    code, out, _ = run(["verify", "commute", "--mu", "[2]", "--nu", "[2]", "--b", "independent",
                        "--dmax", "2"], capsys)
    assert code == 1 and json.loads(out)["status"] == "mismatch"


@pytest.mark.parametrize("argv", [
    ["verify", "l1", "--mu", "[2]", "--nu", "[1,1]"],
    ["verify", "schur-pair", "--lam", "[2]", "--mu", "[2]", "--matrices", "diagonal"],
    ["verify", "three-point", "--mu", "[2]", "--nu", "[1,1]", "--size", "3", "--matrices", "identity"],
    ["verify", "mmn", "--mu", "[2]", "--lam", "[1,1]", "--matrices", "identity"],
    ["verify", "mmn", "--mu", "[2,1]", "--lam", "[2,1]", "--size", "3", "--fixed-rank", "2"],
    ["verify", "star", "--lam", "[2]", "--matrices", "identity"],
])
def test_verify_subcommands(argv, capsys):
    code, out, _ = run(argv, capsys)
    assert code == 0 and json.loads(out)["status"] == "exact-zero"


def test_timing_flag(capsys):
    argv = ["verify", "mmn", "--mu", "[2]", "--lam", "[2]", "--matrices", "identity"]
    _, plain, _ = run(argv, capsys)
    _, timed, _ = run(argv + ["--timing"], capsys)
    assert "elapsed_ms" not in json.loads(plain)
    assert "elapsed_ms" in json.loads(timed)


def test_matrix_file(tmp_path, capsys):
    path = tmp_path / "m.json"
    path.write_text(json.dumps({"F": [["1", "1/2"], ["0", "2"]], "C": [[3, 0], [1, "-1/3"]]}))
    code, out, _ = run(["verify", "l1", "--mu", "[1]", "--nu", "[1]", "--matrix-file", str(path)], capsys)
    assert code == 0 and json.loads(out)["details"]["lhs"] == "17/6"


def test_char_table(capsys):
    code, out, _ = run(["char", "table", "--degree", "3"], capsys)
    assert code == 0 and json.loads(out)
    code, out, _ = run(["char", "table", "--degree", "3", "--format", "csv"], capsys)
    assert code == 0 and len(out.strip().splitlines()) == 4


def test_schur_expand(capsys):
    for method in ("character-map", "jacobi-trudi"):
        code, out, _ = run(["schur", "expand", "--partition", "[2]", "--method", method], capsys)
        terms = {t["monomial"]: t["coeff"] for t in json.loads(out)}
        assert code == 0 and terms == {"[2]": "1/2", "[1,1]": "1/2"}


def test_cutjoin(capsys):
    code, out, _ = run(["cutjoin", "apply", "--schur", "[1,1]"], capsys)
    data = json.loads(out)
    assert code == 0
    assert {t["monomial"]: t["coeff"] for t in data["output"]} == {"[1,1]": "-1", "[2]": "1"}
    code, _, err = run(["cutjoin", "apply"], capsys)
    assert code == 2 and "exactly one" in err


@pytest.mark.parametrize("argv, code", [
    (["hurwitz", "char", "--euler", "2", "--degree", "3", "--profiles", "[2]"], 2),
    (["hurwitz", "char", "--euler", "2", "--degree", "3", "--profiles", "[1,2]"], 2),
    (["hurwitz", "char", "--euler", "3", "--degree", "3"], 2),
    (["hurwitz", "char", "--euler", "2", "--degree", "13"], 3),
    (["hurwitz", "brute", "--degree", "9", "--profiles", "[9]"], 3),
    (["char", "table", "--degree", "14"], 3),
    (["verify", "mmn", "--mu", "[2]", "--lam", "[2]", "--matrices", "seeded", "--fixed-rank", "0"], 0),
    (["verify", "three-point", "--mu", "[2]", "--nu", "[1]"], 2),
    (["verify", "commute", "--mu", "[1]", "--nu", "[1]", "--size", "4"], 3),
    (["verify", "commute", "--mu", "[1]"], 2),
    (["nonsense"], 2),
])
def test_exit_codes(argv, code, capsys):
    got, _, err = run(argv, capsys)
    assert got == code
    if code:
        assert err


def test_deterministic_bytes(capsys):
    argv = ["verify", "three-point", "--mu", "[2,1]", "--nu", "[3]", "--size", "2", "--seed", "4"]
    outs = {run(argv, capsys)[1] for _ in range(3)}
    assert len(outs) == 1


def test_rationals_never_decimal(capsys):
    _, out, _ = run(["hurwitz", "char", "--euler", "-1", "--degree", "4", "--profiles", "[2,2]"], capsys)
    value = json.loads(out)["value"]
    assert "." not in value and "e" not in value


def test_fixtures_emit(tmp_path, capsys):
    code, out, _ = run(["fixtures", "emit", "--out", str(tmp_path / "fx")], capsys)
    assert code == 0 and len(out.splitlines()) >= 10


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "hurwitzkit", "hurwitz", "char", "--euler", "2",
                           "--degree", "3", "--profiles", "[3]|[3]", "--format", "text"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and proc.stdout.strip() == "1/3"
