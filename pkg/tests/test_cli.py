import json
import os
import subprocess
import sys

import pytest

from goldens import U17_DIAGRAM, U17_TABLEAU
from ubp.cli import main



def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_enumerate_count(capsys):
    assert run(capsys, "enumerate", "--k", "4", "--count") == (0, "131\n", "")


def test_enumerate_vector_partitions_json(capsys):
    code, out, _ = run(capsys, "enumerate", "--k", "2", "--object", "vector-partitions",
                       "--format", "json")
    assert json.loads(out)["vector_partitions"] == [[[], [1]], [[2]], [[1, 1]]]


def test_char_table_both_reports_agreement(capsys):
    code, out, _ = run(capsys, "char-table", "--k", "3", "--method", "both")
    assert code == 0
    assert "agree" in out
    rows = [line.split("|", 1)[1] for line in out.splitlines() if "|" in line and "+" not in line]
    values = [[int(x) for x in r.replace("|", " ").split()] for r in rows]
    assert values == [[1, 1, 1, 1, 1], [0, 1, 0, 1, 3], [0, 0, 1, 1, 1],
                      [0, 0, -1, 0, 2], [0, 0, 1, -1, 1]]


def test_char_table_mismatch_exits_one(capsys, monkeypatch):
    import ubp.cli as cli
    real = cli.symfunc.X_matrix

    def broken(k, max_k=7):
        rows = [list(r) for r in real(k, max_k)]
        rows[0][0] += 1
        return tuple(tuple(r) for r in rows)

    monkeypatch.setattr(cli.symfunc, "X_matrix", broken)
    code, out, _ = run(capsys, "char-table", "--k", "2", "--method", "both")
    assert code == 1 and "MISMATCH" in out


def test_pleth(capsys):
    assert run(capsys, "pleth", "--shape", "[[],[1,1]]", "--k", "4") == (0, "s[3,1]: 1\n", "")
    code, out, _ = run(capsys, "symfunc", "--pleth", "[[],[2]]")
    assert out.splitlines() == ["s[4]: 1", "s[2,2]: 1"]


def test_multiply_and_json(capsys):
    code, out, _ = run(capsys, "multiply", "1,4,2',3' | 2,1' | 3,6,4',5' | 5,6'",
                       "1,5,4',6' | 2,2' | 3,1' | 4,5' | 6,3'", "--format", "json")
    assert json.loads(out)["diagram"] == "1,4,1',2' | 2,3,6,4',5',6' | 5,3'"


def test_global_format_before_subcommand(capsys):
    code, out, _ = run(capsys, "--format", "json", "sn-char", "--lambda", "2,1", "--mu", "1,1,1")
    assert json.loads(out)["value"] == 2


def test_factorize_and_cycletype(capsys):
    code, out, _ = run(capsys, "factorize", "1,3,3',5' | 2,4,1',2' | 5,6' | 6,4'",
                       "--format", "json")
    assert json.loads(out)["sigma_images"] == [3, 1, 5, 2, 6, 4]
    code, out, _ = run(capsys, "cycletype",
                       "1,7' | 2,8' | 3,4,4',5' | 5,10,9',10' | 6,6' | 7,8,1',2' | 9,3'",
                       "--format", "json")
    assert json.loads(out)["cycletype"] == [[1], [2], [], [], [1]]


def test_class_rep_and_conj_alias(capsys):
    _, a, _ = run(capsys, "class-rep", "--mu", "[[2,1],[1]]")
    _, b, _ = run(capsys, "conj", "--rep", "[[2,1],[1]]")
    assert a == b == "1,2' | 2,1' | 3,3' | 4,5,4',5'\n"
    code, out, _ = run(capsys, "conj", "--k", "4", "--bmatrix", "--format", "json")
    assert json.loads(out)["entries"][1] == [0, 1, 0, 0, 0, 2, 0, 1, 0, 2, 4]


def test_green(capsys):
    code, out, _ = run(capsys, "green", "--k", "3", "--list", "jclasses", "--format", "json")
    assert {k: len(v) for k, v in json.loads(out)["jclasses"].items()} == {
        "1,1,1": 6, "2,1": 9, "3": 1}
    code, out, _ = run(capsys, "green", "--k", "6", "--list", "subgroup", "1|2|34|56",
                       "--format", "json")
    assert json.loads(out)["order"] == 4


def test_module_u17_action(capsys):
    code, out, _ = run(capsys, "module", "--k", "17", "--shape", "[[2,1],[2,2],[1,1]]",
                       "--act", U17_DIAGRAM, "--on", U17_TABLEAU)
    assert code == 0
    assert out.strip() == ("({9}/{8},{b} ; {ac},{fh}/{14},{67} ; {25g}/{3de}) - "
                           "({9}/{8},{b} ; {67},{fh}/{14},{ac} ; {25g}/{3de})")


def test_module_basis_and_matrix(capsys):
    code, out, _ = run(capsys, "module", "--k", "3", "--shape", "[[1],[1]]", "--basis",
                       "--format", "json")
    assert json.loads(out)["dimension"] == 3
    code, out, _ = run(capsys, "module", "--k", "3", "--shape", "[[1],[1]]",
                       "--matrix", "1,2' | 2,3' | 3,1'", "--format", "json")
    entries = json.loads(out)["entries"]
    assert sorted(map(sorted, entries)) == [[0, 0, 1]] * 3


def test_matrices(capsys):
    code, out, _ = run(capsys, "matrices", "--k", "3", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["X_equals_AB"] and data["X_equals_UA"]


def test_symfunc_outputs(capsys):
    code, out, _ = run(capsys, "symfunc", "--E", "2", "--format", "json")
    assert {"vector_partition": [[], [1]], "numerator": 1, "denominator": 1} in json.loads(out)["terms"]
    code, out, _ = run(capsys, "symfunc", "--umatrix", "4", "--format", "json")
    assert json.loads(out)["entries"][0] == [1, 1, 1, 0, 1, 0, 1, 0, 0, 0, 0]


@pytest.mark.parametrize("argv", [
    ["multiply", "1,2'|2"],
    ["module", "--k", "3", "--shape", "[[1],[1]]", "--act", "1,1'|2,2'|3,3'", "--on", "{12}"],
    ["sn-char", "--lambda", "2,1", "--mu", "2"],
    ["class-rep", "--mu", "[[1],"],
])
def test_parse_errors_exit_two(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2 and "error" in err and out == ""


def test_unknown_flag_exits_two(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["enumerate", "--k", "2", "--bogus"])
    assert exc.value.code == 2


def test_size_guard_and_override(capsys, monkeypatch):
    code, _, err = run(capsys, "char-table", "--k", "6", "--method", "trace")
    assert code == 2 and "--max-k" in err
    code, out, err = run(capsys, "enumerate", "--k", "7", "--object", "vector-partitions",
                         "--count")
    assert code == 0
    monkeypatch.setenv("UBP_MAX_K", "9")
    code, out, err = run(capsys, "symfunc", "--E", "1")
    assert code == 0 and "warning" in err


def test_assertion_failure_exits_one(capsys, monkeypatch):
    import ubp.cli as cli

    def boom(*args, **kwargs):
        raise AssertionError("forced")

    monkeypatch.setattr(cli.specht, "character_sn", boom)
    code, _, err = run(capsys, "sn-char", "--lambda", "1", "--mu", "1")
    assert code == 1 and "forced" in err


def test_verify_fast(capsys):
    code, out, _ = run(capsys, "verify", "--level", "fast")
    assert code == 0
    assert "FAIL" not in out and out.count("PASS") >= 10


def test_module_entry_point():
    env = dict(os.environ)
    env.pop("UBP_MAX_K", None)
    res = subprocess.run([sys.executable, "-m", "ubp", "enumerate", "--k", "3", "--count"],
                         capture_output=True, text=True, env=env)
    assert res.returncode == 0 and res.stdout == "16\n"
