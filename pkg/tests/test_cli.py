import csv
import io
import json

import pytest

from apstab.cli import main


def run(*argv):
    buf = io.StringIO()
    code = main(list(argv), stdout=buf)
    return code, buf.getvalue()


def test_koszul_plain_and_json():
    code, out = run("koszul", "--group", "Z3", "--max", "4")
    assert code == 0 and "PASS" in out
    code, out = run("koszul", "--group", "Z3", "--max", "4", "--format", "json")
    doc = json.loads(out)
    assert set(doc) == {"schema_version", "version", "command", "config", "results", "checks"}
    assert doc["command"] == "koszul"
    assert doc["results"]["tor"][3][3] == 3 * 2 ** 2
    assert all(set(c) == {"anchor", "expected", "got", "pass"} for c in doc["checks"])


def test_common_options_before_or_after_subcommand():
    a = run("--format", "json", "--seed", "3", "koszul", "--max", "3")
    b = run("koszul", "--max", "3", "--format", "json", "--seed", "3")
    assert a == b and json.loads(a[1])["config"]["seed"] == 3


def test_tor_example_and_regularity():
    code, out = run("tor", "--regularity", "--format", "json")
    doc = json.loads(out)
    assert code == 0
    assert doc["results"]["tor"][0][:3] == [0, 2, 6]
    code, out = run("tor", "--module", "quotient:1", "--max", "5")
    assert code == 0


def test_tor_module_file(tmp_path):
    f = tmp_path / "m.txt"
    f.write_text("gen X 0\nrel 1 (0)*X\n")
    code, out = run("tor", "--module", str(f), "--format", "json", "--max", "4", "--dmax", "2")
    assert code == 0
    assert json.loads(out)["results"]["tor"][1][:3] == [0, 1, 0]


def test_jw_and_matching():
    code, out = run("jw", "--m", "2", "--n", "4")
    assert code == 0 and out
    code, out = run("jw", "--m", "5", "--n", "5", "--squarefree", "--coeff", "Z", "--format", "json")
    assert code == 0
    code, out = run("matching", "--n", "7")
    assert code == 0 and "H~_1 = Z/3" in out


def test_poset_variants(tmp_path):
    f = tmp_path / "p.txt"
    f.write_text("element a\nelement b\nelement c\nle a c\nle b c\n")
    assert run("poset", "--file", str(f))[0] == 0
    g = tmp_path / "c.txt"
    g.write_text("0 1\n1 2\n2 0\n")
    code, out = run("poset", "--complex", str(g), "--format", "json")
    assert code == 0
    assert run("poset", "--x", "2", "--group", "Z3")[0] == 0
    assert run("poset", "--rbs", "3", "--boundary")[0] == 0


def test_bounds_csv_matches_chart():
    code, out = run("bounds", "--flags", "III,IV", "--format", "csv")
    rows = list(csv.reader(io.StringIO(out)))
    assert code == 0
    assert rows[0][0] == "t"
    assert rows[1][1:] == ["0", "-inf", "<=2", "<=3", "<=5"]
    assert rows[2][1:] == ["<=2", "<=3", "<=4", "<=5", "<=7"]


def test_abelianize(tmp_path):
    f = tmp_path / "g.txt"
    f.write_text("gens: a b\na^4\nb^6\n")
    code, out = run("abelianize", "--file", str(f))
    assert code == 0 and "Z/2 + Z/12" in out
    code, out = run("abelianize", "--builtin", "fgt", "--gl", "--format", "json")
    assert json.loads(out)["results"]["abelianization"]["torsion"] == [2, 2, 2]


def test_table_and_rbs_check():
    code, out = run("table", "--format", "json")
    assert code == 0
    assert run("rbs-check", "--max", "3")[0] == 0


@pytest.mark.parametrize("argv", [
    ["koszul", "--group", "Zinf"],
    ["koszul", "--field", "F4"],
    ["nosuchcommand"],
    ["jw", "--m", "2"],
    ["tor", "--module", "quotient:x"],
    ["abelianize"],
    ["bounds", "--flags", "IV"],
    ["koszul", "--threads", "0"],
    ["koszul", "--cap", "-1"],
    ["tor", "--module", "/nonexistent/file"],
])
def test_usage_errors_exit_2(argv, capsys):
    assert run(*argv)[0] == 2


def test_syntax_error_in_file_exits_2(tmp_path):
    f = tmp_path / "g.txt"
    f.write_text("gens: a\nb^2\n")
    assert run("abelianize", "--file", str(f))[0] == 2


def test_cap_exceeded_exits_3(capsys):
    assert run("matching", "--n", "7", "--cap", "100")[0] == 3
    assert "exceeds cap 100" in capsys.readouterr().err
    # a cap of zero disables the limit
    assert run("matching", "--n", "6", "--cap", "0")[0] == 0


def test_threads_from_environment(monkeypatch):
    monkeypatch.setenv("APSTAB_THREADS", "2")
    a = run("jw", "--m", "3", "--n", "5", "--format", "json")
    monkeypatch.setenv("APSTAB_THREADS", "1")
    b = run("jw", "--m", "3", "--n", "5", "--format", "json")
    assert a == b and a[0] == 0
    monkeypatch.setenv("APSTAB_THREADS", "many")
    assert run("jw", "--m", "3", "--n", "5")[0] == 2
    # the flag overrides the environment
    assert run("jw", "--m", "3", "--n", "5", "--threads", "2")[0] == 0


def test_verify_all_subset_json():
    code, out = run("verify-all", "--only", "4,8", "--format", "json")
    doc = json.loads(out)
    assert code == 0
    assert list(doc["results"]["criteria"]) == ["4", "8"]
    assert all(r["pass"] for r in doc["results"]["criteria"].values())
    assert "threads" not in doc["config"]


def test_help_exits_0(capsys):
    assert run("--help")[0] == 0
