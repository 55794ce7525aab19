import io
import json
import subprocess
import sys

import pytest

from forest_hopf.cli import run


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_product():
    code, out, _ = call("product", "x + mu_x * 1", "a + la_a*1")
    assert code == 0
    assert out.strip() == "la_a*mu_x * 1 + la_a * x + mu_x * a + x a"


def test_coproduct_methods_agree():
    _, rec, _ = call("coproduct", "a[c b[x]]")
    _, cut, _ = call("coproduct", "a[c b[x]]", "--method", "cuts")
    assert rec == cut
    assert rec.count("⊗") == 17


def test_counit():
    assert call("counit", "a[x]")[1].strip() == "la_a*mu_x"
    assert call("counit", "a[x] x", "--closed")[1].strip() == "-la_a*mu_x^2"


def test_antipode_and_tilde():
    assert call("antipode", "x")[1].strip() == "-2*mu_x * 1 - x"
    assert call("tilde", "a[x]")[1].strip() == "mu_x * a + a[x]"


def test_subforests_table():
    code, out, _ = call("subforests", "a[c b[x]]")
    assert code == 0
    rows = [line.split("\t") for line in out.strip().splitlines()]
    assert len(rows) == 7
    assert ["c b[x]", "a", "la_a * 1 + a"] in rows


def test_eval_with_renaming():
    assert call("eval", "a[x x]", "--x", "x,y", "--rename", "x=y")[0] == 2
    code, out, _ = call("eval", "a[x x]", "--rename", "x=z")
    assert code == 0 and out.strip() == "a[z z]"


def test_enumerate():
    code, out, _ = call("enumerate", "--max-degree", "3", "--x", "x", "--omega", "a,b")
    assert code == 0
    assert "degree 3: 5 shapes, 93 forests" in out


def test_json_output_schema():
    code, out, _ = call("coproduct", "x", "--format", "json")
    payload = json.loads(out)
    assert code == 0
    assert payload["schema"] == 1 and payload["command"] == "coproduct"
    assert {"coef": [{"coef": "1", "exps": {"mu_x": 1}}], "left": [], "right": []} in payload["result"]


def test_latex_output():
    assert call("counit", "a[x]", "--format", "latex")[1].strip() == r"\lambda_{a}\mu_{x}"


def test_check_passes_and_reports():
    code, out, _ = call("check", "all", "--max-degree", "2", "--omega", "a,b", "--seed-specializations", "1")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 16 and all(line.startswith("PASS") for line in lines)


def test_check_with_zero_weights():
    code, out, _ = call("check", "cocycle", "--max-degree", "3", "--weights", "mu_x=0,la_a=0,la_b=0,la_c=0")
    assert code == 0 and "mu_x=0" in out


@pytest.mark.parametrize(
    "argv",
    [
        ("coproduct", "x[y]"),
        ("coproduct", "q"),
        ("coproduct", "a +"),
        ("counit", "x", "--weights", "mu_q=1"),
        ("counit", "x", "--weights", "mu_x=abc"),
        ("counit", "x", "--x", "a"),
        ("nonsense",),
        ("eval", "x", "--rename", "x"),
    ],
)
def test_usage_errors_exit_2(argv):
    code, out, err = call(*argv)
    assert code == 2 and out == ""


def test_parse_error_message_names_position_once():
    _, _, err = call("coproduct", "x + a[x] + x[a]")
    assert err.strip() == "forest-hopf: error: X-label 'x' cannot be an internal vertex at position 11"


def test_degree_cap_from_environment(monkeypatch):
    monkeypatch.setenv("FOREST_HOPF_MAX_DEGREE", "2")
    code, _, err = call("enumerate", "--max-degree", "3")
    assert code == 2 and "FOREST_HOPF_MAX_DEGREE" in err
    monkeypatch.setenv("FOREST_HOPF_MAX_DEGREE", "many")
    assert call("enumerate", "--max-degree", "1")[0] == 2
    monkeypatch.delenv("FOREST_HOPF_MAX_DEGREE")
    assert call("enumerate", "--max-degree", "7")[0] == 2


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "forest_hopf", "counit", "x y", "--x", "x,y"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0
    assert proc.stdout.strip() == "mu_x*mu_y"


def test_check_exit_code_on_violation(monkeypatch):
    from forest_hopf import cli
    from forest_hopf.operated import Report

    def failing(symbols, max_degree, which, specs):
        report = Report("counit")
        report.record(False, ("x", "left", "0"))
        return [(None, report)]

    monkeypatch.setattr(cli, "run_checks", failing)
    code, out, _ = call("check", "counit", "--max-degree", "1")
    assert code == 1
    assert "FAIL" in out and "smallest counterexample: x | left | 0" in out
