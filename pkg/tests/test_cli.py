import json
import re
import subprocess
import sys

import pytest

from forest_operads.cli import main, run
from forest_operads.combinat import enumerate_forests, parse_forest, render_forest


def _terms(text):
    """Parse ``c*F`` sums, accepting either minus sign, into a {forest: coeff} dict."""
    text = text.replace("−", "-").replace(" ", "")
    out = {}
    for sign, c, F in re.findall(r"([+-]?)(\d+)\*([\[\]]+|1)", text):
        key = () if F == "1" else parse_forest(F)
        out[key] = out.get(key, 0) + int(c) * (-1 if sign == "-" else 1)
    return out


def ok(*argv):
    code, out = run(list(argv))
    assert code == 0, out
    return out.rstrip("\n")


def test_dual_example_up_to_term_order():
    out = ok("dual", "[[]]")
    assert out == "1*[][] - 1*[[]]"
    assert _terms(out) == _terms("−1*[[]] + 1*[][]")


def test_pair_and_coprod_examples():
    assert ok("pair", "[[]]", "[][]") == "1"
    lines = ok("coprod", "--kind", "delta", "[][]").splitlines()
    assert sorted(lines) == sorted(["1 * [][] ⊗ 1", "1 * 1 ⊗ [][]", "1 * [] ⊗ []"])
    assert ok("coprod", "--kind", "deltane", "--reduced", "[][]") == "1 * [] ⊗ []"


def test_element_commands():
    assert ok("prod", "[]", "[[]]") == "1*[][[]]"
    assert ok("groot", "[]", "[[]]") == "1*[[][]]"
    assert ok("gleaf", "[]", "[[]]") == "1*[[[]]]"
    assert ok("antipode", "[[]]") == "1*[][] - 1*[[]]"
    assert ok("pn", "1") == "-1*[]"
    assert ok("qn", "2") == "1*[][] - 1*[[]]"
    assert ok("pt", "(oo)") == "1*[][] - 1*[[]]"
    assert ok("compose", "--flavor", "leaf", "[][]", "[[]]", "[]") == "1*[[]][]"
    assert ok("compose", "--flavor", "root", "[[]]", "[]", "[]") == "1*[[]]"


def test_listing_and_kappa():
    assert ok("forests", "2").splitlines() == ["[][]", "[[]]"]
    assert ok("forests", "0") == "1"
    assert len(ok("trees", "4").splitlines()) == 5
    assert ok("kappa", "((oo)o)") == "[[][]]"
    assert ok("kappa", "--inverse", "[[][]]") == "((oo)o)"


def test_gram_and_dual_table():
    assert ok("gram", "2").splitlines() == [",[][],[[]]", "[][],1,1", "[[]],1,0"]
    rows = ok("dual", "--max-weight", "3").splitlines()
    assert len(rows) == 1 + 2 + 5


def test_tamari_commands():
    assert ok("tamari", "covers", "--weight", "2") == "[[]] < [][]"
    assert ok("tamari", "leq", "--weight", "3", "[[[]]]", "[[][]]") == "true"
    assert ok("tamari", "leq", "[[][]]", "[[[]]]", "--weight", "3") == "false"
    assert ok("tamari", "mobius", "--weight", "2", "[[]]", "[][]") == "-1"
    assert ok("tamari", "hasse", "--weight", "2").startswith("digraph")
    assert ok("tamari", "hasse", "--weight", "2", "--as", "csv") == "lower,upper\n[[]],[][]"
    assert "covers_not_single_transformations: 0" in ok("tamari", "stats", "--weight", "4")


def test_json_shape():
    code, out = run(["--format", "json", "dual", "[[]]"])
    doc = json.loads(out)
    assert code == 0 and doc["command"] == "dual"
    assert doc["result"] == [{"coeff": 1, "forest": "[][]"}, {"coeff": -1, "forest": "[[]]"}]
    doc = json.loads(run(["--format", "json", "coprod", "[]"])[1])
    assert doc["result"]
    doc = json.loads(run(["--format", "json", "gram", "2"])[1])
    assert doc["result"]["matrix"] == [[1, 1], [1, 0]]


@pytest.mark.parametrize(
    "argv,prefix",
    [
        (["prod", "[[]", "[]"], "parse error"),
        (["pt", "(o"], "parse error"),
        (["groot", "", "[]"], "domain error"),
        (["compose", "--flavor", "leaf", "[][]", "[]"], "domain error"),
        (["forests", "-1"], "usage error"),
        (["nosuch"], "usage error"),
        (["dual"], "usage error"),
        (["tamari", "leq", "--weight", "2", "[]"], "usage error"),
        (["tamari", "leq", "--weight", "2", "[]", "[][]"], "domain error"),
    ],
)
def test_errors_exit_two(argv, prefix):
    code, out = run(argv)
    assert code == 2
    assert out.startswith(prefix)


def test_parse_error_reports_offset():
    code, out = run(["antipode", "[]]"])
    assert code == 2 and "offset 2" in out


def test_main_writes_errors_to_stderr(capsys):
    assert main(["prod", "x", "[]"]) == 2
    captured = capsys.readouterr()
    assert captured.out == "" and "parse error" in captured.err
    assert main(["pair", "[]", "[]"]) == 0
    assert capsys.readouterr().out == "1\n"


def test_output_is_deterministic():
    argv = ["tamari", "hasse", "--weight", "4"]
    assert run(argv) == run(argv)
    assert run(["--format", "json", "dual", "--max-weight", "4"]) == run(["--format", "json", "dual", "--max-weight", "4"])


def test_check_suite_all_passes():
    code, out = run(["check", "--suite", "all", "--max-weight", "5"])
    assert code == 0, out
    assert "FAIL" not in out
    last = out.strip().splitlines()[-1]
    done, total = map(int, last.split()[0].split("/"))
    assert done == total > 50


def test_check_threads_gives_same_output():
    a = run(["check", "--suite", "all", "--max-weight", "4"])
    b = run(["check", "--suite", "all", "--max-weight", "4", "--threads", "4"])
    assert a == b


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "forest_operads", "forests", "3"],
                          capture_output=True, text=True, check=True)
    assert proc.stdout.splitlines() == [render_forest(F) for F in enumerate_forests(3)]
