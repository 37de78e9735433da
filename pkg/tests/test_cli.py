import io
import json
import subprocess
import sys

import pytest

from euclidiv.cli import build_parser, run

SUBCOMMANDS = ["divtest", "kvalue", "expand", "chains", "midy", "squaresplit", "period",
               "census", "artin", "residual", "wieferich", "selftest"]


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def call_json(*argv):
    code, out, err = call(*argv)
    assert code == 0, err
    return json.loads(out)


def all_strings(obj):
    """Every number in the payload must be a string."""
    if isinstance(obj, dict):
        return all(all_strings(v) for v in obj.values())
    if isinstance(obj, list):
        return all(all_strings(v) for v in obj)
    return not isinstance(obj, (int, float)) or isinstance(obj, bool)


def test_kvalue_reverse():
    assert call_json("kvalue", "29", "--base", "10", "--mode", "reverse")["k"] == "3"
    assert call_json("kvalue", "29", "--mode", "forward")["k"] == "10"


def test_period_49():
    out = call_json("period", "49", "--base", "10")
    assert out["period"] == "42"
    assert out["factors"] == [{"p": "7", "alpha": "2", "Q": "42", "g": "1", "q_list": ["6", "42"]}]


def test_parse_failure_is_usage_error():
    code, _, err = call("divtest", "bad", "--divisor", "3", "--base", "10")
    assert code == 2 and "bad" in err


def test_domain_error_exit_code():
    code, _, err = call("kvalue", "10", "--base", "10")
    assert code == 1 and "not invertible" in err


def test_unknown_subcommand():
    code, _, _ = call("frobnicate")
    assert code == 2


def test_divtest_modes():
    out = call_json("divtest", "841", "--divisor", "29")
    assert out == {"divisible": True, "residue": "0", "reduced_value": "29", "k": "3"}
    out = call_json("divtest", "142857142", "--divisor", "7", "--mode", "chunks", "3,6")
    assert out["residue"] == "1" and out["reduced_value"] == "-573" and not out["divisible"]
    out = call_json("divtest", "1234", "--divisor", "3", "--mode", "forward")
    assert out["reduced_value"] == "10" and out["residue"] == "1"
    out = call_json("divtest", "343750", "--divisor", "125", "--mode", "general")
    assert out["divisible"] and out["factors"][0]["digits_checked"] == "3"
    out = call_json("divtest", "x^4+x^2", "--divisor", "x^2+1", "--domain", "poly", "--char", "5")
    assert out["divisible"] and out["k"] == "4*x"


def test_divtest_bad_chunks():
    assert call("divtest", "142857142", "--divisor", "7", "--mode", "chunks")[0] == 2
    assert call("divtest", "142857142", "--divisor", "7", "--mode", "chunks", "6,3")[0] == 1


def test_poly_needs_char():
    assert call("kvalue", "x^2+1", "--domain", "poly")[0] == 2
    assert call("kvalue", "x^2+1", "--domain", "poly", "--char", "6")[0] == 2


def test_gaussian_needs_base():
    assert call("period", "2+i", "--domain", "gauss")[0] == 2
    out = call_json("period", "5", "--domain", "gauss", "--base", "1+i")
    assert out["period"] == "4"


def test_expand():
    out = call_json("expand", "22/7", "--digits", "8")
    assert out["text"] == "3.(142857)" and out["digits"] == list("14285714")
    out = call_json("expand", "1/x^2+1", "--domain", "poly", "--char", "5")
    assert out["repetend"] == ["0", "1", "0", "4"]


def test_chains_midy_squaresplit():
    out = call_json("chains", "21")
    assert [(e["length"], e["count"]) for e in out["entries"]] == [("6", "3"), ("1", "3")]
    assert out["total"] == "21"
    out = call_json("midy", "7")
    assert out["l"] == "3" and out["ok"]
    out = call_json("squaresplit", "7", "--k", "142857", "--l", "1")
    assert (out["high"], out["low"], out["total"]) == ("20408", "122449", "142857")


def test_census_json_and_tsv():
    out = call_json("census", "--limit", "1000", "--base", "10")
    assert set(out) == {"base", "limit", "counts", "proportions", "references", "deltas"}
    assert set(out["counts"]) == {"full", "odd", "even_nonfull", "excluded"}
    assert out["references"]["artin"].startswith("0.373955")
    assert all_strings(out)
    code, text, _ = call("census", "--limit", "1000", "--out", "tsv")
    rows = [line.split("\t") for line in text.strip().splitlines()]
    assert rows[0][0] == "class" and [r[0] for r in rows[1:4]] == ["full", "odd", "even_nonfull"]


def test_artin_residual_wieferich():
    out = call_json("artin", "--primes-limit", "10000")
    assert abs(float(out["value"]) - 0.3739558136192) <= float(out["error_bound"])
    out = call_json("residual", "--limit", "100", "--max-m", "4")
    assert out["total"] == "23" and out["buckets"][">4"] == "5"
    assert call_json("wieferich", "--limit", "10000")["primes"] == ["3", "487"]


def test_selftest_passes():
    code, out, _ = call("selftest")
    assert code == 0
    assert "FAIL" not in out and out.count("PASS") >= 10


def test_json_output_is_deterministic():
    for argv in (["midy", "17"], ["selftest", "--out", "json"], ["census", "--limit", "2000"]):
        assert call(*argv)[1] == call(*argv)[1]


def test_numbers_are_strings():
    for argv in (["period", "189"], ["chains", "13"], ["expand", "1/17"], ["squaresplit", "27", "--k", "37", "--l", "1"]):
        assert all_strings(call_json(*argv))


def test_budget_env(monkeypatch):
    monkeypatch.setenv("EUCLID_DIGITS_BUDGET", "100")
    code, _, err = call("chains", "10007")
    assert code == 1 and "budget" in err
    monkeypatch.setenv("EUCLID_DIGITS_BUDGET", "lots")
    assert call("chains", "7")[0] == 2


@pytest.mark.parametrize("name", SUBCOMMANDS)
def test_help_names_the_operation(name, capsys):
    with pytest.raises(SystemExit) as exc:
        build_parser().parse_args([name, "--help"])
    assert exc.value.code == 0
    text = capsys.readouterr().out
    assert "." in text.split("\n\n")[1]  # "module.operation"
    assert any(mod in text for mod in ("divtest.", "recurring.", "period.", "census.", "domain."))


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "euclidiv", "kvalue", "29"], capture_output=True, text=True)
    assert proc.returncode == 0 and json.loads(proc.stdout)["k"] == "3"
