import json

import pytest

from buraukit.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


class TestRepresent:
    def test_zeta_pretty(self, capsys):
        code, out, _ = run(capsys, "represent", "--strands", "3", "--word", "1 2 1")
        assert code == 0
        assert out.splitlines()[0].split() == ["[", "1", "-", "t", "t", "-", "t^2", "t^2", "]"]

    def test_identity(self, capsys):
        code, out, _ = run(capsys, "represent", "--strands", "3", "--word", "")
        assert code == 0 and out.count("1") == 3

    def test_json(self, capsys):
        code, out, _ = run(capsys, "represent", "--strands", "3", "--word", "1 2 1",
                           "--format", "json")
        obj = json.loads(out)
        assert code == 0 and obj["size"] == 3
        assert obj["entries"][0][2] == {"terms": [{"exp": 2, "coeff": 1}]}

    def test_latex(self, capsys):
        code, out, _ = run(capsys, "represent", "--strands", "2", "--word", "-1",
                           "--format", "latex")
        assert code == 0 and "t^{-1}" in out and "bmatrix" in out

    @pytest.mark.parametrize("word", ["5", "0", "a"])
    def test_parse_errors(self, capsys, word):
        code, out, err = run(capsys, "represent", "--strands", "3", "--word", word)
        assert code == 2 and out == "" and "error" in err

    def test_index_message(self, capsys):
        _, _, err = run(capsys, "represent", "--strands", "3", "--word", "5")
        assert "sigma_5" in err


class TestOrder:
    @pytest.mark.parametrize("tau, k", [("6", 4), ("5", 10)])
    def test_match(self, capsys, tau, k):
        code, out, _ = run(capsys, "order", "--tau", tau, "--format", "json")
        assert code == 0
        assert json.loads(out) == {"tau": int(tau), "cap": 4 * int(tau), "found_k": k,
                                   "predicted_k": k, "match": True}

    def test_pretty(self, capsys):
        code, out, _ = run(capsys, "order", "--tau", "6")
        assert code == 0 and "order 4" in out and "predicted 4, match" in out

    def test_probe_has_no_prediction(self, capsys):
        code, out, _ = run(capsys, "order", "--tau", "2", "--cap", "500")
        assert code == 0 and "predicted" not in out

    def test_mismatch_exit_1(self, capsys):
        code, out, _ = run(capsys, "order", "--tau", "7", "--cap", "5")
        assert code == 1 and "MISMATCH" in out

    def test_invalid_tau(self, capsys):
        assert run(capsys, "order", "--tau", "0")[0] == 2


class TestWitness:
    def test_b3_tau5(self, capsys):
        code, out, _ = run(capsys, "witness", "--strands", "3", "--i", "1", "--tau", "5",
                           "--format", "json")
        obj = json.loads(out)
        assert code == 0
        assert len(obj["word"]) == 30 and obj["verified_identity"] is True
        assert obj == {"strands": 3, "tau": 5, "word": [1, 2, 1] * 10, "power_k": 10,
                       "exponent_sum": 30, "verified_identity": True}

    def test_b6_tau9(self, capsys):
        code, out, _ = run(capsys, "witness", "--strands", "6", "--i", "3", "--tau", "9",
                           "--format", "json")
        obj = json.loads(out)
        assert code == 0 and obj["word"] == [3, 4, 3] * 6 and obj["power_k"] == 6

    @pytest.mark.parametrize("argv", [
        ("--strands", "2", "--i", "1", "--tau", "5"),
        ("--strands", "3", "--i", "1", "--tau", "3"),
    ])
    def test_precondition_exit_2(self, capsys, argv):
        code, out, err = run(capsys, "witness", *argv)
        assert code == 2 and out == "" and err


class TestVerify:
    def test_full_sweep(self, capsys):
        code, out, _ = run(capsys, "verify", "--max-k", "40", "--max-tau", "20")
        assert code == 0 and "FAIL" not in out

    def test_minimal(self, capsys):
        code, out, _ = run(capsys, "verify", "--max-k", "2", "--max-tau", "4", "--format", "json")
        obj = json.loads(out)
        assert code == 0 and obj["pass"] is True
        assert {c["name"] for c in obj["checks"]} >= {"closed form k=2", "order tau=4"}

    @pytest.mark.parametrize("argv", [("--max-k", "3", "--max-tau", "10"),
                                      ("--max-k", "0", "--max-tau", "10"),
                                      ("--max-k", "4", "--max-tau", "3")])
    def test_bad_bounds(self, capsys, argv):
        assert run(capsys, "verify", *argv)[0] == 2


class TestCyclotomic:
    @pytest.mark.parametrize("n, text", [("3", "t^2 + t + 1"), ("1", "t - 1"),
                                         ("12", "t^4 - t^2 + 1")])
    def test_pretty(self, capsys, n, text):
        code, out, _ = run(capsys, "cyclotomic", "--n", n)
        assert code == 0 and out.strip() == text

    def test_json(self, capsys):
        code, out, _ = run(capsys, "cyclotomic", "--n", "6", "--format", "json")
        assert json.loads(out) == {"terms": [{"exp": 0, "coeff": 1}, {"exp": 1, "coeff": -1},
                                             {"exp": 2, "coeff": 1}]}

    def test_bad_n(self, capsys):
        assert run(capsys, "cyclotomic", "--n", "0")[0] == 2


def test_missing_subcommand_is_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 2


def test_module_entry_point():
    import subprocess
    import sys
    res = subprocess.run([sys.executable, "-m", "buraukit", "cyclotomic", "--n", "3"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout.strip() == "t^2 + t + 1"
