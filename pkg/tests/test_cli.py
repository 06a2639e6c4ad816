import json

import numpy as np
import pytest

from cycloring import cli, make_modulus, reduction_matrix


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestCyclo:
    def test_coeffs(self, capsys):
        code, out, _ = run(capsys, "cyclo", "15", "--format", "coeffs")
        assert code == 0
        assert out.strip() == "1,-1,0,1,-1,1,0,-1,1"

    def test_pretty(self, capsys):
        code, out, _ = run(capsys, "cyclo", "15", "--format", "pretty")
        assert code == 0
        assert out.strip() == "x^8 - x^7 + x^5 - x^4 + x^3 - x + 1"

    def test_json(self, capsys):
        code, out, _ = run(capsys, "cyclo", "7", "--format", "json")
        obj = json.loads(out)
        assert obj == {"M": 7, "phi": 6, "coeffs": [1, 1, 1, 1, 1, 1, 1]}

    def test_unsupported_exit_3(self, capsys):
        code, _, err = run(capsys, "cyclo", "30")
        assert code == 3
        assert "prime factors" in err


class TestReduce:
    def test_monomial(self, capsys):
        poly = ",".join(["0"] * 8 + ["1"])  # x^8
        code, out, _ = run(capsys, "reduce", "15", "--poly", poly)
        assert code == 0
        assert out.strip() == "-1,1,0,-1,1,-1,0,1"

    def test_bad_poly_usage_error(self, capsys):
        with pytest.raises(SystemExit) as exc:
            run(capsys, "reduce", "15", "--poly", "1,a,2")
        assert exc.value.code == 2


class TestMatrix:
    def test_pretty_r7(self, capsys):
        code, out, _ = run(capsys, "matrix", "7")
        rows = out.strip().splitlines()
        assert code == 0
        assert len(rows) == 6
        assert rows[0].split() == ["1", "0", "0", "0", "0", "0", "-1"]

    def test_blocks_annotation(self, capsys):
        code, out, _ = run(capsys, "matrix", "21", "--blocks")
        assert code == 0
        assert out.splitlines()[0].count("|") == 3

    def test_csv_round_trip(self, capsys):
        code, out, _ = run(capsys, "matrix", "21", "--format", "csv")
        rows = [[int(v) for v in line.split(",")]
                for line in out.strip().splitlines()]
        R = reduction_matrix(make_modulus(21))
        assert np.array_equal(np.array(rows),
                              np.asarray(R.entries, dtype=np.int64))

    def test_json_round_trip(self, capsys):
        code, out, _ = run(capsys, "matrix", "15", "--format", "json")
        obj = json.loads(out)
        R = reduction_matrix(make_modulus(15))
        assert np.array_equal(np.array(obj["entries"]),
                              np.asarray(R.entries, dtype=np.int64))
        assert obj["blocks"] == {"identity": [0, 8], "b1": [8, 10],
                                 "b2": [10, 13], "b3": [13, 15]}
        assert json.loads(run(capsys, "matrix", "9", "--format", "json")[1])[
            "blocks"] is None


class TestScaledInv:
    def test_construct_text(self, capsys):
        code, out, _ = run(capsys, "scaled-inv", "15", "3", "0")
        assert code == 0
        assert "scale: 5" in out and "case: p_divides_shift" in out

    def test_both_agree(self, capsys):
        code, out, _ = run(capsys, "scaled-inv", "15", "3", "0",
                           "--method", "both")
        assert code == 0
        assert "agree: true" in out

    def test_both_json(self, capsys):
        code, out, _ = run(capsys, "scaled-inv", "21", "9", "2",
                           "--method", "both", "--format", "json")
        obj = json.loads(out)
        assert code == 0
        assert obj["agree"] is True
        assert obj["construct"]["scale"] == 3
        assert obj["construct"]["case"] == "q_divides_shift"
        assert set(obj["bezout"]) >= {"M", "phi", "coeffs", "scale", "norm",
                                      "case"}

    def test_bezout_json(self, capsys):
        code, out, _ = run(capsys, "scaled-inv", "16", "9", "1",
                           "--method", "bezout", "--format", "json")
        obj = json.loads(out)
        assert code == 0 and obj["scale"] == 2 and obj["case"] == "generic"

    def test_bad_range_usage(self, capsys):
        code, _, err = run(capsys, "scaled-inv", "15", "0", "0")
        assert code == 2
        assert "0 <= j < i < M" in err


class TestExpansion:
    def test_single_k(self, capsys):
        code, out, _ = run(capsys, "expansion", "9", "--k", "6",
                           "--format", "json")
        obj = json.loads(out)
        assert code == 0 and obj["factor"] == 2

    def test_full_report(self, capsys):
        code, out, _ = run(capsys, "expansion", "21", "--format", "json")
        obj = json.loads(out)
        assert obj["max_factor"] == 6 and obj["witness_k"] == 11
        assert len(obj["per_k"]) == 21


class TestSweep:
    def test_csv_header(self, capsys):
        code, out, _ = run(capsys, "sweep", "15")
        lines = out.strip().splitlines()
        assert code == 0
        assert lines[0] == "i,j,scale,norm,case"
        assert len(lines) == 1 + 15 * 14 // 2

    def test_json_case_max(self, capsys):
        code, out, _ = run(capsys, "sweep", "33", "--format", "json")
        obj = json.loads(out)
        assert obj["case_max"]["coprime"]["norm"] == 2
        assert obj["flagged"] == []


class TestVerify:
    def test_verify_21_all(self, capsys):
        code, out, _ = run(capsys, "verify", "21", "--suite", "all")
        assert code == 0
        assert "failed" in out and " 0 failed" in out

    def test_verify_json(self, capsys):
        code, out, _ = run(capsys, "verify", "15", "--format", "json",
                           "--trials", "50", "--seed", "1")
        obj = json.loads(out)
        assert code == 0
        assert obj["ok"] is True
        assert obj["totals"]["failed"] == 0
        names = {c["name"] for s in obj["suites"] for c in s["checks"]}
        assert "rev_rotation_columns" in names
        assert all("seconds" in s for s in obj["suites"])

    def test_single_suite(self, capsys):
        code, out, _ = run(capsys, "verify", "9", "--suite", "matrix")
        assert code == 0
        assert "[matrix]" in out and "[lemmas]" not in out

    def test_deterministic_given_seed(self, capsys):
        _, out1, _ = run(capsys, "verify", "15", "--seed", "7",
                         "--trials", "64", "--format", "json")
        _, out2, _ = run(capsys, "verify", "15", "--seed", "7",
                         "--trials", "64", "--format", "json")
        o1, o2 = json.loads(out1), json.loads(out2)
        for o in (o1, o2):
            for s in o["suites"]:
                s["seconds"] = None
        assert o1 == o2

    def test_unsupported_modulus(self, capsys):
        code, _, err = run(capsys, "verify", "105")
        assert code == 3

    def test_usage_error(self, capsys):
        with pytest.raises(SystemExit) as exc:
            cli.main(["verify"])
        assert exc.value.code == 2
        with pytest.raises(SystemExit) as exc:
            cli.main(["nonsense", "5"])
        assert exc.value.code == 2
