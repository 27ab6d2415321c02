import json
import subprocess
import sys

import pytest

from knotpoly import BiPoly, LaurentPoly
from knotpoly import cli


def run_cli(capsys, *argv):
    code = cli.run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestPolynomialCommands:
    def test_alexander_trefoil(self, capsys):
        code, out, _ = run_cli(capsys, "alexander", "--s", "3")
        assert code == 0
        assert out == "t - 1 + t^(-1)\n"

    def test_alexander_unknot(self, capsys):
        code, out, _ = run_cli(capsys, "alexander", "--s", "1")
        assert code == 0
        assert out == "1\n"

    def test_homfly(self, capsys):
        code, out, _ = run_cli(capsys, "homfly", "--m", "1")
        assert code == 0
        assert out == "2a^2 + a^2z^2 - a^4\n"

    def test_qnum(self, capsys):
        code, out, _ = run_cli(capsys, "qnum", "--n", "4")
        assert code == 0
        assert out == "q^3 + q + q^(-1) + q^(-3)\n"

    def test_qpnum(self, capsys):
        code, out, _ = run_cli(capsys, "qpnum", "--n", "3")
        assert code == 0
        assert out == "q^2 + qp + p^2\n"

    def test_chebyshev(self, capsys):
        code, out, _ = run_cli(capsys, "chebyshev", "--kind", "first", "--n", "3")
        assert code == 0
        assert out == "x^3 - 3x\n"
        code, out, _ = run_cli(capsys, "chebyshev", "--kind", "second", "--n", "2")
        assert out == "x^2 - 1\n"


class TestUsageErrors:
    @pytest.mark.parametrize(
        "argv",
        [
            [],
            ["alexander"],
            ["alexander", "--s", "0"],
            ["alexander", "--s", "two"],
            ["homfly", "--m", "-1"],
            ["chebyshev", "--kind", "third", "--n", "1"],
            ["verify", "no-such-suite"],
            ["table", "unified"],
            ["no-such-command"],
        ],
    )
    def test_exit_code_2(self, capsys, argv):
        code, _, err = run_cli(capsys, *argv)
        assert code == 2
        assert "usage" in err


class TestVerify:
    def test_homfly_bridge_output(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "homfly-bridge", "--max-n", "50")
        assert code == 0
        assert out == "50/50 identities hold\n"

    def test_all_suites_pass_small(self, capsys):
        for suite in cli._VERIFY_SUITES:
            code, out, err = run_cli(capsys, "verify", suite, "--max-n", "12")
            assert code == 0, (suite, out, err)

    def test_failing_suite_exits_1(self, capsys, monkeypatch):
        monkeypatch.setitem(
            cli._VERIFY_SUITES, "homfly-bridge", lambda max_n: (max_n - 1, max_n, ["boom"])
        )
        code, out, err = run_cli(capsys, "verify", "homfly-bridge", "--max-n", "9")
        assert code == 1
        assert out == "8/9 identities hold\n"
        assert "boom" in err

    def test_json_report(self, capsys):
        code, out, _ = run_cli(
            capsys, "verify", "qnum-oracle", "--max-n", "7", "--format", "json"
        )
        assert code == 0
        report = json.loads(out)
        assert report["suite"] == "qnum-oracle"
        assert report["passed"] == report["total"] == 16
        assert report["failures"] == []


class TestTables:
    def test_unified_rows(self, capsys):
        code, out, _ = run_cli(capsys, "table", "unified", "--max", "3")
        assert code == 0
        assert out.splitlines() == [
            "s=1: 1",
            "s=2: t^(1/2) - t^(-1/2)",
            "s=3: t - 1 + t^(-1)",
        ]

    def test_link_rows(self, capsys):
        code, out, _ = run_cli(capsys, "table", "alexander-links", "--max", "2")
        assert out.splitlines() == [
            "m=1/2: t^(1/2) - t^(-1/2)",
            "m=3/2: t^(3/2) - t^(1/2) + t^(-1/2) - t^(-3/2)",
        ]

    def test_json_rows_round_trip(self, capsys):
        code, out, _ = run_cli(
            capsys, "table", "homfly", "--max", "2", "--format", "json"
        )
        payload = json.loads(out)
        assert payload["family"] == "homfly"
        labels = [row["label"] for row in payload["rows"]]
        assert labels == ["m=0", "m=1", "m=2"]
        polys = [BiPoly.from_json_dict(row["poly"]) for row in payload["rows"]]
        assert polys[2] == BiPoly.from_json_dict(
            json.loads(polys[2].render("json"))
        )


class TestSkeinDerive:
    def test_classical(self, capsys):
        code, out, _ = run_cli(capsys, "skein-derive", "--family", "classical")
        assert code == 0
        assert out.splitlines() == [
            "c1 = t + t^(-1)",
            "c2 = -1",
            "b1 = t^(1/2) - t^(-1/2)",
            "b2 = 1",
        ]

    def test_rx(self, capsys):
        code, out, _ = run_cli(capsys, "skein-derive", "--family", "rx")
        assert out.splitlines() == [
            "c1 = rx",
            "c2 = -r^2",
            "b1 = r^(1/2) * sqrt(x - 2)",
            "b2 = r",
        ]

    def test_az(self, capsys):
        code, out, _ = run_cli(capsys, "skein-derive", "--family", "az")
        assert out.splitlines() == [
            "c1 = 2a^2 + a^2z^2",
            "c2 = -a^4",
            "b1 = az",
            "b2 = a^2",
        ]

    def test_json_round_trip(self, capsys):
        code, out, _ = run_cli(
            capsys, "skein-derive", "--family", "az", "--format", "json"
        )
        payload = json.loads(out)
        assert payload["roundtrip_ok"] is True
        b2 = BiPoly.from_json_dict(payload["b2"])
        assert b2.terms == {(4, 0): 1}


class TestJsonPolynomials:
    def test_alexander_json_round_trip_bytes(self, capsys):
        code, out, _ = run_cli(capsys, "alexander", "--s", "6", "--format", "json")
        assert code == 0
        text = out.strip()
        poly = LaurentPoly.from_json_dict(json.loads(text))
        assert poly.render("json") == text


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "knotpoly", "alexander", "--s", "5"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout == "t^2 - t + 1 - t^(-1) + t^(-2)\n"
