import csv
import io
import json
import math
import subprocess
import sys

import pytest

import golden
from neuman_means import bounds, cli
from neuman_means.cli import TABLE_COLUMNS, main


def run(*argv):
    return golden.run(list(argv))


@pytest.mark.parametrize("name", sorted(golden.CASES))
def test_golden(name):
    argv, expected = golden.CASES[name]
    text, code = golden.run(argv)
    assert code == expected
    assert text.encode("utf-8") == (golden.FIXTURES / name).read_bytes()


class TestEval:
    def test_json(self):
        text, code = run("eval", "--kind", "GA", "-a", "2", "-b", "1", "--format", "json")
        doc = json.loads(text)
        assert code == 0
        assert list(doc) == ["schema_version", "kind", "a", "b", "value"]
        assert doc["kind"] == "GA" and math.floor(doc["value"] * 1e6) == 1471739

    def test_human(self):
        assert run("eval", "--kind", "A", "-a", "1", "-b", "3") == ("2\n", 0)

    @pytest.mark.parametrize("kind", cli.EVAL_KINDS)
    def test_every_kind(self, kind):
        text, code = run("eval", "--kind", kind, "-a", "3", "-b", "1.5")
        assert code == 0 and 1.5 < float(text) < 3

    @pytest.mark.parametrize(
        "argv",
        [
            ["eval", "--kind", "GA", "-a", "-1", "-b", "2"],
            ["eval", "--kind", "GA", "-a", "0", "-b", "2"],
            ["eval", "--kind", "GA", "-a", "x", "-b", "2"],
            ["eval", "--kind", "GA", "-a", "inf", "-b", "2"],
            ["eval", "--kind", "ZZ", "-a", "1", "-b", "2"],
            ["eval", "--kind", "GA", "-a", "1"],
            [],
        ],
    )
    def test_usage_errors(self, argv, capsys):
        assert main(argv, stdout=io.StringIO()) == 2
        assert "error" in capsys.readouterr().err

    def test_csv_17_digits(self):
        text, _ = run("eval", "--kind", "SB", "-a", "2", "-b", "1", "--format", "csv")
        rows = list(csv.reader(io.StringIO(text)))
        assert rows[0] == ["kind", "a", "b", "value"]
        value = rows[1][3]
        assert len(value.replace(".", "").lstrip("0")) == 17
        assert float(value) == float(format(float(value), ".17g"))


class TestBounds:
    def test_aq_power(self):
        text, code = run("bounds", "--kind", "AQ", "--family", "power", "-a", "2", "-b", "1", "--format", "json")
        doc = json.loads(text)
        assert code == 0
        assert doc["alpha"] == 2 / 3 and abs(doc["beta"] - 0.724453) < 1e-4
        assert doc["contains"] is True and doc["margin_lower"] > 0 and doc["margin_upper"] > 0
        assert doc["beta_symbolic"] == "2*log(pi+2)/log(2) - 4"

    def test_equal_arguments(self):
        doc = json.loads(
            run("bounds", "--kind", "GA", "--family", "harmonic", "-a", "5", "-b", "5", "--format", "json")[0]
        )
        assert doc["lower"] == doc["upper"] == doc["neuman_value"] == 5
        assert doc["alpha_degenerate"] is True

    def test_unknown_kind(self):
        assert run("bounds", "--kind", "XX", "--family", "power", "-a", "1", "-b", "2")[1] == 2

    def test_human(self):
        text, code = run("bounds", "--kind", "QA", "--family", "harmonic", "-a", "3", "-b", "1")
        assert code == 0 and "contains" in text and "True" in text


class TestVerify:
    def test_series_human(self):
        text, code = run("verify", "--suite", "series", "--n-max", "50")
        assert code == 0 and text.endswith("PASS  overall\n")

    def test_series_checks(self):
        doc = json.loads(run("verify", "--suite", "series", "--n-max", "50", "--format", "json")[0])
        assert doc["passed"] and doc["checks_run"] >= 100

    def test_zero_samples(self):
        assert run("verify", "--suite", "chain", "--samples", "0")[1] == 2

    def test_unknown_suite(self):
        assert run("verify", "--suite", "everything")[1] == 2

    def test_violation_exit_code(self, monkeypatch):
        # a non-sharp constant must surface as exit 1 in every format
        key = (bounds.NeumanKind.AQ, bounds.BoundFamily.POWER)
        bad = bounds.SHARP_PARAMETERS[key].shifted(0.01, -0.01)
        monkeypatch.setitem(bounds.SHARP_PARAMETERS, key, bad)
        for fmt in ("human", "json", "csv"):
            text, code = run("verify", "--suite", "bounds", "--grid-count", "500", "--format", fmt)
            assert code == 1
        assert (
            json.loads(run("verify", "--suite", "bounds", "--grid-count", "500", "--format", "json")[0])["passed"]
            is False
        )

    def test_json_round_trip(self):
        text, _ = run("verify", "--suite", "lemmas", "--grid-points", "200", "--format", "json")
        doc = json.loads(text)
        assert json.dumps(doc, indent=2) + "\n" == text

    def test_deterministic(self):
        argv = ("verify", "--suite", "consistency", "--samples", "5000", "--seed", "3", "--format", "json")
        assert run(*argv) == run(*argv)

    def test_threads_env_same_bytes(self, monkeypatch):
        argv = ("verify", "--suite", "chain", "--samples", "40000", "--format", "csv")
        base = run(*argv)
        monkeypatch.setenv("NEUMAN_MEANS_THREADS", "3")
        assert run(*argv) == base


class TestTable:
    def test_row_count(self):
        text, code = run("table", "--kind", "GA", "--count", "5", "--format", "csv")
        rows = list(csv.reader(io.StringIO(text)))
        assert code == 0 and len(rows) == 6 and tuple(rows[0]) == TABLE_COLUMNS

    @pytest.mark.parametrize("kind", ["GA", "AG", "QA", "AQ"])
    def test_containment(self, kind):
        doc = json.loads(run("table", "--kind", kind, "--count", "50", "--format", "json")[0])
        for row in doc["rows"]:
            r = dict(zip(doc["columns"], row))
            assert r["power_lo"] < r["N"] < r["power_hi"]
            assert r["harm_lo"] < r["N"] < r["harm_hi"]
            assert r["linear_lo"] < r["N"] < r["linear_hi"]

    def test_normalization(self):
        args = ("table", "--kind", "GA", "--v-min", str(1 / 3), "--v-max", "0.5", "--count", "2", "--format", "json")
        scaled = json.loads(run(*args)[0])
        raw = json.loads(run(*args, "--raw")[0])
        # v = 1/3 is the pair (2, 1) raw and (4/3, 2/3) scaled to A = 1
        assert math.floor(raw["rows"][0][1] * 1e6) == 1471739
        assert scaled["rows"][0][1] == pytest.approx(raw["rows"][0][1] / 1.5, rel=1e-15)
        assert scaled["normalization"] == "A=1" and raw["normalization"] == "raw"

    def test_constants_embedded(self):
        doc = json.loads(run("table", "--kind", "QA", "--format", "json")[0])
        assert doc["constants"]["linear"]["beta"] == bounds.LINEAR_REFERENCE[bounds.NeumanKind.QA].beta_symbolic
        assert set(doc["constants"]) == {"power", "harmonic", "linear"}

    def test_bad_grid(self):
        assert run("table", "--kind", "GA", "--v-min", "0.9", "--v-max", "0.1")[1] == 2
        assert run("table", "--kind", "GA", "--count", "1")[1] == 2

    def test_human(self):
        text, code = run("table", "--kind", "AG", "--count", "3", "--format", "human")
        assert code == 0 and len(text.splitlines()) == 4


def test_version():
    assert main(["--version"], stdout=io.StringIO()) == 0


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "neuman_means", "eval", "--kind", "G", "-a", "4", "-b", "1"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0 and proc.stdout == "2\n"
