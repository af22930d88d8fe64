"""Command-line interface: outputs, exit codes and reproducibility."""

import csv
import io
import json
import math
import subprocess
import sys

import pytest

from groupentropy.cli import ConfigError, RunConfig, emit_report, main, run

P3 = [-513, -344, -217, -126, -65, -28, -9, -2, -1, 0, 7, 26, 63, 124, 215, 342, 511]


def cli(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


class TestEntropyCommand:
    def test_worked_example(self, capsys):
        code, out, _ = cli(capsys, "entropy", "--kind", "renyi", "--alpha", "2", "--dist", "[0.5,0.25,0.25]")
        assert code == 0
        assert float(out) == pytest.approx(math.log(8 / 3), rel=1e-15)
        assert out.strip() == "%.17g" % float(out)

    def test_json(self, capsys):
        code, out, _ = cli(capsys, "entropy", "--kind", "tsallis", "--alpha", "0.5", "--dist", "[0.5,0.5]",
                           "--output", "json")
        d = json.loads(out)
        assert code == 0 and d["kind"] == "tsallis" and d["W"] == 2
        assert d["value"] == pytest.approx((2 * 0.5**0.5 - 1) / 0.5)

    def test_uniform_by_log_w(self, capsys):
        code, out, _ = cli(capsys, "entropy", "--kind", "superexp", "--alpha", "0.5", "--generator", "linear",
                           "--gparam", "nu=2", "--logw", str(2 * 50 * math.log(50)))
        assert code == 0 and float(out) == pytest.approx(49.0, rel=1e-12)

    def test_mze_with_generator(self, capsys):
        code, out, _ = cli(capsys, "entropy", "--kind", "mze", "--alpha", "2", "--alpha", "2", "--generator",
                           "identity", "--dist", "[0.5,0.5]")
        assert code == 0 and float(out) == pytest.approx(math.log(4))

    def test_linear_combination_weights(self, capsys):
        code, out, _ = cli(capsys, "entropy", "--kind", "linear-renyi", "--alpha", "0.5", "--alpha", "2",
                           "--param", "lambdas=1,0.5", "--logw", "3")
        assert code == 0 and float(out) == pytest.approx(4.5)

    def test_dist_from_stdin(self, capsys, monkeypatch):
        monkeypatch.setattr(sys, "stdin", io.StringIO("[0.25, 0.75]"))
        code, out, _ = cli(capsys, "entropy", "--kind", "shannon", "--dist", "-")
        assert code == 0
        assert float(out) == pytest.approx(-(0.25 * math.log(0.25) + 0.75 * math.log(0.75)))

    def test_dist_from_file(self, capsys, tmp_path):
        f = tmp_path / "p.json"
        f.write_text("[1.0, 0.0]")
        code, out, _ = cli(capsys, "entropy", "--kind", "renyi", "--alpha", "3", "--dist", f"@{f}")
        assert code == 0 and float(out) == 0.0

    def test_bad_sum_reports_measured_sum(self, capsys):
        code, _, err = cli(capsys, "entropy", "--kind", "renyi", "--alpha", "2", "--dist", "[0.5,0.25,0.2]")
        assert code == 2
        assert "input error" in err and "0.95" in err

    def test_malformed_json(self, capsys):
        code, _, err = cli(capsys, "entropy", "--kind", "renyi", "--alpha", "2", "--dist", "[0.5,")
        assert code == 2 and "not valid JSON" in err

    def test_unknown_kind_lists_valid_names(self, capsys):
        code, _, err = cli(capsys, "entropy", "--kind", "boltzmann", "--dist", "[1]")
        assert code == 2
        assert "renyi" in err and "superexp-multi" in err

    def test_unknown_generator_lists_valid_names(self, capsys):
        code, _, err = cli(capsys, "entropy", "--kind", "mze", "--alpha", "0.5", "--generator", "cosh",
                           "--dist", "[1]")
        assert code == 2 and "lambert-exp" in err

    def test_parameter_constraint_named(self, capsys):
        code, _, err = cli(capsys, "entropy", "--kind", "rapid-growth", "--alpha", "0.5", "--param", "k1=-1",
                           "--dist", "[1]")
        assert code == 2 and "k1 > 0" in err

    def test_alpha_one_rejected(self, capsys):
        code, _, err = cli(capsys, "entropy", "--kind", "renyi", "--alpha", "1", "--dist", "[1]")
        assert code == 2 and "alpha = 1" in err

    def test_needs_input(self, capsys):
        code, _, err = cli(capsys, "entropy", "--kind", "renyi", "--alpha", "2")
        assert code == 2 and "--dist" in err


class TestSequenceCommand:
    def test_json_matches_list(self, capsys):
        code, out, _ = cli(capsys, "sequence", "--de", "3", "--law", "tsallis-q", "--p", "3", "--range", "-8..8",
                           "--output", "json")
        assert code == 0 and json.loads(out) == P3

    def test_text_rows(self, capsys):
        code, out, _ = cli(capsys, "sequence", "--de", "3", "--law", "tsallis-q", "--p", "5", "--range", "-2..2")
        assert code == 0
        assert out.splitlines() == ["-2 -33", "-1 -2", "0 -1", "1 0", "2 31"]

    def test_csv(self, capsys):
        code, out, _ = cli(capsys, "sequence", "--p", "3", "--range", "1..3", "--output", "csv")
        assert list(csv.reader(io.StringIO(out))) == [["n", "value"], ["1", "0"], ["2", "7"], ["3", "26"]]

    def test_unscaled_fractions(self, capsys):
        code, out, _ = cli(capsys, "sequence", "--law", "tsallis", "--p", "3", "--range", "2..2", "--output", "json")
        assert code == 0 and json.loads(out) == ["7/3"]

    def test_de1_floats(self, capsys):
        code, out, _ = cli(capsys, "sequence", "--de", "1", "--law", "tsallis", "--p", "1", "--range", "0..2",
                           "--output", "json")
        assert code == 0 and json.loads(out)[2] == pytest.approx(math.e**2 - 1, rel=1e-15)

    @pytest.mark.parametrize("argv", [["--p", "0"], ["--range", "5..1"], ["--law", "fibonacci"], ["--de", "9"]])
    def test_bad_input(self, capsys, argv):
        code, _, _ = cli(capsys, "sequence", *argv)
        assert code == 2


class TestSeriesVerifyCommand:
    def test_rejected_law(self, capsys):
        code, out, _ = cli(capsys, "series-verify", "--law", "x+y+x^2*y", "--order", "8", "--output", "json")
        d = json.loads(out)
        assert code == 1
        assert d["group"]["checks"]["symmetry"]["passed"] is False
        assert d["group"]["checks"]["symmetry"]["monomial"] == [2, 1]

    def test_text_report_names_failure(self, capsys):
        code, out, _ = cli(capsys, "series-verify", "--law", "x+y+x^2*y", "--order", "8")
        assert code == 1 and "group.checks.symmetry.passed = False" in out

    def test_ring_pair(self, capsys):
        code, out, _ = cli(capsys, "series-verify", "--law", "x+y", "--psi", "x*y", "--order", "6", "--output",
                           "json")
        d = json.loads(out)
        assert code == 0 and d["ring"]["passed"] is True

    @pytest.mark.parametrize("gen", [["tsallis", "--gparam", "sigma=1/2"], ["rational", "--gparam", "a=1"],
                                     ["identity"]])
    def test_generators(self, capsys, gen):
        code, out, _ = cli(capsys, "series-verify", "--generator", *gen, "--order", "6", "--output", "json")
        assert code == 0 and json.loads(out)["passed"] is True

    def test_random_generator_reports_seed(self, capsys):
        code, out, _ = cli(capsys, "series-verify", "--generator", "random", "--seed", "11", "--order", "6",
                           "--output", "json")
        assert code == 0 and json.loads(out)["seed"] == 11

    def test_emitted_series_round_trip(self, capsys):
        from groupentropy.series import MultivarPoly, construct_group_law, exp_generator

        code, out, _ = cli(capsys, "series-verify", "--generator", "tsallis", "--gparam", "sigma=2", "--order",
                           "5", "--emit-series", "--output", "json")
        phi = MultivarPoly.from_records(json.loads(out)["phi"], 2, 5)
        assert phi == construct_group_law(exp_generator(2, 5))

    def test_unparseable_law(self, capsys):
        code, _, err = cli(capsys, "series-verify", "--law", "x+*y")
        assert code == 2 and "cannot parse" in err


class TestComposeCheckCommand:
    ARGS = ("compose-check", "--kind", "mze", "--alpha", "0.4", "--alpha", "0.7", "--generator", "tsallis",
            "--gparam", "sigma=0.5", "--trials", "200", "--output", "json")

    def test_passes_and_reports_seed(self, capsys):
        code, out, _ = cli(capsys, *self.ARGS, "--seed", "4")
        d = json.loads(out)
        assert code == 0 and d["passed"] and d["seed"] == 4 and d["max_residual"] <= 1e-10

    def test_deterministic(self, capsys):
        outs = [cli(capsys, *self.ARGS, "--seed", "9")[1] for _ in range(2)]
        assert outs[0] == outs[1]

    def test_tolerance_failure_exit(self, capsys):
        code, out, _ = cli(capsys, *self.ARGS, "--tol", "0")
        d = json.loads(out)
        assert code == 1 and not d["passed"] and len(d["worst_pair"]) == 2

    def test_replay_from_config(self, capsys, tmp_path):
        _, cfg, _ = cli(capsys, *self.ARGS, "--seed", "3", "--dump-config")
        path = tmp_path / "run.json"
        path.write_text(cfg)
        _, direct, _ = cli(capsys, *self.ARGS, "--seed", "3")
        _, replay, _ = cli(capsys, "--config", str(path))
        assert direct == replay


class TestExtensivityCommand:
    BASE = ("extensivity", "--kind", "superexp", "--alpha", "0.5", "--generator", "linear", "--gparam", "nu=2",
            "--growth", "super-exponential", "--growth-generator", "linear", "--growth-gparam", "nu=2")

    def test_csv_schema(self, capsys):
        code, out, _ = cli(capsys, *self.BASE, "--n", "100,1000", "--output", "csv")
        rows = list(csv.reader(io.StringIO(out)))
        assert code == 0 and rows[0] == ["N", "S", "S_over_N"]
        assert [r[0] for r in rows[1:]] == ["100", "1000"]
        assert float(rows[2][1]) == pytest.approx(999.0, rel=1e-12)

    def test_expected_constant(self, capsys):
        code, out, _ = cli(capsys, *self.BASE, "--n", "100..1000:300", "--expect-c", "1", "--output", "json")
        d = json.loads(out)
        assert code == 0 and d["status"] == "extensive" and d["passed"]
        assert [r["N"] for r in d["rows"]] == [100, 400, 700, 1000]

    def test_wrong_constant_fails(self, capsys):
        code, out, _ = cli(capsys, *self.BASE, "--expect-c", "2", "--output", "json")
        assert code == 1 and json.loads(out)["passed"] is False

    def test_divergent_pairing(self, capsys):
        code, out, _ = cli(capsys, "extensivity", "--kind", "renyi", "--alpha", "0.5", "--growth",
                           "super-exponential", "--growth-param", "nu=2", "--output", "json")
        assert code == 0 and json.loads(out)["status"] == "divergent"

    def test_rapid_growth(self, capsys):
        code, out, _ = cli(capsys, "extensivity", "--kind", "rapid-growth", "--alpha", "0.5", "--param", "k1=2",
                           "--growth", "double-exponential", "--growth-param", "k1=2", "--growth-param", "k2=1",
                           "--growth-param", "k3=0.5", "--expect-c", "1", "--output", "json")
        assert code == 0 and json.loads(out)["c"] == pytest.approx(1.0)

    def test_unknown_growth(self, capsys):
        code, _, err = cli(capsys, "extensivity", "--kind", "renyi", "--alpha", "0.5", "--growth", "factorial")
        assert code == 2 and "double-exponential" in err


class TestFunceqVerifyCommand:
    @pytest.mark.parametrize("eq", ["additive-phi", "additive-psi", "multiplicative-phi", "multiplicative-psi"])
    @pytest.mark.parametrize("gen", [["identity"], ["tsallis", "--gparam", "sigma=1"],
                                     ["rational", "--gparam", "a=1", "--gparam", "b=1"]])
    def test_passes(self, capsys, eq, gen):
        code, out, _ = cli(capsys, "funceq-verify", "--equation", eq, "--generator", *gen, "--output", "json")
        d = json.loads(out)
        assert code == 0 and d["max_residual"] <= 1e-10

    def test_closed_form(self, capsys):
        code, out, _ = cli(capsys, "funceq-verify", "--equation", "additive-psi", "--generator", "tsallis", "--gparam",
                           "sigma=1", "--closed-form", "--output", "json")
        d = json.loads(out)
        assert code == 0 and d["law"] == "tsallis-product"

    def test_bad_grid(self, capsys):
        code, _, _ = cli(capsys, "funceq-verify", "--grid", "0,1")
        assert code == 2

    def test_unknown_equation(self, capsys):
        code, _, err = cli(capsys, "funceq-verify", "--equation", "additive-chi")
        assert code == 2 and "additive-phi" in err


class TestRunConfig:
    def test_round_trip(self):
        cfg = RunConfig("compose-check", entropy={"kind": "renyi", "alphas": ["0.5"], "params": {}},
                        options={"trials": 10, "sizes": "2..3"}, seed=7, output="json", tol="1e-12")
        assert RunConfig.from_json(cfg.to_json()) == cfg
        assert RunConfig.from_json(cfg.to_json()).to_json() == cfg.to_json()

    def test_rejects_unknown_subcommand(self):
        with pytest.raises(ConfigError, match="valid"):
            RunConfig("plot")

    def test_rejects_unknown_fields(self):
        with pytest.raises(ConfigError):
            RunConfig.from_dict({"subcommand": "entropy", "colour": "red"})

    def test_rejects_unknown_kind(self):
        with pytest.raises(ValueError, match="valid kinds"):
            RunConfig("entropy", entropy={"kind": "nope"})

    def test_run_with_streams(self):
        cfg = RunConfig("entropy", entropy={"kind": "renyi", "alphas": ["2"]}, options={"dist": "-"})
        out = io.StringIO()
        assert run(cfg, io.StringIO("[0.5, 0.25, 0.25]"), out) == 0
        assert float(out.getvalue()) == pytest.approx(math.log(8 / 3))

    def test_decimal_strings_are_exact(self, capsys):
        _, cfg, _ = cli(capsys, "entropy", "--kind", "renyi", "--alpha", "0.1", "--logw", "1", "--dump-config")
        assert json.loads(cfg)["entropy"]["alphas"] == ["0.1"]

    def test_no_subcommand(self, capsys):
        assert main([]) == 2

    def test_bad_config_file(self, capsys, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text("{not json")
        code, _, err = cli(capsys, "--config", str(path))
        assert code == 2 and "config error" in err


class TestEmitReport:
    def test_floats_round_trip(self):
        vals = {"a": 0.1, "b": 1 / 3, "c": 1e-300, "d": 123456789.123456789}
        assert json.loads(emit_report(vals, "json")) == vals

    def test_csv_key_value(self):
        rows = list(csv.reader(io.StringIO(emit_report({"x": 1.5, "nested": {"y": True}}, "csv"))))
        assert rows == [["key", "value"], ["x", "1.5"], ["nested.y", "True"]]

    def test_text_table(self):
        out = emit_report({"c": 1.0}, "text", [(1, 2.0, 2.0)], ("N", "S", "S_over_N"))
        assert out.splitlines() == ["N S S_over_N", "1 2 2", "c = 1"]


def test_console_script():
    proc = subprocess.run([sys.executable, "-m", "groupentropy.cli", "sequence", "--p", "3", "--range", "-8..8",
                           "--output", "json"], capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and json.loads(proc.stdout) == P3
