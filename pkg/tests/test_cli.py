import json
import math

import pytest
from click.testing import CliRunner

from hardyweight.cli import cli


@pytest.fixture
def runner():
    return CliRunner()


def invoke(runner, args, env=None):
    return runner.invoke(cli, args, env=env, catch_exceptions=False)


class TestWeightCommand:
    def test_csv_header_contract(self, runner):
        res = invoke(runner, ["weight", "--p", "2", "--n", "1..5", "--format", "csv"])
        assert res.exit_code == 0
        lines = res.output.strip().split("\n")
        assert lines[0] == "n,omega_opt,omega_classical,ratio"
        assert len(lines) == 6

    def test_first_row_values(self, runner):
        res = invoke(runner, ["weight", "--p", "2", "--n", "1..5"])
        row = res.output.strip().split("\n")[1].split(",")
        assert row[0] == "1"
        assert float(row[1]) == pytest.approx(2.0 - math.sqrt(2.0), rel=1e-11)
        assert float(row[2]) == 0.25

    def test_usage_error_for_invalid_p(self, runner):
        res = runner.invoke(cli, ["weight", "--p", "0.9", "--n", "1..5"])
        assert res.exit_code == 2

    def test_usage_error_for_bad_range(self, runner):
        res = runner.invoke(cli, ["weight", "--p", "2", "--n", "5..1"])
        assert res.exit_code == 2

    def test_multi_p_adds_column(self, runner):
        res = invoke(runner, ["weight", "--p", "2,3", "--n", "1"])
        lines = res.output.strip().split("\n")
        assert lines[0] == "p,n,omega_opt,omega_classical,ratio"
        assert len(lines) == 3

    def test_json_17_digit_roundtrip(self, runner):
        res = invoke(runner, ["weight", "--p", "2", "--n", "1..3",
                              "--format", "json"])
        doc = json.loads(res.output)
        assert len(doc) == 3
        from hardyweight import optimal_weight
        assert doc[0]["omega_opt"] == optimal_weight(2, 1)  # full round-trip


class TestDensityCommand:
    def test_uniform_grid_rows(self, runner):
        res = invoke(runner, ["density", "--p", "2", "--nodes", "5"])
        lines = res.output.strip().split("\n")
        assert lines[0] == "x,rho"
        assert len(lines) == 6
        assert lines[1] == "0,0"          # endpoint rows: exact zeros
        assert lines[-1] == "1,0"
        mid = lines[3].split(",")
        assert float(mid[0]) == 0.5
        assert float(mid[1]) == pytest.approx(1.0 / (2.0 * math.pi), rel=1e-11)

    def test_json_keys(self, runner):
        res = invoke(runner, ["density", "--p", "2", "--nodes", "3",
                              "--format", "json"])
        doc = json.loads(res.output)
        assert list(doc[0].keys()) == ["x", "rho"]

    def test_nodes_validation(self, runner):
        res = runner.invoke(cli, ["density", "--p", "2", "--nodes", "1"])
        assert res.exit_code == 2


class TestMomentsCommand:
    def test_default_backends_agree(self, runner):
        res = invoke(runner, ["moments", "--p", "2", "--kmax", "2"])
        lines = res.output.strip().split("\n")
        assert lines[0] == "k,quadrature,combinatorial,max_deviation"
        want = [0.25, 0.078125, 0.041015625]
        for k, line in enumerate(lines[1:]):
            cells = line.split(",")
            assert int(cells[0]) == k
            assert float(cells[1]) == pytest.approx(want[k], abs=1e-10)
            assert float(cells[2]) == pytest.approx(want[k], abs=1e-10)
            assert float(cells[3]) <= 1e-10

    def test_integer_backend_rejects_fractional_p(self, runner):
        res = runner.invoke(cli, ["moments", "--p", "2.5", "--kmax", "1",
                                  "--backends", "integer"])
        assert res.exit_code == 2

    def test_closed_form_range_guard(self, runner):
        res = runner.invoke(cli, ["moments", "--p", "2", "--kmax", "3",
                                  "--backends", "closed_form"])
        assert res.exit_code == 2

    def test_unknown_backend(self, runner):
        res = runner.invoke(cli, ["moments", "--p", "2", "--backends", "magic"])
        assert res.exit_code == 2


class TestVerifyCommand:
    def test_single_suite_passes(self, runner):
        res = invoke(runner, ["verify", "--p", "2", "--suite", "symmetry"])
        assert res.exit_code == 0
        rec = json.loads(res.output.strip())
        assert rec["claim"] == "symmetry-relations"
        assert rec["pass"] is True

    def test_representation_suite_passes(self, runner):
        res = invoke(runner, ["verify", "--p", "2", "--suite", "representation"])
        assert res.exit_code == 0
        rec = json.loads(res.output.strip())
        assert rec["claim"] == "integral-representation"
        assert rec["pass"] is True

    def test_ndjson_one_record_per_claim_and_p(self, runner):
        res = invoke(runner, ["verify", "--p", "2,3", "--suite",
                              "asymptotics,positivity"])
        assert res.exit_code == 0
        recs = [json.loads(line) for line in res.output.strip().split("\n")]
        # asymptotics: 1 record per p; positivity: 2 records per p
        assert len(recs) == 6
        claims = {r["claim"] for r in recs}
        assert claims == {"asymptotic-law", "density-positivity",
                          "moment-positivity-decay"}

    def test_unknown_suite_is_usage_error(self, runner):
        res = runner.invoke(cli, ["verify", "--suite", "nonsense"])
        assert res.exit_code == 2

    def test_forced_failure_flips_exit_code(self, runner):
        res = invoke(runner, ["verify", "--p", "2", "--suite", "asymptotics",
                              "--force-fail"])
        assert res.exit_code == 1
        rec = json.loads(res.output.strip().split("\n")[0])
        assert rec["pass"] is False
        assert rec["forced_failure"] is True

    def test_tolerance_override_env(self, runner):
        # an absurdly tight global tolerance scale makes the suite fail
        res = runner.invoke(cli, ["verify", "--p", "2", "--suite", "symmetry"],
                            env={"HW_TOL_OVERRIDE": "1e-30"})
        assert res.exit_code == 1

    def test_bad_tolerance_override(self, runner):
        res = runner.invoke(cli, ["verify", "--p", "2", "--suite", "symmetry"],
                            env={"HW_TOL_OVERRIDE": "zero"})
        assert res.exit_code == 2

    def test_byte_stability(self, runner):
        args = ["verify", "--p", "2", "--suite", "positivity,asymptotics",
                "--seed", "11"]
        a = invoke(runner, args).output
        b = invoke(runner, args).output
        assert a == b

    def test_metric_fields_present(self, runner):
        res = invoke(runner, ["verify", "--p", "2", "--suite", "asymptotics"])
        rec = json.loads(res.output.strip())
        for key in ("claim", "params", "metric", "metric_kind", "threshold", "pass"):
            assert key in rec

    def test_seventeen_digit_numbers(self, runner):
        res = invoke(runner, ["verify", "--p", "2", "--suite", "asymptotics"])
        rec = json.loads(res.output.strip())
        # round-trip out of the 17-significant-digit representation is exact
        from hardyweight.herglotz import asymptotics_check
        assert rec["metric"] == asymptotics_check(2).metric


class TestInfoCommand:
    def test_reports_backend(self, runner):
        res = invoke(runner, ["info"])
        doc = json.loads(res.output)
        assert doc["kernel_backend"] in ("compiled", "python")
