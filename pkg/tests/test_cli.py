import json
from fractions import Fraction

import pytest
from click.testing import CliRunner

from volkenborn.cli import cli


@pytest.fixture
def runner():
    return CliRunner()


def test_seq_daehee_values(runner):
    result = runner.invoke(cli, ["seq", "daehee", "--n", "4", "--format", "csv"])
    assert result.exit_code == 0
    assert result.output == "n,value\n0,1\n1,-1/2\n2,2/3\n3,-3/2\n4,24/5\n"


def test_seq_changhee_second_kind(runner):
    result = runner.invoke(cli, ["seq", "changhee2", "--n", "4", "--format", "csv"])
    assert result.exit_code == 0
    values = [line.split(",")[1] for line in result.output.splitlines()[1:]]
    assert values == ["1", "-1/2", "-1/2", "-3/4", "-3/2"]


def test_seq_stirling_triangle_row_zero(runner):
    result = runner.invoke(cli, ["seq", "stirling1", "--n", "0", "--format", "csv"])
    assert result.exit_code == 0
    assert result.output == "n,k,value\n0,0,1\n"


def test_seq_parametric_family_needs_param(runner):
    result = runner.invoke(cli, ["seq", "apostol-bernoulli", "--n", "3"])
    assert result.exit_code == 2
    assert "--param" in result.output

    ok = runner.invoke(cli, ["seq", "apostol-bernoulli", "--n", "2", "--param", "2", "--format", "csv"])
    assert ok.exit_code == 0
    assert ok.output.splitlines()[1:] == ["0,0", "1,1", "2,-4"]


def test_seq_unknown_family_is_usage_error(runner):
    result = runner.invoke(cli, ["seq", "nonsense", "--n", "3"])
    assert result.exit_code == 2


def test_seq_excluded_parameter_is_usage_error(runner):
    result = runner.invoke(cli, ["seq", "frobenius-euler", "--n", "3", "--param", "1"])
    assert result.exit_code == 2


def test_seq_array_poly(runner):
    result = runner.invoke(
        cli, ["seq", "array-poly", "--n", "3", "--v", "0", "--param", "1", "--format", "json"]
    )
    assert result.exit_code == 0
    obj = json.loads(result.output)
    assert obj["values"][3]["coeffs"] == ["0", "0", "0", "1"]  # plain monomial at v=0


def test_integral_exact(runner):
    result = runner.invoke(cli, ["integral", "b", "--poly", "0,1", "--exact", "--format", "csv"])
    assert result.exit_code == 0
    assert result.output.splitlines()[1] == "-1/2"


def test_integral_level_with_error_valuation(runner):
    result = runner.invoke(
        cli, ["integral", "b", "--poly", "0,1", "--level", "--p", "3", "--N", "2", "--format", "csv"]
    )
    assert result.exit_code == 0
    assert result.output.splitlines()[1] == "4,2"


def test_integral_fermionic_even_prime_rejected(runner):
    result = runner.invoke(cli, ["integral", "f", "--poly", "1", "--level", "--p", "2", "--N", "3"])
    assert result.exit_code == 2
    assert "odd" in result.output


def test_integral_mode_is_mandatory(runner):
    result = runner.invoke(cli, ["integral", "b", "--poly", "1"])
    assert result.exit_code == 2


def test_converge_bosonic_csv(runner):
    result = runner.invoke(
        cli,
        ["converge", "--poly", "0,0,1", "--measure", "b", "--p", "5", "--N-max", "5", "--format", "csv"],
    )
    assert result.exit_code == 0
    lines = result.output.splitlines()
    assert lines[0] == "N,value,err_valuation"
    assert len(lines) == 6
    vals = [int(line.split(",")[2]) for line in lines[1:]]
    assert vals == sorted(vals)


def test_converge_fermionic_constant_is_exact(runner):
    result = runner.invoke(
        cli,
        ["converge", "--poly", "1", "--measure", "f", "--p", "3", "--N-max", "4", "--format", "csv"],
    )
    assert result.exit_code == 0
    for line in result.output.splitlines()[1:]:
        assert line.endswith(",inf")


def test_converge_q_measure(runner):
    result = runner.invoke(
        cli,
        ["converge", "--poly", "0,1", "--measure", "q", "--q", "4", "--p", "3", "--N-max", "3", "--format", "csv"],
    )
    assert result.exit_code == 0
    lines = result.output.splitlines()
    assert len(lines) == 4
    # no symbolic reference for the q measure: error column stays empty
    assert all(line.endswith(",") for line in lines[1:])


def test_verify_selected_ids(runner):
    result = runner.invoke(cli, ["verify", "--ids", "I01,I34", "--n-max", "20", "--format", "json"])
    assert result.exit_code == 0
    obj = json.loads(result.output)
    assert {r["id"] for r in obj["records"]} == {"I01", "I34a", "I34b"}
    assert obj["totals"]["failing_records"] == 0


def test_verify_unknown_id_names_it(runner):
    result = runner.invoke(cli, ["verify", "--ids", "BOGUS"])
    assert result.exit_code == 2
    assert "BOGUS" in result.output


def test_verify_full_suite_small_cap(runner):
    result = runner.invoke(cli, ["verify", "--n-max", "6", "--format", "json"])
    assert result.exit_code == 0
    obj = json.loads(result.output)
    assert obj["totals"]["failing_records"] == 0
    assert obj["totals"]["records"] >= 35


def test_verify_jobs_do_not_change_output(runner):
    a = runner.invoke(cli, ["verify", "--ids", "I23", "--n-max", "8", "--format", "json"])
    b = runner.invoke(cli, ["verify", "--ids", "I23", "--n-max", "8", "--jobs", "4", "--format", "json"])
    assert a.exit_code == b.exit_code == 0
    assert a.output == b.output


def test_json_round_trip_matches_in_memory_values(runner):
    from volkenborn.sequences import bernoulli

    result = runner.invoke(cli, ["seq", "bernoulli", "--n", "12", "--format", "json"])
    assert result.exit_code == 0
    obj = json.loads(result.output)
    for entry in obj["values"]:
        assert Fraction(entry["value"]) == bernoulli(entry["n"])


def test_byte_for_byte_determinism(runner):
    args = ["table-dump", "stirling2", "--n-max", "8", "--format", "csv"]
    assert runner.invoke(cli, args).output == runner.invoke(cli, args).output
    args = ["verify", "--ids", "I12", "--format", "json"]
    assert runner.invoke(cli, args).output == runner.invoke(cli, args).output


def test_format_env_var_sets_default(runner):
    result = runner.invoke(
        cli, ["seq", "euler", "--n", "2"], env={"VOLKENBORN_FORMAT": "json"}
    )
    assert result.exit_code == 0
    obj = json.loads(result.output)
    assert obj["values"][1]["value"] == "-1/2"


def test_table_dump_csv(runner):
    result = runner.invoke(cli, ["table-dump", "lah", "--n-max", "3", "--format", "csv"])
    assert result.exit_code == 0
    assert "3,1,6" not in result.output  # signed family: L(3,1) = -6
    assert "3,1,-6" in result.output


def test_table_dump_json(runner):
    result = runner.invoke(cli, ["table-dump", "eulerian", "--n-max", "4", "--format", "json"])
    assert result.exit_code == 0
    obj = json.loads(result.output)
    row = [r for r in obj["rows"] if r["n"] == 4 and r["k"] == 2]
    assert row == [{"n": 4, "k": 2, "value": "11"}]


def test_malformed_rational_is_usage_error(runner):
    result = runner.invoke(cli, ["integral", "b", "--poly", "0,zebra", "--exact"])
    assert result.exit_code == 2


def test_verify_exit_code_reflects_failures(runner, monkeypatch):
    import dataclasses

    from volkenborn import identities as idmod

    records = list(idmod.catalog())
    orig = records[0]
    records[0] = dataclasses.replace(orig, rhs=lambda *a: orig.rhs(*a) + 1)
    monkeypatch.setattr(idmod, "_CATALOG_CACHE", tuple(records))
    result = runner.invoke(cli, ["verify", "--ids", orig.id, "--format", "json"])
    assert result.exit_code == 1
    obj = json.loads(result.output)
    assert obj["totals"]["failing_records"] == 1
