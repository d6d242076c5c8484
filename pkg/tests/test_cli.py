import json

import pytest

from cyclic_derangements import cli, verify
from cyclic_derangements.verify import Check


def run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# -- table --------------------------------------------------------------------


def test_table_pretty_contains_counts(capsys):
    code, out, err = run(capsys, "table", "--r", "2", "--n", "0..4")
    assert code == 0 and err == ""
    assert "233" in out  # count at r=2, n=4


def test_table_csv(capsys):
    code, out, _ = run(capsys, "table", "--r", "1..2", "--n", "0..3", "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "r,n=0,n=1,n=2,n=3"
    assert lines[1] == "1,1,0,1,2"
    assert lines[2] == "2,1,1,5,29"


def test_table_json_schema(capsys):
    code, out, _ = run(
        capsys, "table", "--r", "3", "--n", "0..2", "--format", "json"
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["schema"] == 1
    assert doc["method"] == "formula"
    assert doc["n"] == [0, 1, 2]
    assert doc["rows"] == [{"r": 3, "counts": [1, 2, 13], "refusals": {}}]


def test_table_transform_refuses_trivial_modulus_per_cell(capsys):
    code, out, _ = run(
        capsys,
        "table", "--r", "1..2", "--n", "0..2", "--method", "transform",
        "--format", "csv",
    )
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[1] == "1,refused,refused,refused"
    assert lines[2] == "2,1,1,5"


def test_table_compare_reference_reports_the_mismatch(capsys):
    code, out, _ = run(capsys, "table", "--compare-reference")
    assert code == 0
    assert "reference mismatch at r=3, n=2: published 12, computed 13" in out


def test_table_compare_reference_json(capsys):
    code, out, _ = run(
        capsys, "table", "--compare-reference", "--format", "json"
    )
    doc = json.loads(out)
    assert doc["reference_discrepancies"] == [
        {"r": 3, "n": 2, "reference": 12, "computed": 13}
    ]


def test_table_bounded_brute_force_reports_refusals(capsys):
    code, out, _ = run(
        capsys,
        "table", "--r", "2", "--n", "0..4", "--method", "brute-force",
        "--bound", "100", "--format", "json",
    )
    assert code == 0
    doc = json.loads(out)
    row = doc["rows"][0]
    assert row["counts"][:3] == [1, 1, 5]
    assert row["counts"][4] is None  # 2^4 * 4! = 384 > 100
    assert "4" in row["refusals"]


# -- poly ---------------------------------------------------------------------


def test_poly_text(capsys):
    code, out, _ = run(
        capsys, "poly", "--kind", "qt-derangement", "--r", "2", "--n", "2"
    )
    assert code == 0
    assert out.strip() == "q + t + qt + t^2 + qt^2"


def test_poly_json(capsys):
    code, out, _ = run(
        capsys,
        "poly", "--kind", "exc-derangement", "--r", "3", "--n", "2",
        "--format", "json",
    )
    doc = json.loads(out)
    assert doc["schema"] == 1
    assert doc["kind"] == "exc-derangement"
    assert (doc["r"], doc["n"]) == (3, 2)
    assert doc["text"] == "4 + 9q"


def test_poly_eulerian_and_group(capsys):
    code, out, _ = run(capsys, "poly", "--kind", "eulerian", "--r", "2", "--n", "2")
    assert out.strip() == "1 + 6q + q^2"
    code, out, _ = run(capsys, "poly", "--kind", "qt-group", "--r", "1", "--n", "3")
    assert code == 0 and out.strip() == "1 + 2q + 2q^2 + q^3"


# -- verify ---------------------------------------------------------------------


def test_verify_single_suite_json(capsys):
    code, out, _ = run(
        capsys, "verify", "--suite", "counts", "--format", "json"
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["schema"] == 1
    assert doc["summary"]["failed"] == 0
    assert doc["summary"]["passed"] == doc["summary"]["total"] > 0
    assert all(c["suite"] == "counts" for c in doc["checks"])


def test_verify_pretty_summary_line(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "bijections")
    assert code == 0
    lines = out.strip().splitlines()
    assert all(line.startswith("[ok]") for line in lines[:-1])
    assert lines[-1].endswith("checks passed, 0 failed")


def test_verify_failure_sets_exit_code(capsys, monkeypatch):
    def fake(names=None):
        return [Check("fake", "always-red", False, detail="boom")]

    monkeypatch.setattr(verify, "run_suites", fake)
    code, out, _ = run(capsys, "verify")
    assert code == 1
    assert "[FAIL] fake/always-red: boom" in out
    assert "0/1 checks passed, 1 failed" in out


def test_verify_rejects_unknown_suite(capsys):
    with pytest.raises(SystemExit):
        cli.main(["verify", "--suite", "nonsense"])
    capsys.readouterr()


# -- roots ---------------------------------------------------------------------


def test_roots_pretty_certificates(capsys):
    code, out, _ = run(
        capsys, "roots", "--r", "2", "--n", "4", "--interlace-next"
    )
    assert code == 0
    assert "negative-distinct: pass" in out
    assert "interlacing with n=5: pass" in out


def test_roots_json(capsys):
    code, out, _ = run(
        capsys,
        "roots", "--kind", "eulerian", "--r", "2", "--n", "3",
        "--format", "json",
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["schema"] == 1
    assert doc["kind"] == "eulerian"
    assert doc["negative_distinct"]["passed"] is True
    assert doc["log_concave"] is True


def test_roots_zero_root_is_reported_not_fatal(capsys):
    code, out, _ = run(
        capsys, "roots", "--r", "1", "--n", "4", "--format", "json"
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["zero_root_multiplicity"] == 1
    assert doc["negative_distinct"]["passed"] is True


# -- dump ---------------------------------------------------------------------


def test_dump_single_element(capsys):
    code, out, _ = run(capsys, "dump", "--r", "2", "--element", "2^1,1")
    assert code == 0
    doc = json.loads(out)
    assert doc["schema"] == 1
    assert doc["element"] == "2^1,1"
    assert doc["derangement"] is True
    assert (doc["maj"], doc["des"], doc["sgn"], doc["exc"], doc["sub"]) == (
        0, 1, 1, 1, 2,
    )


def test_dump_enumerates_jsonl(capsys):
    code, out, _ = run(capsys, "dump", "--r", "2", "--n", "2")
    assert code == 0
    lines = [json.loads(line) for line in out.strip().splitlines()]
    assert len(lines) == 8
    assert sum(1 for doc in lines if doc["derangement"]) == 5


def test_dump_derangements_only_with_alternate_order(capsys):
    code, out, _ = run(
        capsys,
        "dump", "--r", "3", "--n", "2", "--derangements-only",
        "--order", "alternate",
    )
    assert code == 0
    lines = [json.loads(line) for line in out.strip().splitlines()]
    assert len(lines) == 13
    assert all(doc["derangement"] for doc in lines)
    assert all(doc["order"] == "alternate" for doc in lines)


# -- error handling ----------------------------------------------------------------


def test_bad_element_exits_two(capsys):
    code, out, err = run(capsys, "dump", "--r", "2", "--element", "1,1")
    assert code == 2
    assert out == "" and err.startswith("error:")


def test_dump_without_target_exits_two(capsys):
    code, _, err = run(capsys, "dump", "--r", "2")
    assert code == 2 and "--n" in err


def test_bound_refusal_exits_two(capsys):
    code, _, err = run(capsys, "dump", "--r", "2", "--n", "4", "--bound", "10")
    assert code == 2 and err.startswith("error:")


def test_bad_range_exits_two(capsys):
    code, _, err = run(capsys, "table", "--r", "5..2")
    assert code == 2 and "empty range" in err


def test_console_script_entry_point():
    from importlib.metadata import entry_points

    eps = entry_points(group="console_scripts")
    matches = [ep for ep in eps if ep.name == "cyclic-derangements"]
    assert matches and matches[0].value == "cyclic_derangements.cli:main"
