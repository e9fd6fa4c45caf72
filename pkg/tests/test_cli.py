"""Command-line behavior: subcommands, exit codes, output stability."""

import json

from phisoft import equals, parse_csv, parse_json
from phisoft.cli import main
from conftest import TABLE1_CSV


def test_validate_ok(table_files, capsys):
    a, _ = table_files
    assert main(["validate", str(a)]) == 0
    assert "4 alternatives" in capsys.readouterr().out


def test_validate_json_file(table_files, tmp_path, capsys):
    from phisoft import emit_json

    a, _ = table_files
    path = tmp_path / "table1.json"
    path.write_bytes(emit_json(parse_csv(a.read_bytes())))
    assert main(["validate", str(path)]) == 0
    capsys.readouterr()


def test_validate_bad_cell(tmp_path, capsys):
    bad = tmp_path / "bad.csv"
    bad.write_text(TABLE1_CSV.replace('"0.9,0.2"', '"0.9,0.95"'))
    assert main(["validate", str(bad)]) == 1
    assert "error:" in capsys.readouterr().err


def test_validate_missing_file(tmp_path, capsys):
    assert main(["validate", str(tmp_path / "nope.csv")]) == 1
    assert "error:" in capsys.readouterr().err


def test_usage_errors_exit_2(capsys):
    assert main([]) == 2
    assert main(["combine", "a.csv", "b.csv"]) == 2  # missing --op/-o
    assert main(["decide", "a.csv", "b.csv", "--order", "bogus"]) == 2
    capsys.readouterr()


def test_combine_writes_the_table(table_files, tmp_path, table1, capsys):
    a, b = table_files
    out = tmp_path / "combined.csv"
    assert main(["combine", "--op", "eintersect", str(a), str(b), "-o", str(out)]) == 0
    combined = parse_csv(out.read_bytes())
    assert set(combined.parameter_names) == {"s1", "s2", "s3", "s5", "s6"}
    assert main(["validate", str(out)]) == 0
    capsys.readouterr()


def test_combine_idempotent_round_trip(table_files, tmp_path, table1, capsys):
    a, _ = table_files
    out = tmp_path / "same.csv"
    assert main(["combine", "--op", "eintersect", str(a), str(a), "-o", str(out)]) == 0
    assert main(["validate", str(out)]) == 0
    assert equals(parse_csv(out.read_bytes()), table1)
    capsys.readouterr()


def test_combine_to_json(table_files, tmp_path, capsys):
    a, b = table_files
    out = tmp_path / "combined.json"
    assert main(["combine", "--op", "runion", str(a), str(b), "-o", str(out)]) == 0
    assert parse_json(out.read_bytes()).parameter_names == ("s3", "s5", "s6")
    capsys.readouterr()


def test_weights_first_line(table_files, tmp_path, capsys):
    a, b = table_files
    out = tmp_path / "combined.csv"
    main(["combine", "--op", "eintersect", str(a), str(b), "-o", str(out)])
    capsys.readouterr()
    assert main(["weights", str(out)]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "0.21001927"
    assert len(lines) == 5


def test_decide_prints_ranking_and_measures(table_files, capsys):
    a, b = table_files
    assert main(["decide", str(a), str(b)]) == 0
    out = capsys.readouterr().out
    assert "ranking: p4 > p3 > p1 > p2" in out
    assert "optimal: p4" in out
    header = out.splitlines()[0].split()
    assert header == ["id", "apfdv_m", "apfdv_n", "es", "sf", "af", "rank"]


def test_decide_output_is_byte_stable(table_files, capsys):
    a, b = table_files
    main(["decide", str(a), str(b)])
    first = capsys.readouterr().out
    main(["decide", str(a), str(b)])
    second = capsys.readouterr().out
    assert first == second


def test_decide_json_report(table_files, tmp_path, capsys):
    a, b = table_files
    out = tmp_path / "report.json"
    assert main(["decide", str(a), str(b), "--json", str(out)]) == 0
    doc = json.loads(out.read_text())
    assert doc["ranking"] == ["p4", "p3", "p1", "p2"]
    capsys.readouterr()


def test_decide_variants_run(table_files, capsys):
    a, b = table_files
    for extra in (
        ["--agg", "linear"],
        ["--order", "m"],
        ["--order", "sfaf"],
        ["--op", "eunion"],
        ["--op", "rintersect"],
    ):
        assert main(["decide", str(a), str(b), *extra]) == 0
    capsys.readouterr()


def test_laws_smoke(capsys):
    assert main(["laws", "--cases", "150", "--seed", "7"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("seed: 7")
    assert "pass" in out and "FAIL" not in out


def test_laws_reproducible(capsys):
    main(["laws", "--cases", "120", "--seed", "99"])
    first = capsys.readouterr().out
    main(["laws", "--cases", "120", "--seed", "99"])
    second = capsys.readouterr().out
    assert first == second
