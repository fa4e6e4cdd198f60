"""Command-line interface: subcommands, formats, exit codes."""

import json

from jonesdim import cli, tables


def run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_table_text(capsys):
    code, out, err = run(
        capsys, "table", "--algebra", "symmetric", "--p", "5", "--rmax", "3"
    )
    assert code == 0
    assert out.splitlines() == [
        "r=1  1:1",
        "r=2  2:1  1.1:1",
        "r=3  3:1  2.1:2  1.1.1:1",
    ]


def test_table_csv_single_level(capsys):
    code, out, _ = run(
        capsys,
        "table",
        "--algebra",
        "brauer",
        "--delta",
        "3",
        "--p",
        "7",
        "--r",
        "4",
        "--format",
        "csv",
    )
    assert code == 0
    assert out == "r,weight,dim\n4,2.0,6\n4,1.1,5\n4,0.0,3\n"


def test_table_json_dims_are_strings(capsys):
    code, out, _ = run(
        capsys,
        "table",
        "--algebra",
        "bmw",
        "--n",
        "1",
        "--ell",
        "10",
        "--r",
        "4",
        "--format",
        "json",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["algebra"] == "bmw"
    assert payload["rows"] == [
        {
            "r": 4,
            "entries": [
                {"weight": [2], "dim": "3"},
                {"weight": [0], "dim": "2"},
            ],
        }
    ]


def test_dim_formats(capsys):
    base = ["dim", "--algebra", "hecke", "--ell", "12", "--r", "9"]
    code, out, _ = run(capsys, *base, "--weight", "4,3,2")
    assert (code, out) == (0, "128\n")
    code, out, _ = run(capsys, *base, "--weight", "4,3,2", "--format", "json")
    assert code == 0
    assert json.loads(out) == {"r": 9, "weight": [4, 3, 2], "dim": "128"}
    code, out, _ = run(capsys, *base, "--weight", "4,3,2", "--format", "csv")
    assert out == "r,weight,dim\n9,4.3.2,128\n"


def test_dim_pads_short_weights(capsys):
    code, out, _ = run(
        capsys,
        "dim",
        "--algebra",
        "brauer",
        "--delta",
        "1",
        "--p",
        "7",
        "--r",
        "5",
        "--weight",
        "1",
    )
    assert (code, out) == (0, "1\n")


def test_dim_unknown_label_is_usage_error(capsys):
    code, out, err = run(
        capsys,
        "dim",
        "--algebra",
        "symmetric",
        "--p",
        "5",
        "--r",
        "4",
        "--weight",
        "4,4",
    )
    assert code == 2
    assert out == ""
    assert "valid labels" in err


def test_missing_flags_are_usage_errors(capsys):
    code, _, err = run(capsys, "table", "--algebra", "brauer", "--p", "7")
    assert code == 2
    assert "--delta is required" in err
    code, _, err = run(capsys, "dim", "--algebra", "symmetric", "--p", "5")
    assert code == 2
    code, _, err = run(
        capsys,
        "table",
        "--algebra",
        "brauer",
        "--delta",
        "12",
        "--p",
        "7",
    )
    assert code == 2


def test_bad_weight_string(capsys):
    code, _, err = run(
        capsys,
        "dim",
        "--algebra",
        "symmetric",
        "--p",
        "5",
        "--r",
        "3",
        "--weight",
        "a,b",
    )
    assert code == 2
    assert "cannot parse weight" in err


def test_verify_suites_pass(capsys):
    code, out, _ = run(capsys, "verify", "laws")
    assert code == 0
    assert all(line.startswith("ok ") for line in out.splitlines())

    code, out, _ = run(capsys, "verify", "oracles")
    assert code == 0
    assert all(line.startswith("ok ") for line in out.splitlines())

    code, out, _ = run(capsys, "verify", "fixtures")
    assert code == 0
    lines = out.splitlines()
    assert lines[-1] == (
        f"6/6 tables match ({len(tables.ERRATA)} errata entries applied)"
    )
    assert sum(1 for ln in lines if ln.startswith("ok erratum")) == len(
        tables.ERRATA
    )


def test_fixtures_emit_and_diff(tmp_path, capsys):
    path = str(tmp_path / "tables")
    code, out, _ = run(capsys, "fixtures", "emit", "--path", path)
    assert code == 0
    names = sorted(p.name for p in (tmp_path / "tables").iterdir())
    assert names == [
        "T1.csv",
        "T2.csv",
        "T3.csv",
        "T4.csv",
        "T5.csv",
        "T6.csv",
        "errata.txt",
    ]
    code, out, _ = run(capsys, "fixtures", "diff", "--path", path)
    assert code == 0
    assert "match" in out


def test_fixtures_diff_detects_corruption(tmp_path, capsys):
    path = tmp_path / "tables"
    run(capsys, "fixtures", "emit", "--path", str(path))
    target = path / "T2.csv"
    text = target.read_text().replace("7,5,5", "7,5,6", 1)
    target.write_text(text)
    code, out, _ = run(capsys, "fixtures", "diff", "--path", str(path))
    assert code == 1
    assert "T2 row 7 column 5: stored 6, computed 5" in out


def test_fixtures_diff_missing_file(tmp_path, capsys):
    path = tmp_path / "tables"
    run(capsys, "fixtures", "emit", "--path", str(path))
    (path / "T3.csv").unlink()
    code, _, err = run(capsys, "fixtures", "diff", "--path", str(path))
    assert code == 2
    assert "missing fixture file" in err


def test_fixtures_diff_detects_errata_drift(tmp_path, capsys):
    path = tmp_path / "tables"
    run(capsys, "fixtures", "emit", "--path", str(path))
    target = path / "errata.txt"
    target.write_text(target.read_text().replace("T6 10 2 65 55", "T6 10 2 65 56"))
    code, out, _ = run(capsys, "fixtures", "diff", "--path", str(path))
    assert code == 1
    assert "errata.txt differs" in out
