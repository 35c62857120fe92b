import io
import json

import pytest

from qpcert.cli import main
from qpcert.triangles import count_bruteforce

ANDREWS = "round(n^2/12)-floor(n/4)*floor((n+2)/4)"


def run(capsys, argv):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def canonical_json(doc) -> str:
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def test_coeffs_text(capsys):
    code, out, _ = run(capsys, ["coeffs", "--parts", "2,3,4", "--shift", "3", "--upto", "12"])
    assert code == 0
    assert out == "0 0 0 1 0 1 1 2 1 3 2 4 3\n"


def test_coeffs_geometric(capsys):
    code, out, _ = run(capsys, ["coeffs", "--parts", "1", "--shift", "0", "--upto", "3"])
    assert code == 0
    assert out == "1 1 1 1\n"


def test_coeffs_upto_zero(capsys):
    code, out, _ = run(capsys, ["coeffs", "--parts", "2,3,4", "--shift", "3", "--upto", "0"])
    assert code == 0
    assert out == "0\n"


def test_coeffs_with_numerator_list(capsys):
    code, out, _ = run(capsys, ["coeffs", "--parts", "1", "--num", "1,0,0,1", "--upto", "6"])
    assert code == 0
    assert out == "1 1 1 2 2 2 2\n"


def test_coeffs_requires_num_or_shift(capsys):
    with pytest.raises(SystemExit) as err:
        main(["coeffs", "--parts", "2,3,4", "--upto", "5"])
    assert err.value.code == 2


def test_coeffs_rejects_bad_parts(capsys):
    with pytest.raises(SystemExit) as err:
        main(["coeffs", "--parts", "2,0", "--shift", "0", "--upto", "5"])
    assert err.value.code == 2


def test_certify_certified_exit_zero(capsys):
    code, out, _ = run(
        capsys,
        ["certify", "--parts", "2,3,4", "--shift", "3", "--expr", ANDREWS],
    )
    assert code == 0
    assert "verdict: certified" in out
    assert "degree bound: 2" in out
    assert "period: 12" in out
    assert "window: [0, 36) (36 checks)" in out


def test_certify_refuted_exit_one(capsys):
    code, out, _ = run(
        capsys,
        ["certify", "--parts", "2,3,4", "--shift", "3", "--expr", "floor(n/4)"],
    )
    assert code == 1
    assert "verdict: refuted" in out
    assert "witness: n=3 lhs=1 rhs=0" in out


def test_certify_parse_error_exit_two(capsys):
    code, out, err = run(
        capsys,
        ["certify", "--parts", "2,3,4", "--shift", "3", "--expr", "round(n^2/"],
    )
    assert code == 2
    assert out == ""
    assert "offset 10" in err


def test_certify_probe_reported(capsys):
    code, out, _ = run(
        capsys,
        ["certify", "--parts", "2,3,4", "--shift", "3", "--expr", ANDREWS,
         "--probe", "50", "--format", "json"],
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["result"]["probe"]["agreed"] is True
    assert doc["result"]["probe"]["seed"] == "0"


def test_triangles_count(capsys):
    code, out, _ = run(capsys, ["triangles", "count", "--perimeter", "12"])
    assert code == 0
    assert out == "3\n"


def test_triangles_count_degenerate(capsys):
    code, out, _ = run(capsys, ["triangles", "count", "--perimeter", "2"])
    assert code == 0
    assert out == "0\n"


def test_triangles_list(capsys):
    code, out, _ = run(capsys, ["triangles", "list", "--perimeter", "3"])
    assert code == 0
    assert out == "(1,1,1)\n"


def test_triangles_negative_perimeter_exit_two(capsys):
    with pytest.raises(SystemExit) as err:
        main(["triangles", "count", "--perimeter", "-4"])
    assert err.value.code == 2


def test_fit_triangle_counts_from_file(tmp_path, capsys):
    values = tmp_path / "counts.txt"
    values.write_text(" ".join(str(count_bruteforce(n)) for n in range(50)))
    code, out, _ = run(
        capsys,
        ["fit", "--values", str(values), "--dmax", "3", "--lmax", "12"],
    )
    assert code == 0
    assert "period: 12" in out
    assert "degree: 2" in out
    assert "holdout_verified: true" in out


def test_fit_constant_from_stdin(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO("7\n" * 20))
    code, out, _ = run(capsys, ["fit", "--stdin", "--dmax", "2", "--lmax", "4"])
    assert code == 0
    assert "period: 1" in out
    assert "constituent 0: 7" in out


def test_fit_insufficient_samples_exit_two(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO("1 2 3 4 5"))
    code, _, err = run(
        capsys, ["fit", "--stdin", "--dmax", "2", "--lmax", "4", "--holdout", "2"]
    )
    assert code == 2
    assert "14" in err


def test_fit_rejects_non_integer_values(tmp_path, capsys):
    values = tmp_path / "bad.txt"
    values.write_text("1 2 x")
    code, _, err = run(capsys, ["fit", "--values", str(values), "--dmax", "1", "--lmax", "1"])
    assert code == 2
    assert "integers" in err


def test_paper_text(capsys):
    code, out, _ = run(capsys, ["paper"])
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[-1] == "true"
    assert len(lines) == 39  # header + 37 rows + verdict


def test_paper_json_carries_both_arrays(capsys):
    code, out, _ = run(capsys, ["paper", "--format", "json"])
    assert code == 0
    doc = json.loads(out)
    assert len(doc["result"]["coefficients"]) == 37
    assert len(doc["result"]["formula"]) == 37
    assert doc["result"]["coefficients"] == doc["result"]["formula"]
    assert doc["result"]["equal"] is True


def test_json_round_trips_byte_identical(capsys):
    for argv in (
        ["coeffs", "--parts", "2,3,4", "--shift", "3", "--upto", "12", "--format", "json"],
        ["certify", "--parts", "2,3,4", "--shift", "3", "--expr", ANDREWS, "--format", "json"],
        ["triangles", "list", "--perimeter", "12", "--format", "json"],
        ["paper", "--format", "json"],
    ):
        _, out, _ = run(capsys, argv)
        assert canonical_json(json.loads(out)) == out


def test_json_contains_no_floats(capsys):
    _, out, _ = run(
        capsys,
        ["certify", "--parts", "2,3,4", "--shift", "3", "--expr", ANDREWS,
         "--probe", "10", "--format", "json"],
    )

    def scan(value):
        assert not isinstance(value, float)
        if isinstance(value, dict):
            for v in value.values():
                scan(v)
        elif isinstance(value, list):
            for v in value:
                scan(v)

    scan(json.loads(out))


def test_formats_carry_identical_coefficients(capsys):
    argv = ["coeffs", "--parts", "2,3,4", "--shift", "3", "--upto", "12"]
    _, text_out, _ = run(capsys, argv)
    _, json_out, _ = run(capsys, argv + ["--format", "json"])
    _, csv_out, _ = run(capsys, argv + ["--format", "csv"])
    from_text = text_out.split()
    from_json = json.loads(json_out)["result"]["coefficients"]
    csv_lines = csv_out.strip().splitlines()
    assert csv_lines[0] == "n,coefficient"
    from_csv = [line.split(",")[1] for line in csv_lines[1:]]
    assert from_text == from_json == from_csv


def test_schema_version_present_everywhere(capsys):
    for argv in (
        ["coeffs", "--parts", "1", "--shift", "0", "--upto", "2", "--format", "json"],
        ["paper", "--format", "json"],
        ["triangles", "count", "--perimeter", "9", "--format", "json"],
    ):
        _, out, _ = run(capsys, argv)
        assert json.loads(out)["schema_version"] == "1"


def test_unknown_subcommand_exit_two(capsys):
    with pytest.raises(SystemExit) as err:
        main(["frobnicate"])
    assert err.value.code == 2
