import pytest

from thetadet.cli import EXIT_DISAGREE, EXIT_FAIL, EXIT_ORACLE, EXIT_PARSE, main
from thetadet.families import fixture_path, torus_pd
from thetadet.pd import format_pd


def run(capsys, *argv):
    status = main(list(argv))
    captured = capsys.readouterr()
    return status, captured.out, captured.err


def test_det_knot_bundled_fixture(capsys):
    status, out, _ = run(capsys, "det-knot", "fixtures/3_1.pd")
    assert status == 0
    assert out.splitlines()[0] == "det = 3"


def test_det_knot_file_and_inline(capsys, tmp_path):
    path = tmp_path / "k.pd"
    path.write_text(fixture_path("4_1.pd").read_text())
    status, out, _ = run(capsys, "det-knot", str(path))
    assert status == 0 and "det = 5" in out
    status, out, _ = run(capsys, "det-knot", "X(1,5,2,4),X(3,1,4,6),X(5,3,6,2)", "--oracle")
    assert status == 0 and "det = 3" in out and "enumeration agrees" in out


def test_det_knot_structured(capsys):
    status, out, _ = run(capsys, "det-knot", "fixtures/6_1.pd", "--output", "structured", "--delete-vertex", "2")
    assert status == 0
    fields = dict(line.split("=", 1) for line in out.splitlines())
    assert fields["det"] == "9"
    assert fields["shadings_agree"] == "true"
    assert fields["oracle_agrees"] == "skipped"


def test_missing_file(capsys):
    status, _, err = run(capsys, "det-knot", "does_not_exist.pd")
    assert status == EXIT_PARSE
    assert "does_not_exist.pd" in err


def test_malformed_pd(capsys):
    status, _, _ = run(capsys, "det-knot", "X(1,2,3)")
    assert status == EXIT_PARSE


def test_oracle_limit(capsys, tmp_path):
    path = tmp_path / "t25.pd"
    path.write_text(format_pd(torus_pd(25)))
    status, _, err = run(capsys, "det-knot", str(path), "--oracle")
    assert status == EXIT_ORACLE
    status, out, _ = run(capsys, "det-knot", str(path))
    assert status == 0 and "det = 25" in out


def test_pretzel(capsys):
    status, out, _ = run(capsys, "pretzel", "3", "2")
    assert status == 0
    assert out.splitlines()[0] == "det = 15 = 3 × 5; closed form 3²+3·2 = 15 ✓"


def test_pretzel_bad_parity(capsys):
    status, _, _ = run(capsys, "pretzel", "2", "2")
    assert status == EXIT_PARSE


def test_det_theta(capsys):
    status, out, _ = run(capsys, "det-theta", "fixtures/9_48.sym", "--oracle", "--output", "structured")
    assert status == 0
    fields = dict(line.split("=", 1) for line in out.splitlines())
    assert fields["det_full"] == "27"
    assert {fields["det_ab"], fields["det_bc"]} == {"3", "9"}
    assert fields["oracle_agrees"] == "true"


def test_det_theta_disagreement(capsys, tmp_path):
    path = tmp_path / "bad.sym"
    path.write_text("left=1\naxis=2\nledge v1 w1 1\nledge v1 w2 1\n")
    status, _, err = run(capsys, "det-theta", str(path))
    assert status == EXIT_DISAGREE
    assert "disagree" in err


def test_det_theta_parse_error(capsys, tmp_path):
    path = tmp_path / "bad.sym"
    path.write_text("left=1\naxis=1\nledge v1 w1 5\n")
    assert run(capsys, "det-theta", str(path))[0] == EXIT_PARSE
    assert run(capsys, "det-theta", "nope.sym")[0] == EXIT_PARSE


def test_verify_table(capsys):
    status, out, _ = run(capsys, "verify-table")
    assert status == 0
    assert out.splitlines()[-1] == "90/90 rows pass"


def test_oracle_check_is_deterministic(capsys):
    argv = ("oracle-check", "--count", "20", "--seed", "7", "--output", "structured")
    first = run(capsys, *argv)
    second = run(capsys, *argv)
    assert first == second
    assert first[0] == 0
    assert "matrix_tree_pass=20" in first[1]


def test_structured_output_is_stable(capsys):
    a = run(capsys, "pretzel", "5", "4", "--output", "structured")
    b = run(capsys, "pretzel", "5", "4", "--output", "structured")
    assert a == b and a[0] == 0


def test_usage_error():
    with pytest.raises(SystemExit):
        main([])
    assert EXIT_FAIL == 1
