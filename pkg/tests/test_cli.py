import json

from liecap.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


class TestList:
    def test_dim5(self, capsys):
        code, out, err = run(capsys, "list", "5")
        assert code == 0
        lines = [l for l in out.splitlines() if l.strip()]
        assert len(lines) == 9
        assert lines[0].startswith("L5_1")

    def test_dim6_epsilon_annotation(self, capsys):
        code, out, _ = run(capsys, "list", "6")
        assert code == 0
        lines = out.splitlines()
        assert len([l for l in lines if l.strip()]) == 28
        assert sum("epsilon family" in l for l in lines) == 4

    def test_dim7_errors(self, capsys):
        code, out, err = run(capsys, "list", "7")
        assert code == 2
        assert "one-parameter families" in err

    def test_json_format(self, capsys):
        code, out, _ = run(capsys, "list", "3", "--format", "json")
        assert code == 0
        data = json.loads(out)
        assert [d["key"] for d in data] == ["L3_1", "L3_2"]


class TestInvariants:
    def test_l54_report(self, capsys):
        code, out, _ = run(capsys, "invariants", "L5_4", "--format", "json")
        assert code == 0
        d = json.loads(out)
        assert d["multiplier_dim"] == 5
        assert d["exterior_type"] == "A(6)"
        assert d["diagonal_dim"] == 10
        assert d["tensor_type"] == "A(16)"
        assert d["capable"] is False

    def test_a1_noncapable(self, capsys):
        code, out, _ = run(capsys, "invariants", "A1", "--format", "json")
        assert code == 0
        assert json.loads(out)["capable"] is False

    def test_l621_eps0(self, capsys):
        code, out, _ = run(capsys, "invariants", "L6_21(e=0)", "--format", "json")
        assert code == 0
        assert json.loads(out)["exterior_type"] == "H(1)+A(5)"

    def test_csv(self, capsys):
        code, out, _ = run(capsys, "invariants", "H1", "--format", "csv")
        assert code == 0
        header, row = [l for l in out.splitlines() if l.strip()]
        assert header.split(",")[0] == "label"
        assert row.split(",")[0] == "H1"

    def test_bad_key_exit2(self, capsys):
        code, _, err = run(capsys, "invariants", "L9_1")
        assert code == 2

    def test_file_input(self, tmp_path, capsys):
        doc = {"dim": 3, "labels": ["x1", "x2", "x3"], "field": "Q",
               "brackets": [{"i": 1, "j": 2, "out": [{"k": 3, "c": "1"}]}]}
        path = tmp_path / "h1.json"
        path.write_text(json.dumps(doc))
        code, out, _ = run(capsys, "invariants", "--file", str(path),
                           "--format", "json")
        assert code == 0
        assert json.loads(out)["exterior_type"] == "A(3)"

    def test_not_nilpotent_exit2(self, tmp_path, capsys):
        # [x1,x2]=x2 is a valid solvable algebra but not nilpotent
        doc = {"dim": 2, "field": "Q",
               "brackets": [{"i": 1, "j": 2, "out": [{"k": 2, "c": "1"}]}]}
        path = tmp_path / "solvable.json"
        path.write_text(json.dumps(doc))
        code, _, err = run(capsys, "invariants", "--file", str(path))
        assert code == 2
        assert "nilpotent" in err

    def test_jacobi_violation_exit3(self, tmp_path, capsys):
        doc = {"dim": 3, "field": "Q",
               "brackets": [{"i": 1, "j": 2, "out": [{"k": 3, "c": "1"}]},
                            {"i": 1, "j": 3, "out": [{"k": 1, "c": "1"}]}]}
        path = tmp_path / "bad.json"
        path.write_text(json.dumps(doc))
        code, _, err = run(capsys, "invariants", "--file", str(path))
        assert code == 3
        assert "Jacobi" in err

    def test_deterministic_output(self, capsys):
        _, out1, _ = run(capsys, "invariants", "L6_10", "--format", "json")
        _, out2, _ = run(capsys, "invariants", "L6_10", "--format", "json")
        assert out1 == out2

    def test_missing_key_exit2(self, capsys):
        code, _, err = run(capsys, "invariants")
        assert code == 2


class TestVerifyTables:
    def test_multipliers5_passes(self, capsys):
        code, out, _ = run(capsys, "verify-tables", "multipliers5")
        assert code == 0
        assert "9/9 rows pass" in out

    def test_diagonal5_passes(self, capsys):
        code, out, _ = run(capsys, "verify-tables", "diagonal5")
        assert code == 0

    def test_census_passes(self, capsys):
        code, out, _ = run(capsys, "verify-tables", "census")
        assert code == 0

    def test_exterior6_reports_published_divergence(self, capsys):
        # the published table's k=14 row disagrees with the computation;
        # the suite must surface that row as a failure with a JSON diff
        code, out, _ = run(capsys, "verify-tables", "exterior6")
        assert code == 1
        failing = [l for l in out.splitlines() if l.startswith("FAIL")]
        assert len(failing) == 1 and "L6_14" in failing[0]
        diff = json.loads(out.splitlines()[-1])
        assert diff == [{"suite": "exterior6", "row": "L6_14",
                         "expected": "L5_8+A(1)", "computed": "H(1)+A(3)"}]

    def test_jobs_flag(self, capsys):
        code, out, _ = run(capsys, "verify-tables", "diagonal5", "--jobs", "2")
        assert code == 0

    def test_epsilon_set(self, capsys):
        code, out, _ = run(capsys, "verify-tables", "multipliers6",
                           "--epsilon-set", "1,-1")
        assert code == 0
        rows = [l for l in out.splitlines() if l.startswith("PASS")]
        assert len(rows) == 24 + 4 * 2


class TestCover:
    def test_summary(self, capsys):
        code, out, _ = run(capsys, "cover", "L4_3")
        assert code == 0
        d = json.loads(out)
        assert d["multiplier_dim"] == 2
        assert d["star_dim"] == 6

    def test_dump_star(self, capsys):
        code, out, _ = run(capsys, "cover", "H1", "--dump-star")
        assert code == 0
        d = json.loads(out)
        assert d["star"]["dim"] == 5  # H(1) has a 2-dim multiplier
