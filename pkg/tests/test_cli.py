"""End-to-end command-line behavior through main(argv)."""

import json

import pytest

from artifact.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestEnumerate:
    @pytest.mark.parametrize(
        "label, count", [("g24", "3"), ("g25", "6"), ("spin5w1", "2")]
    )
    def test_count_only(self, capsys, label, count):
        code, out, err = run(capsys, "enumerate", label, "--count-only")
        assert (code, out, err) == (0, count + "\n", "")

    def test_instance_flag_matches_positional(self, capsys):
        code_a, out_a, _ = run(capsys, "enumerate", "g24", "-k", "2")
        code_b, out_b, _ = run(capsys, "enumerate", "--instance", "g24", "-k", "2")
        assert code_a == code_b == 0
        assert out_a == out_b

    def test_conflicting_instance_spellings(self, capsys):
        code, out, err = run(capsys, "enumerate", "g24", "--instance", "g25")
        assert code == 2
        assert err.startswith("error:")
        assert "twice" in err

    def test_table_output_shape(self, capsys):
        code, out, _ = run(capsys, "enumerate", "g24")
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "# instance: g24, degree: 1, count: 3"
        assert lines[1] == ""
        assert lines[2:6] == ["1,2", "1,2", "3,4", "3,4"]

    def test_json_output(self, capsys):
        code, out, _ = run(capsys, "enumerate", "g24", "--format", "json")
        payload = json.loads(out)
        assert code == 0
        assert payload["instance"] == "g24"
        assert payload["count"] == 3
        assert len(payload["tableaux"]) == 3

    def test_csv_output(self, capsys):
        code, out, _ = run(capsys, "enumerate", "g24", "--format", "csv")
        lines = out.splitlines()
        assert lines[0] == "index,rows"
        assert len(lines) == 4
        assert lines[1].startswith('0,"')

    def test_type_b_rows_carry_the_header(self, capsys):
        code, out, _ = run(capsys, "enumerate", "spin5w2", "-k", "2")
        assert code == 0
        assert "type: B, n: 2" in out

    def test_unknown_label(self, capsys):
        code, out, err = run(capsys, "enumerate", "zzz", "--count-only")
        assert code == 2
        assert err.startswith("error:")


class TestStraighten:
    def test_classic_exchange(self, capsys):
        code, out, _ = run(capsys, "straighten", "-n", "4", "p[1,4] p[2,3]")
        assert code == 0
        assert out == "-1 * p[1,2] p[3,4]\n+1 * p[1,3] p[2,4]\n"

    def test_input_file(self, capsys, tmp_path):
        path = tmp_path / "poly.txt"
        path.write_text("p[1,4] p[2,3]  # exchange me\n")
        code, out, _ = run(capsys, "straighten", "-n", "4", "--input", str(path))
        assert code == 0
        assert out == "-1 * p[1,2] p[3,4]\n+1 * p[1,3] p[2,4]\n"

    def test_expression_and_input_conflict(self, capsys, tmp_path):
        path = tmp_path / "poly.txt"
        path.write_text("p[1,2]")
        code, _, err = run(
            capsys, "straighten", "-n", "4", "p[1,2]", "--input", str(path)
        )
        assert code == 2
        assert "not both" in err

    def test_missing_expression(self, capsys):
        code, _, err = run(capsys, "straighten", "-n", "4")
        assert code == 2
        assert "missing expression" in err

    def test_json_terms(self, capsys):
        code, out, _ = run(
            capsys, "straighten", "-n", "4", "p[1,4] p[2,3]", "--format", "json"
        )
        payload = json.loads(out)
        assert code == 0
        assert payload["terms"] == [
            {"coeff": "-1", "monomial": "p[1,2] p[3,4]"},
            {"coeff": "1", "monomial": "p[1,3] p[2,4]"},
        ]

    def test_standard_input_is_a_fixed_point(self, capsys):
        code, out, _ = run(capsys, "straighten", "-n", "5", "p[1,3] p[4,5]")
        assert code == 0
        assert out == "+1 * p[1,3] p[4,5]\n"


class TestFactorize:
    def test_divisible_monomial_verifies(self, capsys):
        code, out, _ = run(capsys, "factorize", "g24", "p[1,2]^4 p[3,4]^4")
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "# g24: p[1,2]^4 p[3,4]^4"
        assert lines[1] == "+1 * [p[1,2]^2 p[3,4]^2] * [p[1,2]^2 p[3,4]^2]"
        assert lines[-1] == "verified: yes"

    def test_json_certificate_is_verified(self, capsys):
        code, out, _ = run(
            capsys, "factorize", "g24", "p[1,2]^4 p[3,4]^4", "--format", "json"
        )
        payload = json.loads(out)
        assert code == 0
        assert payload["verified"] is True
        assert payload["instance"] == "g24"

    def test_emit_dot_writes_the_multigraph(self, capsys, tmp_path):
        path = tmp_path / "graph.dot"
        code, _, _ = run(
            capsys, "factorize", "g24", "p[1,2]^4 p[3,4]^4",
            "--emit-dot", str(path),
        )
        assert code == 0
        text = path.read_text()
        assert text.startswith("graph G {")
        assert "1 -- 2;" in text

    def test_seed_option_does_not_change_the_verdict(self, capsys):
        code, out, _ = run(
            capsys, "factorize", "g24", "p[1,2]^4 p[3,4]^4", "--seed", "5"
        )
        assert code == 0
        assert out.splitlines()[-1] == "verified: yes"

    def test_ungenerated_monomial_is_a_clean_error(self, capsys):
        stuck = "p[1,2,3] p[1,4,5] p[2,4,6] p[3,5,6]"
        code, _, err = run(capsys, "factorize", "g36", stuck)
        assert code == 2
        assert "not generated in degree one" in err

    def test_missing_monomial(self, capsys):
        code, _, err = run(capsys, "factorize", "g24")
        assert code == 2
        assert "missing monomial" in err


class TestVerify:
    def test_passing_bound(self, capsys):
        code, out, _ = run(
            capsys, "verify", "--instance", "g24", "--k", "2", "--gen-degree", "1"
        )
        assert code == 0
        assert "pass" in out

    def test_failing_bound_exits_one(self, capsys):
        code, out, _ = run(capsys, "verify", "g36", "-k", "2", "-d", "1")
        assert code == 1
        lines = out.splitlines()
        assert lines[-1].split() == ["g36", "2", "1", "16", "15", "fail"]

    def test_default_generation_degree_comes_from_the_instance(self, capsys):
        code, out, _ = run(capsys, "verify", "g36", "-k", "2")
        assert code == 0
        assert out.splitlines()[-1].split() == ["g36", "2", "2", "16", "16", "pass"]

    def test_csv_format(self, capsys):
        code, out, _ = run(
            capsys, "verify", "g24", "-k", "2", "-d", "1", "--format", "csv"
        )
        assert code == 0
        assert out.splitlines() == [
            "instance,k,d,dim,rank,verdict",
            "g24,2,1,5,5,pass",
        ]


class TestDuality:
    def test_table_verdict(self, capsys):
        code, out, _ = run(capsys, "duality", "2", "5")
        assert code == 0
        assert out.splitlines()[0].split() == ["k", "left", "right"]
        assert out.rstrip().endswith("verdict: pass")

    def test_json_structure(self, capsys):
        code, out, _ = run(
            capsys, "duality", "2", "6", "--k-max", "2", "--format", "json"
        )
        payload = json.loads(out)
        assert code == 0
        assert payload["left"] == "g26"
        assert payload["right"] == "g46"
        assert payload["verdict"] == "pass"


class TestSuite:
    def test_default_catalog_passes(self, capsys):
        code, out, _ = run(capsys, "suite")
        assert code == 0
        lines = out.splitlines()
        assert len(lines) == 10
        assert all(line.endswith("pass") for line in lines[1:])

    def test_custom_manifest(self, capsys, tmp_path):
        path = tmp_path / "manifest.json"
        path.write_text(json.dumps([
            {"family": "A", "n": 4, "parabolic": [2], "weight": [0, 1, 0],
             "multiple": 4, "label": "g24", "k": 2, "genDegree": 1},
        ]))
        code, out, _ = run(capsys, "suite", "--manifest", str(path))
        assert code == 0
        assert out.splitlines()[1].split() == ["g24", "2", "1", "5", "5", "pass"]

    def test_bad_manifest_is_a_usage_error(self, capsys, tmp_path):
        path = tmp_path / "manifest.json"
        path.write_text('{"not": "a list"}')
        code, _, err = run(capsys, "suite", "--manifest", str(path))
        assert code == 2
        assert "JSON array" in err

    def test_jobs_do_not_change_the_bytes(self, capsys):
        _, serial, _ = run(capsys, "suite", "--jobs", "1", "--format", "json")
        _, threaded, _ = run(capsys, "suite", "--jobs", "4", "--format", "json")
        assert serial == threaded

    def test_repeat_runs_are_byte_identical(self, capsys):
        first = run(capsys, "suite", "--format", "csv")
        second = run(capsys, "suite", "--format", "csv")
        assert first == second
