import json

import pytest

from siegel_dims.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestDim:
    def test_principal_level15(self, capsys):
        code, out, err = run(capsys, "dim", "--family", "principal", "--weight", "4", "--level", "15")
        assert (code, out) == (0, "69023360250000000\n")
        assert err == ""

    def test_full(self, capsys):
        code, out, _ = run(capsys, "dim", "--family", "full", "--weight", "10")
        assert (code, out) == (0, "1\n")

    def test_gamma0(self, capsys):
        code, out, _ = run(capsys, "dim", "--family", "gamma0", "--weight", "4", "--level", "13")
        assert (code, out) == (0, "11\n")

    def test_paramodular(self, capsys):
        code, out, _ = run(capsys, "dim", "--family", "paramodular", "--level", "19")
        assert (code, out) == (0, "3\n")

    def test_not_tabulated_is_a_domain_error(self, capsys):
        code, out, err = run(capsys, "dim", "--family", "gamma0", "--weight", "4", "--level", "17")
        assert code == 1
        assert out == ""
        assert "not available" in err

    def test_integrality_failure_maps_to_exit_2(self, capsys):
        code, out, err = run(capsys, "dim", "--family", "principal", "--weight", "5", "--level", "2")
        assert code == 2
        assert out == ""
        assert "integrity" in err

    def test_stdout_is_exactly_one_integer_line(self, capsys):
        _, out, _ = run(capsys, "dim", "--family", "principal", "--weight", "4", "--level", "7")
        assert out == "199500\n"


class TestBounds:
    def test_prime_level(self, capsys):
        code, out, _ = run(capsys, "bounds", "--weight", "4", "--level", "3")
        assert (code, out) == (0, "3/32\n5/2\n")

    def test_composite_level(self, capsys):
        # 69023360250000000/1096 and /30 in lowest terms.
        code, out, _ = run(capsys, "bounds", "--weight", "4", "--level", "15")
        assert code == 0
        assert out == "8627920031250000/137\n2300778675000000\n"

    def test_integer_envelope(self, capsys):
        code, out, _ = run(capsys, "bounds", "--weight", "4", "--level", "3", "--integer-envelope")
        assert (code, out) == (0, "1\n2\n")

    def test_even_level_rejected(self, capsys):
        code, _, err = run(capsys, "bounds", "--weight", "4", "--level", "2")
        assert code == 1
        assert "odd prime" in err


class TestDecompose:
    def test_unique_solution(self, capsys):
        code, out, err = run(capsys, "decompose", "--prime", "3", "--target", "15")
        assert (code, out) == (0, "c14=1\n")
        assert "1 solution(s)" in err

    def test_trivial_solution(self, capsys):
        code, out, _ = run(capsys, "decompose", "--prime", "3", "--target", "0")
        assert (code, out) == (0, "trivial\n")

    def test_no_solutions(self, capsys):
        code, out, err = run(capsys, "decompose", "--prime", "3", "--target", "5")
        assert (code, out) == (0, "")
        assert "0 solution(s)" in err

    def test_json(self, capsys):
        code, out, _ = run(capsys, "decompose", "--prime", "3", "--target", "12", "--format", "json")
        assert code == 0
        payload = json.loads(out)
        assert payload["count"] == 1
        assert payload["solutions"][0]["15"] == 2

    def test_cap_is_a_domain_error(self, capsys):
        code, _, err = run(capsys, "decompose", "--prime", "5", "--target", "5655")
        assert code == 1
        assert "19005458" in err

    def test_include_nonunitary(self, capsys):
        code, out, _ = run(
            capsys, "decompose", "--prime", "3", "--target", "8", "--include-nonunitary"
        )
        assert (code, out) == (0, "c17=1\n")


class TestAnalyze:
    def test_text_report(self, capsys):
        code, out, _ = run(capsys, "analyze", "--weight", "4", "--prime", "3")
        assert code == 0
        assert "dim S_4(Gamma(3)) = 15" in out
        assert "newform dimension: 1" in out
        assert "tau(T, nu^(-1/2) sigma)" in out
        assert "Saito-Kurokawa" in out

    def test_json_report(self, capsys):
        code, out, _ = run(capsys, "analyze", "--weight", "4", "--prime", "3", "--format", "json")
        assert code == 0
        payload = json.loads(out)
        assert payload["dimension"] == 15
        assert payload["newform_dimension"] == 1
        assert payload["lower_bound"] == {"numerator": 3, "denominator": 32}

    def test_large_space_reports_count_only(self, capsys):
        code, out, _ = run(capsys, "analyze", "--weight", "4", "--prime", "5", "--format", "json")
        assert code == 0
        payload = json.loads(out)
        assert payload["solution_count"] == 19005458
        assert "solutions" not in payload


class TestIrreps:
    def test_json(self, capsys):
        code, out, _ = run(capsys, "irreps", "--prime", "3", "--format", "json")
        assert code == 0
        rows = json.loads(out)
        assert len(rows) == 17
        assert rows[13] == {
            "index": 14,
            "formula": "p(p^2+1)/2",
            "dimension": 15,
            "unitary_relevant": True,
        }

    def test_text_marks_nonunitary_rows(self, capsys):
        code, out, _ = run(capsys, "irreps", "--prime", "3")
        assert code == 0
        lines = out.splitlines()
        assert len(lines) == 17
        assert sum("non-unitary" in line for line in lines) == 2

    def test_csv_header(self, capsys):
        _, out, _ = run(capsys, "irreps", "--prime", "5", "--format", "csv")
        assert out.splitlines()[0] == "index,formula,dimension,unitary_relevant"

    def test_even_prime_rejected(self, capsys):
        code, _, err = run(capsys, "irreps", "--prime", "2")
        assert code == 1
        assert "odd prime" in err


class TestTable:
    def test_csv_matches_emitter(self, capsys):
        code, out, _ = run(
            capsys, "table", "--family", "principal", "--weight", "4",
            "--levels", "2,3,5,7,11,13,17", "--format", "csv",
        )
        assert code == 0
        assert out.splitlines()[:3] == ["p,dim", "2,0", "3,15"]
        assert out.splitlines()[-1] == "17,1687834800"

    def test_weights_range(self, capsys):
        code, out, _ = run(capsys, "table", "--family", "full", "--weights", "10..20")
        assert code == 0
        assert len(out.splitlines()) == 12  # header + 11 rows

    def test_bad_range_syntax(self, capsys):
        code, _, err = run(capsys, "table", "--family", "full", "--weights", "10-20")
        assert code == 1
        assert "A..B" in err

    def test_both_single_and_range_rejected(self, capsys):
        code, _, err = run(
            capsys, "table", "--family", "full", "--weight", "10", "--weights", "10..12"
        )
        assert code == 1
        assert "not both" in err


class TestVerify:
    def test_passes_with_exit_0(self, capsys):
        code, out, err = run(capsys, "verify")
        assert code == 0
        assert err == ""
        lines = out.splitlines()
        assert lines[-1].startswith("pass:")
        assert sum(line.startswith("PASS ") for line in lines) >= 50

    def test_json_is_deterministic(self, capsys):
        _, out1, _ = run(capsys, "verify", "--format", "json")
        _, out2, _ = run(capsys, "verify", "--format", "json")
        assert out1 == out2
        payload = json.loads(out1)
        assert payload["overall"] == "pass"
        assert payload["total"] >= 50


class TestUsageErrors:
    def test_unknown_subcommand(self, capsys):
        code, _, err = run(capsys, "frobnicate")
        assert code == 1
        assert "usage:" in err

    def test_missing_required_flag(self, capsys):
        code, _, err = run(capsys, "bounds", "--weight", "4")
        assert code == 1
        assert "usage:" in err

    def test_non_integer_argument(self, capsys):
        code, _, err = run(capsys, "dim", "--family", "full", "--weight", "ten")
        assert code == 1
        assert "usage:" in err

    def test_no_arguments_at_all(self, capsys):
        code, _, err = run(capsys)
        assert code == 1
        assert "usage:" in err

    def test_missing_axis_for_dim(self, capsys):
        code, _, err = run(capsys, "dim", "--family", "principal", "--weight", "4")
        assert code == 1
        assert "--level" in err
