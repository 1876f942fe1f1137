import json

import pytest

from liestruct.cli import (
    EXIT_BUDGET,
    EXIT_OK,
    EXIT_PARSE,
    EXIT_USAGE,
    main,
    parse_field,
)
from liestruct.corpus import save
from liestruct import builtin
from liestruct.fields import GF, QQ, FieldError


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestFieldParsing:
    def test_forms(self):
        assert parse_field("q") == QQ
        assert parse_field("Q") == QQ
        assert parse_field("gf3") == GF(3)
        assert parse_field("GF(7)") == GF(7)
        with pytest.raises(FieldError):
            parse_field("gf4")
        with pytest.raises(FieldError):
            parse_field("reals")


class TestExitCodes:
    def test_usage_error(self, capsys):
        code, _, _ = run(capsys, "chief-series")  # no algebra given
        assert code == EXIT_USAGE

    def test_unknown_command(self, capsys):
        code, _, _ = run(capsys, "frobnicate", "--builtin", "r2")
        assert code == EXIT_USAGE

    def test_parse_error(self, capsys, tmp_path):
        f = tmp_path / "bad.json"
        f.write_text("{ nope")
        code, _, err = run(capsys, "validate", "--input", str(f))
        assert code == EXIT_PARSE and "invalid input" in err

    def test_validation_error(self, capsys, tmp_path):
        doc = {
            "field": {"kind": "Q"},
            "dim": 3,
            "basis": ["a", "b", "c"],
            "brackets": [
                {"i": 0, "j": 1, "coeffs": {"2": "1"}},
                {"i": 0, "j": 2, "coeffs": {"0": "1"}},
            ],
        }
        f = tmp_path / "nonjacobi.json"
        f.write_text(json.dumps(doc))
        code, _, err = run(capsys, "validate", "--input", str(f))
        assert code == EXIT_PARSE and "Jacobi" in err

    def test_budget_exceeded(self, capsys):
        code, _, err = run(capsys, "oracle-check", "--builtin", "heis",
                           "--field", "gf3", "--max-subspaces", "5")
        assert code == EXIT_BUDGET and "budget" in err

    def test_oracle_check_agreement(self, capsys):
        code, out, _ = run(capsys, "oracle-check", "--builtin", "heis", "--field", "gf3")
        assert code == EXIT_OK and "all checks agree" in out

    def test_oracle_check_needs_finite_field(self, capsys):
        code, _, _ = run(capsys, "oracle-check", "--builtin", "heis", "--field", "q")
        assert code == EXIT_BUDGET

    def test_prefrattini_needs_solvable(self, capsys):
        code, _, err = run(capsys, "prefrattini", "--builtin", "sl2")
        assert code == EXIT_PARSE

    def test_strict_passes_on_certified_corpus(self, capsys):
        code, _, _ = run(capsys, "report", "--builtin", "heis", "--field", "gf3", "--strict")
        assert code == EXIT_OK


class TestCommands:
    def test_validate_builtin(self, capsys):
        code, out, _ = run(capsys, "validate", "--builtin", "ab3", "--field", "gf2")
        assert code == EXIT_OK and "valid" in out

    def test_info_json(self, capsys):
        code, out, _ = run(capsys, "info", "--builtin", "sl2", "--json")
        payload = json.loads(out)
        assert code == EXIT_OK
        assert payload["solvable"] is False and payload["derived_dims"] == [3]

    def test_chief_series_human(self, capsys):
        code, out, _ = run(capsys, "chief-series", "--builtin", "heis")
        assert code == EXIT_OK
        assert "frattini" in out and out.count("[") >= 3

    def test_crowns_json(self, capsys):
        code, out, _ = run(capsys, "crowns", "--builtin", "ex22", "--json")
        payload = json.loads(out)
        assert code == EXIT_OK and len(payload["crowns"]) == 3

    def test_primitive_json(self, capsys):
        code, out, _ = run(capsys, "primitive", "--builtin", "sl2_plus_sl2", "--json")
        payload = json.loads(out)
        assert payload["verdict"] == "type3"
        assert payload["common_complement"] is not None

    def test_connected_spec_example(self, capsys):
        code, out, _ = run(capsys, "connected", "--builtin", "sl2_plus_sl2",
                           "--field", "q", "0", "1")
        assert code == EXIT_OK
        assert "connected via N = 0, type 3" in out

    def test_connected_not(self, capsys):
        code, out, _ = run(capsys, "connected", "--builtin", "ex22", "0", "1")
        assert code == EXIT_OK and "not connected" in out

    def test_radical(self, capsys):
        code, out, _ = run(capsys, "radical", "--builtin", "gl2")
        assert code == EXIT_OK and "span{z}" in out

    def test_report_heis_gf3(self, capsys):
        code, out, _ = run(capsys, "report", "--builtin", "heis", "--field", "gf3")
        assert code == EXIT_OK
        assert "not_primitive" in out
        assert "prefrattini: span{z}" in out
        assert "rank 2" in out

    def test_input_file_round_trip(self, capsys, tmp_path):
        f = tmp_path / "heis.json"
        f.write_text(save(builtin("heis", GF(3))))
        code, out, _ = run(capsys, "report", "--input", str(f))
        assert code == EXIT_OK and "prefrattini" in out


class TestGoldenJson:
    @pytest.mark.parametrize("name,field", [
        ("ab1", "q"), ("ab2", "gf2"), ("ab3", "q"), ("r2", "q"), ("r2", "gf3"),
        ("heis", "q"), ("heis", "gf3"), ("ex22", "q"), ("sl2", "q"), ("gl2", "q"),
        ("aff_sl2", "q"), ("sl2_plus_sl2", "q"), ("h3_plus_r2", "q"),
    ])
    def test_report_schema_and_determinism(self, capsys, name, field):
        code1, out1, _ = run(capsys, "report", "--builtin", name, "--field", field, "--json")
        code2, out2, _ = run(capsys, "report", "--builtin", name, "--field", field, "--json")
        assert code1 == code2 == EXIT_OK
        assert out1 == out2  # deterministic output for identical inputs
        payload = json.loads(out1)
        assert payload["schema_version"] == 1
        for key in ("algebra", "chief_series", "crowns", "primitive", "radical"):
            assert key in payload


class TestStrictUndecided:
    def test_exit_five_on_undecided_primitive(self, capsys, tmp_path):
        # two cross-centralizing non-isomorphic simple ideals: the bounded
        # isomorphism search declines, and --strict must surface that
        from liestruct.algebra import LieAlgebra, direct_sum
        from liestruct.cli import EXIT_UNDECIDED

        so3 = LieAlgebra(
            QQ, 3, {(0, 1): (0, 0, 1), (0, 2): (0, -1, 0), (1, 2): (1, 0, 0)}
        )
        L = direct_sum(builtin("sl2"), so3)
        f = tmp_path / "mixed.json"
        f.write_text(save(L))
        code, out, _ = run(capsys, "primitive", "--input", str(f))
        assert code == EXIT_OK and "undecided" in out
        code, out, _ = run(capsys, "primitive", "--input", str(f), "--strict")
        assert code == EXIT_UNDECIDED
