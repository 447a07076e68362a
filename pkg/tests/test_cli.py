"""Command-line frontend: formats, exit codes, schemas."""

import json

import jsonschema
import pytest

import polychain.dp as dp_mod
from polychain.cli import OUTPUT_SCHEMAS, main
from polychain.indices import IncrementTable, increment_table, preset


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run_cli(capsys, *argv)
    assert code == 0, err
    return json.loads(out)


class TestValue:
    def test_plain_anchor(self, capsys):
        code, out, _ = run_cli(capsys, "value", "--index", "azi", "--links", "1,2,2,1")
        assert code == 0
        assert out.strip() == "10790359/54000 (approx 199.8214630)"

    def test_empty_links_is_two_square_chain(self, capsys):
        code, out, _ = run_cli(capsys, "value", "--index", "azi", "--links", "")
        assert code == 0
        assert out.strip().startswith("3801/64")

    def test_invalid_link_exits_2(self, capsys):
        code, out, err = run_cli(capsys, "value", "--index", "azi", "--links", "1,3")
        assert code == 2
        assert "invalid link '3'" in err

    def test_json_document(self, capsys):
        doc = run_json(capsys, "value", "--index", "azi", "--links", "1,2", "--format", "json")
        jsonschema.validate(doc, OUTPUT_SCHEMAS["value"])
        assert doc["equal"] is True
        assert doc["direct"] == doc["recursive"]
        assert doc["n"] == 4
        assert doc["cells"] == [[0, 0], [1, 0], [2, 0], [2, -1]]

    def test_float_index_value(self, capsys):
        doc = run_json(capsys, "value", "--index", "randic:-1/2", "--links", "1,1",
                       "--format", "json")
        assert doc["mode"] == "float"
        assert doc["direct"]["rational"] is None


class TestExtremalCommands:
    def test_max_nine_enumerate(self, capsys):
        doc = run_json(capsys, "max", "--index", "azi", "--n", "9", "--enumerate")
        jsonschema.validate(doc, OUTPUT_SCHEMAS["max"])
        assert doc["chains"] == [[1, 2, 1, 2, 1, 2, 1]]
        assert doc["witness"] == [1, 2, 1, 2, 1, 2, 1]
        assert doc["labeled_count"] == 1

    def test_min_ten_linear_witness(self, capsys):
        doc = run_json(capsys, "min", "--index", "azi", "--n", "10")
        jsonschema.validate(doc, OUTPUT_SCHEMAS["min"])
        assert doc["witness"] == [1] * 8
        assert doc["objective"] == "min"

    def test_max_eight_dedup_single_representative(self, capsys):
        doc = run_json(capsys, "max", "--index", "azi", "--n", "8",
                       "--enumerate", "--dedup")
        assert len(doc["chains"]) == 1
        assert doc["labeled_count"] == 2

    def test_max_with_limit(self, capsys):
        doc = run_json(capsys, "max", "--index", "azi", "--n", "20",
                       "--enumerate", "--limit", "2")
        assert len(doc["chains"]) == 2

    def test_end_restriction(self, capsys):
        doc = run_json(capsys, "max", "--index", "azi", "--n", "7", "--end", "2",
                       "--enumerate")
        assert all(c[-1] == 2 for c in doc["chains"])
        assert doc["value"] == doc["per_end"]["2"]

    def test_iso_count(self, capsys):
        doc = run_json(capsys, "max", "--index", "azi", "--n", "12", "--iso")
        assert doc["labeled_count"] == 4
        assert doc["iso_count"] == 2

    def test_n_too_small_exits_2(self, capsys):
        code, _, err = run_cli(capsys, "max", "--index", "azi", "--n", "2")
        assert code == 2
        assert "n >= 3" in err

    def test_plain_format(self, capsys):
        code, out, _ = run_cli(capsys, "max", "--index", "azi", "--n", "6",
                               "--format", "plain")
        assert code == 0
        assert "10790359/54000" in out
        assert "witness: 1,2,2,1" in out


class TestClassify:
    def test_minimize_azi(self, capsys):
        doc = run_json(capsys, "classify", "--index", "azi", "--minimize")
        jsonschema.validate(doc, OUTPUT_SCHEMAS["classify"])
        assert doc["case"] == "zigzag-then-linear"
        assert doc["n_star"] == 6
        assert doc["tie_at_threshold"] is False

    def test_harmonic(self, capsys):
        doc = run_json(capsys, "classify", "--index", "harmonic")
        assert doc["case"] == "linear-always"
        assert doc["premise_holds"] is True

    def test_azi_not_applicable(self, capsys):
        doc = run_json(capsys, "classify", "--index", "azi")
        assert doc["case"] == "not-applicable"
        assert doc["premise_holds"] is False


class TestTable:
    def test_csv_matches_closed_form(self, capsys):
        from polychain.azi import azi_max_closed_form
        from polychain.indices import as_decimal_string

        code, out, _ = run_cli(capsys, "table", "--index", "azi",
                               "--from", "5", "--to", "20")
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "n,max,min,labeled_count,iso_count,family"
        assert len(lines) == 17
        for line in lines[1:]:
            cells = line.split(",")
            n = int(cells[0])
            assert cells[1] == as_decimal_string(azi_max_closed_form(n))
            assert cells[5] == ("AZ1" if n % 2 else "AZ2")

    def test_exact_flag(self, capsys):
        code, out, _ = run_cli(capsys, "table", "--index", "azi",
                               "--from", "6", "--to", "6", "--exact")
        assert "10790359/54000" in out

    def test_single_row_other_index(self, capsys):
        code, out, _ = run_cli(capsys, "table", "--index", "zagreb2",
                               "--from", "3", "--to", "3")
        assert code == 0
        assert len(out.strip().splitlines()) == 2

    def test_empty_range_exits_2(self, capsys):
        code, _, err = run_cli(capsys, "table", "--index", "azi",
                               "--from", "9", "--to", "5")
        assert code == 2
        assert "empty range" in err

    def test_json_format(self, capsys):
        doc = run_json(capsys, "table", "--index", "azi", "--from", "5", "--to", "8",
                       "--format", "json")
        jsonschema.validate(doc, OUTPUT_SCHEMAS["table"])
        assert [r["n"] for r in doc["rows"]] == [5, 6, 7, 8]


class TestVerify:
    def test_azi_passes(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "--index", "azi", "--n-max", "10")
        assert code == 0
        doc = json.loads(out)
        jsonschema.validate(doc, OUTPUT_SCHEMAS["verify"])
        assert doc["ok"] is True
        assert doc["oracle"]["checked"] == list(range(3, 11))
        assert doc["azi_maximum"]["status"] == "success"
        assert doc["azi_minimum"]["status"] == "success"

    def test_non_azi_skips_azi_reports(self, capsys):
        doc_code, out, _ = run_cli(capsys, "verify", "--index", "zagreb2", "--n-max", "8")
        doc = json.loads(out)
        assert doc_code == 0
        assert doc["azi_maximum"] is None
        assert doc["azi_minimum"] is None

    def test_corrupted_increments_exit_1(self, capsys, monkeypatch):
        # fault injection: perturb one increment inside the engine only
        def broken(f):
            gt = increment_table(f)
            return IncrementTable(
                g11=gt.g11, g12=gt.g12, g21=gt.g21,
                g22=gt.g22 + 1, g2=gt.g2, base=gt.base,
                mode=gt.mode, eps=gt.eps,
            )

        monkeypatch.setattr(dp_mod, "increment_table", broken)
        code, out, _ = run_cli(capsys, "verify", "--index", "zagreb1", "--n-max", "6")
        assert code == 1
        doc = json.loads(out)
        assert doc["ok"] is False
        assert doc["oracle"]["mismatches"]


class TestIndexResolution:
    def test_index_file(self, capsys, tmp_path):
        doc = {
            "name": "azi-copy",
            "mode": "rational",
            "values": {"2,2": "8", "2,3": "8", "2,4": "8",
                       "3,3": "729/64", "3,4": "1728/125", "4,4": "512/27"},
        }
        path = tmp_path / "azi.json"
        path.write_text(json.dumps(doc))
        code, out, _ = run_cli(capsys, "value", "--index-file", str(path),
                               "--links", "1,2,2,1")
        assert code == 0
        assert out.strip().startswith("10790359/54000")

    def test_missing_index_file_exits_2(self, capsys, tmp_path):
        code, _, err = run_cli(capsys, "value", "--index-file",
                               str(tmp_path / "nope.json"), "--links", "1")
        assert code == 2

    def test_requires_exactly_one_source(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["value", "--links", "1"])
        assert exc.value.code == 2

    def test_unknown_preset_exits_2(self, capsys):
        code, _, err = run_cli(capsys, "value", "--index", "wiener", "--links", "1")
        assert code == 2
        assert "unknown index preset" in err

    def test_randic_gamma_parse_error(self, capsys):
        code, _, err = run_cli(capsys, "value", "--index", "randic:one", "--links", "1")
        assert code == 2
        assert "malformed randic exponent" in err

    def test_mode_float_override(self, capsys):
        doc = run_json(capsys, "value", "--index", "azi", "--mode", "float",
                       "--links", "1,1", "--format", "json")
        assert doc["mode"] == "float"

    def test_mode_rational_promotion_refused(self, capsys):
        code, _, err = run_cli(capsys, "value", "--index", "abc",
                               "--mode", "rational", "--links", "1")
        assert code == 2
        assert "cannot promote" in err

    def test_eps_on_rational_refused(self, capsys):
        code, _, err = run_cli(capsys, "value", "--index", "azi",
                               "--eps", "1e-6", "--links", "1")
        assert code == 2
        assert "float-mode" in err

    def test_out_file(self, capsys, tmp_path):
        target = tmp_path / "result.txt"
        code, out, _ = run_cli(capsys, "value", "--index", "azi",
                               "--links", "1,2,2,1", "--out", str(target))
        assert code == 0
        assert out == ""
        assert target.read_text().strip() == "10790359/54000 (approx 199.8214630)"
