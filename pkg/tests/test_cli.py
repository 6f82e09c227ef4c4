import json
from fractions import Fraction

import pytest

from istrata import io as serial
from istrata import normalform, torelli
from istrata.cli import main
from istrata.lattices import IntegralLattice


class TestSerialization:
    def test_fraction_round_trip(self):
        for f in [Fraction(3, 7), Fraction(-2), Fraction(0)]:
            assert serial.fraction_from_str(serial.fraction_to_str(f)) == f

    def test_float_rejected(self):
        with pytest.raises(ValueError):
            serial.fraction_from_str("0.5")

    def test_lattice_round_trip(self):
        L = IntegralLattice([[0, 1], [1, 0]])
        obj = json.loads(serial.dumps(serial.lattice_to_json(L)))
        assert serial.lattice_from_json(obj).gram == L.gram

    def test_polynomial_round_trip(self):
        p = normalform.random_deformation(12)
        obj = json.loads(serial.dumps(serial.polynomial_to_json(p)))
        assert serial.polynomial_from_json(obj).coeffs == p.coeffs

    def test_dataset_round_trip(self):
        ds, _ = torelli.gen_fixture("ell211", 1)
        obj = json.loads(serial.dumps(serial.dataset_to_json(ds)))
        assert serial.dataset_from_json(obj) == ds

    def test_dataset_version_checked(self):
        ds, _ = torelli.gen_fixture("rat11", 1)
        obj = serial.dataset_to_json(ds)
        obj["version"] = 99
        with pytest.raises(ValueError):
            serial.dataset_from_json(obj)

    def test_dumps_deterministic(self):
        ds, _ = torelli.gen_fixture("enriques", 2)
        a = serial.dumps(serial.dataset_to_json(ds))
        b = serial.dumps(serial.dataset_to_json(ds))
        assert a == b


class TestCli:
    def run(self, capsys, *argv):
        code = main(list(argv))
        captured = capsys.readouterr()
        report = json.loads(captured.out) if captured.out.strip() else None
        return code, report, captured.err

    def test_verify_stratum(self, capsys):
        code, report, err = self.run(capsys, "verify-stratum", "rat22")
        assert code == 0
        assert report["root_label"] == "E7+E7+D10"
        assert all(c["pass"] for c in report["certificates"])
        assert "all checks pass" in err

    def test_classify_generated(self, capsys):
        code, report, _ = self.run(capsys, "classify", "--label", "enriques")
        assert code == 0
        assert report["classified_as"] == "enriques"

    def test_classify_from_file(self, capsys, tmp_path):
        code, report, _ = self.run(capsys, "gen-fixture", "ell211", "--seed", "3")
        assert code == 0
        path = tmp_path / "ds.json"
        path.write_text(json.dumps(report))
        code, report, _ = self.run(capsys, "classify", "--input", str(path))
        assert code == 0
        assert report["classified_as"] == "ell211"

    def test_roots(self, capsys):
        code, report, _ = self.run(capsys, "roots", "--label", "rat11")
        assert code == 0
        assert report["label"] == "E8+E8+E8"
        assert report["root_count"] == 720

    def test_roots_from_lattice_file(self, capsys, tmp_path):
        # A2 gram (negated): 6 roots
        path = tmp_path / "lat.json"
        path.write_text(json.dumps({"rank": 2, "gram": [[-2, 1], [1, -2]]}))
        code, report, _ = self.run(capsys, "roots", "--input", str(path))
        assert code == 0
        assert report["label"] == "A2"
        assert report["root_count"] == 6

    def test_monodromy(self, capsys):
        code, report, _ = self.run(capsys, "monodromy", "ell111")
        assert code == 0
        assert report["pair_index_pattern"] == [1, 2, 2]
        assert report["primitive"] is True
        assert report["weight_rank"] == 4

    def test_reconstruct(self, capsys):
        code, report, _ = self.run(capsys, "reconstruct", "--seed", "1")
        assert code == 0
        assert report["distinguished_pair"] == [0, 1]
        assert len(report["configurations"]) == 2
        assert len(report["configurations"][0]) == 8

    def test_normal_form(self, capsys):
        code, report, _ = self.run(capsys, "normal-form", "--seed", "4")
        assert code == 0
        assert report["branch"] == "g2"
        assert sorted(report["slice"]) == [
            "a", "b1", "b2", "c1", "c2", "d1", "d2", "e", "f",
        ]

    def test_normal_form_from_file(self, capsys, tmp_path):
        poly = normalform.random_deformation(6)
        path = tmp_path / "poly.json"
        path.write_text(json.dumps(serial.polynomial_to_json(poly)))
        code, report, _ = self.run(capsys, "normal-form", "--input", str(path))
        assert code == 0
        expected = normalform.reduce_to_standard_form(poly)
        assert report["branch"] == expected.branch

    def test_output_is_deterministic(self, capsys):
        _, a, _ = self.run(capsys, "gen-fixture", "rat21", "--seed", "5")
        _, b, _ = self.run(capsys, "gen-fixture", "rat21", "--seed", "5")
        assert a == b

    def test_bad_json_is_input_error(self, capsys, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text("{nope")
        code, _, err = self.run(capsys, "classify", "--input", str(path))
        assert code == 2
        assert "input error" in err

    def test_missing_file_is_input_error(self, capsys):
        code, _, _ = self.run(capsys, "classify", "--input", "/nonexistent.json")
        assert code == 2

    def test_missing_selector_is_input_error(self, capsys):
        code, _, _ = self.run(capsys, "classify")
        assert code == 2

    def test_precondition_failure_is_exit_3(self, capsys, tmp_path):
        # cuspidal fibre: reduction refuses
        poly = normalform.random_deformation(6, cuspidal=True)
        path = tmp_path / "cusp.json"
        path.write_text(json.dumps(serial.polynomial_to_json(poly)))
        code, _, err = self.run(capsys, "normal-form", "--input", str(path))
        assert code == 3
        assert "precondition" in err
