import json

import numpy as np

from qgem import dicke, load_state
from qgem.cli import main


def run_cli(capsys, *args):
    code = main(list(args))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestStateCommand:
    def test_pretty_sine_state(self, capsys):
        code, out, _ = run_cli(capsys, "state", "sin:3", "--pretty")
        assert code == 0
        assert out.splitlines() == [
            "+0.5 |001⟩",
            "+0.5 |010⟩",
            "+0.5 |100⟩",
            "-0.5 |111⟩",
        ]

    def test_pretty_dicke(self, capsys):
        code, out, _ = run_cli(capsys, "state", "dicke:4,2", "--pretty")
        assert code == 0
        lines = out.splitlines()
        assert len(lines) == 6
        assert all(line.startswith("+0.408248290464 ") for line in lines)

    def test_writes_state_file_to_stdout(self, capsys):
        code, out, _ = run_cli(capsys, "state", "werner:1,0")
        assert code == 0
        doc = json.loads(out)
        assert doc["n"] == 2
        assert doc["amps"][2] == [1.0, 0.0]  # |10>

    def test_writes_state_file_to_path(self, capsys, tmp_path):
        path = tmp_path / "d42.json"
        code, out, _ = run_cli(capsys, "state", "dicke:4,2", "-o", str(path), "--pretty")
        assert code == 0
        assert len(out.splitlines()) == 6  # pretty listing still printed
        psi = load_state(path)
        assert np.array_equal(psi.amps, dicke(4, 2).amps)

    def test_bad_spec_exits_2(self, capsys):
        code, _, err = run_cli(capsys, "state", "cluster:3")
        assert code == 2
        assert "error:" in err


class TestMeasureCommand:
    def test_balanced_dicke_table(self, capsys):
        code, out, _ = run_cli(capsys, "measure", "dicke:6,3")
        assert code == 0
        assert out.count("0.5") >= 6
        assert "total: 3" in out

    def test_proper_ghz_with_oracles(self, capsys):
        code, out, _ = run_cli(capsys, "measure", "ghz:5,0.7071067811865476",
                               "--check-oracles")
        assert code == 0
        assert "max oracle deviation" in out

    def test_dominant_werner_total(self, capsys):
        spec = ("werner:0.8366600265340756,0.31622776601683794,"
                "0.31622776601683794,0.31622776601683794")
        code, out, _ = run_cli(capsys, "measure", spec, "--format", "csv")
        assert code == 0
        assert out.splitlines()[0] == "qubit,E"
        total = float(out.splitlines()[-1].split(",")[1])
        assert abs(total - 0.6) < 1e-9

    def test_json_format(self, capsys):
        code, out, _ = run_cli(capsys, "measure", "dicke:4,2", "--format", "json",
                               "--check-oracles")
        assert code == 0
        doc = json.loads(out)
        assert len(doc["per_qubit"]) == 4
        assert abs(doc["total"] - 2.0) < 1e-9
        assert doc["max_oracle_deviation"] <= 1e-6

    def test_reads_state_file(self, capsys, tmp_path):
        path = tmp_path / "s.json"
        assert run_cli(capsys, "state", "cos:3", "-o", str(path))[0] == 0
        code, out, _ = run_cli(capsys, "measure", str(path))
        assert code == 0
        assert "total: 1.5" in out

    def test_rows_within_measure_range(self, capsys):
        code, out, _ = run_cli(capsys, "measure", "dicke:5,2", "--format", "csv")
        assert code == 0
        for line in out.splitlines()[1:-1]:
            value = float(line.split(",")[1])
            assert 0.0 <= value <= 0.5 + 1e-9

    def test_missing_file_exits_2(self, capsys):
        code, _, err = run_cli(capsys, "measure", "/nonexistent/state.json")
        assert code == 2
        assert "error:" in err

    def test_oracle_deviation_beyond_tol_exits_1(self, capsys):
        code, _, err = run_cli(capsys, "measure", "ghz:5,0.7071067811865476",
                               "--check-oracles", "--tol", "1e-30")
        assert code == 1
        assert "exceeds tolerance" in err


class TestSweepCommand:
    def test_ghz_predicted_column(self, capsys):
        code, out, _ = run_cli(capsys, "sweep", "ghz", "--n", "4", "--steps", "5")
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "param,E_1,E_2,E_3,E_4,total,predicted"
        predicted = [float(line.split(",")[-1]) for line in lines[1:]]
        np.testing.assert_allclose(predicted, [0.0, 0.25, 0.5, 0.25, 0.0], atol=1e-12)

    def test_dicke_tent(self, capsys):
        code, out, _ = run_cli(capsys, "sweep", "dicke", "--n", "8")
        assert code == 0
        lines = out.splitlines()[1:]
        assert len(lines) == 9
        e1 = [float(line.split(",")[1]) for line in lines]
        expected = [0, 1 / 8, 2 / 8, 3 / 8, 1 / 2, 3 / 8, 2 / 8, 1 / 8, 0]
        np.testing.assert_allclose(e1, expected, atol=1e-12)

    def test_dicke_two_qubits(self, capsys):
        code, out, _ = run_cli(capsys, "sweep", "dicke", "--n", "2")
        e1 = [float(line.split(",")[1]) for line in out.splitlines()[1:]]
        np.testing.assert_allclose(e1, [0.0, 0.5, 0.0], atol=1e-12)

    def test_werner_symmetric_majorization(self, capsys):
        code, out, _ = run_cli(capsys, "sweep", "werner-symmetric", "--n", "4",
                               "--steps", "5")
        assert code == 0
        rows = [line.split(",") for line in out.splitlines()[1:]]
        # all |c_i|^2 <= 1/2 keeps the total at 1; a dominant first
        # coefficient drops it to 2(1 - p)
        totals = [float(r[-2]) for r in rows]
        np.testing.assert_allclose(totals, [1.0, 1.0, 1.0, 0.5, 0.0], atol=1e-9)

    def test_computed_matches_predicted(self, capsys):
        code, out, _ = run_cli(capsys, "sweep", "ghz", "--n", "3", "--steps", "11")
        assert code == 0
        for line in out.splitlines()[1:]:
            cells = line.split(",")
            assert abs(float(cells[1]) - float(cells[-1])) < 1e-9

    def test_csv_contract(self, capsys, tmp_path):
        path = tmp_path / "sweep.csv"
        code, _, _ = run_cli(capsys, "sweep", "dicke", "--n", "3", "-o", str(path))
        assert code == 0
        raw = path.read_bytes()
        assert b"\r" not in raw
        text = raw.decode()
        assert text.startswith("param,E_1,E_2,E_3,total,predicted\n")

    def test_deterministic_output(self, capsys):
        _, first, _ = run_cli(capsys, "sweep", "ghz", "--n", "3", "--steps", "7")
        _, second, _ = run_cli(capsys, "sweep", "ghz", "--n", "3", "--steps", "7")
        assert first == second

    def test_bad_ranges(self, capsys):
        assert run_cli(capsys, "sweep", "ghz", "--n", "1")[0] == 2
        assert run_cli(capsys, "sweep", "ghz", "--n", "3", "--steps", "1")[0] == 2


class TestVerifyCommand:
    def test_rejects_max_n_out_of_range(self, capsys):
        code, _, err = run_cli(capsys, "verify", "--max-n", "1")
        assert code == 2
        assert "max-n" in err
        assert run_cli(capsys, "verify", "--max-n", "15")[0] == 2

    def test_small_run_passes(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "--max-n", "2", "--seed", "7")
        assert code == 0
        lines = [line for line in out.splitlines() if line.startswith("PASS")]
        assert len(lines) == 13
        assert "13/13 claims passed" in out

    def test_digits_flag(self, capsys):
        code, out, _ = run_cli(capsys, "measure", "dicke:6,2", "--digits", "3")
        assert code == 0
        assert "0.333" in out
