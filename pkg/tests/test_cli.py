import json
import subprocess
import sys

import pytest

from dyndeg.cli import CSV_HEADER, main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_delta_q45(capsys):
    code, out, _ = run(capsys, "delta", "--q", "45", "--no-timings")
    d = json.loads(out)
    assert code == 0
    assert abs(float(d["rho"]) - 21.6052) < 5e-4
    assert abs(float(d["delta"]) - 466.784) < 0.01
    assert d["basis_kind"] == "Symmetrized"
    assert len(d["charpoly"]) == d["basis_size"] + 1
    assert "timings" not in d


def test_delta_q30_closed_form(capsys):
    code, out, _ = run(capsys, "delta", "--q", "30", "--closed-form")
    d = json.loads(out)
    assert code == 0 and d["closed_form_used"]
    assert abs(float(d["delta"]) - 203.347) < 0.01
    assert set(d["timings"]) >= {"build", "charpoly", "spectral", "closed_form"}


def test_delta_full_and_oracle(capsys):
    code, out, _ = run(capsys, "delta", "--q", "9", "--full", "--check-oracle", "5")
    d = json.loads(out)
    assert code == 0 and d["oracle_checked"] and d["basis_kind"] == "Full"


def test_delta_rho_squared(capsys):
    _, out, _ = run(capsys, "delta", "--q", "21", "--no-timings")
    d = json.loads(out)
    rho = float(d["rho"])
    assert abs(rho * rho - float(d["delta"])) < 1e-9 * float(d["delta"])


def test_delta_is_deterministic(capsys):
    _, a, _ = run(capsys, "delta", "--q", "33", "--no-timings")
    _, b, _ = run(capsys, "delta", "--q", "33", "--no-timings")
    assert a == b


def test_bad_q_exit_2(capsys):
    code, _, err = run(capsys, "delta", "--q", "2")
    assert code == 2 and "error" in err
    code, _, _ = run(capsys, "delta")
    assert code == 2


def test_closed_form_unsupported_exit_2(capsys):
    code, _, _ = run(capsys, "delta", "--q", "60", "--closed-form")
    assert code == 2


def test_oracle_mismatch_exit_3(capsys):
    # the Gamma fibers for q = 16 are not modelled exactly (see README)
    code, _, err = run(capsys, "delta", "--q", "16", "--check-oracle", "3")
    assert code == 3
    assert "oracle disagrees" in err


def test_table_csv(capsys):
    code, out, _ = run(capsys, "table", "--q-from", "3", "--q-to", "8")
    lines = out.strip().splitlines()
    assert code == 0
    assert lines[0] == ",".join(CSV_HEADER)
    assert len(lines) == 7
    row5 = lines[3].split(",")
    assert row5[0] == "5" and abs(float(row5[4]) - 1) < 1e-9


def test_table_json_has_cyclic_delta(capsys):
    code, out, _ = run(capsys, "table", "--q-from", "7", "--q-to", "7", "--format", "json")
    row = json.loads(out)
    golden_sym = ((3 + 5 ** 0.5) / 2) ** 2
    golden_cyc = ((5 + 21 ** 0.5) / 2) ** 2
    assert abs(float(row["delta"]) - golden_sym) < 1e-9
    assert abs(float(row["cyclic_delta"]) - golden_cyc) < 1e-8
    assert row["error"] is None


def test_table_workers_keep_order(capsys, monkeypatch):
    monkeypatch.setenv("DYNDEG_WORKERS", "2")
    _, out, _ = run(capsys, "table", "--q-from", "9", "--q-to", "14", "--format", "json")
    qs = [json.loads(line)["q"] for line in out.strip().splitlines()]
    assert qs == list(range(9, 15))


def test_table_bad_range(capsys):
    code, _, _ = run(capsys, "table", "--q-from", "9", "--q-to", "5")
    assert code == 2


def test_matrix_json_and_csv(capsys, tmp_path):
    code, out, _ = run(capsys, "matrix", "--q", "30", "--basis", "symmetrized")
    d = json.loads(out)
    assert code == 0
    assert d["labels"][0] == "H" and d["columns_are_images"]
    assert d["entries"][0][0] == "15"
    path = tmp_path / "m.csv"
    code, _, _ = run(capsys, "matrix", "--q", "30", "--format", "csv", "--out", str(path))
    assert path.read_text().splitlines()[0].startswith("label,H,")


def test_charpoly(capsys):
    code, out, _ = run(capsys, "charpoly", "--q", "30")
    d = json.loads(out)
    assert d["x_power"] == 1
    assert d["cyclotomic_factors"] == {"1": 2, "2": 1}
    assert d["dominant_factor"] == ["-6", "-16", "11", "32", "-6", "-14", "1"]


def test_oracle_and_verify(capsys):
    code, out, _ = run(capsys, "oracle", "--q", "7", "--n", "8", "--seed", "1")
    d = json.loads(out)
    assert code == 0 and d["compare"]["matches"]
    assert d["sequence"]["degrees"][:3] == [1, 3, 9]
    code, out, _ = run(capsys, "verify", "--q", "9")
    assert code == 0 and json.loads(out)["passed"]


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "dyndeg", "delta", "--q", "7", "--no-timings"],
                          capture_output=True, text=True, check=True)
    assert json.loads(proc.stdout)["q"] == 7
