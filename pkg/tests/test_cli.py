import subprocess
import sys

import pytest

from ringsynth.cli import EXIT_NOT_UNITARY, EXIT_OK, EXIT_PARSE, EXIT_UNSUPPORTED, EXIT_VERIFY, main
from ringsynth.linalg import KERNELS, MAT_H, MAT_HH, MAT_T, format_matrix, from_ints, parse_matrix, parse_word


def put(tmp_path, name, M):
    p = tmp_path / name
    p.write_text(format_matrix(M) if not isinstance(M, str) else M)
    return str(p)


@pytest.mark.parametrize("M,expect", [
    (MAT_HH, "D  gateset={X,CX,CCX,HH}"),
    (MAT_H, "Z_over_sqrt2  gateset={X,CX,CCX,H}"),
    (KERNELS["F2"], "Disqrt2  gateset={X,CX,CCX,F}"),
    (MAT_T, "Domega  unsupported for synthesis"),
])
def test_classify(tmp_path, capsys, M, expect):
    assert main(["classify", put(tmp_path, "m.txt", M)]) == EXIT_OK
    assert capsys.readouterr().out.strip() == expect


def test_classify_verbose(tmp_path, capsys):
    main(["classify", "-v", put(tmp_path, "m.txt", MAT_HH)])
    out = capsys.readouterr().out
    assert "also over:" in out and "{X,CX,CCX,H,CH}" in out


def test_random_is_deterministic(tmp_path):
    a, b = tmp_path / "a.txt", tmp_path / "b.txt"
    main(["random", "--gateset", "gauss", "--n", "2", "--len", "20", "--seed", "7", "--out", str(a)])
    main(["random", "--gateset", "GAUSS", "--n", "2", "--len", "20", "--seed", "7", "--out", str(b)])
    assert a.read_text() == b.read_text()


def test_random_seed_from_environment(tmp_path, monkeypatch):
    monkeypatch.setenv("RINGSYNTH_SEED", "7")
    a, b = tmp_path / "a.txt", tmp_path / "b.txt"
    main(["random", "--gateset", "IMAG", "--out", str(a)])
    main(["random", "--gateset", "IMAG", "--seed", "7", "--out", str(b)])
    assert a.read_text() == b.read_text()


@pytest.mark.parametrize("gs", ["INT", "SUPINT", "REAL", "IMAG", "GAUSS", "SUPGAUSS"])
def test_pipeline(tmp_path, capsys, gs):
    m, w, c = (str(tmp_path / x) for x in ("m.txt", "w.txt", "c.txt"))
    assert main(["random", "--gateset", gs, "--n", "2", "--len", "15", "--seed", "3", "--out", m]) == 0
    assert main(["synth", m, "--out", w]) == EXIT_OK
    out = capsys.readouterr().out
    assert out.startswith("gateset ")
    assert main(["lower", w, "--gateset", gs, "--out", c]) == EXIT_OK
    assert main(["verify", c, m]) == EXIT_OK
    assert capsys.readouterr().out.strip() == "pass"


def test_synth_reports_lde_trace(tmp_path, capsys):
    m = put(tmp_path, "m.txt", MAT_H.kron(MAT_H))
    main(["synth", m, "--out", str(tmp_path / "w.txt")])
    out = capsys.readouterr().out
    assert out.splitlines() == ["gateset INT  length 1", "column 1 lde 1 -> 0"]


def test_verify_mismatch(tmp_path, capsys):
    c = put(tmp_path, "c.txt", "qubits 1\nH 1\n")
    m = put(tmp_path, "m.txt", KERNELS["F2"])
    assert main(["verify", c, m]) == EXIT_VERIFY
    assert "mismatch at entry" in capsys.readouterr().err


def test_exit_codes(tmp_path):
    assert main(["classify", str(tmp_path / "missing.txt")]) == EXIT_PARSE
    assert main(["classify", put(tmp_path, "bad.txt", "dim 2 2\n1 x\n")]) == EXIT_PARSE
    assert main(["classify", put(tmp_path, "nu.txt", from_ints([[1, 1], [0, 1]]))]) == EXIT_NOT_UNITARY
    assert main(["synth", put(tmp_path, "t.txt", MAT_T)]) == EXIT_UNSUPPORTED
    assert main(["synth", put(tmp_path, "f.txt", KERNELS["F2"]), "--gateset", "REAL"]) == EXIT_UNSUPPORTED


def test_synth_file_product_equals_input(tmp_path):
    m = put(tmp_path, "m.txt", from_ints([[0, 1], [1, 0]]).kron(KERNELS["F2"]))
    w = tmp_path / "w.txt"
    main(["synth", m, "--out", str(w)])
    assert parse_word(w.read_text()).matrix() == parse_matrix(open(m).read())


def test_selftest(capsys):
    assert main(["selftest"]) == EXIT_OK
    out = capsys.readouterr().out
    assert out.strip().endswith("0 failure(s)")
    assert "FAIL" not in out


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "ringsynth", "--help"], capture_output=True, text=True)
    assert r.returncode == 0
    for cmd in ("classify", "synth", "lower", "verify", "random", "selftest"):
        assert cmd in r.stdout


def test_lower_without_ancilla(tmp_path, capsys):
    m, w, c = (str(tmp_path / x) for x in ("m.txt", "w.txt", "c.txt"))
    main(["random", "--gateset", "IMAG", "--n", "3", "--len", "20", "--seed", "4", "--out", m])
    main(["synth", m, "--out", w])
    assert main(["lower", w, "--ancilla", "none", "--out", c]) == EXIT_UNSUPPORTED
    assert "needs a clean ancilla" in capsys.readouterr().err
