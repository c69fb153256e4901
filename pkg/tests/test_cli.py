import numpy as np
import pytest

from cavity_darboux.cli import main
from cavity_darboux.output import read_csv


def run(tmp_path, *args):
    return main([*args, "--out", str(tmp_path)])


def test_jc_writes_csv_and_svg(tmp_path, capsys):
    assert run(tmp_path, "jc", "--samples", "500") == 0
    assert {f.name for f in tmp_path.iterdir()} == {"jc_W.csv", "jc_W.svg"}
    col, t, w = read_csv(tmp_path / "jc_W.csv")
    assert col == "W" and len(t) == 500 and w[0] == pytest.approx(1.0)


@pytest.mark.parametrize("sigma", ["1", "2", "3"])
def test_darboux_outputs(tmp_path, sigma):
    assert run(tmp_path, "darboux", "--sigma", sigma, "--t1", "20", "--samples", "400", "--csv") == 0
    names = sorted(f.name for f in tmp_path.iterdir())
    assert names == [f"sigma{sigma}_V.csv", f"sigma{sigma}_W.csv"]
    _, _, v = read_csv(tmp_path / f"sigma{sigma}_V.csv")
    assert np.all(np.isfinite(v)) and np.all(v >= 0)


def test_resummed_drive(tmp_path):
    assert run(tmp_path, "darboux", "--sigma", "1", "--set", "sigma1_drive=resummed", "--samples", "300") == 0


def test_config_error_exit_code(tmp_path, capsys):
    assert run(tmp_path, "jc", "--samples", "1") == 2
    assert "samples" in capsys.readouterr().err
    assert run(tmp_path, "darboux") == 2
    assert run(tmp_path, "jc", "--set", "bogus=1") == 2


def test_solver_error_exit_code(tmp_path, capsys):
    # beta_2(0) = b0 sits on the singular denominator
    assert run(tmp_path, "darboux", "--sigma", "2", "--set", "ic_beta=2") == 3
    assert "t=0" in capsys.readouterr().err


def test_degenerate_amplitude_exit_code(tmp_path):
    assert run(tmp_path, "darboux", "--sigma", "1", "--set", "b0=1") == 3


def test_config_file(tmp_path):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("samples = 123\nt1 = 5\n")
    out = tmp_path / "out"
    assert main(["jc", "--config", str(cfg), "--out", str(out), "--csv"]) == 0
    assert len(read_csv(out / "jc_W.csv")[1]) == 123


def test_repeat_runs_byte_identical(tmp_path):
    a, b = tmp_path / "a", tmp_path / "b"
    for d in (a, b):
        assert main(["darboux", "--sigma", "3", "--samples", "500", "--out", str(d)]) == 0
    for f in a.iterdir():
        assert f.read_bytes() == (b / f.name).read_bytes()
