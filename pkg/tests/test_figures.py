"""Report path: figure rendering and the report subcommand's file layout."""

import json

from hyperlandau import cli
from hyperlandau.figures import save_oracle_figure, save_spectrum_figure
from hyperlandau.landau import SurfaceField, spectrum_report
from hyperlandau.oracle import landau_levels_numeric


def test_spectrum_figure_written(tmp_path):
    path = tmp_path / "spectrum.png"
    save_spectrum_figure(spectrum_report(SurfaceField(2, 10)), path)
    assert path.exists() and path.stat().st_size > 1000


def test_oracle_figure_written(tmp_path):
    result = landau_levels_numeric(5.0, 1, ell_range=(0, 1), grid_points=2000)
    path = tmp_path / "oracle.png"
    save_oracle_figure(result, path)
    assert path.exists() and path.stat().st_size > 1000


def test_report_command_writes_tables_and_figures(tmp_path, capsys):
    out_dir = tmp_path / "report"
    code = cli.main(
        [
            "report",
            "--genus", "2",
            "--theta", "10",
            "--out", str(out_dir),
            "--grid", "2000",
            "--ell-min", "-2",
            "--ell-max", "4",
        ]
    )
    manifest = json.loads(capsys.readouterr().out)
    assert code == 0
    assert manifest["all_matched"] is True
    expected = {"spectrum.csv", "spectrum.json", "spectrum.png", "oracle.csv", "oracle.json", "oracle.png"}
    assert set(manifest["files"]) == expected
    for name in expected:
        assert (out_dir / name).stat().st_size > 0
    # delimited output alongside the figures matches the spectrum subcommand
    assert (out_dir / "spectrum.csv").read_text(encoding="utf-8").startswith(
        "q,mu,dolbeault,dim_tau\n0,10,0,9\n"
    )
    spectrum = json.loads((out_dir / "spectrum.json").read_text(encoding="utf-8"))
    assert spectrum["m"] == 4
    oracle = json.loads((out_dir / "oracle.json").read_text(encoding="utf-8"))
    assert oracle["all_matched"] is True


def test_report_command_no_levels(tmp_path, capsys):
    out_dir = tmp_path / "empty"
    code = cli.main(["report", "--genus", "2", "--theta", "2", "--out", str(out_dir)])
    manifest = json.loads(capsys.readouterr().out)
    assert code == 0
    assert manifest["files"] == ["spectrum.csv", "spectrum.json"]
    assert (out_dir / "spectrum.csv").read_text(encoding="utf-8") == "q,mu,dolbeault,dim_tau\n"
