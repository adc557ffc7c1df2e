from pathlib import Path

import pytest

from stepfigs import FigureSpec, SchemaError, build_plot_spec, read_table, render
from stepfigs.cli import main

DATA = Path(__file__).parent / "data"
RT_CSVS = [
    str(DATA / "rt_diffusion.csv"),
    str(DATA / "rt_dirac_tunneling.csv"),
    str(DATA / "rt_klein_tunneling.csv"),
    str(DATA / "rt_klein.csv"),
]
SWEEP_CSV = str(DATA / "sweep_v0_3.5.csv")


def test_read_table_metadata():
    table = read_table(SWEEP_CSV)
    assert table.v0 == 3.5
    assert table.columns[:2] == ["e", "zone"]
    assert len(table.column("e")) > 900


def test_fig1_renders(tmp_path):
    out = tmp_path / "rt_grid.png"
    render(FigureSpec(inputs=RT_CSVS, layout="fig1", out_path=str(out)))
    assert out.exists() and out.stat().st_size > 10_000


def test_fig2_renders_with_zone_annotations(tmp_path):
    out = tmp_path / "sweep.png"
    spec = FigureSpec(inputs=[SWEEP_CSV], layout="fig2", out_path=str(out))
    plot = build_plot_spec(spec)
    assert plot.grid == (2, 1)
    for panel in plot.panels:
        assert panel.v_lines == (2.5, 3.5, 4.5)
    assert 1.0 in plot.panels[1].h_lines  # |R| = 1 reference
    render(spec)
    assert out.exists() and out.stat().st_size > 10_000


def test_fig1_reference_line_and_titles(tmp_path):
    plot = build_plot_spec(FigureSpec(inputs=RT_CSVS, layout="fig1", out_path="x.png"))
    assert [p.title for p in plot.panels] == [
        "diffusion",
        "dirac tunneling",
        "klein tunneling",
        "klein",
    ]
    for panel in plot.panels:
        assert panel.h_lines == (1.0,)
        # the dip/excess panels keep the r = 1 line inside the frame
        assert panel.y_lim[0] < 1.0 < panel.y_lim[1] or max(panel.series[0][2]) > 1.0


def test_spec_is_deterministic():
    spec = FigureSpec(inputs=[SWEEP_CSV], layout="fig2", out_path="x.png")
    assert build_plot_spec(spec) == build_plot_spec(spec)


def test_empty_csv_rejected(tmp_path):
    empty = tmp_path / "empty.csv"
    empty.write_text("")
    with pytest.raises(SchemaError, match="empty CSV"):
        build_plot_spec(FigureSpec(inputs=[str(empty)], layout="fig2", out_path="x.png"))


def test_missing_column_named(tmp_path):
    bad = tmp_path / "bad.csv"
    bad.write_text("t,n1,n2\n# v0=3.5\n0,1,0\n1,1,0\n")
    with pytest.raises(SchemaError, match="column 'r'"):
        build_plot_spec(FigureSpec(inputs=[str(bad)] * 4, layout="fig1", out_path="x.png"))


def test_missing_v0_metadata(tmp_path):
    bad = tmp_path / "bad.csv"
    header = "e,zone,r_mod,r_arg,r_arg_unwrapped,t_mod,alpha,d_arg_de"
    bad.write_text(header + "\n2,klein,1,0,0,1,0,0\n3,klein_tunneling,1,1,1,1,1,0\n")
    with pytest.raises(SchemaError, match="v0"):
        build_plot_spec(FigureSpec(inputs=[str(bad)], layout="fig2", out_path="x.png"))


def test_wrong_input_count():
    with pytest.raises(SchemaError, match="four"):
        build_plot_spec(FigureSpec(inputs=RT_CSVS[:2], layout="fig1", out_path="x.png"))
    with pytest.raises(SchemaError, match="one"):
        build_plot_spec(FigureSpec(inputs=RT_CSVS, layout="fig2", out_path="x.png"))


def test_cli_roundtrip(tmp_path, capsys):
    out = tmp_path / "grid.png"
    assert main(["--layout", "fig1", "--out", str(out)] + RT_CSVS) == 0
    assert out.exists()
    assert main(["--layout", "fig2", "--out", str(tmp_path / "s.svg"), SWEEP_CSV]) == 0
    assert (tmp_path / "s.svg").exists()
    assert main(["--layout", "fig2", "--out", str(tmp_path / "x.png"), str(tmp_path / "nope.csv")]) == 1
    err = capsys.readouterr().err
    assert "nope.csv" in err
