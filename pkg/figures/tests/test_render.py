from pathlib import Path

import numpy as np
import pytest

from sovdef_figures.render import FIGURE_IDS, FigureSpec, read_columns, render

EXAMPLES = Path(__file__).resolve().parents[1] / "examples"

CASES = {
    "densities": [EXAMPLES / "density_slice.csv"],
    "densities-grid": [
        EXAMPLES / "density_slice_y0_blo.csv",
        EXAMPLES / "density_slice_y0_bhi.csv",
        EXAMPLES / "density_slice_y1_blo.csv",
        EXAMPLES / "density_slice_y1_bhi.csv",
    ],
    "path": [EXAMPLES / "path.csv"],
    "dep": [EXAMPLES / "dep.csv"],
    "pi": [EXAMPLES / "pi.csv"],
}


@pytest.mark.parametrize("figure_id", FIGURE_IDS)
def test_every_figure_renders_from_shipped_examples(figure_id, tmp_path):
    out = tmp_path / f"{figure_id}.png"
    render(FigureSpec(figure_id=figure_id, inputs=CASES[figure_id], output=out))
    assert out.exists() and out.stat().st_size > 5000


def test_rendering_is_byte_deterministic(tmp_path):
    a, b = tmp_path / "a.png", tmp_path / "b.png"
    for out in (a, b):
        render(FigureSpec(figure_id="dep", inputs=CASES["dep"], output=out))
    assert a.read_bytes() == b.read_bytes()


def test_unit_field_density_traces_coincide(tmp_path):
    # without robustness the distorted pmf equals the approximating one, so
    # the two traces lie on top of each other
    path = EXAMPLES / "density_slice_unit.csv"
    data = read_columns(path, ("pmf_approx", "pmf_distorted", "m"))
    assert np.allclose(data["m"], 1.0, atol=1e-12)
    assert np.allclose(data["pmf_approx"], data["pmf_distorted"], atol=1e-12)
    fig = render(FigureSpec(figure_id="densities", inputs=[path], output=tmp_path / "u.png"))
    lines = {ln.get_label(): ln for ln in fig.axes[0].get_lines()}
    assert np.allclose(
        lines["approximating"].get_ydata(), lines["distorted"].get_ydata(), atol=1e-12
    )


def test_flat_dep_curve_without_robustness(tmp_path):
    data = read_columns(EXAMPLES / "dep_unit.csv", ("T", "DEP"))
    assert np.all(data["DEP"] == 0.5)
    fig = render(FigureSpec(figure_id="dep", inputs=[EXAMPLES / "dep_unit.csv"],
                            output=tmp_path / "flat.png"))
    dep_line = [ln for ln in fig.axes[0].get_lines() if ln.get_label() == "DEP"][0]
    assert np.all(dep_line.get_ydata() == 0.5)


def test_distorted_density_shifts_mass_to_shaded_region(tmp_path):
    # the worst case puts extra weight where default is likely
    data = read_columns(
        EXAMPLES / "density_slice.csv",
        ("pmf_approx", "pmf_distorted", "p_default"),
    )
    shaded = data["p_default"] >= 0.5
    assert shaded.any(), "example slice should carry a default region"
    assert data["pmf_distorted"][shaded].sum() > data["pmf_approx"][shaded].sum()


def test_missing_column_named(tmp_path):
    bad = tmp_path / "bad.csv"
    bad.write_text("y_next,pmf_approx\n1.0,0.5\n")
    with pytest.raises(ValueError, match="pmf_distorted"):
        render(FigureSpec(figure_id="densities", inputs=[bad], output=tmp_path / "x.png"))


def test_unknown_figure_and_missing_input_rejected(tmp_path):
    with pytest.raises(ValueError, match="unknown figure"):
        FigureSpec(figure_id="nope", inputs=[], output=tmp_path / "x.png")
    with pytest.raises(FileNotFoundError):
        FigureSpec(figure_id="dep", inputs=[tmp_path / "missing.csv"], output=tmp_path / "x.png")


def test_atom_mode_renders(tmp_path):
    out = tmp_path / "atoms.png"
    render(FigureSpec(figure_id="densities", inputs=CASES["densities"], output=out, atoms=True))
    assert out.exists()


def test_cli_entrypoint(tmp_path):
    from sovdef_figures.cli import main

    out = tmp_path / "pi.png"
    rc = main(["pi", "--inputs", str(EXAMPLES / "pi.csv"), "--out", str(out)])
    assert rc == 0 and out.exists()
