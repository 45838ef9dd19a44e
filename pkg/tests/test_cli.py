import json

import pytest

from pbmacdonald.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_poly_text(capsys):
    code, out, _ = run(capsys, "poly", "E", "--shape", "1,1,0,1", "--basement", "2,4,1,3")
    assert code == 0
    assert "t*(1 - t)/(1 - q*t^2)" in out


def test_poly_both_methods(capsys):
    code, out, _ = run(capsys, "poly", "E", "--shape", "1,1,0,1", "--basement", "4,2,1,3", "--method", "both")
    assert code == 0 and out.strip().endswith("EQUAL")


def test_poly_json_and_latex(capsys):
    code, out, _ = run(capsys, "poly", "P", "--shape", "1,0", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["kind"] == "P"
    code, out, _ = run(capsys, "poly", "P", "--shape", "1,0")
    assert out.strip() == "x1 + x2"
    code, out, _ = run(capsys, "poly", "key", "--shape", "1,0", "--format", "latex")
    assert code == 0 and "x_{1}" in out


@pytest.mark.parametrize("kind", ["atom", "asep"])
def test_poly_other_kinds(capsys, kind):
    code, out, _ = run(capsys, "poly", kind, "--shape", "1,0,2")
    assert code == 0 and out.strip()


def test_naf_listing(capsys, tmp_path):
    fig = tmp_path / "naf.png"
    code, out, _ = run(
        capsys, "naf", "--shape", "2,2,0,1", "--basement", "3,1,2,4", "--content", "1,2,0,2", "--figure", str(fig)
    )
    lines = out.splitlines()
    assert code == 0 and lines[0] == "# 3 fillings"
    assert lines[1].split("\t") == ["index", "rows", "content", "maj", "inv", "coinv", "wtqt"]
    assert len(lines) == 5
    assert fig.exists() and fig.stat().st_size > 0


def test_naf_json(capsys):
    code, out, _ = run(capsys, "naf", "--shape", "1,1,0,1", "--basement", "2,4,1,3", "--format", "json")
    assert json.loads(out)["count"] == 4


def test_verify_single(capsys, tmp_path):
    path = tmp_path / "rep.json"
    code, out, _ = run(capsys, "verify", "balance", "--shape", "2,2,0,1", "--basement", "3,1,2,4", "--output", str(path))
    assert code == 0 and "PASS" in out
    assert json.loads(path.read_text())["claim"] == "balance"


def test_verify_eigen_prints_eigenvalues(capsys):
    code, out, _ = run(capsys, "verify", "eigen", "--shape", "1,0,1,1")
    assert code == 0
    assert "eigenvalues\tt^2/q, t^3, t/q, 1/q" in out


def test_verify_sweep_with_figure(capsys, tmp_path):
    fig = tmp_path / "sweep.png"
    code, out, _ = run(capsys, "verify", "all", "--sweep", "n_max=2", "part_max=1", "--row-lemmas", "--figure", str(fig))
    assert code == 0
    assert out.count("PASS") == 11
    assert fig.exists()


@pytest.mark.parametrize(
    "argv",
    [
        ["poly", "E", "--shape", "1,x"],
        ["poly", "E", "--shape", "1,0", "--basement", "1,2,3"],
        ["poly", "P", "--shape", "0,1"],
        ["poly", "asep", "--shape", "1,0", "--basement", "1,2"],
        ["naf", "--shape", "1,0", "--content", "1"],
        ["verify", "ale19", "--shape", "1,1,0", "--basement", "1,3,2", "--i", "1"],
        ["verify", "all", "--shape", "1,1"],
        ["verify", "balance"],
        ["verify", "balance", "--sweep", "depth=3"],
        ["verify", "symmetry", "--shape", "1,0", "--i", "1"],
    ],
)
def test_usage_errors_exit_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and err.startswith("error:")


def test_argparse_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["poly", "nonsense", "--shape", "1"])
    assert exc.value.code == 2


def test_internal_errors_exit_3(capsys, monkeypatch):
    from pbmacdonald import cli
    from pbmacdonald.errors import InexactDivision

    def boom(*_):
        raise InexactDivision("forced")

    monkeypatch.setattr(cli, "compute_poly", boom)
    code, _, err = run(capsys, "poly", "E", "--shape", "1,0")
    assert code == 3 and "internal" in err


def test_method_mismatch_exit_3(capsys, monkeypatch):
    from pbmacdonald import cli
    from pbmacdonald.exactalg import XPolynomial

    real = cli.compute_poly
    monkeypatch.setattr(
        cli, "compute_poly", lambda k, a, s, m: real(k, a, s, m) if m == "tableau" else XPolynomial(len(a))
    )
    code, out, _ = run(capsys, "poly", "E", "--shape", "1,0", "--method", "both")
    assert code == 3 and "MISMATCH" in out
