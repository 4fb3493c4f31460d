import json

import numpy as np
import pytest

from conceptq import bell, cli, datasets, slit
from conceptq.corpus import synthetic_phrase_corpus


def run(*argv):
    return cli.main([str(a) for a in argv])


def test_fit_demo_report(tmp_path):
    out = tmp_path / "fit.json"
    assert run("fit", "--demo", "fruits-vegetables", "-o", out) == 0
    report = json.loads(out.read_text())
    assert report["anchor"] == "Tomato"
    assert report["anchor_index"] == 18
    assert len(report["rows"]) == 24
    assert set(report["rows"][0]) == {
        "exemplar", "mu_a", "mu_b", "mu_a_or_b", "interference", "lambda", "theta_deg",
        "classification",
    }
    assert len(report["vector_a"]) == len(report["vector_b"]) == 25
    assert report["max_residual"] <= 1e-9
    assert any("renormalized" in w for w in report["warnings"])


def test_fit_report_round_trip(tmp_path):
    out = tmp_path / "fit.json"
    run("fit", "--demo", "fruits-vegetables", "--printed-signs", "-o", out)
    report = json.loads(out.read_text())
    residuals = cli.verify_fit_report(report)
    assert abs(residuals.max - report["max_residual"]) <= 1e-12


def test_fit_reports_byte_identical(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    run("fit", "--demo", "fruits-vegetables", "-o", a)
    run("fit", "--demo", "fruits-vegetables", "-o", b)
    assert a.read_bytes() == b.read_bytes()


def test_fit_csv_and_signs_file(tmp_path):
    data = tmp_path / "data.csv"
    data.write_text(datasets.read_text("fruits_vegetables.csv"))
    signs = tmp_path / "signs.csv"
    printed = datasets.fruits_vegetables_printed()
    signs.write_text("exemplar,sign\n" + "".join(
        f"{e},{'+' if lam >= 0 else '-'}\n" for e, lam in zip(printed["exemplar"], printed["lambda"])
    ))
    out = tmp_path / "fit.json"
    assert run("fit", data, "--signs", signs, "-o", out) == 0
    report = json.loads(out.read_text())
    assert report["sign_source"] == "user-supplied"
    assert report["c_m"] == pytest.approx(0.8, abs=5e-3)


def test_fit_malformed_header(tmp_path, capsys):
    bad = tmp_path / "bad.csv"
    bad.write_text("name,a,b,c\nx,0.5,0.5,0.5\ny,0.5,0.5,0.5\n")
    assert run("fit", bad) == 2
    assert "expected header" in capsys.readouterr().err


def test_fit_not_representable(tmp_path):
    bad = tmp_path / "bad.csv"
    bad.write_text("exemplar,mu_a,mu_b,mu_a_or_b\nx,0.2,0.2,1\ny,0.8,0.8,0\n")
    assert run("fit", bad) == 3


def test_fit_missing_file(tmp_path):
    assert run("fit", tmp_path / "nope.csv") == 1


def test_chsh_demo(tmp_path):
    out = tmp_path / "chsh.json"
    assert run("chsh", "--demo", "animal-acts", "-o", out) == 0
    report = json.loads(out.read_text())
    assert report["statistic"] == pytest.approx(2.8722, abs=1e-4)
    assert report["verdict"] == "violates"
    assert report["counts"]["AB"]["rows"] == ["horse", "bear"]


def test_chsh_product_demo(tmp_path):
    out = tmp_path / "chsh.json"
    assert run("chsh", "--demo", "animal-acts-product", "-o", out) == 0
    report = json.loads(out.read_text())
    assert report["model"] == "product"
    assert report["statistic"] == pytest.approx(-0.7575, abs=1e-4)
    assert report["verdict"] == "satisfies"


def test_chsh_all_zero(tmp_path):
    f = tmp_path / "zero.json"
    f.write_text(json.dumps({k: {"n11": 0, "n12": 0, "n21": 0, "n22": 0} for k in bell.EXPERIMENTS}))
    assert run("chsh", f) == 4


def test_chsh_schema_violation(tmp_path):
    f = tmp_path / "bad.json"
    f.write_text(json.dumps({"AB": {"n11": 1}}))
    assert run("chsh", f) == 2
    f.write_text(json.dumps({k: {"n11": -1, "n12": 0, "n21": 0, "n22": 0} for k in bell.EXPERIMENTS}))
    assert run("chsh", f) == 2


@pytest.fixture
def grid_file(tmp_path):
    g = tmp_path / "grid.json"
    g.write_text(datasets.demo_text("animal-acts-grid"))
    return g


def test_corpus_synthetic_round_trip(tmp_path, grid_file):
    tables = bell.coincidence_from_json(json.loads(datasets.demo_text("animal-acts")))
    corpus = synthetic_phrase_corpus(tables)
    lines = tmp_path / "corpus.txt"
    lines.write_text("\n".join(d.body for d in corpus.documents) + "\n")
    out = tmp_path / "counts.json"
    assert run("corpus", lines, grid_file, "--format", "line", "--chsh", "-o", out) == 0
    report = json.loads(out.read_text())
    assert report["chsh"]["statistic"] == pytest.approx(2.8722, abs=1e-4)
    assert report["coincidence"]["AB"]["n11"] == 670


def test_corpus_both_modes(tmp_path, grid_file):
    d = tmp_path / "docs"
    d.mkdir()
    texts = ["The horse whinnies and snorts.", "A bear growls; the cat meows.",
             "tiger growls", "horse snorts", "cat meows", "bear growls at the tiger"]
    for i, t in enumerate(texts):
        (d / f"{i}.txt").write_text(t)
    out = tmp_path / "counts.json"
    assert run("corpus", d, grid_file, "--mode", "both", "--chsh", "-o", out) == 0
    report = json.loads(out.read_text())
    assert report["marginal"]["A"]["counts"] == [2, 2]
    assert "product_chsh" in report and "chsh" in report


def test_corpus_empty_directory(tmp_path, grid_file):
    d = tmp_path / "empty"
    d.mkdir()
    assert run("corpus", d, grid_file) == 1


def test_corpus_duplicate_grid_words(tmp_path):
    d = tmp_path / "docs"
    d.mkdir()
    (d / "a.txt").write_text("horse growls")
    g = tmp_path / "grid.json"
    g.write_text(json.dumps({"subjects": [["horse", "bear"], ["horse", "cat"]],
                             "verbs": [["growls", "whinnies"], ["snorts", "meows"]]}))
    assert run("corpus", d, g) == 2


def test_corpus_all_zero_table(tmp_path, grid_file):
    d = tmp_path / "docs"
    d.mkdir()
    (d / "a.txt").write_text("the tiger growls")
    assert run("corpus", d, grid_file) == 4


def test_slit_defaults(tmp_path):
    out = tmp_path / "profile.csv"
    assert run("slit", "-o", out) == 0
    lines = out.read_text().splitlines()
    assert lines[0] == "x,rho_a,rho_b,rho_classical,rho_quantum,interference"
    assert len(lines) == 2002
    p = slit.ScreenProfile.from_csv(out)
    assert np.max(np.abs(p.rho_quantum - p.rho_classical - p.interference)) <= 1e-12


@pytest.mark.parametrize("flags", [("--points", "1"), ("--sigma", "0"), ("--wavelength=-5e-7",)])
def test_slit_invalid(flags):
    assert run("slit", *flags) == 2
