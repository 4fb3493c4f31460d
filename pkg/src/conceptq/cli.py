"""Command-line interface: ``conceptq {fit,chsh,corpus,slit}``.

Exit codes: 0 success, 1 I/O error, 2 invalid input, 3 data not representable
by the Hilbert-space construction, 4 empty count table.
"""
from __future__ import annotations

import argparse
import hashlib
import json
import sys
from pathlib import Path

import numpy as np

from . import bell, corpus as corpus_mod, datasets, slit
from .core import (
    DEFAULT_TOLERANCE,
    DisjunctionDataset,
    ProbabilityDistribution,
    validate_dataset,
)
from .errors import ConceptqError, EmptyCounts, FitError, ValidationError
from .interference import (
    InterferenceFit,
    build_projectors,
    fit_disjunction,
    reconstruction_residuals,
)

EXIT_OK, EXIT_IO, EXIT_INVALID, EXIT_FIT, EXIT_EMPTY = 0, 1, 2, 3, 4


def sha256(text: str) -> str:
    return hashlib.sha256(text.encode("utf-8")).hexdigest()


def _complex_pairs(v) -> list[list[float]]:
    return [[float(z.real), float(z.imag)] for z in np.asarray(v)]


def _write_json(obj: dict, out) -> None:
    if out is None:
        return
    Path(out).write_text(json.dumps(obj, indent=2, ensure_ascii=False) + "\n", encoding="utf-8")


# -- fit ---------------------------------------------------------------------


def fit_report(fit: InterferenceFit) -> dict:
    ds = fit.dataset
    classes = fit.classification()
    rows = []
    for k, name in enumerate(ds.exemplars):
        rows.append({
            "exemplar": name,
            "mu_a": float(ds.mu_a.weights[k]),
            "mu_b": float(ds.mu_b.weights[k]),
            "mu_a_or_b": float(ds.mu_a_or_b.weights[k]),
            "interference": float(fit.terms.values[k]),
            "lambda": float(fit.lambdas[k]),
            "theta_deg": float(fit.theta_deg[k]),
            "classification": classes[k],
        })
    return {
        "anchor_index": fit.anchor_index,
        "anchor": fit.anchor,
        "c_m": float(fit.c_m),
        "sign_source": fit.signs.source,
        "rows": rows,
        "vector_a": _complex_pairs(fit.vector_a),
        "vector_b": _complex_pairs(fit.vector_b),
        "max_residual": fit.max_residual,
    }


def verify_fit_report(report: dict):
    """Recompute reconstruction residuals from a serialized fit report."""
    rows = report["rows"]
    labels = tuple(r["exemplar"] for r in rows)
    ds = DisjunctionDataset(
        *(ProbabilityDistribution([r[key] for r in rows], labels)
          for key in ("mu_a", "mu_b", "mu_a_or_b"))
    )
    vec_a = np.array([complex(re, im) for re, im in report["vector_a"]])
    vec_b = np.array([complex(re, im) for re, im in report["vector_b"]])
    projectors = build_projectors(len(rows), report["anchor_index"])
    return reconstruction_residuals(vec_a, vec_b, projectors, ds)


def _column_warnings(raw: DisjunctionDataset) -> list[str]:
    warnings = []
    for key in ("mu_a", "mu_b", "mu_a_or_b"):
        total = getattr(raw, key).total()
        if total != 1.0:
            warnings.append(f"{key} summed to {total:.6g}; renormalized")
    return warnings


def run_fit(args) -> int:
    if args.demo:
        text = datasets.demo_text(args.demo)
        source = f"demo:{args.demo}"
    elif args.input:
        text = Path(args.input).read_text(encoding="utf-8")
        source = args.input
    else:
        raise ValidationError("give an input CSV or --demo")
    raw = datasets.read_dataset_csv(text)
    ds = validate_dataset(raw, args.tolerance)
    inputs = {"source": source, "sha256": sha256(text)}
    signs = None
    if args.printed_signs:
        if args.demo != "fruits-vegetables":
            raise ValidationError("--printed-signs only applies to --demo fruits-vegetables")
        signs = datasets.fruits_vegetables_printed_signs()
        inputs["signs"] = "printed"
    elif args.signs:
        signs_text = Path(args.signs).read_text(encoding="utf-8")
        signs = datasets.parse_signs_csv(signs_text, ds.exemplars)
        inputs["signs"] = args.signs
        inputs["signs_sha256"] = sha256(signs_text)
    fit = fit_disjunction(ds, signs)
    report = {"subcommand": "fit", "input": inputs, "options": {"tolerance": args.tolerance}}
    report.update(fit_report(fit))
    report["warnings"] = _column_warnings(raw)
    _write_json(report, args.out)
    ranked = fit.ranking()
    print(f"{len(ds)} exemplars, anchor {fit.anchor} (index {fit.anchor_index}), "
          f"c_m = {fit.c_m:.4f}, max residual = {fit.max_residual:.2e}")
    print("weakening:     " + ", ".join(ranked["weakening"]))
    print("strengthening: " + ", ".join(ranked["strengthening"]))
    return EXIT_OK


# -- chsh --------------------------------------------------------------------


def _chsh_from_data(data: dict) -> tuple[str, dict, bell.ChshReport]:
    if all(k in data for k in bell.EXPERIMENTS):
        tables = bell.coincidence_from_json(data)
        return "coincidence", bell.coincidence_to_json(tables), bell.chsh_from_counts(tables)
    if all(k in data for k in bell.SINGLE_EXPERIMENTS):
        marg = bell.marginals_from_json(data)
        return "product", bell.marginals_to_json(marg), bell.chsh_from_marginals(marg)
    raise ValidationError(
        "counts JSON needs keys AB, ApB, ABp, ApBp (coincidence) or A, Ap, B, Bp (marginals)"
    )


def _print_chsh(label: str, rep: bell.ChshReport) -> None:
    es = ", ".join(f"E({k}) = {v:+.4f}" for k, v in rep.expectations.items())
    print(f"{label}: {es}")
    print(f"{label}: S = {rep.statistic:+.4f} ({rep.verdict} |S| <= 2)")


def run_chsh(args) -> int:
    if args.demo:
        text = datasets.demo_text(args.demo)
        source = f"demo:{args.demo}"
    elif args.counts:
        text = Path(args.counts).read_text(encoding="utf-8")
        source = args.counts
    else:
        raise ValidationError("give a counts JSON file or --demo")
    model, counts, rep = _chsh_from_data(datasets.load_json_text(text))
    report = {
        "subcommand": "chsh",
        "input": {"source": source, "sha256": sha256(text)},
        "model": model,
        "counts": counts,
        **rep.to_dict(),
        "warnings": [],
    }
    _write_json(report, args.out)
    _print_chsh(model, rep)
    return EXIT_OK


# -- corpus ------------------------------------------------------------------


def _corpus_digest(c: corpus_mod.Corpus) -> str:
    h = hashlib.sha256()
    for d in c.documents:
        h.update(d.id.encode("utf-8") + b"\0" + d.body.encode("utf-8") + b"\0")
    return h.hexdigest()


def run_corpus(args) -> int:
    fmt = {"file": "one-doc-per-file", "line": "one-doc-per-line"}[args.format]
    grid_text = Path(args.grid).read_text(encoding="utf-8")
    grid = corpus_mod.ConceptPairGrid.from_json(datasets.load_json_text(grid_text))
    c = corpus_mod.load_corpus(args.corpus, fmt)
    report = {
        "subcommand": "corpus",
        "input": {
            "corpus": args.corpus,
            "format": fmt,
            "documents": len(c),
            "corpus_sha256": _corpus_digest(c),
            "grid": args.grid,
            "grid_sha256": sha256(grid_text),
        },
        "options": {"mode": args.mode, "chsh": args.chsh},
    }
    if args.mode in ("coincidence", "both"):
        tables = corpus_mod.build_coincidence_counts(c, grid)
        report["coincidence"] = bell.coincidence_to_json(tables)
        if args.chsh:
            rep = bell.chsh_from_counts(tables)
            report["chsh"] = rep.to_dict()
            _print_chsh("coincidence", rep)
    if args.mode in ("marginal", "both"):
        marg = corpus_mod.build_marginal_counts(c, grid)
        report["marginal"] = bell.marginals_to_json(marg)
        if args.chsh:
            rep = bell.chsh_from_marginals(marg)
            report["product_chsh"] = rep.to_dict()
            _print_chsh("product", rep)
    report["warnings"] = []
    _write_json(report, args.out)
    print(f"counted {len(c)} documents from {args.corpus}")
    return EXIT_OK


# -- slit --------------------------------------------------------------------


def run_slit(args) -> int:
    cfg = slit.SlitConfig(
        wavelength=args.wavelength,
        separation=args.separation,
        distance=args.distance,
        sigma=args.sigma,
        x_min=args.xmin,
        x_max=args.xmax,
        points=args.points,
    )
    profile = slit.screen_profile(cfg)
    if args.out is not None:
        profile.to_csv(args.out)
    gap = np.abs(profile.rho_quantum - profile.rho_classical - profile.interference).max()
    measured = slit.measured_fringe_spacing(profile)
    measured_txt = "n/a (single maximum)" if measured is None else f"{measured:.6g} m"
    print(f"{cfg.points} points on [{cfg.x_min:.6g}, {cfg.x_max:.6g}] m, "
          f"lambda L / s = {cfg.fringe_spacing:.6g} m, measured {measured_txt}, "
          f"max |rho_q - rho_c - I| = {gap:.2e}")
    return EXIT_OK


# -- entry point -------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="conceptq", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("fit", help="fit a Hilbert-space model to disjunction data")
    p.add_argument("input", nargs="?", help="CSV with header exemplar,mu_a,mu_b,mu_a_or_b")
    p.add_argument("--demo", choices=["fruits-vegetables"])
    p.add_argument("--signs", help="CSV with header exemplar,sign")
    p.add_argument("--printed-signs", action="store_true",
                   help="use the published lambda signs (fruits-vegetables demo only)")
    p.add_argument("--tolerance", type=float, default=DEFAULT_TOLERANCE)
    p.add_argument("-o", "--out", help="write the fit report JSON here")
    p.set_defaults(func=run_fit)

    p = sub.add_parser("chsh", help="CHSH statistic from coincidence or marginal counts")
    p.add_argument("counts", nargs="?", help="counts JSON")
    p.add_argument("--demo", choices=["animal-acts", "animal-acts-product"])
    p.add_argument("-o", "--out", help="write the CHSH report JSON here")
    p.set_defaults(func=run_chsh)

    p = sub.add_parser("corpus", help="phrase document frequencies from a text corpus")
    p.add_argument("corpus", help="directory of .txt files, or a text file with --format line")
    p.add_argument("grid", help="grid JSON with keys subjects and verbs")
    p.add_argument("--format", choices=["file", "line"], default="file")
    p.add_argument("--mode", choices=["coincidence", "marginal", "both"], default="coincidence")
    p.add_argument("--chsh", action="store_true", help="also compute the CHSH statistic")
    p.add_argument("-o", "--out", help="write the count report JSON here")
    p.set_defaults(func=run_corpus)

    d = slit.SlitConfig()
    p = sub.add_parser("slit", help="double-slit screen densities as CSV")
    p.add_argument("--wavelength", type=float, default=d.wavelength)
    p.add_argument("--separation", type=float, default=d.separation)
    p.add_argument("--distance", type=float, default=d.distance)
    p.add_argument("--sigma", type=float, default=d.sigma)
    p.add_argument("--xmin", type=float, default=None)
    p.add_argument("--xmax", type=float, default=None)
    p.add_argument("--points", type=int, default=d.points)
    p.add_argument("-o", "--out", help="write the profile CSV here")
    p.set_defaults(func=run_slit)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ConceptqError as exc:
        code = _exit_code(exc)
        message = str(exc)
    except OSError as exc:
        code = EXIT_IO
        message = str(exc)
    print(f"conceptq {args.command}: error: {message}", file=sys.stderr)
    return code


def _exit_code(exc: ConceptqError) -> int:
    if isinstance(exc, OSError):
        return EXIT_IO
    if isinstance(exc, FitError):
        return EXIT_FIT
    if isinstance(exc, EmptyCounts):
        return EXIT_EMPTY
    return EXIT_INVALID

if __name__ == "__main__":
    sys.exit(main())
