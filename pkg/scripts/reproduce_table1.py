"""Refit the Fruits / Vegetables disjunction data and compare with the published columns."""
import argparse

import numpy as np

from conceptq import datasets
from conceptq.interference import fit_disjunction


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--signs", choices=["greedy", "printed"], default="printed")
    args = ap.parse_args()

    ds = datasets.fruits_vegetables()
    printed = datasets.fruits_vegetables_printed()
    signs = datasets.fruits_vegetables_printed_signs() if args.signs == "printed" else None
    fit = fit_disjunction(ds, signs=signs)

    print(f"{'exemplar':<16}{'I_k':>9}{'lambda':>9}{'printed':>9}{'theta':>10}{'printed':>10}")
    for k, name in enumerate(ds.exemplars):
        mark = "  <- anchor" if k == fit.anchor_index else ""
        print(f"{name:<16}{fit.terms[k]:>9.4f}{fit.lambdas[k]:>9.4f}{printed['lambda'][k]:>9.4f}"
              f"{fit.theta_deg[k]:>10.3f}{printed['theta_deg'][k]:>10.3f}{mark}")
    print(f"\nanchor {fit.anchor}, c_m = {fit.c_m:.4f}, extra |B> component = {abs(fit.vector_b[-1]):.4f}"
          f" (published {datasets.PRINTED_B_EXTRA_COMPONENT})")
    print(f"max reconstruction residual {fit.max_residual:.2e}")
    ranked = fit.ranking()
    print("strongest weakening:", ", ".join(ranked["weakening"][:4]))
    print("strongest strengthening:", ", ".join(ranked["strengthening"][:4]))
    rest = np.arange(len(ds)) != fit.anchor_index
    print(f"max |theta| deviation off the anchor: "
          f"{np.max(np.abs(np.abs(fit.theta_deg) - np.abs(printed['theta_deg']))[rest]):.3f} deg")


if __name__ == "__main__":
    main()
