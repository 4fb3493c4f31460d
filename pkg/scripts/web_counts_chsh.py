"""CHSH statistic for the animal / act web counts, entangled and product models."""
import json

from conceptq import bell, datasets
from conceptq.corpus import ConceptPairGrid, build_coincidence_counts, synthetic_phrase_corpus


def main():
    tables = bell.coincidence_from_json(json.loads(datasets.demo_text("animal-acts")))
    marginals = bell.marginals_from_json(json.loads(datasets.demo_text("animal-acts-product")))

    rep = bell.chsh_from_counts(tables)
    for key in bell.EXPERIMENTS:
        t = tables[key]
        print(f"E({key:<4}) = {rep.expectations[key]:+.4f}   rows {t.rows} cols {t.cols}")
    print(f"S = {rep.statistic:.4f} ({rep.verdict})")

    prod = bell.chsh_from_marginals(marginals)
    print(f"product model S = {prod.statistic:.4f} ({prod.verdict})")

    # rebuild the tables from a synthetic corpus as a counting check
    grid = ConceptPairGrid.from_json(json.loads(datasets.demo_text("animal-acts-grid")))
    counted = build_coincidence_counts(synthetic_phrase_corpus(tables), grid)
    print(f"synthetic corpus round trip S = {bell.chsh_from_counts(counted).statistic:.4f}")


if __name__ == "__main__":
    main()
