"""Document-frequency counts of short phrases in a local text corpus.

A document matches a phrase when its normalized token stream contains the
phrase tokens consecutively. Normalization is case folding followed by
treating every non-alphanumeric character as a separator. Each document
counts at most once per phrase, the way a search engine reports pages.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Literal, Mapping, Sequence

from .bell import EXPERIMENTS, PAIRS, CoincidenceCounts, MarginalCounts, OutcomeCounts
from .errors import AllZeroTable, CorpusIOError, EmptyCorpus, EmptyMarginal, InvalidGrid

CorpusFormat = Literal["one-doc-per-file", "one-doc-per-line"]


def normalize_tokens(text: str) -> tuple[str, ...]:
    cleaned = "".join(ch if ch.isalnum() else " " for ch in text.casefold())
    return tuple(cleaned.split())


@dataclass(frozen=True)
class Document:
    id: str
    body: str
    tokens: tuple[str, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "tokens", normalize_tokens(self.body))


@dataclass(frozen=True)
class Corpus:
    documents: tuple[Document, ...]
    source: str = "<memory>"
    format: str = "in-memory"

    def __post_init__(self):
        docs = tuple(self.documents)
        ids = [d.id for d in docs]
        if len(set(ids)) != len(ids):
            raise ValueError("document ids must be unique")
        object.__setattr__(self, "documents", docs)

    def __len__(self):
        return len(self.documents)

    @classmethod
    def from_texts(cls, texts: Iterable[str], source: str = "<memory>") -> "Corpus":
        return cls(tuple(Document(str(i), t) for i, t in enumerate(texts, start=1)), source)

    def with_document(self, doc_id: str, body: str) -> "Corpus":
        return Corpus(self.documents + (Document(doc_id, body),), self.source, self.format)


@dataclass(frozen=True)
class PhraseQuery:
    tokens: tuple[str, ...]

    def __post_init__(self):
        tokens = tuple(self.tokens)
        if not tokens:
            raise ValueError("a phrase query needs at least one token")
        for tok in tokens:
            if normalize_tokens(tok) != (tok,):
                raise ValueError(f"token {tok!r} is not a normalized word")
        object.__setattr__(self, "tokens", tokens)

    @classmethod
    def parse(cls, text: str) -> "PhraseQuery":
        return cls(normalize_tokens(text))

    def __str__(self):
        return " ".join(self.tokens)


def load_corpus(path, format: CorpusFormat = "one-doc-per-file") -> Corpus:
    """Read a directory of ``.txt`` files, or a file with one document per line.

    Files are ordered by name. In line mode ids are 1-based line numbers and
    blank lines are skipped.
    """
    p = Path(path)
    try:
        if format == "one-doc-per-file":
            if not p.is_dir():
                raise CorpusIOError(f"{p}: not a directory")
            files = sorted(f for f in p.iterdir() if f.is_file() and f.suffix == ".txt")
            docs = tuple(
                Document(f.name, f.read_bytes().decode("utf-8", errors="replace"))
                for f in files
            )
        elif format == "one-doc-per-line":
            if not p.is_file():
                raise CorpusIOError(f"{p}: not a file")
            text = p.read_bytes().decode("utf-8", errors="replace")
            docs = tuple(
                Document(str(i), line)
                for i, line in enumerate(text.splitlines(), start=1)
                if line.strip()
            )
        else:
            raise ValueError(f"unknown corpus format {format!r}")
    except OSError as exc:
        if isinstance(exc, CorpusIOError):
            raise
        raise CorpusIOError(f"{p}: {exc.strerror or exc}") from exc
    if not docs:
        raise EmptyCorpus(f"{p}: no documents")
    return Corpus(docs, str(p), format)


def _contains(tokens: Sequence[str], phrase: tuple[str, ...]) -> bool:
    k = len(phrase)
    first = phrase[0]
    for i in range(len(tokens) - k + 1):
        if tokens[i] == first and tuple(tokens[i : i + k]) == phrase:
            return True
    return False


def count_documents_with_phrase(corpus: Corpus, query: PhraseQuery | str) -> int:
    if isinstance(query, str):
        query = PhraseQuery.parse(query)
    return sum(1 for d in corpus.documents if _contains(d.tokens, query.tokens))


def document_frequencies(
    corpus: Corpus, queries: Iterable[PhraseQuery | str]
) -> dict[tuple[str, ...], int]:
    """Document frequency of many phrases in one pass over the corpus."""
    phrases = {
        (PhraseQuery.parse(q) if isinstance(q, str) else q).tokens for q in queries
    }
    by_len: dict[int, set[tuple[str, ...]]] = {}
    for ph in phrases:
        by_len.setdefault(len(ph), set()).add(ph)
    counts = dict.fromkeys(phrases, 0)
    for doc in corpus.documents:
        toks = doc.tokens
        for k, wanted in by_len.items():
            grams = {toks[i : i + k] for i in range(len(toks) - k + 1)}
            for ph in wanted & grams:
                counts[ph] += 1
    return counts


@dataclass(frozen=True)
class ConceptPairGrid:
    """Subject pairs (A, A') and verb pairs (B, B') of a subject-verb design."""

    subjects: tuple[tuple[str, str], tuple[str, str]]
    verbs: tuple[tuple[str, str], tuple[str, str]]

    def __post_init__(self):
        subjects = self._pairs(self.subjects, "subjects")
        verbs = self._pairs(self.verbs, "verbs")
        words = [w for pair in subjects + verbs for w in pair]
        dupes = sorted({w for w in words if words.count(w) > 1})
        if dupes:
            raise InvalidGrid(f"grid words must be distinct, repeated: {dupes}")
        object.__setattr__(self, "subjects", subjects)
        object.__setattr__(self, "verbs", verbs)

    @staticmethod
    def _pairs(value, name):
        try:
            pairs = tuple(tuple(p) for p in value)
        except TypeError:
            raise InvalidGrid(f"{name} must be two pairs of words") from None
        if len(pairs) != 2 or any(len(p) != 2 for p in pairs):
            raise InvalidGrid(f"{name} must be two pairs of words")
        out = []
        for pair in pairs:
            norm = []
            for w in pair:
                toks = normalize_tokens(w) if isinstance(w, str) else ()
                if len(toks) != 1:
                    raise InvalidGrid(f"{name}: {w!r} is not a single word")
                norm.append(toks[0])
            out.append(tuple(norm))
        return tuple(out)

    @classmethod
    def from_json(cls, data: Mapping) -> "ConceptPairGrid":
        if not isinstance(data, Mapping) or "subjects" not in data or "verbs" not in data:
            raise InvalidGrid("grid JSON needs keys 'subjects' and 'verbs'")
        return cls(data["subjects"], data["verbs"])

    @classmethod
    def load(cls, path) -> "ConceptPairGrid":
        try:
            data = json.loads(Path(path).read_text(encoding="utf-8"))
        except json.JSONDecodeError as exc:
            raise InvalidGrid(f"{path}: invalid JSON: {exc}") from None
        return cls.from_json(data)

    def single(self, key: str) -> tuple[str, str]:
        return {"A": self.subjects[0], "Ap": self.subjects[1],
                "B": self.verbs[0], "Bp": self.verbs[1]}[key]

    def phrases(self, experiment: str) -> dict[str, tuple[str, str]]:
        rows = self.single(PAIRS[experiment][0])
        cols = self.single(PAIRS[experiment][1])
        return {f"n{i + 1}{j + 1}": (rows[i], cols[j]) for i in range(2) for j in range(2)}


def build_coincidence_counts(
    corpus: Corpus, grid: ConceptPairGrid, strict: bool = True
) -> dict[str, CoincidenceCounts]:
    """Count 'subject verb' phrases for each of the four coincidence experiments.

    With ``strict`` an experiment whose four counts are all zero raises
    AllZeroTable; the error still carries every table.
    """
    wanted = [ph for e in EXPERIMENTS for ph in grid.phrases(e).values()]
    freq = document_frequencies(corpus, [PhraseQuery(ph) for ph in wanted])
    tables = {}
    for e in EXPERIMENTS:
        counts = {cell: freq[ph] for cell, ph in grid.phrases(e).items()}
        tables[e] = CoincidenceCounts(
            **counts,
            experiment=e,
            rows=grid.single(PAIRS[e][0]),
            cols=grid.single(PAIRS[e][1]),
        )
    empty = [e for e, t in tables.items() if t.total == 0]
    if strict and empty:
        raise AllZeroTable(f"no matching documents for experiments {empty}", empty, tables)
    return tables


def build_marginal_counts(corpus: Corpus, grid: ConceptPairGrid) -> MarginalCounts:
    keys = ("A", "Ap", "B", "Bp")
    words = [w for k in keys for w in grid.single(k)]
    freq = document_frequencies(corpus, [PhraseQuery((w,)) for w in words])
    parts = {}
    for k in keys:
        w1, w2 = grid.single(k)
        oc = OutcomeCounts(freq[(w1,)], freq[(w2,)], (w1, w2))
        if oc.total == 0:
            raise EmptyMarginal(f"no documents contain {w1!r} or {w2!r}")
        parts[k] = oc
    return MarginalCounts(**parts)


def synthetic_phrase_corpus(
    tables: Mapping[str, CoincidenceCounts], template: str = "the {} {}"
) -> Corpus:
    """One document per counted phrase occurrence, e.g. 670 copies of 'the horse growls'."""
    texts = []
    for e in sorted(tables):
        t = tables[e]
        cells = {"n11": (0, 0), "n12": (0, 1), "n21": (1, 0), "n22": (1, 1)}
        for cell, (i, j) in cells.items():
            texts.extend([template.format(t.rows[i], t.cols[j])] * getattr(t, cell))
    return Corpus.from_texts(texts, source="<synthetic>")


def synthetic_word_corpus(marginals: MarginalCounts) -> Corpus:
    texts = []
    for k in ("A", "Ap", "B", "Bp"):
        oc = marginals[k]
        texts.extend([oc.labels[0]] * oc.first)
        texts.extend([oc.labels[1]] * oc.second)
    return Corpus.from_texts(texts, source="<synthetic>")
