"""Bag-of-words vectorization: vocabulary building and sparse weighting.

Weighting modes: binary presence, raw term counts, length-normalized term
frequency, and tf-idf (normalized tf times inverse document frequency).
Out-of-vocabulary tokens never enter a vector's entries but still count
toward its doc_length, so normalized tf uses the true document length.
"""

import math
from collections import Counter
from dataclasses import dataclass
from typing import Dict, Iterable, List

__all__ = [
    "BINARY",
    "RAW_COUNT",
    "NORMALIZED_TF",
    "TFIDF",
    "WEIGHTING_MODES",
    "Vocabulary",
    "SparseVector",
    "build_vocabulary",
    "vectorize",
    "idf",
    "dump_vocabulary",
]

BINARY = "binary"
RAW_COUNT = "raw_count"
NORMALIZED_TF = "normalized_tf"
TFIDF = "tfidf"
WEIGHTING_MODES = (BINARY, RAW_COUNT, NORMALIZED_TF, TFIDF)


@dataclass(frozen=True)
class Vocabulary:
    """Token/id bijection with per-token document frequencies.

    Ids are dense, 0-based, assigned in order of first appearance while
    scanning the training corpus document by document.
    """

    token_to_id: Dict[str, int]
    document_frequency: List[int]
    total_documents: int

    def __post_init__(self):
        if len(self.document_frequency) != len(self.token_to_id):
            raise ValueError("document_frequency length must equal vocabulary size")
        for tok, i in self.token_to_id.items():
            if not 0 <= i < len(self.token_to_id):
                raise ValueError(f"id out of range for token {tok!r}")
        for i, df in enumerate(self.document_frequency):
            if not 1 <= df <= self.total_documents:
                raise ValueError(f"document frequency out of range at id {i}")

    def __len__(self):
        return len(self.token_to_id)

    def __contains__(self, token):
        return token in self.token_to_id

    def id_to_token(self) -> List[str]:
        out = [""] * len(self.token_to_id)
        for tok, i in self.token_to_id.items():
            out[i] = tok
        return out


@dataclass(frozen=True)
class SparseVector:
    """One vectorized document: id -> weight, zeros absent.

    doc_length is the total token count of the source stream, including
    out-of-vocabulary tokens that were dropped from entries.
    """

    entries: Dict[int, float]
    doc_length: int

    def __post_init__(self):
        if any(v <= 0 for v in self.entries.values()):
            raise ValueError("sparse vector entries must be strictly positive")
        if self.doc_length < 0:
            raise ValueError("doc_length must be nonnegative")


def build_vocabulary(corpus: Iterable[list]) -> Vocabulary:
    """Scan token streams, assigning ids by first appearance and counting
    per-token document frequency (documents, not occurrences)."""
    token_to_id: Dict[str, int] = {}
    doc_freq: Dict[str, int] = {}
    n_docs = 0
    for stream in corpus:
        n_docs += 1
        for tok in stream:
            if tok not in token_to_id:
                token_to_id[tok] = len(token_to_id)
        for tok in set(stream):
            doc_freq[tok] = doc_freq.get(tok, 0) + 1
    if n_docs == 0:
        raise ValueError("corpus must be non-empty")
    df = [0] * len(token_to_id)
    for tok, i in token_to_id.items():
        df[i] = doc_freq[tok]
    return Vocabulary(token_to_id, df, n_docs)


def idf(vocab: Vocabulary, token_id: int) -> float:
    """Natural-log inverse document frequency, ln(n_docs / df)."""
    if not 0 <= token_id < len(vocab.document_frequency):
        raise ValueError(f"unknown token id: {token_id}")
    return math.log(vocab.total_documents / vocab.document_frequency[token_id])


def vectorize(stream: list, vocab: Vocabulary, mode: str) -> SparseVector:
    """Convert a token stream to a sparse vector under the given weighting.

    Tokens absent from the vocabulary are skipped; doc_length still counts
    them. tf-idf entries that come out exactly zero (a term present in every
    training document) are dropped to keep entries strictly positive.
    """
    if mode not in WEIGHTING_MODES:
        raise ValueError(f"unknown weighting mode: {mode!r}")
    n_d = len(stream)
    counts = Counter(tok for tok in stream if tok in vocab.token_to_id)
    entries: Dict[int, float] = {}
    for tok, tf in counts.items():
        i = vocab.token_to_id[tok]
        if mode == BINARY:
            entries[i] = 1
        elif mode == RAW_COUNT:
            entries[i] = tf
        elif mode == NORMALIZED_TF:
            entries[i] = tf / n_d
        else:
            weight = (tf / n_d) * idf(vocab, i)
            if weight > 0:
                entries[i] = weight
    return SparseVector(entries, n_d)


def dump_vocabulary(vocab: Vocabulary) -> str:
    """Render "id<TAB>token<TAB>document_frequency" lines, ids ascending."""
    tokens = vocab.id_to_token()
    lines = [
        f"{i}\t{tokens[i]}\t{vocab.document_frequency[i]}" for i in range(len(tokens))
    ]
    return "\n".join(lines)
