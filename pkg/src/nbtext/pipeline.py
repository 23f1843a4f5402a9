"""Text preprocessing: tokenization, stop words, stemming, n-grams.

Stages compose in a fixed order: tokenize -> stop-word removal -> Porter
stemming -> n-gram expansion. Every function is pure; configs and stop
lists are immutable once built.
"""

import unicodedata
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Optional, Union

from .porter import porter_stem

__all__ = [
    "PipelineConfig",
    "StopList",
    "TokenStream",
    "tokenize",
    "build_stop_list",
    "load_stop_list",
    "remove_stop_words",
    "ngrams",
    "run_pipeline",
]

# Ordered list of non-empty tokens.
TokenStream = list

STOP_WORD_MODES = ("none", "dictionary", "frequency")


@dataclass(frozen=True)
class PipelineConfig:
    lowercase: bool = True
    strip_punctuation: bool = True
    stop_word_mode: str = "none"
    frequency_top_n: Optional[int] = None
    stemming: bool = False
    ngram_size: int = 1

    def __post_init__(self):
        if self.stop_word_mode not in STOP_WORD_MODES:
            raise ValueError(f"unknown stop_word_mode: {self.stop_word_mode!r}")
        if self.stop_word_mode == "frequency":
            if self.frequency_top_n is None or self.frequency_top_n < 1:
                raise ValueError("frequency stop-word mode needs frequency_top_n >= 1")
        if self.ngram_size < 1:
            raise ValueError("ngram_size must be >= 1")


@dataclass(frozen=True)
class StopList:
    words: frozenset = field(default_factory=frozenset)
    origin: str = "dictionary"

    def __post_init__(self):
        if any(not w for w in self.words):
            raise ValueError("stop list must not contain empty words")

    def __contains__(self, token):
        return token in self.words


def _strip_boundary_punctuation(token: str) -> str:
    start, end = 0, len(token)
    while start < end and unicodedata.category(token[start]).startswith("P"):
        start += 1
    while end > start and unicodedata.category(token[end - 1]).startswith("P"):
        end -= 1
    return token[start:end]


def tokenize(text: str, config: PipelineConfig) -> TokenStream:
    """Split ``text`` on whitespace, optionally trimming boundary punctuation
    and lowercasing. Tokens emptied by punctuation stripping are dropped."""
    tokens = []
    for raw in text.split():
        tok = raw
        if config.strip_punctuation:
            tok = _strip_boundary_punctuation(tok)
            if not tok:
                continue
        if config.lowercase:
            tok = tok.lower()
        tokens.append(tok)
    return tokens


def build_stop_list(corpus: Iterable[TokenStream], n: int) -> StopList:
    """Return the ``n`` most frequent tokens across ``corpus`` as a stop list.

    Frequency counts occurrences, not documents. Ties at the cutoff are
    broken lexicographically so the result is deterministic.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    counts = Counter()
    seen_any = False
    for stream in corpus:
        seen_any = True
        counts.update(stream)
    if not seen_any:
        raise ValueError("corpus must be non-empty")
    ranked = sorted(counts.items(), key=lambda item: (-item[1], item[0]))
    return StopList(frozenset(tok for tok, _ in ranked[:n]), origin=f"frequency({n})")


def load_stop_list(path: Union[str, Path]) -> StopList:
    """Load a dictionary stop list: one word per line, ``#`` comments ignored,
    trailing whitespace trimmed."""
    words = set()
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            word = line.rstrip()
            if not word or word.startswith("#"):
                continue
            words.add(word)
    return StopList(frozenset(words), origin="dictionary")


def remove_stop_words(stream: TokenStream, stops: StopList) -> TokenStream:
    return [tok for tok in stream if tok not in stops.words]


def ngrams(stream: TokenStream, n: int) -> TokenStream:
    """Space-joined n-grams of ``stream``; output length max(0, len - n + 1)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if n == 1:
        return list(stream)
    return [" ".join(stream[i : i + n]) for i in range(len(stream) - n + 1)]


def run_pipeline(
    text: str, config: PipelineConfig, stops: Optional[StopList] = None
) -> TokenStream:
    """Apply tokenize, stop-word removal, stemming and n-gram expansion.

    ``stops`` is required when the config enables stop-word removal. Stems
    that come back empty (bare "s") are dropped to keep streams well-formed.
    """
    stream = tokenize(text, config)
    if config.stop_word_mode != "none":
        if stops is None:
            raise ValueError(
                f"stop_word_mode={config.stop_word_mode!r} requires a stop list"
            )
        stream = remove_stop_words(stream, stops)
    if config.stemming:
        stream = [stem for tok in stream if (stem := porter_stem(tok))]
    if config.ngram_size > 1:
        stream = ngrams(stream, config.ngram_size)
    return stream
