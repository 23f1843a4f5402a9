"""Corpus loading, deterministic splits, and classifier scoring.

The split is reproducible across runs and platforms: documents are ordered
by a keyed 64-bit blake2b hash of their index (key derived from the seed)
and the head of that ordering becomes the test partition.
"""

import hashlib
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Set, Tuple, Union

from .models import NaiveBayesModel, classify
from .pipeline import PipelineConfig, StopList, run_pipeline
from .vectorize import Vocabulary, vectorize

__all__ = [
    "CorpusFormatError",
    "LabeledCorpus",
    "LabelMetrics",
    "EvaluationReport",
    "load_corpus",
    "load_categorical_corpus",
    "load_numeric_corpus",
    "split",
    "split_indices",
    "tally",
    "evaluate",
    "format_report",
]


class CorpusFormatError(ValueError):
    """A corpus line failed to parse; carries the 1-based line number."""

    def __init__(self, path, line_number: int, message: str):
        super().__init__(f"{path}:{line_number}: {message}")
        self.path = path
        self.line_number = line_number


@dataclass(frozen=True)
class LabeledCorpus:
    documents: Tuple[Tuple[str, str], ...]

    def __post_init__(self):
        if not self.documents:
            raise ValueError("corpus must contain at least one document")

    @property
    def label_set(self) -> Set[str]:
        return {label for label, _ in self.documents}

    def __len__(self):
        return len(self.documents)


def load_corpus(path: Union[str, Path]) -> LabeledCorpus:
    """Parse a "label<TAB>text" file, one document per non-empty line."""
    docs = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.rstrip("\n").rstrip("\r")
            if not line:
                continue
            label, sep, text = line.partition("\t")
            if not sep:
                raise CorpusFormatError(path, lineno, "expected 'label<TAB>text'")
            docs.append((label, text))
    if not docs:
        raise CorpusFormatError(path, 0, "empty corpus")
    return LabeledCorpus(tuple(docs))


def _load_csv_rows(path) -> List[Tuple[int, List[str]]]:
    rows = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            rows.append((lineno, [cell.strip() for cell in line.split(",")]))
    if not rows:
        raise CorpusFormatError(path, 0, "empty corpus")
    return rows


def load_categorical_corpus(
    path: Union[str, Path],
) -> Tuple[List[List[str]], List[str]]:
    """Parse "label,v1,v2,..." lines into feature tuples and labels."""
    samples, labels = [], []
    arity = None
    for lineno, cells in _load_csv_rows(path):
        if len(cells) < 2:
            raise CorpusFormatError(path, lineno, "expected 'label,v1,...'")
        label, values = cells[0], cells[1:]
        if arity is None:
            arity = len(values)
        elif len(values) != arity:
            raise CorpusFormatError(
                path, lineno, f"expected {arity} feature values, got {len(values)}"
            )
        samples.append(values)
        labels.append(label)
    return samples, labels


def load_numeric_corpus(
    path: Union[str, Path],
) -> Tuple[List[List[float]], List[str]]:
    """Parse "label,x1,x2,..." lines into real-valued rows and labels."""
    raw, labels = load_categorical_corpus(path)
    rows = []
    for i, values in enumerate(raw):
        try:
            rows.append([float(v) for v in values])
        except ValueError as exc:
            raise CorpusFormatError(path, 0, f"non-numeric feature: {exc}") from exc
    return rows, labels


def _index_digest(seed: int, index: int) -> bytes:
    h = hashlib.blake2b(
        str(index).encode("ascii"), digest_size=8, key=str(seed).encode("ascii")
    )
    return h.digest()


def split_indices(
    n: int, test_fraction: float, seed: int
) -> Tuple[List[int], List[int]]:
    """Partition indices 0..n-1 into (train, test); test gets
    round(n * fraction) items. Items are ordered by a keyed hash of their
    index, so identical inputs always give identical partitions."""
    if not 0.0 < test_fraction < 1.0:
        raise ValueError("test_fraction must be strictly between 0 and 1")
    if n < 2:
        raise ValueError("need at least 2 documents to split")
    n_test = int(n * test_fraction + 0.5)
    if n_test == 0 or n_test == n:
        raise ValueError("split would leave an empty partition")
    order = sorted(range(n), key=lambda i: (_index_digest(seed, i), i))
    return sorted(order[n_test:]), sorted(order[:n_test])


def split(
    corpus: LabeledCorpus, test_fraction: float, seed: int
) -> Tuple[LabeledCorpus, LabeledCorpus]:
    """Deterministic train/test partition of a labeled corpus."""
    train_idx, test_idx = split_indices(len(corpus), test_fraction, seed)
    docs = corpus.documents
    return (
        LabeledCorpus(tuple(docs[i] for i in train_idx)),
        LabeledCorpus(tuple(docs[i] for i in test_idx)),
    )


@dataclass(frozen=True)
class LabelMetrics:
    precision: float
    recall: float
    f1: float
    support: int


@dataclass(frozen=True)
class EvaluationReport:
    accuracy: float
    per_label: Dict[str, LabelMetrics]
    confusion: Dict[str, Dict[str, int]]
    n_test: int
    zero_division_labels: frozenset = field(default_factory=frozenset)

    def to_json_dict(self) -> dict:
        return {
            "accuracy": self.accuracy,
            "n_test": self.n_test,
            "per_label": {
                lab: {"precision": m.precision, "recall": m.recall, "f1": m.f1}
                for lab, m in self.per_label.items()
            },
            "confusion": {t: dict(row) for t, row in self.confusion.items()},
            "zero_division_labels": sorted(self.zero_division_labels),
        }


def tally(
    pairs: Sequence[Tuple[str, str]], model_labels: Sequence[str]
) -> EvaluationReport:
    """Score (true, predicted) pairs. True labels outside the model's
    classes keep their own confusion rows; zero-denominator precision or
    recall is reported as 0 and flagged."""
    if not pairs:
        raise ValueError("nothing to tally")
    labels = list(dict.fromkeys(model_labels))
    for true, _ in pairs:
        if true not in labels:
            labels.append(true)
    labels.sort()
    confusion: Dict[str, Dict[str, int]] = {t: {p: 0 for p in labels} for t in labels}
    correct = 0
    for true, pred in pairs:
        confusion[true][pred] += 1
        if true == pred:
            correct += 1
    n = len(pairs)
    per_label = {}
    flagged = set()
    for lab in labels:
        tp = confusion[lab][lab]
        row_sum = sum(confusion[lab].values())
        col_sum = sum(confusion[t][lab] for t in labels)
        if col_sum == 0:
            precision = 0.0
            flagged.add(lab)
        else:
            precision = tp / col_sum
        if row_sum == 0:
            recall = 0.0
            flagged.add(lab)
        else:
            recall = tp / row_sum
        if precision + recall == 0.0:
            f1 = 0.0
            flagged.add(lab)
        else:
            f1 = 2 * precision * recall / (precision + recall)
        per_label[lab] = LabelMetrics(precision, recall, f1, row_sum)
    return EvaluationReport(correct / n, per_label, confusion, n, frozenset(flagged))


def evaluate(
    model: NaiveBayesModel,
    pipeline_config: PipelineConfig,
    vocab: Vocabulary,
    test: LabeledCorpus,
    weighting: str,
    stops: Optional[StopList] = None,
) -> EvaluationReport:
    """Classify every test document through the training-time pipeline and
    weighting, then tally against the true labels."""
    pairs = []
    for true, text in test.documents:
        stream = run_pipeline(text, pipeline_config, stops)
        vec = vectorize(stream, vocab, weighting)
        pairs.append((true, classify(model, vec)))
    return tally(pairs, model.priors.labels)


def format_report(report: EvaluationReport) -> str:
    """Human-readable metrics table plus confusion matrix."""
    lines = [f"accuracy: {report.accuracy:.4f}  (n_test={report.n_test})", ""]
    lines.append(f"{'label':<16}{'precision':>10}{'recall':>10}{'f1':>10}{'support':>9}")
    for lab, m in sorted(report.per_label.items()):
        flag = " *" if lab in report.zero_division_labels else ""
        lines.append(
            f"{lab:<16}{m.precision:>10.4f}{m.recall:>10.4f}{m.f1:>10.4f}"
            f"{m.support:>9}{flag}"
        )
    if report.zero_division_labels:
        lines.append("  * zero denominator reported as 0")
    lines.append("")
    labels = sorted(report.confusion)
    header = "true\\pred".ljust(16) + "".join(f"{p:>12}" for p in labels)
    lines.append(header)
    for t in labels:
        row = t.ljust(16) + "".join(f"{report.confusion[t][p]:>12}" for p in labels)
        lines.append(row)
    return "\n".join(lines)
