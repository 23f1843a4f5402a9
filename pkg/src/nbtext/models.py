"""Naive Bayes variants over shared priors and log-space scoring.

Four model families: categorical (feature tuples over finite value sets),
multi-variate Bernoulli (per-token presence bits), multinomial (token
counts, optionally fractional), and Gaussian (continuous features). All
models store raw counts or sufficient statistics; probabilities are
derived on demand. Scoring is done in log space throughout, with zero
conditionals mapping to -inf rather than raising.
"""

import math
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, List, Optional, Sequence, Tuple, Union

from .vectorize import SparseVector, Vocabulary

__all__ = [
    "ClassPriors",
    "CategoricalModel",
    "BernoulliModel",
    "MultinomialModel",
    "GaussianModel",
    "PosteriorReport",
    "NaiveBayesModel",
    "fit_priors",
    "fit_categorical",
    "fit_bernoulli",
    "fit_multinomial",
    "fit_gaussian",
    "gaussian_log_density",
    "log_likelihood",
    "posterior_scores",
    "normalized_posteriors",
    "classify",
]

_PRIOR_SUM_TOL = 1e-12


@dataclass(frozen=True)
class ClassPriors:
    """Per-class prior probabilities, with sample counts kept alongside
    when the priors were estimated from data."""

    probabilities: Dict[str, float]
    counts: Optional[Dict[str, int]] = None
    total: Optional[int] = None

    def __post_init__(self):
        if not self.probabilities:
            raise ValueError("at least one class is required")
        for label, p in self.probabilities.items():
            if not 0.0 < p <= 1.0:
                raise ValueError(f"prior for {label!r} outside (0, 1]: {p}")
        if abs(sum(self.probabilities.values()) - 1.0) > _PRIOR_SUM_TOL:
            raise ValueError("priors must sum to 1")
        if (self.counts is None) != (self.total is None):
            raise ValueError("counts and total must be supplied together")

    @classmethod
    def from_probabilities(cls, probabilities: Dict[str, float]) -> "ClassPriors":
        """Build priors from explicit probabilities (no backing counts)."""
        return cls(dict(probabilities))

    @property
    def labels(self) -> List[str]:
        return list(self.probabilities)

    @cached_property
    def log_probabilities(self) -> Dict[str, float]:
        return {c: math.log(p) for c, p in self.probabilities.items()}


def fit_priors(labels: Sequence[str]) -> ClassPriors:
    """Estimate P(class) as the class frequency among the labels."""
    if not labels:
        raise ValueError("labels must be non-empty")
    counts: Dict[str, int] = {}
    for lab in labels:
        counts[lab] = counts.get(lab, 0) + 1
    total = len(labels)
    probs = {lab: n / total for lab, n in counts.items()}
    return ClassPriors(probs, counts, total)


@dataclass(frozen=True)
class CategoricalModel:
    """Per-position value-count tables with additive smoothing.

    value_counts[i][class][value] is the number of class samples showing
    ``value`` at position i; class_counts[class] is the class sample count.
    The smoothed conditional for value v at position i under class j is
    (count + alpha) / (class_count + alpha * K) where K is the number of
    distinct values at position i, counting the queried value if unseen.
    """

    priors: ClassPriors
    value_counts: Tuple[Dict[str, Dict[str, int]], ...]
    class_counts: Dict[str, int]
    alpha: float

    @property
    def n_positions(self) -> int:
        return len(self.value_counts)

    @cached_property
    def domains(self) -> Tuple[frozenset, ...]:
        out = []
        for table in self.value_counts:
            values = set()
            for per_class in table.values():
                values.update(per_class)
            out.append(frozenset(values))
        return tuple(out)

    def conditional(self, position: int, label: str, value: str) -> float:
        """Smoothed P(value at position | label)."""
        count = self.value_counts[position][label].get(value, 0)
        k = len(self.domains[position])
        if value not in self.domains[position]:
            k += 1
        num = count + self.alpha
        den = self.class_counts[label] + self.alpha * k
        return num / den


def fit_categorical(
    samples: Sequence[Sequence[str]], labels: Sequence[str], alpha: float = 0.0
) -> CategoricalModel:
    if alpha < 0:
        raise ValueError("alpha must be >= 0")
    if len(samples) != len(labels):
        raise ValueError("samples and labels must have equal length")
    priors = fit_priors(labels)
    n_positions = len(samples[0])
    for row in samples:
        if len(row) != n_positions:
            raise ValueError("all samples must have the same number of positions")
    tables: List[Dict[str, Dict[str, int]]] = [
        {lab: {} for lab in priors.labels} for _ in range(n_positions)
    ]
    for row, lab in zip(samples, labels):
        for i, value in enumerate(row):
            cell = tables[i][lab]
            cell[value] = cell.get(value, 0) + 1
    assert priors.counts is not None
    return CategoricalModel(priors, tuple(tables), dict(priors.counts), alpha)


@dataclass(frozen=True)
class BernoulliModel:
    """Presence/absence model: P(token | class) = (df + 1) / (class_docs + 2).

    doc_counts[class][i] is the number of class documents containing token
    id i; class_doc_counts[class] is the number of documents in the class.
    The +1/+2 correction keeps every estimate strictly inside (0, 1).
    """

    priors: ClassPriors
    doc_counts: Dict[str, List[int]]
    class_doc_counts: Dict[str, int]
    vocab_size: int

    def estimate(self, label: str, token_id: int) -> float:
        return (self.doc_counts[label][token_id] + 1) / (
            self.class_doc_counts[label] + 2
        )

    @cached_property
    def _log_tables(self) -> Dict[str, Tuple[List[float], List[float]]]:
        # per class: (log p_i, log (1 - p_i)) for every vocabulary id
        out = {}
        for label in self.priors.labels:
            df = self.doc_counts[label]
            den = self.class_doc_counts[label] + 2
            log_p = [math.log((df[i] + 1) / den) for i in range(self.vocab_size)]
            log_q = [math.log((den - df[i] - 1) / den) for i in range(self.vocab_size)]
            out[label] = (log_p, log_q)
        return out


def fit_bernoulli(
    binary_vectors: Sequence[SparseVector],
    labels: Sequence[str],
    vocab: Vocabulary,
) -> BernoulliModel:
    if len(binary_vectors) != len(labels):
        raise ValueError("vectors and labels must have equal length")
    for vec in binary_vectors:
        if any(v != 1 for v in vec.entries.values()):
            raise ValueError("bernoulli fitting requires binary vectors")
    priors = fit_priors(labels)
    V = len(vocab)
    doc_counts = {lab: [0] * V for lab in priors.labels}
    class_docs = {lab: 0 for lab in priors.labels}
    for vec, lab in zip(binary_vectors, labels):
        class_docs[lab] += 1
        row = doc_counts[lab]
        for token_id in vec.entries:
            row[token_id] += 1
    return BernoulliModel(priors, doc_counts, class_docs, V)


@dataclass(frozen=True)
class MultinomialModel:
    """Token-count model with additive smoothing over the vocabulary.

    tf_sums[class][i] is the summed term weight of token id i across class
    documents (float: normalized tf and tf-idf produce fractional counts);
    class_totals[class] is the sum of all stored weights for the class.
    """

    priors: ClassPriors
    tf_sums: Dict[str, Dict[int, float]]
    class_totals: Dict[str, float]
    vocab_size: int
    alpha: float

    def conditional(self, label: str, token_id: int) -> float:
        """Smoothed P(token | class) per the additive estimator."""
        tf = self.tf_sums[label].get(token_id, 0.0)
        return (tf + self.alpha) / (
            self.class_totals[label] + self.alpha * self.vocab_size
        )


def fit_multinomial(
    count_vectors: Sequence[SparseVector],
    labels: Sequence[str],
    vocab: Vocabulary,
    alpha: float = 1.0,
) -> MultinomialModel:
    if alpha < 0:
        raise ValueError("alpha must be >= 0")
    if len(count_vectors) != len(labels):
        raise ValueError("vectors and labels must have equal length")
    priors = fit_priors(labels)
    tf_sums: Dict[str, Dict[int, float]] = {lab: {} for lab in priors.labels}
    class_totals: Dict[str, float] = {lab: 0.0 for lab in priors.labels}
    for vec, lab in zip(count_vectors, labels):
        sums = tf_sums[lab]
        for token_id, weight in vec.entries.items():
            sums[token_id] = sums.get(token_id, 0.0) + weight
            class_totals[lab] += weight
    return MultinomialModel(priors, tf_sums, class_totals, len(vocab), alpha)


@dataclass(frozen=True)
class GaussianModel:
    """Per-class, per-feature normal densities (population sigma)."""

    priors: ClassPriors
    means: Dict[str, List[float]]
    stds: Dict[str, List[float]]
    n_features: int


_SIGMA_FLOOR = 1e-9


def fit_gaussian(
    feature_rows: Sequence[Sequence[float]], labels: Sequence[str]
) -> GaussianModel:
    if len(feature_rows) != len(labels):
        raise ValueError("rows and labels must have equal length")
    priors = fit_priors(labels)
    n_features = len(feature_rows[0])
    for row in feature_rows:
        if len(row) != n_features:
            raise ValueError("all rows must have the same dimensionality")
    by_class: Dict[str, List[Sequence[float]]] = {lab: [] for lab in priors.labels}
    for row, lab in zip(feature_rows, labels):
        by_class[lab].append(row)
    means: Dict[str, List[float]] = {}
    stds: Dict[str, List[float]] = {}
    for lab, rows in by_class.items():
        n = len(rows)
        if n < 2:
            raise ValueError(f"class {lab!r} has fewer than 2 samples")
        mu = [sum(r[k] for r in rows) / n for k in range(n_features)]
        var = [sum((r[k] - mu[k]) ** 2 for r in rows) / n for k in range(n_features)]
        means[lab] = mu
        stds[lab] = [max(math.sqrt(v), _SIGMA_FLOOR) for v in var]
    return GaussianModel(priors, means, stds, n_features)


def gaussian_log_density(x: float, mu: float, sigma: float) -> float:
    z = (x - mu) / sigma
    return -0.5 * z * z - math.log(sigma * math.sqrt(2.0 * math.pi))


NaiveBayesModel = Union[CategoricalModel, BernoulliModel, MultinomialModel, GaussianModel]


@dataclass(frozen=True)
class PosteriorReport:
    """Per-class log-scores and normalized posteriors for one input.

    degenerate_evidence is set when every class scored -inf; posteriors
    are then reported uniform and the prediction falls back to the prior.
    """

    log_scores: Dict[str, float]
    posteriors: Dict[str, float]
    predicted: str
    degenerate_evidence: bool = False


def _categorical_log_likelihood(
    model: CategoricalModel, values: Sequence[str], label: str
) -> float:
    if len(values) != model.n_positions:
        raise ValueError(
            f"expected {model.n_positions} feature values, got {len(values)}"
        )
    total = 0.0
    for i, value in enumerate(values):
        p = model.conditional(i, label, value)
        if p == 0.0:
            return -math.inf
        total += math.log(p)
    return total


def _bernoulli_log_likelihood(
    model: BernoulliModel, vec: SparseVector, label: str
) -> float:
    log_p, log_q = model._log_tables[label]
    total = 0.0
    present = vec.entries
    for i in range(model.vocab_size):
        total += log_p[i] if i in present else log_q[i]
    return total


def _multinomial_log_likelihood(
    model: MultinomialModel, vec: SparseVector, label: str
) -> float:
    total = 0.0
    # fixed summation order keeps scores exactly invariant to token order
    for token_id in sorted(vec.entries):
        p = model.conditional(label, token_id)
        if p == 0.0:
            return -math.inf
        total += vec.entries[token_id] * math.log(p)
    return total


def _gaussian_log_likelihood(
    model: GaussianModel, row: Sequence[float], label: str
) -> float:
    if len(row) != model.n_features:
        raise ValueError(f"expected {model.n_features} features, got {len(row)}")
    mu = model.means[label]
    sd = model.stds[label]
    return sum(gaussian_log_density(x, mu[k], sd[k]) for k, x in enumerate(row))


def log_likelihood(model: NaiveBayesModel, x, label: str) -> float:
    """Log P(x | label) under the model's variant; -inf on zero conditionals."""
    if isinstance(model, CategoricalModel):
        if isinstance(x, SparseVector):
            raise TypeError("categorical model expects a sequence of feature values")
        return _categorical_log_likelihood(model, x, label)
    if isinstance(model, BernoulliModel):
        if not isinstance(x, SparseVector):
            raise TypeError("bernoulli model expects a SparseVector")
        return _bernoulli_log_likelihood(model, x, label)
    if isinstance(model, MultinomialModel):
        if not isinstance(x, SparseVector):
            raise TypeError("multinomial model expects a SparseVector")
        return _multinomial_log_likelihood(model, x, label)
    if isinstance(model, GaussianModel):
        if isinstance(x, SparseVector):
            raise TypeError("gaussian model expects a sequence of real features")
        return _gaussian_log_likelihood(model, x, label)
    raise TypeError(f"unknown model type: {type(model).__name__}")


def posterior_scores(model: NaiveBayesModel, x) -> PosteriorReport:
    """Log prior + log likelihood per class, normalized by shifted
    exponentiation. All-(-inf) inputs yield uniform posteriors with the
    degenerate flag set, and the prediction falls back to the prior."""
    priors = model.priors
    log_priors = priors.log_probabilities
    scores = {
        label: log_priors[label] + log_likelihood(model, x, label)
        for label in priors.labels
    }
    best = max(scores.values())
    if best == -math.inf:
        n = len(scores)
        posteriors = {label: 1.0 / n for label in scores}
        degenerate = True
    else:
        shifted = {label: math.exp(s - best) for label, s in scores.items()}
        z = sum(shifted.values())
        posteriors = {label: v / z for label, v in shifted.items()}
        degenerate = False
    predicted = min(
        scores,
        key=lambda label: (-scores[label], -priors.probabilities[label], label),
    )
    return PosteriorReport(scores, posteriors, predicted, degenerate)


def normalized_posteriors(model: NaiveBayesModel, x) -> Dict[str, float]:
    """Posterior probabilities per class, summing to 1."""
    return posterior_scores(model, x).posteriors


def classify(model: NaiveBayesModel, x) -> str:
    """Argmax-posterior label; ties broken toward the larger prior, then
    the lexicographically smallest label."""
    return posterior_scores(model, x).predicted
