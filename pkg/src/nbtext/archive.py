"""Single-file JSON persistence for trained classifiers.

Archives store raw counts, sums, and hyperparameters, never derived
probabilities; estimates are recomputed from the same integers at load, so
a round-tripped model classifies identically and reproduces log-scores.
"""

import json
from dataclasses import asdict, dataclass
from pathlib import Path
from typing import Optional, Union

from .models import (
    BernoulliModel,
    CategoricalModel,
    ClassPriors,
    GaussianModel,
    MultinomialModel,
    NaiveBayesModel,
)
from .pipeline import PipelineConfig, StopList, run_pipeline
from .vectorize import SparseVector, Vocabulary, vectorize

__all__ = ["FORMAT_VERSION", "ArchiveError", "ModelArchive", "save_archive", "load_archive"]

FORMAT_VERSION = 1

VARIANTS = ("categorical", "bernoulli", "multinomial", "gaussian")
TEXT_VARIANTS = ("bernoulli", "multinomial")


class ArchiveError(Exception):
    """Archive could not be written or parsed."""


@dataclass(frozen=True)
class ModelArchive:
    """A trained model plus everything needed to classify new input:
    pipeline config, stop list, vocabulary, and weighting mode (text
    variants only; categorical and gaussian models carry none of these)."""

    variant: str
    model: NaiveBayesModel
    pipeline_config: Optional[PipelineConfig] = None
    vocab: Optional[Vocabulary] = None
    weighting: Optional[str] = None
    stops: Optional[StopList] = None

    def __post_init__(self):
        if self.variant not in VARIANTS:
            raise ValueError(f"unknown variant: {self.variant!r}")
        if self.variant in TEXT_VARIANTS:
            if self.pipeline_config is None or self.vocab is None or not self.weighting:
                raise ValueError(
                    f"{self.variant} archives need pipeline config, vocabulary "
                    "and weighting"
                )

    def encode_text(self, text: str) -> SparseVector:
        """Vectorize raw text exactly as at training time."""
        if self.variant not in TEXT_VARIANTS:
            raise ValueError(f"{self.variant} models do not take raw text")
        stream = run_pipeline(text, self.pipeline_config, self.stops)
        return vectorize(stream, self.vocab, self.weighting)


def _priors_payload(priors: ClassPriors) -> dict:
    if priors.counts is None:
        raise ArchiveError(
            "cannot archive priors without sample counts "
            "(model was built from explicit probabilities)"
        )
    return {
        "labels": list(priors.probabilities),
        "counts": [priors.counts[lab] for lab in priors.probabilities],
        "total": priors.total,
    }


def _priors_from_payload(payload: dict) -> ClassPriors:
    labels = payload["labels"]
    counts = dict(zip(labels, payload["counts"]))
    total = payload["total"]
    probs = {lab: counts[lab] / total for lab in labels}
    return ClassPriors(probs, counts, total)


def _model_payload(variant: str, model: NaiveBayesModel) -> dict:
    if variant == "categorical":
        assert isinstance(model, CategoricalModel)
        return {
            "value_counts": [table for table in model.value_counts],
            "class_counts": model.class_counts,
            "alpha": model.alpha,
        }
    if variant == "bernoulli":
        assert isinstance(model, BernoulliModel)
        return {
            "doc_counts": model.doc_counts,
            "class_doc_counts": model.class_doc_counts,
            "vocab_size": model.vocab_size,
        }
    if variant == "multinomial":
        assert isinstance(model, MultinomialModel)
        return {
            "tf_sums": {
                lab: {str(i): v for i, v in sums.items()}
                for lab, sums in model.tf_sums.items()
            },
            "class_totals": model.class_totals,
            "vocab_size": model.vocab_size,
            "alpha": model.alpha,
        }
    assert isinstance(model, GaussianModel)
    return {
        "means": model.means,
        "stds": model.stds,
        "n_features": model.n_features,
    }


def _model_from_payload(
    variant: str, payload: dict, priors: ClassPriors
) -> NaiveBayesModel:
    if variant == "categorical":
        return CategoricalModel(
            priors,
            tuple(payload["value_counts"]),
            payload["class_counts"],
            payload["alpha"],
        )
    if variant == "bernoulli":
        return BernoulliModel(
            priors,
            payload["doc_counts"],
            payload["class_doc_counts"],
            payload["vocab_size"],
        )
    if variant == "multinomial":
        tf_sums = {
            lab: {int(i): v for i, v in sums.items()}
            for lab, sums in payload["tf_sums"].items()
        }
        return MultinomialModel(
            priors,
            tf_sums,
            payload["class_totals"],
            payload["vocab_size"],
            payload["alpha"],
        )
    return GaussianModel(
        priors, payload["means"], payload["stds"], payload["n_features"]
    )


def save_archive(archive: ModelArchive, path: Union[str, Path]) -> None:
    doc = {
        "format_version": FORMAT_VERSION,
        "variant": archive.variant,
        "priors": _priors_payload(archive.model.priors),
        "parameters": _model_payload(archive.variant, archive.model),
        "pipeline": asdict(archive.pipeline_config)
        if archive.pipeline_config is not None
        else None,
        "weighting": archive.weighting,
        "stop_words": {
            "origin": archive.stops.origin,
            "words": sorted(archive.stops.words),
        }
        if archive.stops is not None
        else None,
        "vocabulary": {
            "tokens": archive.vocab.id_to_token(),
            "document_frequency": archive.vocab.document_frequency,
            "total_documents": archive.vocab.total_documents,
        }
        if archive.vocab is not None
        else None,
    }
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(doc, fh, ensure_ascii=False)
        fh.write("\n")


def load_archive(path: Union[str, Path]) -> ModelArchive:
    try:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
    except json.JSONDecodeError as exc:
        raise ArchiveError(f"not a model archive (invalid JSON): {exc}") from exc
    try:
        version = doc["format_version"]
        if version != FORMAT_VERSION:
            raise ArchiveError(
                f"unsupported format_version {version}; this build reads "
                f"version {FORMAT_VERSION}"
            )
        variant = doc["variant"]
        if variant not in VARIANTS:
            raise ArchiveError(f"unknown variant {variant!r}")
        priors = _priors_from_payload(doc["priors"])
        model = _model_from_payload(variant, doc["parameters"], priors)
        pipeline_config = (
            PipelineConfig(**doc["pipeline"]) if doc.get("pipeline") else None
        )
        stops = None
        if doc.get("stop_words"):
            stops = StopList(
                frozenset(doc["stop_words"]["words"]), doc["stop_words"]["origin"]
            )
        vocab = None
        if doc.get("vocabulary"):
            v = doc["vocabulary"]
            vocab = Vocabulary(
                {tok: i for i, tok in enumerate(v["tokens"])},
                v["document_frequency"],
                v["total_documents"],
            )
    except KeyError as exc:
        raise ArchiveError(f"archive is missing field {exc}") from exc
    return ModelArchive(variant, model, pipeline_config, vocab, doc.get("weighting"), stops)
