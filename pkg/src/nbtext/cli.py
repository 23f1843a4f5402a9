"""Command-line frontend: train, predict, evaluate, inspect.

Exit codes: 0 success, 1 runtime or i/o failure, 2 usage error.
"""

import argparse
import json
import sys
from typing import List, Optional, Tuple

from .archive import (
    TEXT_VARIANTS,
    VARIANTS,
    ArchiveError,
    ModelArchive,
    load_archive,
    save_archive,
)
from .evaluation import (
    LabeledCorpus,
    evaluate,
    format_report,
    load_categorical_corpus,
    load_corpus,
    load_numeric_corpus,
    split,
    split_indices,
    tally,
)
from .models import (
    BernoulliModel,
    MultinomialModel,
    classify,
    fit_bernoulli,
    fit_categorical,
    fit_gaussian,
    fit_multinomial,
    posterior_scores,
)
from .pipeline import (
    PipelineConfig,
    StopList,
    build_stop_list,
    load_stop_list,
    run_pipeline,
    tokenize,
)
from .vectorize import (
    BINARY,
    RAW_COUNT,
    WEIGHTING_MODES,
    build_vocabulary,
    dump_vocabulary,
    vectorize,
)


class _UsageError(Exception):
    pass


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nbtext",
        description="Naive Bayes text classification: train, predict, "
        "evaluate and inspect models.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_training_flags(p):
        p.add_argument("--input", required=True, help="corpus file")
        p.add_argument(
            "--variant", required=True, choices=VARIANTS, help="model family"
        )
        p.add_argument(
            "--weighting",
            choices=WEIGHTING_MODES,
            help="term weighting (text variants; default binary for "
            "bernoulli, raw_count for multinomial)",
        )
        p.add_argument(
            "--alpha",
            type=float,
            help="additive smoothing (categorical and multinomial; default 1.0)",
        )
        p.add_argument("--ngram", type=int, help="n-gram size (default 1)")
        p.add_argument(
            "--stop-words",
            help="none | dict:PATH | top:N (default none)",
        )
        p.add_argument("--stem", choices=("on", "off"), help="Porter stemming")
        p.add_argument("--lowercase", choices=("on", "off"), help="default on")

    p_train = sub.add_parser("train", help="fit a model and write an archive")
    add_training_flags(p_train)
    p_train.add_argument("--model", required=True, help="archive output path")
    p_train.set_defaults(func=cmd_train)

    p_pred = sub.add_parser("predict", help="classify text with a saved model")
    p_pred.add_argument("--model", required=True, help="archive path")
    p_pred.add_argument(
        "--probs", action="store_true", help="print normalized posteriors"
    )
    p_pred.add_argument(
        "text", nargs="?", help="document to classify (default: stdin, one per line)"
    )
    p_pred.set_defaults(func=cmd_predict)

    p_eval = sub.add_parser(
        "evaluate", help="train on a split and score the held-out part"
    )
    add_training_flags(p_eval)
    p_eval.add_argument("--test-fraction", type=float, default=0.2)
    p_eval.add_argument("--seed", type=int, default=0)
    p_eval.add_argument("--report-out", help="write a JSON report here")
    p_eval.set_defaults(func=cmd_evaluate)

    p_ins = sub.add_parser("inspect", help="describe a saved model")
    p_ins.add_argument("--model", required=True, help="archive path")
    p_ins.add_argument(
        "--top-k", type=int, help="list the k highest-conditional tokens per class"
    )
    p_ins.add_argument(
        "--dump-vocab",
        action="store_true",
        help="print the vocabulary as id<TAB>token<TAB>document_frequency",
    )
    p_ins.set_defaults(func=cmd_inspect)
    return parser


def _parse_stop_spec(spec: str) -> Tuple[str, Optional[str], Optional[int]]:
    if spec == "none":
        return "none", None, None
    if spec.startswith("dict:"):
        path = spec[len("dict:") :]
        if not path:
            raise _UsageError("--stop-words dict: needs a file path")
        return "dictionary", path, None
    if spec.startswith("top:"):
        try:
            n = int(spec[len("top:") :])
        except ValueError:
            raise _UsageError("--stop-words top: needs an integer") from None
        if n < 1:
            raise _UsageError("--stop-words top:N needs N >= 1")
        return "frequency", None, n
    raise _UsageError(f"bad --stop-words value {spec!r}; use none, dict:PATH or top:N")


class _TrainSettings:
    """Validated flag bundle shared by train and evaluate."""

    def __init__(self, args):
        self.variant = args.variant
        text = self.variant in TEXT_VARIANTS
        pipeline_flags = (args.ngram, args.stop_words, args.stem, args.lowercase)
        if not text:
            if args.weighting is not None:
                raise _UsageError(
                    f"--weighting does not apply to the {self.variant} variant"
                )
            if any(flag is not None for flag in pipeline_flags):
                raise _UsageError(
                    "pipeline flags (--ngram/--stop-words/--stem/--lowercase) "
                    f"do not apply to the {self.variant} variant"
                )
        if self.variant == "bernoulli":
            if args.weighting not in (None, BINARY):
                raise _UsageError("bernoulli requires --weighting binary")
            if args.alpha is not None:
                raise _UsageError(
                    "bernoulli smoothing is fixed (+1/+2); --alpha does not apply"
                )
            self.weighting: Optional[str] = BINARY
        elif self.variant == "multinomial":
            if args.weighting == BINARY:
                raise _UsageError(
                    "multinomial takes raw_count, normalized_tf or tfidf weighting"
                )
            self.weighting = args.weighting or RAW_COUNT
        else:
            self.weighting = None
        if self.variant == "gaussian" and args.alpha is not None:
            raise _UsageError("--alpha does not apply to the gaussian variant")
        self.alpha = 1.0 if args.alpha is None else args.alpha
        if self.alpha < 0:
            raise _UsageError("--alpha must be >= 0")
        self.stop_mode, self.stop_path, self.stop_top_n = _parse_stop_spec(
            args.stop_words if args.stop_words is not None else "none"
        )
        ngram = args.ngram if args.ngram is not None else 1
        if ngram < 1:
            raise _UsageError("--ngram must be >= 1")
        self.pipeline = PipelineConfig(
            lowercase=(args.lowercase or "on") == "on",
            strip_punctuation=True,
            stop_word_mode=self.stop_mode,
            frequency_top_n=self.stop_top_n,
            stemming=(args.stem or "off") == "on",
            ngram_size=ngram,
        )


def _train_text_model(settings: _TrainSettings, corpus: LabeledCorpus) -> ModelArchive:
    labels = [label for label, _ in corpus.documents]
    texts = [text for _, text in corpus.documents]
    stops: Optional[StopList] = None
    if settings.stop_mode == "dictionary":
        stops = load_stop_list(settings.stop_path)
    elif settings.stop_mode == "frequency":
        tokenized = (tokenize(text, settings.pipeline) for text in texts)
        stops = build_stop_list(tokenized, settings.stop_top_n)
    streams = [run_pipeline(text, settings.pipeline, stops) for text in texts]
    vocab = build_vocabulary(streams)
    vectors = [vectorize(s, vocab, settings.weighting) for s in streams]
    if settings.variant == "bernoulli":
        model = fit_bernoulli(vectors, labels, vocab)
    else:
        model = fit_multinomial(vectors, labels, vocab, settings.alpha)
    return ModelArchive(
        settings.variant, model, settings.pipeline, vocab, settings.weighting, stops
    )


def _print_training_summary(archive: ModelArchive) -> None:
    counts = archive.model.priors.counts or {}
    parts = [f"{label}={n}" for label, n in counts.items()]
    print(f"classes: {' '.join(parts)}")
    if archive.vocab is not None:
        print(f"vocabulary: {len(archive.vocab)} tokens")


def cmd_train(args) -> int:
    settings = _TrainSettings(args)
    if settings.variant in TEXT_VARIANTS:
        corpus = load_corpus(args.input)
        archive = _train_text_model(settings, corpus)
    elif settings.variant == "categorical":
        samples, labels = load_categorical_corpus(args.input)
        model = fit_categorical(samples, labels, settings.alpha)
        archive = ModelArchive("categorical", model)
    else:
        rows, labels = load_numeric_corpus(args.input)
        archive = ModelArchive("gaussian", fit_gaussian(rows, labels))
    save_archive(archive, args.model)
    _print_training_summary(archive)
    print(f"model written to {args.model}")
    return 0


def _split_values(line: str) -> List[str]:
    if "," in line:
        return [cell.strip() for cell in line.split(",")]
    return line.split()


def _predict_input(archive: ModelArchive, line: str):
    if archive.variant in TEXT_VARIANTS:
        return archive.encode_text(line)
    values = _split_values(line)
    if archive.variant == "gaussian":
        return [float(v) for v in values]
    return values


def cmd_predict(args) -> int:
    archive = load_archive(args.model)
    if args.text is not None:
        lines = [args.text]
    else:
        lines = [ln.rstrip("\n") for ln in sys.stdin]
    for line in lines:
        if not line.strip():
            continue
        report = posterior_scores(archive.model, _predict_input(archive, line))
        if report.degenerate_evidence:
            print(
                "warning: no usable evidence; falling back to class priors",
                file=sys.stderr,
            )
        if args.probs:
            probs = " ".join(
                f"{label}={p:.6f}" for label, p in sorted(report.posteriors.items())
            )
            print(f"{report.predicted}\t{probs}")
        else:
            print(report.predicted)
    return 0


def cmd_evaluate(args) -> int:
    settings = _TrainSettings(args)
    if not 0.0 < args.test_fraction < 1.0:
        raise _UsageError("--test-fraction must be strictly between 0 and 1")
    if settings.variant in TEXT_VARIANTS:
        corpus = load_corpus(args.input)
        train_part, test_part = split(corpus, args.test_fraction, args.seed)
        archive = _train_text_model(settings, train_part)
        report = evaluate(
            archive.model,
            settings.pipeline,
            archive.vocab,
            test_part,
            settings.weighting,
            archive.stops,
        )
        n_train = len(train_part)
    else:
        if settings.variant == "categorical":
            samples, labels = load_categorical_corpus(args.input)
        else:
            samples, labels = load_numeric_corpus(args.input)
        train_idx, test_idx = split_indices(len(samples), args.test_fraction, args.seed)
        if settings.variant == "categorical":
            model = fit_categorical(
                [samples[i] for i in train_idx],
                [labels[i] for i in train_idx],
                settings.alpha,
            )
        else:
            model = fit_gaussian(
                [samples[i] for i in train_idx], [labels[i] for i in train_idx]
            )
        pairs = [(labels[i], classify(model, samples[i])) for i in test_idx]
        report = tally(pairs, model.priors.labels)
        n_train = len(train_idx)
    print(f"trained on {n_train} documents, evaluated on {report.n_test}")
    print(format_report(report))
    if args.report_out:
        with open(args.report_out, "w", encoding="utf-8") as fh:
            json.dump(report.to_json_dict(), fh, indent=2, sort_keys=True)
            fh.write("\n")
        print(f"report written to {args.report_out}")
    return 0


def _top_tokens(archive: ModelArchive, k: int) -> List[str]:
    model = archive.model
    tokens = archive.vocab.id_to_token()
    lines = []
    for label in model.priors.labels:
        if isinstance(model, MultinomialModel):
            scored = [(model.conditional(label, i), tok) for i, tok in enumerate(tokens)]
        else:
            scored = [(model.estimate(label, i), tok) for i, tok in enumerate(tokens)]
        scored.sort(key=lambda pair: (-pair[0], pair[1]))
        for p, tok in scored[:k]:
            lines.append(f"  {label}\t{tok}\t{p:.6g}")
    return lines


def cmd_inspect(args) -> int:
    archive = load_archive(args.model)
    model = archive.model
    print(f"variant: {archive.variant}")
    priors = model.priors
    counts = priors.counts or {}
    for label in priors.labels:
        n = f" (n={counts[label]})" if label in counts else ""
        print(f"prior {label}: {priors.probabilities[label]:.4f}{n}")
    if archive.vocab is not None:
        print(
            f"vocabulary: {len(archive.vocab)} tokens over "
            f"{archive.vocab.total_documents} documents"
        )
        print(f"weighting: {archive.weighting}")
    alpha = getattr(model, "alpha", None)
    if alpha is not None:
        print(f"alpha: {alpha}")
    if archive.pipeline_config is not None:
        cfg = archive.pipeline_config
        print(
            f"pipeline: lowercase={'on' if cfg.lowercase else 'off'} "
            f"stem={'on' if cfg.stemming else 'off'} "
            f"stop_words={cfg.stop_word_mode} ngram={cfg.ngram_size}"
        )
    if args.top_k is not None:
        if not isinstance(model, (MultinomialModel, BernoulliModel)):
            print(
                "note: --top-k applies to multinomial and bernoulli models only",
                file=sys.stderr,
            )
        else:
            print(f"top {args.top_k} tokens per class:")
            for line in _top_tokens(archive, args.top_k):
                print(line)
    if args.dump_vocab:
        if archive.vocab is None:
            print("note: this model has no vocabulary", file=sys.stderr)
        else:
            print(dump_vocabulary(archive.vocab))
    return 0


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ArchiveError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
