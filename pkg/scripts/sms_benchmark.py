#!/usr/bin/env python3
"""Spam-filter benchmark on the SMS Spam Collection.

Trains a multinomial model with Laplace smoothing on unigrams, using an
80/20 split at seed 42, and reports wall time plus held-out metrics. The
defaults match the regression gate in tests/test_acceptance.py; use the
flags to explore other settings.
"""

import argparse
import sys
import time
from pathlib import Path

from nbtext.evaluation import evaluate, format_report, load_corpus, split
from nbtext.models import fit_bernoulli, fit_multinomial
from nbtext.pipeline import PipelineConfig, build_stop_list, run_pipeline, tokenize
from nbtext.vectorize import BINARY, build_vocabulary, vectorize

DEFAULT_CORPUS = Path(__file__).resolve().parents[1] / "data" / "SMSSpamCollection"


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--corpus", type=Path, default=DEFAULT_CORPUS)
    parser.add_argument("--variant", choices=["multinomial", "bernoulli"],
                        default="multinomial")
    parser.add_argument("--weighting", default="raw_count",
                        choices=["raw_count", "normalized_tf", "tfidf", "binary"])
    parser.add_argument("--alpha", type=float, default=1.0)
    parser.add_argument("--test-fraction", type=float, default=0.2)
    parser.add_argument("--seed", type=int, default=42)
    parser.add_argument("--stem", action="store_true")
    parser.add_argument("--stop-top", type=int, default=0,
                        help="remove the N most frequent training tokens")
    parser.add_argument("--ngram", type=int, default=1)
    args = parser.parse_args()

    if not args.corpus.exists():
        print(f"corpus not found at {args.corpus}", file=sys.stderr)
        print("run scripts/fetch_sms_corpus.py first", file=sys.stderr)
        return 1

    started = time.perf_counter()
    corpus = load_corpus(args.corpus)
    train, test = split(corpus, args.test_fraction, args.seed)

    config = PipelineConfig(
        stemming=args.stem,
        stop_word_mode="frequency" if args.stop_top else "none",
        frequency_top_n=args.stop_top or None,
        ngram_size=args.ngram,
    )
    stops = None
    if args.stop_top:
        raw = [tokenize(text, config) for _, text in train.documents]
        stops = build_stop_list(raw, args.stop_top)

    streams = [run_pipeline(text, config, stops) for _, text in train.documents]
    labels = [label for label, _ in train.documents]
    vocab = build_vocabulary(streams)

    if args.variant == "bernoulli":
        weighting = BINARY
        vectors = [vectorize(s, vocab, weighting) for s in streams]
        model = fit_bernoulli(vectors, labels, vocab)
    else:
        weighting = args.weighting
        vectors = [vectorize(s, vocab, weighting) for s in streams]
        model = fit_multinomial(vectors, labels, vocab, alpha=args.alpha)

    report = evaluate(model, config, vocab, test, weighting, stops)
    elapsed = time.perf_counter() - started

    print(f"corpus: {args.corpus} ({len(corpus)} messages)")
    print(f"variant: {args.variant}  weighting: {weighting}  "
          f"alpha: {args.alpha}  stem: {args.stem}  "
          f"stop_top: {args.stop_top}  ngram: {args.ngram}")
    print(f"train/test: {len(train)}/{len(test)}  vocabulary: {len(vocab)}")
    print(f"wall time: {elapsed:.2f}s")
    print()
    print(format_report(report))
    return 0


if __name__ == "__main__":
    sys.exit(main())
