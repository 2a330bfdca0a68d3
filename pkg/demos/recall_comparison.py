#!/usr/bin/env python3
"""Why calibrated posteriors matter: recall@k under two noise models.

Both classifiers pick the same top-1 finger with the same accuracy; they
differ only in the distribution they report.  The calibrated one spreads
the remaining mass honestly, the overconfident one claims certainty.  The
decoder can recover from honest uncertainty but not from confident errors,
which shows up directly in recall@k.
"""

import argparse
import time

from tapentry.classifier import typing_confusion_matrix
from tapentry.domain import default_key_finger_map
from tapentry.evaluation import ConfusionSource, SimulationConfig, simulate_recall
from tapentry.lm import corpus_from_text, train_char_lm, train_word_lm
from tapentry.textgen import desk_corpus, desk_phrases


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--accuracy", type=float, default=0.9,
                        help="top-1 accuracy of both simulated classifiers")
    parser.add_argument("--n-phrases", type=int, default=25)
    parser.add_argument("--n-seeds", type=int, default=3)
    args = parser.parse_args()

    corpus = corpus_from_text(desk_corpus())
    char_lm = train_char_lm(corpus, order=5)
    word_lm = train_word_lm(corpus, order=3)
    kfmap = default_key_finger_map()

    phrases = desk_phrases()[: args.n_phrases]
    sim = SimulationConfig(phrases=phrases, ks=(1, 3, 5, 10), seed=7, n_seeds=args.n_seeds)
    matrix = typing_confusion_matrix(args.accuracy)

    print(f"{len(phrases)} phrases x {args.n_seeds} seeds, "
          f"classifier top-1 accuracy {args.accuracy}")
    print(f"\n{'':>14s}  " + "".join(f"recall@{k:<4d}" for k in sim.ks))
    start = time.perf_counter()
    for mode in ("calibrated", "overconfident"):
        report = simulate_recall(sim, ConfusionSource(matrix, mode), kfmap, char_lm, word_lm)
        cells = "".join(f"{report.recall[k]:<11.3f}" for k in sim.ks)
        print(f"{mode:>14s}  {cells}")
    print(f"\n({time.perf_counter() - start:.1f} s)")


if __name__ == "__main__":
    main()
