"""Witten-Bell smoothed character n-gram model.

Each word trains as an independent token stream wrapped in boundary symbols,
so the model learns both word starts (boundary as context) and word endings
(boundary as prediction target).  The smoothing recursion is

    p(y|h) = c(h,y)/(c(h)+T(h)) + T(h)/(c(h)+T(h)) * p(y|h')

where T(h) counts distinct continuations of context h and h' drops the
oldest token; the unigram level interpolates with a uniform distribution
over the 28-symbol alphabet so every character keeps positive probability.
"""

import math

from tapentry.domain import ALPHABET
from tapentry.lm.backoff import (
    BackoffModel,
    CHAR_BOUNDARY,
    collect_ngram_counts,
    interpolated_prob,
)
from tapentry.lm.corpus import Corpus, LmError

CHAR_VOCAB = tuple(sorted(ALPHABET + CHAR_BOUNDARY))

DEFAULT_CHAR_ORDER = 12


def train_char_lm(corpus: Corpus, order: int = DEFAULT_CHAR_ORDER) -> BackoffModel:
    """Train a character n-gram model with Witten-Bell smoothing.

    corpus -- validated word corpus; every distinct word occurrence counts
    order  -- maximum n-gram length (>= 1)
    """
    if order < 1:
        raise LmError(f"order must be >= 1, got {order}")
    streams = [(CHAR_BOUNDARY,) + tuple(word) + (CHAR_BOUNDARY,)
               for word in corpus.words()]
    if not streams:
        raise LmError("corpus contains no words")
    counts = collect_ngram_counts(streams, order)

    probs = {}
    bows = {}
    base = 1.0 / len(CHAR_VOCAB)
    for k in range(1, order + 1):
        table = {}
        for gram, count in counts.items():
            if len(gram) == k:
                table.setdefault(gram[:-1], {})[gram[-1]] = count
        for context, row in table.items():
            total = sum(row.values())
            types = len(row)
            lam = types / (total + types)
            bows[context] = lam
            if k == 1:
                for symbol in CHAR_VOCAB:
                    probs[(symbol,)] = (row.get(symbol, 0) / (total + types)
                                        + lam * base)
            else:
                for symbol, count in row.items():
                    lower = interpolated_prob(probs, bows, context[1:], symbol)
                    probs[context + (symbol,)] = (count / (total + types)
                                                  + lam * lower)

    logp = {gram: math.log(p) for gram, p in probs.items()}
    # The empty context never backs off (the unigram table spans the whole
    # vocabulary), so its weight has no place in the model.
    logbow = {context: math.log(lam) for context, lam in bows.items() if context}
    return BackoffModel("char", order, CHAR_VOCAB, logp, logbow)
