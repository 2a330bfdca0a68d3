"""Modified Kneser-Ney smoothed word n-gram model.

Standard modified Kneser-Ney with three count-dependent discounts per order,
estimated from count-of-count statistics; lower orders are trained on
continuation counts (how many distinct words precede an n-gram) except for
n-grams anchored at the sentence-start token, which keep raw counts since
nothing can precede them.  When the count-of-count statistics of an order
are degenerate the discounts fall back to a fixed 0.7 with a warning.

The vocabulary is capped to the most frequent words; everything else maps
to the unknown token before counting, and the unigram level interpolates
with a uniform distribution so unknown words keep positive probability.
"""

import math
import warnings
from collections import Counter

from tapentry.lm.backoff import (
    BackoffModel,
    WORD_END,
    WORD_START,
    WORD_UNK,
    collect_ngram_counts,
    interpolated_prob,
)
from tapentry.lm.corpus import Corpus, LmError

DEFAULT_VOCAB_CAP = 100_000

FIXED_DISCOUNT = 0.7


def _order_discounts(counts_of_counts: Counter):
    """Return (D1, D2, D3plus) from count-of-count statistics, or None.

    None signals degenerate statistics (a needed bucket is empty, or the
    closed-form discounts leave the open interval) and asks for the fixed
    fallback.
    """
    n1, n2, n3, n4 = (counts_of_counts.get(i, 0) for i in (1, 2, 3, 4))
    if n1 == 0 or n2 == 0 or n3 == 0 or n4 == 0:
        return None
    y = n1 / (n1 + 2.0 * n2)
    d1 = 1.0 - 2.0 * y * n2 / n1
    d2 = 2.0 - 3.0 * y * n3 / n2
    d3 = 3.0 - 4.0 * y * n4 / n3
    if min(d1, d2, d3) <= 0.0:
        return None
    return (d1, d2, d3)


def train_word_lm(corpus: Corpus, order: int = 4,
                  vocab_cap: int = DEFAULT_VOCAB_CAP,
                  discounts: str = "auto") -> BackoffModel:
    """Train a word n-gram model with modified Kneser-Ney smoothing.

    corpus    -- validated corpus with at least one sentence of `order` words
    order     -- maximum n-gram length (>= 1)
    vocab_cap -- keep this many most-frequent words, rest become <unk>
    discounts -- "auto" estimates per-order discounts from count-of-counts,
                 "fixed" forces the 0.7 absolute discount everywhere
    """
    if order < 1:
        raise LmError(f"order must be >= 1, got {order}")
    if vocab_cap < 1:
        raise LmError(f"vocab_cap must be >= 1, got {vocab_cap}")
    if discounts not in ("auto", "fixed"):
        raise LmError(f"unknown discount mode {discounts!r}")
    if len(corpus) == 0 or max(len(s) for s in corpus) < order:
        raise LmError(f"corpus needs at least one sentence of {order} words")

    freq = Counter(corpus.words())
    if len(freq) > vocab_cap:
        ranked = sorted(freq.items(), key=lambda item: (-item[1], item[0]))
        kept = frozenset(word for word, _ in ranked[:vocab_cap])
    else:
        kept = frozenset(freq)
    vocab = tuple(sorted(kept | {WORD_END, WORD_UNK}))

    streams = [(WORD_START,)
               + tuple(w if w in kept else WORD_UNK for w in sentence)
               + (WORD_END,)
               for sentence in corpus]
    raw = collect_ngram_counts(streams, order)

    # Continuation counts for the lower orders: each order-(k+1) gram
    # contributes one distinct predecessor to its length-k suffix.
    adjusted = {}
    for gram in raw:
        if len(gram) >= 2:
            suffix = gram[1:]
            adjusted[suffix] = adjusted.get(suffix, 0) + 1
    for gram, count in raw.items():
        if len(gram) < order and gram[0] == WORD_START:
            adjusted[gram] = count

    probs = {}
    bows = {}
    base = 1.0 / len(vocab)
    degenerate_orders = []
    for k in range(1, order + 1):
        source = raw if k == order else adjusted
        table = {}
        for gram, count in source.items():
            if len(gram) == k:
                table.setdefault(gram[:-1], {})[gram[-1]] = count
        if discounts == "auto":
            of_counts = Counter(c for row in table.values() for c in row.values())
            trio = _order_discounts(of_counts)
            if trio is None:
                degenerate_orders.append(k)
                trio = (FIXED_DISCOUNT,) * 3
        else:
            trio = (FIXED_DISCOUNT,) * 3
        d1, d2, d3 = trio

        def discounted(count):
            d = d1 if count == 1 else d2 if count == 2 else d3
            return max(count - d, 0.0)

        for context, row in table.items():
            total = sum(row.values())
            kept_mass = sum(discounted(c) for c in row.values())
            gamma = (total - kept_mass) / total
            bows[context] = gamma
            if k == 1:
                for word in vocab:
                    count = row.get(word, 0)
                    probs[(word,)] = (discounted(count) / total if count else 0.0) \
                        + gamma * base
            else:
                for word, count in row.items():
                    lower = interpolated_prob(probs, bows, context[1:], word)
                    probs[context + (word,)] = (discounted(count) / total
                                                + gamma * lower)

    if degenerate_orders:
        warnings.warn(
            "count-of-count statistics degenerate at order(s) "
            f"{degenerate_orders}; using fixed discount {FIXED_DISCOUNT}",
            RuntimeWarning, stacklevel=2)

    logp = {gram: math.log(p) for gram, p in probs.items()}
    # The empty context never backs off (the unigram table spans the whole
    # vocabulary), so its weight has no place in the model.
    logbow = {context: math.log(gamma) for context, gamma in bows.items() if context}
    return BackoffModel("word", order, vocab, logp, logbow)
