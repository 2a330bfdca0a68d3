"""Back-off n-gram model core shared by the character and word models.

A trained model is a pair of flat hash tables: natural-log conditional
probabilities keyed by n-gram tuple, and natural-log back-off weights keyed
by context tuple.  Scoring walks the longest matching suffix of the history,
accumulating back-off weights until a stored n-gram is found; the unigram
table covers the full vocabulary, so every in-alphabet token has positive
probability under every context.

Character models predict the 27 text characters plus a word-boundary symbol
and score words against an explicit boundary start context; spaces never
enter the character model.  Word models predict vocabulary words plus the
end-of-sentence and unknown-word tokens, with the start token serving as
context only.
"""

from dataclasses import dataclass, field

from tapentry.lm.corpus import LmError

CHAR_BOUNDARY = "#"
WORD_START = "<s>"
WORD_END = "</s>"
WORD_UNK = "<unk>"


@dataclass(frozen=True)
class BackoffModel:
    """An immutable smoothed n-gram model in back-off representation.

    kind   -- "char" or "word"; selects start symbol and unknown handling
    order  -- maximum n-gram length
    vocab  -- sorted tuple of predictable tokens (excludes the start symbol)
    logp   -- {ngram tuple: natural-log conditional probability}
    bow    -- {context tuple: natural-log back-off weight}
    """

    kind: str
    order: int
    vocab: tuple
    logp: dict = field(repr=False)
    bow: dict = field(repr=False)

    def __post_init__(self):
        if self.kind not in ("char", "word"):
            raise LmError(f"unknown model kind {self.kind!r}")
        if self.order < 1:
            raise LmError(f"order must be >= 1, got {self.order}")
        object.__setattr__(self, "_vocab_set", frozenset(self.vocab))

    @property
    def start_symbol(self) -> str:
        return CHAR_BOUNDARY if self.kind == "char" else WORD_START

    def lookup(self, token: str) -> str:
        """Map a token onto the model vocabulary (word models use <unk>)."""
        if token in self._vocab_set:
            return token
        if self.kind == "word":
            return WORD_UNK
        raise LmError(f"character {token!r} not in model alphabet")

    def token_logp(self, token: str, history=()) -> float:
        """Natural-log p(token | history) with back-off and history truncation."""
        token = self.lookup(token)
        context = tuple(history[-(self.order - 1):]) if self.order > 1 else ()
        total = 0.0
        while True:
            stored = self.logp.get(context + (token,))
            if stored is not None:
                return total + stored
            if not context:
                raise LmError(f"token {token!r} missing from unigram table")
            total += self.bow.get(context, 0.0)
            context = context[1:]


def score_sequence(model, sequence, history=None) -> float:
    """Total natural-log probability of a token sequence.

    The history defaults to the model's start symbol, so a character model
    scores a word as p(c1|#)p(c2|#c1)... and a word model starts each
    sentence from <s>.  An explicit history continues a previous sequence:
    score_sequence(m, u + v) == score_sequence(m, u) +
    score_sequence(m, v, history=start + u) exactly.
    """
    tokens = tuple(sequence)
    if history is None:
        context = (model.start_symbol,)
    else:
        context = tuple(history)
    total = 0.0
    for token in tokens:
        total += model.token_logp(token, context)
        context = context + (model.lookup(token),)
    return total


def sentence_logprob(model, words) -> float:
    """Natural-log probability of a sentence including the end token."""
    if model.kind != "word":
        raise LmError("sentence scoring requires a word model")
    return score_sequence(model, tuple(words) + (WORD_END,))


def cross_entropy(model, words) -> float:
    """Per-token cross-entropy of a sentence in nats (end token included)."""
    return -sentence_logprob(model, words) / (len(tuple(words)) + 1)


def collect_ngram_counts(streams, order: int) -> dict:
    """Count n-grams of every length 1..order over padded token streams.

    Each stream carries a context-only start token at index 0; tokens from
    index 1 on are predicted.  Near the stream start only the n-grams that
    fully fit are counted, so histories never reach past the start token.
    Returns a flat {ngram tuple: count} dict mixing all orders.
    """
    counts = {}
    for stream in streams:
        for i in range(1, len(stream)):
            for k in range(1, min(order, i + 1) + 1):
                gram = tuple(stream[i - k + 1:i + 1])
                counts[gram] = counts.get(gram, 0) + 1
    return counts


def interpolated_prob(probs, bows, context, token) -> float:
    """Query a partially built probability table, following back-off weights.

    Used during training to fetch the fully interpolated lower-order
    probability; tables hold plain probabilities at this stage, not logs.
    """
    value = probs.get(tuple(context) + (token,))
    if value is not None:
        return value
    return bows[tuple(context)] * interpolated_prob(probs, bows, context[1:], token)
