"""Probabilistic text-entry decoder.

Beam search over character hypotheses for one word: each tap contributes a
probability distribution over the fingers of one hand, each finger carries a
fixed set of characters, and a character n-gram model supplies the linguistic
prior.  A hypothesis accumulates

    sum_i log p(char_i | char_1..i-1) + log p(finger(char_i) | obs_i)

and completed hypotheses that form vocabulary words are reranked with a word
n-gram model conditioned on the previously committed words.
"""

import math
from dataclasses import dataclass

from .domain import KeyFingerMap, TapObservation, TYPING_FINGERS
from .lm.backoff import CHAR_BOUNDARY, WORD_END, WORD_START, WORD_UNK


class DecodeError(ValueError):
    pass


@dataclass(frozen=True)
class DecoderConfig:
    """Knobs of the beam decoder.

    finger_prune: fingers with probability below this are not expanded
      (their mass is ignored, not redistributed).
    word_context: number of previously committed words conditioning the
      word-model term.
    """

    beam_width: int = 64
    finger_prune: float = 0.1
    max_suggestions: int = 10
    word_context: int = 3

    def __post_init__(self):
        if self.beam_width < 1:
            raise DecodeError("beam_width must be at least 1")
        if not 0.0 <= self.finger_prune < 1.0:
            raise DecodeError("finger_prune must lie in [0, 1)")
        if self.max_suggestions < 1:
            raise DecodeError("max_suggestions must be at least 1")
        if self.word_context < 0:
            raise DecodeError("word_context must be nonnegative")


@dataclass(frozen=True)
class SuggestionList:
    """Ranked decoding result for one word.

    entries: (word, total_logp) pairs sorted by descending score; only
      vocabulary words appear.  raw_best is the single best character
      sequence regardless of the vocabulary, for out-of-vocabulary entry.
    """

    entries: tuple = ()
    raw_best: str = ""

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple((str(w), float(lp)) for w, lp in self.entries))

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, index):
        return self.entries[index]

    @property
    def words(self) -> tuple:
        return tuple(word for word, _ in self.entries)


def _log(p: float) -> float:
    return math.log(p) if p > 0.0 else float("-inf")


def _expansions(obs: TapObservation, kfmap: KeyFingerMap, finger_prune: float) -> list:
    """(char, score_increment-without-LM) pairs reachable from one observation.

    Fingers below the pruning threshold are skipped.  If pruning removes
    every character-bearing finger, the single most probable one among them
    is used instead so the beam never dies.
    """
    bearing = [f for f in TYPING_FINGERS if kfmap.characters_for(obs.hand, f)]
    if not bearing:
        raise DecodeError(f"no characters mapped to the {obs.hand.name.lower()} hand")
    kept = [f for f in bearing if obs.prob(f) >= finger_prune]
    if not kept:
        kept = [max(bearing, key=obs.prob)]
    pairs = []
    for finger in kept:
        term = _log(obs.prob(finger))
        for char in kfmap.characters_for(obs.hand, finger):
            pairs.append((char, term))
    return pairs


def _check_context(context) -> tuple:
    context = tuple(context)
    for word in context:
        if not word or word != word.lower():
            raise DecodeError(f"context word {word!r} is not lowercase")
    return context


def decode(
    observations,
    context,
    kfmap: KeyFingerMap,
    char_lm,
    word_lm,
    config: DecoderConfig = None,
) -> SuggestionList:
    """Decode one word from a sequence of per-tap finger distributions.

    Runs a beam search over character sequences scored by the character
    model plus the finger log-probabilities, then keeps the completed
    hypotheses that are vocabulary words and adds the word-model
    log-probability given the committed context.  Ties break
    lexicographically so results are reproducible.
    """
    if config is None:
        config = DecoderConfig()
    observations = tuple(observations)
    if not observations:
        raise DecodeError("observation sequence is empty")
    context = _check_context(context)

    beam = [((), 0.0)]
    for obs in observations:
        pairs = _expansions(obs, kfmap, config.finger_prune)
        grown = []
        for prefix, logp in beam:
            history = (CHAR_BOUNDARY,) + prefix
            for char, term in pairs:
                score = logp + char_lm.token_logp(char, history) + term
                grown.append((prefix + (char,), score))
        grown.sort(key=lambda entry: (-entry[1], entry[0]))
        beam = grown[: config.beam_width]

    raw_best = "".join(beam[0][0])

    vocabulary = set(word_lm.vocab) - {WORD_START, WORD_END, WORD_UNK}
    word_history = (WORD_START,) + context[max(0, len(context) - config.word_context) :]
    scored = {}
    for prefix, logp in beam:
        word = "".join(prefix)
        if word in vocabulary and word not in scored:
            scored[word] = logp + word_lm.token_logp(word, word_history)
    ranked = sorted(scored.items(), key=lambda entry: (-entry[1], entry[0]))
    return SuggestionList(entries=tuple(ranked[: config.max_suggestions]), raw_best=raw_best)


def decode_single_char(
    obs: TapObservation,
    context_chars,
    kfmap: KeyFingerMap,
    char_lm,
    config: DecoderConfig = None,
) -> tuple:
    """Rank every character of the observation's hand for one tap.

    No finger pruning: the score is log p(char | context) plus the finger
    log-probability, over all character-bearing fingers.  context_chars are
    the characters of the current word already accepted.
    """
    if config is None:
        config = DecoderConfig()
    history = (CHAR_BOUNDARY,) + tuple(context_chars)
    ranked = []
    any_chars = False
    for finger in TYPING_FINGERS:
        chars = kfmap.characters_for(obs.hand, finger)
        if not chars:
            continue
        any_chars = True
        term = _log(obs.prob(finger))
        for char in chars:
            ranked.append((char, char_lm.token_logp(char, history) + term))
    if not any_chars:
        raise DecodeError(f"no characters mapped to the {obs.hand.name.lower()} hand")
    ranked.sort(key=lambda entry: (-entry[1], entry[0]))
    return tuple(ranked)
