"""Linear interpolation of n-gram models at the probability level.

A mixture scores p(y|h) = sum_i w_i * p_i(y|h) with convex weights, so the
combined conditional is itself a distribution.  Mixtures expose the same
scoring protocol as plain back-off models and can stand in for one wherever
only scoring is required (e.g. as the in-domain model of corpus selection).
"""

import math
from dataclasses import dataclass

from tapentry.lm.backoff import CHAR_BOUNDARY, WORD_START, WORD_UNK, sentence_logprob
from tapentry.lm.corpus import Corpus, LmError


@dataclass(frozen=True)
class MixtureModel:
    """Convex combination of same-kind n-gram models."""

    components: tuple
    weights: tuple

    def __post_init__(self):
        object.__setattr__(self, "components", tuple(self.components))
        object.__setattr__(self, "weights",
                           tuple(float(w) for w in self.weights))
        if not self.components:
            raise LmError("mixture needs at least one component")
        if len(self.components) != len(self.weights):
            raise LmError(f"{len(self.components)} components but "
                          f"{len(self.weights)} weights")
        kinds = {c.kind for c in self.components}
        if len(kinds) != 1:
            raise LmError(f"mixed model kinds {sorted(kinds)}")
        if min(self.weights) < 0 or abs(sum(self.weights) - 1.0) > 1e-9:
            raise LmError(f"weights must be convex, got {self.weights}")
        vocab = set()
        for component in self.components:
            vocab.update(component.vocab)
        object.__setattr__(self, "_vocab_set", frozenset(vocab))

    @property
    def kind(self) -> str:
        return self.components[0].kind

    @property
    def order(self) -> int:
        return max(c.order for c in self.components)

    @property
    def vocab(self) -> tuple:
        return tuple(sorted(self._vocab_set))

    @property
    def start_symbol(self) -> str:
        return CHAR_BOUNDARY if self.kind == "char" else WORD_START

    def lookup(self, token: str) -> str:
        if token in self._vocab_set:
            return token
        if self.kind == "word":
            return WORD_UNK
        raise LmError(f"character {token!r} not in mixture alphabet")

    def token_logp(self, token: str, history=()) -> float:
        active = [(w, c) for w, c in zip(self.weights, self.components) if w > 0]
        if len(active) == 1:
            weight, component = active[0]
            return math.log(weight) + component.token_logp(token, history)
        return math.log(sum(w * math.exp(c.token_logp(token, history))
                            for w, c in active))


def interpolate(models, weights) -> MixtureModel:
    """Combine models with the given convex weights."""
    return MixtureModel(tuple(models), tuple(weights))


def fit_mixture(model_a, model_b, heldout: Corpus, step: float = 0.05) -> MixtureModel:
    """Two-component interpolation with the weight fit on held-out data.

    Walks the weight grid {0, step, ..., 1} and keeps the mixture with the
    highest held-out log probability; ties go to the smaller weight on
    model_a.
    """
    if len(heldout) == 0:
        raise LmError("held-out corpus is empty")
    if not 0 < step <= 1:
        raise LmError(f"step must be in (0, 1], got {step}")
    best = None
    best_score = -math.inf
    steps = int(round(1.0 / step))
    for i in range(steps + 1):
        weight = min(i * step, 1.0)
        candidate = MixtureModel((model_a, model_b), (weight, 1.0 - weight))
        score = sum(sentence_logprob(candidate, sentence) for sentence in heldout)
        if score > best_score:
            best, best_score = candidate, score
    return best
