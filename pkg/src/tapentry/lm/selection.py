"""Cross-entropy-difference corpus selection.

Scores every query sentence by H_in(s) - H_query(s): the per-token
cross-entropy under an in-domain word model minus the cross-entropy under a
model trained on sentences sampled from the query corpus itself.  Sentences
scoring strictly above a threshold are selected; several thresholds can be
evaluated in one pass to carve out nested subsets.

The selection models use the fixed 0.7 absolute discount rather than
estimated discounts, which keeps tiny in-domain corpora from tripping the
degeneracy warning on every call.  A mixture of two in-domain components
(see `tapentry.lm.mixture`) can be passed in place of the trained model.
"""

from dataclasses import dataclass

import numpy as np

from tapentry.lm.backoff import cross_entropy
from tapentry.lm.corpus import Corpus, LmError
from tapentry.lm.kneser_ney import train_word_lm


@dataclass(frozen=True)
class SelectionResult:
    """Per-sentence scores plus the surviving corpus for each threshold."""

    scores: tuple
    selected: dict

    def __post_init__(self):
        object.__setattr__(self, "scores", tuple(float(s) for s in self.scores))


def select_corpus(query: Corpus, in_domain: Corpus, thresholds,
                  order: int = 4, seed: int = 0, sample_size=None,
                  in_domain_model=None) -> SelectionResult:
    """Select in-domain-like sentences from a query corpus.

    query           -- corpus to filter
    in_domain       -- corpus defining the target domain
    thresholds      -- score cutoffs; each yields one selected sub-corpus
    order           -- n-gram order of models trained here
    seed            -- RNG seed for the query-sentence sample
    sample_size     -- sentences drawn to train the query model
                       (default: the in-domain corpus size)
    in_domain_model -- pre-trained model (or mixture) overriding `in_domain`
    """
    thresholds = tuple(float(t) for t in thresholds)
    if not thresholds:
        raise LmError("threshold list is empty")
    if len(query) == 0 or len(in_domain) == 0:
        raise LmError("query and in-domain corpora must be nonempty")

    if in_domain_model is None:
        in_domain_model = train_word_lm(in_domain, order, discounts="fixed")

    rng = np.random.default_rng(seed)
    size = len(in_domain) if sample_size is None else int(sample_size)
    size = max(1, min(size, len(query)))
    indices = np.sort(rng.choice(len(query), size=size, replace=False))
    sample = Corpus(tuple(query[int(i)] for i in indices))
    query_model = train_word_lm(sample, order, discounts="fixed")

    scores = tuple(cross_entropy(in_domain_model, sentence)
                   - cross_entropy(query_model, sentence)
                   for sentence in query)
    selected = {
        threshold: Corpus(tuple(
            sentence for sentence, score in zip(query.sentences, scores)
            if score > threshold))
        for threshold in thresholds
    }
    return SelectionResult(scores, selected)
