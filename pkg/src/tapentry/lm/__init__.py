"""N-gram language models for tap-typing decoding.

Character-level Witten-Bell models feed the beam-search decoder one
conditional at a time; word-level modified Kneser-Ney models rerank
complete words and drive cross-entropy-difference corpus selection.
Models persist in the standard ARPA text format.
"""

from tapentry.lm.arpa import read_arpa, write_arpa
from tapentry.lm.backoff import (
    CHAR_BOUNDARY,
    WORD_END,
    WORD_START,
    WORD_UNK,
    BackoffModel,
    collect_ngram_counts,
    cross_entropy,
    score_sequence,
    sentence_logprob,
)
from tapentry.lm.corpus import (
    Corpus,
    LmError,
    corpus_from_text,
    load_corpus,
    normalize_sentence,
    save_corpus,
)
from tapentry.lm.kneser_ney import DEFAULT_VOCAB_CAP, FIXED_DISCOUNT, train_word_lm
from tapentry.lm.mixture import MixtureModel, fit_mixture, interpolate
from tapentry.lm.selection import SelectionResult, select_corpus
from tapentry.lm.witten_bell import CHAR_VOCAB, DEFAULT_CHAR_ORDER, train_char_lm

__all__ = [
    "BackoffModel",
    "CHAR_BOUNDARY",
    "CHAR_VOCAB",
    "Corpus",
    "DEFAULT_CHAR_ORDER",
    "DEFAULT_VOCAB_CAP",
    "FIXED_DISCOUNT",
    "LmError",
    "MixtureModel",
    "SelectionResult",
    "WORD_END",
    "WORD_START",
    "WORD_UNK",
    "collect_ngram_counts",
    "corpus_from_text",
    "cross_entropy",
    "fit_mixture",
    "interpolate",
    "load_corpus",
    "normalize_sentence",
    "read_arpa",
    "save_corpus",
    "score_sequence",
    "select_corpus",
    "sentence_logprob",
    "train_char_lm",
    "train_word_lm",
    "write_arpa",
]
