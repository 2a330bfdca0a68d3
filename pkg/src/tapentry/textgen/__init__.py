"""Synthetic English corpus generation for desk-scale experiments.

``generate_corpus`` samples template sentences from a hand-written word
bank with rule-based morphology; ``desk_corpus`` and ``desk_phrases`` are
the seeded defaults used throughout training and evaluation, and
``vocabulary`` enumerates every word the generator can produce.
"""

from tapentry.textgen.generate import (
    desk_corpus,
    desk_phrases,
    generate_corpus,
    topics,
    vocabulary,
)

__all__ = [
    "desk_corpus",
    "desk_phrases",
    "generate_corpus",
    "topics",
    "vocabulary",
]
