"""Text corpora for language-model training.

A corpus is a sequence of sentences, each a tuple of lowercase words drawn
from the 27-character alphabet (a-z plus apostrophe).  Normalization strips
all other punctuation and drops any sentence containing numeric characters,
so a validated corpus is safe to feed to both the character-level and the
word-level model without further cleaning.
"""

import re
from dataclasses import dataclass

from tapentry.domain import ALPHABET

_WORD_CHARS = frozenset(ALPHABET)
_STRIP_RE = re.compile(r"[^a-z']+")
_DIGIT_RE = re.compile(r"[0-9]")


class LmError(ValueError):
    """Raised for invalid corpora, model parameters, or malformed model files."""


@dataclass(frozen=True)
class Corpus:
    """An immutable list of sentences, each a tuple of lowercase words."""

    sentences: tuple

    def __post_init__(self):
        object.__setattr__(self, "sentences", tuple(tuple(s) for s in self.sentences))
        for i, sentence in enumerate(self.sentences):
            for word in sentence:
                if not word:
                    raise LmError(f"sentence {i}: empty word")
                bad = set(word) - _WORD_CHARS
                if bad:
                    raise LmError(
                        f"sentence {i}: word {word!r} contains invalid "
                        f"characters {sorted(bad)}")

    def __len__(self):
        return len(self.sentences)

    def __iter__(self):
        return iter(self.sentences)

    def __getitem__(self, index):
        return self.sentences[index]

    def words(self):
        """Iterate over every word in corpus order."""
        for sentence in self.sentences:
            yield from sentence


def normalize_sentence(text: str):
    """Normalize one line of raw text into a word tuple, or None to drop it.

    Lowercases, removes punctuation except the apostrophe, and rejects the
    whole sentence when it contains any digit.  Returns None for dropped or
    empty sentences.
    """
    if _DIGIT_RE.search(text):
        return None
    words = _STRIP_RE.sub(" ", text.lower()).split()
    return tuple(words) if words else None


def corpus_from_text(lines) -> Corpus:
    """Build a corpus from raw text (a string or an iterable of lines),
    dropping unusable sentences."""
    if isinstance(lines, str):
        lines = lines.splitlines()
    sentences = []
    for line in lines:
        words = normalize_sentence(line)
        if words is not None:
            sentences.append(words)
    return Corpus(tuple(sentences))


def load_corpus(path, normalize: bool = True) -> Corpus:
    """Read a UTF-8 corpus file with one sentence per line.

    With normalize=False the file must already be clean; invalid characters
    raise instead of being stripped.
    """
    with open(path, encoding="utf-8") as handle:
        if normalize:
            return corpus_from_text(handle)
        return Corpus(tuple(tuple(line.split()) for line in handle if line.strip()))


def save_corpus(corpus: Corpus, path) -> None:
    """Write a corpus as UTF-8 text, one sentence per line."""
    with open(path, "w", encoding="utf-8") as handle:
        for sentence in corpus:
            handle.write(" ".join(sentence) + "\n")
