"""Shared data model: hands, finger classes, key-finger mapping, phrases.

The key-finger map assigns every character of the typing vocabulary
(a-z plus apostrophe) to the (hand, finger) that types it in standard
ten-finger touch typing.  It is deterministic: exactly one (hand, finger)
per character, which is what lets the decoder treat the character->finger
emission as a 0/1 table.  Thumbs and palms never carry characters; they
are reserved for control gestures.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable

import numpy as np


class Hand(Enum):
    LEFT = "L"
    RIGHT = "R"


class FingerClass(Enum):
    THUMB = 0
    INDEX = 1
    MIDDLE = 2
    RING = 3
    PINKY = 4
    PALM = 5


N_CLASSES = 6

#: Finger classes that may carry characters.
TYPING_FINGERS = (FingerClass.INDEX, FingerClass.MIDDLE, FingerClass.RING, FingerClass.PINKY)

#: The full typing vocabulary: lowercase latin letters plus apostrophe.
ALPHABET = "abcdefghijklmnopqrstuvwxyz'"

_DEFAULT_GROUPS = {
    (Hand.LEFT, FingerClass.PINKY): "qaz",
    (Hand.LEFT, FingerClass.RING): "wsx",
    (Hand.LEFT, FingerClass.MIDDLE): "edc",
    (Hand.LEFT, FingerClass.INDEX): "rtfgvb",
    (Hand.RIGHT, FingerClass.INDEX): "yuhjnm",
    (Hand.RIGHT, FingerClass.MIDDLE): "ik",
    (Hand.RIGHT, FingerClass.RING): "ol",
    (Hand.RIGHT, FingerClass.PINKY): "p'",
}


class DomainError(ValueError):
    pass


@dataclass(frozen=True)
class KeyFingerMap:
    """Character -> (hand, finger) assignment for the typing vocabulary."""

    assignment: dict

    def __post_init__(self):
        # frozen dataclass holding a dict: copy defensively so shared maps stay immutable
        object.__setattr__(self, "assignment", dict(self.assignment))

    def hand_finger(self, char: str) -> tuple[Hand, FingerClass]:
        try:
            return self.assignment[char]
        except KeyError:
            raise DomainError(f"unmapped character {char!r}") from None

    def __contains__(self, char: str) -> bool:
        return char in self.assignment

    @property
    def characters(self) -> frozenset:
        return frozenset(self.assignment)

    def characters_for(self, hand: Hand, finger: FingerClass) -> tuple:
        """Characters typed with (hand, finger), in sorted order."""
        if finger not in TYPING_FINGERS:
            raise DomainError(f"{finger.name} carries no characters")
        return tuple(sorted(c for c, hf in self.assignment.items() if hf == (hand, finger)))

    def validate(self) -> list[str]:
        """Return every invariant violation (empty list means the map is valid)."""
        violations = []
        for char in ALPHABET:
            if char not in self.assignment:
                violations.append(f"uncovered character {char}")
        for char, (hand, finger) in sorted(self.assignment.items()):
            if char not in ALPHABET:
                violations.append(f"character {char!r} outside vocabulary")
            if finger not in TYPING_FINGERS:
                violations.append(f"character {char} on non-typing class {finger.name}")
        return violations


def default_key_finger_map() -> KeyFingerMap:
    """Standard QWERTY touch-typing assignment (apostrophe on the right pinky)."""
    assignment = {}
    for (hand, finger), chars in _DEFAULT_GROUPS.items():
        for c in chars:
            assignment[c] = (hand, finger)
    return KeyFingerMap(assignment)


def characters_for(kfmap: KeyFingerMap, hand: Hand, finger: FingerClass) -> tuple:
    return kfmap.characters_for(hand, finger)


def validate_map(kfmap: KeyFingerMap) -> list[str]:
    return kfmap.validate()


_HAND_CODES = {"L": Hand.LEFT, "R": Hand.RIGHT}
_FINGER_NAMES = {f.name.lower(): f for f in TYPING_FINGERS}


def read_key_finger_map(path) -> KeyFingerMap:
    """Parse a map file: one `<char> <L|R> <index|middle|ring|pinky>` line per character."""
    assignment = {}
    with open(path, encoding="utf-8") as fp:
        for lineno, raw in enumerate(fp, 1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split()
            if len(parts) != 3:
                raise DomainError(f"{path}:{lineno}: expected '<char> <L|R> <finger>'")
            char, hand_code, finger_name = parts
            if len(char) != 1:
                raise DomainError(f"{path}:{lineno}: key must be a single character")
            if hand_code not in _HAND_CODES:
                raise DomainError(f"{path}:{lineno}: unknown hand {hand_code!r}")
            if finger_name not in _FINGER_NAMES:
                raise DomainError(f"{path}:{lineno}: unknown finger {finger_name!r}")
            if char in assignment:
                raise DomainError(f"{path}:{lineno}: duplicate character {char!r}")
            assignment[char.lower()] = (_HAND_CODES[hand_code], _FINGER_NAMES[finger_name])
    return KeyFingerMap(assignment)


def write_key_finger_map(kfmap: KeyFingerMap, path) -> None:
    with open(path, "w", encoding="utf-8") as fp:
        fp.write("# <char> <L|R> <index|middle|ring|pinky>\n")
        for char in sorted(kfmap.assignment):
            hand, finger = kfmap.assignment[char]
            fp.write(f"{char} {hand.value} {finger.name.lower()}\n")


@dataclass(frozen=True)
class TapObservation:
    """One classified tap: a probability distribution over the six classes of one hand."""

    hand: Hand
    probs: np.ndarray
    timestamp: int = 0

    def __post_init__(self):
        probs = np.asarray(self.probs, dtype=np.float64)
        if probs.shape != (N_CLASSES,):
            raise DomainError(f"probs must have shape ({N_CLASSES},), got {probs.shape}")
        if np.any(probs < 0):
            raise DomainError("probs must be nonnegative")
        if abs(float(probs.sum()) - 1.0) > 1e-9:
            raise DomainError(f"probs must sum to 1 (got {probs.sum()!r})")
        probs.setflags(write=False)
        object.__setattr__(self, "probs", probs)

    def prob(self, finger: FingerClass) -> float:
        return float(self.probs[finger.value])

    @property
    def top_class(self) -> FingerClass:
        return FingerClass(int(np.argmax(self.probs)))


@dataclass(frozen=True)
class Rejected:
    """A tap candidate the classifier declined to label (max probability
    under the rejection threshold).  Carries the averaged probabilities for
    diagnostics; sessions treat it as silence."""

    hand: Hand
    probs: np.ndarray
    timestamp: float = 0.0

    def __post_init__(self):
        probs = np.asarray(self.probs, dtype=np.float64)
        probs.setflags(write=False)
        object.__setattr__(self, "probs", probs)


def one_hot_observation(hand: Hand, finger: FingerClass, timestamp: int = 0) -> TapObservation:
    probs = np.zeros(N_CLASSES)
    probs[finger.value] = 1.0
    return TapObservation(hand=hand, probs=probs, timestamp=timestamp)


_PHRASE_CHARS = frozenset(ALPHABET + " ")


@dataclass(frozen=True)
class PhraseSet:
    """Lowercase evaluation phrases over the typing vocabulary plus space."""

    phrases: tuple

    def __post_init__(self):
        object.__setattr__(self, "phrases", tuple(self.phrases))
        for phrase in self.phrases:
            if phrase != phrase.strip() or "  " in phrase or not phrase:
                raise DomainError(f"malformed phrase {phrase!r}")
            bad = set(phrase) - _PHRASE_CHARS
            if bad:
                raise DomainError(f"phrase {phrase!r} has characters outside the vocabulary: {sorted(bad)}")

    def __iter__(self):
        return iter(self.phrases)

    def __len__(self):
        return len(self.phrases)

    def words(self) -> list[str]:
        return [w for phrase in self.phrases for w in phrase.split(" ")]


def load_phrase_set(path) -> PhraseSet:
    with open(path, encoding="utf-8") as fp:
        phrases = [line.strip() for line in fp if line.strip()]
    return PhraseSet(tuple(phrases))
