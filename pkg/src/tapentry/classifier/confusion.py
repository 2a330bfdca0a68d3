"""Confusion-matrix stand-in classifiers for controlled decoder experiments.

Instead of running the network, sample a predicted class from a known 6x6
confusion matrix and emit either the honest posterior implied by that matrix
(calibrated) or a one-hot at the sampled class (overconfident).  Both have
the same top-1 behavior; only the probability mass they report differs,
which is exactly the axis the decoder comparisons vary.
"""

from __future__ import annotations

import numpy as np

from ..domain import N_CLASSES, FingerClass, Hand, TapObservation, TYPING_FINGERS
from .network import ClassifierError


class ConfusionClassifier:
    """Callable true class -> TapObservation, seeded."""

    def __init__(self, confusion, mode: str, seed: int):
        confusion = np.asarray(confusion, dtype=np.float64)
        if confusion.shape != (N_CLASSES, N_CLASSES):
            raise ClassifierError(f"confusion matrix must be 6x6, got {confusion.shape}")
        if np.any(confusion < 0) or np.any(np.abs(confusion.sum(axis=1) - 1.0) > 1e-9):
            raise ClassifierError("confusion matrix rows must be probability distributions")
        if mode not in ("calibrated", "overconfident"):
            raise ClassifierError(f"unknown mode {mode!r}")
        self.confusion = confusion
        self.mode = mode
        self.rng = np.random.default_rng(seed)
        # posterior over the true class given a predicted class, uniform prior:
        # column-normalize the confusion matrix
        cols = confusion.sum(axis=0)
        self.posterior = confusion / np.where(cols > 0, cols, 1.0)

    def __call__(self, true: FingerClass, hand: Hand = Hand.LEFT, timestamp=0.0) -> TapObservation:
        predicted = int(self.rng.choice(N_CLASSES, p=self.confusion[true.value]))
        if self.mode == "overconfident":
            probs = np.zeros(N_CLASSES)
            probs[predicted] = 1.0
        else:
            probs = self.posterior[:, predicted].copy()
            probs = probs / probs.sum()
        return TapObservation(hand=hand, probs=probs, timestamp=timestamp)


def confusion_classifier(confusion, mode: str, seed: int) -> ConfusionClassifier:
    return ConfusionClassifier(confusion, mode, seed)


def typing_confusion_matrix(accuracy: float) -> np.ndarray:
    """6x6 matrix whose errors live in the confusable middle/ring pair.

    ``accuracy`` is the mean diagonal over the four typing fingers: index
    and pinky stay exact while middle and ring trade ``2 * (1 - accuracy)``
    with each other, concentrating the error mass the way physically
    adjacent fingers actually get confused.  Thumb and palm stay exact.
    Uniformly spreading the error mass instead would starve every wrong
    finger below a useful posterior weight, hiding the calibration signal
    the decoder experiments measure.
    """
    if not 0.5 < accuracy <= 1.0:
        raise ClassifierError("accuracy must be in (0.5, 1]")
    cross = 2.0 * (1.0 - accuracy)
    matrix = np.eye(N_CLASSES)
    middle = FingerClass.MIDDLE.value
    ring = FingerClass.RING.value
    matrix[middle, middle] = matrix[ring, ring] = 1.0 - cross
    matrix[middle, ring] = matrix[ring, middle] = cross
    return matrix
