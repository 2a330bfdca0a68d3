"""Classification quality metrics: macro F1, NLL, and 15-bin ECE."""

from __future__ import annotations

import numpy as np

from ..domain import N_CLASSES
from .network import ClassifierError

ECE_BINS = 15


def _as_prob_matrix(predictions):
    rows = []
    for p in predictions:
        rows.append(np.asarray(getattr(p, "probs", p), dtype=np.float64))
    return np.stack(rows)


def _as_label_array(labels):
    return np.array([getattr(lab, "value", lab) for lab in labels], dtype=np.int64)


def macro_f1(predictions, labels) -> float:
    """Unweighted mean of per-class F1 over the classes present in labels."""
    probs = _as_prob_matrix(predictions)
    y = _as_label_array(labels)
    top = probs.argmax(axis=1)
    scores = []
    for cls in range(N_CLASSES):
        support = y == cls
        if not support.any():
            continue
        tp = float(np.sum(support & (top == cls)))
        fp = float(np.sum(~support & (top == cls)))
        fn = float(np.sum(support & (top != cls)))
        denom = 2 * tp + fp + fn
        scores.append(2 * tp / denom if denom > 0 else 0.0)
    return float(np.mean(scores))


def nll(predictions, labels) -> float:
    """Mean negative log probability of the true class."""
    probs = _as_prob_matrix(predictions)
    y = _as_label_array(labels)
    picked = probs[np.arange(len(y)), y]
    return float(-np.log(np.clip(picked, 1e-12, None)).mean())


def ece(predictions, labels, n_bins: int = ECE_BINS) -> float:
    """Expected calibration error with equal-width confidence bins.

    Confidence is the max class probability; each bin contributes its sample
    fraction times |accuracy - mean confidence|.
    """
    probs = _as_prob_matrix(predictions)
    y = _as_label_array(labels)
    confidence = probs.max(axis=1)
    correct = probs.argmax(axis=1) == y
    bins = np.clip((confidence * n_bins).astype(np.int64), 0, n_bins - 1)
    total = 0.0
    n = len(y)
    for b in range(n_bins):
        mask = bins == b
        if not mask.any():
            continue
        acc = float(correct[mask].mean())
        conf = float(confidence[mask].mean())
        total += mask.sum() / n * abs(acc - conf)
    return total


def metrics(predictions, labels) -> dict:
    """{"macro_f1", "nll", "ece"} from probability predictions and labels."""
    predictions = list(predictions)
    labels = list(labels)
    if not predictions or len(predictions) != len(labels):
        raise ClassifierError("need matching, nonempty predictions and labels")
    return {
        "macro_f1": macro_f1(predictions, labels),
        "nll": nll(predictions, labels),
        "ece": ece(predictions, labels),
    }
