"""Labeled-window dataset assembly from the synthetic generator.

Windows are cut at ground-truth burst peaks (both hands, so the mirroring
path is exercised); OOD windows come from generated non-tap events and from
plain noise floor.  Everything is raw here — standardization happens inside
training with statistics from the training split.
"""

from __future__ import annotations

import numpy as np

from ..domain import FingerClass, Hand
from ..imu import DetectorConfig, GeneratorSpec, detect_taps, extract_window, quiet_stream, synth_tap_stream
from dataclasses import replace

from .training import OOD, LabeledWindow


def windows_from_stream(stream, labels, window_len=128):
    return [
        LabeledWindow(
            window=extract_window(stream, lab.t, window_len),
            label=lab.finger,
            hand=lab.hand,
        )
        for lab in labels
    ]


def ood_windows_from_stream(stream, seed, n, window_len=128, threshold=10.0):
    """Detector triggers on a tap-free stream (jolts/swells), topped up with
    noise-floor windows if the detector fires fewer than ``n`` times."""
    rng = np.random.default_rng(seed)
    config = DetectorConfig(activation_threshold=threshold, window_len=window_len)
    candidates = detect_taps(stream, config)
    out = [
        LabeledWindow(window=c.window, label=OOD, hand=stream.hand) for c in candidates[:n]
    ]
    while len(out) < n:
        t = int(rng.integers(window_len, len(stream) - window_len))
        out.append(
            LabeledWindow(
                window=extract_window(stream, t, window_len), label=OOD, hand=stream.hand
            )
        )
    return out


def make_dataset(spec: GeneratorSpec, taps_per_class: int, ood_count: int, seed: int,
                 window_len: int = 128):
    """Balanced two-hand dataset: ``taps_per_class`` windows per finger class
    and ``ood_count`` OOD windows, split evenly across hands."""
    dataset = []
    per_hand = {Hand.LEFT: 0, Hand.RIGHT: 1}
    classes = tuple(FingerClass)
    for hand, offset in per_hand.items():
        n = (taps_per_class * len(classes)) // 2
        tap_spec = replace(spec, hand=hand, n_taps=n, classes=classes, ood_events=0)
        stream, labels = synth_tap_stream(tap_spec, seed=seed + offset)
        dataset.extend(windows_from_stream(stream, labels, window_len))

        ood_spec = replace(spec, hand=hand, n_taps=0, classes=(), ood_events=max(4, ood_count))
        ood_stream, _ = synth_tap_stream(ood_spec, seed=seed + 100 + offset)
        dataset.extend(
            ood_windows_from_stream(ood_stream, seed + 200 + offset, ood_count // 2, window_len)
        )
    return dataset


def split_dataset(dataset, holdout_fraction: float, seed: int):
    """Deterministic shuffled split into (train, holdout)."""
    rng = np.random.default_rng(seed)
    order = rng.permutation(len(dataset))
    n_hold = int(round(holdout_fraction * len(dataset)))
    hold_idx = set(int(i) for i in order[:n_hold])
    train = [dataset[i] for i in range(len(dataset)) if i not in hold_idx]
    hold = [dataset[i] for i in range(len(dataset)) if i in hold_idx]
    return train, hold
