"""Training loop, preprocessing, and checkpoint formats.

Training is single-threaded and deterministic for a fixed seed: class
balancing, batch shuffling, and every noise draw all come from one seeded
generator.  Fine-tuning reuses the same loop with an iteration budget
instead of an epoch count, starting from an existing model.
"""

from __future__ import annotations

import csv
import json
import struct
import warnings
from dataclasses import dataclass

import numpy as np

from ..domain import FingerClass, Hand
from ..imu import MIRROR_CHANNELS
from .network import (
    ChannelStats,
    ClassifierConfig,
    ClassifierError,
    VariationalNet,
    elbo_backward,
    elbo_loss,
)

#: Out-of-distribution label for windows that are not finger taps.
OOD = None


@dataclass(frozen=True)
class LabeledWindow:
    """One detector-shaped window with its class label (None = OOD)."""

    window: np.ndarray
    label: FingerClass | None
    hand: Hand


def mirror(window, hand: Hand):
    """Map a window into the left-hand frame (negate the cross-body axes)."""
    if hand is Hand.LEFT:
        return np.asarray(window, dtype=np.float64)
    out = np.array(window, dtype=np.float64)
    out[:, list(MIRROR_CHANNELS)] *= -1.0
    return out


def preprocess(window, hand: Hand, stats: ChannelStats):
    """Standardize one window with training statistics, mirroring right-hand
    signals into the shared frame first."""
    return (mirror(window, hand) - stats.mean) / stats.std


def compute_stats(dataset) -> ChannelStats:
    """Per-channel mean/std over the (mirrored) training windows."""
    stats = ChannelStats.from_windows([mirror(it.window, it.hand) for it in dataset])
    if stats.flagged:
        warnings.warn(f"zero-variance channels {stats.flagged}: divisor replaced by 1")
    return stats


def undersample(dataset, rng):
    """Balance every group (each finger class and OOD) to the minimum count."""
    groups = {}
    for item in dataset:
        groups.setdefault(item.label, []).append(item)
    for cls in FingerClass:
        if cls not in groups:
            raise ClassifierError(f"dataset has no {cls.name} samples")
    if OOD not in groups:
        raise ClassifierError("dataset has no OOD samples")
    floor = min(len(v) for v in groups.values())
    balanced = []
    for label in sorted(groups, key=lambda k: -1 if k is OOD else k.value):
        members = groups[label]
        picked = rng.permutation(len(members))[:floor]
        balanced.extend(members[i] for i in sorted(picked))
    return balanced


class Adam:
    def __init__(self, model, lr, beta1=0.9, beta2=0.999, eps=1e-8):
        self.lr = lr
        self.beta1 = beta1
        self.beta2 = beta2
        self.eps = eps
        self.t = 0
        self.m = {key: np.zeros_like(p) for key, p in self._items(model)}
        self.v = {key: np.zeros_like(p) for key, p in self._items(model)}

    @staticmethod
    def _items(model):
        for i, name, p in model.param_items():
            yield (i, name), p

    def step(self, model):
        self.t += 1
        bias1 = 1.0 - self.beta1**self.t
        bias2 = 1.0 - self.beta2**self.t
        for i, layer in enumerate(model.layers):
            for name in sorted(layer.params):
                g = layer.grads[name]
                key = (i, name)
                self.m[key] = self.beta1 * self.m[key] + (1.0 - self.beta1) * g
                self.v[key] = self.beta2 * self.v[key] + (1.0 - self.beta2) * g**2
                update = (self.m[key] / bias1) / (np.sqrt(self.v[key] / bias2) + self.eps)
                layer.params[name] -= self.lr * update


@dataclass
class TrainingStats:
    """Per-epoch mean loss components."""

    total: list
    kl: list
    data: list

    def write_csv(self, path):
        with open(path, "w", newline="", encoding="utf-8") as fp:
            writer = csv.writer(fp)
            writer.writerow(["epoch", "total", "kl", "data"])
            for epoch, row in enumerate(zip(self.total, self.kl, self.data)):
                writer.writerow([epoch, *(f"{v:.10g}" for v in row)])


def _preprocessed(dataset, stats):
    return [
        LabeledWindow(window=preprocess(it.window, it.hand, stats), label=it.label, hand=it.hand)
        for it in dataset
    ]


def train(dataset, config: ClassifierConfig, seed: int, init_model: VariationalNet | None = None,
          iterations: int | None = None):
    """Train (or fine-tune) on labeled + OOD windows.

    Returns ``(model, TrainingStats)``.  Windows are standardized with
    statistics from this dataset unless resuming, in which case the existing
    model statistics are kept (the fine-tuning path).  ``iterations``
    replaces the epoch budget with an exact minibatch-step count.
    """
    rng = np.random.default_rng(seed)
    balanced = undersample(dataset, rng)
    if init_model is None:
        stats = compute_stats(balanced)
        model = VariationalNet(config.architecture, seed=int(rng.integers(2**31)), stats=stats)
    else:
        model = init_model
        stats = model.stats
    prepped = _preprocessed(balanced, stats)

    n_batches = max(1, (len(prepped) + config.batch_size - 1) // config.batch_size)
    kl_weight = (config.kl_weight if config.kl_weight is not None
                 else config.kl_scale / n_batches)
    optimizer = Adam(model, lr=config.learning_rate)
    stats_log = TrainingStats(total=[], kl=[], data=[])

    steps_left = iterations
    epochs = config.epochs if iterations is None else int(np.ceil(iterations / n_batches))
    for _ in range(epochs):
        order = rng.permutation(len(prepped))
        sums = np.zeros(3)
        count = 0
        for b in range(n_batches):
            if steps_left is not None and steps_left <= 0:
                break
            idx = order[b * config.batch_size: (b + 1) * config.batch_size]
            if len(idx) == 0:
                continue
            batch = [prepped[i] for i in idx]
            total, kl, data = elbo_loss(model, batch, config, rng=rng, kl_weight=kl_weight)
            elbo_backward(model, config, kl_weight)
            optimizer.step(model)
            sums += (total, kl, data)
            count += 1
            if steps_left is not None:
                steps_left -= 1
        if count:
            epoch_mean = sums / count
            stats_log.total.append(float(epoch_mean[0]))
            stats_log.kl.append(float(epoch_mean[1]))
            stats_log.data.append(float(epoch_mean[2]))
    return model, stats_log


# ---------------------------------------------------------------------------
# Checkpoint format: magic, version, JSON header (config echo + stats),
# then float32 little-endian tensors in deterministic order.
# ---------------------------------------------------------------------------

_MAGIC = b"TAPC"
_VERSION = 1


def save_model(model: VariationalNet, config: ClassifierConfig, path):
    header = {
        "architecture": [list(s) for s in model.architecture],
        "prior_sigma": config.prior_sigma,
        "ensemble_train": config.ensemble_train,
        "ensemble_infer": config.ensemble_infer,
        "reject_threshold": config.reject_threshold,
        "stats_mean": list(model.stats.mean) if model.stats else None,
        "stats_std": list(model.stats.std) if model.stats else None,
        "stats_flagged": list(model.stats.flagged) if model.stats else [],
        "tensors": [],
    }
    blobs = []
    for i, layer in enumerate(model.layers):
        for kind, table in (("param", layer.params), ("buffer", layer.buffers)):
            for name in sorted(table):
                arr = table[name]
                header["tensors"].append([i, kind, name, list(arr.shape)])
                blobs.append(np.ascontiguousarray(arr, dtype="<f4").tobytes())
    payload = json.dumps(header).encode("utf-8")
    with open(path, "wb") as fp:
        fp.write(_MAGIC)
        fp.write(struct.pack("<BI", _VERSION, len(payload)))
        fp.write(payload)
        for blob in blobs:
            fp.write(blob)


def load_model(path) -> tuple[VariationalNet, ClassifierConfig]:
    with open(path, "rb") as fp:
        if fp.read(4) != _MAGIC:
            raise ClassifierError(f"{path}: not a model checkpoint")
        version, hlen = struct.unpack("<BI", fp.read(5))
        if version != _VERSION:
            raise ClassifierError(f"{path}: unsupported checkpoint version {version}")
        header = json.loads(fp.read(hlen).decode("utf-8"))
        stats = None
        if header["stats_mean"] is not None:
            stats = ChannelStats(
                mean=np.array(header["stats_mean"]),
                std=np.array(header["stats_std"]),
                flagged=tuple(header["stats_flagged"]),
            )
        architecture = tuple(tuple(s) for s in header["architecture"])
        model = VariationalNet(architecture, seed=0, stats=stats)
        for i, kind, name, shape in header["tensors"]:
            n = int(np.prod(shape)) if shape else 1
            arr = np.frombuffer(fp.read(4 * n), dtype="<f4").astype(np.float64).reshape(shape)
            table = model.layers[i].params if kind == "param" else model.layers[i].buffers
            if name not in table or list(table[name].shape) != list(shape):
                raise ClassifierError(f"{path}: tensor mismatch at layer {i} {name}")
            table[name] = arr
    config = ClassifierConfig(
        architecture=architecture,
        prior_sigma=header["prior_sigma"],
        ensemble_train=header["ensemble_train"],
        ensemble_infer=header["ensemble_infer"],
        reject_threshold=header["reject_threshold"],
    )
    return model, config
