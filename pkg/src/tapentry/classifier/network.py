"""Network assembly, the training objective, and ensemble prediction.

Architectures are declarative tuples so tests can build tiny networks:

    ("conv", in_ch, out_ch, bayesian)
    ("bn", channels)
    ("lrelu",)
    ("pool",)
    ("flatten",)
    ("dense", in_dim, out_dim, bayesian)

The objective is the usual minibatch bound: kl_weight * KL[q || prior] plus
the mean per-sample data term, where the data term is cross entropy against
a one-hot target for finger-labeled windows and against the uniform
distribution over all six classes for out-of-distribution windows.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ..domain import N_CLASSES, FingerClass, Hand, Rejected, TapObservation
from . import layers as L


class ClassifierError(ValueError):
    pass


def default_architecture(bayesian: bool = True, channels=(16, 16, 24, 24), dense=64,
                         window_len: int = 128):
    """Two conv blocks (two length-3 convs + pool each) and two dense layers.

    ``bayesian=True`` places variational layers on the first convolution and
    the final dense layer; everything in between stays deterministic.
    ``bayesian=False`` is the same shape with no variational layers at all.
    """
    c1, c2, c3, c4 = channels
    flat = (window_len // 4) * c4
    return (
        ("conv", 6, c1, bayesian),
        ("bn", c1),
        ("lrelu",),
        ("conv", c1, c2, False),
        ("bn", c2),
        ("lrelu",),
        ("pool",),
        ("conv", c2, c3, False),
        ("bn", c3),
        ("lrelu",),
        ("conv", c3, c4, False),
        ("bn", c4),
        ("lrelu",),
        ("pool",),
        ("flatten",),
        ("dense", flat, dense, False),
        ("lrelu",),
        ("dense", dense, N_CLASSES, bayesian),
    )


def full_architecture(bayesian: bool = True, window_len: int = 128):
    """Five conv blocks, closer to the original depth; not the test default."""
    chans = [(6, 32), (32, 48), (48, 64), (64, 64), (64, 96)]
    spec = []
    for i, (cin, cout) in enumerate(chans):
        spec += [
            ("conv", cin, cout, bayesian and i == 0),
            ("bn", cout),
            ("lrelu",),
            ("conv", cout, cout, False),
            ("bn", cout),
            ("lrelu",),
            ("pool",),
        ]
    flat = (window_len // 32) * chans[-1][1]
    spec += [
        ("flatten",),
        ("dense", flat, 128, False),
        ("lrelu",),
        ("dense", 128, N_CLASSES, bayesian),
    ]
    return tuple(spec)


@dataclass(frozen=True)
class ClassifierConfig:
    architecture: tuple = field(default_factory=default_architecture)
    prior_sigma: float = 0.1
    ensemble_train: int = 10
    ensemble_infer: int = 128
    reject_threshold: float = 0.3
    epochs: int = 30
    batch_size: int = 64
    kl_weight: float | None = None  # None -> kl_scale / batches-per-epoch
    kl_scale: float = 1.0  # tempering factor applied to the automatic kl_weight
    learning_rate: float = 1e-3

    def __post_init__(self):
        if not 0.0 < self.reject_threshold < 1.0:
            raise ClassifierError("reject_threshold must be in (0, 1)")
        if self.ensemble_train < 1 or self.ensemble_infer < 1:
            raise ClassifierError("ensemble sizes must be >= 1")
        if self.prior_sigma <= 0:
            raise ClassifierError("prior_sigma must be positive")
        if self.batch_size < 1 or self.epochs < 0:
            raise ClassifierError("bad epoch/batch settings")
        if self.kl_scale <= 0:
            raise ClassifierError("kl_scale must be positive")


def _build_layer(spec, rng):
    kind = spec[0]
    if kind == "conv":
        _, cin, cout, bayes = spec
        return (L.VariationalConv1d if bayes else L.Conv1d)(cin, cout, rng)
    if kind == "dense":
        _, din, dout, bayes = spec
        return (L.VariationalDense if bayes else L.Dense)(din, dout, rng)
    if kind == "bn":
        return L.BatchNorm(spec[1])
    if kind == "lrelu":
        return L.LeakyReLU()
    if kind == "pool":
        return L.MaxPool()
    if kind == "flatten":
        return L.Flatten()
    raise ClassifierError(f"unknown layer kind {kind!r}")


@dataclass
class ChannelStats:
    """Per-channel standardization statistics from the training set."""

    mean: np.ndarray
    std: np.ndarray
    flagged: tuple = ()  # channels whose std was ~0 and replaced by 1

    @classmethod
    def from_windows(cls, windows):
        stacked = np.concatenate([np.asarray(w) for w in windows], axis=0)
        mean = stacked.mean(axis=0)
        std = stacked.std(axis=0)
        flagged = tuple(int(i) for i in np.nonzero(std < 1e-12)[0])
        safe = std.copy()
        safe[list(flagged)] = 1.0
        return cls(mean=mean, std=safe, flagged=flagged)


class VariationalNet:
    """Ordered layer stack built from an architecture spec.

    Instances are cheap to build; ``stats`` is attached by the trainer once
    standardization statistics exist.  After training, treat the model as
    immutable — prediction never mutates parameters or buffers.
    """

    def __init__(self, architecture, seed=0, stats: ChannelStats | None = None):
        self.architecture = tuple(tuple(s) for s in architecture)
        rng = np.random.default_rng(seed)
        self.layers = [_build_layer(s, rng) for s in self.architecture]
        self.stats = stats

    def forward(self, x, training=True, rng=None):
        for layer in self.layers:
            x = layer.forward(x, training=training, rng=rng)
        return x

    def backward(self, dlogits):
        grad = dlogits
        for layer in reversed(self.layers):
            grad = layer.backward(grad)
        return grad

    def kl(self, prior_sigma):
        return sum(layer.kl(prior_sigma) for layer in self.layers)

    def add_kl_grads(self, prior_sigma, scale):
        for layer in self.layers:
            layer.add_kl_grads(prior_sigma, scale)

    def n_params(self):
        return sum(layer.n_params() for layer in self.layers)

    def param_items(self):
        """(layer index, name, array) for every parameter, in network order."""
        for i, layer in enumerate(self.layers):
            for name in sorted(layer.params):
                yield i, name, layer.params[name]

    def freeze_noise(self):
        """Pin each variational layer to its most recent noise draw."""
        for layer in self.layers:
            if layer.bayesian:
                layer.frozen_noise = layer.last_noise

    def thaw_noise(self):
        for layer in self.layers:
            if layer.bayesian:
                layer.frozen_noise = None


def softmax(logits):
    shifted = logits - logits.max(axis=-1, keepdims=True)
    e = np.exp(shifted)
    return e / e.sum(axis=-1, keepdims=True)


def batch_targets(batch):
    """Soft targets: one-hot for finger labels, uniform for OOD windows."""
    targets = np.zeros((len(batch), N_CLASSES))
    for i, item in enumerate(batch):
        if item.label is None:
            targets[i] = 1.0 / N_CLASSES
        else:
            targets[i, item.label.value] = 1.0
    return targets


def _check_finite(model, value):
    if np.isfinite(value):
        return
    for i, layer in enumerate(model.layers):
        for name, arr in layer.params.items():
            if not np.all(np.isfinite(arr)):
                raise ClassifierError(f"non-finite parameters in layer {i} ({name})")
    raise ClassifierError("non-finite loss")


def elbo_loss(model, batch, config: ClassifierConfig, rng=None, kl_weight=None):
    """(total, kl_term, data_term) for one minibatch.

    ``kl_term`` is the full unweighted KL[q || prior]; the total applies the
    effective weight (explicit argument, else config, else 1).  The data
    term is the batch mean of the per-sample cross entropy against the soft
    targets.  Pass a seeded ``rng`` for reproducible sampling.
    """
    if len(batch) == 0:
        raise ClassifierError("empty batch")
    if kl_weight is None:
        kl_weight = config.kl_weight if config.kl_weight is not None else 1.0
    x = np.stack([np.asarray(item.window, dtype=np.float64) for item in batch])
    targets = batch_targets(batch)
    logits = model.forward(x, training=True, rng=rng)
    probs = softmax(logits)
    log_probs = np.log(np.clip(probs, 1e-300, None))
    data = float(-(targets * log_probs).sum(axis=1).mean())
    kl = model.kl(config.prior_sigma)
    total = kl_weight * kl + data
    _check_finite(model, total)
    model._last_forward = (x, targets, probs)
    return total, kl, data


def elbo_backward(model, config: ClassifierConfig, kl_weight):
    """Backpropagate the objective evaluated by the latest elbo_loss call."""
    _, targets, probs = model._last_forward
    dlogits = (probs - targets) / len(targets)
    model.backward(dlogits)
    model.add_kl_grads(config.prior_sigma, kl_weight)


def ensemble_probs(model, window, n, rng):
    """(n, 6) softmax outputs from n stochastic passes over one window."""
    x = np.broadcast_to(np.asarray(window, dtype=np.float64), (n,) + np.shape(window)).copy()
    logits = model.forward(x, training=False, rng=rng)
    return softmax(logits)


def predict(model, window, hand: Hand, config: ClassifierConfig, rng=None, timestamp=0.0):
    """Ensemble-averaged posterior for one preprocessed window.

    Averages ``config.ensemble_infer`` stochastic passes; if the averaged
    maximum falls below the rejection threshold the candidate is Rejected.
    """
    if rng is None:
        rng = np.random.default_rng(0)
    members = ensemble_probs(model, window, config.ensemble_infer, rng)
    mean = members.mean(axis=0)
    mean = mean / mean.sum()
    if mean.max() < config.reject_threshold:
        return Rejected(hand=hand, probs=mean, timestamp=timestamp)
    return TapObservation(hand=hand, probs=mean, timestamp=timestamp)
