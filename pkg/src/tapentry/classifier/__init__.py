"""Calibrated per-hand finger classification."""

from .confusion import ConfusionClassifier, confusion_classifier, typing_confusion_matrix
from .dataset import make_dataset, ood_windows_from_stream, split_dataset, windows_from_stream
from .metrics import ece, macro_f1, metrics, nll
from .network import (
    ChannelStats,
    ClassifierConfig,
    ClassifierError,
    VariationalNet,
    default_architecture,
    elbo_backward,
    elbo_loss,
    ensemble_probs,
    full_architecture,
    predict,
    softmax,
)
from .training import (
    OOD,
    LabeledWindow,
    TrainingStats,
    compute_stats,
    load_model,
    mirror,
    preprocess,
    save_model,
    train,
    undersample,
)

__all__ = [
    "ChannelStats", "ClassifierConfig", "ClassifierError", "ConfusionClassifier",
    "LabeledWindow", "OOD", "TrainingStats", "VariationalNet", "compute_stats",
    "confusion_classifier", "default_architecture", "ece", "elbo_backward", "elbo_loss",
    "ensemble_probs", "full_architecture", "load_model", "macro_f1", "make_dataset",
    "metrics", "mirror", "nll", "ood_windows_from_stream", "predict", "preprocess",
    "save_model", "softmax", "split_dataset", "train", "typing_confusion_matrix",
    "undersample", "windows_from_stream",
]
