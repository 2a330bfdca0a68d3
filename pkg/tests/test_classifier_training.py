"""Training-loop behaviour: balancing, determinism, learning on separable
data, OOD rejection, checkpoints, and the fine-tuning path."""

import csv

import numpy as np
import pytest

from tapentry.classifier import (
    ClassifierConfig,
    ClassifierError,
    LabeledWindow,
    OOD,
    ensemble_probs,
    predict,
    preprocess,
)
from tapentry.classifier.dataset import make_dataset, split_dataset
from tapentry.classifier.metrics import macro_f1
from tapentry.classifier.training import (
    TrainingStats,
    load_model,
    save_model,
    train,
    undersample,
)
from tapentry.domain import FingerClass, Hand, Rejected
from tapentry.imu import GeneratorSpec

SMALL_ARCH = (
    ("conv", 6, 4, True),
    ("bn", 4),
    ("lrelu",),
    ("pool",),
    ("flatten",),
    ("dense", 32, 6, True),
)


def toy_windows(seed, per_class, ood, noise=1.0):
    """Trivially separable windows: class k raises the mean of channel k."""
    rng = np.random.default_rng(seed)
    out = []
    for cls in FingerClass:
        for _ in range(per_class):
            window = rng.normal(0, noise, size=(16, 6))
            window[:, cls.value] += 3.0
            out.append(LabeledWindow(window=window, label=cls, hand=Hand.LEFT))
    for _ in range(ood):
        out.append(
            LabeledWindow(window=rng.normal(0, noise, size=(16, 6)), label=OOD, hand=Hand.LEFT)
        )
    return out


def small_config(**overrides):
    params = dict(
        architecture=SMALL_ARCH,
        epochs=50,
        batch_size=16,
        learning_rate=1e-2,
        kl_scale=0.1,
        ensemble_infer=64,
    )
    params.update(overrides)
    return ClassifierConfig(**params)


@pytest.fixture(scope="module")
def trained():
    config = small_config()
    model, log = train(toy_windows(0, per_class=20, ood=20), config, seed=5)
    return model, log, config


def test_undersample_balances_all_groups():
    rng = np.random.default_rng(0)
    dataset = toy_windows(1, per_class=5, ood=9)
    dataset += toy_windows(2, per_class=2, ood=0)  # unbalance the fingers
    balanced = undersample(dataset, rng)
    counts = {}
    for item in balanced:
        counts[item.label] = counts.get(item.label, 0) + 1
    assert set(counts.values()) == {7}  # min group: 7 of each finger class
    assert len(balanced) == 7 * 7


def test_undersample_missing_class_raises():
    dataset = [it for it in toy_windows(0, 4, 4) if it.label is not FingerClass.MIDDLE]
    with pytest.raises(ClassifierError, match="MIDDLE"):
        undersample(dataset, np.random.default_rng(0))
    with pytest.raises(ClassifierError, match="OOD"):
        undersample([it for it in toy_windows(0, 4, 4) if it.label is not OOD],
                    np.random.default_rng(0))


def test_train_missing_class_raises():
    dataset = [it for it in toy_windows(0, 6, 6) if it.label is not FingerClass.THUMB]
    with pytest.raises(ClassifierError, match="THUMB"):
        train(dataset, small_config(epochs=1), seed=0)


def test_loss_curve_finite_and_decreasing(trained):
    _, log, config = trained
    assert len(log.total) == config.epochs
    assert len(log.kl) == len(log.data) == len(log.total)
    for series in (log.total, log.kl, log.data):
        assert all(np.isfinite(v) for v in series)
    assert log.total[-1] < log.total[0]
    assert np.mean(log.total[-5:]) < np.mean(log.total[:5])


def test_training_is_seed_deterministic():
    dataset = toy_windows(0, per_class=8, ood=8)
    config = small_config(epochs=4)
    model_a, log_a = train(dataset, config, seed=11)
    model_b, log_b = train(dataset, config, seed=11)
    assert log_a.total == log_b.total
    probe = preprocess(toy_windows(9, 1, 0)[0].window, Hand.LEFT, model_a.stats)
    pa = ensemble_probs(model_a, probe, 8, np.random.default_rng(3))
    pb = ensemble_probs(model_b, probe, 8, np.random.default_rng(3))
    np.testing.assert_array_equal(pa, pb)
    _, log_c = train(dataset, config, seed=12)
    assert log_a.total != log_c.total


def test_trained_model_separates_easy_classes(trained):
    model, _, config = trained
    probs, labels = [], []
    for i, item in enumerate(toy_windows(1, per_class=8, ood=0)):
        x = preprocess(item.window, item.hand, model.stats)
        out = predict(model, x, item.hand, config, rng=np.random.default_rng(i))
        probs.append(out.probs)
        labels.append(item.label.value)
    assert macro_f1(np.array(probs), np.array(labels)) >= 0.8


def test_trained_model_rejects_ood_windows(trained):
    model, _, config = trained
    holdout = toy_windows(2, per_class=8, ood=12)
    rejected = {True: 0, False: 0}
    totals = {True: 0, False: 0}
    for i, item in enumerate(holdout):
        x = preprocess(item.window, item.hand, model.stats)
        out = predict(model, x, item.hand, config, rng=np.random.default_rng(i))
        is_ood = item.label is OOD
        totals[is_ood] += 1
        rejected[is_ood] += isinstance(out, Rejected)
    assert rejected[True] >= 0.75 * totals[True]  # noise-only windows bounce
    assert rejected[False] <= 0.15 * totals[False]  # real taps pass through


def test_checkpoint_round_trip(tmp_path, trained):
    model, _, config = trained
    path = tmp_path / "model.tapc"
    save_model(model, config, path)
    loaded, loaded_config = load_model(path)

    assert loaded_config.reject_threshold == config.reject_threshold
    assert loaded_config.architecture == tuple(config.architecture)
    np.testing.assert_allclose(loaded.stats.mean, model.stats.mean, atol=1e-6)

    probe = preprocess(toy_windows(9, 1, 0)[0].window, Hand.LEFT, model.stats)
    original = ensemble_probs(model, probe, 16, np.random.default_rng(7))
    restored = ensemble_probs(loaded, probe, 16, np.random.default_rng(7))
    np.testing.assert_allclose(original, restored, atol=1e-4)  # float32 storage

    # a second load is bit-identical to the first
    again, _ = load_model(path)
    np.testing.assert_array_equal(
        ensemble_probs(again, probe, 16, np.random.default_rng(7)), restored
    )


def test_load_rejects_non_checkpoint(tmp_path):
    path = tmp_path / "junk.tapc"
    path.write_bytes(b"not a checkpoint at all")
    with pytest.raises(ClassifierError, match="not a model checkpoint"):
        load_model(path)


def test_training_stats_csv_round_trip(tmp_path):
    log = TrainingStats(total=[3.25, 2.5], kl=[1.25, 1.0], data=[2.0, 1.5])
    path = tmp_path / "loss.csv"
    log.write_csv(path)
    with open(path, newline="", encoding="utf-8") as fp:
        rows = list(csv.reader(fp))
    assert rows[0] == ["epoch", "total", "kl", "data"]
    assert [int(r[0]) for r in rows[1:]] == [0, 1]
    assert [float(r[1]) for r in rows[1:]] == pytest.approx(log.total)
    assert [float(r[2]) for r in rows[1:]] == pytest.approx(log.kl)
    assert [float(r[3]) for r in rows[1:]] == pytest.approx(log.data)


def test_finetune_runs_exact_iterations(trained):
    model, _, config = trained
    before = [arr.copy() for _, _, arr in model.param_items()]
    stats_before = model.stats
    dataset = toy_windows(3, per_class=20, ood=20)
    tuned, log = train(dataset, config, seed=8, init_model=model, iterations=3)
    # 140 balanced windows / batch 16 -> 9 steps per epoch, so 3 steps fit in 1
    assert len(log.total) == 1
    assert tuned.stats is stats_before  # standardization comes from the base run
    after = [arr for _, _, arr in tuned.param_items()]
    assert any(not np.array_equal(b, a) for b, a in zip(before, after))


def test_make_dataset_structure():
    spec = GeneratorSpec(noise_std=0.3)
    dataset = make_dataset(spec, taps_per_class=4, ood_count=8, seed=3, window_len=64)
    assert len(dataset) == 4 * 6 + 8
    counts = {}
    hands = set()
    for item in dataset:
        counts[item.label] = counts.get(item.label, 0) + 1
        hands.add(item.hand)
        assert item.window.shape == (64, 6)
    assert hands == {Hand.LEFT, Hand.RIGHT}
    assert counts[OOD] == 8
    for cls in FingerClass:
        assert counts[cls] == 4


def test_split_dataset_deterministic_partition():
    dataset = toy_windows(0, per_class=5, ood=5)
    train_part, hold = split_dataset(dataset, 0.25, seed=4)
    assert len(hold) == round(0.25 * len(dataset))
    assert len(train_part) + len(hold) == len(dataset)
    ids = {id(it) for it in dataset}
    assert {id(it) for it in train_part} | {id(it) for it in hold} == ids
    assert not ({id(it) for it in train_part} & {id(it) for it in hold})
    train_again, hold_again = split_dataset(dataset, 0.25, seed=4)
    assert [id(it) for it in train_again] == [id(it) for it in train_part]
    assert [id(it) for it in hold_again] == [id(it) for it in hold]
