"""Offline experiment harness: recall@k simulation, WPM/CER metrics, and
classifier comparison tables.

``simulate_recall`` replays every word of a phrase set through an
observation source (a confusion-matrix classifier or a trained network fed
synthetic tap windows) and the decoder, recording where the true word lands
in the suggestion ranking.  Per-word randomness is seeded from
``(seed, run, crc32(phrase), word index)`` so results are independent of
phrase order and embarrassingly parallel; repeated runs over different
seed substreams stand in for the participant axis when averaging, and the
report notes that substitution.
"""

from __future__ import annotations

import json
import zlib
from dataclasses import dataclass, field, replace

import numpy as np

from .classifier.confusion import ConfusionClassifier
from .classifier.network import predict as model_predict
from .classifier.training import preprocess
from .decoder import DecoderConfig, decode
from .domain import KeyFingerMap, Rejected, TapObservation
from .imu import GeneratorSpec, extract_window, synth_tap_stream
from .lm.backoff import WORD_END, WORD_START, WORD_UNK

#: How the report's uncertainty was produced (no participant axis exists here).
ERROR_BAR_NOTE = "standard errors are across random seeds, not participants"

DEFAULT_KS = (1, 2, 3, 4, 5, 10, 20)


class EvalError(ValueError):
    pass


@dataclass(frozen=True)
class SimulationConfig:
    """Phrase set and sampling plan for one recall simulation."""

    phrases: tuple
    ks: tuple = DEFAULT_KS
    seed: int = 7
    n_seeds: int = 1
    tap_rate: float = 2.0  # simulated taps per second, for the WPM column

    def __post_init__(self):
        object.__setattr__(self, "phrases", tuple(self.phrases))
        object.__setattr__(self, "ks", tuple(int(k) for k in self.ks))
        if not self.phrases:
            raise EvalError("phrase set is empty")
        if not self.ks or list(self.ks) != sorted(set(self.ks)) or self.ks[0] < 1:
            raise EvalError("k values must be distinct, ascending, and >= 1")
        if self.n_seeds < 1:
            raise EvalError("n_seeds must be >= 1")
        if self.tap_rate <= 0:
            raise EvalError("tap_rate must be positive")


@dataclass(frozen=True)
class EvalReport:
    """Aggregated simulation results.

    ``recall`` maps k to the mean (over seed runs) of the pooled fraction
    of words whose true word ranked within the top k; ``recall_se`` is the
    standard error over those runs (0.0 for a single run).  WPM and CER are
    per-phrase, averaged over runs.
    """

    ks: tuple
    recall: dict
    recall_se: dict
    per_phrase_wpm: tuple
    per_phrase_cer: tuple
    n_words: int
    n_seeds: int
    seed: int
    note: str = ERROR_BAR_NOTE

    def __post_init__(self):
        values = [self.recall[k] for k in self.ks]
        if any(b < a - 1e-12 for a, b in zip(values, values[1:])):
            raise EvalError("recall must be nondecreasing in k")
        if any(c < 0 for c in self.per_phrase_cer):
            raise EvalError("CER cannot be negative")

    @property
    def wpm_mean(self) -> float:
        return float(np.mean(self.per_phrase_wpm))

    @property
    def wpm_se(self) -> float:
        return _stderr(self.per_phrase_wpm)

    @property
    def cer_mean(self) -> float:
        return float(np.mean(self.per_phrase_cer))

    @property
    def cer_se(self) -> float:
        return _stderr(self.per_phrase_cer)

    def to_dict(self) -> dict:
        return {
            "ks": list(self.ks),
            "recall": {str(k): self.recall[k] for k in self.ks},
            "recall_se": {str(k): self.recall_se[k] for k in self.ks},
            "wpm": list(self.per_phrase_wpm),
            "cer": list(self.per_phrase_cer),
            "wpm_mean": self.wpm_mean,
            "wpm_se": self.wpm_se,
            "cer_mean": self.cer_mean,
            "cer_se": self.cer_se,
            "n_words": self.n_words,
            "n_seeds": self.n_seeds,
            "seed": self.seed,
            "note": self.note,
        }

    @classmethod
    def from_dict(cls, payload: dict) -> "EvalReport":
        ks = tuple(int(k) for k in payload["ks"])
        return cls(
            ks=ks,
            recall={k: float(payload["recall"][str(k)]) for k in ks},
            recall_se={k: float(payload["recall_se"][str(k)]) for k in ks},
            per_phrase_wpm=tuple(payload["wpm"]),
            per_phrase_cer=tuple(payload["cer"]),
            n_words=int(payload["n_words"]),
            n_seeds=int(payload["n_seeds"]),
            seed=int(payload["seed"]),
            note=payload.get("note", ERROR_BAR_NOTE),
        )

    def write_json(self, path) -> None:
        with open(path, "w", encoding="utf-8") as fp:
            json.dump(self.to_dict(), fp, indent=2, sort_keys=True)
            fp.write("\n")


def read_report(path) -> EvalReport:
    with open(path, encoding="utf-8") as fp:
        return EvalReport.from_dict(json.load(fp))


def _stderr(values) -> float:
    values = np.asarray(values, dtype=np.float64)
    if values.size < 2:
        return 0.0
    return float(values.std(ddof=1) / np.sqrt(values.size))


# ---------------------------------------------------------------------------
# text-entry metrics


def cer(predicted: str, reference: str) -> float:
    """Unit-cost Levenshtein distance divided by the reference length."""
    if not reference:
        raise EvalError("reference text is empty")
    prev = list(range(len(reference) + 1))
    for i, p in enumerate(predicted, start=1):
        row = [i]
        for j, r in enumerate(reference, start=1):
            row.append(min(prev[j] + 1, row[j - 1] + 1, prev[j - 1] + (p != r)))
        prev = row
    return prev[-1] / len(reference)


def wpm(char_count: int, duration_s: float) -> float:
    """Words per minute at the conventional five characters per word."""
    if duration_s <= 0:
        raise EvalError("duration must be positive")
    return (char_count / 5.0) / (duration_s / 60.0)


# ---------------------------------------------------------------------------
# observation sources


class ConfusionSource:
    """Observations sampled from a fixed confusion matrix.

    ``mode`` selects honest posteriors ("calibrated") or one-hot outputs at
    the sampled class ("overconfident"); top-1 behaviour is identical.
    """

    def __init__(self, confusion, mode: str):
        self.confusion = np.asarray(confusion, dtype=np.float64)
        self.mode = mode
        ConfusionClassifier(self.confusion, mode, seed=0)  # validate eagerly

    def observations(self, word: str, kfmap: KeyFingerMap, rng):
        classifier = ConfusionClassifier(self.confusion, self.mode, seed=rng)
        out = []
        for char in word:
            hand, finger = kfmap.hand_finger(char)
            out.append(classifier(finger, hand=hand))
        return tuple(out)


class ModelSource:
    """Observations from a trained network fed synthetic tap windows.

    For each character a one-tap stream is generated for the true hand and
    finger, the labeled window is cut out, standardized with the model's
    training statistics, and pushed through the stochastic ensemble.  A
    rejected window still contributes its posterior — the offline decoder
    needs a distribution for every tap.
    """

    def __init__(self, model, config, spec: GeneratorSpec, window_len: int = 128):
        self.model = model
        self.config = config
        self.spec = spec
        self.window_len = window_len

    def observations(self, word: str, kfmap: KeyFingerMap, rng):
        out = []
        for char in word:
            hand, finger = kfmap.hand_finger(char)
            tap_spec = replace(
                self.spec, hand=hand, n_taps=1, classes=(finger,), ood_events=0
            )
            stream, labels = synth_tap_stream(tap_spec, seed=rng)
            window = extract_window(stream, labels[0].t, self.window_len)
            x = preprocess(window, hand, self.model.stats)
            obs = model_predict(self.model, x, hand, self.config, rng=rng)
            if isinstance(obs, Rejected):
                obs = TapObservation(hand=hand, probs=obs.probs, timestamp=obs.timestamp)
            out.append(obs)
        return tuple(out)


# ---------------------------------------------------------------------------
# recall simulation


def _check_phrases(phrases, word_lm):
    vocabulary = set(word_lm.vocab) - {WORD_START, WORD_END, WORD_UNK}
    missing = sorted(
        {word for phrase in phrases for word in phrase.split() if word not in vocabulary}
    )
    if missing:
        raise EvalError(f"phrase words not in vocabulary: {', '.join(missing)}")


def _word_rng(seed: int, run: int, phrase: str, word_idx: int):
    return np.random.default_rng([seed, run, zlib.crc32(phrase.encode("utf-8")), word_idx])


def simulate_recall(config: SimulationConfig, source, kfmap: KeyFingerMap,
                    char_lm, word_lm, decoder_config: DecoderConfig = None) -> EvalReport:
    """Decode every word of every phrase and report where the truth ranked.

    Observations come from ``source`` with per-word seeding, the decoder
    sees the phrase's true preceding words as context, and recall@k pools
    all words of one run.  CER compares the concatenated top-1 words with
    the reference phrase; WPM uses the simulated tap cadence.
    """
    if decoder_config is None:
        decoder_config = DecoderConfig(max_suggestions=max(config.ks))
    elif decoder_config.max_suggestions < max(config.ks):
        raise EvalError("decoder keeps fewer suggestions than the largest k")
    _check_phrases(config.phrases, word_lm)

    per_run_recall = []
    wpm_runs = []
    cer_runs = []
    n_words = 0
    for run in range(config.n_seeds):
        ranks = []
        run_wpm = []
        run_cer = []
        for phrase in config.phrases:
            words = phrase.split()
            decoded = []
            for idx, word in enumerate(words):
                rng = _word_rng(config.seed, run, phrase, idx)
                observations = source.observations(word, kfmap, rng)
                suggestions = decode(
                    observations, tuple(words[:idx]), kfmap, char_lm, word_lm, decoder_config
                )
                ranked = suggestions.words
                ranks.append(ranked.index(word) + 1 if word in ranked else np.inf)
                decoded.append(ranked[0] if ranked else suggestions.raw_best)
            predicted = " ".join(decoded)
            run_cer.append(cer(predicted, phrase))
            taps = len(phrase) + 1  # every char and space, plus the final commit
            run_wpm.append(wpm(len(phrase), taps / config.tap_rate))
        ranks = np.asarray(ranks)
        per_run_recall.append({k: float(np.mean(ranks <= k)) for k in config.ks})
        wpm_runs.append(run_wpm)
        cer_runs.append(run_cer)
        n_words = len(ranks)

    recall = {k: float(np.mean([r[k] for r in per_run_recall])) for k in config.ks}
    recall_se = {k: _stderr([r[k] for r in per_run_recall]) for k in config.ks}
    return EvalReport(
        ks=config.ks,
        recall=recall,
        recall_se=recall_se,
        per_phrase_wpm=tuple(np.mean(wpm_runs, axis=0)),
        per_phrase_cer=tuple(np.mean(cer_runs, axis=0)),
        n_words=n_words,
        n_seeds=config.n_seeds,
        seed=config.seed,
    )


# ---------------------------------------------------------------------------
# classifier comparison


def compare_classifiers(variants, dataset, kfmap, char_lm=None, word_lm=None,
                        sim_config: SimulationConfig = None, *, spec: GeneratorSpec = None,
                        holdout_fraction: float = 0.2, split_seed: int = 6,
                        train_seed: int = 11, predict_seed: int = 99,
                        decoder_config: DecoderConfig = None):
    """Train every (name, config) variant on a shared split and tabulate
    validation metrics, one dict row per variant.

    Rows carry macro-F1, 15-bin ECE, and NLL over the finger-labeled
    holdout windows plus the rejection rate on the OOD holdout windows.
    When ``sim_config`` (with LMs and a generator ``spec``) is given, each
    variant also runs the recall simulation end to end and the row gains
    recall@k columns.  Identical variants under the same seeds produce
    identical rows.
    """
    from .classifier.dataset import split_dataset
    from .classifier.metrics import metrics as validation_metrics
    from .classifier.training import OOD, train

    if sim_config is not None and (char_lm is None or word_lm is None or spec is None):
        raise EvalError("recall columns need char_lm, word_lm, and a generator spec")

    train_part, holdout = split_dataset(dataset, holdout_fraction, seed=split_seed)
    rows = []
    for name, variant_config in variants:
        model, _ = train(train_part, variant_config, seed=train_seed)
        probs, labels = [], []
        ood_total = 0
        ood_rejected = 0
        for i, item in enumerate(holdout):
            x = preprocess(item.window, item.hand, model.stats)
            out = model_predict(
                model, x, item.hand, variant_config, rng=np.random.default_rng([predict_seed, i])
            )
            if item.label is OOD:
                ood_total += 1
                ood_rejected += isinstance(out, Rejected)
            else:
                probs.append(out.probs)
                labels.append(item.label.value)
        row = {"name": name}
        row.update(validation_metrics(np.array(probs), np.array(labels)))
        row["rejection"] = ood_rejected / ood_total if ood_total else float("nan")
        if sim_config is not None:
            source = ModelSource(model, variant_config, spec)
            report = simulate_recall(sim_config, source, kfmap, char_lm, word_lm, decoder_config)
            for k in sim_config.ks:
                row[f"recall@{k}"] = report.recall[k]
        rows.append(row)
    return rows
