"""Tap-candidate detection from dual-accelerometer streams, plus a synthetic generator.

Detection thresholds a running rate-of-change score: the per-sample sum over
sensors of the absolute change in acceleration magnitude, with an exponential
decay of past accumulation.  A threshold crossing at t_d yields one candidate
at the score's argmax inside the back-off window [t_d, t_d + T_b]; successive
candidates are at least T_b samples apart.

The generator stands in for real wristband hardware: each finger class gets a
damped-sinusoid burst template with class-specific frequency, inter-sensor
amplitude ratio, and decay, on top of a white noise floor.  Middle and ring
templates are deliberately similar so downstream classification stays
imperfect in a realistic way.
"""

from __future__ import annotations

import csv
import struct
from dataclasses import dataclass, field, replace

import numpy as np
from scipy.signal import lfilter

from .domain import FingerClass, Hand

N_CHANNELS = 6

#: Channels negated when mirroring right-hand signals onto the left-hand frame
#: (the x axis of each sensor, i.e. the axis crossing the sagittal plane).
MIRROR_CHANNELS = (0, 3)


class SignalError(ValueError):
    pass


@dataclass(frozen=True)
class ImuStream:
    """Per-hand acceleration stream, time-major (n_samples, 6).

    Channel order is fixed: sensor0.x, sensor0.y, sensor0.z, sensor1.x,
    sensor1.y, sensor1.z.  Units are arbitrary.
    """

    hand: Hand
    samples: np.ndarray
    sample_rate: int = 1600

    def __post_init__(self):
        samples = np.asarray(self.samples, dtype=np.float64)
        if samples.ndim != 2 or samples.shape[1] != N_CHANNELS:
            raise SignalError(f"samples must have shape (n, {N_CHANNELS}), got {samples.shape}")
        if self.sample_rate <= 0:
            raise SignalError("sample_rate must be positive")
        samples.setflags(write=False)
        object.__setattr__(self, "samples", samples)

    def __len__(self):
        return len(self.samples)


@dataclass(frozen=True)
class DetectorConfig:
    decay: float = 1.6
    activation_threshold: float = 17.0
    backoff: int = 64
    window_len: int = 128

    def __post_init__(self):
        if self.decay <= 1.0:
            raise SignalError("decay must be > 1")
        if self.backoff < 1:
            raise SignalError("backoff must be >= 1")
        if self.window_len % 2 != 0:
            raise SignalError("window_len must be even")


@dataclass(frozen=True)
class TapCandidate:
    t_z: int
    hand: Hand
    window: np.ndarray  # (window_len, 6), zero-padded at stream edges
    peak_score: float


def rate_of_change(stream: ImuStream, config: DetectorConfig = DetectorConfig()) -> np.ndarray:
    """Score series R with R_0 = 0 and R_t = R_{t-1}/D + sum_s |delta magnitude_s|."""
    if len(stream) < 2:
        raise SignalError("stream must have at least 2 samples")
    x = stream.samples
    mags = np.stack(
        [np.linalg.norm(x[:, :3], axis=1), np.linalg.norm(x[:, 3:], axis=1)], axis=1
    )
    increments = np.abs(np.diff(mags, axis=0)).sum(axis=1)
    drive = np.concatenate([[0.0], increments])
    # linear recurrence y_t = x_t + (1/D) y_{t-1}
    return lfilter([1.0], [1.0, -1.0 / config.decay], drive)


def extract_window(stream: ImuStream, t_z: int, window_len: int) -> np.ndarray:
    """Window [t_z - L/2, t_z + L/2) with zero padding outside the stream."""
    half = window_len // 2
    window = np.zeros((window_len, N_CHANNELS))
    lo = max(0, t_z - half)
    hi = min(len(stream), t_z + half)
    if hi > lo:
        window[lo - (t_z - half): hi - (t_z - half)] = stream.samples[lo:hi]
    return window


def detect_taps(stream: ImuStream, config: DetectorConfig = DetectorConfig()) -> list[TapCandidate]:
    """Threshold crossings of the rate-of-change score, one candidate per crossing."""
    scores = rate_of_change(stream, config)
    threshold = config.activation_threshold
    out = []
    t = 0
    armed = True
    n = len(scores)
    while t < n:
        if scores[t] >= threshold:
            if armed:
                end = min(t + config.backoff + 1, n)
                t_z = t + int(np.argmax(scores[t:end]))
                out.append(
                    TapCandidate(
                        t_z=t_z,
                        hand=stream.hand,
                        window=extract_window(stream, t_z, config.window_len),
                        peak_score=float(scores[t_z]),
                    )
                )
                t = t_z + config.backoff
                armed = False
                continue
        else:
            armed = True
        t += 1
    return out


# ---------------------------------------------------------------------------
# Synthetic generator
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TapTemplate:
    """Damped-sinusoid burst parameters for one finger class.

    ``axis_mix`` optionally overrides the class's default within-sensor axis
    direction; giving two classes the same mix removes that cue entirely.
    """

    freq_hz: float
    sensor_ratio: float  # fraction of burst energy on sensor 0
    decay_ms: float
    amplitude: float
    axis_mix: tuple | None = None


DEFAULT_TEMPLATES = {
    FingerClass.THUMB: TapTemplate(freq_hz=70.0, sensor_ratio=0.78, decay_ms=16.0, amplitude=55.0),
    FingerClass.INDEX: TapTemplate(freq_hz=130.0, sensor_ratio=0.62, decay_ms=14.0, amplitude=50.0),
    FingerClass.MIDDLE: TapTemplate(freq_hz=200.0, sensor_ratio=0.52, decay_ms=12.0, amplitude=48.0),
    # ring deliberately close to middle: these two should stay confusable
    FingerClass.RING: TapTemplate(freq_hz=222.0, sensor_ratio=0.45, decay_ms=11.5, amplitude=46.0),
    FingerClass.PINKY: TapTemplate(freq_hz=320.0, sensor_ratio=0.26, decay_ms=10.0, amplitude=42.0),
    FingerClass.PALM: TapTemplate(freq_hz=45.0, sensor_ratio=0.55, decay_ms=30.0, amplitude=90.0),
}

# per-class axis mix of the burst within each sensor (unit vectors, fixed)
_AXIS_MIX = {
    FingerClass.THUMB: (0.30, 0.35, 0.89),
    FingerClass.INDEX: (0.20, 0.45, 0.87),
    FingerClass.MIDDLE: (0.12, 0.52, 0.85),
    FingerClass.RING: (0.10, 0.56, 0.82),
    FingerClass.PINKY: (0.05, 0.62, 0.78),
    FingerClass.PALM: (0.45, 0.40, 0.80),
}


def confusable_templates() -> dict:
    """Template set where middle and ring genuinely overlap: shared axis mix
    and cue offsets comparable to the jitter widths, so a fraction of bursts
    is ambiguous even to an ideal observer.  Pair with wider jitter (see
    ``hard_generator_spec``) for classifier-calibration experiments."""
    mix = _AXIS_MIX[FingerClass.MIDDLE]
    out = dict(DEFAULT_TEMPLATES)
    out[FingerClass.MIDDLE] = TapTemplate(200.0, 0.52, 12.0, 48.0, axis_mix=mix)
    out[FingerClass.RING] = TapTemplate(212.0, 0.49, 11.0, 47.0, axis_mix=mix)
    return out


def hard_generator_spec(**overrides) -> "GeneratorSpec":
    """Generator spec for the confusable middle/ring regime."""
    params = dict(
        templates=confusable_templates(),
        freq_jitter=0.12,
        ratio_jitter=0.10,
        decay_jitter=0.3,
        noise_std=0.5,
    )
    params.update(overrides)
    return GeneratorSpec(**params)


def calibration_benchmark_spec() -> "GeneratorSpec":
    """Middle/ring overlap regime for calibration comparisons.

    Slightly wider template separation and less sensor noise than
    ``hard_generator_spec`` so that both a point-estimate and a variational
    classifier reach usable accuracy, while the overlap still leaves enough
    irreducible ambiguity for their calibration to differ clearly."""
    spec = hard_generator_spec(noise_std=0.42)
    mix = spec.templates[FingerClass.MIDDLE].axis_mix
    spec.templates[FingerClass.RING] = TapTemplate(220.0, 0.49, 11.0, 47.0, axis_mix=mix)
    return spec


@dataclass(frozen=True)
class GeneratorSpec:
    """Parameters of the synthetic tap-stream generator.

    ``n_taps`` bursts are placed with uniform random spacing; ``classes``
    fixes the class sequence (cycled) and defaults to a uniform draw over
    all six classes.  ``ood_events`` interleaves non-tap events: sharp
    noise jolts (which trigger the detector) and slow low-frequency swells.
    """

    hand: Hand = Hand.LEFT
    sample_rate: int = 1600
    n_taps: int = 20
    classes: tuple = ()
    ood_events: int = 0
    noise_std: float = 0.35
    burst_len: int = 96
    spacing: tuple = (220, 420)
    amp_jitter: tuple = (0.6, 1.6)
    freq_jitter: float = 0.08
    ratio_jitter: float = 0.07
    decay_jitter: float = 0.25
    templates: dict = field(default_factory=lambda: dict(DEFAULT_TEMPLATES))

    def __post_init__(self):
        if self.noise_std <= 0:
            raise SignalError("noise_std must be positive")
        for cls, tpl in self.templates.items():
            if tpl.amplitude < 0:
                raise SignalError(f"negative amplitude for {cls.name}")
        if self.n_taps < 0 or self.ood_events < 0:
            raise SignalError("event counts must be nonnegative")


@dataclass(frozen=True)
class TapLabel:
    t: int
    finger: FingerClass
    hand: Hand


def _burst(rng, template: TapTemplate, default_mix, spec: GeneratorSpec) -> np.ndarray:
    """One jittered damped-sinusoid burst, shape (burst_len, 6)."""
    n = spec.burst_len
    sr = spec.sample_rate
    axis_mix = template.axis_mix if template.axis_mix is not None else default_mix
    amp = template.amplitude * rng.uniform(*spec.amp_jitter)
    freq = template.freq_hz * (1.0 + rng.normal(0.0, spec.freq_jitter))
    ratio = float(np.clip(template.sensor_ratio + rng.normal(0.0, spec.ratio_jitter), 0.02, 0.98))
    decay = template.decay_ms * (1.0 + rng.normal(0.0, spec.decay_jitter))
    decay_samples = max(2.0, decay * sr / 1000.0)
    t = np.arange(n)
    carrier = np.sin(2.0 * np.pi * freq * t / sr + rng.uniform(0.0, 2.0 * np.pi))
    envelope = amp * np.exp(-t / decay_samples)
    wave = envelope * carrier
    mix = np.asarray(axis_mix)
    mix = mix / np.linalg.norm(mix)
    out = np.zeros((n, N_CHANNELS))
    out[:, :3] = np.outer(wave * np.sqrt(ratio), mix)
    out[:, 3:] = np.outer(wave * np.sqrt(1.0 - ratio), mix[::-1])
    return out


def _ood_event(rng, spec: GeneratorSpec) -> np.ndarray:
    """A non-tap event: noise jolt (detector-triggering) or slow swell."""
    sr = spec.sample_rate
    if rng.random() < 0.5:
        # jolt: broadband noise burst with sharp onset
        n = spec.burst_len
        amp = rng.uniform(25.0, 60.0)
        envelope = amp * np.exp(-np.arange(n) / rng.uniform(6.0, 40.0))
        return envelope[:, None] * rng.normal(0.0, 1.0, size=(n, N_CHANNELS))
    # swell: slow quasi-sinusoidal drift over ~0.4 s
    n = int(0.4 * sr)
    freq = rng.uniform(2.0, 7.0)
    amp = rng.uniform(15.0, 40.0)
    phase = rng.uniform(0.0, 2.0 * np.pi, size=N_CHANNELS)
    t = np.arange(n) / sr
    hann = 0.5 * (1.0 - np.cos(2.0 * np.pi * np.arange(n) / n))
    return amp * hann[:, None] * np.sin(2.0 * np.pi * freq * t[:, None] + phase[None, :])


def synth_tap_stream(spec: GeneratorSpec, seed: int) -> tuple[ImuStream, list[TapLabel]]:
    """Deterministic synthetic stream with ground-truth burst labels.

    Labels mark the peak-magnitude sample of each tap burst.  Right-hand
    streams have the mirror-axis channels negated, mirroring the physical
    left/right symmetry the preprocessing step undoes.
    """
    rng = np.random.default_rng(seed)
    events = ["tap"] * spec.n_taps + ["ood"] * spec.ood_events
    rng.shuffle(events)

    if spec.classes:
        class_seq = [spec.classes[i % len(spec.classes)] for i in range(spec.n_taps)]
    else:
        all_classes = list(FingerClass)
        class_seq = [all_classes[rng.integers(len(all_classes))] for _ in range(spec.n_taps)]

    chunks = []
    labels = []
    pos = 0
    tap_idx = 0
    lead = int(rng.integers(*spec.spacing))
    chunks.append(np.zeros((lead, N_CHANNELS)))
    pos += lead
    for kind in events:
        if kind == "tap":
            cls = class_seq[tap_idx]
            tap_idx += 1
            burst = _burst(rng, spec.templates[cls], _AXIS_MIX[cls], spec)
            peak = int(np.argmax(np.abs(burst).sum(axis=1)))
            labels.append(TapLabel(t=pos + peak, finger=cls, hand=spec.hand))
            chunks.append(burst)
            pos += len(burst)
        else:
            event = _ood_event(rng, spec)
            chunks.append(event)
            pos += len(event)
        gap = int(rng.integers(*spec.spacing))
        chunks.append(np.zeros((gap, N_CHANNELS)))
        pos += gap

    clean = np.concatenate(chunks, axis=0)
    samples = clean + rng.normal(0.0, spec.noise_std, size=clean.shape)
    if spec.hand is Hand.RIGHT:
        samples = samples.copy()
        samples[:, MIRROR_CHANNELS] *= -1.0
    stream = ImuStream(hand=spec.hand, samples=samples, sample_rate=spec.sample_rate)
    return stream, labels


def quiet_stream(spec: GeneratorSpec, seed: int, n_samples: int) -> ImuStream:
    """Noise-floor-only stream (for false-positive rate checks)."""
    rng = np.random.default_rng(seed)
    samples = rng.normal(0.0, spec.noise_std, size=(n_samples, N_CHANNELS))
    return ImuStream(hand=spec.hand, samples=samples, sample_rate=spec.sample_rate)


# ---------------------------------------------------------------------------
# Stream file I/O
# ---------------------------------------------------------------------------

_MAGIC = b"IMUS"


def write_stream(stream: ImuStream, path) -> None:
    """Binary format: magic, sample_rate u32 LE, channel count u8, float32 samples."""
    with open(path, "wb") as fp:
        fp.write(_MAGIC)
        fp.write(struct.pack("<IB", stream.sample_rate, N_CHANNELS))
        fp.write(stream.samples.astype("<f4").tobytes())


def read_stream(path, hand: Hand = Hand.LEFT) -> ImuStream:
    with open(path, "rb") as fp:
        magic = fp.read(4)
        if magic != _MAGIC:
            raise SignalError(f"{path}: bad magic {magic!r}")
        sample_rate, channels = struct.unpack("<IB", fp.read(5))
        if channels != N_CHANNELS:
            raise SignalError(f"{path}: expected {N_CHANNELS} channels, got {channels}")
        data = np.frombuffer(fp.read(), dtype="<f4").astype(np.float64)
    return ImuStream(hand=hand, samples=data.reshape(-1, channels), sample_rate=sample_rate)


def write_labels(labels: list[TapLabel], path) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fp:
        writer = csv.writer(fp)
        writer.writerow(["t", "class", "hand"])
        for label in labels:
            writer.writerow([label.t, label.finger.name.lower(), label.hand.value])


def read_labels(path) -> list[TapLabel]:
    labels = []
    with open(path, newline="", encoding="utf-8") as fp:
        for row in csv.DictReader(fp):
            labels.append(
                TapLabel(
                    t=int(row["t"]),
                    finger=FingerClass[row["class"].upper()],
                    hand=Hand(row["hand"]),
                )
            )
    return labels
