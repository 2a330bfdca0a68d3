import numpy as np
import pytest

from tapentry.domain import FingerClass, Hand
from tapentry.imu import (
    DetectorConfig,
    GeneratorSpec,
    ImuStream,
    SignalError,
    TapTemplate,
    detect_taps,
    extract_window,
    quiet_stream,
    rate_of_change,
    read_labels,
    read_stream,
    synth_tap_stream,
    write_labels,
    write_stream,
)


def score_loop(samples, decay):
    """Reference recurrence, written as a plain python loop."""
    mags = [
        (np.linalg.norm(row[:3]), np.linalg.norm(row[3:])) for row in samples
    ]
    scores = [0.0]
    for t in range(1, len(samples)):
        inc = abs(mags[t][0] - mags[t - 1][0]) + abs(mags[t][1] - mags[t - 1][1])
        scores.append(scores[-1] / decay + inc)
    return np.array(scores)


def test_rate_of_change_matches_loop_reference():
    rng = np.random.default_rng(7)
    for _ in range(10):
        samples = rng.normal(0, 5, size=(rng.integers(2, 400), 6))
        stream = ImuStream(hand=Hand.LEFT, samples=samples)
        got = rate_of_change(stream, DetectorConfig(decay=1.6))
        np.testing.assert_allclose(got, score_loop(samples, 1.6), atol=1e-9)


def test_rate_of_change_hand_example():
    # magnitudes 0, 16, 26 on sensor 0 -> increments 16, 10
    samples = np.zeros((3, 6))
    samples[1, 0] = 16.0
    samples[2, 0] = 26.0
    stream = ImuStream(hand=Hand.LEFT, samples=samples)
    scores = rate_of_change(stream, DetectorConfig(decay=1.6))
    np.testing.assert_allclose(scores, [0.0, 16.0, 16.0 / 1.6 + 10.0])


def test_rate_of_change_rejects_tiny_streams():
    with pytest.raises(SignalError):
        rate_of_change(ImuStream(hand=Hand.LEFT, samples=np.zeros((1, 6))))
    with pytest.raises(SignalError):
        ImuStream(hand=Hand.LEFT, samples=np.zeros((4, 5)))


def test_detect_taps_spacing_and_windows():
    spec = GeneratorSpec(n_taps=30)
    stream, _ = synth_tap_stream(spec, seed=11)
    config = DetectorConfig()
    taps = detect_taps(stream, config)
    assert len(taps) >= 25
    t_z = np.array([c.t_z for c in taps])
    assert np.all(np.diff(t_z) >= config.backoff)
    for c in taps:
        assert c.window.shape == (config.window_len, 6)
        assert c.hand is Hand.LEFT
        assert c.peak_score >= config.activation_threshold


def test_detector_recall_and_localization():
    spec = GeneratorSpec(n_taps=60)
    stream, labels = synth_tap_stream(spec, seed=3)
    taps = detect_taps(stream, DetectorConfig())
    t_z = np.array([c.t_z for c in taps])
    tol = int(0.05 * spec.sample_rate)
    hits = sum(np.any(np.abs(t_z - lab.t) <= tol) for lab in labels)
    assert hits / len(labels) >= 0.95


def test_detector_quiet_stream_false_positives():
    spec = GeneratorSpec()
    stream = quiet_stream(spec, seed=5, n_samples=16000)  # 10 s
    assert len(detect_taps(stream, DetectorConfig())) <= 1


def test_detector_threshold_monotonicity():
    stream, _ = synth_tap_stream(GeneratorSpec(n_taps=40, ood_events=6), seed=13)
    counts = [
        len(detect_taps(stream, DetectorConfig(activation_threshold=thr)))
        for thr in (5.0, 10.0, 17.0, 40.0, 200.0)
    ]
    assert counts == sorted(counts, reverse=True)


def test_lower_threshold_catches_soft_taps():
    # soften every burst so the default threshold starts missing some
    soft = {
        cls: TapTemplate(t.freq_hz, t.sensor_ratio, t.decay_ms, t.amplitude * 0.25)
        for cls, t in GeneratorSpec().templates.items()
    }
    spec = GeneratorSpec(n_taps=50, templates=soft, amp_jitter=(0.3, 1.0))
    stream, labels = synth_tap_stream(spec, seed=21)
    n_strict = len(detect_taps(stream, DetectorConfig(activation_threshold=17.0)))
    n_relaxed = len(detect_taps(stream, DetectorConfig(activation_threshold=10.0)))
    assert n_relaxed > n_strict


def test_edge_windows_zero_padded():
    samples = np.zeros((200, 6))
    samples[2, 0] = 50.0  # impulse right at the start
    stream = ImuStream(hand=Hand.LEFT, samples=samples)
    taps = detect_taps(stream, DetectorConfig())
    assert len(taps) == 1
    window = taps[0].window
    assert window.shape == (128, 6)
    # left half of the window lies before the stream start
    assert np.all(window[: 64 - taps[0].t_z] == 0.0)


def test_generator_deterministic_and_mirrored():
    spec = GeneratorSpec(n_taps=10, ood_events=2)
    s1, l1 = synth_tap_stream(spec, seed=42)
    s2, l2 = synth_tap_stream(spec, seed=42)
    np.testing.assert_array_equal(s1.samples, s2.samples)
    assert l1 == l2

    right = GeneratorSpec(n_taps=10, ood_events=2, hand=Hand.RIGHT)
    s3, _ = synth_tap_stream(right, seed=42)
    np.testing.assert_allclose(s3.samples[:, 0], -s1.samples[:, 0])
    np.testing.assert_allclose(s3.samples[:, 1], s1.samples[:, 1])
    np.testing.assert_allclose(s3.samples[:, 3], -s1.samples[:, 3])


def test_generator_class_sequence_and_validation():
    spec = GeneratorSpec(n_taps=6, classes=(FingerClass.INDEX, FingerClass.PALM))
    _, labels = synth_tap_stream(spec, seed=1)
    assert [l.finger for l in labels] == [
        FingerClass.INDEX, FingerClass.PALM, FingerClass.INDEX,
        FingerClass.PALM, FingerClass.INDEX, FingerClass.PALM,
    ]
    with pytest.raises(SignalError):
        GeneratorSpec(noise_std=0.0)
    with pytest.raises(SignalError):
        GeneratorSpec(templates={FingerClass.THUMB: TapTemplate(70, 0.5, 10, -1.0)})


def test_stream_file_round_trip(tmp_path):
    stream, labels = synth_tap_stream(GeneratorSpec(n_taps=5, hand=Hand.RIGHT), seed=9)
    spath = tmp_path / "stream.bin"
    write_stream(stream, spath)
    again = read_stream(spath, hand=Hand.RIGHT)
    assert again.sample_rate == stream.sample_rate
    assert again.hand is Hand.RIGHT
    np.testing.assert_array_equal(again.samples, stream.samples.astype("<f4").astype(np.float64))

    lpath = tmp_path / "labels.csv"
    write_labels(labels, lpath)
    assert read_labels(lpath) == labels


def test_read_stream_rejects_bad_magic(tmp_path):
    path = tmp_path / "junk.bin"
    path.write_bytes(b"NOPE" + b"\x00" * 32)
    with pytest.raises(SignalError):
        read_stream(path)


def test_extract_window_clips_at_end():
    stream = ImuStream(hand=Hand.LEFT, samples=np.ones((100, 6)))
    window = extract_window(stream, 95, 128)
    assert window.shape == (128, 6)
    assert np.all(window[:64] == 1.0)  # samples 31..94
    assert np.all(window[69:] == 0.0)  # beyond sample 99


def _impulse_stream(positions, magnitude=50.0, n=2000):
    samples = np.zeros((n, 6))
    for t in positions:
        samples[t, 1] = magnitude
    return ImuStream(hand=Hand.LEFT, samples=samples)


def test_constant_stream_scores_zero_and_scaling_homogeneity():
    const = ImuStream(hand=Hand.LEFT, samples=np.full((50, 6), 3.7))
    np.testing.assert_array_equal(rate_of_change(const), np.zeros(50))

    rng = np.random.default_rng(2)
    samples = rng.normal(0, 4, size=(300, 6))
    base = rate_of_change(ImuStream(hand=Hand.LEFT, samples=samples))
    scaled = rate_of_change(ImuStream(hand=Hand.LEFT, samples=2.5 * samples))
    np.testing.assert_allclose(scaled, 2.5 * base, atol=1e-9)


def test_two_impulses_far_apart_yield_two_candidates():
    stream = _impulse_stream([500, 700])
    taps = detect_taps(stream, DetectorConfig())
    assert len(taps) == 2
    assert abs(taps[0].t_z - 500) <= 2
    assert abs(taps[1].t_z - 700) <= 2


def test_two_impulses_within_backoff_merge():
    stream = _impulse_stream([500, 532])
    taps = detect_taps(stream, DetectorConfig(backoff=64))
    assert len(taps) == 1


def test_all_zero_stream_yields_no_candidates():
    stream = ImuStream(hand=Hand.LEFT, samples=np.zeros((400, 6)))
    assert detect_taps(stream, DetectorConfig()) == []


def detect_loop(scores, threshold, backoff):
    """Reference crossing scan written independently as a plain loop."""
    out = []
    t = 0
    below_seen = True
    while t < len(scores):
        if scores[t] >= threshold and below_seen:
            window = scores[t: t + backoff + 1]
            t_z = t + int(np.argmax(window))
            out.append(t_z)
            t = t_z + backoff
            below_seen = False
        else:
            if scores[t] < threshold:
                below_seen = True
            t += 1
    return out


def test_detect_taps_matches_loop_reference():
    config = DetectorConfig()
    for seed in (17, 29, 71):
        stream, _ = synth_tap_stream(GeneratorSpec(n_taps=25, ood_events=4), seed=seed)
        scores = rate_of_change(stream, config)
        got = [c.t_z for c in detect_taps(stream, config)]
        assert got == detect_loop(scores, config.activation_threshold, config.backoff)
