"""Acceptance gate: one test per headline behavior, each at its stated
tolerance, with an explicit pass line printed so a verbose run reads as a
checklist.  Oracles here are written independently of the library code they
check (plain loops, Fractions, exhaustive enumeration)."""

import itertools
import math
import time
from fractions import Fraction

import numpy as np
import pytest

from tapentry.classifier import (
    ClassifierConfig,
    LabeledWindow,
    OOD,
    VariationalNet,
    default_architecture,
    elbo_backward,
    elbo_loss,
    make_dataset,
    typing_confusion_matrix,
)
from tapentry.classifier.layers import VariationalDense, softplus
from tapentry.decoder import DecoderConfig, decode
from tapentry.domain import (
    FingerClass,
    Hand,
    N_CLASSES,
    TYPING_FINGERS,
    Rejected,
    TapObservation,
    default_key_finger_map,
    one_hot_observation,
)
from tapentry.evaluation import (
    ConfusionSource,
    SimulationConfig,
    cer,
    compare_classifiers,
    simulate_recall,
    wpm,
)
from tapentry.imu import (
    DetectorConfig,
    GeneratorSpec,
    ImuStream,
    calibration_benchmark_spec,
    detect_taps,
    quiet_stream,
    rate_of_change,
    synth_tap_stream,
)
from tapentry.lm import (
    CHAR_VOCAB,
    WORD_END,
    WORD_START,
    WORD_UNK,
    corpus_from_text,
    read_arpa,
    score_sequence,
    train_char_lm,
    train_word_lm,
    write_arpa,
)
from tapentry.lm.corpus import Corpus
from tapentry.session import (
    SessionContext,
    SessionEvent,
    classify_event,
    initial_state,
    apply,
    read_event_log,
    replay,
    write_event_log,
)
from tapentry.textgen import desk_corpus, desk_phrases

KFMAP = default_key_finger_map()


@pytest.fixture(scope="module")
def desk_stack():
    """Language models over the full generated desk corpus."""
    corpus = corpus_from_text(desk_corpus())
    return train_char_lm(corpus, order=5), train_word_lm(corpus, order=3)


def ok(name):
    print(f"PASS {name}")


# ---------------------------------------------------------------------------
# 1. rate-of-change score matches a reference loop, sample-exactly


def test_rate_of_change_oracle():
    rng = np.random.default_rng(20)
    config = DetectorConfig()
    spent = 0.0
    for _ in range(100):
        samples = rng.normal(0, 8.0, size=(10_000, 6))
        start = time.perf_counter()
        scores = rate_of_change(ImuStream(hand=Hand.LEFT, samples=samples), config)
        spent += time.perf_counter() - start

        acc = np.linalg.norm(samples[:, :3], axis=1)
        gyr = np.linalg.norm(samples[:, 3:], axis=1)
        increments = np.abs(np.diff(acc)) + np.abs(np.diff(gyr))
        reference = [0.0]
        for inc in increments:
            reference.append(reference[-1] / config.decay + inc)
        np.testing.assert_allclose(scores, reference, atol=1e-9)
    assert spent < 1.0, f"scoring 100 streams took {spent:.2f} s"
    ok("rate-of-change oracle (100 x 10^4 samples, atol 1e-9, < 1 s)")


# ---------------------------------------------------------------------------
# 2. detector recall on the default generator and quiet-signal specificity


def test_detector_recall_and_quiet_false_positives():
    config = DetectorConfig(activation_threshold=17.0)
    hits = labels_total = 0
    for seed in (3, 4, 5, 6, 7):
        spec = GeneratorSpec(n_taps=60)
        stream, labels = synth_tap_stream(spec, seed=seed)
        t_z = np.array([c.t_z for c in detect_taps(stream, config)])
        tol = int(0.05 * spec.sample_rate)  # 50 ms at 1600 Hz
        hits += sum(np.any(np.abs(t_z - lab.t) <= tol) for lab in labels)
        labels_total += len(labels)
    recall = hits / labels_total
    assert recall >= 0.95, f"recall {recall:.3f}"

    for seed in (11, 12, 13):
        quiet = quiet_stream(GeneratorSpec(), seed=seed, n_samples=16_000)  # 10 s
        assert len(detect_taps(quiet, config)) <= 1
    ok(f"detector recall {recall:.3f} >= 0.95 at threshold 17; <= 1 false per 10 s quiet")


# ---------------------------------------------------------------------------
# 3. variational machinery: KL closed form, ELBO gradients, open-set loss


SMALL_ARCH = (
    ("conv", 6, 2, True),
    ("bn", 2),
    ("lrelu",),
    ("pool",),
    ("flatten",),
    ("dense", 4, 3, False),
    ("lrelu",),
    ("dense", 3, 6, True),
)


def test_variational_correctness():
    # closed-form KL vs Monte Carlo on 20 random layers, 1% relative
    rng = np.random.default_rng(77)
    prior_sigma = 0.1
    for _ in range(20):
        layer = VariationalDense(int(rng.integers(2, 5)), int(rng.integers(2, 5)), rng)
        for name, param in layer.params.items():
            param[:] = (rng.normal(0, 0.3, size=param.shape) if name.endswith("_mu")
                        else rng.uniform(-5, -1, size=param.shape))
        mc = 0.0
        for mu_name, rho_name in (("w_mu", "w_rho"), ("b_mu", "b_rho")):
            mu = layer.params[mu_name]
            sigma = softplus(layer.params[rho_name])
            draws = mu[None] + sigma[None] * rng.standard_normal((100_000,) + mu.shape)
            log_q = (-0.5 * ((draws - mu[None]) / sigma[None]) ** 2
                     - np.log(sigma[None]) - 0.5 * np.log(2 * np.pi))
            log_p = (-0.5 * (draws / prior_sigma) ** 2
                     - np.log(prior_sigma) - 0.5 * np.log(2 * np.pi))
            axes = tuple(range(1, draws.ndim))
            mc += float((log_q - log_p).sum(axis=axes).mean())
        closed = layer.kl(prior_sigma)
        assert abs(closed - mc) / abs(closed) < 0.01

    # ELBO gradients vs central finite differences on a <= 200 parameter net
    model = VariationalNet(SMALL_ARCH, seed=7)
    assert model.n_params() <= 200
    config = ClassifierConfig(architecture=SMALL_ARCH)
    batch = [
        LabeledWindow(window=rng.normal(0, 1, size=(4, 6)),
                      label=[FingerClass.INDEX, OOD, FingerClass.PINKY][i], hand=Hand.LEFT)
        for i in range(3)
    ]
    elbo_loss(model, batch, config, rng=rng, kl_weight=0.37)
    model.freeze_noise()
    elbo_loss(model, batch, config, kl_weight=0.37)
    elbo_backward(model, config, 0.37)
    h = 1e-5
    for i, layer in enumerate(model.layers):
        for name, param in layer.params.items():
            flat = param.reshape(-1)
            grad = layer.grads[name].reshape(-1)
            for j in range(flat.size):
                orig = flat[j]
                flat[j] = orig + h
                plus, _, _ = elbo_loss(model, batch, config, kl_weight=0.37)
                flat[j] = orig - h
                minus, _, _ = elbo_loss(model, batch, config, kl_weight=0.37)
                flat[j] = orig
                numeric = (plus - minus) / (2 * h)
                denom = max(abs(numeric) + abs(grad[j]), 1e-6)
                assert abs(numeric - grad[j]) / denom < 1e-4, f"layer {i} {name}[{j}]"

    # an out-of-distribution sample with uniform output scores exactly ln 6
    class Uniform:
        stats = None

        def forward(self, x, training=True, rng=None):
            return np.zeros((len(x), 6))

        def kl(self, prior_sigma):
            return 0.0

    batch = [LabeledWindow(window=np.zeros((4, 6)), label=OOD, hand=Hand.LEFT)]
    _, _, data = elbo_loss(Uniform(), batch, config, kl_weight=1.0)
    assert data == pytest.approx(math.log(6.0), abs=1e-12)
    ok("variational correctness (KL 1%, gradients 1e-4, open-set loss = ln 6)")


# ---------------------------------------------------------------------------
# 4. calibration direction: variational beats point estimate on ECE and NLL


def test_calibration_direction():
    dataset = make_dataset(calibration_benchmark_spec(), 360, 360, seed=5)
    shared = dict(epochs=45, kl_scale=0.1)
    variants = [
        ("bayes", ClassifierConfig(architecture=default_architecture(bayesian=True), **shared)),
        ("plain", ClassifierConfig(architecture=default_architecture(bayesian=False), **shared)),
    ]
    bayes, plain = compare_classifiers(variants, dataset, KFMAP)
    assert bayes["macro_f1"] >= 0.85, f"bayes F1 {bayes['macro_f1']:.3f}"
    assert plain["macro_f1"] >= 0.85, f"plain F1 {plain['macro_f1']:.3f}"
    assert bayes["ece"] < plain["ece"], f"ECE {bayes['ece']:.3f} vs {plain['ece']:.3f}"
    assert bayes["nll"] < plain["nll"], f"NLL {bayes['nll']:.3f} vs {plain['nll']:.3f}"
    ok(f"calibration direction (ECE {bayes['ece']:.3f} < {plain['ece']:.3f}, "
       f"NLL {bayes['nll']:.3f} < {plain['nll']:.3f}, F1 {bayes['macro_f1']:.3f}/{plain['macro_f1']:.3f})")


# ---------------------------------------------------------------------------
# 5. language models normalize, survive ARPA round trips, match hand tables


def test_lm_normalization_and_oracles(tmp_path):
    pangrams = corpus_from_text([
        "the quick brown fox jumps over the lazy dog",
        "pack my box with five dozen jugs", "it's a small world after all",
        "never odd or even", "step on no pets", "so many dynamos",
    ])
    char_model = train_char_lm(pangrams, order=5)
    rng = np.random.default_rng(3)
    symbols = list(CHAR_VOCAB)
    for _ in range(1000):
        hist = tuple(rng.choice(symbols, size=int(rng.integers(0, 5))))
        total = sum(math.exp(char_model.token_logp(y, hist)) for y in CHAR_VOCAB)
        assert abs(total - 1.0) < 1e-6

    words = Corpus(tuple(
        tuple(rng.choice(["aa", "ab", "ba", "bb", "ca", "cb"],
                         size=int(rng.integers(3, 8))))
        for _ in range(150)
    ))
    word_model = train_word_lm(words, order=3, discounts="fixed")
    pool = list(word_model.vocab) + [WORD_START, "junk"]
    for _ in range(1000):
        hist = tuple(rng.choice(pool, size=int(rng.integers(0, 4))))
        total = sum(math.exp(word_model.token_logp(y, hist)) for y in word_model.vocab)
        assert abs(total - 1.0) < 1e-6

    for model, name in ((char_model, "char"), (word_model, "word")):
        path = tmp_path / f"{name}.arpa"
        write_arpa(model, path)
        back = read_arpa(path)
        for _ in range(200):
            seq = [str(s) for s in rng.choice(list(model.vocab), size=int(rng.integers(0, 6)))]
            assert abs(score_sequence(model, seq) - score_sequence(back, seq)) <= 1e-9

    # Witten-Bell bigram hand table: corpus "aab" -> streams (#,a,a,b,#)
    wb = train_char_lm(Corpus((("aab",),)), order=2)
    base = Fraction(1, 28)
    p1 = {"a": Fraction(2, 7) + Fraction(3, 7) * base,
          "b": Fraction(1, 7) + Fraction(3, 7) * base,
          "z": Fraction(3, 7) * base}
    for symbol, want in p1.items():
        assert math.exp(wb.token_logp(symbol, ())) == pytest.approx(float(want), abs=1e-12)
    assert math.exp(wb.token_logp("a", ("a",))) == pytest.approx(
        float(Fraction(1, 4) + Fraction(2, 4) * p1["a"]), abs=1e-12)
    assert math.exp(wb.token_logp("b", ("b",))) == pytest.approx(
        float(Fraction(1, 2) * p1["b"]), abs=1e-12)

    # fixed-discount Kneser-Ney hand table: corpus {a b, a c}, discount 0.7
    kn = train_word_lm(Corpus((("a", "b"), ("a", "c"))), order=2, discounts="fixed")
    for word, hist, want in [
        ("a", (), 0.172),            # 0.3/5 + 0.56 * 1/5 (continuation counts)
        (WORD_UNK, (), 0.112),       # pure backoff mass
        ("b", ("a",), 0.2704),       # 0.3/2 + 0.7 * 0.172
        (WORD_END, ("b",), 0.5604),  # 0.3/1 + 0.7 * 0.372
        ("a", (WORD_START,), 0.7102),
    ]:
        assert math.exp(kn.token_logp(word, hist)) == pytest.approx(want, abs=1e-12), (word, hist)
    ok("LM normalization (1000 contexts, 1e-6), ARPA drift <= 1e-9, hand oracles exact")


# ---------------------------------------------------------------------------
# 6. beam decoder agrees with exhaustive enumeration


def _random_typing_corpus(seed, n_words=130, n_sentences=220):
    rng = np.random.default_rng(seed)
    words = set()
    while len(words) < n_words:
        words.add("".join(rng.choice(list("abcdefghijklmnopqrstuvwxyz"),
                                     size=int(rng.integers(1, 6)))))
    words = sorted(words)
    weights = 1.0 / (1.0 + np.arange(len(words)))
    weights /= weights.sum()
    return Corpus(tuple(
        tuple(str(w) for w in rng.choice(words, size=int(rng.integers(3, 9)), p=weights))
        for _ in range(n_sentences)
    ))


def _noisy_observation(char, p_true, rng):
    hand, finger = KFMAP.hand_finger(char)
    others = [f for f in TYPING_FINGERS if f is not finger]
    rng.shuffle(others)
    split = rng.uniform(0.2, 0.8)
    probs = np.zeros(N_CLASSES)
    probs[finger.value] = p_true
    probs[others[0].value] = (1.0 - p_true) * split
    probs[others[1].value] = (1.0 - p_true) * (1.0 - split)
    return TapObservation(hand=hand, probs=probs / probs.sum())


def _enumerate_suggestions(observations, context, char_lm, word_lm, config):
    from tapentry.lm import CHAR_BOUNDARY

    choices = []
    for obs in observations:
        kept = [f for f in TYPING_FINGERS if obs.prob(f) >= config.finger_prune]
        if not kept:
            kept = [max(TYPING_FINGERS, key=obs.prob)]
        pairs = []
        for finger in kept:
            p = obs.prob(finger)
            term = math.log(p) if p > 0 else float("-inf")
            for char in KFMAP.characters_for(obs.hand, finger):
                pairs.append((char, term))
        choices.append(pairs)

    vocabulary = set(word_lm.vocab) - {WORD_START, WORD_END, WORD_UNK}
    context = tuple(context)
    history = (WORD_START,) + context[max(0, len(context) - config.word_context):]
    best_raw = None
    scored = {}
    for combo in itertools.product(*choices):
        chars = tuple(c for c, _ in combo)
        total = score_sequence(char_lm, chars, history=(CHAR_BOUNDARY,)) + sum(t for _, t in combo)
        word = "".join(chars)
        if best_raw is None or (-total, word) < best_raw[:2]:
            best_raw = (-total, word)
        if word in vocabulary:
            scored[word] = total + word_lm.token_logp(word, history)
    ranked = sorted(scored.items(), key=lambda kv: (-kv[1], kv[0]))
    return ranked[: config.max_suggestions], best_raw[1]


def test_decoder_oracle_equivalence():
    corpus = _random_typing_corpus(19)
    char_lm = train_char_lm(corpus, order=5)
    word_lm = train_word_lm(corpus, order=3, discounts="fixed")
    vocab = sorted(set(word_lm.vocab) - {WORD_END, WORD_START, WORD_UNK})
    assert len(vocab) <= 200
    config = DecoderConfig(beam_width=64)
    rng = np.random.default_rng(29)
    start = time.perf_counter()
    for trial in range(1000):
        word = vocab[int(rng.integers(len(vocab)))]
        context = tuple(vocab[int(rng.integers(len(vocab)))]
                        for _ in range(int(rng.integers(0, 3))))
        observations = [_noisy_observation(c, rng.uniform(0.7, 0.97), rng) for c in word]
        got = decode(observations, context, KFMAP, char_lm, word_lm, config)
        want, want_raw = _enumerate_suggestions(observations, context, char_lm, word_lm, config)
        assert got.words == tuple(w for w, _ in want), f"trial {trial}"
        assert got.raw_best == want_raw, f"trial {trial}"
        for (_, got_lp), (_, want_lp) in zip(got.entries, want):
            assert got_lp == pytest.approx(want_lp, abs=1e-9)
    elapsed = time.perf_counter() - start
    assert elapsed < 60.0, f"1000 trials took {elapsed:.1f} s"
    ok(f"decoder oracle equivalence (1000 trials, top-10 exact, {elapsed:.1f} s)")


# ---------------------------------------------------------------------------
# 7. calibrated posteriors beat overconfident ones at equal top-1 accuracy


def test_calibrated_vs_overconfident_recall_gap(desk_stack):
    char_lm, word_lm = desk_stack
    sim = SimulationConfig(phrases=desk_phrases(), ks=(1, 5, 10), seed=7, n_seeds=5)
    matrix = typing_confusion_matrix(0.9)
    calibrated = simulate_recall(sim, ConfusionSource(matrix, "calibrated"),
                                 KFMAP, char_lm, word_lm)
    overconfident = simulate_recall(sim, ConfusionSource(matrix, "overconfident"),
                                    KFMAP, char_lm, word_lm)
    assert calibrated.n_words * sim.n_seeds >= 1000
    gap = calibrated.recall[10] - overconfident.recall[10]
    assert gap >= 0.10, f"recall@10 gap {gap:.3f}"
    ok(f"calibration recall gap ({calibrated.recall[10]:.3f} vs "
       f"{overconfident.recall[10]:.3f}, gap {gap:.3f} >= 0.10, "
       f"{calibrated.n_words * sim.n_seeds} words)")


# ---------------------------------------------------------------------------
# 8. perfect-classifier ceiling on the 50-phrase desk corpus


def test_identity_classifier_ceiling(desk_stack):
    char_lm, word_lm = desk_stack
    phrases = desk_phrases()
    assert len(phrases) == 50
    sim = SimulationConfig(phrases=phrases, ks=(1, 10), seed=7)
    report = simulate_recall(sim, ConfusionSource(np.eye(6), "calibrated"),
                             KFMAP, char_lm, word_lm)
    assert report.recall[10] >= 0.95, f"recall@10 {report.recall[10]:.3f}"
    ok(f"perfect-classifier ceiling (recall@10 {report.recall[10]:.3f} >= 0.95)")


# ---------------------------------------------------------------------------
# 9. metrics: edit-distance oracle, exact WPM, replay determinism


def _edit_distance_full_matrix(a, b):
    d = np.zeros((len(a) + 1, len(b) + 1), dtype=int)
    d[:, 0] = np.arange(len(a) + 1)
    d[0, :] = np.arange(len(b) + 1)
    for i in range(1, len(a) + 1):
        for j in range(1, len(b) + 1):
            d[i, j] = min(d[i - 1, j] + 1, d[i, j - 1] + 1,
                          d[i - 1, j - 1] + (a[i - 1] != b[j - 1]))
    return int(d[len(a), len(b)])


def _random_script(rng, length):
    events = []
    for i in range(length):
        kind = rng.choice(["finger_tap", "space", "cycle", "delete_word",
                           "accept_char", "rejected"],
                          p=[0.55, 0.16, 0.09, 0.08, 0.06, 0.06])
        hand = Hand.LEFT if rng.random() < 0.5 else Hand.RIGHT
        if kind == "finger_tap":
            probs = rng.dirichlet(np.ones(4))
            full = np.zeros(N_CLASSES)
            for finger, p in zip(TYPING_FINGERS, probs):
                full[finger.value] = p
            obs = TapObservation(hand=hand, probs=full / full.sum(), timestamp=i)
            events.append(SessionEvent(kind, obs))
        elif kind == "rejected":
            events.append(SessionEvent(kind, Rejected(hand=hand, probs=np.full(6, 1 / 6))))
        else:
            events.append(SessionEvent(kind))
    return events


def test_metrics_and_replay_determinism(tmp_path):
    rng = np.random.default_rng(31)
    letters = list("ab c")
    for _ in range(10_000):
        a = "".join(rng.choice(letters, size=int(rng.integers(0, 11))))
        b = "".join(rng.choice(letters, size=int(rng.integers(1, 11))))
        assert cer(a, b) == pytest.approx(_edit_distance_full_matrix(a, b) / len(b))

    assert wpm(25, 60.0) == 5.0

    corpus = corpus_from_text("the cat sat on the mat\nthe dog ran to the park\n"
                              "a cat and a dog played\nthe fish swam in the pond")
    ctx = SessionContext(kfmap=KFMAP,
                         char_lm=train_char_lm(corpus, order=4),
                         word_lm=train_word_lm(corpus, order=2, discounts="fixed"))
    for script_no in range(100):
        events = _random_script(np.random.default_rng(1000 + script_no),
                                int(rng.integers(4, 16)))
        state_a, renders_a = replay(events, ctx)
        state_b, renders_b = replay(events, ctx)
        assert state_a == state_b
        assert renders_a == renders_b
        log = tmp_path / f"script_{script_no}.jsonl"
        write_event_log(events, log)
        state_c, renders_c = replay(read_event_log(log), ctx)
        assert renders_c == renders_a
    ok("metrics (10^4 edit-distance pairs, wpm(25, 60) = 5.0, 100 replayed scripts)")


# ---------------------------------------------------------------------------
# 10. end-to-end: scripted sessions transcribe phrases exactly under
#     identity noise, committing top-1 whenever the decoder ranks it top-1


def test_end_to_end_identity_transcription(desk_stack):
    char_lm, word_lm = desk_stack
    ctx = SessionContext(kfmap=KFMAP, char_lm=char_lm, word_lm=word_lm)
    phrases = desk_phrases()[:10]
    assert len(phrases) == 10
    for phrase in phrases:
        state = initial_state()
        for word in phrase.split():
            observations = [one_hot_observation(*KFMAP.hand_finger(c)) for c in word]
            isolated = decode(tuple(observations), state.committed,
                              KFMAP, char_lm, word_lm, ctx.config)
            for obs in observations:
                event = classify_event(obs)
                assert event.kind == "finger_tap"
                state, _ = apply(state, event, ctx)
            cycles = 0
            while state.suggestions[state.cursor][0] != word:
                state, _ = apply(state, SessionEvent("cycle"), ctx)
                cycles += 1
                assert cycles <= len(state.suggestions), f"{word} not in suggestions"
            if isolated.words and isolated.words[0] == word:
                assert cycles == 0, f"{word} ranked top-1 but needed {cycles} cycles"
            state, _ = apply(state, SessionEvent("space"), ctx)
        committed = " ".join(state.committed)
        assert cer(committed, phrase) == 0.0, f"{committed!r} vs {phrase!r}"
    ok("end-to-end transcription (10 phrases, CER 0, top-1 consistency)")
