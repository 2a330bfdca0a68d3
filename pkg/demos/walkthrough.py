#!/usr/bin/env python3
"""End-to-end tour of the pipeline on synthetic data.

Runs every stage in sequence and prints what each one produces: a synthetic
accelerometer stream, detected tap candidates, noisy finger posteriors,
beam-decoded suggestions, and a full interactive session transcribing a
phrase.  Takes a few seconds; no files are written.
"""

import numpy as np

from tapentry.classifier import ConfusionClassifier, typing_confusion_matrix
from tapentry.decoder import decode
from tapentry.domain import default_key_finger_map
from tapentry.imu import DetectorConfig, GeneratorSpec, detect_taps, synth_tap_stream
from tapentry.lm import corpus_from_text, train_char_lm, train_word_lm
from tapentry.session import SessionContext, SessionEvent, apply, classify_event, initial_state
from tapentry.textgen import desk_corpus, desk_phrases

LINE = "-" * 72


def stage(title):
    print(f"\n{LINE}\n{title}\n{LINE}")


def main():
    kfmap = default_key_finger_map()

    stage("1. synthetic accelerometer stream and tap detection")
    spec = GeneratorSpec(n_taps=12, ood_events=2)
    stream, labels = synth_tap_stream(spec, seed=4)
    candidates = detect_taps(stream, DetectorConfig())
    print(f"stream: {stream.samples.shape[0]} samples at {spec.sample_rate} Hz, "
          f"{len(labels)} labeled taps")
    print(f"detector: {len(candidates)} candidates at threshold "
          f"{DetectorConfig().activation_threshold} "
          f"({spec.ood_events} non-tap events are in the stream on purpose)")
    for cand in candidates[:5]:
        nearest = min(labels, key=lambda lab: abs(lab.t - cand.t_z))
        print(f"  candidate at sample {cand.t_z:6d}  nearest labeled burst "
              f"{nearest.t:6d} ({nearest.finger.name.lower()})")

    stage("2. language models from the generated desk corpus")
    corpus = corpus_from_text(desk_corpus())
    char_lm = train_char_lm(corpus, order=5)
    word_lm = train_word_lm(corpus, order=3)
    print(f"corpus: {len(corpus.sentences)} sentences")
    print(f"char model: order {char_lm.order}, {len(char_lm.vocab)} symbols")
    print(f"word model: order {word_lm.order}, {len(word_lm.vocab)} tokens")

    stage("3. noisy finger posteriors -> beam-decoded suggestions")
    phrase = desk_phrases()[0]
    print(f"phrase: {phrase!r}")
    classifier = ConfusionClassifier(typing_confusion_matrix(0.85), "calibrated",
                                     seed=np.random.default_rng(9))
    context = ()
    for word in phrase.split():
        observations = [classifier(kfmap.hand_finger(c)[1], hand=kfmap.hand_finger(c)[0])
                        for c in word]
        result = decode(observations, context, kfmap, char_lm, word_lm)
        strip = "  ".join(result.words[:5])
        print(f"  {word:10s} -> {strip}")
        context = context + (word,)

    stage("4. interactive session: taps, cycling, committing")
    ctx = SessionContext(kfmap=kfmap, char_lm=char_lm, word_lm=word_lm)
    state = initial_state()
    target = desk_phrases()[1]
    print(f"typing: {target!r}")
    for word in target.split():
        for char in word:
            hand, finger = kfmap.hand_finger(char)
            obs = classifier(finger, hand=hand)
            state, render = apply(state, classify_event(obs), ctx)
        print(f"  pending {render.pending_mask:8s} suggestions "
              f"{' '.join(state.suggestions.words[:4])}")
        cycles = 0
        while state.suggestions.words[state.cursor] != word and cycles < len(state.suggestions):
            state, _ = apply(state, SessionEvent("cycle"), ctx)
            cycles += 1
        state, render = apply(state, SessionEvent("space"), ctx)
        if cycles:
            print(f"    ({cycles} cycle presses to reach {word!r})")
    print(f"committed: {render.committed_text!r}")
    print(f"match: {render.committed_text == target}")


if __name__ == "__main__":
    main()
