"""Unified command line for the tap-typing pipeline.

One subcommand per stage: language-model training and corpus selection,
classifier training, recall simulation, one-shot decoding, the
classifier comparison table, and the demo service.  Every subcommand
reads and writes the same on-disk formats the library uses (one
sentence per line corpora, ARPA models, key-finger map files, model
checkpoints, JSON reports).
"""

import argparse
import json
import sys
from dataclasses import replace

import numpy as np

from . import service
from .classifier import (
    ClassifierConfig,
    ClassifierError,
    default_architecture,
    load_model,
    make_dataset,
    save_model,
    split_dataset,
    train,
    typing_confusion_matrix,
)
from .classifier.metrics import metrics as validation_metrics
from .classifier.training import OOD, preprocess
from .classifier.network import predict as model_predict
from .decoder import DecoderConfig, decode
from .domain import (
    DomainError,
    Hand,
    Rejected,
    TapObservation,
    default_key_finger_map,
    load_phrase_set,
    read_key_finger_map,
)
from .evaluation import (
    ConfusionSource,
    EvalError,
    ModelSource,
    SimulationConfig,
    compare_classifiers,
    simulate_recall,
)
from .imu import GeneratorSpec, calibration_benchmark_spec
from .lm import (
    LmError,
    load_corpus,
    read_arpa,
    save_corpus,
    select_corpus,
    train_char_lm,
    train_word_lm,
    write_arpa,
)
from .service import ServiceError

_HANDS = {"L": Hand.LEFT, "R": Hand.RIGHT}


def _comma_floats(text):
    try:
        return tuple(float(part) for part in text.split(",") if part.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated float list: {text!r}")


def _comma_ints(text):
    try:
        return tuple(int(part) for part in text.split(",") if part.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated int list: {text!r}")


def _bind(text):
    host, sep, port = text.rpartition(":")
    if not sep or not host:
        raise argparse.ArgumentTypeError(f"bind address must be host:port, got {text!r}")
    try:
        return host, int(port)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad port in {text!r}")


def _load_stack(args):
    kfmap = read_key_finger_map(args.map)
    return kfmap, read_arpa(args.char_lm), read_arpa(args.word_lm)


# ---------------------------------------------------------------------------
# subcommands


def cmd_train_lm(args):
    corpus = load_corpus(args.corpus)
    if args.kind == "char":
        model = train_char_lm(corpus, order=args.order if args.order else 5)
    else:
        model = train_word_lm(corpus, order=args.order if args.order else 3, discounts=args.discounts)
    write_arpa(model, args.out)
    print(f"trained {args.kind} model: order {model.order}, "
          f"{len(corpus)} sentences, {len(model.vocab)} vocabulary entries -> {args.out}")
    return 0


def cmd_select_corpus(args):
    query = load_corpus(args.query)
    in_domain = load_corpus(args.in_domain)
    result = select_corpus(query, in_domain, args.thresholds,
                           order=args.order, seed=args.seed, sample_size=args.sample_size)
    for threshold in args.thresholds:
        selected = result.selected[threshold]
        out_path = f"{args.out_prefix}{threshold:g}.txt"
        save_corpus(selected, out_path)
        print(f"threshold {threshold:g}: kept {len(selected)}/{len(query)} sentences -> {out_path}")
    return 0


def cmd_train_classifier(args):
    spec = calibration_benchmark_spec()
    if args.noise_std is not None:
        spec = replace(spec, noise_std=args.noise_std)
    dataset = make_dataset(spec, args.taps_per_class, args.ood, seed=args.data_seed)
    config = ClassifierConfig(
        architecture=default_architecture(bayesian=not args.plain),
        epochs=args.epochs,
        kl_scale=args.kl_scale,
    )
    train_part, holdout = split_dataset(dataset, args.holdout, seed=args.split_seed)
    model, stats = train(train_part, config, seed=args.train_seed)

    fingers = [item for item in holdout if item.label is not OOD]
    rng = np.random.default_rng(args.predict_seed)
    probs, labels, rejected_ood = [], [], 0
    for item in fingers:
        x = preprocess(item.window, item.hand, model.stats)
        probs.append(model_predict(model, x, item.hand, config, rng=rng).probs)
        labels.append(item.label)
    scores = validation_metrics(probs, labels)
    ood_items = [item for item in holdout if item.label is OOD]
    for item in ood_items:
        x = preprocess(item.window, item.hand, model.stats)
        out = model_predict(model, x, item.hand, config, rng=rng)
        rejected_ood += isinstance(out, Rejected)

    save_model(model, config, args.out)
    print(f"trained on {len(train_part)} windows ({args.epochs} epochs), final loss {stats.total[-1]:.4f}")
    print(f"holdout macro-F1 {scores['macro_f1']:.3f}  ece {scores['ece']:.3f}  nll {scores['nll']:.3f}")
    if ood_items:
        print(f"holdout rejection {rejected_ood}/{len(ood_items)} out-of-distribution windows")
    print(f"wrote checkpoint -> {args.out}")
    return 0


def _tap_source(text, window_len):
    """Parse --classifier: confusion:<accuracy>:<mode> or model:<checkpoint>."""
    parts = text.split(":")
    if parts[0] == "confusion" and len(parts) == 3:
        return ConfusionSource(typing_confusion_matrix(float(parts[1])), parts[2])
    if parts[0] == "model" and len(parts) >= 2:
        model, config = load_model(":".join(parts[1:]))
        return ModelSource(model, config, GeneratorSpec(), window_len=window_len)
    raise DomainError(f"bad classifier spec {text!r} "
                      "(expected confusion:<accuracy>:<mode> or model:<path>)")


def cmd_simulate(args):
    kfmap, char_lm, word_lm = _load_stack(args)
    phrases = load_phrase_set(args.phrases).phrases
    source = _tap_source(args.classifier, args.window_len)
    sim = SimulationConfig(phrases=phrases, ks=args.k, seed=args.seed,
                           n_seeds=args.n_seeds, tap_rate=args.tap_rate)
    report = simulate_recall(sim, source, kfmap, char_lm, word_lm)
    for k in report.ks:
        print(f"recall@{k:<3d} {report.recall[k]:.4f} +/- {report.recall_se[k]:.4f}")
    print(f"wpm {report.wpm_mean:.2f} +/- {report.wpm_se:.2f}")
    print(f"cer {report.cer_mean:.4f} +/- {report.cer_se:.4f}")
    print(f"({report.n_words} words, {report.n_seeds} seeds; {report.note})")
    if args.out:
        report.write_json(args.out)
        print(f"wrote report -> {args.out}")
    return 0


def cmd_decode(args):
    kfmap, char_lm, word_lm = _load_stack(args)
    with open(args.obs, encoding="utf-8") as fh:
        raw = json.load(fh)
    if not isinstance(raw, list) or not raw:
        raise DomainError(f"{args.obs}: expected a nonempty JSON list of observations")
    observations = []
    for i, entry in enumerate(raw):
        hand = _HANDS.get(entry.get("hand"))
        if hand is None:
            raise DomainError(f"{args.obs}[{i}]: hand must be 'L' or 'R'")
        observations.append(TapObservation(
            hand=hand, probs=np.asarray(entry["probs"], dtype=np.float64), timestamp=i))
    context = tuple(args.context.split()) if args.context else ()
    config = DecoderConfig(beam_width=args.beam_width)
    suggestions = decode(tuple(observations), context, kfmap, char_lm, word_lm, config)
    print(json.dumps({
        "suggestions": [{"word": word, "score": float(score)} for word, score in suggestions.entries],
        "raw_best": suggestions.raw_best,
    }, indent=2))
    return 0


def cmd_eval(args):
    dataset = make_dataset(calibration_benchmark_spec(), args.taps_per_class, args.ood,
                           seed=args.data_seed)
    shared = dict(epochs=args.epochs, kl_scale=args.kl_scale)
    variants = [
        ("variational", ClassifierConfig(architecture=default_architecture(bayesian=True), **shared)),
        ("point", ClassifierConfig(architecture=default_architecture(bayesian=False), **shared)),
    ]
    rows = compare_classifiers(variants, dataset, default_key_finger_map())
    print(f"{'classifier':<12} {'macro_f1':>9} {'ece':>7} {'nll':>7} {'rejection':>10}")
    for row in rows:
        print(f"{row['name']:<12} {row['macro_f1']:>9.3f} {row['ece']:>7.3f} "
              f"{row['nll']:>7.3f} {row['rejection']:>10.3f}")
    return 0


def cmd_serve(args):
    host, port = args.bind
    context = service.load_context(args.char_lm, args.word_lm, args.map)
    print(f"serving on {host}:{port} (websocket /session, health /healthz)")
    service.serve(context, host, port)
    return 0


# ---------------------------------------------------------------------------
# parser


def _add_stack_flags(sub):
    sub.add_argument("--map", required=True, help="key-finger map file")
    sub.add_argument("--char-lm", required=True, help="character model (ARPA)")
    sub.add_argument("--word-lm", required=True, help="word model (ARPA)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tapentry",
                                     description="surface-tap text entry pipeline")
    commands = parser.add_subparsers(dest="command", required=True)

    sub = commands.add_parser("train-lm", help="train an n-gram model and write ARPA")
    sub.add_argument("--kind", choices=("char", "word"), required=True)
    sub.add_argument("--order", type=int, default=0, help="n-gram order (default: 5 char / 3 word)")
    sub.add_argument("--in", dest="corpus", required=True, help="corpus, one sentence per line")
    sub.add_argument("--out", required=True, help="ARPA destination")
    sub.add_argument("--discounts", choices=("auto", "fixed"), default="auto",
                     help="word-model discounting (ignored for char)")
    sub.set_defaults(func=cmd_train_lm)

    sub = commands.add_parser("select-corpus", help="cross-entropy-difference sentence selection")
    sub.add_argument("--in-domain", required=True, help="corpus defining the target domain")
    sub.add_argument("--query", required=True, help="corpus to filter")
    sub.add_argument("--thresholds", type=_comma_floats, required=True,
                     help="comma-separated score cutoffs, one output corpus each")
    sub.add_argument("--order", type=int, default=4)
    sub.add_argument("--seed", type=int, default=0)
    sub.add_argument("--sample-size", type=int, default=None)
    sub.add_argument("--out-prefix", default="selected_", help="output path prefix")
    sub.set_defaults(func=cmd_select_corpus)

    sub = commands.add_parser("train-classifier", help="train the variational tap classifier")
    sub.add_argument("--taps-per-class", type=int, default=360)
    sub.add_argument("--ood", type=int, default=360, help="out-of-distribution training windows")
    sub.add_argument("--noise-std", type=float, default=None, help="override generator noise")
    sub.add_argument("--epochs", type=int, default=45)
    sub.add_argument("--kl-scale", type=float, default=0.1)
    sub.add_argument("--plain", action="store_true", help="point-estimate network, no variational layers")
    sub.add_argument("--holdout", type=float, default=0.2)
    sub.add_argument("--data-seed", type=int, default=5)
    sub.add_argument("--split-seed", type=int, default=6)
    sub.add_argument("--train-seed", type=int, default=11)
    sub.add_argument("--predict-seed", type=int, default=99)
    sub.add_argument("--out", required=True, help="checkpoint destination")
    sub.set_defaults(func=cmd_train_classifier)

    sub = commands.add_parser("simulate", help="phrase-level recall/WPM/CER simulation")
    sub.add_argument("--phrases", required=True, help="phrase file, one per line")
    sub.add_argument("--classifier", default="confusion:1.0:calibrated",
                     help="confusion:<accuracy>:<calibrated|overconfident> or model:<checkpoint>")
    sub.add_argument("--k", type=_comma_ints, default=(1, 2, 3, 4, 5, 10, 20))
    sub.add_argument("--seed", type=int, default=7)
    sub.add_argument("--n-seeds", type=int, default=1, help="independent simulation repeats")
    sub.add_argument("--tap-rate", type=float, default=2.0, help="taps per second for WPM")
    sub.add_argument("--window-len", type=int, default=128, help="model-source window length")
    sub.add_argument("--out", default=None, help="write the report JSON here")
    _add_stack_flags(sub)
    sub.set_defaults(func=cmd_simulate)

    sub = commands.add_parser("decode", help="decode one observation sequence to suggestions")
    sub.add_argument("--obs", required=True, help="JSON list of {hand: L|R, probs: [6]}")
    sub.add_argument("--context", default="", help="preceding words, space separated")
    sub.add_argument("--beam-width", type=int, default=64)
    _add_stack_flags(sub)
    sub.set_defaults(func=cmd_decode)

    sub = commands.add_parser("eval", help="variational vs point classifier comparison table")
    sub.add_argument("--taps-per-class", type=int, default=360)
    sub.add_argument("--ood", type=int, default=360)
    sub.add_argument("--epochs", type=int, default=45)
    sub.add_argument("--kl-scale", type=float, default=0.1)
    sub.add_argument("--data-seed", type=int, default=5)
    sub.set_defaults(func=cmd_eval)

    sub = commands.add_parser("serve", help="run the WebSocket demo backend")
    sub.add_argument("--bind", type=_bind, default=("127.0.0.1", 8765), help="host:port")
    _add_stack_flags(sub)
    sub.set_defaults(func=cmd_serve)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (LmError, DomainError, ClassifierError, EvalError, ServiceError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
