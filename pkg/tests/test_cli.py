"""Command line: every subcommand drives the library through real files."""

import json

import pytest

from tapentry.cli import main
from tapentry.classifier import load_model
from tapentry.domain import default_key_finger_map, write_key_finger_map
from tapentry.evaluation import read_report
from tapentry.lm import read_arpa

CORPUS_TEXT = """the cat sat on the mat
the dog ran to the park
a cat and a dog played
the bird sang in the tree
she fed the cat some fish
he took the dog for a walk
the mat was by the door
a bird flew over the park
the fish swam in the pond
they eat fish by the tree
"""


@pytest.fixture(scope="module")
def stack(tmp_path_factory):
    """Corpus -> CLI-trained models + map, shared by the decoding tests."""
    root = tmp_path_factory.mktemp("stack")
    corpus = root / "corpus.txt"
    corpus.write_text(CORPUS_TEXT, encoding="utf-8")
    char_arpa = root / "char.arpa"
    word_arpa = root / "word.arpa"
    map_path = root / "map.txt"
    write_key_finger_map(default_key_finger_map(), map_path)
    assert main(["train-lm", "--kind", "char", "--order", "4",
                 "--in", str(corpus), "--out", str(char_arpa)]) == 0
    assert main(["train-lm", "--kind", "word", "--order", "2", "--discounts", "fixed",
                 "--in", str(corpus), "--out", str(word_arpa)]) == 0
    return {"corpus": corpus, "char": char_arpa, "word": word_arpa, "map": map_path, "root": root}


def stack_flags(stack):
    return ["--map", str(stack["map"]), "--char-lm", str(stack["char"]),
            "--word-lm", str(stack["word"])]


def test_train_lm_outputs_readable_arpa(stack, capsys):
    char_lm = read_arpa(stack["char"])
    word_lm = read_arpa(stack["word"])
    assert char_lm.kind == "char" and char_lm.order == 4
    assert word_lm.kind == "word" and word_lm.order == 2
    assert "the" in word_lm.vocab


def test_train_lm_missing_file(tmp_path, capsys):
    code = main(["train-lm", "--kind", "char",
                 "--in", str(tmp_path / "nope.txt"), "--out", str(tmp_path / "x.arpa")])
    assert code == 1
    assert "error:" in capsys.readouterr().err


def test_select_corpus(stack, tmp_path, capsys):
    query = tmp_path / "query.txt"
    query.write_text(CORPUS_TEXT + "zq zq zq\nxw xw xw\n", encoding="utf-8")
    prefix = str(tmp_path / "kept_")
    code = main(["select-corpus", "--in-domain", str(stack["corpus"]), "--query", str(query),
                 "--thresholds=-5,0", "--order", "2", "--out-prefix", prefix])
    assert code == 0
    out = capsys.readouterr().out
    assert "threshold -5" in out and "threshold 0" in out
    loose = (tmp_path / "kept_-5.txt").read_text(encoding="utf-8").splitlines()
    tight = (tmp_path / "kept_0.txt").read_text(encoding="utf-8").splitlines()
    assert len(tight) <= len(loose)


def test_train_classifier_writes_checkpoint(tmp_path, capsys):
    out = tmp_path / "model.tapc"
    code = main(["train-classifier", "--taps-per-class", "8", "--ood", "8",
                 "--epochs", "2", "--out", str(out)])
    assert code == 0
    text = capsys.readouterr().out
    assert "macro-F1" in text and "checkpoint" in text
    model, config = load_model(out)
    from tapentry.classifier import default_architecture

    assert config.architecture == default_architecture(bayesian=True)
    assert model.stats is not None


def test_simulate_identity_report(stack, tmp_path, capsys):
    phrases = tmp_path / "phrases.txt"
    phrases.write_text("the cat sat\nthe dog ran\n", encoding="utf-8")
    out = tmp_path / "report.json"
    code = main(["simulate", "--phrases", str(phrases), "--k", "1,2",
                 "--classifier", "confusion:1.0:calibrated", "--seed", "3",
                 "--out", str(out), *stack_flags(stack)])
    assert code == 0
    text = capsys.readouterr().out
    assert "recall@1" in text and "wpm" in text
    report = read_report(out)
    assert report.recall[1] == pytest.approx(1.0)
    assert report.n_words == 6


def test_simulate_bad_classifier_spec(stack, tmp_path, capsys):
    phrases = tmp_path / "phrases.txt"
    phrases.write_text("the cat sat\n", encoding="utf-8")
    code = main(["simulate", "--phrases", str(phrases),
                 "--classifier", "psychic", *stack_flags(stack)])
    assert code == 1
    assert "classifier spec" in capsys.readouterr().err


def test_decode_command(stack, tmp_path, capsys):
    one_hot = {
        "t": ("L", 1), "h": ("R", 1), "e": ("L", 2),
    }
    observations = []
    for char in "the":
        hand, finger = one_hot[char]
        probs = [0.0] * 6
        probs[finger] = 1.0
        observations.append({"hand": hand, "probs": probs})
    obs_path = tmp_path / "obs.json"
    obs_path.write_text(json.dumps(observations), encoding="utf-8")
    code = main(["decode", "--obs", str(obs_path), *stack_flags(stack)])
    assert code == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["suggestions"][0]["word"] == "the"
    assert payload["raw_best"] == "the"


def test_decode_rejects_bad_hand(stack, tmp_path, capsys):
    obs_path = tmp_path / "obs.json"
    obs_path.write_text(json.dumps([{"hand": "Z", "probs": [1, 0, 0, 0, 0, 0]}]), encoding="utf-8")
    code = main(["decode", "--obs", str(obs_path), *stack_flags(stack)])
    assert code == 1
    assert "hand" in capsys.readouterr().err


def test_eval_table(capsys):
    code = main(["eval", "--taps-per-class", "8", "--ood", "8", "--epochs", "2"])
    assert code == 0
    out = capsys.readouterr().out
    assert "variational" in out and "point" in out
    assert "macro_f1" in out


def test_serve_rejects_bad_bind(stack):
    with pytest.raises(SystemExit):
        main(["serve", "--bind", "nocolon", *stack_flags(stack)])


def test_unknown_command_exits():
    with pytest.raises(SystemExit):
        main(["transmogrify"])
