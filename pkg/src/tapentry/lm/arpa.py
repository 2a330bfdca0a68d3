"""ARPA-format persistence for back-off n-gram models.

The text format keeps a \\data\\ header with per-order n-gram counts,
then one section per order with tab-separated fields: log10 probability,
space-joined n-gram, and (for contexts) a log10 back-off weight.  Natural
logs are used everywhere else in this package; the base conversion happens
only here.  Probabilities are printed with 17 significant digits so a
write/read round trip reproduces scores to within float rounding.

The sentence-start token of word models is context-only: it appears as a
unigram line with the conventional -99 placeholder probability carrying
its back-off weight, and is skipped when reading.
"""

import math
from pathlib import Path

from tapentry.lm.backoff import BackoffModel, CHAR_BOUNDARY, WORD_START
from tapentry.lm.corpus import LmError

_LN10 = math.log(10.0)
_PLACEHOLDER = "-99"


def _fmt(natural_log: float) -> str:
    return "%.17g" % (natural_log / _LN10)


def write_arpa(model: BackoffModel, destination) -> None:
    """Write a trained model to `destination` (path or text file object)."""
    if hasattr(destination, "write"):
        _write(model, destination)
    else:
        with open(destination, "w", encoding="utf-8") as handle:
            _write(model, handle)


def _write(model: BackoffModel, out) -> None:
    sections = {k: [] for k in range(1, model.order + 1)}
    for gram in model.logp:
        sections[len(gram)].append(gram)
    for context in model.bow:
        if context not in model.logp:
            if len(context) != 1:
                raise LmError(
                    f"back-off weight for unrepresentable context {context!r}")
            sections[1].append(context)
    for grams in sections.values():
        grams.sort()

    out.write("\\data\\\n")
    for k in range(1, model.order + 1):
        out.write(f"ngram {k}={len(sections[k])}\n")
    for k in range(1, model.order + 1):
        out.write(f"\n\\{k}-grams:\n")
        for gram in sections[k]:
            logp = model.logp.get(gram)
            fields = [_PLACEHOLDER if logp is None else _fmt(logp),
                      " ".join(gram)]
            bow = model.bow.get(gram)
            if bow is not None and len(gram) < model.order:
                fields.append(_fmt(bow))
            out.write("\t".join(fields) + "\n")
    out.write("\n\\end\\\n")


def read_arpa(source) -> BackoffModel:
    """Read an ARPA file back into a model; parse errors carry line numbers."""
    if hasattr(source, "read"):
        return _parse(source, getattr(source, "name", "<arpa>"))
    with open(source, encoding="utf-8") as handle:
        return _parse(handle, str(source))


def _parse(handle, name: str) -> BackoffModel:
    def fail(line_no, message):
        raise LmError(f"{name}:{line_no}: {message}")

    expected = {}
    seen_sections = set()
    logp = {}
    bow = {}
    state = "preamble"
    section = 0
    section_lines = 0

    def close_section(line_no):
        if section and section_lines != expected[section]:
            fail(line_no, f"section {section} has {section_lines} entries, "
                          f"header announced {expected[section]}")

    line_no = 0
    for line_no, line in enumerate(handle, start=1):
        line = line.rstrip("\n")
        if state == "preamble":
            if not line.strip():
                continue
            if line.strip() != "\\data\\":
                fail(line_no, f"expected \\data\\ header, got {line!r}")
            state = "counts"
        elif state == "counts":
            if not line.strip():
                continue
            if line.startswith("\\"):
                state = "grams"
            else:
                parts = line.split("=")
                if len(parts) != 2 or not parts[0].startswith("ngram "):
                    fail(line_no, f"bad count line {line!r}")
                try:
                    k = int(parts[0][len("ngram "):])
                    expected[k] = int(parts[1])
                except ValueError:
                    fail(line_no, f"bad count line {line!r}")
                continue
        if state == "grams":
            if not line.strip():
                continue
            if line.startswith("\\"):
                close_section(line_no)
                if line.strip() == "\\end\\":
                    state = "done"
                    continue
                tag = line.strip()
                if not tag.endswith("-grams:"):
                    fail(line_no, f"unexpected section header {tag!r}")
                try:
                    section = int(tag[1:-len("-grams:")])
                except ValueError:
                    fail(line_no, f"unexpected section header {tag!r}")
                if section not in expected:
                    fail(line_no, f"section {section} missing from header")
                seen_sections.add(section)
                section_lines = 0
                continue
            if not section:
                fail(line_no, f"entry outside any section: {line!r}")
            fields = line.split("\t")
            if len(fields) not in (2, 3):
                fail(line_no, f"expected 2 or 3 tab-separated fields, "
                              f"got {len(fields)}")
            try:
                prob10 = float(fields[0])
            except ValueError:
                fail(line_no, f"bad probability {fields[0]!r}")
            gram = tuple(fields[1].split(" "))
            if len(gram) != section or "" in gram:
                fail(line_no, f"n-gram {fields[1]!r} does not match "
                              f"section order {section}")
            logp[gram] = prob10 * _LN10
            section_lines += 1
            if len(fields) == 3:
                try:
                    bow[gram] = float(fields[2]) * _LN10
                except ValueError:
                    fail(line_no, f"bad back-off weight {fields[2]!r}")
        elif state == "done":
            if line.strip():
                fail(line_no, f"content after \\end\\: {line!r}")

    if state != "done":
        fail(line_no, "missing \\end\\ marker")
    if not expected:
        fail(line_no, "no n-gram counts in header")
    order = max(expected)
    if sorted(expected) != list(range(1, order + 1)):
        fail(line_no, f"non-contiguous n-gram orders {sorted(expected)}")
    missing = [k for k, count in expected.items()
               if count > 0 and k not in seen_sections]
    if missing:
        fail(line_no, f"header announces orders {missing} with no section")

    unigrams = {gram[0] for gram in logp if len(gram) == 1}
    if WORD_START in unigrams:
        kind = "word"
        del logp[(WORD_START,)]
        unigrams.discard(WORD_START)
    elif CHAR_BOUNDARY in unigrams:
        kind = "char"
    else:
        fail(line_no, "cannot infer model kind: no start symbol in unigrams")
    return BackoffModel(kind, order, tuple(sorted(unigrams)), logp, bow)
