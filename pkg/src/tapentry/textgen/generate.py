"""Deterministic template-based sentence generator.

Assembles a synthetic English corpus from the hand-written word bank: noun
stems are grouped by theme, verbs and adjectives are inflected on the fly,
and a set of clause templates with number/person agreement produces
declaratives, negations, questions, imperatives, and compounds.  The same
pools drive ``vocabulary``, so every word the generator can emit is
enumerable without sampling.

Sampling is seeded and fully reproducible: a single numpy generator drives
every choice, and open-class lookups use a fixed zipf-style weighting so
that early entries in each bank list behave as the common words.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from tapentry.textgen import bank, morph

# ---------------------------------------------------------------------------
# closed-class pools

_PRONOUN_SUBJECTS = ("i", "you", "he", "she", "it", "we", "they")
_PRONOUN_AGR = {
    "i": "1sg",
    "you": "2",
    "he": "3sg",
    "she": "3sg",
    "it": "3sg",
    "we": "pl",
    "they": "pl",
}
_REFLEXIVE = {
    "i": "myself",
    "you": "yourself",
    "he": "himself",
    "she": "herself",
    "it": "itself",
    "we": "ourselves",
    "they": "themselves",
}
_BE = {"1sg": ("am", "was"), "2": ("are", "were"), "3sg": ("is", "was"), "pl": ("are", "were")}
_BE_CONTR = {
    "i": "i'm",
    "you": "you're",
    "he": "he's",
    "she": "she's",
    "it": "it's",
    "we": "we're",
    "they": "they're",
}
_HAVE_CONTR = {
    "i": "i've",
    "you": "you've",
    "he": "he's",
    "she": "she's",
    "it": "it's",
    "we": "we've",
    "they": "they've",
}
_WILL_CONTR = {
    "i": "i'll",
    "you": "you'll",
    "he": "he'll",
    "she": "she'll",
    "we": "we'll",
    "they": "they'll",
}
_WOULD_CONTR = {
    "i": "i'd",
    "you": "you'd",
    "he": "he'd",
    "she": "she'd",
    "we": "we'd",
    "they": "they'd",
}

_INDEFINITES = ("someone", "everyone", "nobody", "somebody", "everybody", "something", "nothing", "everything")
_NEG_OBJECTS = ("anyone", "anything", "anybody")
_POSS_PRONOUNS = ("mine", "yours", "his", "hers", "ours", "theirs")

_SG_DETS = ("the", "a", "this", "that", "some", "every", "each", "another", "no", "any", "one", "either", "neither")
_PL_DETS = ("the", "these", "those", "some", "many", "all", "few", "several", "most", "both", "no", "any")
_MASS_DETS = ("the", "some", "this", "that", "much", "no", "any", "all", "most")
_CARDINALS = (
    "two", "three", "four", "five", "six", "seven", "eight", "nine", "ten",
    "eleven", "twelve", "thirteen", "fourteen", "fifteen", "sixteen",
    "seventeen", "eighteen", "nineteen", "twenty", "thirty", "forty", "fifty",
    "sixty", "seventy", "eighty", "ninety",
)
_BIG_CARDINALS = ("hundred", "thousand", "million", "dozen")
_ORDINALS = ("first", "second", "third", "fourth", "fifth", "sixth", "seventh", "eighth", "ninth", "tenth")

_VERB_PREPS = (
    "in", "on", "at", "to", "with", "for", "by", "from", "near", "under",
    "over", "behind", "beside", "between", "among", "through", "across",
    "along", "around", "past", "against", "before", "after", "until", "since",
    "during", "above", "below", "within", "without", "beneath", "beyond",
    "inside", "outside", "onto", "into", "upon", "off", "toward",
)
_PLACE_PREPS = (
    "in", "on", "at", "under", "near", "behind", "beside", "by", "over",
    "between", "among", "inside", "outside", "against", "beneath", "upon",
)

_COORD = ("and", "and", "and", "but", "but", "or", "so", "because", "although", "though", "while", "when", "if", "unless", "yet")
_SUBORD = ("when", "if", "because", "although", "while", "unless", "once", "whenever", "wherever", "as")

_DEGREE = ("very", "quite", "rather", "too", "almost", "somewhat")
_FREQ = ("often", "always", "never", "sometimes", "usually", "rarely", "seldom", "just", "also", "still", "already")
_FINAL = (
    "now", "then", "here", "there", "today", "tonight", "soon", "again",
    "away", "back", "together", "twice", "once", "nearby", "overnight",
)
_PLACE_FINAL = ("everywhere", "somewhere", "elsewhere", "nowhere") + bank.PLACE_ADVERBS
_FRONTED = (
    "maybe", "perhaps", "meanwhile", "however", "therefore", "otherwise",
    "moreover", "indeed", "besides", "somehow", "anyhow", "instead", "anyway",
    "yesterday", "today", "tomorrow", "tonight", "then", "soon", "still",
)
_PARTICLES = ("down", "up", "out", "off", "away", "back", "forward", "backward", "apart")

_TIME_CHUNKS = (
    ("at", "noon"), ("at", "midnight"), ("at", "dawn"), ("at", "dusk"),
    ("at", "night"), ("at", "sunrise"), ("at", "sunset"), ("at", "once"),
    ("in", "spring"), ("in", "summer"), ("in", "autumn"), ("in", "winter"),
    ("in", "time"), ("on", "time"), ("all", "day"), ("all", "night"),
    ("all", "week"), ("all", "year"), ("every", "day"), ("every", "night"),
    ("every", "morning"), ("every", "week"), ("each", "morning"),
    ("each", "evening"), ("last", "night"), ("last", "week"), ("last", "year"),
    ("next", "week"), ("next", "year"), ("this", "morning"), ("this", "evening"),
    ("this", "week"), ("this", "year"), ("so", "far"), ("for", "now"),
)

_NEG_DO = {"present": {"3sg": "doesn't", "other": "don't"}, "past": "didn't"}
_NEG_BE = {"present": {"3sg": "isn't", "other": "aren't"}, "past": {"3sg": "wasn't", "other": "weren't"}}
_NEG_MODALS = ("can't", "won't", "couldn't", "wouldn't", "shouldn't", "mustn't")
_NEG_HAVE = {"present": {"3sg": "hasn't", "other": "haven't"}, "past": "hadn't"}

# verb-stem subsets that unlock template variants
_DITRANS_STEMS = frozenset("give send bring show teach lend sell pay offer promise".split())
_INFINITIVE_TAKERS = frozenset("want need like love hate prefer try start begin continue refuse promise offer learn plan".split())
_SPEECH_STEMS = frozenset("talk speak dream complain argue joke worry care".split())
_MOTION_STEMS = frozenset("go come run walk travel wander roam march hurry rush crawl climb drift stroll gallop trot".split())
_PARTICLE_STEMS = frozenset("sit stand fall run walk jump climb crawl look march hurry rush drift bounce swing lean".split())
_REFLEXIVE_STEMS = ("enjoy", "teach", "dress", "wash", "blame", "trust")
_IMP_TRANS = (
    "open", "close", "bring", "fetch", "take", "carry", "hold", "wash",
    "clean", "fix", "find", "watch", "keep", "move", "lift", "cut", "pour",
    "fill", "mix", "stir", "serve", "pack", "load", "light", "lock", "shut",
    "answer", "call", "help", "feed",
)
_IMP_INTRANS = ("come", "go", "run", "walk", "wait", "stay", "listen", "look", "sit", "stand", "hurry", "rest", "relax", "smile", "dance", "sleep", "breathe")
_WH_SEE = ("see", "hear", "find", "want", "need", "make", "bring", "buy", "eat", "choose")
_WH_WHO = ("break", "open", "take", "find", "bring", "make", "eat", "steal", "drink", "leave")
_WH_HOW = ("know", "find", "make", "fix", "solve")
_WOULD_LIKE = ("like", "love", "prefer")

# adjectives whose -er/-est forms are real words; everything else would need
# more/most, which the templates simply avoid
_GRADABLE = tuple(
    """big small large long short tall wide narrow thick thin deep high low
    heavy light fast slow quick early late new old young fresh clean dirty neat
    messy tidy empty full near close hot cold warm cool mild wet dry damp soft
    hard smooth rough sharp dull bright dark dim pale clear cloudy foggy sunny
    rainy snowy windy stormy calm quiet loud noisy strong weak firm loose tight
    rich poor cheap dear free busy lazy lively weary sleepy keen happy sad glad
    sorry angry mad brave bold shy proud humble vain kind mean gentle rude
    friendly true greedy wise silly clever smart simple plain fancy pretty
    lovely ugly cute sweet sour salty spicy bland tasty hungry thirsty sick
    healthy fit safe risky funny strange odd weird rare grand great fine nice
    flat steep round noble tame ripe raw tough crisp sturdy dense sparse vast
    tiny slight harsh bleak grim gloomy merry jolly lonely steady swift tardy
    muddy dusty misty frosty smoky greasy oily milky creamy sandy rocky thorny
    leafy grassy bushy hairy furry silky rusty mossy hilly stony""".split()
)

_MANNER_STEMS = tuple(
    """quick slow soft loud quiet brave gentle calm neat proud eager polite
    rude kind sweet firm swift steady sudden happy angry sad glad lazy nervous
    patient honest foolish wise clever smart plain fair wild tender harsh grim
    merry bold bright tight warm cold""".split()
)
_MANNER_LESS_STEMS = tuple("care use hope pain harm fear help end mercy motion breath blame limit worth thought".split())

# a/an choice is orthographic except for a few pronunciations
_AN_EXCEPTIONS = frozenset(("hour", "honest", "honor", "herb"))
_A_EXCEPTIONS = ("uni", "use", "usu", "usa")


# ---------------------------------------------------------------------------
# lexicon assembly


@dataclass(frozen=True)
class VerbEntry:
    """All surface forms of one verb plus whether it takes an object."""

    base: str
    third: str
    past: str
    part: str
    ger: str
    takes_object: bool


def _entry(stem: str, takes_object: bool, prefix: str = "") -> VerbEntry:
    return VerbEntry(
        prefix + stem,
        prefix + morph.third_person(stem),
        prefix + morph.past_tense(stem),
        prefix + morph.past_participle(stem),
        prefix + morph.gerund(stem),
        takes_object,
    )


@dataclass(frozen=True)
class Lexicon:
    themes: dict
    trans: tuple
    intrans: tuple
    ditrans: tuple
    by_base: dict
    adjectives: tuple
    manner: tuple


@lru_cache(maxsize=1)
def _lexicon() -> Lexicon:
    themes = dict(bank.NOUN_THEMES)
    agents = tuple(morph.agent_noun(v) for v in bank.AGENT_VERBS)
    themes["people"] = themes["people"] + tuple(a for a in agents if a not in themes["people"])
    themes["abstract"] = themes["abstract"] + tuple(morph.nounify(a) for a in bank.NESS_ADJECTIVES)

    trans = [_entry(v, True) for v in dict.fromkeys(bank.VERBS_TRANSITIVE)]
    intrans = [_entry(v, False) for v in dict.fromkeys(bank.VERBS_INTRANSITIVE)]
    for stem in dict.fromkeys(bank.RE_VERBS):
        if stem == "appear":
            intrans.append(_entry(stem, False, prefix="re"))
        else:
            trans.append(_entry(stem, True, prefix="re"))

    by_base = {}
    for entry in trans + intrans:
        by_base.setdefault(entry.base, entry)
    ditrans = tuple(e for e in trans if e.base in _DITRANS_STEMS)

    adjectives = tuple(
        dict.fromkeys(
            bank.ADJECTIVES
            + tuple("un" + a for a in bank.UN_ADJECTIVES)
            + tuple(morph.ful_adjective(n) for n in bank.FUL_NOUNS)
            + tuple(morph.less_adjective(n) for n in bank.LESS_NOUNS)
            + tuple(morph.y_adjective(n) for n in bank.Y_NOUNS)
        )
    )
    manner = tuple(
        dict.fromkeys(
            tuple(morph.adverbify(a) for a in _MANNER_STEMS)
            + tuple(morph.adverbify(morph.ful_adjective(n)) for n in bank.FUL_NOUNS)
            + tuple(morph.adverbify(morph.less_adjective(n)) for n in _MANNER_LESS_STEMS)
        )
    )
    return Lexicon(
        themes=themes,
        trans=tuple(trans),
        intrans=tuple(intrans),
        ditrans=ditrans,
        by_base=by_base,
        adjectives=adjectives,
        manner=manner,
    )


# ---------------------------------------------------------------------------
# sampling helpers


@lru_cache(maxsize=128)
def _zipf_cdf(n: int) -> np.ndarray:
    weights = 1.0 / np.arange(1, n + 1) ** 0.8
    return np.cumsum(weights / weights.sum())


def _pick(rng, pool):
    """Zipf-weighted draw; earlier pool entries are the common words."""
    cdf = _zipf_cdf(len(pool))
    idx = int(np.searchsorted(cdf, rng.random(), side="right"))
    return pool[min(idx, len(pool) - 1)]


def _uniform(rng, pool):
    return pool[int(rng.integers(len(pool)))]


def _article(word: str) -> str:
    if word in _AN_EXCEPTIONS:
        return "an"
    if word.startswith(_A_EXCEPTIONS):
        return "a"
    return "an" if word[0] in "aeiou" else "a"


def _fix_articles(tokens):
    """Turn ``a`` into ``an`` where the next word starts with a vowel sound."""
    for i, word in enumerate(tokens[:-1]):
        if word == "a":
            tokens[i] = _article(tokens[i + 1])
    return tokens


def _be(agr: str, past: bool) -> str:
    return _BE[agr][1 if past else 0]


def _have(agr: str, past: bool) -> str:
    if past:
        return "had"
    return "has" if agr == "3sg" else "have"


def _do(agr: str, past: bool) -> str:
    if past:
        return "did"
    return "does" if agr == "3sg" else "do"


def _finite(entry: VerbEntry, agr: str, past: bool) -> str:
    if past:
        return entry.past
    return entry.third if agr == "3sg" else entry.base


# ---------------------------------------------------------------------------
# phrase builders


def _noun_stem(rng, lex, theme):
    if rng.random() < 0.30:
        theme = _uniform(rng, tuple(lex.themes))
    return _pick(rng, lex.themes[theme])


def _possessor(rng, lex, theme):
    owner = _noun_stem(rng, lex, theme)
    if owner not in bank.MASS_NOUNS and rng.random() < 0.15:
        owner = morph.pluralize(owner)
    return ["the", morph.possessive(owner)]


def _np(rng, lex, theme, number=None, nested=True):
    """Noun phrase tokens plus its agreement class."""
    stem = _noun_stem(rng, lex, theme)
    if stem in bank.MASS_NOUNS:
        tokens = []
        r = rng.random()
        if r < 0.15:
            tokens.append(_uniform(rng, bank.POSSESSIVE_DETERMINERS))
        elif r < 0.40:
            pass  # bare mass noun
        else:
            tokens.append(_pick(rng, _MASS_DETS))
        if rng.random() < 0.22:
            tokens.append(_pick(rng, lex.adjectives))
        tokens.append(stem)
        return tokens, "3sg"

    if number is None:
        number = "sg" if rng.random() < 0.62 else "pl"
    tokens = []
    r = rng.random()
    if number == "sg":
        if r < 0.16:
            tokens.append(_uniform(rng, bank.POSSESSIVE_DETERMINERS))
        elif r < 0.22 and nested:
            tokens += _possessor(rng, lex, theme)
        elif r < 0.26:
            tokens += ["the", _uniform(rng, _ORDINALS)]
        else:
            tokens.append(_pick(rng, _SG_DETS))
    else:
        if r < 0.13:
            tokens.append(_uniform(rng, bank.POSSESSIVE_DETERMINERS))
        elif r < 0.18 and nested:
            tokens += _possessor(rng, lex, theme)
        elif r < 0.28:
            tokens.append(_uniform(rng, _CARDINALS))
        elif r < 0.31:
            tokens += ["a", _uniform(rng, _BIG_CARDINALS)]
        elif r < 0.44:
            pass  # bare plural
        else:
            tokens.append(_pick(rng, _PL_DETS))
    if rng.random() < 0.30:
        tokens.append(_pick(rng, lex.adjectives))
        if rng.random() < 0.05:
            tokens.append(_pick(rng, lex.adjectives))
    tokens.append(stem if number == "sg" else morph.pluralize(stem))
    if nested and number == "sg" and rng.random() < 0.04:
        inner, _ = _np(rng, lex, theme, nested=False)
        tokens += ["of"] + inner
    return tokens, ("3sg" if number == "sg" else "pl")


def _object(rng, lex, theme):
    if rng.random() < 0.10:
        return [_uniform(rng, bank.PRONOUNS_OBJECT)]
    tokens, _ = _np(rng, lex, theme)
    return tokens


def _pp(rng, lex, theme, preps=_VERB_PREPS):
    tokens, _ = _np(rng, lex, theme)
    return [_pick(rng, preps)] + tokens


def _subject(rng, lex, theme):
    """Returns (tokens, agreement, pronoun-or-None)."""
    r = rng.random()
    if r < 0.40:
        pron = _uniform(rng, _PRONOUN_SUBJECTS)
        return [pron], _PRONOUN_AGR[pron], pron
    if r < 0.48:
        return [_uniform(rng, _INDEFINITES)], "3sg", None
    tokens, agr = _np(rng, lex, theme)
    return tokens, agr, None


# ---------------------------------------------------------------------------
# clause templates


def _clause_trans(rng, lex, theme):
    subj, agr, _ = _subject(rng, lex, theme)
    entry = _pick(rng, lex.trans)
    words = list(subj)
    if rng.random() < 0.10:
        words += [_pick(rng, bank.MODALS), entry.base]
    else:
        if rng.random() < 0.12:
            words.append(_uniform(rng, _FREQ))
        words.append(_finite(entry, agr, rng.random() < 0.5))
    if entry.base in _INFINITIVE_TAKERS and rng.random() < 0.30:
        inner = _pick(rng, lex.intrans if rng.random() < 0.5 else lex.trans)
        words += ["to", inner.base]
        if inner.takes_object:
            words += _object(rng, lex, theme)
    else:
        words += _object(rng, lex, theme)
        if rng.random() < 0.22:
            words += _pp(rng, lex, theme)
    if rng.random() < 0.10:
        words.append(_pick(rng, lex.manner))
    return words


def _clause_intrans(rng, lex, theme):
    subj, agr, _ = _subject(rng, lex, theme)
    entry = _pick(rng, lex.intrans)
    words = list(subj)
    if rng.random() < 0.08:
        words += [_pick(rng, bank.MODALS), entry.base]
    else:
        if rng.random() < 0.12:
            words.append(_uniform(rng, _FREQ))
        words.append(_finite(entry, agr, rng.random() < 0.5))
    if entry.base in _SPEECH_STEMS and rng.random() < 0.35:
        obj, _ = _np(rng, lex, theme)
        words += ["about"] + obj
    elif entry.base in _PARTICLE_STEMS and rng.random() < 0.22:
        words.append(_uniform(rng, _PARTICLES))
    elif rng.random() < 0.40:
        words += _pp(rng, lex, theme)
    r = rng.random()
    if r < 0.15:
        words.append(_pick(rng, lex.manner))
    elif r < 0.27:
        words.append(_uniform(rng, _FINAL))
    elif r < 0.34 and entry.base in _MOTION_STEMS:
        words.append(_uniform(rng, _PLACE_FINAL))
    return words


def _clause_cop_adj(rng, lex, theme):
    subj, agr, _ = _subject(rng, lex, theme)
    words = list(subj) + [_be(agr, rng.random() < 0.45)]
    if rng.random() < 0.06:
        words.append("not")
    degree = rng.random() < 0.18
    if degree:
        words.append(_uniform(rng, _DEGREE))
    words.append(_pick(rng, lex.adjectives))
    if rng.random() < 0.10:
        words += ["and", _pick(rng, lex.adjectives)]
    elif not degree and rng.random() < 0.05:
        words.append("enough")
    return words


def _clause_cop_np(rng, lex, theme):
    subj, agr, _ = _subject(rng, lex, theme)
    past = rng.random() < 0.45
    r = rng.random()
    if r < 0.18:
        np_tokens, np_agr = _np(rng, lex, theme)
        return np_tokens + [_be(np_agr, past), _uniform(rng, _POSS_PRONOUNS)]
    words = list(subj) + [_be(agr, past)]
    if r < 0.26 and agr in ("1sg", "2", "3sg"):
        adj = _pick(rng, lex.adjectives)
        stem = _noun_stem(rng, lex, theme)
        words += ["such", "a", adj, stem]
        return words
    number = "pl" if agr == "pl" else "sg"
    np_tokens, _ = _np(rng, lex, theme, number=number)
    return words + np_tokens


def _clause_cop_pp(rng, lex, theme):
    np_tokens, agr = _np(rng, lex, theme)
    words = np_tokens + [_be(agr, rng.random() < 0.45)]
    words += _pp(rng, lex, theme, preps=_PLACE_PREPS)
    return words


def _clause_prog(rng, lex, theme):
    subj, agr, _ = _subject(rng, lex, theme)
    entry = _pick(rng, lex.trans if rng.random() < 0.5 else lex.intrans)
    words = list(subj) + [_be(agr, rng.random() < 0.4)]
    if rng.random() < 0.05:
        words.append("not")
    words.append(entry.ger)
    if entry.takes_object:
        words += _object(rng, lex, theme)
    if rng.random() < 0.25:
        words += _pp(rng, lex, theme)
    return words


def _clause_perf(rng, lex, theme):
    subj, agr, _ = _subject(rng, lex, theme)
    entry = _pick(rng, lex.trans if rng.random() < 0.6 else lex.intrans)
    words = list(subj) + [_have(agr, rng.random() < 0.3)]
    r = rng.random()
    if r < 0.15:
        words.append("already")
    elif r < 0.23:
        words.append("never")
    words.append(entry.part)
    if entry.takes_object:
        words += _object(rng, lex, theme)
    return words


def _clause_neg(rng, lex, theme):
    subj, agr, _ = _subject(rng, lex, theme)
    r = rng.random()
    words = list(subj)
    if r < 0.35:
        entry = _pick(rng, lex.trans if rng.random() < 0.6 else lex.intrans)
        past = rng.random() < 0.5
        if rng.random() < 0.75:
            aux = _NEG_DO["past"] if past else _NEG_DO["present"]["3sg" if agr == "3sg" else "other"]
            words.append(aux)
        else:
            words += [_do(agr, past), "not"]
        words.append(entry.base)
        if entry.takes_object:
            if rng.random() < 0.25:
                words.append(_uniform(rng, _NEG_OBJECTS))
            else:
                words += _object(rng, lex, theme)
    elif r < 0.60:
        past = rng.random() < 0.5
        if agr == "1sg" and not past:
            words += ["am", "not"]
        else:
            table = _NEG_BE["past" if past else "present"]
            words.append(table["3sg" if agr == "3sg" else "other"])
        words.append(_pick(rng, lex.adjectives))
    elif r < 0.82:
        entry = _pick(rng, lex.trans if rng.random() < 0.5 else lex.intrans)
        words += [_uniform(rng, _NEG_MODALS), entry.base]
        if entry.takes_object:
            words += _object(rng, lex, theme)
        elif entry.base in _MOTION_STEMS and rng.random() < 0.3:
            words.append("anywhere")
    else:
        entry = _pick(rng, lex.trans if rng.random() < 0.6 else lex.intrans)
        past = rng.random() < 0.3
        aux = _NEG_HAVE["past"] if past else _NEG_HAVE["present"]["3sg" if agr == "3sg" else "other"]
        words += [aux, entry.part]
        if entry.takes_object:
            words += _object(rng, lex, theme)
        if rng.random() < 0.3:
            words.append("yet")
    return words


def _clause_contr(rng, lex, theme):
    pron = _uniform(rng, _PRONOUN_SUBJECTS)
    agr = _PRONOUN_AGR[pron]
    r = rng.random()
    if r < 0.25:
        entry = _pick(rng, lex.trans if rng.random() < 0.5 else lex.intrans)
        words = [_BE_CONTR[pron], entry.ger]
        if entry.takes_object:
            words += _object(rng, lex, theme)
        return words
    if r < 0.45:
        words = [_BE_CONTR[pron]]
        if rng.random() < 0.2:
            words.append(_uniform(rng, _DEGREE))
        words.append(_pick(rng, lex.adjectives))
        return words
    if r < 0.62:
        entry = _pick(rng, lex.trans)
        words = [_HAVE_CONTR[pron]]
        if rng.random() < 0.2:
            words.append("already")
        words += [entry.part] + _object(rng, lex, theme)
        return words
    if r < 0.78:
        entry = _pick(rng, lex.trans if rng.random() < 0.5 else lex.intrans)
        head = [_WILL_CONTR[pron]] if pron != "it" else ["it", "will"]
        words = head + [entry.base]
        if entry.takes_object:
            words += _object(rng, lex, theme)
        elif rng.random() < 0.5:
            words += _pp(rng, lex, theme)
        return words
    if r < 0.90:
        head = [_WOULD_CONTR[pron]] if pron != "it" else ["it", "would"]
        verb = lex.by_base[_uniform(rng, _WOULD_LIKE)]
        words = head + [verb.base]
        if rng.random() < 0.5:
            inner = _pick(rng, lex.intrans if rng.random() < 0.5 else lex.trans)
            words += ["to", inner.base]
            if inner.takes_object:
                words += _object(rng, lex, theme)
        else:
            words += _object(rng, lex, theme)
        return words
    head = _uniform(rng, ("that's", "here's"))
    np_tokens, _ = _np(rng, lex, theme, number="sg")
    return [head] + np_tokens


def _clause_there(rng, lex, theme):
    number = "sg" if rng.random() < 0.6 else "pl"
    past = rng.random() < 0.4
    stem = _noun_stem(rng, lex, theme)
    tokens = []
    if stem in bank.MASS_NOUNS:
        number = "sg"
        tokens.append(_uniform(rng, ("some", "no")))
    elif number == "sg":
        tokens.append(_uniform(rng, ("a", "another", "no", "one")))
    else:
        r = rng.random()
        if r < 0.4:
            tokens.append(_uniform(rng, ("some", "many", "few", "several", "no")))
        else:
            tokens.append(_uniform(rng, _CARDINALS))
    if rng.random() < 0.25:
        tokens.append(_pick(rng, lex.adjectives))
    tokens.append(stem if number == "sg" else morph.pluralize(stem))
    if number == "sg" and not past and rng.random() < 0.4:
        head = ["there's"]
    else:
        head = ["there", _BE["3sg" if number == "sg" else "pl"][1 if past else 0]]
    words = head + tokens
    if rng.random() < 0.55:
        words += _pp(rng, lex, theme, preps=_PLACE_PREPS)
    return words


def _clause_imp(rng, lex, theme):
    lets = rng.random() < 0.22
    words = ["let's"] if lets else []
    if not lets and rng.random() < 0.25:
        words.append("please")
    if rng.random() < 0.6:
        entry = lex.by_base[_uniform(rng, _IMP_TRANS)]
        words += [entry.base] + _object(rng, lex, theme)
        if rng.random() < 0.2:
            words += _pp(rng, lex, theme)
    else:
        entry = lex.by_base[_uniform(rng, _IMP_INTRANS)]
        words.append(entry.base)
        r = rng.random()
        if r < 0.35 and entry.base in _PARTICLE_STEMS:
            words.append(_uniform(rng, _PARTICLES))
        elif r < 0.70:
            words += _pp(rng, lex, theme)
        else:
            words.append(_uniform(rng, _FINAL))
    return words


def _clause_quest(rng, lex, theme):
    r = rng.random()
    if r < 0.14:  # where is the key
        np_tokens, agr = _np(rng, lex, theme)
        return ["where", _be(agr, rng.random() < 0.4)] + np_tokens
    if r < 0.24:  # when / why does the train arrive
        wh = _uniform(rng, ("when", "why"))
        np_tokens, agr = _np(rng, lex, theme)
        entry = _pick(rng, lex.intrans)
        return [wh, _do(agr, rng.random() < 0.4)] + np_tokens + [entry.base]
    if r < 0.34:  # how does she know the answer
        pron = _uniform(rng, _PRONOUN_SUBJECTS)
        entry = lex.by_base[_uniform(rng, _WH_HOW)]
        return ["how", _do(_PRONOUN_AGR[pron], rng.random() < 0.4), pron, entry.base] + _object(rng, lex, theme)
    if r < 0.46:  # what is in the box / what's in the box
        head = ["what's"] if rng.random() < 0.4 else ["what", "is"]
        return head + _pp(rng, lex, theme, preps=_PLACE_PREPS)
    if r < 0.56:  # what did you see
        pron = _uniform(rng, _PRONOUN_SUBJECTS)
        entry = lex.by_base[_uniform(rng, _WH_SEE)]
        return ["what", _do(_PRONOUN_AGR[pron], True), pron, entry.base]
    if r < 0.64:  # who broke the window
        entry = lex.by_base[_uniform(rng, _WH_WHO)]
        return ["who", entry.past] + _object(rng, lex, theme)
    if r < 0.70:  # who's at the door
        head = ["who's"] if rng.random() < 0.5 else ["who", "is"]
        return head + _pp(rng, lex, theme, preps=_PLACE_PREPS)
    if r < 0.78:  # which book do you want
        pron = _uniform(rng, _PRONOUN_SUBJECTS)
        stem = _noun_stem(rng, lex, theme)
        verb = lex.by_base[_uniform(rng, ("want", "like", "need"))]
        return ["which", stem, _do(_PRONOUN_AGR[pron], False), pron, verb.base]
    if r < 0.85:  # whose coat is this
        stem = _noun_stem(rng, lex, theme)
        return ["whose", stem, "is", _uniform(rng, ("this", "that"))]
    if r < 0.93:  # did the dog eat the bone
        np_tokens, agr = _np(rng, lex, theme)
        entry = _pick(rng, lex.trans)
        return [_do(agr, rng.random() < 0.6)] + np_tokens + [entry.base] + _object(rng, lex, theme)
    # can you bring the box / shall we dance
    pron = _uniform(rng, _PRONOUN_SUBJECTS)
    modal = _uniform(rng, ("can", "could", "may", "will", "would", "shall"))
    entry = _pick(rng, lex.trans if rng.random() < 0.6 else lex.intrans)
    words = [modal, pron, entry.base]
    if entry.takes_object:
        words += _object(rng, lex, theme)
    return words


def _clause_comp(rng, lex, theme):
    r = rng.random()
    if r < 0.45:
        np_tokens, agr = _np(rng, lex, theme)
        other, _ = _np(rng, lex, theme)
        adj = _pick(rng, _GRADABLE)
        return np_tokens + [_be(agr, rng.random() < 0.4), morph.comparative(adj), "than"] + other
    if r < 0.75:
        subj, agr, _ = _subject(rng, lex, theme)
        adj = _pick(rng, _GRADABLE)
        stem = _noun_stem(rng, lex, theme)
        noun = stem if agr != "pl" else (stem if stem in bank.MASS_NOUNS else morph.pluralize(stem))
        words = list(subj) + [_be(agr, rng.random() < 0.4), "the", morph.superlative(adj), noun]
        if rng.random() < 0.4:
            words += _pp(rng, lex, theme, preps=("in", "on", "at"))
        return words
    np_tokens, agr = _np(rng, lex, theme)
    other, _ = _np(rng, lex, theme)
    adj = _pick(rng, _GRADABLE)
    return np_tokens + [_be(agr, rng.random() < 0.4), "as", adj, "as"] + other


def _clause_refl(rng, lex, theme):
    pron = _uniform(rng, _PRONOUN_SUBJECTS)
    entry = lex.by_base[_uniform(rng, _REFLEXIVE_STEMS)]
    return [pron, entry.past, _REFLEXIVE[pron]]


def _clause_ditrans(rng, lex, theme):
    subj, agr, _ = _subject(rng, lex, theme)
    entry = _pick(rng, lex.ditrans)
    words = list(subj) + [_finite(entry, agr, rng.random() < 0.7)]
    if rng.random() < 0.6:
        words.append(_uniform(rng, ("me", "him", "her", "us", "them")))
    else:
        io_tokens, _ = _np(rng, lex, "people", number="sg")
        words += io_tokens
    do_tokens, _ = _np(rng, lex, theme)
    return words + do_tokens


def _clause_whether(rng, lex, theme):
    subj, _, _ = _subject(rng, lex, theme)
    inner = _clause_cop_adj(rng, lex, theme) if rng.random() < 0.6 else _clause_intrans(rng, lex, theme)
    return list(subj) + ["asked", "whether"] + inner


def _clause_compound(rng, lex, theme):
    simple = (_clause_trans, _clause_intrans, _clause_cop_adj, _clause_cop_pp, _clause_prog, _clause_there)
    first = _uniform(rng, simple)(rng, lex, theme)
    second = _uniform(rng, simple)(rng, lex, theme)
    if rng.random() < 0.35:
        return [_uniform(rng, _SUBORD)] + first + second
    return first + [_uniform(rng, _COORD)] + second


_TEMPLATES = (
    (_clause_trans, 18.0),
    (_clause_intrans, 14.0),
    (_clause_cop_adj, 8.0),
    (_clause_cop_np, 4.0),
    (_clause_cop_pp, 4.0),
    (_clause_prog, 6.0),
    (_clause_perf, 5.0),
    (_clause_neg, 6.0),
    (_clause_contr, 5.0),
    (_clause_there, 4.0),
    (_clause_imp, 4.0),
    (_clause_quest, 5.0),
    (_clause_comp, 4.0),
    (_clause_refl, 1.5),
    (_clause_ditrans, 4.0),
    (_clause_whether, 1.0),
    (_clause_compound, 6.0),
)
_TEMPLATE_CDF = np.cumsum([w for _, w in _TEMPLATES])
_TEMPLATE_CDF /= _TEMPLATE_CDF[-1]
_UNDECORATED = {_clause_imp, _clause_quest}


def _sentence(rng, lex, theme):
    idx = int(np.searchsorted(_TEMPLATE_CDF, rng.random(), side="right"))
    builder = _TEMPLATES[min(idx, len(_TEMPLATES) - 1)][0]
    words = builder(rng, lex, theme)
    if builder not in _UNDECORATED:
        if rng.random() < 0.05:
            words = [_uniform(rng, _FRONTED)] + words
        if rng.random() < 0.06:
            words = words + list(_uniform(rng, _TIME_CHUNKS))
    return _fix_articles(words)


# ---------------------------------------------------------------------------
# public API


def generate_corpus(n_sentences, seed=0, topics=None):
    """Sample ``n_sentences`` sentences; each is a lowercase space-joined line.

    ``topics`` restricts the noun themes (default: all of them); unknown
    names raise ValueError.
    """
    lex = _lexicon()
    if topics is None:
        themes = tuple(lex.themes)
    else:
        themes = tuple(topics)
        unknown = [t for t in themes if t not in lex.themes]
        if unknown:
            raise ValueError(f"unknown topics: {', '.join(sorted(unknown))}")
    rng = np.random.default_rng(seed)
    return tuple(" ".join(_sentence(rng, lex, _uniform(rng, themes))) for _ in range(n_sentences))


def topics() -> tuple:
    """The noun themes the generator understands."""
    return tuple(_lexicon().themes)


@lru_cache(maxsize=4)
def desk_corpus(n_sentences: int = 12000, seed: int = 101) -> tuple:
    """The default training corpus for desk-scale experiments."""
    return generate_corpus(n_sentences, seed=seed)


def desk_phrases(n_phrases: int = 50, seed: int = 202, min_words: int = 3, max_words: int = 7) -> tuple:
    """Distinct evaluation phrases whose words all occur in ``desk_corpus``."""
    vocab = {word for line in desk_corpus() for word in line.split()}
    lex = _lexicon()
    rng = np.random.default_rng(seed)
    themes = tuple(lex.themes)
    out = []
    seen = set()
    attempts = 0
    while len(out) < n_phrases:
        attempts += 1
        if attempts > 400 * n_phrases:
            raise RuntimeError("phrase sampling failed to converge")
        words = _sentence(rng, lex, _uniform(rng, themes))
        if not min_words <= len(words) <= max_words:
            continue
        line = " ".join(words)
        if line in seen or any(word not in vocab for word in words):
            continue
        seen.add(line)
        out.append(line)
    return tuple(out)


def vocabulary() -> tuple:
    """Every surface form the generator can emit, sorted."""
    lex = _lexicon()
    words = set()
    for stems in lex.themes.values():
        for stem in stems:
            words.add(stem)
            words.add(morph.possessive(stem))
            if stem not in bank.MASS_NOUNS:
                plural = morph.pluralize(stem)
                words.add(plural)
                words.add(morph.possessive(plural))
    for entry in lex.trans + lex.intrans:
        words.update((entry.base, entry.third, entry.past, entry.part, entry.ger))
    words.update(lex.adjectives)
    for adj in _GRADABLE:
        words.add(morph.comparative(adj))
        words.add(morph.superlative(adj))
    words.update(lex.manner)
    words.update(_DEGREE + _FREQ + _FINAL + _PLACE_FINAL + _FRONTED + _PARTICLES)
    for chunk in _TIME_CHUNKS:
        words.update(chunk)
    words.update(("not", "yet", "enough", "anywhere", "there", "please", "an", "to", "of", "about", "such", "than", "whether", "as"))
    words.update(_SG_DETS + _PL_DETS + _MASS_DETS + _CARDINALS + _BIG_CARDINALS + _ORDINALS)
    words.update(_PRONOUN_SUBJECTS + bank.PRONOUNS_OBJECT + bank.POSSESSIVE_DETERMINERS)
    words.update(_INDEFINITES + _NEG_OBJECTS + _POSS_PRONOUNS)
    words.update(_REFLEXIVE.values())
    words.update(_VERB_PREPS + _PLACE_PREPS)
    words.update(_COORD + _SUBORD)
    words.update(bank.MODALS)
    words.update(("what", "who", "which", "where", "when", "why", "how", "whose"))
    words.update(("am", "is", "are", "was", "were", "has", "have", "had", "do", "does", "did", "asked"))
    words.update(_BE_CONTR.values())
    words.update(_HAVE_CONTR.values())
    words.update(_WILL_CONTR.values())
    words.update(_WOULD_CONTR.values())
    words.update(("don't", "doesn't", "didn't", "isn't", "aren't", "wasn't", "weren't", "hasn't", "haven't", "hadn't"))
    words.update(_NEG_MODALS)
    words.update(("there's", "that's", "here's", "what's", "who's", "let's"))
    return tuple(sorted(words))
