"""English inflection rules for the corpus generator.

Regular suffix rules (plural, 3rd-person -s, -ed, -ing, -er/-est, -ly,
-ness) with the usual spelling adjustments: sibilant -es, consonant-y to
-ies, silent-e drop, and final-consonant doubling for short stems.
Irregular nouns and verbs are table-driven.
"""

_VOWELS = "aeiou"
_SIBILANT_ENDS = ("s", "x", "z", "ch", "sh")

IRREGULAR_PLURALS = {
    "man": "men",
    "woman": "women",
    "child": "children",
    "foot": "feet",
    "tooth": "teeth",
    "mouse": "mice",
    "person": "people",
    "leaf": "leaves",
    "knife": "knives",
    "wife": "wives",
    "life": "lives",
    "wolf": "wolves",
    "shelf": "shelves",
    "half": "halves",
    "loaf": "loaves",
    "calf": "calves",
    "scarf": "scarves",
    "bookshelf": "bookshelves",
    "sheep": "sheep",
    "fish": "fish",
    "deer": "deer",
    "ox": "oxen",
    "goose": "geese",
    "snowman": "snowmen",
    "postman": "postmen",
    "fireman": "firemen",
    "potato": "potatoes",
    "tomato": "tomatoes",
    "quiz": "quizzes",
    "stomach": "stomachs",
    "thesis": "theses",
}

# stem -> (3rd person, past, past participle, gerund); None fields fall back
# to the regular rule for that slot
IRREGULAR_VERBS = {
    "be": ("is", "was", "been", "being"),
    "have": ("has", "had", "had", "having"),
    "do": ("does", "did", "done", "doing"),
    "go": ("goes", "went", "gone", "going"),
    "say": ("says", "said", "said", "saying"),
    "make": (None, "made", "made", "making"),
    "take": (None, "took", "taken", "taking"),
    "come": (None, "came", "come", "coming"),
    "see": (None, "saw", "seen", "seeing"),
    "know": (None, "knew", "known", "knowing"),
    "get": (None, "got", "gotten", "getting"),
    "give": (None, "gave", "given", "giving"),
    "find": (None, "found", "found", "finding"),
    "think": (None, "thought", "thought", "thinking"),
    "tell": (None, "told", "told", "telling"),
    "become": (None, "became", "become", "becoming"),
    "leave": (None, "left", "left", "leaving"),
    "feel": (None, "felt", "felt", "feeling"),
    "put": (None, "put", "put", "putting"),
    "bring": (None, "brought", "brought", "bringing"),
    "begin": (None, "began", "begun", "beginning"),
    "keep": (None, "kept", "kept", "keeping"),
    "hold": (None, "held", "held", "holding"),
    "write": (None, "wrote", "written", "writing"),
    "stand": (None, "stood", "stood", "standing"),
    "hear": (None, "heard", "heard", "hearing"),
    "let": (None, "let", "let", "letting"),
    "mean": (None, "meant", "meant", "meaning"),
    "set": (None, "set", "set", "setting"),
    "meet": (None, "met", "met", "meeting"),
    "run": (None, "ran", "run", "running"),
    "pay": (None, "paid", "paid", "paying"),
    "sit": (None, "sat", "sat", "sitting"),
    "speak": (None, "spoke", "spoken", "speaking"),
    "lead": (None, "led", "led", "leading"),
    "grow": (None, "grew", "grown", "growing"),
    "lose": (None, "lost", "lost", "losing"),
    "fall": (None, "fell", "fallen", "falling"),
    "send": (None, "sent", "sent", "sending"),
    "build": (None, "built", "built", "building"),
    "understand": (None, "understood", "understood", "understanding"),
    "draw": (None, "drew", "drawn", "drawing"),
    "break": (None, "broke", "broken", "breaking"),
    "spend": (None, "spent", "spent", "spending"),
    "cut": (None, "cut", "cut", "cutting"),
    "rise": (None, "rose", "risen", "rising"),
    "drive": (None, "drove", "driven", "driving"),
    "buy": (None, "bought", "bought", "buying"),
    "wear": (None, "wore", "worn", "wearing"),
    "choose": (None, "chose", "chosen", "choosing"),
    "eat": (None, "ate", "eaten", "eating"),
    "sing": (None, "sang", "sung", "singing"),
    "drink": (None, "drank", "drunk", "drinking"),
    "swim": (None, "swam", "swum", "swimming"),
    "fly": (None, "flew", "flown", "flying"),
    "forget": (None, "forgot", "forgotten", "forgetting"),
    "ride": (None, "rode", "ridden", "riding"),
    "sleep": (None, "slept", "slept", "sleeping"),
    "teach": (None, "taught", "taught", "teaching"),
    "throw": (None, "threw", "thrown", "throwing"),
    "win": (None, "won", "won", "winning"),
    "catch": (None, "caught", "caught", "catching"),
    "fight": (None, "fought", "fought", "fighting"),
    "sell": (None, "sold", "sold", "selling"),
    "shake": (None, "shook", "shaken", "shaking"),
    "steal": (None, "stole", "stolen", "stealing"),
    "hide": (None, "hid", "hidden", "hiding"),
    "blow": (None, "blew", "blown", "blowing"),
    "freeze": (None, "froze", "frozen", "freezing"),
    "hang": (None, "hung", "hung", "hanging"),
    "feed": (None, "fed", "fed", "feeding"),
    "bend": (None, "bent", "bent", "bending"),
    "dig": (None, "dug", "dug", "digging"),
    "stick": (None, "stuck", "stuck", "sticking"),
    "sweep": (None, "swept", "swept", "sweeping"),
    "swing": (None, "swung", "swung", "swinging"),
    "tear": (None, "tore", "torn", "tearing"),
    "wake": (None, "woke", "woken", "waking"),
    "shine": (None, "shone", "shone", "shining"),
    "read": (None, "read", "read", "reading"),
    "wind": (None, "wound", "wound", "winding"),
    "slide": (None, "slid", "slid", "sliding"),
    "seek": (None, "sought", "sought", "seeking"),
    "lend": (None, "lent", "lent", "lending"),
    "weave": (None, "wove", "woven", "weaving"),
    "bite": (None, "bit", "bitten", "biting"),
    "grind": (None, "ground", "ground", "grinding"),
    "strike": (None, "struck", "struck", "striking"),
    "forgive": (None, "forgave", "forgiven", "forgiving"),
    "forbid": (None, "forbade", "forbidden", "forbidding"),
    "lay": (None, "laid", "laid", "laying"),
    "spin": (None, "spun", "spun", "spinning"),
    "split": (None, "split", "split", "splitting"),
    "fling": (None, "flung", "flung", "flinging"),
    "shut": (None, "shut", "shut", "shutting"),
    "sink": (None, "sank", "sunk", "sinking"),
    "weep": (None, "wept", "wept", "weeping"),
    "kneel": (None, "knelt", "knelt", "kneeling"),
    "ring": (None, "rang", "rung", "ringing"),
    "spread": (None, "spread", "spread", "spreading"),
    "shrink": (None, "shrank", "shrunk", "shrinking"),
    "hit": (None, "hit", "hit", "hitting"),
}

# final-stress polysyllables that double outside the short-stem rule
_DOUBLING_EXTRAS = frozenset(
    "admit permit submit commit omit regret prefer occur refer transfer control equip".split()
)


def _ends_sibilant(word: str) -> bool:
    return word.endswith(_SIBILANT_ENDS)


def _consonant_y(word: str) -> bool:
    return len(word) >= 2 and word[-1] == "y" and word[-2] not in _VOWELS


def _doubles_final(word: str) -> bool:
    """Consonant-vowel-consonant stems double the last letter (plus a short
    table of final-stress polysyllables like admit and prefer)."""
    if word in _DOUBLING_EXTRAS:
        return True
    if len(word) < 3 or len(word) > 5:
        return False
    a, b, c = word[-3], word[-2], word[-1]
    if c in _VOWELS or c in "wxy":
        return False
    if b not in _VOWELS or a in _VOWELS:
        return False
    return sum(ch in _VOWELS for ch in word) == 1


def pluralize(noun: str) -> str:
    if noun in IRREGULAR_PLURALS:
        return IRREGULAR_PLURALS[noun]
    if _ends_sibilant(noun):
        return noun + "es"
    if _consonant_y(noun):
        return noun[:-1] + "ies"
    return noun + "s"


def possessive(noun: str) -> str:
    if noun.endswith("s"):
        return noun + "'"
    return noun + "'s"


def third_person(verb: str) -> str:
    forms = IRREGULAR_VERBS.get(verb)
    if forms is not None and forms[0] is not None:
        return forms[0]
    if _ends_sibilant(verb) or verb.endswith("o"):
        return verb + "es"
    if _consonant_y(verb):
        return verb[:-1] + "ies"
    return verb + "s"


def past_tense(verb: str) -> str:
    forms = IRREGULAR_VERBS.get(verb)
    if forms is not None and forms[1] is not None:
        return forms[1]
    if verb.endswith("e"):
        return verb + "d"
    if _consonant_y(verb):
        return verb[:-1] + "ied"
    if _doubles_final(verb):
        return verb + verb[-1] + "ed"
    return verb + "ed"


def past_participle(verb: str) -> str:
    forms = IRREGULAR_VERBS.get(verb)
    if forms is not None and forms[2] is not None:
        return forms[2]
    return past_tense(verb)


def gerund(verb: str) -> str:
    forms = IRREGULAR_VERBS.get(verb)
    if forms is not None and forms[3] is not None:
        return forms[3]
    if verb.endswith("ie"):
        return verb[:-2] + "ying"
    if verb.endswith("e") and not verb.endswith("ee"):
        return verb[:-1] + "ing"
    if _doubles_final(verb):
        return verb + verb[-1] + "ing"
    return verb + "ing"


def verb_forms(verb: str) -> tuple:
    """All surface forms of one verb stem (deduplicated, order stable)."""
    forms = [verb, third_person(verb), past_tense(verb), past_participle(verb), gerund(verb)]
    seen = []
    for form in forms:
        if form not in seen:
            seen.append(form)
    return tuple(seen)


def noun_forms(noun: str) -> tuple:
    plural = pluralize(noun)
    forms = [noun, plural, possessive(noun), possessive(plural)]
    seen = []
    for form in forms:
        if form not in seen:
            seen.append(form)
    return tuple(seen)


def gradable(adjective: str) -> bool:
    """Short adjectives take -er/-est; longer ones use more/most (dropped)."""
    if len(adjective) > 6:
        return False
    return not adjective.endswith(("ous", "ful", "ive", "ing", "ed", "al"))


def comparative(adjective: str) -> str:
    if adjective.endswith("e"):
        return adjective + "r"
    if _consonant_y(adjective):
        return adjective[:-1] + "ier"
    if _doubles_final(adjective):
        return adjective + adjective[-1] + "er"
    return adjective + "er"


def superlative(adjective: str) -> str:
    if adjective.endswith("e"):
        return adjective + "st"
    if _consonant_y(adjective):
        return adjective[:-1] + "iest"
    if _doubles_final(adjective):
        return adjective + adjective[-1] + "est"
    return adjective + "est"


def adverbify(adjective: str) -> str:
    # shy -> shyly, but happy -> happily
    if _consonant_y(adjective) and sum(ch in _VOWELS for ch in adjective) > 0:
        return adjective[:-1] + "ily"
    if adjective.endswith("le") and len(adjective) > 3:
        return adjective[:-1] + "y"
    if adjective.endswith("ic"):
        return adjective + "ally"
    return adjective + "ly"


def nounify(adjective: str) -> str:
    """Quality noun from an adjective (-ness)."""
    # One-syllable stems keep the y: dryness, shyness (vs happiness).
    polysyllabic = sum(ch in _VOWELS for ch in adjective) > 0
    if _consonant_y(adjective) and polysyllabic:
        return adjective[:-1] + "iness"
    return adjective + "ness"


def agent_noun(verb: str) -> str:
    """-er doer noun (writer, runner, teacher)."""
    if verb.endswith("e"):
        return verb + "r"
    if _consonant_y(verb):
        return verb[:-1] + "ier"
    if _doubles_final(verb):
        return verb + verb[-1] + "er"
    return verb + "er"


def ful_adjective(noun: str) -> str:
    if _consonant_y(noun):
        return noun[:-1] + "iful"
    return noun + "ful"


def less_adjective(noun: str) -> str:
    if _consonant_y(noun):
        return noun[:-1] + "iless"
    return noun + "less"


def y_adjective(noun: str) -> str:
    """-y quality adjective (rainy, muddy, smoky)."""
    if noun.endswith("e"):
        return noun[:-1] + "y"
    if _doubles_final(noun):
        return noun + noun[-1] + "y"
    return noun + "y"
