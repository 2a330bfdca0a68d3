"""Interaction session state machine.

Classified taps become discrete events (finger taps, thumb and palm
gestures); events drive a word-at-a-time entry loop: pending taps are
decoded into a suggestion list, the right thumb commits, the left thumb
cycles, the left palm deletes, and the right palm accepts single
characters for words outside the vocabulary.  ``apply`` is a pure
function from (state, event) to (state, render) so sessions replay
deterministically from an event log.
"""

import json
from dataclasses import dataclass, field, replace

import numpy as np

from .decoder import DecoderConfig, SuggestionList, decode, decode_single_char
from .domain import FingerClass, Hand, Rejected, TapObservation

EVENT_KINDS = ("finger_tap", "space", "cycle", "delete_word", "accept_char", "rejected")

_HAND_CODES = {Hand.LEFT: "L", Hand.RIGHT: "R"}
_HANDS_BY_CODE = {code: hand for hand, code in _HAND_CODES.items()}


class SessionError(ValueError):
    pass


@dataclass(frozen=True)
class SessionEvent:
    """One unit of classified input.

    kind is one of EVENT_KINDS; finger_tap events must carry the full
    TapObservation (the decoder consumes the distribution), gesture events
    keep their observation for the log when one exists.
    """

    kind: str
    observation: object = None

    def __post_init__(self):
        if self.kind not in EVENT_KINDS:
            raise SessionError(f"unknown event kind {self.kind!r}")
        if self.kind == "finger_tap" and not isinstance(self.observation, TapObservation):
            raise SessionError("finger_tap events need a TapObservation")


def classify_event(tap) -> SessionEvent:
    """Route one classifier output to its session event.

    Thumbs and palms act deterministically on the argmax class; typing
    fingers keep the full distribution for the decoder; rejected taps pass
    through as silence.
    """
    if isinstance(tap, Rejected):
        return SessionEvent("rejected", tap)
    if not isinstance(tap, TapObservation):
        raise SessionError(f"cannot classify {type(tap).__name__}")
    top = tap.top_class
    if top is FingerClass.THUMB:
        return SessionEvent("space" if tap.hand is Hand.RIGHT else "cycle", tap)
    if top is FingerClass.PALM:
        return SessionEvent("delete_word" if tap.hand is Hand.LEFT else "accept_char", tap)
    return SessionEvent("finger_tap", tap)


@dataclass(frozen=True)
class SessionContext:
    """Decoder stack shared by every event of one session."""

    kfmap: object
    char_lm: object
    word_lm: object
    config: DecoderConfig = field(default_factory=DecoderConfig)


@dataclass(frozen=True)
class SessionState:
    committed: tuple = ()
    pending: tuple = ()
    suggestions: SuggestionList = field(default_factory=SuggestionList)
    cursor: int = 0
    mode: str = "normal"
    oov_prefix: str = ""
    last_committed_suggestions: SuggestionList = field(default_factory=SuggestionList)
    last_committed_cursor: int = 0
    just_committed: bool = False
    restore_armed: bool = False


@dataclass(frozen=True)
class RenderState:
    """What a client shows after one event.

    pending_mask renders unresolved taps as asterisks (prefixed by any
    accepted out-of-vocabulary characters); submitted carries the finished
    phrase on a double-space, stuck marks a commit attempt with nothing to
    commit.
    """

    committed_text: str
    pending_mask: str
    suggestions: SuggestionList
    cursor: int
    feedback: str
    stuck: bool = False
    submitted: str = ""


def initial_state() -> SessionState:
    return SessionState()


def _render(state: SessionState, feedback: str, stuck=False, submitted="") -> RenderState:
    return RenderState(
        committed_text=" ".join(state.committed),
        pending_mask=state.oov_prefix + "*" * len(state.pending),
        suggestions=state.suggestions,
        cursor=state.cursor,
        feedback=feedback,
        stuck=stuck,
        submitted=submitted,
    )


def _word_context(state: SessionState) -> tuple:
    return state.committed


def _char_suggestions(state: SessionState, ctx: SessionContext) -> SuggestionList:
    """Single-character candidates for the next unaccepted tap in oov mode."""
    ranked = decode_single_char(state.pending[0], tuple(state.oov_prefix), ctx.kfmap, ctx.char_lm, ctx.config)
    finite = tuple((char, lp) for char, lp in ranked if lp > float("-inf"))
    best = finite[0][0] if finite else ranked[0][0]
    return SuggestionList(entries=finite[: ctx.config.max_suggestions], raw_best=best)


def _accept_pending_chars(state: SessionState, ctx: SessionContext, first=None) -> str:
    """Accept every pending tap as a character.

    The first tap resolves to ``first`` when given (the candidate the cursor
    points at, so cycling actually changes what gets accepted); the rest are
    taken greedily top-ranked.
    """
    prefix = state.oov_prefix
    for i, obs in enumerate(state.pending):
        if i == 0 and first is not None:
            prefix += first
            continue
        ranked = decode_single_char(obs, tuple(prefix), ctx.kfmap, ctx.char_lm, ctx.config)
        prefix += ranked[0][0]
    return prefix


def _cursor_char(state: SessionState):
    """The character the cursor currently selects, in oov mode only."""
    if state.mode == "oov" and len(state.suggestions) > 0:
        return state.suggestions[state.cursor][0]
    return None


def _commit(state: SessionState, word: str, keep_suggestions: bool) -> SessionState:
    return replace(
        state,
        committed=state.committed + (word,),
        pending=(),
        suggestions=SuggestionList(),
        cursor=0,
        mode="normal",
        oov_prefix="",
        last_committed_suggestions=state.suggestions if keep_suggestions else SuggestionList(),
        last_committed_cursor=state.cursor if keep_suggestions else 0,
        just_committed=True,
        restore_armed=False,
    )


def apply(state: SessionState, event: SessionEvent, ctx: SessionContext):
    """Advance one session by one event; returns (new state, render)."""
    kind = event.kind

    if kind == "rejected":
        return state, _render(state, "none")

    if kind == "finger_tap":
        state = replace(
            state,
            pending=state.pending + (event.observation,),
            cursor=0,
            just_committed=False,
            restore_armed=False,
        )
        if state.mode == "oov":
            suggestions = _char_suggestions(state, ctx)
        else:
            suggestions = decode(
                state.pending, _word_context(state), ctx.kfmap, ctx.char_lm, ctx.word_lm, ctx.config
            )
        state = replace(state, suggestions=suggestions)
        return state, _render(state, "click")

    if kind == "space":
        if state.mode == "oov":
            word = _accept_pending_chars(state, ctx, first=_cursor_char(state))
            state = _commit(state, word, keep_suggestions=False)
            return state, _render(state, "click")
        if state.pending:
            if len(state.suggestions) == 0:
                # nothing in the vocabulary matched: keep the taps and let the
                # user delete or fall back to character-by-character entry
                return state, _render(state, "none", stuck=True)
            state = _commit(state, state.suggestions[state.cursor][0], keep_suggestions=True)
            return state, _render(state, "click")
        if state.just_committed:
            phrase = " ".join(state.committed)
            return initial_state(), _render(initial_state(), "click", submitted=phrase)
        if len(state.suggestions) > 0:
            # suggestions restored after a delete: space re-commits the pick
            state = _commit(state, state.suggestions[state.cursor][0], keep_suggestions=True)
            return state, _render(state, "click")
        return state, _render(state, "none")

    if kind == "cycle":
        if state.restore_armed and len(state.last_committed_suggestions) > 0:
            n = len(state.last_committed_suggestions)
            state = replace(
                state,
                suggestions=state.last_committed_suggestions,
                cursor=(state.last_committed_cursor + 1) % n,
                restore_armed=False,
                just_committed=False,
            )
            return state, _render(state, "click")
        if len(state.suggestions) == 0:
            # visible no-op, but any deliberate gesture ends the double-space
            # submit window (submit requires event adjacency with the commit)
            state = replace(state, just_committed=False)
            return state, _render(state, "none")
        state = replace(
            state,
            cursor=(state.cursor + 1) % len(state.suggestions),
            just_committed=False,
        )
        return state, _render(state, "click")

    if kind == "delete_word":
        if state.pending or state.oov_prefix:
            state = replace(
                state,
                pending=(),
                suggestions=SuggestionList(),
                cursor=0,
                mode="normal",
                oov_prefix="",
                just_committed=False,
            )
            return state, _render(state, "delete")
        if state.committed:
            state = replace(
                state,
                committed=state.committed[:-1],
                suggestions=SuggestionList(),
                cursor=0,
                just_committed=False,
                restore_armed=True,
            )
            return state, _render(state, "delete")
        return state, _render(state, "none")

    if kind == "accept_char":
        if not state.pending:
            return state, _render(state, "none")
        prefix = _accept_pending_chars(state, ctx, first=_cursor_char(state))
        state = replace(
            state,
            pending=(),
            suggestions=SuggestionList(),
            cursor=0,
            mode="oov",
            oov_prefix=prefix,
            just_committed=False,
            restore_armed=False,
        )
        return state, _render(state, "click")

    raise SessionError(f"unhandled event kind {kind!r}")


def replay(events, ctx: SessionContext):
    """Apply an event sequence from the empty state; returns the final state
    and every intermediate render (one per event)."""
    state = initial_state()
    renders = []
    for event in events:
        state, render = apply(state, event, ctx)
        renders.append(render)
    return state, renders


def event_to_dict(event: SessionEvent) -> dict:
    payload = {"kind": event.kind}
    obs = event.observation
    if obs is not None:
        payload["observation"] = {
            "hand": _HAND_CODES[obs.hand],
            "probs": [float(p) for p in obs.probs],
            "timestamp": obs.timestamp,
        }
    return payload


def event_from_dict(payload: dict) -> SessionEvent:
    kind = payload.get("kind")
    obs = None
    if payload.get("observation") is not None:
        raw = payload["observation"]
        hand = _HANDS_BY_CODE.get(raw.get("hand"))
        if hand is None:
            raise SessionError(f"unknown hand code {raw.get('hand')!r}")
        probs = np.asarray(raw["probs"], dtype=np.float64)
        if kind == "rejected":
            obs = Rejected(hand=hand, probs=probs, timestamp=raw.get("timestamp", 0.0))
        else:
            obs = TapObservation(hand=hand, probs=probs, timestamp=raw.get("timestamp", 0))
    return SessionEvent(kind=kind, observation=obs)


def write_event_log(events, path) -> None:
    """One JSON object per line, full observation payloads included."""
    with open(path, "w", encoding="utf-8") as fh:
        for event in events:
            fh.write(json.dumps(event_to_dict(event)) + "\n")


def read_event_log(path):
    events = []
    with open(path, encoding="utf-8") as fh:
        for line_no, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                payload = json.loads(line)
            except json.JSONDecodeError as exc:
                raise SessionError(f"{path}:{line_no}: {exc}") from None
            events.append(event_from_dict(payload))
    return events
