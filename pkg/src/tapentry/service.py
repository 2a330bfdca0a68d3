"""WebSocket demo backend.

Loads the decoder stack once and shares it read-only across client
connections; each connection owns an isolated session plus a seeded
confusion classifier, so the browser sends *intended* keys and the
server injects finger noise before the decoder ever sees a tap.  Every
client message is answered by exactly one render or error frame, and a
fixed session seed replays a recorded message sequence to an identical
render sequence.
"""

import json
from dataclasses import dataclass, field

import numpy as np
from fastapi import FastAPI, WebSocket, WebSocketDisconnect

from .classifier.confusion import ConfusionClassifier, typing_confusion_matrix
from .decoder import DecoderConfig, SuggestionList
from .domain import read_key_finger_map
from .lm import read_arpa
from .session import (
    RenderState,
    SessionContext,
    SessionEvent,
    SessionState,
    apply,
    classify_event,
    initial_state,
)

#: wire message kind -> session event kind for the simple gestures
_GESTURE_EVENTS = {
    "space": "space",
    "cycle": "cycle",
    "delete": "delete_word",
    "accept_char": "accept_char",
}

_NOISE_MODES = ("calibrated", "overconfident")


class ServiceError(ValueError):
    """A client message the service rejects; session state is unchanged."""


@dataclass
class Connection:
    """One client's session, noise source, and shared decoder stack.

    The random stream is owned by the connection and threaded through every
    classifier it builds, so noise reconfiguration mid-session keeps replays
    deterministic: draws happen in message order regardless of settings.
    """

    context: SessionContext
    rng: np.random.Generator
    state: SessionState = field(default_factory=initial_state)
    classifier: ConfusionClassifier = None
    taps: int = 0

    def __post_init__(self):
        if self.classifier is None:
            self.classifier = ConfusionClassifier(typing_confusion_matrix(1.0), "calibrated", seed=self.rng)


def open_connection(context: SessionContext, seed=None) -> Connection:
    """Fresh session with identity noise; ``seed`` pins the noise stream."""
    return Connection(context=context, rng=np.random.default_rng(seed))


def _snapshot(state: SessionState, feedback: str = "none") -> RenderState:
    """Render the current state without applying an event (config replies)."""
    return RenderState(
        committed_text=" ".join(state.committed),
        pending_mask=state.oov_prefix + "*" * len(state.pending),
        suggestions=state.suggestions,
        cursor=state.cursor,
        feedback=feedback,
    )


def handle_tap_key(conn: Connection, key) -> RenderState:
    """Route one intended key through noise injection and the session."""
    if not isinstance(key, str) or key not in conn.context.kfmap:
        raise ServiceError(f"unmapped key {key!r}")
    hand, finger = conn.context.kfmap.hand_finger(key)
    observation = conn.classifier(finger, hand=hand, timestamp=conn.taps)
    conn.taps += 1
    conn.state, render = apply(conn.state, classify_event(observation), conn.context)
    return render


def _handle_submit(conn: Connection) -> RenderState:
    """Finish the phrase: commit any pending word, then reset the session.

    A pending word that matches nothing in the vocabulary leaves the session
    stuck exactly as a space gesture would; nothing is submitted then.
    """
    state = conn.state
    if state.pending or state.oov_prefix:
        state, render = apply(state, SessionEvent("space"), conn.context)
        conn.state = state
        if render.stuck:
            return render
    if not state.committed:
        return _snapshot(state)
    phrase = " ".join(state.committed)
    conn.state = initial_state()
    return RenderState(
        committed_text="",
        pending_mask="",
        suggestions=SuggestionList(),
        cursor=0,
        feedback="click",
        submitted=phrase,
    )


def _handle_config(conn: Connection, noise) -> RenderState:
    if not isinstance(noise, dict):
        raise ServiceError("config message needs a noise object")
    accuracy = noise.get("accuracy")
    mode = noise.get("mode")
    if not isinstance(accuracy, (int, float)) or not 0.5 < float(accuracy) <= 1.0:
        raise ServiceError("noise accuracy must be a number in (0.5, 1]")
    if mode not in _NOISE_MODES:
        raise ServiceError("noise mode must be 'calibrated' or 'overconfident'")
    conn.classifier = ConfusionClassifier(typing_confusion_matrix(float(accuracy)), mode, seed=conn.rng)
    return _snapshot(conn.state)


def handle_message(conn: Connection, payload) -> dict:
    """Dispatch one decoded client message; returns the render reply.

    Raises ServiceError for anything rejected, leaving the session where
    it was.
    """
    if not isinstance(payload, dict):
        raise ServiceError("message must be a JSON object")
    kind = payload.get("type")
    if kind == "tap_key":
        render = handle_tap_key(conn, payload.get("key"))
    elif kind in _GESTURE_EVENTS:
        conn.state, render = apply(conn.state, SessionEvent(_GESTURE_EVENTS[kind]), conn.context)
    elif kind == "submit_phrase":
        render = _handle_submit(conn)
    elif kind == "config":
        render = _handle_config(conn, payload.get("noise"))
    else:
        raise ServiceError(f"unknown message type {kind!r}")
    return wire_render(render)


def wire_render(render: RenderState) -> dict:
    message = {
        "type": "render",
        "committed": render.committed_text,
        "pending": render.pending_mask,
        "suggestions": [{"word": word, "score": float(score)} for word, score in render.suggestions.entries],
        "cursor": render.cursor,
        "feedback": "stuck" if render.stuck else render.feedback,
    }
    if render.submitted:
        message["submitted"] = render.submitted
    return message


def load_context(char_lm_path, word_lm_path, map_path, config: DecoderConfig = None) -> SessionContext:
    """Read the decoder stack off disk into a shared session context."""
    char_lm = read_arpa(char_lm_path)
    word_lm = read_arpa(word_lm_path)
    kfmap = read_key_finger_map(map_path)
    if config is None:
        config = DecoderConfig()
    return SessionContext(kfmap=kfmap, char_lm=char_lm, word_lm=word_lm, config=config)


def create_app(context: SessionContext) -> FastAPI:
    """Application factory; the context is shared read-only by every client."""
    if context.config.max_suggestions > 10:
        raise ServiceError("the wire protocol carries at most 10 suggestions")
    app = FastAPI()
    app.state.context = context

    @app.get("/healthz")
    def healthz():
        return {"status": "ok"}

    @app.websocket("/session")
    async def session_endpoint(websocket: WebSocket):
        await websocket.accept()
        seed = _parse_seed(websocket.query_params.get("seed"))
        conn = open_connection(context, seed)
        try:
            while True:
                raw = await websocket.receive_text()
                try:
                    payload = json.loads(raw)
                except json.JSONDecodeError:
                    await websocket.send_json({"type": "error", "message": "malformed JSON frame"})
                    continue
                try:
                    reply = handle_message(conn, payload)
                except ServiceError as exc:
                    reply = {"type": "error", "message": str(exc)}
                await websocket.send_json(reply)
        except WebSocketDisconnect:
            pass

    return app


def _parse_seed(raw):
    """Session seed from the query string; anything unusable means entropy."""
    if raw is None:
        return None
    try:
        return int(raw)
    except ValueError:
        return None


def serve(context: SessionContext, host: str, port: int) -> None:
    """Run the service until interrupted; raises if the port is unusable."""
    import uvicorn

    uvicorn.run(create_app(context), host=host, port=port, log_level="warning")
