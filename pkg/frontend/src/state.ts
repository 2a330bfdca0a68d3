/** Client-side state: a verbatim mirror of the last server render plus
 * purely local concerns (connection status, noise settings, toast, the key
 * highlighted on the hand diagram).  All transitions are pure functions —
 * the UI never edits text itself, so a state is fully determined by the
 * frame sequence and local inputs that produced it.
 */

import type { NoiseMode, RenderData, ServerMessage } from "./protocol.js";

export type ConnectionStatus = "connecting" | "open" | "closed";

export interface NoiseSettings {
  accuracy: number;
  mode: NoiseMode;
}

export interface UiState {
  connection: ConnectionStatus;
  render: RenderData;
  noise: NoiseSettings;
  toast: string | null;
  lastKey: string | null;
  submitted: string[];
}

export const EMPTY_RENDER: RenderData = {
  committed: "",
  pending: "",
  suggestions: [],
  cursor: 0,
  feedback: "none",
};

export const DEFAULT_NOISE: NoiseSettings = { accuracy: 1.0, mode: "calibrated" };

export function initialUiState(): UiState {
  return {
    connection: "connecting",
    render: EMPTY_RENDER,
    noise: DEFAULT_NOISE,
    toast: null,
    lastKey: null,
    submitted: [],
  };
}

/** A fresh socket means a fresh server session: the mirror resets to the
 * clean empty view.  Local noise settings survive (the app re-sends them). */
export function onConnection(state: UiState, status: ConnectionStatus): UiState {
  if (status === "open") {
    return { ...state, connection: status, render: EMPTY_RENDER, toast: null, lastKey: null };
  }
  return { ...state, connection: status };
}

export function onServerMessage(state: UiState, message: ServerMessage): UiState {
  if (message.type === "error") {
    return { ...state, toast: message.message };
  }
  const render: RenderData = {
    committed: message.committed,
    pending: message.pending,
    suggestions: message.suggestions.map((entry) => ({ ...entry })),
    cursor: message.cursor,
    feedback: message.feedback,
  };
  if (message.submitted !== undefined) render.submitted = message.submitted;
  const submitted = message.submitted
    ? [...state.submitted, message.submitted]
    : state.submitted;
  return { ...state, render, toast: null, submitted };
}

export function setNoise(state: UiState, noise: NoiseSettings): UiState {
  return { ...state, noise };
}

export function keyPressed(state: UiState, key: string): UiState {
  return { ...state, lastKey: key };
}
