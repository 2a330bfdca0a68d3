/** App shell: wires the socket, keyboard, and noise controls to the pure
 * state/view modules.  Renders at most once per animation frame. */

import { SessionClient } from "./client.js";
import { routeKey } from "./keyRouter.js";
import { parseServerMessage, ProtocolError } from "./protocol.js";
import type { NoiseMode } from "./protocol.js";
import {
  DEFAULT_NOISE,
  initialUiState,
  keyPressed,
  onConnection,
  onServerMessage,
  setNoise,
  type UiState,
} from "./state.js";
import { renderHtml } from "./view.js";

function serverUrl(): string {
  const override = new URLSearchParams(window.location.search).get("server");
  if (override) return override;
  const host = window.location.hostname || "127.0.0.1";
  return `ws://${host}:8765/session`;
}

function main(): void {
  const root = document.getElementById("app");
  const slider = document.getElementById("noise-accuracy") as HTMLInputElement | null;
  const modeButton = document.getElementById("noise-mode") as HTMLButtonElement | null;
  if (root === null || slider === null || modeButton === null) {
    throw new Error("app containers missing from the page");
  }

  let state: UiState = initialUiState();
  let frameQueued = false;
  const schedule = () => {
    if (frameQueued) return;
    frameQueued = true;
    requestAnimationFrame(() => {
      frameQueued = false;
      root.innerHTML = renderHtml(state);
      modeButton.textContent = state.noise.mode;
    });
  };
  const update = (next: UiState) => {
    state = next;
    schedule();
  };

  const client = new SessionClient(serverUrl(), {
    onStatus(status) {
      update(onConnection(state, status));
      if (status === "open" &&
          (state.noise.accuracy !== DEFAULT_NOISE.accuracy ||
           state.noise.mode !== DEFAULT_NOISE.mode)) {
        client.send({ type: "config", noise: { ...state.noise } });
      }
    },
    onFrame(raw) {
      try {
        update(onServerMessage(state, parseServerMessage(raw)));
      } catch (error) {
        if (error instanceof ProtocolError) {
          update({ ...state, toast: error.message });
        } else {
          throw error;
        }
      }
    },
  });
  client.connect();

  window.addEventListener("keydown", (event) => {
    const routed = routeKey(event);
    if (routed === null) return;
    if (routed.suppressDefault) event.preventDefault();
    if (client.send(routed.message)) {
      if (routed.message.type === "tap_key") {
        update(keyPressed(state, routed.message.key));
      }
    }
  });

  const pushNoise = () => {
    const accuracy = Number(slider.value);
    const mode = (modeButton.dataset.mode ?? "calibrated") as NoiseMode;
    update(setNoise(state, { accuracy, mode }));
    client.send({ type: "config", noise: { accuracy, mode } });
  };
  slider.addEventListener("change", pushNoise);
  modeButton.addEventListener("click", () => {
    modeButton.dataset.mode =
      modeButton.dataset.mode === "overconfident" ? "calibrated" : "overconfident";
    pushNoise();
  });
}

main();
