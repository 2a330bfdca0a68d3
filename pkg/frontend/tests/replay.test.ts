/** Replay a recorded seeded session through the full client pipeline.
 *
 * The fixture is a transcript captured from a live server
 * (scripts/record_transcript.mjs against scripts/serve_for_checks.sh):
 * every client frame and the raw reply it produced.  Replaying it here
 * checks that the strict parser accepts real server output, that the view
 * renders every frame, and that the whole pipeline is deterministic — two
 * passes over the same transcript yield byte-identical HTML.  The matching
 * live check (same script, two fresh ?seed sessions, byte-equal raw frames)
 * is scripts/protocol_check.mjs.
 */

import { readFileSync } from "node:fs";
import { dirname, join } from "node:path";
import { fileURLToPath } from "node:url";

import { describe, expect, it } from "vitest";

import { parseServerMessage } from "../src/protocol.js";
import { initialUiState, onServerMessage, type UiState } from "../src/state.js";
import { renderHtml } from "../src/view.js";

interface Transcript {
  url: string;
  seed: number;
  exchanges: { send: string; recv: string }[];
}

const here = dirname(fileURLToPath(import.meta.url));
const transcript: Transcript = JSON.parse(
  readFileSync(join(here, "fixtures", "transcript.json"), "utf-8"),
);

function replay(): { states: UiState[]; html: string[] } {
  let state = initialUiState();
  const states: UiState[] = [];
  const html: string[] = [];
  for (const { recv } of transcript.exchanges) {
    state = onServerMessage(state, parseServerMessage(recv));
    states.push(state);
    html.push(renderHtml(state));
  }
  return { states, html };
}

describe("recorded session replay", () => {
  it("parses every recorded server frame strictly", () => {
    for (const { recv } of transcript.exchanges) {
      expect(() => parseServerMessage(recv)).not.toThrow();
    }
    expect(transcript.exchanges.length).toBeGreaterThan(5);
  });

  it("renders byte-identical HTML across two replays", () => {
    const first = replay();
    const second = replay();
    expect(first.html).toEqual(second.html);
    expect(first.html.join("")).toBe(second.html.join(""));
  });

  it("mirrors the server text verbatim at every step", () => {
    const { states, html } = replay();
    states.forEach((state, i) => {
      const frame = JSON.parse(transcript.exchanges[i].recv);
      if (frame.type === "render") {
        expect(state.render.committed).toBe(frame.committed);
        expect(state.render.pending).toBe(frame.pending);
        expect(html[i]).toContain(`<span class="pending">${frame.pending}</span>`);
      }
    });
  });

  it("shows the recorded error frame as a toast", () => {
    const { states, html } = replay();
    const errorIndex = transcript.exchanges.findIndex(
      ({ recv }) => JSON.parse(recv).type === "error",
    );
    expect(errorIndex).toBeGreaterThanOrEqual(0);
    expect(states[errorIndex].toast).not.toBeNull();
    expect(html[errorIndex]).toContain('class="toast"');
    // the next render clears it
    expect(states[errorIndex + 1].toast).toBeNull();
  });

  it("ends with the submitted phrase", () => {
    const { states } = replay();
    const last = states[states.length - 1];
    expect(last.submitted.length).toBeGreaterThan(0);
    expect(last.render.committed).toBe("");
  });
});
