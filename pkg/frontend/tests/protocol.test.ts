import { describe, expect, it } from "vitest";

import { parseServerMessage, ProtocolError } from "../src/protocol.js";

const RENDER = {
  type: "render",
  committed: "the cat",
  pending: "**",
  suggestions: [
    { word: "sat", score: -3.1 },
    { word: "sit", score: -4.0 },
  ],
  cursor: 1,
  feedback: "click",
};

describe("parseServerMessage", () => {
  it("accepts a well-formed render", () => {
    const message = parseServerMessage(JSON.stringify(RENDER));
    expect(message).toEqual(RENDER);
  });

  it("keeps the optional submitted field", () => {
    const raw = JSON.stringify({ ...RENDER, submitted: "the cat sat" });
    const message = parseServerMessage(raw);
    expect(message.type === "render" && message.submitted).toBe("the cat sat");
  });

  it("accepts error frames", () => {
    expect(parseServerMessage('{"type": "error", "message": "nope"}')).toEqual({
      type: "error",
      message: "nope",
    });
  });

  it("rejects malformed frames", () => {
    const bad = [
      "not json",
      "[1, 2]",
      '{"type": "warp"}',
      JSON.stringify({ ...RENDER, committed: 7 }),
      JSON.stringify({ ...RENDER, suggestions: [{ word: "a" }] }),
      JSON.stringify({ ...RENDER, cursor: 2 }),
      JSON.stringify({ ...RENDER, cursor: -1 }),
      JSON.stringify({ ...RENDER, cursor: 0.5 }),
      JSON.stringify({
        ...RENDER,
        suggestions: Array.from({ length: 11 }, (_, i) => ({ word: `w${i}`, score: -i })),
      }),
    ];
    for (const raw of bad) {
      expect(() => parseServerMessage(raw), raw).toThrow(ProtocolError);
    }
  });

  it("allows any cursor-0 with an empty suggestion list", () => {
    const raw = JSON.stringify({ ...RENDER, suggestions: [], cursor: 0 });
    const message = parseServerMessage(raw);
    expect(message.type === "render" && message.suggestions).toEqual([]);
  });
});
