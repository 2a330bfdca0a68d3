/** JSON wire messages exchanged with the typing service over /session.
 *
 * The client sends intent (taps, gestures, noise settings); the server owns
 * all text state and answers every message with exactly one render or error
 * frame.  Parsing here is strict: anything that does not match the schema
 * throws, so protocol drift surfaces immediately instead of as a broken view.
 */

export type NoiseMode = "calibrated" | "overconfident";

export interface SuggestionEntry {
  word: string;
  score: number;
}

export interface RenderData {
  committed: string;
  pending: string;
  suggestions: SuggestionEntry[];
  cursor: number;
  feedback: string;
  submitted?: string;
}

export type ClientMessage =
  | { type: "tap_key"; key: string }
  | { type: "space" }
  | { type: "cycle" }
  | { type: "delete" }
  | { type: "accept_char" }
  | { type: "submit_phrase" }
  | { type: "config"; noise: { accuracy: number; mode: NoiseMode } };

export type ServerMessage =
  | ({ type: "render" } & RenderData)
  | { type: "error"; message: string };

export class ProtocolError extends Error {}

const MAX_SUGGESTIONS = 10;

function fail(reason: string): never {
  throw new ProtocolError(`bad server message: ${reason}`);
}

function asRecord(value: unknown, what: string): Record<string, unknown> {
  if (typeof value !== "object" || value === null || Array.isArray(value)) {
    fail(`${what} is not an object`);
  }
  return value as Record<string, unknown>;
}

function asString(value: unknown, what: string): string {
  if (typeof value !== "string") fail(`${what} is not a string`);
  return value;
}

function asNumber(value: unknown, what: string): number {
  if (typeof value !== "number" || !Number.isFinite(value)) {
    fail(`${what} is not a finite number`);
  }
  return value;
}

function parseSuggestions(value: unknown): SuggestionEntry[] {
  if (!Array.isArray(value)) fail("suggestions is not an array");
  if (value.length > MAX_SUGGESTIONS) fail("more than 10 suggestions");
  return value.map((entry, i) => {
    const record = asRecord(entry, `suggestion ${i}`);
    return {
      word: asString(record.word, `suggestion ${i} word`),
      score: asNumber(record.score, `suggestion ${i} score`),
    };
  });
}

export function parseServerMessage(raw: string): ServerMessage {
  let data: unknown;
  try {
    data = JSON.parse(raw);
  } catch {
    fail(`not JSON (${raw.slice(0, 60)})`);
  }
  const record = asRecord(data, "frame");
  const type = record.type;
  if (type === "error") {
    return { type: "error", message: asString(record.message, "message") };
  }
  if (type !== "render") fail(`unknown type ${String(type)}`);
  const suggestions = parseSuggestions(record.suggestions);
  const cursor = asNumber(record.cursor, "cursor");
  if (!Number.isInteger(cursor) || cursor < 0 ||
      (suggestions.length > 0 && cursor >= suggestions.length)) {
    fail(`cursor ${cursor} outside the suggestion list`);
  }
  const render: ServerMessage = {
    type: "render",
    committed: asString(record.committed, "committed"),
    pending: asString(record.pending, "pending"),
    suggestions,
    cursor,
    feedback: asString(record.feedback, "feedback"),
  };
  if (record.submitted !== undefined) {
    render.submitted = asString(record.submitted, "submitted");
  }
  return render;
}
